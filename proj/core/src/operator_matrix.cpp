#include <dfact/errors.hpp>
#include <dfact/operator_matrix.hpp>

#include <Eigen/SVD>

namespace dfact {

Index Basis::dim() const {
    switch (kind) {
        case BasisKind::spin: return 2;
        case BasisKind::boson:
        case BasisKind::grid: return modes;
        case BasisKind::spin_boson:
        case BasisKind::spin_grid: return 2 * modes;
    }
    return 0;
}

bool Basis::has_spin() const {
    return kind == BasisKind::spin || kind == BasisKind::spin_boson || kind == BasisKind::spin_grid;
}

bool Basis::has_modes() const { return kind != BasisKind::spin; }

Basis Basis::with_spin() const {
    switch (kind) {
        case BasisKind::boson: return spin_boson(modes);
        case BasisKind::grid: return spin_grid(modes);
        default: throw InvalidArgument("basis " + name() + " cannot be tensored with a spin");
    }
}

std::string Basis::name() const {
    switch (kind) {
        case BasisKind::spin: return "spin(2)";
        case BasisKind::boson: return "boson(" + std::to_string(modes) + ")";
        case BasisKind::grid: return "grid(" + std::to_string(modes) + ")";
        case BasisKind::spin_boson: return "spin(x)boson(" + std::to_string(modes) + ")";
        case BasisKind::spin_grid: return "spin(x)grid(" + std::to_string(modes) + ")";
    }
    return "?";
}

OperatorMatrix::OperatorMatrix(Basis basis, Matrix entries) : basis_(basis), m_(std::move(entries)) {
    if (m_.rows() != m_.cols()) throw InvalidArgument("OperatorMatrix: matrix is not square");
    if (m_.rows() != basis_.dim())
        throw InvalidArgument("OperatorMatrix: dimension " + std::to_string(m_.rows()) +
                              " does not match basis " + basis_.name());
}

OperatorMatrix OperatorMatrix::zero(Basis basis) {
    return {basis, Matrix::Zero(basis.dim(), basis.dim())};
}

OperatorMatrix OperatorMatrix::identity(Basis basis) {
    return {basis, Matrix::Identity(basis.dim(), basis.dim())};
}

OperatorMatrix OperatorMatrix::adjoint() const { return {basis_, m_.adjoint()}; }

bool OperatorMatrix::is_hermitian(double tol) const {
    const double scale = tol > 0.0 ? tol * std::max(1.0, m_.cwiseAbs().maxCoeff()) : 0.0;
    for (Index j = 0; j < m_.cols(); ++j)
        for (Index i = 0; i <= j; ++i)
            if (std::abs(m_(i, j) - std::conj(m_(j, i))) > scale) return false;
    return true;
}

OperatorMatrix OperatorMatrix::block(int s, int t) const {
    if (basis_.kind != BasisKind::spin_boson && basis_.kind != BasisKind::spin_grid)
        throw InvalidArgument("block(): operator basis " + basis_.name() + " is not spin-composite");
    const Index n = basis_.modes;
    const Basis mode{basis_.kind == BasisKind::spin_boson ? BasisKind::boson : BasisKind::grid, n};
    return {mode, m_.block(s * n, t * n, n, n)};
}

Vector OperatorMatrix::apply(const Vector& v) const {
    if (v.size() != dim()) throw InvalidArgument("apply(): vector length does not match operator");
    return m_ * v;
}

namespace {
void require_same_basis(const OperatorMatrix& a, const OperatorMatrix& b, const char* what) {
    if (!(a.basis() == b.basis()))
        throw InvalidArgument(std::string(what) + ": basis mismatch " + a.basis().name() + " vs " +
                              b.basis().name());
}
}  // namespace

OperatorMatrix& OperatorMatrix::operator+=(const OperatorMatrix& o) {
    require_same_basis(*this, o, "operator+");
    m_ += o.m_;
    return *this;
}

OperatorMatrix& OperatorMatrix::operator-=(const OperatorMatrix& o) {
    require_same_basis(*this, o, "operator-");
    m_ -= o.m_;
    return *this;
}

OperatorMatrix& OperatorMatrix::operator*=(Complex s) {
    m_ *= s;
    return *this;
}

OperatorMatrix operator*(const OperatorMatrix& a, const OperatorMatrix& b) {
    require_same_basis(a, b, "operator*");
    return {a.basis_, a.m_ * b.m_};
}

OperatorMatrix tensor(const OperatorMatrix& spin, const OperatorMatrix& mode) {
    if (spin.basis().kind != BasisKind::spin) throw InvalidArgument("tensor(): first factor must be a spin operator");
    const Basis composite = mode.basis().with_spin();
    const Index n = mode.dim();
    Matrix m = Matrix::Zero(2 * n, 2 * n);
    for (int s = 0; s < 2; ++s)
        for (int t = 0; t < 2; ++t)
            if (spin(s, t) != Complex(0.0)) m.block(s * n, t * n, n, n) = spin(s, t) * mode.matrix();
    return {composite, std::move(m)};
}

OperatorMatrix lift_mode(const OperatorMatrix& mode) {
    return tensor(OperatorMatrix::identity(Basis::spin()), mode);
}

OperatorMatrix lift_spin(const OperatorMatrix& spin, const Basis& mode_basis) {
    return tensor(spin, OperatorMatrix::identity(mode_basis));
}

OperatorMatrix from_blocks(const OperatorMatrix& upper_left, const OperatorMatrix& upper_right,
                           const OperatorMatrix& lower_left, const OperatorMatrix& lower_right) {
    const Basis mode = upper_left.basis();
    for (const auto* b : {&upper_right, &lower_left, &lower_right})
        if (!(b->basis() == mode)) throw InvalidArgument("from_blocks(): blocks must share a basis");
    const Index n = mode.dim();
    Matrix m(2 * n, 2 * n);
    m.block(0, 0, n, n) = upper_left.matrix();
    m.block(0, n, n, n) = upper_right.matrix();
    m.block(n, 0, n, n) = lower_left.matrix();
    m.block(n, n, n, n) = lower_right.matrix();
    return {mode.with_spin(), std::move(m)};
}

OperatorMatrix commutator(const OperatorMatrix& a, const OperatorMatrix& b) { return a * b - b * a; }

OperatorMatrix anticommutator(const OperatorMatrix& a, const OperatorMatrix& b) { return a * b + b * a; }

OperatorMatrix interior_projection(const OperatorMatrix& op, Index keep) {
    const Basis& b = op.basis();
    if (!b.has_modes()) return op;
    if (keep < 0 || keep > b.modes) throw InvalidArgument("interior_projection: keep out of range");
    if (!b.has_spin()) return {Basis{b.kind, keep}, op.matrix().topLeftCorner(keep, keep)};
    const Index n = b.modes;
    Matrix m(2 * keep, 2 * keep);
    for (int s = 0; s < 2; ++s)
        for (int t = 0; t < 2; ++t) m.block(s * keep, t * keep, keep, keep) = op.matrix().block(s * n, t * n, keep, keep);
    return {Basis{b.kind, keep}, std::move(m)};
}

double operator_norm(const Matrix& m) {
    if (m.size() == 0) return 0.0;
    const Eigen::BDCSVD<Matrix> svd(m);
    return svd.singularValues()(0);
}

double operator_norm(const OperatorMatrix& op) { return operator_norm(op.matrix()); }

}  // namespace dfact
