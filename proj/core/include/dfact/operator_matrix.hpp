#pragma once

#include <Eigen/Dense>

#include <complex>
#include <string>

namespace dfact {

using Complex = std::complex<double>;
using Index = Eigen::Index;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

/// What the rows/columns of an operator enumerate.
///
/// Composite kinds (spin_boson, spin_grid) use index i = s*modes + n, with
/// s = 0 the upper block of the 2x2 block form.
enum class BasisKind { spin, boson, grid, spin_boson, spin_grid };

struct Basis {
    BasisKind kind = BasisKind::boson;
    Index modes = 0;  // boson truncation or grid size; ignored for spin

    static Basis spin() { return {BasisKind::spin, 0}; }
    static Basis boson(Index n) { return {BasisKind::boson, n}; }
    static Basis grid(Index n) { return {BasisKind::grid, n}; }
    static Basis spin_boson(Index n) { return {BasisKind::spin_boson, n}; }
    static Basis spin_grid(Index n) { return {BasisKind::spin_grid, n}; }

    [[nodiscard]] Index dim() const;
    [[nodiscard]] bool has_spin() const;
    [[nodiscard]] bool has_modes() const;
    /// The composite basis obtained by tensoring a mode basis with a spin.
    [[nodiscard]] Basis with_spin() const;
    [[nodiscard]] std::string name() const;

    friend bool operator==(const Basis&, const Basis&) = default;
};

/// Square complex matrix tagged with its basis. The carrier for every operator.
class OperatorMatrix {
public:
    OperatorMatrix() = default;
    OperatorMatrix(Basis basis, Matrix entries);

    static OperatorMatrix zero(Basis basis);
    static OperatorMatrix identity(Basis basis);

    [[nodiscard]] const Basis& basis() const { return basis_; }
    [[nodiscard]] Index dim() const { return m_.rows(); }
    [[nodiscard]] const Matrix& matrix() const { return m_; }
    [[nodiscard]] Complex operator()(Index i, Index j) const { return m_(i, j); }

    [[nodiscard]] OperatorMatrix adjoint() const;
    [[nodiscard]] bool is_hermitian(double tol = 0.0) const;

    /// Block (s, t) of a spin-composite operator, as a mode-basis operator.
    [[nodiscard]] OperatorMatrix block(int s, int t) const;

    [[nodiscard]] Vector apply(const Vector& v) const;

    OperatorMatrix& operator+=(const OperatorMatrix& o);
    OperatorMatrix& operator-=(const OperatorMatrix& o);
    OperatorMatrix& operator*=(Complex s);

    friend OperatorMatrix operator+(OperatorMatrix a, const OperatorMatrix& b) { return a += b; }
    friend OperatorMatrix operator-(OperatorMatrix a, const OperatorMatrix& b) { return a -= b; }
    friend OperatorMatrix operator*(const OperatorMatrix& a, const OperatorMatrix& b);
    friend OperatorMatrix operator*(Complex s, OperatorMatrix a) { return a *= s; }
    friend OperatorMatrix operator*(OperatorMatrix a, Complex s) { return a *= s; }
    friend OperatorMatrix operator-(OperatorMatrix a) { return a *= Complex(-1.0); }

private:
    Basis basis_;
    Matrix m_;
};

/// spin (x) mode: rows s*N + n. `spin` must be 2x2, `mode` a boson or grid operator.
OperatorMatrix tensor(const OperatorMatrix& spin, const OperatorMatrix& mode);

/// mode (x) I_2 and I_mode (x) spin, for the composite basis.
OperatorMatrix lift_mode(const OperatorMatrix& mode);
OperatorMatrix lift_spin(const OperatorMatrix& spin, const Basis& mode_basis);

/// Assemble [[upper_left, upper_right], [lower_left, lower_right]] from mode-basis blocks.
OperatorMatrix from_blocks(const OperatorMatrix& upper_left, const OperatorMatrix& upper_right,
                           const OperatorMatrix& lower_left, const OperatorMatrix& lower_right);

OperatorMatrix commutator(const OperatorMatrix& a, const OperatorMatrix& b);
OperatorMatrix anticommutator(const OperatorMatrix& a, const OperatorMatrix& b);

/// Restrict to the first `keep` modes (in every spin block for composite bases).
OperatorMatrix interior_projection(const OperatorMatrix& op, Index keep);

/// Largest singular value.
double operator_norm(const OperatorMatrix& op);
double operator_norm(const Matrix& m);

}  // namespace dfact
