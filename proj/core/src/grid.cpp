#include <dfact/errors.hpp>
#include <dfact/grid.hpp>

#include <cmath>
#include <numbers>

namespace dfact {

std::string to_string(DerivativeScheme s) { return s == DerivativeScheme::spectral ? "spectral" : "fd4"; }

DerivativeScheme scheme_from_string(const std::string& s) {
    if (s == "spectral") return DerivativeScheme::spectral;
    if (s == "fd4") return DerivativeScheme::fd4;
    throw InvalidArgument("unknown derivative scheme '" + s + "' (expected spectral or fd4)");
}

namespace {

bool is_power_of_two(Index n) { return n > 0 && (n & (n - 1)) == 0; }

Eigen::MatrixXd spectral_matrix(Index n, double length) {
    // Periodic sinc-interpolant derivative, even n:
    //   D_ij = (pi/L) (-1)^(i-j) cot((i-j) pi / n),  D_ii = 0.
    Eigen::MatrixXd d = Eigen::MatrixXd::Zero(n, n);
    const double scale = std::numbers::pi / length;
    for (Index i = 0; i < n; ++i) {
        for (Index j = i + 1; j < n; ++j) {
            const Index k = i - j;
            const double sign = (k % 2 == 0) ? 1.0 : -1.0;
            const double v = scale * sign / std::tan(static_cast<double>(k) * std::numbers::pi / static_cast<double>(n));
            d(i, j) = v;
            d(j, i) = -v;
        }
    }
    return d;
}

Eigen::MatrixXd fd4_matrix(Index n, double h) {
    Eigen::MatrixXd d = Eigen::MatrixXd::Zero(n, n);
    const double c1 = 8.0 / (12.0 * h);
    const double c2 = 1.0 / (12.0 * h);
    for (Index i = 0; i < n; ++i) {
        if (i + 1 < n) {
            d(i, i + 1) = c1;
            d(i + 1, i) = -c1;
        }
        if (i + 2 < n) {
            d(i, i + 2) = -c2;
            d(i + 2, i) = c2;
        }
    }
    return d;
}

template <class V>
V fd4_derivative(const V& f, double h) {
    const Index n = f.size();
    V d(n);
    for (Index i = 2; i + 2 < n; ++i) d(i) = (f(i - 2) - 8.0 * f(i - 1) + 8.0 * f(i + 1) - f(i + 2)) / (12.0 * h);
    // one-sided fourth-order closures
    d(0) = (-25.0 * f(0) + 48.0 * f(1) - 36.0 * f(2) + 16.0 * f(3) - 3.0 * f(4)) / (12.0 * h);
    d(1) = (-3.0 * f(0) - 10.0 * f(1) + 18.0 * f(2) - 6.0 * f(3) + f(4)) / (12.0 * h);
    d(n - 1) = (25.0 * f(n - 1) - 48.0 * f(n - 2) + 36.0 * f(n - 3) - 16.0 * f(n - 4) + 3.0 * f(n - 5)) / (12.0 * h);
    d(n - 2) = (3.0 * f(n - 1) + 10.0 * f(n - 2) - 18.0 * f(n - 3) + 6.0 * f(n - 4) - f(n - 5)) / (12.0 * h);
    return d;
}

}  // namespace

PositionGrid::PositionGrid(double q_min, double q_max, Index n_points, DerivativeScheme scheme)
    : q_min_(q_min), q_max_(q_max), h_(0.0), scheme_(scheme) {
    if (!(q_max > q_min) || !std::isfinite(q_min) || !std::isfinite(q_max))
        throw InvalidArgument("PositionGrid: need finite q_min < q_max");
    if (n_points < 64) throw InvalidArgument("PositionGrid: need at least 64 points");
    if (scheme == DerivativeScheme::spectral && !is_power_of_two(n_points))
        throw InvalidArgument("PositionGrid: spectral scheme needs a power-of-two point count");
    const double length = q_max - q_min;
    h_ = scheme == DerivativeScheme::spectral ? length / static_cast<double>(n_points)
                                              : length / static_cast<double>(n_points - 1);
    points_.resize(n_points);
    for (Index j = 0; j < n_points; ++j) points_(j) = q_min + static_cast<double>(j) * h_;
    d_ = scheme == DerivativeScheme::spectral ? spectral_matrix(n_points, length) : fd4_matrix(n_points, h_);
}

OperatorMatrix PositionGrid::q_operator() const { return multiply(points_); }

OperatorMatrix PositionGrid::p_operator(double hbar) const {
    return {Basis::grid(size()), d_.cast<Complex>() * Complex(0.0, -hbar)};
}

OperatorMatrix PositionGrid::multiply(const RealVector& f) const {
    if (f.size() != size()) throw InvalidArgument("multiply(): grid function has wrong length");
    return {Basis::grid(size()), f.cast<Complex>().asDiagonal().toDenseMatrix()};
}

RealVector PositionGrid::derivative(const RealVector& f) const {
    if (f.size() != size()) throw InvalidArgument("derivative(): grid function has wrong length");
    if (scheme_ == DerivativeScheme::spectral) return d_ * f;
    return fd4_derivative(f, h_);
}

Vector PositionGrid::derivative(const Vector& f) const {
    if (f.size() != size()) throw InvalidArgument("derivative(): grid function has wrong length");
    if (scheme_ == DerivativeScheme::spectral) return d_.cast<Complex>() * f;
    return fd4_derivative(f, h_);
}

double PositionGrid::l2_norm(const Vector& f, Index lo, Index hi) const {
    return std::sqrt(h_ * f.segment(lo, hi - lo).squaredNorm());
}

double PositionGrid::l2_norm(const RealVector& f, Index lo, Index hi) const {
    return std::sqrt(h_ * f.segment(lo, hi - lo).squaredNorm());
}

std::pair<Index, Index> PositionGrid::interior(double fraction) const {
    const auto band = static_cast<Index>(std::floor(fraction * static_cast<double>(size())));
    return {band, size() - band};
}

PositionGrid build_grid(double q_min, double q_max, Index n_points, DerivativeScheme scheme) {
    return {q_min, q_max, n_points, scheme};
}

std::vector<RealVector> smooth_test_functions(const PositionGrid& grid, int count) {
    const double length = grid.q_max() - grid.q_min();
    const double width = length / 30.0;
    std::vector<RealVector> out;
    for (int c = 0; c < count; ++c) {
        const double frac = count == 1 ? 0.5 : 0.3 + 0.4 * static_cast<double>(c) / (count - 1);
        const double centre = grid.q_min() + frac * length;
        RealVector v(grid.size());
        for (Index i = 0; i < grid.size(); ++i) {
            const double x = (grid[i] - centre) / width;
            v(i) = std::exp(-0.5 * x * x);
        }
        out.push_back(std::move(v));
    }
    return out;
}

}  // namespace dfact
