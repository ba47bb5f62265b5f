#pragma once

#include <dfact/operator_matrix.hpp>

#include <string>
#include <utility>

namespace dfact {

enum class DerivativeScheme {
    spectral,  // Fourier, periodic; n must be a power of two
    fd4,       // fourth-order central differences
};

std::string to_string(DerivativeScheme s);
DerivativeScheme scheme_from_string(const std::string& s);

/// Uniform 1-D grid with a derivative scheme.
///
/// Spectral grids are periodic: q_j = q_min + j L/n, j < n, q_max excluded.
/// FD4 grids include both end points: q_j = q_min + j L/(n-1).
class PositionGrid {
public:
    PositionGrid(double q_min, double q_max, Index n_points, DerivativeScheme scheme);

    [[nodiscard]] double q_min() const { return q_min_; }
    [[nodiscard]] double q_max() const { return q_max_; }
    [[nodiscard]] Index size() const { return points_.size(); }
    [[nodiscard]] DerivativeScheme scheme() const { return scheme_; }
    [[nodiscard]] double spacing() const { return h_; }
    [[nodiscard]] const RealVector& points() const { return points_; }
    [[nodiscard]] double operator[](Index i) const { return points_(i); }

    /// Real antisymmetric first-derivative matrix D. p = -i hbar D is Hermitian
    /// exactly for both schemes; the FD4 stencil is truncated (zero outside the grid).
    [[nodiscard]] const Eigen::MatrixXd& derivative_matrix() const { return d_; }

    [[nodiscard]] OperatorMatrix q_operator() const;
    [[nodiscard]] OperatorMatrix p_operator(double hbar = 1.0) const;
    /// Multiplication by a grid function.
    [[nodiscard]] OperatorMatrix multiply(const RealVector& f) const;

    /// f' of a grid function. Spectral: D f. FD4: central stencil in the
    /// interior with fourth-order one-sided closures at the two ends.
    [[nodiscard]] RealVector derivative(const RealVector& f) const;
    [[nodiscard]] Vector derivative(const Vector& f) const;

    /// Rectangle-rule L2 norm, sqrt(h sum |f|^2), over [lo, hi).
    [[nodiscard]] double l2_norm(const Vector& f, Index lo, Index hi) const;
    [[nodiscard]] double l2_norm(const RealVector& f, Index lo, Index hi) const;

    /// Index range excluding `fraction` of the points at each end.
    [[nodiscard]] std::pair<Index, Index> interior(double fraction = 0.1) const;

private:
    double q_min_, q_max_, h_;
    DerivativeScheme scheme_;
    RealVector points_;
    Eigen::MatrixXd d_;
};

PositionGrid build_grid(double q_min, double q_max, Index n_points, DerivativeScheme scheme);

/// Gaussian bumps exp(-(q-c)^2 / (2 w^2)) with centres in the middle 40% of
/// the grid and width L/30; negligible (< 1e-17) at the ends, so they behave
/// as compactly supported smooth test functions for grid-operator identities.
std::vector<RealVector> smooth_test_functions(const PositionGrid& grid, int count = 3);

}  // namespace dfact
