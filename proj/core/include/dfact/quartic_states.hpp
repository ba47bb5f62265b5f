#pragma once

// States of the quartic oscillator f(q) = lambda q^4 on the half line q > 0:
// vacuum exp(-sqrt(lambda) q^3 / 3) and phi_n = (A+)^n |0> / sqrt(n!),
// with A+ = (sqrt(lambda) q^2 - d/dq)/sqrt2. Built two ways (closed form via
// third-order Hermite polynomials, and direct ladder application) that check
// each other.

#include <dfact/grid.hpp>
#include <dfact/multi_hermite.hpp>

#include <array>
#include <iosfwd>
#include <string>
#include <vector>

namespace dfact {

struct QuarticParams {
    double lambda = 1.0;
    PositionGrid grid = default_grid();

    /// [1e-3, 14] with 2048 points, fourth-order differences.
    static PositionGrid default_grid(Index n_points = 2048);
    void validate() const;
};

/// Unit-L2 vacuum on the grid.
RealVector quartic_vacuum(const QuarticParams& params);

/// ||A- |0>|| / |||0>|| over interior points.
double vacuum_annihilation_residual(const QuarticParams& params, double boundary_fraction = 0.1);

/// Arguments (2 sqrt(l) q^2, -2 sqrt(l) q, 2 sqrt(l)/3) of H_n^(3) in the closed form.
std::array<double, 3> closed_form_arguments(double lambda, double q);

/// (1/sqrt(2^n n!)) H_n^(3)(closed_form_arguments) exp(-sqrt(l) q^3/3), normalized.
RealVector quartic_state_closed(int n, const QuarticParams& params);

/// (A+)^n |0> / sqrt(n!) by n grid applications of A+, normalized.
RealVector quartic_state_ladder(int n, const QuarticParams& params);

/// phi_n assembled from the normal-ordered expansion of (A+)^n and the
/// derivatives of the vacuum exponential, normalized.
RealVector quartic_state_from_expansion(int n, const QuarticParams& params);

/// L2 distance over interior points after renormalizing both states on the
/// interior and aligning their signs at the first interior extremum of `a`.
double state_distance(const RealVector& a, const RealVector& b, const PositionGrid& grid,
                      double boundary_fraction = 0.1);

/// CSV: header `q,phi_0,...,phi_k`, one row per grid point, 17 significant digits.
void write_states_csv(std::ostream& os, const PositionGrid& grid, const std::vector<RealVector>& states);

}  // namespace dfact
