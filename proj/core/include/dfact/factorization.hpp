#pragma once

// Dirac factorization of H = (p^2 + f(q)) / 2 on a position grid:
// generalized ladder operators A+- = (sqrt f -+ i p)/sqrt2, the 2x2 operator
// Upsilon = [[0, A-], [A+, 0]], the gap term f'/(4 sqrt f) and the partner
// potentials f+-; plus the Riccati / Liouville construction of partner
// potentials mu+- = -phi^2/4 +- phi'/2.

#include <dfact/expression.hpp>
#include <dfact/grid.hpp>
#include <dfact/operator_matrix.hpp>

#include <utility>

namespace dfact {

struct PotentialSpec {
    Expression f;
    double positivity_floor = 1e-10;

    explicit PotentialSpec(Expression expr, double floor = 1e-10) : f(std::move(expr)), positivity_floor(floor) {}
    static PotentialSpec parse(std::string_view source, double floor = 1e-10) {
        return PotentialSpec(Expression::parse(source), floor);
    }
};

/// f, f', f'' sampled on a grid after validation.
struct PotentialSamples {
    RealVector f, df, d2f;
};

/// Samples f and checks f >= floor, finiteness and continuity of f' on the grid.
/// Throws InvalidArgument naming the offending grid point.
PotentialSamples sample_potential(const PotentialSpec& spec, const PositionGrid& grid);

struct GeneralLadders {
    OperatorMatrix a_minus, a_plus, upsilon;
};

GeneralLadders general_ladders(const PotentialSpec& f, const PositionGrid& grid);

struct PartnerDecomposition {
    OperatorMatrix h;        // (p^2 + f)/2 (x) I
    OperatorMatrix upsilon;  // (sqrt f sigma_1 - p sigma_2)/sqrt2
    RealVector gap_term;     // f' / (4 sqrt f)
    RealVector f_plus, f_minus;
    RealVector sqrt_f;

    /// Supercharges: upper-right block A- and lower-left block A+ of Upsilon.
    [[nodiscard]] std::pair<OperatorMatrix, OperatorMatrix> supercharges() const;

    /// max over test functions v (placed in either spin slot) of
    ///   || (H - (Upsilon^2 - gap sigma_3)) v ||_inf,interior / ||v||_inf.
    [[nodiscard]] double identity_residual(const PositionGrid& grid, double boundary_fraction = 0.1) const;
};

PartnerDecomposition partner_decomposition(const PotentialSpec& f, const PositionGrid& grid);

struct RiccatiPair {
    RealVector phi, mu_minus, mu_plus;
};

/// mu-+ = -phi^2/4 -+ phi'/2 with phi' from the grid scheme.
RiccatiPair riccati_potentials(const RealVector& phi, const PositionGrid& grid);

struct LiouvilleSolution {
    RealVector z;
    RealVector mu_minus;  // standard-form coefficient of the reduced equation
    double residual;      // || z'' + mu_- z ||_inf on interior points
};

/// z(x) = exp((1/2) int phi) * int exp(-int phi), integrals from q_min,
/// solving z'' + mu_- z = 0. Throws NumericalError if an exponent overflows.
LiouvilleSolution liouville_solve(const RealVector& phi, const PositionGrid& grid,
                                  double boundary_fraction = 0.1);

namespace detail {
/// Coefficient c(x) = b - (a^2 + 2a')/4 of v'' + c v = 0, the standard form of
/// y'' + a y' + b y = 0 under y = exp(-(1/2) int a) v.
RealVector liouville_standard_form(const RealVector& a, const RealVector& b, const PositionGrid& grid);
}  // namespace detail

}  // namespace dfact
