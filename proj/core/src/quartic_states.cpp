#include <dfact/errors.hpp>
#include <dfact/quartic_states.hpp>

#include <cmath>
#include <cstdio>
#include <numbers>
#include <ostream>

namespace dfact {

PositionGrid QuarticParams::default_grid(Index n_points) {
    return {1e-3, 14.0, n_points, DerivativeScheme::fd4};
}

void QuarticParams::validate() const {
    if (!(lambda > 0.0)) throw InvalidArgument("quartic: lambda must be positive");
    if (!(grid.q_min() > 0.0)) throw InvalidArgument("quartic: grid must lie on the half line q > 0");
}

namespace {

RealVector normalized(RealVector v, const PositionGrid& grid) {
    const double norm = grid.l2_norm(v, 0, grid.size());
    if (!(norm > 0.0) || !std::isfinite(norm)) throw NumericalError("quartic state has zero or non-finite norm");
    return v / norm;
}

RealVector vacuum_unnormalized(const QuarticParams& p) {
    const double s = std::sqrt(p.lambda);
    return p.grid.points().unaryExpr([s](double q) { return std::exp(-s * q * q * q / 3.0); });
}

}  // namespace

RealVector quartic_vacuum(const QuarticParams& params) {
    params.validate();
    return normalized(vacuum_unnormalized(params), params.grid);
}

double vacuum_annihilation_residual(const QuarticParams& params, double boundary_fraction) {
    params.validate();
    const RealVector v = quartic_vacuum(params);
    const double s = std::sqrt(params.lambda);
    const RealVector q2 = params.grid.points().cwiseProduct(params.grid.points());
    const RealVector am = (s * q2.cwiseProduct(v) + params.grid.derivative(v)) / std::numbers::sqrt2;
    const auto [lo, hi] = params.grid.interior(boundary_fraction);
    return params.grid.l2_norm(am, lo, hi) / params.grid.l2_norm(v, lo, hi);
}

std::array<double, 3> closed_form_arguments(double lambda, double q) {
    const double s = std::sqrt(lambda);
    return {2.0 * s * q * q, -2.0 * s * q, 2.0 * s / 3.0};
}

RealVector quartic_state_closed(int n, const QuarticParams& params) {
    params.validate();
    if (n < 0) throw InvalidArgument("quartic_state_closed: negative n");
    const RealVector vac = vacuum_unnormalized(params);
    const double pref = 1.0 / std::sqrt(std::ldexp(factorial(n).convert_to<double>(), n));
    RealVector out(params.grid.size());
    for (Index i = 0; i < out.size(); ++i) {
        const auto a = closed_form_arguments(params.lambda, params.grid[i]);
        out(i) = pref * hermite_eval(n, HermiteArgs<double>(3, {a[0], a[1], a[2]})) * vac(i);
    }
    return normalized(std::move(out), params.grid);
}

RealVector quartic_state_ladder(int n, const QuarticParams& params) {
    params.validate();
    if (n < 0) throw InvalidArgument("quartic_state_ladder: negative n");
    const double s = std::sqrt(params.lambda);
    const RealVector q2 = params.grid.points().cwiseProduct(params.grid.points());
    RealVector v = quartic_vacuum(params);
    for (int k = 1; k <= n; ++k) {
        v = (s * q2.cwiseProduct(v) - params.grid.derivative(v)) / (std::numbers::sqrt2 * std::sqrt(double(k)));
    }
    return normalized(std::move(v), params.grid);
}

RealVector quartic_state_from_expansion(int n, const QuarticParams& params) {
    params.validate();
    if (n < 0) throw InvalidArgument("quartic_state_from_expansion: negative n");
    // (A+)^n = 2^{-n/2} (-1)^n (d/dq - sqrt(l) q^2)^n, normal ordered with alpha = -sqrt(l);
    // d^k/dq^k of the vacuum exponential is derivative_exp_cubic(k, sqrt(l), q) times it.
    const double s = std::sqrt(params.lambda);
    const auto expansion = ordered_power(n, -s);
    const RealVector vac = vacuum_unnormalized(params);
    std::vector<double> derivs(static_cast<std::size_t>(n) + 1);
    RealVector out(params.grid.size());
    for (Index i = 0; i < out.size(); ++i) {
        const double q = params.grid[i];
        for (int k = 0; k <= n; ++k) derivs[static_cast<std::size_t>(k)] = derivative_exp_cubic(k, s, q);
        out(i) = expansion.apply_at<double>(q, derivs) * vac(i);
    }
    return normalized(std::move(out), params.grid);
}

double state_distance(const RealVector& a, const RealVector& b, const PositionGrid& grid, double boundary_fraction) {
    if (a.size() != grid.size() || b.size() != grid.size())
        throw InvalidArgument("state_distance: state length does not match grid");
    const auto [lo, hi] = grid.interior(boundary_fraction);
    RealVector x = a.segment(lo, hi - lo) / grid.l2_norm(a, lo, hi);
    RealVector y = b.segment(lo, hi - lo) / grid.l2_norm(b, lo, hi);
    // first interior local extremum of |x|
    Index e = 0;
    for (Index i = 1; i + 1 < x.size(); ++i) {
        if (std::abs(x(i)) >= std::abs(x(i - 1)) && std::abs(x(i)) >= std::abs(x(i + 1)) && std::abs(x(i)) > 0.0) {
            e = i;
            break;
        }
    }
    if (x(e) * y(e) < 0.0) y = -y;
    return std::sqrt(grid.spacing() * (x - y).squaredNorm());
}

void write_states_csv(std::ostream& os, const PositionGrid& grid, const std::vector<RealVector>& states) {
    os << "q";
    for (std::size_t k = 0; k < states.size(); ++k) os << ",phi_" << k;
    os << '\n';
    char buf[32];
    for (Index i = 0; i < grid.size(); ++i) {
        std::snprintf(buf, sizeof buf, "%.17g", grid[i]);
        os << buf;
        for (const auto& s : states) {
            std::snprintf(buf, sizeof buf, "%.17g", s(i));
            os << ',' << buf;
        }
        os << '\n';
    }
}

}  // namespace dfact
