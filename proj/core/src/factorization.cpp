#include <dfact/errors.hpp>
#include <dfact/factorization.hpp>

#include <cmath>
#include <numbers>
#include <sstream>

namespace dfact {

namespace {

std::string at_point(const PositionGrid& grid, Index i) {
    std::ostringstream os;
    os.precision(10);
    os << " at q = " << grid[i] << " (grid index " << i << ")";
    return os.str();
}

Vector lift(const RealVector& v) { return v.cast<Complex>(); }

}  // namespace

PotentialSamples sample_potential(const PotentialSpec& spec, const PositionGrid& grid) {
    const Index n = grid.size();
    PotentialSamples s{RealVector(n), RealVector(n), RealVector(n)};
    for (Index i = 0; i < n; ++i) {
        const Jet j = spec.f.eval(grid[i]);
        if (!std::isfinite(j.value) || !std::isfinite(j.d1) || !std::isfinite(j.d2))
            throw InvalidArgument("potential '" + spec.f.source() + "' is not finite" + at_point(grid, i));
        if (j.value < spec.positivity_floor)
            throw InvalidArgument("potential '" + spec.f.source() + "' falls below the positivity floor" +
                                  at_point(grid, i) + "; shrink the domain away from zeros of f");
        s.f(i) = j.value;
        s.df(i) = j.d1;
        s.d2f(i) = j.d2;
    }
    // f' must be the integral of f'': a jump between neighbours flags a kink.
    const double h = grid.spacing();
    const double scale = s.df.cwiseAbs().maxCoeff() + h * s.d2f.cwiseAbs().maxCoeff() + 1e-300;
    for (Index i = 0; i + 1 < n; ++i) {
        const double jump = s.df(i + 1) - s.df(i) - 0.5 * h * (s.d2f(i) + s.d2f(i + 1));
        if (std::abs(jump) > 1e-3 * scale)
            throw InvalidArgument("potential '" + spec.f.source() + "' is not continuously differentiable" +
                                  at_point(grid, i));
    }
    return s;
}

GeneralLadders general_ladders(const PotentialSpec& f, const PositionGrid& grid) {
    const PotentialSamples s = sample_potential(f, grid);
    const RealVector root = s.f.cwiseSqrt();
    const Index n = grid.size();
    // i p = D, so A- = (sqrt f + D)/sqrt2 and A+ = (sqrt f - D)/sqrt2, both real.
    Eigen::MatrixXd sq = root.asDiagonal().toDenseMatrix();
    const double r = 1.0 / std::numbers::sqrt2;
    const Basis b = Basis::grid(n);
    OperatorMatrix am(b, ((sq + grid.derivative_matrix()) * r).cast<Complex>());
    OperatorMatrix ap(b, ((sq - grid.derivative_matrix()) * r).cast<Complex>());
    const OperatorMatrix zero = OperatorMatrix::zero(b);
    OperatorMatrix ups = from_blocks(zero, am, ap, zero);
    return {std::move(am), std::move(ap), std::move(ups)};
}

std::pair<OperatorMatrix, OperatorMatrix> PartnerDecomposition::supercharges() const {
    const OperatorMatrix zero = OperatorMatrix::zero(upsilon.block(0, 1).basis());
    OperatorMatrix v_minus = from_blocks(zero, upsilon.block(0, 1), zero, zero);
    OperatorMatrix v_plus = from_blocks(zero, zero, upsilon.block(1, 0), zero);
    return {std::move(v_plus), std::move(v_minus)};
}

double PartnerDecomposition::identity_residual(const PositionGrid& grid, double boundary_fraction) const {
    const Index n = grid.size();
    const auto [lo, hi] = grid.interior(boundary_fraction);
    RealVector gap_s3(2 * n);
    gap_s3 << gap_term, -gap_term;
    double worst = 0.0;
    for (const auto& v : smooth_test_functions(grid)) {
        for (int slot = 0; slot < 2; ++slot) {
            Vector psi = Vector::Zero(2 * n);
            psi.segment(slot * n, n) = lift(v);
            const Vector r = h.apply(psi) - upsilon.apply(upsilon.apply(psi)) + gap_s3.cast<Complex>().cwiseProduct(psi);
            double m = 0.0;
            for (int s = 0; s < 2; ++s) m = std::max(m, r.segment(s * n + lo, hi - lo).cwiseAbs().maxCoeff());
            worst = std::max(worst, m / v.cwiseAbs().maxCoeff());
        }
    }
    return worst;
}

PartnerDecomposition partner_decomposition(const PotentialSpec& f, const PositionGrid& grid) {
    const PotentialSamples s = sample_potential(f, grid);
    GeneralLadders lad = general_ladders(f, grid);
    const Eigen::MatrixXd& d = grid.derivative_matrix();
    // p^2 = -D^2
    Eigen::MatrixXd h_mode = -0.5 * (d * d);
    h_mode.diagonal() += 0.5 * s.f;
    PartnerDecomposition out;
    out.h = lift_mode(OperatorMatrix(Basis::grid(grid.size()), h_mode.cast<Complex>()));
    out.upsilon = std::move(lad.upsilon);
    out.sqrt_f = s.f.cwiseSqrt();
    out.gap_term = 0.25 * s.df.cwiseQuotient(out.sqrt_f);
    out.f_plus = s.f + out.gap_term;
    out.f_minus = s.f - out.gap_term;
    return out;
}

RiccatiPair riccati_potentials(const RealVector& phi, const PositionGrid& grid) {
    const RealVector dphi = grid.derivative(phi);
    const RealVector sq = -0.25 * phi.cwiseProduct(phi);
    return {phi, sq - 0.5 * dphi, sq + 0.5 * dphi};
}

namespace detail {

RealVector liouville_standard_form(const RealVector& a, const RealVector& b, const PositionGrid& grid) {
    const RealVector da = grid.derivative(a);
    return b - 0.25 * (a.cwiseProduct(a) + 2.0 * da);
}

}  // namespace detail

namespace {

// Cumulative trapezoid from q_min with the Euler-Maclaurin end correction.
RealVector cumulative_integral(const RealVector& g, const RealVector& dg, double h) {
    RealVector out(g.size());
    out(0) = 0.0;
    double acc = 0.0;
    for (Index i = 1; i < g.size(); ++i) {
        acc += 0.5 * h * (g(i - 1) + g(i));
        out(i) = acc - h * h / 12.0 * (dg(i) - dg(0));
    }
    return out;
}

}  // namespace

LiouvilleSolution liouville_solve(const RealVector& phi, const PositionGrid& grid, double boundary_fraction) {
    if (phi.size() != grid.size()) throw InvalidArgument("liouville_solve: phi has wrong length");
    const double h = grid.spacing();
    const RealVector dphi = grid.derivative(phi);
    const RealVector big_phi = cumulative_integral(phi, dphi, h);
    const double peak = big_phi.cwiseAbs().maxCoeff();
    if (!std::isfinite(peak) || peak > 700.0)
        throw NumericalError("liouville_solve: |int phi| reaches " + std::to_string(peak) +
                             ", exponentials overflow; shrink the domain");
    const RealVector g = (-big_phi).array().exp();
    const RealVector dg = -phi.cwiseProduct(g);
    const RealVector inner = cumulative_integral(g, dg, h);
    LiouvilleSolution out;
    out.z = (0.5 * big_phi).array().exp().matrix().cwiseProduct(inner);
    // u'' + phi u' = 0 reduced to standard form.
    out.mu_minus = detail::liouville_standard_form(phi, RealVector::Zero(phi.size()), grid);
    auto [lo, hi] = grid.interior(boundary_fraction);
    lo = std::max<Index>(lo, 1);
    hi = std::min<Index>(hi, grid.size() - 1);
    double res = 0.0;
    for (Index i = lo; i < hi; ++i) {
        const double zpp = (out.z(i - 1) - 2.0 * out.z(i) + out.z(i + 1)) / (h * h);
        res = std::max(res, std::abs(zpp + out.mu_minus(i) * out.z(i)));
    }
    out.residual = res;
    return out;
}

}  // namespace dfact
