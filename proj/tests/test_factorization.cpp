#include <dfact/errors.hpp>
#include <dfact/factorization.hpp>

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

namespace {

using namespace dfact;

double interior_rel_error(const OperatorMatrix& op, const RealVector& mult, const PositionGrid& g) {
    const auto [lo, hi] = g.interior();
    double worst = 0.0;
    for (const auto& v : smooth_test_functions(g)) {
        const Vector cv = v.cast<Complex>();
        const Vector diff = op.apply(cv) - (mult.cwiseProduct(v)).cast<Complex>();
        worst = std::max(worst, diff.segment(lo, hi - lo).cwiseAbs().maxCoeff() / v.cwiseAbs().maxCoeff());
    }
    return worst;
}

TEST(Ladders, HarmonicCaseMatchesPositionRepresentation) {
    const auto g = build_grid(1.0, 9.0, 256, DerivativeScheme::spectral);
    const auto l = general_ladders(PotentialSpec::parse("q^2"), g);
    const Complex i{0.0, 1.0};
    const auto expected_minus = (1.0 / std::sqrt(2.0)) * (g.q_operator() + i * g.p_operator());
    const auto expected_plus = (1.0 / std::sqrt(2.0)) * (g.q_operator() - i * g.p_operator());
    EXPECT_LT(operator_norm(l.a_minus - expected_minus), 1e-10);
    EXPECT_LT(operator_norm(l.a_plus - expected_plus), 1e-10);
    EXPECT_EQ(l.a_minus.adjoint().matrix(), l.a_plus.matrix());
    EXPECT_TRUE(l.upsilon.is_hermitian(0.0));
}

TEST(Ladders, QuarticCommutator) {
    const auto g = build_grid(0.5, 10.0, 1024, DerivativeScheme::spectral);
    const double lambda = 2.0;
    const auto l = general_ladders(PotentialSpec::parse("2*q^4"), g);
    const RealVector expected = 2.0 * std::sqrt(lambda) * g.points();
    EXPECT_LT(interior_rel_error(commutator(l.a_minus, l.a_plus), expected, g), 1e-8);
}

TEST(Ladders, UpsilonIsPauliCombination) {
    const auto g = build_grid(-2.0, 2.0, 128, DerivativeScheme::fd4);
    const auto l = general_ladders(PotentialSpec::parse("q^2+3"), g);
    RealVector root(g.size());
    for (Index i = 0; i < g.size(); ++i) root(i) = std::sqrt(g[i] * g[i] + 3.0);
    const OperatorMatrix s1(Basis::spin(), (Matrix(2, 2) << 0, 1, 1, 0).finished());
    const OperatorMatrix s2(Basis::spin(), (Matrix(2, 2) << 0, Complex(0, -1), Complex(0, 1), 0).finished());
    const auto expected = (1.0 / std::sqrt(2.0)) * (tensor(s1, g.multiply(root)) - tensor(s2, g.p_operator()));
    EXPECT_LT(operator_norm(l.upsilon - expected), 1e-12);
}

TEST(Ladders, RejectsNonPositiveAndKinkedPotentials) {
    const auto g = build_grid(-1.0, 1.0, 129, DerivativeScheme::fd4);  // contains q = 0
    EXPECT_THROW(general_ladders(PotentialSpec::parse("q^2"), g), InvalidArgument);
    EXPECT_THROW(general_ladders(PotentialSpec::parse("abs(q)+1"), g), InvalidArgument);
    EXPECT_NO_THROW(general_ladders(PotentialSpec::parse("q^2+1e-3"), g));
    EXPECT_THROW(general_ladders(PotentialSpec::parse("sqrt(q)"), build_grid(-1.0, 1.0, 64, DerivativeScheme::fd4)),
                 InvalidArgument);
}

TEST(Partner, HarmonicGapIsConstant) {
    const auto g = build_grid(1.0, 9.0, 256, DerivativeScheme::spectral);
    const auto d = partner_decomposition(PotentialSpec::parse("q^2"), g);
    EXPECT_LT((d.gap_term.array() - 0.5).abs().maxCoeff(), 1e-14);
}

TEST(Partner, QuarticGapAndPartners) {
    const auto g = build_grid(0.5, 4.0, 128, DerivativeScheme::fd4);
    const double lambda = 3.0, r = std::sqrt(lambda);
    const auto d = partner_decomposition(PotentialSpec::parse("3*q^4"), g);
    for (Index i = 0; i < g.size(); ++i) {
        const double q = g[i];
        EXPECT_NEAR(d.gap_term(i), r * q, 1e-12 * (1 + q));
        EXPECT_NEAR(d.f_plus(i), lambda * std::pow(q, 4) + r * q, 1e-11 * (1 + std::pow(q, 4)));
        EXPECT_NEAR(d.f_minus(i), lambda * std::pow(q, 4) - r * q, 1e-11 * (1 + std::pow(q, 4)));
    }
}

TEST(Partner, IdentitySpectral) {
    struct Case {
        const char* f;
        double lo, hi;
    };
    for (const Case c : {Case{"q^2", 1.0, 9.0}, Case{"q^2+1", -6.0, 6.0}, Case{"q^4", 0.5, 10.0}}) {
        const auto g = build_grid(c.lo, c.hi, 1024, DerivativeScheme::spectral);
        const auto d = partner_decomposition(PotentialSpec::parse(c.f), g);
        EXPECT_LT(d.identity_residual(g), 1e-8) << c.f;
    }
}

TEST(Partner, IdentityConvergesAtFourthOrderForFd4) {
    const auto spec = PotentialSpec::parse("q^2+1");
    double prev = 0.0;
    for (Index n : {256, 512, 1024}) {
        const auto g = build_grid(-6.0, 6.0, n, DerivativeScheme::fd4);
        const double r = partner_decomposition(spec, g).identity_residual(g);
        if (prev > 0.0) EXPECT_GT(prev / r, 10.0) << n;
        prev = r;
    }
}

TEST(Partner, SuperchargeStructure) {
    const auto g = build_grid(-3.0, 3.0, 128, DerivativeScheme::spectral);
    const auto d = partner_decomposition(PotentialSpec::parse("q^2+2"), g);
    const auto [vp, vm] = d.supercharges();
    EXPECT_EQ(operator_norm(vp * vp), 0.0);
    EXPECT_EQ(operator_norm(vm * vm), 0.0);
    EXPECT_LT(operator_norm(anticommutator(vp, vm) - d.upsilon * d.upsilon), 1e-12 * operator_norm(d.upsilon * d.upsilon));
    EXPECT_EQ((vp + vm).matrix(), d.upsilon.matrix());
}

TEST(Riccati, Examples) {
    const auto g = build_grid(-3.0, 3.0, 256, DerivativeScheme::fd4);
    const RealVector zero = RealVector::Zero(g.size());
    const auto r0 = riccati_potentials(zero, g);
    EXPECT_EQ(r0.mu_minus.cwiseAbs().maxCoeff(), 0.0);
    EXPECT_EQ(r0.mu_plus.cwiseAbs().maxCoeff(), 0.0);

    const auto rc = riccati_potentials(RealVector::Constant(g.size(), 1.5), g);
    EXPECT_LT((rc.mu_minus.array() + 1.5 * 1.5 / 4).abs().maxCoeff(), 1e-12);
    EXPECT_LT((rc.mu_plus.array() + 1.5 * 1.5 / 4).abs().maxCoeff(), 1e-12);

    const RealVector phi = -2.0 * g.points();
    const auto r = riccati_potentials(phi, g);
    const RealVector x2 = g.points().array().square();
    EXPECT_LT((r.mu_minus - (1.0 - x2.array()).matrix()).cwiseAbs().maxCoeff(), 1e-10);
    EXPECT_LT((r.mu_plus - (-1.0 - x2.array()).matrix()).cwiseAbs().maxCoeff(), 1e-10);
}

TEST(Riccati, SumDifferenceAndSwap) {
    const auto g = build_grid(-2.0, 2.0, 128, DerivativeScheme::spectral);
    RealVector phi(g.size());
    for (Index i = 0; i < g.size(); ++i) phi(i) = std::sin(std::numbers::pi * g[i]) + 0.3 * std::cos(g[i] * std::numbers::pi / 2);
    const auto r = riccati_potentials(phi, g);
    EXPECT_LT((r.mu_minus + r.mu_plus + 0.5 * phi.cwiseAbs2()).cwiseAbs().maxCoeff(), 1e-12);
    EXPECT_LT((r.mu_plus - r.mu_minus - g.derivative(phi)).cwiseAbs().maxCoeff(), 1e-12);
    const auto swapped = riccati_potentials(-phi, g);
    EXPECT_EQ(swapped.mu_minus, r.mu_plus);
    EXPECT_EQ(swapped.mu_plus, r.mu_minus);
}

TEST(Liouville, ZeroPhiIsLinear) {
    const auto g = build_grid(-2.0, 3.0, 256, DerivativeScheme::fd4);
    const auto s = liouville_solve(RealVector::Zero(g.size()), g);
    EXPECT_LT((s.z - (g.points().array() + 2.0).matrix()).cwiseAbs().maxCoeff(), 1e-12);
    EXPECT_LT(s.residual, 1e-8);
}

TEST(Liouville, ConstantPhi) {
    const auto g = build_grid(-2.0, 2.0, 2048, DerivativeScheme::fd4);
    const auto s = liouville_solve(RealVector::Constant(g.size(), 0.8), g);
    EXPECT_LT(s.residual, 1e-6);
    EXPECT_LT((s.mu_minus.array() + 0.16).abs().maxCoeff(), 1e-12);
}

TEST(Liouville, LinearPhi) {
    const auto g = build_grid(-3.0, 3.0, 2048, DerivativeScheme::fd4);
    const auto s = liouville_solve(-2.0 * g.points(), g);
    // The reported residual uses a second-order z'' and is dominated by its h^2 z''''/12 term.
    EXPECT_LT(s.residual, 1e-4);
    // With a fourth-order z'' the quadrature accuracy of z itself shows.
    const auto [lo, hi] = g.interior();
    const double h = g.spacing();
    double worst = 0.0;
    for (Index i = lo; i < hi; ++i) {
        const double z2 =
            (-s.z(i - 2) + 16 * s.z(i - 1) - 30 * s.z(i) + 16 * s.z(i + 1) - s.z(i + 2)) / (12 * h * h);
        worst = std::max(worst, std::abs(z2 + (1 - g[i] * g[i]) * s.z(i)));
    }
    EXPECT_LT(worst, 1e-5);
}

TEST(Liouville, ResidualIsSecondOrder) {
    for (double c : {0.8, -2.0}) {
        std::vector<double> res;
        for (Index n : {512, 1024, 2048}) {
            const auto g = build_grid(-3.0, 3.0, n, DerivativeScheme::fd4);
            const RealVector phi = c == 0.8 ? RealVector::Constant(n, c) : RealVector(c * g.points());
            res.push_back(liouville_solve(phi, g).residual);
        }
        EXPECT_GT(res[0] / res[1], 3.0) << c;
        EXPECT_LT(res[0] / res[1], 5.0) << c;
        EXPECT_GT(res[1] / res[2], 3.0) << c;
        EXPECT_LT(res[1] / res[2], 5.0) << c;
    }
}

TEST(Liouville, OverflowRejected) {
    const auto g = build_grid(0.0, 40.0, 256, DerivativeScheme::fd4);
    EXPECT_THROW(liouville_solve(RealVector(g.points().array().square()), g), NumericalError);
}

TEST(Liouville, StandardFormReduction) {
    // y'' + a y' + b y = 0 with a = 2, b = 1 reduces to c = b - (a^2 + 2a')/4 = 0.
    const auto g = build_grid(0.0, 1.0, 64, DerivativeScheme::fd4);
    const auto c = detail::liouville_standard_form(RealVector::Constant(64, 2.0), RealVector::Constant(64, 1.0), g);
    EXPECT_LT(c.cwiseAbs().maxCoeff(), 1e-12);
}

}  // namespace
