#include <dfact/errors.hpp>
#include <dfact/dynamics.hpp>

#include <gtest/gtest.h>

#include <Eigen/Eigenvalues>

#include <cmath>
#include <sstream>

namespace {

using namespace dfact;

const Complex I{0.0, 1.0};

Vector gaussian_state(const PositionGrid& g, double centre, double width, bool spin_up = true) {
    Vector psi = Vector::Zero(2 * g.size());
    const Index off = spin_up ? 0 : g.size();
    for (Index i = 0; i < g.size(); ++i) psi(off + i) = std::exp(-0.5 * std::pow((g[i] - centre) / width, 2));
    return psi.normalized();
}

TEST(Heisenberg, Examples) {
    const auto s = build_susy_hamiltonian(64);
    EXPECT_EQ(operator_norm(heisenberg_derivative(s.h, s.h)), 0.0);
    const auto s3 = lift_spin(pauli(3), Basis::boson(64));
    EXPECT_LT(operator_norm(heisenberg_derivative(s.h, s3)), 1e-12);
    EXPECT_LT(operator_norm(heisenberg_derivative(pauli(3), pauli(1)) + 2.0 * pauli(2)), 1e-15);
}

TEST(Heisenberg, Rejections) {
    EXPECT_THROW(heisenberg_derivative(pauli(3), build_sigma(4)), InvalidArgument);
    const OperatorMatrix nonherm(Basis::spin(), (Matrix(2, 2) << 0, 1, 0, 0).finished());
    EXPECT_THROW(heisenberg_derivative(nonherm, pauli(1)), InvalidArgument);
}

TEST(SigmaOscillation, InteriorResidual) {
    const double r64 = sigma_oscillation_check(FockSpec{64, 4});
    EXPECT_LT(r64, 1e-10);
    // Both sit at the rounding floor; a larger truncation only adds rounding.
    EXPECT_LT(sigma_oscillation_check(FockSpec{128, 4}), 1e-10);
}

TEST(SigmaOscillation, FirstDerivativeIsOffDiagonal) {
    const auto s = build_susy_hamiltonian(16);
    const auto d = heisenberg_derivative(s.h, build_sigma(16));
    EXPECT_EQ(operator_norm(d.block(0, 0)), 0.0);
    EXPECT_EQ(operator_norm(d.block(1, 1)), 0.0);
    EXPECT_GT(operator_norm(interior_projection(d, 12)), 1.0);
    // i[H, Sigma] = -i a- s+ + i a+ s-: opposite-sign blocks, Hermitian overall.
    const auto f = fock_operators(16);
    EXPECT_LT(operator_norm(interior_projection(d.block(0, 1) + I * f.a_minus, 12)), 1e-12);
    EXPECT_LT(operator_norm(interior_projection(d.block(1, 0) - I * f.a_plus, 12)), 1e-12);
    EXPECT_TRUE(d.is_hermitian(1e-12));
}

TEST(Propagator, ZeroTimeAndDiagonal) {
    const auto g = build_grid(0.5, 10.0, 64, DerivativeScheme::spectral);
    const auto jc = generalized_jc_hamiltonian(PotentialSpec::parse("q^2"), g);
    const Vector psi = gaussian_state(g, 4.0, 1.0);
    EXPECT_LT((exact_oracle(jc.h_jc, 0.0, psi) - psi).norm(), 1e-12);
    EXPECT_EQ((strang_step(jc.outer, jc.inner, 0.0, psi) - psi).norm(), 0.0);

    const SpectralPropagator diag(jc.inner);
    EXPECT_TRUE(diag.diagonal());
    const Vector out = diag.apply(0.7, psi);
    for (Index i = 0; i < psi.size(); ++i)
        EXPECT_LT(std::abs(out(i) - std::exp(-I * 0.7 * jc.inner(i, i)) * psi(i)), 1e-15);
}

TEST(Propagator, Unitary) {
    const auto g = build_grid(0.5, 10.0, 128, DerivativeScheme::spectral);
    const auto jc = generalized_jc_hamiltonian(PotentialSpec::parse("q^4"), g);
    const Vector psi = gaussian_state(g, 4.0, 1.0);
    EXPECT_NEAR(exact_oracle(jc.h_jc, 3.0, psi).norm(), 1.0, 1e-12);
    EXPECT_NEAR(strang_step(jc.outer, jc.inner, 0.1, psi).norm(), 1.0, 1e-12);
}

TEST(Propagator, RejectsNonHermitian) {
    const OperatorMatrix nonherm(Basis::spin(), (Matrix(2, 2) << 0, 1, 0, 0).finished());
    EXPECT_THROW(SpectralPropagator{nonherm}, InvalidArgument);
    EXPECT_THROW(strang_step(nonherm, pauli(1), 0.1, Vector::Ones(2)), InvalidArgument);
}

TEST(Strang, CommutingPartsAreExact) {
    const auto g = build_grid(0.5, 4.0, 64, DerivativeScheme::fd4);
    RealVector w(g.size());
    for (Index i = 0; i < g.size(); ++i) w(i) = std::sin(g[i]);
    const auto a = tensor(pauli(3), g.multiply(w));
    const auto b = tensor(pauli(3), g.multiply(w.cwiseAbs2()));
    const Vector psi = gaussian_state(g, 2.0, 0.5);
    EXPECT_LT((strang_step(a, b, 0.3, psi) - exact_oracle(a + b, 0.3, psi)).norm(), 1e-12);
}

double strang_error(const GeneralizedJc& jc, const Vector& psi0, double dt) {
    EvolutionPlan plan = EvolutionPlan::uniform(jc.outer, jc.inner, dt, 1.0);
    plan.keep_states = true;
    plan.record_every = 1 << 30;
    const Trajectory t = evolve(plan, psi0);
    return (t.states.back() - exact_oracle(jc.h_jc, 1.0, psi0)).norm();
}

TEST(Strang, SecondOrderGlobal) {
    const auto g = build_grid(0.5, 10.0, 256, DerivativeScheme::spectral);
    for (const char* f : {"q^2", "q^4"}) {
        const auto jc = generalized_jc_hamiltonian(PotentialSpec::parse(f), g);
        const Vector psi = gaussian_state(g, 4.0, 1.0);
        const double e1 = strang_error(jc, psi, 0.02), e2 = strang_error(jc, psi, 0.01);
        EXPECT_GT(e1 / e2, 3.5) << f;
        EXPECT_LT(e1 / e2, 4.5) << f;
    }
}

TEST(Evolve, ZeroSteps) {
    const auto g = build_grid(0.5, 10.0, 64, DerivativeScheme::spectral);
    const auto jc = generalized_jc_hamiltonian(PotentialSpec::parse("q^2"), g);
    const Vector psi = gaussian_state(g, 4.0, 1.0);
    const Trajectory t = evolve(EvolutionPlan::uniform(jc.outer, jc.inner, 0.1, 0.0), psi);
    ASSERT_EQ(t.times.size(), 1u);
    EXPECT_EQ(t.times[0], 0.0);
    EXPECT_EQ(t.states[0], psi);
    EXPECT_DOUBLE_EQ(t.sigma3[0], 1.0);
}

TEST(Evolve, ExactSchemeMatchesStrangWhenPartsCommute) {
    const auto g = build_grid(0.5, 4.0, 64, DerivativeScheme::fd4);
    RealVector w(g.size());
    for (Index i = 0; i < g.size(); ++i) w(i) = g[i];
    const auto a = tensor(pauli(3), g.multiply(w));
    const auto b = tensor(pauli(3), OperatorMatrix::identity(Basis::grid(g.size())));
    const Vector psi = (gaussian_state(g, 2.0, 0.5) + gaussian_state(g, 2.0, 0.5, false)).normalized();
    const auto s = evolve(EvolutionPlan::uniform(a, b, 0.05, 1.0, EvolutionScheme::strang), psi);
    const auto e = evolve(EvolutionPlan::uniform(a, b, 0.05, 1.0, EvolutionScheme::exact_oracle), psi);
    ASSERT_EQ(s.times.size(), e.times.size());
    for (std::size_t i = 0; i < s.times.size(); ++i) EXPECT_LT((s.states[i] - e.states[i]).norm(), 1e-12);
}

TEST(Evolve, JcLimitTracksOracle) {
    const auto g = build_grid(0.5, 10.0, 128, DerivativeScheme::spectral);
    const auto jc = generalized_jc_hamiltonian(PotentialSpec::parse("q^2"), g);
    EXPECT_LT((jc.omega.array() - 1.0).abs().maxCoeff(), 1e-12);
    const Vector psi = gaussian_state(g, 5.0, 1.0);
    EvolutionPlan plan = EvolutionPlan::uniform(jc.outer, jc.inner, 1e-3, 5.0);
    plan.record_every = 250;
    plan.keep_states = false;
    const Trajectory s = evolve(plan, psi);
    plan.scheme = EvolutionScheme::exact_oracle;
    const Trajectory e = evolve(plan, psi);
    double lo = 1.0, hi = -1.0, worst = 0.0;
    for (std::size_t i = 0; i < s.times.size(); ++i) {
        worst = std::max(worst, std::abs(s.sigma3[i] - e.sigma3[i]));
        lo = std::min(lo, e.sigma3[i]);
        hi = std::max(hi, e.sigma3[i]);
    }
    EXPECT_LT(worst, 1e-4);
    EXPECT_GT(hi - lo, 0.5);  // population actually oscillates
    EXPECT_LT(s.norm_drift(), 1e-10);
}

TEST(Evolve, PlanValidation) {
    const auto g = build_grid(0.5, 10.0, 64, DerivativeScheme::spectral);
    const auto jc = generalized_jc_hamiltonian(PotentialSpec::parse("q^2"), g);
    EXPECT_THROW(EvolutionPlan::uniform(jc.outer, jc.inner, 0.0, 1.0), InvalidArgument);
    EvolutionPlan plan = EvolutionPlan::uniform(jc.outer, jc.inner, 0.1, 1.0);
    plan.steps.push_back(-0.1);
    EXPECT_THROW(plan.validate(), InvalidArgument);
    EXPECT_THROW(evolve(EvolutionPlan::uniform(jc.outer, jc.inner, 0.1, 1.0), Vector::Ones(3)), InvalidArgument);
}

TEST(Evolve, TrajectoryCsv) {
    const auto g = build_grid(0.5, 10.0, 64, DerivativeScheme::spectral);
    const auto jc = generalized_jc_hamiltonian(PotentialSpec::parse("q^2"), g);
    const Trajectory t = evolve(EvolutionPlan::uniform(jc.outer, jc.inner, 0.1, 0.3), gaussian_state(g, 4.0, 1.0));
    std::ostringstream os;
    write_trajectory_csv(os, t, {0});
    std::istringstream is(os.str());
    std::string header;
    std::getline(is, header);
    EXPECT_EQ(header, "t,re_0,im_0,sigma1,sigma2,sigma3,norm");
}

TEST(GeneralizedJc, Structure) {
    const auto g = build_grid(0.5, 6.0, 128, DerivativeScheme::spectral);
    const auto jc = generalized_jc_hamiltonian(PotentialSpec::parse("q^4"), g);
    EXPECT_TRUE(jc.h_jc.is_hermitian(1e-12));
    EXPECT_LT((0.5 * jc.omega - g.points()).cwiseAbs().maxCoeff(), 1e-12);
    EXPECT_LT(operator_norm(jc.outer + jc.inner - jc.h_jc), 1e-14);
    const auto swapped = generalized_jc_hamiltonian(PotentialSpec::parse("q^4"), g, 0.5, true);
    EXPECT_EQ(swapped.outer.matrix(), jc.inner.matrix());
}

TEST(JcNoRwa, Examples) {
    const auto h0 = jc_no_rwa(8, 2.0, 1.5, 0.0);
    const Eigen::SelfAdjointEigenSolver<Matrix> es0(h0.matrix());
    for (Index i = 0; i < 8; ++i) EXPECT_NEAR(es0.eigenvalues()(i), -2.0 * 2.25, 1e-12);
    for (Index i = 8; i < 16; ++i) EXPECT_NEAR(es0.eigenvalues()(i), 2.0 * 2.25, 1e-12);

    const auto h = jc_no_rwa(32, 1.0, 1.0);
    EXPECT_TRUE(h.is_hermitian(0.0));
    const Eigen::SelfAdjointEigenSolver<Matrix> es(h.matrix());
    const double ground = es.eigenvalues()(0);
    EXPECT_LT(ground, -1.0);
    // H^2 = 1 + x^2 with x = (a+ + a-)/sqrt2 at g = 1/sqrt2, so the ground energy is -sqrt(1 + x_max^2)
    // where x_max is the largest zero of the physicists' Hermite polynomial H_32.
    EXPECT_NEAR(ground, -7.195639226471638, 1e-10);
}

TEST(Zitter, AxisParallelIsStationary) {
    const ZitterParams zp{0.7, 1.3, 1.0, 1.0};
    const auto b = zp.field();
    const double n = std::hypot(b[0], b[1], b[2]);
    const std::array<double, 3> s0{b[0] / n, b[1] / n, b[2] / n};
    const auto r = zitter_precession(zp, s0, {0.0, 0.5, 3.0, 11.0});
    for (const auto& v : r.series)
        for (int k = 0; k < 3; ++k) EXPECT_NEAR(v[k], s0[k], 1e-14);
}

TEST(Zitter, RestMassRotation) {
    const ZitterParams zp{0.0, 1.0, 1.0, 1.0};
    for (double t : {0.0, 0.3, 1.7, 4.0}) {
        const auto v = zitter_precession(zp, {1.0, 0.0, 0.0}, {t}).series[0];
        EXPECT_NEAR(v[0], std::cos(2 * t), 1e-14);
        EXPECT_NEAR(v[1], std::sin(2 * t), 1e-14);
        EXPECT_NEAR(v[2], 0.0, 1e-14);
    }
}

std::array<double, 3> unitary_oracle(const ZitterParams& zp, const std::array<double, 3>& s0, double t) {
    // Pure state with Bloch vector s0, evolved by e^{-iHt/hbar}.
    const auto b = zp.field();
    Matrix h(2, 2);
    h << b[2], b[0], b[0], -b[2];
    const Eigen::SelfAdjointEigenSolver<Matrix> es(h);
    const Matrix u = es.eigenvectors() *
                     (es.eigenvalues().cast<Complex>() * (-I * t / zp.hbar)).array().exp().matrix().asDiagonal() *
                     es.eigenvectors().adjoint();
    const Matrix rho0 = 0.5 * (Matrix::Identity(2, 2) + s0[0] * pauli(1).matrix() + s0[1] * pauli(2).matrix() +
                               s0[2] * pauli(3).matrix());
    const Matrix rho = u * rho0 * u.adjoint();
    return {(rho * pauli(1).matrix()).trace().real(), (rho * pauli(2).matrix()).trace().real(),
            (rho * pauli(3).matrix()).trace().real()};
}

TEST(Zitter, MatchesUnitaryOracle) {
    const std::array<double, 3> s0{0.6, 0.0, 0.8};
    for (const ZitterParams zp : {ZitterParams{1.0, 1.0, 1.0, 1.0}, ZitterParams{0.3, 2.0, 1.5, 0.7}}) {
        std::vector<double> times{0.0, 0.4, 1.3, 2.9};
        const auto r = zitter_precession(zp, s0, times);
        for (std::size_t i = 0; i < times.size(); ++i) {
            const auto o = unitary_oracle(zp, s0, times[i]);
            for (int k = 0; k < 3; ++k) EXPECT_NEAR(r.series[i][k], o[k], 1e-10);
        }
        const auto b = zp.field();
        EXPECT_NEAR(r.angular_frequency, 2.0 * std::hypot(b[0], b[2]) / zp.hbar, 1e-14);
        EXPECT_NEAR(r.half_omega[0], b[0] / zp.hbar, 1e-14);
    }
}

TEST(Zitter, Rejections) {
    EXPECT_THROW(zitter_precession(ZitterParams{1.0, 1.0, 1.0, 1.0}, {1.0, 1.0, 0.0}, {0.0}), InvalidArgument);
    EXPECT_THROW(zitter_precession(ZitterParams{1.0, -1.0, 1.0, 1.0}, {1.0, 0.0, 0.0}, {0.0}), InvalidArgument);
}

TEST(Landau, SmallFieldAndScaling) {
    const LandauParams weak{0.05, 0.0, 1.0, 1.0, 1.0, 1.0};
    const auto g = landau_grid(weak, 1024);
    const auto r = landau_identity_check(weak, g);
    EXPECT_LT(r.dimensionless_residual, 1e-8);
    EXPECT_NEAR(r.sigma3_coefficient, 0.05, 1e-15);

    const LandauParams doubled{0.1, 0.0, 1.0, 1.0, 1.0, 1.0};
    EXPECT_NEAR(landau_identity_check(doubled, landau_grid(doubled, 1024)).sigma3_coefficient, 2 * r.sigma3_coefficient,
                1e-15);
}

TEST(Landau, NaturalAndRestoredUnitsAgree) {
    const LandauParams natural{1.0, 0.5, 1.0, 1.0, 1.0, 1.0};
    const LandauParams restored{2.0, 0.8, 1.5, 0.5, 0.9, 3.0};
    const auto rn = landau_identity_check(natural, landau_grid(natural, 1024));
    const auto rr = landau_identity_check(restored, landau_grid(restored, 1024));
    EXPECT_LT(rn.dimensionless_residual, 1e-8);
    EXPECT_LT(rr.dimensionless_residual, 1e-8);
}

TEST(Landau, ConvergesUnderRefinement) {
    const LandauParams lp{1.0, 0.5, 1.0, 1.0, 1.0, 1.0};
    const double r64 = landau_identity_check(lp, landau_grid(lp, 64)).dimensionless_residual;
    const double r128 = landau_identity_check(lp, landau_grid(lp, 128)).dimensionless_residual;
    EXPECT_LT(r128, 1e-3 * r64);
    // Past 128 points the spectral error is gone and only rounding (growing like n^2) is left.
    EXPECT_LT(landau_identity_check(lp, landau_grid(lp, 512)).dimensionless_residual, 1e-11);
}

TEST(Landau, NegativeMassTermRejected) {
    const LandauParams lp{1.0, 5.0, 0.5, 1.0, 1.0, 0.1};
    EXPECT_THROW(lp.validate(), InvalidArgument);
}

}  // namespace
