#include <dfact/dynamics.hpp>
#include <dfact/errors.hpp>

#include <Eigen/Eigenvalues>

#include <cmath>
#include <cstdio>
#include <numbers>
#include <ostream>

namespace dfact {

namespace {
constexpr Complex I_unit{0.0, 1.0};

void require_hermitian(const OperatorMatrix& h, const char* who) {
    if (!h.is_hermitian(1e-12)) throw InvalidArgument(std::string(who) + ": operator is not Hermitian");
}
}  // namespace

OperatorMatrix heisenberg_derivative(const OperatorMatrix& h, const OperatorMatrix& o) {
    if (h.dim() != o.dim() || !(h.basis() == o.basis()))
        throw InvalidArgument("heisenberg_derivative: H is " + h.basis().name() + ", O is " + o.basis().name());
    require_hermitian(h, "heisenberg_derivative");
    return commutator(h, o) * I_unit;
}

double sigma_oscillation_check(const FockSpec& spec) {
    spec.validate();
    const OperatorMatrix h = build_susy_hamiltonian(spec).h;
    const OperatorMatrix sigma = build_sigma(spec);
    const OperatorMatrix defect = commutator(h, commutator(h, sigma)) - sigma;
    return operator_norm(interior_projection(defect, spec.interior_dim()));
}

SpectralPropagator::SpectralPropagator(const OperatorMatrix& h) {
    require_hermitian(h, "SpectralPropagator");
    const Matrix& m = h.matrix();
    const Matrix off = m - Matrix(m.diagonal().asDiagonal());
    diagonal_ = off.cwiseAbs().maxCoeff() == 0.0;
    if (diagonal_) {
        evals_ = m.diagonal().real();
    } else {
        const Eigen::SelfAdjointEigenSolver<Matrix> es(m);
        if (es.info() != Eigen::Success) throw NumericalError("SpectralPropagator: eigensolver failed");
        evals_ = es.eigenvalues();
        evecs_ = es.eigenvectors();
    }
}

Vector SpectralPropagator::apply(double t, const Vector& psi) const {
    if (psi.size() != dim()) throw InvalidArgument("SpectralPropagator: state has wrong length");
    if (t == 0.0) return psi;
    const Vector phases = (evals_ * (-t)).unaryExpr([](double a) { return std::polar(1.0, a); });
    if (diagonal_) return phases.cwiseProduct(psi);
    return evecs_ * phases.cwiseProduct(evecs_.adjoint() * psi);
}

Vector exact_oracle(const OperatorMatrix& h, double t, const Vector& psi) {
    return SpectralPropagator(h).apply(t, psi);
}

Vector strang_step(const OperatorMatrix& outer, const OperatorMatrix& inner, double dt, const Vector& psi) {
    if (!(outer.basis() == inner.basis())) throw InvalidArgument("strang_step: parts have different bases");
    const SpectralPropagator a(outer);
    const SpectralPropagator b(inner);
    return a.apply(0.5 * dt, b.apply(dt, a.apply(0.5 * dt, psi)));
}

std::string to_string(EvolutionScheme s) { return s == EvolutionScheme::strang ? "strang" : "exact-oracle"; }

EvolutionPlan EvolutionPlan::uniform(OperatorMatrix outer, OperatorMatrix inner, double dt, double t_final,
                                     EvolutionScheme scheme) {
    if (!(dt > 0.0) || !(t_final >= 0.0)) throw InvalidArgument("EvolutionPlan: need dt > 0 and T >= 0");
    const auto n = static_cast<std::size_t>(std::llround(t_final / dt));
    EvolutionPlan plan{std::move(outer), std::move(inner), std::vector<double>(n, dt), scheme};
    return plan;
}

void EvolutionPlan::validate() const {
    if (!(outer.basis() == inner.basis())) throw InvalidArgument("EvolutionPlan: parts have different bases");
    require_hermitian(outer, "EvolutionPlan outer part");
    require_hermitian(inner, "EvolutionPlan inner part");
    for (double dt : steps)
        if (!(dt > 0.0)) throw InvalidArgument("EvolutionPlan: time steps must be positive");
    if (record_every < 1) throw InvalidArgument("EvolutionPlan: record_every must be >= 1");
}

double Trajectory::norm_drift() const {
    double d = 0.0;
    for (double n : norm) d = std::max(d, std::abs(n - norm.front()));
    return d;
}

std::array<double, 3> pauli_expectations(const Vector& psi) {
    const Index n = psi.size() / 2;
    const Complex overlap = psi.head(n).dot(psi.tail(n));  // up^dagger down
    return {2.0 * overlap.real(), 2.0 * overlap.imag(), psi.head(n).squaredNorm() - psi.tail(n).squaredNorm()};
}

namespace {
void record(Trajectory& t, double time, const Vector& psi, bool keep) {
    const auto s = pauli_expectations(psi);
    t.times.push_back(time);
    t.sigma1.push_back(s[0]);
    t.sigma2.push_back(s[1]);
    t.sigma3.push_back(s[2]);
    t.norm.push_back(psi.norm());
    if (keep) t.states.push_back(psi);
}
}  // namespace

Trajectory evolve(const EvolutionPlan& plan, const Vector& psi0) {
    plan.validate();
    if (psi0.size() != plan.outer.dim())
        throw InvalidArgument("evolve: state length " + std::to_string(psi0.size()) + " does not match plan dimension " +
                              std::to_string(plan.outer.dim()));
    if (!plan.outer.basis().has_spin()) throw InvalidArgument("evolve: plan must act on a spin-composite basis");
    Trajectory traj;
    record(traj, 0.0, psi0, plan.keep_states);
    const std::size_t n_steps = plan.steps.size();
    double t = 0.0;
    auto due = [&](std::size_t j) { return (j + 1) % static_cast<std::size_t>(plan.record_every) == 0 || j + 1 == n_steps; };

    if (plan.scheme == EvolutionScheme::exact_oracle) {
        const SpectralPropagator full(plan.outer + plan.inner);
        for (std::size_t j = 0; j < n_steps; ++j) {
            t += plan.steps[j];
            if (due(j)) record(traj, t, full.apply(t, psi0), plan.keep_states);
        }
        return traj;
    }

    const SpectralPropagator outer(plan.outer);
    const SpectralPropagator inner(plan.inner);
    if (outer.diagonal()) {
        Vector psi = psi0;
        for (std::size_t j = 0; j < n_steps; ++j) {
            const double dt = plan.steps[j];
            psi = outer.apply(0.5 * dt, inner.apply(dt, outer.apply(0.5 * dt, psi)));
            t += dt;
            if (due(j)) record(traj, t, psi, plan.keep_states);
        }
        return traj;
    }
    // Keep the state in the eigenbasis of the outer part between steps, so the
    // outer half-steps are phase multiplications.
    const Matrix& v = outer.eigenvectors();
    const RealVector& lam = outer.eigenvalues();
    auto half = [&](double dt) {
        return Vector((lam * (-0.5 * dt)).unaryExpr([](double a) { return std::polar(1.0, a); }));
    };
    Vector c = v.adjoint() * psi0;
    for (std::size_t j = 0; j < n_steps; ++j) {
        const double dt = plan.steps[j];
        const Vector ph = half(dt);
        c = ph.cwiseProduct(c);
        c = v.adjoint() * inner.apply(dt, v * c);
        c = ph.cwiseProduct(c);
        t += dt;
        if (due(j)) record(traj, t, v * c, plan.keep_states);
    }
    return traj;
}

void write_trajectory_csv(std::ostream& os, const Trajectory& traj, const std::vector<Index>& components) {
    if (!components.empty() && traj.states.size() != traj.times.size())
        throw InvalidArgument("write_trajectory_csv: state components requested but states were not kept");
    os << "t";
    for (Index k : components) os << ",re_" << k << ",im_" << k;
    os << ",sigma1,sigma2,sigma3,norm\n";
    char buf[32];
    auto put = [&](double x) {
        std::snprintf(buf, sizeof buf, "%.17g", x);
        os << buf;
    };
    for (std::size_t i = 0; i < traj.times.size(); ++i) {
        put(traj.times[i]);
        for (Index k : components) {
            os << ',';
            put(traj.states[i](k).real());
            os << ',';
            put(traj.states[i](k).imag());
        }
        for (double x : {traj.sigma1[i], traj.sigma2[i], traj.sigma3[i], traj.norm[i]}) {
            os << ',';
            put(x);
        }
        os << '\n';
    }
}

GeneralizedJc generalized_jc_hamiltonian(const PotentialSpec& f, const PositionGrid& grid, double omega_prefactor,
                                         bool swap_split) {
    const PotentialSamples s = sample_potential(f, grid);
    GeneralLadders lad = general_ladders(f, grid);
    RealVector omega = omega_prefactor * s.df.cwiseQuotient(s.f.cwiseSqrt());
    const Index n = grid.size();
    RealVector diag(2 * n);
    diag << -0.5 * omega, 0.5 * omega;
    OperatorMatrix gap(Basis::spin_grid(n), diag.cast<Complex>().asDiagonal().toDenseMatrix());
    GeneralizedJc out{lad.upsilon + gap, lad.upsilon, gap, std::move(omega)};
    if (swap_split) std::swap(out.outer, out.inner);
    return out;
}

OperatorMatrix jc_no_rwa(int fock_dim, double m, double c, double g, double hbar) {
    if (!(c > 0.0) || !(hbar > 0.0)) throw InvalidArgument("jc_no_rwa: need c > 0 and hbar > 0");
    if (g < 0.0) g = c / std::sqrt(2.0 * hbar);
    const auto f = fock_operators(fock_dim);
    const auto& s = pauli_set();
    return lift_spin(s.s3, f.a_minus.basis()) * Complex(m * c * c) +
           tensor(s.s_plus - s.s_minus, f.a_plus + f.a_minus) * (I_unit * hbar * g);
}

void ZitterParams::validate() const {
    if (!(m >= 0.0) || !(c > 0.0) || !(hbar > 0.0))
        throw InvalidArgument("ZitterParams: need m >= 0, c > 0, hbar > 0");
}

std::array<double, 3> ZitterParams::field() const { return {p * c, 0.0, m * c * c}; }

ZitterResult zitter_precession(const ZitterParams& zp, const std::array<double, 3>& sigma0,
                               const std::vector<double>& times) {
    zp.validate();
    const double len0 = std::hypot(sigma0[0], sigma0[1], sigma0[2]);
    if (std::abs(len0 - 1.0) > 1e-12) throw InvalidArgument("zitter_precession: sigma0 must be a unit vector");
    const auto b = zp.field();
    const double bn = std::hypot(b[0], b[1], b[2]);
    ZitterResult out;
    out.angular_frequency = 2.0 * bn / zp.hbar;
    out.half_omega = {b[0] / zp.hbar, b[1] / zp.hbar, b[2] / zp.hbar};
    if (bn == 0.0) {
        out.axis = {0.0, 0.0, 1.0};
        out.series.assign(times.size(), sigma0);
        return out;
    }
    const std::array<double, 3> k{b[0] / bn, b[1] / bn, b[2] / bn};
    out.axis = k;
    const auto& v = sigma0;
    const double kv = k[0] * v[0] + k[1] * v[1] + k[2] * v[2];
    const std::array<double, 3> kxv{k[1] * v[2] - k[2] * v[1], k[2] * v[0] - k[0] * v[2], k[0] * v[1] - k[1] * v[0]};
    out.series.reserve(times.size());
    for (double t : times) {
        // Rodrigues: v cos + (k x v) sin + k (k.v)(1 - cos)
        const double th = out.angular_frequency * t;
        const double ct = std::cos(th), st = std::sin(th);
        std::array<double, 3> r{};
        for (int i = 0; i < 3; ++i) r[i] = v[i] * ct + kxv[i] * st + k[i] * kv * (1.0 - ct);
        out.series.push_back(r);
    }
    return out;
}

void LandauParams::validate() const {
    if (!(b_field > 0.0) || !(m > 0.0)) throw InvalidArgument("LandauParams: need B > 0 and m > 0");
    if (!(charge > 0.0) || !(hbar > 0.0) || !(c > 0.0))
        throw InvalidArgument("LandauParams: need |e| > 0, hbar > 0, c > 0");
    if (mass_term_squared() < 0.0)
        throw InvalidArgument("LandauParams: (hbar k_y)^2 - m w_c^2 x_B^2 + (m c)^2 is negative; "
                              "reduce k_y or raise B for this mass");
}

double LandauParams::mass_term_squared() const {
    const double w = omega_c();
    const double xb = x_b();
    return hbar * k_y * hbar * k_y - m * w * w * xb * xb + m * c * m * c;
}

PositionGrid landau_grid(const LandauParams& lp, Index n_points, double half_width) {
    lp.validate();
    const double l = lp.magnetic_length();
    return {lp.x_b() - half_width * l, lp.x_b() + half_width * l, n_points, DerivativeScheme::spectral};
}

LandauReport landau_identity_check(const LandauParams& lp, const PositionGrid& grid, double boundary_fraction) {
    lp.validate();
    const Index n = grid.size();
    const double w = lp.omega_c();
    const double mw = lp.m * w;
    const double mass = std::sqrt(lp.mass_term_squared());
    const RealVector x_rel = grid.points().array() - lp.x_b();
    const OperatorMatrix px = grid.p_operator(lp.hbar);
    const OperatorMatrix big_x = grid.multiply(x_rel);
    const Basis mode = Basis::grid(n);
    const OperatorMatrix w_op = tensor(pauli(1), px) + tensor(pauli(2), big_x * Complex(mw)) +
                                lift_spin(pauli(3), mode) * Complex(mass);
    const double s3_coeff = lp.m * lp.hbar * w;
    RealVector scalar = (mw * mw) * x_rel.cwiseProduct(x_rel);
    scalar.array() += mass * mass;
    const auto [lo, hi] = grid.interior(boundary_fraction);
    double worst = 0.0;
    for (const auto& v : smooth_test_functions(grid)) {
        for (int slot = 0; slot < 2; ++slot) {
            Vector psi = Vector::Zero(2 * n);
            psi.segment(slot * n, n) = v.cast<Complex>();
            Vector rhs(2 * n);
            for (int s = 0; s < 2; ++s) {
                const Vector blk = psi.segment(s * n, n);
                rhs.segment(s * n, n) = px.apply(px.apply(blk)) + scalar.cast<Complex>().cwiseProduct(blk);
            }
            Vector lhs = w_op.apply(w_op.apply(psi));
            lhs.head(n) -= s3_coeff * psi.head(n);
            lhs.tail(n) += s3_coeff * psi.tail(n);
            const Vector r = lhs - rhs;
            double m = 0.0;
            for (int s = 0; s < 2; ++s) m = std::max(m, r.segment(s * n + lo, hi - lo).cwiseAbs().maxCoeff());
            worst = std::max(worst, m / v.cwiseAbs().maxCoeff());
        }
    }
    return {worst, s3_coeff, worst / s3_coeff};
}

}  // namespace dfact
