#pragma once

// Heisenberg-picture identities and unitary time evolution:
//  - i[H, O], and the oscillation check [H,[H,Sigma]] = Sigma
//  - spectral propagators and Strang symmetric splitting
//  - the generalized Jaynes-Cummings Hamiltonian Upsilon - omega(q) sigma_3 / 2
//  - Jaynes-Cummings form of the factorized 1-D relativistic Hamiltonian
//  - spin precession (zitterbewegung) for H = c (p sigma_1 + m c sigma_3)
//  - the squared Landau-level identity W^2 - m hbar w_c sigma_3

#include <dfact/factorization.hpp>
#include <dfact/grid.hpp>
#include <dfact/operator_algebra.hpp>
#include <dfact/operator_matrix.hpp>

#include <array>
#include <cmath>
#include <iosfwd>
#include <string>
#include <vector>

namespace dfact {

/// i[H, O] with hbar = 1.
OperatorMatrix heisenberg_derivative(const OperatorMatrix& h, const OperatorMatrix& o);

/// Interior-projected norm of [H,[H,Sigma]] - Sigma, i.e. of d^2 Sigma/dt^2 + Sigma.
double sigma_oscillation_check(const FockSpec& spec);

/// exp(-i t H) through a cached eigendecomposition. Diagonal H is applied as phases.
class SpectralPropagator {
public:
    /// Throws InvalidArgument if H is not Hermitian to 1e-12 (relative).
    explicit SpectralPropagator(const OperatorMatrix& h);

    [[nodiscard]] Vector apply(double t, const Vector& psi) const;
    [[nodiscard]] Index dim() const { return evals_.size(); }
    [[nodiscard]] bool diagonal() const { return diagonal_; }
    [[nodiscard]] const RealVector& eigenvalues() const { return evals_; }
    [[nodiscard]] const Matrix& eigenvectors() const { return evecs_; }

private:
    bool diagonal_ = false;
    RealVector evals_;
    Matrix evecs_;
};

/// exp(-i t H) psi by full spectral decomposition.
Vector exact_oracle(const OperatorMatrix& h, double t, const Vector& psi);

/// exp(-i dt outer/2) exp(-i dt inner) exp(-i dt outer/2) psi.
Vector strang_step(const OperatorMatrix& outer, const OperatorMatrix& inner, double dt, const Vector& psi);

enum class EvolutionScheme { strang, exact_oracle };

std::string to_string(EvolutionScheme s);

struct EvolutionPlan {
    OperatorMatrix outer;  // half-step part
    OperatorMatrix inner;  // full-step part
    std::vector<double> steps;
    EvolutionScheme scheme = EvolutionScheme::strang;
    int record_every = 1;  // record after every k-th step (and always the last)
    bool keep_states = true;

    static EvolutionPlan uniform(OperatorMatrix outer, OperatorMatrix inner, double dt, double t_final,
                                 EvolutionScheme scheme = EvolutionScheme::strang);
    void validate() const;
};

struct Trajectory {
    std::vector<double> times;
    std::vector<Vector> states;  // empty unless plan.keep_states
    std::vector<double> sigma1, sigma2, sigma3, norm;

    [[nodiscard]] double norm_drift() const;
};

/// <sigma_k (x) I> for a spin-composite state, k = 1, 2, 3.
std::array<double, 3> pauli_expectations(const Vector& psi);

Trajectory evolve(const EvolutionPlan& plan, const Vector& psi0);

/// Trajectory CSV: t, [re_i, im_i for selected components], sigma1, sigma2, sigma3, norm.
void write_trajectory_csv(std::ostream& os, const Trajectory& traj, const std::vector<Index>& components = {});

struct GeneralizedJc {
    OperatorMatrix h_jc;   // Upsilon - omega(q) sigma_3 / 2
    OperatorMatrix outer;  // Upsilon (or the sigma_3 part when swapped)
    OperatorMatrix inner;
    RealVector omega;      // prefactor * f'/sqrt f
};

GeneralizedJc generalized_jc_hamiltonian(const PotentialSpec& f, const PositionGrid& grid,
                                         double omega_prefactor = 0.5, bool swap_split = false);

/// m c^2 sigma_3 + i hbar g (a+ + a-)(sigma_+ - sigma_-); g <= 0 selects c / sqrt(2 hbar).
OperatorMatrix jc_no_rwa(int fock_dim, double m, double c, double g = -1.0, double hbar = 1.0);

struct ZitterParams {
    double p = 0.0;
    double m = 1.0;
    double c = 1.0;
    double hbar = 1.0;

    void validate() const;
    /// (p c, 0, m c^2): H = b . sigma.
    [[nodiscard]] std::array<double, 3> field() const;
};

struct ZitterResult {
    std::vector<std::array<double, 3>> series;
    std::array<double, 3> axis;        // unit precession axis
    double angular_frequency;          // 2 |b| / hbar
    std::array<double, 3> half_omega;  // b / hbar, half the precession rate vector
};

/// <sigma>(t) for H = c(p sigma_1 + m c sigma_3): rotation of sigma0 about b
/// at angular frequency 2|b|/hbar (d<sigma>/dt = (2/hbar) b x <sigma>).
ZitterResult zitter_precession(const ZitterParams& zp, const std::array<double, 3>& sigma0,
                               const std::vector<double>& times);

struct LandauParams {
    double b_field = 1.0;
    double k_y = 0.0;
    double m = 1.0;
    double charge = 1.0;  // |e|
    double hbar = 1.0;
    double c = 1.0;

    void validate() const;
    [[nodiscard]] double omega_c() const { return charge * b_field / (m * c); }
    [[nodiscard]] double x_b() const { return hbar * k_y / (m * omega_c()); }
    [[nodiscard]] double magnetic_length() const { return std::sqrt(hbar / (m * omega_c())); }
    /// (hbar k_y)^2 - m w_c^2 x_B^2 + (m c)^2; must be non-negative.
    [[nodiscard]] double mass_term_squared() const;
};

struct LandauReport {
    double residual;              // interior inf-norm over test functions, relative to ||v||_inf
    double sigma3_coefficient;    // m hbar w_c
    double dimensionless_residual;  // residual / (m hbar w_c)
};

/// W = p_x sigma_1 + m w_c X sigma_2 + M sigma_3 on the grid, checked against
/// W^2 - m hbar w_c sigma_3 = (p_x^2 + m^2 w_c^2 X^2 + M^2) (x) I.
LandauReport landau_identity_check(const LandauParams& lp, const PositionGrid& grid, double boundary_fraction = 0.1);

/// Grid centred on x_B spanning +-half_width magnetic lengths.
PositionGrid landau_grid(const LandauParams& lp, Index n_points, double half_width = 12.0);

}  // namespace dfact
