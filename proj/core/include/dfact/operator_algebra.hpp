#pragma once

// Truncated Fock-space and Pauli representations of the factorized oscillator,
// the osp(1|2) generators, and a checker for (anti)commutator identities.
//
// Natural units (hbar = m = omega = 1). Composite operators live on
// spin (x) boson with index i = s*N + n.

#include <dfact/operator_matrix.hpp>

#include <string>
#include <vector>

namespace dfact {

/// Boson truncation N and interior margin k: identities are asserted on the
/// first N - k Fock states of every spin block.
struct FockSpec {
    int dim = 64;
    int interior_margin = 4;

    /// Throws InvalidArgument unless N >= 8 and 0 <= k <= N/2.
    void validate() const;
    [[nodiscard]] int interior_dim() const { return dim - interior_margin; }
};

struct FockOperators {
    OperatorMatrix a_minus, a_plus, q, p, h_osc;
};

struct PauliSet {
    OperatorMatrix s1, s2, s3, s_plus, s_minus;
};

/// a- has sqrt(n) at (n-1, n); q = (a+ + a-)/sqrt2, p = i(a+ - a-)/sqrt2, H = a+a- + 1/2.
FockOperators fock_operators(int dim);
inline FockOperators fock_operators(const FockSpec& spec) { return fock_operators(spec.dim); }

const PauliSet& pauli_set();
/// sigma_1, sigma_2, sigma_3 for j = 1, 2, 3.
const OperatorMatrix& pauli(int j);

struct DiracFactorization {
    OperatorMatrix sum_of_squares;  // (A^2 + B^2) (x) I
    OperatorMatrix sigma_comb;      // A sigma_j + B sigma_k
    OperatorMatrix residual;        // -i eps_{jkl} [A, B] sigma_l

    /// (A^2 + B^2) - sigma_comb^2 - residual.
    [[nodiscard]] OperatorMatrix identity_defect() const;
};

/// A^2 + B^2 = (A sigma_j + B sigma_k)^2 - i eps_{jkl} [A, B] sigma_l, j != k.
DiracFactorization dirac_factorize(const OperatorMatrix& a, const OperatorMatrix& b, int j, int k);

/// Sigma = a- sigma_+ + a+ sigma_- = [[0, a-], [a+, 0]].
OperatorMatrix build_sigma(int dim);
inline OperatorMatrix build_sigma(const FockSpec& spec) { return build_sigma(spec.dim); }
/// (q sigma_1 - p sigma_2) / sqrt2, the Pauli-combination route to Sigma.
OperatorMatrix build_sigma_pauli_route(int dim);

struct SusyHamiltonian {
    OperatorMatrix h;        // Sigma^2 - sigma_3/2 on spin (x) boson
    OperatorMatrix h_plus;   // a- a+
    OperatorMatrix h_minus;  // a+ a-
};

SusyHamiltonian build_susy_hamiltonian(int dim);
inline SusyHamiltonian build_susy_hamiltonian(const FockSpec& spec) { return build_susy_hamiltonian(spec.dim); }

/// U+- = a+- sigma_+-, V+- = a-+ sigma_+-, K+- = (a+-)^2 / 2, all on spin (x) boson.
struct SuperalgebraGenerators {
    OperatorMatrix u_plus, u_minus, v_plus, v_minus, k_plus, k_minus;
};

SuperalgebraGenerators superalgebra_generators(int dim);
inline SuperalgebraGenerators superalgebra_generators(const FockSpec& spec) {
    return superalgebra_generators(spec.dim);
}

enum class Bracket { commutator, anticommutator, product };

std::string to_string(Bracket b);
Bracket bracket_from_string(const std::string& s);

/// coeff * op_1 op_2 ... op_r; an empty product is the identity.
struct OperatorTerm {
    Complex coeff{1.0, 0.0};
    std::vector<std::string> ops;
};

/// [lhs_1, lhs_2] (or {.,.}, or the plain product) == sum of rhs terms.
///
/// Operand names: a-, a+, q, p, H, H_osc, Sigma, U+, U-, V+, V-, K+, K-,
/// s1, s2, s3, s+, s-, I. Bosonic operands are lifted to spin (x) boson.
struct AlgebraRelation {
    std::string name;
    std::string family;
    Bracket bracket = Bracket::commutator;
    std::vector<std::string> lhs;
    std::vector<OperatorTerm> rhs;
    int margin = 0;  // minimum interior margin requested by the record
    std::string note;
};

/// Number of ladder operators in one operand (e.g. K+ -> 2, s3 -> 0).
int ladder_depth(const std::string& operand);
/// Deepest product appearing on either side of the relation.
int ladder_depth(const AlgebraRelation& rel);

/// The SU(1,1), osp(1|2), supercharge and canonical-pair identities.
const std::vector<AlgebraRelation>& builtin_relations();
/// Names of the relation families in builtin_relations(), in order.
std::vector<std::string> builtin_families();

/// Operator norm of lhs - rhs projected onto the first N - k Fock states,
/// k = spec.interior_margin. Throws on unknown operand names and when the
/// margin is smaller than max(rel.margin, ladder_depth(rel)).
double check_relation(const AlgebraRelation& rel, const FockSpec& spec);

/// Evaluates lhs and rhs of a relation on the full (untruncated) 2N space.
std::pair<OperatorMatrix, OperatorMatrix> evaluate_relation(const AlgebraRelation& rel, int dim);

/// JSON array of {name, family, bracket, lhs, rhs: [{coeff: [re, im], ops}], margin, note}.
std::string relations_to_json(const std::vector<AlgebraRelation>& rels);
std::vector<AlgebraRelation> relations_from_json(const std::string& text);

}  // namespace dfact
