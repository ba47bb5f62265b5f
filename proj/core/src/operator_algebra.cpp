#include <dfact/errors.hpp>
#include <dfact/operator_algebra.hpp>

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>

namespace dfact {

namespace {
constexpr Complex I_unit{0.0, 1.0};
}

void FockSpec::validate() const {
    if (dim < 8) throw InvalidArgument("FockSpec: boson truncation must be >= 8, got " + std::to_string(dim));
    if (interior_margin < 0 || interior_margin > dim / 2)
        throw InvalidArgument("FockSpec: interior margin must lie in [0, N/2], got " +
                              std::to_string(interior_margin));
}

FockOperators fock_operators(int dim) {
    if (dim < 1) throw InvalidArgument("fock_operators: dimension must be positive");
    const Basis b = Basis::boson(dim);
    Matrix am = Matrix::Zero(dim, dim);
    for (int n = 1; n < dim; ++n) am(n - 1, n) = std::sqrt(static_cast<double>(n));
    Matrix ap = am.adjoint();
    const double r = std::numbers::sqrt2 / 2.0;
    Matrix q = (ap + am) * r;
    Matrix p = (ap - am) * (I_unit * r);
    Matrix h = ap * am + 0.5 * Matrix::Identity(dim, dim);
    return {{b, std::move(am)}, {b, std::move(ap)}, {b, std::move(q)}, {b, std::move(p)}, {b, std::move(h)}};
}

const PauliSet& pauli_set() {
    static const PauliSet set = [] {
        const Basis b = Basis::spin();
        Matrix s1(2, 2), s2(2, 2), s3(2, 2), sp(2, 2), sm(2, 2);
        s1 << 0, 1, 1, 0;
        s2 << 0, -I_unit, I_unit, 0;
        s3 << 1, 0, 0, -1;
        sp << 0, 1, 0, 0;
        sm << 0, 0, 1, 0;
        return PauliSet{{b, s1}, {b, s2}, {b, s3}, {b, sp}, {b, sm}};
    }();
    return set;
}

const OperatorMatrix& pauli(int j) {
    const auto& s = pauli_set();
    switch (j) {
        case 1: return s.s1;
        case 2: return s.s2;
        case 3: return s.s3;
        default: throw InvalidArgument("pauli(): index must be 1, 2 or 3");
    }
}

OperatorMatrix DiracFactorization::identity_defect() const {
    return sum_of_squares - sigma_comb * sigma_comb - residual;
}

DiracFactorization dirac_factorize(const OperatorMatrix& a, const OperatorMatrix& b, int j, int k) {
    if (j == k) throw InvalidArgument("dirac_factorize: j and k must differ");
    if (j < 1 || j > 3 || k < 1 || k > 3) throw InvalidArgument("dirac_factorize: Pauli indices must be in {1,2,3}");
    if (!(a.basis() == b.basis())) throw InvalidArgument("dirac_factorize: A and B must share a basis");
    if (a.basis().has_spin()) throw InvalidArgument("dirac_factorize: A and B must be mode operators");
    const int l = 6 - j - k;
    // eps_{jkl} = +1 for cyclic (j,k,l), -1 otherwise.
    const double eps = ((k - j + 3) % 3 == 1) ? 1.0 : -1.0;
    DiracFactorization out;
    out.sum_of_squares = lift_mode(a * a + b * b);
    out.sigma_comb = tensor(pauli(j), a) + tensor(pauli(k), b);
    out.residual = tensor(pauli(l), commutator(a, b)) * (-I_unit * eps);
    return out;
}

OperatorMatrix build_sigma(int dim) {
    const auto f = fock_operators(dim);
    const auto& s = pauli_set();
    return tensor(s.s_plus, f.a_minus) + tensor(s.s_minus, f.a_plus);
}

OperatorMatrix build_sigma_pauli_route(int dim) {
    const auto f = fock_operators(dim);
    return (tensor(pauli(1), f.q) - tensor(pauli(2), f.p)) * Complex(1.0 / std::numbers::sqrt2);
}

SusyHamiltonian build_susy_hamiltonian(int dim) {
    const auto f = fock_operators(dim);
    const OperatorMatrix sigma = build_sigma(dim);
    OperatorMatrix h = sigma * sigma - lift_spin(pauli(3), f.a_minus.basis()) * Complex(0.5);
    return {std::move(h), f.a_minus * f.a_plus, f.a_plus * f.a_minus};
}

SuperalgebraGenerators superalgebra_generators(int dim) {
    const auto f = fock_operators(dim);
    const auto& s = pauli_set();
    return {tensor(s.s_plus, f.a_plus),
            tensor(s.s_minus, f.a_minus),
            tensor(s.s_plus, f.a_minus),
            tensor(s.s_minus, f.a_plus),
            lift_mode(f.a_plus * f.a_plus * Complex(0.5)),
            lift_mode(f.a_minus * f.a_minus * Complex(0.5))};
}

std::string to_string(Bracket b) {
    switch (b) {
        case Bracket::commutator: return "commutator";
        case Bracket::anticommutator: return "anticommutator";
        case Bracket::product: return "product";
    }
    return "?";
}

Bracket bracket_from_string(const std::string& s) {
    if (s == "commutator") return Bracket::commutator;
    if (s == "anticommutator") return Bracket::anticommutator;
    if (s == "product") return Bracket::product;
    throw InvalidArgument("unknown bracket kind '" + s + "'");
}

namespace {

const std::map<std::string, int>& depth_table() {
    static const std::map<std::string, int> t = {
        {"a-", 1}, {"a+", 1}, {"q", 1},  {"p", 1},  {"Sigma", 1}, {"U+", 1}, {"U-", 1},
        {"V+", 1}, {"V-", 1}, {"K+", 2}, {"K-", 2}, {"H", 2},     {"H_osc", 2},
        {"s1", 0}, {"s2", 0}, {"s3", 0}, {"s+", 0}, {"s-", 0},    {"I", 0}};
    return t;
}

// All operands at one truncation, lifted to spin (x) boson.
class OperandTable {
public:
    explicit OperandTable(int dim) {
        const auto f = fock_operators(dim);
        const auto& s = pauli_set();
        const Basis mode = f.a_minus.basis();
        const auto g = superalgebra_generators(dim);
        ops_.emplace("a-", lift_mode(f.a_minus));
        ops_.emplace("a+", lift_mode(f.a_plus));
        ops_.emplace("q", lift_mode(f.q));
        ops_.emplace("p", lift_mode(f.p));
        ops_.emplace("H_osc", lift_mode(f.h_osc));
        ops_.emplace("H", build_susy_hamiltonian(dim).h);
        ops_.emplace("Sigma", build_sigma(dim));
        ops_.emplace("U+", g.u_plus);
        ops_.emplace("U-", g.u_minus);
        ops_.emplace("V+", g.v_plus);
        ops_.emplace("V-", g.v_minus);
        ops_.emplace("K+", g.k_plus);
        ops_.emplace("K-", g.k_minus);
        ops_.emplace("s1", lift_spin(s.s1, mode));
        ops_.emplace("s2", lift_spin(s.s2, mode));
        ops_.emplace("s3", lift_spin(s.s3, mode));
        ops_.emplace("s+", lift_spin(s.s_plus, mode));
        ops_.emplace("s-", lift_spin(s.s_minus, mode));
        ops_.emplace("I", OperatorMatrix::identity(mode.with_spin()));
    }

    const OperatorMatrix& get(const std::string& name) const {
        const auto it = ops_.find(name);
        if (it == ops_.end()) throw InvalidArgument("unknown operand '" + name + "'");
        return it->second;
    }

    OperatorMatrix product(const std::vector<std::string>& names) const {
        OperatorMatrix acc = get("I");
        for (const auto& n : names) acc = acc * get(n);
        return acc;
    }

private:
    std::map<std::string, OperatorMatrix> ops_;
};

AlgebraRelation rel(std::string name, std::string family, Bracket b, std::vector<std::string> lhs,
                    std::vector<OperatorTerm> rhs, std::string note) {
    AlgebraRelation r{std::move(name), std::move(family), b, std::move(lhs), std::move(rhs), 0, std::move(note)};
    r.margin = ladder_depth(r);
    return r;
}

}  // namespace

int ladder_depth(const std::string& operand) {
    const auto it = depth_table().find(operand);
    if (it == depth_table().end()) throw InvalidArgument("unknown operand '" + operand + "'");
    return it->second;
}

int ladder_depth(const AlgebraRelation& r) {
    int lhs = 0;
    for (const auto& o : r.lhs) lhs += ladder_depth(o);
    int depth = lhs;
    for (const auto& t : r.rhs) {
        int d = 0;
        for (const auto& o : t.ops) d += ladder_depth(o);
        depth = std::max(depth, d);
    }
    return depth;
}

const std::vector<AlgebraRelation>& builtin_relations() {
    using B = Bracket;
    static const std::vector<AlgebraRelation> rels = {
        rel("[U+,U-] = H s3 - 1/2", "UU", B::commutator, {"U+", "U-"}, {{1.0, {"H", "s3"}}, {-0.5, {}}},
            "osp(1|2) odd-odd bracket"),
        rel("[V+,V-] = H s3 + 1/2", "VV", B::commutator, {"V+", "V-"}, {{1.0, {"H", "s3"}}, {0.5, {}}},
            "osp(1|2) odd-odd bracket"),
        rel("[U+,V+] = -s+^2", "UV same sign", B::commutator, {"U+", "V+"}, {{-1.0, {"s+", "s+"}}},
            "vanishes since s+^2 = 0"),
        rel("[U-,V-] = +s-^2", "UV same sign", B::commutator, {"U-", "V-"}, {{1.0, {"s-", "s-"}}},
            "vanishes since s-^2 = 0"),
        rel("[U+,V-] = 2 K+ s3", "UV opposite sign", B::commutator, {"U+", "V-"}, {{2.0, {"K+", "s3"}}}, ""),
        rel("[U-,V+] = -2 K- s3", "UV opposite sign", B::commutator, {"U-", "V+"}, {{-2.0, {"K-", "s3"}}}, ""),
        rel("[H,K+] = 2 K+", "SU(1,1) HK", B::commutator, {"H", "K+"}, {{2.0, {"K+"}}}, ""),
        rel("[H,K-] = -2 K-", "SU(1,1) HK", B::commutator, {"H", "K-"}, {{-2.0, {"K-"}}}, ""),
        rel("[K+,K-] = -H", "SU(1,1) KK", B::commutator, {"K+", "K-"}, {{-1.0, {"H"}}}, ""),
        rel("[K+,U-] = -V-", "KU", B::commutator, {"K+", "U-"}, {{-1.0, {"V-"}}}, ""),
        rel("[K-,U+] = +V+", "KU", B::commutator, {"K-", "U+"}, {{1.0, {"V+"}}}, ""),
        rel("[K+,V+] = -U+", "KV", B::commutator, {"K+", "V+"}, {{-1.0, {"U+"}}},
            "same-sign pairing; [K-,V+] vanishes identically"),
        rel("[K-,V-] = +U-", "KV", B::commutator, {"K-", "V-"}, {{1.0, {"U-"}}},
            "same-sign pairing; [K+,V-] vanishes identically"),
        rel("{V+,V-} = Sigma^2", "supercharge", B::anticommutator, {"V+", "V-"}, {{1.0, {"Sigma", "Sigma"}}},
            "supersymmetric part of H"),
        rel("[q,p] = i", "canonical qp", B::commutator, {"q", "p"}, {{Complex(0.0, 1.0), {}}}, ""),
        rel("[a-,a+] = 1", "canonical ladder", B::commutator, {"a-", "a+"}, {{1.0, {}}}, ""),
    };
    return rels;
}

std::vector<std::string> builtin_families() {
    std::vector<std::string> out;
    for (const auto& r : builtin_relations())
        if (std::find(out.begin(), out.end(), r.family) == out.end()) out.push_back(r.family);
    return out;
}

std::pair<OperatorMatrix, OperatorMatrix> evaluate_relation(const AlgebraRelation& r, int dim) {
    const OperandTable table(dim);
    OperatorMatrix lhs;
    switch (r.bracket) {
        case Bracket::commutator:
        case Bracket::anticommutator: {
            if (r.lhs.size() != 2)
                throw InvalidArgument("relation '" + r.name + "': a bracket needs exactly two operands");
            const auto& a = table.get(r.lhs[0]);
            const auto& b = table.get(r.lhs[1]);
            lhs = r.bracket == Bracket::commutator ? commutator(a, b) : anticommutator(a, b);
            break;
        }
        case Bracket::product: lhs = table.product(r.lhs); break;
    }
    OperatorMatrix rhs = OperatorMatrix::zero(lhs.basis());
    for (const auto& t : r.rhs) rhs += table.product(t.ops) * t.coeff;
    return {std::move(lhs), std::move(rhs)};
}

double check_relation(const AlgebraRelation& r, const FockSpec& spec) {
    spec.validate();
    const int needed = std::max(r.margin, ladder_depth(r));
    if (spec.interior_margin < needed)
        throw InvalidArgument("relation '" + r.name + "': interior margin " + std::to_string(spec.interior_margin) +
                              " is smaller than its ladder depth " + std::to_string(needed));
    const auto [lhs, rhs] = evaluate_relation(r, spec.dim);
    return operator_norm(interior_projection(lhs - rhs, spec.interior_dim()));
}

}  // namespace dfact
