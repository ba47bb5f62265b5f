#include "cli.hpp"

#include <dfact/dynamics.hpp>
#include <dfact/errors.hpp>
#include <dfact/expression.hpp>
#include <dfact/factorization.hpp>
#include <dfact/multi_hermite.hpp>
#include <dfact/operator_algebra.hpp>
#include <dfact/quartic_states.hpp>

#include <CLI11.hpp>

#include <cmath>
#include <fstream>
#include <limits>
#include <map>
#include <optional>
#include <sstream>

namespace dfact::cli {

using nlohmann::json;

namespace {

enum class Kind { integer, number, text };

struct ParamSpec {
    std::string name;
    Kind kind;
    json fallback;
    std::string help;
};

const std::map<std::string, std::vector<ParamSpec>>& schemas() {
    static const std::map<std::string, std::vector<ParamSpec>> s = {
        {"verify",
         {{"suite", Kind::text, "all", "relation suite: all, osp12, su11, canonical"},
          {"fock-dim", Kind::integer, 64, "boson truncation N"},
          {"margin", Kind::integer, 4, "interior margin k"},
          {"tol", Kind::number, 1e-10, "residual tolerance"},
          {"relations", Kind::text, "", "JSON relation file replacing the built-in set"}}},
        {"hermite",
         {{"n", Kind::integer, 6, "highest degree"},
          {"args", Kind::text, "1,1,1", "comma-separated decimal arguments x1..xm"}}},
        {"factorize",
         {{"f", Kind::text, "q^2+1", "potential f(q)"},
          {"grid", Kind::text, "-6:6:1024", "grid min:max:n"},
          {"scheme", Kind::text, "spectral", "derivative scheme: spectral or fd4"},
          {"floor", Kind::number, 1e-10, "positivity floor for f"},
          {"tol", Kind::number, 1e-8, "partner-identity tolerance"}}},
        {"quartic-states",
         {{"lambda", Kind::number, 1.0, "quartic coupling"},
          {"n-max", Kind::integer, 6, "highest state index"},
          {"grid", Kind::text, "1e-3:14:2048", "grid min:max:n"},
          {"scheme", Kind::text, "fd4", "derivative scheme: spectral or fd4"},
          {"tol", Kind::number, 1e-6, "closed-form vs ladder L2 tolerance"},
          {"out", Kind::text, "", "CSV output path for the states"}}},
        {"evolve",
         {{"model", Kind::text, "gen-jc", "gen-jc (f from --f) or jc (f = q^2)"},
          {"f", Kind::text, "q^4", "potential f(q)"},
          {"grid", Kind::text, "0.5:10:512", "grid min:max:n"},
          {"scheme", Kind::text, "spectral", "derivative scheme: spectral or fd4"},
          {"dt", Kind::number, 1e-3, "time step"},
          {"T", Kind::number, 5.0, "final time"},
          {"prefactor", Kind::number, 0.5, "omega(q) = prefactor f'/sqrt f"},
          {"split", Kind::text, "upsilon-outer", "upsilon-outer or gap-outer"},
          {"propagation", Kind::text, "strang", "strang or exact-oracle"},
          {"psi0-center", Kind::number, json(), "initial Gaussian centre (default: grid middle)"},
          {"psi0-width", Kind::number, json(), "initial Gaussian width (default: L/20)"},
          {"psi0-spin", Kind::text, "up", "initial spin: up or down"},
          {"record-every", Kind::integer, 1, "record every k-th step"},
          {"tol", Kind::number, 1e-10, "norm drift tolerance"},
          {"out", Kind::text, "", "trajectory CSV output path"}}},
        {"zitter",
         {{"p", Kind::number, 1.0, "momentum eigenvalue"},
          {"m", Kind::number, 1.0, "mass"},
          {"c", Kind::number, 1.0, "speed of light"},
          {"hbar", Kind::number, 1.0, "reduced Planck constant"},
          {"sigma0", Kind::text, "1,0,0", "initial unit Bloch vector"},
          {"t-max", Kind::number, 10.0, "final time"},
          {"samples", Kind::integer, 1001, "number of time samples"},
          {"tol", Kind::number, 1e-12, "axis-conservation tolerance"},
          {"out", Kind::text, "", "series CSV output path"}}},
        {"landau",
         {{"B", Kind::number, 1.0, "field strength"},
          {"ky", Kind::number, 0.5, "transverse wavenumber"},
          {"m", Kind::number, 1.0, "mass"},
          {"e", Kind::number, 1.0, "charge magnitude"},
          {"hbar", Kind::number, 1.0, "reduced Planck constant"},
          {"c", Kind::number, 1.0, "speed of light"},
          {"points", Kind::integer, 1024, "grid points (power of two)"},
          {"half-width", Kind::number, 12.0, "grid half width in magnetic lengths"},
          {"tol", Kind::number, 1e-8, "dimensionless residual tolerance"}}},
    };
    return s;
}

json coerce(const ParamSpec& spec, const json& v) {
    if (v.is_null()) return v;
    switch (spec.kind) {
        case Kind::integer:
            if (v.is_number_integer()) return v;
            if (v.is_string()) {
                const std::string& s = v.get_ref<const std::string&>();
                std::size_t used = 0;
                try {
                    const long long x = std::stoll(s, &used);
                    if (used == s.size()) return x;
                } catch (const std::exception&) {
                }
            }
            throw UsageError("--" + spec.name + " expects an integer, got " + v.dump());
        case Kind::number:
            if (v.is_number()) return v.get<double>();
            if (v.is_string()) {
                const std::string& s = v.get_ref<const std::string&>();
                std::size_t used = 0;
                try {
                    const double x = std::stod(s, &used);
                    if (used == s.size() && std::isfinite(x)) return x;
                } catch (const std::exception&) {
                }
            }
            throw UsageError("--" + spec.name + " expects a number, got " + v.dump());
        case Kind::text:
            if (v.is_string()) return v;
            throw UsageError("--" + spec.name + " expects a string, got " + v.dump());
    }
    return v;
}

struct GridArg {
    double lo, hi;
    Index n;
};

GridArg parse_grid(const std::string& s) {
    std::vector<std::string> parts;
    std::stringstream ss(s);
    for (std::string p; std::getline(ss, p, ':');) parts.push_back(p);
    if (parts.size() != 3) throw UsageError("grid '" + s + "' must have the form min:max:n");
    try {
        std::size_t u0 = 0, u1 = 0, u2 = 0;
        const double lo = std::stod(parts[0], &u0);
        const double hi = std::stod(parts[1], &u1);
        const long long n = std::stoll(parts[2], &u2);
        if (u0 != parts[0].size() || u1 != parts[1].size() || u2 != parts[2].size()) throw std::invalid_argument("");
        return {lo, hi, static_cast<Index>(n)};
    } catch (const std::exception&) {
        throw UsageError("grid '" + s + "' must have the form min:max:n");
    }
}

std::vector<std::string> split_commas(const std::string& s) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    for (std::string p; std::getline(ss, p, ',');) {
        const auto b = p.find_first_not_of(" \t");
        const auto e = p.find_last_not_of(" \t");
        out.push_back(b == std::string::npos ? "" : p.substr(b, e - b + 1));
    }
    return out;
}

std::vector<double> parse_doubles(const std::string& s, const std::string& what) {
    std::vector<double> out;
    for (const auto& p : split_commas(s)) {
        try {
            std::size_t used = 0;
            out.push_back(std::stod(p, &used));
            if (used != p.size()) throw std::invalid_argument("");
        } catch (const std::exception&) {
            throw UsageError(what + ": '" + p + "' is not a number");
        }
    }
    return out;
}

// Decimal literal -> exact rational (e.g. "-1.25e-1" -> -1/8).
Rational parse_decimal(const std::string& s) {
    std::size_t i = 0;
    bool neg = false;
    if (i < s.size() && (s[i] == '+' || s[i] == '-')) neg = s[i++] == '-';
    BigInt mant = 0;
    int scale = 0;
    bool digits = false, dot = false;
    for (; i < s.size(); ++i) {
        const char c = s[i];
        if (c >= '0' && c <= '9') {
            mant = mant * 10 + (c - '0');
            digits = true;
            if (dot) ++scale;
        } else if (c == '.' && !dot) {
            dot = true;
        } else {
            break;
        }
    }
    if (!digits) throw UsageError("'" + s + "' is not a decimal number");
    int exp10 = 0;
    if (i < s.size() && (s[i] == 'e' || s[i] == 'E')) {
        std::size_t used = 0;
        try {
            exp10 = std::stoi(s.substr(i + 1), &used);
        } catch (const std::exception&) {
            throw UsageError("'" + s + "' is not a decimal number");
        }
        i += 1 + used;
    }
    if (i != s.size()) throw UsageError("'" + s + "' is not a decimal number");
    const int e = exp10 - scale;
    BigInt p10 = 1;
    for (int k = 0; k < std::abs(e); ++k) p10 *= 10;
    Rational r = e >= 0 ? Rational(mant * p10) : Rational(mant, p10);
    return neg ? Rational(-r) : r;
}

struct Checks {
    json list = json::array();
    std::vector<std::string> failures;

    void add(const std::string& name, double value, double tol, bool upper_bound = true) {
        const bool ok = std::isfinite(value) && (upper_bound ? value < tol : value >= tol);
        list.push_back({{"name", name}, {"value", value}, {"tol", tol}, {"pass", ok}});
        if (!ok) failures.push_back(name);
    }
    void add_flag(const std::string& name, bool ok) {
        list.push_back({{"name", name}, {"pass", ok}});
        if (!ok) failures.push_back(name);
    }
};

std::string read_file(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw UsageError("cannot read '" + path + "'");
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

PositionGrid make_grid(const json& p) {
    const GridArg g = parse_grid(p.at("grid").get<std::string>());
    return build_grid(g.lo, g.hi, g.n, scheme_from_string(p.at("scheme").get<std::string>()));
}

json run_verify(const json& p, Checks& checks) {
    const std::string suite = p.at("suite");
    if (suite != "all" && suite != "osp12" && suite != "su11" && suite != "canonical")
        throw UsageError("--suite must be one of all, osp12, su11, canonical");
    const FockSpec spec{p.at("fock-dim").get<int>(), p.at("margin").get<int>()};
    spec.validate();
    const double tol = p.at("tol");
    std::vector<AlgebraRelation> rels;
    if (const std::string file = p.at("relations"); !file.empty()) {
        rels = relations_from_json(read_file(file));
    } else {
        for (const auto& r : builtin_relations()) {
            const bool canonical = r.family.rfind("canonical", 0) == 0;
            const bool su11 = r.family.rfind("SU(1,1)", 0) == 0;
            if (suite == "all" || (suite == "osp12" && !canonical) || (suite == "su11" && su11) ||
                (suite == "canonical" && canonical))
                rels.push_back(r);
        }
    }
    json rows = json::array();
    for (const auto& r : rels) {
        const double res = check_relation(r, spec);
        const bool ok = res < tol;
        rows.push_back({{"name", r.name}, {"family", r.family}, {"residual", res}, {"margin", spec.interior_margin},
                        {"depth", ladder_depth(r)}, {"pass", ok}});
        checks.add(r.name, res, tol);
    }
    return {{"relations", rows}, {"count", rels.size()}};
}

json run_hermite(const json& p, Checks& checks) {
    const int n = p.at("n");
    if (n < 0) throw UsageError("--n must be non-negative");
    const auto parts = split_commas(p.at("args").get<std::string>());
    std::vector<Rational> xs;
    for (const auto& s : parts) xs.push_back(parse_decimal(s));
    const HermiteArgs<Rational> args(static_cast<int>(xs.size()), xs);
    const auto oracle = hermite_series_oracle(n, args);
    json values = json::array(), exact = json::array();
    bool agree = true;
    for (int k = 0; k <= n; ++k) {
        const Rational h = hermite_eval(k, args);
        agree = agree && h == oracle[static_cast<std::size_t>(k)];
        values.push_back(h.convert_to<double>());
        exact.push_back(h.str());
    }
    checks.add_flag("recursion equals series oracle (exact)", agree);
    return {{"values", values}, {"exact", exact}, {"order", xs.size()}};
}

json run_factorize(const json& p, Checks& checks) {
    const PositionGrid grid = make_grid(p);
    const PotentialSpec f = PotentialSpec::parse(p.at("f").get<std::string>(), p.at("floor").get<double>());
    const PartnerDecomposition d = partner_decomposition(f, grid);
    const double res = d.identity_residual(grid);
    checks.add("partner identity residual", res, p.at("tol"));
    return {{"identity_residual", res},
            {"gap_term_min", d.gap_term.minCoeff()},
            {"gap_term_max", d.gap_term.maxCoeff()},
            {"f_plus_min", d.f_plus.minCoeff()},
            {"f_minus_min", d.f_minus.minCoeff()}};
}

json run_quartic(const json& p, Checks& checks) {
    const int n_max = p.at("n-max");
    if (n_max < 0) throw UsageError("--n-max must be non-negative");
    QuarticParams qp{p.at("lambda").get<double>(), make_grid(p)};
    qp.validate();
    const double tol = p.at("tol");
    std::vector<RealVector> states;
    json dist = json::array();
    for (int n = 0; n <= n_max; ++n) {
        RealVector closed = quartic_state_closed(n, qp);
        const double d = state_distance(closed, quartic_state_ladder(n, qp), qp.grid);
        dist.push_back(d);
        checks.add("closed vs ladder n=" + std::to_string(n), d, tol);
        states.push_back(std::move(closed));
    }
    const double vac = vacuum_annihilation_residual(qp);
    checks.add("vacuum annihilation", vac, tol);
    if (const std::string out = p.at("out"); !out.empty()) {
        std::ostringstream os;
        write_states_csv(os, qp.grid, states);
        write_atomic(out, os.str());
    }
    return {{"closed_vs_ladder_l2", dist}, {"vacuum_annihilation_residual", vac}};
}

json run_evolve(const json& p, Checks& checks) {
    const PositionGrid grid = make_grid(p);
    const std::string model = p.at("model");
    std::string fsrc;
    if (model == "gen-jc") fsrc = p.at("f").get<std::string>();
    else if (model == "jc") fsrc = "q^2";
    else throw UsageError("--model must be gen-jc or jc");
    const std::string split = p.at("split");
    if (split != "upsilon-outer" && split != "gap-outer") throw UsageError("--split must be upsilon-outer or gap-outer");
    const std::string prop = p.at("propagation");
    if (prop != "strang" && prop != "exact-oracle") throw UsageError("--propagation must be strang or exact-oracle");
    const double dt = p.at("dt"), t_final = p.at("T");
    if (!(dt > 0.0) || !(t_final >= 0.0)) throw UsageError("need --dt > 0 and --T >= 0");
    const std::string spin = p.at("psi0-spin");
    if (spin != "up" && spin != "down") throw UsageError("--psi0-spin must be up or down");

    const GeneralizedJc jc =
        generalized_jc_hamiltonian(PotentialSpec::parse(fsrc), grid, p.at("prefactor"), split == "gap-outer");
    const double length = grid.q_max() - grid.q_min();
    const double centre = p.at("psi0-center").is_null() ? grid.q_min() + 0.5 * length : p.at("psi0-center").get<double>();
    const double width = p.at("psi0-width").is_null() ? length / 20.0 : p.at("psi0-width").get<double>();
    if (!(width > 0.0)) throw UsageError("--psi0-width must be positive");
    const Index n = grid.size();
    Vector psi0 = Vector::Zero(2 * n);
    const Index off = spin == "up" ? 0 : n;
    for (Index i = 0; i < n; ++i) {
        const double x = (grid[i] - centre) / width;
        psi0(off + i) = std::exp(-0.5 * x * x);
    }
    psi0.normalize();

    EvolutionPlan plan = EvolutionPlan::uniform(jc.outer, jc.inner, dt, t_final,
                                                prop == "strang" ? EvolutionScheme::strang : EvolutionScheme::exact_oracle);
    plan.record_every = p.at("record-every");
    plan.keep_states = false;
    const Trajectory traj = evolve(plan, psi0);
    const double drift = traj.norm_drift();
    checks.add("norm drift", drift, p.at("tol"));
    if (const std::string out = p.at("out"); !out.empty()) {
        std::ostringstream os;
        write_trajectory_csv(os, traj);
        write_atomic(out, os.str());
    }
    return {{"steps", plan.steps.size()},
            {"records", traj.times.size()},
            {"norm_drift", drift},
            {"final", {{"t", traj.times.back()}, {"sigma1", traj.sigma1.back()}, {"sigma2", traj.sigma2.back()},
                       {"sigma3", traj.sigma3.back()}}}};
}

json run_zitter(const json& p, Checks& checks) {
    const ZitterParams zp{p.at("p"), p.at("m"), p.at("c"), p.at("hbar")};
    const auto s0 = parse_doubles(p.at("sigma0"), "--sigma0");
    if (s0.size() != 3) throw UsageError("--sigma0 needs three components");
    const int samples = p.at("samples");
    if (samples < 2) throw UsageError("--samples must be >= 2");
    const double t_max = p.at("t-max");
    std::vector<double> times(static_cast<std::size_t>(samples));
    for (int i = 0; i < samples; ++i) times[static_cast<std::size_t>(i)] = t_max * i / (samples - 1);
    const ZitterResult r = zitter_precession(zp, {s0[0], s0[1], s0[2]}, times);
    const auto& k = r.axis;
    const double along0 = k[0] * s0[0] + k[1] * s0[1] + k[2] * s0[2];
    double drift = 0.0, len = 0.0;
    for (const auto& v : r.series) {
        drift = std::max(drift, std::abs(k[0] * v[0] + k[1] * v[1] + k[2] * v[2] - along0));
        len = std::max(len, std::abs(std::hypot(v[0], v[1], v[2]) - 1.0));
    }
    checks.add("axis component conservation", drift, p.at("tol"));
    checks.add("Bloch vector length", len, 1e-12);
    if (const std::string out = p.at("out"); !out.empty()) {
        std::ostringstream os;
        os << "t,sigma1,sigma2,sigma3\n";
        char buf[128];
        for (std::size_t i = 0; i < times.size(); ++i) {
            const auto& v = r.series[i];
            std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g,%.17g\n", times[i], v[0], v[1], v[2]);
            os << buf;
        }
        write_atomic(out, os.str());
    }
    return {{"axis", {k[0], k[1], k[2]}},
            {"angular_frequency", r.angular_frequency},
            {"omega_vector_b_over_hbar", {r.half_omega[0], r.half_omega[1], r.half_omega[2]}},
            {"final", {r.series.back()[0], r.series.back()[1], r.series.back()[2]}}};
}

json run_landau(const json& p, Checks& checks) {
    const LandauParams lp{p.at("B"), p.at("ky"), p.at("m"), p.at("e"), p.at("hbar"), p.at("c")};
    const PositionGrid grid = landau_grid(lp, p.at("points").get<Index>(), p.at("half-width").get<double>());
    const LandauReport r = landau_identity_check(lp, grid);
    checks.add("dimensionless squared-form residual", r.dimensionless_residual, p.at("tol"));
    return {{"residual", r.residual},
            {"dimensionless_residual", r.dimensionless_residual},
            {"sigma3_coefficient", r.sigma3_coefficient},
            {"omega_c", lp.omega_c()},
            {"x_B", lp.x_b()},
            {"magnetic_length", lp.magnetic_length()}};
}

}  // namespace

ReportFormat format_from_string(const std::string& s) {
    if (s == "json") return ReportFormat::json;
    if (s == "csv") return ReportFormat::csv;
    throw UsageError("--format must be json or csv");
}

const std::vector<std::string>& commands() {
    static const std::vector<std::string> c = {"verify", "hermite", "factorize", "quartic-states",
                                               "evolve", "zitter",  "landau"};
    return c;
}

json validate_params(const std::string& command, const json& params) {
    const auto it = schemas().find(command);
    if (it == schemas().end()) throw UsageError("unknown command '" + command + "'");
    if (!params.is_object()) throw UsageError("parameters must be a JSON object");
    json out = json::object();
    for (const auto& spec : it->second) {
        const json v = params.contains(spec.name) ? params.at(spec.name) : spec.fallback;
        out[spec.name] = coerce(spec, v);
    }
    for (auto p = params.begin(); p != params.end(); ++p)
        if (!out.contains(p.key())) throw UsageError("unknown parameter '" + p.key() + "' for command " + command);
    return out;
}

RunOutcome run(const RunConfig& config) {
    const json p = validate_params(config.command, config.params);
    Checks checks;
    json results;
    try {
        if (config.command == "verify") results = run_verify(p, checks);
        else if (config.command == "hermite") results = run_hermite(p, checks);
        else if (config.command == "factorize") results = run_factorize(p, checks);
        else if (config.command == "quartic-states") results = run_quartic(p, checks);
        else if (config.command == "evolve") results = run_evolve(p, checks);
        else if (config.command == "zitter") results = run_zitter(p, checks);
        else results = run_landau(p, checks);
    } catch (const ParseError& e) {
        throw UsageError(e.what());
    } catch (const InvalidArgument& e) {
        throw UsageError(e.what());
    }
    RunOutcome out;
    out.failures = checks.failures;
    out.exit_code = checks.failures.empty() ? 0 : 1;
    out.report = {{"command", config.command},
                  {"inputs", p},
                  {"results", results},
                  {"checks", checks.list},
                  {"pass", out.exit_code == 0}};
    return out;
}

int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Dirac factorization toolkit: algebra checks, Hermite machinery, partner potentials, dynamics"};
    app.require_subcommand(1);
    std::string config_path, format = "json", report_path;
    app.add_option("--config", config_path, "JSON file with \"command\" and flag values");
    app.add_option("--format", format, "report format: json or csv");
    app.add_option("--report", report_path, "write the report here instead of stdout");

    std::map<std::string, std::map<std::string, std::string>> given;
    std::map<std::string, CLI::App*> subs;
    for (const auto& [name, specs] : schemas()) {
        CLI::App* sub = app.add_subcommand(name);
        sub->fallthrough();
        subs[name] = sub;
        for (const auto& spec : specs) {
            std::string def = spec.fallback.is_null() ? "auto" : spec.fallback.is_string() ? spec.fallback.get<std::string>()
                                                                                             : spec.fallback.dump();
            sub->add_option_function<std::string>(
                "--" + spec.name, [&given, name = name, key = spec.name](const std::string& v) { given[name][key] = v; },
                spec.help + " [" + def + "]")
                ->type_name(spec.kind == Kind::integer ? "INT" : spec.kind == Kind::number ? "FLOAT" : "TEXT");
        }
    }
    // "config" pseudo-command: `dfact --config run.json` with no subcommand.
    app.require_subcommand(0, 1);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }

    try {
        RunConfig cfg;
        cfg.format = format_from_string(format);
        cfg.report_path = report_path;
        json params = json::object();
        if (!config_path.empty()) {
            json doc;
            try {
                doc = json::parse(read_file(config_path));
            } catch (const json::parse_error& e) {
                throw UsageError("config '" + config_path + "': " + e.what());
            }
            if (!doc.is_object()) throw UsageError("config must be a JSON object");
            if (doc.contains("command")) {
                if (!doc["command"].is_string()) throw UsageError("config: \"command\" must be a string");
                cfg.command = doc["command"];
                doc.erase("command");
            }
            params = doc;
        }
        for (const auto& [name, sub] : subs) {
            if (sub->parsed()) {
                if (!cfg.command.empty() && cfg.command != name)
                    throw UsageError("config command '" + cfg.command + "' conflicts with subcommand '" + name + "'");
                cfg.command = name;
            }
        }
        if (cfg.command.empty()) throw UsageError("no command given (use a subcommand or \"command\" in --config)");
        for (const auto& [k, v] : given[cfg.command]) params[k] = v;
        cfg.params = params;

        const RunOutcome outcome = run(cfg);
        const std::string text = emit_report(outcome.report, cfg.format);
        if (cfg.report_path.empty()) out << text;
        else write_atomic(cfg.report_path, text);
        for (const auto& f : outcome.failures) err << "check failed: " << f << '\n';
        return outcome.exit_code;
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const NumericalError& e) {
        err << "numerical failure: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
}

}  // namespace dfact::cli
