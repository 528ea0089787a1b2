// Command-line front end. JSON is the contract (--format json, default);
// the table renderer is cosmetic. Exit codes: 0 success/agreement, 1
// verified disagreement or failed expectation, 2 malformed input.

#include <hermrep/fockspace.hpp>
#include <hermrep/json_io.hpp>

#include <CLI11.hpp>
#include <unsupported/Eigen/MatrixFunctions>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

using namespace hermrep;

namespace {

// --spec takes inline JSON or @path
std::string read_spec_argument(const std::string& arg) {
    if (arg.empty() || arg[0] != '@') return arg;
    const std::string path = arg.substr(1);
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorCode::BadInput, "cannot read spec file " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void emit(const std::string& text, const std::string& output) {
    if (output.empty()) {
        std::cout << text << "\n";
        return;
    }
    std::ofstream out(output, std::ios::binary);
    if (!out) throw Error(ErrorCode::BadInput, "cannot write " + output);
    out << text << "\n";
}

void check_format(const std::string& format) {
    if (format != "json" && format != "table")
        throw Error(ErrorCode::BadInput, "format must be json or table");
}

Rat parse_rat_arg(const std::string& s, const std::string& flag) {
    try {
        return parse_rat(s);
    } catch (const std::exception&) {
        throw Error(ErrorCode::BadInput, flag + " expects a rational like 3 or -1/2");
    }
}

std::string weight_str(const Weight& w) {
    if (w.is_zero()) return "0";
    std::string s = "{";
    bool first = true;
    for (const auto& [i, v] : w.entries()) {
        if (!first) s += ",";
        s += std::to_string(i) + ":" + rat_str(v);
        first = false;
    }
    return s + "}";
}

std::string table_rows(const std::vector<std::vector<std::string>>& rows) {
    std::vector<std::size_t> widths;
    for (const auto& row : rows) {
        if (widths.size() < row.size()) widths.resize(row.size(), 0);
        for (std::size_t i = 0; i < row.size(); ++i)
            widths[i] = std::max(widths[i], row[i].size());
    }
    std::ostringstream os;
    for (const auto& row : rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) os << "  ";
            os << std::left << std::setw(static_cast<int>(widths[i])) << row[i];
        }
        // setw pads the last column; trim trailing spaces
        std::string line = os.str();
        os.str("");
        while (!line.empty() && line.back() == ' ') line.pop_back();
        os << line << "\n";
    }
    return os.str();
}

std::string num_str(double x) {
    std::ostringstream os;
    os << std::setprecision(6) << x;
    return os.str();
}

// ---- classify ----

std::string verdict_table(const Verdict& v) {
    std::vector<std::vector<std::string>> rows;
    rows.push_back({"inducible", v.inducible ? "yes" : "no"});
    rows.push_back({"bounded", bounded_name(v.bounded)});
    for (const auto& [key, value] : v.parameters) rows.push_back({key, value});
    if (!v.violated_condition.empty()) rows.push_back({"violated", v.violated_condition});
    rows.push_back({"reason", v.reason});
    return table_rows(rows);
}

int run_classify(const std::string& spec_arg, const std::string& format,
                 const std::string& output) {
    const Problem p = problem_from_json(parse_json_text(read_spec_argument(spec_arg)));
    const Verdict v = classify(p.spec, p.rep);
    emit(format == "json" ? verdict_to_json(v).dump(2) : verdict_table(v), output);
    return 0;
}

// ---- enumerate ----

int run_enumerate(const std::string& spec_arg, const std::string& max_charge,
                  int max_support, int max_entry, const std::string& format,
                  const std::string& output) {
    const Problem p = problem_from_json(parse_json_text(read_spec_argument(spec_arg)));
    const auto list = enumerate_inducible(p.spec, parse_rat_arg(max_charge, "--max-charge"),
                                          max_support, max_entry);
    if (format == "json") {
        Json arr = Json::array();
        for (const auto& [rep, verdict] : list) {
            Json row = rep_to_json(rep);
            row["verdict"] = verdict_to_json(verdict);
            arr.push_back(std::move(row));
        }
        emit(Json{{"count", list.size()}, {"reps", std::move(arr)}}.dump(2), output);
    } else {
        std::vector<std::vector<std::string>> rows = {
            {"lambda_plus", "lambda_minus", "c", "bounded"}};
        for (const auto& [rep, verdict] : list)
            rows.push_back({weight_str(rep.lambda_plus), weight_str(rep.lambda_minus),
                            rat_str(rep.c), bounded_name(verdict.bounded)});
        emit(table_rows(rows) + std::to_string(list.size()) + " inducible", output);
    }
    return 0;
}

// ---- verify-kernel ----

int run_verify(const std::string& family, std::size_t p, std::size_t q, std::size_t n,
               const std::string& charge, const GramOptions& opt, const std::string& expect,
               const std::string& format, const std::string& output) {
    TripleSystem sys = TripleSystem::rect(1, 1);
    if (family == "I") {
        if (p < 1 || q < 1)
            throw Error(ErrorCode::BadInput, "family I needs --p and --q at least 1");
        sys = TripleSystem::rect(p, q);
    } else if (family == "II" || family == "III") {
        if (n < 2) throw Error(ErrorCode::BadInput, "families II and III need --n at least 2");
        sys = family == "II" ? TripleSystem::skew(n) : TripleSystem::sym(n);
    } else {
        throw Error(ErrorCode::BadInput, "family must be I, II or III");
    }
    const Rat c = parse_rat_arg(charge, "--charge");
    ScalarCharacter chi;
    chi.c_minus = -c;
    const GramReport r = gram_test(sys, chi, opt);
    const std::string verdict = r.positive ? "positive" : "not_positive";

    Json j = Json::object();
    j["family"] = family;
    if (family == "I") {
        j["p"] = p;
        j["q"] = q;
    } else {
        j["n"] = n;
    }
    j["charge"] = rat_str(c);
    j["samples"] = opt.samples;
    j["seed"] = opt.seed;
    j["tol"] = opt.tol;
    j["radius"] = opt.radius;
    j["min_eigenvalue"] = r.min_eigenvalue;
    j["verdict"] = verdict;
    if (format == "json") {
        emit(j.dump(2), output);
    } else {
        std::vector<std::vector<std::string>> rows;
        for (const auto& [key, value] : j.items())
            rows.push_back({key, value.is_string() ? value.get<std::string>() : value.dump()});
        emit(table_rows(rows), output);
    }
    if (!expect.empty() && expect != verdict) return 1;
    return 0;
}

// ---- check ----

struct CheckRow {
    std::string name;
    double residual = 0;
    double tol = 0;
    bool pass = false;
};

void add_check(std::vector<CheckRow>& rows, const std::string& name, double residual,
               double tol) {
    rows.push_back({name, residual, tol, residual <= tol});
}

std::string sys_label(const TripleSystem& sys) {
    const std::string t = triple_type_name(sys.type);
    if (sys.type == TripleType::I)
        return t + "(" + std::to_string(sys.p) + "," + std::to_string(sys.q) + ")";
    return t + "(" + std::to_string(sys.p) + ")";
}

double kkt_norm(const KKTElement& g, const TripleSystem& sys) {
    return kkt_to_coords(g, sys).norm();
}

KKTElement kkt_add3(const KKTElement& r, const KKTElement& s, const KKTElement& t) {
    KKTElement sum;
    sum.x = r.x + s.x + t.x;
    sum.A = aut_add(r.A, aut_add(s.A, t.A));
    sum.y = r.y + s.y + t.y;
    return sum;
}

double jacobi_kkt_residual(const TripleSystem& sys, int trials, Rng& rng) {
    double worst = 0;
    for (int t = 0; t < trials; ++t) {
        const KKTElement a = random_kkt_complex(sys, rng);
        const KKTElement b = random_kkt_complex(sys, rng);
        const KKTElement c = random_kkt_complex(sys, rng);
        const KKTElement d = kkt_add3(kkt_bracket(kkt_bracket(a, b, sys), c, sys),
                                      kkt_bracket(kkt_bracket(b, c, sys), a, sys),
                                      kkt_bracket(kkt_bracket(c, a, sys), b, sys));
        const double scale = 1.0 + kkt_norm(a, sys) * kkt_norm(b, sys) * kkt_norm(c, sys);
        worst = std::max(worst, kkt_norm(d, sys) / scale);
    }
    return worst;
}

double jacobi_hat_residual(const TripleSystem& sys, int trials, Rng& rng) {
    auto norm = [&](const CentralElement& a) { return std::abs(a.z) + kkt_norm(a.g, sys); };
    double worst = 0;
    for (int t = 0; t < trials; ++t) {
        const CentralElement a{rng.gauss(), random_kkt_real(sys, rng)};
        const CentralElement b{rng.gauss(), random_kkt_real(sys, rng)};
        const CentralElement c{rng.gauss(), random_kkt_real(sys, rng)};
        const CentralElement r = hat_bracket(hat_bracket(a, b, sys), c, sys);
        const CentralElement s = hat_bracket(hat_bracket(b, c, sys), a, sys);
        const CentralElement u = hat_bracket(hat_bracket(c, a, sys), b, sys);
        const CentralElement sum{r.z + s.z + u.z, kkt_add3(r.g, s.g, u.g)};
        const double scale = 1.0 + norm(a) * norm(b) * norm(c);
        worst = std::max(worst, norm(sum) / scale);
    }
    return worst;
}

double jacobi_motion_residual(const TripleSystem& sys, int trials, Rng& rng) {
    auto norm = [&](const MotionElement& a) {
        return std::abs(a.t) + a.v.norm() + aut_to_coords(a.A, sys).norm();
    };
    double worst = 0;
    for (int t = 0; t < trials; ++t) {
        const MotionElement a{rng.gauss(), random_element(sys, rng), random_aut_real(sys, rng)};
        const MotionElement b{rng.gauss(), random_element(sys, rng), random_aut_real(sys, rng)};
        const MotionElement c{rng.gauss(), random_element(sys, rng), random_aut_real(sys, rng)};
        const MotionElement r = motion_bracket(motion_bracket(a, b, sys), c, sys);
        const MotionElement s = motion_bracket(motion_bracket(b, c, sys), a, sys);
        const MotionElement u = motion_bracket(motion_bracket(c, a, sys), b, sys);
        const MotionElement sum{r.t + s.t + u.t, r.v + s.v + u.v,
                                aut_add(r.A, aut_add(s.A, u.A))};
        const double scale = 1.0 + norm(a) * norm(b) * norm(c);
        worst = std::max(worst, norm(sum) / scale);
    }
    return worst;
}

double cocycle_residual(const TripleSystem& sys, int trials, Rng& rng) {
    double worst = 0;
    for (int t = 0; t < trials; ++t) {
        const KKTElement a = random_kkt_real(sys, rng);
        const KKTElement b = random_kkt_real(sys, rng);
        const KKTElement c = random_kkt_real(sys, rng);
        const double sum = omega_p(kkt_bracket(a, b, sys).x, c.x) +
                           omega_p(kkt_bracket(b, c, sys).x, a.x) +
                           omega_p(kkt_bracket(c, a, sys).x, b.x);
        const double scale = 1.0 + kkt_norm(a, sys) * kkt_norm(b, sys) * kkt_norm(c, sys);
        worst = std::max(worst, std::abs(sum) / scale);
    }
    return worst;
}

double theta_residual(const TripleSystem& sys) {
    const auto du = static_cast<Eigen::Index>(sys.dim());
    const auto da = static_cast<Eigen::Index>(aut_dim(sys));
    KKTElement d = kkt_zero(sys);
    d.A = d_aut(sys);
    const Mat ex = (std::acos(-1.0) * ad_matrix(d, sys)).exp();
    Mat th = Mat::Identity(2 * du + da, 2 * du + da);
    th.block(0, 0, du, du) *= -1.0;
    th.block(du + da, du + da, du, du) *= -1.0;
    return (ex - th).norm();
}

Cplx weyl_phase(const Vec& v, const Vec& w) {
    return std::exp(Cplx(0.0, 0.5 * w.dot(v).imag()));
}

double weyl_relation_residual(const Vec& v, const Vec& w, const FockBasis& basis) {
    Mat low = Mat::Zero(basis.dim(), basis.dim());
    for (std::size_t n = 0; n <= 2 && n <= basis.N; ++n) low += basis.degree_projector(n);
    const Mat lhs = weyl(v, basis).matrix * weyl(w, basis).matrix;
    const Mat rhs = weyl_phase(v, w) * weyl(Vec(v + w), basis).matrix;
    return ((lhs - rhs) * low).norm();
}

// canonical unit test pair for Weyl/CCR diagnostics
std::pair<Vec, Vec> probe_vectors(std::size_t m) {
    Vec v = Vec::Zero(m);
    v(0) = 1.0;
    Vec w = Vec::Zero(m);
    if (m >= 2) {
        w(0) = 1.0 / std::sqrt(2.0);
        w(1) = Cplx(0, 1.0 / std::sqrt(2.0));
    } else {
        w(0) = Cplx(0, 1);
    }
    return {v, w};
}

int run_check(const std::string& module, const std::string& type, std::size_t dim,
              std::size_t degree, int trials, double tol, std::uint64_t seed, bool seed_given,
              const std::string& format, const std::string& output) {
    const bool all = module.empty();
    if (!all && module != "jhtriple" && module != "liealg" && module != "fock")
        throw Error(ErrorCode::BadInput, "module must be jhtriple, liealg or fock");
    const bool stochastic = all || module == "jhtriple" || module == "liealg";
    if (stochastic && !seed_given)
        throw Error(ErrorCode::BadInput, "--seed is required for stochastic checks");

    std::vector<CheckRow> rows;
    if (all || module == "jhtriple") {
        Rng rng(seed);
        std::vector<TripleSystem> systems;
        if (type.empty()) {
            systems = {TripleSystem::rect(2, 2), TripleSystem::skew(3), TripleSystem::sym(2),
                       TripleSystem::spin(3)};
        } else {
            const TripleType t = triple_type_from_name(type);
            const std::size_t d = dim ? dim : 3;
            if (t == TripleType::I) systems = {TripleSystem::rect(d, d)};
            else if (t == TripleType::II) systems = {TripleSystem::skew(d)};
            else if (t == TripleType::III) systems = {TripleSystem::sym(d)};
            else systems = {TripleSystem::spin(d)};
        }
        for (const auto& sys : systems) {
            const AxiomReport r = check_axioms(sys, trials, tol, rng);
            const std::string label = sys_label(sys);
            add_check(rows, "jh1 " + label, r.jh1, tol);
            add_check(rows, "jh2 " + label, r.jh2, tol);
            add_check(rows, "jh3 " + label, r.jh3, tol);
        }
    }
    if (all || module == "liealg") {
        Rng rng(seed + 1);
        const TripleSystem sys = TripleSystem::rect(2, 2);
        add_check(rows, "jacobi kkt I(2,2)", jacobi_kkt_residual(sys, trials, rng), tol);
        add_check(rows, "jacobi hat I(2,2)", jacobi_hat_residual(sys, trials, rng), tol);
        add_check(rows, "jacobi motion I(2,2)", jacobi_motion_residual(sys, trials, rng), tol);
        add_check(rows, "cocycle I(2,2)", cocycle_residual(sys, trials, rng), tol);
        // matrix exponential accuracy floor
        add_check(rows, "theta I(2,2)", theta_residual(sys), std::max(tol, 1e-8));
    }
    if (all || module == "fock") {
        const std::size_t m = dim ? dim : 1;
        const std::size_t N = degree ? degree : 40;
        const FockBasis basis(m, N);
        const auto [v, w] = probe_vectors(m);
        const CcrReport ccr = ccr_check(v, w, basis);
        add_check(rows, "ccr lower", ccr.lower_commutator, std::max(tol, 1e-12));
        add_check(rows, "ccr mixed", ccr.mixed_commutator, std::max(tol, 1e-12));
        add_check(rows, "vacuum cyclic", vacuum_characterization(basis) ? 0.0 : 1.0, 0.5);
        // truncation floor of the composition law on low degrees
        add_check(rows, "weyl relation", weyl_relation_residual(v, w, basis),
                  std::max(tol, 1e-6));
    }

    bool all_pass = true;
    for (const CheckRow& r : rows) all_pass = all_pass && r.pass;
    if (format == "json") {
        Json checks = Json::array();
        for (const CheckRow& r : rows)
            checks.push_back(Json{{"name", r.name},
                                  {"residual", r.residual},
                                  {"tol", r.tol},
                                  {"pass", r.pass}});
        emit(Json{{"checks", std::move(checks)}, {"all_pass", all_pass}}.dump(2), output);
    } else {
        std::vector<std::vector<std::string>> t = {{"check", "residual", "tol", "pass"}};
        for (const CheckRow& r : rows)
            t.push_back({r.name, num_str(r.residual), num_str(r.tol), r.pass ? "yes" : "NO"});
        emit(table_rows(t), output);
    }
    return all_pass ? 0 : 1;
}

// ---- crossval ----

int run_crossval(bool flat, std::size_t p, std::size_t q, const std::string& grid_arg,
                 const GramOptions& opt, const std::string& format,
                 const std::string& output) {
    GroupSpec spec;
    if (flat) {
        spec.family = GroupFamily::Flat;
        spec.curvature = Curvature::Flat;
    } else {
        if (p < 1 || q < 1)
            throw Error(ErrorCode::BadInput, "crossval needs --p and --q, or --flat");
        spec.family = GroupFamily::I;
        spec.curvature = Curvature::Domain;
        spec.jplus = IndexSet::Finite(p);
        spec.jminus = IndexSet::Finite(q);
    }
    std::vector<Rat> grid;
    std::stringstream ss(grid_arg);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (!item.empty()) grid.push_back(parse_rat_arg(item, "--grid"));
    }
    if (grid.empty()) throw Error(ErrorCode::BadInput, "--grid needs at least one charge");

    const CrossTable table = cross_validate(spec, Weight{}, grid, opt);
    if (format == "json") {
        emit(cross_table_to_json(table).dump(2), output);
    } else {
        std::vector<std::vector<std::string>> rows = {
            {"c", "inducible", "kernel", "min_eig", "agree"}};
        for (const CrossRow& r : table.rows)
            rows.push_back({rat_str(r.c), r.verdict.inducible ? "yes" : "no",
                            r.kernel_positive ? "positive" : "not_positive",
                            num_str(r.min_eigenvalue), r.agree ? "yes" : "NO"});
        emit(table_rows(rows), output);
    }
    return table.all_agree ? 0 : 1;
}

// ---- fock ----

int run_fock(std::size_t m, std::size_t N, double charge, const std::string& format,
             const std::string& output) {
    if (m < 1) throw Error(ErrorCode::BadInput, "--dim must be at least 1");
    const FockBasis basis(m, N);
    const auto [v, w] = probe_vectors(m);
    const CcrReport ccr = ccr_check(v, w, basis);
    const bool vacuum = vacuum_characterization(basis);
    const double weyl_res = weyl_relation_residual(v, w, basis);
    const Mat H = oscillator_hamiltonian(basis, charge);
    Eigen::SelfAdjointEigenSolver<Mat> es(H);
    std::vector<double> head;
    for (Eigen::Index i = 0; i < es.eigenvalues().size() && head.size() < 5; ++i)
        head.push_back(es.eigenvalues()(i));

    Json j = Json::object();
    j["dim"] = m;
    j["degree"] = N;
    j["dimension"] = basis.dim();
    j["ccr_lower"] = ccr.lower_commutator;
    j["ccr_mixed"] = ccr.mixed_commutator;
    j["vacuum_cyclic"] = vacuum;
    j["weyl_residual"] = weyl_res;
    j["oscillator_head"] = head;
    if (format == "json") {
        emit(j.dump(2), output);
    } else {
        std::vector<std::vector<std::string>> rows;
        for (const auto& [key, value] : j.items())
            rows.push_back({key, value.is_string() ? value.get<std::string>() : value.dump()});
        emit(table_rows(rows), output);
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    if (const char* t = std::getenv("HERMREP_THREADS")) {
        const int n = std::atoi(t);
        if (n > 0) Eigen::setNbThreads(n);
    }

    CLI::App app{"hermitian highest weight representation toolkit"};
    app.require_subcommand(1);

    std::string spec_arg, format = "json", output, max_charge = "3";
    int max_support = 2, max_entry = 3;

    auto* classify_cmd = app.add_subcommand("classify", "verdict for one group/rep pair");
    classify_cmd->add_option("--spec", spec_arg, "inline JSON or @path")->required();
    classify_cmd->add_option("--format", format, "json|table");
    classify_cmd->add_option("--output", output, "write to file instead of stdout");

    auto* enum_cmd = app.add_subcommand("enumerate", "scan the inducible reps over a grid");
    enum_cmd->add_option("--spec", spec_arg, "inline JSON or @path (group part is used)")
        ->required();
    enum_cmd->add_option("--max-charge", max_charge, "charge bound (rational)");
    enum_cmd->add_option("--max-support", max_support, "weight support bound");
    enum_cmd->add_option("--max-entry", max_entry, "weight entry bound");
    enum_cmd->add_option("--format", format, "json|table");
    enum_cmd->add_option("--output", output, "write to file instead of stdout");

    std::string family = "I", charge = "0", expect;
    std::size_t p = 0, q = 0, n = 0;
    GramOptions gopt;
    bool seed_given = false;
    std::uint64_t seed = 0;

    auto* verify_cmd = app.add_subcommand("verify-kernel", "Gram positivity of the kernel");
    verify_cmd->add_option("--family", family, "I|II|III");
    verify_cmd->add_option("--p", p, "rows (family I)");
    verify_cmd->add_option("--q", q, "cols (family I)");
    verify_cmd->add_option("--n", n, "size (families II/III)");
    verify_cmd->add_option("--charge", charge, "central charge (rational)")->required();
    verify_cmd->add_option("--samples", gopt.samples, "sample count");
    verify_cmd->add_option("--seed", seed, "RNG seed")->required();
    verify_cmd->add_option("--tol", gopt.tol, "eigenvalue tolerance");
    verify_cmd->add_option("--radius", gopt.radius, "sampling radius");
    verify_cmd->add_option("--expect", expect, "positive|not_positive: exit 1 on mismatch");
    verify_cmd->add_option("--format", format, "json|table");
    verify_cmd->add_option("--output", output, "write to file instead of stdout");

    std::string module, type;
    std::size_t dim = 0, degree = 0;
    int trials = 100;
    double tol = 1e-10;
    bool check_all = false;

    auto* check_cmd = app.add_subcommand("check", "residual suites for the algebraic layers");
    check_cmd->add_flag("--all", check_all, "run every module");
    check_cmd->add_option("--module", module, "jhtriple|liealg|fock");
    check_cmd->add_option("--type", type, "triple type filter (jhtriple)");
    check_cmd->add_option("--dim", dim, "size for jhtriple, mode count for fock");
    check_cmd->add_option("--degree", degree, "truncation degree for fock");
    check_cmd->add_option("--trials", trials, "samples per identity");
    check_cmd->add_option("--tol", tol, "target residual bound");
    check_cmd->add_option("--seed", seed, "RNG seed")->each([&](const std::string&) {
        seed_given = true;
    });
    check_cmd->add_option("--format", format, "json|table");
    check_cmd->add_option("--output", output, "write to file instead of stdout");

    bool flat = false;
    std::string grid;

    auto* crossval_cmd =
        app.add_subcommand("crossval", "classifier verdicts against kernel positivity");
    crossval_cmd->add_flag("--flat", flat, "flat case instead of a rectangular pair");
    crossval_cmd->add_option("--family", family, "I (rectangular) for now");
    crossval_cmd->add_option("--p", p, "rows");
    crossval_cmd->add_option("--q", q, "cols");
    crossval_cmd->add_option("--grid", grid, "comma-separated charges")->required();
    crossval_cmd->add_option("--samples", gopt.samples, "sample count");
    crossval_cmd->add_option("--seed", seed, "RNG seed")->required();
    crossval_cmd->add_option("--tol", gopt.tol, "eigenvalue tolerance");
    crossval_cmd->add_option("--radius", gopt.radius, "sampling radius");
    crossval_cmd->add_option("--format", format, "json|table");
    crossval_cmd->add_option("--output", output, "write to file instead of stdout");

    double fock_charge = 0.0;

    auto* fock_cmd = app.add_subcommand("fock", "truncated Fock space diagnostics");
    fock_cmd->add_option("--dim", dim, "mode count")->required();
    fock_cmd->add_option("--degree", degree, "truncation degree")->required();
    fock_cmd->add_option("--charge", fock_charge, "oscillator charge");
    fock_cmd->add_option("--format", format, "json|table");
    fock_cmd->add_option("--output", output, "write to file instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        check_format(format);
        gopt.seed = seed;
        if (classify_cmd->parsed()) return run_classify(spec_arg, format, output);
        if (enum_cmd->parsed())
            return run_enumerate(spec_arg, max_charge, max_support, max_entry, format, output);
        if (verify_cmd->parsed())
            return run_verify(family, p, q, n, charge, gopt, expect, format, output);
        if (check_cmd->parsed()) {
            if (check_all && !module.empty())
                throw Error(ErrorCode::BadInput, "give --all or --module, not both");
            if (!check_all && module.empty())
                throw Error(ErrorCode::BadInput, "give --all or --module");
            return run_check(module, type, dim, degree, trials, tol, seed, seed_given, format,
                             output);
        }
        if (crossval_cmd->parsed()) {
            if (!flat && family != "I")
                throw Error(ErrorCode::BadInput, "crossval covers family I and --flat");
            return run_crossval(flat, p, q, grid, gopt, format, output);
        }
        if (fock_cmd->parsed()) return run_fock(dim, degree, fock_charge, format, output);
    } catch (const Error& e) {
        Json err{{"error", error_code_name(e.code())}, {"message", e.message()}};
        if (!e.pointer().empty()) err["pointer"] = e.pointer();
        std::cerr << err.dump() << "\n";
        return e.code() == ErrorCode::NumericFailure ? 1 : 2;
    } catch (const std::exception& e) {
        std::cerr << Json{{"error", "internal"}, {"message", e.what()}}.dump() << "\n";
        return 1;
    }
    return 2;
}
