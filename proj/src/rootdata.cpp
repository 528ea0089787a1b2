#include <hermrep/rootdata.hpp>

#include <algorithm>
#include <cmath>

namespace hermrep {

std::string family_name(Family f) {
    switch (f) {
        case Family::I: return "I";
        case Family::II: return "II";
        case Family::III: return "III";
        case Family::IV: return "IV";
    }
    return "?";
}

Family family_from_name(const std::string& s) {
    if (s == "I") return Family::I;
    if (s == "II") return Family::II;
    if (s == "III") return Family::III;
    if (s == "IV") return Family::IV;
    throw Error(ErrorCode::BadInput, "unknown family: " + s);
}

Root Root::diff(Index j, Index k) {
    if (j == k) throw Error(ErrorCode::BadInput, "ε_j−ε_k needs j ≠ k");
    Root r;
    r.terms = {{j, 1}, {k, -1}};
    std::sort(r.terms.begin(), r.terms.end());
    return r;
}

Root Root::sum(Index j, Index k) {
    if (j == k) return twice(j);
    Root r;
    r.terms = {{j, 1}, {k, 1}};
    std::sort(r.terms.begin(), r.terms.end());
    return r;
}

Root Root::twice(Index j) {
    Root r;
    r.terms = {{j, 2}};
    return r;
}

Root Root::negated() const {
    Root r = *this;
    for (auto& [i, c] : r.terms) { (void)i; c = -c; }
    return r;
}

int Root::coeff(Index j) const {
    for (auto& [i, c] : terms)
        if (i == j) return c;
    return 0;
}

std::string Root::str() const {
    std::string s;
    for (auto& [i, c] : terms) {
        std::string base = "e" + std::to_string(i);
        if (c == 1) s += s.empty() ? base : "+" + base;
        else if (c == -1) s += "-" + base;
        else if (c == 2) s += s.empty() ? "2" + base : "+2" + base;
        else if (c == -2) s += "-2" + base;
    }
    return s;
}

std::string sector_name(Sector s) {
    switch (s) {
        case Sector::k: return "k";
        case Sector::p_plus: return "p+";
        case Sector::p_minus: return "p-";
    }
    return "?";
}

namespace {

void check_unique(const std::vector<Index>& v, const char* what) {
    std::set<Index> s(v.begin(), v.end());
    if (s.size() != v.size())
        throw Error(ErrorCode::BadInput, std::string(what) + " has repeated indices");
    if (v.empty())
        throw Error(ErrorCode::BadInput, std::string(what) + " is empty");
}

} // namespace

MatrixModel MatrixModel::type_I(std::vector<Index> jplus, std::vector<Index> jminus,
                                bool compact_form) {
    check_unique(jplus, "J+");
    check_unique(jminus, "J-");
    for (Index j : jplus)
        if (std::count(jminus.begin(), jminus.end(), j))
            throw Error(ErrorCode::BadInput, "J+ and J- overlap");
    MatrixModel m;
    m.family = Family::I;
    m.jplus = std::move(jplus);
    m.jminus = std::move(jminus);
    m.compact_form = compact_form;
    return m;
}

MatrixModel MatrixModel::type_II(std::vector<Index> window, bool compact_form) {
    check_unique(window, "window");
    MatrixModel m;
    m.family = Family::II;
    m.window = std::move(window);
    m.compact_form = compact_form;
    return m;
}

MatrixModel MatrixModel::type_III(std::vector<Index> window, bool compact_form) {
    check_unique(window, "window");
    MatrixModel m;
    m.family = Family::III;
    m.window = std::move(window);
    m.compact_form = compact_form;
    return m;
}

MatrixModel MatrixModel::type_IV(std::vector<Index> window, Index j0, bool compact_form) {
    check_unique(window, "window");
    if (!std::count(window.begin(), window.end(), j0))
        throw Error(ErrorCode::BadInput, "j0 must lie in the window");
    MatrixModel m;
    m.family = Family::IV;
    m.window = std::move(window);
    m.j0 = j0;
    m.compact_form = compact_form;
    return m;
}

std::size_t MatrixModel::matrix_size() const {
    if (family == Family::I) return jplus.size() + jminus.size();
    return 2 * window.size();
}

std::size_t MatrixModel::pos(Index j) const {
    if (family == Family::I) {
        auto it = std::find(jplus.begin(), jplus.end(), j);
        if (it != jplus.end()) return std::size_t(it - jplus.begin());
        it = std::find(jminus.begin(), jminus.end(), j);
        if (it != jminus.end()) return jplus.size() + std::size_t(it - jminus.begin());
    } else {
        auto it = std::find(window.begin(), window.end(), j);
        if (it != window.end()) return std::size_t(it - window.begin());
    }
    throw Error(ErrorCode::BadInput, "index " + std::to_string(j) + " not in the model");
}

Rat MatrixModel::eps_of_minus_i_d(Index j) const {
    switch (family) {
        case Family::I:
            return std::count(jplus.begin(), jplus.end(), j) ? Rat(1, 2) : Rat(-1, 2);
        case Family::II:
        case Family::III:
            return Rat(1, 2);
        case Family::IV:
            return j == j0 ? Rat(1) : Rat(0);
    }
    return Rat(0);
}

Mat MatrixModel::d_matrix() const {
    const std::size_t N = matrix_size();
    Mat d = Mat::Zero(N, N);
    const Cplx I(0, 1);
    if (family == Family::I) {
        for (std::size_t r = 0; r < jplus.size(); ++r) d(r, r) = I * 0.5;
        for (std::size_t r = jplus.size(); r < N; ++r) d(r, r) = -I * 0.5;
        return d;
    }
    const std::size_t n = window.size();
    for (std::size_t r = 0; r < n; ++r) {
        Cplx h = (family == Family::IV) ? (window[r] == j0 ? I : Cplx(0)) : I * 0.5;
        d(r, r) = h;
        d(n + r, n + r) = -h;
    }
    return d;
}

Mat MatrixModel::form_matrix() const {
    const std::size_t N = matrix_size();
    Mat J = Mat::Identity(N, N);
    if (compact_form) return J;
    if (family == Family::I) {
        for (std::size_t r = jplus.size(); r < N; ++r) J(r, r) = -1;
    } else if (family == Family::II || family == Family::III) {
        const std::size_t n = window.size();
        for (std::size_t r = n; r < N; ++r) J(r, r) = -1;
    } else {
        const std::size_t n = window.size(), p0 = pos(j0);
        J(p0, p0) = -1;
        J(n + p0, n + p0) = -1;
    }
    return J;
}

Mat MatrixModel::adjoint(const Mat& x) const {
    Mat J = form_matrix();
    return J * x.adjoint() * J;
}

Mat MatrixModel::root_vector(const Root& alpha) const {
    const std::size_t N = matrix_size();
    Mat x = Mat::Zero(N, N);
    if (alpha.terms.size() == 1) {
        // ±2ε_j exists only in the symplectic family
        auto [j, c] = alpha.terms[0];
        if (family != Family::III || (c != 2 && c != -2))
            throw Error(ErrorCode::BadInput, "root " + alpha.str() + " not in the model");
        const std::size_t n = window.size(), a = pos(j);
        if (c == 2) x(a, n + a) = 1;
        else x(n + a, a) = 1;
        return x;
    }
    if (alpha.terms.size() != 2)
        throw Error(ErrorCode::BadInput, "root " + alpha.str() + " not in the model");
    auto [j, cj] = alpha.terms[0];
    auto [k, ck] = alpha.terms[1];
    if (cj * ck == -1) {
        // ε_j − ε_k, possibly written the other way around
        if (cj == -1) { std::swap(j, k); std::swap(cj, ck); }
        if (family == Family::I) {
            x(pos(j), pos(k)) = 1;
            return x;
        }
        const std::size_t n = window.size(), a = pos(j), b = pos(k);
        double s = 1;
        if (family == Family::IV && (j == j0) != (k == j0)) s = -1;
        x(a, b) = 1;
        x(n + b, n + a) = -s;
        return x;
    }
    if (cj * ck == 1 && family != Family::I) {
        const bool positive = cj == 1; // else −ε_j−ε_k
        const std::size_t n = window.size(), a = pos(j), b = pos(k);
        std::size_t ra = a, ca = b, rb = b, cb = a;
        if (!positive) { ra += n; rb += n; }
        else { ca += n; cb += n; }
        switch (family) {
            case Family::III:
                x(ra, ca) = 1;
                x(rb, cb) = 1;
                return x;
            case Family::II:
                x(ra, ca) = 1;
                x(rb, cb) = -1;
                return x;
            case Family::IV: {
                double s = ((j == j0) != (k == j0)) ? 1.0 : -1.0; // −s_j·s_k
                x(ra, ca) = 1;
                x(rb, cb) = s;
                return x;
            }
            default: break;
        }
    }
    throw Error(ErrorCode::BadInput, "root " + alpha.str() + " not in the model");
}

Cplx MatrixModel::eval_root(const Root& alpha, const Mat& h) const {
    Cplx v = 0;
    for (auto& [j, c] : alpha.terms) v += double(c) * h(pos(j), pos(j));
    return v;
}

namespace {

Sector sector_of(const MatrixModel& m, const Root& alpha) {
    Rat v(0);
    for (auto& [j, c] : alpha.terms) v += Rat(c) * m.eps_of_minus_i_d(j);
    if (v == 0) return Sector::k;
    if (v == 1) return Sector::p_plus;
    if (v == -1) return Sector::p_minus;
    throw Error(ErrorCode::NumericFailure, "root " + alpha.str() + " has α(−i·d) ∉ {0,±1}");
}

void emit(std::vector<RootClassification>& out, const MatrixModel& m, const Root& r) {
    Sector s = sector_of(m, r);
    bool compact = m.compact_form || s == Sector::k;
    out.push_back({r, s, compact});
}

} // namespace

std::vector<RootClassification> roots_of(const MatrixModel& model) {
    std::vector<RootClassification> out;
    if (model.family == Family::I) {
        std::vector<Index> all = model.jplus;
        all.insert(all.end(), model.jminus.begin(), model.jminus.end());
        for (Index j : all)
            for (Index k : all)
                if (j != k) emit(out, model, Root::diff(j, k));
    } else {
        const auto& w = model.window;
        for (std::size_t a = 0; a < w.size(); ++a)
            for (std::size_t b = a + 1; b < w.size(); ++b) {
                emit(out, model, Root::diff(w[a], w[b]));
                emit(out, model, Root::diff(w[b], w[a]));
                emit(out, model, Root::sum(w[a], w[b]));
                emit(out, model, Root::sum(w[a], w[b]).negated());
            }
        if (model.family == Family::III)
            for (Index j : w) {
                emit(out, model, Root::twice(j));
                emit(out, model, Root::twice(j).negated());
            }
    }
    std::sort(out.begin(), out.end(), [](const RootClassification& a,
                                         const RootClassification& b) {
        if (a.sector != b.sector) return int(a.sector) < int(b.sector);
        return a.root < b.root;
    });
    return out;
}

std::vector<int> coroot(const Root& alpha, const std::vector<Index>& window) {
    std::vector<int> v(window.size(), 0);
    for (auto& [j, c] : alpha.terms) {
        auto it = std::find(window.begin(), window.end(), j);
        if (it == window.end())
            throw Error(ErrorCode::BadInput, "root index not in window");
        // (ε_j±ε_k)ˇ = E_j±E_k and (2ε_j)ˇ = E_j: halve the ±2 coefficient
        v[std::size_t(it - window.begin())] = (c == 2 || c == -2) ? c / 2 : c;
    }
    return v;
}

int compactness_sign(const Root& alpha, const MatrixModel& model) {
    Mat x = model.root_vector(alpha);
    Mat xs = model.adjoint(x);
    Mat h = x * xs - xs * x;
    Cplx v = model.eval_root(alpha, h);
    if (std::abs(v.imag()) > 1e-9)
        throw Error(ErrorCode::NumericFailure, "bracket pairing is not real");
    if (v.real() > 1e-9) return 1;
    if (v.real() < -1e-9) return -1;
    return 0; // degenerate bracket
}

Mat torus_average(const Mat& x, const MatrixModel& model, int quadrature_points) {
    if (quadrature_points < 4)
        throw Error(ErrorCode::BadInput, "torus average needs at least 4 quadrature points");
    const std::size_t N = model.matrix_size();
    if (x.rows() != Eigen::Index(N) || x.cols() != Eigen::Index(N))
        throw Error(ErrorCode::BadInput, "matrix does not fit the model");
    Mat d = model.d_matrix();
    Mat acc = Mat::Zero(N, N);
    for (int k = 0; k < quadrature_points; ++k) {
        const double t = 2.0 * M_PI * k / quadrature_points;
        // d is diagonal, so exp(t·ad d) acts entrywise
        Vec e(N);
        for (std::size_t r = 0; r < N; ++r) e(r) = std::exp(t * d(r, r));
        acc += e.asDiagonal() * x * e.asDiagonal().inverse();
    }
    return acc / double(quadrature_points);
}

} // namespace hermrep
