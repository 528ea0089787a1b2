#include <hermrep/weights.hpp>

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

namespace hermrep {

Rat parse_rat(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty rational literal");
    auto parse_int = [](const std::string& t) -> Int {
        if (t.empty() || (t.size() == 1 && (t[0] == '-' || t[0] == '+')))
            throw std::invalid_argument("bad integer literal");
        std::size_t start = (t[0] == '-' || t[0] == '+') ? 1 : 0;
        for (std::size_t i = start; i < t.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(t[i])))
                throw std::invalid_argument("bad integer literal: " + t);
        return Int(t);
    };
    auto slash = s.find('/');
    if (slash == std::string::npos) return Rat(parse_int(s));
    Int num = parse_int(s.substr(0, slash));
    Int den = parse_int(s.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator: " + s);
    return Rat(num, den);
}

std::string rat_str(const Rat& r) {
    std::ostringstream os;
    os << numerator(r);
    if (denominator(r) != 1) os << '/' << denominator(r);
    return os.str();
}

Weight::Weight(std::map<Index, Rat> entries) {
    for (auto& [i, v] : entries) {
        if (v == 0) continue;
        if (denominator(v) > 2)
            throw Error(ErrorCode::BadInput,
                        "weight entry " + rat_str(v) + " has denominator > 2");
        if (denominator(v) == 2) den_ = 2;
        entries_.emplace(i, v);
    }
}

Rat Weight::at(Index i) const {
    auto it = entries_.find(i);
    return it == entries_.end() ? Rat(0) : it->second;
}

std::set<Index> Weight::support() const {
    std::set<Index> s;
    for (auto& [i, v] : entries_) s.insert(i);
    return s;
}

SignedPerm SignedPerm::transposition(Index a, Index b) {
    SignedPerm w;
    if (a != b) { w.perm[a] = b; w.perm[b] = a; }
    return w;
}

SignedPerm SignedPerm::flip(Index a) {
    SignedPerm w;
    w.flips.insert(a);
    return w;
}

Index SignedPerm::image(Index i) const {
    auto it = perm.find(i);
    return it == perm.end() ? i : it->second;
}

SignedPerm SignedPerm::after(const SignedPerm& other) const {
    SignedPerm r;
    std::set<Index> touched;
    for (auto& [i, j] : other.perm) { touched.insert(i); (void)j; }
    for (auto& [i, j] : perm) { touched.insert(i); (void)j; }
    for (Index i : touched) {
        Index j = image(other.image(i));
        if (j != i) r.perm[i] = j;
    }
    // sign acting at position i of the composite: flip of other at i, then
    // flip of this at other(i)
    std::set<Index> sign_support = other.flips;
    for (auto& [i, j] : other.perm) { (void)j; sign_support.insert(i); }
    for (Index i : flips) sign_support.insert(i);
    for (Index i : sign_support) {
        int s = other.sign(i) * sign(other.image(i));
        if (s == -1) r.flips.insert(i);
    }
    // indices untouched by other but flipped by this
    for (Index i : flips)
        if (!other.perm.count(i) && !other.flips.count(i)) r.flips.insert(i);
    return r;
}

Weight apply_weyl(const SignedPerm& w, const Weight& lam, WeylType t) {
    if (t == WeylType::A && !w.flips.empty())
        throw Error(ErrorCode::BadInput, "type A admits no sign changes");
    if (t == WeylType::D && w.flips.size() % 2 != 0)
        throw Error(ErrorCode::BadInput, "type D requires an even number of sign changes");
    std::map<Index, Rat> out;
    std::set<Index> seen;
    for (auto& [i, v] : lam.entries()) {
        Index j = w.image(i);
        if (!seen.insert(j).second)
            throw Error(ErrorCode::BadInput, "signed permutation is not injective");
        out[j] = Rat(w.sign(i)) * v;
    }
    return Weight(std::move(out));
}

namespace {

// every injective placement of the support values into the window,
// optionally decorated with sign patterns
void enumerate_orbit(const std::vector<Rat>& values, WeylType t,
                     const std::vector<Index>& window, std::set<Weight>& out) {
    const std::size_t k = values.size(), n = window.size();
    std::vector<std::size_t> slot(k);
    std::vector<bool> used(n, false);
    // D: a flip on an empty window slot absorbs parity, so any pattern on the
    // placed entries is reachable unless the support fills the window
    const bool even_only = (t == WeylType::D && k == n);
    auto emit = [&]() {
        const std::uint64_t patterns = (t == WeylType::A) ? 1 : (1ull << k);
        for (std::uint64_t mask = 0; mask < patterns; ++mask) {
            if (even_only && __builtin_popcountll(mask) % 2 != 0) continue;
            std::map<Index, Rat> e;
            for (std::size_t i = 0; i < k; ++i) {
                Rat v = values[i];
                if (mask >> i & 1) v = -v;
                e[window[slot[i]]] = v;
            }
            out.insert(Weight(std::move(e)));
        }
    };
    auto rec = [&](auto&& self, std::size_t i) -> void {
        if (i == k) { emit(); return; }
        for (std::size_t s = 0; s < n; ++s) {
            if (used[s]) continue;
            used[s] = true;
            slot[i] = s;
            self(self, i + 1);
            used[s] = false;
        }
    };
    rec(rec, 0);
}

} // namespace

std::set<Weight> orbit(const Weight& lam, WeylType t, const std::vector<Index>& window) {
    std::set<Index> win(window.begin(), window.end());
    if (win.size() != window.size())
        throw Error(ErrorCode::BadInput, "window has repeated indices");
    for (auto& [i, v] : lam.entries()) {
        (void)v;
        if (!win.count(i))
            throw Error(ErrorCode::BadInput, "window does not contain the support");
    }
    std::vector<Rat> values;
    for (auto& [i, v] : lam.entries()) { (void)i; values.push_back(v); }
    std::set<Weight> out;
    enumerate_orbit(values, t, window, out);
    return out;
}

namespace {

// Exact feasibility test for x ∈ conv(V): phase-1 simplex with Bland's rule
// on Σθ_v·v = x, Σθ_v = 1, θ ≥ 0.
bool in_hull(const std::vector<Rat>& x, const std::vector<std::vector<Rat>>& V) {
    if (V.empty()) return false;
    const std::size_t n = x.size(), rows = n + 1, m = V.size();
    // tableau columns: m real vars, rows artificial vars, then rhs
    std::vector<std::vector<Rat>> T(rows, std::vector<Rat>(m + rows + 1, Rat(0)));
    for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t j = 0; j < m; ++j) T[r][j] = (r < n) ? V[j][r] : Rat(1);
        T[r][m + rows] = (r < n) ? x[r] : Rat(1);
        if (T[r][m + rows] < 0)
            for (auto& c : T[r]) c = -c;
        T[r][m + r] = 1;
    }
    std::vector<std::size_t> basis(rows);
    for (std::size_t r = 0; r < rows; ++r) basis[r] = m + r;
    // minimize the artificial sum: reduced cost of column j is Σ_r T[r][j]
    // restricted to rows whose basic variable is artificial
    auto reduced = [&](std::size_t j) {
        Rat c(0);
        for (std::size_t r = 0; r < rows; ++r)
            if (basis[r] >= m) c += T[r][j];
        return c;
    };
    for (;;) {
        // scan real columns only: an artificial that has left never re-enters
        std::size_t enter = m;
        for (std::size_t j = 0; j < m; ++j) {
            bool basic = false;
            for (std::size_t r = 0; r < rows; ++r)
                if (basis[r] == j) { basic = true; break; }
            if (basic) continue;
            if (reduced(j) > 0) { enter = j; break; } // Bland: smallest index
        }
        if (enter == m) break;
        std::size_t leave = rows;
        Rat best(0);
        for (std::size_t r = 0; r < rows; ++r) {
            if (T[r][enter] <= 0) continue;
            Rat ratio = T[r][m + rows] / T[r][enter];
            if (leave == rows || ratio < best ||
                (ratio == best && basis[r] < basis[leave])) {
                leave = r;
                best = ratio;
            }
        }
        if (leave == rows) break; // unbounded cannot occur in phase 1
        Rat piv = T[leave][enter];
        for (auto& c : T[leave]) c /= piv;
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == leave || T[r][enter] == 0) continue;
            Rat f = T[r][enter];
            for (std::size_t j = 0; j <= m + rows; ++j) T[r][j] -= f * T[leave][j];
        }
        basis[leave] = enter;
    }
    Rat art(0);
    for (std::size_t r = 0; r < rows; ++r)
        if (basis[r] >= m) art += T[r][m + rows];
    return art == 0;
}

} // namespace

namespace {

// Orbit representative of a scaled lattice point: sort for A, sorted absolute
// values for C, and for D the same with the sign parity parked on the smallest
// entry (a zero absorbs any parity). conv(𝒲λ) is 𝒲-invariant, so hull
// membership is constant on these classes.
std::vector<long long> hull_class(std::vector<long long> x, WeylType t) {
    if (t != WeylType::A) {
        int negs = 0;
        bool has_zero = false;
        for (auto& v : x) {
            if (v < 0) { ++negs; v = -v; }
            if (v == 0) has_zero = true;
        }
        std::sort(x.begin(), x.end(), std::greater<long long>());
        if (t == WeylType::D && x.size() >= 2 && !has_zero && negs % 2 != 0)
            x.back() = -x.back();
        if (t == WeylType::D && x.size() == 1) x[0] = negs ? -x[0] : x[0];
    } else {
        std::sort(x.begin(), x.end(), std::greater<long long>());
    }
    return x;
}

} // namespace

std::set<Weight> weight_set(const Weight& lam, WeylType t, const std::vector<Index>& window) {
    const std::size_t n = window.size();
    std::set<Weight> orb = orbit(lam, t, window);
    std::vector<std::vector<Rat>> V;
    for (const Weight& w : orb) {
        std::vector<Rat> v(n);
        for (std::size_t i = 0; i < n; ++i) v[i] = w.at(window[i]);
        V.push_back(std::move(v));
    }
    // scan in integers: clear the common denominator, step offsets by den.
    // the box has Θ(range^n) lattice points, so any input that could
    // overflow the scaled entries would never finish enumerating anyway
    auto scaled = [](const Rat& v, long long den) {
        const Int s = numerator(v) * (den / denominator(v).convert_to<long long>());
        if (abs(s) > (Int(1) << 40))
            throw Error(ErrorCode::BadInput, "weight entries too large to enumerate");
        return s.convert_to<long long>();
    };
    long long den = 1;
    for (std::size_t i = 0; i < n; ++i)
        den = std::lcm(den, denominator(lam.at(window[i])).convert_to<long long>());
    std::vector<long long> lo(n), hi(n), base(n);
    for (std::size_t i = 0; i < n; ++i) {
        base[i] = scaled(lam.at(window[i]), den);
        lo[i] = hi[i] = scaled(V[0][i], den);
        for (auto& v : V) {
            const long long s = scaled(v[i], den);
            lo[i] = std::min(lo[i], s);
            hi[i] = std::max(hi[i], s);
        }
    }
    // lattice of type t on the window: integer offsets from λ, with
    //   A: zero offset sum; C/D (n ≥ 2): even offset sum;
    //   C (n = 1): even offset; D (n = 1): trivial lattice
    std::set<Weight> out;
    std::vector<long long> x(n);
    std::map<std::vector<long long>, bool> memo;
    auto member = [&](const std::vector<long long>& pt) {
        const auto cls = hull_class(pt, t);
        auto it = memo.find(cls);
        if (it != memo.end()) return it->second;
        std::vector<Rat> xr(n);
        for (std::size_t j = 0; j < n; ++j) xr[j] = Rat(cls[j], den);
        const bool in = in_hull(xr, V);
        memo.emplace(cls, in);
        return in;
    };
    auto rec = [&](auto&& self, std::size_t i, long long offset_sum) -> void {
        if (i == n) {
            switch (t) {
                case WeylType::A:
                    if (offset_sum != 0) return;
                    break;
                case WeylType::C:
                    if (offset_sum % 2 != 0) return;
                    break;
                case WeylType::D:
                    if (n >= 2 && offset_sum % 2 != 0) return;
                    if (n == 1 && offset_sum != 0) return;
                    break;
            }
            if (!member(x)) return;
            std::map<Index, Rat> e;
            for (std::size_t j = 0; j < n; ++j)
                if (x[j] != 0) e[window[j]] = Rat(x[j], den);
            out.insert(Weight(std::move(e)));
            return;
        }
        const long long d = lo[i] - base[i];
        for (long long k = d / den + (d % den > 0 ? 1 : 0); base[i] + k * den <= hi[i]; ++k) {
            x[i] = base[i] + k * den;
            self(self, i + 1, offset_sum + k);
        }
    };
    rec(rec, 0, 0);
    return out;
}

Weight canonical_form(const Weight& lam, WeylType t) {
    std::vector<Rat> values;
    for (auto& [i, v] : lam.entries()) {
        (void)i;
        values.push_back(t == WeylType::A ? v : Rat(abs(v)));
    }
    std::sort(values.begin(), values.end(), std::greater<Rat>());
    std::map<Index, Rat> e;
    for (std::size_t i = 0; i < values.size(); ++i) e[Index(i) + 1] = values[i];
    return Weight(std::move(e));
}

bool equivalent_weights(const Weight& lam, const Weight& mu, WeylType t) {
    return canonical_form(lam, t) == canonical_form(mu, t);
}

std::vector<Rat> orbit_average(const std::vector<Rat>& x) {
    if (x.empty()) throw Error(ErrorCode::BadInput, "orbit_average of an empty vector");
    Rat s(0);
    for (auto& v : x) s += v;
    Rat mean = s / Rat(x.size());
    return std::vector<Rat>(x.size(), mean);
}

SupportStats support_stats(const Weight& lam, const IndexSet& ambient) {
    SupportStats st{ExtendedNat::finite(0), ExtendedNat::finite(0),
                    ExtendedNat::finite(0), Rat(0), Rat(0)};
    const std::size_t k = lam.support_size();
    st.supp = ExtendedNat::finite(k);
    std::uint64_t pos = 0, neg = 0;
    const bool co_support_nonempty =
        !ambient.finite || ambient.n > k;
    bool first = true;
    for (auto& [i, v] : lam.entries()) {
        (void)i;
        if (v > 0) ++pos; else ++neg;
        if (first) { st.max = st.min = v; first = false; }
        else {
            st.max = std::max(st.max, v);
            st.min = std::min(st.min, v);
        }
    }
    st.supp_pos = ExtendedNat::finite(pos);
    st.supp_neg = ExtendedNat::finite(neg);
    if (co_support_nonempty || first) {
        if (first) { st.max = Rat(0); st.min = Rat(0); }
        else {
            st.max = std::max(st.max, Rat(0));
            st.min = std::min(st.min, Rat(0));
        }
    }
    return st;
}

} // namespace hermrep
