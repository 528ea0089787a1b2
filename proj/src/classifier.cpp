#include <hermrep/classifier.hpp>

#include <algorithm>
#include <functional>

namespace hermrep {

const char* family_name(GroupFamily f) {
    switch (f) {
        case GroupFamily::I: return "I";
        case GroupFamily::II: return "II";
        case GroupFamily::III: return "III";
        case GroupFamily::IV: return "IV";
        case GroupFamily::Flat: return "Flat";
    }
    return "?";
}

const char* curvature_name(Curvature c) {
    switch (c) {
        case Curvature::Domain: return "domain";
        case Curvature::Cdual: return "cdual";
        case Curvature::Flat: return "flat";
    }
    return "?";
}

const char* bounded_name(Bounded b) {
    switch (b) {
        case Bounded::Yes: return "yes";
        case Bounded::No: return "no";
        case Bounded::NotApplicable: return "n/a";
    }
    return "?";
}

namespace {

void require_support_inside(const Weight& w, const IndexSet& J, const char* pointer) {
    for (const auto& [i, v] : w.entries()) {
        (void)v;
        if (i < 1 || (J.finite && i > static_cast<Index>(J.n)))
            throw Error(ErrorCode::BadInput, "weight support leaves the index set", pointer);
    }
}

void require_integral(const Weight& w, const char* pointer) {
    if (w.den() != 1)
        throw Error(ErrorCode::BadInput, "weight entries must be integers", pointer);
}

void require_integral_charge(const Rat& c) {
    if (!is_integer(c))
        throw Error(ErrorCode::BadInput, "charge must be an integer for this family", "/c");
}

bool entries_nonneg(const Weight& w) {
    for (const auto& [i, v] : w.entries()) {
        (void)i;
        if (v < 0) return false;
    }
    return true;
}

bool entries_nonpos(const Weight& w) {
    for (const auto& [i, v] : w.entries()) {
        (void)i;
        if (v > 0) return false;
    }
    return true;
}

ExtendedNat cosupport(const IndexSet& J, std::size_t supp) {
    if (!J.finite) return ExtendedNat::infinity();
    return ExtendedNat::finite(J.n - supp);
}

// lambda - s on every index of the ambient set; co-support indices pick up
// the value -s, so a nonzero shift needs a finite ambient set.
Weight shift_on(const Weight& w, const IndexSet& J, const Rat& s) {
    if (s == 0) return w;
    std::map<Index, Rat> e;
    for (Index i = 1; i <= static_cast<Index>(J.n); ++i) {
        const Rat v = w.at(i) - s;
        if (v != 0) e[i] = v;
    }
    return Weight(std::move(e));
}

// two largest values of the weight over the ambient set; the co-support
// feeds in up to two zeros (an anti-dominance pair can sit entirely off the
// support)
std::pair<Rat, Rat> top_two(const Weight& w, const IndexSet& J) {
    std::vector<Rat> vals;
    vals.reserve(w.support_size() + 2);
    for (const auto& [i, v] : w.entries()) {
        (void)i;
        vals.push_back(v);
    }
    const ExtendedNat co = cosupport(J, w.support_size());
    const std::uint64_t zeros = co.inf ? 2 : std::min<std::uint64_t>(co.v, 2);
    for (std::uint64_t k = 0; k < zeros; ++k) vals.push_back(Rat(0));
    std::sort(vals.begin(), vals.end(), std::greater<Rat>());
    return {vals[0], vals[1]};
}

std::string nat_str(std::size_t n) { return std::to_string(n); }

Verdict violated(std::string condition, std::string tag, std::string text) {
    Verdict v;
    v.inducible = false;
    v.violated_condition = std::move(condition);
    v.reason_tag = std::move(tag);
    v.reason = std::move(text);
    return v;
}

Verdict domain_I_infinite(const GroupSpec& spec, const RepData& rep) {
    (void)spec;
    require_integral(rep.lambda_plus, "/lambda_plus");
    require_integral(rep.lambda_minus, "/lambda_minus");
    require_integral_charge(rep.c);
    if (!entries_nonneg(rep.lambda_plus))
        return violated("lambda_plus_sign", "iinf_ladder",
                        "sign precondition fails: lambda+ must be >= 0");
    if (!entries_nonpos(rep.lambda_minus))
        return violated("lambda_minus_sign", "iinf_ladder",
                        "sign precondition fails: lambda- must be <= 0");
    const std::size_t a = rep.lambda_plus.support_size() + rep.lambda_minus.support_size();
    Verdict v;
    v.inducible = rep.c >= Rat(a);
    v.reason_tag = "iinf_ladder";
    v.reason = v.inducible ? "charge reaches the ladder base |supp(lambda+)| + |supp(lambda-)|"
                           : "charge below the ladder base |supp(lambda+)| + |supp(lambda-)|";
    v.parameters = {{"a", nat_str(a)},
                    {"supp_plus", nat_str(rep.lambda_plus.support_size())},
                    {"supp_minus", nat_str(rep.lambda_minus.support_size())}};
    return v;
}

Verdict domain_I_finite(const GroupSpec& spec, const RepData& rep) {
    // Infinite sides force the extreme value 0: anything of the wrong sign
    // there leaves the shifted weight with infinite support.
    if (!spec.jplus.finite && !entries_nonneg(rep.lambda_plus))
        return violated("lambda_plus_sign", "ifin_range",
                        "negative entries on an infinite side give the shifted weight infinite support");
    if (!spec.jminus.finite && !entries_nonpos(rep.lambda_minus))
        return violated("lambda_minus_sign", "ifin_range",
                        "positive entries on an infinite side give the shifted weight infinite support");

    const SupportStats sp = support_stats(rep.lambda_plus, spec.jplus);
    const SupportStats sm = support_stats(rep.lambda_minus, spec.jminus);
    const Rat M = sp.min; // over the full index set, co-support included
    const Rat m = sm.max;

    const Weight shifted_plus = shift_on(rep.lambda_plus, spec.jplus, M);
    const Weight shifted_minus = shift_on(rep.lambda_minus, spec.jminus, m);
    require_integral(shifted_plus, "/lambda_plus");
    require_integral(shifted_minus, "/lambda_minus");

    // The charge is not a free parameter here: it is pinned by the weights.
    const Rat c = M - m;
    if (rep.c != c)
        return violated("charge", "ifin_range",
                        "one-sided-finite charge is determined by the weights: c = min(lambda+) - max(lambda-)");

    const std::size_t qpp = shifted_plus.support_size();
    const std::size_t ppp = shifted_minus.support_size();
    const std::size_t a = ppp + qpp;
    const ExtendedNat slack =
        std::min(cosupport(spec.jplus, qpp), cosupport(spec.jminus, ppp));
    // at least one side is finite, so the range top is finite
    const long long b = static_cast<long long>(a) - 1 + static_cast<long long>(slack.v);

    Verdict v;
    v.inducible = (c > Rat(b)) || (is_integer(c) && Rat(a) <= c && c <= Rat(b));
    v.reason_tag = "ifin_range";
    if (v.inducible)
        v.reason = c > Rat(b) ? "charge beyond the discrete range, in the continuous part"
                              : "charge in the discrete range {a,...,b}";
    else
        v.reason = is_integer(c) ? "charge outside {a,...,b} and not beyond b"
                                 : "non-integral charge inside the discrete range";
    v.parameters = {{"a", nat_str(a)},
                    {"b", std::to_string(b)},
                    {"M", rat_str(M)},
                    {"m", rat_str(m)},
                    {"supp_plus_shifted", nat_str(qpp)},
                    {"supp_minus_shifted", nat_str(ppp)}};
    return v;
}

Verdict domain_II(const GroupSpec& spec, const RepData& rep) {
    require_support_inside(rep.lambda_plus, spec.jplus, "/lambda");
    require_integral(rep.lambda_plus, "/lambda");
    require_integral_charge(rep.c);
    if (!entries_nonneg(rep.lambda_plus))
        return violated("lambda_sign", "ii_ladder", "sign precondition fails: lambda must be >= 0");
    const std::size_t supp = rep.lambda_plus.support_size();
    Verdict v;
    v.inducible = rep.c >= Rat(supp);
    v.reason_tag = "ii_ladder";
    v.reason = v.inducible ? "charge reaches the ladder base |supp(lambda)|"
                           : "charge below the ladder base |supp(lambda)|";
    v.parameters = {{"supp", nat_str(supp)}};
    return v;
}

Verdict domain_III(const GroupSpec& spec, const RepData& rep) {
    require_support_inside(rep.lambda_plus, spec.jplus, "/lambda");
    require_integral(rep.lambda_plus, "/lambda");
    if (!is_half_integer(rep.c))
        throw Error(ErrorCode::BadInput, "charge must be a half-integer for this family", "/c");
    if (!entries_nonneg(rep.lambda_plus))
        return violated("lambda_sign", "iii_half_ladder",
                        "sign precondition fails: lambda must be >= 0");
    const std::size_t supp = rep.lambda_plus.support_size();
    std::size_t above_one = 0;
    for (const auto& [i, val] : rep.lambda_plus.entries()) {
        (void)i;
        if (val > 1) ++above_one;
    }
    Verdict v;
    v.inducible = 2 * rep.c >= Rat(supp + above_one);
    v.reason_tag = "iii_half_ladder";
    v.reason = v.inducible
                   ? "doubled charge reaches the ladder base |supp(lambda)| + |{lambda_j > 1}|"
                   : "doubled charge below the ladder base |supp(lambda)| + |{lambda_j > 1}|";
    v.parameters = {{"supp", nat_str(supp)}, {"above_one", nat_str(above_one)}};
    return v;
}

Verdict domain_IV(const GroupSpec& spec, const RepData& rep) {
    require_support_inside(rep.lambda_plus, spec.jplus, "/mu");
    require_integral(rep.lambda_plus, "/mu");
    require_integral_charge(rep.c);
    Verdict v;
    v.inducible = rep.lambda_plus.is_zero() && rep.c == 0;
    v.reason_tag = "iv_no_go";
    v.reason = v.inducible ? "trivial representation"
                           : "only the trivial representation induces on this family";
    if (v.inducible) v.bounded = Bounded::Yes;
    return v;
}

Verdict cdual_I(const GroupSpec& spec, const RepData& rep) {
    require_support_inside(rep.lambda_plus, spec.jplus, "/lambda_plus");
    require_support_inside(rep.lambda_minus, spec.jminus, "/lambda_minus");
    require_integral(rep.lambda_plus, "/lambda_plus");
    require_integral(rep.lambda_minus, "/lambda_minus");
    const Rat max_plus = support_stats(rep.lambda_plus, spec.jplus).max;
    const Rat min_minus = support_stats(rep.lambda_minus, spec.jminus).min;
    Verdict v;
    v.parameters = {{"max_plus", rat_str(max_plus)}, {"min_minus", rat_str(min_minus)}};
    if (spec.both_infinite()) {
        require_integral_charge(rep.c);
        v.inducible = rep.c + max_plus <= min_minus;
        v.reason_tag = "iinf_antidominant";
        v.reason = v.inducible ? "c + max(lambda+) <= min(lambda-)"
                               : "c + max(lambda+) > min(lambda-)";
        if (v.inducible) v.bounded = rep.c == 0 ? Bounded::Yes : Bounded::No;
        return v;
    }
    // one-sided-finite: the full unitary group carries no central charge
    if (rep.c != 0)
        return violated("charge", "ifin_antidominant",
                        "the one-sided-finite group has no central charge; set c = 0");
    v.inducible = max_plus <= min_minus;
    v.reason_tag = "ifin_antidominant";
    v.reason = v.inducible ? "max(lambda+) <= min(lambda-)" : "max(lambda+) > min(lambda-)";
    if (v.inducible) v.bounded = Bounded::Yes;
    return v;
}

Verdict cdual_II(const GroupSpec& spec, const RepData& rep) {
    require_support_inside(rep.lambda_plus, spec.jplus, "/mu");
    require_integral(rep.lambda_plus, "/mu");
    require_integral_charge(rep.c);
    if (spec.jplus.finite && spec.jplus.n < 2)
        throw Error(ErrorCode::BadInput, "the pair condition needs at least two indices", "/J");
    const auto [s1, s2] = top_two(rep.lambda_plus, spec.jplus);
    Verdict v;
    v.inducible = rep.c + s1 + s2 <= 0;
    v.reason_tag = "ii_antidominant";
    v.reason = v.inducible ? "c + mu_j + mu_k <= 0 for all pairs j != k"
                           : "c + mu_j + mu_k > 0 for the top pair";
    v.parameters = {{"top_pair_sum", rat_str(s1 + s2)}};
    if (v.inducible) v.bounded = rep.c == 0 ? Bounded::Yes : Bounded::No;
    return v;
}

Verdict cdual_III(const GroupSpec& spec, const RepData& rep) {
    require_support_inside(rep.lambda_plus, spec.jplus, "/mu");
    require_integral(rep.lambda_plus, "/mu");
    if (!is_half_integer(rep.c))
        throw Error(ErrorCode::BadInput, "charge must be a half-integer for this family", "/c");
    const Rat max_mu = support_stats(rep.lambda_plus, spec.jplus).max;
    Verdict v;
    v.inducible = rep.c + max_mu <= 0;
    v.reason_tag = "iii_antidominant";
    v.reason = v.inducible ? "c + mu_j <= 0 for all j" : "c + mu_j > 0 at the top entry";
    v.parameters = {{"max_mu", rat_str(max_mu)}};
    if (v.inducible) v.bounded = rep.c == 0 ? Bounded::Yes : Bounded::No;
    return v;
}

Verdict cdual_IV(const GroupSpec& spec, const RepData& rep) {
    require_support_inside(rep.lambda_plus, spec.jplus, "/mu");
    require_integral(rep.lambda_plus, "/mu");
    require_integral_charge(rep.c);
    if (spec.jplus.finite && spec.jplus.n < 2)
        throw Error(ErrorCode::BadInput, "the vector model needs at least two indices", "/J");
    if (spec.jplus.finite && (spec.j0 < 1 || spec.j0 > static_cast<Index>(spec.jplus.n)))
        throw Error(ErrorCode::BadInput, "distinguished index leaves the index set", "/j0");
    if (spec.j0 < 1)
        throw Error(ErrorCode::BadInput, "distinguished index must be positive", "/j0");
    if (rep.lambda_plus.at(spec.j0) != 0)
        throw Error(ErrorCode::BadInput,
                    "the distinguished slot carries the charge and admits no weight entry", "/mu");
    // condition c >= |mu_j| off the distinguished index; any co-support index
    // contributes |0|
    Rat max_abs(0);
    bool has_cosupport = !spec.jplus.finite ||
                         spec.jplus.n > rep.lambda_plus.support_size() + 1;
    if (!has_cosupport) max_abs = Rat(-1); // all slots carry entries: no zero floor
    for (const auto& [i, val] : rep.lambda_plus.entries()) {
        (void)i;
        const Rat a = val < 0 ? Rat(-val) : val;
        if (a > max_abs) max_abs = a;
    }
    if (max_abs < 0) max_abs = 0; // empty weight on a fully packed set cannot occur
    Verdict v;
    v.inducible = rep.c >= max_abs;
    v.reason_tag = "iv_antidominant";
    v.reason = v.inducible ? "c >= |mu_j| off the distinguished index"
                           : "c < |mu_j| at some index";
    v.parameters = {{"max_abs_mu", rat_str(max_abs)}, {"lambda_j0", rat_str(rep.c)}};
    if (v.inducible) v.bounded = Bounded::Yes;
    return v;
}

} // namespace

Verdict classify_flat(const RepData& rep) {
    Verdict v;
    v.inducible = rep.c >= 0;
    v.reason_tag = "flat_charge";
    v.reason = v.inducible ? (rep.c == 0 ? "charge zero: factors through K" : "charge nonnegative")
                           : "charge negative";
    if (v.inducible) v.bounded = rep.c == 0 ? Bounded::Yes : Bounded::No;
    return v;
}

Verdict classify_domain(const GroupSpec& spec, const RepData& rep) {
    if (spec.curvature != Curvature::Domain)
        throw Error(ErrorCode::BadInput, "curvature must be 'domain' here", "/curvature");
    switch (spec.family) {
        case GroupFamily::I: {
            require_support_inside(rep.lambda_plus, spec.jplus, "/lambda_plus");
            require_support_inside(rep.lambda_minus, spec.jminus, "/lambda_minus");
            return spec.both_infinite() ? domain_I_infinite(spec, rep)
                                        : domain_I_finite(spec, rep);
        }
        case GroupFamily::II: return domain_II(spec, rep);
        case GroupFamily::III: return domain_III(spec, rep);
        case GroupFamily::IV: return domain_IV(spec, rep);
        case GroupFamily::Flat:
            throw Error(ErrorCode::BadInput, "flat family has no domain side", "/family");
    }
    throw Error(ErrorCode::BadInput, "unknown family", "/family");
}

Verdict classify_cdual(const GroupSpec& spec, const RepData& rep) {
    if (spec.curvature != Curvature::Cdual)
        throw Error(ErrorCode::BadInput, "curvature must be 'cdual' here", "/curvature");
    switch (spec.family) {
        case GroupFamily::I: return cdual_I(spec, rep);
        case GroupFamily::II: return cdual_II(spec, rep);
        case GroupFamily::III: return cdual_III(spec, rep);
        case GroupFamily::IV: return cdual_IV(spec, rep);
        case GroupFamily::Flat:
            throw Error(ErrorCode::BadInput, "flat family has no dual side", "/family");
    }
    throw Error(ErrorCode::BadInput, "unknown family", "/family");
}

Verdict classify(const GroupSpec& spec, const RepData& rep) {
    switch (spec.curvature) {
        case Curvature::Flat:
            if (spec.family != GroupFamily::Flat)
                throw Error(ErrorCode::BadInput, "flat curvature pairs with the flat family",
                            "/family");
            return classify_flat(rep);
        case Curvature::Domain: return classify_domain(spec, rep);
        case Curvature::Cdual: return classify_cdual(spec, rep);
    }
    throw Error(ErrorCode::BadInput, "unknown curvature", "/curvature");
}

bool necessary_condition(const GroupSpec& spec, const Weight& mu_plus,
                         const Weight& mu_minus) {
    require_support_inside(mu_plus, spec.jplus, "/mu_plus");
    require_support_inside(mu_minus, spec.jminus, "/mu_minus");
    const SupportStats sp = support_stats(mu_plus, spec.jplus);
    const SupportStats sm = support_stats(mu_minus, spec.jminus);
    switch (spec.curvature) {
        case Curvature::Cdual: return sp.max <= sm.min;
        case Curvature::Domain: return sp.min >= sm.max;
        case Curvature::Flat:
            throw Error(ErrorCode::Unsupported,
                        "the flat side carries no weight inequality", "/curvature");
    }
    throw Error(ErrorCode::BadInput, "unknown curvature", "/curvature");
}

BoundedReport is_bounded_hw(const GroupSpec& spec, const RepData& rep) {
    if (spec.curvature != Curvature::Cdual)
        throw Error(ErrorCode::BadInput, "boundedness witness lives on the dual side",
                    "/curvature");
    const bool restricted_family =
        (spec.family == GroupFamily::I && spec.both_infinite()) ||
        spec.family == GroupFamily::II || spec.family == GroupFamily::III;
    if (!restricted_family)
        throw Error(ErrorCode::BadInput,
                    "boundedness witness needs a restricted family (I both-infinite, II, III)",
                    "/family");
    BoundedReport r;
    r.bounded = rep.c == 0;
    r.growth = rep.c < 0 ? Rat(-rep.c) : rep.c;
    return r;
}

namespace {

// multisets of values from {1..max_entry} of size 0..max_support, each
// sorted descending (canonical dominant order)
std::vector<std::vector<int>> descending_multisets(int max_support, int max_entry) {
    std::vector<std::vector<int>> out{{}};
    std::vector<int> cur;
    std::function<void(int)> grow = [&](int cap) {
        if (static_cast<int>(cur.size()) == max_support) return;
        for (int v = cap; v >= 1; --v) {
            cur.push_back(v);
            out.push_back(cur);
            grow(v);
            cur.pop_back();
        }
    };
    if (max_support > 0 && max_entry > 0) grow(max_entry);
    return out;
}

// signed value tuples sorted descending: canonical form when only
// permutations act (no sign flips)
std::vector<std::vector<int>> signed_descending_multisets(int max_support, int max_entry) {
    std::vector<std::vector<int>> out{{}};
    std::vector<int> cur;
    std::function<void(int)> grow = [&](int cap) {
        if (static_cast<int>(cur.size()) == max_support) return;
        for (int v = cap; v >= -max_entry; --v) {
            if (v == 0) continue;
            cur.push_back(v);
            out.push_back(cur);
            grow(v);
            cur.pop_back();
        }
    };
    if (max_support > 0 && max_entry > 0) grow(max_entry);
    return out;
}

Weight weight_at_indices(const std::vector<int>& values, const std::vector<Index>& slots) {
    std::map<Index, Rat> e;
    for (std::size_t k = 0; k < values.size(); ++k) e[slots[k]] = values[k];
    return Weight(std::move(e));
}

std::vector<Index> leading_indices(const IndexSet& J, std::size_t count, Index skip) {
    std::vector<Index> slots;
    Index i = 1;
    while (slots.size() < count) {
        if (i != skip) slots.push_back(i);
        if (J.finite && i >= static_cast<Index>(J.n) && slots.size() < count)
            throw Error(ErrorCode::BadInput, "index set too small for the requested support",
                        "/max_support");
        ++i;
    }
    return slots;
}

} // namespace

std::vector<std::pair<RepData, Verdict>> enumerate_inducible(
    const GroupSpec& spec, const Rat& max_charge, int max_support, int max_entry) {
    if (max_charge < 0 || max_support < 0 || max_entry < 0)
        throw Error(ErrorCode::BadInput, "enumeration bounds must be nonnegative");

    const Rat step = spec.family == GroupFamily::III ? Rat(1, 2) : Rat(1);
    std::vector<Rat> charges;
    for (Rat c = -rat_floor(max_charge / step) * step; c <= max_charge; c += step)
        charges.push_back(c);

    // canonical weight grids; sign flips are in the Weyl group only for IV
    std::vector<std::vector<int>> plus_grid, minus_grid;
    switch (spec.family) {
        case GroupFamily::I:
            plus_grid = signed_descending_multisets(max_support, max_entry);
            minus_grid = signed_descending_multisets(max_support, max_entry);
            break;
        case GroupFamily::IV:
            plus_grid = descending_multisets(max_support, max_entry);
            minus_grid = {{}};
            break;
        default:
            plus_grid = signed_descending_multisets(max_support, max_entry);
            minus_grid = {{}};
            break;
    }

    const Index skip = spec.family == GroupFamily::IV ? spec.j0 : 0;
    // a finite index set caps the usable support (IV loses one slot to j0)
    const auto fits = [](const IndexSet& J, std::size_t supp, bool skips) {
        return !J.finite || supp + (skips ? 1 : 0) <= J.n;
    };
    std::vector<std::pair<RepData, Verdict>> out;
    for (const auto& pv : plus_grid) {
        if (!fits(spec.jplus, pv.size(), skip != 0)) continue;
        for (const auto& mv : minus_grid) {
            if (!fits(spec.jminus, mv.size(), false)) continue;
            for (const Rat& c : charges) {
                RepData rep;
                rep.lambda_plus =
                    weight_at_indices(pv, leading_indices(spec.jplus, pv.size(), skip));
                if (spec.family == GroupFamily::I)
                    rep.lambda_minus =
                        weight_at_indices(mv, leading_indices(spec.jminus, mv.size(), 0));
                rep.c = c;
                rep.scalar_type = rep.lambda_plus.is_zero() && rep.lambda_minus.is_zero();
                const Verdict v = classify(spec, rep);
                if (v.inducible) out.emplace_back(std::move(rep), v);
            }
        }
    }
    std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) {
        if (x.first.lambda_plus != y.first.lambda_plus)
            return x.first.lambda_plus < y.first.lambda_plus;
        if (x.first.lambda_minus != y.first.lambda_minus)
            return x.first.lambda_minus < y.first.lambda_minus;
        return x.first.c < y.first.c;
    });
    return out;
}

ReductionSplit reduction_split(const GroupSpec& spec, const RhoDescriptor& rho) {
    ReductionSplit out;
    out.rho1_trivial = rho.rho1_trivial || rho.separable;
    out.rho0_verdict = classify(spec, rho.rho0);
    if (!out.rho1_trivial) out.annotation = "rho1 tensor factor pass-through";
    return out;
}

} // namespace hermrep
