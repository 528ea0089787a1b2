#pragma once

// Inducibility of bounded K-representations: exact clause-by-clause decision
// procedures for the flat, bounded-domain, and dual-curvature cases, plus
// boundedness of the induced highest weight representation and enumeration
// over canonical weight grids.

#include <hermrep/weights.hpp>

#include <string>
#include <utility>
#include <vector>

namespace hermrep {

enum class GroupFamily { I, II, III, IV, Flat };
enum class Curvature { Domain, Cdual, Flat };

const char* family_name(GroupFamily f);
const char* curvature_name(Curvature c);

// Group data the clauses dispatch on. Family I reads the pair (jplus,
// jminus); II/III/IV read their single index set from jplus; j0 is the
// distinguished index of the type IV vector model (the slot carrying the
// charge). Family I splits into the one-sided-finite and both-infinite
// cases, decided from the index sets.
struct GroupSpec {
    GroupFamily family = GroupFamily::Flat;
    Curvature curvature = Curvature::Flat;
    IndexSet jplus = IndexSet::Infinite();
    IndexSet jminus = IndexSet::Infinite();
    Index j0 = 1;

    bool both_infinite() const { return !jplus.finite && !jminus.finite; }
};

// Bounded representation data. Family I uses both weights; II/III/IV store
// their single weight in lambda_plus (called mu on the dual-curvature side).
struct RepData {
    Weight lambda_plus;
    Weight lambda_minus;
    Rat c = 0;
    bool scalar_type = false;
};

enum class Bounded { Yes, No, NotApplicable };

const char* bounded_name(Bounded b);

// parameters holds the named quantities of the clause that decided the
// verdict (a, b, M, m, support sizes, ...) in display order.
struct Verdict {
    bool inducible = false;
    Bounded bounded = Bounded::NotApplicable;
    std::vector<std::pair<std::string, std::string>> parameters;
    std::string violated_condition; // nonempty when a precondition failed
    std::string reason_tag;
    std::string reason;
};

// Flat case: inducible exactly when the charge is nonnegative; the induced
// representation is bounded exactly when it factors through K (c = 0).
Verdict classify_flat(const RepData& rep);

// Bounded-domain case. Sign preconditions (lambda+ >= 0 >= lambda- for
// family I with both sides infinite, lambda >= 0 for II/III) fail as a
// verdict with violated_condition; integrality violations throw BadInput.
// One-sided-finite family I is shift-invariant: the charge is determined by
// the weights as c = min(lambda+) - max(lambda-), extremes taken over the
// full index sets (co-support contributes 0), and only the shifted entries
// must be integral.
Verdict classify_domain(const GroupSpec& spec, const RepData& rep);

// Dual-curvature case: anti-dominance inequalities with min/max over the
// full index sets (co-support contributes 0).
Verdict classify_cdual(const GroupSpec& spec, const RepData& rep);

// Dispatch on spec.curvature.
Verdict classify(const GroupSpec& spec, const RepData& rep);

// Weight inequality necessary for inducibility on the curved sides:
// sup(mu+) <= inf(mu-) on the dual side, inf(mu+) >= sup(mu-) on the domain
// side. mu+ is evaluated over J+, mu- over J-; single-set families pass
// their J as both. Throws Unsupported for flat curvature.
bool necessary_condition(const GroupSpec& spec, const Weight& mu_plus,
                         const Weight& mu_minus);

struct BoundedReport {
    bool bounded = false;
    Rat growth; // |c|, the linear growth rate of weight values; 0 if bounded
};

// Boundedness of the induced highest weight representation on the dual side
// for the three restricted families (I both-infinite, II, III): bounded
// exactly when c = 0, otherwise the weight values at the grading element
// grow linearly with rate |c|.
BoundedReport is_bounded_hw(const GroupSpec& spec, const RepData& rep);

// Exhaustive scan over canonical-form weights with support size at most
// max_support, entry magnitudes at most max_entry, and |c| <= max_charge
// (step 1/2 for family III, else 1), filtered to the inducible ones.
// Deterministic order: sorted by (lambda+, lambda-, c).
std::vector<std::pair<RepData, Verdict>> enumerate_inducible(
    const GroupSpec& spec, const Rat& max_charge, int max_support, int max_entry);

// rho ~ rho0 (x) rho1 with rho0 a highest weight factor and rho1 factoring
// through the quotient by the connected normal subgroup. Inducibility is
// decided by rho0 alone; rho1 rides along untouched. A separable
// representation space forces rho1 trivial.
struct RhoDescriptor {
    RepData rho0;
    bool rho1_trivial = true;
    bool separable = false;
};

struct ReductionSplit {
    Verdict rho0_verdict;
    bool rho1_trivial = true;
    std::string annotation; // set when a nontrivial rho1 rides along
};

ReductionSplit reduction_split(const GroupSpec& spec, const RhoDescriptor& rho);

} // namespace hermrep
