#pragma once

// Finitely supported weights, signed-permutation Weyl groups of types A/C/D,
// orbits, and orbit-polytope lattice points.

#include <hermrep/error.hpp>
#include <hermrep/rational.hpp>

#include <cstdint>
#include <map>
#include <set>
#include <vector>

namespace hermrep {

using Index = std::int64_t;

// Natural number or infinity. Only the finite/infinite distinction matters
// for the classification formulas, so arithmetic saturates at infinity.
struct ExtendedNat {
    bool inf = false;
    std::uint64_t v = 0;

    static ExtendedNat finite(std::uint64_t n) { return {false, n}; }
    static ExtendedNat infinity() { return {true, 0}; }

    friend ExtendedNat operator+(ExtendedNat a, ExtendedNat b) {
        if (a.inf || b.inf) return infinity();
        return finite(a.v + b.v);
    }
    friend bool operator==(ExtendedNat a, ExtendedNat b) {
        return a.inf == b.inf && (a.inf || a.v == b.v);
    }
    friend bool operator!=(ExtendedNat a, ExtendedNat b) { return !(a == b); }
    friend bool operator<(ExtendedNat a, ExtendedNat b) {
        if (a.inf) return false;
        if (b.inf) return true;
        return a.v < b.v;
    }
    friend bool operator<=(ExtendedNat a, ExtendedNat b) { return a < b || a == b; }
    friend bool operator>=(ExtendedNat a, ExtendedNat b) { return b <= a; }
    friend bool operator>(ExtendedNat a, ExtendedNat b) { return b < a; }
};

struct IndexSet {
    bool finite = true;
    std::uint64_t n = 0; // meaningful only when finite

    static IndexSet Finite(std::uint64_t n) {
        if (n < 1) throw Error(ErrorCode::BadInput, "finite index set needs n >= 1");
        return {true, n};
    }
    static IndexSet Infinite() { return {false, 0}; }

    ExtendedNat card() const {
        return finite ? ExtendedNat::finite(n) : ExtendedNat::infinity();
    }
};

enum class WeylType { A, C, D };

// Finitely supported rational function on the index set. Entries stored
// sparsely; zeros are never stored. Denominators divide 2.
class Weight {
public:
    Weight() = default;
    explicit Weight(std::map<Index, Rat> entries);

    const std::map<Index, Rat>& entries() const { return entries_; }
    // 1 if all entries integral, else 2
    int den() const { return den_; }
    Rat at(Index i) const;
    std::size_t support_size() const { return entries_.size(); }
    std::set<Index> support() const;
    bool is_zero() const { return entries_.empty(); }

    friend bool operator==(const Weight& a, const Weight& b) { return a.entries_ == b.entries_; }
    friend bool operator!=(const Weight& a, const Weight& b) { return !(a == b); }
    friend bool operator<(const Weight& a, const Weight& b) { return a.entries_ < b.entries_; }

private:
    std::map<Index, Rat> entries_;
    int den_ = 1;
};

// Element of the infinite signed-permutation group: a finitely supported
// permutation together with a finite set of sign flips.
struct SignedPerm {
    std::map<Index, Index> perm; // identity off the map; must be injective
    std::set<Index> flips;

    static SignedPerm transposition(Index a, Index b);
    static SignedPerm flip(Index a);
    // composition this ∘ other (apply other first)
    SignedPerm after(const SignedPerm& other) const;
    Index image(Index i) const;
    int sign(Index i) const { return flips.count(i) ? -1 : 1; }
};

// Statistics feeding the inducibility formulas. min/max range over the
// support together with 0 whenever the ambient set is strictly larger.
struct SupportStats {
    ExtendedNat supp;
    ExtendedNat supp_pos;
    ExtendedNat supp_neg;
    Rat max;
    Rat min;
};

// (w·λ)(w(i)) = ±λ(i). Type A rejects sign changes; type D requires an even
// total flip count.
Weight apply_weyl(const SignedPerm& w, const Weight& lam, WeylType t);

// All images of λ under signed permutations moving the support within the
// given window. Type D admits every sign pattern unless the window has no
// slack over the support, in which case only even patterns occur.
std::set<Weight> orbit(const Weight& lam, WeylType t, const std::vector<Index>& window);

// conv(𝒲λ) ∩ (λ + 𝒬) on the window: 𝒬 is the root lattice of type t, hull
// membership decided by exact rational linear programming over the orbit
// vertices.
std::set<Weight> weight_set(const Weight& lam, WeylType t, const std::vector<Index>& window);

// Same 𝒲-orbit, over an ambient set large enough that placement never
// constrains (so D coincides with C: a flip off the support absorbs parity).
bool equivalent_weights(const Weight& lam, const Weight& mu, WeylType t);

// Canonical orbit representative: values (A) or absolute values (C, D)
// sorted descending onto indices 1..k.
Weight canonical_form(const Weight& lam, WeylType t);

// Average over the full symmetric group on the coordinates: the constant
// vector with the same mean.
std::vector<Rat> orbit_average(const std::vector<Rat>& x);

SupportStats support_stats(const Weight& lam, const IndexSet& ambient);

} // namespace hermrep
