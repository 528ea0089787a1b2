#pragma once

// Truncated symmetric Fock space over ℂ^m: monomial basis with the α!
// inner product, creation/annihilation pairs, Weyl operators, the unitary
// action on symmetric powers, and the vacuum characterization. Degrees are
// cut off at N; operators that would leave the truncation map to zero.

#include <hermrep/liealg.hpp>
#include <hermrep/rational.hpp>

#include <map>
#include <vector>

namespace hermrep {

using MultiIndex = std::vector<int>;

struct FockBasis {
    std::size_t m = 0;
    std::size_t N = 0;
    std::vector<MultiIndex> indices; // degree-major, lexicographic within degree

    FockBasis(std::size_t m, std::size_t N);

    std::size_t dim() const { return indices.size(); }
    std::size_t degree(std::size_t i) const;
    // position of α, or throws if |α| > N
    std::size_t index_of(const MultiIndex& alpha) const;
    // orthogonal projector onto total degree n
    Mat degree_projector(std::size_t n) const;

private:
    std::map<MultiIndex, std::size_t> lookup_;
};

enum class DegreeShift { Raise, Lower, Keep, Mixed };

struct FockOperator {
    Mat matrix;
    DegreeShift shift = DegreeShift::Mixed;
};

// a*(v): prepends v to a symmetric word; truncation kills the top degree.
FockOperator create(const Vec& v, const FockBasis& basis);
// a(v): antilinear in v; adjoint of create(v) as truncated matrices.
FockOperator annihilate(const Vec& v, const FockBasis& basis);

struct CcrReport {
    double lower_commutator = 0;  // ‖[a(v),a(w)]‖ on the whole truncation
    double mixed_commutator = 0;  // ‖[a(v),a*(w)] − ⟨w,v⟩1‖ on degrees ≤ N−1
};
CcrReport ccr_check(const Vec& v, const Vec& w, const FockBasis& basis);

// W(v) = exp((i/√2)(a(v) + a*(v))) on the truncation.
FockOperator weyl(const Vec& v, const FockBasis& basis);

// S^n(U) acting on the degree-n block; U must be unitary.
Mat k_action(const Mat& U, std::size_t n, const FockBasis& basis);
// ⊕_n S^n(U) over all degrees ≤ N.
FockOperator fock_k_action(const Mat& U, const FockBasis& basis);

// True iff the joint kernel of the chosen annihilators equals ℂΩ, decided
// exactly over the rationals. The default takes all m of them.
bool vacuum_characterization(const FockBasis& basis);
bool vacuum_characterization(const FockBasis& basis, const std::vector<std::size_t>& which);

// Σ_k a*(e_k)a(e_k); acts as n·1 on degree n throughout the truncation.
FockOperator number_operator(const FockBasis& basis);
// Charge-c oscillator Hamiltonian c·1 + number operator; spectrum {c+n}.
Mat oscillator_hamiltonian(const FockBasis& basis, double c);

// Scaling automorphism of the motion algebra: (t,v,A) ↦ (h²t, hv, A).
MotionElement mu_scale(const MotionElement& a, double h);
// Central charge of the Fock representation composed with mu_scale(·,h).
double scaled_charge(double h);

} // namespace hermrep
