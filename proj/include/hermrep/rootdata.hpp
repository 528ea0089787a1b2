#pragma once

// Root systems of the four classical matrix-model families at finite
// truncation, the hermitian splitting Δ = Δ_k ⊔ Δ_p⁺ ⊔ Δ_p⁻ read off from
// the distinguished element d, coroots, and the bracket sign test that
// separates compact from non-compact roots.

#include <hermrep/error.hpp>
#include <hermrep/weights.hpp>

#include <Eigen/Dense>

#include <complex>
#include <string>
#include <vector>

namespace hermrep {

using Cplx = std::complex<double>;
using Mat = Eigen::MatrixXcd;
using Vec = Eigen::VectorXcd;

enum class Family { I, II, III, IV };

std::string family_name(Family f);
Family family_from_name(const std::string& s);

// Integer combination of coordinate functionals ε_j; at most two indices,
// coefficients in {±1, ±2}.
struct Root {
    std::vector<std::pair<Index, int>> terms; // sorted by index, coeff != 0

    static Root diff(Index j, Index k);   // ε_j − ε_k
    static Root sum(Index j, Index k);    // ε_j + ε_k
    static Root twice(Index j);           // 2ε_j
    Root negated() const;

    int coeff(Index j) const;
    std::string str() const; // "e1-e2", "2e3", "-e1-e2"

    friend bool operator==(const Root& a, const Root& b) { return a.terms == b.terms; }
    friend bool operator<(const Root& a, const Root& b) { return a.terms < b.terms; }
};

enum class Sector { k, p_plus, p_minus };

std::string sector_name(Sector s);

struct RootClassification {
    Root root;
    Sector sector;
    bool compact;
};

// Concrete matrix realization: family I lives on p+q coordinates indexed by
// J₊ then J₋; families II/III/IV live on 2n coordinates with Cartan
// diag(h, −h). compact_form selects the adjoint x ↦ x^H instead of the
// indefinite one x ↦ 𝕁x^H𝕁.
struct MatrixModel {
    Family family;
    std::vector<Index> jplus;  // I only
    std::vector<Index> jminus; // I only
    std::vector<Index> window; // II/III/IV
    Index j0 = 0;              // IV only
    bool compact_form = false;

    static MatrixModel type_I(std::vector<Index> jplus, std::vector<Index> jminus,
                              bool compact_form = false);
    static MatrixModel type_II(std::vector<Index> window, bool compact_form = false);
    static MatrixModel type_III(std::vector<Index> window, bool compact_form = false);
    static MatrixModel type_IV(std::vector<Index> window, Index j0,
                               bool compact_form = false);

    std::size_t matrix_size() const;
    // position of index j in the first Cartan copy
    std::size_t pos(Index j) const;
    // ε_j(−i·d) for each index of the model
    Rat eps_of_minus_i_d(Index j) const;
    Mat d_matrix() const;
    // the form matrix 𝕁 defining x* = 𝕁 x^H 𝕁 (identity for compact_form)
    Mat form_matrix() const;
    Mat adjoint(const Mat& x) const;
    // root vector x_α as a model matrix (one-dimensional root space)
    Mat root_vector(const Root& alpha) const;
    // α evaluated on a Cartan (block-diagonal) model element
    Cplx eval_root(const Root& alpha, const Mat& h) const;
};

// Complete classified root list matching the four model tables: sector from
// α(−i·d) ∈ {0, ±1}, compactness tags for the model's real form (indefinite:
// Δ_k compact, Δ_p non-compact; compact form: everything compact).
std::vector<RootClassification> roots_of(const MatrixModel& model);

// (ε_j±ε_k)ˇ = E_j±E_k, (2ε_j)ˇ = E_j as a dense integer vector over window.
std::vector<int> coroot(const Root& alpha, const std::vector<Index>& window);

// sign of α([x_α, x_α*]) in the model; 0 flags a degenerate bracket.
int compactness_sign(const Root& alpha, const MatrixModel& model);

// (1/N) Σ_k Ad(exp((2πk/N)·d)) x. Exact block-diagonal projection for N ≥ 2
// because ad d has spectrum {0, ±i}; N ≥ 4 enforced, default 8.
Mat torus_average(const Mat& x, const MatrixModel& model, int quadrature_points = 8);

} // namespace hermrep
