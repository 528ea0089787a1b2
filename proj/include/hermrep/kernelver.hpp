#pragma once

// Numerical inducibility oracle at finite rank: block triple decomposition
// of doubled matrices, scalar characters of the middle block via principal
// logarithms, normalized reproducing-kernel values, and Gram positivity
// tests on samples exp(ξ) with ξ in the off-diagonal real directions.

#include <hermrep/classifier.hpp>
#include <hermrep/jhtriple.hpp>
#include <hermrep/rational.hpp>

#include <cstdint>
#include <vector>

namespace hermrep {

// g = [[1,X],[0,1]]·diag(k1,k2)·[[1,0],[Y,1]], defined when the lower-right
// block of g is invertible.
struct TripleDecomposition {
    Mat X;  // p×q
    Mat k1; // p×p
    Mat k2; // q×q
    Mat Y;  // q×p
};

TripleDecomposition tridec(const Mat& g, std::size_t p, std::size_t q);
Mat assemble(const TripleDecomposition& dec);

// diag(k1,k2) ↦ det(k1)^{c₊}·det(k2)^{c₋} through principal logarithms;
// defined only while both spectra stay in the open right half plane.
struct ScalarCharacter {
    Rat c_plus{0};
    Rat c_minus{0};
};

Cplx character_value(const ScalarCharacter& chi, const Mat& k1, const Mat& k2);

// Q(g,h) = f(h⁻¹g) / (conj(f(h))·f(g)) with f = character ∘ middle block.
Cplx kernel_value(const Mat& g, const Mat& h, const ScalarCharacter& chi,
                  std::size_t p, std::size_t q);

struct GramReport {
    std::vector<Mat> points; // sampled group elements
    Mat gram;
    double min_eigenvalue = 0;
    bool positive = false;
};

struct GramOptions {
    int samples = 40;
    std::uint64_t seed = 0;
    double tol = 1e-8;
    double radius = 0.6; // operator-norm bound on the sampled directions
};

// Positivity of the kernel on sampled points for the rectangular, skew and
// symmetric families (skew/symmetric sample restricted directions inside
// the doubled model). The vector family is out of scope here.
GramReport gram_test(const TripleSystem& sys, const ScalarCharacter& chi,
                     const GramOptions& opt);

// One charge value compared across the two routes: combinatorial verdict
// versus numeric kernel positivity.
struct CrossRow {
    Rat c;
    Verdict verdict;
    double min_eigenvalue = 0;
    bool kernel_positive = false;
    bool agree = false;
};

struct CrossTable {
    std::vector<CrossRow> rows;
    bool all_agree = true;
};

// Scalar-type characters only, so the weight must be zero. Rectangular
// domain pairs run gram_test with χ = (0, −c); the flat case tests the
// coherent-state kernel exp(c·⟨w,v⟩/2) on sampled one-mode points.
CrossTable cross_validate(const GroupSpec& spec, const Weight& weight,
                          const std::vector<Rat>& c_grid, const GramOptions& opt);

} // namespace hermrep
