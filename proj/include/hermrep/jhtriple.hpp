#pragma once

// Finite-rank models of the four simple triple-system types: rectangular
// matrices, skew and symmetric square matrices inside the same product, and
// the vector model with a conjugation. Positive models carry the products
// as displayed; negative (c-dual) models negate them.

#include <hermrep/error.hpp>
#include <hermrep/rng.hpp>
#include <hermrep/rootdata.hpp>

#include <vector>

namespace hermrep {

enum class TripleType { I, II, III, IV };

struct TripleSystem {
    TripleType type;
    std::size_t p = 0, q = 0; // I: p×q matrices; II/III: q = p = n; IV: vectors in ℂ^p
    bool negative = false;

    static TripleSystem rect(std::size_t p, std::size_t q, bool negative = false);
    static TripleSystem skew(std::size_t n, bool negative = false);
    static TripleSystem sym(std::size_t n, bool negative = false);
    static TripleSystem spin(std::size_t n, bool negative = false);

    TripleSystem dual() const;
    // complex dimension of the element space
    std::size_t dim() const;
    // matrix shape of an element (IV: p×1 column)
    std::size_t rows() const { return p; }
    std::size_t cols() const { return type == TripleType::IV ? 1 : q; }
};

std::string triple_type_name(TripleType t);
TripleType triple_type_from_name(const std::string& s);

// {x,y,z}: ½(xy*z + zy*x) for the matrix types; the conjugation formula for
// the vector type; negated for c-dual systems.
Mat triple(const Mat& x, const Mat& y, const Mat& z, const TripleSystem& sys);

// Orthonormal basis of the element space under ⟨A,B⟩ = tr(AB*).
std::vector<Mat> element_basis(const TripleSystem& sys);
Vec to_coords(const Mat& x, const TripleSystem& sys);
Mat from_coords(const Vec& c, const TripleSystem& sys);

// x□y as a dim×dim matrix in the element_basis coordinates.
Mat box_matrix(const Mat& x, const Mat& y, const TripleSystem& sys);

// √‖z□z‖ (operator norm on the element space).
double spectral_norm(const Mat& z, const TripleSystem& sys);

// Gaussian sample of a well-formed element.
Mat random_element(const TripleSystem& sys, Rng& rng);

struct AxiomReport {
    double jh1 = 0; // exchange symmetry {x,y,z} = {z,y,x}
    double jh2 = 0; // five-term derivation identity
    double jh3 = 0; // self-adjointness of x□x
    bool pass = false;
};

AxiomReport check_axioms(const TripleSystem& sys, int trials, double tol, Rng& rng);

enum class TripleSign { positive, negative, indefinite };

// Eigenvalue scan of x□x over samples.
TripleSign sign_of(const TripleSystem& sys, int trials, double tol, Rng& rng);

bool tripotent_check(const Mat& z, const TripleSystem& sys, double tol);

} // namespace hermrep
