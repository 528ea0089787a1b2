#pragma once

// Finite-dimensional Kantor–Koecher–Tits algebra over a triple system:
// g_C(U) = U ⊕ aut(U)_C ⊕ conj(U) with the standard graded bracket, the
// involution θ, the grading element d (dx = ix), the symplectic form
// ω_p(x,y) = 2 Im⟨x,y⟩ on p, and the centrally extended / flat variants.

#include <hermrep/jhtriple.hpp>

namespace hermrep {

// Model of aut(U) and its complexification, by triple type:
//   I(p,q):  pairs (a,b), a p×p and b q×q, acting x ↦ ax + xb
//   II/III:  a single n×n matrix a, acting x ↦ ax + xaᵀ
//   IV(n):   matrices z·1 + S with S antisymmetric, acting x ↦ Mx
// Real form = elements anti-selfadjoint for the trace form on U.
struct AutElement {
    Mat a;
    Mat b; // type I only, otherwise 0×0
};

// Element of g_C(U). The y slot is the p⁻ component and carries the
// conjugate complex structure; real-form elements have y = x, A* = −A.
struct KKTElement {
    Mat x;
    AutElement A;
    Mat y;
};

// Element of the central extension ℝ ⊕_ω g.
struct CentralElement {
    double z;
    KKTElement g;
};

// Flat motion algebra with Heisenberg center: t central, v in p, A in k.
struct MotionElement {
    double t;
    Mat v;
    AutElement A;
};

AutElement aut_zero(const TripleSystem& sys);
Mat aut_act(const AutElement& A, const Mat& x, const TripleSystem& sys);
AutElement aut_bracket(const AutElement& A, const AutElement& B, const TripleSystem& sys);
// Adjoint for the trace form on U; anti-selfadjoint elements form aut(U).
AutElement aut_adjoint(const AutElement& A, const TripleSystem& sys);
AutElement aut_add(const AutElement& A, const AutElement& B);
AutElement aut_scale(Cplx c, const AutElement& A);
// x□y realized as an aut element: acting with it reproduces {x,y,·}.
AutElement box_aut(const Mat& x, const Mat& y, const TripleSystem& sys);
// The central grading element: aut_act(d_aut(sys), x, sys) = ix.
AutElement d_aut(const TripleSystem& sys);
Mat d_action(const Mat& x);

std::size_t aut_dim(const TripleSystem& sys);
Vec aut_to_coords(const AutElement& A, const TripleSystem& sys);
AutElement aut_from_coords(const Vec& c, const TripleSystem& sys);

KKTElement kkt_zero(const TripleSystem& sys);
// [(x,A,y),(x',A',y')] = (Ax'−A'x, x□y' − x'□y + [A,A'], −A*y' + A'*y).
KKTElement kkt_bracket(const KKTElement& g, const KKTElement& h, const TripleSystem& sys);
// θ(x,A,y) = (−x,A,−y); fixed algebra = aut(U).
KKTElement theta(const KKTElement& g);
// σ(x,A,y) = (y,−A*,x); fixed points form the real form g(U).
KKTElement kkt_sigma(const KKTElement& g, const TripleSystem& sys);
bool is_real_form(const KKTElement& g, const TripleSystem& sys, double tol = 1e-12);

// Coordinates on g_C(U): [coords(x); aut coords; conj(coords(y))]. The
// conjugation makes the chart complex-linear on the p⁻ slot.
std::size_t kkt_dim(const TripleSystem& sys);
Vec kkt_to_coords(const KKTElement& g, const TripleSystem& sys);
KKTElement kkt_from_coords(const Vec& c, const TripleSystem& sys);
// Matrix of ad(g) in the kkt_to_coords chart.
Mat ad_matrix(const KKTElement& g, const TripleSystem& sys);

// ω_p(x,y) = 2 Im⟨x,y⟩ with ⟨a,b⟩ = tr(ab*); extended to g by p-projection.
double omega_p(const Mat& x, const Mat& y);

// [(z,g),(z',g')] = (ω_p on the p parts, [g,g']).
CentralElement hat_bracket(const CentralElement& a, const CentralElement& b, const TripleSystem& sys);
// Flat bracket: [(t,v,A),(t',v',A')] = (ω_p(v,v'), Av'−A'v, [A,A']).
MotionElement motion_bracket(const MotionElement& a, const MotionElement& b, const TripleSystem& sys);

AutElement random_aut_real(const TripleSystem& sys, Rng& rng);
AutElement random_aut_complex(const TripleSystem& sys, Rng& rng);
KKTElement random_kkt_real(const TripleSystem& sys, Rng& rng);
KKTElement random_kkt_complex(const TripleSystem& sys, Rng& rng);

} // namespace hermrep
