#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <hermrep/fockspace.hpp>

using namespace hermrep;

namespace {

Vec basis_vector(std::size_t m, std::size_t k) {
    Vec v = Vec::Zero(m);
    v(k) = 1.0;
    return v;
}

Vec random_vector(std::size_t m, Rng& rng) {
    Vec v(m);
    for (std::size_t i = 0; i < m; ++i)
        v(i) = rng.cgauss();
    return v;
}

Vec random_state(const FockBasis& basis, std::size_t max_degree, Rng& rng) {
    Vec s = Vec::Zero(basis.dim());
    for (std::size_t i = 0; i < basis.dim(); ++i)
        if (basis.degree(i) <= max_degree)
            s(i) = rng.cgauss();
    return s;
}

Mat random_unitary(std::size_t m, Rng& rng) {
    Mat g(m, m);
    for (std::size_t j = 0; j < m; ++j)
        for (std::size_t i = 0; i < m; ++i)
            g(i, j) = rng.cgauss();
    Eigen::HouseholderQR<Mat> qr(g);
    return qr.householderQ() * Mat::Identity(m, m);
}

// phase of the composition law W(v)W(w) = e^{(i/2)Im⟨v,w⟩} W(v+w)
Cplx weyl_phase(const Vec& v, const Vec& w) {
    return std::exp(Cplx(0.0, 0.5 * w.dot(v).imag()));
}

double weyl_relation_residual(const Vec& v, const Vec& w, const FockBasis& basis) {
    Mat low = Mat::Zero(basis.dim(), basis.dim());
    for (std::size_t n = 0; n <= 2 && n <= basis.N; ++n)
        low += basis.degree_projector(n);
    Mat lhs = weyl(v, basis).matrix * weyl(w, basis).matrix;
    Mat rhs = weyl_phase(v, w) * weyl(Vec(v + w), basis).matrix;
    return ((lhs - rhs) * low).norm();
}

} // namespace

TEST_CASE("basis enumeration and dimensions") {
    FockBasis b26(2, 6);
    CHECK(b26.dim() == 28);
    FockBasis b34(3, 4);
    CHECK(b34.dim() == 35);
    FockBasis b140(1, 40);
    CHECK(b140.dim() == 41);
    CHECK(b34.indices[0] == MultiIndex{0, 0, 0});
    for (std::size_t i = 0; i + 1 < b34.dim(); ++i)
        CHECK(b34.degree(i) <= b34.degree(i + 1));
    CHECK(b34.index_of(MultiIndex{0, 0, 0}) == 0);
    CHECK_THROWS_AS((void)b34.index_of(MultiIndex{5, 0, 0}), Error);
}

TEST_CASE("creation and annihilation") {
    Rng rng(1401);
    FockBasis basis(2, 5);
    Vec v = random_vector(2, rng);

    // the vacuum is annihilated and e1 is created from it
    CHECK(annihilate(v, basis).matrix.col(0).norm() == 0.0);
    Vec e1 = basis_vector(2, 0);
    Vec image = create(e1, basis).matrix.col(0);
    CHECK(std::abs(image(basis.index_of(MultiIndex{1, 0})) - 1.0) == 0.0);
    CHECK(image.norm() == 1.0);

    // adjointness holds exactly as truncated matrices
    CHECK((create(v, basis).matrix - annihilate(v, basis).matrix.adjoint()).norm() == 0.0);
    for (int t = 0; t < 20; ++t) {
        Vec xi = random_state(basis, basis.N - 1, rng);
        Vec eta = random_state(basis, basis.N, rng);
        Cplx lhs = eta.dot(create(v, basis).matrix * xi);
        Cplx rhs = Vec(annihilate(v, basis).matrix * eta).dot(xi);
        CHECK(std::abs(lhs - rhs) <= 1e-12 * (1.0 + std::abs(lhs)));
    }

    // linear in v for creation, antilinear for annihilation
    Vec w = random_vector(2, rng);
    const Cplx c(0.8, -0.3);
    CHECK((create(Vec(c * v + w), basis).matrix -
           (c * create(v, basis).matrix + create(w, basis).matrix))
              .norm() <= 1e-13);
    CHECK((annihilate(Vec(c * v + w), basis).matrix -
           (std::conj(c) * annihilate(v, basis).matrix + annihilate(w, basis).matrix))
              .norm() <= 1e-13);
}

TEST_CASE("canonical commutation relations") {
    Rng rng(1402);
    {
        FockBasis basis(1, 5);
        Vec e1 = basis_vector(1, 0);
        CcrReport r = ccr_check(e1, e1, basis);
        CHECK(r.lower_commutator <= 1e-13);
        CHECK(r.mixed_commutator <= 1e-13);
    }
    {
        FockBasis basis(2, 5);
        CcrReport r = ccr_check(basis_vector(2, 0), basis_vector(2, 1), basis);
        CHECK(r.lower_commutator <= 1e-13);
        CHECK(r.mixed_commutator <= 1e-13); // orthogonal pair: ⟨w,v⟩ = 0
    }
    {
        FockBasis basis(2, 6);
        for (int t = 0; t < 10; ++t) {
            Vec v = random_vector(2, rng);
            Vec w = random_vector(2, rng);
            CcrReport r = ccr_check(v, w, basis);
            CHECK(r.lower_commutator <= 1e-12 * (1.0 + v.norm() * w.norm()));
            CHECK(r.mixed_commutator <= 1e-12 * (1.0 + v.norm() * w.norm()));
        }
    }
    {
        FockBasis basis(3, 6);
        Vec v = random_vector(3, rng);
        Vec w = random_vector(3, rng);
        CcrReport r = ccr_check(v, w, basis);
        CHECK(r.lower_commutator <= 1e-12 * (1.0 + v.norm() * w.norm()));
        CHECK(r.mixed_commutator <= 1e-12 * (1.0 + v.norm() * w.norm()));
    }
}

TEST_CASE("weyl operators") {
    Rng rng(1403);
    {
        FockBasis basis(2, 4);
        CHECK((weyl(Vec(Vec::Zero(2)), basis).matrix -
               Mat::Identity(basis.dim(), basis.dim()))
                  .norm() <= 1e-14);
    }
    // composition law at the truncation, with a doubling convergence check;
    // unit vectors keep the truncation error above the rounding floor at N=10
    Vec v(1), w(1);
    v(0) = rng.cgauss();
    v(0) /= std::abs(v(0));
    w(0) = rng.cgauss();
    w(0) /= std::abs(w(0));
    FockBasis b10(1, 10), b20(1, 20), b40(1, 40);
    const double r10 = weyl_relation_residual(v, w, b10);
    const double r20 = weyl_relation_residual(v, w, b20);
    const double r40 = weyl_relation_residual(v, w, b40);
    CHECK(r40 <= 1e-6);
    CHECK(r20 <= r10 / 4.0);
    CHECK(r40 <= r20);

    // truncation-level unitarity on low degrees
    Mat W = weyl(v, b40).matrix;
    for (int t = 0; t < 10; ++t) {
        Vec xi = random_state(b40, 2, rng);
        const double ratio = (W * xi).norm() / xi.norm();
        CHECK(ratio >= 1.0 - 1e-6);
        CHECK(ratio <= 1.0 + 1e-6);
    }
}

TEST_CASE("unitary action on symmetric powers") {
    Rng rng(1404);
    FockBasis basis(2, 4);
    Mat id2 = Mat::Identity(2, 2);
    for (std::size_t n = 0; n <= basis.N; ++n) {
        Mat s = k_action(id2, n, basis);
        CHECK((s - Mat::Identity(s.rows(), s.cols())).norm() <= 1e-14);
    }

    Mat U = random_unitary(2, rng);
    Mat Up = random_unitary(2, rng);
    for (std::size_t n = 0; n <= basis.N; ++n) {
        Mat s = k_action(U, n, basis);
        CHECK((s.adjoint() * s - Mat::Identity(s.rows(), s.cols())).norm() <= 1e-12);
        CHECK((k_action(U, n, basis) * k_action(Up, n, basis) -
               k_action(Mat(U * Up), n, basis))
                  .norm() <= 1e-12);
    }

    // S(U) a*(v) S(U)^{-1} = a*(Uv)
    Mat S = fock_k_action(U, basis).matrix;
    Mat Sinv = fock_k_action(Mat(U.adjoint()), basis).matrix;
    for (int t = 0; t < 10; ++t) {
        Vec x = random_vector(2, rng);
        Mat lhs = S * create(x, basis).matrix * Sinv;
        Mat rhs = create(Vec(U * x), basis).matrix;
        CHECK((lhs - rhs).norm() <= 1e-12 * (1.0 + rhs.norm()));
    }

    CHECK_THROWS_AS((void)k_action(Mat(2.0 * id2), 1, basis), Error);
}

TEST_CASE("vacuum characterization") {
    CHECK(vacuum_characterization(FockBasis(1, 5)));
    CHECK(vacuum_characterization(FockBasis(3, 4)));
    CHECK(vacuum_characterization(FockBasis(2, 5)));
    // dropping one annihilator lets pure powers of the other line survive
    CHECK_FALSE(vacuum_characterization(FockBasis(2, 5), {1}));
    CHECK_THROWS_AS((void)vacuum_characterization(FockBasis(2, 3), {2}), Error);
}

TEST_CASE("number operator and oscillator spectrum") {
    FockBasis basis(2, 6);
    Mat n = number_operator(basis).matrix;
    Mat expect = Mat::Zero(basis.dim(), basis.dim());
    for (std::size_t i = 0; i < basis.dim(); ++i)
        expect(i, i) = static_cast<double>(basis.degree(i));
    CHECK((n - expect).norm() <= 1e-12);

    const double c = 0.5;
    Mat h = oscillator_hamiltonian(basis, c);
    CHECK((h - (c * Mat::Identity(basis.dim(), basis.dim()) + expect)).norm() <= 1e-12);
    // spectrum {c+n}, bounded below with the vacuum at the bottom
    Eigen::SelfAdjointEigenSolver<Mat> es(h);
    REQUIRE(es.info() == Eigen::Success);
    CHECK(std::abs(es.eigenvalues().minCoeff() - c) <= 1e-12);
    for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i) {
        const double lam = es.eigenvalues()(i);
        CHECK(std::abs(lam - c - std::round(lam - c)) <= 1e-12);
    }
    // multiplicity of c+n on two oscillators is n+1
    int mult3 = 0;
    for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i)
        if (std::abs(es.eigenvalues()(i) - c - 3.0) <= 1e-9)
            ++mult3;
    CHECK(mult3 == 4);
}

TEST_CASE("charge scaling") {
    Rng rng(1405);
    TripleSystem sys = TripleSystem::rect(1, 2);
    const double h = 1.7;
    for (int t = 0; t < 20; ++t) {
        MotionElement a{rng.gauss(), random_element(sys, rng), random_aut_real(sys, rng)};
        MotionElement b{rng.gauss(), random_element(sys, rng), random_aut_real(sys, rng)};
        MotionElement lhs = motion_bracket(mu_scale(a, h), mu_scale(b, h), sys);
        MotionElement rhs = mu_scale(motion_bracket(a, b, sys), h);
        CHECK(std::abs(lhs.t - rhs.t) <= 1e-12 * (1.0 + std::abs(rhs.t)));
        CHECK((lhs.v - rhs.v).norm() <= 1e-12);
        CHECK((aut_to_coords(lhs.A, sys) - aut_to_coords(rhs.A, sys)).norm() <= 1e-12);
    }

    // the composed representation e^{ict}W(hv) with c = h²/2 respects the
    // Heisenberg product (t,v)(t',v') = (t+t'+½ω(v,v'), v+v')
    FockBasis basis(1, 40);
    Vec v(1), w(1);
    v(0) = Cplx(0.4, -0.2);
    w(0) = Cplx(-0.1, 0.5);
    const double hs = 1.3;
    const double c = scaled_charge(hs);
    CHECK(c == doctest::Approx(0.845).epsilon(1e-12));
    const double t1 = 0.3, t2 = -1.1;
    Mat low = Mat::Zero(basis.dim(), basis.dim());
    for (std::size_t n = 0; n <= 2; ++n)
        low += basis.degree_projector(n);
    Mat lhs = std::exp(Cplx(0, c * t1)) * weyl(Vec(hs * v), basis).matrix *
              (std::exp(Cplx(0, c * t2)) * weyl(Vec(hs * w), basis).matrix);
    const double tprod = t1 + t2 + 0.5 * omega_p(v, w);
    Mat rhs = std::exp(Cplx(0, c * tprod)) * weyl(Vec(hs * (v + w)), basis).matrix;
    CHECK(((lhs - rhs) * low).norm() <= 1e-6);
}

TEST_CASE("degree shift tags") {
    Rng rng(1406);
    FockBasis basis(2, 4);
    Vec v = random_vector(2, rng);
    Mat c = create(v, basis).matrix;
    Mat a = annihilate(v, basis).matrix;
    for (std::size_t n = 0; n <= basis.N; ++n) {
        Mat pn = basis.degree_projector(n);
        if (n + 1 <= basis.N) {
            Mat up = basis.degree_projector(n + 1);
            CHECK((up * c * pn - c * pn).norm() <= 1e-13);
        } else {
            CHECK((c * pn).norm() == 0.0);
        }
        if (n >= 1) {
            Mat down = basis.degree_projector(n - 1);
            CHECK((down * a * pn - a * pn).norm() <= 1e-13);
        } else {
            CHECK((a * pn).norm() == 0.0);
        }
        Mat num = number_operator(basis).matrix;
        CHECK((num * pn - pn * num).norm() <= 1e-13);
    }
    CHECK(create(v, basis).shift == DegreeShift::Raise);
    CHECK(annihilate(v, basis).shift == DegreeShift::Lower);
    CHECK(number_operator(basis).shift == DegreeShift::Keep);
    CHECK(weyl(v, basis).shift == DegreeShift::Mixed);
}
