#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <hermrep/liealg.hpp>

#include <unsupported/Eigen/MatrixFunctions>

#include <algorithm>

using namespace hermrep;

namespace {

std::vector<TripleSystem> algebra_systems() {
    return {
        TripleSystem::rect(1, 1), TripleSystem::rect(2, 2),       TripleSystem::rect(2, 3),
        TripleSystem::skew(2),    TripleSystem::skew(3),          TripleSystem::sym(2),
        TripleSystem::sym(3),     TripleSystem::spin(1),          TripleSystem::spin(3),
        TripleSystem::rect(2, 2, true), TripleSystem::sym(2, true), TripleSystem::spin(3, true),
    };
}

double kkt_residual(const KKTElement& g, const KKTElement& h, const TripleSystem& sys) {
    return (kkt_to_coords(g, sys) - kkt_to_coords(h, sys)).norm();
}

double kkt_norm(const KKTElement& g, const TripleSystem& sys) {
    return kkt_to_coords(g, sys).norm();
}

KKTElement jacobi_defect(const KKTElement& a, const KKTElement& b, const KKTElement& c,
                         const TripleSystem& sys) {
    KKTElement r = kkt_bracket(kkt_bracket(a, b, sys), c, sys);
    KKTElement s = kkt_bracket(kkt_bracket(b, c, sys), a, sys);
    KKTElement t = kkt_bracket(kkt_bracket(c, a, sys), b, sys);
    KKTElement sum;
    sum.x = r.x + s.x + t.x;
    sum.A = aut_add(r.A, aut_add(s.A, t.A));
    sum.y = r.y + s.y + t.y;
    return sum;
}

Mat unit(std::size_t p, std::size_t q, std::size_t i, std::size_t j) {
    Mat e = Mat::Zero(p, q);
    e(i, j) = 1;
    return e;
}

} // namespace

TEST_CASE("box elements act as the triple product") {
    Rng rng(1301);
    for (const auto& sys : algebra_systems()) {
        for (int t = 0; t < 10; ++t) {
            Mat x = random_element(sys, rng);
            Mat y = random_element(sys, rng);
            Mat z = random_element(sys, rng);
            Mat lhs = aut_act(box_aut(x, y, sys), z, sys);
            Mat rhs = triple(x, y, z, sys);
            CHECK((lhs - rhs).norm() <= 1e-12 * (1.0 + rhs.norm()));
        }
    }
}

TEST_CASE("graded pieces of the bracket") {
    Rng rng(1302);
    TripleSystem sys = TripleSystem::rect(2, 2);
    Mat x = random_element(sys, rng);
    Mat y = random_element(sys, rng);
    KKTElement gx = kkt_zero(sys);
    gx.x = x;
    KKTElement gy = kkt_zero(sys);
    gy.y = y;
    KKTElement gA = kkt_zero(sys);
    gA.A = random_aut_real(sys, rng);

    // [(x,0,0),(0,0,y)] = (0, x box y, 0)
    KKTElement r = kkt_bracket(gx, gy, sys);
    CHECK(r.x.norm() == 0.0);
    CHECK(r.y.norm() == 0.0);
    CHECK((aut_to_coords(r.A, sys) - aut_to_coords(box_aut(x, y, sys), sys)).norm() <= 1e-14);

    // [(0,A,0),(x,0,0)] = (Ax, 0, 0)
    KKTElement s = kkt_bracket(gA, gx, sys);
    CHECK((s.x - aut_act(gA.A, x, sys)).norm() <= 1e-14);
    CHECK(aut_to_coords(s.A, sys).norm() <= 1e-14);
    CHECK(s.y.norm() == 0.0);

    // [(0,A,0),(0,0,y)] = (0, 0, -A*y)
    KKTElement t = kkt_bracket(gA, gy, sys);
    CHECK(t.x.norm() == 0.0);
    CHECK(aut_to_coords(t.A, sys).norm() <= 1e-14);
    CHECK((t.y + aut_act(aut_adjoint(gA.A, sys), y, sys)).norm() <= 1e-14);
}

TEST_CASE("Jacobi identity for the graded bracket") {
    Rng rng(1303);
    for (const auto& sys : algebra_systems()) {
        double worst = 0.0;
        for (int t = 0; t < 100; ++t) {
            KKTElement a = random_kkt_complex(sys, rng);
            KKTElement b = random_kkt_complex(sys, rng);
            KKTElement c = random_kkt_complex(sys, rng);
            double scale = 1.0 + kkt_norm(a, sys) * kkt_norm(b, sys) * kkt_norm(c, sys);
            worst = std::max(worst, kkt_norm(jacobi_defect(a, b, c, sys), sys) / scale);
        }
        CHECK(worst <= 1e-10);
    }
}

TEST_CASE("theta is an involutive automorphism") {
    Rng rng(1304);
    TripleSystem sys = TripleSystem::rect(2, 3);
    for (int t = 0; t < 50; ++t) {
        KKTElement g = random_kkt_complex(sys, rng);
        KKTElement h = random_kkt_complex(sys, rng);
        KKTElement tg = theta(g);
        CHECK((tg.x + g.x).norm() == 0.0);
        CHECK((tg.y + g.y).norm() == 0.0);
        CHECK((tg.A.a - g.A.a).norm() == 0.0);
        CHECK(kkt_residual(theta(tg), g, sys) == 0.0);
        double scale = 1.0 + kkt_norm(g, sys) * kkt_norm(h, sys);
        CHECK(kkt_residual(theta(kkt_bracket(g, h, sys)),
                           kkt_bracket(theta(g), theta(h), sys), sys) <= 1e-12 * scale);
    }
}

TEST_CASE("grading element acts as the complex structure") {
    Rng rng(1305);
    Mat e11 = unit(2, 2, 0, 0);
    CHECK((d_action(e11) - Cplx(0, 1) * e11).norm() == 0.0);
    for (const auto& sys : algebra_systems()) {
        Mat x = random_element(sys, rng);
        CHECK((aut_act(d_aut(sys), x, sys) - Cplx(0, 1) * x).norm() <= 1e-14 * (1.0 + x.norm()));
        CHECK((d_action(d_action(x)) + x).norm() == 0.0);
        // d is central in aut and anti-selfadjoint
        AutElement A = random_aut_complex(sys, rng);
        CHECK(aut_to_coords(aut_bracket(d_aut(sys), A, sys), sys).norm() <= 1e-13);
        AutElement ds = aut_adjoint(d_aut(sys), sys);
        CHECK((aut_to_coords(ds, sys) + aut_to_coords(d_aut(sys), sys)).norm() <= 1e-14);
    }
}

TEST_CASE("ad d spectrum on the four-dimensional algebra") {
    TripleSystem sys = TripleSystem::rect(1, 1);
    CHECK(kkt_dim(sys) == 4);
    KKTElement d = kkt_zero(sys);
    d.A = d_aut(sys);
    Mat ad = ad_matrix(d, sys);
    Eigen::ComplexEigenSolver<Mat> es(ad);
    REQUIRE(es.info() == Eigen::Success);
    std::vector<Cplx> ev(es.eigenvalues().data(), es.eigenvalues().data() + 4);
    std::sort(ev.begin(), ev.end(), [](Cplx u, Cplx v) { return u.imag() < v.imag(); });
    const Cplx i(0, 1);
    CHECK(std::abs(ev[0] + i) <= 1e-12);
    CHECK(std::abs(ev[1]) <= 1e-12);
    CHECK(std::abs(ev[2]) <= 1e-12);
    CHECK(std::abs(ev[3] - i) <= 1e-12);
}

TEST_CASE("theta equals the exponential of pi ad d") {
    for (const auto& sys : {TripleSystem::rect(2, 2), TripleSystem::spin(3)}) {
        const auto du = static_cast<Eigen::Index>(sys.dim());
        const auto da = static_cast<Eigen::Index>(aut_dim(sys));
        KKTElement d = kkt_zero(sys);
        d.A = d_aut(sys);
        Mat ad = ad_matrix(d, sys);
        Mat ex = (std::acos(-1.0) * ad).exp();
        Mat th = Mat::Identity(2 * du + da, 2 * du + da);
        th.block(0, 0, du, du) *= -1.0;
        th.block(du + da, du + da, du, du) *= -1.0;
        CHECK((ex - th).norm() <= 1e-8);
    }
}

TEST_CASE("symplectic form on p") {
    Rng rng(1306);
    Mat e11 = unit(2, 2, 0, 0);
    // 2 Im tr(e11 (i e11)*) = 2 Im(-i) = -2
    CHECK(omega_p(e11, d_action(e11)) == doctest::Approx(-2.0).epsilon(1e-14));
    TripleSystem sys = TripleSystem::rect(2, 2);
    for (int t = 0; t < 50; ++t) {
        Mat x = random_element(sys, rng);
        Mat y = random_element(sys, rng);
        CHECK(omega_p(x, x) == 0.0);
        CHECK(omega_p(x, y) == doctest::Approx(-omega_p(y, x)).epsilon(1e-12));
        CHECK(omega_p(2.5 * x, y) == doctest::Approx(2.5 * omega_p(x, y)).epsilon(1e-12));
        // invariance under the compact part
        AutElement A = random_aut_real(sys, rng);
        double inv = omega_p(aut_act(A, x, sys), y) + omega_p(x, aut_act(A, y, sys));
        CHECK(std::abs(inv) <= 1e-10 * (1.0 + x.norm() * y.norm()));
    }
}

TEST_CASE("cocycle identity on the real form") {
    Rng rng(1307);
    for (const auto& sys : {TripleSystem::rect(2, 2), TripleSystem::sym(3), TripleSystem::spin(3)}) {
        double worst = 0.0;
        for (int t = 0; t < 100; ++t) {
            KKTElement a = random_kkt_real(sys, rng);
            KKTElement b = random_kkt_real(sys, rng);
            KKTElement c = random_kkt_real(sys, rng);
            double sum = omega_p(kkt_bracket(a, b, sys).x, c.x) +
                         omega_p(kkt_bracket(b, c, sys).x, a.x) +
                         omega_p(kkt_bracket(c, a, sys).x, b.x);
            double scale = 1.0 + kkt_norm(a, sys) * kkt_norm(b, sys) * kkt_norm(c, sys);
            worst = std::max(worst, std::abs(sum) / scale);
        }
        CHECK(worst <= 1e-10);
    }
}

TEST_CASE("real form is closed under the bracket") {
    Rng rng(1308);
    for (const auto& sys : algebra_systems()) {
        for (int t = 0; t < 20; ++t) {
            KKTElement g = random_kkt_real(sys, rng);
            KKTElement h = random_kkt_real(sys, rng);
            REQUIRE(is_real_form(g, sys, 1e-12));
            double scale = 1.0 + kkt_norm(g, sys) * kkt_norm(h, sys);
            CHECK(is_real_form(kkt_bracket(g, h, sys), sys, 1e-10 * scale));
        }
    }
}

TEST_CASE("central extension bracket") {
    Rng rng(1309);
    TripleSystem sys = TripleSystem::rect(2, 2);
    CentralElement one{1.0, kkt_zero(sys)};
    KKTElement g = random_kkt_real(sys, rng);
    CentralElement cg{0.0, g};
    CentralElement r = hat_bracket(one, cg, sys);
    CHECK(r.z == 0.0);
    CHECK(kkt_norm(r.g, sys) == 0.0);

    // pure p elements pick up the symplectic scalar
    Mat x = random_element(sys, rng);
    Mat y = random_element(sys, rng);
    KKTElement px = kkt_zero(sys);
    px.x = x;
    px.y = x;
    KKTElement py = kkt_zero(sys);
    py.x = y;
    py.y = y;
    CentralElement s = hat_bracket(CentralElement{0.0, px}, CentralElement{0.0, py}, sys);
    CHECK(s.z == doctest::Approx(omega_p(x, y)).epsilon(1e-13));
    CHECK(kkt_residual(s.g, kkt_bracket(px, py, sys), sys) == 0.0);

    double worst = 0.0;
    for (int t = 0; t < 100; ++t) {
        CentralElement a{rng.gauss(), random_kkt_real(sys, rng)};
        CentralElement b{rng.gauss(), random_kkt_real(sys, rng)};
        CentralElement c{rng.gauss(), random_kkt_real(sys, rng)};
        CentralElement j1 = hat_bracket(hat_bracket(a, b, sys), c, sys);
        CentralElement j2 = hat_bracket(hat_bracket(b, c, sys), a, sys);
        CentralElement j3 = hat_bracket(hat_bracket(c, a, sys), b, sys);
        double zsum = std::abs(j1.z + j2.z + j3.z);
        KKTElement gsum;
        gsum.x = j1.g.x + j2.g.x + j3.g.x;
        gsum.A = aut_add(j1.g.A, aut_add(j2.g.A, j3.g.A));
        gsum.y = j1.g.y + j2.g.y + j3.g.y;
        double scale = 1.0 + kkt_norm(a.g, sys) * kkt_norm(b.g, sys) * kkt_norm(c.g, sys);
        worst = std::max(worst, (zsum + kkt_norm(gsum, sys)) / scale);
    }
    CHECK(worst <= 1e-10);
}

TEST_CASE("flat motion bracket") {
    Rng rng(1310);
    TripleSystem sys = TripleSystem::sym(2);
    Mat v = random_element(sys, rng);
    Mat w = random_element(sys, rng);
    AutElement A = random_aut_real(sys, rng);
    MotionElement zero{0.0, Mat::Zero(sys.rows(), sys.cols()), aut_zero(sys)};
    MotionElement central{1.0, zero.v, zero.A};
    MotionElement pv{0.0, v, aut_zero(sys)};
    MotionElement pw{0.0, w, aut_zero(sys)};
    MotionElement kA{0.0, zero.v, A};

    MotionElement r = motion_bracket(kA, pv, sys);
    CHECK(r.t == 0.0);
    CHECK((r.v - aut_act(A, v, sys)).norm() <= 1e-14);
    CHECK(aut_to_coords(r.A, sys).norm() == 0.0);

    MotionElement c = motion_bracket(central, pv, sys);
    CHECK(c.t == 0.0);
    CHECK(c.v.norm() == 0.0);
    CHECK(aut_to_coords(c.A, sys).norm() == 0.0);

    MotionElement h = motion_bracket(pv, pw, sys);
    CHECK(h.t == doctest::Approx(omega_p(v, w)).epsilon(1e-13));
    CHECK(h.v.norm() == 0.0);
    CHECK(aut_to_coords(h.A, sys).norm() == 0.0);

    double worst = 0.0;
    for (int t = 0; t < 100; ++t) {
        MotionElement a{rng.gauss(), random_element(sys, rng), random_aut_real(sys, rng)};
        MotionElement b{rng.gauss(), random_element(sys, rng), random_aut_real(sys, rng)};
        MotionElement d{rng.gauss(), random_element(sys, rng), random_aut_real(sys, rng)};
        MotionElement j1 = motion_bracket(motion_bracket(a, b, sys), d, sys);
        MotionElement j2 = motion_bracket(motion_bracket(b, d, sys), a, sys);
        MotionElement j3 = motion_bracket(motion_bracket(d, a, sys), b, sys);
        double res = std::abs(j1.t + j2.t + j3.t) + (j1.v + j2.v + j3.v).norm() +
                     (aut_to_coords(j1.A, sys) + aut_to_coords(j2.A, sys) +
                      aut_to_coords(j3.A, sys))
                         .norm();
        worst = std::max(worst, res);
    }
    CHECK(worst <= 1e-10);
}

TEST_CASE("algebra coordinates are a complex-linear chart") {
    Rng rng(1311);
    for (const auto& sys : algebra_systems()) {
        KKTElement g = random_kkt_complex(sys, rng);
        KKTElement h = random_kkt_complex(sys, rng);
        CHECK(kkt_residual(kkt_from_coords(kkt_to_coords(g, sys), sys), g, sys) <= 1e-13);
        // scaling in the chart commutes with the bracket
        const Cplx c(0.7, -1.3);
        KKTElement cg = kkt_from_coords(Vec(c * kkt_to_coords(g, sys)), sys);
        Vec lhs = kkt_to_coords(kkt_bracket(cg, h, sys), sys);
        Vec rhs = c * kkt_to_coords(kkt_bracket(g, h, sys), sys);
        CHECK((lhs - rhs).norm() <= 1e-11 * (1.0 + rhs.norm()));
    }
    CHECK(kkt_dim(TripleSystem::rect(2, 2)) == 16);
    CHECK(kkt_dim(TripleSystem::spin(3)) == 10);
    CHECK(kkt_dim(TripleSystem::skew(3)) == 15);
    CHECK(kkt_dim(TripleSystem::sym(2)) == 10);
}
