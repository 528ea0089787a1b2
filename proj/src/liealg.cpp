#include <hermrep/liealg.hpp>

namespace hermrep {

namespace {

Cplx inner(const Mat& a, const Mat& b) { return (b.adjoint() * a).trace(); }

void check_aut_shape(const AutElement& A, const TripleSystem& sys) {
    const auto r = static_cast<Eigen::Index>(sys.rows());
    const auto c = static_cast<Eigen::Index>(sys.cols());
    bool ok = false;
    switch (sys.type) {
    case TripleType::I:
        ok = A.a.rows() == r && A.a.cols() == r && A.b.rows() == c && A.b.cols() == c;
        break;
    case TripleType::II:
    case TripleType::III:
    case TripleType::IV:
        ok = A.a.rows() == r && A.a.cols() == r && A.b.size() == 0;
        break;
    }
    if (!ok)
        throw Error(ErrorCode::BadInput, "aut element shape does not match the system");
}

void check_element_shape(const Mat& x, const TripleSystem& sys) {
    if (x.rows() != static_cast<Eigen::Index>(sys.rows()) ||
        x.cols() != static_cast<Eigen::Index>(sys.cols()))
        throw Error(ErrorCode::BadInput, "element shape does not match the system");
}

} // namespace

AutElement aut_zero(const TripleSystem& sys) {
    AutElement A;
    A.a = Mat::Zero(sys.rows(), sys.rows());
    if (sys.type == TripleType::I)
        A.b = Mat::Zero(sys.cols(), sys.cols());
    else
        A.b = Mat(0, 0);
    return A;
}

Mat aut_act(const AutElement& A, const Mat& x, const TripleSystem& sys) {
    check_aut_shape(A, sys);
    check_element_shape(x, sys);
    switch (sys.type) {
    case TripleType::I:
        return A.a * x + x * A.b;
    case TripleType::II:
    case TripleType::III:
        return A.a * x + x * A.a.transpose();
    case TripleType::IV:
        return A.a * x;
    }
    throw Error(ErrorCode::BadInput, "unknown triple type");
}

AutElement aut_bracket(const AutElement& A, const AutElement& B, const TripleSystem& sys) {
    check_aut_shape(A, sys);
    check_aut_shape(B, sys);
    AutElement r;
    r.a = A.a * B.a - B.a * A.a;
    if (sys.type == TripleType::I)
        r.b = B.b * A.b - A.b * B.b; // composition order flips on the right factor
    else
        r.b = Mat(0, 0);
    return r;
}

AutElement aut_adjoint(const AutElement& A, const TripleSystem& sys) {
    check_aut_shape(A, sys);
    AutElement r;
    r.a = A.a.adjoint();
    r.b = sys.type == TripleType::I ? Mat(A.b.adjoint()) : Mat(0, 0);
    return r;
}

AutElement aut_add(const AutElement& A, const AutElement& B) {
    AutElement r;
    r.a = A.a + B.a;
    r.b = A.b.size() > 0 ? Mat(A.b + B.b) : Mat(0, 0);
    return r;
}

AutElement aut_scale(Cplx c, const AutElement& A) {
    AutElement r;
    r.a = c * A.a;
    r.b = A.b.size() > 0 ? Mat(c * A.b) : Mat(0, 0);
    return r;
}

AutElement box_aut(const Mat& x, const Mat& y, const TripleSystem& sys) {
    check_element_shape(x, sys);
    check_element_shape(y, sys);
    const Cplx s = sys.negative ? Cplx(-1.0) : Cplx(1.0);
    AutElement r;
    switch (sys.type) {
    case TripleType::I:
        r.a = s * 0.5 * (x * y.adjoint());
        r.b = s * 0.5 * (y.adjoint() * x);
        return r;
    case TripleType::II:
    case TripleType::III:
        // az + zaᵀ with a = ½xy* reproduces ½(xy*z + zy*x) on the submodel
        r.a = s * 0.5 * (x * y.adjoint());
        r.b = Mat(0, 0);
        return r;
    case TripleType::IV:
        r.a = s * (inner(x, y) * Mat::Identity(sys.rows(), sys.rows()) +
                   x * y.adjoint() - y.conjugate() * x.transpose());
        r.b = Mat(0, 0);
        return r;
    }
    throw Error(ErrorCode::BadInput, "unknown triple type");
}

AutElement d_aut(const TripleSystem& sys) {
    const Cplx i(0.0, 1.0);
    AutElement r;
    switch (sys.type) {
    case TripleType::I:
        r.a = 0.5 * i * Mat::Identity(sys.rows(), sys.rows());
        r.b = 0.5 * i * Mat::Identity(sys.cols(), sys.cols());
        return r;
    case TripleType::II:
    case TripleType::III:
        r.a = 0.5 * i * Mat::Identity(sys.rows(), sys.rows());
        r.b = Mat(0, 0);
        return r;
    case TripleType::IV:
        r.a = i * Mat::Identity(sys.rows(), sys.rows());
        r.b = Mat(0, 0);
        return r;
    }
    throw Error(ErrorCode::BadInput, "unknown triple type");
}

Mat d_action(const Mat& x) { return Cplx(0.0, 1.0) * x; }

std::size_t aut_dim(const TripleSystem& sys) {
    const std::size_t n = sys.rows();
    switch (sys.type) {
    case TripleType::I:
        return sys.rows() * sys.rows() + sys.cols() * sys.cols();
    case TripleType::II:
    case TripleType::III:
        return n * n;
    case TripleType::IV:
        return 1 + n * (n - 1) / 2;
    }
    throw Error(ErrorCode::BadInput, "unknown triple type");
}

Vec aut_to_coords(const AutElement& A, const TripleSystem& sys) {
    check_aut_shape(A, sys);
    Vec c(aut_dim(sys));
    if (sys.type == TripleType::IV) {
        const auto n = A.a.rows();
        const Cplx z = A.a.trace() / static_cast<double>(n);
        const Mat S = A.a - z * Mat::Identity(n, n);
        c(0) = z;
        std::size_t k = 1;
        for (Eigen::Index j = 0; j < n; ++j)
            for (Eigen::Index l = j + 1; l < n; ++l)
                c(k++) = S(j, l);
        return c;
    }
    std::size_t k = 0;
    for (Eigen::Index j = 0; j < A.a.cols(); ++j)
        for (Eigen::Index i = 0; i < A.a.rows(); ++i)
            c(k++) = A.a(i, j);
    if (sys.type == TripleType::I)
        for (Eigen::Index j = 0; j < A.b.cols(); ++j)
            for (Eigen::Index i = 0; i < A.b.rows(); ++i)
                c(k++) = A.b(i, j);
    return c;
}

AutElement aut_from_coords(const Vec& c, const TripleSystem& sys) {
    if (c.size() != static_cast<Eigen::Index>(aut_dim(sys)))
        throw Error(ErrorCode::BadInput, "aut coordinate size mismatch");
    AutElement A = aut_zero(sys);
    if (sys.type == TripleType::IV) {
        const auto n = A.a.rows();
        A.a = c(0) * Mat::Identity(n, n);
        std::size_t k = 1;
        for (Eigen::Index j = 0; j < n; ++j)
            for (Eigen::Index l = j + 1; l < n; ++l) {
                A.a(j, l) += c(k);
                A.a(l, j) -= c(k);
                ++k;
            }
        return A;
    }
    std::size_t k = 0;
    for (Eigen::Index j = 0; j < A.a.cols(); ++j)
        for (Eigen::Index i = 0; i < A.a.rows(); ++i)
            A.a(i, j) = c(k++);
    if (sys.type == TripleType::I)
        for (Eigen::Index j = 0; j < A.b.cols(); ++j)
            for (Eigen::Index i = 0; i < A.b.rows(); ++i)
                A.b(i, j) = c(k++);
    return A;
}

KKTElement kkt_zero(const TripleSystem& sys) {
    KKTElement g;
    g.x = Mat::Zero(sys.rows(), sys.cols());
    g.A = aut_zero(sys);
    g.y = Mat::Zero(sys.rows(), sys.cols());
    return g;
}

KKTElement kkt_bracket(const KKTElement& g, const KKTElement& h, const TripleSystem& sys) {
    KKTElement r;
    r.x = aut_act(g.A, h.x, sys) - aut_act(h.A, g.x, sys);
    AutElement mid = aut_add(box_aut(g.x, h.y, sys), aut_scale(-1.0, box_aut(h.x, g.y, sys)));
    r.A = aut_add(mid, aut_bracket(g.A, h.A, sys));
    const AutElement gs = aut_adjoint(g.A, sys);
    const AutElement hs = aut_adjoint(h.A, sys);
    r.y = aut_act(hs, g.y, sys) - aut_act(gs, h.y, sys);
    return r;
}

KKTElement theta(const KKTElement& g) {
    KKTElement r = g;
    r.x = -g.x;
    r.y = -g.y;
    return r;
}

KKTElement kkt_sigma(const KKTElement& g, const TripleSystem& sys) {
    KKTElement r;
    r.x = g.y;
    r.A = aut_scale(-1.0, aut_adjoint(g.A, sys));
    r.y = g.x;
    return r;
}

bool is_real_form(const KKTElement& g, const TripleSystem& sys, double tol) {
    const KKTElement s = kkt_sigma(g, sys);
    double res = (s.x - g.x).norm() + (s.y - g.y).norm() + (s.A.a - g.A.a).norm();
    if (g.A.b.size() > 0)
        res += (s.A.b - g.A.b).norm();
    return res <= tol;
}

std::size_t kkt_dim(const TripleSystem& sys) { return 2 * sys.dim() + aut_dim(sys); }

Vec kkt_to_coords(const KKTElement& g, const TripleSystem& sys) {
    const auto du = static_cast<Eigen::Index>(sys.dim());
    const auto da = static_cast<Eigen::Index>(aut_dim(sys));
    Vec c(2 * du + da);
    c.segment(0, du) = to_coords(g.x, sys);
    c.segment(du, da) = aut_to_coords(g.A, sys);
    c.segment(du + da, du) = to_coords(g.y, sys).conjugate();
    return c;
}

KKTElement kkt_from_coords(const Vec& c, const TripleSystem& sys) {
    const auto du = static_cast<Eigen::Index>(sys.dim());
    const auto da = static_cast<Eigen::Index>(aut_dim(sys));
    if (c.size() != 2 * du + da)
        throw Error(ErrorCode::BadInput, "algebra coordinate size mismatch");
    KKTElement g;
    g.x = from_coords(c.segment(0, du), sys);
    g.A = aut_from_coords(c.segment(du, da), sys);
    g.y = from_coords(Vec(c.segment(du + da, du).conjugate()), sys);
    return g;
}

Mat ad_matrix(const KKTElement& g, const TripleSystem& sys) {
    const auto n = static_cast<Eigen::Index>(kkt_dim(sys));
    Mat m(n, n);
    for (Eigen::Index j = 0; j < n; ++j) {
        Vec e = Vec::Zero(n);
        e(j) = 1.0;
        m.col(j) = kkt_to_coords(kkt_bracket(g, kkt_from_coords(e, sys), sys), sys);
    }
    return m;
}

double omega_p(const Mat& x, const Mat& y) { return 2.0 * inner(x, y).imag(); }

CentralElement hat_bracket(const CentralElement& a, const CentralElement& b, const TripleSystem& sys) {
    CentralElement r;
    r.z = omega_p(a.g.x, b.g.x);
    r.g = kkt_bracket(a.g, b.g, sys);
    return r;
}

MotionElement motion_bracket(const MotionElement& a, const MotionElement& b, const TripleSystem& sys) {
    MotionElement r;
    r.t = omega_p(a.v, b.v);
    r.v = aut_act(a.A, b.v, sys) - aut_act(b.A, a.v, sys);
    r.A = aut_bracket(a.A, b.A, sys);
    return r;
}

namespace {

Mat random_complex(Eigen::Index r, Eigen::Index c, Rng& rng) {
    Mat m(r, c);
    for (Eigen::Index j = 0; j < c; ++j)
        for (Eigen::Index i = 0; i < r; ++i)
            m(i, j) = rng.cgauss();
    return m;
}

} // namespace

AutElement random_aut_real(const TripleSystem& sys, Rng& rng) {
    AutElement A = aut_zero(sys);
    const auto n = static_cast<Eigen::Index>(sys.rows());
    if (sys.type == TripleType::IV) {
        Mat s(n, n);
        for (Eigen::Index j = 0; j < n; ++j)
            for (Eigen::Index i = 0; i < n; ++i)
                s(i, j) = rng.gauss();
        A.a = Cplx(0.0, rng.gauss()) * Mat::Identity(n, n) + 0.5 * (s - s.transpose());
        return A;
    }
    Mat g = random_complex(n, n, rng);
    A.a = 0.5 * (g - g.adjoint());
    if (sys.type == TripleType::I) {
        const auto m = static_cast<Eigen::Index>(sys.cols());
        Mat h = random_complex(m, m, rng);
        A.b = 0.5 * (h - h.adjoint());
    }
    return A;
}

AutElement random_aut_complex(const TripleSystem& sys, Rng& rng) {
    AutElement A = aut_zero(sys);
    const auto n = static_cast<Eigen::Index>(sys.rows());
    if (sys.type == TripleType::IV) {
        Mat g = random_complex(n, n, rng);
        A.a = rng.cgauss() * Mat::Identity(n, n) + 0.5 * (g - g.transpose());
        return A;
    }
    A.a = random_complex(n, n, rng);
    if (sys.type == TripleType::I)
        A.b = random_complex(sys.cols(), sys.cols(), rng);
    return A;
}

KKTElement random_kkt_real(const TripleSystem& sys, Rng& rng) {
    KKTElement g;
    g.x = random_element(sys, rng);
    g.A = random_aut_real(sys, rng);
    g.y = g.x;
    return g;
}

KKTElement random_kkt_complex(const TripleSystem& sys, Rng& rng) {
    KKTElement g;
    g.x = random_element(sys, rng);
    g.A = random_aut_complex(sys, rng);
    g.y = random_element(sys, rng);
    return g;
}

} // namespace hermrep
