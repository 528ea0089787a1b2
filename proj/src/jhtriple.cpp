#include <hermrep/jhtriple.hpp>

#include <cmath>

namespace hermrep {

TripleSystem TripleSystem::rect(std::size_t p, std::size_t q, bool negative) {
    if (p < 1 || q < 1) throw Error(ErrorCode::BadInput, "rectangular type needs p,q >= 1");
    return {TripleType::I, p, q, negative};
}

TripleSystem TripleSystem::skew(std::size_t n, bool negative) {
    if (n < 2) throw Error(ErrorCode::BadInput, "skew type needs n >= 2");
    return {TripleType::II, n, n, negative};
}

TripleSystem TripleSystem::sym(std::size_t n, bool negative) {
    if (n < 1) throw Error(ErrorCode::BadInput, "symmetric type needs n >= 1");
    return {TripleType::III, n, n, negative};
}

TripleSystem TripleSystem::spin(std::size_t n, bool negative) {
    if (n < 1) throw Error(ErrorCode::BadInput, "vector type needs n >= 1");
    return {TripleType::IV, n, 1, negative};
}

TripleSystem TripleSystem::dual() const {
    TripleSystem d = *this;
    d.negative = !negative;
    return d;
}

std::size_t TripleSystem::dim() const {
    switch (type) {
        case TripleType::I: return p * q;
        case TripleType::II: return p * (p - 1) / 2;
        case TripleType::III: return p * (p + 1) / 2;
        case TripleType::IV: return p;
    }
    return 0;
}

std::string triple_type_name(TripleType t) {
    switch (t) {
        case TripleType::I: return "I";
        case TripleType::II: return "II";
        case TripleType::III: return "III";
        case TripleType::IV: return "IV";
    }
    return "?";
}

TripleType triple_type_from_name(const std::string& s) {
    if (s == "I") return TripleType::I;
    if (s == "II") return TripleType::II;
    if (s == "III") return TripleType::III;
    if (s == "IV") return TripleType::IV;
    throw Error(ErrorCode::BadInput, "unknown triple type: " + s);
}

namespace {

void check_shape(const Mat& x, const TripleSystem& sys, const char* name) {
    if (x.rows() != Eigen::Index(sys.rows()) || x.cols() != Eigen::Index(sys.cols()))
        throw Error(ErrorCode::BadInput,
                    std::string(name) + " has shape " + std::to_string(x.rows()) + "x" +
                        std::to_string(x.cols()) + ", system needs " +
                        std::to_string(sys.rows()) + "x" + std::to_string(sys.cols()));
}

Cplx inner(const Mat& a, const Mat& b) { return (b.adjoint() * a).trace(); }

} // namespace

Mat triple(const Mat& x, const Mat& y, const Mat& z, const TripleSystem& sys) {
    check_shape(x, sys, "x");
    check_shape(y, sys, "y");
    check_shape(z, sys, "z");
    Mat out;
    if (sys.type == TripleType::IV) {
        Mat sy = y.conjugate(), sz = z.conjugate();
        out = inner(x, y) * z + inner(z, y) * x - inner(x, sz) * sy;
    } else {
        out = 0.5 * (x * y.adjoint() * z + z * y.adjoint() * x);
    }
    return sys.negative ? Mat(-out) : out;
}

std::vector<Mat> element_basis(const TripleSystem& sys) {
    std::vector<Mat> basis;
    const std::size_t n = sys.p;
    const double r = 1.0 / std::sqrt(2.0);
    switch (sys.type) {
        case TripleType::I:
            for (std::size_t i = 0; i < sys.p; ++i)
                for (std::size_t j = 0; j < sys.q; ++j) {
                    Mat e = Mat::Zero(sys.p, sys.q);
                    e(i, j) = 1;
                    basis.push_back(e);
                }
            break;
        case TripleType::II:
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = i + 1; j < n; ++j) {
                    Mat e = Mat::Zero(n, n);
                    e(i, j) = r;
                    e(j, i) = -r;
                    basis.push_back(e);
                }
            break;
        case TripleType::III:
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = i; j < n; ++j) {
                    Mat e = Mat::Zero(n, n);
                    if (i == j) e(i, i) = 1;
                    else { e(i, j) = r; e(j, i) = r; }
                    basis.push_back(e);
                }
            break;
        case TripleType::IV:
            for (std::size_t i = 0; i < n; ++i) {
                Mat e = Mat::Zero(n, 1);
                e(i, 0) = 1;
                basis.push_back(e);
            }
            break;
    }
    return basis;
}

Vec to_coords(const Mat& x, const TripleSystem& sys) {
    check_shape(x, sys, "x");
    auto basis = element_basis(sys);
    Vec c(basis.size());
    for (std::size_t i = 0; i < basis.size(); ++i) c(i) = inner(x, basis[i]);
    return c;
}

Mat from_coords(const Vec& c, const TripleSystem& sys) {
    auto basis = element_basis(sys);
    if (std::size_t(c.size()) != basis.size())
        throw Error(ErrorCode::BadInput, "coordinate vector has wrong length");
    Mat x = Mat::Zero(sys.rows(), sys.cols());
    for (std::size_t i = 0; i < basis.size(); ++i) x += c(i) * basis[i];
    return x;
}

Mat box_matrix(const Mat& x, const Mat& y, const TripleSystem& sys) {
    auto basis = element_basis(sys);
    Mat b(basis.size(), basis.size());
    for (std::size_t j = 0; j < basis.size(); ++j) {
        Mat img = triple(x, y, basis[j], sys);
        for (std::size_t i = 0; i < basis.size(); ++i) b(i, j) = inner(img, basis[i]);
    }
    return b;
}

double spectral_norm(const Mat& z, const TripleSystem& sys) {
    Mat b = box_matrix(z, z, sys);
    Eigen::SelfAdjointEigenSolver<Mat> es(0.5 * (b + b.adjoint()));
    double top = 0;
    for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i)
        top = std::max(top, std::abs(es.eigenvalues()(i)));
    return std::sqrt(top);
}

Mat random_element(const TripleSystem& sys, Rng& rng) {
    Mat g(sys.rows(), sys.cols());
    for (Eigen::Index i = 0; i < g.rows(); ++i)
        for (Eigen::Index j = 0; j < g.cols(); ++j) g(i, j) = rng.cgauss();
    switch (sys.type) {
        case TripleType::II: return 0.5 * (g - g.transpose());
        case TripleType::III: return 0.5 * (g + g.transpose());
        default: return g;
    }
}

AxiomReport check_axioms(const TripleSystem& sys, int trials, double tol, Rng& rng) {
    if (trials < 1) throw Error(ErrorCode::BadInput, "need at least one trial");
    AxiomReport rep;
    for (int t = 0; t < trials; ++t) {
        Mat x = random_element(sys, rng), y = random_element(sys, rng);
        Mat a = random_element(sys, rng), b = random_element(sys, rng);
        Mat c = random_element(sys, rng);
        rep.jh1 = std::max(rep.jh1,
                           (triple(x, y, a, sys) - triple(a, y, x, sys)).norm());
        Mat lhs = triple(x, y, triple(a, b, c, sys), sys);
        Mat rhs = triple(triple(x, y, a, sys), b, c, sys) -
                  triple(a, triple(y, x, b, sys), c, sys) +
                  triple(a, b, triple(x, y, c, sys), sys);
        rep.jh2 = std::max(rep.jh2, (lhs - rhs).norm());
        Mat bx = box_matrix(x, x, sys);
        rep.jh3 = std::max(rep.jh3, (bx - bx.adjoint()).norm());
    }
    rep.pass = rep.jh1 <= tol && rep.jh2 <= tol && rep.jh3 <= tol;
    return rep;
}

TripleSign sign_of(const TripleSystem& sys, int trials, double tol, Rng& rng) {
    bool nonneg = true, nonpos = true;
    for (int t = 0; t < trials; ++t) {
        Mat x = random_element(sys, rng);
        Mat b = box_matrix(x, x, sys);
        Eigen::SelfAdjointEigenSolver<Mat> es(0.5 * (b + b.adjoint()));
        for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i) {
            double ev = es.eigenvalues()(i);
            if (ev < -tol) nonneg = false;
            if (ev > tol) nonpos = false;
        }
    }
    if (nonneg && !nonpos) return TripleSign::positive;
    if (nonpos && !nonneg) return TripleSign::negative;
    if (nonneg && nonpos) return TripleSign::positive; // zero system: degenerate
    return TripleSign::indefinite;
}

bool tripotent_check(const Mat& z, const TripleSystem& sys, double tol) {
    return (triple(z, z, z, sys) - z).norm() <= tol;
}

} // namespace hermrep
