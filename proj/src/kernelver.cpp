#include <hermrep/kernelver.hpp>

#include <unsupported/Eigen/MatrixFunctions>

#include <cmath>

namespace hermrep {

namespace {

void check_doubled(const Mat& g, std::size_t p, std::size_t q) {
    if (g.rows() != static_cast<Eigen::Index>(p + q) || g.cols() != g.rows())
        throw Error(ErrorCode::BadInput, "matrix does not match the block sizes");
}

// principal log-determinant; requires the spectrum in the right half plane
Cplx logdet_principal(const Mat& k) {
    Eigen::ComplexEigenSolver<Mat> es(k);
    if (es.info() != Eigen::Success)
        throw Error(ErrorCode::NumericFailure, "eigensolver failed on a character block");
    Cplx s = 0;
    for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i) {
        const Cplx lam = es.eigenvalues()(i);
        if (lam.real() <= 0.0)
            throw Error(ErrorCode::NumericFailure,
                        "character branch violation: block spectrum leaves the right half plane");
        s += std::log(lam);
    }
    return s;
}

} // namespace

TripleDecomposition tridec(const Mat& g, std::size_t p, std::size_t q) {
    check_doubled(g, p, q);
    const Mat a = g.topLeftCorner(p, p);
    const Mat b = g.topRightCorner(p, q);
    const Mat c = g.bottomLeftCorner(q, p);
    const Mat d = g.bottomRightCorner(q, q);
    Eigen::FullPivLU<Mat> lu(d);
    if (!lu.isInvertible())
        throw Error(ErrorCode::NumericFailure,
                    "lower-right block is singular: point outside the decomposable set");
    const Mat dinv = lu.inverse();
    TripleDecomposition dec;
    dec.X = b * dinv;
    dec.k2 = d;
    dec.Y = dinv * c;
    dec.k1 = a - dec.X * c;
    return dec;
}

Mat assemble(const TripleDecomposition& dec) {
    const auto p = dec.k1.rows();
    const auto q = dec.k2.rows();
    Mat g(p + q, p + q);
    g.topLeftCorner(p, p) = dec.k1 + dec.X * dec.k2 * dec.Y;
    g.topRightCorner(p, q) = dec.X * dec.k2;
    g.bottomLeftCorner(q, p) = dec.k2 * dec.Y;
    g.bottomRightCorner(q, q) = dec.k2;
    return g;
}

Cplx character_value(const ScalarCharacter& chi, const Mat& k1, const Mat& k2) {
    Cplx expo = 0;
    if (chi.c_plus != 0)
        expo += to_double(chi.c_plus) * logdet_principal(k1);
    if (chi.c_minus != 0)
        expo += to_double(chi.c_minus) * logdet_principal(k2);
    return std::exp(expo);
}

Cplx kernel_value(const Mat& g, const Mat& h, const ScalarCharacter& chi,
                  std::size_t p, std::size_t q) {
    check_doubled(g, p, q);
    check_doubled(h, p, q);
    auto f = [&](const Mat& x) {
        TripleDecomposition dec = tridec(x, p, q);
        return character_value(chi, dec.k1, dec.k2);
    };
    const Mat hg = h.fullPivLu().solve(g);
    return f(hg) / (std::conj(f(h)) * f(g));
}

GramReport gram_test(const TripleSystem& sys, const ScalarCharacter& chi,
                     const GramOptions& opt) {
    if (sys.type == TripleType::IV)
        throw Error(ErrorCode::Unsupported, "vector-model kernels are not verified here");
    if (opt.samples < 2)
        throw Error(ErrorCode::BadInput, "at least two samples are required");
    const std::size_t p = sys.rows();
    const std::size_t q = sys.cols();

    Rng rng(opt.seed);
    GramReport report;
    for (int s = 0; s < opt.samples; ++s) {
        Mat z(p, q);
        for (std::size_t j = 0; j < q; ++j)
            for (std::size_t i = 0; i < p; ++i)
                z(i, j) = rng.cgauss();
        if (sys.type == TripleType::II)
            z = 0.5 * (z - z.transpose()).eval();
        else if (sys.type == TripleType::III)
            z = 0.5 * (z + z.transpose()).eval();
        const double top = z.jacobiSvd().singularValues()(0);
        if (top > opt.radius)
            z *= opt.radius / top;
        Mat xi = Mat::Zero(p + q, p + q);
        xi.topRightCorner(p, q) = z;
        xi.bottomLeftCorner(q, p) = z.adjoint();
        report.points.push_back(xi.exp());
    }

    const int n = opt.samples;
    Mat gram(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            try {
                gram(i, j) = kernel_value(report.points[i], report.points[j], chi, p, q);
            } catch (const Error& e) {
                if (e.code() == ErrorCode::NumericFailure)
                    throw Error(ErrorCode::NumericFailure,
                                "sample radius too large for branch safety");
                throw;
            }
        }
    if ((gram - gram.adjoint()).norm() > 1e-10 * (1.0 + gram.norm()))
        throw Error(ErrorCode::NumericFailure, "kernel Gram matrix is not hermitian");
    report.gram = 0.5 * (gram + gram.adjoint());

    Eigen::SelfAdjointEigenSolver<Mat> es(report.gram);
    if (es.info() != Eigen::Success)
        throw Error(ErrorCode::NumericFailure, "Gram eigensolver failed");
    report.min_eigenvalue = es.eigenvalues().minCoeff();
    report.positive = report.min_eigenvalue >= -opt.tol;
    return report;
}

namespace {

// min eigenvalue of the coherent-state Gram exp(c/2·⟨w,v⟩); the identity
// point pins the c < 0 failure: the {0,v} minor has det e^{c|v|²/2} − 1.
double flat_min_eigenvalue(double c, int samples, std::uint64_t seed, double radius) {
    Rng rng(seed);
    std::vector<Cplx> pts(samples, Cplx(0, 0));
    for (int i = 1; i < samples; ++i) pts[i] = radius * rng.cgauss();
    Mat gram(samples, samples);
    for (int i = 0; i < samples; ++i)
        for (int j = 0; j < samples; ++j)
            gram(i, j) = std::exp(0.5 * c * std::conj(pts[i]) * pts[j]);
    Eigen::SelfAdjointEigenSolver<Mat> es(0.5 * (gram + Mat(gram.adjoint())));
    if (es.info() != Eigen::Success)
        throw Error(ErrorCode::NumericFailure, "Gram eigensolver failed");
    return es.eigenvalues().minCoeff();
}

} // namespace

CrossTable cross_validate(const GroupSpec& spec, const Weight& weight,
                          const std::vector<Rat>& c_grid, const GramOptions& opt) {
    if (weight.support_size() != 0)
        throw Error(ErrorCode::Unsupported, "only scalar-type characters are cross-validated");
    if (opt.samples < 2)
        throw Error(ErrorCode::BadInput, "at least two samples are required");

    CrossTable table;
    if (spec.curvature == Curvature::Flat) {
        for (const Rat& c : c_grid) {
            RepData rep;
            rep.c = c;
            rep.scalar_type = true;
            CrossRow row;
            row.c = c;
            row.verdict = classify(spec, rep);
            row.min_eigenvalue =
                flat_min_eigenvalue(to_double(c), opt.samples, opt.seed, opt.radius);
            row.kernel_positive = row.min_eigenvalue >= -opt.tol;
            row.agree = row.verdict.inducible == row.kernel_positive;
            table.all_agree = table.all_agree && row.agree;
            table.rows.push_back(row);
        }
        return table;
    }

    if (spec.curvature != Curvature::Domain || spec.family != GroupFamily::I ||
        !spec.jplus.finite || !spec.jminus.finite)
        throw Error(ErrorCode::Unsupported,
                    "cross-validation covers finite rectangular pairs and the flat case");

    const auto sys = TripleSystem::rect(spec.jplus.n, spec.jminus.n);
    for (const Rat& c : c_grid) {
        RepData rep;
        rep.c = c;
        rep.scalar_type = true;
        std::map<Index, Rat> lm;
        for (std::size_t j = 1; j <= spec.jminus.n; ++j) lm[static_cast<Index>(j)] = -c;
        rep.lambda_minus = Weight(lm);

        CrossRow row;
        row.c = c;
        row.verdict = classify(spec, rep);
        ScalarCharacter chi;
        chi.c_minus = -c;
        const GramReport gr = gram_test(sys, chi, opt);
        row.min_eigenvalue = gr.min_eigenvalue;
        row.kernel_positive = gr.positive;
        row.agree = row.verdict.inducible == row.kernel_positive;
        table.all_agree = table.all_agree && row.agree;
        table.rows.push_back(row);
    }
    return table;
}

} // namespace hermrep
