#include <hermrep/fockspace.hpp>

#include <unsupported/Eigen/MatrixFunctions>

#include <cmath>

namespace hermrep {

namespace {

void enumerate_degree(std::size_t m, int remaining, MultiIndex& cur,
                      std::vector<MultiIndex>& out) {
    if (cur.size() + 1 == m) {
        cur.push_back(remaining);
        out.push_back(cur);
        cur.pop_back();
        return;
    }
    for (int v = 0; v <= remaining; ++v) {
        cur.push_back(v);
        enumerate_degree(m, remaining - v, cur, out);
        cur.pop_back();
    }
}

double log_factorial(const MultiIndex& alpha) {
    double s = 0;
    for (int a : alpha)
        s += std::lgamma(a + 1.0);
    return s;
}

void check_vector(const Vec& v, const FockBasis& basis) {
    if (v.size() != static_cast<Eigen::Index>(basis.m))
        throw Error(ErrorCode::BadInput, "vector dimension does not match the basis");
}

} // namespace

FockBasis::FockBasis(std::size_t m, std::size_t N) : m(m), N(N) {
    if (m == 0)
        throw Error(ErrorCode::BadInput, "one-particle space must have positive dimension");
    for (std::size_t n = 0; n <= N; ++n) {
        MultiIndex cur;
        enumerate_degree(m, static_cast<int>(n), cur, indices);
    }
    for (std::size_t i = 0; i < indices.size(); ++i)
        lookup_[indices[i]] = i;
}

std::size_t FockBasis::degree(std::size_t i) const {
    int s = 0;
    for (int a : indices[i])
        s += a;
    return static_cast<std::size_t>(s);
}

std::size_t FockBasis::index_of(const MultiIndex& alpha) const {
    auto it = lookup_.find(alpha);
    if (it == lookup_.end())
        throw Error(ErrorCode::BadInput, "multi-index outside the truncation");
    return it->second;
}

Mat FockBasis::degree_projector(std::size_t n) const {
    Mat p = Mat::Zero(dim(), dim());
    for (std::size_t i = 0; i < dim(); ++i)
        if (degree(i) == n)
            p(i, i) = 1.0;
    return p;
}

FockOperator create(const Vec& v, const FockBasis& basis) {
    check_vector(v, basis);
    const auto d = static_cast<Eigen::Index>(basis.dim());
    FockOperator op{Mat::Zero(d, d), DegreeShift::Raise};
    for (std::size_t i = 0; i < basis.dim(); ++i) {
        if (basis.degree(i) == basis.N)
            continue; // raising out of the truncation
        MultiIndex alpha = basis.indices[i];
        for (std::size_t k = 0; k < basis.m; ++k) {
            alpha[k] += 1;
            op.matrix(basis.index_of(alpha), i) += v(k) * std::sqrt(double(alpha[k]));
            alpha[k] -= 1;
        }
    }
    return op;
}

FockOperator annihilate(const Vec& v, const FockBasis& basis) {
    check_vector(v, basis);
    const auto d = static_cast<Eigen::Index>(basis.dim());
    FockOperator op{Mat::Zero(d, d), DegreeShift::Lower};
    for (std::size_t i = 0; i < basis.dim(); ++i) {
        MultiIndex alpha = basis.indices[i];
        for (std::size_t k = 0; k < basis.m; ++k) {
            if (alpha[k] == 0)
                continue;
            const double s = std::sqrt(double(alpha[k]));
            alpha[k] -= 1;
            op.matrix(basis.index_of(alpha), i) += std::conj(v(k)) * s;
            alpha[k] += 1;
        }
    }
    return op;
}

CcrReport ccr_check(const Vec& v, const Vec& w, const FockBasis& basis) {
    const Mat av = annihilate(v, basis).matrix;
    const Mat aw = annihilate(w, basis).matrix;
    const Mat cw = create(w, basis).matrix;
    CcrReport r;
    r.lower_commutator = (av * aw - aw * av).norm();
    Mat low = Mat::Zero(basis.dim(), basis.dim());
    for (std::size_t n = 0; n + 1 <= basis.N; ++n)
        low += basis.degree_projector(n);
    const Cplx pairing = v.dot(w); // ⟨w,v⟩, linear in w
    Mat mixed = av * cw - cw * av - pairing * Mat::Identity(basis.dim(), basis.dim());
    r.mixed_commutator = (mixed * low).norm();
    return r;
}

FockOperator weyl(const Vec& v, const FockBasis& basis) {
    check_vector(v, basis);
    const Cplx coeff(0.0, 1.0 / std::sqrt(2.0));
    Mat gen = coeff * (annihilate(v, basis).matrix + create(v, basis).matrix);
    return FockOperator{gen.exp(), DegreeShift::Mixed};
}

Mat k_action(const Mat& U, std::size_t n, const FockBasis& basis) {
    if (U.rows() != static_cast<Eigen::Index>(basis.m) || U.cols() != U.rows())
        throw Error(ErrorCode::BadInput, "one-particle operator has the wrong shape");
    if ((U.adjoint() * U - Mat::Identity(U.rows(), U.cols())).norm() > 1e-10)
        throw Error(ErrorCode::BadInput, "one-particle operator is not unitary");
    if (n > basis.N)
        throw Error(ErrorCode::BadInput, "degree outside the truncation");

    std::vector<std::size_t> block;
    for (std::size_t i = 0; i < basis.dim(); ++i)
        if (basis.degree(i) == n)
            block.push_back(i);
    std::map<std::size_t, std::size_t> pos;
    for (std::size_t j = 0; j < block.size(); ++j)
        pos[block[j]] = j;

    Mat s = Mat::Zero(block.size(), block.size());
    for (std::size_t j = 0; j < block.size(); ++j) {
        const MultiIndex& alpha = basis.indices[block[j]];
        // expand Π_k (U e_k)^{α_k} in the monomial basis
        std::map<MultiIndex, Cplx> poly;
        poly[MultiIndex(basis.m, 0)] = 1.0;
        for (std::size_t k = 0; k < basis.m; ++k)
            for (int rep = 0; rep < alpha[k]; ++rep) {
                std::map<MultiIndex, Cplx> next;
                for (const auto& [beta, coeff] : poly) {
                    MultiIndex gamma = beta;
                    for (std::size_t l = 0; l < basis.m; ++l) {
                        gamma[l] += 1;
                        next[gamma] += coeff * U(l, k);
                        gamma[l] -= 1;
                    }
                }
                poly = std::move(next);
            }
        const double la = log_factorial(alpha);
        for (const auto& [beta, coeff] : poly)
            s(pos.at(basis.index_of(beta)), j) =
                coeff * std::exp(0.5 * (log_factorial(beta) - la));
    }
    return s;
}

FockOperator fock_k_action(const Mat& U, const FockBasis& basis) {
    FockOperator op{Mat::Zero(basis.dim(), basis.dim()), DegreeShift::Keep};
    for (std::size_t n = 0; n <= basis.N; ++n) {
        std::vector<std::size_t> block;
        for (std::size_t i = 0; i < basis.dim(); ++i)
            if (basis.degree(i) == n)
                block.push_back(i);
        Mat s = k_action(U, n, basis);
        for (std::size_t a = 0; a < block.size(); ++a)
            for (std::size_t b = 0; b < block.size(); ++b)
                op.matrix(block[a], block[b]) = s(a, b);
    }
    return op;
}

bool vacuum_characterization(const FockBasis& basis) {
    std::vector<std::size_t> all(basis.m);
    for (std::size_t k = 0; k < basis.m; ++k)
        all[k] = k;
    return vacuum_characterization(basis, all);
}

bool vacuum_characterization(const FockBasis& basis, const std::vector<std::size_t>& which) {
    for (std::size_t k : which)
        if (k >= basis.m)
            throw Error(ErrorCode::BadInput, "annihilator index out of range");
    const std::size_t d = basis.dim();
    // unnormalized lowering a(e_k) v^α = α_k v^{α−δ_k} has integer entries;
    // the kernel is unchanged by the diagonal normalization
    std::vector<std::vector<Rat>> rows;
    for (std::size_t k : which)
        for (std::size_t i = 0; i < d; ++i) {
            const MultiIndex& alpha = basis.indices[i];
            if (alpha[k] == 0)
                continue;
            // equation indexed by (k, α−δ_k): α_k · ξ_α = 0
            std::vector<Rat> row(d, Rat(0));
            row[i] = Rat(alpha[k]);
            rows.push_back(std::move(row));
        }
    // exact row reduction
    std::size_t rank = 0;
    for (std::size_t col = 0; col < d && rank < rows.size(); ++col) {
        std::size_t pivot = rank;
        while (pivot < rows.size() && rows[pivot][col] == 0)
            ++pivot;
        if (pivot == rows.size())
            continue;
        std::swap(rows[rank], rows[pivot]);
        const Rat pv = rows[rank][col];
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r == rank || rows[r][col] == 0)
                continue;
            const Rat f = rows[r][col] / pv;
            for (std::size_t c2 = col; c2 < d; ++c2)
                rows[r][c2] -= f * rows[rank][c2];
        }
        ++rank;
    }
    return rank == d - 1;
}

FockOperator number_operator(const FockBasis& basis) {
    const auto d = static_cast<Eigen::Index>(basis.dim());
    FockOperator op{Mat::Zero(d, d), DegreeShift::Keep};
    for (std::size_t k = 0; k < basis.m; ++k) {
        Vec ek = Vec::Zero(basis.m);
        ek(k) = 1.0;
        op.matrix += create(ek, basis).matrix * annihilate(ek, basis).matrix;
    }
    return op;
}

Mat oscillator_hamiltonian(const FockBasis& basis, double c) {
    return c * Mat::Identity(basis.dim(), basis.dim()) + number_operator(basis).matrix;
}

MotionElement mu_scale(const MotionElement& a, double h) {
    return MotionElement{h * h * a.t, h * a.v, a.A};
}

double scaled_charge(double h) { return 0.5 * h * h; }

} // namespace hermrep
