#pragma once

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <complex>
#include <functional>
#include <numeric>
#include <optional>
#include <vector>

#include "wha/config.hpp"
#include "wha/errors.hpp"
#include "wha/linalg.hpp"

namespace wha {

using Cplx = std::complex<double>;
using CMat = Eigen::MatrixXcd;
using CVec = Eigen::VectorXcd;

inline CMat to_cmat(const QMatrix& m) {
    CMat c(m.rows(), m.cols());
    for (size_t i = 0; i < m.rows(); ++i)
        for (size_t j = 0; j < m.cols(); ++j) c(i, j) = Cplx(m(i, j).to_double(), 0.0);
    return c;
}

inline CVec to_cvec(const QVec& v) {
    CVec c(v.size());
    for (size_t i = 0; i < v.size(); ++i) c(i) = Cplx(v[i].to_double(), 0.0);
    return c;
}

// Nearest integer if x is within int_round of one (and essentially real).
inline std::optional<long long> round_int(Cplx x, const Tolerances& tol) {
    if (std::abs(x.imag()) >= tol.int_round) return std::nullopt;
    double n = std::round(x.real());
    if (std::abs(x.real() - n) >= tol.int_round) return std::nullopt;
    return static_cast<long long>(n);
}

inline std::optional<long long> round_int(double x, const Tolerances& tol) {
    return round_int(Cplx(x, 0.0), tol);
}

struct EigCluster {
    Cplx value;        // cluster mean
    int multiplicity;
    CMat projection;   // spectral projection onto the clustered eigenspace
};

// Spectral decomposition of a diagonalizable matrix with eigenvalues
// clustered at radius eig_cluster. Clusters separated by less than
// 2*eig_cluster are rejected as ambiguous.
inline std::vector<EigCluster> eig_decompose(const CMat& m, const Tolerances& tol) {
    const auto n = m.rows();
    if (n != m.cols()) throw Error(ErrorKind::DimensionMismatch, "eig_decompose: square matrix required");
    Eigen::ComplexEigenSolver<CMat> es(m, /*computeEigenvectors=*/true);
    if (es.info() != Eigen::Success)
        throw Error(ErrorKind::Internal, "eigen solver failed");
    const CVec vals = es.eigenvalues();
    const CMat vecs = es.eigenvectors();

    // Union-find clustering at radius eig_cluster.
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int i) {
        while (parent[i] != i) i = parent[i] = parent[parent[i]];
        return i;
    };
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (std::abs(vals(i) - vals(j)) < tol.eig_cluster) parent[find(i)] = find(j);

    std::vector<std::vector<int>> groups;
    std::vector<int> group_of(n, -1);
    for (int i = 0; i < n; ++i) {
        int r = find(i);
        if (group_of[r] < 0) {
            group_of[r] = static_cast<int>(groups.size());
            groups.push_back({});
        }
        groups[group_of[r]].push_back(i);
    }

    std::vector<EigCluster> clusters;
    for (const auto& g : groups) {
        Cplx mean(0, 0);
        for (int i : g) mean += vals(i);
        mean /= static_cast<double>(g.size());
        clusters.push_back({mean, static_cast<int>(g.size()), CMat()});
    }

    for (size_t a = 0; a < clusters.size(); ++a)
        for (size_t b = a + 1; b < clusters.size(); ++b)
            if (std::abs(clusters[a].value - clusters[b].value) < 2 * tol.eig_cluster)
                throw Error(ErrorKind::NumericallyIndistinct,
                            "eigenvalue clusters with ambiguous separation");

    Eigen::FullPivLU<CMat> lu(vecs);
    if (!lu.isInvertible())
        throw Error(ErrorKind::NumericallyIndistinct, "eigenvector matrix numerically singular");
    const CMat vinv = lu.inverse();

    for (size_t gi = 0; gi < groups.size(); ++gi) {
        CMat sel = CMat::Zero(n, n);
        for (int i : groups[gi]) sel(i, i) = 1.0;
        clusters[gi].projection = vecs * sel * vinv;
    }

    // Deterministic ordering and resolution-of-identity validation.
    std::sort(clusters.begin(), clusters.end(), [](const EigCluster& a, const EigCluster& b) {
        if (a.value.real() != b.value.real()) return a.value.real() < b.value.real();
        return a.value.imag() < b.value.imag();
    });
    CMat sum = CMat::Zero(n, n);
    for (const auto& c : clusters) sum += c.projection;
    if ((sum - CMat::Identity(n, n)).cwiseAbs().maxCoeff() > tol.loose() * std::max(1.0, m.cwiseAbs().maxCoeff()))
        throw Error(ErrorKind::NumericallyIndistinct, "spectral projections do not resolve the identity");
    return clusters;
}

inline std::vector<Cplx> eigenvalues(const CMat& m) {
    Eigen::ComplexEigenSolver<CMat> es(m, false);
    if (es.info() != Eigen::Success) throw Error(ErrorKind::Internal, "eigen solver failed");
    std::vector<Cplx> v(es.eigenvalues().data(), es.eigenvalues().data() + es.eigenvalues().size());
    std::sort(v.begin(), v.end(), [](Cplx a, Cplx b) {
        if (a.real() != b.real()) return a.real() < b.real();
        return a.imag() < b.imag();
    });
    return v;
}

// Continued-fraction rationalization of a double. Used to detect exact
// rational spectral data; every use is followed by an exact verification.
// The small denominator cap keeps irrational inputs out.
inline std::optional<Rational> rationalize(double x, double tol = 1e-9, long long den_cap = 4096) {
    if (!std::isfinite(x)) return std::nullopt;
    double a = x;
    long long p0 = 0, q0 = 1, p1 = 1, q1 = 0;
    for (int it = 0; it < 64; ++it) {
        double fl = std::floor(a);
        if (fl > 9e17 || fl < -9e17) return std::nullopt;
        long long ai = static_cast<long long>(fl);
        long long p2 = ai * p1 + p0, q2 = ai * q1 + q0;
        if (q2 > den_cap) return std::nullopt;
        if (std::abs(x - static_cast<double>(p2) / static_cast<double>(q2)) < tol)
            return Rational(p2, q2);
        double frac = a - fl;
        if (frac < 1e-15) return std::nullopt;
        a = 1.0 / frac;
        p0 = p1; q0 = q1; p1 = p2; q1 = q2;
    }
    return std::nullopt;
}

inline std::optional<QVec> rationalize_vec(const CVec& v, double tol = 1e-9) {
    QVec out(v.size());
    for (Eigen::Index i = 0; i < v.size(); ++i) {
        if (std::abs(v(i).imag()) > tol) return std::nullopt;
        auto r = rationalize(v(i).real(), tol);
        if (!r) return std::nullopt;
        out[i] = *r;
    }
    return out;
}

}  // namespace wha
