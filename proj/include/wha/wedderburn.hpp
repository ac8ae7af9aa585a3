#pragma once

#include <algorithm>
#include <cmath>
#include <optional>
#include <vector>

#include "wha/algebra.hpp"
#include "wha/config.hpp"
#include "wha/errors.hpp"
#include "wha/spectral.hpp"

namespace wha {

// Product of complex coordinate vectors under rational structure constants.
inline CVec cmul(const Algebra& A, const CVec& x, const CVec& y) {
    CVec r = CVec::Zero(A.n);
    for (size_t i = 0; i < A.n; ++i) {
        if (x(i) == Cplx(0, 0)) continue;
        for (size_t j = 0; j < A.n; ++j) {
            if (y(j) == Cplx(0, 0)) continue;
            const Cplx c = x(i) * y(j);
            for (size_t k = 0; k < A.n; ++k)
                if (!A.mult(i, j, k).is_zero()) r(k) += c * A.mult(i, j, k).to_double();
        }
    }
    return r;
}

inline CMat left_mult_cmat(const Algebra& A, const CVec& x) {
    CMat L = CMat::Zero(A.n, A.n);
    for (size_t i = 0; i < A.n; ++i) {
        if (x(i) == Cplx(0, 0)) continue;
        for (size_t j = 0; j < A.n; ++j)
            for (size_t k = 0; k < A.n; ++k)
                if (!A.mult(i, j, k).is_zero()) L(k, j) += x(i) * A.mult(i, j, k).to_double();
    }
    return L;
}

struct WedderburnBlock {
    CVec idempotent;    // central primitive idempotent z_j, algebra coordinates
    int dim = 0;        // dim_k V_j, so the block has dimension dim^2
    CVec character;     // row: chi_j(e_i) = Tr(L_{e_i}|_{z_j A}) / dim
    std::optional<QVec> idempotent_exact;  // set when rationally reconstructed
};

struct WedderburnData {
    std::vector<WedderburnBlock> blocks;
    bool exact = false;  // all idempotents passed exact rational verification

    int total_dim_check() const {
        int s = 0;
        for (const auto& b : blocks) s += b.dim * b.dim;
        return s;
    }
};

namespace detail {

inline std::vector<long long> rounded_char_key(const CVec& chi) {
    std::vector<long long> key;
    key.reserve(2 * chi.size());
    for (Eigen::Index i = 0; i < chi.size(); ++i) {
        key.push_back(std::llround(chi(i).real() * 1e9));
        key.push_back(std::llround(chi(i).imag() * 1e9));
    }
    return key;
}

}  // namespace detail

// Wedderburn decomposition of a semisimple algebra over C: central
// primitive idempotents from the spectral projections of a seeded random
// central element, block dimensions, and irreducible characters. Exact
// rational idempotents are recovered when possible.
inline WedderburnData wedderburn(const Algebra& A, const Tolerances& tol,
                                 std::uint64_t seed, int max_attempts = 5) {
    if (!A.is_semisimple())
        throw Error(ErrorKind::NotSemisimple, A.label + " has a nonzero radical");
    std::vector<QVec> zbasis = A.center();
    const size_t nblocks = zbasis.size();
    const size_t n = A.n;

    std::vector<CMat> lbasis(n);
    for (size_t i = 0; i < n; ++i) lbasis[i] = to_cmat(A.left_mult_basis(i));

    std::string last_error = "no attempt";
    for (int attempt = 0; attempt < max_attempts; ++attempt) {
        Rng rng(seed + static_cast<std::uint64_t>(attempt));
        QVec c(n, Rational(0));
        for (const auto& z : zbasis) axpy(c, Rational(rng.next_int(-99, 99)), z);
        try {
            auto clusters = eig_decompose(to_cmat(A.left_mult(c)), tol);
            if (clusters.size() != nblocks) {
                last_error = "random central element did not separate the blocks";
                continue;
            }
            CVec unit = to_cvec(A.unit);
            WedderburnData data;
            bool ok = true;
            for (const auto& cl : clusters) {
                WedderburnBlock blk;
                blk.idempotent = cl.projection * unit;
                double tr = cl.projection.trace().real();
                auto sq = round_int(tr, tol);
                if (!sq) { ok = false; last_error = "block dimension not integral"; break; }
                double root = std::sqrt(static_cast<double>(*sq));
                auto m = round_int(root, tol);
                if (!m || *m <= 0 || (*m) * (*m) != *sq) {
                    ok = false;
                    last_error = "block dimension is not a perfect square";
                    break;
                }
                blk.dim = static_cast<int>(*m);
                blk.character = CVec::Zero(n);
                for (size_t i = 0; i < n; ++i)
                    blk.character(i) = (lbasis[i] * cl.projection).trace() / static_cast<double>(blk.dim);
                data.blocks.push_back(std::move(blk));
            }
            if (!ok) continue;
            if (data.total_dim_check() != static_cast<int>(n)) {
                last_error = "sum of squared block dimensions misses dim A";
                continue;
            }

            // validate orthogonality and character normalization
            const double loose = tol.loose();
            CVec sum = CVec::Zero(n);
            for (const auto& b : data.blocks) sum += b.idempotent;
            if ((sum - unit).cwiseAbs().maxCoeff() > loose * 10) {
                last_error = "idempotents do not sum to 1";
                continue;
            }
            for (size_t a = 0; a < data.blocks.size() && ok; ++a)
                for (size_t b = 0; b < data.blocks.size() && ok; ++b) {
                    CVec prod = cmul(A, data.blocks[a].idempotent, data.blocks[b].idempotent);
                    CVec expect = (a == b) ? data.blocks[a].idempotent : CVec::Zero(n);
                    if ((prod - expect).cwiseAbs().maxCoeff() > 1e-6) {
                        ok = false;
                        last_error = "idempotents not orthogonal";
                    }
                    Cplx chi_on_z(0, 0);
                    for (size_t i = 0; i < n; ++i)
                        chi_on_z += data.blocks[a].character(i) * data.blocks[b].idempotent(i);
                    Cplx expect_chi = (a == b) ? Cplx(data.blocks[a].dim, 0) : Cplx(0, 0);
                    if (std::abs(chi_on_z - expect_chi) > 1e-6) {
                        ok = false;
                        last_error = "character fails delta normalization on idempotents";
                    }
                }
            if (!ok) continue;

            std::sort(data.blocks.begin(), data.blocks.end(),
                      [](const WedderburnBlock& a, const WedderburnBlock& b) {
                          if (a.dim != b.dim) return a.dim < b.dim;
                          return detail::rounded_char_key(a.character) <
                                 detail::rounded_char_key(b.character);
                      });

            // attempt exact reconstruction
            data.exact = true;
            std::vector<QVec> exact;
            for (auto& b : data.blocks) {
                auto q = rationalize_vec(b.idempotent, 1e-7);
                if (!q) { data.exact = false; break; }
                exact.push_back(*q);
            }
            if (data.exact) {
                QVec total(n, Rational(0));
                for (size_t a = 0; a < exact.size() && data.exact; ++a) {
                    if (A.mul(exact[a], exact[a]) != exact[a]) data.exact = false;
                    for (size_t i = 0; i < n && data.exact; ++i) {
                        QVec e = A.basis_vec(i);
                        if (A.mul(exact[a], e) != A.mul(e, exact[a])) data.exact = false;
                    }
                    for (size_t b2 = a + 1; b2 < exact.size() && data.exact; ++b2)
                        if (!is_zero_vec(A.mul(exact[a], exact[b2]))) data.exact = false;
                    if (data.exact) {
                        Rational tr = A.left_mult(exact[a]).trace();
                        if (tr != Rational(static_cast<long long>(data.blocks[a].dim) *
                                           data.blocks[a].dim))
                            data.exact = false;
                    }
                    axpy(total, Rational(1), exact[a]);
                }
                if (data.exact && total != A.unit) data.exact = false;
                if (data.exact)
                    for (size_t a = 0; a < exact.size(); ++a)
                        data.blocks[a].idempotent_exact = exact[a];
            }
            return data;
        } catch (const Error& e) {
            if (e.kind() != ErrorKind::NumericallyIndistinct) throw;
            last_error = e.what();
        }
    }
    throw Error(ErrorKind::NumericallyIndistinct,
                "wedderburn failed after retries: " + last_error);
}

}  // namespace wha
