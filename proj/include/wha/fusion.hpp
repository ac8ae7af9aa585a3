#pragma once

#include <cmath>
#include <string>
#include <vector>

#include "wha/integrals.hpp"
#include "wha/perron.hpp"
#include "wha/wedderburn.hpp"
#include "wha/weak_hopf.hpp"

namespace wha {

// Grothendieck ring data: nonnegative integer structure constants
// chi_i chi_j = sum_k N_{ij}^k chi_k, duality involution, unit label.
struct FusionRing {
    int rank = 0;
    std::vector<std::string> labels;
    std::vector<long long> N;  // (i*rank + j)*rank + k
    std::vector<int> star;
    int unit = -1;

    long long n(int i, int j, int k) const {
        return N[(static_cast<size_t>(i) * rank + j) * rank + k];
    }
    long long& n(int i, int j, int k) {
        return N[(static_cast<size_t>(i) * rank + j) * rank + k];
    }

    // Matrix of left multiplication by chi_j on the character basis.
    QMatrix mult_matrix(int j) const {
        QMatrix m(rank, rank);
        for (int i = 0; i < rank; ++i)
            for (int k = 0; k < rank; ++k) m(k, i) = Rational(n(j, i, k));
        return m;
    }

    Algebra as_algebra() const {
        Algebra a;
        a.n = rank;
        a.label = "K0-ring";
        a.mult = Tensor3(rank, rank, rank);
        for (int i = 0; i < rank; ++i)
            for (int j = 0; j < rank; ++j)
                for (int k = 0; k < rank; ++k) a.mult(i, j, k) = Rational(n(i, j, k));
        a.unit = QVec(rank, Rational(0));
        a.unit[unit] = Rational(1);
        return a;
    }
};

// Structural sanity of a fusion ring: associativity, unit law, star
// anti-automorphism, and the duality pairing N_{ij}^1 = delta_{j,i*}.
inline bool validate_fusion(const FusionRing& f, std::string* why = nullptr) {
    auto fail = [&](const std::string& msg) {
        if (why) *why = msg;
        return false;
    };
    const int r = f.rank;
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j)
            for (int k = 0; k < r; ++k)
                if (f.n(i, j, k) < 0) return fail("negative multiplicity");
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j)
            for (int k = 0; k < r; ++k)
                for (int l = 0; l < r; ++l) {
                    long long lhs = 0, rhs = 0;
                    for (int p = 0; p < r; ++p) {
                        lhs += f.n(i, j, p) * f.n(p, k, l);
                        rhs += f.n(j, k, p) * f.n(i, p, l);
                    }
                    if (lhs != rhs) return fail("associativity fails");
                }
    for (int i = 0; i < r; ++i)
        for (int k = 0; k < r; ++k) {
            if (f.n(f.unit, i, k) != (i == k ? 1 : 0)) return fail("unit law fails");
            if (f.n(i, f.unit, k) != (i == k ? 1 : 0)) return fail("unit law fails");
        }
    for (int i = 0; i < r; ++i)
        if (f.star[f.star[i]] != i) return fail("star is not an involution");
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j)
            for (int k = 0; k < r; ++k)
                if (f.n(i, j, k) != f.n(f.star[j], f.star[i], f.star[k]))
                    return fail("star is not an anti-automorphism");
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j)
            if (f.n(i, j, f.unit) != (j == f.star[i] ? 1 : 0))
                return fail("duality pairing fails");
    return true;
}

// Character of the trivial module, as an exact row: chi_1(h) = eps(h1 h2).
inline QVec trivial_character_row(const WeakHopfAlgebra& A) {
    QMatrix e = A.counit_pair_table();
    QVec row(A.n);
    for (size_t h = 0; h < A.n; ++h) {
        Rational s;
        for (size_t p = 0; p < A.n; ++p)
            for (size_t q = 0; q < A.n; ++q)
                if (!A.comult(h, p, q).is_zero()) s += A.comult(h, p, q) * e(p, q);
        row[h] = s;
    }
    return row;
}

// K_0(A) from Wedderburn data: multiplicities of the product characters
// (chi_i (x) chi_j) o Delta on the central idempotents, duality from
// chi o S, unit label triple-checked.
inline FusionRing fusion_ring(const WeakHopfAlgebra& A, const WedderburnData& wd,
                              const Tolerances& tol) {
    if (!connectivity(A).connected)
        throw Error(ErrorKind::NotConnected, "fusion ring requires a connected algebra");
    const int r = static_cast<int>(wd.blocks.size());
    const size_t n = A.n;
    FusionRing f;
    f.rank = r;
    f.N.assign(static_cast<size_t>(r) * r * r, 0);
    f.star.assign(r, -1);

    // product character evaluated on each central idempotent
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) {
            for (int k = 0; k < r; ++k) {
                Cplx phi(0, 0);
                const CVec& z = wd.blocks[k].idempotent;
                for (size_t p = 0; p < n; ++p) {
                    if (z(p) == Cplx(0, 0)) continue;
                    for (size_t a = 0; a < n; ++a)
                        for (size_t b = 0; b < n; ++b)
                            if (!A.comult(p, a, b).is_zero())
                                phi += z(p) * A.comult(p, a, b).to_double() *
                                       wd.blocks[i].character(a) * wd.blocks[j].character(b);
                }
                auto mult = round_int(phi / static_cast<double>(wd.blocks[k].dim), tol);
                if (!mult || *mult < 0)
                    throw Error(ErrorKind::NotIntegral,
                                "fusion multiplicity fails integer rounding");
                f.n(i, j, k) = *mult;
            }
        }

    // duality from chi o S
    for (int j = 0; j < r; ++j) {
        CVec chis = CVec::Zero(n);
        for (size_t g = 0; g < n; ++g)
            for (size_t h = 0; h < n; ++h)
                if (!A.antipode(h, g).is_zero())
                    chis(g) += wd.blocks[j].character(h) * A.antipode(h, g).to_double();
        int best = -1;
        double best_dist = 1e100;
        for (int k = 0; k < r; ++k) {
            double dist = (chis - wd.blocks[k].character).cwiseAbs().maxCoeff();
            if (dist < best_dist) { best_dist = dist; best = k; }
        }
        if (best_dist > 1e-6)
            throw Error(ErrorKind::Internal, "dual character does not match any block");
        f.star[j] = best;
    }

    // unit label: fusion-theoretic detection ...
    int unit_by_n = -1;
    for (int j = 0; j < r; ++j) {
        bool is_unit = true;
        for (int k = 0; k < r && is_unit; ++k)
            for (int l = 0; l < r && is_unit; ++l)
                if (f.n(j, k, l) != (k == l ? 1 : 0) || f.n(k, j, l) != (k == l ? 1 : 0))
                    is_unit = false;
        if (is_unit) {
            if (unit_by_n >= 0) throw Error(ErrorKind::Internal, "two fusion units found");
            unit_by_n = j;
        }
    }
    if (unit_by_n < 0) throw Error(ErrorKind::Internal, "no fusion unit found");

    // ... cross-checked against the block supporting the canonical left
    // integral of A ...
    QVec ell_can = canonical_integral(dual(A));
    CVec ell = to_cvec(ell_can);
    int unit_by_ell = -1;
    double best_norm = 0;
    for (int j = 0; j < r; ++j) {
        Cplx val(0, 0);
        for (size_t i = 0; i < n; ++i) val += wd.blocks[j].character(i) * ell(i);
        if (std::abs(val) > best_norm) { best_norm = std::abs(val); unit_by_ell = j; }
    }
    for (int j = 0; j < r; ++j) {
        if (j == unit_by_ell) continue;
        Cplx val(0, 0);
        for (size_t i = 0; i < n; ++i) val += wd.blocks[j].character(i) * ell(i);
        if (std::abs(val) > 1e-6 * std::max(1.0, best_norm))
            throw Error(ErrorKind::Internal,
                        "canonical integral meets more than one block");
    }
    if (unit_by_ell != unit_by_n)
        throw Error(ErrorKind::Internal, "fusion unit disagrees with the canonical integral block");

    // ... and against the exact trivial character row.
    QVec triv = trivial_character_row(A);
    double dist = 0;
    for (size_t i = 0; i < n; ++i)
        dist = std::max(dist, std::abs(wd.blocks[unit_by_n].character(i) - triv[i].to_double()));
    if (dist > 1e-6)
        throw Error(ErrorKind::Internal, "fusion unit character differs from the trivial character");

    f.unit = unit_by_n;
    for (int j = 0; j < r; ++j) f.labels.push_back("V" + std::to_string(j + 1));

    std::string why;
    if (!validate_fusion(f, &why)) throw Error(ErrorKind::Internal, "fusion ring invalid: " + why);
    return f;
}

// Frobenius-Perron dimensions: f_j is the Perron value of the matrix of
// left multiplication by chi_j; checked to be multiplicative on N.
inline std::vector<double> fp_dimensions(const FusionRing& f, const Tolerances& tol) {
    std::vector<double> fp(f.rank);
    for (int j = 0; j < f.rank; ++j) fp[j] = perron(f.mult_matrix(j), tol).value;
    const double loose = tol.loose();
    for (int i = 0; i < f.rank; ++i)
        for (int j = 0; j < f.rank; ++j) {
            double sum = 0;
            for (int k = 0; k < f.rank; ++k) sum += static_cast<double>(f.n(i, j, k)) * fp[k];
            if (std::abs(fp[i] * fp[j] - sum) > loose * std::max(1.0, std::abs(sum)))
                throw Error(ErrorKind::Internal, "FP dimension map is not multiplicative");
        }
    for (int j = 0; j < f.rank; ++j)
        if (std::abs(fp[j] - fp[f.star[j]]) > loose)
            throw Error(ErrorKind::Internal, "FP dimension not star-invariant");
    return fp;
}

// rho = sum_j FPdim(V_j) chi_j as a row over A.
inline CVec fp_character(const WedderburnData& wd, const std::vector<double>& fp) {
    CVec rho = CVec::Zero(wd.blocks.empty() ? 0 : wd.blocks.front().character.size());
    for (size_t j = 0; j < wd.blocks.size(); ++j) rho += fp[j] * wd.blocks[j].character;
    return rho;
}

}  // namespace wha
