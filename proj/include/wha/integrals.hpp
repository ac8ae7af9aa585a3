#pragma once

#include <optional>
#include <string>
#include <vector>

#include "wha/config.hpp"
#include "wha/errors.hpp"
#include "wha/weak_hopf.hpp"

namespace wha {

enum class Side { Left, Right };

struct IntegralSpace {
    Side side;
    Subspace basis;
};

// Bilinear pairing table of a functional: B(i,j) = <phi, e_i e_j>. The
// functional is non-degenerate iff B is invertible.
inline QMatrix pair_table(const WeakHopfAlgebra& A, const QVec& phi) {
    QMatrix b(A.n, A.n);
    for (size_t i = 0; i < A.n; ++i)
        for (size_t j = 0; j < A.n; ++j) {
            Rational s;
            for (size_t k = 0; k < A.n; ++k)
                if (!A.mult(i, j, k).is_zero() && !phi[k].is_zero())
                    s += A.mult(i, j, k) * phi[k];
            b(i, j) = s;
        }
    return b;
}

// Exact solution space of h l = eps_t(h) l (left) or r h = r eps_s(h)
// (right), over all basis h.
inline IntegralSpace integral_space(const WeakHopfAlgebra& A, Side side) {
    const size_t n = A.n;
    QMatrix et = A.eps_t_matrix(), es = A.eps_s_matrix();
    QMatrix cond(n * n, n);
    for (size_t i = 0; i < n; ++i) {
        QMatrix diff = (side == Side::Left)
                           ? A.left_mult(A.basis_vec(i)) - A.left_mult(et.col(i))
                           : A.right_mult(A.basis_vec(i)) - A.right_mult(es.col(i));
        for (size_t r = 0; r < n; ++r)
            for (size_t c = 0; c < n; ++c) cond(i * n + r, c) = diff(r, c);
    }
    IntegralSpace space{side, nullspace(cond)};
    if (space.basis.size() != bases(A).target.size())
        throw Error(ErrorKind::Internal,
                    "integral space dimension differs from dim A_t; input is not a weak Hopf algebra");
    return space;
}

// Canonical left integral in A^*: <lambda, h> = Tr(L_h o S^2).
inline QVec canonical_integral(const WeakHopfAlgebra& A) {
    QMatrix s2 = s_squared(A);
    QVec lambda(A.n);
    for (size_t i = 0; i < A.n; ++i)
        lambda[i] = (A.left_mult(A.basis_vec(i)) * s2).trace();
    return lambda;
}

inline Rational trace_s2(const WeakHopfAlgebra& A) { return s_squared(A).trace(); }

// Left integral with eps_t(l) = 1, when one exists (Maschke).
inline std::optional<QVec> normalized_integral(const WeakHopfAlgebra& A) {
    IntegralSpace space = integral_space(A, Side::Left);
    if (space.basis.empty()) return std::nullopt;
    QMatrix b = QMatrix::from_columns(space.basis);
    auto coeff = solve(A.eps_t_matrix() * b, A.unit);
    if (!coeff) return std::nullopt;
    return b.apply(*coeff);
}

// The unique normalized two-sided integral, when it exists; verified
// unique and S-invariant.
inline std::optional<QVec> haar_integral(const WeakHopfAlgebra& A) {
    IntegralSpace left = integral_space(A, Side::Left);
    IntegralSpace right = integral_space(A, Side::Right);
    Subspace both = intersect_spans(left.basis, right.basis);
    if (both.empty()) return std::nullopt;
    QMatrix b = QMatrix::from_columns(both);
    QMatrix etb = A.eps_t_matrix() * b;
    auto coeff = solve(etb, A.unit);
    if (!coeff) return std::nullopt;
    if (!nullspace(etb).empty())
        throw Error(ErrorKind::Internal, "normalized two-sided integral is not unique");
    QVec h = b.apply(*coeff);
    if (A.apply_antipode(h) != h)
        throw Error(ErrorKind::Internal, "Haar integral is not S-invariant");
    return h;
}

struct DualIntegralPair {
    QVec ell;     // non-degenerate left integral in A
    QVec lambda;  // dual left integral in A^*, lambda -> ell = 1
};

// Unique lambda with lambda -> ell = 1 for non-degenerate ell; the
// counit identity ell -> lambda = eps is verified.
inline DualIntegralPair dual_integral(const WeakHopfAlgebra& A, const QVec& ell) {
    QMatrix dl = A.coprod(ell);
    auto lambda = solve(dl, A.unit);
    if (!lambda || !nullspace(dl).empty())
        throw Error(ErrorKind::DegenerateIntegral, "integral is degenerate");
    QVec eps_check = A.right_mult(ell).transpose().apply(*lambda);
    if (eps_check != A.counit)
        throw Error(ErrorKind::Internal, "dual integral fails ell -> lambda = eps");
    return {ell, *lambda};
}

// Dual pair built from the canonical integral: lambda canonical,
// ell the unique solution of ell -> lambda = eps.
inline DualIntegralPair canonical_dual_pair(const WeakHopfAlgebra& A) {
    QVec lambda = canonical_integral(A);
    QMatrix b = pair_table(A, lambda);
    auto ell = solve(b, A.counit);
    if (!ell || !nullspace(b).empty())
        throw Error(ErrorKind::DegenerateIntegral,
                    "canonical integral is degenerate (algebra is not semisimple)");
    if (A.coprod(*ell).apply(lambda) != A.unit)
        throw Error(ErrorKind::Internal, "canonical dual pair fails lambda -> ell = 1");
    return {*ell, lambda};
}

// ---------------------------------------------------------------------------
// Semisimplicity battery
// ---------------------------------------------------------------------------

struct BatteryCondition {
    std::string name;
    bool holds;
};

struct BatteryReport {
    std::vector<BatteryCondition> conditions;
    bool verdict = false;
};

// Five equivalent characterizations of semisimplicity, evaluated
// independently; any disagreement is an implementation bug.
inline BatteryReport semisimplicity_battery(const WeakHopfAlgebra& A) {
    if (!connectivity(A).connected)
        throw Error(ErrorKind::NotConnected, "semisimplicity battery requires a connected algebra");
    WeakHopfAlgebra D = dual(A);
    BatteryReport rep;
    rep.conditions.push_back({"trace-S2-nonzero", !trace_s2(A).is_zero()});
    rep.conditions.push_back({"normalized-left-integral", normalized_integral(A).has_value()});
    rep.conditions.push_back({"normalized-left-integral-dual", normalized_integral(D).has_value()});
    rep.conditions.push_back({"haar-integral-dual", haar_integral(D).has_value()});
    rep.conditions.push_back(
        {"canonical-integral-nondegenerate", rank(pair_table(A, canonical_integral(A))) == A.n});
    rep.verdict = rep.conditions.front().holds;
    for (const auto& c : rep.conditions)
        if (c.holds != rep.verdict)
            throw Error(ErrorKind::EquivalenceViolated,
                        "semisimplicity conditions disagree at " + c.name);
    return rep;
}

// ---------------------------------------------------------------------------
// Distinguished group-like elements and the S^4 formula
// ---------------------------------------------------------------------------

struct DistinguishedGroupLikes {
    QVec alpha;      // group-like in A^*: S(ell) = alpha -> ell
    QVec alpha_inv;  // inverse in A^*
    QVec a;          // group-like in A: S(lambda) = a -> lambda
    QVec a_inv;
};

inline DistinguishedGroupLikes distinguished_grouplikes(const WeakHopfAlgebra& A,
                                                        const DualIntegralPair& pair) {
    WeakHopfAlgebra D = dual(A);
    QMatrix dl = A.coprod(pair.ell);
    auto alpha = solve(dl, A.apply_antipode(pair.ell));
    if (!alpha) throw Error(ErrorKind::Internal, "no solution for distinguished alpha");
    QMatrix b = pair_table(A, pair.lambda);
    auto a = solve(b, A.antipode.transpose().apply(pair.lambda));
    if (!a) throw Error(ErrorKind::Internal, "no solution for distinguished a");
    if (!is_grouplike(D, *alpha))
        throw Error(ErrorKind::Internal, "distinguished alpha is not group-like");
    if (!is_grouplike(A, *a))
        throw Error(ErrorKind::Internal, "distinguished a is not group-like");
    DistinguishedGroupLikes d;
    d.alpha = *alpha;
    d.alpha_inv = *invert_element(D, *alpha);
    d.a = *a;
    d.a_inv = *invert_element(A, *a);
    return d;
}

// S^4(h) = a^{-1} (alpha -> h <- alpha^{-1}) a, exactly on every basis
// element, with (alpha, a) from the canonical dual pair.
inline bool verify_radford(const WeakHopfAlgebra& A) {
    DualIntegralPair pair = canonical_dual_pair(A);
    DistinguishedGroupLikes d = distinguished_grouplikes(A, pair);
    QMatrix s2 = s_squared(A);
    QMatrix s4 = s2 * s2;
    for (size_t i = 0; i < A.n; ++i) {
        QVec x(A.n, Rational(0));
        for (size_t p = 0; p < A.n; ++p)
            for (size_t q = 0; q < A.n; ++q) {
                if (A.comult(i, p, q).is_zero()) continue;
                for (size_t aa = 0; aa < A.n; ++aa) {
                    if (d.alpha_inv[aa].is_zero()) continue;
                    for (size_t bb = 0; bb < A.n; ++bb) {
                        if (A.comult(p, aa, bb).is_zero()) continue;
                        Rational c = A.comult(i, p, q) * A.comult(p, aa, bb) *
                                     d.alpha_inv[aa] * d.alpha[q];
                        if (!c.is_zero()) x[bb] += c;
                    }
                }
            }
        QVec lhs = s4.col(i);
        QVec rhs = A.mul(A.mul(d.a_inv, x), d.a);
        if (lhs != rhs) return false;
    }
    return true;
}

// ---------------------------------------------------------------------------
// First trace formula and the dual-bases identity
// ---------------------------------------------------------------------------

struct TraceFormula1Report {
    Rational trace_s2;
    Rational pairing;        // <eps_s(lambda), eps_s(ell)>
    bool identity = false;   // exact equality of the two
    bool dual_bases = false; // Tr(T) = <lambda, T(S^{-1}(l1)) l2> for random T
};

inline TraceFormula1Report trace_formula_1(const WeakHopfAlgebra& A, std::uint64_t seed,
                                           int num_random_ops = 5) {
    DualIntegralPair pair = canonical_dual_pair(A);
    WeakHopfAlgebra D = dual(A);
    TraceFormula1Report rep;
    rep.trace_s2 = trace_s2(A);
    QVec eps_s_lambda = D.eps_s_matrix().apply(pair.lambda);
    QVec eps_s_ell = A.eps_s_matrix().apply(pair.ell);
    rep.pairing = dot(eps_s_lambda, eps_s_ell);
    rep.identity = rep.trace_s2 == rep.pairing;

    auto sinv = inverse(A.antipode);
    if (!sinv) throw Error(ErrorKind::Internal, "antipode not invertible");
    QMatrix dl = A.coprod(pair.ell);
    Rng rng(seed);
    rep.dual_bases = true;
    for (int t = 0; t < num_random_ops; ++t) {
        QMatrix T(A.n, A.n);
        for (size_t i = 0; i < A.n; ++i)
            for (size_t j = 0; j < A.n; ++j) T(i, j) = Rational(rng.next_int(-9, 9));
        Rational lhs = T.trace();
        Rational rhs;
        for (size_t j = 0; j < A.n; ++j) {
            for (size_t k = 0; k < A.n; ++k) {
                if (dl(j, k).is_zero()) continue;
                QVec v = A.mul(T.apply(sinv->col(j)), A.basis_vec(k));
                rhs += dl(j, k) * dot(pair.lambda, v);
            }
        }
        if (lhs != rhs) rep.dual_bases = false;
    }
    return rep;
}

// Generalized-character membership of the canonical integral:
// <lambda, gh> = <lambda, h S^2(g)> exactly.
inline bool canonical_integral_is_generalized_character(const WeakHopfAlgebra& A) {
    QVec lambda = canonical_integral(A);
    QMatrix s2 = s_squared(A);
    for (size_t g = 0; g < A.n; ++g)
        for (size_t h = 0; h < A.n; ++h) {
            Rational lhs = dot(lambda, A.mul(A.basis_vec(g), A.basis_vec(h)));
            Rational rhs = dot(lambda, A.mul(A.basis_vec(h), s2.col(g)));
            if (lhs != rhs) return false;
        }
    return true;
}

// ---------------------------------------------------------------------------
// Unimodularity
// ---------------------------------------------------------------------------

// True iff the space of two-sided integrals contains a non-degenerate
// element (sampled deterministically; the degenerate locus is a proper
// closed subvariety).
inline bool is_unimodular(const WeakHopfAlgebra& A, std::uint64_t seed = kDefaultSeed) {
    Subspace both = intersect_spans(integral_space(A, Side::Left).basis,
                                    integral_space(A, Side::Right).basis);
    if (both.empty()) return false;
    auto nondegenerate = [&](const QVec& x) { return rank(A.coprod(x)) == A.n; };
    for (const auto& v : both)
        if (nondegenerate(v)) return true;
    Rng rng(seed ^ 0x756e696d6f64ull);
    for (int t = 0; t < 32; ++t) {
        QVec x(A.n, Rational(0));
        for (const auto& v : both) axpy(x, Rational(rng.next_int(-9, 9)), v);
        if (!is_zero_vec(x) && nondegenerate(x)) return true;
    }
    return false;
}

// dim { l in Int^l : S(l) = l } = dim (A_t n Z(A)) for unimodular A.
inline bool s_invariant_integral_dim_check(const WeakHopfAlgebra& A) {
    Subspace left = integral_space(A, Side::Left).basis;
    QMatrix b = QMatrix::from_columns(left);
    QMatrix cond = A.antipode * b - b;
    size_t s_inv_dim = nullspace(cond).size();
    size_t expected = intersect_spans(bases(A).target, center(A)).size();
    return s_inv_dim == expected;
}

}  // namespace wha
