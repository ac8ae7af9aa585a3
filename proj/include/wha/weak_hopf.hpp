#pragma once

#include <optional>
#include <string>
#include <vector>

#include "wha/algebra.hpp"
#include "wha/config.hpp"
#include "wha/errors.hpp"
#include "wha/linalg.hpp"
#include "wha/spectral.hpp"
#include "wha/tensor3.hpp"

namespace wha {

using Subspace = std::vector<QVec>;

// Finite-dimensional weak Hopf algebra by structure constants. Elements are
// coordinate columns in the defining basis, functionals are rows.
struct WeakHopfAlgebra {
    size_t n = 0;
    Tensor3 mult;      // mult(i,j,k): e_k-coefficient of e_i e_j
    QVec unit;         // coordinates of 1
    Tensor3 comult;    // comult(i,j,k): (e_j x e_k)-coefficient of Delta(e_i)
    QVec counit;       // row
    QMatrix antipode;  // S acting on coordinate columns; empty when unknown
    std::string label;

    bool has_antipode() const { return antipode.rows() == n && antipode.cols() == n && n > 0; }

    QVec basis_vec(size_t i) const {
        QVec v(n, Rational(0));
        v[i] = Rational(1);
        return v;
    }

    QVec mul(const QVec& x, const QVec& y) const {
        QVec r(n, Rational(0));
        for (size_t i = 0; i < n; ++i) {
            if (x[i].is_zero()) continue;
            for (size_t j = 0; j < n; ++j) {
                if (y[j].is_zero()) continue;
                const Rational c = x[i] * y[j];
                for (size_t k = 0; k < n; ++k)
                    if (!mult(i, j, k).is_zero()) r[k] += c * mult(i, j, k);
            }
        }
        return r;
    }

    QMatrix left_mult(const QVec& x) const {
        QMatrix L(n, n);
        for (size_t i = 0; i < n; ++i) {
            if (x[i].is_zero()) continue;
            for (size_t j = 0; j < n; ++j)
                for (size_t k = 0; k < n; ++k)
                    if (!mult(i, j, k).is_zero()) L(k, j) += x[i] * mult(i, j, k);
        }
        return L;
    }

    QMatrix right_mult(const QVec& x) const {
        QMatrix R(n, n);
        for (size_t j = 0; j < n; ++j) {
            if (x[j].is_zero()) continue;
            for (size_t i = 0; i < n; ++i)
                for (size_t k = 0; k < n; ++k)
                    if (!mult(i, j, k).is_zero()) R(k, i) += x[j] * mult(i, j, k);
        }
        return R;
    }

    // Coproduct of an element as the n x n matrix D with
    // Delta(x) = sum_{j,k} D(j,k) e_j (x) e_k.
    QMatrix coprod(const QVec& x) const {
        QMatrix d(n, n);
        for (size_t i = 0; i < n; ++i) {
            if (x[i].is_zero()) continue;
            for (size_t j = 0; j < n; ++j)
                for (size_t k = 0; k < n; ++k)
                    if (!comult(i, j, k).is_zero()) d(j, k) += x[i] * comult(i, j, k);
        }
        return d;
    }

    QMatrix unit_coprod() const { return coprod(unit); }

    Rational counit_of(const QVec& x) const { return dot(counit, x); }

    QVec apply_antipode(const QVec& x) const { return antipode.apply(x); }

    // Pairing table E(i,j) = eps(e_i e_j).
    QMatrix counit_pair_table() const {
        QMatrix e(n, n);
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < n; ++j) {
                Rational s;
                for (size_t k = 0; k < n; ++k)
                    if (!mult(i, j, k).is_zero() && !counit[k].is_zero())
                        s += mult(i, j, k) * counit[k];
                e(i, j) = s;
            }
        return e;
    }

    // Matrix of eps_t(h) = eps(1_(1) h) 1_(2).
    QMatrix eps_t_matrix() const { return unit_coprod().transpose() * counit_pair_table(); }

    // Matrix of eps_s(h) = 1_(1) eps(h 1_(2)).
    QMatrix eps_s_matrix() const { return unit_coprod() * counit_pair_table().transpose(); }

    Algebra as_algebra() const { return Algebra{n, mult, unit, label}; }

    bool is_hopf() const {
        QMatrix d1 = unit_coprod();
        for (size_t j = 0; j < n; ++j)
            for (size_t k = 0; k < n; ++k)
                if (d1(j, k) != unit[j] * unit[k]) return false;
        return true;
    }
};

// ---------------------------------------------------------------------------
// Axiom verification
// ---------------------------------------------------------------------------

struct AxiomCheck {
    std::string name;
    bool pass = false;
    std::string witness;  // first failing basis tuple, empty when passing
};

struct AxiomReport {
    std::vector<AxiomCheck> checks;
    bool all_pass = true;

    void add(const std::string& name, bool pass, const std::string& witness = "") {
        checks.push_back({name, pass, witness});
        all_pass = all_pass && pass;
    }

    const AxiomCheck* find(const std::string& name) const {
        for (const auto& c : checks)
            if (c.name == name) return &c;
        return nullptr;
    }

    std::string first_failure() const {
        for (const auto& c : checks)
            if (!c.pass) return c.name + (c.witness.empty() ? "" : " at " + c.witness);
        return "";
    }
};

namespace detail {

inline std::string tuple_str(std::initializer_list<size_t> idx) {
    std::string s = "(";
    bool first = true;
    for (size_t i : idx) {
        if (!first) s += ",";
        s += std::to_string(i);
        first = false;
    }
    return s + ")";
}

}  // namespace detail

inline AxiomReport verify_axioms(const WeakHopfAlgebra& A) {
    AxiomReport rep;
    const size_t n = A.n;

    std::vector<QVec> prod(n * n);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) prod[i * n + j] = A.mul(A.basis_vec(i), A.basis_vec(j));

    {  // associativity
        bool ok = true;
        std::string w;
        for (size_t i = 0; i < n && ok; ++i)
            for (size_t j = 0; j < n && ok; ++j)
                for (size_t k = 0; k < n && ok; ++k)
                    if (A.mul(prod[i * n + j], A.basis_vec(k)) !=
                        A.mul(A.basis_vec(i), prod[j * n + k])) {
                        ok = false;
                        w = detail::tuple_str({i, j, k});
                    }
        rep.add("associativity", ok, w);
    }
    {  // unit
        bool ok = true;
        std::string w;
        for (size_t i = 0; i < n && ok; ++i) {
            QVec e = A.basis_vec(i);
            if (A.mul(A.unit, e) != e || A.mul(e, A.unit) != e) {
                ok = false;
                w = detail::tuple_str({i});
            }
        }
        rep.add("unit", ok, w);
    }
    {  // coassociativity
        bool ok = true;
        std::string w;
        for (size_t i = 0; i < n && ok; ++i)
            for (size_t a = 0; a < n && ok; ++a)
                for (size_t b = 0; b < n && ok; ++b)
                    for (size_t c = 0; c < n && ok; ++c) {
                        Rational lhs, rhs;
                        for (size_t p = 0; p < n; ++p) {
                            if (!A.comult(i, p, c).is_zero() && !A.comult(p, a, b).is_zero())
                                lhs += A.comult(i, p, c) * A.comult(p, a, b);
                            if (!A.comult(i, a, p).is_zero() && !A.comult(p, b, c).is_zero())
                                rhs += A.comult(i, a, p) * A.comult(p, b, c);
                        }
                        if (lhs != rhs) {
                            ok = false;
                            w = detail::tuple_str({i, a, b, c});
                        }
                    }
        rep.add("coassociativity", ok, w);
    }
    {  // counit
        bool ok = true;
        std::string w;
        for (size_t i = 0; i < n && ok; ++i)
            for (size_t k = 0; k < n && ok; ++k) {
                Rational left, right;
                for (size_t j = 0; j < n; ++j) {
                    if (!A.comult(i, j, k).is_zero()) left += A.counit[j] * A.comult(i, j, k);
                    if (!A.comult(i, k, j).is_zero()) right += A.comult(i, k, j) * A.counit[j];
                }
                Rational expect(i == k ? 1 : 0);
                if (left != expect || right != expect) {
                    ok = false;
                    w = detail::tuple_str({i, k});
                }
            }
        rep.add("counit", ok, w);
    }
    {  // Delta(gh) = Delta(g) Delta(h)
        bool ok = true;
        std::string w;
        for (size_t i = 0; i < n && ok; ++i)
            for (size_t j = 0; j < n && ok; ++j) {
                QMatrix lhs = A.coprod(prod[i * n + j]);
                QMatrix rhs(n, n);
                for (size_t p = 0; p < n; ++p)
                    for (size_t q = 0; q < n; ++q) {
                        if (A.comult(i, p, q).is_zero()) continue;
                        for (size_t r = 0; r < n; ++r)
                            for (size_t s = 0; s < n; ++s) {
                                if (A.comult(j, r, s).is_zero()) continue;
                                const Rational c = A.comult(i, p, q) * A.comult(j, r, s);
                                const QVec& pr = prod[p * n + r];
                                const QVec& qs = prod[q * n + s];
                                for (size_t a = 0; a < n; ++a) {
                                    if (pr[a].is_zero()) continue;
                                    for (size_t b = 0; b < n; ++b)
                                        if (!qs[b].is_zero()) rhs(a, b) += c * pr[a] * qs[b];
                                }
                            }
                    }
                if (!(lhs == rhs)) {
                    ok = false;
                    w = detail::tuple_str({i, j});
                }
            }
        rep.add("delta-multiplicative", ok, w);
    }
    {  // weak unit axiom on Delta(1)
        QMatrix d1 = A.unit_coprod();
        Tensor3 t1(n, n, n), t2(n, n, n), t3(n, n, n);
        for (size_t p = 0; p < n; ++p)
            for (size_t q = 0; q < n; ++q) {
                if (d1(p, q).is_zero()) continue;
                for (size_t a = 0; a < n; ++a)
                    for (size_t b = 0; b < n; ++b)
                        if (!A.comult(p, a, b).is_zero())
                            t1(a, b, q) += d1(p, q) * A.comult(p, a, b);
            }
        for (size_t a = 0; a < n; ++a)
            for (size_t k = 0; k < n; ++k) {
                if (d1(a, k).is_zero()) continue;
                for (size_t p = 0; p < n; ++p)
                    for (size_t c = 0; c < n; ++c) {
                        if (d1(p, c).is_zero()) continue;
                        const Rational coeff = d1(a, k) * d1(p, c);
                        const QVec& kp = prod[k * n + p];
                        const QVec& pk = prod[p * n + k];
                        for (size_t b = 0; b < n; ++b) {
                            if (!kp[b].is_zero()) t2(a, b, c) += coeff * kp[b];
                            if (!pk[b].is_zero()) t3(a, b, c) += coeff * pk[b];
                        }
                    }
            }
        rep.add("weak-unit", t1 == t2 && t1 == t3);
    }
    {  // weak counit axiom eps(fgh) = eps(f g1) eps(g2 h) = eps(f g2) eps(g1 h)
        QMatrix e = A.counit_pair_table();
        bool ok = true;
        std::string w;
        for (size_t f = 0; f < n && ok; ++f)
            for (size_t g = 0; g < n && ok; ++g)
                for (size_t h = 0; h < n && ok; ++h) {
                    Rational lhs;
                    const QVec& fg = prod[f * n + g];
                    for (size_t k = 0; k < n; ++k)
                        if (!fg[k].is_zero() && !e(k, h).is_zero()) lhs += fg[k] * e(k, h);
                    Rational r1, r2;
                    for (size_t p = 0; p < n; ++p)
                        for (size_t q = 0; q < n; ++q) {
                            if (A.comult(g, p, q).is_zero()) continue;
                            r1 += A.comult(g, p, q) * e(f, p) * e(q, h);
                            r2 += A.comult(g, p, q) * e(f, q) * e(p, h);
                        }
                    if (lhs != r1 || lhs != r2) {
                        ok = false;
                        w = detail::tuple_str({f, g, h});
                    }
                }
        rep.add("weak-counit", ok, w);
    }

    if (!A.has_antipode()) {
        rep.add("antipode-left", false, "antipode missing");
        rep.add("antipode-right", false, "antipode missing");
        rep.add("antipode-composite", false, "antipode missing");
        rep.add("antipode-invertible", false, "antipode missing");
        return rep;
    }

    QMatrix et = A.eps_t_matrix();
    QMatrix es = A.eps_s_matrix();
    std::vector<QVec> s_of(n);
    for (size_t i = 0; i < n; ++i) s_of[i] = A.antipode.col(i);

    {  // m(id (x) S) Delta(h) = eps_t(h)
        bool ok = true;
        std::string w;
        for (size_t i = 0; i < n && ok; ++i) {
            QVec lhs(n, Rational(0));
            for (size_t p = 0; p < n; ++p)
                for (size_t q = 0; q < n; ++q)
                    if (!A.comult(i, p, q).is_zero())
                        axpy(lhs, A.comult(i, p, q), A.mul(A.basis_vec(p), s_of[q]));
            if (lhs != et.col(i)) {
                ok = false;
                w = detail::tuple_str({i});
            }
        }
        rep.add("antipode-left", ok, w);
    }
    {  // m(S (x) id) Delta(h) = eps_s(h)
        bool ok = true;
        std::string w;
        for (size_t i = 0; i < n && ok; ++i) {
            QVec lhs(n, Rational(0));
            for (size_t p = 0; p < n; ++p)
                for (size_t q = 0; q < n; ++q)
                    if (!A.comult(i, p, q).is_zero())
                        axpy(lhs, A.comult(i, p, q), A.mul(s_of[p], A.basis_vec(q)));
            if (lhs != es.col(i)) {
                ok = false;
                w = detail::tuple_str({i});
            }
        }
        rep.add("antipode-right", ok, w);
    }
    {  // S(h) = S(h1) h2 S(h3)
        bool ok = true;
        std::string w;
        for (size_t i = 0; i < n && ok; ++i) {
            QVec rhs(n, Rational(0));
            for (size_t p = 0; p < n; ++p)
                for (size_t q = 0; q < n; ++q) {
                    if (A.comult(i, p, q).is_zero()) continue;
                    for (size_t a = 0; a < n; ++a)
                        for (size_t b = 0; b < n; ++b) {
                            if (A.comult(p, a, b).is_zero()) continue;
                            const Rational c = A.comult(i, p, q) * A.comult(p, a, b);
                            axpy(rhs, c, A.mul(A.mul(s_of[a], A.basis_vec(b)), s_of[q]));
                        }
                }
            if (rhs != s_of[i]) {
                ok = false;
                w = detail::tuple_str({i});
            }
        }
        rep.add("antipode-composite", ok, w);
    }
    rep.add("antipode-invertible", rank(A.antipode) == n);
    return rep;
}

// ---------------------------------------------------------------------------
// Dual, counital machinery, subspaces
// ---------------------------------------------------------------------------

inline WeakHopfAlgebra dual(const WeakHopfAlgebra& A) {
    WeakHopfAlgebra d;
    d.n = A.n;
    d.label = A.label + "*";
    d.mult = Tensor3(A.n, A.n, A.n);
    d.comult = Tensor3(A.n, A.n, A.n);
    for (size_t i = 0; i < A.n; ++i)
        for (size_t j = 0; j < A.n; ++j)
            for (size_t k = 0; k < A.n; ++k) {
                d.mult(i, j, k) = A.comult(k, i, j);
                d.comult(i, j, k) = A.mult(j, k, i);
            }
    d.unit = A.counit;
    d.counit = A.unit;
    if (A.has_antipode()) d.antipode = A.antipode.transpose();
    return d;
}

inline QVec counital_target(const WeakHopfAlgebra& A, const QVec& h) {
    return A.eps_t_matrix().apply(h);
}

inline QVec counital_source(const WeakHopfAlgebra& A, const QVec& h) {
    return A.eps_s_matrix().apply(h);
}

inline Subspace column_span_basis(const QMatrix& m) {
    RowSpan span;
    for (size_t j = 0; j < m.cols(); ++j) span.try_add(m.col(j));
    return span.basis();
}

struct Bases {
    Subspace target;  // A_t
    Subspace source;  // A_s
};

inline Bases bases(const WeakHopfAlgebra& A) {
    return {column_span_basis(A.eps_t_matrix()), column_span_basis(A.eps_s_matrix())};
}

inline Subspace center(const WeakHopfAlgebra& A) { return A.as_algebra().center(); }

// Smallest unital subalgebra containing A_t and A_s (iterated product
// closure to a fixed point).
inline Subspace minimal_subalgebra(const WeakHopfAlgebra& A) {
    Bases b = bases(A);
    RowSpan span;
    std::vector<QVec> work;
    auto add = [&](const QVec& v) {
        if (span.try_add(v)) work.push_back(v);
    };
    add(A.unit);
    for (const auto& v : b.target) add(v);
    for (const auto& v : b.source) add(v);
    for (size_t i = 0; i < work.size(); ++i)
        for (size_t j = 0; j <= i && j < work.size(); ++j) {
            add(A.mul(work[i], work[j]));
            add(A.mul(work[j], work[i]));
        }
    return span.basis();
}

inline QMatrix s_squared(const WeakHopfAlgebra& A) { return A.antipode * A.antipode; }

inline std::vector<Cplx> s2_eigenvalues(const WeakHopfAlgebra& A) {
    return eigenvalues(to_cmat(s_squared(A)));
}

inline bool is_regular(const WeakHopfAlgebra& A) {
    QMatrix s2 = s_squared(A);
    for (const auto& v : minimal_subalgebra(A))
        if (s2.apply(v) != v) return false;
    return true;
}

struct Connectivity {
    bool connected = false;    // dim(Z(A) \cap A_t) = 1
    bool coconnected = false;  // dim(A_s \cap A_t) = 1
    bool biconnected = false;
};

inline Connectivity connectivity(const WeakHopfAlgebra& A) {
    Bases b = bases(A);
    Subspace z = center(A);
    Connectivity c;
    c.connected = intersect_spans(z, b.target).size() == 1;
    c.coconnected = intersect_spans(b.source, b.target).size() == 1;
    c.biconnected = c.connected && c.coconnected;
    return c;
}

inline WeakHopfAlgebra direct_sum(const WeakHopfAlgebra& A, const WeakHopfAlgebra& B) {
    WeakHopfAlgebra d;
    d.n = A.n + B.n;
    d.label = "ds(" + A.label + "," + B.label + ")";
    d.mult = Tensor3(d.n, d.n, d.n);
    d.comult = Tensor3(d.n, d.n, d.n);
    d.unit = QVec(d.n, Rational(0));
    d.counit = QVec(d.n, Rational(0));
    d.antipode = QMatrix(d.n, d.n);
    for (size_t i = 0; i < A.n; ++i) {
        d.unit[i] = A.unit[i];
        d.counit[i] = A.counit[i];
        for (size_t j = 0; j < A.n; ++j) {
            d.antipode(i, j) = A.antipode(i, j);
            for (size_t k = 0; k < A.n; ++k) {
                d.mult(i, j, k) = A.mult(i, j, k);
                d.comult(i, j, k) = A.comult(i, j, k);
            }
        }
    }
    for (size_t i = 0; i < B.n; ++i) {
        d.unit[A.n + i] = B.unit[i];
        d.counit[A.n + i] = B.counit[i];
        for (size_t j = 0; j < B.n; ++j) {
            d.antipode(A.n + i, A.n + j) = B.antipode(i, j);
            for (size_t k = 0; k < B.n; ++k) {
                d.mult(A.n + i, A.n + j, A.n + k) = B.mult(i, j, k);
                d.comult(A.n + i, A.n + j, A.n + k) = B.comult(i, j, k);
            }
        }
    }
    return d;
}

// ---------------------------------------------------------------------------
// Antipode recovery
// ---------------------------------------------------------------------------

// Solves the antipode axioms as a linear system in the matrix of S. The
// composite axiom S = S * id * S enters in the linearized form
// S(h1) eps_t(h2) = S(h), which together with the two counital axioms is
// equivalent to it.
inline QMatrix solve_antipode(const WeakHopfAlgebra& A) {
    const size_t n = A.n;
    const size_t unknowns = n * n;  // s[r*n+q] = coefficient of e_r in S(e_q)
    QMatrix et = A.eps_t_matrix();
    QMatrix es = A.eps_s_matrix();

    std::vector<QVec> rows;
    QVec rhs;
    auto add_row = [&](QVec row, Rational b) {
        rows.push_back(std::move(row));
        rhs.push_back(b);
    };

    std::vector<QMatrix> right_mult_et(n);
    for (size_t q = 0; q < n; ++q) right_mult_et[q] = A.right_mult(et.col(q));

    for (size_t i = 0; i < n; ++i)
        for (size_t k = 0; k < n; ++k) {
            QVec r1(unknowns, Rational(0));  // e_p S(e_q) summed against Delta_i
            QVec r2(unknowns, Rational(0));  // S(e_p) e_q
            QVec r3(unknowns, Rational(0));  // S(e_p) eps_t(e_q) - S(e_i)
            for (size_t p = 0; p < n; ++p)
                for (size_t q = 0; q < n; ++q) {
                    const Rational& c = A.comult(i, p, q);
                    if (c.is_zero()) continue;
                    for (size_t r = 0; r < n; ++r) {
                        if (!A.mult(p, r, k).is_zero()) r1[r * n + q] += c * A.mult(p, r, k);
                        if (!A.mult(r, q, k).is_zero()) r2[r * n + p] += c * A.mult(r, q, k);
                        if (!right_mult_et[q](k, r).is_zero())
                            r3[r * n + p] += c * right_mult_et[q](k, r);
                    }
                }
            r3[k * n + i] -= Rational(1);
            add_row(std::move(r1), et(k, i));
            add_row(std::move(r2), es(k, i));
            add_row(std::move(r3), Rational(0));
        }

    QMatrix sys(rows.size(), unknowns);
    for (size_t r = 0; r < rows.size(); ++r)
        for (size_t c = 0; c < unknowns; ++c) sys(r, c) = rows[r][c];

    auto sol = solve(sys, rhs);
    if (!sol) throw Error(ErrorKind::NoAntipode, "antipode axioms are inconsistent");
    if (!nullspace(sys).empty())
        throw Error(ErrorKind::AntipodeNotUnique, "antipode system is underdetermined");

    QMatrix s(n, n);
    for (size_t r = 0; r < n; ++r)
        for (size_t q = 0; q < n; ++q) s(r, q) = (*sol)[r * n + q];
    return s;
}

// ---------------------------------------------------------------------------
// Group-like elements
// ---------------------------------------------------------------------------

struct GroupLike {
    QVec element;
    QVec inverse;
    std::optional<QVec> trivial_witness;  // y in A_s with g = y S(y)^{-1}
};

inline std::optional<QVec> invert_element(const WeakHopfAlgebra& A, const QVec& x) {
    auto v = solve(A.left_mult(x), A.unit);
    if (!v) return std::nullopt;
    if (A.mul(*v, x) != A.unit) return std::nullopt;
    return v;
}

inline bool is_grouplike(const WeakHopfAlgebra& A, const QVec& g) {
    if (!invert_element(A, g)) return false;
    QMatrix d1 = A.unit_coprod();
    QMatrix dg = A.coprod(g);
    QMatrix lg = A.left_mult(g);
    QMatrix rg = A.right_mult(g);
    return dg == lg * d1 * lg.transpose() && dg == rg * d1 * rg.transpose();
}

inline GroupLike trivial_grouplike(const WeakHopfAlgebra& A, const QVec& y) {
    Bases b = bases(A);
    if (!make_span(b.source).contains(y))
        throw Error(ErrorKind::InvalidParams, "witness element is not in A_s");
    QVec sy = A.apply_antipode(y);
    auto sy_inv = invert_element(A, sy);
    if (!sy_inv) throw Error(ErrorKind::NotInvertible, "S(y) is not invertible");
    QVec g = A.mul(y, *sy_inv);
    auto ginv = invert_element(A, g);
    if (!ginv) throw Error(ErrorKind::NotInvertible, "y S(y)^{-1} is not invertible");
    return GroupLike{g, *ginv, y};
}

// Searches A_s for an invertible y with y = g S(y); such a y exists iff g
// is a trivial group-like element.
inline std::optional<QVec> is_trivial(const WeakHopfAlgebra& A, const QVec& g) {
    Bases b = bases(A);
    const auto& src = b.source;
    if (src.empty()) return std::nullopt;
    QMatrix cond(A.n, src.size());
    for (size_t a = 0; a < src.size(); ++a) {
        QVec v = src[a];
        QVec gsv = A.mul(g, A.apply_antipode(src[a]));
        for (size_t i = 0; i < A.n; ++i) cond(i, a) = v[i] - gsv[i];
    }
    auto sols = nullspace(cond);
    if (sols.empty()) return std::nullopt;

    auto lift = [&](const QVec& coeffs) {
        QVec y(A.n, Rational(0));
        for (size_t a = 0; a < src.size(); ++a)
            if (!coeffs[a].is_zero()) axpy(y, coeffs[a], src[a]);
        return y;
    };
    for (const auto& c : sols) {
        QVec y = lift(c);
        if (invert_element(A, y)) return y;
    }
    Rng rng(kDefaultSeed ^ 0x7472697669616cull);
    for (int attempt = 0; attempt < 64; ++attempt) {
        QVec coeffs(sols.size());
        for (auto& c : coeffs) c = Rational(rng.next_int(-9, 9));
        QVec combo(src.size(), Rational(0));
        for (size_t t = 0; t < sols.size(); ++t)
            if (!coeffs[t].is_zero()) axpy(combo, coeffs[t], sols[t]);
        QVec y = lift(combo);
        if (!is_zero_vec(y) && invert_element(A, y)) return y;
    }
    return std::nullopt;
}

}  // namespace wha
