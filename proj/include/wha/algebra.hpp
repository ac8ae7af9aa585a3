#pragma once

#include <string>
#include <vector>

#include "wha/errors.hpp"
#include "wha/linalg.hpp"
#include "wha/tensor3.hpp"

namespace wha {

// Finite-dimensional associative unital algebra given by structure
// constants: mult(i,j,k) is the e_k-coefficient of e_i e_j.
struct Algebra {
    size_t n = 0;
    Tensor3 mult;
    QVec unit;
    std::string label;

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

    QVec basis_vec(size_t i) const {
        QVec v(n, Rational(0));
        v[i] = Rational(1);
        return v;
    }

    // Matrix of left multiplication by x acting on coordinate columns.
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

    QMatrix left_mult_basis(size_t i) const { return left_mult(basis_vec(i)); }

    bool is_associative() const {
        // (e_i e_j) e_k = e_i (e_j e_k) on all basis triples.
        std::vector<QVec> prods(n * n);
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < n; ++j) prods[i * n + j] = mul(basis_vec(i), basis_vec(j));
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < n; ++j)
                for (size_t k = 0; k < n; ++k) {
                    QVec lhs = mul(prods[i * n + j], basis_vec(k));
                    QVec rhs = mul(basis_vec(i), prods[j * n + k]);
                    if (lhs != rhs) return false;
                }
        return true;
    }

    bool unit_is_identity() const {
        for (size_t i = 0; i < n; ++i) {
            QVec e = basis_vec(i);
            if (mul(unit, e) != e || mul(e, unit) != e) return false;
        }
        return true;
    }

    // Exact center: solutions of [x, e_i] = 0 for all i.
    std::vector<QVec> center() const {
        QMatrix cond(n * n, n);
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < n; ++j)
                for (size_t k = 0; k < n; ++k)
                    cond(i * n + k, j) = mult(j, i, k) - mult(i, j, k);
        return nullspace(cond);
    }

    // Jacobson radical as the kernel of the regular trace form; valid
    // over fields of characteristic zero.
    std::vector<QVec> trace_form_radical() const {
        std::vector<QMatrix> L(n);
        for (size_t i = 0; i < n; ++i) L[i] = left_mult_basis(i);
        QMatrix g(n, n);
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < n; ++j) {
                Rational t;
                for (size_t a = 0; a < n; ++a)
                    for (size_t b = 0; b < n; ++b)
                        if (!L[i](a, b).is_zero() && !L[j](b, a).is_zero())
                            t += L[i](a, b) * L[j](b, a);
                g(i, j) = t;
            }
        return nullspace(g);
    }

    bool is_semisimple() const { return trace_form_radical().empty(); }
};

// Restriction of a parent algebra to the span of `basis`, expressed in that
// basis. Fails if the span is not closed under multiplication or does not
// contain the unit.
struct Subalgebra {
    Algebra alg;                  // structure constants in the sub-basis
    std::vector<QVec> basis;      // sub-basis in parent coordinates

    QVec to_parent(const QVec& x) const {
        QVec r(basis.empty() ? 0 : basis[0].size(), Rational(0));
        for (size_t i = 0; i < basis.size(); ++i)
            if (!x[i].is_zero()) axpy(r, x[i], basis[i]);
        return r;
    }
};

inline Subalgebra subalgebra(const Algebra& parent, const std::vector<QVec>& basis,
                             const std::string& label) {
    const size_t m = basis.size();
    QMatrix b = QMatrix::from_columns(basis);
    Subalgebra sub;
    sub.basis = basis;
    sub.alg.n = m;
    sub.alg.label = label;
    sub.alg.mult = Tensor3(m, m, m);
    for (size_t i = 0; i < m; ++i)
        for (size_t j = 0; j < m; ++j) {
            QVec p = parent.mul(basis[i], basis[j]);
            auto coords = solve(b, p);
            if (!coords) throw Error(ErrorKind::Internal, "subalgebra not closed under product");
            for (size_t k = 0; k < m; ++k) sub.alg.mult(i, j, k) = (*coords)[k];
        }
    auto unit_coords = solve(b, parent.unit);
    if (!unit_coords) throw Error(ErrorKind::Internal, "subalgebra does not contain the unit");
    sub.alg.unit = *unit_coords;
    return sub;
}

}  // namespace wha
