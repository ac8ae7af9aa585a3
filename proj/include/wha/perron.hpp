#pragma once

#include <cmath>
#include <vector>

#include "wha/config.hpp"
#include "wha/errors.hpp"
#include "wha/linalg.hpp"

namespace wha {

struct PerronResult {
    double value = 0.0;
    std::vector<double> vector;  // normalized so the largest entry is 1
};

namespace detail {

// Shifted power iteration for the dominant eigenvalue of a nonnegative
// matrix. The +1 shift makes the Perron root strictly dominant in modulus.
inline PerronResult perron_double(std::vector<double> m, size_t n, const Tolerances& tol) {
    std::vector<double> v(n, 1.0), w(n, 0.0);
    double lambda = 1.0;
    const size_t max_iter = 2000000;
    for (size_t it = 0; it < max_iter; ++it) {
        for (size_t i = 0; i < n; ++i) {
            double s = v[i];  // shift term
            const double* row = &m[i * n];
            for (size_t j = 0; j < n; ++j) s += row[j] * v[j];
            w[i] = s;
        }
        double mx = 0.0;
        for (double x : w) mx = std::max(mx, std::abs(x));
        if (mx == 0.0) throw Error(ErrorKind::NilpotentInput, "power iteration collapsed to zero");
        double num = 0.0, den = 0.0;
        for (size_t i = 0; i < n; ++i) {
            num += w[i] * v[i];
            den += v[i] * v[i];
        }
        lambda = num / den;
        double resid = 0.0;
        for (size_t i = 0; i < n; ++i) resid = std::max(resid, std::abs(w[i] - lambda * v[i]));
        for (size_t i = 0; i < n; ++i) v[i] = w[i] / mx;
        if (resid < tol.zero * std::max(1.0, std::abs(lambda))) break;
        if (it + 1 == max_iter)
            throw Error(ErrorKind::Internal, "power iteration did not converge");
    }
    PerronResult r;
    r.value = lambda - 1.0;
    double mx = 0.0;
    for (double x : v) mx = std::max(mx, std::abs(x));
    r.vector.resize(n);
    for (size_t i = 0; i < n; ++i) r.vector[i] = v[i] / mx;
    return r;
}

}  // namespace detail

// Largest real eigenvalue and eigenvector of a nonnegative square matrix.
// Throws NilpotentInput when the matrix is nilpotent (exact test).
inline PerronResult perron(const QMatrix& m, const Tolerances& tol = Tolerances{}) {
    const size_t n = m.rows();
    if (n != m.cols()) throw Error(ErrorKind::DimensionMismatch, "perron: square matrix required");
    if (n == 0) throw Error(ErrorKind::InvalidParams, "perron: empty matrix");
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            if (m(i, j).sign() < 0)
                throw Error(ErrorKind::InvalidParams, "perron: matrix must be nonnegative");

    QMatrix p = m;
    for (size_t k = 1; k < n && !p.is_zero(); ++k) p = p * m;
    if (p.is_zero()) throw Error(ErrorKind::NilpotentInput, "all eigenvalues are zero");

    std::vector<double> md(n * n);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) md[i * n + j] = m(i, j).to_double();
    return detail::perron_double(std::move(md), n, tol);
}

inline PerronResult perron(const std::vector<double>& m, size_t n, const Tolerances& tol = Tolerances{}) {
    for (double x : m)
        if (x < 0) throw Error(ErrorKind::InvalidParams, "perron: matrix must be nonnegative");
    bool all_zero = true;
    for (double x : m)
        if (x != 0.0) { all_zero = false; break; }
    if (all_zero) throw Error(ErrorKind::NilpotentInput, "all eigenvalues are zero");
    return detail::perron_double(m, n, tol);
}

}  // namespace wha
