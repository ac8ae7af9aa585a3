#pragma once

#include <algorithm>
#include <optional>
#include <utility>
#include <vector>

#include "wha/errors.hpp"
#include "wha/rational.hpp"

namespace wha {

using QVec = std::vector<Rational>;

inline bool is_zero_vec(const QVec& v) {
    for (const auto& x : v)
        if (!x.is_zero()) return false;
    return true;
}

inline QVec& axpy(QVec& y, const Rational& a, const QVec& x) {
    for (size_t i = 0; i < y.size(); ++i) y[i] += a * x[i];
    return y;
}

inline QVec scaled(const QVec& v, const Rational& a) {
    QVec r(v.size());
    for (size_t i = 0; i < v.size(); ++i) r[i] = a * v[i];
    return r;
}

inline Rational dot(const QVec& a, const QVec& b) {
    if (a.size() != b.size()) throw Error(ErrorKind::DimensionMismatch, "dot");
    Rational s;
    for (size_t i = 0; i < a.size(); ++i)
        if (!a[i].is_zero() && !b[i].is_zero()) s += a[i] * b[i];
    return s;
}

// Dense matrix of exact rationals, row-major.
class QMatrix {
public:
    QMatrix() : rows_(0), cols_(0) {}
    QMatrix(size_t rows, size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
    QMatrix(size_t rows, size_t cols, QVec data) : rows_(rows), cols_(cols), data_(std::move(data)) {
        if (data_.size() != rows_ * cols_)
            throw Error(ErrorKind::DimensionMismatch, "entry count does not match dimensions");
    }

    static QMatrix identity(size_t n) {
        QMatrix m(n, n);
        for (size_t i = 0; i < n; ++i) m(i, i) = Rational(1);
        return m;
    }

    static QMatrix from_columns(const std::vector<QVec>& cols) {
        if (cols.empty()) return QMatrix(0, 0);
        QMatrix m(cols[0].size(), cols.size());
        for (size_t j = 0; j < cols.size(); ++j) {
            if (cols[j].size() != m.rows_) throw Error(ErrorKind::DimensionMismatch, "from_columns");
            for (size_t i = 0; i < m.rows_; ++i) m(i, j) = cols[j][i];
        }
        return m;
    }

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }

    Rational& operator()(size_t r, size_t c) { return data_[r * cols_ + c]; }
    const Rational& operator()(size_t r, size_t c) const { return data_[r * cols_ + c]; }

    QVec row(size_t r) const { return QVec(data_.begin() + r * cols_, data_.begin() + (r + 1) * cols_); }
    QVec col(size_t c) const {
        QVec v(rows_);
        for (size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, c);
        return v;
    }

    QMatrix transpose() const {
        QMatrix t(cols_, rows_);
        for (size_t i = 0; i < rows_; ++i)
            for (size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    friend QMatrix operator*(const QMatrix& a, const QMatrix& b) {
        if (a.cols_ != b.rows_) throw Error(ErrorKind::DimensionMismatch, "matrix product");
        QMatrix c(a.rows_, b.cols_);
        for (size_t i = 0; i < a.rows_; ++i)
            for (size_t k = 0; k < a.cols_; ++k) {
                const Rational& aik = a(i, k);
                if (aik.is_zero()) continue;
                for (size_t j = 0; j < b.cols_; ++j)
                    if (!b(k, j).is_zero()) c(i, j) += aik * b(k, j);
            }
        return c;
    }

    friend QMatrix operator+(const QMatrix& a, const QMatrix& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
            throw Error(ErrorKind::DimensionMismatch, "matrix sum");
        QMatrix c = a;
        for (size_t i = 0; i < c.data_.size(); ++i) c.data_[i] += b.data_[i];
        return c;
    }

    friend QMatrix operator-(const QMatrix& a, const QMatrix& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
            throw Error(ErrorKind::DimensionMismatch, "matrix difference");
        QMatrix c = a;
        for (size_t i = 0; i < c.data_.size(); ++i) c.data_[i] -= b.data_[i];
        return c;
    }

    friend bool operator==(const QMatrix& a, const QMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

    QVec apply(const QVec& v) const {
        if (v.size() != cols_) throw Error(ErrorKind::DimensionMismatch, "matrix-vector product");
        QVec r(rows_);
        for (size_t i = 0; i < rows_; ++i) {
            Rational s;
            for (size_t j = 0; j < cols_; ++j)
                if (!(*this)(i, j).is_zero() && !v[j].is_zero()) s += (*this)(i, j) * v[j];
            r[i] = s;
        }
        return r;
    }

    // Row functional times matrix.
    QVec apply_left(const QVec& v) const {
        if (v.size() != rows_) throw Error(ErrorKind::DimensionMismatch, "vector-matrix product");
        QVec r(cols_);
        for (size_t i = 0; i < rows_; ++i) {
            if (v[i].is_zero()) continue;
            for (size_t j = 0; j < cols_; ++j)
                if (!(*this)(i, j).is_zero()) r[j] += v[i] * (*this)(i, j);
        }
        return r;
    }

    Rational trace() const {
        if (rows_ != cols_) throw Error(ErrorKind::DimensionMismatch, "trace of non-square matrix");
        Rational s;
        for (size_t i = 0; i < rows_; ++i) s += (*this)(i, i);
        return s;
    }

    bool is_zero() const {
        for (const auto& x : data_)
            if (!x.is_zero()) return false;
        return true;
    }

private:
    size_t rows_, cols_;
    QVec data_;
};

namespace detail {

// Fraction-free (Bareiss) forward elimination with column pivoting.
// Returns pivot (row, col) pairs; the matrix is left in echelon form.
inline std::vector<std::pair<size_t, size_t>> bareiss_echelon(QMatrix& m) {
    std::vector<std::pair<size_t, size_t>> pivots;
    Rational prev(1);
    size_t r = 0;
    for (size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        size_t sel = r;
        while (sel < m.rows() && m(sel, c).is_zero()) ++sel;
        if (sel == m.rows()) continue;
        if (sel != r)
            for (size_t j = c; j < m.cols(); ++j) std::swap(m(r, j), m(sel, j));
        const Rational piv = m(r, c);
        for (size_t i = r + 1; i < m.rows(); ++i) {
            const Rational mic = m(i, c);
            for (size_t j = c + 1; j < m.cols(); ++j)
                m(i, j) = (piv * m(i, j) - mic * m(r, j)) / prev;
            m(i, c) = Rational(0);
        }
        prev = piv;
        pivots.emplace_back(r, c);
        ++r;
    }
    return pivots;
}

}  // namespace detail

inline size_t rank(QMatrix m) { return detail::bareiss_echelon(m).size(); }

// Exact solution of Ax = b via fraction-free elimination; free variables
// are set to zero. Returns nullopt when the system is inconsistent.
inline std::optional<QVec> solve(const QMatrix& a, const QVec& b) {
    if (b.size() != a.rows()) throw Error(ErrorKind::DimensionMismatch, "solve: rhs size");
    QMatrix m(a.rows(), a.cols() + 1);
    for (size_t i = 0; i < a.rows(); ++i) {
        for (size_t j = 0; j < a.cols(); ++j) m(i, j) = a(i, j);
        m(i, a.cols()) = b[i];
    }
    auto pivots = detail::bareiss_echelon(m);
    for (const auto& [pr, pc] : pivots)
        if (pc == a.cols()) return std::nullopt;
    QVec x(a.cols(), Rational(0));
    for (size_t k = pivots.size(); k-- > 0;) {
        auto [pr, pc] = pivots[k];
        Rational s = m(pr, a.cols());
        for (size_t j = pc + 1; j < a.cols(); ++j)
            if (!m(pr, j).is_zero() && !x[j].is_zero()) s -= m(pr, j) * x[j];
        x[pc] = s / m(pr, pc);
    }
    return x;
}

// Exact basis of the right kernel of A.
inline std::vector<QVec> nullspace(const QMatrix& a) {
    QMatrix m = a;
    auto pivots = detail::bareiss_echelon(m);
    std::vector<bool> is_pivot(a.cols(), false);
    for (const auto& [pr, pc] : pivots) is_pivot[pc] = true;
    std::vector<QVec> basis;
    for (size_t f = 0; f < a.cols(); ++f) {
        if (is_pivot[f]) continue;
        QVec x(a.cols(), Rational(0));
        x[f] = Rational(1);
        for (size_t k = pivots.size(); k-- > 0;) {
            auto [pr, pc] = pivots[k];
            if (pc > f) continue;
            Rational s;
            for (size_t j = pc + 1; j < a.cols(); ++j)
                if (!m(pr, j).is_zero() && !x[j].is_zero()) s -= m(pr, j) * x[j];
            x[pc] = s / m(pr, pc);
        }
        basis.push_back(std::move(x));
    }
    return basis;
}

inline std::optional<QMatrix> inverse(const QMatrix& a) {
    if (a.rows() != a.cols()) throw Error(ErrorKind::DimensionMismatch, "inverse of non-square matrix");
    const size_t n = a.rows();
    QMatrix m(n, 2 * n);
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < n; ++j) m(i, j) = a(i, j);
        m(i, n + i) = Rational(1);
    }
    auto pivots = detail::bareiss_echelon(m);
    if (pivots.size() < n || pivots.back().second >= n) return std::nullopt;
    QMatrix inv(n, n);
    for (size_t col = 0; col < n; ++col) {
        QVec x(n, Rational(0));
        for (size_t k = n; k-- > 0;) {
            auto [pr, pc] = pivots[k];
            Rational s = m(pr, n + col);
            for (size_t j = pc + 1; j < n; ++j)
                if (!m(pr, j).is_zero() && !x[j].is_zero()) s -= m(pr, j) * x[j];
            x[pc] = s / m(pr, pc);
        }
        for (size_t i = 0; i < n; ++i) inv(i, col) = x[i];
    }
    return inv;
}

// Incrementally maintained reduced row span; supports exact membership
// tests and independence filtering.
class RowSpan {
public:
    bool try_add(QVec v) {
        reduce(v);
        size_t lead = leading(v);
        if (lead == v.size()) return false;
        const Rational inv = Rational(1) / v[lead];
        for (auto& x : v) x *= inv;
        for (auto& row : rows_) {
            if (!row.vec[lead].is_zero()) {
                Rational c = row.vec[lead];
                for (size_t j = 0; j < row.vec.size(); ++j) row.vec[j] -= c * v[j];
            }
        }
        rows_.push_back({lead, std::move(v)});
        std::sort(rows_.begin(), rows_.end(),
                  [](const Row& a, const Row& b) { return a.lead < b.lead; });
        return true;
    }

    bool contains(QVec v) const {
        reduce(v);
        return leading(v) == v.size();
    }

    size_t dim() const { return rows_.size(); }

    std::vector<QVec> basis() const {
        std::vector<QVec> b;
        for (const auto& r : rows_) b.push_back(r.vec);
        return b;
    }

private:
    struct Row {
        size_t lead;
        QVec vec;
    };

    static size_t leading(const QVec& v) {
        for (size_t i = 0; i < v.size(); ++i)
            if (!v[i].is_zero()) return i;
        return v.size();
    }

    void reduce(QVec& v) const {
        for (const auto& row : rows_) {
            if (row.lead < v.size() && !v[row.lead].is_zero()) {
                Rational c = v[row.lead];
                for (size_t j = 0; j < v.size(); ++j) v[j] -= c * row.vec[j];
            }
        }
    }

    std::vector<Row> rows_;
};

inline RowSpan make_span(const std::vector<QVec>& vecs) {
    RowSpan s;
    for (const auto& v : vecs) s.try_add(v);
    return s;
}

inline bool spans_equal(const std::vector<QVec>& a, const std::vector<QVec>& b) {
    RowSpan sa = make_span(a), sb = make_span(b);
    if (sa.dim() != sb.dim()) return false;
    for (const auto& v : b)
        if (!sa.contains(v)) return false;
    return true;
}

// Intersection of two column spans, as a basis.
inline std::vector<QVec> intersect_spans(const std::vector<QVec>& u, const std::vector<QVec>& w) {
    if (u.empty() || w.empty()) return {};
    const size_t n = u[0].size();
    QMatrix m(n, u.size() + w.size());
    for (size_t j = 0; j < u.size(); ++j)
        for (size_t i = 0; i < n; ++i) m(i, j) = u[j][i];
    for (size_t j = 0; j < w.size(); ++j)
        for (size_t i = 0; i < n; ++i) m(i, u.size() + j) = -w[j][i];
    RowSpan out;
    for (const auto& k : nullspace(m)) {
        QVec v(n, Rational(0));
        for (size_t j = 0; j < u.size(); ++j)
            if (!k[j].is_zero()) axpy(v, k[j], u[j]);
        out.try_add(std::move(v));
    }
    return out.basis();
}

}  // namespace wha
