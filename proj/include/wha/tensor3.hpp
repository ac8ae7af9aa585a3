#pragma once

#include <vector>

#include "wha/errors.hpp"
#include "wha/rational.hpp"

namespace wha {

// Rank-3 array of rationals, indexed (i, j, k). Houses structure constants:
// mult(i,j,k) is the e_k-coefficient of e_i e_j, comult(i,j,k) the
// (e_j x e_k)-coefficient of Delta(e_i).
class Tensor3 {
public:
    Tensor3() : d1_(0), d2_(0), d3_(0) {}
    Tensor3(size_t d1, size_t d2, size_t d3)
        : d1_(d1), d2_(d2), d3_(d3), data_(d1 * d2 * d3) {}

    size_t dim1() const { return d1_; }
    size_t dim2() const { return d2_; }
    size_t dim3() const { return d3_; }

    Rational& operator()(size_t i, size_t j, size_t k) { return data_[(i * d2_ + j) * d3_ + k]; }
    const Rational& operator()(size_t i, size_t j, size_t k) const {
        return data_[(i * d2_ + j) * d3_ + k];
    }

    friend bool operator==(const Tensor3& a, const Tensor3& b) {
        return a.d1_ == b.d1_ && a.d2_ == b.d2_ && a.d3_ == b.d3_ && a.data_ == b.data_;
    }

private:
    size_t d1_, d2_, d3_;
    std::vector<Rational> data_;
};

}  // namespace wha
