#pragma once

#include <cstddef>
#include <vector>

#include "homrine/matrix.hpp"

namespace homrine {

/// Dense 3-index structure-constant tensor c[i][j][k], meaning
/// b_i * b_j = sum_k c[i][j][k] e_k for the relevant bilinear product.
template <class K>
class Tensor3 {
public:
    Tensor3() : d0_(0), d1_(0), d2_(0) {}
    Tensor3(std::size_t d0, std::size_t d1, std::size_t d2)
        : d0_(d0), d1_(d1), d2_(d2), data_(d0 * d1 * d2, K(0)) {}

    std::size_t dim0() const { return d0_; }
    std::size_t dim1() const { return d1_; }
    std::size_t dim2() const { return d2_; }

    K& at(std::size_t i, std::size_t j, std::size_t k) {
        return data_[(i * d1_ + j) * d2_ + k];
    }
    const K& at(std::size_t i, std::size_t j, std::size_t k) const {
        return data_[(i * d1_ + j) * d2_ + k];
    }

    /// Output vector of basis pair (i, j).
    Vec<K> slice(std::size_t i, std::size_t j) const {
        Vec<K> v(d2_);
        for (std::size_t k = 0; k < d2_; ++k) v[k] = at(i, j, k);
        return v;
    }

    /// Bilinear extension to coordinate vectors.
    Vec<K> contract(const Vec<K>& u, const Vec<K>& v) const {
        if (u.size() != d0_ || v.size() != d1_)
            throw DimensionMismatchError("tensor contraction operand sizes");
        Vec<K> r(d2_, K(0));
        for (std::size_t i = 0; i < d0_; ++i) {
            if (u[i] == K(0)) continue;
            for (std::size_t j = 0; j < d1_; ++j) {
                if (v[j] == K(0)) continue;
                K f = u[i] * v[j];
                for (std::size_t k = 0; k < d2_; ++k) r[k] += f * at(i, j, k);
            }
        }
        return r;
    }

    /// Matrix of x -> u * x (contraction with the first slot fixed).
    Matrix<K> left_operator(const Vec<K>& u) const {
        Matrix<K> m(d2_, d1_);
        for (std::size_t j = 0; j < d1_; ++j) {
            Vec<K> col = contract(u, unit_vec<K>(d1_, j));
            for (std::size_t k = 0; k < d2_; ++k) m.at(k, j) = col[k];
        }
        return m;
    }

    friend bool operator==(const Tensor3& a, const Tensor3& b) {
        return a.d0_ == b.d0_ && a.d1_ == b.d1_ && a.d2_ == b.d2_ && a.data_ == b.data_;
    }

private:
    std::size_t d0_, d1_, d2_;
    std::vector<K> data_;
};

}  // namespace homrine
