#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "homrine/errors.hpp"
#include "homrine/scalar.hpp"

namespace homrine {

template <class K>
using Vec = std::vector<K>;

/// Dense row-major matrix over an exact field.
template <class K>
class Matrix {
public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols, K(0)) {}

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) = K(1);
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    K& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const K& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    Vec<K> row(std::size_t i) const {
        return Vec<K>(data_.begin() + i * cols_, data_.begin() + (i + 1) * cols_);
    }
    void set_row(std::size_t i, const Vec<K>& v) {
        for (std::size_t j = 0; j < cols_; ++j) at(i, j) = v[j];
    }
    Vec<K> col(std::size_t j) const {
        Vec<K> v(rows_);
        for (std::size_t i = 0; i < rows_; ++i) v[i] = at(i, j);
        return v;
    }

    bool is_zero() const {
        for (const K& x : data_)
            if (!(x == K(0))) return false;
        return true;
    }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }
    friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

    friend Matrix operator+(const Matrix& a, const Matrix& b) {
        a.require_same_shape(b);
        Matrix r = a;
        for (std::size_t i = 0; i < r.data_.size(); ++i) r.data_[i] += b.data_[i];
        return r;
    }
    friend Matrix operator-(const Matrix& a, const Matrix& b) {
        a.require_same_shape(b);
        Matrix r = a;
        for (std::size_t i = 0; i < r.data_.size(); ++i) r.data_[i] -= b.data_[i];
        return r;
    }
    friend Matrix operator*(const K& s, const Matrix& m) {
        Matrix r = m;
        for (K& x : r.data_) x = s * x;
        return r;
    }
    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.rows_)
            throw DimensionMismatchError("matrix product " + a.shape_str() + " * " + b.shape_str());
        Matrix r(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const K& aik = a.at(i, k);
                if (aik == K(0)) continue;
                for (std::size_t j = 0; j < b.cols_; ++j) r.at(i, j) += aik * b.at(k, j);
            }
        return r;
    }
    Matrix operator-() const {
        Matrix r = *this;
        for (K& x : r.data_) x = -x;
        return r;
    }

    /// Column-vector action v -> M v.
    Vec<K> apply(const Vec<K>& v) const {
        if (v.size() != cols_)
            throw DimensionMismatchError("matrix apply " + shape_str() + " to vector of size " +
                                         std::to_string(v.size()));
        Vec<K> r(rows_, K(0));
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                if (!(v[j] == K(0))) r[i] += at(i, j) * v[j];
        return r;
    }

    Matrix transposed() const {
        Matrix r(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
        return r;
    }

    /// Exact inverse via Gauss-Jordan. Throws SingularError if not invertible.
    Matrix inverse() const {
        if (rows_ != cols_) throw DimensionMismatchError("inverse of non-square " + shape_str());
        std::size_t n = rows_;
        Matrix a = *this, inv = identity(n);
        for (std::size_t col = 0; col < n; ++col) {
            std::size_t pivot = n;
            for (std::size_t r = col; r < n; ++r)
                if (!(a.at(r, col) == K(0))) { pivot = r; break; }
            if (pivot == n) throw SingularError("matrix has no inverse");
            a.swap_rows(pivot, col);
            inv.swap_rows(pivot, col);
            K inv_p = K(1) / a.at(col, col);
            a.scale_row(col, inv_p);
            inv.scale_row(col, inv_p);
            for (std::size_t r = 0; r < n; ++r) {
                if (r == col) continue;
                K f = a.at(r, col);
                if (f == K(0)) continue;
                a.add_scaled_row(r, col, -f);
                inv.add_scaled_row(r, col, -f);
            }
        }
        return inv;
    }

    /// Integer power; negative exponents go through the inverse.
    Matrix pow(long long e) const {
        if (rows_ != cols_) throw DimensionMismatchError("power of non-square " + shape_str());
        Matrix base = e < 0 ? inverse() : *this;
        unsigned long long k = e < 0 ? static_cast<unsigned long long>(-e)
                                     : static_cast<unsigned long long>(e);
        Matrix r = identity(rows_);
        while (k > 0) {
            if (k & 1) r = r * base;
            base = base * base;
            k >>= 1;
        }
        return r;
    }

    bool commutes_with(const Matrix& other) const { return (*this) * other == other * (*this); }

    std::string shape_str() const {
        return std::to_string(rows_) + "x" + std::to_string(cols_);
    }

    void swap_rows(std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t j = 0; j < cols_; ++j) std::swap(at(a, j), at(b, j));
    }
    void scale_row(std::size_t i, const K& s) {
        for (std::size_t j = 0; j < cols_; ++j) at(i, j) = s * at(i, j);
    }
    void add_scaled_row(std::size_t dst, std::size_t src, const K& s) {
        for (std::size_t j = 0; j < cols_; ++j) at(dst, j) += s * at(src, j);
    }

private:
    void require_same_shape(const Matrix& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_)
            throw DimensionMismatchError(shape_str() + " vs " + o.shape_str());
    }

    std::size_t rows_, cols_;
    std::vector<K> data_;
};

template <class K>
bool is_zero_vec(const Vec<K>& v) {
    for (const K& x : v)
        if (!(x == K(0))) return false;
    return true;
}

template <class K>
Vec<K> zero_vec(std::size_t n) { return Vec<K>(n, K(0)); }

template <class K>
Vec<K> unit_vec(std::size_t n, std::size_t i) {
    Vec<K> v(n, K(0));
    v[i] = K(1);
    return v;
}

template <class K>
Vec<K> add_vec(const Vec<K>& a, const Vec<K>& b) {
    Vec<K> r = a;
    for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
    return r;
}

template <class K>
Vec<K> neg_vec(const Vec<K>& a) {
    Vec<K> r = a;
    for (K& x : r) x = -x;
    return r;
}

template <class K>
Vec<K> scale_vec(const K& s, const Vec<K>& a) {
    Vec<K> r = a;
    for (K& x : r) x = s * x;
    return r;
}

template <class K>
std::string vec_str(const Vec<K>& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ", ";
        s += scalar_str(v[i]);
    }
    return s + ")";
}

template <class K>
std::string mat_str(const Matrix<K>& m) {
    std::string s = "[";
    for (std::size_t i = 0; i < m.rows(); ++i) {
        if (i) s += "; ";
        s += vec_str(m.row(i));
    }
    return s + "]";
}

}  // namespace homrine
