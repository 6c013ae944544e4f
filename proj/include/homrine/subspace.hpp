#pragma once

#include <cstddef>
#include <vector>

#include "homrine/matrix.hpp"

namespace homrine {

/// In-place reduced row echelon form. Returns the pivot column of each
/// nonzero row, in order.
template <class K>
std::vector<std::size_t> rref_in_place(Matrix<K>& m) {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        std::size_t pivot = m.rows();
        for (std::size_t r = row; r < m.rows(); ++r)
            if (!(m.at(r, col) == K(0))) { pivot = r; break; }
        if (pivot == m.rows()) continue;
        m.swap_rows(pivot, row);
        m.scale_row(row, K(1) / m.at(row, col));
        for (std::size_t r = 0; r < m.rows(); ++r) {
            if (r == row) continue;
            K f = m.at(r, col);
            if (f == K(0)) continue;
            m.add_scaled_row(r, row, -f);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

template <class K>
Matrix<K> rref(Matrix<K> m) {
    rref_in_place(m);
    return m;
}

template <class K>
std::size_t rank(Matrix<K> m) {
    return rref_in_place(m).size();
}

/// A linear subspace of K^n held in canonical form: basis rows in reduced
/// row echelon form with no zero rows. Two subspaces are equal as sets iff
/// their stored data compare equal.
template <class K>
class Subspace {
public:
    Subspace() : ambient_(0) {}
    explicit Subspace(std::size_t ambient_dim) : ambient_(ambient_dim) {}

    /// Canonicalizes the span of arbitrary generator rows.
    static Subspace span(std::size_t ambient_dim, const std::vector<Vec<K>>& generators) {
        Matrix<K> m(generators.size(), ambient_dim);
        for (std::size_t i = 0; i < generators.size(); ++i) {
            if (generators[i].size() != ambient_dim)
                throw DimensionMismatchError("generator length vs ambient dimension");
            m.set_row(i, generators[i]);
        }
        return from_rref(ambient_dim, m);
    }

    static Subspace zero(std::size_t ambient_dim) { return Subspace(ambient_dim); }

    static Subspace full(std::size_t ambient_dim) {
        Subspace s(ambient_dim);
        for (std::size_t i = 0; i < ambient_dim; ++i) {
            s.basis_.push_back(unit_vec<K>(ambient_dim, i));
            s.pivots_.push_back(i);
        }
        return s;
    }

    std::size_t ambient_dim() const { return ambient_; }
    std::size_t dim() const { return basis_.size(); }
    bool is_zero() const { return basis_.empty(); }
    const std::vector<Vec<K>>& basis() const { return basis_; }
    const std::vector<std::size_t>& pivots() const { return pivots_; }

    friend bool operator==(const Subspace& a, const Subspace& b) {
        return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
    }
    friend bool operator!=(const Subspace& a, const Subspace& b) { return !(a == b); }

    /// Residue of v after eliminating all pivot coordinates; zero iff v lies
    /// in the subspace.
    Vec<K> reduce(Vec<K> v) const {
        if (v.size() != ambient_)
            throw DimensionMismatchError("vector length vs ambient dimension");
        for (std::size_t r = 0; r < basis_.size(); ++r) {
            K f = v[pivots_[r]];
            if (f == K(0)) continue;
            for (std::size_t j = 0; j < ambient_; ++j) v[j] -= f * basis_[r][j];
        }
        return v;
    }

    bool contains(const Vec<K>& v) const { return is_zero_vec(reduce(v)); }

    bool contains(const Subspace& other) const {
        if (other.ambient_ != ambient_)
            throw DimensionMismatchError("subspace containment across ambients");
        for (const auto& row : other.basis_)
            if (!contains(row)) return false;
        return true;
    }

    /// Coordinates of v in the stored basis; v must lie in the subspace.
    Vec<K> coordinates(const Vec<K>& v) const {
        Vec<K> c(basis_.size(), K(0));
        Vec<K> rest = v;
        for (std::size_t r = 0; r < basis_.size(); ++r) {
            c[r] = rest[pivots_[r]];
            if (c[r] == K(0)) continue;
            for (std::size_t j = 0; j < ambient_; ++j) rest[j] -= c[r] * basis_[r][j];
        }
        if (!is_zero_vec(rest)) throw Error("vector not in subspace");
        return c;
    }

    Vec<K> from_coordinates(const Vec<K>& c) const {
        Vec<K> v(ambient_, K(0));
        for (std::size_t r = 0; r < basis_.size(); ++r)
            for (std::size_t j = 0; j < ambient_; ++j) v[j] += c[r] * basis_[r][j];
        return v;
    }

    /// Image of the subspace under a linear map (columns act on coordinates).
    Subspace image_under(const Matrix<K>& m) const {
        std::vector<Vec<K>> rows;
        rows.reserve(basis_.size());
        for (const auto& b : basis_) rows.push_back(m.apply(b));
        return span(m.rows(), rows);
    }

private:
    static Subspace from_rref(std::size_t ambient_dim, Matrix<K>& m) {
        auto pivots = rref_in_place(m);
        Subspace s(ambient_dim);
        s.pivots_ = pivots;
        for (std::size_t i = 0; i < pivots.size(); ++i) s.basis_.push_back(m.row(i));
        return s;
    }

    std::size_t ambient_;
    std::vector<Vec<K>> basis_;
    std::vector<std::size_t> pivots_;
};

/// Null space {v : m v = 0}, in canonical basis.
template <class K>
Subspace<K> kernel(const Matrix<K>& m) {
    Matrix<K> r = m;
    auto pivots = rref_in_place(r);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto p : pivots) is_pivot[p] = true;
    std::vector<Vec<K>> gens;
    for (std::size_t j = 0; j < m.cols(); ++j) {
        if (is_pivot[j]) continue;
        Vec<K> v(m.cols(), K(0));
        v[j] = K(1);
        for (std::size_t row = 0; row < pivots.size(); ++row) v[pivots[row]] = -r.at(row, j);
        gens.push_back(std::move(v));
    }
    return Subspace<K>::span(m.cols(), gens);
}

template <class K>
Subspace<K> sum(const std::vector<Subspace<K>>& parts) {
    if (parts.empty()) throw DimensionMismatchError("sum of no subspaces");
    std::vector<Vec<K>> gens;
    for (const auto& p : parts) {
        if (p.ambient_dim() != parts.front().ambient_dim())
            throw DimensionMismatchError("subspace sum across ambients");
        gens.insert(gens.end(), p.basis().begin(), p.basis().end());
    }
    return Subspace<K>::span(parts.front().ambient_dim(), gens);
}

template <class K>
Subspace<K> sum(const Subspace<K>& a, const Subspace<K>& b) {
    return sum(std::vector<Subspace<K>>{a, b});
}

/// Intersection via the left kernel of the stacked bases: coefficients
/// (x, y) with x A - y B = 0 sweep out exactly the common vectors x A.
template <class K>
Subspace<K> intersect(const Subspace<K>& a, const Subspace<K>& b) {
    if (a.ambient_dim() != b.ambient_dim())
        throw DimensionMismatchError("subspace intersection across ambients");
    std::size_t n = a.ambient_dim(), da = a.dim(), db = b.dim();
    if (da == 0 || db == 0) return Subspace<K>::zero(n);
    Matrix<K> stacked(n, da + db);
    for (std::size_t i = 0; i < da; ++i)
        for (std::size_t j = 0; j < n; ++j) stacked.at(j, i) = a.basis()[i][j];
    for (std::size_t i = 0; i < db; ++i)
        for (std::size_t j = 0; j < n; ++j) stacked.at(j, da + i) = -b.basis()[i][j];
    Subspace<K> coeffs = kernel(stacked);
    std::vector<Vec<K>> gens;
    for (const auto& c : coeffs.basis()) {
        Vec<K> v(n, K(0));
        for (std::size_t i = 0; i < da; ++i)
            for (std::size_t j = 0; j < n; ++j) v[j] += c[i] * a.basis()[i][j];
        gens.push_back(std::move(v));
    }
    return Subspace<K>::span(n, gens);
}

/// Deterministic complement of s inside ambient: greedily take ambient basis
/// vectors (standard basis vectors when ambient is the full space), lowest
/// index first, whenever they enlarge the span.
template <class K>
Subspace<K> complement(const Subspace<K>& ambient, const Subspace<K>& s) {
    if (!ambient.contains(s)) throw DimensionMismatchError("complement: s not inside ambient");
    std::vector<Vec<K>> picked;
    Subspace<K> acc = s;
    for (const auto& cand : ambient.basis()) {
        if (acc.contains(cand)) continue;
        picked.push_back(cand);
        std::vector<Vec<K>> gens = acc.basis();
        gens.push_back(cand);
        acc = Subspace<K>::span(ambient.ambient_dim(), gens);
        if (acc.dim() == ambient.dim()) break;
    }
    return Subspace<K>::span(ambient.ambient_dim(), picked);
}

}  // namespace homrine
