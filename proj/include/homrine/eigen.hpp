#pragma once

#include <algorithm>
#include <cstddef>
#include <utility>
#include <vector>

#include "homrine/matrix.hpp"
#include "homrine/subspace.hpp"

namespace homrine {

/// Coefficients of det(xI - A), leading coefficient first. Berkowitz's
/// division-free scheme, so it works verbatim over prime fields of any
/// characteristic.
template <class K>
std::vector<K> char_poly(const Matrix<K>& a) {
    if (a.rows() != a.cols())
        throw DimensionMismatchError("characteristic polynomial of non-square matrix");
    std::size_t n = a.rows();
    std::vector<K> c{K(1)};
    for (std::size_t k = 1; k <= n; ++k) {
        // s_j = R M^{j-1} C with M the (k-1)x(k-1) leading block,
        // R the row a[k-1][0..k-2], C the column a[0..k-2][k-1]; s_0 = a[k-1][k-1].
        std::vector<K> s(k, K(0));
        s[0] = a.at(k - 1, k - 1);
        Vec<K> w(k - 1);
        for (std::size_t i = 0; i + 1 < k; ++i) w[i] = a.at(i, k - 1);
        for (std::size_t j = 1; j < k; ++j) {
            K dot(0);
            for (std::size_t i = 0; i + 1 < k; ++i) dot += a.at(k - 1, i) * w[i];
            s[j] = dot;
            if (j + 1 < k) {
                Vec<K> next(k - 1, K(0));
                for (std::size_t r = 0; r + 1 < k; ++r)
                    for (std::size_t i = 0; i + 1 < k; ++i) next[r] += a.at(r, i) * w[i];
                w = std::move(next);
            }
        }
        // Toeplitz product: next[i] = c[i] - sum_j s[j] * c[i-1-j]
        std::vector<K> next(k + 1, K(0));
        for (std::size_t i = 0; i <= k; ++i) {
            if (i < c.size()) next[i] = c[i];
            for (std::size_t j = 0; j < k && j + 1 <= i; ++j)
                if (i - 1 - j < c.size()) next[i] -= s[j] * c[i - 1 - j];
        }
        c = std::move(next);
    }
    return c;
}

template <class K>
struct EigenComponent {
    std::vector<K> values;  ///< one eigenvalue per operator, in input order
    Subspace<K> space;      ///< joint eigenspace
};

namespace detail {

/// Matrix of m restricted to the invariant subspace s, in s-coordinates.
template <class K>
Matrix<K> restrict_operator(const Matrix<K>& m, const Subspace<K>& s) {
    std::size_t d = s.dim();
    Matrix<K> r(d, d);
    for (std::size_t i = 0; i < d; ++i) {
        Vec<K> image = m.apply(s.basis()[i]);
        Vec<K> coords = s.coordinates(image);  // throws if s is not invariant
        for (std::size_t j = 0; j < d; ++j) r.at(j, i) = coords[j];
    }
    return r;
}

}  // namespace detail

/// Joint eigenspaces of a family of pairwise commuting operators, with all
/// eigenvalues drawn from the base field.
///
/// Refines the ambient space one operator at a time: each current component
/// is invariant under the next operator, whose restriction is diagonalized
/// through its characteristic polynomial roots in K. Throws
/// NonCommutingError when the family does not commute, and
/// NotDiagonalizableError when eigenspaces fail to exhaust some component
/// (irrational or defective spectrum over K).
template <class K>
std::vector<EigenComponent<K>> simultaneous_eigenspaces(const std::vector<Matrix<K>>& ops) {
    if (ops.empty()) throw DimensionMismatchError("no operators given");
    std::size_t n = ops.front().rows();
    for (const auto& m : ops)
        if (m.rows() != n || m.cols() != n)
            throw DimensionMismatchError("operators of inconsistent shapes");
    for (std::size_t i = 0; i < ops.size(); ++i)
        for (std::size_t j = i + 1; j < ops.size(); ++j)
            if (!ops[i].commutes_with(ops[j]))
                throw NonCommutingError("operators " + std::to_string(i) + " and " +
                                        std::to_string(j));

    std::vector<EigenComponent<K>> components{{{}, Subspace<K>::full(n)}};
    for (const auto& op : ops) {
        std::vector<EigenComponent<K>> refined;
        for (const auto& comp : components) {
            if (comp.space.is_zero()) continue;
            Matrix<K> r = detail::restrict_operator(op, comp.space);
            std::vector<K> roots = field_roots(char_poly(r));
            std::size_t covered = 0;
            for (const K& lambda : roots) {
                Matrix<K> shifted = r;
                for (std::size_t i = 0; i < r.rows(); ++i) shifted.at(i, i) -= lambda;
                Subspace<K> local = kernel(shifted);
                if (local.is_zero()) continue;
                covered += local.dim();
                std::vector<Vec<K>> lifted;
                for (const auto& c : local.basis())
                    lifted.push_back(comp.space.from_coordinates(c));
                EigenComponent<K> next;
                next.values = comp.values;
                next.values.push_back(lambda);
                next.space = Subspace<K>::span(n, lifted);
                refined.push_back(std::move(next));
            }
            if (covered != comp.space.dim())
                throw NotDiagonalizableError("eigenspaces over the base field cover " +
                                             std::to_string(covered) + " of " +
                                             std::to_string(comp.space.dim()) + " dimensions");
        }
        components = std::move(refined);
    }
    std::sort(components.begin(), components.end(),
              [](const EigenComponent<K>& a, const EigenComponent<K>& b) {
                  return std::lexicographical_compare(a.values.begin(), a.values.end(),
                                                      b.values.begin(), b.values.end());
              });
    return components;
}

}  // namespace homrine
