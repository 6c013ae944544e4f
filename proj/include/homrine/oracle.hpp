#pragma once

#include <cstddef>
#include <vector>

#include "homrine/connections.hpp"
#include "homrine/hlr.hpp"
#include "homrine/split.hpp"

namespace homrine::oracle {

/// Enumeration limits for the brute-force searches. max_orbit_exp caps how
/// many twist powers of gamma are tried as starting points; 0 means the
/// whole orbit period.
struct ChainBudget {
    std::size_t max_family_len = 4;
    std::size_t max_orbit_exp = 0;
};

namespace detail {

/// f o psi^e computed each time from a fresh matrix power; the literal
/// evaluation route, independent of the incremental transition rule.
template <class K>
Functional<K> shift(const Decomposition<K>& d, const Functional<K>& f, long long e) {
    return d.psi_H.pow(e).transposed().apply(f);
}

/// The displayed partial sum for the prefix zeta_1..zeta_i (i >= 2):
///   zeta_1 psi^{-i+1} + zeta_2 psi^{-i+1} + zeta_3 psi^{-i+2} + ... + zeta_i psi^{-1}.
template <class K>
Functional<K> literal_partial_sum(const Decomposition<K>& d,
                                  const std::vector<Functional<K>>& zetas, std::size_t i) {
    long long top = static_cast<long long>(i) - 1;
    Functional<K> s = shift(d, zetas[0], -top);
    s = add_vec(s, shift(d, zetas[1], -top));
    for (std::size_t j = 3; j <= i; ++j)
        s = add_vec(s, shift(d, zetas[j - 1], -(static_cast<long long>(i - j) + 1)));
    return s;
}

template <class K>
bool search_root_families(const Decomposition<K>& d, const FunctionalSet<K>& pm_gamma,
                          const std::vector<Functional<K>>& alphabet,
                          const FunctionalSet<K>& accept, std::vector<Functional<K>>& zetas,
                          std::size_t max_len) {
    if (zetas.size() >= max_len) return false;
    for (const auto& zeta : alphabet) {
        zetas.push_back(zeta);
        Functional<K> s = literal_partial_sum(d, zetas, zetas.size());
        if (accept.count(s)) return true;
        if (pm_gamma.count(s) &&
            search_root_families(d, pm_gamma, alphabet, accept, zetas, max_len))
            return true;
        zetas.pop_back();
    }
    return false;
}

}  // namespace detail

/// Literal re-evaluation of a family witness: every displayed partial sum is
/// recomputed from scratch and checked against the definition.
template <class K>
bool replay_root_witness_literal(const Decomposition<K>& d, const OrbitTable<K>& orbits,
                                 const Functional<K>& gamma, const Functional<K>& xi,
                                 const Witness<K>& w) {
    if (w.base_case)
        return detail::shift(d, w.epsilon == 1 ? gamma : neg_vec(gamma), w.z) == xi;
    std::size_t n = w.family.size();
    if (n < 2) return false;
    if (!orbits.in_orbit_of(gamma, w.family.front())) return false;
    FunctionalSet<K> pm_gamma, pm_lambda_gamma;
    for (const auto& f : d.gamma()) {
        pm_gamma.insert(f);
        pm_gamma.insert(neg_vec(f));
        pm_lambda_gamma.insert(f);
        pm_lambda_gamma.insert(neg_vec(f));
    }
    for (const auto& f : d.lambda()) {
        pm_lambda_gamma.insert(f);
        pm_lambda_gamma.insert(neg_vec(f));
    }
    for (const auto& zeta : w.family)
        if (!pm_lambda_gamma.count(zeta)) return false;
    for (std::size_t i = 2; i < n; ++i)
        if (!pm_gamma.count(detail::literal_partial_sum(d, w.family, i))) return false;
    Functional<K> last = detail::literal_partial_sum(d, w.family, n);
    return orbits.in_orbit_of(xi, last) || orbits.in_orbit_of(neg_vec(xi), last);
}

/// Brute-force connection decision: enumerates every family over
/// +-Lambda u +-Gamma up to the budget, with every starting point on the
/// gamma orbit, evaluating the displayed sums literally.
template <class K>
bool bf_root_connected(const Decomposition<K>& d, const OrbitTable<K>& orbits,
                       const Functional<K>& gamma, const Functional<K>& xi,
                       const ChainBudget& budget) {
    for (int eps : {1, -1})
        for (const auto& f : orbits.orbit_of(eps == 1 ? gamma : neg_vec(gamma)))
            if (f == xi) return true;

    FunctionalSet<K> pm_gamma;
    for (const auto& f : d.gamma()) {
        pm_gamma.insert(f);
        pm_gamma.insert(neg_vec(f));
    }
    FunctionalSet<K> pm_lambda_gamma = pm_gamma;
    for (const auto& f : d.lambda()) {
        pm_lambda_gamma.insert(f);
        pm_lambda_gamma.insert(neg_vec(f));
    }
    std::vector<Functional<K>> alphabet(pm_lambda_gamma.begin(), pm_lambda_gamma.end());
    FunctionalSet<K> accept;
    for (const auto& f : orbits.orbit_of(xi)) accept.insert(f);
    for (const auto& f : orbits.orbit_of(neg_vec(xi))) accept.insert(f);

    const auto& orbit = orbits.orbit_of(gamma);
    std::size_t starts = budget.max_orbit_exp == 0
                             ? orbit.size()
                             : std::min(orbit.size(), budget.max_orbit_exp);
    for (std::size_t s = 0; s < starts; ++s) {
        const auto& zeta1 = orbit[s];
        if (!pm_lambda_gamma.count(zeta1)) continue;  // zeta_1 must be a family member too
        std::vector<Functional<K>> zetas{zeta1};
        if (detail::search_root_families(d, pm_gamma, alphabet, accept, zetas,
                                         budget.max_family_len))
            return true;
    }
    return false;
}

/// Brute-force weight connection: untwisted literal sums, sigma_1 = alpha.
template <class K>
bool bf_weight_connected(const Decomposition<K>& d, const Functional<K>& alpha,
                         const Functional<K>& beta, const ChainBudget& budget) {
    if (beta == alpha || beta == neg_vec(alpha)) return true;
    FunctionalSet<K> states;
    for (const auto& f : d.gamma()) {
        states.insert(f);
        states.insert(neg_vec(f));
    }
    for (const auto& f : d.lambda()) {
        states.insert(f);
        states.insert(neg_vec(f));
    }
    std::vector<Functional<K>> alphabet(states.begin(), states.end());

    std::vector<Functional<K>> sigmas{alpha};
    std::vector<Functional<K>> partial{alpha};
    // depth-first enumeration with literal prefix sums
    struct Frame {
        std::size_t next_index = 0;
    };
    std::vector<Frame> stack{Frame{}};
    while (!stack.empty()) {
        Frame& frame = stack.back();
        if (frame.next_index >= alphabet.size() || sigmas.size() >= budget.max_family_len) {
            stack.pop_back();
            sigmas.pop_back();
            partial.pop_back();
            continue;
        }
        const Functional<K>& sigma = alphabet[frame.next_index++];
        Functional<K> s = add_vec(partial.back(), sigma);
        if (s == beta || s == neg_vec(beta)) return true;
        if (states.count(s)) {
            sigmas.push_back(sigma);
            partial.push_back(s);
            stack.push_back(Frame{});
        }
    }
    return false;
}

/// Independent row-echelon membership machinery for the ideal oracle:
/// forward elimination with cross-multiplied rows, no canonical form, kept
/// deliberately separate from the Subspace implementation.
template <class K>
class RowBasis {
public:
    explicit RowBasis(std::size_t width) : width_(width) {}

    /// Adds v to the basis if independent; returns true when it enlarged it.
    bool absorb(Vec<K> v) {
        eliminate(v);
        std::size_t lead = leading(v);
        if (lead == width_) return false;
        rows_.push_back(std::move(v));
        // keep rows ordered by leading index for deterministic elimination
        for (std::size_t i = rows_.size(); i > 1 && leading(rows_[i - 2]) > leading(rows_[i - 1]);
             --i)
            std::swap(rows_[i - 2], rows_[i - 1]);
        return true;
    }

    bool member(Vec<K> v) const {
        eliminate(v);
        return leading(v) == width_;
    }

    std::size_t dim() const { return rows_.size(); }

private:
    std::size_t leading(const Vec<K>& v) const {
        for (std::size_t j = 0; j < width_; ++j)
            if (!(v[j] == K(0))) return j;
        return width_;
    }
    void eliminate(Vec<K>& v) const {
        for (const auto& row : rows_) {
            std::size_t lead = leading(row);
            if (v[lead] == K(0)) continue;
            K f = v[lead] / row[lead];
            for (std::size_t j = 0; j < width_; ++j) v[j] -= f * row[j];
        }
    }

    std::size_t width_;
    std::vector<Vec<K>> rows_;
};

/// Re-implements the ideal test with the independent elimination path:
/// [I, L] in I, psi(I) in I, A.I in I, rho(I)(A).L in I.
template <class K>
bool bf_is_ideal(const HlrData<K>& h, const Subspace<K>& ideal) {
    RowBasis<K> basis(h.dim_L);
    for (const auto& row : ideal.basis()) basis.absorb(row);
    for (const auto& u : ideal.basis()) {
        if (!basis.member(h.psi.apply(u))) return false;
        for (std::size_t j = 0; j < h.dim_L; ++j)
            if (!basis.member(h.bracket_of(u, unit_vec<K>(h.dim_L, j)))) return false;
        for (std::size_t p = 0; p < h.a.dim; ++p)
            if (!basis.member(h.act(unit_vec<K>(h.a.dim, p), u))) return false;
        Matrix<K> rho = h.anchor_of(u);
        for (std::size_t p = 0; p < h.a.dim; ++p) {
            Vec<K> da = rho.col(p);
            for (std::size_t j = 0; j < h.dim_L; ++j)
                if (!basis.member(h.act(da, unit_vec<K>(h.dim_L, j)))) return false;
        }
    }
    return true;
}

}  // namespace homrine::oracle
