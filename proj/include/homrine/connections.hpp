#pragma once

#include <deque>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "homrine/split.hpp"

namespace homrine {

/// The finite psi-twist cycles {gamma psi^z} of every functional in +-Gamma.
/// Cycles are stored in iteration order gamma, gamma psi^{-1}, gamma psi^{-2}, ...
template <class K>
struct OrbitTable {
    std::size_t bound = 0;
    std::map<Functional<K>, std::vector<Functional<K>>, FunctionalLess<K>> orbits;

    const std::vector<Functional<K>>& orbit_of(const Functional<K>& f) const {
        auto it = orbits.find(f);
        if (it == orbits.end()) throw Error("functional has no recorded orbit");
        return it->second;
    }
    bool in_orbit_of(const Functional<K>& of, const Functional<K>& f) const {
        for (const auto& g : orbit_of(of))
            if (g == f) return true;
        return false;
    }
};

/// Iterates gamma -> gamma o psi^{-1} from every element of +-Gamma until
/// the cycle closes. Throws OrbitUnboundedError when a cycle does not close
/// within the bound: the connection relation quantifies over all twist
/// powers, so truncation would make negative verdicts unsound.
template <class K>
OrbitTable<K> build_orbits(const Decomposition<K>& d, std::size_t bound) {
    if (bound < 1) throw Error("orbit bound must be at least 1");
    OrbitTable<K> table;
    table.bound = bound;
    Matrix<K> step = d.psi_H.inverse().transposed();
    std::vector<Functional<K>> sources;
    for (const auto& r : d.roots) {
        sources.push_back(r.first);
        sources.push_back(neg_vec(r.first));
    }
    for (const auto& start : sources) {
        if (table.orbits.count(start)) continue;
        std::vector<Functional<K>> cycle{start};
        Functional<K> cur = step.apply(start);
        while (cur != start) {
            if (cycle.size() >= bound)
                throw OrbitUnboundedError("twist orbit of " + vec_str(start) +
                                          " did not close within " + std::to_string(bound) +
                                          " steps");
            cycle.push_back(cur);
            cur = step.apply(cur);
        }
        table.orbits[start] = std::move(cycle);
    }
    return table;
}

/// A replayable certificate for one connection. Either the direct case
/// xi = epsilon gamma psi^z, or a family {zeta_1, ..., zeta_n} whose twisted
/// partial sums stay inside +-Gamma and land on the xi orbit.
template <class K>
struct Witness {
    bool base_case = true;
    int epsilon = 1;
    long long z = 0;
    std::vector<Functional<K>> family;
};

template <class K>
struct ConnectionClass {
    Functional<K> representative;  ///< smallest member
    std::vector<Functional<K>> members;
    std::map<Functional<K>, Witness<K>, FunctionalLess<K>> witnesses;
};

namespace detail {

template <class K>
FunctionalSet<K> plus_minus(const std::vector<Functional<K>>& fs) {
    FunctionalSet<K> s;
    for (const auto& f : fs) {
        s.insert(f);
        s.insert(neg_vec(f));
    }
    return s;
}

template <class K>
std::vector<Functional<K>> sorted_alphabet(const Decomposition<K>& d) {
    FunctionalSet<K> s = plus_minus<K>(d.lambda());
    for (const auto& f : plus_minus<K>(d.gamma())) s.insert(f);
    return std::vector<Functional<K>>(s.begin(), s.end());
}

}  // namespace detail

/// Decides whether gamma and xi are connected roots, returning a shortest
/// witness. The search runs over functional values: one step appends
/// zeta in +-Lambda u +-Gamma and moves mu to (mu + zeta) o psi^{-1}, the
/// unique telescoping of the defining partial sums; intermediate states must
/// stay in +-Gamma and acceptance tests membership in the +-xi orbits.
template <class K>
std::optional<Witness<K>> root_connected(const Decomposition<K>& d, const OrbitTable<K>& orbits,
                                         const Functional<K>& gamma, const Functional<K>& xi) {
    if (!d.is_root(gamma) || !d.is_root(xi)) throw Error("root_connected wants roots");

    // direct case: xi = epsilon gamma psi^z, z recorded from the orbit index
    for (int eps : {1, -1}) {
        const auto& orbit = orbits.orbit_of(eps == 1 ? gamma : neg_vec(gamma));
        for (std::size_t k = 0; k < orbit.size(); ++k)
            if (orbit[k] == xi) {
                Witness<K> w;
                w.epsilon = eps;
                w.z = -static_cast<long long>(k);
                return w;
            }
    }

    FunctionalSet<K> pm_gamma = detail::plus_minus<K>(d.gamma());
    FunctionalSet<K> accept;
    for (const auto& f : orbits.orbit_of(xi)) accept.insert(f);
    for (const auto& f : orbits.orbit_of(neg_vec(xi))) accept.insert(f);
    std::vector<Functional<K>> alphabet = detail::sorted_alphabet(d);
    Matrix<K> twist = d.psi_H.inverse().transposed();

    struct Arrival {
        Functional<K> prev;
        Functional<K> zeta;
        bool start;
    };
    std::map<Functional<K>, Arrival, FunctionalLess<K>> arrivals;
    std::deque<Functional<K>> queue;
    // zeta_1 ranges over the gamma orbit; family members must lie in
    // +-Lambda u +-Gamma, which for orbit elements means +-Gamma
    for (const auto& start : orbits.orbit_of(gamma)) {
        if (!pm_gamma.count(start) || arrivals.count(start)) continue;
        arrivals[start] = Arrival{start, start, true};
        queue.push_back(start);
    }

    auto family_to = [&](const Functional<K>& last_state, const Functional<K>& final_zeta) {
        std::vector<Functional<K>> family{final_zeta};
        Functional<K> cur = last_state;
        for (;;) {
            const Arrival& a = arrivals.at(cur);
            if (a.start) {
                family.push_back(a.zeta);  // zeta_1 = the chosen orbit element
                break;
            }
            family.push_back(a.zeta);
            cur = a.prev;
        }
        std::reverse(family.begin(), family.end());
        Witness<K> w;
        w.base_case = false;
        w.family = std::move(family);
        return w;
    };

    while (!queue.empty()) {
        Functional<K> mu = queue.front();
        queue.pop_front();
        for (const auto& zeta : alphabet) {
            Functional<K> next = twist.apply(add_vec(mu, zeta));
            if (accept.count(next)) return family_to(mu, zeta);
            if (pm_gamma.count(next) && !arrivals.count(next)) {
                arrivals[next] = Arrival{mu, zeta, false};
                queue.push_back(next);
            }
        }
    }
    return std::nullopt;
}

/// Replays a root witness through the transition rule: every partial state
/// must lie in +-Gamma and the final state on the +-xi orbit.
template <class K>
bool replay_root_witness(const Decomposition<K>& d, const OrbitTable<K>& orbits,
                         const Functional<K>& gamma, const Functional<K>& xi,
                         const Witness<K>& w) {
    if (w.base_case) {
        const Functional<K> source = w.epsilon == 1 ? gamma : neg_vec(gamma);
        return psi_shift(d, source, w.z) == xi;
    }
    if (w.family.size() < 2) return false;
    if (!orbits.in_orbit_of(gamma, w.family.front())) return false;
    FunctionalSet<K> pm_gamma = detail::plus_minus<K>(d.gamma());
    Matrix<K> twist = d.psi_H.inverse().transposed();
    Functional<K> state = w.family.front();
    for (std::size_t i = 1; i < w.family.size(); ++i) {
        state = twist.apply(add_vec(state, w.family[i]));
        bool last = i + 1 == w.family.size();
        if (last)
            return orbits.in_orbit_of(xi, state) || orbits.in_orbit_of(neg_vec(xi), state);
        if (!pm_gamma.count(state)) return false;
    }
    return false;
}

/// Connection of weights: untwisted partial sums, states in
/// +-Lambda u +-Gamma, acceptance at +-beta, sigma_1 = alpha.
template <class K>
std::optional<Witness<K>> weight_connected(const Decomposition<K>& d, const Functional<K>& alpha,
                                           const Functional<K>& beta) {
    if (!d.is_weight(alpha) || !d.is_weight(beta)) throw Error("weight_connected wants weights");
    if (beta == alpha) {
        Witness<K> w;
        w.epsilon = 1;
        return w;
    }
    if (beta == neg_vec(alpha)) {
        Witness<K> w;
        w.epsilon = -1;
        return w;
    }

    FunctionalSet<K> states = detail::plus_minus<K>(d.lambda());
    for (const auto& f : detail::plus_minus<K>(d.gamma())) states.insert(f);
    std::vector<Functional<K>> alphabet = detail::sorted_alphabet(d);

    struct Arrival {
        Functional<K> prev;
        Functional<K> sigma;
        bool start;
    };
    std::map<Functional<K>, Arrival, FunctionalLess<K>> arrivals;
    std::deque<Functional<K>> queue;
    arrivals[alpha] = Arrival{alpha, alpha, true};
    queue.push_back(alpha);

    auto family_to = [&](const Functional<K>& last_state, const Functional<K>& final_sigma) {
        std::vector<Functional<K>> family{final_sigma};
        Functional<K> cur = last_state;
        for (;;) {
            const Arrival& a = arrivals.at(cur);
            family.push_back(a.sigma);
            if (a.start) break;
            cur = a.prev;
        }
        std::reverse(family.begin(), family.end());
        Witness<K> w;
        w.base_case = false;
        w.family = std::move(family);
        return w;
    };

    while (!queue.empty()) {
        Functional<K> mu = queue.front();
        queue.pop_front();
        for (const auto& sigma : alphabet) {
            Functional<K> next = add_vec(mu, sigma);
            if (next == beta || next == neg_vec(beta)) return family_to(mu, sigma);
            if (states.count(next) && !arrivals.count(next)) {
                arrivals[next] = Arrival{mu, sigma, false};
                queue.push_back(next);
            }
        }
    }
    return std::nullopt;
}

template <class K>
bool replay_weight_witness(const Decomposition<K>& d, const Functional<K>& alpha,
                           const Functional<K>& beta, const Witness<K>& w) {
    if (w.base_case)
        return w.epsilon == 1 ? beta == alpha : beta == neg_vec(alpha);
    if (w.family.size() < 2 || w.family.front() != alpha) return false;
    FunctionalSet<K> states = detail::plus_minus<K>(d.lambda());
    for (const auto& f : detail::plus_minus<K>(d.gamma())) states.insert(f);
    Functional<K> state = w.family.front();
    for (std::size_t i = 1; i < w.family.size(); ++i) {
        state = add_vec(state, w.family[i]);
        bool last = i + 1 == w.family.size();
        if (last) return state == beta || state == neg_vec(beta);
        if (!states.count(state)) return false;
    }
    return false;
}

namespace detail {

/// Partition a sorted list of functionals by a symmetric, transitive
/// connectivity oracle, verifying it is an equivalence relation.
template <class K, class Conn>
std::vector<ConnectionClass<K>> partition_by(const std::vector<Functional<K>>& items,
                                             Conn&& connected) {
    std::size_t n = items.size();
    std::vector<std::vector<std::optional<Witness<K>>>> conn(n);
    for (std::size_t i = 0; i < n; ++i) {
        conn[i].resize(n);
        for (std::size_t j = 0; j < n; ++j) conn[i][j] = connected(items[i], items[j]);
    }
    for (std::size_t i = 0; i < n; ++i) {
        if (!conn[i][i]) throw Error("connection relation is not reflexive");
        for (std::size_t j = 0; j < n; ++j) {
            if (conn[i][j].has_value() != conn[j][i].has_value())
                throw Error("connection relation is not symmetric");
            for (std::size_t k = 0; k < n; ++k)
                if (conn[i][j] && conn[j][k] && !conn[i][k])
                    throw Error("connection relation is not transitive");
        }
    }
    std::vector<bool> used(n, false);
    std::vector<ConnectionClass<K>> classes;
    for (std::size_t i = 0; i < n; ++i) {
        if (used[i]) continue;
        ConnectionClass<K> cls;
        cls.representative = items[i];
        for (std::size_t j = i; j < n; ++j) {
            if (used[j] || !conn[i][j]) continue;
            used[j] = true;
            cls.members.push_back(items[j]);
            cls.witnesses[items[j]] = *conn[i][j];
        }
        classes.push_back(std::move(cls));
    }
    return classes;
}

}  // namespace detail

/// Gamma / ~, sorted by class representative, with a witness from the
/// representative to each member.
template <class K>
std::vector<ConnectionClass<K>> root_classes(const Decomposition<K>& d,
                                             const OrbitTable<K>& orbits) {
    return detail::partition_by<K>(d.gamma(), [&](const Functional<K>& a, const Functional<K>& b) {
        return root_connected(d, orbits, a, b);
    });
}

/// Lambda / ~, sorted by class representative.
template <class K>
std::vector<ConnectionClass<K>> weight_classes(const Decomposition<K>& d) {
    return detail::partition_by<K>(d.lambda(),
                                   [&](const Functional<K>& a, const Functional<K>& b) {
                                       return weight_connected(d, a, b);
                                   });
}

}  // namespace homrine
