#pragma once

#include <algorithm>
#include <cstddef>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "homrine/eigen.hpp"
#include "homrine/hlr.hpp"

namespace homrine {

/// Linear functionals on H are stored as their value vectors on the
/// canonical H-basis.
template <class K>
using Functional = Vec<K>;

template <class K>
struct FunctionalLess {
    bool operator()(const Functional<K>& a, const Functional<K>& b) const {
        return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
    }
};

template <class K>
using FunctionalSet = std::set<Functional<K>, FunctionalLess<K>>;

/// The split data of (L, A) relative to a splitting Cartan subalgebra H:
/// the root spaces L_gamma, the weight spaces A_alpha, the zero weight
/// space A_0, and psi restricted to H (in H-coordinates).
template <class K>
struct Decomposition {
    Subspace<K> H;
    Matrix<K> psi_H;
    std::vector<std::pair<Functional<K>, Subspace<K>>> roots;    ///< sorted by functional
    std::vector<std::pair<Functional<K>, Subspace<K>>> weights;  ///< sorted by functional
    Subspace<K> A0;

    std::vector<Functional<K>> gamma() const {
        std::vector<Functional<K>> v;
        for (const auto& r : roots) v.push_back(r.first);
        return v;
    }
    std::vector<Functional<K>> lambda() const {
        std::vector<Functional<K>> v;
        for (const auto& w : weights) v.push_back(w.first);
        return v;
    }

    bool is_root(const Functional<K>& f) const { return find_root(f) != nullptr; }
    bool is_weight(const Functional<K>& f) const { return find_weight(f) != nullptr; }

    const Subspace<K>* find_root(const Functional<K>& f) const {
        for (const auto& r : roots)
            if (r.first == f) return &r.second;
        return nullptr;
    }
    const Subspace<K>* find_weight(const Functional<K>& f) const {
        for (const auto& w : weights)
            if (w.first == f) return &w.second;
        return nullptr;
    }

    /// L-side component of a functional: H for 0, L_gamma for gamma in Gamma.
    const Subspace<K>* l_component(const Functional<K>& f) const {
        if (is_zero_vec(f)) return &H;
        return find_root(f);
    }
    /// A-side component: A_0 for 0, A_alpha for alpha in Lambda.
    const Subspace<K>* a_component(const Functional<K>& f) const {
        if (is_zero_vec(f)) return &A0;
        return find_weight(f);
    }

    Functional<K> zero_functional() const { return zero_vec<K>(H.dim()); }
};

/// Whether H is a maximal abelian subalgebra: [H, H] = 0 and the
/// centralizer {x : [x, H] = 0} equals H.
template <class K>
bool verify_masa(const HlrData<K>& h, const Subspace<K>& H) {
    if (H.ambient_dim() != h.dim_L) throw DimensionMismatchError("H is not a subspace of L");
    if (!bracket_span(h, H, H).is_zero()) return false;
    Subspace<K> centralizer = h.full_L();
    for (const auto& row : H.basis())
        centralizer = intersect(centralizer, kernel(h.ad(row)));
    return centralizer == H;
}

/// psi(H) = H is required so that twisted functionals gamma psi^z are
/// defined; violation gets its own error rather than a guessed extension.
struct TwistUnstableCartanError : Error {
    explicit TwistUnstableCartanError(const std::string& msg)
        : Error("psi-unstable cartan: " + msg) {}
};

/// Computes the root and weight space decomposition relative to H.
///
/// The defining conditions are rewritten as joint eigenproblems:
///   v in L_gamma  iff  (psi^{-1} ad_h)(v) = gamma(h) v  for h in the H-basis,
///   a in A_alpha  iff  (phi^{-1} rho(h))(a) = alpha(h) a.
/// Throws NotSplitError when either family fails to diagonalize over the
/// base field, CartanMismatchError when the joint zero eigenspace on the L
/// side differs from H.
template <class K>
Decomposition<K> split(const HlrData<K>& h, const Subspace<K>& H) {
    if (!verify_masa(h, H)) throw Error("split: H is not a maximal abelian subalgebra");
    if (H.image_under(h.psi) != H)
        throw TwistUnstableCartanError("psi(H) != H for the supplied H");

    Decomposition<K> d;
    d.H = H;
    std::size_t m = H.dim();
    d.psi_H = Matrix<K>(m, m);
    for (std::size_t i = 0; i < m; ++i) {
        Vec<K> coords = H.coordinates(h.psi.apply(H.basis()[i]));
        for (std::size_t k = 0; k < m; ++k) d.psi_H.at(k, i) = coords[k];
    }

    if (m == 0) {
        // vacuous conditions: everything sits in the zero component
        if (h.dim_L != 0)
            throw CartanMismatchError("L_0 = L but H = 0");
        d.A0 = h.full_A();
        return d;
    }

    Matrix<K> psi_inv = h.psi.inverse();
    std::vector<Matrix<K>> l_ops, a_ops;
    Matrix<K> phi_inv = h.a.phi.inverse();
    for (const auto& row : H.basis()) {
        l_ops.push_back(psi_inv * h.ad(row));
        a_ops.push_back(phi_inv * h.anchor_of(row));
    }

    std::vector<EigenComponent<K>> l_comps, a_comps;
    try {
        l_comps = simultaneous_eigenspaces(l_ops);
    } catch (const NotDiagonalizableError& e) {
        throw NotSplitError(std::string("L does not split over the base field (") + e.what() +
                            ")");
    }
    try {
        a_comps = simultaneous_eigenspaces(a_ops);
    } catch (const NotDiagonalizableError& e) {
        throw NotSplitError(std::string("A does not split over the base field (") + e.what() +
                            ")");
    }

    bool saw_zero = false;
    for (auto& comp : l_comps) {
        if (is_zero_vec(comp.values)) {
            saw_zero = true;
            if (comp.space != H)
                throw CartanMismatchError("joint zero eigenspace has dimension " +
                                          std::to_string(comp.space.dim()) + ", H has " +
                                          std::to_string(H.dim()));
        } else {
            d.roots.emplace_back(comp.values, comp.space);
        }
    }
    if (!saw_zero) throw CartanMismatchError("joint zero eigenspace is 0, H is not");

    d.A0 = Subspace<K>::zero(h.a.dim);
    for (auto& comp : a_comps) {
        if (is_zero_vec(comp.values)) {
            d.A0 = comp.space;
        } else {
            d.weights.emplace_back(comp.values, comp.space);
        }
    }
    for (const auto& [alpha, space] : d.weights) {
        if (!space.contains(space.image_under(h.a.phi)))
            throw NotSplitError("weight space A_" + vec_str(alpha) + " is not phi-invariant");
    }
    return d;
}

/// gamma o psi^z as a value vector on the H-basis. The sign convention
/// follows the twist-shift rule: applying psi itself maps L_gamma into
/// L_{gamma psi^{-1}}.
template <class K>
Functional<K> psi_shift(const Decomposition<K>& d, const Functional<K>& gamma, long long z) {
    return d.psi_H.pow(z).transposed().apply(gamma);
}

/// Companion subspace-level check for psi_shift: psi^{-z}(L_gamma) lies in
/// L_{gamma psi^z} (with L_0 = H). False when the shifted functional is not
/// a component while the image is nonzero, or containment fails.
template <class K>
bool verify_psi_shift(const HlrData<K>& h, const Decomposition<K>& d, const Functional<K>& gamma,
                      long long z) {
    const Subspace<K>* src = d.l_component(gamma);
    if (src == nullptr) throw Error("psi_shift: functional is not a root or zero");
    Subspace<K> image = src->image_under(h.psi.pow(-z));
    const Subspace<K>* dst = d.l_component(psi_shift(d, gamma, z));
    if (dst == nullptr) return image.is_zero();
    return dst->contains(image);
}

/// Gamma = -Gamma and Lambda = -Lambda.
template <class K>
bool check_symmetry(const Decomposition<K>& d) {
    for (const auto& [gamma, space] : d.roots)
        if (!d.is_root(neg_vec(gamma))) return false;
    for (const auto& [alpha, space] : d.weights)
        if (!d.is_weight(neg_vec(alpha))) return false;
    return true;
}

// ---------------------------------------------------------------------------
// Grading laws: product spans between components land in the predicted
// component.
// ---------------------------------------------------------------------------

enum class GradingKind { Bracket, AlgebraMult, ModuleAction, AnchorAction };

inline const char* grading_kind_name(GradingKind k) {
    switch (k) {
        case GradingKind::Bracket: return "[L,L]";
        case GradingKind::AlgebraMult: return "A*A";
        case GradingKind::ModuleAction: return "A.L";
        case GradingKind::AnchorAction: return "rho(L)(A)";
    }
    return "?";
}

template <class K>
struct GradingEntry {
    GradingKind kind;
    Functional<K> src1, src2;   ///< zero vector stands for the 0-component
    Functional<K> target;
    std::size_t product_dim = 0;
    bool target_exists = true;  ///< target functional is a component (or 0)
    bool contained = true;
};

template <class K>
struct GradingReport {
    std::vector<GradingEntry<K>> products;  ///< every nonzero product
    std::vector<GradingEntry<K>> violations() const {
        std::vector<GradingEntry<K>> v;
        for (const auto& e : products)
            if (!e.target_exists || !e.contained) v.push_back(e);
        return v;
    }
    bool ok() const { return violations().empty(); }
};

/// Exhaustive check of the four grading laws over all component pairs,
/// including the 0-components:
///   [L_g, L_x] in L_{(g+x) psi^{-1}},  A_a A_b in A_{a+b},
///   A_a L_g in L_{a+g},                rho(L_g)(A_a) in A_{a+g}.
template <class K>
GradingReport<K> check_grading(const HlrData<K>& h, const Decomposition<K>& d) {
    GradingReport<K> report;
    std::vector<std::pair<Functional<K>, const Subspace<K>*>> lside, aside;
    lside.emplace_back(d.zero_functional(), &d.H);
    for (const auto& r : d.roots) lside.emplace_back(r.first, &r.second);
    aside.emplace_back(d.zero_functional(), &d.A0);
    for (const auto& w : d.weights) aside.emplace_back(w.first, &w.second);

    auto push = [&](GradingKind kind, const Functional<K>& f1, const Functional<K>& f2,
                    const Functional<K>& target, const Subspace<K>& prod, bool l_side_target) {
        if (prod.is_zero()) return;
        GradingEntry<K> e{kind, f1, f2, target};
        e.product_dim = prod.dim();
        const Subspace<K>* comp = l_side_target ? d.l_component(target) : d.a_component(target);
        e.target_exists = comp != nullptr;
        e.contained = e.target_exists && comp->contains(prod);
        report.products.push_back(std::move(e));
    };

    for (const auto& [g, ls] : lside)
        for (const auto& [x, xs] : lside) {
            Subspace<K> prod = bracket_span(h, *ls, *xs);
            push(GradingKind::Bracket, g, x, psi_shift(d, add_vec(g, x), -1), prod, true);
        }
    for (const auto& [a, as] : aside)
        for (const auto& [b, bs] : aside) {
            Subspace<K> prod = mult_span(h.a, *as, *bs);
            push(GradingKind::AlgebraMult, a, b, add_vec(a, b), prod, false);
        }
    for (const auto& [a, as] : aside)
        for (const auto& [g, ls] : lside) {
            Subspace<K> prod = action_span(h, *as, *ls);
            push(GradingKind::ModuleAction, a, g, add_vec(a, g), prod, true);
        }
    for (const auto& [g, ls] : lside)
        for (const auto& [a, as] : aside) {
            Subspace<K> prod = anchor_span(h, *ls, *as);
            push(GradingKind::AnchorAction, g, a, add_vec(a, g), prod, false);
        }
    return report;
}

}  // namespace homrine
