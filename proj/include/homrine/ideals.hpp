#pragma once

#include <string>
#include <utility>
#include <vector>

#include "homrine/connections.hpp"

namespace homrine {

/// The ideal attached to a connection class of roots:
///   L_{0,[g]} = sum over xi in [g] of A_{-xi} L_xi (when -xi is a weight)
///               and [L_{-xi}, L_xi] (when -xi is a root),
///   I_{[g]}   = L_{0,[g]} + sum of the L_xi.
/// A summand whose guard fails contributes zero.
template <class K>
struct RootIdeal {
    ConnectionClass<K> cls;
    Subspace<K> zero_part;
    Subspace<K> graded_part;
    Subspace<K> total;
};

template <class K>
RootIdeal<K> build_root_ideal(const HlrData<K>& h, const Decomposition<K>& d,
                              const ConnectionClass<K>& cls) {
    RootIdeal<K> ri;
    ri.cls = cls;
    std::vector<Subspace<K>> zero_parts{Subspace<K>::zero(h.dim_L)};
    std::vector<Subspace<K>> graded{Subspace<K>::zero(h.dim_L)};
    for (const auto& xi : cls.members) {
        const Subspace<K>* l_xi = d.find_root(xi);
        if (l_xi == nullptr) throw Error("class member is not a root");
        graded.push_back(*l_xi);
        Functional<K> neg = neg_vec(xi);
        if (const Subspace<K>* a_neg = d.find_weight(neg))
            zero_parts.push_back(action_span(h, *a_neg, *l_xi));
        if (const Subspace<K>* l_neg = d.find_root(neg))
            zero_parts.push_back(bracket_span(h, *l_neg, *l_xi));
    }
    ri.zero_part = sum(zero_parts);
    ri.graded_part = sum(graded);
    ri.total = sum(ri.zero_part, ri.graded_part);
    if (ri.total.dim() != ri.zero_part.dim() + ri.graded_part.dim())
        throw Error("I_[gamma] is not the direct sum of its two parts");
    return ri;
}

/// The closure properties a root-class ideal must satisfy, each verified
/// exactly: bracket closure, psi-stability as an equality, closure under the
/// module action and the anchor action, and full ideal-ness in L.
template <class K>
struct RootIdealChecks {
    bool bracket_closed = false;  ///< [I, I] in I
    bool psi_equal = false;       ///< psi(I) = I
    bool action_closed = false;   ///< A I in I
    bool anchor_closed = false;   ///< rho(I)(A) L in I
    bool full_ideal = false;      ///< [I, L] in I
    bool ok() const {
        return bracket_closed && psi_equal && action_closed && anchor_closed && full_ideal;
    }
};

template <class K>
RootIdealChecks<K> verify_root_ideal(const HlrData<K>& h, const RootIdeal<K>& ri) {
    RootIdealChecks<K> c;
    const Subspace<K>& i = ri.total;
    c.bracket_closed = i.contains(bracket_span(h, i, i));
    c.psi_equal = i.image_under(h.psi) == i;
    c.action_closed = i.contains(action_span(h, h.full_A(), i));
    c.anchor_closed = i.contains(anchor_action_span(h, i));
    c.full_ideal = i.contains(bracket_span(h, i, h.full_L()));
    return c;
}

/// Distinct root-class ideals must annihilate each other under the bracket.
template <class K>
struct OrthogonalityReport {
    struct Offender {
        std::size_t first, second;
        std::size_t product_dim;
    };
    std::vector<Offender> offenders;
    bool ok() const { return offenders.empty(); }
};

template <class K>
OrthogonalityReport<K> orthogonality(const HlrData<K>& h, const std::vector<RootIdeal<K>>& ideals) {
    OrthogonalityReport<K> report;
    for (std::size_t i = 0; i < ideals.size(); ++i)
        for (std::size_t j = i + 1; j < ideals.size(); ++j) {
            Subspace<K> prod = bracket_span(h, ideals[i].total, ideals[j].total);
            if (!prod.is_zero())
                report.offenders.push_back({i, j, prod.dim()});
        }
    return report;
}

/// Reconstruction of L as U + sum of the class ideals, with U a complement
/// in H of the sum of the zero parts; the sum of ideals is asserted direct
/// exactly in the centerless, exhausted-H regime.
template <class K>
struct LAssembly {
    Subspace<K> zero_sum;    ///< sum of the L_{0,[g]} inside H
    Subspace<K> complement_U;
    bool reconstructs = false;   ///< U + sum I_[g] = L
    bool exhausted_H = false;    ///< zero_sum = H
    bool center_zero = false;
    bool direct_regime = false;  ///< both of the above
    bool direct = false;         ///< pairwise intersections zero and dims add up
};

template <class K>
LAssembly<K> assemble_L(const HlrData<K>& h, const Decomposition<K>& d,
                        const std::vector<RootIdeal<K>>& ideals) {
    LAssembly<K> out;
    std::vector<Subspace<K>> zeros{Subspace<K>::zero(h.dim_L)};
    std::vector<Subspace<K>> totals{Subspace<K>::zero(h.dim_L)};
    for (const auto& ri : ideals) {
        zeros.push_back(ri.zero_part);
        totals.push_back(ri.total);
    }
    out.zero_sum = sum(zeros);
    if (!d.H.contains(out.zero_sum)) throw Error("L_{0,[gamma]} escapes H");
    out.complement_U = complement(d.H, out.zero_sum);
    Subspace<K> all = sum(totals);
    out.reconstructs = sum(all, out.complement_U) == h.full_L();
    out.exhausted_H = out.zero_sum == d.H;
    out.center_zero = center_L(h).is_zero();
    out.direct_regime = out.exhausted_H && out.center_zero;
    if (out.direct_regime) {
        out.direct = true;
        std::size_t dim_sum = 0;
        for (const auto& ri : ideals) dim_sum += ri.total.dim();
        if (dim_sum != all.dim()) out.direct = false;
        for (std::size_t i = 0; i < ideals.size() && out.direct; ++i)
            for (std::size_t j = i + 1; j < ideals.size() && out.direct; ++j)
                if (!intersect(ideals[i].total, ideals[j].total).is_zero()) out.direct = false;
    }
    return out;
}

/// Weight-side mirror: the ideal of A attached to a weight class,
///   A_{0,[a]} = sum over beta in [a] of rho(L_{-beta})(A_beta) (when -beta
///               is a root) and A_{-beta} A_beta (when -beta is a weight),
///   script-A_{[a]} = A_{0,[a]} + sum of the A_beta.
template <class K>
struct WeightIdeal {
    ConnectionClass<K> cls;
    Subspace<K> zero_part;
    Subspace<K> graded_part;
    Subspace<K> total;
};

template <class K>
WeightIdeal<K> build_weight_ideal(const HlrData<K>& h, const Decomposition<K>& d,
                                  const ConnectionClass<K>& cls) {
    WeightIdeal<K> wi;
    wi.cls = cls;
    std::vector<Subspace<K>> zero_parts{Subspace<K>::zero(h.a.dim)};
    std::vector<Subspace<K>> graded{Subspace<K>::zero(h.a.dim)};
    for (const auto& beta : cls.members) {
        const Subspace<K>* a_beta = d.find_weight(beta);
        if (a_beta == nullptr) throw Error("class member is not a weight");
        graded.push_back(*a_beta);
        Functional<K> neg = neg_vec(beta);
        if (const Subspace<K>* l_neg = d.find_root(neg))
            zero_parts.push_back(anchor_span(h, *l_neg, *a_beta));
        if (const Subspace<K>* a_neg = d.find_weight(neg))
            zero_parts.push_back(mult_span(h.a, *a_neg, *a_beta));
    }
    wi.zero_part = sum(zero_parts);
    wi.graded_part = sum(graded);
    wi.total = sum(wi.zero_part, wi.graded_part);
    if (wi.total.dim() != wi.zero_part.dim() + wi.graded_part.dim())
        throw Error("script-A_[alpha] is not the direct sum of its two parts");
    return wi;
}

template <class K>
struct WeightIdealChecks {
    bool self_closed = false;  ///< script-A script-A in script-A
    bool ideal_in_A = false;   ///< script-A A in script-A
    bool ok() const { return self_closed && ideal_in_A; }
};

template <class K>
WeightIdealChecks<K> verify_weight_ideal(const HlrData<K>& h, const WeightIdeal<K>& wi) {
    WeightIdealChecks<K> c;
    c.self_closed = wi.total.contains(mult_span(h.a, wi.total, wi.total));
    c.ideal_in_A = wi.total.contains(mult_span(h.a, wi.total, h.full_A()));
    return c;
}

template <class K>
OrthogonalityReport<K> weight_orthogonality(const HlrData<K>& h,
                                            const std::vector<WeightIdeal<K>>& ideals) {
    OrthogonalityReport<K> report;
    for (std::size_t i = 0; i < ideals.size(); ++i)
        for (std::size_t j = i + 1; j < ideals.size(); ++j) {
            Subspace<K> prod = mult_span(h.a, ideals[i].total, ideals[j].total);
            if (!prod.is_zero())
                report.offenders.push_back({i, j, prod.dim()});
        }
    return report;
}

template <class K>
struct AAssembly {
    Subspace<K> zero_sum;  ///< sum of the A_{0,[a]} inside A_0
    Subspace<K> complement_V;
    bool reconstructs = false;
    bool exhausted_A0 = false;
    bool center_zero = false;
    bool direct_regime = false;
    bool direct = false;
};

template <class K>
AAssembly<K> assemble_A(const HlrData<K>& h, const Decomposition<K>& d,
                        const std::vector<WeightIdeal<K>>& ideals) {
    AAssembly<K> out;
    std::vector<Subspace<K>> zeros{Subspace<K>::zero(h.a.dim)};
    std::vector<Subspace<K>> totals{Subspace<K>::zero(h.a.dim)};
    for (const auto& wi : ideals) {
        zeros.push_back(wi.zero_part);
        totals.push_back(wi.total);
    }
    out.zero_sum = sum(zeros);
    if (!d.A0.contains(out.zero_sum)) throw Error("A_{0,[alpha]} escapes A_0");
    out.complement_V = complement(d.A0, out.zero_sum);
    Subspace<K> all = sum(totals);
    out.reconstructs = sum(all, out.complement_V) == h.full_A();
    out.exhausted_A0 = out.zero_sum == d.A0;
    out.center_zero = center_A(h).is_zero();
    out.direct_regime = out.exhausted_A0 && out.center_zero;
    if (out.direct_regime) {
        out.direct = true;
        std::size_t dim_sum = 0;
        for (const auto& wi : ideals) dim_sum += wi.total.dim();
        if (dim_sum != all.dim()) out.direct = false;
        for (std::size_t i = 0; i < ideals.size() && out.direct; ++i)
            for (std::size_t j = i + 1; j < ideals.size() && out.direct; ++j)
                if (!intersect(ideals[i].total, ideals[j].total).is_zero()) out.direct = false;
    }
    return out;
}

}  // namespace homrine
