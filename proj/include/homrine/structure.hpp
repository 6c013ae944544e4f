#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "homrine/ideals.hpp"

namespace homrine {

namespace detail {

/// sum over gamma in Gamma of A_{-gamma} L_gamma (when -gamma is a weight)
/// and [L_{-gamma}, L_gamma] (when -gamma is a root); the candidate for H.
template <class K>
Subspace<K> h_exhaustion_sum(const HlrData<K>& h, const Decomposition<K>& d) {
    std::vector<Subspace<K>> parts{Subspace<K>::zero(h.dim_L)};
    for (const auto& [gamma, l_gamma] : d.roots) {
        Functional<K> neg = neg_vec(gamma);
        if (const Subspace<K>* a_neg = d.find_weight(neg))
            parts.push_back(action_span(h, *a_neg, l_gamma));
        if (const Subspace<K>* l_neg = d.find_root(neg))
            parts.push_back(bracket_span(h, *l_neg, l_gamma));
    }
    return sum(parts);
}

/// sum over alpha in Lambda of rho(L_{-alpha})(A_alpha) (when -alpha is a
/// root) and A_{-alpha} A_alpha (when -alpha is a weight); the candidate
/// for A_0.
template <class K>
Subspace<K> a0_exhaustion_sum(const HlrData<K>& h, const Decomposition<K>& d) {
    std::vector<Subspace<K>> parts{Subspace<K>::zero(h.a.dim)};
    for (const auto& [alpha, a_alpha] : d.weights) {
        Functional<K> neg = neg_vec(alpha);
        if (const Subspace<K>* l_neg = d.find_root(neg))
            parts.push_back(anchor_span(h, *l_neg, a_alpha));
        if (const Subspace<K>* a_neg = d.find_weight(neg))
            parts.push_back(mult_span(h.a, *a_neg, a_alpha));
    }
    return sum(parts);
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Tightness.
// ---------------------------------------------------------------------------

struct TightCondition {
    std::string name;
    bool ok = false;
    std::string detail;
};

struct TightReport {
    std::vector<TightCondition> conditions;
    bool tight() const {
        for (const auto& c : conditions)
            if (!c.ok) return false;
        return true;
    }
    std::vector<std::string> failures() const {
        std::vector<std::string> v;
        for (const auto& c : conditions)
            if (!c.ok) v.push_back(c.name);
        return v;
    }
};

/// The six tightness conditions, all exact: vanishing centers, AA = A,
/// AL = L, and the two exhaustion identities for H and A_0. The zero algebra
/// is reported as failing AA = A rather than passing it vacuously.
template <class K>
TightReport is_tight(const HlrData<K>& h, const Decomposition<K>& d) {
    TightReport r;
    auto add = [&](std::string name, bool ok, std::string detail) {
        r.conditions.push_back({std::move(name), ok, std::move(detail)});
    };
    Subspace<K> zl = center_L(h);
    add("Z(L)=0", zl.is_zero(), "dim Z(L) = " + std::to_string(zl.dim()));
    Subspace<K> za = center_A(h);
    add("Z(A)=0", za.is_zero(), "dim Z(A) = " + std::to_string(za.dim()));
    Subspace<K> aa = mult_span(h.a, h.full_A(), h.full_A());
    add("AA=A", h.a.dim > 0 && aa == h.full_A(), "dim AA = " + std::to_string(aa.dim()));
    Subspace<K> al = action_span(h, h.full_A(), h.full_L());
    add("AL=L", h.dim_L > 0 && al == h.full_L(), "dim AL = " + std::to_string(al.dim()));
    Subspace<K> hs = detail::h_exhaustion_sum(h, d);
    add("H exhausted", hs == d.H, "covers " + std::to_string(hs.dim()) + " of " +
                                      std::to_string(d.H.dim()) + " dimensions");
    Subspace<K> as = detail::a0_exhaustion_sum(h, d);
    add("A0 exhausted", as == d.A0, "covers " + std::to_string(as.dim()) + " of " +
                                        std::to_string(d.A0.dim()) + " dimensions");
    return r;
}

// ---------------------------------------------------------------------------
// The annihilation pairing between weight-class and root-class ideals.
// ---------------------------------------------------------------------------

/// Full annihilation matrix together with per-root-class counts. Two
/// uniqueness readings exist (exactly one annihilating class vs exactly one
/// acting class); both are evaluated and reported, neither is enforced.
template <class K>
struct PairingReport {
    std::vector<std::vector<bool>> annihilates;  ///< [weight class][root class]
    struct Counts {
        std::size_t annihilating = 0;
        std::size_t acting = 0;
    };
    std::vector<Counts> per_root_class;
    bool applicable = false;  ///< both class lists nonempty
    bool unique_annihilator = true;
    bool unique_actor = true;
};

template <class K>
PairingReport<K> pairing(const HlrData<K>& h, const std::vector<RootIdeal<K>>& root_ideals,
                         const std::vector<WeightIdeal<K>>& weight_ideals) {
    PairingReport<K> r;
    r.applicable = !root_ideals.empty() && !weight_ideals.empty();
    r.annihilates.assign(weight_ideals.size(), std::vector<bool>(root_ideals.size(), false));
    r.per_root_class.assign(root_ideals.size(), {});
    for (std::size_t w = 0; w < weight_ideals.size(); ++w)
        for (std::size_t i = 0; i < root_ideals.size(); ++i) {
            bool zero = action_span(h, weight_ideals[w].total, root_ideals[i].total).is_zero();
            r.annihilates[w][i] = zero;
            if (zero)
                ++r.per_root_class[i].annihilating;
            else
                ++r.per_root_class[i].acting;
        }
    for (const auto& c : r.per_root_class) {
        if (c.annihilating != 1) r.unique_annihilator = false;
        if (c.acting != 1) r.unique_actor = false;
    }
    return r;
}

// ---------------------------------------------------------------------------
// Root multiplicativity and maximal length.
// ---------------------------------------------------------------------------

template <class K>
struct RootMultReport {
    struct Failure {
        int rule;  ///< 1: roots/roots, 2: weight/root, 3: weights/weights
        Functional<K> f1, f2;
    };
    std::vector<Failure> failures;
    bool ok() const { return failures.empty(); }
};

/// All three implications, over every applicable pair:
///   (gamma + delta) psi^{-1} in Gamma  =>  [L_gamma, L_delta] != 0,
///   alpha + gamma in Gamma             =>  A_alpha L_gamma != 0,
///   alpha + beta in Lambda             =>  A_alpha A_beta != 0.
template <class K>
RootMultReport<K> is_root_multiplicative(const HlrData<K>& h, const Decomposition<K>& d) {
    RootMultReport<K> r;
    for (const auto& [g1, s1] : d.roots)
        for (const auto& [g2, s2] : d.roots)
            if (d.is_root(psi_shift(d, add_vec(g1, g2), -1)) && bracket_span(h, s1, s2).is_zero())
                r.failures.push_back({1, g1, g2});
    for (const auto& [a1, s1] : d.weights)
        for (const auto& [g2, s2] : d.roots)
            if (d.is_root(add_vec(a1, g2)) && action_span(h, s1, s2).is_zero())
                r.failures.push_back({2, a1, g2});
    for (const auto& [a1, s1] : d.weights)
        for (const auto& [a2, s2] : d.weights)
            if (d.is_weight(add_vec(a1, a2)) && mult_span(h.a, s1, s2).is_zero())
                r.failures.push_back({3, a1, a2});
    return r;
}

template <class K>
struct MaxLengthReport {
    bool ok = true;
    Functional<K> offender;
    std::size_t offender_dim = 0;
    bool offender_is_weight = false;
};

template <class K>
MaxLengthReport<K> is_maximal_length(const Decomposition<K>& d) {
    MaxLengthReport<K> r;
    for (const auto& [g, s] : d.roots)
        if (s.dim() != 1) return {false, g, s.dim(), false};
    for (const auto& [a, s] : d.weights)
        if (s.dim() != 1) return {false, a, s.dim(), true};
    return r;
}

// ---------------------------------------------------------------------------
// Decomposing an ideal along the root grading.
// ---------------------------------------------------------------------------

template <class K>
struct IdealSplitReport {
    Subspace<K> i_cap_H;
    std::vector<std::pair<Functional<K>, Subspace<K>>> root_components;  ///< I cap L_gamma
    bool sum_matches = false;         ///< the refined per-root sum rebuilds I
    bool inside_H_applicable = false; ///< Z(L) = 0 and I inside H
    bool inside_H_zero = false;       ///< then I = 0
};

/// I = (I cap H) + sum of I cap L_gamma, refined to per-root components.
/// Throws NotAnIdealError when I is not an ideal.
template <class K>
IdealSplitReport<K> ideal_weight_split(const HlrData<K>& h, const Decomposition<K>& d,
                                       const Subspace<K>& ideal) {
    if (!is_ideal(h, ideal)) throw NotAnIdealError("ideal_weight_split input");
    IdealSplitReport<K> r;
    r.i_cap_H = intersect(ideal, d.H);
    std::vector<Subspace<K>> parts{r.i_cap_H};
    for (const auto& [g, s] : d.roots) {
        Subspace<K> comp = intersect(ideal, s);
        parts.push_back(comp);
        r.root_components.emplace_back(g, std::move(comp));
    }
    r.sum_matches = sum(parts) == ideal;
    if (center_L(h).is_zero() && d.H.contains(ideal)) {
        r.inside_H_applicable = true;
        r.inside_H_zero = ideal.is_zero();
    }
    return r;
}

// ---------------------------------------------------------------------------
// Simplicity.
// ---------------------------------------------------------------------------

/// Seed-closure simplicity certificate: [L,L], AA, AL nonzero, and the
/// ideal closure of every one-dimensional seed drawn from the H-basis and
/// the root-space bases is L or Ker rho. The verdict is marked seed-complete
/// when the decomposition has maximal length, where such seeds exhaust the
/// relevant cases.
template <class K>
struct SimplicityVerdict {
    bool simple = false;
    bool nonzero_bracket = false, nonzero_AA = false, nonzero_AL = false;
    std::size_t ker_rho_dim = 0;
    bool seed_complete = false;
    bool h_exhausted = false;  ///< post-check, evaluated on a simple verdict
    std::optional<Subspace<K>> witness_ideal;
    std::string reason;
};

template <class K>
SimplicityVerdict<K> is_simple(const HlrData<K>& h, const Decomposition<K>& d) {
    SimplicityVerdict<K> v;
    v.nonzero_bracket = !bracket_span(h, h.full_L(), h.full_L()).is_zero();
    v.nonzero_AA = !mult_span(h.a, h.full_A(), h.full_A()).is_zero();
    v.nonzero_AL = !action_span(h, h.full_A(), h.full_L()).is_zero();
    Subspace<K> ker_rho = anchor_kernel(h);
    v.ker_rho_dim = ker_rho.dim();
    v.seed_complete = is_maximal_length(d).ok;
    if (!v.nonzero_bracket || !v.nonzero_AA || !v.nonzero_AL) {
        v.reason = !v.nonzero_bracket ? "[L,L] = 0" : (!v.nonzero_AA ? "AA = 0" : "AL = 0");
        return v;
    }
    std::vector<Vec<K>> seeds = d.H.basis();
    for (const auto& [g, s] : d.roots)
        seeds.insert(seeds.end(), s.basis().begin(), s.basis().end());
    Subspace<K> full = h.full_L();
    for (const auto& seed : seeds) {
        Subspace<K> cl = ideal_closure(h, Subspace<K>::span(h.dim_L, {seed}));
        if (cl != full && cl != ker_rho) {
            v.witness_ideal = cl;
            v.reason = "seed " + vec_str(seed) + " generates a proper ideal of dimension " +
                       std::to_string(cl.dim());
            return v;
        }
    }
    v.simple = true;
    v.reason = "all seed closures hit L or Ker rho";
    v.h_exhausted = detail::h_exhaustion_sum(h, d) == d.H;
    return v;
}

// ---------------------------------------------------------------------------
// Simple components.
// ---------------------------------------------------------------------------

template <class K>
struct SummandCertificate {
    Subspace<K> space;  ///< inside the ambient L
    bool restricted_ok = false;
    bool simple = false;
    bool seed_complete = false;
    std::string note;
};

/// Simplicity of a weight-class ideal viewed as an algebra in its own
/// right: nonzero square and every principal ideal closure exhausts it.
template <class K>
bool algebra_summand_simple(const AlgebraData<K>& a, const Subspace<K>& s) {
    if (mult_span(a, s, s).is_zero()) return false;
    for (const auto& v : s.basis()) {
        Subspace<K> t = Subspace<K>::span(a.dim, {v});
        for (;;) {
            Subspace<K> next = sum(t, mult_span(a, t, s));
            if (next == t) break;
            t = next;
        }
        if (t != s) return false;
    }
    return true;
}

namespace detail {

/// Restrict, split along I cap H, and run the seed simplicity certificate.
template <class K>
SummandCertificate<K> certify_l_summand(const HlrData<K>& h, const Decomposition<K>& d,
                                        const Subspace<K>& ideal) {
    SummandCertificate<K> cert;
    cert.space = ideal;
    if (ideal == h.full_L()) {
        SimplicityVerdict<K> v = is_simple(h, d);
        cert.restricted_ok = true;
        cert.simple = v.simple;
        cert.seed_complete = v.seed_complete;
        cert.note = v.reason;
        return cert;
    }
    try {
        HlrData<K> sub = restrict_to_ideal(h, ideal);
        Subspace<K> cap_H = intersect(ideal, d.H);
        std::vector<Vec<K>> h_rows;
        for (const auto& v : cap_H.basis()) h_rows.push_back(ideal.coordinates(v));
        Subspace<K> sub_H = Subspace<K>::span(ideal.dim(), h_rows);
        if (!verify_masa(sub, sub_H)) {
            cert.note = "I cap H is not a MASA of the summand";
            return cert;
        }
        Decomposition<K> sub_d = split(sub, sub_H);
        cert.restricted_ok = true;
        SimplicityVerdict<K> v = is_simple(sub, sub_d);
        cert.simple = v.simple;
        cert.seed_complete = v.seed_complete;
        cert.note = v.reason;
    } catch (const Error& e) {
        cert.note = e.what();
    }
    return cert;
}

}  // namespace detail

template <class K>
struct SimpleComponentsReport {
    std::vector<std::string> failed_hypotheses;
    std::string outcome;  ///< hypothesis-failure | simple | two-summands | per-class
    std::vector<SummandCertificate<K>> l_summands;
    bool l_decomposition_exact = false;  ///< direct sum of the summands is L
    bool cross_brackets_zero = false;
    std::vector<SummandCertificate<K>> a_summands;
    bool a_decomposition_exact = false;
    bool cross_products_zero = false;

    bool hypotheses_ok() const { return failed_hypotheses.empty(); }
    bool certified() const {
        if (!hypotheses_ok()) return false;
        if (!l_decomposition_exact || !cross_brackets_zero) return false;
        for (const auto& s : l_summands)
            if (!s.restricted_ok || !s.simple) return false;
        if (!a_decomposition_exact || !cross_products_zero) return false;
        for (const auto& s : a_summands)
            if (!s.simple) return false;
        return true;
    }
};

/// Realizes the dichotomy on the instance: under tightness, maximal length,
/// root multiplicativity, and symmetric systems, L with all roots connected
/// is certified simple or split as I + I' with
///   I' = sum over gamma in Gamma_I of A_gamma L_{-gamma} (gamma in Lambda)
///        plus the L_{-gamma};
/// with several classes, each class ideal is certified separately. Unmet
/// hypotheses degrade the operation to reporting them.
template <class K>
SimpleComponentsReport<K> simple_components(const HlrData<K>& h, const Decomposition<K>& d,
                                            const std::vector<RootIdeal<K>>& root_ideals,
                                            const std::vector<WeightIdeal<K>>& weight_ideals) {
    SimpleComponentsReport<K> report;
    if (!is_tight(h, d).tight()) report.failed_hypotheses.push_back("tight");
    if (!is_maximal_length(d).ok) report.failed_hypotheses.push_back("maximal-length");
    if (!is_root_multiplicative(h, d).ok())
        report.failed_hypotheses.push_back("root-multiplicative");
    if (!check_symmetry(d)) report.failed_hypotheses.push_back("symmetric-systems");
    if (!report.hypotheses_ok()) {
        report.outcome = "hypothesis-failure";
        return report;
    }

    if (root_ideals.size() <= 1) {
        SimplicityVerdict<K> v = is_simple(h, d);
        if (v.simple) {
            report.outcome = "simple";
            SummandCertificate<K> cert;
            cert.space = h.full_L();
            cert.restricted_ok = true;
            cert.simple = true;
            cert.seed_complete = v.seed_complete;
            cert.note = v.reason;
            report.l_summands.push_back(std::move(cert));
            report.l_decomposition_exact = true;
            report.cross_brackets_zero = true;
        } else if (v.witness_ideal) {
            report.outcome = "two-summands";
            const Subspace<K>& ideal_I = *v.witness_ideal;
            FunctionalSet<K> lambda_set;
            for (const auto& f : d.lambda()) lambda_set.insert(f);
            std::vector<Subspace<K>> parts{Subspace<K>::zero(h.dim_L)};
            for (const auto& [g, l_g] : d.roots) {
                if (intersect(ideal_I, l_g).is_zero()) continue;  // g not in Gamma_I
                const Subspace<K>* l_neg = d.find_root(neg_vec(g));
                if (l_neg == nullptr) continue;
                parts.push_back(*l_neg);
                if (lambda_set.count(g))
                    parts.push_back(action_span(h, *d.find_weight(g), *l_neg));
            }
            Subspace<K> ideal_Ip = sum(parts);
            report.l_summands.push_back(detail::certify_l_summand(h, d, ideal_I));
            report.l_summands.push_back(detail::certify_l_summand(h, d, ideal_Ip));
            report.l_decomposition_exact = intersect(ideal_I, ideal_Ip).is_zero() &&
                                           sum(ideal_I, ideal_Ip) == h.full_L();
            report.cross_brackets_zero = bracket_span(h, ideal_I, ideal_Ip).is_zero();
        } else {
            report.outcome = "two-summands";
            report.l_decomposition_exact = false;
        }
    } else {
        report.outcome = "per-class";
        std::vector<Subspace<K>> totals{Subspace<K>::zero(h.dim_L)};
        for (const auto& ri : root_ideals) {
            report.l_summands.push_back(detail::certify_l_summand(h, d, ri.total));
            totals.push_back(ri.total);
        }
        std::size_t dim_sum = 0;
        for (const auto& ri : root_ideals) dim_sum += ri.total.dim();
        Subspace<K> all = sum(totals);
        report.l_decomposition_exact = all == h.full_L() && dim_sum == all.dim();
        report.cross_brackets_zero = orthogonality(h, root_ideals).ok();
    }

    std::vector<Subspace<K>> a_totals{Subspace<K>::zero(h.a.dim)};
    std::size_t a_dim_sum = 0;
    for (const auto& wi : weight_ideals) {
        SummandCertificate<K> cert;
        cert.space = wi.total;
        cert.restricted_ok = true;
        cert.simple = algebra_summand_simple(h.a, wi.total);
        cert.note = cert.simple ? "principal closures exhaust the summand"
                                : "a principal closure stays proper";
        report.a_summands.push_back(std::move(cert));
        a_totals.push_back(wi.total);
        a_dim_sum += wi.total.dim();
    }
    Subspace<K> a_all = sum(a_totals);
    report.a_decomposition_exact = a_all == h.full_A() && a_dim_sum == a_all.dim();
    report.cross_products_zero = weight_orthogonality(h, weight_ideals).ok();
    return report;
}

/// Everything the structure pipeline reports about one algebra.
template <class K>
struct StructureReport {
    TightReport tight;
    bool symmetric = false;
    RootMultReport<K> root_mult;
    MaxLengthReport<K> max_length;
    SimplicityVerdict<K> simplicity;
    SimpleComponentsReport<K> components;
    PairingReport<K> pairing_table;

    /// The verdicts that count as negative for the exit-status contract;
    /// the pairing table is informational and never fails an instance.
    bool all_positive() const {
        return tight.tight() && symmetric && root_mult.ok() && max_length.ok &&
               components.certified();
    }
};

template <class K>
StructureReport<K> analyze_structure(const HlrData<K>& h, const Decomposition<K>& d,
                                     const std::vector<RootIdeal<K>>& root_ideals,
                                     const std::vector<WeightIdeal<K>>& weight_ideals) {
    StructureReport<K> r;
    r.tight = is_tight(h, d);
    r.symmetric = check_symmetry(d);
    r.root_mult = is_root_multiplicative(h, d);
    r.max_length = is_maximal_length(d);
    r.simplicity = is_simple(h, d);
    r.components = simple_components(h, d, root_ideals, weight_ideals);
    r.pairing_table = pairing(h, root_ideals, weight_ideals);
    return r;
}

}  // namespace homrine
