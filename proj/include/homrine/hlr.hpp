#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "homrine/algebra.hpp"
#include "homrine/eigen.hpp"
#include "homrine/matrix.hpp"
#include "homrine/subspace.hpp"
#include "homrine/tensor.hpp"

namespace homrine {

/// A finite-dimensional Hom-Lie Rinehart algebra (A, L, [.,.], phi, psi, rho)
/// by structure constants: the bracket and the A-action on L as 3-index
/// tensors, the twists as matrices, and the anchor as one operator on A per
/// L-basis vector.
template <class K>
struct HlrData {
    AlgebraData<K> a;
    std::size_t dim_L = 0;
    std::vector<std::string> labels;
    Tensor3<K> bracket;             ///< [x_i, x_j] = sum_k bracket[i][j][k] x_k
    Matrix<K> psi;                  ///< twist on L
    Tensor3<K> action;              ///< a_i . x_j = sum_k action[i][j][k] x_k
    std::vector<Matrix<K>> anchor;  ///< rho(x_i) as an operator on A

    Vec<K> bracket_of(const Vec<K>& u, const Vec<K>& v) const { return bracket.contract(u, v); }
    Vec<K> act(const Vec<K>& av, const Vec<K>& x) const { return action.contract(av, x); }

    /// ad(u): x -> [u, x].
    Matrix<K> ad(const Vec<K>& u) const { return bracket.left_operator(u); }
    /// x -> a . x for a fixed algebra element.
    Matrix<K> action_operator(const Vec<K>& av) const { return action.left_operator(av); }
    /// rho(u) for an arbitrary element u of L.
    Matrix<K> anchor_of(const Vec<K>& u) const {
        Matrix<K> m(a.dim, a.dim);
        for (std::size_t i = 0; i < dim_L; ++i)
            if (!(u[i] == K(0))) m = m + u[i] * anchor[i];
        return m;
    }

    Subspace<K> full_L() const { return Subspace<K>::full(dim_L); }
    Subspace<K> full_A() const { return Subspace<K>::full(a.dim); }
};

// ---------------------------------------------------------------------------
// Span arithmetic driven by the structure tensors.
// ---------------------------------------------------------------------------

/// span{ [u, v] : u in s, v in t }
template <class K>
Subspace<K> bracket_span(const HlrData<K>& h, const Subspace<K>& s, const Subspace<K>& t) {
    std::vector<Vec<K>> gens;
    for (const auto& u : s.basis())
        for (const auto& v : t.basis()) gens.push_back(h.bracket_of(u, v));
    return Subspace<K>::span(h.dim_L, gens);
}

/// span{ a . x : a in s (subspace of A), x in t (subspace of L) }
template <class K>
Subspace<K> action_span(const HlrData<K>& h, const Subspace<K>& s, const Subspace<K>& t) {
    std::vector<Vec<K>> gens;
    for (const auto& av : s.basis())
        for (const auto& x : t.basis()) gens.push_back(h.act(av, x));
    return Subspace<K>::span(h.dim_L, gens);
}

/// span{ a b : a in s, b in t } inside A.
template <class K>
Subspace<K> mult_span(const AlgebraData<K>& a, const Subspace<K>& s, const Subspace<K>& t) {
    std::vector<Vec<K>> gens;
    for (const auto& u : s.basis())
        for (const auto& v : t.basis()) gens.push_back(a.product(u, v));
    return Subspace<K>::span(a.dim, gens);
}

/// span{ rho(u)(a) : u in s (subspace of L), a in t (subspace of A) }
template <class K>
Subspace<K> anchor_span(const HlrData<K>& h, const Subspace<K>& s, const Subspace<K>& t) {
    std::vector<Vec<K>> gens;
    for (const auto& u : s.basis()) {
        Matrix<K> rho = h.anchor_of(u);
        for (const auto& av : t.basis()) gens.push_back(rho.apply(av));
    }
    return Subspace<K>::span(h.a.dim, gens);
}

/// span{ rho(u)(a) . x : u in s, a in A, x in L }
template <class K>
Subspace<K> anchor_action_span(const HlrData<K>& h, const Subspace<K>& s) {
    return action_span(h, anchor_span(h, s, h.full_A()), h.full_L());
}

// ---------------------------------------------------------------------------
// Axiom verification (conditions of the defining tuple plus (1)-(5)),
// exact and complete on basis tuples.
// ---------------------------------------------------------------------------

namespace detail {

inline void record_mismatch_str(AxiomCheck& check, std::vector<std::size_t> idx, std::string lhs,
                                std::string rhs) {
    if (!check.passed) return;
    check.passed = false;
    check.indices = std::move(idx);
    check.lhs = std::move(lhs);
    check.rhs = std::move(rhs);
}

}  // namespace detail

/// Full verifier for the Hom-Lie Rinehart axioms. Assumes verify_algebra(h.a)
/// has passed (phi is an automorphism). Failures are report entries with the
/// lexicographically first counterexample, never exceptions.
///
/// The representation condition is checked as the two identities the grading
/// theory actually consumes: rho([x,y]) o phi = rho(psi(x)) o rho(y) -
/// rho(psi(y)) o rho(x), and rho(psi(x)) = phi o rho(x) o phi^{-1}, together
/// with rho taking values in phi-derivations.
template <class K>
AxiomReport verify_axioms(const HlrData<K>& h) {
    AxiomReport report;
    const std::size_t n = h.dim_L, m = h.a.dim;

    AxiomCheck skew{Axiom::SkewSymmetry};
    for (std::size_t i = 0; i < n && skew.passed; ++i)
        for (std::size_t j = 0; j < n && skew.passed; ++j) {
            Vec<K> lhs = h.bracket.slice(i, j), rhs = neg_vec(h.bracket.slice(j, i));
            if (lhs != rhs) detail::record_mismatch(skew, {i, j}, lhs, rhs);
        }
    report.checks.push_back(skew);

    AxiomCheck psi_hom{Axiom::PsiHomomorphism};
    for (std::size_t i = 0; i < n && psi_hom.passed; ++i)
        for (std::size_t j = 0; j < n && psi_hom.passed; ++j) {
            Vec<K> lhs = h.psi.apply(h.bracket.slice(i, j));
            Vec<K> rhs = h.bracket_of(h.psi.col(i), h.psi.col(j));
            if (lhs != rhs) detail::record_mismatch(psi_hom, {i, j}, lhs, rhs);
        }
    report.checks.push_back(psi_hom);

    AxiomCheck psi_inv{Axiom::PsiInvertible};
    if (rank(h.psi) != n) {
        psi_inv.passed = false;
        psi_inv.detail = "psi has rank " + std::to_string(rank(h.psi));
    }
    report.checks.push_back(psi_inv);

    AxiomCheck module{Axiom::ModuleAssociativity};
    for (std::size_t i = 0; i < m && module.passed; ++i)
        for (std::size_t j = 0; j < m && module.passed; ++j)
            for (std::size_t k = 0; k < n && module.passed; ++k) {
                Vec<K> lhs = h.act(h.a.mult.slice(i, j), unit_vec<K>(n, k));
                Vec<K> rhs = h.act(unit_vec<K>(m, i), h.action.slice(j, k));
                if (lhs != rhs) detail::record_mismatch(module, {i, j, k}, lhs, rhs);
            }
    report.checks.push_back(module);

    AxiomCheck jacobi{Axiom::HomJacobi};
    for (std::size_t i = 0; i < n && jacobi.passed; ++i)
        for (std::size_t j = 0; j < n && jacobi.passed; ++j)
            for (std::size_t k = 0; k < n && jacobi.passed; ++k) {
                Vec<K> s = h.bracket_of(h.psi.col(i), h.bracket.slice(j, k));
                s = add_vec(s, h.bracket_of(h.psi.col(j), h.bracket.slice(k, i)));
                s = add_vec(s, h.bracket_of(h.psi.col(k), h.bracket.slice(i, j)));
                if (!is_zero_vec(s)) detail::record_mismatch(jacobi, {i, j, k}, s, zero_vec<K>(n));
            }
    report.checks.push_back(jacobi);

    AxiomCheck twist_act{Axiom::TwistActionCompat};
    for (std::size_t i = 0; i < m && twist_act.passed; ++i)
        for (std::size_t j = 0; j < n && twist_act.passed; ++j) {
            Vec<K> lhs = h.psi.apply(h.action.slice(i, j));
            Vec<K> rhs = h.act(h.a.phi.col(i), h.psi.col(j));
            if (lhs != rhs) detail::record_mismatch(twist_act, {i, j}, lhs, rhs);
        }
    report.checks.push_back(twist_act);

    AxiomCheck rep{Axiom::Representation};
    {
        for (std::size_t i = 0; i < n && rep.passed; ++i)
            if (!is_phi_derivation(h.a, h.anchor[i])) {
                detail::record_mismatch_str(rep, {i}, mat_str(h.anchor[i]), "a phi-derivation");
                rep.detail = "rho(x_" + std::to_string(i) + ") is not a phi-derivation";
            }
        Matrix<K> phi_inv;
        if (rep.passed) phi_inv = h.a.phi.inverse();
        for (std::size_t i = 0; i < n && rep.passed; ++i) {
            Matrix<K> lhs = h.anchor_of(h.psi.col(i));
            Matrix<K> rhs = h.a.phi * h.anchor[i] * phi_inv;
            if (lhs != rhs) {
                detail::record_mismatch_str(rep, {i}, mat_str(lhs), mat_str(rhs));
                rep.detail = "rho(psi(x)) != phi rho(x) phi^{-1}";
            }
        }
        for (std::size_t i = 0; i < n && rep.passed; ++i)
            for (std::size_t j = 0; j < n && rep.passed; ++j) {
                Matrix<K> lhs = h.anchor_of(h.bracket.slice(i, j)) * h.a.phi;
                Matrix<K> rhs = h.anchor_of(h.psi.col(i)) * h.anchor[j] -
                                h.anchor_of(h.psi.col(j)) * h.anchor[i];
                if (lhs != rhs) {
                    detail::record_mismatch_str(rep, {i, j}, mat_str(lhs), mat_str(rhs));
                    rep.detail = "rho([x,y]) phi != rho(psi(x)) rho(y) - rho(psi(y)) rho(x)";
                }
            }
    }
    report.checks.push_back(rep);

    AxiomCheck anchor_act{Axiom::AnchorActionCompat};
    for (std::size_t i = 0; i < m && anchor_act.passed; ++i)
        for (std::size_t j = 0; j < n && anchor_act.passed; ++j) {
            Matrix<K> lhs = h.anchor_of(h.action.slice(i, j));
            Matrix<K> rhs = h.a.mult_operator(h.a.phi.col(i)) * h.anchor[j];
            if (lhs != rhs)
                detail::record_mismatch_str(anchor_act, {i, j}, mat_str(lhs), mat_str(rhs));
        }
    report.checks.push_back(anchor_act);

    AxiomCheck leibniz{Axiom::HomLeibniz};
    for (std::size_t i = 0; i < n && leibniz.passed; ++i)
        for (std::size_t j = 0; j < m && leibniz.passed; ++j)
            for (std::size_t k = 0; k < n && leibniz.passed; ++k) {
                Vec<K> lhs = h.bracket_of(unit_vec<K>(n, i), h.action.slice(j, k));
                Vec<K> rhs = h.act(h.a.phi.col(j), h.bracket.slice(i, k));
                rhs = add_vec(rhs, h.act(h.anchor[i].col(j), h.psi.col(k)));
                if (lhs != rhs) detail::record_mismatch(leibniz, {i, j, k}, lhs, rhs);
            }
    report.checks.push_back(leibniz);

    return report;
}

// ---------------------------------------------------------------------------
// Constructions.
// ---------------------------------------------------------------------------

/// A Hom-Lie algebra as a Hom-Lie Rinehart algebra over the ground field:
/// A = k, phi = id, the action is scalar multiplication, and the anchor is
/// zero. Throws InvalidHomLieError if the input is not a Hom-Lie algebra.
template <class K>
HlrData<K> from_hom_lie(std::size_t dim, const Tensor3<K>& bracket, const Matrix<K>& psi,
                        std::vector<std::string> labels = {}) {
    HlrData<K> h;
    h.a = AlgebraData<K>::ground_field();
    h.dim_L = dim;
    h.labels = labels.empty() ? std::vector<std::string>(dim, "x") : std::move(labels);
    h.bracket = bracket;
    h.psi = psi;
    h.action = Tensor3<K>(1, dim, dim);
    for (std::size_t j = 0; j < dim; ++j) h.action.at(0, j, j) = K(1);
    h.anchor.assign(dim, Matrix<K>(1, 1));
    AxiomReport r = verify_axioms(h);
    if (!r.passed())
        throw InvalidHomLieError(std::string(axiom_name(r.first_failure()->axiom)) + " fails");
    return h;
}

/// The Hom-Lie Rinehart algebra of phi-derivations of A: the bracket is the
/// phi-twisted commutator, the twist conjugates by phi, the module action is
/// multiplication in front, and the anchor coincides with the twist.
template <class K>
HlrData<K> derivation_hlra(const AlgebraData<K>& a) {
    std::vector<Matrix<K>> ders = phi_derivations(a);
    std::size_t n = a.dim, d = ders.size();
    std::vector<Vec<K>> flat;
    for (const auto& der : ders) {
        Vec<K> v(n * n);
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t c = 0; c < n; ++c) v[r * n + c] = der.at(r, c);
        flat.push_back(std::move(v));
    }
    Subspace<K> der_space = Subspace<K>::span(n * n, flat);
    auto coords_of = [&](const Matrix<K>& mm) {
        Vec<K> v(n * n);
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t c = 0; c < n; ++c) v[r * n + c] = mm.at(r, c);
        return der_space.coordinates(v);  // throws if not a phi-derivation combination
    };
    // the kernel solver returns a canonical basis, so coordinates are relative
    // to ders in the same order
    Matrix<K> phi_inv = a.phi.inverse();

    HlrData<K> h;
    h.a = a;
    h.dim_L = d;
    for (std::size_t i = 0; i < d; ++i) h.labels.push_back("D" + std::to_string(i + 1));
    h.bracket = Tensor3<K>(d, d, d);
    h.psi = Matrix<K>(d, d);
    h.action = Tensor3<K>(n, d, d);
    h.anchor.reserve(d);
    for (std::size_t i = 0; i < d; ++i) {
        Matrix<K> twisted = a.phi * ders[i] * phi_inv;
        Vec<K> tc = coords_of(twisted);
        for (std::size_t k = 0; k < d; ++k) h.psi.at(k, i) = tc[k];
        h.anchor.push_back(twisted);
        for (std::size_t j = 0; j < d; ++j) {
            Matrix<K> di = a.phi * ders[i] * phi_inv * ders[j] * phi_inv;
            Matrix<K> dj = a.phi * ders[j] * phi_inv * ders[i] * phi_inv;
            Vec<K> bc = coords_of(di - dj);
            for (std::size_t k = 0; k < d; ++k) h.bracket.at(i, j, k) = bc[k];
        }
        for (std::size_t p = 0; p < n; ++p) {
            Vec<K> ac = coords_of(a.mult_operator(unit_vec<K>(n, p)) * ders[i]);
            for (std::size_t k = 0; k < d; ++k) h.action.at(p, i, k) = ac[k];
        }
    }
    return h;
}

// ---------------------------------------------------------------------------
// Centers, subalgebras, ideals.
// ---------------------------------------------------------------------------

/// Z(L) = {v : [v, L] = 0 and rho(v) = 0}, as the kernel of one stacked map.
template <class K>
Subspace<K> center_L(const HlrData<K>& h) {
    std::size_t n = h.dim_L, m = h.a.dim;
    Matrix<K> sys(n * n + m * m, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) sys.at(j * n + k, i) = h.bracket.at(i, j, k);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t p = 0; p < m; ++p)
            for (std::size_t q = 0; q < m; ++q)
                sys.at(n * n + p * m + q, i) = h.anchor[i].at(p, q);
    return kernel(sys);
}

/// Z(A) = {a : a A = 0}.
template <class K>
Subspace<K> center_A(const HlrData<K>& h) {
    std::size_t m = h.a.dim;
    Matrix<K> sys(m * m, m);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j)
            for (std::size_t k = 0; k < m; ++k) sys.at(j * m + k, i) = h.a.mult.at(i, j, k);
    return kernel(sys);
}

/// Kernel of the anchor, Ker rho = {v : rho(v) = 0}.
template <class K>
Subspace<K> anchor_kernel(const HlrData<K>& h) {
    std::size_t n = h.dim_L, m = h.a.dim;
    Matrix<K> sys(m * m, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t p = 0; p < m; ++p)
            for (std::size_t q = 0; q < m; ++q) sys.at(p * m + q, i) = h.anchor[i].at(p, q);
    return kernel(sys);
}

template <class K>
bool is_subalgebra(const HlrData<K>& h, const Subspace<K>& s) {
    return s.contains(bracket_span(h, s, s)) && s.contains(s.image_under(h.psi)) &&
           s.contains(action_span(h, h.full_A(), s));
}

/// Ideal test: [I, L] in I, psi(I) in I, A.I in I, rho(I)(A).L in I.
template <class K>
bool is_ideal(const HlrData<K>& h, const Subspace<K>& i) {
    return i.contains(bracket_span(h, i, h.full_L())) && i.contains(i.image_under(h.psi)) &&
           i.contains(action_span(h, h.full_A(), i)) && i.contains(anchor_action_span(h, i));
}

/// Least ideal containing seed: the fixpoint of
/// S -> S + [S, L] + psi(S) + psi^{-1}(S) + A.S + rho(S)(A).L.
/// Closing under psi^{-1} as well makes psi(result) = result exact in finite
/// dimension.
template <class K>
Subspace<K> ideal_closure(const HlrData<K>& h, const Subspace<K>& seed) {
    Matrix<K> psi_inv = h.psi.inverse();
    Subspace<K> s = seed;
    for (;;) {
        Subspace<K> next = sum(std::vector<Subspace<K>>{
            s, bracket_span(h, s, h.full_L()), s.image_under(h.psi), s.image_under(psi_inv),
            action_span(h, h.full_A(), s), anchor_action_span(h, s)});
        if (next == s) return s;
        s = next;
    }
}

// ---------------------------------------------------------------------------
// Direct sums and restrictions.
// ---------------------------------------------------------------------------

/// Block direct sum of two Hom-Lie Rinehart algebras over the direct sum of
/// their coefficient algebras. Basis labels are suffixed with the block
/// index.
template <class K>
HlrData<K> direct_sum(const HlrData<K>& h1, const HlrData<K>& h2) {
    HlrData<K> h;
    std::size_t m1 = h1.a.dim, m2 = h2.a.dim, n1 = h1.dim_L, n2 = h2.dim_L;
    h.a.dim = m1 + m2;
    for (const auto& l : h1.a.labels) h.a.labels.push_back(l + ".1");
    for (const auto& l : h2.a.labels) h.a.labels.push_back(l + ".2");
    h.a.mult = Tensor3<K>(m1 + m2, m1 + m2, m1 + m2);
    for (std::size_t i = 0; i < m1; ++i)
        for (std::size_t j = 0; j < m1; ++j)
            for (std::size_t k = 0; k < m1; ++k) h.a.mult.at(i, j, k) = h1.a.mult.at(i, j, k);
    for (std::size_t i = 0; i < m2; ++i)
        for (std::size_t j = 0; j < m2; ++j)
            for (std::size_t k = 0; k < m2; ++k)
                h.a.mult.at(m1 + i, m1 + j, m1 + k) = h2.a.mult.at(i, j, k);
    h.a.phi = Matrix<K>(m1 + m2, m1 + m2);
    for (std::size_t i = 0; i < m1; ++i)
        for (std::size_t j = 0; j < m1; ++j) h.a.phi.at(i, j) = h1.a.phi.at(i, j);
    for (std::size_t i = 0; i < m2; ++i)
        for (std::size_t j = 0; j < m2; ++j) h.a.phi.at(m1 + i, m1 + j) = h2.a.phi.at(i, j);

    h.dim_L = n1 + n2;
    for (const auto& l : h1.labels) h.labels.push_back(l + ".1");
    for (const auto& l : h2.labels) h.labels.push_back(l + ".2");
    h.bracket = Tensor3<K>(h.dim_L, h.dim_L, h.dim_L);
    for (std::size_t i = 0; i < n1; ++i)
        for (std::size_t j = 0; j < n1; ++j)
            for (std::size_t k = 0; k < n1; ++k) h.bracket.at(i, j, k) = h1.bracket.at(i, j, k);
    for (std::size_t i = 0; i < n2; ++i)
        for (std::size_t j = 0; j < n2; ++j)
            for (std::size_t k = 0; k < n2; ++k)
                h.bracket.at(n1 + i, n1 + j, n1 + k) = h2.bracket.at(i, j, k);
    h.psi = Matrix<K>(h.dim_L, h.dim_L);
    for (std::size_t i = 0; i < n1; ++i)
        for (std::size_t j = 0; j < n1; ++j) h.psi.at(i, j) = h1.psi.at(i, j);
    for (std::size_t i = 0; i < n2; ++i)
        for (std::size_t j = 0; j < n2; ++j) h.psi.at(n1 + i, n1 + j) = h2.psi.at(i, j);
    h.action = Tensor3<K>(m1 + m2, h.dim_L, h.dim_L);
    for (std::size_t i = 0; i < m1; ++i)
        for (std::size_t j = 0; j < n1; ++j)
            for (std::size_t k = 0; k < n1; ++k) h.action.at(i, j, k) = h1.action.at(i, j, k);
    for (std::size_t i = 0; i < m2; ++i)
        for (std::size_t j = 0; j < n2; ++j)
            for (std::size_t k = 0; k < n2; ++k)
                h.action.at(m1 + i, n1 + j, n1 + k) = h2.action.at(i, j, k);
    for (std::size_t i = 0; i < n1; ++i) {
        Matrix<K> rho(m1 + m2, m1 + m2);
        for (std::size_t p = 0; p < m1; ++p)
            for (std::size_t q = 0; q < m1; ++q) rho.at(p, q) = h1.anchor[i].at(p, q);
        h.anchor.push_back(std::move(rho));
    }
    for (std::size_t i = 0; i < n2; ++i) {
        Matrix<K> rho(m1 + m2, m1 + m2);
        for (std::size_t p = 0; p < m2; ++p)
            for (std::size_t q = 0; q < m2; ++q) rho.at(m1 + p, m1 + q) = h2.anchor[i].at(p, q);
        h.anchor.push_back(std::move(rho));
    }
    return h;
}

/// Embeds a coordinate vector of one summand into the direct sum.
template <class K>
Vec<K> embed_block(const Vec<K>& v, std::size_t offset, std::size_t total) {
    Vec<K> r(total, K(0));
    for (std::size_t i = 0; i < v.size(); ++i) r[offset + i] = v[i];
    return r;
}

/// The Hom-Lie Rinehart structure induced on an ideal: same coefficient
/// algebra, structure constants re-expressed in the ideal's canonical basis.
/// Requires bracket [I, I], psi(I), and A.I to land in I.
template <class K>
HlrData<K> restrict_to_ideal(const HlrData<K>& h, const Subspace<K>& ideal) {
    std::size_t d = ideal.dim();
    HlrData<K> r;
    r.a = h.a;
    r.dim_L = d;
    for (std::size_t i = 0; i < d; ++i) r.labels.push_back("v" + std::to_string(i + 1));
    r.bracket = Tensor3<K>(d, d, d);
    r.psi = Matrix<K>(d, d);
    r.action = Tensor3<K>(h.a.dim, d, d);
    for (std::size_t i = 0; i < d; ++i) {
        const Vec<K>& bi = ideal.basis()[i];
        Vec<K> pc = ideal.coordinates(h.psi.apply(bi));
        for (std::size_t k = 0; k < d; ++k) r.psi.at(k, i) = pc[k];
        r.anchor.push_back(h.anchor_of(bi));
        for (std::size_t j = 0; j < d; ++j) {
            Vec<K> bc = ideal.coordinates(h.bracket_of(bi, ideal.basis()[j]));
            for (std::size_t k = 0; k < d; ++k) r.bracket.at(i, j, k) = bc[k];
        }
        for (std::size_t p = 0; p < h.a.dim; ++p) {
            Vec<K> ac = ideal.coordinates(h.act(unit_vec<K>(h.a.dim, p), bi));
            for (std::size_t k = 0; k < d; ++k) r.action.at(p, i, k) = ac[k];
        }
    }
    return r;
}

}  // namespace homrine
