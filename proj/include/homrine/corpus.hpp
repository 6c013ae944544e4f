#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "homrine/hlr.hpp"
#include "homrine/split.hpp"

namespace homrine::corpus {

/// One registry entry: the algebra, its designated Cartan candidate, and the
/// frozen expectations the test suites assert against.
template <class K>
struct CorpusEntry {
    std::string id;
    std::string description;
    HlrData<K> data;
    Subspace<K> H;
    bool axioms_pass = true;
    Axiom targeted = Axiom::HomJacobi;  ///< for mutants: the first failing axiom
    bool splits = true;
    std::vector<std::pair<Functional<K>, std::size_t>> expected_roots;    ///< (values, dim)
    std::vector<std::pair<Functional<K>, std::size_t>> expected_weights;
    std::size_t expected_root_classes = 0;
    std::size_t expected_weight_classes = 0;
};

namespace detail {

template <class K>
void set_bracket(Tensor3<K>& t, std::size_t i, std::size_t j, std::size_t k, const K& c) {
    t.at(i, j, k) = c;
    t.at(j, i, k) = -c;
}

/// sl2 with twist psi(h)=h, psi(e)=s_e e, psi(f)=s_f f and bracket
/// [x,y] = psi([x,y]_{sl2}); s_e = s_f = 1 gives plain sl2.
template <class K>
HlrData<K> twisted_sl2(const K& s_e, const K& s_f) {
    Tensor3<K> b(3, 3, 3);
    set_bracket(b, 0, 1, 1, K(2) * s_e);   // [h,e] = psi(2e)
    set_bracket(b, 0, 2, 2, K(-2) * s_f);  // [h,f] = psi(-2f)
    set_bracket(b, 1, 2, 0, K(1));         // [e,f] = psi(h) = h
    Matrix<K> psi(3, 3);
    psi.at(0, 0) = K(1);
    psi.at(1, 1) = s_e;
    psi.at(2, 2) = s_f;
    return from_hom_lie(3, b, psi, {"h", "e", "f"});
}

/// A = k[t]/(t^2), basis {1, t}.
template <class K>
AlgebraData<K> dual_numbers() {
    AlgebraData<K> a;
    a.dim = 2;
    a.labels = {"1", "t"};
    a.mult = Tensor3<K>(2, 2, 2);
    a.mult.at(0, 0, 0) = K(1);
    a.mult.at(0, 1, 1) = K(1);
    a.mult.at(1, 0, 1) = K(1);
    a.phi = Matrix<K>::identity(2);
    return a;
}

/// The free A-module on {h, e} over the dual numbers with [h,e] = e,
/// rho(h) = t d/dt, rho(e) = 0, psi = id; brackets on {h, th, e, te}
/// induced by the Leibniz rule.
template <class K>
HlrData<K> dual_number_module() {
    HlrData<K> h;
    h.a = dual_numbers<K>();
    h.dim_L = 4;
    h.labels = {"h", "th", "e", "te"};
    h.bracket = Tensor3<K>(4, 4, 4);
    set_bracket(h.bracket, 0, 1, 1, K(1));  // [h,th] = th
    set_bracket(h.bracket, 0, 2, 2, K(1));  // [h,e] = e
    set_bracket(h.bracket, 0, 3, 3, K(2));  // [h,te] = 2te
    set_bracket(h.bracket, 1, 2, 3, K(1));  // [th,e] = te, so [e,th] = -te
    h.psi = Matrix<K>::identity(4);
    h.action = Tensor3<K>(2, 4, 4);
    for (std::size_t j = 0; j < 4; ++j) h.action.at(0, j, j) = K(1);  // 1 . x = x
    h.action.at(1, 0, 1) = K(1);  // t . h = th
    h.action.at(1, 2, 3) = K(1);  // t . e = te
    Matrix<K> t_ddt(2, 2);
    t_ddt.at(1, 1) = K(1);  // 1 -> 0, t -> t
    h.anchor = {t_ddt, Matrix<K>(2, 2), Matrix<K>(2, 2), Matrix<K>(2, 2)};
    return h;
}

template <class K>
Subspace<K> span_of_basis_indices(std::size_t ambient, std::initializer_list<std::size_t> idx) {
    std::vector<Vec<K>> rows;
    for (std::size_t i : idx) rows.push_back(unit_vec<K>(ambient, i));
    return Subspace<K>::span(ambient, rows);
}

}  // namespace detail

inline std::vector<std::string> rational_ids() {
    return {"E1", "E2", "E3", "E4", "E5", "E6", "E8",
            "M1", "M2", "M3", "M4", "M5", "M6"};
}

inline std::vector<std::string> prime_ids() { return {"E7"}; }

inline std::vector<std::string> all_ids() {
    auto v = rational_ids();
    v.insert(v.end() - 7, "E7");  // slot E7 between E6 and E8
    return v;
}

/// Registry over the rationals. Throws UnknownIdError for ids outside it
/// (in particular E7, which lives over F_2).
template <class K>
CorpusEntry<K> build_rational(const std::string& id) {
    using detail::span_of_basis_indices;
    CorpusEntry<K> e;
    e.id = id;

    if (id == "E1") {
        e.description = "sl2 with trivial twist over the ground field";
        e.data = detail::twisted_sl2<K>(K(1), K(1));
        e.H = span_of_basis_indices<K>(3, {0});
        e.expected_roots = {{{K(-2)}, 1}, {{K(2)}, 1}};
        e.expected_root_classes = 1;
    } else if (id == "E2") {
        e.description = "one-dimensional abelian algebra, L = H";
        Tensor3<K> b(1, 1, 1);
        e.data = from_hom_lie(1, b, Matrix<K>::identity(1), {"h"});
        e.H = span_of_basis_indices<K>(1, {0});
    } else if (id == "E3") {
        e.description = "free module on {h, e} over the dual numbers";
        e.data = detail::dual_number_module<K>();
        e.H = span_of_basis_indices<K>(4, {0});
        e.expected_roots = {{{K(1)}, 2}, {{K(2)}, 1}};
        e.expected_weights = {{{K(1)}, 1}};
        e.expected_root_classes = 1;
        e.expected_weight_classes = 1;
    } else if (id == "E4") {
        e.description = "direct sum of two copies of E1";
        HlrData<K> block = detail::twisted_sl2<K>(K(1), K(1));
        e.data = direct_sum(block, block);
        e.H = span_of_basis_indices<K>(6, {0, 3});
        e.expected_roots = {{{K(-2), K(0)}, 1}, {{K(0), K(-2)}, 1},
                            {{K(0), K(2)}, 1}, {{K(2), K(0)}, 1}};
        e.expected_root_classes = 2;
    } else if (id == "E5") {
        e.description = "Yau twist of sl2 with lambda = 2";
        e.data = detail::twisted_sl2<K>(K(2), K(1) / K(2));
        e.H = span_of_basis_indices<K>(3, {0});
        e.expected_roots = {{{K(-2)}, 1}, {{K(2)}, 1}};
        e.expected_root_classes = 1;
    } else if (id == "E6") {
        e.description = "rotation mutant: ad_h has characteristic polynomial x^2 + 1";
        Tensor3<K> b(3, 3, 3);
        detail::set_bracket(b, 0, 1, 2, K(1));   // [h,x] = y
        detail::set_bracket(b, 0, 2, 1, K(-1));  // [h,y] = -x
        e.data = from_hom_lie(3, b, Matrix<K>::identity(3), {"h", "x", "y"});
        e.H = span_of_basis_indices<K>(3, {0});
        e.splits = false;
    } else if (id == "E8") {
        e.description = "phi-derivations of the dual numbers";
        e.data = derivation_hlra(detail::dual_numbers<K>());
        e.H = span_of_basis_indices<K>(1, {0});
        e.expected_weights = {{{K(1)}, 1}};
        e.expected_weight_classes = 1;
    } else if (id == "M1") {
        e.description = "E1 with [e,f] = e: breaks the Hom-Jacobi identity";
        e.data = detail::twisted_sl2<K>(K(1), K(1));
        e.data.bracket.at(1, 2, 0) = K(0);
        e.data.bracket.at(2, 1, 0) = K(0);
        detail::set_bracket(e.data.bracket, 1, 2, 1, K(1));
        e.H = span_of_basis_indices<K>(3, {0});
        e.axioms_pass = false;
        e.targeted = Axiom::HomJacobi;
    } else if (id == "M2") {
        e.description = "E3 with phi(t) = 2t: breaks psi(a.x) = phi(a).psi(x)";
        e.data = detail::dual_number_module<K>();
        e.data.a.phi.at(1, 1) = K(2);
        e.H = span_of_basis_indices<K>(4, {0});
        e.axioms_pass = false;
        e.targeted = Axiom::TwistActionCompat;
    } else if (id == "M3") {
        e.description = "E3 with rho(e) = d/dt: anchor leaves the phi-derivations";
        e.data = detail::dual_number_module<K>();
        e.data.anchor[2] = Matrix<K>(2, 2);
        e.data.anchor[2].at(0, 1) = K(1);  // d/dt: 1 -> 0, t -> 1
        e.H = span_of_basis_indices<K>(4, {0});
        e.axioms_pass = false;
        e.targeted = Axiom::Representation;
    } else if (id == "M4") {
        e.description = "abelian E3 module with rho(th) = t d/dt: breaks rho(a.x) = phi(a).rho(x)";
        e.data = detail::dual_number_module<K>();
        e.data.bracket = Tensor3<K>(4, 4, 4);
        e.data.anchor[0] = Matrix<K>(2, 2);
        e.data.anchor[1].at(1, 1) = K(1);
        e.H = span_of_basis_indices<K>(4, {0});
        e.axioms_pass = false;
        e.targeted = Axiom::AnchorActionCompat;
    } else if (id == "M5") {
        e.description = "E3 with the anchor doubled: breaks only the Hom-Leibniz rule";
        e.data = detail::dual_number_module<K>();
        e.data.anchor[0] = K(2) * e.data.anchor[0];
        e.H = span_of_basis_indices<K>(4, {0});
        e.axioms_pass = false;
        e.targeted = Axiom::HomLeibniz;
    } else if (id == "M6") {
        e.description = "E1 with [e,f] = [f,e] = h: breaks skew symmetry";
        e.data = detail::twisted_sl2<K>(K(1), K(1));
        e.data.bracket.at(2, 1, 0) = K(1);
        e.H = span_of_basis_indices<K>(3, {0});
        e.axioms_pass = false;
        e.targeted = Axiom::SkewSymmetry;
    } else {
        throw UnknownIdError(id + " is not a rational-field corpus entry");
    }
    return e;
}

/// E7: the derivation algebra of F_2[t]/(t^2 + 1), L = A.(t d/dt), the
/// smallest instance that is tight, of maximal length, root-multiplicative,
/// and has symmetric root and weight systems. Requires Fp modulus 2.
inline CorpusEntry<Fp> build_f2(const std::string& id) {
    if (id != "E7") throw UnknownIdError(id + " is not a prime-field corpus entry");
    if (Fp::modulus() != 2) throw Error("E7 is defined over F_2; configure FpScope(2)");
    CorpusEntry<Fp> e;
    e.id = id;
    e.description = "truncated Witt algebra over F_2: tight, maximal length, root-multiplicative";
    HlrData<Fp> h;
    h.a.dim = 2;
    h.a.labels = {"1", "t"};
    h.a.mult = Tensor3<Fp>(2, 2, 2);
    h.a.mult.at(0, 0, 0) = Fp(1);
    h.a.mult.at(0, 1, 1) = Fp(1);
    h.a.mult.at(1, 0, 1) = Fp(1);
    h.a.mult.at(1, 1, 0) = Fp(1);  // t^2 = 1
    h.a.phi = Matrix<Fp>::identity(2);
    h.dim_L = 2;
    h.labels = {"E", "tE"};
    h.bracket = Tensor3<Fp>(2, 2, 2);
    detail::set_bracket(h.bracket, 0, 1, 1, Fp(1));  // [E, tE] = tE
    h.psi = Matrix<Fp>::identity(2);
    h.action = Tensor3<Fp>(2, 2, 2);
    h.action.at(0, 0, 0) = Fp(1);
    h.action.at(0, 1, 1) = Fp(1);
    h.action.at(1, 0, 1) = Fp(1);  // t . E = tE
    h.action.at(1, 1, 0) = Fp(1);  // t . tE = E
    Matrix<Fp> rho_E(2, 2);
    rho_E.at(1, 1) = Fp(1);  // t d/dt
    Matrix<Fp> rho_tE(2, 2);
    rho_tE.at(0, 1) = Fp(1);  // t -> t^2 = 1
    h.anchor = {rho_E, rho_tE};
    e.data = std::move(h);
    e.H = detail::span_of_basis_indices<Fp>(2, {0});
    e.expected_roots = {{{Fp(1)}, 1}};
    e.expected_weights = {{{Fp(1)}, 1}};
    e.expected_root_classes = 1;
    e.expected_weight_classes = 1;
    return e;
}

}  // namespace homrine::corpus
