#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "homrine/matrix.hpp"
#include "homrine/subspace.hpp"
#include "homrine/tensor.hpp"

namespace homrine {

/// Every axiom the validators can report on, in fixed report order.
enum class Axiom {
    // commutative algebra side
    Commutativity,
    Associativity,
    PhiMultiplicative,
    PhiInvertible,
    // Hom-Lie Rinehart side
    SkewSymmetry,
    PsiHomomorphism,
    PsiInvertible,
    ModuleAssociativity,
    HomJacobi,            // condition (1)
    TwistActionCompat,    // condition (2): psi(a.x) = phi(a).psi(x)
    Representation,       // condition (3): anchor is a representation by phi-derivations
    AnchorActionCompat,   // condition (4): rho(a.x) = phi(a).rho(x)
    HomLeibniz,           // condition (5)
};

inline const char* axiom_name(Axiom a) {
    switch (a) {
        case Axiom::Commutativity: return "commutativity";
        case Axiom::Associativity: return "associativity";
        case Axiom::PhiMultiplicative: return "phi-multiplicative";
        case Axiom::PhiInvertible: return "phi-invertible";
        case Axiom::SkewSymmetry: return "skew-symmetry";
        case Axiom::PsiHomomorphism: return "psi-bracket-homomorphism";
        case Axiom::PsiInvertible: return "psi-invertible";
        case Axiom::ModuleAssociativity: return "module-associativity";
        case Axiom::HomJacobi: return "hom-jacobi";
        case Axiom::TwistActionCompat: return "twist-action-compatibility";
        case Axiom::Representation: return "representation";
        case Axiom::AnchorActionCompat: return "anchor-action-compatibility";
        case Axiom::HomLeibniz: return "hom-leibniz";
    }
    return "?";
}

/// One verified axiom with, on failure, the first counterexample found:
/// the offending basis tuple and the two mismatched evaluation results.
struct AxiomCheck {
    explicit AxiomCheck(Axiom a) : axiom(a) {}
    Axiom axiom;
    bool passed = true;
    std::vector<std::size_t> indices;
    std::string lhs, rhs;
    std::string detail;
};

struct AxiomReport {
    std::vector<AxiomCheck> checks;

    bool passed() const {
        for (const auto& c : checks)
            if (!c.passed) return false;
        return true;
    }
    const AxiomCheck* first_failure() const {
        for (const auto& c : checks)
            if (!c.passed) return &c;
        return nullptr;
    }
    const AxiomCheck* find(Axiom a) const {
        for (const auto& c : checks)
            if (c.axiom == a) return &c;
        return nullptr;
    }
};

/// A finite-dimensional commutative associative algebra A with a designated
/// algebra automorphism phi, both by structure constants on a fixed basis.
template <class K>
struct AlgebraData {
    std::size_t dim = 0;
    std::vector<std::string> labels;
    Tensor3<K> mult;   ///< a_i a_j = sum_k mult[i][j][k] a_k
    Matrix<K> phi;

    static AlgebraData ground_field() {
        AlgebraData a;
        a.dim = 1;
        a.labels = {"1"};
        a.mult = Tensor3<K>(1, 1, 1);
        a.mult.at(0, 0, 0) = K(1);
        a.phi = Matrix<K>::identity(1);
        return a;
    }

    Vec<K> product(const Vec<K>& x, const Vec<K>& y) const { return mult.contract(x, y); }

    /// Multiplication-by-x operator on A.
    Matrix<K> mult_operator(const Vec<K>& x) const { return mult.left_operator(x); }
};

namespace detail {

template <class K>
void record_mismatch(AxiomCheck& check, std::vector<std::size_t> idx, const Vec<K>& lhs,
                     const Vec<K>& rhs) {
    if (!check.passed) return;  // keep the lexicographically first counterexample
    check.passed = false;
    check.indices = std::move(idx);
    check.lhs = vec_str(lhs);
    check.rhs = vec_str(rhs);
}

}  // namespace detail

/// Definition-level checks for (A, phi): commutativity and associativity of
/// the product, multiplicativity and invertibility of phi. All on basis
/// tuples; bilinearity extends them.
template <class K>
AxiomReport verify_algebra(const AlgebraData<K>& a) {
    AxiomReport report;
    std::size_t n = a.dim;

    AxiomCheck comm{Axiom::Commutativity};
    for (std::size_t i = 0; i < n && comm.passed; ++i)
        for (std::size_t j = 0; j < n && comm.passed; ++j) {
            Vec<K> lhs = a.mult.slice(i, j), rhs = a.mult.slice(j, i);
            if (lhs != rhs) detail::record_mismatch(comm, {i, j}, lhs, rhs);
        }
    report.checks.push_back(comm);

    AxiomCheck assoc{Axiom::Associativity};
    for (std::size_t i = 0; i < n && assoc.passed; ++i)
        for (std::size_t j = 0; j < n && assoc.passed; ++j)
            for (std::size_t k = 0; k < n && assoc.passed; ++k) {
                Vec<K> lhs = a.product(a.mult.slice(i, j), unit_vec<K>(n, k));
                Vec<K> rhs = a.product(unit_vec<K>(n, i), a.mult.slice(j, k));
                if (lhs != rhs) detail::record_mismatch(assoc, {i, j, k}, lhs, rhs);
            }
    report.checks.push_back(assoc);

    AxiomCheck mul{Axiom::PhiMultiplicative};
    for (std::size_t i = 0; i < n && mul.passed; ++i)
        for (std::size_t j = 0; j < n && mul.passed; ++j) {
            Vec<K> lhs = a.phi.apply(a.mult.slice(i, j));
            Vec<K> rhs = a.product(a.phi.col(i), a.phi.col(j));
            if (lhs != rhs) detail::record_mismatch(mul, {i, j}, lhs, rhs);
        }
    report.checks.push_back(mul);

    AxiomCheck inv{Axiom::PhiInvertible};
    if (rank(a.phi) != n) {
        inv.passed = false;
        inv.detail = "phi has rank " + std::to_string(rank(a.phi)) + " < " + std::to_string(n);
    }
    report.checks.push_back(inv);

    return report;
}

/// Whether d satisfies d(ab) = phi(a) d(b) + d(a) phi(b) on all basis pairs.
template <class K>
bool is_phi_derivation(const AlgebraData<K>& a, const Matrix<K>& d) {
    if (d.rows() != a.dim || d.cols() != a.dim)
        throw DimensionMismatchError("derivation candidate shape");
    for (std::size_t i = 0; i < a.dim; ++i)
        for (std::size_t j = 0; j < a.dim; ++j) {
            Vec<K> lhs = d.apply(a.mult.slice(i, j));
            Vec<K> rhs = add_vec(a.product(a.phi.col(i), d.col(j)),
                                 a.product(d.col(i), a.phi.col(j)));
            if (lhs != rhs) return false;
        }
    return true;
}

/// Basis of the space of phi-derivations of A, as matrices. Solves the
/// twisted Leibniz rule as one linear system in the dim^2 matrix entries.
template <class K>
std::vector<Matrix<K>> phi_derivations(const AlgebraData<K>& a) {
    std::size_t n = a.dim;
    // unknowns: D[r][c] laid out row-major; equations: for each pair (i, j)
    // and output coordinate k, D(a_i a_j)_k - (phi(a_i) D(a_j) + D(a_i) phi(a_j))_k = 0.
    Matrix<K> sys(n * n * n, n * n);
    std::size_t eq = 0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Vec<K> prod = a.mult.slice(i, j);
            Vec<K> phi_i = a.phi.col(i), phi_j = a.phi.col(j);
            for (std::size_t k = 0; k < n; ++k, ++eq) {
                // D(a_i a_j)_k = sum_c prod[c] D[k][c]
                for (std::size_t c = 0; c < n; ++c) sys.at(eq, k * n + c) += prod[c];
                // (phi(a_i) D(a_j))_k = sum_{r,c} phi_i[c'] ... expand via mult tensor:
                // phi(a_i) has coords phi_i; D(a_j) has coords D[.][j].
                for (std::size_t r = 0; r < n; ++r) {
                    // coefficient of D[r][j]: (phi(a_i) * e_r)_k
                    Vec<K> m = a.product(phi_i, unit_vec<K>(n, r));
                    sys.at(eq, r * n + j) -= m[k];
                    // coefficient of D[r][i]: (e_r * phi(a_j))_k
                    Vec<K> m2 = a.product(unit_vec<K>(n, r), phi_j);
                    sys.at(eq, r * n + i) -= m2[k];
                }
            }
        }
    Subspace<K> sols = kernel(sys);
    std::vector<Matrix<K>> basis;
    for (const auto& v : sols.basis()) {
        Matrix<K> d(n, n);
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t c = 0; c < n; ++c) d.at(r, c) = v[r * n + c];
        basis.push_back(std::move(d));
    }
    return basis;
}

}  // namespace homrine
