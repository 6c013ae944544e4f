#pragma once

#include <cstdint>
#include <fstream>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include <json.hpp>

#include "homrine/connections.hpp"
#include "homrine/hlr.hpp"
#include "homrine/ideals.hpp"
#include "homrine/split.hpp"
#include "homrine/structure.hpp"

namespace homrine::io {

using ojson = nlohmann::ordered_json;

struct FieldSpec {
    bool rational = true;
    std::int64_t p = 0;

    bool operator==(const FieldSpec&) const = default;
};

/// Parsed algebra file: the structure data, the designated Cartan candidate,
/// and the search options.
template <class K>
struct AlgebraInput {
    HlrData<K> h;
    Subspace<K> H;
    std::size_t orbit_bound = 64;
    std::size_t chain_budget = 4;
};

// ---------------------------------------------------------------------------
// Parsing. Scalars are exact "p" or "p/q" strings; sparse tensor entries are
// [i, j, k, "value"] quadruples with omitted entries zero.
// ---------------------------------------------------------------------------

namespace detail {

inline const ojson& need(const ojson& j, const char* key, const std::string& ctx) {
    if (!j.is_object() || !j.contains(key))
        throw ParseError(ctx + ": missing key '" + key + "'");
    return j.at(key);
}

inline std::size_t need_count(const ojson& j, const char* key, const std::string& ctx) {
    const ojson& v = need(j, key, ctx);
    if (!v.is_number_unsigned())
        throw ParseError(ctx + "." + key + ": expected a non-negative integer");
    return v.get<std::size_t>();
}

inline std::vector<std::string> need_labels(const ojson& j, const char* key,
                                            const std::string& ctx, std::size_t dim) {
    const ojson& v = need(j, key, ctx);
    if (!v.is_array() || v.size() != dim)
        throw ParseError(ctx + "." + key + ": expected " + std::to_string(dim) + " labels");
    std::vector<std::string> out;
    for (const auto& s : v) {
        if (!s.is_string()) throw ParseError(ctx + "." + key + ": labels must be strings");
        out.push_back(s.get<std::string>());
    }
    return out;
}

template <class K>
K scalar_from(const ojson& v, const std::string& ctx) {
    if (!v.is_string()) throw ParseError(ctx + ": scalars must be exact strings");
    try {
        return parse_scalar<K>(v.get<std::string>());
    } catch (const ParseError& e) {
        throw ParseError(ctx + ": " + e.what());
    }
}

template <class K>
Matrix<K> matrix_from(const ojson& j, std::size_t rows, std::size_t cols,
                      const std::string& ctx) {
    if (!j.is_array() || j.size() != rows)
        throw ParseError(ctx + ": expected " + std::to_string(rows) + " rows");
    Matrix<K> m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        const ojson& row = j.at(i);
        if (!row.is_array() || row.size() != cols)
            throw ParseError(ctx + " row " + std::to_string(i) + ": expected " +
                             std::to_string(cols) + " entries");
        for (std::size_t c = 0; c < cols; ++c)
            m.at(i, c) = scalar_from<K>(row.at(c), ctx + "[" + std::to_string(i) + "][" +
                                                       std::to_string(c) + "]");
    }
    return m;
}

template <class K>
Tensor3<K> tensor_from(const ojson& j, std::size_t d0, std::size_t d1, std::size_t d2,
                       const std::string& ctx) {
    if (!j.is_array()) throw ParseError(ctx + ": expected an array of [i, j, k, value] entries");
    Tensor3<K> t(d0, d1, d2);
    std::set<std::tuple<std::size_t, std::size_t, std::size_t>> seen;
    for (const auto& entry : j) {
        if (!entry.is_array() || entry.size() != 4)
            throw ParseError(ctx + ": each entry must be [i, j, k, value]");
        std::size_t idx[3];
        for (int p = 0; p < 3; ++p) {
            if (!entry.at(p).is_number_unsigned())
                throw ParseError(ctx + ": indices must be non-negative integers");
            idx[p] = entry.at(p).get<std::size_t>();
        }
        std::size_t dims[3] = {d0, d1, d2};
        for (int p = 0; p < 3; ++p)
            if (idx[p] >= dims[p])
                throw ParseError(ctx + ": index " + std::to_string(idx[p]) + " out of range " +
                                 std::to_string(dims[p]));
        if (!seen.insert({idx[0], idx[1], idx[2]}).second)
            throw ParseError(ctx + ": duplicate entry (" + std::to_string(idx[0]) + ", " +
                             std::to_string(idx[1]) + ", " + std::to_string(idx[2]) + ")");
        t.at(idx[0], idx[1], idx[2]) = scalar_from<K>(entry.at(3), ctx);
    }
    return t;
}

}  // namespace detail

inline ojson parse_document(const std::string& text) {
    try {
        return ojson::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(e.what());  // carries line/byte position
    }
}

inline FieldSpec field_of(const ojson& doc) {
    const ojson& f = detail::need(doc, "field", "document");
    std::string kind = detail::need(f, "kind", "field").get<std::string>();
    FieldSpec spec;
    if (kind == "rational") {
        spec.rational = true;
    } else if (kind == "prime") {
        spec.rational = false;
        const ojson& p = detail::need(f, "p", "field");
        if (!p.is_number_unsigned()) throw ParseError("field.p: expected a positive integer");
        spec.p = p.get<std::int64_t>();
        if (!is_prime(spec.p)) throw ParseError("field.p: " + std::to_string(spec.p) +
                                                " is not prime");
    } else {
        throw ParseError("field.kind must be 'rational' or 'prime'");
    }
    return spec;
}

template <class K>
AlgebraInput<K> parse_algebra(const ojson& doc) {
    AlgebraInput<K> in;
    const ojson& ja = detail::need(doc, "A", "document");
    in.h.a.dim = detail::need_count(ja, "dim", "A");
    in.h.a.labels = detail::need_labels(ja, "labels", "A", in.h.a.dim);
    in.h.a.mult =
        detail::tensor_from<K>(detail::need(ja, "mult", "A"), in.h.a.dim, in.h.a.dim, in.h.a.dim,
                               "A.mult");
    in.h.a.phi = detail::matrix_from<K>(detail::need(ja, "phi", "A"), in.h.a.dim, in.h.a.dim,
                                        "A.phi");

    const ojson& jl = detail::need(doc, "L", "document");
    in.h.dim_L = detail::need_count(jl, "dim", "L");
    in.h.labels = detail::need_labels(jl, "labels", "L", in.h.dim_L);
    in.h.bracket = detail::tensor_from<K>(detail::need(jl, "bracket", "L"), in.h.dim_L,
                                          in.h.dim_L, in.h.dim_L, "L.bracket");
    in.h.psi =
        detail::matrix_from<K>(detail::need(jl, "psi", "L"), in.h.dim_L, in.h.dim_L, "L.psi");
    in.h.action = detail::tensor_from<K>(detail::need(jl, "action", "L"), in.h.a.dim, in.h.dim_L,
                                         in.h.dim_L, "L.action");
    const ojson& anchors = detail::need(jl, "anchor", "L");
    if (!anchors.is_array() || anchors.size() != in.h.dim_L)
        throw ParseError("L.anchor: expected one matrix per L basis vector");
    for (std::size_t i = 0; i < in.h.dim_L; ++i)
        in.h.anchor.push_back(detail::matrix_from<K>(anchors.at(i), in.h.a.dim, in.h.a.dim,
                                                     "L.anchor[" + std::to_string(i) + "]"));

    const ojson& jh = detail::need(doc, "H", "document");
    if (!jh.is_array()) throw ParseError("H: expected a list of coordinate vectors");
    std::vector<Vec<K>> rows;
    for (std::size_t i = 0; i < jh.size(); ++i) {
        const ojson& row = jh.at(i);
        if (!row.is_array() || row.size() != in.h.dim_L)
            throw ParseError("H[" + std::to_string(i) + "]: expected " +
                             std::to_string(in.h.dim_L) + " coordinates");
        Vec<K> v;
        for (const auto& c : row) v.push_back(detail::scalar_from<K>(c, "H"));
        rows.push_back(std::move(v));
    }
    in.H = Subspace<K>::span(in.h.dim_L, rows);

    if (doc.contains("options")) {
        const ojson& opt = doc.at("options");
        if (opt.contains("orbit_bound"))
            in.orbit_bound = detail::need_count(opt, "orbit_bound", "options");
        if (opt.contains("chain_budget"))
            in.chain_budget = detail::need_count(opt, "chain_budget", "options");
    }
    return in;
}

// ---------------------------------------------------------------------------
// Canonical serialization: fixed key order, sparse entries sorted by index,
// scalars in lowest terms, the H block in canonical basis form.
// ---------------------------------------------------------------------------

namespace detail {

template <class K>
ojson matrix_json(const Matrix<K>& m) {
    ojson rows = ojson::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        ojson row = ojson::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(scalar_str(m.at(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

template <class K>
ojson tensor_json(const Tensor3<K>& t) {
    ojson entries = ojson::array();
    for (std::size_t i = 0; i < t.dim0(); ++i)
        for (std::size_t j = 0; j < t.dim1(); ++j)
            for (std::size_t k = 0; k < t.dim2(); ++k)
                if (!(t.at(i, j, k) == K(0)))
                    entries.push_back(ojson::array({i, j, k, scalar_str(t.at(i, j, k))}));
    return entries;
}

template <class K>
ojson basis_json(const Subspace<K>& s) {
    ojson rows = ojson::array();
    for (const auto& row : s.basis()) {
        ojson r = ojson::array();
        for (const auto& x : row) r.push_back(scalar_str(x));
        rows.push_back(std::move(r));
    }
    return rows;
}

template <class K>
ojson functional_json(const Vec<K>& f) {
    ojson r = ojson::array();
    for (const auto& x : f) r.push_back(scalar_str(x));
    return r;
}

}  // namespace detail

template <class K>
ojson field_json();
template <>
inline ojson field_json<Rational>() { return ojson{{"kind", "rational"}}; }
template <>
inline ojson field_json<Fp>() { return ojson{{"kind", "prime"}, {"p", Fp::modulus()}}; }

template <class K>
ojson serialize_algebra(const AlgebraInput<K>& in) {
    ojson doc;
    doc["field"] = field_json<K>();
    ojson ja;
    ja["dim"] = in.h.a.dim;
    ja["labels"] = in.h.a.labels;
    ja["mult"] = detail::tensor_json(in.h.a.mult);
    ja["phi"] = detail::matrix_json(in.h.a.phi);
    doc["A"] = std::move(ja);
    ojson jl;
    jl["dim"] = in.h.dim_L;
    jl["labels"] = in.h.labels;
    jl["bracket"] = detail::tensor_json(in.h.bracket);
    jl["psi"] = detail::matrix_json(in.h.psi);
    jl["action"] = detail::tensor_json(in.h.action);
    ojson anchors = ojson::array();
    for (const auto& a : in.h.anchor) anchors.push_back(detail::matrix_json(a));
    jl["anchor"] = std::move(anchors);
    doc["L"] = std::move(jl);
    doc["H"] = detail::basis_json(in.H);
    doc["options"] = ojson{{"orbit_bound", in.orbit_bound}, {"chain_budget", in.chain_budget}};
    return doc;
}

inline std::string dump_canonical(const ojson& doc) { return doc.dump(2) + "\n"; }

inline std::string read_file(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw ParseError("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

inline void write_file(const std::string& path, const std::string& content) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw Error("cannot write '" + path + "'");
    f << content;
}

// ---------------------------------------------------------------------------
// Report serialization: JSON mirrors of every verdict structure.
// ---------------------------------------------------------------------------

inline ojson axiom_report_json(const AxiomReport& r) {
    ojson checks = ojson::array();
    for (const auto& c : r.checks) {
        ojson jc;
        jc["axiom"] = axiom_name(c.axiom);
        jc["passed"] = c.passed;
        if (!c.passed) {
            jc["counterexample"] = c.indices;
            jc["lhs"] = c.lhs;
            jc["rhs"] = c.rhs;
            if (!c.detail.empty()) jc["detail"] = c.detail;
        }
        checks.push_back(std::move(jc));
    }
    return ojson{{"passed", r.passed()}, {"checks", std::move(checks)}};
}

template <class K>
ojson decomposition_json(const Decomposition<K>& d) {
    ojson out;
    out["H"] = detail::basis_json(d.H);
    out["psi_H"] = detail::matrix_json(d.psi_H);
    ojson roots = ojson::array();
    for (const auto& [f, s] : d.roots)
        roots.push_back(ojson{{"functional", detail::functional_json(f)},
                              {"dim", s.dim()},
                              {"basis", detail::basis_json(s)}});
    out["roots"] = std::move(roots);
    ojson weights = ojson::array();
    for (const auto& [f, s] : d.weights)
        weights.push_back(ojson{{"functional", detail::functional_json(f)},
                                {"dim", s.dim()},
                                {"basis", detail::basis_json(s)}});
    out["weights"] = std::move(weights);
    out["A0"] = detail::basis_json(d.A0);
    return out;
}

template <class K>
ojson grading_json(const GradingReport<K>& g) {
    ojson products = ojson::array();
    for (const auto& e : g.products) {
        ojson je;
        je["kind"] = grading_kind_name(e.kind);
        je["src1"] = detail::functional_json(e.src1);
        je["src2"] = detail::functional_json(e.src2);
        je["target"] = detail::functional_json(e.target);
        je["product_dim"] = e.product_dim;
        je["ok"] = e.target_exists && e.contained;
        products.push_back(std::move(je));
    }
    return ojson{{"ok", g.ok()}, {"products", std::move(products)}};
}

template <class K>
ojson witness_json(const Witness<K>& w) {
    if (w.base_case)
        return ojson{{"kind", "direct"}, {"epsilon", w.epsilon}, {"z", w.z}};
    ojson family = ojson::array();
    for (const auto& f : w.family) family.push_back(detail::functional_json(f));
    return ojson{{"kind", "family"}, {"zetas", std::move(family)}};
}

template <class K>
ojson classes_json(const std::vector<ConnectionClass<K>>& classes) {
    ojson out = ojson::array();
    for (const auto& cls : classes) {
        ojson members = ojson::array(), witnesses = ojson::array();
        for (const auto& m : cls.members) {
            members.push_back(detail::functional_json(m));
            witnesses.push_back(witness_json(cls.witnesses.at(m)));
        }
        out.push_back(ojson{{"representative", detail::functional_json(cls.representative)},
                            {"members", std::move(members)},
                            {"witnesses", std::move(witnesses)}});
    }
    return out;
}

template <class K>
ojson orbit_json(const OrbitTable<K>& t) {
    ojson out = ojson::array();
    for (const auto& [f, cycle] : t.orbits)
        out.push_back(
            ojson{{"functional", detail::functional_json(f)}, {"period", cycle.size()}});
    return out;
}

template <class K>
ojson root_ideals_json(const std::vector<RootIdeal<K>>& ideals,
                       const std::vector<RootIdealChecks<K>>& checks) {
    ojson out = ojson::array();
    for (std::size_t i = 0; i < ideals.size(); ++i) {
        ojson j;
        j["class"] = detail::functional_json(ideals[i].cls.representative);
        j["zero_part"] = detail::basis_json(ideals[i].zero_part);
        j["graded_part"] = detail::basis_json(ideals[i].graded_part);
        j["total"] = detail::basis_json(ideals[i].total);
        j["checks"] = ojson{{"bracket_closed", checks[i].bracket_closed},
                            {"psi_equal", checks[i].psi_equal},
                            {"action_closed", checks[i].action_closed},
                            {"anchor_closed", checks[i].anchor_closed},
                            {"full_ideal", checks[i].full_ideal}};
        out.push_back(std::move(j));
    }
    return out;
}

template <class K>
ojson weight_ideals_json(const std::vector<WeightIdeal<K>>& ideals,
                         const std::vector<WeightIdealChecks<K>>& checks) {
    ojson out = ojson::array();
    for (std::size_t i = 0; i < ideals.size(); ++i) {
        ojson j;
        j["class"] = detail::functional_json(ideals[i].cls.representative);
        j["zero_part"] = detail::basis_json(ideals[i].zero_part);
        j["graded_part"] = detail::basis_json(ideals[i].graded_part);
        j["total"] = detail::basis_json(ideals[i].total);
        j["checks"] = ojson{{"self_closed", checks[i].self_closed},
                            {"ideal_in_A", checks[i].ideal_in_A}};
        out.push_back(std::move(j));
    }
    return out;
}

template <class K>
ojson l_assembly_json(const LAssembly<K>& a) {
    return ojson{{"zero_sum", detail::basis_json(a.zero_sum)},
                 {"complement_U", detail::basis_json(a.complement_U)},
                 {"reconstructs", a.reconstructs},
                 {"exhausted_H", a.exhausted_H},
                 {"center_zero", a.center_zero},
                 {"direct_regime", a.direct_regime},
                 {"direct", a.direct}};
}

template <class K>
ojson a_assembly_json(const AAssembly<K>& a) {
    return ojson{{"zero_sum", detail::basis_json(a.zero_sum)},
                 {"complement_V", detail::basis_json(a.complement_V)},
                 {"reconstructs", a.reconstructs},
                 {"exhausted_A0", a.exhausted_A0},
                 {"center_zero", a.center_zero},
                 {"direct_regime", a.direct_regime},
                 {"direct", a.direct}};
}

template <class K>
ojson structure_json(const StructureReport<K>& s) {
    ojson out;
    ojson conds = ojson::array();
    for (const auto& c : s.tight.conditions)
        conds.push_back(ojson{{"name", c.name}, {"ok", c.ok}, {"detail", c.detail}});
    out["tight"] = ojson{{"ok", s.tight.tight()}, {"conditions", std::move(conds)}};
    out["symmetric"] = s.symmetric;
    ojson rmf = ojson::array();
    for (const auto& f : s.root_mult.failures)
        rmf.push_back(ojson{{"rule", f.rule},
                            {"f1", detail::functional_json(f.f1)},
                            {"f2", detail::functional_json(f.f2)}});
    out["root_multiplicative"] = ojson{{"ok", s.root_mult.ok()}, {"failures", std::move(rmf)}};
    ojson ml{{"ok", s.max_length.ok}};
    if (!s.max_length.ok) {
        ml["offender"] = detail::functional_json(s.max_length.offender);
        ml["offender_dim"] = s.max_length.offender_dim;
        ml["side"] = s.max_length.offender_is_weight ? "weight" : "root";
    }
    out["maximal_length"] = std::move(ml);
    ojson simp{{"simple", s.simplicity.simple},
               {"seed_complete", s.simplicity.seed_complete},
               {"ker_rho_dim", s.simplicity.ker_rho_dim},
               {"h_exhausted", s.simplicity.h_exhausted},
               {"reason", s.simplicity.reason}};
    if (s.simplicity.witness_ideal)
        simp["witness_ideal"] = detail::basis_json(*s.simplicity.witness_ideal);
    out["simplicity"] = std::move(simp);
    ojson comp;
    comp["outcome"] = s.components.outcome;
    comp["failed_hypotheses"] = s.components.failed_hypotheses;
    ojson lsum = ojson::array();
    for (const auto& c : s.components.l_summands)
        lsum.push_back(ojson{{"basis", detail::basis_json(c.space)},
                             {"restricted_ok", c.restricted_ok},
                             {"simple", c.simple},
                             {"seed_complete", c.seed_complete},
                             {"note", c.note}});
    comp["l_summands"] = std::move(lsum);
    comp["l_decomposition_exact"] = s.components.l_decomposition_exact;
    comp["cross_brackets_zero"] = s.components.cross_brackets_zero;
    ojson asum = ojson::array();
    for (const auto& c : s.components.a_summands)
        asum.push_back(ojson{{"basis", detail::basis_json(c.space)},
                             {"simple", c.simple},
                             {"note", c.note}});
    comp["a_summands"] = std::move(asum);
    comp["a_decomposition_exact"] = s.components.a_decomposition_exact;
    comp["cross_products_zero"] = s.components.cross_products_zero;
    comp["certified"] = s.components.certified();
    out["simple_components"] = std::move(comp);
    ojson pt;
    pt["applicable"] = s.pairing_table.applicable;
    ojson rows = ojson::array();
    for (const auto& row : s.pairing_table.annihilates) {
        ojson r = ojson::array();
        for (bool b : row) r.push_back(b);
        rows.push_back(std::move(r));
    }
    pt["annihilates"] = std::move(rows);
    ojson counts = ojson::array();
    for (const auto& c : s.pairing_table.per_root_class)
        counts.push_back(ojson{{"annihilating", c.annihilating}, {"acting", c.acting}});
    pt["per_root_class"] = std::move(counts);
    pt["unique_annihilator"] = s.pairing_table.unique_annihilator;
    pt["unique_actor"] = s.pairing_table.unique_actor;
    out["pairing"] = std::move(pt);
    return out;
}

}  // namespace homrine::io
