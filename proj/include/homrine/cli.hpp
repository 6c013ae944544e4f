#pragma once

#include <chrono>
#include <cstdlib>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "homrine/corpus.hpp"
#include "homrine/io.hpp"
#include "homrine/oracle.hpp"

namespace homrine::cli {

/// Exit-status contract: 0 all checks pass, 1 a mathematical verdict is
/// negative, 2 input/format error, 3 unsupported instance (not split /
/// unbounded orbit / twist-unstable Cartan).
constexpr int kOk = 0;
constexpr int kNegative = 1;
constexpr int kInputError = 2;
constexpr int kUnsupported = 3;

struct Options {
    std::optional<std::size_t> orbit_bound;
    std::optional<std::size_t> chain_budget;
    std::optional<std::string> json_out;
    bool quiet = false;
};

/// Runs the analysis stages in order, each one assuming its predecessors.
/// Results accumulate so a report can always be emitted for whatever
/// completed.
template <class K>
class Pipeline {
public:
    Pipeline(io::AlgebraInput<K> in, const Options& opt, std::ostream& out)
        : in_(std::move(in)), opt_(opt), out_(out) {}

    int run_validate() {
        algebra_report_ = verify_algebra(in_.h.a);
        if (!algebra_report_->passed()) {
            say("algebra axioms: FAIL (" + failure_of(*algebra_report_) + ")");
            return kNegative;
        }
        hlr_report_ = verify_axioms(in_.h);
        if (!hlr_report_->passed()) {
            say("hom-lie-rinehart axioms: FAIL (" + failure_of(*hlr_report_) + ")");
            return kNegative;
        }
        say("axioms: pass (" + std::to_string(algebra_report_->checks.size() +
                                               hlr_report_->checks.size()) +
            " checks)");
        return kOk;
    }

    int run_split() {
        if (int rc = run_validate(); rc != kOk) return rc;
        masa_ok_ = verify_masa(in_.h, in_.H);
        if (!*masa_ok_) {
            say("masa: FAIL (H is not a maximal abelian subalgebra)");
            return kNegative;
        }
        try {
            dec_ = split(in_.h, in_.H);
        } catch (const TwistUnstableCartanError& e) {
            say(std::string("split: unsupported (") + e.what() + ")");
            return kUnsupported;
        } catch (const NotSplitError& e) {
            say(std::string("split: unsupported (") + e.what() + ")");
            return kUnsupported;
        } catch (const CartanMismatchError& e) {
            say(std::string("split: unsupported (") + e.what() + ")");
            return kUnsupported;
        }
        grading_ = check_grading(in_.h, *dec_);
        std::string rdims, wdims;
        for (const auto& r : dec_->roots) rdims += (rdims.empty() ? "" : ",") +
                                                   std::to_string(r.second.dim());
        for (const auto& w : dec_->weights) wdims += (wdims.empty() ? "" : ",") +
                                                     std::to_string(w.second.dim());
        say("split: |Gamma| = " + std::to_string(dec_->roots.size()) + " (dims " +
            (rdims.empty() ? "-" : rdims) + "), |Lambda| = " +
            std::to_string(dec_->weights.size()) + " (dims " + (wdims.empty() ? "-" : wdims) +
            "), dim A0 = " + std::to_string(dec_->A0.dim()));
        if (!grading_->ok()) {
            say("grading: VIOLATION (internal inconsistency)");
            return kNegative;
        }
        say("grading: ok (" + std::to_string(grading_->products.size()) + " nonzero products)");
        return kOk;
    }

    int run_connect() {
        if (int rc = run_split(); rc != kOk) return rc;
        std::size_t bound = opt_.orbit_bound.value_or(in_.orbit_bound);
        try {
            orbits_ = build_orbits(*dec_, bound);
        } catch (const OrbitUnboundedError& e) {
            say(std::string("connect: unsupported (") + e.what() + ")");
            return kUnsupported;
        }
        rcls_ = root_classes(*dec_, *orbits_);
        wcls_ = weight_classes(*dec_);
        say("connections: " + std::to_string(rcls_->size()) + " root class(es), " +
            std::to_string(wcls_->size()) + " weight class(es) (orbit bound " +
            std::to_string(bound) + ")");
        for (const auto& cls : *rcls_) say("  root class " + members_str(cls));
        for (const auto& cls : *wcls_) say("  weight class " + members_str(cls));
        return kOk;
    }

    int run_ideals() {
        if (int rc = run_connect(); rc != kOk) return rc;
        bool all_ok = true;
        ri_.emplace();
        ri_checks_.emplace();
        for (const auto& cls : *rcls_) {
            ri_->push_back(build_root_ideal(in_.h, *dec_, cls));
            ri_checks_->push_back(verify_root_ideal(in_.h, ri_->back()));
            all_ok = all_ok && ri_checks_->back().ok() && is_ideal(in_.h, ri_->back().total);
        }
        wi_.emplace();
        wi_checks_.emplace();
        for (const auto& cls : *wcls_) {
            wi_->push_back(build_weight_ideal(in_.h, *dec_, cls));
            wi_checks_->push_back(verify_weight_ideal(in_.h, wi_->back()));
            all_ok = all_ok && wi_checks_->back().ok();
        }
        orth_ = orthogonality(in_.h, *ri_);
        worth_ = weight_orthogonality(in_.h, *wi_);
        asm_l_ = assemble_L(in_.h, *dec_, *ri_);
        asm_a_ = assemble_A(in_.h, *dec_, *wi_);
        all_ok = all_ok && orth_->ok() && worth_->ok() && asm_l_->reconstructs &&
                 asm_a_->reconstructs;
        if (asm_l_->direct_regime) all_ok = all_ok && asm_l_->direct;
        if (asm_a_->direct_regime) all_ok = all_ok && asm_a_->direct;
        say(std::string("ideals: ") + std::to_string(ri_->size()) + " root ideal(s), " +
            std::to_string(wi_->size()) + " weight ideal(s), checks " +
            (all_ok ? "pass" : "FAIL") + ", L reconstruction " +
            (asm_l_->reconstructs ? (asm_l_->direct ? "direct" : "ok") : "FAIL") +
            ", A reconstruction " +
            (asm_a_->reconstructs ? (asm_a_->direct ? "direct" : "ok") : "FAIL"));
        return all_ok ? kOk : kNegative;
    }

    int run_structure() {
        if (int rc = run_ideals(); rc != kOk) return rc;
        structure_ = analyze_structure(in_.h, *dec_, *ri_, *wi_);
        const auto& s = *structure_;
        std::string tight_note = s.tight.tight() ? "yes" : "no [" + join(s.tight.failures()) + "]";
        say("structure: tight=" + tight_note + ", symmetric=" + yn(s.symmetric) +
            ", maximal-length=" + yn(s.max_length.ok) +
            ", root-multiplicative=" + yn(s.root_mult.ok()) +
            ", components=" + s.components.outcome +
            (s.components.certified() ? " (certified)" : "") +
            ", pairing: " + pairing_note(s.pairing_table));
        return s.all_positive() ? kOk : kNegative;
    }

    /// Machine report of everything computed so far.
    io::ojson report(int exit_code) const {
        io::ojson doc;
        doc["field"] = io::field_json<K>();
        doc["exit_code"] = exit_code;
        if (algebra_report_) {
            io::ojson v;
            v["algebra"] = io::axiom_report_json(*algebra_report_);
            if (hlr_report_) v["axioms"] = io::axiom_report_json(*hlr_report_);
            v["passed"] = algebra_report_->passed() && hlr_report_ && hlr_report_->passed();
            doc["validate"] = std::move(v);
        }
        if (masa_ok_) doc["masa_ok"] = *masa_ok_;
        if (dec_) {
            doc["split"] = io::decomposition_json(*dec_);
            doc["grading"] = io::grading_json(*grading_);
        }
        if (orbits_) {
            io::ojson c;
            c["orbit_bound"] = orbits_->bound;
            c["chain_budget"] = opt_.chain_budget.value_or(in_.chain_budget);
            c["orbits"] = io::orbit_json(*orbits_);
            c["root_classes"] = io::classes_json(*rcls_);
            c["weight_classes"] = io::classes_json(*wcls_);
            doc["connections"] = std::move(c);
        }
        if (ri_) {
            io::ojson i;
            i["root_ideals"] = io::root_ideals_json(*ri_, *ri_checks_);
            i["orthogonality_ok"] = orth_->ok();
            i["weight_ideals"] = io::weight_ideals_json(*wi_, *wi_checks_);
            i["weight_orthogonality_ok"] = worth_->ok();
            i["assemble_L"] = io::l_assembly_json(*asm_l_);
            i["assemble_A"] = io::a_assembly_json(*asm_a_);
            doc["ideals"] = std::move(i);
        }
        if (structure_) doc["structure"] = io::structure_json(*structure_);
        return doc;
    }

    const io::AlgebraInput<K>& input() const { return in_; }

private:
    static std::string yn(bool b) { return b ? "yes" : "no"; }
    static std::string join(const std::vector<std::string>& v) {
        std::string s;
        for (const auto& x : v) s += (s.empty() ? "" : ", ") + x;
        return s;
    }
    static std::string failure_of(const AxiomReport& r) {
        const AxiomCheck* f = r.first_failure();
        std::string s = axiom_name(f->axiom);
        if (!f->indices.empty()) {
            s += " at (";
            for (std::size_t i = 0; i < f->indices.size(); ++i)
                s += (i ? ", " : "") + std::to_string(f->indices[i]);
            s += ")";
        }
        return s;
    }
    static std::string members_str(const ConnectionClass<K>& cls) {
        std::string s = vec_str(cls.representative) + ": {";
        for (std::size_t i = 0; i < cls.members.size(); ++i)
            s += (i ? ", " : "") + vec_str(cls.members[i]);
        return s + "}";
    }
    template <class P>
    static std::string pairing_note(const P& p) {
        if (!p.applicable) return "n/a";
        std::string s = "unique-annihilator=" + yn(p.unique_annihilator) +
                        " unique-actor=" + yn(p.unique_actor);
        if (!p.unique_annihilator || !p.unique_actor) s += " [discrepancy flagged]";
        return s;
    }
    void say(const std::string& line) {
        if (!opt_.quiet) out_ << line << "\n";
    }

    io::AlgebraInput<K> in_;
    Options opt_;
    std::ostream& out_;

    std::optional<AxiomReport> algebra_report_, hlr_report_;
    std::optional<bool> masa_ok_;
    std::optional<Decomposition<K>> dec_;
    std::optional<GradingReport<K>> grading_;
    std::optional<OrbitTable<K>> orbits_;
    std::optional<std::vector<ConnectionClass<K>>> rcls_, wcls_;
    std::optional<std::vector<RootIdeal<K>>> ri_;
    std::optional<std::vector<RootIdealChecks<K>>> ri_checks_;
    std::optional<std::vector<WeightIdeal<K>>> wi_;
    std::optional<std::vector<WeightIdealChecks<K>>> wi_checks_;
    std::optional<OrthogonalityReport<K>> orth_, worth_;
    std::optional<LAssembly<K>> asm_l_;
    std::optional<AAssembly<K>> asm_a_;
    std::optional<StructureReport<K>> structure_;
};

// ---------------------------------------------------------------------------
// Field dispatch and command drivers.
// ---------------------------------------------------------------------------

struct LoadedDocument {
    io::ojson doc;
    io::FieldSpec field;
};

/// Reads and parses an algebra file; the HOMRINE_FIELD environment variable
/// ("rational" or a prime number) overrides the file's field block.
inline LoadedDocument load_document(const std::string& path) {
    LoadedDocument ld;
    ld.doc = io::parse_document(io::read_file(path));
    ld.field = io::field_of(ld.doc);
    if (const char* env = std::getenv("HOMRINE_FIELD"); env != nullptr && *env != '\0') {
        std::string v(env);
        if (v == "rational") {
            ld.field = {true, 0};
        } else {
            try {
                std::int64_t p = std::stoll(v);
                if (!is_prime(p)) throw ParseError("HOMRINE_FIELD=" + v + " is not prime");
                ld.field = {false, p};
            } catch (const std::invalid_argument&) {
                throw ParseError("HOMRINE_FIELD must be 'rational' or a prime number");
            }
        }
    }
    return ld;
}

/// Instantiates fn over the scalar type selected by the field spec, with the
/// prime modulus scoped for the duration.
template <class Fn>
int with_field(const io::FieldSpec& field, Fn&& fn) {
    if (field.rational) return fn.template operator()<Rational>();
    FpScope scope(field.p);
    return fn.template operator()<Fp>();
}

enum class Stage { Validate, Split, Connect, Ideals, Structure, Report };

inline int run_stage_command(const std::string& path, Stage stage, const Options& opt,
                             const std::optional<std::string>& report_out, std::ostream& out,
                             std::ostream& err) {
    auto started = std::chrono::steady_clock::now();
    LoadedDocument ld;
    try {
        ld = load_document(path);
    } catch (const ParseError& e) {
        err << e.what() << "\n";
        return kInputError;
    }
    return with_field(ld.field, [&]<class K>() {
        io::AlgebraInput<K> in;
        try {
            in = io::parse_algebra<K>(ld.doc);
        } catch (const ParseError& e) {
            err << e.what() << "\n";
            return kInputError;
        }
        Options run_opt = opt;
        // keep stdout pure JSON when the report goes there
        if ((report_out && *report_out == "-") || (opt.json_out && *opt.json_out == "-"))
            run_opt.quiet = true;
        Pipeline<K> pipe(std::move(in), run_opt, out);
        int rc = kOk;
        switch (stage) {
            case Stage::Validate: rc = pipe.run_validate(); break;
            case Stage::Split: rc = pipe.run_split(); break;
            case Stage::Connect: rc = pipe.run_connect(); break;
            case Stage::Ideals: rc = pipe.run_ideals(); break;
            case Stage::Structure:
            case Stage::Report: rc = pipe.run_structure(); break;
        }
        std::optional<std::string> json_path = report_out;
        if (!json_path) json_path = opt.json_out;
        if (json_path) {
            io::ojson doc = pipe.report(rc);
            auto elapsed = std::chrono::steady_clock::now() - started;
            doc["timing"] = io::ojson{
                {"total_ms",
                 std::chrono::duration_cast<std::chrono::milliseconds>(elapsed).count()}};
            if (*json_path == "-")
                out << io::dump_canonical(doc);
            else
                io::write_file(*json_path, io::dump_canonical(doc));
        }
        return rc;
    });
}

inline int run_corpus_command(const std::string& id, const std::optional<std::string>& out_path,
                              std::ostream& out, std::ostream& err) {
    try {
        std::string text;
        auto ids = corpus::prime_ids();
        if (std::find(ids.begin(), ids.end(), id) != ids.end()) {
            FpScope scope(2);
            auto entry = corpus::build_f2(id);
            io::AlgebraInput<Fp> in{entry.data, entry.H, 64, 4};
            text = io::dump_canonical(io::serialize_algebra(in));
        } else {
            auto entry = corpus::build_rational<Rational>(id);
            io::AlgebraInput<Rational> in{entry.data, entry.H, 64, 4};
            text = io::dump_canonical(io::serialize_algebra(in));
        }
        if (out_path && *out_path != "-")
            io::write_file(*out_path, text);
        else
            out << text;
        return kOk;
    } catch (const UnknownIdError& e) {
        err << e.what() << "\n";
        return kInputError;
    }
}

inline int run_direct_sum_command(const std::string& a_path, const std::string& b_path,
                                  const std::string& out_path, std::ostream& out,
                                  std::ostream& err) {
    try {
        LoadedDocument la = load_document(a_path), lb = load_document(b_path);
        if (!(la.field == lb.field)) {
            err << "direct-sum: operands live over different fields\n";
            return kInputError;
        }
        return with_field(la.field, [&]<class K>() {
            io::AlgebraInput<K> ia = io::parse_algebra<K>(la.doc);
            io::AlgebraInput<K> ib = io::parse_algebra<K>(lb.doc);
            io::AlgebraInput<K> sum_in;
            sum_in.h = direct_sum(ia.h, ib.h);
            std::vector<Vec<K>> rows;
            for (const auto& r : ia.H.basis())
                rows.push_back(embed_block(r, 0, sum_in.h.dim_L));
            for (const auto& r : ib.H.basis())
                rows.push_back(embed_block(r, ia.h.dim_L, sum_in.h.dim_L));
            sum_in.H = Subspace<K>::span(sum_in.h.dim_L, rows);
            sum_in.orbit_bound = std::max(ia.orbit_bound, ib.orbit_bound);
            sum_in.chain_budget = std::max(ia.chain_budget, ib.chain_budget);
            std::string text = io::dump_canonical(io::serialize_algebra(sum_in));
            if (out_path == "-")
                out << text;
            else
                io::write_file(out_path, text);
            return kOk;
        });
    } catch (const ParseError& e) {
        err << e.what() << "\n";
        return kInputError;
    }
}

}  // namespace homrine::cli
