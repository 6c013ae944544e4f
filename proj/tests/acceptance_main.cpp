// Acceptance suite: runs every top-level requirement end to end and prints
// one [PASS]/[FAIL] line per criterion. Exits nonzero if any criterion
// fails. All checks are exact; the stated time budgets are enforced.

#include <chrono>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "homrine/cli_main.hpp"
#include "homrine/corpus.hpp"
#include "homrine/oracle.hpp"

using namespace homrine;
using Q = Rational;

namespace {

struct Harness {
    int failures = 0;
    int index = 0;

    void criterion(const std::string& name, const std::function<void()>& body) {
        ++index;
        auto start = std::chrono::steady_clock::now();
        std::string error;
        try {
            body();
        } catch (const std::exception& e) {
            error = e.what();
        }
        auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                      std::chrono::steady_clock::now() - start)
                      .count();
        if (error.empty()) {
            std::cout << "[PASS] " << index << ". " << name << " (" << ms << " ms)\n";
        } else {
            ++failures;
            std::cout << "[FAIL] " << index << ". " << name << ": " << error << "\n";
        }
    }
};

struct CheckError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void require(bool cond, const std::string& what) {
    if (!cond) throw CheckError(what);
}

template <class K>
struct Instance {
    HlrData<K> h;
    Subspace<K> H;
    Decomposition<K> d;
};

template <class K>
Instance<K> instance_of(const corpus::CorpusEntry<K>& e) {
    return {e.data, e.H, split(e.data, e.H)};
}

const std::vector<std::string> kSplittingRational = {"E1", "E2", "E3", "E4", "E5", "E8"};

// runs fn over every splitting corpus instance, rational ones first, then E7
void for_each_instance(const std::function<void(const std::string&)>& name_cb,
                       const std::function<void(const Instance<Q>&)>& rational_cb,
                       const std::function<void(const Instance<Fp>&)>& prime_cb) {
    for (const auto& id : kSplittingRational) {
        name_cb(id);
        rational_cb(instance_of(corpus::build_rational<Q>(id)));
    }
    name_cb("E7");
    FpScope field(2);
    prime_cb(instance_of(corpus::build_f2("E7")));
}

std::filesystem::path work_dir() {
    auto dir = std::filesystem::temp_directory_path() / "homrine_acceptance";
    std::filesystem::create_directories(dir);
    return dir;
}

std::string slurp(const std::filesystem::path& p) {
    std::ifstream f(p, std::ios::binary);
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

int cli(std::vector<std::string> args, std::string* out_text = nullptr) {
    std::ostringstream out, err;
    int rc = homrine::cli::run(std::move(args), out, err);
    if (out_text) *out_text = out.str();
    return rc;
}

// ---------------------------------------------------------------------------

void axiom_suite() {
    auto start = std::chrono::steady_clock::now();
    for (const auto& id : {"E1", "E2", "E3", "E4", "E5", "E8"}) {
        auto e = corpus::build_rational<Q>(id);
        require(verify_algebra(e.data.a).passed(), std::string(id) + ": algebra axioms");
        require(verify_axioms(e.data).passed(), std::string(id) + ": hlr axioms");
    }
    {
        FpScope field(2);
        auto e7 = corpus::build_f2("E7");
        require(verify_axioms(e7.data).passed(), "E7: hlr axioms");
    }
    for (const auto& id : {"M1", "M2", "M3", "M4", "M5", "M6"}) {
        auto e = corpus::build_rational<Q>(id);
        auto report = verify_axioms(e.data);
        require(!report.passed(), std::string(id) + ": expected failure");
        require(report.first_failure()->axiom == e.targeted,
                std::string(id) + ": first failure is " +
                    axiom_name(report.first_failure()->axiom) + ", targeted " +
                    axiom_name(e.targeted));
    }
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - start)
                  .count();
    require(ms < 1000, "axiom suite took " + std::to_string(ms) + " ms, budget 1000 ms");
}

void split_suite() {
    auto e1 = instance_of(corpus::build_rational<Q>("E1"));
    require(e1.d.roots.size() == 2, "E1: |Gamma| = 2");
    for (const auto& [g, s] : e1.d.roots) require(s.dim() == 1, "E1: dim L_gamma = 1");
    require(e1.d.weights.empty(), "E1: Lambda empty");

    auto e3 = instance_of(corpus::build_rational<Q>("E3"));
    require(e3.d.roots.size() == 2, "E3: |Gamma| = 2");
    require(e3.d.roots[0].first == Functional<Q>{Q(1)} && e3.d.roots[0].second.dim() == 2,
            "E3: dim L_{gamma1} = 2");
    require(e3.d.roots[1].first == Functional<Q>{Q(2)} && e3.d.roots[1].second.dim() == 1,
            "E3: gamma2 = 2 gamma1 with dim 1");
    require(e3.d.weights.size() == 1 && e3.d.weights[0].first == Functional<Q>{Q(1)},
            "E3: Lambda = {gamma1}");
    require(e3.d.weights[0].second.contains(Vec<Q>{Q(0), Q(1)}), "E3: A_alpha = <t>");

    auto e6 = corpus::build_rational<Q>("E6");
    bool raised = false;
    try {
        split(e6.data, e6.H);
    } catch (const NotSplitError&) {
        raised = true;
    }
    require(raised, "E6: NotSplit raised");

    for_each_instance([](const std::string&) {},
                      [](const Instance<Q>& i) { require(i.d.H == i.H, "L_0 = H"); },
                      [](const Instance<Fp>& i) { require(i.d.H == i.H, "L_0 = H"); });
}

void grading_suite() {
    std::string current;
    for_each_instance([&](const std::string& id) { current = id; },
                      [&](const Instance<Q>& i) {
                          require(check_grading(i.h, i.d).ok(), current + ": grading violations");
                      },
                      [&](const Instance<Fp>& i) {
                          require(check_grading(i.h, i.d).ok(), current + ": grading violations");
                      });
}

void psi_shift_suite() {
    for (const auto& id : {"E1", "E3", "E5"}) {
        auto i = instance_of(corpus::build_rational<Q>(id));
        std::vector<Functional<Q>> funcs{i.d.zero_functional()};
        for (const auto& r : i.d.roots) funcs.push_back(r.first);
        for (const auto& f : funcs) {
            require(verify_psi_shift(i.h, i.d, f, -1),
                    std::string(id) + ": psi(L_gamma) inside L_{gamma psi^-1}");
            require(verify_psi_shift(i.h, i.d, f, 1),
                    std::string(id) + ": psi^-1(L_gamma) inside L_{gamma psi}");
        }
    }
}

template <class K>
void oracle_equivalence_on(const Instance<K>& i, const std::string& id) {
    auto orbits = build_orbits(i.d, 64);
    oracle::ChainBudget budget{4};
    for (const auto& g1 : i.d.gamma())
        for (const auto& g2 : i.d.gamma())
            require(root_connected(i.d, orbits, g1, g2).has_value() ==
                        oracle::bf_root_connected(i.d, orbits, g1, g2, budget),
                    id + ": root partition disagreement at " + vec_str(g1) + ", " + vec_str(g2));
    for (const auto& a1 : i.d.lambda())
        for (const auto& a2 : i.d.lambda())
            require(weight_connected(i.d, a1, a2).has_value() ==
                        oracle::bf_weight_connected(i.d, a1, a2, budget),
                    id + ": weight partition disagreement");
    for (const auto& cls : root_classes(i.d, orbits))
        for (const auto& m : cls.members)
            require(oracle::replay_root_witness_literal(i.d, orbits, cls.representative, m,
                                                        cls.witnesses.at(m)),
                    id + ": witness fails the literal replay");
}

void connection_suite() {
    auto start = std::chrono::steady_clock::now();
    std::string current;
    for_each_instance([&](const std::string& id) { current = id; },
                      [&](const Instance<Q>& i) { oracle_equivalence_on(i, current); },
                      [&](const Instance<Fp>& i) { oracle_equivalence_on(i, current); });
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - start)
                  .count();
    require(ms < 5000, "connection suite took " + std::to_string(ms) + " ms, budget 5000 ms");
}

template <class K>
void ideal_suite_on(const Instance<K>& i, const std::string& id) {
    auto orbits = build_orbits(i.d, 64);
    std::vector<RootIdeal<K>> ris;
    for (const auto& cls : root_classes(i.d, orbits)) {
        RootIdeal<K> ri = build_root_ideal(i.h, i.d, cls);
        auto checks = verify_root_ideal(i.h, ri);
        require(checks.bracket_closed, id + ": [I,I] escapes I");
        require(checks.psi_equal, id + ": psi(I) != I");
        require(checks.action_closed, id + ": A I escapes I");
        require(checks.anchor_closed, id + ": rho(I)(A) L escapes I");
        require(checks.full_ideal, id + ": [I,L] escapes I");
        require(is_ideal(i.h, ri.total), id + ": is_ideal rejects I");
        ris.push_back(std::move(ri));
    }
    require(orthogonality(i.h, ris).ok(), id + ": cross brackets of class ideals");
    std::vector<WeightIdeal<K>> wis;
    for (const auto& cls : weight_classes(i.d)) {
        WeightIdeal<K> wi = build_weight_ideal(i.h, i.d, cls);
        auto checks = verify_weight_ideal(i.h, wi);
        require(checks.self_closed && checks.ideal_in_A, id + ": weight ideal closure");
        wis.push_back(std::move(wi));
    }
    require(weight_orthogonality(i.h, wis).ok(), id + ": cross products of weight ideals");
}

void ideal_suite() {
    std::string current;
    for_each_instance([&](const std::string& id) { current = id; },
                      [&](const Instance<Q>& i) { ideal_suite_on(i, current); },
                      [&](const Instance<Fp>& i) { ideal_suite_on(i, current); });
}

template <class K>
void reconstruction_on(const Instance<K>& i, const std::string& id) {
    auto orbits = build_orbits(i.d, 64);
    std::vector<RootIdeal<K>> ris;
    for (const auto& cls : root_classes(i.d, orbits))
        ris.push_back(build_root_ideal(i.h, i.d, cls));
    auto al = assemble_L(i.h, i.d, ris);
    require(al.reconstructs, id + ": U + sum I != L");
    std::vector<WeightIdeal<K>> wis;
    for (const auto& cls : weight_classes(i.d)) wis.push_back(build_weight_ideal(i.h, i.d, cls));
    auto aa = assemble_A(i.h, i.d, wis);
    require(aa.reconstructs, id + ": V + sum script-A != A");
    if (id == "E4") {
        require(al.direct_regime, "E4: Z(L) = 0 with exhausted H expected");
        require(al.direct, "E4: the ideal sum is not direct");
    }
}

void reconstruction_suite() {
    std::string current;
    for_each_instance([&](const std::string& id) { current = id; },
                      [&](const Instance<Q>& i) { reconstruction_on(i, current); },
                      [&](const Instance<Fp>& i) { reconstruction_on(i, current); });
}

void structure_suite() {
    FpScope field(2);
    auto i = instance_of(corpus::build_f2("E7"));
    auto tight = is_tight(i.h, i.d);
    require(tight.conditions.size() == 6, "E7: six tightness conditions");
    for (const auto& c : tight.conditions) require(c.ok, "E7: tightness condition " + c.name);

    auto orbits = build_orbits(i.d, 64);
    std::vector<RootIdeal<Fp>> ris;
    for (const auto& cls : root_classes(i.d, orbits))
        ris.push_back(build_root_ideal(i.h, i.d, cls));
    std::vector<WeightIdeal<Fp>> wis;
    for (const auto& cls : weight_classes(i.d)) wis.push_back(build_weight_ideal(i.h, i.d, cls));

    auto comps = simple_components(i.h, i.d, ris, wis);
    require(comps.hypotheses_ok(), "E7: simple-components hypotheses");
    require(comps.outcome == "simple" || comps.outcome == "two-summands",
            "E7: dichotomy outcome, got " + comps.outcome);
    require(comps.certified(), "E7: component certificates");
    for (const auto& s : comps.l_summands)
        require(s.simple && s.seed_complete, "E7: summand certificate not seed-complete");

    auto p = pairing(i.h, ris, wis);
    require(p.applicable, "E7: pairing table computed");
    require(p.per_root_class.size() == 1, "E7: one root class in the table");
    // uniqueness counts are reported; the discrepancy between the two
    // readings must be flagged, not suppressed
    require(p.per_root_class[0].acting == 1, "E7: unique acting class");
    require(p.per_root_class[0].annihilating == 0, "E7: no annihilating class");
    require(p.unique_actor, "E7: unique-actor verdict");
    require(!p.unique_annihilator, "E7: annihilator-uniqueness fails and must be flagged");
}

void cli_contract_suite() {
    auto dir = work_dir();
    // canonical round-trip, byte identical
    for (const auto& id : corpus::all_ids()) {
        auto path = dir / (id + ".json");
        require(cli({"corpus", id, path.string()}) == 0, id + ": corpus export");
        auto ld = homrine::cli::load_document(path.string());
        std::string again;
        homrine::cli::with_field(ld.field, [&]<class K>() {
            again = io::dump_canonical(io::serialize_algebra(io::parse_algebra<K>(ld.doc)));
            return 0;
        });
        require(slurp(path) == again, id + ": round-trip not byte-identical");
    }
    // exit-status matrix
    const std::vector<std::pair<std::string, std::vector<int>>> expected = {
        {"E1", {0, 0, 1}}, {"E6", {0, 3, 3}}, {"E7", {0, 0, 0}}, {"M1", {1, 1, 1}}};
    const std::vector<std::string> commands = {"validate", "split", "structure"};
    for (const auto& [id, codes] : expected)
        for (std::size_t c = 0; c < commands.size(); ++c) {
            int rc = cli({commands[c], (dir / (id + ".json")).string(), "--quiet"});
            require(rc == codes[c], id + " " + commands[c] + ": exit " + std::to_string(rc) +
                                        ", expected " + std::to_string(codes[c]));
        }
    // determinism modulo timing
    auto r1 = dir / "det1.json", r2 = dir / "det2.json";
    cli({"report", (dir / "E3.json").string(), r1.string(), "--quiet"});
    cli({"report", (dir / "E3.json").string(), r2.string(), "--quiet"});
    auto j1 = io::parse_document(slurp(r1)), j2 = io::parse_document(slurp(r2));
    j1.erase("timing");
    j2.erase("timing");
    require(j1 == j2, "consecutive reports differ beyond the timing block");
}

void performance_suite() {
    // dim L = 12, dim A = 6 composite: three copies of E3
    auto dir = work_dir();
    auto e3 = dir / "E3.json";
    require(cli({"corpus", "E3", e3.string()}) == 0, "corpus export");
    auto e3e3 = dir / "e3e3.json";
    auto big = dir / "e3e3e3.json";
    require(cli({"direct-sum", e3.string(), e3.string(), e3e3.string()}) == 0, "direct-sum");
    require(cli({"direct-sum", e3e3.string(), e3.string(), big.string()}) == 0, "direct-sum");

    auto start = std::chrono::steady_clock::now();
    auto report_path = dir / "big_report.json";
    int rc = cli({"report", big.string(), report_path.string(), "--quiet"});
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - start)
                  .count();
    require(rc == 0 || rc == 1, "pipeline crashed with exit " + std::to_string(rc));
    require(ms < 2000, "dim L = 12 pipeline took " + std::to_string(ms) + " ms, budget 2000 ms");
    auto j = io::parse_document(slurp(report_path));
    require(j.contains("structure"), "report reached the structure stage");
}

}  // namespace

int main() {
    Harness h;
    h.criterion("axiom suite: corpus passes, every mutant fails its targeted axiom (< 1 s)",
                axiom_suite);
    h.criterion("split suite: E1 and E3 decompositions, E6 NotSplit, L_0 = H", split_suite);
    h.criterion("grading suite: zero violations across all corpus decompositions",
                grading_suite);
    h.criterion("twist-shift suite: psi(L_g) and psi^-1(L_g) land in the shifted spaces",
                psi_shift_suite);
    h.criterion("connection suite: BFS equals brute force (budget 4), witnesses replay (< 5 s)",
                connection_suite);
    h.criterion("ideal suite: class-ideal closures, ideal-ness, cross products vanish",
                ideal_suite);
    h.criterion("reconstruction suite: L = U + sum I (direct on E4), A = V + sum script-A",
                reconstruction_suite);
    h.criterion("structure suite: E7 tight and certified simple, pairing discrepancy flagged",
                structure_suite);
    h.criterion("CLI contract: byte-exact round-trip, exit-status matrix, deterministic reports",
                cli_contract_suite);
    h.criterion("performance envelope: dim L = 12 pipeline inside 2 s", performance_suite);

    if (h.failures == 0) {
        std::cout << "all 10 acceptance criteria passed\n";
        return 0;
    }
    std::cout << h.failures << " acceptance criteria failed\n";
    return 1;
}
