#include <catch2/catch_amalgamated.hpp>

#include "homrine/corpus.hpp"
#include "homrine/ideals.hpp"

using namespace homrine;

namespace {

using Q = Rational;

struct Ctx {
    HlrData<Q> h;
    Decomposition<Q> d;
    OrbitTable<Q> orbits;
    std::vector<ConnectionClass<Q>> rcls, wcls;
    std::vector<RootIdeal<Q>> ri;
    std::vector<WeightIdeal<Q>> wi;
};

Ctx make(const std::string& id) {
    auto entry = corpus::build_rational<Q>(id);
    Ctx c;
    c.h = entry.data;
    c.d = split(c.h, entry.H);
    c.orbits = build_orbits(c.d, 64);
    c.rcls = root_classes(c.d, c.orbits);
    c.wcls = weight_classes(c.d);
    for (const auto& cls : c.rcls) c.ri.push_back(build_root_ideal(c.h, c.d, cls));
    for (const auto& cls : c.wcls) c.wi.push_back(build_weight_ideal(c.h, c.d, cls));
    return c;
}

Subspace<Q> unit_span(std::size_t n, std::initializer_list<std::size_t> idx) {
    std::vector<Vec<Q>> rows;
    for (auto i : idx) rows.push_back(unit_vec<Q>(n, i));
    return Subspace<Q>::span(n, rows);
}

}  // namespace

TEST_CASE("root ideal of E1 is all of L with L_{0,[g]} = <h>") {
    auto c = make("E1");
    REQUIRE(c.ri.size() == 1);
    CHECK(c.ri[0].zero_part == unit_span(3, {0}));
    CHECK(c.ri[0].total == Subspace<Q>::full(3));
    auto checks = verify_root_ideal(c.h, c.ri[0]);
    CHECK(checks.ok());
    CHECK(is_ideal(c.h, c.ri[0].total));
}

TEST_CASE("root ideals of E4 are the blocks") {
    auto c = make("E4");
    REQUIRE(c.ri.size() == 2);
    CHECK(sum(c.ri[0].total, c.ri[1].total) == Subspace<Q>::full(6));
    CHECK(intersect(c.ri[0].total, c.ri[1].total).is_zero());
    bool block_match = (c.ri[0].total == unit_span(6, {0, 1, 2}) &&
                        c.ri[1].total == unit_span(6, {3, 4, 5})) ||
                       (c.ri[0].total == unit_span(6, {3, 4, 5}) &&
                        c.ri[1].total == unit_span(6, {0, 1, 2}));
    CHECK(block_match);
    for (const auto& ri : c.ri) CHECK(verify_root_ideal(c.h, ri).ok());
    CHECK(orthogonality(c.h, c.ri).ok());
}

TEST_CASE("empty-guard sums leave the E3 ideal purely graded") {
    auto c = make("E3");
    REQUIRE(c.ri.size() == 1);
    CHECK(c.ri[0].zero_part.is_zero());
    CHECK(c.ri[0].total == unit_span(4, {1, 2, 3}));  // <th, e, te>
    CHECK(verify_root_ideal(c.h, c.ri[0]).ok());
}

TEST_CASE("a mutilated ideal fails bracket closure with a witness") {
    auto c = make("E1");
    RootIdeal<Q> broken = c.ri[0];
    broken.total = unit_span(3, {1, 2});  // <e, f>: [e,f] = h escapes
    auto checks = verify_root_ideal(c.h, broken);
    CHECK_FALSE(checks.bracket_closed);
    CHECK_FALSE(checks.ok());
}

TEST_CASE("assemble_L per corpus instance") {
    SECTION("E1: U = 0 and the single ideal is everything") {
        auto c = make("E1");
        auto asm_l = assemble_L(c.h, c.d, c.ri);
        CHECK(asm_l.complement_U.is_zero());
        CHECK(asm_l.reconstructs);
        CHECK(asm_l.exhausted_H);
        CHECK(asm_l.center_zero);
        CHECK(asm_l.direct_regime);
        CHECK(asm_l.direct);
    }
    SECTION("E4: direct sum of the two blocks") {
        auto c = make("E4");
        auto asm_l = assemble_L(c.h, c.d, c.ri);
        CHECK(asm_l.reconstructs);
        CHECK(asm_l.direct_regime);
        CHECK(asm_l.direct);
    }
    SECTION("E3: U = H, reconstruction without the direct regime") {
        auto c = make("E3");
        auto asm_l = assemble_L(c.h, c.d, c.ri);
        CHECK(asm_l.zero_sum.is_zero());
        CHECK(asm_l.complement_U == c.d.H);
        CHECK(asm_l.reconstructs);
        CHECK_FALSE(asm_l.exhausted_H);
        CHECK_FALSE(asm_l.direct_regime);
    }
    SECTION("E8: abelian L = H, no ideals, U = H") {
        auto c = make("E8");
        CHECK(c.ri.empty());
        auto asm_l = assemble_L(c.h, c.d, c.ri);
        CHECK(asm_l.complement_U == c.d.H);
        CHECK(asm_l.reconstructs);
    }
}

TEST_CASE("weight ideals and assemble_A") {
    SECTION("E3: both guards fail, script-A = <t>") {
        auto c = make("E3");
        REQUIRE(c.wi.size() == 1);
        CHECK(c.wi[0].zero_part.is_zero());
        CHECK(c.wi[0].total.dim() == 1);
        CHECK(c.wi[0].total.contains(Vec<Q>{Q(0), Q(1)}));
        CHECK(verify_weight_ideal(c.h, c.wi[0]).ok());
        auto asm_a = assemble_A(c.h, c.d, c.wi);
        CHECK(asm_a.complement_V == c.d.A0);
        CHECK(asm_a.reconstructs);
        CHECK_FALSE(asm_a.exhausted_A0);
    }
    SECTION("E1: no weights, V = A_0 = A") {
        auto c = make("E1");
        CHECK(c.wi.empty());
        auto asm_a = assemble_A(c.h, c.d, c.wi);
        CHECK(asm_a.complement_V == Subspace<Q>::full(1));
        CHECK(asm_a.reconstructs);
    }
    SECTION("E1 + E3 composite: cross products vanish across classes") {
        auto e1 = corpus::build_rational<Q>("E1");
        auto e3 = corpus::build_rational<Q>("E3");
        HlrData<Q> h = direct_sum(e1.data, e3.data);
        std::vector<Vec<Q>> h_rows{unit_vec<Q>(7, 0), unit_vec<Q>(7, 3)};
        Decomposition<Q> d = split(h, Subspace<Q>::span(7, h_rows));
        auto orbits = build_orbits(d, 64);
        auto rcls = root_classes(d, orbits);
        REQUIRE(rcls.size() == 2);
        std::vector<RootIdeal<Q>> ri;
        for (const auto& cls : rcls) ri.push_back(build_root_ideal(h, d, cls));
        CHECK(orthogonality(h, ri).ok());
        for (const auto& r : ri) CHECK(verify_root_ideal(h, r).ok());
        auto asm_l = assemble_L(h, d, ri);
        CHECK(asm_l.reconstructs);
        auto wcls = weight_classes(d);
        std::vector<WeightIdeal<Q>> wi;
        for (const auto& cls : wcls) wi.push_back(build_weight_ideal(h, d, cls));
        CHECK(weight_orthogonality(h, wi).ok());
        auto asm_a = assemble_A(h, d, wi);
        CHECK(asm_a.reconstructs);
    }
}

TEST_CASE("ideal suite over every splitting corpus entry") {
    for (const auto& id : {"E1", "E2", "E3", "E4", "E5", "E8"}) {
        auto c = make(id);
        INFO(id);
        for (const auto& ri : c.ri) {
            CHECK(verify_root_ideal(c.h, ri).ok());
            CHECK(is_ideal(c.h, ri.total));
        }
        CHECK(orthogonality(c.h, c.ri).ok());
        for (const auto& wi : c.wi) CHECK(verify_weight_ideal(c.h, wi).ok());
        CHECK(weight_orthogonality(c.h, c.wi).ok());
        CHECK(assemble_L(c.h, c.d, c.ri).reconstructs);
        CHECK(assemble_A(c.h, c.d, c.wi).reconstructs);
        // sums and intersections of the computed ideals remain ideals
        for (std::size_t i = 0; i < c.ri.size(); ++i)
            for (std::size_t j = 0; j < c.ri.size(); ++j) {
                CHECK(is_ideal(c.h, sum(c.ri[i].total, c.ri[j].total)));
                CHECK(is_ideal(c.h, intersect(c.ri[i].total, c.ri[j].total)));
            }
    }
}

TEST_CASE("E7 ideals over F_2") {
    FpScope field(2);
    auto entry = corpus::build_f2("E7");
    auto d = split(entry.data, entry.H);
    auto orbits = build_orbits(d, 64);
    auto rcls = root_classes(d, orbits);
    auto wcls = weight_classes(d);
    REQUIRE(rcls.size() == 1);
    REQUIRE(wcls.size() == 1);
    auto ri = build_root_ideal(entry.data, d, rcls[0]);
    CHECK(ri.zero_part == d.H);  // A_{-g} L_g covers H
    CHECK(ri.total == Subspace<Fp>::full(2));
    CHECK(verify_root_ideal(entry.data, ri).ok());
    auto wi = build_weight_ideal(entry.data, d, wcls[0]);
    CHECK(wi.total == Subspace<Fp>::full(2));
    CHECK(verify_weight_ideal(entry.data, wi).ok());
    auto asm_l = assemble_L(entry.data, d, {ri});
    CHECK(asm_l.direct_regime);
    CHECK(asm_l.direct);
    auto asm_a = assemble_A(entry.data, d, {wi});
    CHECK(asm_a.direct_regime);
    CHECK(asm_a.direct);
}
