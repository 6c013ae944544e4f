#include <catch2/catch_amalgamated.hpp>

#include "homrine/connections.hpp"
#include "homrine/corpus.hpp"
#include "homrine/oracle.hpp"

using namespace homrine;

namespace {

using Q = Rational;

Decomposition<Q> decompose(const std::string& id) {
    auto entry = corpus::build_rational<Q>(id);
    return split(entry.data, entry.H);
}

// synthetic decomposition with a prescribed psi_H and root/weight values;
// the spaces are irrelevant for the connection search, so unit vectors do
Decomposition<Q> synthetic(Matrix<Q> psi_H, std::vector<Vec<Q>> roots,
                           std::vector<Vec<Q>> weights) {
    Decomposition<Q> d;
    std::size_t m = psi_H.rows();
    d.H = Subspace<Q>::full(m);
    d.psi_H = std::move(psi_H);
    std::size_t n = roots.size() + weights.size() + 1;
    std::size_t slot = 0;
    std::sort(roots.begin(), roots.end(), FunctionalLess<Q>{});
    std::sort(weights.begin(), weights.end(), FunctionalLess<Q>{});
    for (auto& r : roots)
        d.roots.emplace_back(r, Subspace<Q>::span(n, {unit_vec<Q>(n, slot++)}));
    for (auto& w : weights)
        d.weights.emplace_back(w, Subspace<Q>::span(n, {unit_vec<Q>(n, slot++)}));
    d.A0 = Subspace<Q>::span(n, {unit_vec<Q>(n, slot++)});
    return d;
}

Matrix<Q> one_by_one(int v) {
    Matrix<Q> m(1, 1);
    m.at(0, 0) = Q(v);
    return m;
}

}  // namespace

TEST_CASE("orbits close for identity and sign-flip twists") {
    auto d1 = decompose("E1");
    auto orbits = build_orbits(d1, 64);
    for (const auto& [f, cycle] : orbits.orbits) CHECK(cycle.size() == 1);

    auto flip = synthetic(one_by_one(-1), {{Q(2)}}, {});
    auto o2 = build_orbits(flip, 8);
    REQUIRE(o2.orbits.count(Vec<Q>{Q(2)}) == 1);
    CHECK(o2.orbit_of(Vec<Q>{Q(2)}).size() == 2);
    CHECK(o2.in_orbit_of(Vec<Q>{Q(2)}, Vec<Q>{Q(-2)}));
}

TEST_CASE("unbounded orbit is a hard error") {
    auto scale = synthetic(one_by_one(2), {{Q(1)}}, {});
    CHECK_THROWS_AS(build_orbits(scale, 8), OrbitUnboundedError);
}

TEST_CASE("E1: opposite roots connect through the direct case") {
    auto d = decompose("E1");
    auto orbits = build_orbits(d, 64);
    auto w = root_connected(d, orbits, Vec<Q>{Q(2)}, Vec<Q>{Q(-2)});
    REQUIRE(w.has_value());
    CHECK(w->base_case);
    CHECK(w->epsilon == -1);
    CHECK(w->z == 0);
    CHECK(replay_root_witness(d, orbits, Vec<Q>{Q(2)}, Vec<Q>{Q(-2)}, *w));

    auto classes = root_classes(d, orbits);
    REQUIRE(classes.size() == 1);
    CHECK(classes[0].members.size() == 2);
}

TEST_CASE("E3: gamma1 connects to gamma2 = 2 gamma1 via the family {g1, g1}") {
    auto d = decompose("E3");
    auto orbits = build_orbits(d, 64);
    auto w = root_connected(d, orbits, Vec<Q>{Q(1)}, Vec<Q>{Q(2)});
    REQUIRE(w.has_value());
    CHECK_FALSE(w->base_case);
    REQUIRE(w->family.size() == 2);
    CHECK(w->family[0] == Vec<Q>{Q(1)});
    CHECK(w->family[1] == Vec<Q>{Q(1)});
    CHECK(replay_root_witness(d, orbits, Vec<Q>{Q(1)}, Vec<Q>{Q(2)}, *w));
    CHECK(oracle::replay_root_witness_literal(d, orbits, Vec<Q>{Q(1)}, Vec<Q>{Q(2)}, *w));

    auto classes = root_classes(d, orbits);
    REQUIRE(classes.size() == 1);
    CHECK(classes[0].members.size() == 2);
}

TEST_CASE("E4: block roots stay unconnected") {
    auto d = decompose("E4");
    auto orbits = build_orbits(d, 64);
    CHECK_FALSE(root_connected(d, orbits, Vec<Q>{Q(2), Q(0)}, Vec<Q>{Q(0), Q(2)}).has_value());
    CHECK(root_connected(d, orbits, Vec<Q>{Q(2), Q(0)}, Vec<Q>{Q(-2), Q(0)}).has_value());
    auto classes = root_classes(d, orbits);
    REQUIRE(classes.size() == 2);
    CHECK(classes[0].members.size() == 2);
    CHECK(classes[1].members.size() == 2);
}

TEST_CASE("empty root system yields no classes") {
    auto d = decompose("E2");
    auto orbits = build_orbits(d, 64);
    CHECK(root_classes(d, orbits).empty());
    CHECK(weight_classes(d).empty());
}

TEST_CASE("weight connections") {
    auto d3 = decompose("E3");
    auto w = weight_connected(d3, Vec<Q>{Q(1)}, Vec<Q>{Q(1)});
    REQUIRE(w.has_value());
    CHECK(w->base_case);
    CHECK(w->epsilon == 1);
    CHECK(weight_classes(d3).size() == 1);

    // synthetic: Lambda = {a, b} with b = a + g, g a root -> connected via {a, g}
    auto d = synthetic(Matrix<Q>::identity(1), {{Q(3)}}, {{Q(1)}, {Q(4)}});
    auto wc = weight_connected(d, Vec<Q>{Q(1)}, Vec<Q>{Q(4)});
    REQUIRE(wc.has_value());
    CHECK_FALSE(wc->base_case);
    REQUIRE(wc->family.size() == 2);
    CHECK(wc->family[0] == Vec<Q>{Q(1)});
    CHECK(wc->family[1] == Vec<Q>{Q(3)});
    CHECK(replay_weight_witness(d, Vec<Q>{Q(1)}, Vec<Q>{Q(4)}, *wc));
    CHECK(oracle::bf_weight_connected(d, Vec<Q>{Q(1)}, Vec<Q>{Q(4)}, {}));
    CHECK(weight_classes(d).size() == 1);
}

TEST_CASE("orbit-shift invariance of connectedness") {
    // psi_H = (-1) on a symmetric root pair: orbits glue the signs together
    auto d = synthetic(one_by_one(-1), {{Q(2)}, {Q(-2)}}, {});
    auto orbits = build_orbits(d, 8);
    for (const auto& g1 : {Vec<Q>{Q(2)}, Vec<Q>{Q(-2)}})
        for (const auto& g2 : {Vec<Q>{Q(2)}, Vec<Q>{Q(-2)}})
            CHECK(root_connected(d, orbits, g1, g2).has_value());
}

TEST_CASE("sum absorption: if gamma ~ xi and gamma + eta is a root, xi ~ gamma + eta") {
    for (const auto& id : {std::string("E1"), std::string("E3"), std::string("E4")}) {
        auto d = decompose(id);
        auto orbits = build_orbits(d, 64);
        FunctionalSet<Q> lambda_set;
        for (const auto& f : d.lambda()) lambda_set.insert(f);
        for (const auto& gamma : d.gamma())
            for (const auto& xi : d.gamma()) {
                if (!root_connected(d, orbits, gamma, xi)) continue;
                for (const auto& eta : d.gamma()) {
                    if (!lambda_set.count(eta)) continue;  // eta in Lambda cap Gamma
                    Vec<Q> target = add_vec(gamma, eta);
                    if (!d.is_root(target)) continue;
                    INFO(id << ": " << vec_str(gamma) << " ~ " << vec_str(xi) << ", eta "
                            << vec_str(eta));
                    CHECK(root_connected(d, orbits, xi, target).has_value());
                }
            }
    }
}

TEST_CASE("BFS partition equals the brute-force partition (budget 4)") {
    for (const auto& id : {std::string("E1"), std::string("E3"), std::string("E4"),
                           std::string("E5"), std::string("E8")}) {
        auto d = decompose(id);
        auto orbits = build_orbits(d, 64);
        oracle::ChainBudget budget;
        for (const auto& g1 : d.gamma())
            for (const auto& g2 : d.gamma()) {
                bool bfs = root_connected(d, orbits, g1, g2).has_value();
                bool bf = oracle::bf_root_connected(d, orbits, g1, g2, budget);
                INFO(id << ": " << vec_str(g1) << " vs " << vec_str(g2));
                CHECK(bfs == bf);
            }
        for (const auto& a1 : d.lambda())
            for (const auto& a2 : d.lambda()) {
                bool bfs = weight_connected(d, a1, a2).has_value();
                bool bf = oracle::bf_weight_connected(d, a1, a2, budget);
                CHECK(bfs == bf);
            }
    }
}

TEST_CASE("every stored witness replays, both incrementally and literally") {
    for (const auto& id : {std::string("E1"), std::string("E3"), std::string("E4"),
                           std::string("E5")}) {
        auto d = decompose(id);
        auto orbits = build_orbits(d, 64);
        for (const auto& cls : root_classes(d, orbits))
            for (const auto& member : cls.members) {
                const auto& w = cls.witnesses.at(member);
                INFO(id << ": " << vec_str(cls.representative) << " -> " << vec_str(member));
                CHECK(replay_root_witness(d, orbits, cls.representative, member, w));
                CHECK(oracle::replay_root_witness_literal(d, orbits, cls.representative, member,
                                                          w));
            }
        for (const auto& cls : weight_classes(d))
            for (const auto& member : cls.members)
                CHECK(replay_weight_witness(d, cls.representative, member,
                                            cls.witnesses.at(member)));
    }
}

TEST_CASE("connections on E7 over F_2") {
    FpScope field(2);
    auto entry = corpus::build_f2("E7");
    auto d = split(entry.data, entry.H);
    auto orbits = build_orbits(d, 64);
    auto classes = root_classes(d, orbits);
    REQUIRE(classes.size() == 1);
    CHECK(classes[0].members.size() == 1);
    CHECK(weight_classes(d).size() == 1);
    // oracle agreement in characteristic 2 as well
    CHECK(oracle::bf_root_connected(d, orbits, Vec<Fp>{Fp(1)}, Vec<Fp>{Fp(1)}, {}));
}

TEST_CASE("swap twist glues the blocks of a double sl2 through period-2 orbits") {
    // Yau twist of sl2 + sl2 by the block swap: [x,y]' = sigma([x,y]),
    // psi = sigma. H = <h.1, h.2> is psi-stable with psi_H the swap, so
    // every root orbit is {gamma, gamma o swap} and the two blocks become
    // one connection class through the direct case alone.
    auto block = corpus::build_rational<Q>("E1").data;
    auto plain = direct_sum(block, block);
    Matrix<Q> sigma(6, 6);
    for (std::size_t i = 0; i < 3; ++i) {
        sigma.at(i, 3 + i) = Q(1);
        sigma.at(3 + i, i) = Q(1);
    }
    Tensor3<Q> twisted(6, 6, 6);
    for (std::size_t i = 0; i < 6; ++i)
        for (std::size_t j = 0; j < 6; ++j) {
            Vec<Q> out = sigma.apply(plain.bracket.slice(i, j));
            for (std::size_t k = 0; k < 6; ++k) twisted.at(i, j, k) = out[k];
        }
    auto h = from_hom_lie(6, twisted, sigma);
    Subspace<Q> H = Subspace<Q>::span(6, {unit_vec<Q>(6, 0), unit_vec<Q>(6, 3)});
    REQUIRE(verify_masa(h, H));
    auto d = split(h, H);
    REQUIRE(d.roots.size() == 4);
    CHECK(check_grading(h, d).ok());
    for (long long z : {-2LL, -1LL, 1LL, 2LL})
        for (const auto& r : d.roots) CHECK(verify_psi_shift(h, d, r.first, z));

    auto orbits = build_orbits(d, 64);
    CHECK(orbits.orbit_of(Vec<Q>{Q(2), Q(0)}).size() == 2);
    CHECK(orbits.in_orbit_of(Vec<Q>{Q(2), Q(0)}, Vec<Q>{Q(0), Q(2)}));

    auto w = root_connected(d, orbits, Vec<Q>{Q(2), Q(0)}, Vec<Q>{Q(0), Q(2)});
    REQUIRE(w.has_value());
    CHECK(w->base_case);
    CHECK(w->z == -1);
    CHECK(replay_root_witness(d, orbits, Vec<Q>{Q(2), Q(0)}, Vec<Q>{Q(0), Q(2)}, *w));
    CHECK(oracle::replay_root_witness_literal(d, orbits, Vec<Q>{Q(2), Q(0)},
                                              Vec<Q>{Q(0), Q(2)}, *w));

    auto classes = root_classes(d, orbits);
    REQUIRE(classes.size() == 1);
    CHECK(classes[0].members.size() == 4);

    // oracle equivalence with twisted partial sums
    oracle::ChainBudget budget;
    for (const auto& g1 : d.gamma())
        for (const auto& g2 : d.gamma())
            CHECK(root_connected(d, orbits, g1, g2).has_value() ==
                  oracle::bf_root_connected(d, orbits, g1, g2, budget));
}

TEST_CASE("ideal oracle agrees with the main predicate") {
    for (const auto& id : {std::string("E1"), std::string("E3"), std::string("E4")}) {
        auto h = corpus::build_rational<Q>(id).data;
        for (std::size_t i = 0; i < h.dim_L; ++i) {
            Subspace<Q> seed = Subspace<Q>::span(h.dim_L, {unit_vec<Q>(h.dim_L, i)});
            Subspace<Q> closure = ideal_closure(h, seed);
            INFO(id << " seed " << i);
            CHECK(oracle::bf_is_ideal(h, closure));
            CHECK(oracle::bf_is_ideal(h, seed) == is_ideal(h, seed));
        }
        CHECK(oracle::bf_is_ideal(h, Subspace<Q>::zero(h.dim_L)));
        CHECK(oracle::bf_is_ideal(h, Subspace<Q>::full(h.dim_L)));
    }
}
