#include <catch2/catch_amalgamated.hpp>

#include "homrine/scalar.hpp"

using namespace homrine;

TEST_CASE("rationals parse and print in lowest terms") {
    CHECK(scalar_str(parse_rational("6/4")) == "3/2");
    CHECK(scalar_str(parse_rational("-6/4")) == "-3/2");
    CHECK(scalar_str(parse_rational("6/-4")) == "-3/2");
    CHECK(scalar_str(parse_rational("0/7")) == "0");
    CHECK(scalar_str(parse_rational("12")) == "12");
    CHECK(denominator(parse_rational("-10/15")) == 3);
    CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
    CHECK_THROWS_AS(parse_rational("1.5"), ParseError);
    CHECK_THROWS_AS(parse_rational("a"), ParseError);
    CHECK_THROWS_AS(parse_rational("3/"), ParseError);
    CHECK_THROWS_AS(parse_rational(""), ParseError);
}

TEST_CASE("prime field arithmetic") {
    FpScope field(7);
    CHECK(Fp(10).value() == 3);
    CHECK(Fp(-1).value() == 6);
    CHECK((Fp(3) * Fp(5)).value() == 1);
    CHECK((Fp(3) / Fp(5)).value() == (Fp(3) * Fp(5).inverse()).value());
    CHECK((Fp(2).inverse() * Fp(2)).value() == 1);
    CHECK(scalar_str(parse_fp("3/4")) == scalar_str(Fp(3) / Fp(4)));
    CHECK_THROWS_AS(Fp(0).inverse(), SingularError);
    CHECK_THROWS_AS(parse_fp("1/7"), ParseError);  // denominator vanishes mod 7
}

TEST_CASE("modulus scoping restores state") {
    {
        FpScope a(5);
        CHECK(Fp::modulus() == 5);
        {
            FpScope b(3);
            CHECK(Fp::modulus() == 3);
        }
        CHECK(Fp::modulus() == 5);
    }
    CHECK_THROWS_AS(FpScope(6), ParseError);
}

TEST_CASE("rational roots of integer polynomials") {
    // (x - 2)(x + 3/2) = x^2 - x/2 - 3
    std::vector<Rational> poly{Rational(1), Rational(-1, 2), Rational(-3)};
    auto roots = field_roots(poly);
    REQUIRE(roots.size() == 2);
    CHECK(roots[0] == Rational(-3, 2));
    CHECK(roots[1] == Rational(2));

    // x^2 + 1 has no rational roots
    CHECK(field_roots(std::vector<Rational>{Rational(1), Rational(0), Rational(1)}).empty());

    // x^3 - x^2: roots 0 and 1
    auto r2 = field_roots(std::vector<Rational>{Rational(1), Rational(-1), Rational(0), Rational(0)});
    REQUIRE(r2.size() == 2);
    CHECK(r2[0] == Rational(0));
    CHECK(r2[1] == Rational(1));
}

TEST_CASE("prime field roots by residue scan") {
    FpScope field(5);
    // x^2 + 1 = (x - 2)(x - 3) mod 5
    auto roots = field_roots(std::vector<Fp>{Fp(1), Fp(0), Fp(1)});
    REQUIRE(roots.size() == 2);
    CHECK(roots[0] == Fp(2));
    CHECK(roots[1] == Fp(3));
}
