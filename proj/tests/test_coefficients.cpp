#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "monic/bigint.hpp"
#include "monic/padic.hpp"
#include "monic/rng.hpp"

using namespace monic;

TEST_CASE("rational canonical form") {
    CHECK(Rational(6, 4).str() == "3/2");
    CHECK(Rational(-6, 4).str() == "-3/2");
    CHECK(Rational(6, -4).str() == "-3/2");
    CHECK(Rational(0, 7).str() == "0");
    CHECK(Rational(0, 7).den() == 1);
    CHECK(Rational(4, 2).is_integer());
    CHECK_THROWS_AS(Rational(1, 0), Error);
}

TEST_CASE("rational parse and print round-trip") {
    for (const char* s : {"0", "1", "-1", "3/2", "-3/2", "7", "22/7"}) {
        CHECK(Rational::parse(s).str() == s);
    }
    CHECK(Rational::parse("4/2").str() == "2");
    CHECK_THROWS_AS(Rational::parse(""), Error);
    CHECK_THROWS_AS(Rational::parse("1/0"), Error);
    CHECK_THROWS_AS(Rational::parse("a/2"), Error);
    CHECK_THROWS_AS(Rational::parse("1/2/3"), Error);
    CHECK_THROWS_AS(Rational::parse("1.5"), Error);
}

TEST_CASE("rational field ops") {
    Rational a(3, 2), b(-1, 3);
    CHECK((a * b).str() == "-1/2");
    CHECK((a + b).str() == "7/6");
    CHECK((a - a).is_zero());
    CHECK(a.inverse().str() == "2/3");
    CHECK((a / b).str() == "-9/2");
    CHECK_THROWS_AS(Rational(0).inverse(), Error);
}

TEST_CASE("primality check at config construction") {
    for (long p : {2, 3, 5, 7, 11, 97}) CHECK_NOTHROW(PadicValuation(p));
    for (long p : {-3, 0, 1, 4, 6, 9, 91}) CHECK_THROWS_AS(PadicValuation(p), Error);
}

TEST_CASE("v_p examples") {
    PadicValuation v3(3);
    CHECK(v3.v(Rational(0)).is_infinity());       // v(a) = Infinity iff a = 0
    CHECK(v3.v(Rational(6)).finite_value() == 1);  // 6 = 2 * 3^1
    CHECK(v3.v(Rational(1, 2)).finite_value() == 0);
    CHECK(v3.v(Rational(1, 9)).finite_value() == -2);
    CHECK(v3.v(Rational(18, 5)).finite_value() == 2);
}

TEST_CASE("in_Ov / in_mv examples") {
    PadicValuation v3(3);
    CHECK(v3.in_Ov(Rational(1, 2)));
    CHECK_FALSE(v3.in_mv(Rational(1, 2)));
    CHECK(v3.in_Ov(Rational(3, 4)));
    CHECK(v3.in_mv(Rational(3, 4)));
    CHECK(v3.in_Ov(Rational(0)));
    CHECK(v3.in_mv(Rational(0)));
    CHECK_FALSE(v3.in_Ov(Rational(1, 3)));
}

TEST_CASE("residue examples") {
    PadicValuation v3(3);
    CHECK(v3.residue(Rational(1, 2)).value() == 2);  // 2^-1 = 2 mod 3
    CHECK(v3.residue(Rational(3)).value() == 0);
    PadicValuation v5(5);
    CHECK(v5.residue(Rational(7, 3)).value() == 4);  // 7 * 3^-1 = 7 * 2 = 14 = 4 mod 5
    CHECK_THROWS_AS(v3.residue(Rational(1, 3)), HypothesisError);
}

static Rational random_nonzero_rational(SeededRng& rng, std::int64_t p) {
    std::int64_t e = rng.uniform(-3, 3);
    std::int64_t num = rng.uniform(1, 40);
    std::int64_t den = rng.uniform(1, 40);
    Rational r(static_cast<long>(num), static_cast<long>(den));
    Rational pe(1);
    for (std::int64_t i = 0; i < (e < 0 ? -e : e); ++i)
        pe = e < 0 ? pe / Rational(static_cast<long>(p)) : pe * Rational(static_cast<long>(p));
    r = r * pe;
    return rng.coin() ? -r : r;
}

TEST_CASE("valuation axioms on random rationals") {
    for (std::int64_t p : {2, 3, 5, 7}) {
        PadicValuation val(p);
        SeededRng rng(1000 + static_cast<std::uint64_t>(p));
        for (int i = 0; i < 200; ++i) {
            Rational x = random_nonzero_rational(rng, p);
            Rational y = random_nonzero_rational(rng, p);
            // V2: v(xy) = v(x) + v(y)
            CHECK(val.v(x * y) == val.v(x) + val.v(y));
            // V3 with the equality case
            ValuationValue vs = val.v(x + y);
            CHECK(vs >= min(val.v(x), val.v(y)));
            if (val.v(x) != val.v(y)) CHECK(vs == min(val.v(x), val.v(y)));
            // absorption at zero
            CHECK(val.v(x * Rational(0)).is_infinity());
        }
    }
}

TEST_CASE("residue is a ring homomorphism on O_v") {
    for (std::int64_t p : {2, 3, 5}) {
        PadicValuation val(p);
        SeededRng rng(2000 + static_cast<std::uint64_t>(p));
        int done = 0;
        while (done < 200) {
            Rational x = random_nonzero_rational(rng, p);
            Rational y = random_nonzero_rational(rng, p);
            if (!val.in_Ov(x) || !val.in_Ov(y)) continue;
            ++done;
            CHECK(val.residue(x + y) == val.residue(x) + val.residue(y));
            CHECK(val.residue(x * y) == val.residue(x) * val.residue(y));
            // in_mv <=> in_Ov and residue zero
            CHECK(val.in_mv(x) == val.residue(x).is_zero());
        }
    }
}

TEST_CASE("Fp field arithmetic") {
    Fp a(4, 7), b(5, 7);
    CHECK((a + b).value() == 2);
    CHECK((a - b).value() == 6);
    CHECK((a * b).value() == 6);
    CHECK((-a).value() == 3);
    CHECK(a.inverse().value() == 2);  // 4*2 = 8 = 1 mod 7
    CHECK((a / a).is_one());
    CHECK(Fp(-1, 7).value() == 6);
    CHECK_THROWS_AS(Fp(0, 7).inverse(), Error);
    CHECK_THROWS_AS(Fp(1, 7) + Fp(1, 5), Error);
}

TEST_CASE("BigInt units") {
    CHECK(BigInt(1).is_unit());
    CHECK(BigInt(-1).is_unit());
    CHECK_FALSE(BigInt(2).is_unit());
    CHECK_THROWS_AS(BigInt(2).inverse(), Error);
    CHECK((BigInt(-1) * BigInt(-1)).is_one());
}

TEST_CASE("valuation value conventions") {
    auto inf = ValuationValue::infinity();
    auto ninf = ValuationValue::neg_infinity();
    auto two = ValuationValue::finite(2);
    CHECK(two < inf);
    CHECK(ninf < two);
    CHECK(inf + two == inf);
    CHECK(inf + inf == inf);
    CHECK((inf - inf) == ValuationValue::finite(0));
    CHECK(inf - two == inf);
    CHECK((two + ValuationValue::finite(-5)).finite_value() == -3);
    CHECK_THROWS_AS(inf + ninf, Error);
    CHECK(min(two, inf) == two);
    CHECK(inf.str() == "Infinity");
    CHECK(ninf.str() == "-Infinity");
}
