#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>
#include <cstdint>
#include <cstdlib>
#include <numbers>

#include "tml/coeff.hpp"
#include "tml/errors.hpp"
#include "tml/rational.hpp"
#include "tml/rng.hpp"

using namespace tml;

TEST_CASE("pow3 exact values and range guard") {
    CHECK(pow3(0) == 1);
    CHECK(pow3(1) == 3);
    CHECK(pow3(4) == 81);
    CHECK(pow3(kMaxPow3) == INT64_C(4052555153018976267));
    CHECK_THROWS_AS(pow3(kMaxPow3 + 1), DomainError);
    CHECK_THROWS_AS(pow3(-1), DomainError);
    // The big-integer variant keeps going past the int64 ceiling.
    CHECK(pow3_big(40).get_str() == "12157665459056928801");
    CHECK(pow3_big(0) == 1);
    for (int k = 0; k <= kMaxPow3; ++k) {
        CHECK(pow3_big(k) == Integer(static_cast<long>(1)) * pow3(k));
    }
}

TEST_CASE("make_rational reduces and rejects zero denominators") {
    CHECK(make_rational(2, 4) == make_rational(1, 2));
    CHECK(format_rational(make_rational(2, 4)) == "1/2");
    CHECK(format_rational(make_rational(-6, 3)) == "-2");
    CHECK(format_rational(make_rational(0, 7)) == "0");
    CHECK_THROWS_AS(make_rational(1, 0), DomainError);
}

TEST_CASE("parse_rational and format_rational round-trip") {
    CHECK(parse_rational("5") == make_rational(5));
    CHECK(parse_rational("-3/9") == make_rational(-1, 3));
    CHECK(parse_rational("0/17") == make_rational(0));
    CHECK_THROWS_AS(parse_rational(""), DomainError);
    CHECK_THROWS_AS(parse_rational("a/b"), DomainError);
    CHECK_THROWS_AS(parse_rational("1/"), DomainError);
    CHECK_THROWS_AS(parse_rational("1/0"), DomainError);

    Rng rng(2026);
    for (int i = 0; i < 200; ++i) {
        Rational r = make_rational(rng.uniform(-1000000, 1000000), rng.uniform(1, 999983));
        CHECK(parse_rational(format_rational(r)) == r);
    }
}

TEST_CASE("floor_div matches mathematical floor on all sign combinations") {
    CHECK(floor_div(7, 3) == 2);
    CHECK(floor_div(-7, 3) == -3);
    CHECK(floor_div(7, -3) == -3);
    CHECK(floor_div(-7, -3) == 2);
    CHECK(floor_div(6, 3) == 2);
    CHECK(floor_div(-6, 3) == -2);
    CHECK(floor_div(0, 5) == 0);
    Rng rng(99);
    for (int i = 0; i < 500; ++i) {
        std::int64_t a = rng.uniform(-100000, 100000);
        std::int64_t b = rng.uniform(1, 500) * (rng.uniform(0, 1) ? 1 : -1);
        std::int64_t q = floor_div(a, b);
        std::int64_t r = a - q * b;  // remainder shares the divisor's sign
        if (b > 0) {
            CHECK(r >= 0);
            CHECK(r < b);
        } else {
            CHECK(r <= 0);
            CHECK(r > b);
        }
    }
}

TEST_CASE("Coeff exact arithmetic stays exact") {
    Coeff a = Coeff::exact(make_rational(1, 2), make_rational(-1, 3));
    Coeff b = Coeff::exact(make_rational(1, 6), make_rational(1, 3));
    Coeff s = a + b;
    REQUIRE(s.is_exact());
    CHECK(s.re_rat() == make_rational(2, 3));
    CHECK(s.im_rat() == make_rational(0));

    Coeff p = a * b;
    REQUIRE(p.is_exact());
    // (1/2 - i/3)(1/6 + i/3) = 1/12 + 1/9 + i(1/6 - 1/18) = 7/36 + i/9
    CHECK(p.re_rat() == make_rational(7, 36));
    CHECK(p.im_rat() == make_rational(1, 9));

    CHECK((-a).re_rat() == make_rational(-1, 2));
    CHECK(a.conj().im_rat() == make_rational(1, 3));
    CHECK((a - a).is_zero());
}

TEST_CASE("Coeff two-pi exponent bookkeeping") {
    Coeff c = Coeff::exact(make_rational(1, 2), make_rational(0), 1);
    CHECK(c.twopi_exp() == 1);
    CHECK(c.to_complex().real() == doctest::Approx(std::numbers::pi).epsilon(1e-15));

    // Multiplying exact values adds the exponents.
    Coeff q = c * c;
    REQUIRE(q.is_exact());
    CHECK(q.twopi_exp() == 2);
    CHECK(q.re_rat() == make_rational(1, 4));

    // Adding values with different exponents degrades to approx but keeps
    // the numerical value.
    Coeff mixed = c + Coeff::exact(make_rational(1));
    CHECK_FALSE(mixed.is_exact());
    CHECK(mixed.to_complex().real() ==
          doctest::Approx(std::numbers::pi + 1.0).epsilon(1e-15));

    // times_i_times / div_i_times are inverse, exactly.
    Coeff d = c.times_i_times(7, 1);
    REQUIRE(d.is_exact());
    CHECK(d.twopi_exp() == 2);
    CHECK(d.im_rat() == make_rational(7, 2));
    Coeff back = d.div_i_times(7, 1);
    REQUIRE(back.is_exact());
    CHECK(back == c);
    CHECK_THROWS_AS(c.div_i_times(0, 1), DomainError);
}

TEST_CASE("Coeff abs2_exact available only at exponent zero") {
    Coeff c = Coeff::exact(make_rational(3, 5), make_rational(4, 5));
    auto a2 = c.abs2_exact();
    REQUIRE(a2.has_value());
    CHECK(*a2 == make_rational(1));
    CHECK(c.abs() == doctest::Approx(1.0).epsilon(1e-15));

    Coeff with_e = Coeff::exact(make_rational(1), make_rational(0), 1);
    CHECK_FALSE(with_e.abs2_exact().has_value());
    CHECK_FALSE(Coeff::approx({1.0, 0.0}).abs2_exact().has_value());
}

TEST_CASE("Coeff serialization strings") {
    Coeff c = Coeff::exact(make_rational(-1, 3), make_rational(2, 7));
    CHECK(c.re_string() == "-1/3");
    CHECK(c.im_string() == "2/7");

    CoeffParts parts = parse_coeff_part("-1/3");
    CHECK(parts.exact);
    CHECK(parts.rat == make_rational(-1, 3));
    CoeffParts fp = parse_coeff_part("0.25");
    CHECK_FALSE(fp.exact);
    CHECK(fp.val == 0.25);
    CHECK_THROWS_AS(parse_coeff_part("zzz"), DomainError);
}

TEST_CASE("format_double is deterministic and round-trip safe") {
    CHECK(format_double(0.1) == "0.10000000000000001");
    CHECK(format_double(24.0) == "24");
    CHECK(format_double(1.0 / 3.0) == "0.33333333333333331");
    Rng rng(5);
    for (int i = 0; i < 300; ++i) {
        double x = (rng.uniform_real() - 0.5) * std::pow(10.0, rng.uniform(-12, 12));
        std::string s = format_double(x);
        CHECK(std::strtod(s.c_str(), nullptr) == x);
        CHECK(format_double(x) == s);
    }
}

TEST_CASE("Rng determinism, ranges, and stream derivation") {
    Rng a(7), b(7);
    for (int i = 0; i < 100; ++i) CHECK(a.uniform(0, 1000) == b.uniform(0, 1000));

    Rng c(7);
    bool lo_hit = false, hi_hit = false;
    for (int i = 0; i < 2000; ++i) {
        std::int64_t v = c.uniform(3, 5);
        CHECK(v >= 3);
        CHECK(v <= 5);
        lo_hit = lo_hit || v == 3;
        hi_hit = hi_hit || v == 5;
    }
    CHECK(lo_hit);
    CHECK(hi_hit);
    CHECK_THROWS_AS(c.uniform(5, 3), DomainError);

    for (int i = 0; i < 1000; ++i) {
        double u = c.uniform_real();
        CHECK(u >= 0.0);
        CHECK(u < 1.0);
    }

    CHECK(Rng::derive(7, "corpus/2/3") == Rng::derive(7, "corpus/2/3"));
    CHECK(Rng::derive(7, "corpus/2/3") != Rng::derive(7, "corpus/2/4"));
    CHECK(Rng::derive(7, "a") != Rng::derive(8, "a"));
}
