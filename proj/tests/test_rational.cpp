#include "doctest.h"

#include "broadexp/rational.hpp"

#include <random>
#include <stdexcept>

using broadexp::Rational;
using broadexp::decimal_str;

TEST_CASE("rationals are stored in canonical form") {
    CHECK(Rational(2, 4).str() == "1/2");
    CHECK(Rational(-2, 4).str() == "-1/2");
    CHECK(Rational(2, -4).str() == "-1/2");
    CHECK(Rational(-2, -4).str() == "1/2");
    CHECK(Rational(0, 7).str() == "0");
    CHECK(Rational(6, 3).str() == "2");
    CHECK(Rational(6, 3).is_integer());
    CHECK_FALSE(Rational(1, 3).is_integer());
    CHECK(Rational(7, 21).num() == 1);
    CHECK(Rational(7, 21).den() == 3);
}

TEST_CASE("zero denominators are rejected") {
    CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
    CHECK_THROWS_AS(Rational(0, 0), std::domain_error);
    CHECK_THROWS_AS(Rational(1, 2) / Rational(0), std::domain_error);
    CHECK_THROWS_AS(Rational(0).inverse(), std::domain_error);
}

TEST_CASE("basic arithmetic and comparisons") {
    Rational a(1, 3), b(1, 6);
    CHECK(a + b == Rational(1, 2));
    CHECK(a - b == Rational(1, 6));
    CHECK(a * b == Rational(1, 18));
    CHECK(a / b == Rational(2));
    CHECK(a > b);
    CHECK(-a < b);
    CHECK(Rational(-5, 3).abs() == Rational(5, 3));
    CHECK(Rational(-5, 3).sign() == -1);
    CHECK(Rational(0).sign() == 0);
    CHECK(Rational(2, 7).inverse() == Rational(7, 2));
    CHECK(Rational(1, 2).to_double() == doctest::Approx(0.5));
}

TEST_CASE("field axioms hold on randomized inputs") {
    std::mt19937 rng(20240817u);
    std::uniform_int_distribution<long> num(-999, 999);
    std::uniform_int_distribution<long> den(1, 999);
    auto draw = [&] { return Rational(num(rng), den(rng)); };
    for (int trial = 0; trial < 400; ++trial) {
        Rational a = draw(), b = draw(), c = draw();
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + Rational(0) == a);
        CHECK(a * Rational(1) == a);
        CHECK(a - a == Rational(0));
        if (!b.is_zero()) CHECK(a / b * b == a);
        if (!a.is_zero()) CHECK(a * a.inverse() == Rational(1));
    }
}

TEST_CASE("string parsing round-trips") {
    CHECK(Rational::from_string("263/100") == Rational(263, 100));
    CHECK(Rational::from_string("-5") == Rational(-5));
    CHECK(Rational::from_string("6/4") == Rational(3, 2));
    CHECK_THROWS_AS(Rational::from_string("abc"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::from_string("1/0"), std::domain_error);
    Rational big = Rational::from_string("123456789123456789/987654321987654321");
    CHECK(big == Rational(mpz_class("123456789123456789"), mpz_class("987654321987654321")));
}

TEST_CASE("mixed-number display") {
    CHECK(Rational(263, 100).mixed_str() == "2 + 63/100");
    CHECK(Rational(4).mixed_str() == "4");
    CHECK(Rational(5, 4).mixed_str() == "1 + 1/4");
    CHECK(Rational(3, 4).mixed_str() == "3/4");
    CHECK(Rational(0).mixed_str() == "0");
    CHECK(Rational(-263, 100).mixed_str() == "-(2 + 63/100)");
}

TEST_CASE("directed decimal rendering") {
    Rational third(1, 3);
    CHECK(decimal_str(third, 4, -1) == "0.3333");
    CHECK(decimal_str(third, 4, +1) == "0.3334");
    CHECK(decimal_str(Rational(-1, 3), 2, -1) == "-0.34");
    CHECK(decimal_str(Rational(-1, 3), 2, +1) == "-0.33");
    CHECK(decimal_str(Rational(1, 2), 3, 0) == "0.500");
    CHECK(decimal_str(Rational(2, 3), 3, 0) == "0.667");
    CHECK(decimal_str(Rational(5), 2, 0) == "5.00");
    CHECK(decimal_str(Rational(263, 100), 5, 0) == "2.63000");
}

TEST_CASE("directed rendering brackets the exact value") {
    std::mt19937 rng(7u);
    std::uniform_int_distribution<long> num(-5000, 5000);
    std::uniform_int_distribution<long> den(1, 5000);
    for (int trial = 0; trial < 100; ++trial) {
        Rational q(num(rng), den(rng));
        Rational lo = Rational::from_string([&] {
            std::string s = decimal_str(q, 6, -1);
            // convert "x.yyyyyy" to a fraction over 10^6
            auto dot = s.find('.');
            REQUIRE(dot != std::string::npos);
            s.erase(dot, 1);
            return s + "/1000000";
        }());
        Rational hi = Rational::from_string([&] {
            std::string s = decimal_str(q, 6, +1);
            auto dot = s.find('.');
            REQUIRE(dot != std::string::npos);
            s.erase(dot, 1);
            return s + "/1000000";
        }());
        CHECK(lo <= q);
        CHECK(q <= hi);
        CHECK(hi - lo <= Rational(1, 1000000));
    }
}
