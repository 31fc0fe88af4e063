#include "doctest.h"

#include "broadexp/broad.hpp"

#include <stdexcept>

using namespace broadexp;

TEST_CASE("dyadic product at small anchors") {
    CHECK(dyadic_product(2, 3) == Rational(4, 5));
    CHECK(dyadic_product(3, 5) == Rational(16, 21));  // (6/7)(8/9) = 48/63
    CHECK(dyadic_product(2, 5) == Rational(64, 105));
    CHECK(dyadic_product(5, 5) == Rational(1));       // empty product
    CHECK(dyadic_product(2, 2) == Rational(1));
}

TEST_CASE("direct product agrees with the factorial closed form") {
    for (int n = 2; n <= 60; ++n)
        for (int k = 2; k <= n; ++k)
            CHECK(dyadic_product(k, n) == dyadic_product_factorial(k, n));
}

TEST_CASE("unreduced parts reduce to the product") {
    for (int n = 2; n <= 40; ++n)
        for (int k = 2; k <= n; ++k) {
            auto [num, den] = detail::dyadic_product_parts(k, n);
            CHECK(Rational(num, den) == dyadic_product(k, n));
        }
}

TEST_CASE("factorial and range-product helpers") {
    CHECK(detail::factorial(0) == 1);
    CHECK(detail::factorial(5) == 120);
    CHECK(detail::factorial(20) == mpz_class("2432902008176640000"));
    CHECK(detail::prod_range(1, 10) == detail::factorial(10));
    CHECK(detail::prod_range(4, 3) == 1);
    CHECK(detail::prod_odd_range(1, 3) == 3 * 5 * 7);
    CHECK(detail::prod_odd_range(2, 1) == 1);
}

TEST_CASE("broad exponent anchors") {
    BroadExponent b = p_broad(5, 3);
    CHECK(b.product == Rational(16, 21));
    CHECK(b.p == Rational(263, 100));
    CHECK(b.p.mixed_str() == "2 + 63/100");
    CHECK(b.lower_ok);
    CHECK(b.upper_ok);
    CHECK_FALSE(b.k_at_boundary);

    CHECK(p_broad(3, 2).p == Rational(13, 4));
    CHECK(p_broad(2, 2).p == Rational(4));
    CHECK(p_broad(2, 2).k_at_boundary);
}

TEST_CASE("k = n - 1 collapses to the two-term closed form") {
    // product = 2(n-1)/(2n-1), so p = 2 + (2n-1)/(n-1)^2.
    for (int n = 3; n <= 50; ++n) {
        Rational expect = Rational(2) + Rational(2L * n - 1, (long)(n - 1) * (n - 1));
        CHECK(p_broad(n, n - 1).p == expect);
    }
}

TEST_CASE("p_broad is strictly decreasing in k") {
    for (int n = 3; n <= 60; ++n) {
        Rational prev = p_broad(n, 2).p;
        for (int k = 3; k <= n; ++k) {
            Rational cur = p_broad(n, k).p;
            CHECK(cur < prev);
            prev = cur;
        }
    }
}

TEST_CASE("telescoping chain inequality") {
    for (long i = 1; i <= 2000; ++i) CHECK(chain_inequality_check(i));
    CHECK_THROWS_AS(chain_inequality_check(0), std::domain_error);
}

TEST_CASE("appendix product bounds certify on a grid") {
    for (int n = 3; n <= 80; ++n)
        for (int k = 2; k < n; ++k) {
            auto [lo, hi] = appendix_product_bounds(n, k);
            CHECK(lo);
            CHECK(hi);
        }
    // The bound statement needs k <= n-1; the boundary is rejected.
    CHECK_THROWS_AS(appendix_product_bounds(5, 5), std::domain_error);
}

TEST_CASE("preconditions are enforced") {
    CHECK_THROWS_AS(dyadic_product(1, 5), std::domain_error);
    CHECK_THROWS_AS(dyadic_product(6, 5), std::domain_error);
    CHECK_THROWS_AS(p_broad(5, 1), std::domain_error);
    CHECK_THROWS_AS(p_broad(4, 5), std::domain_error);
    CHECK_THROWS_AS(p_broad(1, 1), std::domain_error);
}
