#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "takacs/exact.hpp"

#include <stdexcept>

using namespace takacs;

TEST_CASE("factorial") {
    CHECK(factorial(0) == 1);
    CHECK(factorial(1) == 1);
    CHECK(factorial(5) == 120);
}

TEST_CASE("double factorial of odd numbers") {
    CHECK(double_factorial_odd(0) == 1);
    CHECK(double_factorial_odd(1) == 1);
    CHECK(double_factorial_odd(3) == 15);
}

TEST_CASE("binomial") {
    for (unsigned n = 0; n <= 10; ++n) {
        CHECK(binomial(n, 0) == 1);
    }
    CHECK(binomial(4, 2) == 6);
    CHECK(binomial(2, 3) == 0);
}

TEST_CASE("matching selection count") {
    CHECK(matching_selection_count(5, 0) == 1);
    CHECK(matching_selection_count(4, 1) == 6);
    CHECK(matching_selection_count(4, 2) == 3);
    CHECK_THROWS_AS(matching_selection_count(3, 2), std::domain_error);
}

TEST_CASE("matching selection count brute force") {
    // Count matched-pair selections from [n] directly: choose 2j elements in
    // every way and multiply matchings recursively.
    auto matchings = [](auto&& self, int size) -> unsigned {
        return size <= 0 ? 1u : (size - 1) * self(self, size - 2);
    };
    auto subsets_of_size = [](int n, int k) {
        unsigned count = 0;
        for (unsigned mask = 0; mask < (1u << n); ++mask) {
            if (__builtin_popcount(mask) == k) {
                ++count;
            }
        }
        return count;
    };
    for (int n = 0; n <= 8; ++n) {
        for (int j = 0; 2 * j <= n; ++j) {
            unsigned expected = subsets_of_size(n, 2 * j) * matchings(matchings, 2 * j);
            CHECK(matching_selection_count(n, j) == expected);
        }
    }
}

TEST_CASE("rooted forest count with specified roots") {
    CHECK(rooted_forest_count_specified_roots(4, 4) == 1);
    CHECK(rooted_forest_count_specified_roots(4, 1) == 16);
    CHECK(rooted_forest_count_specified_roots(4, 2) == 8);
    CHECK_THROWS_AS(rooted_forest_count_specified_roots(4, 0), std::domain_error);
    CHECK_THROWS_AS(rooted_forest_count_specified_roots(4, 5), std::domain_error);
}

TEST_CASE("cayley rooted forest count") {
    CHECK(cayley_rooted_forest_count(1) == 1);
    CHECK(cayley_rooted_forest_count(2) == 3);
    CHECK(cayley_rooted_forest_count(3) == 16);
    CHECK_THROWS_AS(cayley_rooted_forest_count(0), std::domain_error);
}

TEST_CASE("alternating sum terms") {
    CHECK(takacs_term(2, 0) == SignedCount(+1, 3));
    CHECK(takacs_term(2, 1) == SignedCount(-1, 1));
    CHECK(takacs_term(3, 1) == SignedCount(-1, 9));
    CHECK_THROWS_AS(takacs_term(3, 2), std::domain_error);
}

TEST_CASE("forest counts") {
    CHECK(takacs_count(0) == 1);
    CHECK(takacs_count(1) == 1);
    CHECK(takacs_count(3) == 7);
    CHECK(takacs_count(4) == 38);
}

TEST_CASE("rational form of the count") {
    CHECK(takacs_count_eq1(1) == 1);
    CHECK(takacs_count_eq1(2) == 2);
    CHECK(takacs_count_eq1(5) == 291);
    CHECK_THROWS_AS(takacs_count_eq1(0), std::domain_error);
}

TEST_CASE("rational and term forms agree") {
    for (unsigned n = 1; n <= 60; ++n) {
        CHECK(takacs_count_eq1(n) == takacs_count(n));
    }
}

TEST_CASE("factor A identity linking both sum forms") {
    // C(n,2j)(2j-1)!! * 2^j * j! = n!/(n-2j)!
    for (unsigned n = 0; n <= 20; ++n) {
        for (unsigned j = 0; 2 * j <= n; ++j) {
            Natural lhs = matching_selection_count(n, j) *
                          boost::multiprecision::pow(Natural(2), j) * factorial(j);
            CHECK(lhs * factorial(n - 2 * j) == factorial(n));
        }
    }
}

TEST_CASE("signed count canonical zero") {
    CHECK(SignedCount(-1, 0).sign == +1);
    SignedCount s(+1, 5);
    s += SignedCount(-1, 7);
    CHECK(s == SignedCount(-1, 2));
    s += SignedCount(+1, 2);
    CHECK(s == SignedCount(+1, 0));
    CHECK(s.sign == +1);
    CHECK(SignedCount(-1, 3).str() == "-3");
    CHECK_THROWS_AS(SignedCount(0, 3), std::invalid_argument);
}
