#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace takacs {

// Arbitrary-precision nonnegative count. Negative values never appear in a
// Natural-returning operation; preconditions are enforced with exceptions.
using Natural = boost::multiprecision::cpp_int;
using ExactRational = boost::multiprecision::cpp_rational;

// Signed count with canonical zero: magnitude 0 forces sign +1.
struct SignedCount {
    int sign{+1};
    Natural magnitude{0};

    SignedCount() = default;
    SignedCount(int s, Natural mag);

    static SignedCount from_integer(const Natural& value_signed_ok, bool negative);

    Natural as_integer_magnitude() const { return magnitude; }
    boost::multiprecision::cpp_int as_integer() const;

    SignedCount& operator+=(const SignedCount& other);
    bool operator==(const SignedCount&) const = default;

    std::string str() const;
};

SignedCount signed_from(const boost::multiprecision::cpp_int& v);

Natural factorial(unsigned n);

// (2j-1)!! = 1*3*5*...*(2j-1), the number of perfect matchings on 2j elements.
Natural double_factorial_odd(unsigned j);

Natural binomial(unsigned n, unsigned k);

// Ways to choose 2j elements of [n] and perfectly match them: C(n,2j)*(2j-1)!!.
Natural matching_selection_count(unsigned n, unsigned j);

// Forests on m labeled vertices rooted at a specified set of k roots:
// k*m^(m-k-1), with the all-roots case k = m equal to 1 (edgeless forest).
Natural rooted_forest_count_specified_roots(unsigned m, unsigned k);

// Rooted forests on [n]: (n+1)^(n-1).
Natural cayley_rooted_forest_count(unsigned n);

// Signed term of the alternating sum: (-1)^j * A * B with
// A = matching_selection_count(n, j), B = rooted_forest_count_specified_roots(n+1, 2j+1).
SignedCount takacs_term(unsigned n, unsigned j);

// Number of forests of unrooted trees on [n], by the alternating sum of terms.
Natural takacs_count(unsigned n);

// Same count evaluated through the original rational form
// n!/(n+1) * sum_j (-1)^j (2j+1)(n+1)^(n-2j) / (2^j j! (n-2j)!).
// Checks integrality and agreement with takacs_count.
Natural takacs_count_eq1(unsigned n);

}  // namespace takacs
