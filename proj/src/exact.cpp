#include "takacs/exact.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>

namespace takacs {

namespace mp = boost::multiprecision;

SignedCount::SignedCount(int s, Natural mag) : sign(s), magnitude(std::move(mag)) {
    if (sign != 1 && sign != -1) {
        throw std::invalid_argument("SignedCount: sign must be +1 or -1");
    }
    if (magnitude < 0) {
        throw std::invalid_argument("SignedCount: magnitude must be nonnegative");
    }
    if (magnitude == 0) {
        sign = +1;
    }
}

SignedCount SignedCount::from_integer(const Natural& magnitude, bool negative) {
    return SignedCount(negative ? -1 : +1, magnitude);
}

mp::cpp_int SignedCount::as_integer() const {
    return sign < 0 ? mp::cpp_int(-magnitude) : magnitude;
}

SignedCount& SignedCount::operator+=(const SignedCount& other) {
    *this = signed_from(as_integer() + other.as_integer());
    return *this;
}

std::string SignedCount::str() const {
    return (sign < 0 ? "-" : "") + magnitude.str();
}

SignedCount signed_from(const mp::cpp_int& v) {
    return v < 0 ? SignedCount(-1, -v) : SignedCount(+1, v);
}

Natural factorial(unsigned n) {
    Natural r = 1;
    for (unsigned i = 2; i <= n; ++i) {
        r *= i;
    }
    return r;
}

Natural double_factorial_odd(unsigned j) {
    Natural r = 1;
    for (unsigned i = 1; i <= j; ++i) {
        r *= 2 * i - 1;
    }
    return r;
}

Natural binomial(unsigned n, unsigned k) {
    if (k > n) {
        return 0;
    }
    if (k > n - k) {
        k = n - k;
    }
    Natural r = 1;
    for (unsigned i = 0; i < k; ++i) {
        r *= n - i;
        r /= i + 1;  // exact: r is always an integer binomial prefix
    }
    return r;
}

Natural matching_selection_count(unsigned n, unsigned j) {
    if (2u * j > n) {
        throw std::domain_error("matching_selection_count: 2j exceeds n");
    }
    return binomial(n, 2 * j) * double_factorial_odd(j);
}

Natural rooted_forest_count_specified_roots(unsigned m, unsigned k) {
    if (k == 0 || k > m) {
        throw std::domain_error("rooted_forest_count_specified_roots: need 1 <= k <= m");
    }
    if (k == m) {
        return 1;  // edgeless forest; resolves the exponent -1 case analytically
    }
    return Natural(k) * mp::pow(Natural(m), m - k - 1);
}

Natural cayley_rooted_forest_count(unsigned n) {
    if (n == 0) {
        throw std::domain_error("cayley_rooted_forest_count: n must be >= 1");
    }
    return mp::pow(Natural(n + 1), n - 1);
}

SignedCount takacs_term(unsigned n, unsigned j) {
    if (2u * j > n) {
        throw std::domain_error("takacs_term: 2j exceeds n");
    }
    Natural magnitude = matching_selection_count(n, j) *
                        rooted_forest_count_specified_roots(n + 1, 2 * j + 1);
    return SignedCount::from_integer(magnitude, j % 2 == 1);
}

Natural takacs_count(unsigned n) {
    mp::cpp_int sum = 0;
    for (unsigned j = 0; 2 * j <= n; ++j) {
        sum += takacs_term(n, j).as_integer();
    }
    if (sum < 0) {
        throw std::logic_error("takacs_count: alternating sum came out negative");
    }
    return Natural(sum);
}

Natural takacs_count_eq1(unsigned n) {
    if (n == 0) {
        throw std::domain_error("takacs_count_eq1: n must be >= 1");
    }
    ExactRational sum = 0;
    for (unsigned j = 0; 2 * j <= n; ++j) {
        ExactRational term(Natural(2 * j + 1) * mp::pow(Natural(n + 1), n - 2 * j),
                           mp::pow(Natural(2), j) * factorial(j) * factorial(n - 2 * j));
        sum += (j % 2 == 0) ? term : -term;
    }
    ExactRational total = ExactRational(factorial(n), Natural(n + 1)) * sum;
    if (mp::denominator(total) != 1) {
        throw std::logic_error("takacs_count_eq1: result is not an integer");
    }
    Natural value = mp::numerator(total);
    if (value != takacs_count(n)) {
        throw std::logic_error("takacs_count_eq1: disagrees with the term-sum form");
    }
    return value;
}

}  // namespace takacs
