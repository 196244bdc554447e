#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace hyptor {

// Exact rational scalar. Weights, root pairings and series coefficients in
// "exact mode" are kept in this type and converted to double only at the
// final evaluation step.
using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

inline double to_double(const Rational& q) { return q.convert_to<double>(); }

inline BigInt factorial(unsigned n) {
    BigInt r = 1;
    for (unsigned k = 2; k <= n; ++k) r *= k;
    return r;
}

// (n)!! with the convention (-1)!! = 1.
inline BigInt double_factorial(int n) {
    BigInt r = 1;
    for (int k = n; k >= 2; k -= 2) r *= k;
    return r;
}

inline BigInt binomial(unsigned n, unsigned k) {
    if (k > n) return 0;
    BigInt r = 1;
    for (unsigned i = 0; i < k; ++i) {
        r *= (n - i);
        r /= (i + 1);
    }
    return r;
}

inline Rational pow_rational(const Rational& base, int e) {
    if (e < 0) {
        if (base == 0) throw std::domain_error("pow_rational: zero to negative power");
        return Rational(1) / pow_rational(base, -e);
    }
    Rational r = 1, b = base;
    int n = e;
    while (n > 0) {
        if (n & 1) r *= b;
        b *= b;
        n >>= 1;
    }
    return r;
}

// Parses "p", "p/q" or a decimal that is an exact multiple of 1/2 ("1.5").
Rational parse_rational(const std::string& text);

// Canonical text form: "p" for integers, "p/q" otherwise.
std::string rational_to_string(const Rational& q);

// Exact conversion from double; throws if the value is not representable as
// num/2^k with small k (weights are integers or half-integers).
Rational rational_from_half_integer(double value);

}  // namespace hyptor
