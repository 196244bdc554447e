#include "hyptor/rational.hpp"

#include <cmath>

namespace hyptor {

Rational parse_rational(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("parse_rational: empty string");
    auto slash = text.find('/');
    if (slash != std::string::npos) {
        BigInt num(text.substr(0, slash));
        BigInt den(text.substr(slash + 1));
        if (den == 0) throw std::invalid_argument("parse_rational: zero denominator");
        return Rational(num, den);
    }
    auto dot = text.find('.');
    if (dot != std::string::npos) {
        std::string digits = text.substr(0, dot) + text.substr(dot + 1);
        size_t frac_len = text.size() - dot - 1;
        if (frac_len == 0) return Rational(BigInt(text.substr(0, dot)));
        BigInt den = 1;
        for (size_t i = 0; i < frac_len; ++i) den *= 10;
        return Rational(BigInt(digits), den);
    }
    return Rational(BigInt(text));
}

std::string rational_to_string(const Rational& q) {
    if (denominator(q) == 1) return numerator(q).str();
    return numerator(q).str() + "/" + denominator(q).str();
}

Rational rational_from_half_integer(double value) {
    double doubled = 2.0 * value;
    double rounded = std::nearbyint(doubled);
    if (std::abs(doubled - rounded) > 1e-9)
        throw std::invalid_argument("weight entries must be integers or half-integers");
    return Rational(BigInt(static_cast<long long>(rounded)), 2);
}

}  // namespace hyptor
