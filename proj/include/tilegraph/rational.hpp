#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace tilegraph {

using BigInt = boost::multiprecision::cpp_int;

// Exact rational, always in lowest terms with a positive denominator.
// All geometry (coordinates, side lengths, adjacency predicates) runs on
// these; floating point appears only in the analysis/fitting layers.
using Rational = boost::multiprecision::cpp_rational;

inline Rational rat(long long num, long long den = 1) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    return Rational(BigInt(num), BigInt(den));
}

inline double to_double(const Rational& q) { return q.template convert_to<double>(); }

inline BigInt num(const Rational& q) { return boost::multiprecision::numerator(q); }
inline BigInt den(const Rational& q) { return boost::multiprecision::denominator(q); }

// Canonical serialized form is "num/den", including "/1".
inline std::string rat_to_string(const Rational& q) {
    return num(q).str() + "/" + den(q).str();
}

// Accepts "num/den", plain integers, and decimal strings ("2.5" -> 5/2).
inline Rational parse_rational(std::string_view s) {
    if (s.empty()) throw std::invalid_argument("empty rational literal");
    const auto slash = s.find('/');
    if (slash != std::string_view::npos) {
        BigInt n(std::string(s.substr(0, slash)));
        BigInt d(std::string(s.substr(slash + 1)));
        if (d == 0) throw std::invalid_argument("rational with zero denominator");
        return Rational(n, d);
    }
    const auto dot = s.find('.');
    if (dot == std::string_view::npos) return Rational(BigInt(std::string(s)));
    std::string digits(s.substr(0, dot));
    std::string frac(s.substr(dot + 1));
    if (frac.find_first_not_of("0123456789") != std::string::npos)
        throw std::invalid_argument("bad decimal literal");
    bool neg = !digits.empty() && digits[0] == '-';
    BigInt whole = digits.empty() || digits == "-" ? BigInt(0) : BigInt(digits);
    BigInt scale = 1;
    for (size_t i = 0; i < frac.size(); ++i) scale *= 10;
    BigInt n = boost::multiprecision::abs(whole) * scale + (frac.empty() ? BigInt(0) : BigInt(frac));
    if (neg) n = -n;
    return Rational(n, scale);
}

inline Rational pow_rational(const Rational& q, unsigned n) {
    Rational r = 1;
    for (unsigned i = 0; i < n; ++i) r *= q;
    return r;
}

}  // namespace tilegraph
