#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <boost/multiprecision/gmp.hpp>

namespace fractri {

// Exact rational backed by GMP. Expression templates are off so values
// behave like plain value types under `auto`.
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;
using BigInt = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                             boost::multiprecision::et_off>;

inline Rational make_rational(std::int64_t num, std::int64_t den = 1) {
  return Rational(BigInt(num), BigInt(den));
}

inline BigInt numerator(const Rational& r) { return boost::multiprecision::numerator(r); }
inline BigInt denominator(const Rational& r) { return boost::multiprecision::denominator(r); }

// Always "p/q" with q >= 1, including integers ("1/1", "0/1").
std::string to_fraction_string(const Rational& r);

// Accepts "p/q", "p", and finite decimals such as "-0.85" or "1e-3"; the
// decimal forms are converted exactly. Throws InvalidInput on anything else.
Rational parse_rational(std::string_view text);

// Locale-independent shortest round-trip rendering of a double.
std::string to_decimal_string(double x);

double parse_double(std::string_view text);

inline double to_double(const Rational& r) { return r.convert_to<double>(); }

}  // namespace fractri
