#include "fractri/rational.hpp"

#include <array>
#include <cctype>
#include <charconv>
#include <system_error>

#include "fractri/errors.hpp"

namespace fractri {
namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char ch : s) {
    if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
  }
  return true;
}

// Boost reads a leading 0 as an octal prefix, so strip it first.
BigInt decimal_bigint(std::string_view digits) {
  const auto first = digits.find_first_not_of('0');
  if (first == std::string_view::npos) return BigInt(0);
  return BigInt{std::string(digits.substr(first))};
}

BigInt parse_integer(std::string_view s, std::string_view whole) {
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  if (!all_digits(s)) throw InvalidInput("not a number: '" + std::string(whole) + "'");
  BigInt value = decimal_bigint(s);
  return negative ? BigInt(-value) : value;
}

BigInt pow10(long exponent) {
  BigInt result = 1;
  for (long i = 0; i < exponent; ++i) result *= 10;
  return result;
}

Rational parse_decimal(std::string_view text) {
  std::string_view s = text;
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  long exponent = 0;
  if (auto epos = s.find_first_of("eE"); epos != std::string_view::npos) {
    std::string_view exp_text = s.substr(epos + 1);
    bool exp_negative = false;
    if (!exp_text.empty() && (exp_text.front() == '-' || exp_text.front() == '+')) {
      exp_negative = exp_text.front() == '-';
      exp_text.remove_prefix(1);
    }
    if (!all_digits(exp_text) || exp_text.size() > 6) {
      throw InvalidInput("not a number: '" + std::string(text) + "'");
    }
    exponent = std::stol(std::string(exp_text));
    if (exp_negative) exponent = -exponent;
    s = s.substr(0, epos);
  }
  std::string digits;
  auto dot = s.find('.');
  std::string_view int_part = s.substr(0, dot);
  std::string_view frac_part = dot == std::string_view::npos ? std::string_view{} : s.substr(dot + 1);
  if (int_part.empty() && frac_part.empty()) {
    throw InvalidInput("not a number: '" + std::string(text) + "'");
  }
  if ((!int_part.empty() && !all_digits(int_part)) || (!frac_part.empty() && !all_digits(frac_part))) {
    throw InvalidInput("not a number: '" + std::string(text) + "'");
  }
  digits.append(int_part);
  digits.append(frac_part);
  exponent -= static_cast<long>(frac_part.size());
  Rational value{decimal_bigint(digits)};
  if (exponent >= 0) {
    value *= Rational(pow10(exponent));
  } else {
    value /= Rational(pow10(-exponent));
  }
  return negative ? Rational(-value) : value;
}

}  // namespace

std::string to_fraction_string(const Rational& r) {
  return numerator(r).str() + "/" + denominator(r).str();
}

Rational parse_rational(std::string_view text) {
  if (text.empty()) throw InvalidInput("empty number");
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    BigInt num = parse_integer(text.substr(0, slash), text);
    std::string_view den_text = text.substr(slash + 1);
    if (!all_digits(den_text)) throw InvalidInput("bad denominator in '" + std::string(text) + "'");
    BigInt den = decimal_bigint(den_text);
    if (den == 0) throw InvalidInput("zero denominator in '" + std::string(text) + "'");
    return Rational(num, den);
  }
  if (text.find_first_of(".eE") != std::string_view::npos) return parse_decimal(text);
  return Rational(parse_integer(text, text));
}

std::string to_decimal_string(double x) {
  std::array<char, 64> buf{};
  auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), x);
  return std::string(buf.data(), end);
}

double parse_double(std::string_view text) {
  if (text.find('/') != std::string_view::npos) return to_double(parse_rational(text));
  double value = 0.0;
  const char* first = text.data();
  const char* last = first + text.size();
  if (first != last && *first == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr != last) throw InvalidInput("not a number: '" + std::string(text) + "'");
  return value;
}

}  // namespace fractri
