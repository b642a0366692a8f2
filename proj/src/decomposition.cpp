#include "fractri/decomposition.hpp"

#include <sstream>

#include "fractri/errors.hpp"

namespace fractri {
namespace {

std::string format_weight(const Rational& w) { return to_fraction_string(w); }
std::string format_weight(double w) { return to_decimal_string(w); }

template <typename Num>
std::string write_impl(const BasicDecomposition<Num>& d) {
  BasicDecomposition<Num> sorted = d;
  sorted.sort();
  std::ostringstream out;
  out << "# triangles=" << sorted.entries.size() << " total=" << format_weight(sorted.total()) << '\n';
  for (const auto& [t, w] : sorted.entries) {
    out << t.a << ' ' << t.b << ' ' << t.c << ' ' << format_weight(w) << '\n';
  }
  return out.str();
}

Vertex parse_vertex(const std::string& token, std::size_t line_no) {
  std::size_t used = 0;
  long value = 0;
  try {
    value = std::stol(token, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != token.size() || value < 0 || value > INT32_MAX) {
    throw InvalidInput("line " + std::to_string(line_no) + ": bad vertex '" + token + "'");
  }
  return static_cast<Vertex>(value);
}

template <typename Num, typename ParseWeight>
BasicDecomposition<Num> parse_impl(std::string_view text, ParseWeight parse_weight) {
  BasicDecomposition<Num> d;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream fields(line);
    std::string a, b, c, w, extra;
    if (!(fields >> a >> b >> c >> w) || (fields >> extra)) {
      throw InvalidInput("line " + std::to_string(line_no) + ": expected 'u v w weight'");
    }
    const Vertex x = parse_vertex(a, line_no);
    const Vertex y = parse_vertex(b, line_no);
    const Vertex z = parse_vertex(c, line_no);
    if (x == y || y == z || x == z) {
      throw InvalidInput("line " + std::to_string(line_no) + ": repeated vertex in triangle");
    }
    try {
      d.entries.push_back({make_triangle(x, y, z), parse_weight(w)});
    } catch (const InvalidInput& e) {
      throw InvalidInput("line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  return d;
}

}  // namespace

std::string write_decomposition(const Decomposition& d) { return write_impl(d); }
std::string write_decomposition(const FloatDecomposition& d) { return write_impl(d); }

Decomposition parse_decomposition(std::string_view text) {
  return parse_impl<Rational>(text, [](const std::string& s) { return parse_rational(s); });
}

FloatDecomposition parse_float_decomposition(std::string_view text) {
  return parse_impl<double>(text, [](const std::string& s) { return parse_double(s); });
}

}  // namespace fractri
