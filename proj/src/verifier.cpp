#include "fractri/verifier.hpp"

#include <cmath>
#include <sstream>
#include <vector>

namespace fractri {
namespace {

std::string show(const Rational& r) { return to_fraction_string(r); }
std::string show(double x) { return to_decimal_string(x); }

Rational distance(const Rational& a, const Rational& b) { return a > b ? Rational(a - b) : Rational(b - a); }
double distance(double a, double b) { return std::abs(a - b); }

template <typename Num, typename IsNegative, typename SumIsOne>
BasicVerifyReport<Num> verify_impl(const Graph& g, const BasicDecomposition<Num>& d, IsNegative is_negative,
                                   SumIsOne sum_is_one) {
  BasicVerifyReport<Num> report;
  auto note = [&](std::string message) {
    if (report.first_violation.empty()) report.first_violation = std::move(message);
  };
  std::vector<Num> sums(static_cast<std::size_t>(g.edge_count()), Num(0));
  for (const auto& [t, w] : d.entries) {
    const std::string label = std::to_string(t.a) + " " + std::to_string(t.b) + " " + std::to_string(t.c);
    if (is_negative(w)) {
      ++report.negative_weights;
      note("negative weight " + show(w) + " on triangle " + label);
    }
    const EdgeId ab = g.edge_id(t.a, t.b);
    const EdgeId ac = g.edge_id(t.a, t.c);
    const EdgeId bc = g.edge_id(t.b, t.c);
    if (ab < 0 || ac < 0 || bc < 0) {
      ++report.non_triangles;
      note("not a triangle of the graph: " + label);
      continue;
    }
    sums[static_cast<std::size_t>(ab)] += w;
    sums[static_cast<std::size_t>(ac)] += w;
    sums[static_cast<std::size_t>(bc)] += w;
  }
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const Num& s = sums[static_cast<std::size_t>(e)];
    const Num dev = distance(s, Num(1));
    if (report.worst_edge < 0 || dev > report.worst_deviation) {
      report.worst_deviation = dev;
      report.worst_edge = e;
    }
    if (!sum_is_one(s)) {
      ++report.bad_edges;
      note("edge " + std::to_string(g.edge(e).u) + " " + std::to_string(g.edge(e).v) + " sums to " + show(s));
    }
  }
  report.pass = report.bad_edges == 0 && report.negative_weights == 0 && report.non_triangles == 0;
  return report;
}

}  // namespace

template <typename Num>
std::string BasicVerifyReport<Num>::summary() const {
  std::ostringstream out;
  out << (pass ? "PASS" : "FAIL") << " worst_deviation=" << show(worst_deviation) << " bad_edges=" << bad_edges
      << " negative_weights=" << negative_weights << " non_triangles=" << non_triangles;
  if (!first_violation.empty()) out << " first: " << first_violation;
  return out.str();
}

template struct BasicVerifyReport<Rational>;
template struct BasicVerifyReport<double>;

VerifyReport verify(const Graph& g, const Decomposition& d) {
  return verify_impl(
      g, d, [](const Rational& w) { return w < 0; }, [](const Rational& s) { return s == 1; });
}

FloatVerifyReport verify(const Graph& g, const FloatDecomposition& d, double sum_tolerance, double weight_floor) {
  return verify_impl(
      g, d, [weight_floor](double w) { return w < -weight_floor; },
      [sum_tolerance](double s) { return std::abs(s - 1.0) <= sum_tolerance; });
}

}  // namespace fractri
