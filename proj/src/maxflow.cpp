#include "fractri/maxflow.hpp"

#include <boost/multiprecision/integer.hpp>

namespace fractri {
namespace {

constexpr std::int64_t kIntegerPathLimit = std::int64_t{1} << 62;

template <typename Cap, typename Same>
bool check_flow(const ArcNetwork<Cap>& net, const FlowResult<Cap>& res, std::string* diagnostic,
                Same same) {
  auto fail = [&](std::string message) {
    if (diagnostic != nullptr) *diagnostic = std::move(message);
    return false;
  };
  if (res.flow.size() != net.arcs.size()) return fail("flow vector size differs from arc count");
  if (res.source_side.size() != static_cast<std::size_t>(net.node_count)) {
    return fail("cut partition size differs from node count");
  }
  std::vector<Cap> balance(static_cast<std::size_t>(net.node_count), Cap(0));
  for (std::size_t i = 0; i < net.arcs.size(); ++i) {
    const auto& arc = net.arcs[i];
    const Cap& f = res.flow[i];
    if (f < Cap(0) && !same(f, Cap(0))) return fail("negative flow on arc " + std::to_string(i));
    if (f > arc.capacity && !same(f, arc.capacity)) return fail("flow exceeds capacity on arc " + std::to_string(i));
    balance[static_cast<std::size_t>(arc.tail)] -= f;
    balance[static_cast<std::size_t>(arc.head)] += f;
  }
  for (int v = 0; v < net.node_count; ++v) {
    if (v == net.source || v == net.sink) continue;
    if (!same(balance[static_cast<std::size_t>(v)], Cap(0))) {
      return fail("conservation violated at node " + std::to_string(v));
    }
  }
  const Cap out_of_source = -balance[static_cast<std::size_t>(net.source)];
  if (!same(out_of_source, res.value)) return fail("value differs from net flow out of source");
  if (!same(balance[static_cast<std::size_t>(net.sink)], res.value)) {
    return fail("value differs from net flow into sink");
  }
  if (!res.source_side[static_cast<std::size_t>(net.source)] || res.source_side[static_cast<std::size_t>(net.sink)]) {
    return fail("cut does not separate source from sink");
  }
  Cap cut(0);
  for (const auto& arc : net.arcs) {
    if (res.source_side[static_cast<std::size_t>(arc.tail)] && !res.source_side[static_cast<std::size_t>(arc.head)]) {
      cut += arc.capacity;
    }
  }
  if (!same(cut, res.cut_capacity)) return fail("reported cut capacity differs from recomputed capacity");
  if (!same(cut, res.value)) return fail("cut capacity differs from flow value");
  return true;
}

}  // namespace

FlowResult<Rational> max_flow_rational_direct(const ArcNetwork<Rational>& net) {
  return detail::Dinic<Rational>(net).run();
}

FlowResult<Rational> max_flow(const ArcNetwork<Rational>& net) {
  // Common denominator of all capacities.
  BigInt scale = 1;
  for (const auto& arc : net.arcs) {
    const BigInt den = denominator(arc.capacity);
    if (den != 1) scale = boost::multiprecision::lcm(scale, den);
  }
  BigInt total = 0;
  ArcNetwork<std::int64_t> scaled;
  scaled.node_count = net.node_count;
  scaled.source = net.source;
  scaled.sink = net.sink;
  scaled.arcs.reserve(net.arcs.size());
  bool fits = true;
  for (const auto& arc : net.arcs) {
    const BigInt units = numerator(arc.capacity) * (scale / denominator(arc.capacity));
    total += boost::multiprecision::abs(units);
    if (total >= kIntegerPathLimit) {
      fits = false;
      break;
    }
    scaled.arcs.push_back({arc.tail, arc.head, units.convert_to<std::int64_t>()});
  }
  if (!fits) return max_flow_rational_direct(net);

  const FlowResult<std::int64_t> integral = detail::Dinic<std::int64_t>(scaled).run();
  const Rational unit(BigInt(1), scale);
  FlowResult<Rational> result;
  result.flow.reserve(integral.flow.size());
  for (std::int64_t f : integral.flow) result.flow.push_back(f == 0 ? Rational(0) : Rational(f) * unit);
  result.value = Rational(integral.value) * unit;
  result.cut_capacity = Rational(integral.cut_capacity) * unit;
  result.source_side = integral.source_side;
  return result;
}

FlowResult<std::int64_t> max_flow(const ArcNetwork<std::int64_t>& net) {
  return detail::Dinic<std::int64_t>(net).run();
}

FlowResult<double> max_flow(const ArcNetwork<double>& net) { return detail::Dinic<double>(net).run(); }

bool verify_flow(const ArcNetwork<Rational>& net, const FlowResult<Rational>& res, std::string* diagnostic) {
  return check_flow(net, res, diagnostic, [](const Rational& a, const Rational& b) { return a == b; });
}

bool verify_flow(const ArcNetwork<std::int64_t>& net, const FlowResult<std::int64_t>& res,
                 std::string* diagnostic) {
  return check_flow(net, res, diagnostic, [](std::int64_t a, std::int64_t b) { return a == b; });
}

bool verify_flow(const ArcNetwork<double>& net, const FlowResult<double>& res, std::string* diagnostic,
                 double tolerance) {
  return check_flow(net, res, diagnostic, [tolerance](double a, double b) {
    return std::abs(a - b) <= tolerance * std::max(1.0, std::max(std::abs(a), std::abs(b)));
  });
}

}  // namespace fractri
