#include "fractri/flow_decomposer.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "fractri/errors.hpp"

namespace fractri {
namespace {

template <typename Num>
Num convert(const Rational& r);
template <>
Rational convert<Rational>(const Rational& r) {
  return r;
}
template <>
double convert<double>(const Rational& r) {
  return to_double(r);
}

bool reaches(const Rational& value, const Rational& target) { return value == target; }
bool reaches(double value, const Rational& target) {
  const double t = to_double(target);
  return std::abs(value - t) <= 1e-9 * std::max(1.0, std::abs(t));
}

bool within(const Rational& magnitude, const Rational& bound) { return magnitude <= bound; }
bool within(double magnitude, const Rational& bound) {
  const double b = to_double(bound);
  return magnitude <= b + 1e-12 * std::max(1.0, b);
}

bool same_value(const Rational& a, const Rational& b) { return a == b; }
bool same_value(double a, double b) { return std::abs(a - b) <= 1e-9 * std::max(1.0, std::abs(b)); }

Rational magnitude(const Rational& x) { return x < 0 ? Rational(-x) : x; }
double magnitude(double x) { return std::abs(x); }

std::string format_value(const Rational& r) { return to_fraction_string(r); }
std::string format_value(double x) { return to_decimal_string(x); }

}  // namespace

// ---- BasicWeightAssignment ------------------------------------------------

template <typename Num>
BasicWeightAssignment<Num>::BasicWeightAssignment(std::shared_ptr<const Graph> host, const Num& initial)
    : host_(std::move(host)), triangles_(enumerate_triangles(*host_)), weights_(triangles_.size(), initial) {
  index_.reserve(triangles_.size());
  for (std::size_t i = 0; i < triangles_.size(); ++i) index_.emplace(key(triangles_[i]), i);
}

template <typename Num>
std::uint64_t BasicWeightAssignment<Num>::key(const Triangle& t) const {
  const auto n = static_cast<std::uint64_t>(host_->vertex_count());
  return (static_cast<std::uint64_t>(t.a) * n + static_cast<std::uint64_t>(t.b)) * n +
         static_cast<std::uint64_t>(t.c);
}

template <typename Num>
std::size_t BasicWeightAssignment<Num>::index_of(const Triangle& t) const {
  const Vertex n = host_->vertex_count();
  if (t.a >= 0 && t.a < t.b && t.b < t.c && t.c < n) {
    if (auto it = index_.find(key(t)); it != index_.end()) return it->second;
  }
  throw UnknownTriangle("triangle (" + std::to_string(t.a) + "," + std::to_string(t.b) + "," +
                        std::to_string(t.c) + ") is not in the assignment");
}

template <typename Num>
Num BasicWeightAssignment<Num>::edge_weight(EdgeId e) const {
  const Edge& edge = host_->edge(e);
  Num sum(0);
  common_neighbors(*host_, e).for_each([&](Vertex w) { sum += weight(make_triangle(edge.u, edge.v, w)); });
  return sum;
}

template <typename Num>
Num BasicWeightAssignment<Num>::total() const {
  Num sum(0);
  for (const Num& w : weights_) sum += w;
  return sum;
}

template <typename Num>
BasicDecomposition<Num> BasicWeightAssignment<Num>::to_decomposition() const {
  BasicDecomposition<Num> d;
  d.entries.reserve(triangles_.size());
  for (std::size_t i = 0; i < triangles_.size(); ++i) d.entries.push_back({triangles_[i], weights_[i]});
  return d;
}

template class BasicWeightAssignment<Rational>;
template class BasicWeightAssignment<double>;

// ---- transfers ------------------------------------------------------------

template <typename Num>
void apply_transfer(BasicWeightAssignment<Num>& weights, const RootedK4Link& link, const Num& amount,
                    TransferDirection direction) {
  if (amount == Num(0)) return;
  const Graph& host = weights.host();
  Edge from = host.edge(link.e1);
  Edge to = host.edge(link.e2);
  if (direction == TransferDirection::kSecondToFirst) std::swap(from, to);
  // Resolve all four triangles before touching any weight.
  const std::size_t lose_a = weights.index_of(make_triangle(from.u, from.v, to.u));
  const std::size_t lose_b = weights.index_of(make_triangle(from.u, from.v, to.v));
  const std::size_t gain_a = weights.index_of(make_triangle(to.u, to.v, from.u));
  const std::size_t gain_b = weights.index_of(make_triangle(to.u, to.v, from.v));
  const Num half = amount / Num(2);
  const auto& tris = weights.triangles();
  weights.add(tris[lose_a], -half);
  weights.add(tris[lose_b], -half);
  weights.add(tris[gain_a], half);
  weights.add(tris[gain_b], half);
}

template void apply_transfer<Rational>(TriangleWeightAssignment&, const RootedK4Link&, const Rational&,
                                       TransferDirection);
template void apply_transfer<double>(FloatWeightAssignment&, const RootedK4Link&, const double&,
                                     TransferDirection);

// ---- network --------------------------------------------------------------

Rational initial_weight(const Graph& residual) {
  if (residual.edge_count() == 0) throw EmptyGraph();
  const std::vector<int> counts = triangle_counts(residual);
  std::int64_t incidences = 0;
  for (EdgeId e = 0; e < residual.edge_count(); ++e) {
    const int t_e = counts[static_cast<std::size_t>(e)];
    if (t_e == 0) throw EdgeInNoTriangle(e, residual.edge(e).u, residual.edge(e).v);
    incidences += t_e;
  }
  // incidences = 3t, so m / (3t) = m / incidences.
  return make_rational(residual.edge_count(), incidences);
}

FlowNetwork build_network(const Graph& residual, const Rational& w, const Rational& delta,
                          std::size_t max_links) {
  if (delta >= 1) throw DegenerateMinDegree();
  FlowNetwork net;
  net.edge_count = residual.edge_count();
  net.initial_weight = w;
  const Rational degree_floor = (Rational(1) - delta) * Rational(residual.vertex_count());
  net.link_capacity = Rational(2) * w / (Rational(3) * degree_floor);
  net.triangle_counts = triangle_counts(residual);
  net.links = enumerate_rooted_k4_links(residual, max_links);
  net.required_value = 0;
  Rational sink_total = 0;
  for (EdgeId e = 0; e < net.edge_count; ++e) {
    const Rational load = Rational(net.triangle_counts[static_cast<std::size_t>(e)]) * w;
    if (load > 1) {
      net.sources.push_back({e, load - 1});
      net.required_value += load - 1;
    } else if (load < 1) {
      net.sinks.push_back({e, Rational(1) - load});
      sink_total += Rational(1) - load;
    }
  }
  if (sink_total != net.required_value) {
    throw std::logic_error("source excess and sink deficit do not balance");
  }
  return net;
}

template <typename Num>
ArcNetwork<Num> FlowNetwork::to_arc_network() const {
  ArcNetwork<Num> arcs;
  arcs.node_count = edge_count + 2;
  arcs.source = supersource();
  arcs.sink = supersink();
  arcs.arcs.reserve(2 * links.size() + sources.size() + sinks.size());
  const Num c = convert<Num>(link_capacity);
  for (const RootedK4Link& link : links) {
    arcs.add_arc(link.e1, link.e2, c);
    arcs.add_arc(link.e2, link.e1, c);
  }
  for (const TerminalArc& t : sources) arcs.add_arc(supersource(), t.edge, convert<Num>(t.capacity));
  for (const TerminalArc& t : sinks) arcs.add_arc(t.edge, supersink(), convert<Num>(t.capacity));
  return arcs;
}

template ArcNetwork<Rational> FlowNetwork::to_arc_network<Rational>() const;
template ArcNetwork<double> FlowNetwork::to_arc_network<double>() const;

bool verify_cut(const FlowNetwork& network, const CutCertificate& cut, std::string* diagnostic) {
  auto fail = [&](std::string message) {
    if (diagnostic != nullptr) *diagnostic = std::move(message);
    return false;
  };
  std::vector<bool> in_a(static_cast<std::size_t>(network.edge_count), false);
  for (EdgeId e : cut.source_side_edges) {
    if (e < 0 || e >= network.edge_count) return fail("edge id " + std::to_string(e) + " out of range");
    in_a[static_cast<std::size_t>(e)] = true;
  }
  Rational capacity = 0;
  for (const RootedK4Link& link : network.links) {
    if (in_a[static_cast<std::size_t>(link.e1)] != in_a[static_cast<std::size_t>(link.e2)]) {
      capacity += network.link_capacity;
    }
  }
  for (const auto& t : network.sources) {
    if (!in_a[static_cast<std::size_t>(t.edge)]) capacity += t.capacity;
  }
  for (const auto& t : network.sinks) {
    if (in_a[static_cast<std::size_t>(t.edge)]) capacity += t.capacity;
  }
  if (capacity != cut.cut_capacity) {
    return fail("recomputed cut capacity " + to_fraction_string(capacity) + " differs from reported " +
                to_fraction_string(cut.cut_capacity));
  }
  if (cut.required_value != network.required_value) return fail("certificate M differs from network M");
  if (!(capacity < network.required_value)) return fail("cut capacity is not below M");
  return true;
}

// ---- solve ----------------------------------------------------------------

template <typename Num>
BasicSolveReport<Num> solve(const Graph& residual, const Rational& delta, std::size_t max_links,
                            const BasicSolveHooks<Num>& hooks) {
  const Rational w = initial_weight(residual);
  const FlowNetwork net = build_network(residual, w, delta, max_links);
  const ArcNetwork<Num> arcs = net.to_arc_network<Num>();
  const FlowResult<Num> flow = max_flow(arcs);
  if (hooks.after_flow) hooks.after_flow(net, flow);

  BasicSolveReport<Num> report;
  report.required_value = net.required_value;
  report.flow_value = flow.value;
  report.link_count = net.links.size();

  if (!reaches(flow.value, net.required_value)) {
    BasicCutCertificate<Num> cut;
    for (EdgeId e = 0; e < net.edge_count; ++e) {
      if (flow.source_side[static_cast<std::size_t>(e)]) cut.source_side_edges.push_back(e);
    }
    cut.cut_capacity = flow.cut_capacity;
    cut.required_value = net.required_value;
    report.outcome = std::move(cut);
    return report;
  }

  report.terminals_saturated = true;
  for (std::size_t i = 2 * net.links.size(); i < arcs.arcs.size(); ++i) {
    if (!same_value(flow.flow[i], arcs.arcs[i].capacity)) report.terminals_saturated = false;
  }

  BasicWeightAssignment<Num> weights(std::make_shared<const Graph>(residual), convert<Num>(w));
  for (std::size_t i = 0; i < net.links.size(); ++i) {
    const Num net_flow = flow.flow[2 * i] - flow.flow[2 * i + 1];
    if (net_flow == Num(0)) continue;
    if (!within(magnitude(net_flow), net.link_capacity)) {
      throw std::logic_error("net link flow exceeds link capacity");
    }
    const RootedK4Link& link = net.links[i];
    if (net_flow > Num(0)) {
      apply_transfer(weights, link, net_flow, TransferDirection::kFirstToSecond);
    } else {
      apply_transfer(weights, link, Num(-net_flow), TransferDirection::kSecondToFirst);
    }
    ++report.transfers_applied;
    if (hooks.after_transfer) hooks.after_transfer(weights, link);
  }
  report.outcome = std::move(weights);
  return report;
}

template SolveReport solve<Rational>(const Graph&, const Rational&, std::size_t, const BasicSolveHooks<Rational>&);
template FloatSolveReport solve<double>(const Graph&, const Rational&, std::size_t, const BasicSolveHooks<double>&);

// ---- decompose ------------------------------------------------------------

template <typename Num>
BasicDecomposeReport<Num> decompose(const Graph& g, const DecomposeOptions& options,
                                    const BasicSolveHooks<Num>& hooks) {
  BasicDecomposeReport<Num> report;
  const std::vector<int> counts = triangle_counts(g);
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (counts[static_cast<std::size_t>(e)] == 0) throw EdgeInNoTriangle(e, g.edge(e).u, g.edge(e).v);
  }
  report.peel = peel_heavy_triangles(g);
  report.delta = report.peel.delta;

  BasicDecomposition<Num> merged;
  for (const Triangle& t : report.peel.removed) merged.entries.push_back({t, Num(1)});
  if (report.peel.residual.edge_count() == 0) {
    merged.sort();
    report.outcome = std::move(merged);
    return report;
  }

  BasicSolveReport<Num> solved;
  try {
    solved = solve<Num>(report.peel.residual, report.peel.delta, options.max_links, hooks);
  } catch (const EdgeInNoTriangle& e) {
    const Edge stranded = report.peel.residual.edge(e.edge());
    throw StrandedEdge(stranded.u, stranded.v);
  }
  report.required_value = solved.required_value;
  report.flow_value = solved.flow_value;
  report.link_count = solved.link_count;
  if (auto* cut = std::get_if<BasicCutCertificate<Num>>(&solved.outcome)) {
    report.outcome = std::move(*cut);
    return report;
  }
  const auto& weights = std::get<BasicWeightAssignment<Num>>(solved.outcome);
  const auto tris = weights.triangles();
  const auto ws = weights.weights();
  for (std::size_t i = 0; i < tris.size(); ++i) merged.entries.push_back({tris[i], ws[i]});
  merged.sort();
  report.outcome = std::move(merged);
  return report;
}

template DecomposeReport decompose<Rational>(const Graph&, const DecomposeOptions&, const BasicSolveHooks<Rational>&);
template FloatDecomposeReport decompose<double>(const Graph&, const DecomposeOptions&, const BasicSolveHooks<double>&);

// ---- text -----------------------------------------------------------------

template <typename Num>
std::string write_cut_certificate(const BasicCutCertificate<Num>& cut) {
  std::ostringstream out;
  out << "# INFEASIBLE-BY-FLOW M=" << to_fraction_string(cut.required_value)
      << " cut=" << format_value(cut.cut_capacity) << '\n';
  for (EdgeId e : cut.source_side_edges) out << e << '\n';
  return out.str();
}

template std::string write_cut_certificate<Rational>(const CutCertificate&);
template std::string write_cut_certificate<double>(const FloatCutCertificate&);

}  // namespace fractri
