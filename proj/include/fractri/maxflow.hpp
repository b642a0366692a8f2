#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <vector>

#include "fractri/rational.hpp"

namespace fractri {

/// Directed network with designated terminals. Antiparallel arcs are fine.
template <typename Cap>
struct ArcNetwork {
  struct Arc {
    int tail;
    int head;
    Cap capacity;
  };

  int node_count = 0;
  int source = 0;
  int sink = 1;
  std::vector<Arc> arcs;

  int add_arc(int tail, int head, Cap capacity) {
    arcs.push_back(Arc{tail, head, std::move(capacity)});
    return static_cast<int>(arcs.size()) - 1;
  }
};

template <typename Cap>
struct FlowResult {
  std::vector<Cap> flow;          // per arc, same order as ArcNetwork::arcs
  Cap value{};
  std::vector<bool> source_side;  // min-cut partition, true on the source side
  Cap cut_capacity{};
};

namespace detail {

template <typename Cap>
struct ExactCapOps {
  static bool positive(const Cap& x) { return x > Cap(0); }
  static bool same(const Cap& a, const Cap& b) { return a == b; }
};

struct FloatCapOps {
  static constexpr double kEps = 1e-12;
  static bool positive(double x) { return x > kEps; }
  static bool same(double a, double b) { return std::abs(a - b) <= 1e-9 * std::max(1.0, std::abs(a)); }
};

template <typename Cap>
using CapOps = std::conditional_t<std::is_floating_point_v<Cap>, FloatCapOps, ExactCapOps<Cap>>;

// Level-graph / blocking-flow max flow. At most node_count phases, so it
// terminates for any non-negative capacities, not only integers. Arcs are
// scanned in input order, which makes the resulting flow reproducible.
template <typename Cap>
class Dinic {
  using Ops = CapOps<Cap>;

 public:
  explicit Dinic(const ArcNetwork<Cap>& net) : net_(net) {
    const auto n = static_cast<std::size_t>(net.node_count);
    if (net.source == net.sink) throw std::invalid_argument("source and sink coincide");
    if (net.source < 0 || net.sink < 0 || net.source >= net.node_count || net.sink >= net.node_count) {
      throw std::invalid_argument("terminal out of range");
    }
    residual_.reserve(net.arcs.size() * 2);
    head_.reserve(net.arcs.size() * 2);
    std::vector<int> degree(n + 1, 0);
    for (const auto& arc : net.arcs) {
      if (arc.tail < 0 || arc.head < 0 || arc.tail >= net.node_count || arc.head >= net.node_count) {
        throw std::invalid_argument("arc endpoint out of range");
      }
      if (arc.capacity < Cap(0)) throw std::invalid_argument("negative capacity");
      residual_.push_back(arc.capacity);
      head_.push_back(arc.head);
      residual_.push_back(Cap(0));
      head_.push_back(arc.tail);
      ++degree[static_cast<std::size_t>(arc.tail) + 1];
      ++degree[static_cast<std::size_t>(arc.head) + 1];
    }
    for (std::size_t i = 1; i <= n; ++i) degree[i] += degree[i - 1];
    offsets_ = degree;
    incident_.resize(residual_.size());
    std::vector<int> fill(degree.begin(), degree.end() - 1);
    for (std::size_t i = 0; i < net.arcs.size(); ++i) {
      const auto& arc = net.arcs[i];
      incident_[static_cast<std::size_t>(fill[static_cast<std::size_t>(arc.tail)]++)] = static_cast<int>(2 * i);
      incident_[static_cast<std::size_t>(fill[static_cast<std::size_t>(arc.head)]++)] = static_cast<int>(2 * i + 1);
    }
    level_.assign(n, -1);
    cursor_.assign(n, 0);
  }

  FlowResult<Cap> run() {
    Cap value(0);
    int phases = 0;
    while (build_levels()) {
      ++phases;
      if (phases > net_.node_count) throw std::logic_error("blocking-flow phase bound exceeded");
      for (std::size_t v = 0; v < cursor_.size(); ++v) cursor_[v] = offsets_[v];
      value += blocking_flow();
    }
    FlowResult<Cap> result;
    result.flow.reserve(net_.arcs.size());
    for (std::size_t i = 0; i < net_.arcs.size(); ++i) result.flow.push_back(residual_[2 * i + 1]);
    result.value = value;
    result.source_side.assign(static_cast<std::size_t>(net_.node_count), false);
    for (std::size_t v = 0; v < level_.size(); ++v) result.source_side[v] = level_[v] >= 0;
    result.cut_capacity = Cap(0);
    for (const auto& arc : net_.arcs) {
      if (result.source_side[static_cast<std::size_t>(arc.tail)] &&
          !result.source_side[static_cast<std::size_t>(arc.head)]) {
        result.cut_capacity += arc.capacity;
      }
    }
    if (!Ops::same(result.cut_capacity, result.value)) {
      throw std::logic_error("max-flow duality check failed: flow value differs from cut capacity");
    }
    return result;
  }

 private:
  bool build_levels() {
    std::fill(level_.begin(), level_.end(), -1);
    std::vector<int> queue;
    queue.reserve(level_.size());
    level_[static_cast<std::size_t>(net_.source)] = 0;
    queue.push_back(net_.source);
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
      const int v = queue[qi];
      for (int k = offsets_[static_cast<std::size_t>(v)]; k < offsets_[static_cast<std::size_t>(v) + 1]; ++k) {
        const int r = incident_[static_cast<std::size_t>(k)];
        const int w = head_[static_cast<std::size_t>(r)];
        if (level_[static_cast<std::size_t>(w)] < 0 && Ops::positive(residual_[static_cast<std::size_t>(r)])) {
          level_[static_cast<std::size_t>(w)] = level_[static_cast<std::size_t>(v)] + 1;
          queue.push_back(w);
        }
      }
    }
    return level_[static_cast<std::size_t>(net_.sink)] >= 0;
  }

  // Repeatedly finds an s-t path in the level graph using per-node cursors,
  // saturates its bottleneck, and retreats from dead ends.
  Cap blocking_flow() {
    Cap total(0);
    std::vector<int> path;  // residual edge indices
    int v = net_.source;
    while (true) {
      if (v == net_.sink) {
        Cap bottleneck = residual_[static_cast<std::size_t>(path.front())];
        for (int r : path) bottleneck = std::min(bottleneck, residual_[static_cast<std::size_t>(r)]);
        for (int r : path) {
          residual_[static_cast<std::size_t>(r)] -= bottleneck;
          residual_[static_cast<std::size_t>(r ^ 1)] += bottleneck;
        }
        total += bottleneck;
        path.clear();
        v = net_.source;
        continue;
      }
      bool advanced = false;
      int& k = cursor_[static_cast<std::size_t>(v)];
      for (; k < offsets_[static_cast<std::size_t>(v) + 1]; ++k) {
        const int r = incident_[static_cast<std::size_t>(k)];
        const int w = head_[static_cast<std::size_t>(r)];
        if (level_[static_cast<std::size_t>(w)] == level_[static_cast<std::size_t>(v)] + 1 &&
            Ops::positive(residual_[static_cast<std::size_t>(r)])) {
          path.push_back(r);
          v = w;
          advanced = true;
          break;
        }
      }
      if (advanced) continue;
      if (v == net_.source) break;
      // Dead end: drop v from this phase and step back.
      level_[static_cast<std::size_t>(v)] = -2;
      const int back = path.back();
      path.pop_back();
      v = head_[static_cast<std::size_t>(back ^ 1)];
      ++cursor_[static_cast<std::size_t>(v)];
    }
    return total;
  }

  const ArcNetwork<Cap>& net_;
  std::vector<Cap> residual_;  // residual_[2i] forward of arc i, residual_[2i+1] = flow on arc i
  std::vector<int> head_;
  std::vector<int> offsets_;
  std::vector<int> incident_;
  std::vector<int> level_;
  std::vector<int> cursor_;
};

}  // namespace detail

/// Exact maximum flow. Capacities are scaled to a common denominator and
/// solved in 64-bit integers when they fit, otherwise in rationals.
FlowResult<Rational> max_flow(const ArcNetwork<Rational>& net);
FlowResult<std::int64_t> max_flow(const ArcNetwork<std::int64_t>& net);
/// Floating-point maximum flow; residuals below 1e-12 count as saturated.
FlowResult<double> max_flow(const ArcNetwork<double>& net);

/// Rational solve without the integer fast path (used as a cross-check).
FlowResult<Rational> max_flow_rational_direct(const ArcNetwork<Rational>& net);

/// Independent re-check of capacity, conservation, value and cut duality.
/// On failure writes the first violation to `diagnostic` when non-null.
bool verify_flow(const ArcNetwork<Rational>& net, const FlowResult<Rational>& res,
                 std::string* diagnostic = nullptr);
bool verify_flow(const ArcNetwork<std::int64_t>& net, const FlowResult<std::int64_t>& res,
                 std::string* diagnostic = nullptr);
bool verify_flow(const ArcNetwork<double>& net, const FlowResult<double>& res,
                 std::string* diagnostic = nullptr, double tolerance = 1e-9);

}  // namespace fractri
