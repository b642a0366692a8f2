#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <variant>
#include <vector>

#include "fractri/decomposition.hpp"
#include "fractri/graph.hpp"
#include "fractri/maxflow.hpp"
#include "fractri/preprocess.hpp"
#include "fractri/rational.hpp"

namespace fractri {

/// Weights on every triangle of a host graph. Transfers keep the total
/// weight fixed.
template <typename Num>
class BasicWeightAssignment {
 public:
  BasicWeightAssignment(std::shared_ptr<const Graph> host, const Num& initial);

  const Graph& host() const { return *host_; }
  std::span<const Triangle> triangles() const { return triangles_; }
  std::span<const Num> weights() const { return weights_; }

  /// Throws UnknownTriangle when `t` is not a triangle of the host.
  std::size_t index_of(const Triangle& t) const;
  const Num& weight(const Triangle& t) const { return weights_[index_of(t)]; }
  void add(const Triangle& t, const Num& delta) { weights_[index_of(t)] += delta; }

  /// Sum of the weights of triangles through edge e.
  Num edge_weight(EdgeId e) const;
  Num total() const;

  BasicDecomposition<Num> to_decomposition() const;

 private:
  std::uint64_t key(const Triangle& t) const;

  std::shared_ptr<const Graph> host_;
  std::vector<Triangle> triangles_;
  std::vector<Num> weights_;
  std::unordered_map<std::uint64_t, std::size_t> index_;
};

using TriangleWeightAssignment = BasicWeightAssignment<Rational>;
using FloatWeightAssignment = BasicWeightAssignment<double>;

/// The auxiliary network: one node per edge of the residual graph plus a
/// supersource and a supersink. Always built exactly.
struct FlowNetwork {
  struct TerminalArc {
    EdgeId edge;
    Rational capacity;
  };

  EdgeId edge_count = 0;
  Rational initial_weight;  // uniform starting weight per triangle
  Rational link_capacity;   // per direction, per link
  std::vector<int> triangle_counts;
  std::vector<RootedK4Link> links;
  std::vector<TerminalArc> sources;  // T_e * w > 1, capacity T_e * w - 1
  std::vector<TerminalArc> sinks;    // T_e * w < 1, capacity 1 - T_e * w
  Rational required_value;           // M

  int supersource() const { return edge_count; }
  int supersink() const { return edge_count + 1; }

  /// Arc order: for link i, arcs 2i (e1 -> e2) and 2i+1 (e2 -> e1); then
  /// the source arcs; then the sink arcs.
  template <typename Num>
  ArcNetwork<Num> to_arc_network() const;
};

/// Source-side edge set of a minimum cut whose capacity falls short of M.
template <typename Num>
struct BasicCutCertificate {
  std::vector<EdgeId> source_side_edges;  // A, residual edge ids ascending
  Num cut_capacity{};
  Rational required_value;                // M
};

using CutCertificate = BasicCutCertificate<Rational>;
using FloatCutCertificate = BasicCutCertificate<double>;

enum class TransferDirection { kFirstToSecond, kSecondToFirst };

/// Moves `amount` of edge weight across a rooted K4: each of the two K4
/// triangles through the sending edge loses amount/2 and each of the two
/// through the receiving edge gains amount/2.
template <typename Num>
void apply_transfer(BasicWeightAssignment<Num>& weights, const RootedK4Link& link, const Num& amount,
                    TransferDirection direction);

/// m / (3t). Throws EmptyGraph when m = 0, EdgeInNoTriangle when some edge
/// lies in no triangle.
Rational initial_weight(const Graph& residual);

/// Throws DegenerateMinDegree when delta = 1 and GuardrailExceeded when the
/// link enumeration passes `max_links`.
FlowNetwork build_network(const Graph& residual, const Rational& initial_weight, const Rational& delta,
                          std::size_t max_links = kDefaultMaxLinks);

/// Independent check of a cut certificate against its network: recomputes
/// the capacity leaving {supersource} + A and requires it to be below M.
bool verify_cut(const FlowNetwork& network, const CutCertificate& cut, std::string* diagnostic = nullptr);

/// Header "# INFEASIBLE-BY-FLOW M=<p/q> cut=<p/q>", then the ids in A.
template <typename Num>
std::string write_cut_certificate(const BasicCutCertificate<Num>& cut);

template <typename Num>
struct BasicSolveHooks {
  // Called after every applied transfer.
  std::function<void(const BasicWeightAssignment<Num>&, const RootedK4Link&)> after_transfer;
  // Called once with the network and the raw flow before transfers start.
  std::function<void(const FlowNetwork&, const FlowResult<Num>&)> after_flow;
};

using SolveHooks = BasicSolveHooks<Rational>;
using FloatSolveHooks = BasicSolveHooks<double>;

template <typename Num>
struct BasicSolveReport {
  Rational required_value;  // M
  Num flow_value{};
  std::size_t link_count = 0;
  std::size_t transfers_applied = 0;
  bool terminals_saturated = false;
  std::variant<BasicCutCertificate<Num>, BasicWeightAssignment<Num>> outcome;

  bool ok() const { return std::holds_alternative<BasicWeightAssignment<Num>>(outcome); }
};

using SolveReport = BasicSolveReport<Rational>;
using FloatSolveReport = BasicSolveReport<double>;

/// Builds the network, runs max flow, and on a flow of value M converts the
/// net link flows into weight transfers.
template <typename Num>
BasicSolveReport<Num> solve(const Graph& residual, const Rational& delta, std::size_t max_links = kDefaultMaxLinks,
                            const BasicSolveHooks<Num>& hooks = {});

struct DecomposeOptions {
  std::size_t max_links = kDefaultMaxLinks;
};

template <typename Num>
struct BasicDecomposeReport {
  Rational delta;  // from the input graph
  PeelResult peel;
  Rational required_value;
  Num flow_value{};
  std::size_t link_count = 0;
  std::variant<BasicDecomposition<Num>, BasicCutCertificate<Num>> outcome;

  bool ok() const { return std::holds_alternative<BasicDecomposition<Num>>(outcome); }
  /// delta >= 1/10, where no guarantee applies.
  bool outside_proven_regime() const { return delta >= make_rational(1, 10); }
};

using DecomposeReport = BasicDecomposeReport<Rational>;
using FloatDecomposeReport = BasicDecomposeReport<double>;

/// Full pipeline: degree stats, peeling, network, max flow, transfers, and
/// merging the peeled triangles back with weight one.
template <typename Num>
BasicDecomposeReport<Num> decompose(const Graph& g, const DecomposeOptions& options = {},
                                    const BasicSolveHooks<Num>& hooks = {});

}  // namespace fractri
