#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "fractri/rational.hpp"

namespace fractri {

using Vertex = std::int32_t;
using EdgeId = std::int32_t;

inline constexpr std::size_t kDefaultMaxLinks = 50'000'000;

struct Edge {
  Vertex u;
  Vertex v;  // u < v
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Three vertices in strictly increasing order.
struct Triangle {
  Vertex a;
  Vertex b;
  Vertex c;
  friend auto operator<=>(const Triangle&, const Triangle&) = default;
};

/// Sorts three distinct vertices into a Triangle.
Triangle make_triangle(Vertex x, Vertex y, Vertex z);

/// One pair of opposite edges inside a K4. The two orientations of the
/// rooted K4 on this pair are the two flow directions across the link.
struct RootedK4Link {
  EdgeId e1;                       // e1 < e2
  EdgeId e2;
  std::array<Vertex, 4> vertices;  // ascending
  friend auto operator<=>(const RootedK4Link&, const RootedK4Link&) = default;
};

/// Dense-bitset vertex set sized for one graph.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(Vertex n);

  void insert(Vertex v) { words_[word(v)] |= bit(v); }
  void erase(Vertex v) { words_[word(v)] &= ~bit(v); }
  bool contains(Vertex v) const { return (words_[word(v)] & bit(v)) != 0; }
  std::size_t size() const;
  Vertex universe() const { return n_; }
  std::vector<Vertex> to_vector() const;

  /// Smallest member strictly greater than `after`, or -1.
  Vertex next(Vertex after) const;

  VertexSet& operator&=(const VertexSet& other);
  friend VertexSet operator&(VertexSet lhs, const VertexSet& rhs) { return lhs &= rhs; }
  friend bool operator==(const VertexSet&, const VertexSet&) = default;

  std::span<const std::uint64_t> words() const { return words_; }

  template <typename Fn>
  void for_each(Fn&& fn) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t bits = words_[w];
      while (bits != 0) {
        const int offset = __builtin_ctzll(bits);
        fn(static_cast<Vertex>(w * 64 + static_cast<std::size_t>(offset)));
        bits &= bits - 1;
      }
    }
  }

 private:
  static std::size_t word(Vertex v) { return static_cast<std::size_t>(v) >> 6; }
  static std::uint64_t bit(Vertex v) { return std::uint64_t{1} << (static_cast<unsigned>(v) & 63U); }

  Vertex n_ = 0;
  std::vector<std::uint64_t> words_;
};

/// Simple undirected graph on vertices 0..n-1 with dense adjacency.
///
/// Edge ids are canonical: the m edges (u,v), u < v, are numbered in
/// lexicographic order, so ids never depend on how the graph was built.
/// Immutable after construction; safe to share across threads.
class Graph {
 public:
  Graph() = default;

  /// Duplicate pairs in either orientation collapse to one edge. Throws
  /// InvalidInput on an out-of-range vertex or a self-loop.
  static Graph from_edge_list(std::span<const std::pair<Vertex, Vertex>> pairs, Vertex n);

  Vertex vertex_count() const { return n_; }
  EdgeId edge_count() const { return static_cast<EdgeId>(edges_.size()); }

  bool adjacent(Vertex u, Vertex v) const { return u != v && adjacency_[u].contains(v); }
  const VertexSet& neighbors(Vertex v) const { return adjacency_[v]; }
  int degree(Vertex v) const { return static_cast<int>(adjacency_[v].size()); }

  const Edge& edge(EdgeId e) const { return edges_[static_cast<std::size_t>(e)]; }
  std::span<const Edge> edges() const { return edges_; }

  /// Id of edge {u,v}, or -1 when absent.
  EdgeId edge_id(Vertex u, Vertex v) const;

  /// Graph without the given edges (ids refer to this graph).
  Graph without_edges(std::span<const EdgeId> removed) const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  Graph(Vertex n, std::vector<Edge> sorted_unique_edges);

  Vertex n_ = 0;
  std::vector<VertexSet> adjacency_;
  std::vector<Edge> edges_;
  std::vector<EdgeId> row_start_;  // edges with smaller endpoint u start at row_start_[u]
};

/// W_e: vertices adjacent to both endpoints of e. Its size is T_e.
VertexSet common_neighbors(const Graph& g, EdgeId e);

/// T_e for every edge, indexed by edge id.
std::vector<int> triangle_counts(const Graph& g);

/// Every triangle exactly once, lexicographic.
std::vector<Triangle> enumerate_triangles(const Graph& g);

/// One link per (K4, opposite-edge pair); each K4 yields three links.
/// Sorted by (e1, e2). Throws GuardrailExceeded when more than `max_links`
/// links would be produced.
std::vector<RootedK4Link> enumerate_rooted_k4_links(const Graph& g,
                                                    std::size_t max_links = kDefaultMaxLinks);

/// Number of K4 subgraphs containing edge e.
std::int64_t k4_count_through_edge(const Graph& g, EdgeId e);

std::int64_t count_k4(const Graph& g);

struct DegreeStats {
  int min_degree = 0;
  std::vector<int> degrees;
  Rational delta;  // 1 - min_degree / n
};

/// Requires n >= 1 (throws InvalidInput otherwise).
DegreeStats degree_stats(const Graph& g);

}  // namespace fractri
