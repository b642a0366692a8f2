#include "fractri/graph.hpp"

#include <algorithm>
#include <string>

#include "fractri/errors.hpp"

namespace fractri {

Triangle make_triangle(Vertex x, Vertex y, Vertex z) {
  if (x > y) std::swap(x, y);
  if (y > z) std::swap(y, z);
  if (x > y) std::swap(x, y);
  return Triangle{x, y, z};
}

VertexSet::VertexSet(Vertex n) : n_(n), words_((static_cast<std::size_t>(n) + 63) / 64, 0) {}

std::size_t VertexSet::size() const {
  std::size_t total = 0;
  for (std::uint64_t w : words_) total += static_cast<std::size_t>(__builtin_popcountll(w));
  return total;
}

std::vector<Vertex> VertexSet::to_vector() const {
  std::vector<Vertex> out;
  out.reserve(size());
  for_each([&](Vertex v) { out.push_back(v); });
  return out;
}

Vertex VertexSet::next(Vertex after) const {
  const Vertex start = after + 1;
  if (start >= n_) return -1;
  std::size_t w = word(start);
  std::uint64_t bits = words_[w] & (~std::uint64_t{0} << (static_cast<unsigned>(start) & 63U));
  while (true) {
    if (bits != 0) return static_cast<Vertex>(w * 64 + static_cast<std::size_t>(__builtin_ctzll(bits)));
    if (++w == words_.size()) return -1;
    bits = words_[w];
  }
}

VertexSet& VertexSet::operator&=(const VertexSet& other) {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
  return *this;
}

Graph::Graph(Vertex n, std::vector<Edge> sorted_unique_edges)
    : n_(n), adjacency_(static_cast<std::size_t>(n), VertexSet(n)), edges_(std::move(sorted_unique_edges)) {
  row_start_.assign(static_cast<std::size_t>(n) + 1, 0);
  for (const Edge& e : edges_) {
    adjacency_[e.u].insert(e.v);
    adjacency_[e.v].insert(e.u);
    ++row_start_[static_cast<std::size_t>(e.u) + 1];
  }
  for (std::size_t i = 1; i < row_start_.size(); ++i) row_start_[i] += row_start_[i - 1];
}

Graph Graph::from_edge_list(std::span<const std::pair<Vertex, Vertex>> pairs, Vertex n) {
  if (n < 0) throw InvalidInput("negative vertex count");
  std::vector<Edge> edges;
  edges.reserve(pairs.size());
  for (auto [u, v] : pairs) {
    if (u < 0 || v < 0 || u >= n || v >= n) {
      throw InvalidInput("vertex out of range in pair (" + std::to_string(u) + "," + std::to_string(v) +
                         ") for n=" + std::to_string(n));
    }
    if (u == v) throw InvalidInput("self-loop (" + std::to_string(u) + "," + std::to_string(v) + ")");
    edges.push_back(u < v ? Edge{u, v} : Edge{v, u});
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  return Graph(n, std::move(edges));
}

EdgeId Graph::edge_id(Vertex u, Vertex v) const {
  if (u == v || u < 0 || v < 0 || u >= n_ || v >= n_) return -1;
  if (u > v) std::swap(u, v);
  const auto first = edges_.begin() + row_start_[static_cast<std::size_t>(u)];
  const auto last = edges_.begin() + row_start_[static_cast<std::size_t>(u) + 1];
  auto it = std::lower_bound(first, last, Edge{u, v});
  if (it == last || it->v != v) return -1;
  return static_cast<EdgeId>(it - edges_.begin());
}

Graph Graph::without_edges(std::span<const EdgeId> removed) const {
  std::vector<bool> drop(edges_.size(), false);
  for (EdgeId e : removed) drop[static_cast<std::size_t>(e)] = true;
  std::vector<Edge> kept;
  kept.reserve(edges_.size());
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    if (!drop[i]) kept.push_back(edges_[i]);
  }
  return Graph(n_, std::move(kept));
}

VertexSet common_neighbors(const Graph& g, EdgeId e) {
  const Edge& edge = g.edge(e);
  return g.neighbors(edge.u) & g.neighbors(edge.v);
}

std::vector<int> triangle_counts(const Graph& g) {
  std::vector<int> counts(static_cast<std::size_t>(g.edge_count()));
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const Edge& edge = g.edge(e);
    const auto a = g.neighbors(edge.u).words();
    const auto b = g.neighbors(edge.v).words();
    int total = 0;
    for (std::size_t w = 0; w < a.size(); ++w) total += __builtin_popcountll(a[w] & b[w]);
    counts[static_cast<std::size_t>(e)] = total;
  }
  return counts;
}

std::vector<Triangle> enumerate_triangles(const Graph& g) {
  std::vector<Triangle> out;
  for (const Edge& edge : g.edges()) {
    const VertexSet common = g.neighbors(edge.u) & g.neighbors(edge.v);
    for (Vertex c = common.next(edge.v); c >= 0; c = common.next(c)) {
      out.push_back(Triangle{edge.u, edge.v, c});
    }
  }
  // Edges are visited lexicographically and c ascends, so `out` is sorted.
  return out;
}

std::vector<RootedK4Link> enumerate_rooted_k4_links(const Graph& g, std::size_t max_links) {
  std::vector<RootedK4Link> links;
  auto emit = [&](EdgeId x, EdgeId y, const std::array<Vertex, 4>& verts) {
    if (links.size() >= max_links) {
      throw GuardrailExceeded("rooted K4 link count exceeds cap of " + std::to_string(max_links));
    }
    links.push_back(x < y ? RootedK4Link{x, y, verts} : RootedK4Link{y, x, verts});
  };
  for (EdgeId ab = 0; ab < g.edge_count(); ++ab) {
    const auto [a, b] = g.edge(ab);
    const VertexSet common = g.neighbors(a) & g.neighbors(b);
    // Each K4 {a<b<c<d} is found exactly once, from its smallest edge ab.
    for (Vertex c = common.next(b); c >= 0; c = common.next(c)) {
      const VertexSet& nc = g.neighbors(c);
      for (Vertex d = common.next(c); d >= 0; d = common.next(d)) {
        if (!nc.contains(d)) continue;
        const std::array<Vertex, 4> verts{a, b, c, d};
        emit(ab, g.edge_id(c, d), verts);
        emit(g.edge_id(a, c), g.edge_id(b, d), verts);
        emit(g.edge_id(a, d), g.edge_id(b, c), verts);
      }
    }
  }
  std::sort(links.begin(), links.end());
  return links;
}

std::int64_t k4_count_through_edge(const Graph& g, EdgeId e) {
  const VertexSet common = common_neighbors(g, e);
  std::int64_t total = 0;
  common.for_each([&](Vertex w) {
    const VertexSet inside = common & g.neighbors(w);
    total += static_cast<std::int64_t>(inside.size());
  });
  return total / 2;
}

std::int64_t count_k4(const Graph& g) {
  std::int64_t total = 0;
  for (EdgeId e = 0; e < g.edge_count(); ++e) total += k4_count_through_edge(g, e);
  return total / 6;
}

DegreeStats degree_stats(const Graph& g) {
  const Vertex n = g.vertex_count();
  if (n < 1) throw InvalidInput("degree_stats requires at least one vertex");
  DegreeStats stats;
  stats.degrees.resize(static_cast<std::size_t>(n));
  stats.min_degree = n;
  for (Vertex v = 0; v < n; ++v) {
    stats.degrees[static_cast<std::size_t>(v)] = g.degree(v);
    stats.min_degree = std::min(stats.min_degree, g.degree(v));
  }
  stats.delta = Rational(1) - make_rational(stats.min_degree, n);
  return stats;
}

}  // namespace fractri
