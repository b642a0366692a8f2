#include "fractri/preprocess.hpp"

#include <optional>

namespace fractri {
namespace {

VertexSet heavy_vertices(const Graph& g, const std::vector<int>& degrees, const Rational& threshold) {
  VertexSet heavy(g.vertex_count());
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (Rational(degrees[static_cast<std::size_t>(v)]) >= threshold) heavy.insert(v);
  }
  return heavy;
}

// Smallest triangle (lexicographic) inside the heavy set, if any.
std::optional<Triangle> smallest_heavy_triangle(const std::vector<VertexSet>& adjacency,
                                                const VertexSet& heavy) {
  for (Vertex a = heavy.next(-1); a >= 0; a = heavy.next(a)) {
    const VertexSet na = adjacency[static_cast<std::size_t>(a)] & heavy;
    for (Vertex b = na.next(a); b >= 0; b = na.next(b)) {
      const VertexSet nab = na & adjacency[static_cast<std::size_t>(b)];
      if (Vertex c = nab.next(b); c >= 0) return Triangle{a, b, c};
    }
  }
  return std::nullopt;
}

}  // namespace

bool has_heavy_triangle(const Graph& g, const Rational& threshold) {
  std::vector<int> degrees(static_cast<std::size_t>(g.vertex_count()));
  std::vector<VertexSet> adjacency;
  adjacency.reserve(degrees.size());
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    degrees[static_cast<std::size_t>(v)] = g.degree(v);
    adjacency.push_back(g.neighbors(v));
  }
  return smallest_heavy_triangle(adjacency, heavy_vertices(g, degrees, threshold)).has_value();
}

PeelResult peel_heavy_triangles(const Graph& g) {
  PeelResult result;
  if (g.vertex_count() == 0) {
    result.residual = g;
    result.delta = Rational(1);
    result.threshold = Rational(2);
    return result;
  }
  const DegreeStats stats = degree_stats(g);
  result.delta = stats.delta;
  result.threshold = (Rational(1) - stats.delta) * Rational(g.vertex_count()) + Rational(2);

  // Work on a mutable copy of the adjacency; degrees move, the threshold does not.
  std::vector<VertexSet> adjacency;
  adjacency.reserve(static_cast<std::size_t>(g.vertex_count()));
  for (Vertex v = 0; v < g.vertex_count(); ++v) adjacency.push_back(g.neighbors(v));
  std::vector<int> degrees = stats.degrees;

  std::vector<EdgeId> removed_edges;
  while (true) {
    const VertexSet heavy = heavy_vertices(g, degrees, result.threshold);
    const std::optional<Triangle> tri = smallest_heavy_triangle(adjacency, heavy);
    if (!tri) break;
    const auto [a, b, c] = *tri;
    for (auto [x, y] : {std::pair{a, b}, std::pair{a, c}, std::pair{b, c}}) {
      adjacency[static_cast<std::size_t>(x)].erase(y);
      adjacency[static_cast<std::size_t>(y)].erase(x);
      removed_edges.push_back(g.edge_id(x, y));
    }
    for (Vertex v : {a, b, c}) degrees[static_cast<std::size_t>(v)] -= 2;
    result.removed.push_back(*tri);
  }
  result.residual = g.without_edges(removed_edges);
  return result;
}

}  // namespace fractri
