#pragma once

#include <vector>

#include "fractri/graph.hpp"
#include "fractri/rational.hpp"

namespace fractri {

/// Outcome of heavy-triangle peeling. Each removed triangle carries an
/// implicit weight of one in the final decomposition.
struct PeelResult {
  Graph residual;
  std::vector<Triangle> removed;  // in removal order
  Rational delta;                 // fixed from the original graph
  Rational threshold;             // (1 - delta) n + 2
};

/// Repeatedly removes the lexicographically smallest triangle whose three
/// vertices all have current degree >= (1 - delta) n + 2, with delta taken
/// from `g` before any removal. The residual then has no such triangle and
/// minimum degree >= (1 - delta) n.
PeelResult peel_heavy_triangles(const Graph& g);

/// True iff some triangle of `g` has all three degrees >= threshold.
bool has_heavy_triangle(const Graph& g, const Rational& threshold);

}  // namespace fractri
