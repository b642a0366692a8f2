#pragma once

#include <cstddef>
#include <optional>

#include "fractri/decomposition.hpp"
#include "fractri/graph.hpp"

namespace fractri {

struct LpOptions {
  // Guardrail on the number of LP columns.
  std::size_t max_triangles = 5000;
};

/// Either a witness decomposition or a plain "infeasible".
struct FeasibilityVerdict {
  std::optional<Decomposition> witness;
  std::size_t pivots = 0;

  bool feasible() const { return witness.has_value(); }
};

/// Decides exactly whether x >= 0 with sum_{triangles through e} x = 1 for
/// every edge e exists, by a phase-one simplex over rationals with
/// smallest-index (Bland) pivoting. Throws GuardrailExceeded when the graph
/// has more than `max_triangles` triangles.
FeasibilityVerdict lp_feasible(const Graph& g, const LpOptions& options = {});

}  // namespace fractri
