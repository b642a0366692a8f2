#pragma once

#include <cstddef>
#include <string>

#include "fractri/decomposition.hpp"
#include "fractri/graph.hpp"

namespace fractri {

template <typename Num>
struct BasicVerifyReport {
  bool pass = false;
  Num worst_deviation{};          // max over edges of |edge sum - 1|
  EdgeId worst_edge = -1;
  std::size_t bad_edges = 0;      // edges whose sum is not 1
  std::size_t negative_weights = 0;
  std::size_t non_triangles = 0;  // entries that are not triangles of the graph
  std::string first_violation;

  std::string summary() const;
};

using VerifyReport = BasicVerifyReport<Rational>;
using FloatVerifyReport = BasicVerifyReport<double>;

/// Exact check: every entry is a triangle of g, every weight is >= 0 and
/// every edge's incident weights sum to exactly 1. Repeated triangles add.
/// Violations are reported, never thrown.
VerifyReport verify(const Graph& g, const Decomposition& d);

/// Float check: edge sums within `sum_tolerance` of 1, weights >= -`weight_floor`.
FloatVerifyReport verify(const Graph& g, const FloatDecomposition& d, double sum_tolerance = 1e-9,
                         double weight_floor = 1e-12);

}  // namespace fractri
