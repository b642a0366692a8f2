#pragma once

#include <algorithm>
#include <string>
#include <string_view>
#include <vector>

#include "fractri/graph.hpp"
#include "fractri/rational.hpp"

namespace fractri {

template <typename Num>
struct BasicWeightedTriangle {
  Triangle triangle;
  Num weight;
  friend bool operator==(const BasicWeightedTriangle&, const BasicWeightedTriangle&) = default;
};

/// A claimed fractional triangle decomposition: triangles with weights.
/// Canonical form is sorted by triangle with no repeats; foreign inputs may
/// repeat a triangle, in which case its weights add.
template <typename Num>
struct BasicDecomposition {
  std::vector<BasicWeightedTriangle<Num>> entries;

  Num total() const {
    Num sum(0);
    for (const auto& e : entries) sum += e.weight;
    return sum;
  }

  void sort() {
    std::stable_sort(entries.begin(), entries.end(),
                     [](const auto& x, const auto& y) { return x.triangle < y.triangle; });
  }

  friend bool operator==(const BasicDecomposition&, const BasicDecomposition&) = default;
};

using WeightedTriangle = BasicWeightedTriangle<Rational>;
using Decomposition = BasicDecomposition<Rational>;
using FloatDecomposition = BasicDecomposition<double>;

// Text form:
//   # triangles=<count> total=<p/q>
//   u v w p/q
// one line per triangle, sorted. Float decompositions print decimals.
std::string write_decomposition(const Decomposition& d);
std::string write_decomposition(const FloatDecomposition& d);

/// Lines starting with '#' are ignored. Throws InvalidInput.
Decomposition parse_decomposition(std::string_view text);
FloatDecomposition parse_float_decomposition(std::string_view text);

}  // namespace fractri
