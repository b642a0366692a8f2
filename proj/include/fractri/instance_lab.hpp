#pragma once

#include <cstdint>
#include <istream>
#include <string>
#include <string_view>
#include <vector>

#include "fractri/graph.hpp"
#include "fractri/rational.hpp"

namespace fractri {

/// xorshift64* (Vigna): state ^= state >> 12; state ^= state << 25;
/// state ^= state >> 27; output = state * 0x2545F4914F6CDD1D.
/// The state is seeded with one splitmix64 step of the user seed
/// (increment 0x9E3779B97F4A7C15, multipliers 0xBF58476D1CE4E5B9 and
/// 0x94D049BB133111EB), with 0 mapped to the increment constant.
class XorShift64Star {
 public:
  explicit XorShift64Star(std::uint64_t seed);

  std::uint64_t next();

  /// Uniform in [0, bound) by rejection, so results do not depend on the
  /// platform's standard library.
  std::uint64_t below(std::uint64_t bound);

 private:
  std::uint64_t state_;
};

enum class Family { kComplete, kCompleteMinusHamilton, kCompleteMultipartite, kRandomMinDegree };

Family parse_family(std::string_view name);
std::string family_name(Family family);

struct GenSpec {
  Family family = Family::kComplete;
  Vertex n = 0;
  Rational fraction{1};             // random-min-degree target min degree / n
  std::uint64_t seed = 0;
  std::vector<Vertex> parts;        // complete-multipartite part sizes
};

/// Deterministic for a fixed spec on every platform. Throws InvalidInput on
/// bad parameters, including a fraction no n-vertex graph can reach.
///
/// random-min-degree: complement of a sparse graph H with maximum degree
/// at most n - 1 - ceil(fraction * n). H is the union of that many random
/// matchings (each a shuffled vertex order paired off consecutively), so
/// the result has minimum degree >= fraction * n.
Graph generate(const GenSpec& spec);

/// Degree cap used for the sparse complement of random-min-degree.
int complement_degree_cap(Vertex n, const Rational& fraction);

/// Header "n m", then one "u v" line per edge with u < v, sorted.
std::string write_edge_list(const Graph& g);

/// '#' lines are ignored; pairs may be in either order. Throws InvalidInput
/// on a malformed header, a count mismatch, or an out-of-range vertex.
Graph read_edge_list(std::string_view text);
Graph read_edge_list(std::istream& in);

}  // namespace fractri
