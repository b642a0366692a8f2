#pragma once

#include <stdexcept>
#include <string>

namespace fractri {

class FractriError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed text, out-of-range vertices, self-loops, bad generator parameters.
class InvalidInput : public FractriError {
 public:
  using FractriError::FractriError;
};

// A configured size cap (links, triangles) would be exceeded.
class GuardrailExceeded : public FractriError {
 public:
  using FractriError::FractriError;
};

// Some edge lies in no triangle, so no fractional decomposition exists.
class EdgeInNoTriangle : public FractriError {
 public:
  EdgeInNoTriangle(int edge, int u, int v)
      : FractriError("edge " + std::to_string(edge) + " (" + std::to_string(u) + "," +
                     std::to_string(v) + ") lies in no triangle"),
        edge_(edge) {}
  int edge() const noexcept { return edge_; }

 private:
  int edge_;
};

// Peeling left a residual edge in no triangle. The flow method stops, but
// the original graph may still decompose.
class StrandedEdge : public FractriError {
 public:
  StrandedEdge(int u, int v)
      : FractriError("peeling left edge (" + std::to_string(u) + "," + std::to_string(v) +
                     ") in no residual triangle") {}
};

// initial_weight on a graph with no edges.
class EmptyGraph : public FractriError {
 public:
  EmptyGraph() : FractriError("graph has no edges") {}
};

// Minimum degree zero makes the link capacity undefined.
class DegenerateMinDegree : public FractriError {
 public:
  DegenerateMinDegree()
      : FractriError("minimum degree is 0; link capacity 2w/(3*min_degree) is undefined") {}
};

// A weight assignment was asked about a triangle it does not hold.
class UnknownTriangle : public FractriError {
 public:
  using FractriError::FractriError;
};

}  // namespace fractri
