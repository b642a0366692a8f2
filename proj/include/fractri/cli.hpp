#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "fractri/graph.hpp"
#include "fractri/instance_lab.hpp"

namespace fractri::cli {

// Stable exit-code contract.
inline constexpr int kExitOk = 0;
inline constexpr int kExitVerifyFailed = 1;
inline constexpr int kExitInfeasible = 2;
inline constexpr int kExitInputError = 3;
inline constexpr int kExitGuardrail = 4;

enum class Mode { kExact, kFloat };

struct RunConfig {
  std::string subcommand;
  std::optional<std::string> input;       // path, "-" for stdin
  std::optional<std::string> gen_family;  // mutually exclusive with input
  Vertex n = 0;
  std::string fraction = "1";
  std::uint64_t seed = 0;
  std::vector<Vertex> parts;
  Mode mode = Mode::kExact;
  bool fallback_lp = false;
  std::size_t max_links = kDefaultMaxLinks;
  std::size_t max_triangles = 5000;
  std::optional<std::string> out;  // path; stdout when absent

  // verify
  std::string graph_path;
  std::string decomposition_path;

  // scan
  std::vector<Vertex> scan_sizes;
  std::vector<std::string> scan_fractions;
  int samples = 0;
  std::size_t scan_lp_max_triangles = 1500;
};

/// Parses `args` (args[0] is the program name) and runs the subcommand.
/// Data goes to `out` (or --out), diagnostics to `err`.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

int cmd_decompose(const RunConfig& cfg, std::istream& in, std::ostream& out, std::ostream& err);
int cmd_verify(const RunConfig& cfg, std::istream& in, std::ostream& out, std::ostream& err);
int cmd_oracle(const RunConfig& cfg, std::istream& in, std::ostream& out, std::ostream& err);
int cmd_gen(const RunConfig& cfg, std::istream& in, std::ostream& out, std::ostream& err);
int cmd_scan(const RunConfig& cfg, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace fractri::cli
