#include "fractri/instance_lab.hpp"

#include <numeric>
#include <sstream>
#include <utility>

#include "fractri/errors.hpp"

namespace fractri {
namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

void shuffle(std::vector<Vertex>& items, XorShift64Star& rng) {
  for (std::size_t i = items.size(); i > 1; --i) {
    const auto j = static_cast<std::size_t>(rng.below(i));
    std::swap(items[i - 1], items[j]);
  }
}

std::vector<std::pair<Vertex, Vertex>> complete_pairs(Vertex n) {
  std::vector<std::pair<Vertex, Vertex>> pairs;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
  }
  return pairs;
}

Rational ceil_rational(const Rational& x) {
  BigInt q = numerator(x) / denominator(x);
  if (Rational(q) < x) q += 1;
  return Rational(q);
}

long parse_count(const std::string& token, std::size_t line_no, const char* what) {
  std::size_t used = 0;
  long value = -1;
  try {
    value = std::stol(token, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != token.size() || value < 0 || value > INT32_MAX) {
    throw InvalidInput("line " + std::to_string(line_no) + ": bad " + what + " '" + token + "'");
  }
  return value;
}

}  // namespace

XorShift64Star::XorShift64Star(std::uint64_t seed) : state_(splitmix64(seed)) {
  if (state_ == 0) state_ = 0x9E3779B97F4A7C15ULL;
}

std::uint64_t XorShift64Star::next() {
  state_ ^= state_ >> 12;
  state_ ^= state_ << 25;
  state_ ^= state_ >> 27;
  return state_ * 0x2545F4914F6CDD1DULL;
}

std::uint64_t XorShift64Star::below(std::uint64_t bound) {
  if (bound == 0) return 0;
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
  std::uint64_t x = next();
  while (x >= limit) x = next();
  return x % bound;
}

Family parse_family(std::string_view name) {
  if (name == "complete") return Family::kComplete;
  if (name == "complete-minus-hamilton") return Family::kCompleteMinusHamilton;
  if (name == "complete-multipartite") return Family::kCompleteMultipartite;
  if (name == "random-min-degree") return Family::kRandomMinDegree;
  throw InvalidInput("unknown family '" + std::string(name) + "'");
}

std::string family_name(Family family) {
  switch (family) {
    case Family::kComplete:
      return "complete";
    case Family::kCompleteMinusHamilton:
      return "complete-minus-hamilton";
    case Family::kCompleteMultipartite:
      return "complete-multipartite";
    case Family::kRandomMinDegree:
      return "random-min-degree";
  }
  return "unknown";
}

int complement_degree_cap(Vertex n, const Rational& fraction) {
  const Rational need = ceil_rational(fraction * Rational(n));
  return n - 1 - numerator(need).convert_to<int>();
}

Graph generate(const GenSpec& spec) {
  const Vertex n = spec.n;
  switch (spec.family) {
    case Family::kComplete: {
      if (n < 1) throw InvalidInput("complete: n must be >= 1");
      const auto pairs = complete_pairs(n);
      return Graph::from_edge_list(pairs, n);
    }
    case Family::kCompleteMinusHamilton: {
      if (n < 3) throw InvalidInput("complete-minus-hamilton: n must be >= 3");
      std::vector<std::pair<Vertex, Vertex>> pairs;
      for (auto [u, v] : complete_pairs(n)) {
        const bool on_cycle = v == u + 1 || (u == 0 && v == n - 1);
        if (!on_cycle) pairs.emplace_back(u, v);
      }
      return Graph::from_edge_list(pairs, n);
    }
    case Family::kCompleteMultipartite: {
      if (spec.parts.empty()) throw InvalidInput("complete-multipartite: no parts given");
      std::vector<Vertex> part_of;
      for (std::size_t p = 0; p < spec.parts.size(); ++p) {
        if (spec.parts[p] < 1) throw InvalidInput("complete-multipartite: part sizes must be >= 1");
        part_of.insert(part_of.end(), static_cast<std::size_t>(spec.parts[p]), static_cast<Vertex>(p));
      }
      const auto total = static_cast<Vertex>(part_of.size());
      if (n != 0 && n != total) throw InvalidInput("complete-multipartite: n does not match part sizes");
      std::vector<std::pair<Vertex, Vertex>> pairs;
      for (auto [u, v] : complete_pairs(total)) {
        if (part_of[static_cast<std::size_t>(u)] != part_of[static_cast<std::size_t>(v)]) pairs.emplace_back(u, v);
      }
      return Graph::from_edge_list(pairs, total);
    }
    case Family::kRandomMinDegree: {
      if (n < 3) throw InvalidInput("random-min-degree: n must be >= 3");
      if (spec.fraction <= 0 || spec.fraction >= 1) {
        throw InvalidInput("random-min-degree: fraction must lie in (0,1)");
      }
      const int cap = complement_degree_cap(n, spec.fraction);
      if (cap < 0) {
        throw InvalidInput("random-min-degree: no graph on " + std::to_string(n) +
                           " vertices has minimum degree >= " + to_fraction_string(spec.fraction) + " * n");
      }
      XorShift64Star rng(spec.seed);
      std::vector<VertexSet> removed(static_cast<std::size_t>(n), VertexSet(n));
      std::vector<Vertex> order(static_cast<std::size_t>(n));
      for (int round = 0; round < cap; ++round) {
        std::iota(order.begin(), order.end(), 0);
        shuffle(order, rng);
        for (std::size_t i = 0; i + 1 < order.size(); i += 2) {
          const Vertex u = order[i];
          const Vertex v = order[i + 1];
          removed[static_cast<std::size_t>(u)].insert(v);
          removed[static_cast<std::size_t>(v)].insert(u);
        }
      }
      std::vector<std::pair<Vertex, Vertex>> pairs;
      for (auto [u, v] : complete_pairs(n)) {
        if (!removed[static_cast<std::size_t>(u)].contains(v)) pairs.emplace_back(u, v);
      }
      return Graph::from_edge_list(pairs, n);
    }
  }
  throw InvalidInput("unknown family");
}

std::string write_edge_list(const Graph& g) {
  std::ostringstream out;
  out << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
  return out.str();
}

Graph read_edge_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  return read_edge_list(in);
}

Graph read_edge_list(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  bool have_header = false;
  long n = 0;
  long m = 0;
  std::vector<std::pair<Vertex, Vertex>> pairs;
  while (std::getline(in, line)) {
    ++line_no;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream fields(line);
    std::string a, b, extra;
    if (!(fields >> a >> b) || (fields >> extra)) {
      throw InvalidInput("line " + std::to_string(line_no) + ": expected two integers");
    }
    if (!have_header) {
      n = parse_count(a, line_no, "vertex count");
      m = parse_count(b, line_no, "edge count");
      have_header = true;
      continue;
    }
    const long u = parse_count(a, line_no, "vertex");
    const long v = parse_count(b, line_no, "vertex");
    if (u >= n || v >= n) {
      throw InvalidInput("line " + std::to_string(line_no) + ": vertex out of range for n=" + std::to_string(n));
    }
    if (u == v) throw InvalidInput("line " + std::to_string(line_no) + ": self-loop");
    pairs.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
  }
  if (!have_header) throw InvalidInput("missing 'n m' header");
  if (static_cast<long>(pairs.size()) != m) {
    throw InvalidInput("header declares " + std::to_string(m) + " edges but " + std::to_string(pairs.size()) +
                       " were listed");
  }
  return Graph::from_edge_list(pairs, static_cast<Vertex>(n));
}

}  // namespace fractri
