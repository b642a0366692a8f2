// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fail.

#include <chrono>
#include <iostream>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "fractri/cli.hpp"
#include "fractri/errors.hpp"
#include "fractri/flow_decomposer.hpp"
#include "fractri/instance_lab.hpp"
#include "fractri/lp_oracle.hpp"
#include "fractri/verifier.hpp"
#include "test_support.hpp"

namespace fractri {
namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Line {
  std::string name;
  bool pass;
  std::string detail;
};

std::vector<Line> results;

void report(std::string name, bool pass, std::string detail) {
  std::cout << (pass ? "PASS " : "FAIL ") << name << ": " << detail << std::endl;
  results.push_back({std::move(name), pass, std::move(detail)});
}

struct CorpusEntry {
  Rational fraction;
  Vertex n;
  std::uint64_t seed;
  Graph graph;
};

// 200 random-min-degree instances over every reachable (fraction, n) pair
// with n in [8,14]; pair i % pairs, seed i.
std::vector<CorpusEntry> build_corpus() {
  std::vector<std::pair<Rational, Vertex>> pairs;
  for (const Rational& f : {make_rational(3, 4), make_rational(4, 5), make_rational(9, 10)})
    for (Vertex n = 8; n <= 14; ++n)
      if (complement_degree_cap(n, f) >= 0) pairs.emplace_back(f, n);
  std::vector<CorpusEntry> corpus;
  for (std::uint64_t i = 0; i < 200; ++i) {
    const auto& [f, n] = pairs[i % pairs.size()];
    GenSpec spec;
    spec.family = Family::kRandomMinDegree;
    spec.n = n;
    spec.fraction = f;
    spec.seed = i;
    corpus.push_back({f, n, i, generate(spec)});
  }
  return corpus;
}

// Hooks that count every conservation or saturation violation they see.
struct Instrument {
  Rational expected_total;
  std::size_t transfers = 0;
  std::size_t conservation_violations = 0;
  std::size_t saturation_checks = 0;
  std::size_t saturation_violations = 0;

  SolveHooks hooks() {
    SolveHooks h;
    h.after_transfer = [this](const TriangleWeightAssignment& w, const RootedK4Link&) {
      ++transfers;
      if (w.total() != expected_total) ++conservation_violations;
    };
    h.after_flow = [this](const FlowNetwork& net, const FlowResult<Rational>& flow) {
      if (flow.value != net.required_value) return;
      ++saturation_checks;
      const auto arcs = net.to_arc_network<Rational>();
      for (std::size_t i = 2 * net.links.size(); i < arcs.arcs.size(); ++i) {
        if (flow.flow[i] != arcs.arcs[i].capacity) ++saturation_violations;
      }
    };
    return h;
  }
};

void complete_graphs() {
  bool ok = true;
  std::ostringstream detail;
  for (Vertex n : {4, 5, 7, 13, 31}) {
    const auto start = Clock::now();
    const Graph g = testing::complete_graph(n);
    const DecomposeReport r = decompose<Rational>(g);
    const double secs = seconds_since(start);
    bool this_ok = r.ok() && r.required_value == 0 && r.flow_value == 0 && secs < 5.0;
    if (this_ok) {
      const auto& d = std::get<Decomposition>(r.outcome);
      for (const auto& e : d.entries) this_ok = this_ok && e.weight == make_rational(1, n - 2);
      this_ok = this_ok && d.entries.size() == enumerate_triangles(g).size() && verify(g, d).pass;
    }
    ok = ok && this_ok;
    detail << "K" << n << (this_ok ? " ok " : " BAD ") << std::fixed;
    detail.precision(3);
    detail << secs << "s; ";
  }
  report("complete-graph exactness (n in {4,5,7,13,31}, M=0, w=1/(n-2), < 5 s each)", ok, detail.str());
}

void hamilton_complements() {
  bool ok = true;
  std::ostringstream detail;
  detail.precision(3);
  for (Vertex n : {20, 30, 50}) {
    const auto start = Clock::now();
    const Graph g = testing::complete_minus_hamilton(n);
    const DecomposeReport r = decompose<Rational>(g);
    const double secs = seconds_since(start);
    bool this_ok = r.ok() && r.required_value > 0;
    if (this_ok) this_ok = verify(g, std::get<Decomposition>(r.outcome)).pass;
    if (n == 50) this_ok = this_ok && secs < 60.0;
    ok = ok && this_ok;
    detail << "n=" << n << " M=" << to_fraction_string(r.required_value) << " links=" << r.link_count
           << (this_ok ? " ok " : " BAD ") << std::fixed << secs << "s; ";
  }
  report("flow path on K_n minus Hamilton cycle (n in {20,30,50}, exact, n=50 < 60 s)", ok, detail.str());
}

void incompleteness_witness() {
  const Graph g = testing::k5_minus_edge();
  const DecomposeReport r = decompose<Rational>(g);
  bool ok = !r.ok();
  std::ostringstream detail;
  if (ok) {
    const auto& cut = std::get<CutCertificate>(r.outcome);
    ok = cut.required_value == make_rational(6, 7) && cut.cut_capacity < cut.required_value;
    detail << "cut=" << to_fraction_string(cut.cut_capacity) << " M=" << to_fraction_string(cut.required_value);
  }
  const FeasibilityVerdict lp = lp_feasible(g);
  ok = ok && lp.feasible() && verify(g, *lp.witness).pass;
  detail << " lp=" << (lp.feasible() ? "feasible" : "infeasible");

  const std::string edges = write_edge_list(g);
  auto exit_code = [&](std::vector<std::string> args) {
    std::istringstream in(edges);
    std::ostringstream out, err;
    return cli::run(args, in, out, err);
  };
  const int plain = exit_code({"fractri", "decompose", "-"});
  const int fallback = exit_code({"fractri", "decompose", "-", "--fallback-lp"});
  ok = ok && plain == cli::kExitInfeasible && fallback == cli::kExitOk;
  detail << " exit=" << plain << " fallback-exit=" << fallback;
  report("method incompleteness witness on K5 minus an edge", ok, detail.str());
}

struct CorpusOutcome {
  std::size_t flow_ok = 0;
  std::size_t disagreements = 0;
  std::size_t unverified = 0;
  Instrument totals;
  std::size_t peel_runs = 0;
  std::size_t peeled_instances = 0;
  std::size_t heavy_left = 0;
  std::size_t merge_checks = 0;
  std::size_t merge_failures = 0;
};

// Reference heavy-triangle test by triple scan on residual degrees.
bool has_heavy_triangle_scan(const Graph& h, const Rational& threshold) {
  const Vertex n = h.vertex_count();
  for (Vertex a = 0; a < n; ++a)
    for (Vertex b = a + 1; b < n; ++b)
      for (Vertex c = b + 1; c < n; ++c) {
        if (!(h.adjacent(a, b) && h.adjacent(a, c) && h.adjacent(b, c))) continue;
        if (Rational(h.degree(a)) >= threshold && Rational(h.degree(b)) >= threshold &&
            Rational(h.degree(c)) >= threshold)
          return true;
      }
  return false;
}

void check_peel(const Graph& g, CorpusOutcome& out) {
  const PeelResult p = peel_heavy_triangles(g);
  ++out.peel_runs;
  if (!p.removed.empty()) ++out.peeled_instances;
  if (has_heavy_triangle_scan(p.residual, p.threshold)) ++out.heavy_left;
  const FeasibilityVerdict residual_lp = lp_feasible(p.residual);
  if (!residual_lp.feasible()) return;
  Decomposition merged = *residual_lp.witness;
  for (const Triangle& t : p.removed) merged.entries.push_back({t, Rational(1)});
  ++out.merge_checks;
  if (!verify(g, merged).pass) ++out.merge_failures;
}

CorpusOutcome run_corpus(const std::vector<CorpusEntry>& corpus) {
  CorpusOutcome out;
  for (const CorpusEntry& entry : corpus) {
    const Graph& g = entry.graph;
    check_peel(g, out);
    Instrument inst;
    inst.expected_total = Rational(peel_heavy_triangles(g).residual.edge_count()) / Rational(3);
    std::optional<Decomposition> flow;
    try {
      DecomposeReport r = decompose<Rational>(g, {}, inst.hooks());
      if (r.ok()) flow = std::get<Decomposition>(std::move(r.outcome));
    } catch (const EdgeInNoTriangle&) {
    } catch (const StrandedEdge&) {
    } catch (const DegenerateMinDegree&) {
    }
    out.totals.transfers += inst.transfers;
    out.totals.conservation_violations += inst.conservation_violations;
    out.totals.saturation_checks += inst.saturation_checks;
    out.totals.saturation_violations += inst.saturation_violations;
    if (!flow) continue;
    ++out.flow_ok;
    const FeasibilityVerdict lp = lp_feasible(g);
    if (!lp.feasible()) {
      ++out.disagreements;
      continue;
    }
    if (!verify(g, *flow).pass || !verify(g, *lp.witness).pass) ++out.unverified;
  }
  return out;
}

void counting_invariants() {
  std::size_t violations = 0;
  std::size_t edges_checked = 0;
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    GenSpec spec;
    spec.family = Family::kRandomMinDegree;
    spec.n = 40;
    spec.fraction = make_rational(9, 10);
    spec.seed = seed;
    const Graph g = generate(spec);
    const Rational delta_n = degree_stats(g).delta * Rational(g.vertex_count());
    const auto counts = triangle_counts(g);
    std::int64_t sum = 0;
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
      ++edges_checked;
      const int t_e = counts[static_cast<std::size_t>(e)];
      sum += t_e;
      if (t_e != testing::brute_force_triangles_through(g, g.edge(e).u, g.edge(e).v)) ++violations;
      if (Rational(t_e) < Rational(g.vertex_count()) - Rational(2) * delta_n) ++violations;
      if (Rational(k4_count_through_edge(g, e)) < Rational(t_e) * (Rational(t_e) - delta_n) / Rational(2)) {
        ++violations;
      }
    }
    if (sum != 3 * static_cast<std::int64_t>(testing::brute_force_triangles(g).size())) ++violations;
    std::int64_t k4 = 0;
    const auto reference = testing::brute_force_links(g, &k4);
    const auto links = enumerate_rooted_k4_links(g);
    if (static_cast<std::int64_t>(links.size()) != 3 * k4 || links.size() != reference.size()) ++violations;
  }
  report("counting invariants on 50 instances (n=40, fraction 9/10)", violations == 0,
         std::to_string(edges_checked) + " edges checked, " + std::to_string(violations) + " violations");
}

void max_flow_corpus() {
  std::mt19937_64 rng(20240101);
  std::size_t mismatches = 0;
  std::size_t certificate_failures = 0;
  for (int i = 0; i < 1000; ++i) {
    const auto net = testing::random_network(rng, 10, 9);
    const auto res = max_flow(net);
    if (res.value != testing::brute_force_min_cut(net)) ++mismatches;
    const auto exact = max_flow(testing::to_rational(net));
    if (!verify_flow(net, res) || !verify_flow(testing::to_rational(net), exact) ||
        exact.value != Rational(res.value)) {
      ++certificate_failures;
    }
  }
  report("max-flow vs exhaustive min cut on 1000 random networks (<= 10 nodes, caps <= 9)",
         mismatches == 0 && certificate_failures == 0,
         std::to_string(mismatches) + " value mismatches, " + std::to_string(certificate_failures) +
             " certificate failures");
}

void threshold_scan() {
  const auto start = Clock::now();
  std::istringstream in;
  std::ostringstream csv, err;
  const int code = cli::run({"fractri", "scan", "--n", "40", "--fractions", "0.80,0.85,0.90,0.95", "--samples", "10"},
                            in, csv, err);
  std::map<std::string, std::pair<int, int>> per_fraction;  // ok, trials
  std::istringstream rows(csv.str());
  std::string line;
  std::getline(rows, line);
  std::vector<std::string> order;
  while (std::getline(rows, line)) {
    std::vector<std::string> cells;
    std::stringstream ss(line);
    for (std::string cell; std::getline(ss, cell, ',');) cells.push_back(cell);
    if (cells.size() < 4) continue;
    if (!per_fraction.count(cells[0])) order.push_back(cells[0]);
    auto& [ok, trials] = per_fraction[cells[0]];
    ++trials;
    if (cells[3] == "1") ++ok;
  }
  std::ostringstream detail;
  int total_trials = 0;
  double previous = -1.0;
  bool monotone = true;
  for (const auto& f : order) {
    const auto [ok, trials] = per_fraction[f];
    total_trials += trials;
    const double rate = trials ? static_cast<double>(ok) / trials : 0.0;
    monotone = monotone && rate >= previous;
    previous = rate;
    detail << f << ":" << ok << "/" << trials << " ";
  }
  detail.precision(2);
  detail << std::fixed << "(" << seconds_since(start) << "s, rate "
         << (monotone ? "non-decreasing" : "not monotone; reported only") << ")";
  std::cout << err.str();
  report("empirical threshold scan (n=40, 4 fractions x 10 seeds, every success verifies)",
         code == cli::kExitOk && total_trials == 40, detail.str());
}

}  // namespace
}  // namespace fractri

int main() {
  using namespace fractri;
  complete_graphs();
  hamilton_complements();
  incompleteness_witness();

  const auto corpus = build_corpus();
  const CorpusOutcome c = run_corpus(corpus);
  report("oracle agreement on 200 random-min-degree instances (n in [8,14])",
         c.disagreements == 0 && c.unverified == 0,
         std::to_string(c.flow_ok) + " flow successes, " + std::to_string(c.disagreements) + " disagreements, " +
             std::to_string(c.unverified) + " unverified witnesses");
  counting_invariants();
  report("conservation and saturation across the corpus",
         c.totals.conservation_violations == 0 && c.totals.saturation_violations == 0,
         std::to_string(c.totals.transfers) + " transfers, " + std::to_string(c.totals.saturation_checks) +
             " saturated flows checked, " +
             std::to_string(c.totals.conservation_violations + c.totals.saturation_violations) + " violations");
  max_flow_corpus();
  threshold_scan();
  report("peeling postcondition on the corpus", c.heavy_left == 0 && c.merge_failures == 0,
         std::to_string(c.peel_runs) + " instances, " + std::to_string(c.peeled_instances) + " peeled, " +
             std::to_string(c.merge_checks) + " merges verified, " +
             std::to_string(c.heavy_left + c.merge_failures) + " violations");

  std::size_t failed = 0;
  for (const auto& r : results) failed += r.pass ? 0 : 1;
  std::cout << (failed == 0 ? "ALL PASS" : "FAILURES") << " (" << results.size() - failed << "/" << results.size()
            << ")" << std::endl;
  return failed == 0 ? 0 : 1;
}
