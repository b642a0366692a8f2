#include "fractri/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include "fractri/decomposition.hpp"
#include "fractri/errors.hpp"
#include "fractri/flow_decomposer.hpp"
#include "fractri/lp_oracle.hpp"
#include "fractri/verifier.hpp"

namespace fractri::cli {
namespace {

std::string read_source(const std::string& path, std::istream& in) {
  if (path == "-") {
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
  }
  std::ifstream file(path);
  if (!file) throw InvalidInput("cannot read '" + path + "'");
  std::ostringstream buf;
  buf << file.rdbuf();
  return buf.str();
}

void emit(const RunConfig& cfg, std::ostream& out, const std::string& text) {
  if (cfg.out && *cfg.out != "-") {
    std::ofstream file(*cfg.out);
    if (!file) throw InvalidInput("cannot write '" + *cfg.out + "'");
    file << text;
    return;
  }
  out << text;
}

GenSpec gen_spec(const RunConfig& cfg, const std::string& family) {
  GenSpec spec;
  spec.family = parse_family(family);
  spec.n = cfg.n;
  spec.fraction = parse_rational(cfg.fraction);
  spec.seed = cfg.seed;
  spec.parts = cfg.parts;
  return spec;
}

Graph load_graph(const RunConfig& cfg, std::istream& in) {
  if (cfg.input.has_value() == cfg.gen_family.has_value()) {
    throw InvalidInput("exactly one of --input or --gen is required");
  }
  if (cfg.input) return read_edge_list(read_source(*cfg.input, in));
  return generate(gen_spec(cfg, *cfg.gen_family));
}

// Runs the oracle as a fallback or as the `oracle` command.
int emit_oracle(const RunConfig& cfg, const Graph& g, std::ostream& out, std::ostream& err) {
  const FeasibilityVerdict verdict = lp_feasible(g, LpOptions{cfg.max_triangles});
  if (!verdict.feasible()) {
    emit(cfg, out, "INFEASIBLE\n");
    return kExitInfeasible;
  }
  const VerifyReport report = verify(g, *verdict.witness);
  err << "verify: " << report.summary() << '\n';
  emit(cfg, out, write_decomposition(*verdict.witness));
  return report.pass ? kExitOk : kExitVerifyFailed;
}

// The flow method could not run to a verdict; only the oracle can decide.
int flow_stopped(const RunConfig& cfg, const Graph& g, const FractriError& why, std::ostream& out,
                 std::ostream& err) {
  err << "decompose: " << why.what() << '\n';
  if (cfg.fallback_lp) {
    err << "decompose: falling back to the LP oracle\n";
    return emit_oracle(cfg, g, out, err);
  }
  emit(cfg, out, "# FLOW-METHOD-STOPPED " + std::string(why.what()) + "\n");
  return kExitInfeasible;
}

template <typename Num>
int run_decompose(const RunConfig& cfg, const Graph& g, std::ostream& out, std::ostream& err) {
  BasicDecomposeReport<Num> report;
  try {
    report = decompose<Num>(g, DecomposeOptions{cfg.max_links});
  } catch (const EdgeInNoTriangle& e) {
    err << "decompose: " << e.what() << "; no fractional decomposition exists\n";
    emit(cfg, out, "INFEASIBLE\n");
    return kExitInfeasible;
  } catch (const DegenerateMinDegree& e) {
    return flow_stopped(cfg, g, e, out, err);
  } catch (const StrandedEdge& e) {
    return flow_stopped(cfg, g, e, out, err);
  }
  if (g.vertex_count() > 0 && report.outside_proven_regime()) {
    err << "warning: delta=" << to_fraction_string(report.delta) << " >= 1/10: outside proven regime\n";
  }
  err << "decompose: peeled=" << report.peel.removed.size() << " links=" << report.link_count
      << " M=" << to_fraction_string(report.required_value) << '\n';
  if (const auto* d = std::get_if<BasicDecomposition<Num>>(&report.outcome)) {
    const auto check = verify(g, *d);
    err << "verify: " << check.summary() << '\n';
    emit(cfg, out, write_decomposition(*d));
    return check.pass ? kExitOk : kExitVerifyFailed;
  }
  const auto& cut = std::get<BasicCutCertificate<Num>>(report.outcome);
  if (cfg.fallback_lp) {
    err << "decompose: flow method fell short of M; falling back to the LP oracle\n";
    return emit_oracle(cfg, g, out, err);
  }
  emit(cfg, out, write_cut_certificate(cut));
  return kExitInfeasible;
}

template <typename Fn>
int guarded(std::ostream& err, Fn&& fn) {
  try {
    return fn();
  } catch (const GuardrailExceeded& e) {
    err << "guardrail: " << e.what() << '\n';
    return kExitGuardrail;
  } catch (const InvalidInput& e) {
    err << "input error: " << e.what() << '\n';
    return kExitInputError;
  }
}

void add_generator_options(CLI::App& cmd, RunConfig& cfg) {
  cmd.add_option("--n", cfg.n, "Vertex count for generated graphs");
  cmd.add_option("--fraction", cfg.fraction, "Minimum-degree fraction for random-min-degree (p/q or decimal)");
  cmd.add_option("--seed", cfg.seed, "Generator seed");
  cmd.add_option("--parts", cfg.parts, "Part sizes for complete-multipartite")->delimiter(',');
}

void add_mode_option(CLI::App& cmd, RunConfig& cfg) {
  cmd.add_option("--mode", cfg.mode, "Arithmetic mode")
      ->transform(CLI::CheckedTransformer(std::map<std::string, Mode>{{"exact", Mode::kExact}, {"float", Mode::kFloat}}));
}

}  // namespace

int cmd_decompose(const RunConfig& cfg, std::istream& in, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const Graph g = load_graph(cfg, in);
    return cfg.mode == Mode::kExact ? run_decompose<Rational>(cfg, g, out, err)
                                    : run_decompose<double>(cfg, g, out, err);
  });
}

int cmd_verify(const RunConfig& cfg, std::istream& in, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    if (cfg.graph_path == "-" && cfg.decomposition_path == "-") {
      throw InvalidInput("only one of the graph and decomposition can come from stdin");
    }
    const Graph g = read_edge_list(read_source(cfg.graph_path, in));
    const std::string text = read_source(cfg.decomposition_path, in);
    if (cfg.mode == Mode::kExact) {
      const VerifyReport report = verify(g, parse_decomposition(text));
      out << report.summary() << '\n';
      return report.pass ? kExitOk : kExitVerifyFailed;
    }
    const FloatVerifyReport report = verify(g, parse_float_decomposition(text));
    out << report.summary() << '\n';
    return report.pass ? kExitOk : kExitVerifyFailed;
  });
}

int cmd_oracle(const RunConfig& cfg, std::istream& in, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] { return emit_oracle(cfg, load_graph(cfg, in), out, err); });
}

int cmd_gen(const RunConfig& cfg, std::istream&, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    if (!cfg.gen_family) throw InvalidInput("gen requires --family");
    emit(cfg, out, write_edge_list(generate(gen_spec(cfg, *cfg.gen_family))));
    return kExitOk;
  });
}

int cmd_scan(const RunConfig& cfg, std::istream&, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    std::ostringstream csv;
    csv << "fraction,n,seed,flow_ok,lp_ok,peeled,M,value\n";
    int unverified = 0;
    for (const std::string& fraction_text : cfg.scan_fractions) {
      const Rational fraction = parse_rational(fraction_text);
      int trials = 0;
      int successes = 0;
      for (Vertex n : cfg.scan_sizes) {
        for (int s = 0; s < cfg.samples; ++s) {
          GenSpec spec;
          spec.n = n;
          spec.seed = cfg.seed + static_cast<std::uint64_t>(s);
          // Fraction 1 means the complete graph; the random family needs (0,1).
          spec.family = fraction >= 1 ? Family::kComplete : Family::kRandomMinDegree;
          spec.fraction = fraction;
          const Graph g = generate(spec);

          std::string flow_ok = "0";
          std::string peeled;
          std::string m_text;
          std::string value_text;
          try {
            const DecomposeReport report = decompose<Rational>(g, DecomposeOptions{cfg.max_links});
            peeled = std::to_string(report.peel.removed.size());
            m_text = to_fraction_string(report.required_value);
            value_text = to_fraction_string(report.flow_value);
            if (const auto* d = std::get_if<Decomposition>(&report.outcome)) {
              flow_ok = "1";
              ++successes;
              if (!verify(g, *d).pass) {
                ++unverified;
                err << "scan: flow decomposition failed verification at fraction=" << fraction_text
                    << " n=" << n << " seed=" << spec.seed << '\n';
              }
            }
          } catch (const EdgeInNoTriangle&) {
          } catch (const DegenerateMinDegree&) {
          } catch (const StrandedEdge&) {
          }
          std::string lp_ok;
          if (enumerate_triangles(g).size() <= cfg.scan_lp_max_triangles) {
            lp_ok = lp_feasible(g, LpOptions{cfg.scan_lp_max_triangles}).feasible() ? "1" : "0";
          }
          ++trials;
          csv << fraction_text << ',' << n << ',' << spec.seed << ',' << flow_ok << ',' << lp_ok << ','
              << peeled << ',' << m_text << ',' << value_text << '\n';
        }
      }
      std::ostringstream rate;
      rate.precision(3);
      rate << std::fixed << (trials == 0 ? 0.0 : static_cast<double>(successes) / trials);
      err << "fraction=" << fraction_text << " trials=" << trials << " flow_ok=" << successes
          << " success_rate=" << rate.str() << '\n';
    }
    emit(cfg, out, csv.str());
    return unverified == 0 ? kExitOk : kExitVerifyFailed;
  });
}

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Fractional triangle decompositions via rooted-K4 flows"};
  app.require_subcommand(1);

  std::string input;
  std::string gen_family;

  auto* decompose_cmd = app.add_subcommand("decompose", "Decompose a graph with the flow method");
  decompose_cmd->add_option("--input,input", input, "Edge-list file ('-' for stdin)");
  decompose_cmd->add_option("--gen", gen_family, "Generator family instead of an input file");
  add_generator_options(*decompose_cmd, cfg);
  add_mode_option(*decompose_cmd, cfg);
  decompose_cmd->add_flag("--fallback-lp", cfg.fallback_lp, "Retry with the LP oracle when the flow falls short");
  decompose_cmd->add_option("--max-links", cfg.max_links, "Cap on rooted K4 links");
  decompose_cmd->add_option("--out", cfg.out, "Output file");

  auto* verify_cmd = app.add_subcommand("verify", "Check a decomposition against its graph");
  verify_cmd->add_option("graph", cfg.graph_path, "Edge-list file")->required();
  verify_cmd->add_option("decomposition", cfg.decomposition_path, "Decomposition file ('-' for stdin)")->required();
  add_mode_option(*verify_cmd, cfg);

  auto* oracle_cmd = app.add_subcommand("oracle", "Decide decomposability with the exact LP");
  oracle_cmd->add_option("--input,input", input, "Edge-list file ('-' for stdin)");
  oracle_cmd->add_option("--gen", gen_family, "Generator family instead of an input file");
  add_generator_options(*oracle_cmd, cfg);
  oracle_cmd->add_option("--max-triangles", cfg.max_triangles, "Cap on LP columns");
  oracle_cmd->add_option("--out", cfg.out, "Output file");

  auto* gen_cmd = app.add_subcommand("gen", "Write a generated graph as an edge list");
  gen_cmd->add_option("--family,--gen", gen_family, "complete | complete-minus-hamilton | "
                                                    "complete-multipartite | random-min-degree")
      ->required();
  add_generator_options(*gen_cmd, cfg);
  gen_cmd->add_option("--out", cfg.out, "Output file");

  auto* scan_cmd = app.add_subcommand("scan", "Run the flow method over seeded random instances");
  scan_cmd->add_option("--n", cfg.scan_sizes, "Vertex counts")->delimiter(',');
  scan_cmd->add_option("--fractions,--fraction", cfg.scan_fractions, "Minimum-degree fractions")->delimiter(',');
  scan_cmd->add_option("--samples", cfg.samples, "Seeds per grid point")->check(CLI::NonNegativeNumber);
  scan_cmd->add_option("--seed", cfg.seed, "First seed; trial i uses seed + i");
  scan_cmd->add_option("--max-links", cfg.max_links, "Cap on rooted K4 links");
  scan_cmd->add_option("--lp-max-triangles", cfg.scan_lp_max_triangles, "Run the LP column only below this size");
  scan_cmd->add_option("--out", cfg.out, "CSV output file");

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitInputError;
  }

  if (!input.empty()) cfg.input = input;
  if (!gen_family.empty()) cfg.gen_family = gen_family;

  if (decompose_cmd->parsed()) return cmd_decompose(cfg, in, out, err);
  if (verify_cmd->parsed()) return cmd_verify(cfg, in, out, err);
  if (oracle_cmd->parsed()) return cmd_oracle(cfg, in, out, err);
  if (gen_cmd->parsed()) return cmd_gen(cfg, in, out, err);
  return cmd_scan(cfg, in, out, err);
}

}  // namespace fractri::cli
