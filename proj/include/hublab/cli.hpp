#pragma once

// Command-line front end. run() never touches the process streams directly,
// so tests can drive it in-process.
//
// Exit codes: 0 success, 1 domain error (bad input data, invalid labeling,
// out-of-range instance), 2 usage error.

#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "hublab/bounds.hpp"
#include "hublab/constructions.hpp"
#include "hublab/graph.hpp"
#include "hublab/greedy.hpp"
#include "hublab/labeling.hpp"
#include "hublab/oracle.hpp"
#include "hublab/report.hpp"
#include "hublab/verify.hpp"

namespace hublab::cli {

class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace detail {

inline Graph load_graph(const std::string& path, std::istream& in) {
  if (path == "-") return read_graph(in);
  std::ifstream f(path);
  if (!f) throw DomainError("cannot open graph file " + path);
  return read_graph(f);
}

inline Labeling load_labels(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw DomainError("cannot open label file " + path);
  return load_labeling(f);
}

template <typename Write>
void write_output(const std::string& path, std::ostream& out, Write&& write) {
  if (path == "-") {
    write(out);
    return;
  }
  std::ofstream f(path);
  if (!f) throw DomainError("cannot write " + path);
  write(f);
  if (!f) throw DomainError("error writing " + path);
}

// Decimal, or binary with a 0b prefix.
inline Vertex parse_vertex(const std::string& text) {
  std::size_t pos = 0;
  unsigned long long v = 0;
  try {
    if (text.size() > 2 && text[0] == '0' && (text[1] == 'b' || text[1] == 'B')) {
      v = std::stoull(text.substr(2), &pos, 2);
      pos += 2;
    } else {
      v = std::stoull(text, &pos, 10);
    }
  } catch (const std::exception&) {
    throw CLI::ValidationError("vertex", "'" + text + "' is not a vertex id");
  }
  if (pos != text.size() || text[0] == '-' || v > std::numeric_limits<Vertex>::max()) {
    throw CLI::ValidationError("vertex", "'" + text + "' is not a vertex id");
  }
  return static_cast<Vertex>(v);
}

inline VertexOrder parse_order(const std::string& text, std::size_t n) {
  if (text == "reverse-id") return VertexOrder::reverse_id(n);
  if (text == "identity") return VertexOrder::identity(n);
  if (text.rfind("random:", 0) == 0) {
    const std::string seed = text.substr(7);
    std::size_t pos = 0;
    unsigned long long s = 0;
    try {
      s = std::stoull(seed, &pos, 10);
    } catch (const std::exception&) {
      pos = std::string::npos;
    }
    if (seed.empty() || pos != seed.size()) {
      throw CLI::ValidationError("--order", "bad seed in '" + text + "'");
    }
    return VertexOrder::random(n, s);
  }
  std::ifstream f(text);
  if (!f) throw DomainError("cannot open order file " + text);
  VertexOrder order = read_vertex_order(f);
  if (order.size() != n) {
    throw DomainError("order file lists " + std::to_string(order.size()) + " vertices, graph has " +
                      std::to_string(n));
  }
  return order;
}

inline int require_hypercube(const Graph& g, const std::string& scheme) {
  auto d = g.hypercube_dimension();
  if (!d) throw DomainError(scheme + " needs a hypercube graph");
  return *d;
}

inline SelfPairs parse_self_pairs(const std::string& s) {
  return s == "on" ? SelfPairs::on : SelfPairs::off;
}

}  // namespace detail

inline int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
               std::ostream& err) {
  CLI::App app{"Hub labeling constructions, checks and bounds", "hublab"};
  app.require_subcommand(1);
  app.fallthrough();
  unsigned threads = 1;
  app.add_option("--threads", threads, "Worker threads for verification")
      ->check(CLI::Range(1u, 256u));

  // gen
  auto* gen = app.add_subcommand("gen", "Write a graph");
  gen->require_subcommand(1);
  int gen_d = 0;
  std::size_t gen_n = 0;
  std::string gen_out = "-";
  auto* gen_cube = gen->add_subcommand("hypercube", "d-dimensional hypercube");
  gen_cube->add_option("--d", gen_d)->required()->check(CLI::Range(0, kMaxHypercubeDimension));
  gen_cube->add_option("--out", gen_out, "Output file, - for stdout");
  std::vector<CLI::App*> gen_families;
  for (const char* name : {"path", "cycle", "star"}) {
    auto* sub = gen->add_subcommand(name, std::string(name) + " graph");
    sub->add_option("--n", gen_n, std::string(name) == "star" ? "Number of leaves" : "Vertices")
        ->required()
        ->check(CLI::Range(std::size_t{0}, std::size_t{1} << 20));
    sub->add_option("--out", gen_out, "Output file, - for stdout");
    gen_families.push_back(sub);
  }

  // build
  auto* build = app.add_subcommand("build", "Construct a labeling");
  std::string scheme, build_graph, build_out = "-", build_order = "reverse-id";
  std::size_t max_n = GreedyOptions{}.max_n;
  std::string build_self_pairs = "on";
  build->add_option("--scheme", scheme)
      ->required()
      ->check(CLI::IsMember({"subset-hhl", "canonical", "halfsplit-hl", "greedy"}));
  build->add_option("--graph", build_graph, "Graph file, - for stdin")->required();
  build->add_option("--out", build_out, "Label file, - for stdout");
  build->add_option("--order", build_order,
                    "canonical only: order file, random:<seed>, reverse-id or identity");
  build->add_option("--max-n", max_n, "greedy only: vertex limit");
  build->add_option("--self-pairs", build_self_pairs, "greedy only: cover {v,v} pairs")
      ->check(CLI::IsMember({"on", "off"}));

  // query
  auto* query_cmd = app.add_subcommand("query", "Distance from two labels");
  std::string query_labels, query_s, query_t;
  bool query_show_hub = false;
  query_cmd->add_option("--labels", query_labels)->required();
  query_cmd->add_option("--s", query_s, "Vertex id, decimal or 0b...")->required();
  query_cmd->add_option("--t", query_t, "Vertex id, decimal or 0b...")->required();
  query_cmd->add_flag("--hub", query_show_hub, "Also print the meeting hub");

  // verify
  auto* verify = app.add_subcommand("verify", "Check the cover property");
  std::string verify_graph, verify_labels, verify_self_pairs = "off";
  bool verify_hierarchy = false;
  std::size_t verify_samples = 0;
  std::uint64_t verify_seed = 1;
  verify->add_option("--graph", verify_graph, "Graph file, - for stdin")->required();
  verify->add_option("--labels", verify_labels)->required();
  verify->add_flag("--hierarchy", verify_hierarchy, "Also test whether the labeling is hierarchical");
  verify->add_option("--self-pairs", verify_self_pairs, "Require v in L(v)")
      ->check(CLI::IsMember({"on", "off"}));
  verify->add_option("--samples", verify_samples, "Check this many random pairs (0: all pairs)");
  verify->add_option("--seed", verify_seed, "Seed for --samples");

  // bounds
  auto* bounds = app.add_subcommand("bounds", "Lower-bound tables");
  int bounds_d = 0;
  bool bounds_lp = false, bounds_oracle = false, bounds_tsv = false;
  std::string bounds_self_pairs = "on";
  bounds->add_option("--d", bounds_d)->required()->check(CLI::Range(0, 5000));
  bounds->add_flag("--lp", bounds_lp, "Solve the exact LPs that fit");
  bounds->add_flag("--oracle", bounds_oracle, "Run the brute-force oracles that fit");
  bounds->add_flag("--tsv", bounds_tsv, "Tab-separated table only");
  bounds->add_option("--self-pairs", bounds_self_pairs)->check(CLI::IsMember({"on", "off"}));

  // oracle
  auto* oracle = app.add_subcommand("oracle", "Exact minimum labeling of a tiny graph");
  std::string oracle_graph, oracle_mode = "hl", oracle_out, oracle_self_pairs = "on";
  oracle->add_option("--graph", oracle_graph, "Graph file, - for stdin")->required();
  oracle->add_option("--mode", oracle_mode)->check(CLI::IsMember({"hl", "hhl-orders"}));
  oracle->add_option("--out", oracle_out, "Write the witness labeling here");
  oracle->add_option("--self-pairs", oracle_self_pairs, "hl mode only")
      ->check(CLI::IsMember({"on", "off"}));

  // gap-report
  auto* gap = app.add_subcommand("gap-report", "3^d against the half-split size");
  int gap_d_max = 0;
  bool gap_tsv = false;
  GapOptions gap_opts;
  gap->add_option("--d-max", gap_d_max)->required()->check(CLI::Range(0, 200));
  gap->add_flag("--tsv", gap_tsv);
  gap->add_option("--materialize-max", gap_opts.materialize_max,
                  "Build and check labelings up to this d")
      ->check(CLI::Range(-1, 14));
  gap->add_option("--samples", gap_opts.samples, "Sampled pairs above d=8");
  gap->add_option("--seed", gap_opts.seed);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return 2;
  }

  try {
    if (gen->parsed()) {
      Graph g;
      if (gen_cube->parsed()) {
        g = hypercube(gen_d);
      } else if (gen_families[0]->parsed()) {
        g = path_graph(gen_n);
      } else if (gen_families[1]->parsed()) {
        g = cycle_graph(gen_n);
      } else {
        g = star_graph(gen_n);
      }
      detail::write_output(gen_out, out, [&](std::ostream& o) { write_graph(o, g); });
      return 0;
    }

    if (build->parsed()) {
      const Graph g = detail::load_graph(build_graph, in);
      Labeling lab;
      if (scheme == "greedy") {
        GreedyOptions opts;
        opts.max_n = max_n;
        opts.self_pairs = detail::parse_self_pairs(build_self_pairs);
        lab = greedy_hl(g, opts, [&](const ProgressEntry& p) {
                err << "greedy iteration " << p.iteration << ": uncovered " << p.uncovered
                    << ", size " << p.size << '\n';
              }).labeling;
      } else {
        const int d = detail::require_hypercube(g, scheme);
        if (scheme == "subset-hhl") {
          lab = subset_hhl(d);
        } else if (scheme == "halfsplit-hl") {
          lab = halfsplit_hl(d);
        } else {
          lab = canonical_labeling(d, detail::parse_order(build_order, g.vertex_count()));
        }
      }
      detail::write_output(build_out, out, [&](std::ostream& o) { save_labeling(o, lab); });
      return 0;
    }

    if (query_cmd->parsed()) {
      const Labeling lab = detail::load_labels(query_labels);
      const Vertex s = detail::parse_vertex(query_s);
      const Vertex t = detail::parse_vertex(query_t);
      if (s >= lab.vertex_count() || t >= lab.vertex_count()) {
        throw DomainError("vertex out of range for a labeling of " +
                          std::to_string(lab.vertex_count()) + " vertices");
      }
      auto hit = query_hub(lab, s, t);
      if (!hit) {
        out << "no common hub\n";
        return 1;
      }
      out << hit->distance;
      if (query_show_hub) out << " via hub " << hit->hub;
      out << '\n';
      return 0;
    }

    if (verify->parsed()) {
      const Graph g = detail::load_graph(verify_graph, in);
      const Labeling lab = detail::load_labels(verify_labels);
      CoverOptions opts;
      opts.self_pairs = detail::parse_self_pairs(verify_self_pairs);
      opts.threads = threads;
      const CoverReport report = verify_samples == 0
                                     ? verify_cover(g, lab, opts)
                                     : verify_cover_sampled(g, lab, verify_samples, verify_seed, opts);
      std::optional<HierarchyReport> hier;
      if (verify_hierarchy) hier = is_hierarchical(lab);

      out << "cover: ";
      if (report.valid) {
        out << "OK";
      } else {
        out << "FAIL (uncovered pairs: " << report.violation_count
            << ", wrong distances: " << report.mismatch_count << ")";
      }
      if (hier) out << ", hierarchical: " << (hier->hierarchical ? "yes" : "no");
      out << ", size: " << lab.total_size() << '\n';
      for (auto [s, t] : report.violations) out << "uncovered pair: " << s << ' ' << t << '\n';
      for (auto [v, h] : report.distance_mismatches) {
        out << "wrong distance: vertex " << v << " hub " << h << '\n';
      }
      if (hier && !hier->hierarchical) {
        out << "witness:";
        for (Vertex v : hier->witness) out << ' ' << v << " ->";
        out << ' ' << hier->witness.front() << '\n';
      }
      return report.valid ? 0 : 1;
    }

    if (bounds->parsed()) {
      BoundOptions opts;
      opts.lp = bounds_lp;
      opts.oracle = bounds_oracle;
      opts.self_pairs = detail::parse_self_pairs(bounds_self_pairs);
      const BoundReport report = make_bound_report(bounds_d, opts);
      if (bounds_tsv) {
        print_bound_tsv(out, report);
      } else {
        print_bound_report(out, report);
      }
      for (const auto& s : report.sandwiches) {
        if (!s.holds) return 1;
      }
      return 0;
    }

    if (oracle->parsed()) {
      const Graph g = detail::load_graph(oracle_graph, in);
      OracleResult result;
      if (oracle_mode == "hl") {
        result = brute_optimal_hl(g, detail::parse_self_pairs(oracle_self_pairs));
        out << "optimum: " << result.optimum << '\n';
        out << "nodes: " << result.stats.nodes << '\n';
      } else {
        const int d = detail::require_hypercube(g, "hhl-orders");
        HhlOrderResult r = brute_optimal_hhl_hypercube(d);
        out << "optimum: " << r.best.optimum << '\n';
        out << "largest: " << r.largest << '\n';
        out << "orders: " << r.orders << '\n';
        result = std::move(r.best);
      }
      if (!oracle_out.empty()) {
        detail::write_output(oracle_out, out, [&](std::ostream& o) { save_labeling(o, result.witness); });
      }
      return 0;
    }

    if (gap->parsed()) {
      gap_opts.threads = threads;
      const auto rows = make_gap_report(gap_d_max, gap_opts);
      if (gap_tsv) {
        print_gap_tsv(out, rows);
      } else {
        print_gap_report(out, rows);
      }
      for (const auto& r : rows) {
        if (r.materialized && !r.verified) return 1;
      }
      return 0;
    }
  } catch (const CLI::ValidationError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return 2;
}

inline int run(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return run(args, std::cin, std::cout, std::cerr);
}

}  // namespace hublab::cli
