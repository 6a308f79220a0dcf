// Copyright 2026 The wlbind Authors.
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// wlbind command-line tool. Exit codes: 0 success (or "isomorphic" for iso),
// 1 "non-isomorphic" / failed verification, 2 usage, parse or budget errors.

#include <CLI11.hpp>

#include <cstdio>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "wlbind/wlbind.hpp"

namespace {

using namespace wlbind;

GraphFormat format_from(const std::string& name) {
  static const std::map<std::string, GraphFormat> kFormats = {
      {"auto", GraphFormat::kAuto}, {"graph6", GraphFormat::kGraph6}, {"adj", GraphFormat::kAdjList}};
  return kFormats.at(name);
}

void print_matrix(const LabeledGraph& g) {
  for (std::size_t i = 0; i < g.order(); ++i) {
    for (std::size_t j = 0; j < g.order(); ++j) std::cout << (j ? " " : "") << value(g.raw(i, j));
    std::cout << "\n";
  }
}

int cmd_stabilize(const std::string& path, const std::string& format, bool trace, bool quiet) {
  const SimpleGraph g = read_graph_file(path, format_from(format));
  const StableGraph x = stabilize(g);
  if (!quiet) print_matrix(x.graph());
  std::cout << "dim " << x.dim() << "\n";
  if (trace) {
    std::cout << "rounds " << x.trace().rounds << "\ndims";
    for (std::size_t d : x.trace().dims) std::cout << " " << d;
    std::cout << "\n";
    if (x.trace().exceeds_nlogn) std::cout << "note: rounds exceed n*log2(n)\n";
  }
  std::cout << "cells " << x.cells().to_string() << "\n";
  return 0;
}

int cmd_bind(const std::string& path, const std::string& format, const std::string& emit) {
  const BindingGraph b = bind(read_graph_file(path, format_from(format)));
  if (emit == "adj") {
    std::cout << emit_adjlist(b.graph());
  } else {
    std::cout << encode_graph6(b.graph()) << "\n";
  }
  return 0;
}

int cmd_iso(const std::string& a, const std::string& b, const std::string& format, bool oracle) {
  const SimpleGraph g = read_graph_file(a, format_from(format));
  const SimpleGraph h = read_graph_file(b, format_from(format));
  const GiVerdict v = decide_iso(g, h);
  std::cout << "gi " << to_string(v.decision) << "\n";
  if (!v.shortcut.empty()) {
    std::cout << "reason " << v.shortcut << "\n";
  } else {
    std::cout << "stable_dim " << v.stable_dim << "\nrounds " << v.rounds << "\nshared_basic_cells "
              << v.shared_basic_cells.size() << "\ntime_ms " << v.timing_ms << "\n";
  }
  if (oracle) {
    const auto witness = find_isomorphism(g, h);
    std::cout << "oracle " << (witness ? "iso" : "noniso") << "\n";
    if (witness) {
      std::cout << "witness";
      for (Vertex w : witness->images()) std::cout << " " << w;
      std::cout << "\n";
    }
    if (witness.has_value() != (v.decision == Decision::kIsomorphic)) std::cout << "DISAGREE\n";
  }
  return v.decision == Decision::kIsomorphic ? 0 : 1;
}

int cmd_orbits(const std::string& path, const std::string& format, bool use_oracle, bool binding) {
  const SimpleGraph g = read_graph_file(path, format_from(format));
  if (binding) {
    const BindingGraph b = bind(g);
    std::cout << (use_oracle ? orbit_partition(b) : stabilize(b.labeled()).cells()).to_string() << "\n";
  } else {
    std::cout << (use_oracle ? orbit_partition(g.labeled()) : stabilize(g).cells()).to_string() << "\n";
  }
  return 0;
}

void write_or_print(const ExperimentReport& r, const std::string& out) {
  if (out.empty() || out == "-") {
    std::cout << emit_report(r);
  } else {
    write_report(r, out);
  }
  std::cerr << r.experiment << ": " << r.summary.dump() << "\n";
}

int cmd_harness(const std::string& which, std::size_t max_n, const std::string& out, std::uint64_t seed,
                const std::vector<std::string>& extra) {
  if (which == "agreement") {
    write_or_print(run_agreement(max_n), out);
  } else if (which == "orbit-check") {
    write_or_print(run_orbit_check(max_n), out);
  } else {
    LemmaSuiteOptions options;
    options.seed = seed;
    for (const auto& path : extra) options.extra.push_back(read_graph_file(path));
    write_or_print(run_lemma_suite(max_n, options), out);
  }
  return 0;
}

int cmd_verify(const std::string& path) {
  const ExperimentReport r = read_report(path);
  const auto problems = verify_report(r);
  for (const auto& p : problems) std::cout << "problem: " << p << "\n";
  std::cout << r.experiment << ": " << r.cases.size() << " cases, " << r.counterexamples.size()
            << " counterexamples, " << (problems.empty() ? "verified" : "NOT verified") << "\n";
  return problems.empty() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"wlbind: 2-WL refinement, binding graphs and isomorphism experiments"};
  app.require_subcommand(1);

  std::string format = "auto";
  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", format, "Input format")->check(CLI::IsMember({"auto", "graph6", "adj"}));
  };

  std::string file_a, file_b, emit = "graph6", out;
  bool trace = false, quiet = false, with_oracle = false, orbit_oracle = false, orbit_wl = false, binding = false;

  auto* st = app.add_subcommand("stabilize", "Print the stable matrix, dimensions and cells");
  st->add_option("file", file_a, "Graph file")->required();
  st->add_flag("--trace", trace, "Print per-round dimensions");
  st->add_flag("--quiet", quiet, "Omit the matrix");
  add_format(st);

  auto* bd = app.add_subcommand("bind", "Emit the binding graph");
  bd->add_option("file", file_a, "Graph file")->required();
  bd->add_option("--emit", emit, "Output format")->check(CLI::IsMember({"graph6", "adj"}));
  add_format(bd);

  auto* iso = app.add_subcommand("iso", "Decide isomorphism of two connected graphs");
  iso->add_option("a", file_a, "First graph file")->required();
  iso->add_option("b", file_b, "Second graph file")->required();
  iso->add_flag("--oracle", with_oracle, "Also run the brute-force search");
  add_format(iso);

  auto* orb = app.add_subcommand("orbits", "Print the stable cells or the automorphism orbits");
  orb->add_option("file", file_a, "Graph file")->required();
  auto* wl_flag = orb->add_flag("--wl", orbit_wl, "Stable cells (default)");
  orb->add_flag("--oracle", orbit_oracle, "Automorphism orbits")->excludes(wl_flag);
  orb->add_flag("--binding", binding, "Use the binding graph of the input");
  add_format(orb);

  auto* hs = app.add_subcommand("harness", "Run a corpus experiment");
  std::string which;
  std::size_t max_n = 5;
  std::uint64_t seed = 1;
  std::vector<std::string> extra;
  hs->add_option("experiment", which, "agreement | orbit-check | lemmas")
      ->required()
      ->check(CLI::IsMember({"agreement", "orbit-check", "lemmas"}));
  hs->add_option("--max-n", max_n, "Largest basic order")->check(CLI::Range(2, 6));
  hs->add_option("--out", out, "Report path ('-' for stdout)");
  hs->add_option("--seed", seed, "Seed for randomized parameters");
  hs->add_option("--extra", extra, "Extra graph files for the lemma suite");

  auto* bn = app.add_subcommand("bench", "Time the decider on random connected pairs");
  std::vector<std::size_t> sizes = {8, 12, 16};
  std::size_t samples = 3;
  double p = 0.5;
  bn->add_option("--sizes", sizes, "Ascending basic orders")->delimiter(',');
  bn->add_option("--samples", samples, "Pairs per size");
  bn->add_option("--seed", seed, "Random seed");
  bn->add_option("--p", p, "Edge probability")->check(CLI::Range(0.0, 1.0));
  bn->add_option("--out", out, "Report path ('-' for stdout)");

  auto* vr = app.add_subcommand("verify-report", "Replay every counterexample in a report");
  vr->add_option("file", file_a, "Report path")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (st->parsed()) return cmd_stabilize(file_a, format, trace, quiet);
    if (bd->parsed()) return cmd_bind(file_a, format, emit);
    if (iso->parsed()) return cmd_iso(file_a, file_b, format, with_oracle);
    if (orb->parsed()) return cmd_orbits(file_a, format, orbit_oracle, binding);
    if (hs->parsed()) return cmd_harness(which, max_n, out, seed, extra);
    if (bn->parsed()) {
      write_or_print(bench_scaling(sizes, samples, seed, p), out);
      return 0;
    }
    if (vr->parsed()) return cmd_verify(file_a);
  } catch (const BudgetExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
