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


// Acceptance runner: one PASS/FAIL line per criterion. Exit status is the
// number of failed criteria.

#include <chrono>
#include <cstring>
#include <filesystem>
#include <iostream>
#include <sstream>
#include <string>

#include "test_graphs.hpp"
#include "wlbind/wlbind.hpp"

namespace {

using namespace wlbind;
using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

int failures = 0;

void report(int id, bool ok, const std::string& what, const std::string& detail) {
  std::cout << (ok ? "PASS" : "FAIL") << " criterion " << id << ": " << what << " [" << detail << "]" << std::endl;
  failures += !ok;
}

std::string dims_string(const std::vector<std::size_t>& dims) {
  std::string s;
  for (std::size_t d : dims) s += (s.empty() ? "" : ",") + std::to_string(d);
  return s;
}

void ten_vertex_example() {
  const auto t0 = Clock::now();
  const auto x = stabilize(testing::ten_vertex_graph());
  const auto form = StableGraph::certify(apply_permutation(x.graph(), cell_block_order(x)));
  const std::string blocks = block_partition(form, 1).to_string();
  const double secs = seconds_since(t0);
  const bool ok = x.trace().dims == std::vector<std::size_t>{3, 5, 17, 20, 20} && x.dim() == 20 &&
                  x.cells().to_string() == "{1,6},{2,5,8,9},{3,4,7,10}" &&
                  blocks == "{1},{2},{3,4},{5,6},{7,8,9,10}" && secs < 1.0;
  std::ostringstream d;
  d << "dims " << dims_string(x.trace().dims) << "; cells " << x.cells().to_string() << "; blocks(1) " << blocks
    << "; " << secs << " s";
  report(1, ok, "ten-vertex stabilization", d.str());
}

void printed_bindings() {
  const auto t0 = Clock::now();
  bool ok = true;
  std::ostringstream d;
  for (const auto& b : testing::printed_bindings()) {
    const auto x = stabilize(bind(b.basic).labeled());
    ok = ok && x.dim() == b.dim && x.cells() == Partition(b.cells);
    d << b.name << " " << x.dim() << " " << x.cells().to_string() << "; ";
  }
  const double secs = seconds_since(t0);
  ok = ok && secs < 1.0;
  d << secs << " s";
  report(2, ok, "binding graph dimensions and cells", d.str());
}

void engine_laws() {
  const char* laws[] = {"refinement_chain", "rounds_recognize_vertices", "endpoint_labels", "converse_labels",
                        "cell_multisets",   "equivariance",              "idempotence",     "equatable_blocks",
                        "aut_preserved"};
  auto graphs = testing::connected_upto(5);
  for (auto& g : testing::random_graphs(200, 1, 10, 2026)) graphs.push_back(std::move(g));
  std::mt19937_64 rng(31);
  std::size_t checks = 0, failed = 0;
  for (const char* law : laws) {
    for (const auto& g : graphs) {
      Json params = Json::object();
      if (std::strcmp(law, "equivariance") == 0) params["perm"] = permutation_json(random_permutation(g.order(), rng));
      const auto res = check_claim(law, {g}, params);
      ++checks;
      failed += !res.pass || res.skipped;
    }
  }
  report(3, failed == 0, "engine laws on connected n<=5 plus 200 random n<=10",
         std::to_string(graphs.size()) + " graphs, " + std::to_string(checks) + " checks, " + std::to_string(failed) +
             " failed");
}

bool verified(const ExperimentReport& r, std::string& detail) {
  const auto problems = verify_report(r);
  detail += r.experiment + ": " + std::to_string(r.cases.size()) + " cases, agree " +
            r.summary.at("agree").dump() + ", disagree " + r.summary.at("disagree").dump() + ", skipped " +
            r.summary.at("skipped").dump() + ", verify problems " + std::to_string(problems.size()) + "; ";
  for (const auto& p : problems) std::cerr << r.experiment << ": " << p << "\n";
  return problems.empty() && r.summary.at("skipped") == 0;
}

void structural_suite(const std::string& dir) {
  const auto t0 = Clock::now();
  const auto r = run_lemma_suite(5);
  const double secs = seconds_since(t0);
  std::string d;
  const bool ok = verified(r, d) && r.summary.at("disagree") == 0 && secs < 600.0;
  if (!dir.empty()) write_report(r, dir + "/lemmas.json");
  report(4, ok, "structural suite on connected n<=5", d + std::to_string(secs) + " s");
}

void corpus_experiments(const std::string& dir) {
  const auto t0 = Clock::now();
  const auto agreement = run_agreement(6);
  const auto orbits = run_orbit_check(6);
  const double secs = seconds_since(t0);
  std::string d;
  bool ok = verified(agreement, d);
  ok = verified(orbits, d) && ok;
  ok = ok && agreement.summary.at("soundness_violations") == 0 && secs < 7200.0;
  d += "soundness violations " + agreement.summary.at("soundness_violations").dump() + ", completeness violations " +
       agreement.summary.at("completeness_violations").dump() + "; " + std::to_string(secs) + " s";
  if (!dir.empty()) {
    write_report(agreement, dir + "/agreement.json");
    write_report(orbits, dir + "/orbit-check.json");
  }
  report(5, ok, "agreement and orbit-check at max-n 6", d);
}

void bench(const std::string& dir) {
  const auto r = bench_scaling({8, 12, 16}, 3, 1);
  double worst16 = 0.0;
  for (const auto& c : r.cases) {
    if (c.detail.at("n") == 16) worst16 = std::max(worst16, c.detail.at("ms").get<double>());
  }
  const bool ok = r.cases.size() == 9 && worst16 < 60000.0 && r.summary.contains("loglog_slope") &&
                  r.summary.at("planted_misses") == 0;
  if (!dir.empty()) write_report(r, dir + "/bench.json");
  report(6, ok, "bench --sizes 8,12,16",
         "slowest n=16 pair " + std::to_string(worst16) + " ms; log-log slope " + r.summary.at("loglog_slope").dump() +
             "; planted misses " + r.summary.at("planted_misses").dump());
}

void graph6_round_trip() {
  std::size_t graphs = 0, bad = 0;
  for (std::size_t n = 1; n <= 5; ++n) {
    const std::size_t slots = n * (n - 1) / 2;
    for (std::uint32_t mask = 0; mask < (1u << slots); ++mask, ++graphs) {
      SimpleGraph g(n);
      std::uint32_t k = 0;
      for (Vertex j = 2; j <= n; ++j) {
        for (Vertex i = 1; i < j; ++i, ++k) {
          if (mask >> k & 1u) g.add_edge(i, j);
        }
      }
      const std::string s = encode_graph6(g);
      bad += parse_graph6(s) != g || encode_graph6(parse_graph6(s)) != s;
    }
  }
  report(7, bad == 0, "graph6 round-trip on all graphs n<=5",
         std::to_string(graphs) + " labeled graphs, " + std::to_string(bad) + " mismatches");
}

}  // namespace

int main(int argc, char** argv) {
  std::string dir;
  for (int k = 1; k < argc; ++k) {
    if (std::strcmp(argv[k], "--report-dir") == 0 && k + 1 < argc) dir = argv[++k];
  }
  if (!dir.empty()) std::filesystem::create_directories(dir);
  try {
    ten_vertex_example();
    printed_bindings();
    engine_laws();
    structural_suite(dir);
    corpus_experiments(dir);
    bench(dir);
    graph6_round_trip();
  } catch (const std::exception& e) {
    std::cerr << "acceptance aborted: " << e.what() << "\n";
    return 100;
  }
  return failures;
}
