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

// Corpora and experiments: exhaustive small-graph enumeration, seeded random
// graphs, the decider-vs-oracle agreement sweep, the cells-vs-orbits check,
// the per-graph claim suite and the scaling benchmark.

#ifndef WLBIND_HARNESS_HPP_
#define WLBIND_HARNESS_HPP_

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "wlbind/binding.hpp"
#include "wlbind/claims.hpp"
#include "wlbind/codec.hpp"
#include "wlbind/decider.hpp"
#include "wlbind/graph.hpp"
#include "wlbind/oracle.hpp"
#include "wlbind/report.hpp"
#include "wlbind/wl.hpp"

namespace wlbind {

inline constexpr std::size_t kMaxEnumerationOrder = 7;
inline constexpr std::size_t kMaxExperimentOrder = 6;

namespace detail {

// Edge slots in graph6 bit order: (1,2),(1,3),(2,3),(1,4),...
inline std::vector<std::pair<Vertex, Vertex>> edge_slots(std::size_t n) {
  std::vector<std::pair<Vertex, Vertex>> slots;
  for (Vertex j = 2; j <= n; ++j) {
    for (Vertex i = 1; i < j; ++i) slots.emplace_back(i, j);
  }
  return slots;
}

inline std::vector<std::uint32_t> slot_index(std::size_t n) {
  std::vector<std::uint32_t> index(n * n, 0);
  std::uint32_t k = 0;
  for (std::size_t j = 1; j < n; ++j) {
    for (std::size_t i = 0; i < j; ++i, ++k) index[i * n + j] = index[j * n + i] = k;
  }
  return index;
}

inline double elapsed_ms(std::chrono::steady_clock::time_point since) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - since).count();
}

inline double median(std::vector<double> v) {
  if (v.empty()) return 0.0;
  std::sort(v.begin(), v.end());
  const std::size_t m = v.size() / 2;
  return v.size() % 2 ? v[m] : (v[m - 1] + v[m]) / 2.0;
}

}  // namespace detail

// One graph per isomorphism class, in order of the smallest edge bitmask
// (graph6 bit order) in the class. Every relabeling of each accepted graph
// is marked, so a later bitmask is accepted only if no permutation maps an
// earlier representative onto it.
inline std::vector<SimpleGraph> enumerate_graphs(std::size_t n, bool connected_only) {
  if (n < 1) throw std::invalid_argument("enumerate_graphs: order must be >= 1");
  if (n > kMaxEnumerationOrder) {
    throw std::invalid_argument("enumerate_graphs: order " + std::to_string(n) + " exceeds " +
                                std::to_string(kMaxEnumerationOrder));
  }
  const auto slots = detail::edge_slots(n);
  const auto index = detail::slot_index(n);
  const std::uint32_t total = 1u << slots.size();
  std::vector<bool> seen(total, false);
  std::vector<std::size_t> perm(n);
  std::vector<SimpleGraph> out;
  for (std::uint32_t mask = 0; mask < total; ++mask) {
    if (seen[mask]) continue;
    std::iota(perm.begin(), perm.end(), std::size_t{0});
    do {
      std::uint32_t image = 0;
      for (std::size_t k = 0; k < slots.size(); ++k) {
        if (mask >> k & 1u) image |= 1u << index[perm[slots[k].first - 1] * n + perm[slots[k].second - 1]];
      }
      seen[image] = true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    SimpleGraph g(n);
    for (std::size_t k = 0; k < slots.size(); ++k) {
      if (mask >> k & 1u) g.add_edge(slots[k].first, slots[k].second);
    }
    if (!connected_only || g.is_connected()) out.push_back(std::move(g));
  }
  return out;
}

// Portable Bernoulli draw from the top 53 bits of one engine output.
inline bool bernoulli(std::mt19937_64& rng, double p) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53 < p;
}

inline SimpleGraph random_graph(std::size_t n, double p, std::mt19937_64& rng) {
  SimpleGraph g(n);
  for (Vertex j = 2; j <= n; ++j) {
    for (Vertex i = 1; i < j; ++i) {
      if (bernoulli(rng, p)) g.add_edge(i, j);
    }
  }
  return g;
}

inline SimpleGraph random_connected_graph(std::size_t n, double p, std::mt19937_64& rng,
                                          std::size_t max_tries = 1'000'000) {
  for (std::size_t t = 0; t < max_tries; ++t) {
    SimpleGraph g = random_graph(n, p, rng);
    if (g.is_connected()) return g;
  }
  throw std::runtime_error("random_connected_graph: no connected sample after " + std::to_string(max_tries) +
                           " tries (n=" + std::to_string(n) + ")");
}

inline Permutation random_permutation(std::size_t n, std::mt19937_64& rng) {
  std::vector<Vertex> images(n);
  std::iota(images.begin(), images.end(), Vertex{1});
  for (std::size_t k = n; k > 1; --k) std::swap(images[k - 1], images[rng() % k]);
  return Permutation::from_images(images);
}

inline std::vector<std::string> to_graph6(std::initializer_list<const SimpleGraph*> graphs) {
  std::vector<std::string> out;
  for (const SimpleGraph* g : graphs) out.push_back(encode_graph6(*g));
  return out;
}

inline Json permutation_json(const Permutation& p) { return Json(p.images()); }

struct CaseTally {
  std::size_t agree = 0, disagree = 0, skipped = 0;
};

inline CaseTally tally(const ExperimentReport& r) {
  CaseTally t;
  for (const auto& c : r.cases) {
    if (c.oracle == "skipped") {
      ++t.skipped;
    } else if (c.agree) {
      ++t.agree;
    } else {
      ++t.disagree;
    }
  }
  return t;
}

inline void finish_report(ExperimentReport& r, const std::vector<double>& case_ms, double total_ms, Json extra) {
  const CaseTally t = tally(r);
  r.total_ms = std::round(total_ms * 1000.0) / 1000.0;
  r.per_case_median_ms = std::round(detail::median(case_ms) * 1000.0) / 1000.0;
  Json s;
  s["cases_total"] = r.cases.size();
  s["agree"] = t.agree;
  s["disagree"] = t.disagree;
  s["skipped"] = t.skipped;
  for (auto& [k, v] : extra.items()) s[k] = v;
  r.summary = std::move(s);
}

// Connected graphs of orders 2..max_n.
inline std::vector<std::pair<std::size_t, std::vector<SimpleGraph>>> connected_corpus(std::size_t max_n) {
  std::vector<std::pair<std::size_t, std::vector<SimpleGraph>>> out;
  for (std::size_t n = 2; n <= max_n; ++n) out.emplace_back(n, enumerate_graphs(n, true));
  return out;
}

inline void check_experiment_order(std::size_t max_n, const char* what) {
  if (max_n < 2 || max_n > kMaxExperimentOrder) {
    throw std::invalid_argument(std::string(what) + ": max-n must be in [2," + std::to_string(kMaxExperimentOrder) +
                                "], got " + std::to_string(max_n));
  }
}

// Every unordered pair (self-pairs included) of equal-order connected graphs.
inline ExperimentReport run_agreement(std::size_t max_n, const OracleOptions& options = {}) {
  check_experiment_order(max_n, "agreement");
  const auto start = std::chrono::steady_clock::now();
  ExperimentReport r;
  r.experiment = "agreement";
  std::vector<double> case_ms;
  Json pairs_per_n = Json::object();
  std::size_t soundness = 0, completeness = 0;
  for (const auto& [n, graphs] : connected_corpus(max_n)) {
    r.per_n[n] = graphs.size();
    std::size_t pairs = 0;
    for (std::size_t i = 0; i < graphs.size(); ++i) {
      for (std::size_t j = i; j < graphs.size(); ++j, ++pairs) {
        const auto t0 = std::chrono::steady_clock::now();
        const GiVerdict v = decide_iso(graphs[i], graphs[j]);
        CaseRecord c;
        c.id = r.cases.size();
        c.graphs = to_graph6({&graphs[i], &graphs[j]});
        c.gi = to_string(v.decision);
        c.detail["n"] = n;
        c.detail["stable_dim"] = v.stable_dim;
        c.detail["rounds"] = v.rounds;
        std::optional<Permutation> witness;
        try {
          witness = find_isomorphism(graphs[i], graphs[j], options);
          c.oracle = witness ? "iso" : "noniso";
          c.agree = c.gi == c.oracle;
        } catch (const BudgetExceeded& e) {
          c.oracle = "skipped";
          c.detail["reason"] = e.what();
        }
        case_ms.push_back(detail::elapsed_ms(t0));
        if (c.oracle != "skipped" && !c.agree) {
          (witness ? soundness : completeness) += 1;
          Counterexample ce;
          ce.case_id = c.id;
          ce.kind = "agreement";
          ce.graphs = c.graphs;
          ce.gi = c.gi;
          ce.oracle = c.oracle;
          if (witness) ce.evidence["witness"] = permutation_json(*witness);
          Json cells = Json::array();
          for (const auto& cell : v.shared_basic_cells) cells.push_back(cell);
          ce.evidence["shared_basic_cells"] = cells;
          r.counterexamples.push_back(std::move(ce));
        }
        r.cases.push_back(std::move(c));
      }
    }
    pairs_per_n[std::to_string(n)] = pairs;
  }
  Json extra;
  extra["pairs_per_n"] = pairs_per_n;
  extra["soundness_violations"] = soundness;
  extra["completeness_violations"] = completeness;
  finish_report(r, case_ms, detail::elapsed_ms(start), std::move(extra));
  return r;
}

// Stable cells of [G] against the orbits of Aut([G]).
inline ExperimentReport run_orbit_check(std::size_t max_n, const OracleOptions& options = {}) {
  check_experiment_order(max_n, "orbit-check");
  const auto start = std::chrono::steady_clock::now();
  ExperimentReport r;
  r.experiment = "orbit-check";
  std::vector<double> case_ms;
  std::size_t floor_violations = 0;
  for (const auto& [n, graphs] : connected_corpus(max_n)) {
    r.per_n[n] = graphs.size();
    for (const auto& g : graphs) {
      const auto t0 = std::chrono::steady_clock::now();
      const auto b = bind(g);
      const auto x = stabilize(b.labeled());
      CaseRecord c;
      c.id = r.cases.size();
      c.graphs = to_graph6({&g});
      c.gi = x.cells().to_string();
      c.detail["n"] = n;
      c.detail["binding_order"] = b.order();
      try {
        const Partition orbits = orbit_partition(b, options);
        c.oracle = orbits.to_string();
        c.agree = orbits == x.cells();
        const bool floor = orbits.refines(x.cells());
        c.detail["orbits_refine_cells"] = floor;
        floor_violations += !floor;
      } catch (const BudgetExceeded& e) {
        c.oracle = "skipped";
        c.detail["reason"] = e.what();
      }
      case_ms.push_back(detail::elapsed_ms(t0));
      if (c.oracle != "skipped" && !c.agree) {
        Counterexample ce;
        ce.case_id = c.id;
        ce.kind = "orbit";
        ce.graphs = c.graphs;
        ce.gi = c.gi;
        ce.oracle = c.oracle;
        r.counterexamples.push_back(std::move(ce));
      }
      r.cases.push_back(std::move(c));
    }
  }
  Json extra;
  extra["orbit_floor_violations"] = floor_violations;
  finish_report(r, case_ms, detail::elapsed_ms(start), std::move(extra));
  return r;
}

struct LemmaSuiteOptions {
  std::uint64_t seed = 1;
  // Extra single graphs checked alongside the corpus (any order >= 1).
  std::vector<SimpleGraph> extra;
  OracleOptions oracle;
};

// One case per (claim, graph) or (claim, graph pair).
inline ExperimentReport run_lemma_suite(std::size_t max_n, const LemmaSuiteOptions& options = {}) {
  check_experiment_order(max_n, "lemmas");
  const auto start = std::chrono::steady_clock::now();
  ExperimentReport r;
  r.experiment = "lemmas";
  r.seed = options.seed;
  std::mt19937_64 rng(options.seed);
  std::vector<double> case_ms;
  Json per_claim = Json::object();

  auto run_case = [&](const Claim& claim, std::vector<SimpleGraph> graphs) {
    Json params = Json::object();
    if (std::string_view(claim.name) == "equivariance") {
      params["perm"] = permutation_json(random_permutation(graphs[0].order(), rng));
    }
    const auto t0 = std::chrono::steady_clock::now();
    const ClaimResult res = check_claim(claim.name, graphs, params, options.oracle);
    case_ms.push_back(detail::elapsed_ms(t0));
    CaseRecord c;
    c.id = r.cases.size();
    for (const auto& g : graphs) c.graphs.push_back(encode_graph6(g));
    c.gi = res.pass ? "pass" : "fail";
    c.oracle = res.skipped ? "skipped" : "checked";
    c.agree = res.pass && !res.skipped;
    c.detail["claim"] = claim.name;
    c.detail["n"] = graphs[0].order();
    if (!params.empty()) c.detail["params"] = params;
    if (!res.note.empty()) c.detail["note"] = res.note;
    auto& slot = per_claim[claim.name];
    if (slot.is_null()) slot = Json{{"pass", 0}, {"fail", 0}, {"skipped", 0}};
    const char* bucket = res.skipped ? "skipped" : res.pass ? "pass" : "fail";
    slot[bucket] = slot[bucket].get<int>() + 1;
    if (!res.pass && !res.skipped) {
      Counterexample ce;
      ce.case_id = c.id;
      ce.kind = "claim";
      ce.graphs = c.graphs;
      ce.gi = c.gi;
      ce.oracle = c.oracle;
      ce.evidence["claim"] = claim.name;
      ce.evidence["params"] = params;
      ce.evidence["note"] = res.note;
      r.counterexamples.push_back(std::move(ce));
    }
    r.cases.push_back(std::move(c));
  };

  const auto corpus = connected_corpus(max_n);
  for (const auto& [n, graphs] : corpus) r.per_n[n] = graphs.size();
  for (const auto& claim : claim_table()) {
    for (const auto& [n, graphs] : corpus) {
      if (n < claim.min_order) continue;
      for (std::size_t i = 0; i < graphs.size(); ++i) {
        if (claim.arity == 1) {
          run_case(claim, {graphs[i]});
        } else {
          for (std::size_t j = i; j < graphs.size(); ++j) run_case(claim, {graphs[i], graphs[j]});
        }
      }
    }
    if (claim.arity == 1) {
      for (const auto& g : options.extra) {
        if (g.order() >= claim.min_order && g.order() <= 10) run_case(claim, {g});
      }
    }
  }
  Json extra;
  extra["per_claim"] = per_claim;
  finish_report(r, case_ms, detail::elapsed_ms(start), std::move(extra));
  return r;
}

// Least-squares slope of log(y) against log(x).
inline double loglog_slope(const std::vector<double>& x, const std::vector<double>& y) {
  const std::size_t m = x.size();
  if (m < 2 || y.size() != m) return 0.0;
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t k = 0; k < m; ++k) {
    const double lx = std::log(x[k]), ly = std::log(std::max(y[k], 1e-9));
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
  }
  const double den = m * sxx - sx * sx;
  return den == 0.0 ? 0.0 : (m * sxy - sx * sy) / den;
}

// Even-numbered samples are planted isomorphic pairs (a graph and a random
// relabeling of it); odd-numbered samples pair two independent graphs.
inline ExperimentReport bench_scaling(const std::vector<std::size_t>& sizes, std::size_t samples, std::uint64_t seed,
                                      double edge_probability = 0.5) {
  if (sizes.empty() || samples == 0) throw std::invalid_argument("bench: need at least one size and one sample");
  for (std::size_t k = 0; k < sizes.size(); ++k) {
    if (sizes[k] < 2 || sizes[k] > 24 || (k && sizes[k] <= sizes[k - 1])) {
      throw std::invalid_argument("bench: sizes must ascend within [2,24]");
    }
  }
  const auto start = std::chrono::steady_clock::now();
  ExperimentReport r;
  r.experiment = "bench";
  r.seed = seed;
  std::mt19937_64 rng(seed);
  std::vector<double> case_ms, xs, medians;
  Json per_size = Json::object();
  std::size_t planted_misses = 0;
  for (std::size_t n : sizes) {
    r.per_n[n] = samples;
    std::vector<double> times;
    for (std::size_t s = 0; s < samples; ++s) {
      const SimpleGraph g = random_connected_graph(n, edge_probability, rng);
      const bool planted = s % 2 == 0;
      std::optional<Permutation> p;
      SimpleGraph h;
      if (planted) {
        p = random_permutation(n, rng);
        h = apply_permutation(g, *p);
      } else {
        h = random_connected_graph(n, edge_probability, rng);
      }
      const GiVerdict v = decide_iso(g, h);
      CaseRecord c;
      c.id = r.cases.size();
      c.graphs = to_graph6({&g, &h});
      c.gi = to_string(v.decision);
      c.oracle = planted ? "iso" : "n/a";
      c.agree = !planted || v.decision == Decision::kIsomorphic;
      c.detail["n"] = n;
      c.detail["planted"] = planted;
      c.detail["binding_order"] = (2 * n) * (2 * n + 1) / 2;
      c.detail["stable_dim"] = v.stable_dim;
      c.detail["rounds"] = v.rounds;
      c.detail["ms"] = std::round(v.timing_ms * 1000.0) / 1000.0;
      times.push_back(v.timing_ms);
      case_ms.push_back(v.timing_ms);
      if (!c.agree) {
        ++planted_misses;
        Counterexample ce;
        ce.case_id = c.id;
        ce.kind = "agreement";
        ce.graphs = c.graphs;
        ce.gi = c.gi;
        ce.oracle = "iso";
        // h = p(g), so p^-1 maps h onto g.
        ce.evidence["witness"] = permutation_json(p->inverse());
        r.counterexamples.push_back(std::move(ce));
      }
      r.cases.push_back(std::move(c));
    }
    const double med = detail::median(times);
    xs.push_back(static_cast<double>(n));
    medians.push_back(med);
    per_size[std::to_string(n)] = Json{{"median_ms", std::round(med * 1000.0) / 1000.0},
                                       {"max_ms", std::round(*std::max_element(times.begin(), times.end()) * 1000.0) /
                                                      1000.0}};
  }
  Json extra;
  extra["per_size"] = per_size;
  extra["loglog_slope"] = std::round(loglog_slope(xs, medians) * 1000.0) / 1000.0;
  extra["planted_misses"] = planted_misses;
  finish_report(r, case_ms, detail::elapsed_ms(start), std::move(extra));
  return r;
}

// Replays one counterexample from its own fields. Returns an empty string
// when the record reproduces, else a description of the mismatch.
inline std::string verify_counterexample(const Counterexample& ce, const OracleOptions& options = {}) {
  std::vector<SimpleGraph> graphs;
  for (const auto& s : ce.graphs) graphs.push_back(parse_graph6(s));
  if (ce.kind == "agreement") {
    if (graphs.size() != 2) return "agreement record needs two graphs";
    const GiVerdict v = decide_iso(graphs[0], graphs[1]);
    if (to_string(v.decision) != ce.gi) return "decider now says " + std::string(to_string(v.decision));
    if (ce.oracle == "iso") {
      if (!ce.evidence.contains("witness")) return "isomorphic record lacks a witness";
      const auto p = Permutation::from_images(ce.evidence.at("witness").get<std::vector<Vertex>>());
      if (apply_permutation(graphs[1], p) != graphs[0]) return "witness does not map the second graph onto the first";
    } else if (ce.oracle == "noniso") {
      if (find_isomorphism(graphs[0], graphs[1], options)) return "oracle now finds an isomorphism";
    } else {
      return "unknown oracle verdict '" + ce.oracle + "'";
    }
    if (ce.gi == ce.oracle) return "record shows no disagreement";
    return {};
  }
  if (ce.kind == "orbit") {
    if (graphs.size() != 1) return "orbit record needs one graph";
    const auto b = bind(graphs[0]);
    const auto cells = stabilize(b.labeled()).cells().to_string();
    const auto orbits = orbit_partition(b, options).to_string();
    if (cells != ce.gi) return "cells now " + cells;
    if (orbits != ce.oracle) return "orbits now " + orbits;
    if (cells == orbits) return "record shows no disagreement";
    return {};
  }
  if (ce.kind == "claim") {
    const auto name = ce.evidence.at("claim").get<std::string>();
    const auto res = check_claim(name, graphs, ce.evidence.value("params", Json::object()), options);
    if (res.skipped) return "replay exceeded the oracle budget";
    if (res.pass) return "claim '" + name + "' now passes";
    return {};
  }
  return "unknown counterexample kind '" + ce.kind + "'";
}

// Structural integrity of a report plus replay of every counterexample.
inline std::vector<std::string> verify_report(const ExperimentReport& r, const OracleOptions& options = {}) {
  std::vector<std::string> problems;
  const CaseTally t = tally(r);
  if (r.summary.value("cases_total", std::size_t{0}) != r.cases.size() ||
      r.summary.value("agree", std::size_t{0}) != t.agree || r.summary.value("disagree", std::size_t{0}) != t.disagree ||
      r.summary.value("skipped", std::size_t{0}) != t.skipped) {
    problems.push_back("summary counts do not match the cases");
  }
  std::vector<bool> covered(r.cases.size(), false);
  for (const auto& ce : r.counterexamples) {
    if (ce.case_id < covered.size()) covered[ce.case_id] = true;
    const std::string why = verify_counterexample(ce, options);
    if (!why.empty()) problems.push_back("counterexample for case " + std::to_string(ce.case_id) + ": " + why);
  }
  for (const auto& c : r.cases) {
    if (c.oracle != "skipped" && !c.agree && (c.id >= covered.size() || !covered[c.id])) {
      problems.push_back("case " + std::to_string(c.id) + " disagrees without a counterexample");
    }
  }
  return problems;
}

}  // namespace wlbind

#endif  // WLBIND_HARNESS_HPP_
