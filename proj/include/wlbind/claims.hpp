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

// Per-graph property checks shared by the lemma suite, the acceptance
// binary and counterexample replay. Each check is a pure function of its
// graphs and a JSON parameter block, so a recorded failure can be rerun from
// the record alone.

#ifndef WLBIND_CLAIMS_HPP_
#define WLBIND_CLAIMS_HPP_

#include <algorithm>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "wlbind/binding.hpp"
#include "wlbind/graph.hpp"
#include "wlbind/oracle.hpp"
#include "wlbind/report.hpp"
#include "wlbind/wl.hpp"

namespace wlbind {

struct ClaimResult {
  bool pass = true;
  bool skipped = false;
  std::string note;
};

using ClaimFn = ClaimResult (*)(const std::vector<SimpleGraph>&, const Json&, const OracleOptions&);

struct Claim {
  const char* name;
  std::size_t arity;  // graphs per case
  std::size_t min_order;
  ClaimFn check;
};

namespace claims {

inline ClaimResult fail(std::string note) { return {false, false, std::move(note)}; }

inline ClaimResult refinement_chain(const std::vector<SimpleGraph>& gs, const Json&, const OracleOptions&) {
  const auto x = stabilize(gs[0], {.keep_history = true});
  const auto& h = x.history();
  for (std::size_t t = 0; t + 1 < h.size(); ++t) {
    if (!embeds(h[t], h[t + 1])) return fail("round " + std::to_string(t + 1) + " is not refined by the next");
  }
  if (h.back() != x.graph()) return fail("last history entry differs from the stable graph");
  return {};
}

inline ClaimResult rounds_recognize_vertices(const std::vector<SimpleGraph>& gs, const Json&, const OracleOptions&) {
  const auto x = stabilize(gs[0], {.keep_history = true});
  for (std::size_t t = 0; t < x.history().size(); ++t) {
    if (!recognizes_vertices(x.history()[t])) return fail("round " + std::to_string(t) + " mixes vertex labels");
  }
  return {};
}

inline ClaimResult endpoint_labels(const std::vector<SimpleGraph>& gs, const Json&, const OracleOptions&) {
  return has_endpoint_consistent_labels(stabilize(gs[0]).graph()) ? ClaimResult{} : fail("label spans two diagonals");
}

inline ClaimResult converse_labels(const std::vector<SimpleGraph>& gs, const Json&, const OracleOptions&) {
  return is_converse_equivalent(stabilize(gs[0]).graph()) ? ClaimResult{} : fail("converse map not well defined");
}

inline ClaimResult cell_multisets(const std::vector<SimpleGraph>& gs, const Json&, const OracleOptions&) {
  return has_cell_multiset_law(stabilize(gs[0]).graph()) ? ClaimResult{} : fail("diagonal vs row/column multisets");
}

// params: {"perm": [images...]}
inline ClaimResult equivariance(const std::vector<SimpleGraph>& gs, const Json& params, const OracleOptions&) {
  const auto images = params.at("perm").get<std::vector<Vertex>>();
  const Permutation p = Permutation::from_images(images);
  const auto lhs = stabilize(apply_permutation(gs[0].labeled(), p)).graph();
  const auto rhs = apply_permutation(stabilize(gs[0]).graph(), p);
  return lhs == rhs ? ClaimResult{} : fail("relabeled stabilization differs bitwise");
}

inline ClaimResult idempotence(const std::vector<SimpleGraph>& gs, const Json&, const OracleOptions&) {
  const auto x = stabilize(gs[0]);
  const auto y = stabilize(x.graph());
  if (!equivalent(x.graph(), y.graph())) return fail("restabilizing changed the partition of pairs");
  if (!is_stable(x.graph())) return fail("stable graph is not a fixpoint");
  return {};
}

inline ClaimResult equatable_blocks(const std::vector<SimpleGraph>& gs, const Json&, const OracleOptions&) {
  const auto x = stabilize(gs[0]);
  for (std::size_t a = 0; a < x.cells().size(); ++a) {
    for (std::size_t b = 0; b < x.cells().size(); ++b) {
      if (!is_equatable(x, a, b)) return fail("block " + std::to_string(a) + "," + std::to_string(b));
    }
  }
  return {};
}

inline ClaimResult aut_preserved(const std::vector<SimpleGraph>& gs, const Json&, const OracleOptions& o) {
  const auto x = stabilize(gs[0]);
  if (automorphism_group(gs[0].labeled(), o) != automorphism_group(x.graph(), o)) {
    return fail("automorphism groups differ");
  }
  return {};
}

inline ClaimResult orbits_refine_cells(const std::vector<SimpleGraph>& gs, const Json&, const OracleOptions& o) {
  const auto x = stabilize(gs[0]);
  const auto orbits = orbit_partition(gs[0].labeled(), o);
  return orbits.refines(x.cells()) ? ClaimResult{} : fail("orbit " + orbits.to_string() + " vs cells " +
                                                           x.cells().to_string());
}

inline ClaimResult individualization(const std::vector<SimpleGraph>& gs, const Json&, const OracleOptions&) {
  const auto x = stabilize(gs[0]);
  for (Vertex u = 1; u <= x.order(); ++u) {
    const auto cells = stabilize(individualize(x, u)).cells();
    const auto blocks = block_partition(x, u);
    if (cells != blocks) {
      return fail("vertex " + std::to_string(u) + ": cells " + cells.to_string() + " vs blocks " + blocks.to_string());
    }
  }
  return {};
}

inline ClaimResult composition(const std::vector<SimpleGraph>& gs, const Json&, const OracleOptions&) {
  const auto x = stabilize(gs[0]);
  const std::size_t c = x.cells().size();
  if (c > 16) return fail("too many cells to enumerate subsets");
  for (std::uint32_t mask = 1; mask < (1u << c); ++mask) {
    std::vector<std::size_t> keep;
    for (std::size_t k = 0; k < c; ++k) {
      if (mask >> k & 1u) keep.push_back(k);
    }
    const auto vertices = union_of_cells(x.cells(), keep);
    if (!is_stable(induced_subgraph(x.graph(), vertices))) {
      return fail("cell subset mask " + std::to_string(mask) + " is not stable");
    }
  }
  return {};
}

inline ClaimResult binding_structure(const std::vector<SimpleGraph>& gs, const Json&, const OracleOptions&) {
  const auto& g = gs[0];
  const std::size_t n = g.order();
  const auto b = bind(g);
  if (b.order() != n * (n + 1) / 2) return fail("wrong order");
  for (Vertex u = 1; u <= n; ++u) {
    if (b.graph().degree(u) != g.degree(u) + n - 1) return fail("basic degree at " + std::to_string(u));
    for (Vertex v = 1; v <= n; ++v) {
      if (b.graph().has_edge(u, v) != g.has_edge(u, v)) return fail("basic subgraph differs");
    }
  }
  for (Vertex p = n + 1; p <= b.order(); ++p) {
    const auto [u, v] = b.bound_pair(p);
    if (b.graph().degree(p) != 2 || !b.graph().has_edge(p, u) || !b.graph().has_edge(p, v)) {
      return fail("binding vertex " + std::to_string(p));
    }
    if (b.binding_vertex(u, v) != p || b.binding_vertex(v, u) != p) return fail("pair index not inverse");
  }
  return {};
}

inline ClaimResult binding_aut_lift(const std::vector<SimpleGraph>& gs, const Json&, const OracleOptions& o) {
  const auto b = bind(gs[0]);
  const auto basic = automorphism_group(gs[0].labeled(), o);
  const auto full = automorphism_group(b.labeled(), o);
  if (basic.size() != full.size()) {
    return fail("|Aut(G)| = " + std::to_string(basic.size()) + ", |Aut([G])| = " + std::to_string(full.size()));
  }
  for (const auto& s : basic) {
    if (!std::binary_search(full.begin(), full.end(), extend_automorphism(b, s))) return fail("lift not in Aut([G])");
  }
  return {};
}

inline ClaimResult phi_equivalence(const std::vector<SimpleGraph>& gs, const Json&, const OracleOptions&) {
  const auto b = bind(gs[0]);
  const auto x = stabilize(b.labeled());
  const auto phi = phi_graph(b, x);
  return equivalent(stabilize(phi).graph(), x.graph()) ? ClaimResult{} : fail("wl(phi) not equivalent to wl([G])");
}

inline ClaimResult binding_edges_separate(const std::vector<SimpleGraph>& gs, const Json&, const OracleOptions&) {
  const auto b = bind(gs[0]);
  return wlbind::binding_edges_separate(b, stabilize(b.labeled())) ? ClaimResult{} : fail("binding edge labels overlap");
}

inline ClaimResult binding_labels_agree(const std::vector<SimpleGraph>& gs, const Json&, const OracleOptions&) {
  const auto b = bind(gs[0]);
  return wlbind::binding_labels_agree(b, stabilize(b.labeled())) ? ClaimResult{} : fail("label equivalences differ");
}

inline ClaimResult no_mixed_cells(const std::vector<SimpleGraph>& gs, const Json&, const OracleOptions&) {
  const auto b = bind(gs[0]);
  const auto x = stabilize(b.labeled());
  const auto classes = classify_cells(b, x.cells());
  const auto mixed = std::count(classes.begin(), classes.end(), CellClass::kMixed);
  return mixed == 0 ? ClaimResult{} : fail(std::to_string(mixed) + " mixed cells");
}

inline ClaimResult basic_cells_are_orbits(const std::vector<SimpleGraph>& gs, const Json&, const OracleOptions& o) {
  const auto b = bind(gs[0]);
  const auto x = stabilize(b.labeled());
  const auto orbits = orbit_partition(b, o);
  const auto classes = classify_cells(b, x.cells());
  for (std::size_t c = 0; c < x.cells().size(); ++c) {
    if (classes[c] != CellClass::kBasic) continue;
    const auto& cell = x.cells().cell(c);
    if (orbits.cell(orbits.cell_of(cell.front())) != cell) {
      return fail("basic cell " + std::to_string(c) + " is not an orbit; orbits " + orbits.to_string());
    }
  }
  return {};
}

// Two graphs of equal order.
inline ClaimResult binding_iso_complete(const std::vector<SimpleGraph>& gs, const Json&, const OracleOptions& o) {
  const bool basic = find_isomorphism(gs[0], gs[1], o).has_value();
  const bool bound = find_isomorphism(bind(gs[0]).labeled(), bind(gs[1]).labeled(), o).has_value();
  return basic == bound ? ClaimResult{} : fail(basic ? "G ~ H but [G] !~ [H]" : "[G] ~ [H] but G !~ H");
}

}  // namespace claims

inline const std::vector<Claim>& claim_table() {
  static const std::vector<Claim> table = {
      {"refinement_chain", 1, 1, claims::refinement_chain},
      {"rounds_recognize_vertices", 1, 1, claims::rounds_recognize_vertices},
      {"endpoint_labels", 1, 1, claims::endpoint_labels},
      {"converse_labels", 1, 1, claims::converse_labels},
      {"cell_multisets", 1, 1, claims::cell_multisets},
      {"equivariance", 1, 1, claims::equivariance},
      {"idempotence", 1, 1, claims::idempotence},
      {"equatable_blocks", 1, 1, claims::equatable_blocks},
      {"aut_preserved", 1, 1, claims::aut_preserved},
      {"orbits_refine_cells", 1, 1, claims::orbits_refine_cells},
      {"individualization", 1, 1, claims::individualization},
      {"composition", 1, 1, claims::composition},
      {"binding_structure", 1, 2, claims::binding_structure},
      {"binding_aut_lift", 1, 4, claims::binding_aut_lift},
      {"phi_equivalence", 1, 3, claims::phi_equivalence},
      {"binding_edges_separate", 1, 2, claims::binding_edges_separate},
      {"binding_labels_agree", 1, 3, claims::binding_labels_agree},
      {"no_mixed_cells", 1, 4, claims::no_mixed_cells},
      {"basic_cells_are_orbits", 1, 2, claims::basic_cells_are_orbits},
      {"binding_iso_complete", 2, 2, claims::binding_iso_complete},
  };
  return table;
}

inline const Claim& find_claim(std::string_view name) {
  for (const auto& c : claim_table()) {
    if (name == c.name) return c;
  }
  throw std::invalid_argument("unknown claim '" + std::string(name) + "'");
}

// Runs one claim; an exhausted oracle budget yields a skipped result.
inline ClaimResult check_claim(std::string_view name, const std::vector<SimpleGraph>& graphs, const Json& params,
                               const OracleOptions& options = {}) {
  const Claim& claim = find_claim(name);
  if (graphs.size() != claim.arity) throw std::invalid_argument("claim '" + std::string(name) + "': wrong arity");
  try {
    return claim.check(graphs, params, options);
  } catch (const BudgetExceeded& e) {
    return {true, true, e.what()};
  }
}

}  // namespace wlbind

#endif  // WLBIND_CLAIMS_HPP_
