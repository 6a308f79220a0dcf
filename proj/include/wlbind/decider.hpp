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

// Isomorphism decision through the binding graph of a disjoint union: the
// inputs are declared isomorphic when some basic cell of the stable
// partition meets both copies.

#ifndef WLBIND_DECIDER_HPP_
#define WLBIND_DECIDER_HPP_

#include <chrono>
#include <stdexcept>
#include <string>
#include <vector>

#include "wlbind/binding.hpp"
#include "wlbind/graph.hpp"
#include "wlbind/wl.hpp"

namespace wlbind {

enum class Decision { kIsomorphic, kNonIsomorphic };

inline const char* to_string(Decision d) { return d == Decision::kIsomorphic ? "iso" : "noniso"; }

struct GiVerdict {
  Decision decision = Decision::kNonIsomorphic;
  // Basic cells holding vertices of both copies.
  std::vector<std::vector<Vertex>> shared_basic_cells;
  std::size_t stable_dim = 0;
  std::size_t rounds = 0;
  std::size_t mixed_cells = 0;
  double timing_ms = 0.0;
  // Set when the decision was made without running the procedure.
  std::string shortcut;
};

// Basic cells of p with members in both [1,n] and [n+1,2n].
inline std::vector<std::vector<Vertex>> shared_basic_cells(const BindingGraph& b, const Partition& p, std::size_t n) {
  if (b.basic_count() != 2 * n) {
    throw std::invalid_argument("shared_basic_cells: binding graph has " + std::to_string(b.basic_count()) +
                                " basic vertices, expected " + std::to_string(2 * n));
  }
  const auto classes = classify_cells(b, p);
  std::vector<std::vector<Vertex>> out;
  for (std::size_t c = 0; c < p.size(); ++c) {
    if (classes[c] != CellClass::kBasic) continue;
    const auto& cell = p.cell(c);
    bool left = false, right = false;
    for (Vertex v : cell) {
      (v <= n ? left : right) = true;
    }
    if (left && right) out.push_back(cell);
  }
  return out;
}

inline GiVerdict decide_iso(const SimpleGraph& g, const SimpleGraph& h) {
  GiVerdict verdict;
  if (g.order() != h.order()) {
    verdict.shortcut = "orders differ (" + std::to_string(g.order()) + " vs " + std::to_string(h.order()) + ")";
    return verdict;
  }
  const std::size_t n = g.order();
  if (n < 2) throw std::invalid_argument("decide_iso: order must be > 1, got " + std::to_string(n));
  if (!g.is_connected() || !h.is_connected()) {
    throw std::invalid_argument("decide_iso: inputs must be connected; split disconnected graphs into components");
  }
  const auto start = std::chrono::steady_clock::now();
  const BindingGraph b = bind(disjoint_union(g, h));
  const StableGraph x = stabilize(b.labeled());
  verdict.shared_basic_cells = shared_basic_cells(b, x.cells(), n);
  for (CellClass c : classify_cells(b, x.cells())) verdict.mixed_cells += c == CellClass::kMixed;
  verdict.stable_dim = x.dim();
  verdict.rounds = x.trace().rounds;
  verdict.decision = verdict.shared_basic_cells.empty() ? Decision::kNonIsomorphic : Decision::kIsomorphic;
  verdict.timing_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return verdict;
}

}  // namespace wlbind

#endif  // WLBIND_DECIDER_HPP_
