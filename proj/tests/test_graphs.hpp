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

// Fixed graphs and reference matrices shared by the tests.

#ifndef WLBIND_TESTS_TEST_GRAPHS_HPP_
#define WLBIND_TESTS_TEST_GRAPHS_HPP_

#include <map>
#include <vector>

#include "wlbind/wlbind.hpp"

namespace wlbind::testing {

// Order-10 cubic graph whose stable partition has three cells.
inline SimpleGraph ten_vertex_graph() {
  return SimpleGraph(10, {{1, 2}, {1, 5}, {1, 6}, {2, 3}, {2, 7}, {3, 4}, {3, 9}, {4, 5}, {4, 8}, {5, 10},
                          {6, 8}, {6, 9}, {7, 9}, {7, 10}, {8, 10}});
}

// Printed stable matrix of ten_vertex_graph() (numbering as printed).
inline LabeledGraph ten_vertex_stable() {
  return LabeledGraph::from_rows({{1, 2, 3, 3, 2, 4, 3, 5, 5, 3},
                                  {6, 7, 8, 9, 10, 11, 8, 12, 13, 9},
                                  {14, 15, 16, 17, 18, 14, 19, 18, 15, 20},
                                  {14, 18, 17, 16, 15, 14, 20, 15, 18, 19},
                                  {6, 10, 9, 8, 7, 11, 9, 13, 12, 8},
                                  {4, 5, 3, 3, 5, 1, 3, 2, 2, 3},
                                  {14, 15, 19, 20, 18, 14, 16, 18, 15, 17},
                                  {11, 12, 9, 8, 13, 6, 9, 7, 10, 8},
                                  {11, 13, 8, 9, 12, 6, 8, 10, 7, 9},
                                  {14, 18, 20, 19, 15, 14, 17, 15, 18, 16}});
}

// Printed second-round matrix of ten_vertex_graph().
inline LabeledGraph ten_vertex_round2() {
  return LabeledGraph::from_rows({{1, 2, 3, 3, 2, 2, 3, 3, 3, 3},
                                  {2, 1, 2, 3, 3, 3, 2, 4, 5, 3},
                                  {3, 2, 1, 2, 3, 3, 5, 3, 2, 4},
                                  {3, 3, 2, 1, 2, 3, 4, 2, 3, 5},
                                  {2, 3, 3, 2, 1, 3, 3, 5, 4, 2},
                                  {2, 3, 3, 3, 3, 1, 3, 2, 2, 3},
                                  {3, 2, 5, 4, 3, 3, 1, 3, 2, 2},
                                  {3, 4, 3, 2, 5, 2, 3, 1, 3, 2},
                                  {3, 5, 2, 3, 4, 2, 2, 3, 1, 3},
                                  {3, 3, 4, 5, 2, 3, 2, 2, 3, 1}});
}

// Printed third-round matrix of ten_vertex_graph().
inline LabeledGraph ten_vertex_round3() {
  return LabeledGraph::from_rows({{1, 2, 3, 3, 2, 4, 3, 5, 5, 3},
                                  {6, 7, 8, 9, 10, 11, 8, 12, 13, 9},
                                  {14, 8, 7, 15, 9, 14, 16, 9, 8, 17},
                                  {14, 9, 15, 7, 8, 14, 17, 8, 9, 16},
                                  {6, 10, 9, 8, 7, 11, 9, 13, 12, 8},
                                  {4, 5, 3, 3, 5, 1, 3, 2, 2, 3},
                                  {14, 8, 16, 17, 9, 14, 7, 9, 8, 15},
                                  {11, 12, 9, 8, 13, 6, 9, 7, 10, 8},
                                  {11, 13, 8, 9, 12, 6, 8, 10, 7, 9},
                                  {14, 9, 17, 16, 8, 14, 15, 8, 9, 7}});
}

// Printed cell-block form of the stable matrix.
inline LabeledGraph ten_vertex_cell_block_form() {
  return LabeledGraph::from_rows({{1, 4, 2, 2, 5, 5, 3, 3, 3, 3},
                                  {4, 1, 5, 5, 2, 2, 3, 3, 3, 3},
                                  {6, 11, 7, 10, 12, 13, 8, 9, 8, 9},
                                  {6, 11, 10, 7, 13, 12, 9, 8, 9, 8},
                                  {11, 6, 12, 13, 7, 10, 9, 8, 9, 8},
                                  {11, 6, 13, 12, 10, 7, 8, 9, 8, 9},
                                  {14, 14, 15, 18, 18, 15, 16, 17, 19, 20},
                                  {14, 14, 18, 15, 15, 18, 17, 16, 20, 19},
                                  {14, 14, 15, 18, 18, 15, 19, 20, 16, 17},
                                  {14, 14, 18, 15, 15, 18, 20, 19, 17, 16}});
}

struct PrintedBinding {
  const char* name;
  SimpleGraph basic;
  LabeledGraph binding;  // printed adjacency
  LabeledGraph stable;   // printed stable matrix
  std::size_t dim;
  std::vector<std::vector<Vertex>> cells;
};

inline std::vector<PrintedBinding> printed_bindings() {
  std::vector<PrintedBinding> out;
  out.push_back({"H0", SimpleGraph(2), LabeledGraph::from_rows({{0, 0, 1}, {0, 0, 1}, {1, 1, 0}}),
                 LabeledGraph::from_rows({{1, 2, 3}, {2, 1, 3}, {4, 4, 5}}), 5, {{1, 2}, {3}}});
  out.push_back({"H1", SimpleGraph(2, {{1, 2}}), LabeledGraph::from_rows({{0, 1, 1}, {1, 0, 1}, {1, 1, 0}}),
                 LabeledGraph::from_rows({{1, 2, 2}, {2, 1, 2}, {2, 2, 1}}), 2, {{1, 2, 3}}});
  out.push_back({"G0", SimpleGraph(3),
                 LabeledGraph::from_rows({{0, 0, 0, 1, 1, 0},
                                          {0, 0, 0, 1, 0, 1},
                                          {0, 0, 0, 0, 1, 1},
                                          {1, 1, 0, 0, 0, 0},
                                          {1, 0, 1, 0, 0, 0},
                                          {0, 1, 1, 0, 0, 0}}),
                 LabeledGraph::from_rows({{1, 2, 2, 3, 3, 4},
                                          {2, 1, 2, 3, 4, 3},
                                          {2, 2, 1, 4, 3, 3},
                                          {3, 3, 4, 1, 2, 2},
                                          {3, 4, 3, 2, 1, 2},
                                          {4, 3, 3, 2, 2, 1}}),
                 4,
                 {{1, 2, 3, 4, 5, 6}}});
  const LabeledGraph g12_stable = LabeledGraph::from_rows({{1, 2, 3, 4, 5, 6},
                                                           {2, 1, 3, 4, 6, 5},
                                                           {7, 7, 8, 9, 10, 10},
                                                           {11, 11, 12, 13, 14, 14},
                                                           {15, 16, 17, 18, 19, 20},
                                                           {16, 15, 17, 18, 20, 19}});
  out.push_back({"G1", SimpleGraph(3, {{1, 2}}),
                 LabeledGraph::from_rows({{0, 1, 0, 1, 1, 0},
                                          {1, 0, 0, 1, 0, 1},
                                          {0, 0, 0, 0, 1, 1},
                                          {1, 1, 0, 0, 0, 0},
                                          {1, 0, 1, 0, 0, 0},
                                          {0, 1, 1, 0, 0, 0}}),
                 g12_stable, 20, {{1, 2}, {3}, {4}, {5, 6}}});
  out.push_back({"G2", SimpleGraph(3, {{1, 3}, {2, 3}}),
                 LabeledGraph::from_rows({{0, 0, 1, 1, 1, 0},
                                          {0, 0, 1, 1, 0, 1},
                                          {1, 1, 0, 0, 1, 1},
                                          {1, 1, 0, 0, 0, 0},
                                          {1, 0, 1, 0, 0, 0},
                                          {0, 1, 1, 0, 0, 0}}),
                 g12_stable, 20, {{1, 2}, {3}, {4}, {5, 6}}});
  out.push_back({"K3", complete_graph(3),
                 LabeledGraph::from_rows({{0, 1, 1, 1, 1, 0},
                                          {1, 0, 1, 1, 0, 1},
                                          {1, 1, 0, 0, 1, 1},
                                          {1, 1, 0, 0, 0, 0},
                                          {1, 0, 1, 0, 0, 0},
                                          {0, 1, 1, 0, 0, 0}}),
                 LabeledGraph::from_rows({{1, 2, 2, 3, 3, 4},
                                          {2, 1, 2, 3, 4, 3},
                                          {2, 2, 1, 4, 3, 3},
                                          {5, 5, 6, 7, 8, 8},
                                          {5, 6, 5, 8, 7, 8},
                                          {6, 5, 5, 8, 8, 7}}),
                 8,
                 {{1, 2, 3}, {4, 5, 6}}});
  return out;
}

inline std::vector<SimpleGraph> connected_upto(std::size_t max_n) {
  std::vector<SimpleGraph> out;
  for (std::size_t n = 1; n <= max_n; ++n) {
    for (auto& g : enumerate_graphs(n, true)) out.push_back(std::move(g));
  }
  return out;
}

// Seeded random graphs with orders cycling through [lo, hi].
inline std::vector<SimpleGraph> random_graphs(std::size_t count, std::size_t lo, std::size_t hi, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<SimpleGraph> out;
  for (std::size_t k = 0; k < count; ++k) out.push_back(random_graph(lo + k % (hi - lo + 1), 0.5, rng));
  return out;
}

}  // namespace wlbind::testing

#endif  // WLBIND_TESTS_TEST_GRAPHS_HPP_
