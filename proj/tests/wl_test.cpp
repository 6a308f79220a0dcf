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

#include <gtest/gtest.h>

#include <vector>

#include "test_graphs.hpp"
#include "wlbind/wl.hpp"

namespace wlbind {
namespace {

using testing::ten_vertex_graph;

std::vector<std::size_t> all_cells(const StableGraph& x) {
  std::vector<std::size_t> keep(x.cells().size());
  for (std::size_t k = 0; k < keep.size(); ++k) keep[k] = k;
  return keep;
}

TEST(RecognizeVerticesTest, TenVertexGraphGetsThreeLabels) {
  const auto g1 = recognize_vertices(ten_vertex_graph().labeled());
  EXPECT_EQ(dimension(g1), 3u);
  EXPECT_TRUE(recognizes_vertices(g1));
  EXPECT_FALSE(recognizes_vertices(ten_vertex_graph().labeled()));
  for (Vertex i = 1; i <= 10; ++i) {
    for (Vertex j = 1; j <= 10; ++j) {
      if (i != j) {
        EXPECT_EQ(g1.at(i, j), ten_vertex_graph().labeled().at(i, j));
      }
    }
  }
}

TEST(RecognizeVerticesTest, SingleVertexGetsFreshLabel) {
  const auto g = recognize_vertices(LabeledGraph(1));
  EXPECT_NE(g.at(1, 1), kBlank);
}

TEST(RecognizeVerticesTest, AlreadyRecognizingKeepsDimension) {
  const auto g = LabeledGraph::from_rows({{5, 1, 0}, {1, 6, 1}, {0, 1, 5}});
  const auto h = recognize_vertices(g);
  EXPECT_TRUE(equivalent(g, h));
}

TEST(DiamondTest, RecognizedK2) {
  const auto y = ColorId{2}, x = ColorId{1};
  const auto g = LabeledGraph::from_rows({{2, 1}, {1, 2}});
  const auto m = diamond(g);
  EXPECT_EQ(m.at(1, 1), (Signature{{x, x, 1}, {y, y, 1}}));
  EXPECT_EQ(m.at(1, 2), (Signature{{x, y, 1}, {y, x, 1}}));
  const auto e = evs(m);
  EXPECT_EQ(e, LabeledGraph::from_rows({{1, 2}, {2, 1}}));
}

TEST(DiamondTest, EverySignatureHasOrderManyPairs) {
  const auto g = recognize_vertices(ten_vertex_graph().labeled());
  const auto m = diamond(g);
  for (Vertex i = 1; i <= 10; ++i) {
    for (Vertex j = 1; j <= 10; ++j) {
      std::uint32_t total = 0;
      for (const auto& t : m.at(i, j)) total += t.count;
      EXPECT_EQ(total, 10u);
      if (i == j) {
        const SignatureTerm* self = nullptr;
        for (const auto& t : m.at(i, j)) {
          if (t.left == g.at(i, i) && t.right == g.at(i, i)) self = &t;
        }
        EXPECT_NE(self, nullptr);
      }
    }
  }
}

TEST(EvsTest, ConstantSignaturesCollapse) {
  const auto m = diamond(LabeledGraph(3, ColorId{4}));
  const auto e = evs(m);
  EXPECT_EQ(dimension(e), 1u);
  EXPECT_EQ(e.at(1, 1), ColorId{1});
}

// Round-by-round comparison against the printed matrices, up to renaming.
TEST(StabilizeTest, TenVertexGraphMatchesPrintedRounds) {
  const auto x = stabilize(ten_vertex_graph(), {.keep_history = true});
  EXPECT_EQ(x.trace().dims, (std::vector<std::size_t>{3, 5, 17, 20, 20}));
  EXPECT_EQ(x.trace().rounds, 4u);
  EXPECT_EQ(x.dim(), 20u);
  EXPECT_EQ(x.cells().to_string(), "{1,6},{2,5,8,9},{3,4,7,10}");
  ASSERT_EQ(x.history().size(), 5u);
  EXPECT_TRUE(equivalent(x.history()[1], testing::ten_vertex_round2()));
  EXPECT_TRUE(equivalent(x.history()[2], testing::ten_vertex_round3()));
  EXPECT_TRUE(equivalent(x.graph(), testing::ten_vertex_stable()));
  // The slow reference path agrees round by round.
  EXPECT_TRUE(equivalent(evs(diamond(x.history()[0])), x.history()[1]));
  EXPECT_TRUE(equivalent(evs(diamond(x.history()[2])), testing::ten_vertex_stable()));
}

TEST(StabilizeTest, CellBlockFormMatchesPrinted) {
  const auto x = stabilize(ten_vertex_graph());
  const auto p = cell_block_order(x);
  EXPECT_EQ(p.images(), (std::vector<Vertex>{1, 3, 7, 8, 4, 2, 9, 5, 6, 10}));
  EXPECT_TRUE(equivalent(apply_permutation(x.graph(), p), testing::ten_vertex_cell_block_form()));
}

TEST(StabilizeTest, CycleOfFiveIsUnit) {
  const auto x = stabilize(cycle_graph(5));
  EXPECT_TRUE(x.cells().is_unit());
  EXPECT_EQ(x.trace().rounds, 1u);
  EXPECT_EQ(x.trace().dims, (std::vector<std::size_t>{3, 3}));
}

TEST(StabilizeTest, SingleVertex) {
  const auto x = stabilize(SimpleGraph(1));
  EXPECT_EQ(x.dim(), 1u);
  EXPECT_EQ(x.trace().rounds, 0u);
  EXPECT_EQ(x.trace().dims, (std::vector<std::size_t>{1}));
  EXPECT_EQ(x.cells().size(), 1u);
}

TEST(StabilizeTest, OutputNeverUsesBlank) {
  for (const auto& g : testing::random_graphs(30, 1, 9, 17)) {
    for (ColorId c : stabilize(g).graph().cells()) EXPECT_NE(c, kBlank);
  }
}

TEST(EmbedsTest, Basics) {
  const auto g = ten_vertex_graph().labeled();
  const auto x = stabilize(g, {.keep_history = true});
  EXPECT_TRUE(embeds(g, g));
  EXPECT_FALSE(embeds(x.graph(), g));
  EXPECT_TRUE(embeds(g, x.graph()));
  EXPECT_FALSE(equivalent(x.history()[0], x.history()[1]));
  EXPECT_TRUE(equivalent(x.graph(), evs(diamond(x.graph()))));
  EXPECT_THROW(embeds(g, LabeledGraph(3)), std::invalid_argument);
}

TEST(PartitionTest, BlockPartitionOfVertexOne) {
  const auto x = stabilize(ten_vertex_graph());
  const auto form = StableGraph::certify(apply_permutation(x.graph(), cell_block_order(x)));
  EXPECT_EQ(block_partition(form, 1).to_string(), "{1},{2},{3,4},{5,6},{7,8,9,10}");
  EXPECT_TRUE(block_partition(form, 1).refines(form.cells()));
  EXPECT_THROW(block_partition(form, 11), std::out_of_range);
}

TEST(PartitionTest, BindingTriangleCellsAndBlocks) {
  const auto x = stabilize(testing::printed_bindings()[5].binding);
  EXPECT_EQ(cell_partition(x).to_string(), "{1,2,3},{4,5,6}");
  EXPECT_EQ(block_partition(x, 1).to_string(), "{1},{2,3},{4,5},{6}");
}

TEST(IndividualizeTest, AddsOneFreshLabel) {
  const auto x = stabilize(ten_vertex_graph());
  const auto y = individualize(x, 1);
  EXPECT_EQ(dimension(y), x.dim() + 1);
  EXPECT_EQ(stabilize(y).cells(), block_partition(x, 1));
}

TEST(IndividualizeTest, SingletonCellKeepsStableGraph) {
  const auto x = stabilize(path_graph(3));
  ASSERT_EQ(x.cells().cell(x.cells().cell_of(2)).size(), 1u);
  EXPECT_TRUE(equivalent(stabilize(individualize(x, 2)).graph(), x.graph()));
}

TEST(RestrictTest, BindingCellsAreStable) {
  const auto h0 = stabilize(testing::printed_bindings()[0].binding);
  const std::vector<std::size_t> first{0};
  const auto r = restrict_to_cells(h0, first);
  EXPECT_EQ(r.order(), 2u);
  EXPECT_EQ(r.graph().at(1, 1), r.graph().at(2, 2));
  EXPECT_EQ(r.graph().at(1, 2), r.graph().at(2, 1));
  EXPECT_NE(r.graph().at(1, 1), r.graph().at(1, 2));

  const auto k3 = stabilize(testing::printed_bindings()[5].binding);
  const std::vector<std::size_t> second{1};
  EXPECT_EQ(restrict_to_cells(k3, second).order(), 3u);
  EXPECT_TRUE(equivalent(restrict_to_cells(k3, all_cells(k3)).graph(), k3.graph()));
  EXPECT_THROW(restrict_to_cells(k3, std::vector<std::size_t>{}), std::invalid_argument);
  EXPECT_THROW(restrict_to_cells(k3, std::vector<std::size_t>{2}), std::out_of_range);
}

TEST(SimilarTest, ReflexiveAndSameCellTransposition) {
  const auto x = stabilize(ten_vertex_graph());
  EXPECT_TRUE(similar(x, x));
  const auto same = StableGraph::certify(apply_permutation(x.graph(), Permutation::transposition(10, 1, 6)));
  EXPECT_TRUE(similar(x, same));
  const auto other = StableGraph::certify(apply_permutation(x.graph(), Permutation::transposition(10, 1, 2)));
  EXPECT_FALSE(similar(x, other));
  EXPECT_THROW(similar(x, stabilize(path_graph(3))), std::invalid_argument);
}

TEST(EquatableTest, AllBlocksOfStableGraphs) {
  for (const auto& b : testing::printed_bindings()) {
    const auto x = stabilize(b.binding);
    for (std::size_t a = 0; a < x.cells().size(); ++a) {
      for (std::size_t c = 0; c < x.cells().size(); ++c) EXPECT_TRUE(is_equatable(x, a, c)) << b.name;
    }
  }
  const auto single = stabilize(SimpleGraph(1));
  EXPECT_TRUE(is_equatable(single, 0, 0));
  EXPECT_THROW(is_equatable(single, 0, 1), std::out_of_range);
}

TEST(EquatableTest, CorruptedMatrixIsRejected) {
  // Stable matrix of the binding triangle with one binding-row entry changed.
  LabeledGraph m = testing::printed_bindings()[5].stable;
  m.set(4, 1, ColorId{6});
  ASSERT_TRUE(recognizes_vertices(m));
  EXPECT_FALSE(is_stable(m));
  EXPECT_THROW(StableGraph::certify(m), std::invalid_argument);
}

TEST(LawTest, StableGraphsSatisfyEndpointConverseAndMultisetLaws) {
  for (const auto& g : testing::random_graphs(40, 2, 10, 23)) {
    const auto x = stabilize(g);
    EXPECT_TRUE(has_endpoint_consistent_labels(x.graph()));
    EXPECT_TRUE(is_converse_equivalent(x.graph()));
    EXPECT_TRUE(has_cell_multiset_law(x.graph()));
  }
}

TEST(LawTest, NegativeControls) {
  EXPECT_FALSE(is_converse_equivalent(LabeledGraph::from_rows({{1, 2, 2}, {3, 1, 4}, {3, 3, 1}})));
  EXPECT_FALSE(has_endpoint_consistent_labels(LabeledGraph::from_rows({{1, 3}, {3, 2}})));
  EXPECT_FALSE(has_cell_multiset_law(LabeledGraph::from_rows({{1, 2, 3}, {2, 1, 2}, {3, 2, 1}})));
}

}  // namespace
}  // namespace wlbind
