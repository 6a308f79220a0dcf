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

// Binding graphs: a simple graph on n "basic" vertices extended by one
// degree-2 "binding" vertex per unordered basic pair, adjacent to exactly
// that pair. Binding vertex for {u,v}, u<v, sits at n + (lexicographic rank
// of (u,v)), ranks starting at 1.

#ifndef WLBIND_BINDING_HPP_
#define WLBIND_BINDING_HPP_

#include <algorithm>
#include <cstdint>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "wlbind/graph.hpp"
#include "wlbind/wl.hpp"

namespace wlbind {

class BindingGraph {
 public:
  const SimpleGraph& graph() const { return graph_; }
  const SimpleGraph& basic() const { return basic_; }
  const LabeledGraph& labeled() const { return graph_.labeled(); }
  std::size_t basic_count() const { return n_; }
  std::size_t order() const { return graph_.order(); }
  bool is_basic(Vertex v) const { return v >= 1 && v <= n_; }

  Vertex binding_vertex(Vertex u, Vertex v) const {
    detail::check_vertex(u, n_, "binding_vertex");
    detail::check_vertex(v, n_, "binding_vertex");
    if (u == v) throw std::invalid_argument("binding_vertex: u == v (" + std::to_string(u) + ")");
    if (u > v) std::swap(u, v);
    // Pairs (a,*) for a < u come first; each contributes n - a pairs.
    const std::size_t before = (u - 1) * n_ - (u - 1) * u / 2;
    return n_ + before + (v - u);
  }

  // Bound pair {u,v}, u<v, of a binding vertex.
  std::pair<Vertex, Vertex> bound_pair(Vertex p) const {
    detail::check_vertex(p, order(), "bound_pair");
    if (p <= n_) throw std::invalid_argument("bound_pair: vertex " + std::to_string(p) + " is basic");
    return pairs_[p - n_ - 1];
  }

 private:
  friend BindingGraph bind(const SimpleGraph& g);

  BindingGraph(SimpleGraph basic, SimpleGraph graph, std::vector<std::pair<Vertex, Vertex>> pairs)
      : basic_(std::move(basic)), graph_(std::move(graph)), n_(basic_.order()), pairs_(std::move(pairs)) {}

  SimpleGraph basic_;
  SimpleGraph graph_;
  std::size_t n_ = 0;
  std::vector<std::pair<Vertex, Vertex>> pairs_;
};

inline BindingGraph bind(const SimpleGraph& g) {
  const std::size_t n = g.order();
  if (n < 2) throw std::invalid_argument("bind: binding graph undefined for order " + std::to_string(n));
  SimpleGraph out(n * (n + 1) / 2);
  for (auto [u, v] : g.edges()) out.add_edge(u, v);
  std::vector<std::pair<Vertex, Vertex>> pairs;
  pairs.reserve(n * (n - 1) / 2);
  Vertex p = n;
  for (Vertex u = 1; u <= n; ++u) {
    for (Vertex v = u + 1; v <= n; ++v) {
      ++p;
      out.add_edge(u, p);
      out.add_edge(v, p);
      pairs.emplace_back(u, v);
    }
  }
  return BindingGraph(g, std::move(out), std::move(pairs));
}

inline Vertex binding_vertex(const BindingGraph& b, Vertex u, Vertex v) { return b.binding_vertex(u, v); }

// Stable labels on vertices and binding edges; every basic pair and every
// non-edge blanked.
inline LabeledGraph phi_graph(const BindingGraph& b, const StableGraph& x) {
  const std::size_t n1 = b.order();
  if (x.order() != n1) {
    throw std::invalid_argument("phi_graph: stable graph order " + std::to_string(x.order()) +
                                " differs from binding order " + std::to_string(n1));
  }
  const std::size_t n = b.basic_count();
  LabeledGraph phi(n1);
  for (std::size_t i = 0; i < n1; ++i) {
    for (std::size_t j = 0; j < n1; ++j) {
      if (i == j) {
        phi.raw(i, j) = x.graph().raw(i, j);
      } else if (!b.graph().raw_edge(i, j) || (i < n && j < n)) {
        phi.raw(i, j) = kBlank;
      } else {
        phi.raw(i, j) = x.graph().raw(i, j);
      }
    }
  }
  return phi;
}

// Lifts an automorphism s of the basic graph: basic vertices follow s and
// u^v follows s(u)^s(v).
inline Permutation extend_automorphism(const BindingGraph& b, const Permutation& s) {
  const std::size_t n = b.basic_count();
  if (s.order() != n) {
    throw std::invalid_argument("extend_automorphism: permutation order " + std::to_string(s.order()) +
                                " differs from basic order " + std::to_string(n));
  }
  for (Vertex u = 1; u <= n; ++u) {
    for (Vertex v = 1; v <= n; ++v) {
      if (b.graph().has_edge(u, v) != b.graph().has_edge(s(u), s(v))) {
        throw std::invalid_argument("extend_automorphism: permutation is not an automorphism of the basic graph");
      }
    }
  }
  std::vector<Vertex> images(b.order());
  for (Vertex u = 1; u <= n; ++u) images[u - 1] = s(u);
  for (Vertex p = n + 1; p <= b.order(); ++p) {
    const auto [u, v] = b.bound_pair(p);
    images[p - 1] = b.binding_vertex(s(u), s(v));
  }
  return Permutation::from_images(images);
}

enum class CellClass { kBasic, kBinding, kMixed };

inline const char* to_string(CellClass c) {
  switch (c) {
    case CellClass::kBasic:
      return "basic";
    case CellClass::kBinding:
      return "binding";
    case CellClass::kMixed:
      return "mixed";
  }
  return "?";
}

inline std::vector<CellClass> classify_cells(const BindingGraph& b, const Partition& p) {
  if (p.order() != b.order()) throw std::invalid_argument("classify_cells: partition order mismatch");
  std::vector<CellClass> out;
  out.reserve(p.size());
  for (const auto& cell : p.cells()) {
    const bool any_basic = std::any_of(cell.begin(), cell.end(), [&](Vertex v) { return b.is_basic(v); });
    const bool any_binding = std::any_of(cell.begin(), cell.end(), [&](Vertex v) { return !b.is_basic(v); });
    out.push_back(any_basic && any_binding ? CellClass::kMixed
                  : any_basic              ? CellClass::kBasic
                                           : CellClass::kBinding);
  }
  return out;
}

// Labels on the two binding edges of each basic pair separate edges from
// non-edges, and basic-edge labels never reappear on binding edges.
inline bool binding_edges_separate(const BindingGraph& b, const StableGraph& x) {
  const std::size_t n = b.basic_count();
  const LabeledGraph& m = x.graph();
  std::set<ColorId> over_edges, over_non_edges, on_binding, on_basic_edges;
  for (Vertex u = 1; u <= n; ++u) {
    for (Vertex v = u + 1; v <= n; ++v) {
      const Vertex p = b.binding_vertex(u, v);
      auto& side = b.graph().has_edge(u, v) ? over_edges : over_non_edges;
      for (ColorId c : {m.at(p, u), m.at(u, p), m.at(p, v), m.at(v, p)}) {
        side.insert(c);
        on_binding.insert(c);
      }
      if (b.graph().has_edge(u, v)) {
        on_basic_edges.insert(m.at(u, v));
        on_basic_edges.insert(m.at(v, u));
      }
    }
  }
  for (ColorId c : over_edges) {
    if (over_non_edges.count(c)) return false;
  }
  if (n > 2) {
    for (ColorId c : on_basic_edges) {
      if (on_binding.count(c)) return false;
    }
  }
  return true;
}

// For all basic pairs {u,v},{r,s} with binding vertices p,q: the label
// multisets {m_uv,m_vu} and {m_rs,m_sr} agree iff {m_up,m_vp} and
// {m_rq,m_sq} agree iff m_pp == m_qq.
inline bool binding_labels_agree(const BindingGraph& b, const StableGraph& x) {
  const std::size_t n = b.basic_count();
  const LabeledGraph& m = x.graph();
  auto sorted = [](ColorId a, ColorId c) { return a < c ? std::pair{a, c} : std::pair{c, a}; };
  struct PairLabels {
    std::pair<ColorId, ColorId> basic;
    std::pair<ColorId, ColorId> binding;
    ColorId vertex;
  };
  std::vector<PairLabels> rows;
  for (Vertex u = 1; u <= n; ++u) {
    for (Vertex v = u + 1; v <= n; ++v) {
      const Vertex p = b.binding_vertex(u, v);
      rows.push_back({sorted(m.at(u, v), m.at(v, u)), sorted(m.at(u, p), m.at(v, p)), m.at(p, p)});
    }
  }
  for (const auto& a : rows) {
    for (const auto& c : rows) {
      const bool first = a.basic == c.basic;
      const bool second = a.binding == c.binding;
      const bool third = a.vertex == c.vertex;
      if (first != second || second != third) return false;
    }
  }
  return true;
}

}  // namespace wlbind

#endif  // WLBIND_BINDING_HPP_
