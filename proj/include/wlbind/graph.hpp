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

// Core data model: labeled graphs as dense color matrices, simple graphs,
// permutations and vertex partitions.
//
// Vertices are 1-based in every public interface. Storage is row-major and
// 0-based; accessors that take storage coordinates are named raw*().

#ifndef WLBIND_GRAPH_HPP_
#define WLBIND_GRAPH_HPP_

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace wlbind {

// Interned label. Value 0 is the blank label (non-edge, unlabeled vertex).
enum class ColorId : std::uint32_t {};

inline constexpr ColorId kBlank{0};
inline constexpr ColorId kEdge{1};

constexpr std::uint32_t value(ColorId c) { return static_cast<std::uint32_t>(c); }

using Vertex = std::size_t;

// Thrown when an internal postcondition fails. Reaching one is a bug.
class ContractViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

namespace detail {

inline void check_vertex(Vertex v, std::size_t order, const char* what) {
  if (v < 1 || v > order) {
    throw std::out_of_range(std::string(what) + ": vertex " + std::to_string(v) +
                            " outside [1," + std::to_string(order) + "]");
  }
}

}  // namespace detail

class LabeledGraph {
 public:
  LabeledGraph() = default;

  explicit LabeledGraph(std::size_t order, ColorId fill = kBlank)
      : order_(order), cells_(order * order, fill) {}

  LabeledGraph(std::size_t order, std::vector<ColorId> cells)
      : order_(order), cells_(std::move(cells)) {
    if (cells_.size() != order_ * order_) {
      throw std::invalid_argument("LabeledGraph: expected " + std::to_string(order_ * order_) +
                                  " cells, got " + std::to_string(cells_.size()));
    }
  }

  // Convenience for literals in tests and examples: rows of raw color values.
  static LabeledGraph from_rows(std::initializer_list<std::initializer_list<std::uint32_t>> rows) {
    const std::size_t n = rows.size();
    std::vector<ColorId> cells;
    cells.reserve(n * n);
    for (const auto& row : rows) {
      if (row.size() != n) throw std::invalid_argument("LabeledGraph::from_rows: matrix is not square");
      for (std::uint32_t c : row) cells.push_back(ColorId{c});
    }
    return LabeledGraph(n, std::move(cells));
  }

  std::size_t order() const { return order_; }

  ColorId at(Vertex i, Vertex j) const {
    detail::check_vertex(i, order_, "LabeledGraph::at");
    detail::check_vertex(j, order_, "LabeledGraph::at");
    return cells_[(i - 1) * order_ + (j - 1)];
  }

  void set(Vertex i, Vertex j, ColorId c) {
    detail::check_vertex(i, order_, "LabeledGraph::set");
    detail::check_vertex(j, order_, "LabeledGraph::set");
    cells_[(i - 1) * order_ + (j - 1)] = c;
  }

  ColorId raw(std::size_t r, std::size_t c) const { return cells_[r * order_ + c]; }
  ColorId& raw(std::size_t r, std::size_t c) { return cells_[r * order_ + c]; }
  std::span<const ColorId> raw_row(std::size_t r) const {
    return {cells_.data() + r * order_, order_};
  }
  std::span<const ColorId> cells() const { return cells_; }

  ColorId max_color() const {
    ColorId m = kBlank;
    for (ColorId c : cells_) m = std::max(m, c);
    return m;
  }

  friend bool operator==(const LabeledGraph&, const LabeledGraph&) = default;

 private:
  std::size_t order_ = 0;
  std::vector<ColorId> cells_;
};

// Number of distinct labels in the matrix.
inline std::size_t dimension(const LabeledGraph& g) {
  std::vector<ColorId> seen(g.cells().begin(), g.cells().end());
  std::sort(seen.begin(), seen.end());
  return static_cast<std::size_t>(std::unique(seen.begin(), seen.end()) - seen.begin());
}

class Permutation {
 public:
  Permutation() = default;

  static Permutation identity(std::size_t n) {
    Permutation p;
    p.images_.resize(n);
    std::iota(p.images_.begin(), p.images_.end(), 0u);
    return p;
  }

  // images[k] is the 1-based image of vertex k+1.
  static Permutation from_images(std::span<const Vertex> images) {
    Permutation p;
    const std::size_t n = images.size();
    p.images_.resize(n);
    std::vector<bool> hit(n, false);
    for (std::size_t k = 0; k < n; ++k) {
      const Vertex v = images[k];
      if (v < 1 || v > n || hit[v - 1]) {
        throw std::invalid_argument("Permutation: images are not a bijection on [1," +
                                    std::to_string(n) + "]");
      }
      hit[v - 1] = true;
      p.images_[k] = static_cast<std::uint32_t>(v - 1);
    }
    return p;
  }
  static Permutation from_images(std::initializer_list<Vertex> images) {
    return from_images(std::span<const Vertex>(images.begin(), images.size()));
  }

  static Permutation transposition(std::size_t n, Vertex u, Vertex v) {
    detail::check_vertex(u, n, "Permutation::transposition");
    detail::check_vertex(v, n, "Permutation::transposition");
    Permutation p = identity(n);
    std::swap(p.images_[u - 1], p.images_[v - 1]);
    return p;
  }

  std::size_t order() const { return images_.size(); }

  Vertex operator()(Vertex v) const {
    detail::check_vertex(v, images_.size(), "Permutation");
    return images_[v - 1] + 1;
  }
  std::uint32_t raw(std::size_t k) const { return images_[k]; }

  Permutation inverse() const {
    Permutation q;
    q.images_.resize(images_.size());
    for (std::size_t k = 0; k < images_.size(); ++k) q.images_[images_[k]] = static_cast<std::uint32_t>(k);
    return q;
  }

  // Left-to-right composition: (p.then(q))(v) == q(p(v)).
  Permutation then(const Permutation& q) const {
    if (q.order() != order()) throw std::invalid_argument("Permutation::then: order mismatch");
    Permutation r;
    r.images_.resize(images_.size());
    for (std::size_t k = 0; k < images_.size(); ++k) r.images_[k] = q.images_[images_[k]];
    return r;
  }

  std::vector<Vertex> images() const {
    std::vector<Vertex> out(images_.size());
    for (std::size_t k = 0; k < images_.size(); ++k) out[k] = images_[k] + 1;
    return out;
  }

  bool is_identity() const {
    for (std::size_t k = 0; k < images_.size(); ++k) {
      if (images_[k] != k) return false;
    }
    return true;
  }

  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<std::uint32_t> images_;
};

// Returns P G P^T: result(p(i), p(j)) == g(i, j).
inline LabeledGraph apply_permutation(const LabeledGraph& g, const Permutation& p) {
  if (p.order() != g.order()) {
    throw std::invalid_argument("apply_permutation: permutation of order " + std::to_string(p.order()) +
                                " applied to graph of order " + std::to_string(g.order()));
  }
  const std::size_t n = g.order();
  LabeledGraph out(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) out.raw(p.raw(i), p.raw(j)) = g.raw(i, j);
  }
  return out;
}

inline bool is_automorphism(const LabeledGraph& g, const Permutation& p) {
  if (p.order() != g.order()) return false;
  const std::size_t n = g.order();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (g.raw(p.raw(i), p.raw(j)) != g.raw(i, j)) return false;
    }
  }
  return true;
}

// Ordered list of disjoint non-empty cells covering [1,n]. Cells are sorted
// ascending and ordered by their smallest member.
class Partition {
 public:
  Partition() = default;

  explicit Partition(std::vector<std::vector<Vertex>> cells) : cells_(std::move(cells)) {
    std::size_t n = 0;
    for (auto& cell : cells_) {
      if (cell.empty()) throw std::invalid_argument("Partition: empty cell");
      std::sort(cell.begin(), cell.end());
      n += cell.size();
    }
    std::sort(cells_.begin(), cells_.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    std::vector<bool> hit(n + 1, false);
    for (const auto& cell : cells_) {
      for (Vertex v : cell) {
        if (v < 1 || v > n || hit[v]) {
          throw std::invalid_argument("Partition: cells do not cover [1," + std::to_string(n) +
                                      "] exactly once");
        }
        hit[v] = true;
      }
    }
    order_ = n;
  }

  // Groups vertex k+1 by labels[k].
  template <typename Label>
  static Partition from_labels(std::span<const Label> labels) {
    std::vector<std::vector<Vertex>> cells;
    std::unordered_map<Label, std::size_t> index;
    for (std::size_t k = 0; k < labels.size(); ++k) {
      auto [it, fresh] = index.try_emplace(labels[k], cells.size());
      if (fresh) cells.emplace_back();
      cells[it->second].push_back(k + 1);
    }
    return Partition(std::move(cells));
  }

  static Partition unit(std::size_t n) {
    std::vector<Vertex> all(n);
    std::iota(all.begin(), all.end(), Vertex{1});
    return Partition({std::move(all)});
  }

  std::size_t order() const { return order_; }
  std::size_t size() const { return cells_.size(); }
  const std::vector<std::vector<Vertex>>& cells() const { return cells_; }
  const std::vector<Vertex>& cell(std::size_t index) const { return cells_.at(index); }

  // Index of the cell holding v.
  std::size_t cell_of(Vertex v) const {
    for (std::size_t c = 0; c < cells_.size(); ++c) {
      if (std::binary_search(cells_[c].begin(), cells_[c].end(), v)) return c;
    }
    throw std::out_of_range("Partition::cell_of: vertex " + std::to_string(v) + " not covered");
  }

  // True when every cell of *this lies inside a single cell of coarser.
  bool refines(const Partition& coarser) const {
    if (coarser.order() != order_) return false;
    std::vector<std::size_t> owner(order_ + 1);
    for (std::size_t c = 0; c < coarser.size(); ++c) {
      for (Vertex v : coarser.cell(c)) owner[v] = c;
    }
    for (const auto& cell : cells_) {
      for (Vertex v : cell) {
        if (owner[v] != owner[cell.front()]) return false;
      }
    }
    return true;
  }

  bool is_discrete() const { return cells_.size() == order_; }
  bool is_unit() const { return cells_.size() == 1; }

  std::string to_string() const {
    std::string out;
    for (std::size_t c = 0; c < cells_.size(); ++c) {
      if (c) out += ',';
      out += '{';
      for (std::size_t k = 0; k < cells_[c].size(); ++k) {
        if (k) out += ',';
        out += std::to_string(cells_[c][k]);
      }
      out += '}';
    }
    return out;
  }

  friend bool operator==(const Partition&, const Partition&) = default;

 private:
  std::vector<std::vector<Vertex>> cells_;
  std::size_t order_ = 0;
};

// Symmetric 0/1 matrix with blank diagonal; edges carry kEdge.
class SimpleGraph {
 public:
  SimpleGraph() = default;

  explicit SimpleGraph(std::size_t order) : g_(order) {
    if (order < 1) throw std::invalid_argument("SimpleGraph: order must be >= 1");
  }

  SimpleGraph(std::size_t order, std::span<const std::pair<Vertex, Vertex>> edges) : SimpleGraph(order) {
    for (auto [u, v] : edges) add_edge(u, v);
  }
  SimpleGraph(std::size_t order, std::initializer_list<std::pair<Vertex, Vertex>> edges)
      : SimpleGraph(order, std::span<const std::pair<Vertex, Vertex>>(edges.begin(), edges.size())) {}

  // Accepts any symmetric matrix with a blank diagonal and at most one
  // non-blank label; that label is re-interned to kEdge.
  static SimpleGraph from_labeled(const LabeledGraph& g) {
    SimpleGraph s(g.order());
    ColorId edge = kBlank;
    const std::size_t n = g.order();
    for (std::size_t i = 0; i < n; ++i) {
      if (g.raw(i, i) != kBlank) throw std::invalid_argument("SimpleGraph: non-blank diagonal");
      for (std::size_t j = 0; j < n; ++j) {
        const ColorId c = g.raw(i, j);
        if (c != g.raw(j, i)) throw std::invalid_argument("SimpleGraph: matrix is not symmetric");
        if (c == kBlank) continue;
        if (edge == kBlank) edge = c;
        if (c != edge) throw std::invalid_argument("SimpleGraph: more than one edge label");
        s.g_.raw(i, j) = kEdge;
      }
    }
    return s;
  }

  void add_edge(Vertex u, Vertex v) {
    detail::check_vertex(u, order(), "SimpleGraph::add_edge");
    detail::check_vertex(v, order(), "SimpleGraph::add_edge");
    if (u == v) throw std::invalid_argument("SimpleGraph: self-loop at " + std::to_string(u));
    g_.set(u, v, kEdge);
    g_.set(v, u, kEdge);
  }

  std::size_t order() const { return g_.order(); }
  const LabeledGraph& labeled() const { return g_; }

  bool has_edge(Vertex u, Vertex v) const { return u != v && g_.at(u, v) != kBlank; }
  bool raw_edge(std::size_t r, std::size_t c) const { return g_.raw(r, c) != kBlank; }

  std::size_t degree(Vertex v) const {
    detail::check_vertex(v, order(), "SimpleGraph::degree");
    std::size_t d = 0;
    for (std::size_t j = 0; j < order(); ++j) d += raw_edge(v - 1, j);
    return d;
  }

  std::size_t edge_count() const {
    std::size_t m = 0;
    for (std::size_t i = 0; i < order(); ++i) {
      for (std::size_t j = i + 1; j < order(); ++j) m += raw_edge(i, j);
    }
    return m;
  }

  // Edges (u, v) with u < v in lexicographic order.
  std::vector<std::pair<Vertex, Vertex>> edges() const {
    std::vector<std::pair<Vertex, Vertex>> out;
    for (std::size_t i = 0; i < order(); ++i) {
      for (std::size_t j = i + 1; j < order(); ++j) {
        if (raw_edge(i, j)) out.emplace_back(i + 1, j + 1);
      }
    }
    return out;
  }

  bool is_connected() const {
    const std::size_t n = order();
    if (n == 0) return false;
    std::vector<bool> seen(n, false);
    std::vector<std::size_t> stack{0};
    seen[0] = true;
    std::size_t reached = 1;
    while (!stack.empty()) {
      const std::size_t u = stack.back();
      stack.pop_back();
      for (std::size_t w = 0; w < n; ++w) {
        if (!seen[w] && raw_edge(u, w)) {
          seen[w] = true;
          ++reached;
          stack.push_back(w);
        }
      }
    }
    return reached == n;
  }

  friend bool operator==(const SimpleGraph&, const SimpleGraph&) = default;

 private:
  LabeledGraph g_;
};

inline SimpleGraph apply_permutation(const SimpleGraph& g, const Permutation& p) {
  return SimpleGraph::from_labeled(apply_permutation(g.labeled(), p));
}

// Block-diagonal union: g on [1,n], h on [n+1,2n], no cross edges.
inline SimpleGraph disjoint_union(const SimpleGraph& g, const SimpleGraph& h) {
  if (g.order() != h.order()) {
    throw std::invalid_argument("disjoint_union: orders differ (" + std::to_string(g.order()) + " vs " +
                                std::to_string(h.order()) + ")");
  }
  const std::size_t n = g.order();
  SimpleGraph out(2 * n);
  for (auto [u, v] : g.edges()) out.add_edge(u, v);
  for (auto [u, v] : h.edges()) out.add_edge(u + n, v + n);
  return out;
}

inline SimpleGraph complete_graph(std::size_t n) {
  SimpleGraph g(n);
  for (Vertex u = 1; u <= n; ++u) {
    for (Vertex v = u + 1; v <= n; ++v) g.add_edge(u, v);
  }
  return g;
}

inline SimpleGraph path_graph(std::size_t n) {
  SimpleGraph g(n);
  for (Vertex u = 1; u < n; ++u) g.add_edge(u, u + 1);
  return g;
}

inline SimpleGraph cycle_graph(std::size_t n) {
  SimpleGraph g = path_graph(n);
  if (n >= 3) g.add_edge(n, 1);
  return g;
}

// Center is vertex 1.
inline SimpleGraph star_graph(std::size_t n) {
  SimpleGraph g(n);
  for (Vertex v = 2; v <= n; ++v) g.add_edge(1, v);
  return g;
}

}  // namespace wlbind

#endif  // WLBIND_GRAPH_HPP_
