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

// Two-dimensional Weisfeiler-Lehman refinement on labeled graphs in matrix
// form.
//
// One refinement round replaces every entry (i,j) by the multiset of ordered
// label pairs (g_ik, g_kj) over all k (the "diamond" product) and then renames
// the multisets to fresh labels, equal multisets getting equal labels. The
// renaming is canonical: it depends only on the multisets, never on vertex
// names, so refinement commutes with relabeling bit for bit.
//
//   * evs() on an explicit SignatureMatrix numbers labels 1,2,... by the
//     lexicographic order of the run-length-encoded signatures.
//   * refine() and stabilize() work on vertex-recognizing graphs, where the
//     signature of (i,j) determines the old label g_ij. They number labels by
//     (old label, signature) so that each old class is processed as one
//     bucket and only that bucket's signatures are held in memory.
//
// Both numberings are canonical; they agree up to equivalence, not bitwise.

#ifndef WLBIND_WL_HPP_
#define WLBIND_WL_HPP_

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "wlbind/graph.hpp"

namespace wlbind {

struct SignatureTerm {
  ColorId left;
  ColorId right;
  std::uint32_t count;

  friend auto operator<=>(const SignatureTerm&, const SignatureTerm&) = default;
};

// Sorted run-length encoding of {(g_ik, g_kj) : k}.
using Signature = std::vector<SignatureTerm>;

class SignatureMatrix {
 public:
  SignatureMatrix(std::size_t order, std::vector<Signature> entries)
      : order_(order), entries_(std::move(entries)) {
    if (entries_.size() != order_ * order_) throw std::invalid_argument("SignatureMatrix: wrong entry count");
  }

  std::size_t order() const { return order_; }
  const Signature& at(Vertex i, Vertex j) const {
    detail::check_vertex(i, order_, "SignatureMatrix::at");
    detail::check_vertex(j, order_, "SignatureMatrix::at");
    return entries_[(i - 1) * order_ + (j - 1)];
  }
  const Signature& raw(std::size_t r, std::size_t c) const { return entries_[r * order_ + c]; }

 private:
  std::size_t order_;
  std::vector<Signature> entries_;
};

namespace detail {

// Order-preserving map of labels onto 0..palette-1.
struct DenseLabels {
  std::vector<std::uint32_t> rank;     // row-major, one per cell
  std::vector<std::uint32_t> rank_t;   // transposed
  std::size_t palette = 0;
};

inline DenseLabels densify(const LabeledGraph& g) {
  const std::size_t n = g.order();
  std::vector<ColorId> palette(g.cells().begin(), g.cells().end());
  std::sort(palette.begin(), palette.end());
  palette.erase(std::unique(palette.begin(), palette.end()), palette.end());
  DenseLabels d;
  d.palette = palette.size();
  d.rank.resize(n * n);
  d.rank_t.resize(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const auto r = static_cast<std::uint32_t>(
          std::lower_bound(palette.begin(), palette.end(), g.raw(i, j)) - palette.begin());
      d.rank[i * n + j] = r;
      d.rank_t[j * n + i] = r;
    }
  }
  return d;
}

// Packed term: left rank (24 bits) | right rank (24 bits) | count (16 bits).
// Lexicographic order on packed words equals order on (left, right, count).
inline constexpr std::size_t kMaxPackedOrder = 4096;

using PackedSignature = std::vector<std::uint64_t>;

struct PackedSignatureHash {
  std::size_t operator()(const PackedSignature& s) const noexcept {
    std::uint64_t h = 0x9e3779b97f4a7c15ull ^ s.size();
    for (std::uint64_t w : s) {
      h ^= w + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
      h *= 0xbf58476d1ce4e5b9ull;
    }
    return static_cast<std::size_t>(h ^ (h >> 31));
  }
};

// Signature of (i,j) given a row-major rank table for the left factor and a
// transposed table for the right factor.
inline void packed_signature(std::span<const std::uint32_t> left_rows, std::span<const std::uint32_t> right_cols,
                             std::size_t n, std::size_t i, std::size_t j, std::vector<std::uint64_t>& scratch,
                             PackedSignature& out) {
  scratch.resize(n);
  const std::uint32_t* row = left_rows.data() + i * n;
  const std::uint32_t* col = right_cols.data() + j * n;
  for (std::size_t k = 0; k < n; ++k) scratch[k] = (std::uint64_t{row[k]} << 24) | col[k];
  std::sort(scratch.begin(), scratch.end());
  out.clear();
  std::size_t k = 0;
  while (k < n) {
    std::size_t run = k + 1;
    while (run < n && scratch[run] == scratch[k]) ++run;
    out.push_back((scratch[k] << 16) | (run - k));
    k = run;
  }
}

// Each row's columns sorted by label, split into runs of equal label. The
// signature of (i,j) then only sorts the column labels inside each run.
struct RowRuns {
  std::vector<std::uint32_t> order;  // per row: column indices by label
  std::vector<std::uint32_t> ends;   // per row: run end offsets, n at most
  std::vector<std::uint32_t> count;  // runs per row

  RowRuns(std::span<const std::uint32_t> rank, std::size_t n) : order(n * n), ends(n * n), count(n) {
    for (std::size_t i = 0; i < n; ++i) {
      std::uint32_t* row = order.data() + i * n;
      for (std::uint32_t k = 0; k < n; ++k) row[k] = k;
      const std::uint32_t* r = rank.data() + i * n;
      std::sort(row, row + n, [r](std::uint32_t a, std::uint32_t b) { return r[a] < r[b] || (r[a] == r[b] && a < b); });
      std::uint32_t runs = 0;
      for (std::size_t k = 1; k <= n; ++k) {
        if (k == n || r[row[k]] != r[row[k - 1]]) ends[i * n + runs++] = static_cast<std::uint32_t>(k);
      }
      count[i] = runs;
    }
  }
};

inline void run_signature(std::span<const std::uint32_t> rank, std::span<const std::uint32_t> rank_t,
                          const RowRuns& runs, std::size_t n, std::size_t i, std::size_t j,
                          std::vector<std::uint64_t>& scratch, PackedSignature& out) {
  out.clear();
  const std::uint32_t* row = runs.order.data() + i * n;
  const std::uint32_t* col = rank_t.data() + j * n;
  std::size_t begin = 0;
  for (std::uint32_t s = 0; s < runs.count[i]; ++s) {
    const std::size_t end = runs.ends[i * n + s];
    const std::uint64_t left = std::uint64_t{rank[i * n + row[begin]]} << 24;
    if (end - begin == 1) {
      out.push_back(((left | col[row[begin]]) << 16) | 1u);
    } else {
      scratch.resize(end - begin);
      for (std::size_t k = begin; k < end; ++k) scratch[k - begin] = col[row[k]];
      std::sort(scratch.begin(), scratch.end());
      for (std::size_t k = 0; k < scratch.size();) {
        std::size_t run = k + 1;
        while (run < scratch.size() && scratch[run] == scratch[k]) ++run;
        out.push_back(((left | scratch[k]) << 16) | (run - k));
        k = run;
      }
    }
    begin = end;
  }
}

inline void check_packable(std::size_t n) {
  if (n > kMaxPackedOrder) {
    throw std::invalid_argument("refinement supports orders up to " + std::to_string(kMaxPackedOrder) +
                                ", got " + std::to_string(n));
  }
}

}  // namespace detail

inline bool recognizes_vertices(const LabeledGraph& g) {
  const std::size_t n = g.order();
  std::vector<ColorId> diag(n);
  for (std::size_t i = 0; i < n; ++i) diag[i] = g.raw(i, i);
  std::sort(diag.begin(), diag.end());
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i != j && std::binary_search(diag.begin(), diag.end(), g.raw(i, j))) return false;
    }
  }
  return true;
}

// Recolors only the diagonal so that vertex labels are disjoint from all
// off-diagonal labels. Equal diagonal entries stay equal.
inline LabeledGraph recognize_vertices(const LabeledGraph& g) {
  const std::size_t n = g.order();
  ColorId max_off = kBlank;
  std::vector<ColorId> diag;
  diag.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    diag.push_back(g.raw(i, i));
    for (std::size_t j = 0; j < n; ++j) {
      if (i != j) max_off = std::max(max_off, g.raw(i, j));
    }
  }
  std::vector<ColorId> distinct = diag;
  std::sort(distinct.begin(), distinct.end());
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
  LabeledGraph out = g;
  for (std::size_t i = 0; i < n; ++i) {
    const auto rank = std::lower_bound(distinct.begin(), distinct.end(), diag[i]) - distinct.begin();
    out.raw(i, i) = ColorId{value(max_off) + 1 + static_cast<std::uint32_t>(rank)};
  }
  return out;
}

inline SignatureMatrix diamond(const LabeledGraph& g) {
  const std::size_t n = g.order();
  std::vector<Signature> entries;
  entries.reserve(n * n);
  std::vector<std::pair<ColorId, ColorId>> pairs(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) pairs[k] = {g.raw(i, k), g.raw(k, j)};
      std::sort(pairs.begin(), pairs.end());
      Signature sig;
      for (std::size_t k = 0; k < n;) {
        std::size_t run = k + 1;
        while (run < n && pairs[run] == pairs[k]) ++run;
        sig.push_back({pairs[k].first, pairs[k].second, static_cast<std::uint32_t>(run - k)});
        k = run;
      }
      entries.push_back(std::move(sig));
    }
  }
  return SignatureMatrix(n, std::move(entries));
}

// Equivalent variable substitution: labels 1..C by lexicographic rank.
inline LabeledGraph evs(const SignatureMatrix& m) {
  const std::size_t n = m.order();
  std::map<Signature, std::uint32_t> ranks;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) ranks.emplace(m.raw(i, j), 0);
  }
  std::uint32_t next = 1;
  for (auto& [sig, r] : ranks) r = next++;
  LabeledGraph out(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) out.raw(i, j) = ColorId{ranks.at(m.raw(i, j))};
  }
  return out;
}

namespace detail {

// One round on a vertex-recognizing graph, bucketed by old label.
inline LabeledGraph refine_recognized(const LabeledGraph& g) {
  const std::size_t n = g.order();
  check_packable(n);
  const DenseLabels d = densify(g);
  const RowRuns runs(d.rank, n);

  std::vector<std::size_t> bucket_start(d.palette + 1, 0);
  for (std::uint32_t r : d.rank) ++bucket_start[r + 1];
  for (std::size_t b = 0; b < d.palette; ++b) bucket_start[b + 1] += bucket_start[b];
  std::vector<std::uint32_t> entries(n * n);
  {
    std::vector<std::size_t> fill(bucket_start.begin(), bucket_start.end() - 1);
    for (std::size_t e = 0; e < n * n; ++e) entries[fill[d.rank[e]]++] = static_cast<std::uint32_t>(e);
  }

  LabeledGraph out(n);
  std::uint32_t next_color = 1;
  std::vector<std::uint64_t> scratch;
  PackedSignature sig;
  std::unordered_map<PackedSignature, std::uint32_t, PackedSignatureHash> local;
  std::vector<const PackedSignature*> distinct;
  std::vector<std::uint32_t> local_id;
  std::vector<std::uint32_t> order;
  std::vector<std::uint32_t> rank_of;

  for (std::size_t b = 0; b < d.palette; ++b) {
    const std::size_t lo = bucket_start[b];
    const std::size_t hi = bucket_start[b + 1];
    local.clear();
    distinct.clear();
    local_id.resize(hi - lo);
    for (std::size_t idx = lo; idx < hi; ++idx) {
      const std::uint32_t e = entries[idx];
      run_signature(d.rank, d.rank_t, runs, n, e / n, e % n, scratch, sig);
      auto [it, fresh] = local.try_emplace(sig, static_cast<std::uint32_t>(distinct.size()));
      if (fresh) distinct.push_back(&it->first);
      local_id[idx - lo] = it->second;
    }
    order.resize(distinct.size());
    for (std::uint32_t k = 0; k < order.size(); ++k) order[k] = k;
    std::sort(order.begin(), order.end(),
              [&](std::uint32_t a, std::uint32_t c) { return *distinct[a] < *distinct[c]; });
    rank_of.resize(order.size());
    for (std::uint32_t r = 0; r < order.size(); ++r) rank_of[order[r]] = r;
    for (std::size_t idx = lo; idx < hi; ++idx) {
      const std::uint32_t e = entries[idx];
      out.raw(e / n, e % n) = ColorId{next_color + rank_of[local_id[idx - lo]]};
    }
    next_color += static_cast<std::uint32_t>(distinct.size());
  }
  return out;
}

}  // namespace detail

// evs(g ⋄ g), up to equivalence.
inline LabeledGraph refine(const LabeledGraph& g) {
  if (recognizes_vertices(g)) return detail::refine_recognized(g);
  return evs(diamond(g));
}

// True iff b_uv == b_st implies a_uv == a_st, i.e. a is embedded in b.
inline bool embeds(const LabeledGraph& a, const LabeledGraph& b) {
  if (a.order() != b.order()) {
    throw std::invalid_argument("embeds: orders differ (" + std::to_string(a.order()) + " vs " +
                                std::to_string(b.order()) + ")");
  }
  std::unordered_map<std::uint32_t, std::uint32_t> image;
  const auto ac = a.cells();
  const auto bc = b.cells();
  for (std::size_t e = 0; e < ac.size(); ++e) {
    auto [it, fresh] = image.try_emplace(value(bc[e]), value(ac[e]));
    if (!fresh && it->second != value(ac[e])) return false;
  }
  return true;
}

inline bool equivalent(const LabeledGraph& a, const LabeledGraph& b) { return embeds(a, b) && embeds(b, a); }

inline bool is_stable(const LabeledGraph& g) { return equivalent(refine(g), g); }

// g_uv == g_rs iff g_vu == g_sr.
inline bool is_converse_equivalent(const LabeledGraph& g) {
  const std::size_t n = g.order();
  std::unordered_map<std::uint32_t, std::uint32_t> converse;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      auto [it, fresh] = converse.try_emplace(value(g.raw(i, j)), value(g.raw(j, i)));
      if (!fresh && it->second != value(g.raw(j, i))) return false;
    }
  }
  return true;
}

// g_uv == g_rs implies g_uu == g_rr and g_vv == g_ss.
inline bool has_endpoint_consistent_labels(const LabeledGraph& g) {
  const std::size_t n = g.order();
  std::unordered_map<std::uint32_t, std::pair<std::uint32_t, std::uint32_t>> ends;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const std::pair<std::uint32_t, std::uint32_t> e{value(g.raw(i, i)), value(g.raw(j, j))};
      auto [it, fresh] = ends.try_emplace(value(g.raw(i, j)), e);
      if (!fresh && it->second != e) return false;
    }
  }
  return true;
}

// g_uu == g_vv iff rows u,v and columns u,v agree as multisets.
inline bool has_cell_multiset_law(const LabeledGraph& g) {
  const std::size_t n = g.order();
  std::map<std::pair<std::vector<ColorId>, std::vector<ColorId>>, ColorId> key_to_diag;
  std::map<ColorId, std::pair<std::vector<ColorId>, std::vector<ColorId>>> diag_to_key;
  for (std::size_t u = 0; u < n; ++u) {
    std::vector<ColorId> row(n), col(n);
    for (std::size_t k = 0; k < n; ++k) {
      row[k] = g.raw(u, k);
      col[k] = g.raw(k, u);
    }
    std::sort(row.begin(), row.end());
    std::sort(col.begin(), col.end());
    auto key = std::make_pair(std::move(row), std::move(col));
    auto [it, fresh] = key_to_diag.try_emplace(key, g.raw(u, u));
    if (!fresh && it->second != g.raw(u, u)) return false;
    auto [jt, fresh2] = diag_to_key.try_emplace(g.raw(u, u), std::move(key));
    if (!fresh2 && jt->second != it->first) return false;
  }
  return true;
}

struct StabilizationTrace {
  std::size_t rounds = 0;
  // dims[0] is the dimension after diagonal recoloring, dims[t] after round t.
  std::vector<std::size_t> dims;
  // Set when rounds > n*log2(n); informational only.
  bool exceeds_nlogn = false;
};

struct StabilizeOptions {
  bool keep_history = false;
};

class StableGraph {
 public:
  // Wraps a graph that is already a fixpoint; throws otherwise.
  static StableGraph certify(LabeledGraph g) {
    if (!recognizes_vertices(g)) throw std::invalid_argument("StableGraph: graph does not recognize vertices");
    if (!is_stable(g)) throw std::invalid_argument("StableGraph: graph is not a refinement fixpoint");
    StabilizationTrace trace;
    trace.dims.push_back(dimension(g));
    return StableGraph(std::move(g), std::move(trace), {});
  }

  const LabeledGraph& graph() const { return graph_; }
  std::size_t order() const { return graph_.order(); }
  std::size_t dim() const { return trace_.dims.back(); }
  const Partition& cells() const { return cells_; }
  const StabilizationTrace& trace() const { return trace_; }
  // G_1 (diagonal recoloring) through the confirming round; empty unless
  // requested through StabilizeOptions.
  const std::vector<LabeledGraph>& history() const { return history_; }

 private:
  friend StableGraph stabilize(const LabeledGraph& g, StabilizeOptions options);

  StableGraph(LabeledGraph g, StabilizationTrace trace, std::vector<LabeledGraph> history)
      : graph_(std::move(g)), trace_(std::move(trace)), history_(std::move(history)) {
    std::vector<ColorId> diag(graph_.order());
    for (std::size_t i = 0; i < diag.size(); ++i) diag[i] = graph_.raw(i, i);
    cells_ = Partition::from_labels(std::span<const ColorId>(diag));
  }

  LabeledGraph graph_;
  Partition cells_;
  StabilizationTrace trace_;
  std::vector<LabeledGraph> history_;
};

// Iterates refine() from the vertex-recognizing recoloring of g until the
// dimension repeats. The returned graph is the confirming round's output.
inline StableGraph stabilize(const LabeledGraph& g, StabilizeOptions options = {}) {
  const std::size_t n = g.order();
  if (n == 0) throw std::invalid_argument("stabilize: empty graph");
  StabilizationTrace trace;
  std::vector<LabeledGraph> history;
  LabeledGraph current = recognize_vertices(g);
  trace.dims.push_back(dimension(current));
  if (options.keep_history) history.push_back(current);
  if (n > 1) {
    for (;;) {
      LabeledGraph next = detail::refine_recognized(current);
      trace.dims.push_back(dimension(next));
      ++trace.rounds;
      if (options.keep_history) history.push_back(next);
      const bool settled = trace.dims.back() == trace.dims[trace.dims.size() - 2];
      current = std::move(next);
      if (settled) break;
      if (trace.rounds > n * n) throw ContractViolation("stabilize: exceeded n^2 rounds");
    }
    trace.exceeds_nlogn = static_cast<double>(trace.rounds) > static_cast<double>(n) * std::log2(double(n));
  }
  return StableGraph(std::move(current), std::move(trace), std::move(history));
}

inline StableGraph stabilize(const SimpleGraph& g, StabilizeOptions options = {}) {
  return stabilize(g.labeled(), options);
}

inline Partition cell_partition(const StableGraph& x) { return x.cells(); }

// Vertices grouped by their connection label to u.
inline Partition block_partition(const StableGraph& x, Vertex u) {
  detail::check_vertex(u, x.order(), "block_partition");
  const auto row = x.graph().raw_row(u - 1);
  return Partition::from_labels(row);
}

// Relabeling that lists cells consecutively (cells by smallest member,
// ascending within a cell): vertex v moves to position p(v).
inline Permutation cell_block_order(const StableGraph& x) {
  std::vector<Vertex> images(x.order());
  Vertex next = 1;
  for (const auto& cell : x.cells().cells()) {
    for (Vertex v : cell) images[v - 1] = next++;
  }
  return Permutation::from_images(images);
}

// Copy of x with vertex u given a label unused anywhere in x.
inline LabeledGraph individualize(const StableGraph& x, Vertex u) {
  detail::check_vertex(u, x.order(), "individualize");
  LabeledGraph g = x.graph();
  g.set(u, u, ColorId{value(g.max_color()) + 1});
  return g;
}

// Induced submatrix on the given vertices, renumbered 1..m in the order given.
inline LabeledGraph induced_subgraph(const LabeledGraph& g, std::span<const Vertex> vertices) {
  const std::size_t m = vertices.size();
  LabeledGraph out(m);
  for (std::size_t a = 0; a < m; ++a) {
    detail::check_vertex(vertices[a], g.order(), "induced_subgraph");
    for (std::size_t b = 0; b < m; ++b) out.raw(a, b) = g.raw(vertices[a] - 1, vertices[b] - 1);
  }
  return out;
}

inline std::vector<Vertex> union_of_cells(const Partition& p, std::span<const std::size_t> keep) {
  std::vector<Vertex> vertices;
  for (std::size_t c : keep) {
    if (c >= p.size()) throw std::out_of_range("cell index " + std::to_string(c) + " out of range");
    vertices.insert(vertices.end(), p.cell(c).begin(), p.cell(c).end());
  }
  std::sort(vertices.begin(), vertices.end());
  vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
  return vertices;
}

// Cells are indexed 0-based in cell_partition order. Labels are kept as-is.
inline StableGraph restrict_to_cells(const StableGraph& x, std::span<const std::size_t> keep) {
  if (keep.empty()) throw std::invalid_argument("restrict_to_cells: empty cell selection");
  const auto vertices = union_of_cells(x.cells(), keep);
  LabeledGraph sub = induced_subgraph(x.graph(), vertices);
  if (!is_stable(sub)) throw ContractViolation("restrict_to_cells: restriction is not stable");
  return StableGraph::certify(std::move(sub));
}

// Both graphs must share one label space. True iff rows and columns agree as
// multisets index by index, and x_uv == y_rs exactly when the 2-walk
// multisets of (u,v) in x and (r,s) in y coincide.
inline bool similar(const StableGraph& x, const StableGraph& y) {
  const std::size_t n = x.order();
  if (y.order() != n) {
    throw std::invalid_argument("similar: orders differ (" + std::to_string(n) + " vs " +
                                std::to_string(y.order()) + ")");
  }
  const LabeledGraph& a = x.graph();
  const LabeledGraph& b = y.graph();
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<ColorId> ra(n), rb(n), ca(n), cb(n);
    for (std::size_t k = 0; k < n; ++k) {
      ra[k] = a.raw(i, k);
      rb[k] = b.raw(i, k);
      ca[k] = a.raw(k, i);
      cb[k] = b.raw(k, i);
    }
    std::sort(ra.begin(), ra.end());
    std::sort(rb.begin(), rb.end());
    std::sort(ca.begin(), ca.end());
    std::sort(cb.begin(), cb.end());
    if (ra != rb || ca != cb) return false;
  }

  // Shared dense ranks so packed signatures compare across the two graphs.
  LabeledGraph both(2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      both.raw(i, j) = a.raw(i, j);
      both.raw(n + i, n + j) = b.raw(i, j);
    }
  }
  const detail::DenseLabels d = detail::densify(both);
  std::vector<std::uint32_t> ra(n * n), ca(n * n), rb(n * n), cb(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      ra[i * n + j] = d.rank[i * 2 * n + j];
      ca[j * n + i] = ra[i * n + j];
      rb[i * n + j] = d.rank[(n + i) * 2 * n + (n + j)];
      cb[j * n + i] = rb[i * n + j];
    }
  }

  std::unordered_map<detail::PackedSignature, std::uint32_t, detail::PackedSignatureHash> sig_ids;
  std::vector<std::uint64_t> scratch;
  detail::PackedSignature sig;
  auto sig_id = [&](const std::vector<std::uint32_t>& rows, const std::vector<std::uint32_t>& cols, std::size_t i,
                    std::size_t j) {
    detail::packed_signature(rows, cols, n, i, j, scratch, sig);
    return sig_ids.try_emplace(sig, static_cast<std::uint32_t>(sig_ids.size())).first->second;
  };

  // (label, signature id) pairs per graph.
  std::map<std::uint32_t, std::vector<std::uint32_t>> sigs_of_label;
  std::map<std::uint32_t, std::vector<std::uint32_t>> labels_of_sig;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> in_x, in_y;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      in_x.emplace_back(value(a.raw(i, j)), sig_id(ra, ca, i, j));
      in_y.emplace_back(value(b.raw(i, j)), sig_id(rb, cb, i, j));
    }
  }
  auto dedupe = [](auto& v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
  };
  dedupe(in_x);
  dedupe(in_y);
  // A label shared by both graphs must carry one signature everywhere, and a
  // signature shared by both graphs must carry one label everywhere.
  std::map<std::uint32_t, std::uint32_t> x_label_sig, y_label_sig, x_sig_label, y_sig_label;
  std::map<std::uint32_t, int> x_label_count, y_label_count, x_sig_count, y_sig_count;
  for (auto [l, s] : in_x) {
    x_label_sig[l] = s;
    ++x_label_count[l];
    x_sig_label[s] = l;
    ++x_sig_count[s];
  }
  for (auto [l, s] : in_y) {
    y_label_sig[l] = s;
    ++y_label_count[l];
    y_sig_label[s] = l;
    ++y_sig_count[s];
  }
  for (const auto& [l, s] : x_label_sig) {
    auto it = y_label_sig.find(l);
    if (it == y_label_sig.end()) continue;
    if (x_label_count[l] != 1 || y_label_count[l] != 1 || it->second != s) return false;
  }
  for (const auto& [s, l] : x_sig_label) {
    auto it = y_sig_label.find(s);
    if (it == y_sig_label.end()) continue;
    if (x_sig_count[s] != 1 || y_sig_count[s] != 1 || it->second != l) return false;
  }
  return true;
}

// Block X_AB is equatable when every column of the block holds the same
// label multiset and every row of the block holds the same label multiset.
inline bool is_equatable(const StableGraph& x, std::size_t cell_a, std::size_t cell_b) {
  const Partition& p = x.cells();
  if (cell_a >= p.size() || cell_b >= p.size()) throw std::out_of_range("is_equatable: cell index out of range");
  const auto& rows = p.cell(cell_a);
  const auto& cols = p.cell(cell_b);
  const LabeledGraph& g = x.graph();
  auto column = [&](Vertex v) {
    std::vector<ColorId> out;
    for (Vertex k : rows) out.push_back(g.raw(k - 1, v - 1));
    std::sort(out.begin(), out.end());
    return out;
  };
  auto row = [&](Vertex u) {
    std::vector<ColorId> out;
    for (Vertex k : cols) out.push_back(g.raw(u - 1, k - 1));
    std::sort(out.begin(), out.end());
    return out;
  };
  const auto c0 = column(cols.front());
  for (Vertex v : cols) {
    if (column(v) != c0) return false;
  }
  const auto r0 = row(rows.front());
  for (Vertex u : rows) {
    if (row(u) != r0) return false;
  }
  return true;
}

}  // namespace wlbind

#endif  // WLBIND_WL_HPP_
