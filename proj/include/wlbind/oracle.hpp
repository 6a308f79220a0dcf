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

// Brute-force isomorphism and automorphism search for small labeled graphs.
//
// Vertices are matched by backtracking. Candidates are pruned with a joint
// vertex-level color refinement of both graphs, which is deliberately kept
// separate from the pair-level refinement in wl.hpp. Every search counts
// nodes and throws BudgetExceeded past the configured limit.

#ifndef WLBIND_ORACLE_HPP_
#define WLBIND_ORACLE_HPP_

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "wlbind/binding.hpp"
#include "wlbind/graph.hpp"

namespace wlbind {

inline constexpr std::uint64_t kDefaultOracleBudget = 10'000'000;

class BudgetExceeded : public std::runtime_error {
 public:
  explicit BudgetExceeded(std::uint64_t budget)
      : std::runtime_error("oracle search budget of " + std::to_string(budget) + " nodes exceeded"),
        budget_(budget) {}
  std::uint64_t budget() const { return budget_; }

 private:
  std::uint64_t budget_;
};

// WLBIND_ORACLE_BUDGET if set to a positive integer, else the default.
inline std::uint64_t default_budget() {
  if (const char* env = std::getenv("WLBIND_ORACLE_BUDGET")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return v;
  }
  return kDefaultOracleBudget;
}

struct OracleOptions {
  std::uint64_t budget = default_budget();
};

namespace detail {

// Stable vertex colors for g and h computed in one shared color space.
inline std::pair<std::vector<std::uint32_t>, std::vector<std::uint32_t>> joint_vertex_colors(const LabeledGraph& g,
                                                                                         const LabeledGraph& h) {
  const std::size_t n = g.order();
  const std::size_t m = h.order();
  const LabeledGraph* graphs[2] = {&g, &h};
  std::vector<std::uint32_t> col[2] = {std::vector<std::uint32_t>(n), std::vector<std::uint32_t>(m)};
  for (int s = 0; s < 2; ++s) {
    for (std::size_t v = 0; v < col[s].size(); ++v) col[s][v] = value(graphs[s]->raw(v, v));
  }
  std::size_t classes = 0;
  for (;;) {
    using Key = std::pair<std::uint32_t, std::vector<std::uint64_t>>;
    std::map<Key, std::uint32_t> ids;
    std::vector<Key> keys[2];
    for (int s = 0; s < 2; ++s) {
      const LabeledGraph& x = *graphs[s];
      for (std::size_t v = 0; v < col[s].size(); ++v) {
        std::vector<std::uint64_t> nbr;
        nbr.reserve(col[s].size());
        for (std::size_t w = 0; w < col[s].size(); ++w) {
          if (w == v) continue;
          // Three 21-bit fields: out-label, in-label, neighbor color.
          nbr.push_back((std::uint64_t{value(x.raw(v, w))} << 42) | (std::uint64_t{value(x.raw(w, v))} << 21) |
                        col[s][w]);
        }
        std::sort(nbr.begin(), nbr.end());
        keys[s].emplace_back(col[s][v], std::move(nbr));
      }
    }
    for (int s = 0; s < 2; ++s) {
      for (const auto& k : keys[s]) ids.emplace(k, 0);
    }
    std::uint32_t next = 0;
    for (auto& [k, id] : ids) id = next++;
    for (int s = 0; s < 2; ++s) {
      for (std::size_t v = 0; v < col[s].size(); ++v) col[s][v] = ids.at(keys[s][v]);
    }
    if (ids.size() == classes) break;
    classes = ids.size();
  }
  return {std::move(col[0]), std::move(col[1])};
}

inline void check_packed_labels(const LabeledGraph& g) {
  if (value(g.max_color()) >= (1u << 21) || g.order() >= (1u << 21)) {
    throw std::invalid_argument("oracle: labels or order exceed 2^21");
  }
}

// Backtracking matcher from g onto h. The callback receives the mapping
// g-vertex -> h-vertex (0-based) and returns false to stop the search.
template <typename Visit>
void match_all(const LabeledGraph& g, const LabeledGraph& h, std::uint64_t budget, Visit&& visit) {
  const std::size_t n = g.order();
  if (h.order() != n) return;
  check_packed_labels(g);
  check_packed_labels(h);
  const auto [cg, ch] = joint_vertex_colors(g, h);
  {
    std::vector<std::uint32_t> a = cg, b = ch;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a != b) return;
  }

  std::map<std::uint32_t, std::size_t> class_size;
  for (std::uint32_t c : cg) ++class_size[c];

  // Static order: smallest color class first, then greedily the vertex with
  // the most non-blank connections to those already placed.
  std::vector<std::size_t> order;
  std::vector<bool> placed(n, false);
  std::vector<std::size_t> links(n, 0);
  for (std::size_t step = 0; step < n; ++step) {
    std::size_t best = n;
    for (std::size_t v = 0; v < n; ++v) {
      if (placed[v]) continue;
      if (best == n || links[v] > links[best] ||
          (links[v] == links[best] && class_size[cg[v]] < class_size[cg[best]])) {
        best = v;
      }
    }
    placed[best] = true;
    order.push_back(best);
    for (std::size_t w = 0; w < n; ++w) {
      if (g.raw(best, w) != kBlank || g.raw(w, best) != kBlank) ++links[w];
    }
  }

  std::vector<std::size_t> image(n, n);
  std::vector<bool> used(n, false);
  std::uint64_t nodes = 0;
  bool stop = false;

  auto consistent = [&](std::size_t depth, std::size_t v, std::size_t t) {
    if (g.raw(v, v) != h.raw(t, t)) return false;
    for (std::size_t d = 0; d < depth; ++d) {
      const std::size_t a = order[d];
      if (g.raw(v, a) != h.raw(t, image[a]) || g.raw(a, v) != h.raw(image[a], t)) return false;
    }
    return true;
  };

  auto recurse = [&](auto&& self, std::size_t depth) -> void {
    if (++nodes > budget) throw BudgetExceeded(budget);
    if (depth == n) {
      if (!visit(image)) stop = true;
      return;
    }
    const std::size_t v = order[depth];
    for (std::size_t t = 0; t < n && !stop; ++t) {
      if (used[t] || cg[v] != ch[t] || !consistent(depth, v, t)) continue;
      image[v] = t;
      used[t] = true;
      self(self, depth + 1);
      used[t] = false;
      image[v] = n;
    }
  };
  recurse(recurse, 0);
}

}  // namespace detail

// Returns p with apply_permutation(h, p) == g, or nothing.
inline std::optional<Permutation> find_isomorphism(const LabeledGraph& g, const LabeledGraph& h,
                                                   const OracleOptions& options = {}) {
  if (g.order() != h.order()) return std::nullopt;
  std::optional<Permutation> found;
  detail::match_all(g, h, options.budget, [&](const std::vector<std::size_t>& image) {
    std::vector<Vertex> back(image.size());
    for (std::size_t v = 0; v < image.size(); ++v) back[image[v]] = v + 1;
    found = Permutation::from_images(back);
    return false;
  });
  if (found && apply_permutation(h, *found) != g) throw ContractViolation("find_isomorphism: witness fails");
  return found;
}

inline std::optional<Permutation> find_isomorphism(const SimpleGraph& g, const SimpleGraph& h,
                                                   const OracleOptions& options = {}) {
  return find_isomorphism(g.labeled(), h.labeled(), options);
}

// All automorphisms, sorted.
inline std::vector<Permutation> automorphism_group(const LabeledGraph& g, const OracleOptions& options = {}) {
  std::vector<Permutation> group;
  detail::match_all(g, g, options.budget, [&](const std::vector<std::size_t>& image) {
    std::vector<Vertex> images(image.size());
    for (std::size_t v = 0; v < image.size(); ++v) images[v] = image[v] + 1;
    group.push_back(Permutation::from_images(images));
    return true;
  });
  std::sort(group.begin(), group.end());
  return group;
}

inline Partition orbits_of(std::size_t n, const std::vector<Permutation>& group) {
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  for (const auto& p : group) {
    for (std::size_t v = 0; v < n; ++v) {
      const std::size_t a = find(v), b = find(p.raw(v));
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
  }
  std::vector<std::size_t> roots(n);
  for (std::size_t v = 0; v < n; ++v) roots[v] = find(v);
  return Partition::from_labels(std::span<const std::size_t>(roots));
}

inline Partition orbit_partition(const LabeledGraph& g, const OracleOptions& options = {}) {
  return orbits_of(g.order(), automorphism_group(g, options));
}

// For basic order > 3 the group of a binding graph is the lifted group of
// its basic graph; smaller cases are enumerated directly.
inline std::vector<Permutation> automorphism_group(const BindingGraph& b, const OracleOptions& options = {}) {
  if (b.basic_count() <= 3) return automorphism_group(b.labeled(), options);
  std::vector<Permutation> group;
  for (const auto& s : automorphism_group(b.basic().labeled(), options)) group.push_back(extend_automorphism(b, s));
  std::sort(group.begin(), group.end());
  return group;
}

inline Partition orbit_partition(const BindingGraph& b, const OracleOptions& options = {}) {
  return orbits_of(b.order(), automorphism_group(b, options));
}

}  // namespace wlbind

#endif  // WLBIND_ORACLE_HPP_
