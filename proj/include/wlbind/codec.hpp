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

// Text codecs for simple graphs: graph6 (standard nauty encoding) and a
// plain adjacency list ("n" on the first line, then one "u v" per edge).

#ifndef WLBIND_CODEC_HPP_
#define WLBIND_CODEC_HPP_

#include <charconv>
#include <cstdint>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "wlbind/graph.hpp"

namespace wlbind {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : std::runtime_error(what + " (at byte " + std::to_string(offset) + ")"), reason_(what), offset_(offset) {}
  std::size_t offset() const { return offset_; }
  const std::string& reason() const { return reason_; }

 private:
  std::string reason_;
  std::size_t offset_;
};

namespace detail {

inline std::string_view trim_line_end(std::string_view s) {
  while (!s.empty() && (s.back() == '\n' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

}  // namespace detail

inline SimpleGraph parse_graph6(std::string_view text) {
  constexpr std::string_view kHeader = ">>graph6<<";
  std::size_t pos = 0;
  if (text.starts_with(kHeader)) pos = kHeader.size();
  text = detail::trim_line_end(text);

  auto sextet = [&](std::size_t at) -> std::uint64_t {
    if (at >= text.size()) throw ParseError("graph6: truncated record", at);
    const unsigned char ch = static_cast<unsigned char>(text[at]);
    if (ch < 63 || ch > 126) throw ParseError("graph6: byte out of range [63,126]", at);
    return ch - 63u;
  };

  std::uint64_t n = 0;
  if (pos >= text.size()) throw ParseError("graph6: empty record", pos);
  if (text[pos] != 126) {
    n = sextet(pos);
    pos += 1;
  } else if (pos + 1 < text.size() && text[pos + 1] == 126) {
    for (std::size_t k = 0; k < 6; ++k) n = (n << 6) | sextet(pos + 2 + k);
    pos += 8;
  } else {
    for (std::size_t k = 0; k < 3; ++k) n = (n << 6) | sextet(pos + 1 + k);
    pos += 4;
  }
  if (n < 1) throw ParseError("graph6: order must be >= 1", 0);
  if (n > (1u << 16)) throw ParseError("graph6: order " + std::to_string(n) + " too large", 0);

  const std::uint64_t bits = n * (n - 1) / 2;
  const std::uint64_t bytes = (bits + 5) / 6;
  if (text.size() - pos < bytes) throw ParseError("graph6: truncated adjacency bits", text.size());
  if (text.size() - pos > bytes) throw ParseError("graph6: trailing bytes after adjacency", pos + bytes);

  SimpleGraph g(static_cast<std::size_t>(n));
  std::uint64_t bit = 0;
  for (std::uint64_t b = 0; b < bytes; ++b) {
    const std::uint64_t six = sextet(pos + b);
    for (int k = 5; k >= 0; --k, ++bit) {
      const bool on = (six >> k) & 1u;
      if (bit >= bits) {
        if (on) throw ParseError("graph6: non-zero padding bit", pos + b);
        continue;
      }
      if (!on) continue;
      // Column-major upper triangle: (0,1),(0,2),(1,2),(0,3),...
      std::uint64_t j = 1;
      while (j * (j + 1) / 2 <= bit) ++j;
      const std::uint64_t i = bit - j * (j - 1) / 2;
      g.add_edge(i + 1, j + 1);
    }
  }
  return g;
}

inline std::string encode_graph6(const SimpleGraph& g) {
  const std::uint64_t n = g.order();
  std::string out;
  if (n <= 62) {
    out += static_cast<char>(n + 63);
  } else if (n <= 258047) {
    out += static_cast<char>(126);
    for (int k = 2; k >= 0; --k) out += static_cast<char>(((n >> (6 * k)) & 63u) + 63);
  } else {
    out += "~~";
    for (int k = 5; k >= 0; --k) out += static_cast<char>(((n >> (6 * k)) & 63u) + 63);
  }
  unsigned acc = 0;
  int filled = 0;
  for (std::size_t j = 1; j < n; ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.raw_edge(i, j) ? 1u : 0u);
      if (++filled == 6) {
        out += static_cast<char>(acc + 63);
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out += static_cast<char>((acc << (6 - filled)) + 63);
  return out;
}

// Blank lines and lines starting with '#' are ignored.
inline SimpleGraph parse_adjlist(std::string_view text) {
  std::size_t pos = 0;
  bool have_order = false;
  SimpleGraph g;
  while (pos < text.size()) {
    const std::size_t line_start = pos;
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = detail::trim_line_end(text.substr(pos, end - pos));
    pos = end + 1;

    std::vector<std::uint64_t> nums;
    std::size_t k = 0;
    while (k < line.size() && (line[k] == ' ' || line[k] == '\t')) ++k;
    if (k == line.size() || line[k] == '#') continue;
    while (k < line.size()) {
      if (line[k] == ' ' || line[k] == '\t') {
        ++k;
        continue;
      }
      std::uint64_t v = 0;
      auto [ptr, ec] = std::from_chars(line.data() + k, line.data() + line.size(), v);
      if (ec != std::errc() || ptr == line.data() + k) {
        throw ParseError("adjlist: expected a non-negative integer", line_start + k);
      }
      nums.push_back(v);
      k = static_cast<std::size_t>(ptr - line.data());
    }

    if (!have_order) {
      if (nums.size() != 1) throw ParseError("adjlist: first line must hold the vertex count", line_start);
      if (nums[0] < 1) throw ParseError("adjlist: vertex count must be >= 1", line_start);
      g = SimpleGraph(static_cast<std::size_t>(nums[0]));
      have_order = true;
      continue;
    }
    if (nums.size() != 2) throw ParseError("adjlist: edge line must hold two vertices", line_start);
    const auto [u, v] = std::pair{nums[0], nums[1]};
    if (u < 1 || u > g.order() || v < 1 || v > g.order()) {
      throw ParseError("adjlist: vertex out of range [1," + std::to_string(g.order()) + "]", line_start);
    }
    if (u == v) throw ParseError("adjlist: self-loop at vertex " + std::to_string(u), line_start);
    if (g.has_edge(u, v)) {
      throw ParseError("adjlist: duplicate edge " + std::to_string(u) + " " + std::to_string(v), line_start);
    }
    g.add_edge(u, v);
  }
  if (!have_order) throw ParseError("adjlist: missing vertex count", 0);
  return g;
}

inline std::string emit_adjlist(const SimpleGraph& g) {
  std::string out = std::to_string(g.order()) + "\n";
  for (auto [u, v] : g.edges()) out += std::to_string(u) + " " + std::to_string(v) + "\n";
  return out;
}

enum class GraphFormat { kAuto, kGraph6, kAdjList };

// A lone integer on the first meaningful line marks an adjacency list;
// anything else is read as a graph6 record.
inline GraphFormat detect_format(std::string_view text) {
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = detail::trim_line_end(text.substr(pos, end - pos));
    pos = end + 1;
    while (!line.empty() && (line.front() == ' ' || line.front() == '\t')) line.remove_prefix(1);
    while (!line.empty() && (line.back() == ' ' || line.back() == '\t')) line.remove_suffix(1);
    if (line.empty() || line.front() == '#') continue;
    for (char c : line) {
      if (c < '0' || c > '9') return GraphFormat::kGraph6;
    }
    return GraphFormat::kAdjList;
  }
  return GraphFormat::kGraph6;
}

inline SimpleGraph parse_graph(std::string_view text, GraphFormat format = GraphFormat::kAuto) {
  if (format == GraphFormat::kAuto) format = detect_format(text);
  if (format == GraphFormat::kAdjList) return parse_adjlist(text);
  // graph6 files hold one record per line; take the first.
  std::size_t end = text.find('\n');
  return parse_graph6(text.substr(0, end == std::string_view::npos ? text.size() : end + 1));
}

inline SimpleGraph read_graph_file(const std::string& path, GraphFormat format = GraphFormat::kAuto) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open graph file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return parse_graph(buf.str(), format);
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.reason(), e.offset());
  }
}

}  // namespace wlbind

#endif  // WLBIND_CODEC_HPP_
