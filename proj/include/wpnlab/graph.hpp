#pragma once

#include <algorithm>
#include <array>
#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"

namespace wpnlab {

inline constexpr int kMaxVertices = 64;

/// A set of vertex indices stored in a single 64-bit word.
class VertexSet {
 public:
  constexpr VertexSet() = default;
  constexpr explicit VertexSet(std::uint64_t bits) : bits_(bits) {}

  /// {0, ..., n-1}
  static constexpr VertexSet range(int n) {
    return VertexSet(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
  }
  static constexpr VertexSet single(int v) { return VertexSet(std::uint64_t{1} << v); }
  static constexpr VertexSet of(std::initializer_list<int> vs) {
    VertexSet s;
    for (int v : vs) s.insert(v);
    return s;
  }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr bool contains(int v) const { return (bits_ >> v) & 1U; }
  constexpr int first() const { return std::countr_zero(bits_); }
  constexpr int last() const { return 63 - std::countl_zero(bits_); }
  constexpr bool subset_of(VertexSet o) const { return (bits_ & ~o.bits_) == 0; }

  constexpr void insert(int v) { bits_ |= std::uint64_t{1} << v; }
  constexpr void erase(int v) { bits_ &= ~(std::uint64_t{1} << v); }

  constexpr VertexSet operator|(VertexSet o) const { return VertexSet(bits_ | o.bits_); }
  constexpr VertexSet operator&(VertexSet o) const { return VertexSet(bits_ & o.bits_); }
  constexpr VertexSet operator-(VertexSet o) const { return VertexSet(bits_ & ~o.bits_); }
  constexpr VertexSet& operator|=(VertexSet o) { bits_ |= o.bits_; return *this; }
  constexpr VertexSet& operator&=(VertexSet o) { bits_ &= o.bits_; return *this; }
  constexpr VertexSet& operator-=(VertexSet o) { bits_ &= ~o.bits_; return *this; }
  constexpr auto operator<=>(const VertexSet&) const = default;

  class iterator {
   public:
    using value_type = int;
    using difference_type = std::ptrdiff_t;
    constexpr iterator() = default;
    constexpr explicit iterator(std::uint64_t rest) : rest_(rest) {}
    constexpr int operator*() const { return std::countr_zero(rest_); }
    constexpr iterator& operator++() { rest_ &= rest_ - 1; return *this; }
    constexpr iterator operator++(int) { iterator t = *this; ++*this; return t; }
    constexpr bool operator==(const iterator&) const = default;

   private:
    std::uint64_t rest_ = 0;
  };
  constexpr iterator begin() const { return iterator(bits_); }
  constexpr iterator end() const { return iterator(0); }

 private:
  std::uint64_t bits_ = 0;
};

/// Simple labeled graph on at most 64 vertices; row i of the adjacency holds
/// the neighbourhood of vertex i.  Rows at positions >= n stay zero, so the
/// defaulted comparisons are meaningful.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n) : n_(n) {
    if (n < 0 || n > kMaxVertices) {
      throw Error(ErrorCode::TooLarge, "graph order " + std::to_string(n) + " outside [0, 64]");
    }
  }

  static Graph from_edges(int n, std::initializer_list<std::pair<int, int>> edges) {
    Graph g(n);
    for (auto [u, v] : edges) g.add_edge(u, v);
    return g;
  }
  static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
    Graph g(n);
    for (auto [u, v] : edges) g.add_edge(u, v);
    return g;
  }

  int order() const { return n_; }
  VertexSet vertices() const { return VertexSet::range(n_); }
  VertexSet neighbors(int v) const { return VertexSet(adj_[v]); }
  std::uint64_t row(int v) const { return adj_[v]; }
  bool adjacent(int u, int v) const { return (adj_[u] >> v) & 1U; }
  int degree(int v) const { return std::popcount(adj_[v]); }

  std::size_t edge_count() const {
    std::size_t twice = 0;
    for (int v = 0; v < n_; ++v) twice += static_cast<std::size_t>(std::popcount(adj_[v]));
    return twice / 2;
  }

  void add_edge(int u, int v) {
    check_pair(u, v);
    adj_[u] |= std::uint64_t{1} << v;
    adj_[v] |= std::uint64_t{1} << u;
  }
  void remove_edge(int u, int v) {
    check_pair(u, v);
    adj_[u] &= ~(std::uint64_t{1} << v);
    adj_[v] &= ~(std::uint64_t{1} << u);
  }
  /// Unchecked toggle used by enumerators in their inner loops.
  void toggle_edge(int u, int v) {
    adj_[u] ^= std::uint64_t{1} << v;
    adj_[v] ^= std::uint64_t{1} << u;
  }

  /// Checks symmetry, absence of loops and zero padding beyond n.
  bool valid() const {
    const std::uint64_t inside = VertexSet::range(n_).bits();
    for (int v = 0; v < kMaxVertices; ++v) {
      if (v >= n_) {
        if (adj_[v] != 0) return false;
        continue;
      }
      if ((adj_[v] & ~inside) != 0 || ((adj_[v] >> v) & 1U)) return false;
      for (int u : VertexSet(adj_[v]))
        if (!adjacent(u, v)) return false;
    }
    return true;
  }

  auto operator<=>(const Graph&) const = default;
  bool operator==(const Graph&) const = default;

 private:
  void check_pair(int u, int v) const {
    if (u < 0 || v < 0 || u >= n_ || v >= n_ || u == v) {
      throw Error(ErrorCode::InvalidArgument,
                  "bad edge " + std::to_string(u) + "-" + std::to_string(v) + " for order " +
                      std::to_string(n_));
    }
  }

  int n_ = 0;
  std::array<std::uint64_t, kMaxVertices> adj_{};
};

// ---------------------------------------------------------------------------
// Constructors

inline Graph empty(int k) { return Graph(k); }

inline Graph clique(int k) {
  Graph g(k);
  for (int u = 0; u < k; ++u)
    for (int v = u + 1; v < k; ++v) g.add_edge(u, v);
  return g;
}

inline Graph path(int k) {
  Graph g(k);
  for (int v = 0; v + 1 < k; ++v) g.add_edge(v, v + 1);
  return g;
}

inline Graph cycle(int k) {
  if (k < 3) throw Error(ErrorCode::InvalidArgument, "cycle needs at least 3 vertices");
  Graph g = path(k);
  g.add_edge(k - 1, 0);
  return g;
}

/// K_{1,m}: centre 0, leaves 1..m.
inline Graph star(int m) {
  Graph g(m + 1);
  for (int v = 1; v <= m; ++v) g.add_edge(0, v);
  return g;
}

inline Graph disjoint_union(const Graph& a, const Graph& b) {
  Graph g(a.order() + b.order());
  for (int u = 0; u < a.order(); ++u)
    for (int v : a.neighbors(u))
      if (u < v) g.add_edge(u, v);
  const int off = a.order();
  for (int u = 0; u < b.order(); ++u)
    for (int v : b.neighbors(u))
      if (u < v) g.add_edge(off + u, off + v);
  return g;
}

inline Graph complement(const Graph& g) {
  Graph c(g.order());
  for (int u = 0; u < g.order(); ++u)
    for (int v = u + 1; v < g.order(); ++v)
      if (!g.adjacent(u, v)) c.add_edge(u, v);
  return c;
}

inline Graph join(const Graph& a, const Graph& b) {
  return complement(disjoint_union(complement(a), complement(b)));
}

/// Packs the bits of `x` selected by `mask` into the low end, preserving order.
inline std::uint64_t compress_bits(std::uint64_t x, std::uint64_t mask) {
  std::uint64_t out = 0;
  int pos = 0;
  for (; mask != 0; mask &= mask - 1, ++pos) {
    if (x & (mask & -mask)) out |= std::uint64_t{1} << pos;
  }
  return out;
}

/// Subgraph induced by `s`, relabelled in increasing original order.
inline Graph induced(const Graph& g, VertexSet s) {
  if (!s.subset_of(g.vertices())) {
    throw Error(ErrorCode::InvalidArgument, "vertex set outside graph range");
  }
  Graph h(s.size());
  int i = 0;
  for (int v : s) {
    const std::uint64_t row = compress_bits(g.row(v), s.bits());
    for (int j : VertexSet(row))
      if (j > i) h.add_edge(i, j);
    ++i;
  }
  return h;
}

/// The graph obtained by renaming vertex v to perm[v].
inline Graph relabel(const Graph& g, const std::vector<int>& perm) {
  Graph h(g.order());
  for (int u = 0; u < g.order(); ++u)
    for (int v : g.neighbors(u))
      if (u < v) h.add_edge(perm[u], perm[v]);
  return h;
}

/// Connected components of g[within], ordered by smallest vertex.
inline std::vector<VertexSet> components(const Graph& g, VertexSet within) {
  std::vector<VertexSet> out;
  VertexSet left = within;
  while (!left.empty()) {
    VertexSet comp = VertexSet::single(left.first());
    VertexSet frontier = comp;
    while (!frontier.empty()) {
      VertexSet next;
      for (int v : frontier) next |= g.neighbors(v);
      next = (next & within) - comp;
      comp |= next;
      frontier = next;
    }
    out.push_back(comp);
    left -= comp;
  }
  return out;
}

inline std::vector<VertexSet> components(const Graph& g) { return components(g, g.vertices()); }

/// Components of the complement of g[within], computed without materialising it.
inline std::vector<VertexSet> co_components(const Graph& g, VertexSet within) {
  std::vector<VertexSet> out;
  VertexSet left = within;
  while (!left.empty()) {
    VertexSet comp = VertexSet::single(left.first());
    VertexSet frontier = comp;
    while (!frontier.empty()) {
      VertexSet next;
      for (int v : frontier) next |= (within - g.neighbors(v) - VertexSet::single(v));
      next -= comp;
      comp |= next;
      frontier = next;
    }
    out.push_back(comp);
    left -= comp;
  }
  return out;
}

inline bool is_connected(const Graph& g, VertexSet within) {
  return within.empty() || components(g, within).size() == 1;
}

// ---------------------------------------------------------------------------
// Induced subgraph search

namespace detail {

/// Backtracking injective map from pattern vertices (taken in decreasing
/// degree, ties by index) into host vertices inside `within`.
class InducedMatcher {
 public:
  InducedMatcher(const Graph& host, VertexSet within, const Graph& pattern)
      : host_(host), within_(within), pattern_(pattern) {
    const int k = pattern.order();
    order_.resize(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) order_[static_cast<std::size_t>(i)] = i;
    std::stable_sort(order_.begin(), order_.end(),
                     [&](int a, int b) { return pattern.degree(a) > pattern.degree(b); });
    pos_adj_.assign(static_cast<std::size_t>(k), 0);
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < i; ++j)
        if (pattern.adjacent(order_[static_cast<std::size_t>(i)], order_[static_cast<std::size_t>(j)]))
          pos_adj_[static_cast<std::size_t>(i)] |= std::uint64_t{1} << j;
    image_.assign(static_cast<std::size_t>(k), -1);
    for (int v : within) {
      host_deg_[v] = (host.neighbors(v) & within).size();
    }
  }

  bool run() {
    const int k = pattern_.order();
    if (k == 0) return true;
    if (k > within_.size()) return false;
    if (pattern_.edge_count() > edges_within()) return false;
    return extend(0, VertexSet());
  }

 private:
  std::size_t edges_within() const {
    std::size_t twice = 0;
    for (int v : within_) twice += static_cast<std::size_t>(host_deg_[v]);
    return twice / 2;
  }

  bool extend(int depth, VertexSet used) {
    const int k = pattern_.order();
    if (depth == k) return true;
    const int p = order_[static_cast<std::size_t>(depth)];
    const int need_adj = pattern_.degree(p);
    const int need_non = k - 1 - need_adj;
    VertexSet cand = within_ - used;
    const std::uint64_t adj_mask = pos_adj_[static_cast<std::size_t>(depth)];
    for (int j = 0; j < depth; ++j) {
      const int img = image_[static_cast<std::size_t>(j)];
      if ((adj_mask >> j) & 1U) {
        cand &= host_.neighbors(img);
      } else {
        cand -= host_.neighbors(img);
      }
    }
    const int avail = within_.size() - 1;
    for (int v : cand) {
      if (host_deg_[v] < need_adj || avail - host_deg_[v] < need_non) continue;
      image_[static_cast<std::size_t>(depth)] = v;
      if (extend(depth + 1, used | VertexSet::single(v))) return true;
    }
    return false;
  }

  const Graph& host_;
  VertexSet within_;
  const Graph& pattern_;
  std::vector<int> order_;
  std::vector<std::uint64_t> pos_adj_;
  std::vector<int> image_;
  std::array<int, kMaxVertices> host_deg_{};
};

}  // namespace detail

/// True iff some subset of `within` induces a copy of `h` in g.
inline bool contains_induced(const Graph& g, VertexSet within, const Graph& h) {
  return detail::InducedMatcher(g, within, h).run();
}

inline bool contains_induced(const Graph& g, const Graph& h) {
  return contains_induced(g, g.vertices(), h);
}

inline std::vector<int> degree_sequence(const Graph& g) {
  std::vector<int> d(static_cast<std::size_t>(g.order()));
  for (int v = 0; v < g.order(); ++v) d[static_cast<std::size_t>(v)] = g.degree(v);
  std::sort(d.begin(), d.end());
  return d;
}

inline bool is_isomorphic(const Graph& g, const Graph& h) {
  if (g.order() != h.order() || g.edge_count() != h.edge_count()) return false;
  if (degree_sequence(g) != degree_sequence(h)) return false;
  return contains_induced(g, h);
}

}  // namespace wpnlab
