#pragma once

// Exhaustive checks that a long even cycle splits into prescribed induced
// pieces: two 3-vertex pieces plus edges and non-edges, a P4 plus edges and
// non-edges, or a sparse 4-vertex piece plus edges and non-edges.

#include <optional>
#include <string>
#include <vector>

#include "canonical.hpp"
#include "families.hpp"
#include "graph6.hpp"
#include "witnessing.hpp"

namespace wpnlab {

/// One part of a prescribed partition: its induced subgraph must be
/// isomorphic to one of `shapes` (canonical forms).
struct PieceSpec {
  std::string label;
  std::vector<Graph> shapes;
};

struct ClaimCheck {
  std::string claim;  // "a", "b", "c" or "control"
  std::vector<std::pair<std::string, std::string>> parameters;
  bool expected = true;
  bool found = false;
  std::optional<Partition> witness;

  bool passed() const { return found == expected; }
};

struct ClaimReport {
  int l = 0;
  std::vector<ClaimCheck> checks;
  bool all_passed() const {
    for (const auto& c : checks)
      if (!c.passed()) return false;
    return true;
  }
};

/// Partition of V(g) into pieces matching `pieces` (as a multiset), or nullopt.
inline std::optional<Partition> find_piece_partition(const Graph& g, const std::vector<PieceSpec>& pieces) {
  const int n = g.order();
  const int k = static_cast<int>(pieces.size());
  int lo = 0, hi = 0;
  std::vector<int> min_size, max_size;
  std::vector<std::vector<Graph>> shapes;
  for (const auto& p : pieces) {
    int a = kMaxVertices, b = 0;
    std::vector<Graph> canon;
    for (const Graph& s : p.shapes) {
      a = std::min(a, s.order());
      b = std::max(b, s.order());
      canon.push_back(canonical_form(s));
    }
    min_size.push_back(a);
    max_size.push_back(b);
    lo += a;
    hi += b;
    shapes.push_back(std::move(canon));
  }
  if (n < lo || n > hi) return std::nullopt;

  auto fits = [&](int j, VertexSet s) {
    const Graph c = canonical_form(induced(g, s));
    for (const Graph& t : shapes[static_cast<std::size_t>(j)])
      if (t == c) return true;
    return false;
  };
  // A growing part must stay an induced subgraph of some allowed shape.
  auto viable = [&](int j, VertexSet s) {
    const Graph sub = induced(g, s);
    for (const Graph& t : shapes[static_cast<std::size_t>(j)])
      if (t.order() >= s.size() && contains_induced(t, sub)) return true;
    return false;
  };

  std::vector<int> owner(static_cast<std::size_t>(n), -1);
  std::vector<bool> used(static_cast<std::size_t>(k), false);

  // Parts are opened in order of their least vertex; identical labels are
  // tried once per step.
  auto open_next = [&](auto&& self, VertexSet free) -> bool {
    if (free.empty()) {
      for (int j = 0; j < k; ++j)
        if (!used[static_cast<std::size_t>(j)]) return false;
      return true;
    }
    const int v = free.first();
    std::vector<std::string> tried;
    for (int j = 0; j < k; ++j) {
      if (used[static_cast<std::size_t>(j)]) continue;
      const auto& lbl = pieces[static_cast<std::size_t>(j)].label;
      if (std::find(tried.begin(), tried.end(), lbl) != tried.end()) continue;
      tried.push_back(lbl);
      used[static_cast<std::size_t>(j)] = true;
      // Grow the part from v through larger free vertices.
      auto grow = [&](auto&& grow_self, VertexSet part, VertexSet candidates) -> bool {
        if (part.size() >= min_size[static_cast<std::size_t>(j)] && fits(j, part)) {
          for (int u : part) owner[static_cast<std::size_t>(u)] = j;
          if (self(self, free - part)) return true;
          for (int u : part) owner[static_cast<std::size_t>(u)] = -1;
        }
        if (part.size() >= max_size[static_cast<std::size_t>(j)]) return false;
        for (int u : candidates) {
          const VertexSet bigger = part | VertexSet::single(u);
          candidates.erase(u);
          if (viable(j, bigger) && grow_self(grow_self, bigger, candidates)) return true;
        }
        return false;
      };
      if (viable(j, VertexSet::single(v)) &&
          grow(grow, VertexSet::single(v), free - VertexSet::range(v + 1)))
        return true;
      used[static_cast<std::size_t>(j)] = false;
    }
    return false;
  };
  if (!open_next(open_next, g.vertices())) return std::nullopt;
  Partition p;
  p.arity = k;
  p.part_of = owner;
  return p;
}

namespace detail {

inline PieceSpec piece(const std::string& label, const Graph& g) { return {label, {g}}; }

inline std::vector<PieceSpec> edges_and_non_edges(int a, int b) {
  std::vector<PieceSpec> out;
  for (int i = 0; i < a; ++i) out.push_back(piece("K2", clique(2)));
  for (int i = 0; i < b; ++i) out.push_back(piece("E2", empty(2)));
  return out;
}

}  // namespace detail

/// Runs every (item, parameter) combination on C_{2l}, plus a negative
/// control that must not be found.  l >= 3.
inline ClaimReport verify_cycle_partition_claims(int l) {
  if (l < 3 || 2 * l > kMaxVertices) throw Error(ErrorCode::InvalidArgument, "l must lie in [3, 32]");
  const Graph c = cycle(2 * l);
  ClaimReport report;
  report.l = l;

  const std::vector<std::pair<std::string, Graph>> triples = {
      {"P3", path(3)}, {"co-P3", disjoint_union(clique(2), empty(1))}, {"E3", empty(3)}};
  const std::vector<std::pair<std::string, Graph>> sparse_quads = {
      {"E4", empty(4)},
      {"K2+E2", disjoint_union(clique(2), empty(2))},
      {"2K2", disjoint_union(clique(2), clique(2))},
      {"P3+K1", disjoint_union(path(3), empty(1))}};

  auto run = [&](ClaimCheck check, std::vector<PieceSpec> pieces) {
    check.witness = find_piece_partition(c, pieces);
    check.found = check.witness.has_value();
    report.checks.push_back(std::move(check));
  };
  auto ab = [](int a, int b) {
    return std::vector<std::pair<std::string, std::string>>{{"a", std::to_string(a)}, {"b", std::to_string(b)}};
  };

  // (a) L, M in {P3, co-P3, E3}, a + b = l - 3
  for (std::size_t x = 0; x < triples.size(); ++x)
    for (std::size_t y = x; y < triples.size(); ++y)
      for (int a = 0; a <= l - 3; ++a) {
        ClaimCheck ch;
        ch.claim = "a";
        ch.parameters = {{"L", triples[x].first}, {"M", triples[y].first}};
        for (auto& p : ab(a, l - 3 - a)) ch.parameters.push_back(p);
        auto pieces = detail::edges_and_non_edges(a, l - 3 - a);
        pieces.push_back(detail::piece(triples[x].first, triples[x].second));
        pieces.push_back(detail::piece(triples[y].first, triples[y].second));
        run(ch, pieces);
      }
  // (b) P4, a + b = l - 2
  for (int a = 0; a <= l - 2; ++a) {
    ClaimCheck ch;
    ch.claim = "b";
    ch.parameters = ab(a, l - 2 - a);
    auto pieces = detail::edges_and_non_edges(a, l - 2 - a);
    pieces.push_back(detail::piece("P4", path(4)));
    run(ch, pieces);
  }
  // (c) 4-vertex graph with at most two edges, a + b = l - 2
  for (const auto& [name, h] : sparse_quads)
    for (int a = 0; a <= l - 2; ++a) {
      ClaimCheck ch;
      ch.claim = "c";
      ch.parameters = {{"H", name}};
      for (auto& p : ab(a, l - 2 - a)) ch.parameters.push_back(p);
      auto pieces = detail::edges_and_non_edges(a, l - 2 - a);
      pieces.push_back(detail::piece(name, h));
      run(ch, pieces);
    }
  // control: l - 1 cliques on at least two vertices cannot cover 2l vertices
  {
    ClaimCheck ch;
    ch.claim = "control";
    ch.expected = false;
    ch.parameters = {{"cliques", std::to_string(l - 1)}};
    PieceSpec big{"clique", {}};
    for (int s = 2; s <= 2 * l; ++s) big.shapes.push_back(clique(s));
    run(ch, std::vector<PieceSpec>(static_cast<std::size_t>(l - 1), big));
  }
  return report;
}

}  // namespace wpnlab
