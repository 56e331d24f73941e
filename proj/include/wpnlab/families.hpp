#pragma once

// Hereditary families: structural recognisers for the named classes, generic
// forbidden-induced-subgraph families, finite bases and the containment test.
//
// Every recogniser works on the subgraph induced by a vertex mask so that the
// witnessing search can test parts of a partition without relabelling.

#include <algorithm>
#include <array>
#include <cmath>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "canonical.hpp"
#include "graph.hpp"
#include "graph6.hpp"

namespace wpnlab {

enum class FamilyName {
  Clique,
  CliqueOrE2,
  Stable,
  CoGirth5,
  StarsAndTrianglesCo,
  StarsAndCliquesCo,
  SplitJoinComponentsCo,
  Cograph,
  CompleteMultipartite,
  DisjointCliques,
  CoMatching,
  CliqueUnionStable,
  Split,
  Bipartite,
  CoBipartite,
};

inline constexpr std::array kAllFamilyNames = {
    FamilyName::Clique,        FamilyName::CliqueOrE2,          FamilyName::Stable,
    FamilyName::CoGirth5,      FamilyName::StarsAndTrianglesCo, FamilyName::StarsAndCliquesCo,
    FamilyName::SplitJoinComponentsCo, FamilyName::Cograph,     FamilyName::CompleteMultipartite,
    FamilyName::DisjointCliques, FamilyName::CoMatching,        FamilyName::CliqueUnionStable,
    FamilyName::Split,         FamilyName::Bipartite,           FamilyName::CoBipartite,
};

inline std::string_view kebab_name(FamilyName f) {
  switch (f) {
    case FamilyName::Clique: return "clique";
    case FamilyName::CliqueOrE2: return "clique-or-e2";
    case FamilyName::Stable: return "stable";
    case FamilyName::CoGirth5: return "co-girth-5";
    case FamilyName::StarsAndTrianglesCo: return "stars-triangles-co";
    case FamilyName::StarsAndCliquesCo: return "stars-cliques-co";
    case FamilyName::SplitJoinComponentsCo: return "split-join-components-co";
    case FamilyName::Cograph: return "cograph";
    case FamilyName::CompleteMultipartite: return "complete-multipartite";
    case FamilyName::DisjointCliques: return "disjoint-cliques";
    case FamilyName::CoMatching: return "co-matching";
    case FamilyName::CliqueUnionStable: return "clique-union-stable";
    case FamilyName::Split: return "split";
    case FamilyName::Bipartite: return "bipartite";
    case FamilyName::CoBipartite: return "co-bipartite";
  }
  return "?";
}

inline std::optional<FamilyName> family_from_kebab(std::string_view s) {
  for (FamilyName f : kAllFamilyNames)
    if (kebab_name(f) == s) return f;
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Recognisers on g[s]

namespace recognize {

inline int co_degree(const Graph& g, VertexSet s, int v) {
  return (s - g.neighbors(v) - VertexSet::single(v)).size();
}

inline bool clique(const Graph& g, VertexSet s) {
  for (int v : s)
    if (!(s - VertexSet::single(v)).subset_of(g.neighbors(v))) return false;
  return true;
}

inline bool stable(const Graph& g, VertexSet s) {
  for (int v : s)
    if (!(g.neighbors(v) & s).empty()) return false;
  return true;
}

/// Complement has no triangle and no 4-cycle: no stable triple, no induced 2K2.
inline bool co_girth5(const Graph& g, VertexSet s) {
  for (int u : s) {
    const VertexSet non_u = s - g.neighbors(u) - VertexSet::single(u);
    for (int v : s) {
      if (v <= u) continue;
      const int common = (non_u - g.neighbors(v) - VertexSet::single(v)).size();
      if (common > 1) return false;
      if (common == 1 && !g.adjacent(u, v)) return false;
    }
  }
  return true;
}

// Shapes of a component c of the complement of g[s].
inline int co_edges(const Graph& g, VertexSet c) {
  int twice = 0;
  for (int v : c) twice += co_degree(g, c, v);
  return twice / 2;
}

inline bool co_star(const Graph& g, VertexSet c) {
  const int k = c.size();
  if (k <= 2) return true;
  if (co_edges(g, c) != k - 1) return false;
  for (int v : c)
    if (co_degree(g, c, v) == k - 1) return true;
  return false;
}

inline bool co_triangle(const Graph& g, VertexSet c) { return c.size() == 3 && stable(g, c); }

inline bool co_clique(const Graph& g, VertexSet c) { return stable(g, c); }

inline bool stars_triangles_co(const Graph& g, VertexSet s) {
  for (VertexSet c : co_components(g, s))
    if (!co_star(g, c) && !co_triangle(g, c)) return false;
  return true;
}

inline bool stars_cliques_co(const Graph& g, VertexSet s) {
  for (VertexSet c : co_components(g, s))
    if (!co_star(g, c) && !co_clique(g, c)) return false;
  return true;
}

inline bool split_join_components_co(const Graph& g, VertexSet s) {
  for (VertexSet c : co_components(g, s)) {
    // Non-universal vertices of the complement component must be pairwise
    // non-adjacent there, i.e. a clique of g.
    VertexSet rest;
    for (int v : c)
      if (co_degree(g, c, v) != c.size() - 1) rest.insert(v);
    if (!clique(g, rest)) return false;
  }
  return true;
}

inline bool cograph(const Graph& g, VertexSet s) {
  if (s.size() <= 1) return true;
  auto comps = components(g, s);
  if (comps.size() == 1) comps = co_components(g, s);
  if (comps.size() == 1) return false;
  for (VertexSet c : comps)
    if (!cograph(g, c)) return false;
  return true;
}

inline bool complete_multipartite(const Graph& g, VertexSet s) {
  for (VertexSet c : co_components(g, s))
    if (!stable(g, c)) return false;
  return true;
}

inline bool disjoint_cliques(const Graph& g, VertexSet s) {
  for (VertexSet c : components(g, s))
    if (!clique(g, c)) return false;
  return true;
}

inline bool co_matching(const Graph& g, VertexSet s) {
  for (int v : s)
    if (co_degree(g, s, v) > 1) return false;
  return true;
}

inline bool clique_union_stable(const Graph& g, VertexSet s) {
  int big = 0;
  for (VertexSet c : components(g, s)) {
    if (!clique(g, c)) return false;
    if (c.size() >= 2 && ++big > 1) return false;
  }
  return true;
}

/// Hammer-Simeone degree-sequence test.
inline bool split(const Graph& g, VertexSet s) {
  std::vector<int> d;
  for (int v : s) d.push_back((g.neighbors(v) & s).size());
  std::sort(d.rbegin(), d.rend());
  int m = 0;
  for (int i = 0; i < static_cast<int>(d.size()); ++i)
    if (d[static_cast<std::size_t>(i)] >= i) m = i + 1;
  long lhs = 0;
  long rhs = static_cast<long>(m) * (m - 1);
  for (int i = 0; i < static_cast<int>(d.size()); ++i) {
    if (i < m) lhs += d[static_cast<std::size_t>(i)];
    else rhs += d[static_cast<std::size_t>(i)];
  }
  return lhs == rhs;
}

inline bool two_colourable(const Graph& g, VertexSet s, bool use_complement) {
  auto nbrs = [&](int v) {
    return use_complement ? s - g.neighbors(v) - VertexSet::single(v) : g.neighbors(v) & s;
  };
  VertexSet left = s;
  while (!left.empty()) {
    VertexSet side[2] = {VertexSet::single(left.first()), VertexSet()};
    VertexSet frontier = side[0];
    int parity = 0;
    while (!frontier.empty()) {
      VertexSet next;
      for (int v : frontier) next |= nbrs(v);
      if (!(next & side[parity]).empty()) return false;
      next -= side[1 - parity];
      side[1 - parity] |= next;
      frontier = next;
      parity = 1 - parity;
    }
    left -= side[0] | side[1];
  }
  return true;
}

inline bool bipartite(const Graph& g, VertexSet s) { return two_colourable(g, s, false); }
inline bool co_bipartite(const Graph& g, VertexSet s) { return two_colourable(g, s, true); }

inline bool named(FamilyName f, const Graph& g, VertexSet s) {
  switch (f) {
    case FamilyName::Clique: return clique(g, s);
    case FamilyName::CliqueOrE2: return clique(g, s) || (s.size() == 2 && stable(g, s));
    case FamilyName::Stable: return stable(g, s);
    case FamilyName::CoGirth5: return co_girth5(g, s);
    case FamilyName::StarsAndTrianglesCo: return stars_triangles_co(g, s);
    case FamilyName::StarsAndCliquesCo: return stars_cliques_co(g, s);
    case FamilyName::SplitJoinComponentsCo: return split_join_components_co(g, s);
    case FamilyName::Cograph: return cograph(g, s);
    case FamilyName::CompleteMultipartite: return complete_multipartite(g, s);
    case FamilyName::DisjointCliques: return disjoint_cliques(g, s);
    case FamilyName::CoMatching: return co_matching(g, s);
    case FamilyName::CliqueUnionStable: return clique_union_stable(g, s);
    case FamilyName::Split: return split(g, s);
    case FamilyName::Bipartite: return bipartite(g, s);
    case FamilyName::CoBipartite: return co_bipartite(g, s);
  }
  return false;
}

}  // namespace recognize

// ---------------------------------------------------------------------------
// FamilySpec

/// Ordering used for stored patterns: by order, then size, then canonical rows.
inline bool pattern_less(const Graph& a, const Graph& b) {
  if (a.order() != b.order()) return a.order() < b.order();
  if (a.edge_count() != b.edge_count()) return a.edge_count() < b.edge_count();
  return a < b;
}

/// Canonical forms of `patterns` with isomorphic duplicates removed, sorted.
inline std::vector<Graph> canonical_pattern_set(const std::vector<Graph>& patterns) {
  std::vector<Graph> out;
  out.reserve(patterns.size());
  for (const Graph& p : patterns) out.push_back(canonical_form(p));
  std::sort(out.begin(), out.end(), pattern_less);
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

class FamilySpec {
 public:
  static FamilySpec named(FamilyName f) { return FamilySpec(f); }
  static FamilySpec forbidden(const std::vector<Graph>& patterns) {
    return FamilySpec(canonical_pattern_set(patterns));
  }

  bool is_named() const { return std::holds_alternative<FamilyName>(kind_); }
  FamilyName name() const { return std::get<FamilyName>(kind_); }
  const std::vector<Graph>& patterns() const { return std::get<std::vector<Graph>>(kind_); }

  /// Kebab-case name, or "forbid:" followed by comma-separated graph6.
  std::string describe() const {
    if (is_named()) return std::string(kebab_name(name()));
    std::string s = "forbid:";
    bool first = true;
    for (const Graph& p : patterns()) {
      if (!first) s += ',';
      s += emit_graph6(p);
      first = false;
    }
    return s;
  }

  static FamilySpec parse(std::string_view text) {
    if (auto f = family_from_kebab(text)) return named(*f);
    if (text.rfind("forbid:", 0) == 0) text.remove_prefix(7);
    std::vector<Graph> pats;
    while (!text.empty()) {
      const auto comma = text.find(',');
      pats.push_back(parse_graph6(text.substr(0, comma)));
      if (comma == std::string_view::npos) break;
      text.remove_prefix(comma + 1);
    }
    if (pats.empty()) throw Error(ErrorCode::InvalidArgument, "empty family description");
    return forbidden(pats);
  }

  bool operator==(const FamilySpec&) const = default;

 private:
  explicit FamilySpec(FamilyName f) : kind_(f) {}
  explicit FamilySpec(std::vector<Graph> p) : kind_(std::move(p)) {}

  std::variant<FamilyName, std::vector<Graph>> kind_;
};

/// Is g[within] in the family?  The empty graph belongs to every family.
inline bool member(const FamilySpec& f, const Graph& g, VertexSet within) {
  if (within.empty()) return true;
  if (f.is_named()) return recognize::named(f.name(), g, within);
  for (const Graph& p : f.patterns())
    if (contains_induced(g, within, p)) return false;
  return true;
}

inline bool member(const FamilySpec& f, const Graph& g) { return member(f, g, g.vertices()); }

// ---------------------------------------------------------------------------
// Finite bases

namespace detail {

inline Graph co_paw() { return disjoint_union(path(3), empty(1)); }  // P3 + K1
inline Graph co_diamond() { return disjoint_union(clique(2), empty(2)); }  // K2 + E2
inline Graph two_k2() { return disjoint_union(clique(2), clique(2)); }
inline Graph co_p3() { return disjoint_union(clique(2), empty(1)); }  // K2 + K1

inline std::optional<std::vector<Graph>> tabulated_basis(FamilyName f) {
  using V = std::vector<Graph>;
  switch (f) {
    case FamilyName::Clique: return V{empty(2)};
    case FamilyName::CliqueOrE2: return V{empty(3), co_p3(), path(3)};
    case FamilyName::Stable: return V{clique(2)};
    case FamilyName::CoGirth5: return V{empty(3), two_k2()};
    case FamilyName::StarsAndTrianglesCo: return V{empty(4), co_diamond(), two_k2(), co_paw(), path(4)};
    case FamilyName::StarsAndCliquesCo: return V{co_diamond(), two_k2(), co_paw(), path(4)};
    case FamilyName::SplitJoinComponentsCo: return V{two_k2(), co_paw(), path(4)};
    case FamilyName::Cograph: return V{path(4)};
    case FamilyName::CompleteMultipartite: return V{co_p3()};
    case FamilyName::DisjointCliques: return V{path(3)};
    case FamilyName::CoMatching: return V{empty(3), co_p3()};
    case FamilyName::CliqueUnionStable: return V{path(3), two_k2()};
    case FamilyName::Split: return V{two_k2(), cycle(4), cycle(5)};
    case FamilyName::Bipartite:
    case FamilyName::CoBipartite: return std::nullopt;
  }
  return std::nullopt;
}

}  // namespace detail

inline bool has_finite_basis(FamilyName f) { return detail::tabulated_basis(f).has_value(); }

/// Minimal forbidden induced subgraphs, canonical and sorted.
inline std::vector<Graph> named_forbidden_basis(FamilyName f) {
  auto basis = detail::tabulated_basis(f);
  if (!basis) {
    throw Error(ErrorCode::NoFiniteBasis,
                std::string(kebab_name(f)) + " has no finite forbidden induced subgraph basis");
  }
  return canonical_pattern_set(*basis);
}

inline std::vector<Graph> forbidden_basis(const FamilySpec& f) {
  return f.is_named() ? named_forbidden_basis(f.name()) : f.patterns();
}

/// a ⊆ b: every forbidden graph of b lies outside a.
inline bool family_subset(const FamilySpec& a, const FamilySpec& b) {
  for (const Graph& q : forbidden_basis(b))
    if (member(a, q)) return false;
  return true;
}

inline bool contains_all_cliques(const FamilySpec& f) {
  if (f.is_named() && f.name() == FamilyName::Bipartite) return false;
  if (f.is_named() && f.name() == FamilyName::CoBipartite) return true;
  for (const Graph& p : forbidden_basis(f))
    if (recognize::clique(p, p.vertices())) return false;
  return true;
}

inline bool contains_all_stables(const FamilySpec& f) {
  if (f.is_named() && f.name() == FamilyName::Bipartite) return true;
  if (f.is_named() && f.name() == FamilyName::CoBipartite) return false;
  for (const Graph& p : forbidden_basis(f))
    if (recognize::stable(p, p.vertices())) return false;
  return true;
}

/// The basis holds a bipartite, a co-bipartite and a split graph.
inline bool is_restricted(const FamilySpec& f) {
  const auto basis = forbidden_basis(f);
  auto any = [&](auto pred) {
    return std::any_of(basis.begin(), basis.end(), [&](const Graph& p) { return pred(p, p.vertices()); });
  };
  return any(recognize::bipartite) && any(recognize::co_bipartite) && any(recognize::split);
}

// ---------------------------------------------------------------------------
// Girth-5 statistics

/// Length of a shortest cycle; nullopt for forests.
inline std::optional<int> girth(const Graph& g) {
  const int n = g.order();
  int best = n + 1;
  for (int root = 0; root < n; ++root) {
    std::array<int, kMaxVertices> dist;
    std::array<int, kMaxVertices> parent;
    dist.fill(-1);
    dist[static_cast<std::size_t>(root)] = 0;
    parent[static_cast<std::size_t>(root)] = -1;
    std::vector<int> queue{root};
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const int u = queue[head];
      for (int v : g.neighbors(u)) {
        if (dist[static_cast<std::size_t>(v)] < 0) {
          dist[static_cast<std::size_t>(v)] = dist[static_cast<std::size_t>(u)] + 1;
          parent[static_cast<std::size_t>(v)] = u;
          queue.push_back(v);
        } else if (parent[static_cast<std::size_t>(u)] != v) {
          best = std::min(best, dist[static_cast<std::size_t>(u)] + dist[static_cast<std::size_t>(v)] + 1);
        }
      }
    }
  }
  if (best > n) return std::nullopt;
  return best;
}

/// max |S| with S stable and no vertex adjacent to two members of S.
inline int s_statistic(const Graph& g) {
  const int n = g.order();
  if (n > 24) throw Error(ErrorCode::TooLarge, "s_statistic limited to 24 vertices");
  // Members of S must be pairwise at distance >= 3.
  std::array<VertexSet, kMaxVertices> conflict{};
  for (int v = 0; v < n; ++v) {
    VertexSet c = g.neighbors(v);
    for (int u : g.neighbors(v)) c |= g.neighbors(u);
    c.erase(v);
    conflict[static_cast<std::size_t>(v)] = c;
  }
  int best = 0;
  auto search = [&](auto&& self, VertexSet cand, int size) -> void {
    if (cand.empty()) {
      best = std::max(best, size);
      return;
    }
    if (size + cand.size() <= best) return;
    const int v = cand.first();
    self(self, cand - conflict[static_cast<std::size_t>(v)] - VertexSet::single(v), size + 1);
    self(self, cand - VertexSet::single(v), size);
  };
  search(search, g.vertices(), 0);
  return best;
}

/// At most sqrt(n) vertices of degree > 3 sqrt(n)/2, with degree sum <= 3n/2.
inline bool heavy_degree_check(const Graph& g) {
  const long n = g.order();
  long count = 0;
  long sum = 0;
  for (int v = 0; v < n; ++v) {
    const long d = g.degree(v);
    if (4 * d * d > 9 * n) {  // d > 3 sqrt(n) / 2
      ++count;
      sum += d;
    }
  }
  return count * count <= n && 2 * sum <= 3 * n;
}

}  // namespace wpnlab
