#pragma once

// Witnessing partition number, witnessing sequences and partition
// certificates.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "families.hpp"
#include "graph.hpp"

namespace wpnlab {

using WitnessSequence = std::vector<FamilySpec>;

/// Vertex -> part index, with an explicit number of (possibly empty) parts.
struct Partition {
  int arity = 0;
  std::vector<int> part_of;

  VertexSet part(int i) const {
    VertexSet s;
    for (std::size_t v = 0; v < part_of.size(); ++v)
      if (part_of[v] == i) s.insert(static_cast<int>(v));
    return s;
  }
  bool operator==(const Partition&) const = default;
};

struct PartitionCertificate {
  Partition partition;
  WitnessSequence sequence;
};

inline bool certifies(const PartitionCertificate& cert, const Graph& g) {
  const auto k = static_cast<int>(cert.sequence.size());
  if (cert.partition.arity != k || static_cast<int>(cert.partition.part_of.size()) != g.order()) return false;
  for (int p : cert.partition.part_of)
    if (p < 0 || p >= k) return false;
  for (int i = 0; i < k; ++i)
    if (!member(cert.sequence[static_cast<std::size_t>(i)], g, cert.partition.part(i))) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Clique / stable partitions and wpn

/// Can V(h) be split into c cliques and s stable sets (parts may be empty)?
inline bool clique_stable_partition_exists(const Graph& h, int c, int s) {
  if (c < 0 || s < 0) throw Error(ErrorCode::InvalidArgument, "negative part count");
  const int n = h.order();
  std::vector<VertexSet> cliques(static_cast<std::size_t>(c));
  std::vector<VertexSet> stables(static_cast<std::size_t>(s));
  // Parts of one kind are interchangeable, so a vertex opens at most one new
  // empty part per kind.
  auto place = [&](auto&& self, int v) -> bool {
    if (v == n) return true;
    const VertexSet nb = h.neighbors(v);
    for (auto& q : cliques) {
      if (q.subset_of(nb)) {
        const bool opened = q.empty();
        q.insert(v);
        if (self(self, v + 1)) return true;
        q.erase(v);
        if (opened) break;
      }
    }
    for (auto& q : stables) {
      if ((q & nb).empty()) {
        const bool opened = q.empty();
        q.insert(v);
        if (self(self, v + 1)) return true;
        q.erase(v);
        if (opened) break;
      }
    }
    return false;
  };
  return place(place, 0);
}

/// Largest k with some c + s = k for which no such partition exists; 0 for
/// graphs on at most one vertex.
inline int wpn(const Graph& h) {
  // Every split succeeds once c + s >= n (singletons), and failure is
  // inherited downwards in both c and s, so scan k from the top.
  for (int k = h.order() - 1; k >= 1; --k)
    for (int c = 0; c <= k; ++c)
      if (!clique_stable_partition_exists(h, c, k - c)) return k;
  return 0;
}

// ---------------------------------------------------------------------------
// Witnessing test

namespace detail {

/// allowed[i][X] for every X ⊆ V(h) and slot i.
using AllowedTables = std::vector<std::vector<std::uint8_t>>;

inline AllowedTables allowed_tables(const Graph& h, const WitnessSequence& seq) {
  const std::size_t full = std::size_t{1} << h.order();
  AllowedTables t(seq.size(), std::vector<std::uint8_t>(full));
  for (std::size_t i = 0; i < seq.size(); ++i)
    for (std::size_t m = 0; m < full; ++m) t[i][m] = member(seq[i], h, VertexSet(m)) ? 1 : 0;
  return t;
}

/// a(S) = #{X ⊆ S allowed}
inline std::vector<std::int64_t> subset_sums(const std::vector<std::uint8_t>& allowed, int n) {
  std::vector<std::int64_t> a(allowed.begin(), allowed.end());
  for (int b = 0; b < n; ++b)
    for (std::size_t m = 0; m < a.size(); ++m)
      if ((m >> b) & 1U) a[m] += a[m ^ (std::size_t{1} << b)];
  return a;
}

/// Ordered k-tuples of allowed sets covering V, by inclusion-exclusion over
/// the complement of their union.  Nonzero iff some partition fits, since the
/// families are hereditary.  Caller guarantees k*n + n <= 126.
inline bool covering_tuple_exists(const std::vector<std::vector<std::int64_t>>& sums, int n) {
  const std::size_t full = std::size_t{1} << n;
  __int128 total = 0;
  for (std::size_t s = 0; s < full; ++s) {
    __int128 prod = 1;
    for (const auto& a : sums) prod *= a[s];
    if ((n - std::popcount(s)) % 2 == 0) total += prod;
    else total -= prod;
  }
  return total != 0;
}

}  // namespace detail

/// No partition of V(h) into seq.size() parts puts every part in its family.
inline bool is_witnessing_sequence(const Graph& h, const WitnessSequence& seq) {
  if (seq.empty()) throw Error(ErrorCode::InvalidArgument, "empty witnessing sequence");
  if (h.order() > 24) throw Error(ErrorCode::TooLarge, "witnessing test limited to 24 vertices");
  const auto tables = detail::allowed_tables(h, seq);
  const int n = h.order();
  const std::size_t full = std::size_t{1} << n;
  if (seq.size() * static_cast<std::size_t>(n) + static_cast<std::size_t>(n) <= 126) {
    std::vector<std::vector<std::int64_t>> sums;
    for (const auto& t : tables) sums.push_back(detail::subset_sums(t, n));
    return !detail::covering_tuple_exists(sums, n);
  }
  std::vector<std::uint8_t> reach(full, 0);
  reach[0] = 1;
  for (const auto& t : tables) {
    std::vector<std::uint8_t> next(full, 0);
    for (std::size_t m = 0; m < full; ++m)
      for (std::size_t x = m;; x = (x - 1) & m) {
        if (t[x] && reach[m ^ x]) {
          next[m] = 1;
          break;
        }
        if (x == 0) break;
      }
    reach = std::move(next);
  }
  return reach[full - 1] == 0;
}

/// Every family contains all cliques or all stable sets.
inline bool is_really_canonical(const WitnessSequence& seq) {
  return std::all_of(seq.begin(), seq.end(),
                     [](const FamilySpec& f) { return contains_all_cliques(f) || contains_all_stables(f); });
}

// ---------------------------------------------------------------------------
// Certificate search

namespace detail {

inline int slot_priority(const FamilySpec& f) {
  if (!f.is_named()) return 2;
  switch (f.name()) {
    case FamilyName::Clique:
    case FamilyName::Stable: return 0;
    case FamilyName::CliqueOrE2:
    case FamilyName::CoMatching:
    case FamilyName::CliqueUnionStable:
    case FamilyName::DisjointCliques:
    case FamilyName::CompleteMultipartite: return 1;
    default: return 2;
  }
}

}  // namespace detail

/// First partition (in a fixed search order) with every part inside its
/// family, or nullopt.
inline std::optional<PartitionCertificate> find_certificate(const Graph& g, const WitnessSequence& seq) {
  if (seq.empty()) throw Error(ErrorCode::InvalidArgument, "empty witnessing sequence");
  const int n = g.order();
  const int k = static_cast<int>(seq.size());

  // Restrictive slots first, the large family last.
  std::vector<int> order(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) order[static_cast<std::size_t>(i)] = i;
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return detail::slot_priority(seq[static_cast<std::size_t>(a)]) < detail::slot_priority(seq[static_cast<std::size_t>(b)]);
  });
  // twin[j]: earlier position in `order` holding an identical family, or -1.
  std::vector<int> twin(static_cast<std::size_t>(k), -1);
  for (int j = 0; j < k; ++j)
    for (int p = j - 1; p >= 0; --p)
      if (seq[static_cast<std::size_t>(order[static_cast<std::size_t>(p)])] == seq[static_cast<std::size_t>(order[static_cast<std::size_t>(j)])]) {
        twin[static_cast<std::size_t>(j)] = p;
        break;
      }

  // Lazy per-slot membership memo; 0 unknown, 1 no, 2 yes.
  const bool memo_on = n <= 16;
  std::vector<std::vector<std::uint8_t>> memo;
  if (memo_on) memo.assign(static_cast<std::size_t>(k), std::vector<std::uint8_t>(std::size_t{1} << n, 0));
  auto fits = [&](int j, VertexSet x) {
    const int slot = order[static_cast<std::size_t>(j)];
    if (!memo_on) return member(seq[static_cast<std::size_t>(slot)], g, x);
    auto& cell = memo[static_cast<std::size_t>(j)][x.bits()];
    if (cell == 0) cell = member(seq[static_cast<std::size_t>(slot)], g, x) ? 2 : 1;
    return cell == 2;
  };

  std::vector<VertexSet> parts(static_cast<std::size_t>(k));
  auto place = [&](auto&& self, int v) -> bool {
    if (v == n) return true;
    for (int j = 0; j < k; ++j) {
      auto& part = parts[static_cast<std::size_t>(j)];
      const int t = twin[static_cast<std::size_t>(j)];
      if (part.empty() && t >= 0 && parts[static_cast<std::size_t>(t)].empty()) continue;
      const VertexSet grown = part | VertexSet::single(v);
      if (!fits(j, grown)) continue;
      part = grown;
      if (self(self, v + 1)) return true;
      part.erase(v);
    }
    return false;
  };
  if (!place(place, 0)) return std::nullopt;

  PartitionCertificate cert;
  cert.sequence = seq;
  cert.partition.arity = k;
  cert.partition.part_of.assign(static_cast<std::size_t>(n), 0);
  for (int j = 0; j < k; ++j)
    for (int v : parts[static_cast<std::size_t>(j)]) cert.partition.part_of[static_cast<std::size_t>(v)] = order[static_cast<std::size_t>(j)];
  return cert;
}

// ---------------------------------------------------------------------------
// Structural theorems as sequences

struct TheoremId {
  enum class Kind { C6, C8, C10, C2l } kind = Kind::C6;
  int l = 0;  // only for C2l

  int cycle_length() const {
    switch (kind) {
      case Kind::C6: return 6;
      case Kind::C8: return 8;
      case Kind::C10: return 10;
      case Kind::C2l: return 2 * l;
    }
    return 0;
  }
  std::string str() const {
    switch (kind) {
      case Kind::C6: return "c6";
      case Kind::C8: return "c8";
      case Kind::C10: return "c10";
      case Kind::C2l: return "c2l:" + std::to_string(l);
    }
    return "?";
  }
  bool operator==(const TheoremId&) const = default;
};

inline TheoremId parse_theorem(std::string_view s) {
  using K = TheoremId::Kind;
  if (s == "c6") return {K::C6, 0};
  if (s == "c8") return {K::C8, 0};
  if (s == "c10") return {K::C10, 0};
  if (s.rfind("c2l:", 0) == 0) {
    int l = 0;
    try {
      std::size_t used = 0;
      l = std::stoi(std::string(s.substr(4)), &used);
      if (used != s.size() - 4) throw std::invalid_argument("tail");
    } catch (const std::exception&) {
      throw Error(ErrorCode::InvalidArgument, "bad theorem id '" + std::string(s) + "'");
    }
    if (l <= 5) throw Error(ErrorCode::InvalidArgument, "c2l needs l > 5, got " + std::to_string(l));
    return {K::C2l, l};
  }
  throw Error(ErrorCode::InvalidArgument, "unknown theorem id '" + std::string(s) + "'");
}

inline WitnessSequence theorem_sequence(const TheoremId& t) {
  auto named = [](FamilyName f) { return FamilySpec::named(f); };
  const FamilySpec clique = named(FamilyName::Clique);
  switch (t.kind) {
    case TheoremId::Kind::C6: return {named(FamilyName::CoGirth5), named(FamilyName::Stable)};
    case TheoremId::Kind::C8: return {named(FamilyName::SplitJoinComponentsCo), clique, clique};
    case TheoremId::Kind::C10: return {named(FamilyName::StarsAndCliquesCo), clique, clique, clique};
    case TheoremId::Kind::C2l: {
      if (t.l <= 5) throw Error(ErrorCode::InvalidArgument, "c2l needs l > 5");
      WitnessSequence seq{named(FamilyName::StarsAndTrianglesCo)};
      seq.insert(seq.end(), static_cast<std::size_t>(t.l - 2), clique);
      return seq;
    }
  }
  return {};
}

inline std::optional<PartitionCertificate> theorem_certifier(const Graph& g, const TheoremId& t) {
  return find_certificate(g, theorem_sequence(t));
}

}  // namespace wpnlab
