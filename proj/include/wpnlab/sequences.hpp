#pragma once

// Really canonical witnessing sequences over the induced subgraphs of h.
//
// A slot is described by an exclusion antichain E_i of isomorphism classes of
// induced subgraphs of h; the slot family is Forb(E_i).  Restricted to the
// subsets of V(h), the allowed classes U_i are those lying above no member of
// E_i, and whether a tuple witnesses only depends on (U_1, ..., U_k).
//
// The search walks a hitting-set tree.  At a non-witnessing node we pick a
// partition X_1..X_k that still fits and branch on every way to exclude one
// class below some class(X_i).  Leaves are witnessing tuples whose U is
// maximal: putting back any single excluded minimal class breaks the
// witnessing property.  Every witnessing really canonical tuple is dominated
// slotwise by one of these leaves, so properties preserved under shrinking the
// families only need to be checked on them.

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "canonical.hpp"
#include "witnessing.hpp"

namespace wpnlab {

/// Isomorphism classes of induced subgraphs of h and their containment order.
class SubgraphPoset {
 public:
  explicit SubgraphPoset(const Graph& h) : h_(h) {
    const int n = h.order();
    if (n > 20) throw Error(ErrorCode::TooLarge, "subgraph poset limited to 20 vertices");
    const std::size_t full = std::size_t{1} << n;
    std::map<Graph, std::size_t> first_mask;
    std::vector<Graph> forms(full);
    for (std::size_t m = 0; m < full; ++m) {
      forms[m] = canonical_form(induced(h, VertexSet(m)));
      first_mask.try_emplace(forms[m], m);
    }
    std::vector<std::pair<Graph, std::size_t>> sorted(first_mask.begin(), first_mask.end());
    std::sort(sorted.begin(), sorted.end(),
              [](const auto& a, const auto& b) { return pattern_less(a.first, b.first); });
    std::map<Graph, int> id;
    for (const auto& [form, mask] : sorted) {
      id.emplace(form, static_cast<int>(reps_.size()));
      reps_.push_back(form);
      rep_mask_.push_back(mask);
    }
    class_of_.resize(full);
    for (std::size_t m = 0; m < full; ++m) class_of_[m] = id.at(forms[m]);

    const std::size_t c = reps_.size();
    below_.assign(c, boost::dynamic_bitset<>(c));
    for (std::size_t i = 0; i < c; ++i) {  // classes come in nondecreasing order
      below_[i].set(i);
      const VertexSet s(rep_mask_[i]);
      for (int v : s) below_[i] |= below_[static_cast<std::size_t>(class_of_[(s - VertexSet::single(v)).bits()])];
      const Graph& r = reps_[i];
      clique_.push_back(recognize::clique(r, r.vertices()));
      stable_.push_back(recognize::stable(r, r.vertices()));
    }
  }

  const Graph& host() const { return h_; }
  int size() const { return static_cast<int>(reps_.size()); }
  const Graph& rep(int c) const { return reps_[static_cast<std::size_t>(c)]; }
  int class_of(std::uint64_t mask) const { return class_of_[mask]; }
  /// d is an induced subgraph of c
  bool leq(int d, int c) const { return below_[static_cast<std::size_t>(c)].test(static_cast<std::size_t>(d)); }
  bool is_clique(int c) const { return clique_[static_cast<std::size_t>(c)]; }
  bool is_stable(int c) const { return stable_[static_cast<std::size_t>(c)]; }

 private:
  Graph h_;
  std::vector<Graph> reps_;
  std::vector<std::size_t> rep_mask_;
  std::vector<int> class_of_;
  std::vector<boost::dynamic_bitset<>> below_;
  std::vector<bool> clique_;
  std::vector<bool> stable_;
};

struct EnumerationResult {
  std::vector<WitnessSequence> sequences;
  bool budget_exhausted = false;
  std::uint64_t nodes_expanded = 0;
};

namespace detail {

class CanonicalSequenceSearch {
 public:
  using Exclusions = std::vector<std::vector<int>>;

  CanonicalSequenceSearch(const SubgraphPoset& poset, int k, std::uint64_t budget)
      : poset_(poset), n_(poset.host().order()), k_(k), budget_(budget), full_(std::size_t{1} << n_) {}

  EnumerationResult run() {
    EnumerationResult out;
    Exclusions root(static_cast<std::size_t>(k_));
    std::vector<Exclusions> stack{root};
    seen_.insert(root);
    std::set<Exclusions> leaves;
    while (!stack.empty()) {
      if (out.nodes_expanded >= budget_) {
        out.budget_exhausted = true;
        break;
      }
      Exclusions node = std::move(stack.back());
      stack.pop_back();
      ++out.nodes_expanded;

      std::vector<boost::dynamic_bitset<>> allowed;
      for (const auto& e : node) allowed.push_back(allowed_classes(e));
      if (!maximality_holds(node, allowed)) continue;
      const auto cover = find_cover(node, allowed);
      if (!cover) {
        leaves.insert(node);
        continue;
      }
      for (int i = 0; i < k_; ++i) {
        const std::uint64_t xi = (*cover)[static_cast<std::size_t>(i)];
        if (xi == 0) continue;
        const int top = poset_.class_of(xi);
        for (int m = 0; m < poset_.size(); ++m) {
          if (!poset_.leq(m, top) || !excludable(node[static_cast<std::size_t>(i)], m)) continue;
          Exclusions child = node;
          auto& ei = child[static_cast<std::size_t>(i)];
          ei.insert(std::lower_bound(ei.begin(), ei.end(), m), m);
          std::sort(child.begin(), child.end());
          if (seen_.insert(child).second) stack.push_back(std::move(child));
        }
      }
    }
    for (const auto& leaf : leaves) out.sequences.push_back(to_sequence(leaf));
    std::sort(out.sequences.begin(), out.sequences.end(), [](const auto& a, const auto& b) {
      return describe_all(a) < describe_all(b);
    });
    return out;
  }

  static std::vector<std::string> describe_all(const WitnessSequence& s) {
    std::vector<std::string> d;
    for (const auto& f : s) d.push_back(f.describe());
    return d;
  }

 private:
  boost::dynamic_bitset<> allowed_classes(const std::vector<int>& e) const {
    boost::dynamic_bitset<> u(static_cast<std::size_t>(poset_.size()));
    for (int c = 0; c < poset_.size(); ++c) {
      bool ok = true;
      for (int x : e)
        if (poset_.leq(x, c)) {
          ok = false;
          break;
        }
      u[static_cast<std::size_t>(c)] = ok;
    }
    return u;
  }

  /// m may join E_i: not both a clique and a stable class in E_i, never the
  /// empty graph or K1, and E_i stays an antichain.
  bool excludable(const std::vector<int>& ei, int m) const {
    if (poset_.is_clique(m) && poset_.is_stable(m)) return false;
    for (int x : ei) {
      if (poset_.leq(m, x) || poset_.leq(x, m)) return false;
      if ((poset_.is_clique(m) && poset_.is_stable(x)) || (poset_.is_stable(m) && poset_.is_clique(x))) return false;
    }
    return true;
  }

  std::vector<std::int64_t> sums_for(const boost::dynamic_bitset<>& allowed) const {
    std::vector<std::uint8_t> t(full_);
    for (std::size_t m = 0; m < full_; ++m) t[m] = allowed.test(static_cast<std::size_t>(poset_.class_of(m))) ? 1 : 0;
    return subset_sums(t, n_);
  }

  bool witnessing(const std::vector<boost::dynamic_bitset<>>& allowed) const {
    std::vector<std::vector<std::int64_t>> sums;
    for (const auto& a : allowed) sums.push_back(sums_for(a));
    return !covering_tuple_exists(sums, n_);
  }

  /// Re-admitting any excluded class must destroy the witnessing property;
  /// otherwise no descendant can be a maximal leaf.
  bool maximality_holds(const Exclusions& node, std::vector<boost::dynamic_bitset<>>& allowed) const {
    for (int i = 0; i < k_; ++i) {
      for (int m : node[static_cast<std::size_t>(i)]) {
        auto& a = allowed[static_cast<std::size_t>(i)];
        a.set(static_cast<std::size_t>(m));
        const bool still = witnessing(allowed);
        a.reset(static_cast<std::size_t>(m));
        if (still) return false;
      }
    }
    return true;
  }

  /// A partition X_1..X_k of V(h) with class(X_i) allowed in slot i,
  /// choosing one that leaves the fewest ways to exclude a class below some
  /// class(X_i).  nullopt when none fits.
  std::optional<std::vector<std::uint64_t>> find_cover(const Exclusions& node,
                                                       const std::vector<boost::dynamic_bitset<>>& allowed) const {
    constexpr int kInf = 1 << 28;
    const int classes = poset_.size();
    // cost[i][c]: excludable classes below c in slot i, or kInf if c is banned
    std::vector<std::vector<int>> cost(static_cast<std::size_t>(k_), std::vector<int>(static_cast<std::size_t>(classes), kInf));
    for (int i = 0; i < k_; ++i) {
      std::vector<char> ex(static_cast<std::size_t>(classes));
      for (int m = 0; m < classes; ++m) ex[static_cast<std::size_t>(m)] = excludable(node[static_cast<std::size_t>(i)], m);
      for (int c = 0; c < classes; ++c) {
        if (!allowed[static_cast<std::size_t>(i)].test(static_cast<std::size_t>(c))) continue;
        int k = 0;
        for (int m = 0; m < classes; ++m)
          if (ex[static_cast<std::size_t>(m)] && poset_.leq(m, c)) ++k;
        cost[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)] = k;
      }
    }
    auto part_cost = [&](int i, std::size_t x) {
      return cost[static_cast<std::size_t>(i)][static_cast<std::size_t>(poset_.class_of(x))];
    };
    // best[i][m]: cheapest way for slots i..k-1 to cover exactly m
    std::vector<std::vector<int>> best(static_cast<std::size_t>(k_), std::vector<int>(full_, kInf));
    for (std::size_t m = 0; m < full_; ++m) best[static_cast<std::size_t>(k_ - 1)][m] = part_cost(k_ - 1, m);
    for (int i = k_ - 2; i >= 0; --i) {
      auto& b = best[static_cast<std::size_t>(i)];
      const auto& nx = best[static_cast<std::size_t>(i + 1)];
      const std::size_t lo = i == 0 ? full_ - 1 : 0;  // slot 0 only needs V
      for (std::size_t m = lo; m < full_; ++m)
        for (std::size_t x = m;; x = (x - 1) & m) {
          const int c = part_cost(i, x);
          if (c < kInf && nx[m ^ x] < kInf) b[m] = std::min(b[m], c + nx[m ^ x]);
          if (x == 0) break;
        }
    }
    std::size_t rest = full_ - 1;
    if (best[0][rest] >= kInf) return std::nullopt;
    std::vector<std::uint64_t> parts;
    for (int i = 0; i < k_ - 1; ++i) {
      const auto& nx = best[static_cast<std::size_t>(i + 1)];
      const int target = best[static_cast<std::size_t>(i)][rest];
      for (std::size_t x = rest;; x = (x - 1) & rest) {
        const int c = part_cost(i, x);
        if (c < kInf && nx[rest ^ x] < kInf && c + nx[rest ^ x] == target) {
          parts.push_back(x);
          rest ^= x;
          break;
        }
        if (x == 0) break;
      }
    }
    parts.push_back(rest);
    return parts;
  }

  WitnessSequence to_sequence(const Exclusions& node) const {
    std::vector<FamilySpec> slots;
    for (const auto& e : node) {
      std::vector<Graph> pats;
      for (int c : e) pats.push_back(poset_.rep(c));
      slots.push_back(FamilySpec::forbidden(pats));
    }
    std::sort(slots.begin(), slots.end(),
              [](const FamilySpec& a, const FamilySpec& b) { return a.describe() < b.describe(); });
    return slots;
  }

  const SubgraphPoset& poset_;
  int n_;
  int k_;
  std::uint64_t budget_;
  std::size_t full_;
  std::set<Exclusions> seen_;
};

}  // namespace detail

/// Maximal really canonical witnessing k-sequences with bases drawn from the
/// induced subgraphs of h, up to slot order.  `budget` caps expanded nodes.
inline EnumerationResult enumerate_really_canonical_sequences(const Graph& h, int k, std::uint64_t budget) {
  if (k < 1) throw Error(ErrorCode::InvalidArgument, "k must be positive");
  if (h.order() > 16) throw Error(ErrorCode::TooLarge, "sequence enumeration limited to 16 vertices");
  if (k != wpn(h)) {
    throw Error(ErrorCode::InvalidArgument,
                "k = " + std::to_string(k) + " differs from wpn(h) = " + std::to_string(wpn(h)));
  }
  const SubgraphPoset poset(h);
  return detail::CanonicalSequenceSearch(poset, k, budget).run();
}

// ---------------------------------------------------------------------------
// Classification against the structural case lists for even cycles

struct Classification {
  int case_number = 0;  // 0 means no case matched
  std::string label;
};

namespace detail {

inline FamilySpec forbid(std::initializer_list<Graph> gs) { return FamilySpec::forbidden(std::vector<Graph>(gs)); }

/// Case lists: each case assigns one role family per slot, up to slot order.
inline std::vector<std::vector<FamilySpec>> cycle_cases(int len) {
  using F = FamilyName;
  auto named = [](F f) { return FamilySpec::named(f); };
  const Graph e3 = empty(3), p3 = path(3), co_p3 = disjoint_union(clique(2), empty(1));
  const FamilySpec small_clique = named(F::CliqueOrE2);
  switch (len) {
    case 6:
      return {
          {named(F::CoGirth5), named(F::Stable)},
          {named(F::Cograph), small_clique},
          // cliques or complements of stars
          {named(F::CompleteMultipartite), forbid({e3, p3, disjoint_union(clique(2), clique(2))})},
          {named(F::CoMatching), named(F::CliqueUnionStable)},
      };
    case 8:
      return {
          {named(F::SplitJoinComponentsCo), small_clique, small_clique},
          // cliques and stable sets only
          {forbid({p3, co_p3}), small_clique, named(F::CoMatching)},
      };
    case 10:
      return {{named(F::StarsAndCliquesCo), small_clique, small_clique, small_clique}};
    default: {
      if (len % 2 != 0 || len < 12) return {};
      std::vector<FamilySpec> c{named(F::StarsAndTrianglesCo)};
      c.insert(c.end(), static_cast<std::size_t>(len / 2 - 2), small_clique);
      return {c};
    }
  }
}

}  // namespace detail

/// Which structural case a witnessing sequence for an even cycle h falls into.
inline Classification classify_sequence(const Graph& h, const WitnessSequence& seq) {
  const int len = h.order();
  if (len < 6 || len % 2 != 0 || !is_isomorphic(h, cycle(len))) {
    throw Error(ErrorCode::Unsupported, "classification needs an even cycle of length at least 6");
  }
  if (static_cast<int>(seq.size()) != wpn(h) || !is_witnessing_sequence(h, seq)) {
    throw Error(ErrorCode::NotWitnessing, "sequence is not a witnessing wpn(h)-sequence for h");
  }
  const auto cases = detail::cycle_cases(len);
  const std::size_t k = seq.size();
  for (std::size_t c = 0; c < cases.size(); ++c) {
    const auto& roles = cases[c];
    if (roles.size() != k) continue;
    std::vector<std::size_t> perm(k);
    for (std::size_t i = 0; i < k; ++i) perm[i] = i;
    do {
      bool ok = true;
      for (std::size_t i = 0; i < k && ok; ++i) ok = family_subset(seq[perm[i]], roles[i]);
      if (ok) return {static_cast<int>(c) + 1, "case-" + std::to_string(c + 1)};
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  return {0, "no-match"};
}

}  // namespace wpnlab
