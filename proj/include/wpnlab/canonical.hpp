#pragma once

// Canonical labelling by individualisation and refinement.
//
// The search tree has equitable ordered partitions as nodes; a child
// individualises one vertex of the first non-singleton cell and refines again.
// Leaves are discrete partitions, i.e. labellings, and the canonical form is the
// lexicographically least relabelled adjacency among explored leaves.  Two
// leaves giving the same relabelled graph yield an automorphism; those are used
// to skip equivalent children and, along the first path, to compute |Aut(g)|
// by orbit-stabiliser.
//
// Refinement starts by splitting on degree with cells in ascending order and
// keeps fragments in place, so the vertex receiving the last canonical label
// always has maximum degree.  Unlabeled generation relies on that.

#include <algorithm>
#include <numeric>
#include <vector>

#include "bigcount.hpp"
#include "graph.hpp"

namespace wpnlab {

struct CanonicalLabeling {
  Graph form;
  /// position[v] = canonical label of vertex v
  std::vector<int> position;
  std::vector<std::vector<int>> generators;
  /// orbit[v] = least vertex in the Aut(g)-orbit of v
  std::vector<int> orbit;
  BigCount group_size = 1;
};

namespace detail {

using Cells = std::vector<std::vector<int>>;

class UnionFind {
 public:
  explicit UnionFind(int n) : parent_(static_cast<std::size_t>(n)) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }
  int find(int x) {
    while (parent_[static_cast<std::size_t>(x)] != x) {
      parent_[static_cast<std::size_t>(x)] = parent_[static_cast<std::size_t>(parent_[static_cast<std::size_t>(x)])];
      x = parent_[static_cast<std::size_t>(x)];
    }
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (a < b) std::swap(a, b);
    parent_[static_cast<std::size_t>(a)] = b;  // keep the smaller root
  }

 private:
  std::vector<int> parent_;
};

inline VertexSet cell_mask(const std::vector<int>& cell) {
  VertexSet m;
  for (int v : cell) m.insert(v);
  return m;
}

/// Refines to the coarsest equitable partition finer than `cells`.
inline void refine(const Graph& g, Cells& cells) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t w = 0; w < cells.size() && !changed; ++w) {
      const VertexSet splitter = cell_mask(cells[w]);
      Cells next;
      next.reserve(cells.size() + 4);
      for (auto& cell : cells) {
        if (cell.size() == 1) {
          next.push_back(cell);
          continue;
        }
        std::vector<std::pair<int, int>> keyed;
        keyed.reserve(cell.size());
        for (int v : cell) keyed.emplace_back((g.neighbors(v) & splitter).size(), v);
        const bool uniform = std::all_of(keyed.begin(), keyed.end(),
                                         [&](const auto& kv) { return kv.first == keyed.front().first; });
        if (uniform) {
          next.push_back(cell);
          continue;
        }
        std::stable_sort(keyed.begin(), keyed.end(),
                         [](const auto& a, const auto& b) { return a.first < b.first; });
        std::size_t i = 0;
        while (i < keyed.size()) {
          std::vector<int> frag;
          const int key = keyed[i].first;
          for (; i < keyed.size() && keyed[i].first == key; ++i) frag.push_back(keyed[i].second);
          next.push_back(std::move(frag));
        }
        changed = true;
      }
      if (changed) cells = std::move(next);
    }
  }
}

inline bool discrete(const Cells& cells, int n) { return static_cast<int>(cells.size()) == n; }

inline std::size_t target_cell(const Cells& cells) {
  for (std::size_t i = 0; i < cells.size(); ++i)
    if (cells[i].size() > 1) return i;
  return cells.size();
}

inline Cells individualize(const Graph& g, const Cells& cells, std::size_t t, int v) {
  Cells out;
  out.reserve(cells.size() + 1);
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i != t) {
      out.push_back(cells[i]);
      continue;
    }
    out.push_back({v});
    std::vector<int> rest;
    for (int u : cells[i])
      if (u != v) rest.push_back(u);
    out.push_back(std::move(rest));
  }
  refine(g, out);
  return out;
}

class CanonSearch {
 public:
  explicit CanonSearch(const Graph& g) : g_(g), n_(g.order()) {}

  CanonicalLabeling run() {
    CanonicalLabeling out;
    if (n_ == 0) {
      out.form = Graph();
      return out;
    }
    Cells root(1);
    root[0].resize(static_cast<std::size_t>(n_));
    std::iota(root[0].begin(), root[0].end(), 0);
    refine(g_, root);

    // First path: always take the first vertex of the target cell.
    std::vector<Cells> nodes;
    std::vector<std::size_t> targets;
    std::vector<int> choice;
    Cells cur = root;
    while (!discrete(cur, n_)) {
      const std::size_t t = target_cell(cur);
      nodes.push_back(cur);
      targets.push_back(t);
      choice.push_back(cur[t][0]);
      cur = individualize(g_, cur, t, cur[t][0]);
    }
    first_lab_ = labels_of(cur);
    first_cert_ = certificate(first_lab_);
    best_lab_ = first_lab_;
    best_cert_ = first_cert_;

    BigCount group = 1;
    for (int level = static_cast<int>(nodes.size()) - 1; level >= 0; --level) {
      const auto lv = static_cast<std::size_t>(level);
      const std::vector<int> prefix(choice.begin(), choice.begin() + level);
      const Cells& node = nodes[lv];
      const std::size_t t = targets[lv];
      std::vector<int> explored{choice[lv]};
      for (int w : node[t]) {
        if (w == choice[lv]) continue;
        UnionFind uf = orbits_fixing(prefix);
        if (std::any_of(explored.begin(), explored.end(), [&](int x) { return uf.find(x) == uf.find(w); }))
          continue;
        explored.push_back(w);
        std::vector<int> next_prefix = prefix;
        next_prefix.push_back(w);
        explore(individualize(g_, node, t, w), next_prefix);
      }
      UnionFind uf = orbits_fixing(prefix);
      int orbit_size = 0;
      for (int w : node[t])
        if (uf.find(w) == uf.find(choice[lv])) ++orbit_size;
      group *= orbit_size;
    }

    out.position.assign(static_cast<std::size_t>(n_), 0);
    for (int p = 0; p < n_; ++p) out.position[static_cast<std::size_t>(best_lab_[static_cast<std::size_t>(p)])] = p;
    out.form = relabel(g_, out.position);
    out.generators = generators_;
    UnionFind uf(n_);
    for (const auto& gen : generators_)
      for (int v = 0; v < n_; ++v) uf.unite(v, gen[static_cast<std::size_t>(v)]);
    out.orbit.resize(static_cast<std::size_t>(n_));
    for (int v = 0; v < n_; ++v) out.orbit[static_cast<std::size_t>(v)] = uf.find(v);
    out.group_size = group;
    return out;
  }

 private:
  std::vector<int> labels_of(const Cells& cells) const {
    std::vector<int> lab;
    lab.reserve(cells.size());
    for (const auto& c : cells) lab.push_back(c[0]);
    return lab;
  }

  std::vector<std::uint64_t> certificate(const std::vector<int>& lab) const {
    std::vector<int> pos(static_cast<std::size_t>(n_));
    for (int p = 0; p < n_; ++p) pos[static_cast<std::size_t>(lab[static_cast<std::size_t>(p)])] = p;
    std::vector<std::uint64_t> cert(static_cast<std::size_t>(n_), 0);
    for (int p = 0; p < n_; ++p) {
      std::uint64_t row = 0;
      for (int u : g_.neighbors(lab[static_cast<std::size_t>(p)])) row |= std::uint64_t{1} << pos[static_cast<std::size_t>(u)];
      cert[static_cast<std::size_t>(p)] = row;
    }
    return cert;
  }

  void add_generator(const std::vector<int>& from, const std::vector<int>& to) {
    std::vector<int> gen(static_cast<std::size_t>(n_));
    for (int p = 0; p < n_; ++p) gen[static_cast<std::size_t>(from[static_cast<std::size_t>(p)])] = to[static_cast<std::size_t>(p)];
    bool identity = true;
    for (int v = 0; v < n_; ++v) identity = identity && gen[static_cast<std::size_t>(v)] == v;
    if (!identity) generators_.push_back(std::move(gen));
  }

  UnionFind orbits_fixing(const std::vector<int>& prefix) const {
    UnionFind uf(n_);
    for (const auto& gen : generators_) {
      const bool fixes = std::all_of(prefix.begin(), prefix.end(),
                                     [&](int v) { return gen[static_cast<std::size_t>(v)] == v; });
      if (!fixes) continue;
      for (int v = 0; v < n_; ++v) uf.unite(v, gen[static_cast<std::size_t>(v)]);
    }
    return uf;
  }

  /// Returns true when a leaf equivalent to the first leaf was found, which
  /// makes the whole subtree below the first-path divergence redundant.
  bool explore(const Cells& cells, const std::vector<int>& prefix) {
    if (discrete(cells, n_)) {
      const std::vector<int> lab = labels_of(cells);
      const std::vector<std::uint64_t> cert = certificate(lab);
      if (cert == first_cert_) {
        add_generator(first_lab_, lab);
        return true;
      }
      if (cert < best_cert_) {
        best_cert_ = cert;
        best_lab_ = lab;
      } else if (cert == best_cert_) {
        add_generator(best_lab_, lab);
      }
      return false;
    }
    const std::size_t t = target_cell(cells);
    std::vector<int> explored;
    for (int w : cells[t]) {
      if (!explored.empty()) {
        UnionFind uf = orbits_fixing(prefix);
        if (std::any_of(explored.begin(), explored.end(), [&](int x) { return uf.find(x) == uf.find(w); }))
          continue;
      }
      explored.push_back(w);
      std::vector<int> next_prefix = prefix;
      next_prefix.push_back(w);
      if (explore(individualize(g_, cells, t, w), next_prefix)) return true;
    }
    return false;
  }

  const Graph& g_;
  int n_;
  std::vector<int> first_lab_;
  std::vector<int> best_lab_;
  std::vector<std::uint64_t> first_cert_;
  std::vector<std::uint64_t> best_cert_;
  std::vector<std::vector<int>> generators_;
};

}  // namespace detail

inline CanonicalLabeling canonical_labeling(const Graph& g) { return detail::CanonSearch(g).run(); }

/// Isomorphism-invariant representative: equal for g and h iff g ≅ h.
inline Graph canonical_form(const Graph& g) { return canonical_labeling(g).form; }

inline BigCount automorphism_group_size(const Graph& g) { return canonical_labeling(g).group_size; }

}  // namespace wpnlab
