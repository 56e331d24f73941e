#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include <wpnlab/census.hpp>
#include <wpnlab/graph.hpp>

#include "oracles.hpp"

namespace support {

inline wpnlab::Graph random_graph(std::mt19937_64& rng, int n, double p = 0.5) {
  std::bernoulli_distribution coin(p);
  wpnlab::Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (coin(rng)) g.add_edge(u, v);
  return g;
}

/// One representative per isomorphism class, cached per order.
inline const std::vector<wpnlab::Graph>& graphs_of_order(int n) {
  static std::vector<std::vector<wpnlab::Graph>> cache;
  while (static_cast<int>(cache.size()) <= n) cache.push_back(wpnlab::unlabeled_level(static_cast<int>(cache.size())));
  return cache[static_cast<std::size_t>(n)];
}

inline std::vector<wpnlab::Graph> graphs_up_to(int n) {
  std::vector<wpnlab::Graph> out;
  for (int k = 0; k <= n; ++k)
    for (const auto& g : graphs_of_order(k)) out.push_back(g);
  return out;
}

inline wpnlab::Graph from_mat(const oracle::Mat& m) {
  wpnlab::Graph g(oracle::order(m));
  for (int u = 0; u < oracle::order(m); ++u)
    for (int v = u + 1; v < oracle::order(m); ++v)
      if (m[u][v]) g.add_edge(u, v);
  return g;
}

}  // namespace support
