#pragma once

// Exhaustive small-n census.
//
// Labeled mode walks all 2^C(n,2) edge sets.  The last p edges (in graph6
// pair order) are fixed by the shard index and the rest run through a binary
// reflected Gray code, so consecutive graphs differ in one edge and induced
// copies of the forbidden graph can be counted incrementally.
//
// Unlabeled mode generates one representative per isomorphism class by
// canonical augmentation: a graph on n vertices is accepted as a child of its
// parent on n-1 vertices iff the added vertex lies in the automorphism orbit of
// the vertex with the largest canonical label.  Each class is weighted by
// n!/|Aut|, so all counts are labeled counts in both modes.

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <mutex>
#include <optional>
#include <set>
#include <string>
#include <thread>
#include <vector>

#include <json.hpp>

#include "bigcount.hpp"
#include "canonical.hpp"
#include "families.hpp"
#include "graph6.hpp"
#include "witnessing.hpp"

namespace wpnlab {

inline constexpr int kMaxLabeledN = 8;
inline constexpr int kMaxUnlabeledN = 10;

inline int pair_count(int n) { return n * (n - 1) / 2; }

/// Edge index e <-> pair (i, j), i < j, in graph6 order (0,1) (0,2) (1,2) ...
inline std::vector<std::pair<int, int>> edge_order(int n) {
  std::vector<std::pair<int, int>> out;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) out.emplace_back(i, j);
  return out;
}

// ---------------------------------------------------------------------------
// Labeled walking

/// Calls visit(g, toggled) for every graph of one shard; `toggled` is the edge
/// index flipped since the previous call, or -1 for the first graph.
template <class Visit>
void walk_labeled_shard(int n, int shard_bits, std::uint64_t shard, Visit&& visit) {
  if (n > kMaxLabeledN) {
    throw Error(ErrorCode::TooLarge, "labeled enumeration supports n <= 8; use unlabeled mode for larger n");
  }
  const auto edges = edge_order(n);
  const int m = static_cast<int>(edges.size());
  if (shard_bits < 0 || shard_bits > m) throw Error(ErrorCode::InvalidArgument, "shard bits out of range");
  if (shard >> shard_bits) throw Error(ErrorCode::InvalidArgument, "shard index out of range");
  const int free_bits = m - shard_bits;
  Graph g(n);
  for (int b = 0; b < shard_bits; ++b)
    if ((shard >> b) & 1U) {
      const auto [u, v] = edges[static_cast<std::size_t>(free_bits + b)];
      g.add_edge(u, v);
    }
  visit(static_cast<const Graph&>(g), -1);
  const std::uint64_t steps = std::uint64_t{1} << free_bits;
  for (std::uint64_t i = 1; i < steps; ++i) {
    const int e = std::countr_zero(i);
    const auto [u, v] = edges[static_cast<std::size_t>(e)];
    g.toggle_edge(u, v);
    visit(static_cast<const Graph&>(g), e);
  }
}

/// Visits every labeled graph on n <= 8 vertices once, in a fixed order.
inline void enumerate_labeled(int n, const std::function<void(const Graph&)>& visit) {
  walk_labeled_shard(n, 0, 0, [&](const Graph& g, int) { visit(g); });
}

/// Number of labeled copies of h among the |h|-subsets of the current graph,
/// maintained under single-edge toggles.
class InducedCopyCounter {
 public:
  InducedCopyCounter(int n, const Graph& h) : k_(h.order()) {
    touches_.resize(static_cast<std::size_t>(pair_count(n)));
    if (k_ > n) return;
    // Labeled copies of h on {0..k-1}, as bit masks over the pairs of a k-set.
    const auto kpairs = edge_order(k_);
    const int kp = static_cast<int>(kpairs.size());
    std::vector<int> perm(static_cast<std::size_t>(k_));
    for (int i = 0; i < k_; ++i) perm[static_cast<std::size_t>(i)] = i;
    std::set<std::uint32_t> copies;
    do {
      std::uint32_t mask = 0;
      for (int e = 0; e < kp; ++e) {
        const auto [a, b] = kpairs[static_cast<std::size_t>(e)];
        if (h.adjacent(perm[static_cast<std::size_t>(a)], perm[static_cast<std::size_t>(b)])) mask |= 1U << e;
      }
      copies.insert(mask);
    } while (std::next_permutation(perm.begin(), perm.end()));
    if (kp <= 21) {
      table_.assign(std::size_t{1} << kp, 0);
      for (auto c : copies) table_[c] = 1;
    } else {
      sorted_.assign(copies.begin(), copies.end());
    }

    // Every k-subset, and for each host edge the (subset, bit) pairs it feeds.
    const auto host_pairs = edge_order(n);
    std::map<std::pair<int, int>, int> host_index;
    for (std::size_t e = 0; e < host_pairs.size(); ++e) host_index[host_pairs[e]] = static_cast<int>(e);
    for (std::uint64_t s = 0; s < (std::uint64_t{1} << n); ++s) {
      if (std::popcount(s) != k_) continue;
      std::vector<int> vs;
      for (int v : VertexSet(s)) vs.push_back(v);
      const auto id = static_cast<std::uint32_t>(subsets_.size());
      subsets_.push_back(vs);
      for (int e = 0; e < kp; ++e) {
        const auto [a, b] = kpairs[static_cast<std::size_t>(e)];
        touches_[static_cast<std::size_t>(host_index.at({vs[static_cast<std::size_t>(a)], vs[static_cast<std::size_t>(b)]}))]
            .push_back({id, static_cast<std::uint32_t>(e)});
      }
    }
    bits_.assign(subsets_.size(), 0);
  }

  void reset(const Graph& g) {
    copies_ = 0;
    if (subsets_.empty()) return;
    const auto kpairs = edge_order(k_);
    for (std::size_t s = 0; s < subsets_.size(); ++s) {
      std::uint32_t mask = 0;
      for (std::size_t e = 0; e < kpairs.size(); ++e)
        if (g.adjacent(subsets_[s][static_cast<std::size_t>(kpairs[e].first)], subsets_[s][static_cast<std::size_t>(kpairs[e].second)]))
          mask |= 1U << e;
      bits_[s] = mask;
      copies_ += is_copy(mask);
    }
  }

  void toggle(int host_edge) {
    for (const auto& [s, bit] : touches_[static_cast<std::size_t>(host_edge)]) {
      const std::uint32_t before = bits_[s];
      const std::uint32_t after = before ^ (1U << bit);
      bits_[s] = after;
      copies_ += is_copy(after) - is_copy(before);
    }
  }

  std::int64_t copies() const { return copies_; }

 private:
  int is_copy(std::uint32_t mask) const {
    if (!table_.empty()) return table_[mask];
    return std::binary_search(sorted_.begin(), sorted_.end(), mask) ? 1 : 0;
  }

  struct Touch {
    std::uint32_t subset;
    std::uint32_t bit;
  };

  int k_;
  std::vector<std::uint8_t> table_;
  std::vector<std::uint32_t> sorted_;
  std::vector<std::vector<int>> subsets_;
  std::vector<std::vector<Touch>> touches_;
  std::vector<std::uint32_t> bits_;
  std::int64_t copies_ = 0;
};

// ---------------------------------------------------------------------------
// Unlabeled generation

namespace detail {

inline std::uint64_t factorial_u64(int n) {
  std::uint64_t r = 1;
  for (int i = 2; i <= n; ++i) r *= static_cast<std::uint64_t>(i);
  return r;
}

/// Canonical children of a canonical parent, in a fixed order, with their
/// orbit sizes.
template <class Visit>
void augment(const Graph& parent, Visit&& visit) {
  const int m = parent.order();
  const int n = m + 1;
  const std::uint64_t nfact = factorial_u64(n);
  std::set<Graph> seen;
  for (std::uint64_t nb = 0; nb < (std::uint64_t{1} << m); ++nb) {
    const VertexSet nbs(nb);
    // The vertex with the last canonical label has maximum degree.
    const int dv = nbs.size();
    bool too_small = false;
    for (int u = 0; u < m && !too_small; ++u)
      if (parent.degree(u) + (nbs.contains(u) ? 1 : 0) > dv) too_small = true;
    if (too_small) continue;

    Graph g(n);
    for (int u = 0; u < m; ++u)
      for (int w : parent.neighbors(u))
        if (u < w) g.add_edge(u, w);
    for (int u : nbs) g.add_edge(u, m);
    const CanonicalLabeling lab = canonical_labeling(g);
    int last = 0;
    for (int v = 0; v < n; ++v)
      if (lab.position[static_cast<std::size_t>(v)] == n - 1) last = v;
    if (lab.orbit[static_cast<std::size_t>(last)] != lab.orbit[static_cast<std::size_t>(m)]) continue;
    if (!seen.insert(lab.form).second) continue;
    visit(lab.form, nfact / lab.group_size.convert_to<std::uint64_t>());
  }
}

}  // namespace detail

/// Canonical representatives on n vertices, in generation order.
inline std::vector<Graph> unlabeled_level(int n) {
  if (n > kMaxUnlabeledN) throw Error(ErrorCode::TooLarge, "unlabeled generation supports n <= 10");
  std::vector<Graph> level{Graph(0)};
  for (int m = 0; m < n; ++m) {
    std::vector<Graph> next;
    for (const Graph& p : level) detail::augment(p, [&](const Graph& g, std::uint64_t) { next.push_back(g); });
    level = std::move(next);
  }
  return level;
}

/// Shard s of 2^shard_bits takes the parents at level n-1 whose index is
/// congruent to s.
template <class Visit>
void walk_unlabeled_shard(int n, int shard_bits, std::uint64_t shard, const std::vector<Graph>& parents, Visit&& visit) {
  const std::uint64_t shards = std::uint64_t{1} << shard_bits;
  if (shard >= shards) throw Error(ErrorCode::InvalidArgument, "shard index out of range");
  if (n == 0) {
    if (shard == 0) visit(Graph(0), std::uint64_t{1});
    return;
  }
  for (std::size_t i = static_cast<std::size_t>(shard); i < parents.size(); i += static_cast<std::size_t>(shards))
    detail::augment(parents[i], visit);
}

/// visit(g, orbit_size) once per isomorphism class on n <= 10 vertices.
inline void enumerate_unlabeled(int n, const std::function<void(const Graph&, std::uint64_t)>& visit) {
  if (n < 0 || n > kMaxUnlabeledN) throw Error(ErrorCode::TooLarge, "unlabeled generation supports n <= 10");
  const auto parents = n == 0 ? std::vector<Graph>{} : unlabeled_level(n - 1);
  walk_unlabeled_shard(n, 0, 0, parents, visit);
}

// ---------------------------------------------------------------------------
// Census

enum class CensusMode { Labeled, Unlabeled };

inline std::string to_string(CensusMode m) { return m == CensusMode::Labeled ? "labeled" : "unlabeled-weighted"; }

struct CensusConfig {
  int n = 0;
  Graph forbidden;
  TheoremId theorem;
  CensusMode mode = CensusMode::Labeled;
  int shard_bits = 0;

  nlohmann::json to_json() const {
    return {{"command", "census"},
            {"n", n},
            {"forbidden", emit_graph6(forbidden)},
            {"theorem", theorem.str()},
            {"mode", to_string(mode)},
            {"shard_bits", shard_bits}};
  }
};

/// FNV-1a 64 of the compact key-sorted JSON text, as 16 hex digits.
inline std::string config_hash(const nlohmann::json& config) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : config.dump()) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  static const char* hex = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i, h >>= 4) out[static_cast<std::size_t>(i)] = hex[h & 15];
  return out;
}

struct CensusCounts {
  std::uint64_t total = 0;
  std::uint64_t hfree = 0;
  std::uint64_t certifiable = 0;
  /// certified graphs that contain the forbidden graph
  std::uint64_t violations = 0;
  /// certified graphs whose freeness was rechecked from scratch
  std::uint64_t reverified = 0;

  CensusCounts& operator+=(const CensusCounts& o) {
    total += o.total;
    hfree += o.hfree;
    certifiable += o.certifiable;
    violations += o.violations;
    reverified += o.reverified;
    return *this;
  }
  bool operator==(const CensusCounts&) const = default;

  nlohmann::json to_json() const {
    return {{"total", std::to_string(total)},
            {"hfree", std::to_string(hfree)},
            {"certifiable", std::to_string(certifiable)},
            {"violations", std::to_string(violations)},
            {"reverified", std::to_string(reverified)}};
  }
  static CensusCounts from_json(const nlohmann::json& j) {
    CensusCounts c;
    c.total = std::stoull(j.at("total").get<std::string>());
    c.hfree = std::stoull(j.at("hfree").get<std::string>());
    c.certifiable = std::stoull(j.at("certifiable").get<std::string>());
    c.violations = std::stoull(j.at("violations").get<std::string>());
    c.reverified = std::stoull(j.at("reverified").get<std::string>());
    return c;
  }
};

struct ShardRecord {
  std::uint64_t prefix = 0;
  CensusCounts counts;
  bool done = false;
};

struct CensusReport {
  CensusConfig config;
  CensusCounts counts;
  bool complete = false;

  std::string fraction_decimal() const { return decimal_fraction(counts.certifiable, counts.hfree); }
};

struct CensusRunOptions {
  int threads = 1;
  /// manifest file rewritten after every finished shard; empty for none
  std::string manifest_path;
  bool resume = false;
  /// stop once this many shards have finished in this run (0 = no limit)
  std::uint64_t stop_after = 0;
};

namespace detail {

inline void check_census_config(const CensusConfig& c) {
  if (c.n < 0) throw Error(ErrorCode::InvalidArgument, "n must be nonnegative");
  if (c.mode == CensusMode::Labeled && c.n > kMaxLabeledN) {
    throw Error(ErrorCode::TooLarge, "labeled census supports n <= 8; use --mode unlabeled for n <= 10");
  }
  if (c.mode == CensusMode::Unlabeled && c.n > kMaxUnlabeledN) {
    throw Error(ErrorCode::TooLarge, "unlabeled census supports n <= 10");
  }
  const int len = c.theorem.cycle_length();
  if (c.forbidden.order() != len || !is_isomorphic(c.forbidden, cycle(len))) {
    throw Error(ErrorCode::InvalidArgument,
                "theorem " + c.theorem.str() + " certifies C" + std::to_string(len) + "-freeness; forbidden graph does not match");
  }
  const int limit = c.mode == CensusMode::Labeled ? pair_count(c.n) : 20;
  if (c.shard_bits < 0 || c.shard_bits > limit) throw Error(ErrorCode::InvalidArgument, "shard bits out of range");
}

inline std::uint64_t reverify_rate(int n) {
  if (n <= 6) return 1;
  if (n == 7) return 16;
  return 1024;
}

inline nlohmann::json manifest_json(const CensusConfig& c, const std::vector<ShardRecord>& shards) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& s : shards) arr.push_back({{"prefix", s.prefix}, {"counts", s.counts.to_json()}, {"done", s.done}});
  const auto cfg = c.to_json();
  return {{"config_hash", config_hash(cfg)}, {"config", cfg}, {"shards", arr}};
}

inline void write_atomically(const std::string& path, const std::string& text) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error(ErrorCode::Io, "cannot write " + tmp);
    out << text;
    if (!out) throw Error(ErrorCode::Io, "short write to " + tmp);
  }
  std::filesystem::rename(tmp, path);
}

/// Counts for one shard.
inline CensusCounts census_shard(const CensusConfig& c, std::uint64_t shard, const std::vector<Graph>& parents) {
  const WitnessSequence seq = theorem_sequence(c.theorem);
  CensusCounts counts;
  if (c.mode == CensusMode::Labeled) {
    InducedCopyCounter copies(c.n, c.forbidden);
    const std::uint64_t rate = reverify_rate(c.n);
    std::uint64_t index = 0;
    walk_labeled_shard(c.n, c.shard_bits, shard, [&](const Graph& g, int toggled) {
      if (toggled < 0) copies.reset(g);
      else copies.toggle(toggled);
      const bool free = copies.copies() == 0;
      const bool cert = find_certificate(g, seq).has_value();
      ++counts.total;
      if (free) ++counts.hfree;
      if (cert && free) ++counts.certifiable;
      if (cert && !free) ++counts.violations;
      if (cert && index % rate == 0) {
        ++counts.reverified;
        if (free && contains_induced(g, c.forbidden)) ++counts.violations;
      }
      ++index;
    });
  } else {
    walk_unlabeled_shard(c.n, c.shard_bits, shard, parents, [&](const Graph& g, std::uint64_t w) {
      const bool free = !contains_induced(g, c.forbidden);
      const bool cert = find_certificate(g, seq).has_value();
      counts.total += w;
      if (free) counts.hfree += w;
      if (cert) {
        if (free) counts.certifiable += w;
        else counts.violations += w;
        counts.reverified += w;
      }
    });
  }
  return counts;
}

}  // namespace detail

/// Runs (or resumes) a census.  The report is complete unless stop_after cut
/// the run short.
inline CensusReport run_census(const CensusConfig& config, const CensusRunOptions& opt = {}) {
  detail::check_census_config(config);
  const std::uint64_t shard_count = std::uint64_t{1} << config.shard_bits;
  std::vector<ShardRecord> shards(static_cast<std::size_t>(shard_count));
  for (std::uint64_t s = 0; s < shard_count; ++s) shards[static_cast<std::size_t>(s)].prefix = s;

  const std::string hash = config_hash(config.to_json());
  if (opt.resume) {
    std::ifstream in(opt.manifest_path);
    if (!in) throw Error(ErrorCode::Io, "cannot read manifest " + opt.manifest_path);
    nlohmann::json m;
    try {
      in >> m;
    } catch (const nlohmann::json::exception& e) {
      throw Error(ErrorCode::Io, std::string("malformed manifest: ") + e.what());
    }
    if (m.value("config_hash", std::string()) != hash) {
      throw Error(ErrorCode::ConfigMismatch, "manifest was written for a different census configuration");
    }
    for (const auto& s : m.at("shards")) {
      const auto prefix = s.at("prefix").get<std::uint64_t>();
      if (prefix >= shard_count) throw Error(ErrorCode::ConfigMismatch, "manifest shard out of range");
      auto& rec = shards[static_cast<std::size_t>(prefix)];
      rec.done = s.at("done").get<bool>();
      if (rec.done) rec.counts = CensusCounts::from_json(s.at("counts"));
    }
  }

  std::vector<Graph> parents;
  if (config.mode == CensusMode::Unlabeled && config.n > 0) parents = unlabeled_level(config.n - 1);

  std::vector<std::uint64_t> todo;
  for (const auto& s : shards)
    if (!s.done) todo.push_back(s.prefix);

  std::mutex mu;
  std::atomic<std::size_t> next{0};
  std::atomic<std::uint64_t> finished{0};
  std::atomic<bool> stop{false};
  auto save = [&] {
    if (!opt.manifest_path.empty()) detail::write_atomically(opt.manifest_path, detail::manifest_json(config, shards).dump(2) + "\n");
  };
  auto worker = [&] {
    while (!stop.load()) {
      const std::size_t i = next.fetch_add(1);
      if (i >= todo.size()) return;
      const CensusCounts c = detail::census_shard(config, todo[i], parents);
      std::lock_guard<std::mutex> lock(mu);
      if (stop.load()) return;
      auto& rec = shards[static_cast<std::size_t>(todo[i])];
      rec.counts = c;
      rec.done = true;
      save();
      if (opt.stop_after > 0 && finished.fetch_add(1) + 1 >= opt.stop_after) stop.store(true);
    }
  };
  const int threads = std::max(1, std::min<int>(opt.threads, static_cast<int>(std::max<std::size_t>(todo.size(), 1))));
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  if (todo.empty()) save();

  CensusReport report;
  report.config = config;
  report.complete = std::all_of(shards.begin(), shards.end(), [](const ShardRecord& s) { return s.done; });
  for (const auto& s : shards)
    if (s.done) report.counts += s.counts;
  return report;
}

// ---------------------------------------------------------------------------
// Girth >= 5 census

struct Girth5Stats {
  int n = 0;
  CensusMode mode = CensusMode::Unlabeled;
  std::uint64_t total = 0;
  std::uint64_t girth5 = 0;
  std::uint64_t heavy_failures = 0;
  std::map<int, std::uint64_t> s_distribution;
  std::map<int, std::uint64_t> max_degree_distribution;
};

inline Girth5Stats girth5_census(int n, CensusMode mode) {
  Girth5Stats st;
  st.n = n;
  st.mode = mode;
  auto visit = [&](const Graph& g, std::uint64_t w) {
    st.total += w;
    const auto gi = girth(g);
    if (gi && *gi < 5) return;
    st.girth5 += w;
    if (!heavy_degree_check(g)) st.heavy_failures += w;
    st.s_distribution[s_statistic(g)] += w;
    int maxdeg = 0;
    for (int v = 0; v < n; ++v) maxdeg = std::max(maxdeg, g.degree(v));
    st.max_degree_distribution[maxdeg] += w;
  };
  if (mode == CensusMode::Labeled) enumerate_labeled(n, [&](const Graph& g) { visit(g, 1); });
  else enumerate_unlabeled(n, visit);
  return st;
}

}  // namespace wpnlab
