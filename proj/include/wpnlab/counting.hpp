#pragma once

// Exact counts: Bell numbers, labeled counts of the three star/clique-type
// complement families, labeled cographs, the cycle-free lower bound, and a
// uniform sampler for set partitions.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <mutex>
#include <numeric>
#include <random>
#include <vector>

#include "bigcount.hpp"
#include "error.hpp"
#include "graph.hpp"

namespace wpnlab {

namespace detail {

class BellCache {
 public:
  BigCount get(unsigned n) {
    std::lock_guard<std::mutex> lock(mu_);
    // Bell triangle: each row starts with the last entry of the previous
    // row; B_n is the first entry of row n.
    while (values_.size() <= n) {
      std::vector<BigCount> next{row_.back()};
      next.reserve(row_.size() + 1);
      for (const auto& x : row_) next.push_back(next.back() + x);
      values_.push_back(next.front());
      row_ = std::move(next);
    }
    return values_[n];
  }

 private:
  std::mutex mu_;
  std::vector<BigCount> row_{BigCount(1)};
  std::vector<BigCount> values_{BigCount(1)};
};

inline BellCache& bell_cache() {
  static BellCache cache;
  return cache;
}

}  // namespace detail

inline BigCount bell(unsigned n) { return detail::bell_cache().get(n); }

/// Labeled connected complement-components allowed in family i on s vertices.
inline BigCount component_count(int i, unsigned s) {
  if (s == 0) return 0;
  switch (i) {
    case 1:  // stars and triangles
      if (s <= 2) return 1;
      if (s == 3) return 4;
      return s;
    case 2:  // stars and cliques
      if (s <= 2) return 1;
      if (s == 3) return 4;
      return s + 1;
    case 3:  // joins of a clique and a stable set
      if (s == 1) return 1;
      return pow2(s) - s - 1;
    default: throw Error(ErrorCode::InvalidArgument, "family index must be 1, 2 or 3");
  }
}

/// a(n) = sum_s C(n-1, s-1) c(s) a(n-s): the component containing vertex 1
/// has s vertices.
inline std::vector<BigCount> component_convolution(unsigned n, const std::vector<BigCount>& c) {
  std::vector<BigCount> a(n + 1);
  a[0] = 1;
  for (unsigned m = 1; m <= n; ++m) {
    const auto row = binomial_row(m - 1);
    BigCount sum = 0;
    for (unsigned s = 1; s <= m; ++s) sum += row[s - 1] * c[s] * a[m - s];
    a[m] = sum;
  }
  return a;
}

inline BigCount f_star(int i, unsigned n) {
  std::vector<BigCount> c(n + 1);
  for (unsigned s = 1; s <= n; ++s) c[s] = component_count(i, s);
  return component_convolution(n, c)[n];
}

/// Labeled P4-free graphs.  A cograph on >= 2 vertices is disconnected or has
/// a disconnected complement, never both, so connected ones (n >= 2) are
/// exactly the complements of disconnected ones: conn(n) = total(n) / 2.
inline std::vector<BigCount> labeled_cograph_counts(unsigned n) {
  std::vector<BigCount> total(n + 1), conn(n + 1);
  total[0] = 1;
  if (n >= 1) total[1] = conn[1] = 1;
  for (unsigned m = 2; m <= n; ++m) {
    const auto row = binomial_row(m - 1);
    // disconnected(m) = sum over the component of vertex 1 (s < m)
    BigCount disconnected = 0;
    for (unsigned s = 1; s < m; ++s) disconnected += row[s - 1] * conn[s] * total[m - s];
    total[m] = 2 * disconnected;
    conn[m] = disconnected;
  }
  return total;
}

inline BigCount labeled_cograph_count(unsigned n) { return labeled_cograph_counts(n)[n]; }

// ---------------------------------------------------------------------------
// Lower bound 2^{(1 - 1/(l-1)) C(n,2)} B_{ceil(n/(l-1))}, exactly

struct PowerBound {
  /// 2^{exp_num / exp_den} * factor, exp_num/exp_den in lowest terms
  std::uint64_t exp_num = 0;
  std::uint64_t exp_den = 1;
  BigCount factor = 1;

  bool is_integer() const { return exp_den == 1; }
  BigCount value() const {
    if (!is_integer()) throw Error(ErrorCode::InvalidArgument, "bound has a fractional exponent");
    return pow2(exp_num) * factor;
  }
  /// count >= bound, decided by count^den >= 2^num * factor^den
  bool at_most(const BigCount& count) const {
    BigCount lhs = 1, rhs = 1;
    for (std::uint64_t i = 0; i < exp_den; ++i) {
      lhs *= count;
      rhs *= factor;
    }
    return lhs >= (rhs << static_cast<unsigned>(exp_num));
  }
};

inline PowerBound c2l_lower_bound(unsigned n, unsigned l) {
  if (l <= 3) throw Error(ErrorCode::InvalidArgument, "lower bound needs l > 3");
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "lower bound needs n >= 1");
  const std::uint64_t pairs = std::uint64_t{n} * (n - 1) / 2;
  std::uint64_t num = (l - 2) * pairs;
  std::uint64_t den = l - 1;
  const std::uint64_t g = std::gcd(num, den);
  if (g > 0) {
    num /= g;
    den /= g;
  }
  PowerBound b;
  b.exp_num = num;
  b.exp_den = num == 0 ? 1 : den;
  b.factor = bell((n + l - 2) / (l - 1));
  return b;
}

// ---------------------------------------------------------------------------
// Exact inequality helpers

/// Sign of x * log2(n) - y for positive integers, decided exactly by bounding
/// log2(n) between (bits(n^(2^j)) - 1) / 2^j and bits(n^(2^j)) / 2^j.
inline int compare_times_log2(const BigCount& x, unsigned n, const BigCount& y) {
  if (n == 0) throw Error(ErrorCode::InvalidArgument, "log of zero");
  if ((n & (n - 1)) == 0) {  // exact power of two
    const BigCount lhs = x * static_cast<unsigned>(std::countr_zero(n));
    return lhs < y ? -1 : (lhs > y ? 1 : 0);
  }
  BigCount power = n;
  for (unsigned j = 0; j < 64; ++j) {
    const BigCount scale = pow2(j);
    const auto bits = bit_length(power);
    // (bits - 1) / 2^j < log2 n < bits / 2^j for non-powers of two
    if (x * (bits - 1) >= y * scale) return 1;
    if (x * bits <= y * scale) return -1;
    power *= power;
  }
  throw Error(ErrorCode::InvalidArgument, "log comparison did not separate");
}

struct GrowthCheck {
  bool lower = false;  // f(n+1) >= n f(n) / (16 log2 n)
  bool upper = false;  // f(n+1) <= 4 n f(n)
};

inline GrowthCheck growth_check(const BigCount& fn, const BigCount& fn1, unsigned n) {
  GrowthCheck r;
  r.lower = compare_times_log2(16 * fn1, n, fn * n) >= 0;
  r.upper = fn1 <= 4 * fn * n;
  return r;
}

// ---------------------------------------------------------------------------
// Uniform set partitions

struct SetPartition {
  std::vector<std::vector<int>> blocks;
  int n = 0;
};

struct PartitionStats {
  int blocks = 0;
  int nonsingletons = 0;
  int heavy_vertices = 0;  // elements in blocks with more than t elements
};

inline PartitionStats partition_stats(const SetPartition& p, double t) {
  PartitionStats s;
  for (const auto& b : p.blocks) {
    ++s.blocks;
    if (b.size() > 1) ++s.nonsingletons;
    if (static_cast<double>(b.size()) > t) s.heavy_vertices += static_cast<int>(b.size());
  }
  return s;
}

/// Seeded uniform sampler over the B_n partitions of {0, ..., n-1}.
///
/// Urn method: draw U = u with probability u^n / (e u! B_n), throw the n
/// elements independently into U urns and keep the nonempty ones.  The urn
/// count series is truncated at the first u beyond the mode whose remaining
/// mass is below 2^-80 of the total.
class PartitionSampler {
 public:
  static constexpr int kMaxN = 2000;

  PartitionSampler(int n, std::uint64_t seed) : n_(n), rng_(seed) {
    if (n < 1) throw Error(ErrorCode::InvalidArgument, "sampler needs n >= 1");
    if (n > kMaxN) throw Error(ErrorCode::TooLarge, "sampler limited to n <= 2000");
    build_table();
  }

  int max_urns() const { return static_cast<int>(cumulative_.size()); }

  SetPartition sample() {
    const int urns = draw_urn_count();
    std::vector<std::vector<int>> bins(static_cast<std::size_t>(urns));
    for (int e = 0; e < n_; ++e) bins[static_cast<std::size_t>(bounded(static_cast<std::uint64_t>(urns)))].push_back(e);
    SetPartition p;
    p.n = n_;
    for (auto& b : bins)
      if (!b.empty()) p.blocks.push_back(std::move(b));
    std::sort(p.blocks.begin(), p.blocks.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    return p;
  }

 private:
  void build_table() {
    const double ln_total = 1.0 + ln_big(bell(static_cast<unsigned>(n_)));
    const double cut = -80.0 * std::log(2.0) - 2.0;
    auto ln_term = [&](int u) { return n_ * std::log(static_cast<double>(u)) - std::lgamma(u + 1.0); };
    int umax = 1;
    // Past the point where successive terms at least halve, the tail is at
    // most twice its first term.
    while (true) {
      const int u = umax + 1;
      const double ratio = ln_term(u + 1) - ln_term(u);
      if (ratio < -std::log(2.0) && ln_term(u) - ln_total < cut) break;
      ++umax;
    }
    // w_u = u^n * umax! / u!, integral for u <= umax
    std::vector<BigCount> w(static_cast<std::size_t>(umax) + 1);
    BigCount tail = 1;  // umax! / u!
    for (int u = umax; u >= 1; --u) {
      BigCount p = 1;
      for (int i = 0; i < n_; ++i) p *= u;
      w[static_cast<std::size_t>(u)] = p * tail;
      tail *= u;
    }
    BigCount acc = 0;
    for (int u = 1; u <= umax; ++u) {
      acc += w[static_cast<std::size_t>(u)];
      cumulative_.push_back(acc);
    }
    total_bits_ = bit_length(acc);
  }

  static double ln_big(const BigCount& x) {
    const auto bits = bit_length(x);
    if (bits <= 60) return std::log(x.convert_to<double>());
    const unsigned shift = static_cast<unsigned>(bits - 60);
    return std::log(BigCount(x >> shift).convert_to<double>()) + shift * std::log(2.0);
  }

  /// Uniform in [0, bound) by masking and rejection; bound > 0.
  std::uint64_t bounded(std::uint64_t bound) {
    if (bound == 1) return 0;
    const int bits = 64 - std::countl_zero(bound - 1);
    const std::uint64_t mask = bits == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << bits) - 1;
    while (true) {
      const std::uint64_t x = rng_() & mask;
      if (x < bound) return x;
    }
  }

  int draw_urn_count() {
    const BigCount& total = cumulative_.back();
    while (true) {
      BigCount r = 0;
      std::size_t have = 0;
      while (have < total_bits_) {
        r = (r << 64) | BigCount(rng_());
        have += 64;
      }
      r >>= static_cast<unsigned>(have - total_bits_);
      if (r >= total) continue;
      const auto it = std::upper_bound(cumulative_.begin(), cumulative_.end(), r);
      return static_cast<int>(it - cumulative_.begin()) + 1;
    }
  }

  int n_;
  std::mt19937_64 rng_;
  std::vector<BigCount> cumulative_;
  std::size_t total_bits_ = 0;
};

inline SetPartition sample_uniform_partition(int n, std::uint64_t seed) { return PartitionSampler(n, seed).sample(); }

}  // namespace wpnlab
