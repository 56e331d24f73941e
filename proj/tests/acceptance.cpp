// Acceptance driver: one line per criterion, nonzero exit on any hard failure.
// SOFT-FAIL marks a measured trend that did not hold; it is data, not a bug.

#include <sys/types.h>
#include <sys/wait.h>
#include <signal.h>
#include <unistd.h>

#include <boost/math/distributions/chi_squared.hpp>

#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <thread>

#include <wpnlab/cli.hpp>
#include <wpnlab/wpnlab.hpp>

#include "oracles.hpp"

using namespace wpnlab;

namespace {

enum class Verdict { Pass, Fail, Soft };

struct Outcome {
  Verdict verdict = Verdict::Pass;
  std::vector<std::string> notes;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      verdict = Verdict::Fail;
      notes.push_back(what);
    }
  }
  void soft(bool ok, const std::string& what) {
    if (!ok && verdict == Verdict::Pass) verdict = Verdict::Soft;
    if (!ok) notes.push_back(what);
  }
  void note(const std::string& s) { notes.push_back(s); }
};

int hard_failures = 0;

template <class F>
void criterion(int id, const std::string& title, F&& body) {
  const auto t0 = std::chrono::steady_clock::now();
  Outcome o;
  try {
    body(o);
  } catch (const std::exception& e) {
    o.require(false, std::string("exception: ") + e.what());
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  const char* tag = o.verdict == Verdict::Pass ? "[PASS]" : o.verdict == Verdict::Fail ? "[FAIL]" : "[SOFT-FAIL]";
  if (o.verdict == Verdict::Fail) ++hard_failures;
  std::ostringstream line;
  line << tag << " " << id << ". " << title << " (" << std::fixed;
  line.precision(1);
  line << secs << " s)";
  std::cout << line.str() << "\n";
  for (const auto& n : o.notes) std::cout << "       " << n << "\n";
  std::cout.flush();
}

std::string run_tool(std::vector<std::string> args, int* code = nullptr) {
  args.insert(args.begin(), "wpn-lab");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int c = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  if (code) *code = c;
  return out.str();
}

CensusConfig census_config(int n, const std::string& theorem, CensusMode mode, int bits) {
  CensusConfig c;
  c.n = n;
  c.theorem = parse_theorem(theorem);
  c.forbidden = cycle(c.theorem.cycle_length());
  c.mode = mode;
  c.shard_bits = bits;
  return c;
}

std::string str(const BigCount& x) { return to_decimal(x); }

// reverified counts spot checks, whose sampling rate differs between modes
bool same_totals(const CensusCounts& a, const CensusCounts& b) {
  return a.total == b.total && a.hfree == b.hfree && a.certifiable == b.certifiable && a.violations == b.violations;
}

}  // namespace

int main() {
  std::cout << "wpn-lab acceptance\n";

  criterion(1, "wpn of C3..C14", [](Outcome& o) {
    // C_{2l-1} and C_{2l} both have wpn l-1 for l >= 3; C3..C6 have 2
    for (int k = 3; k <= 14; ++k) {
      const int expected = k <= 6 ? 2 : (k + 1) / 2 - 1;
      const int got = wpn(cycle(k));
      o.require(got == expected, "wpn(C" + std::to_string(k) + ") = " + std::to_string(got) + ", expected " +
                                     std::to_string(expected));
    }
  });

  criterion(2, "witnessing validity of the theorem sequences", [](Outcome& o) {
    for (const char* t : {"c6", "c8", "c10", "c2l:6"}) {
      const TheoremId id = parse_theorem(t);
      o.require(is_witnessing_sequence(cycle(id.cycle_length()), theorem_sequence(id)),
                std::string(t) + " sequence is not witnessing");
    }
    for (int len = 6; len <= 14; len += 2) {
      const Graph h = cycle(len);
      const int k = wpn(h);
      const auto name = "C" + std::to_string(len);
      // the cycle does partition into k stable sets, so that sequence cannot witness
      o.require(!is_witnessing_sequence(h, WitnessSequence(static_cast<std::size_t>(k), FamilySpec::named(FamilyName::Stable))),
                "[Stable x wpn] witnesses " + name);
      // cliques of an even cycle have at most two vertices, so k cliques never cover it
      const bool cliques = is_witnessing_sequence(h, WitnessSequence(static_cast<std::size_t>(k), FamilySpec::named(FamilyName::Clique)));
      o.require(cliques == !clique_stable_partition_exists(h, k, 0), "[Clique x wpn] disagrees with partition search on " + name);
    }
  });

  criterion(3, "really canonical sequences of C6..C12 all classify", [](Outcome& o) {
    for (int len : {6, 8, 10, 12}) {
      const Graph h = cycle(len);
      const int k = len / 2 - 1;
      const auto t0 = std::chrono::steady_clock::now();
      const auto result = enumerate_really_canonical_sequences(h, k, 2'000'000'000ULL);
      const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
      const auto name = "C" + std::to_string(len);
      o.require(!result.budget_exhausted, name + ": budget exhausted");
      int no_match = 0, unrestricted = 0;
      std::string first_miss;
      for (const auto& seq : result.sequences) {
        if (classify_sequence(h, seq).case_number == 0) {
          if (no_match++ == 0) {
            for (const auto& f : seq) first_miss += (first_miss.empty() ? "" : ", ") + f.describe();
          }
        }
        for (const auto& f : seq) unrestricted += !is_restricted(f);
      }
      std::ostringstream msg;
      msg << name << ": " << result.sequences.size() << " sequences, " << result.nodes_expanded << " nodes, " << no_match
          << " unmatched, " << unrestricted << " unrestricted slots (" << std::fixed;
      msg.precision(1);
      msg << secs << " s)";
      o.note(msg.str());
      o.require(no_match == 0, name + ": unmatched sequence [" + first_miss + "]");
      o.require(unrestricted == 0, name + ": slot fails the restricted test");
    }
  });

  criterion(4, "cycle partition claims for l = 6, 7", [](Outcome& o) {
    for (int l : {6, 7}) {
      const auto report = verify_cycle_partition_claims(l);
      o.require(!report.checks.empty(), "no checks for l = " + std::to_string(l));
      for (const auto& c : report.checks) {
        if (c.passed()) continue;
        std::string params;
        for (const auto& [k, v] : c.parameters) params += " " + k + "=" + v;
        o.require(false, "l=" + std::to_string(l) + " claim " + c.claim + params);
      }
      o.note("l=" + std::to_string(l) + ": " + std::to_string(report.checks.size()) + " checks");
    }
  });

  criterion(5, "exact counts against brute force", [](Outcome& o) {
    for (int n = 0; n <= 10; ++n)
      o.require(bell(static_cast<unsigned>(n)) == oracle::bell_by_growth_strings(n), "bell(" + std::to_string(n) + ")");
    for (int n = 0; n <= 6; ++n) {
      std::uint64_t f[4] = {0, 0, 0, 0}, co = 0;
      oracle::for_each_labeled(n, [&](const oracle::Mat& g) {
        f[1] += oracle::stars_triangles_co(g);
        f[2] += oracle::stars_cliques_co(g);
        f[3] += oracle::split_join_components_co(g);
        co += !oracle::has_p4(g);
      });
      for (int i = 1; i <= 3; ++i)
        o.require(f_star(i, static_cast<unsigned>(n)) == f[i], "f*_" + std::to_string(i) + "(" + std::to_string(n) + ")");
      o.require(labeled_cograph_count(static_cast<unsigned>(n)) == co, "cographs(" + std::to_string(n) + ")");
    }
    o.require(f_star(1, 4) == 30 && f_star(3, 4) == 37, "spot values f*_1(4), f*_3(4)");
    o.require(labeled_cograph_count(3) == 8 && labeled_cograph_count(4) == 52, "cograph spot values");
  });

  criterion(6, "growth inequalities for 8 <= n <= 200", [](Outcome& o) {
    for (int i = 1; i <= 3; ++i) {
      BigCount prev = f_star(i, 7);
      for (unsigned n = 8; n <= 200; ++n) {
        const BigCount f = f_star(i, n), next = f_star(i, n + 1);
        const auto where = "i=" + std::to_string(i) + " n=" + std::to_string(n);
        o.require(bell(n) <= f && f <= pow2(n) * bell(n), "sandwich " + where);
        o.require(prev <= f, "monotonicity " + where);
        const auto g = growth_check(f, next, n);
        o.require(g.lower, "lower growth " + where);
        o.require(g.upper, "upper growth " + where);
        prev = f;
      }
    }
    for (unsigned n = 1; n <= 100; ++n) {
      const BigCount base = 2 * n;
      BigCount bound = 1;
      for (unsigned t = 0; t < 2 * n; ++t) bound *= base;
      o.require(labeled_cograph_count(n) < bound, "cograph bound n=" + std::to_string(n));
    }
  });

  criterion(7, "census ground truths", [](Outcome& o) {
    CensusRunOptions opt;
    opt.threads = static_cast<int>(std::max(1U, std::thread::hardware_concurrency()));
    const auto c6 = run_census(census_config(6, "c6", CensusMode::Labeled, 4), opt);
    o.require(c6.counts.hfree == 32708, "C6-free labeled n=6: " + std::to_string(c6.counts.hfree));
    for (int n = 1; n <= 7; ++n)
      for (const char* t : {"c6", "c8"}) {
        const auto a = run_census(census_config(n, t, CensusMode::Labeled, n >= 6 ? 4 : 0), opt);
        const auto b = run_census(census_config(n, t, CensusMode::Unlabeled, 0), opt);
        o.require(same_totals(a.counts, b.counts), std::string(t) + " labeled/unlabeled differ at n=" + std::to_string(n));
      }
    const auto t0 = std::chrono::steady_clock::now();
    const auto c8 = run_census(census_config(8, "c8", CensusMode::Labeled, 6), opt);
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const auto bound = c2l_lower_bound(8, 4);
    o.require(c8.complete, "n=8 census incomplete");
    o.require(c8.counts.violations == 0, "n=8 certificate violations");
    o.require(bound.at_most(BigCount(c8.counts.hfree)), "C8-free count below the bound");
    std::ostringstream msg;
    msg << "C8-free labeled n=8: " << c8.counts.hfree << " vs 2^(" << bound.exp_num << "/" << bound.exp_den << ") * "
        << str(bound.factor) << " (" << std::fixed;
    msg.precision(0);
    msg << secs << " s)";
    o.note(msg.str());
  });

  criterion(8, "certificate sanity and certifiable fraction", [](Outcome& o) {
    const TheoremId c6 = parse_theorem("c6");
    o.require(!theorem_certifier(cycle(6), c6).has_value(), "C6 certified");
    o.require(!theorem_certifier(disjoint_union(clique(3), clique(3)), c6).has_value(), "2K3 certified");
    std::vector<CensusCounts> counts;
    for (int n = 5; n <= 8; ++n) {
      const auto r = run_census(census_config(n, "c6", n <= 7 ? CensusMode::Labeled : CensusMode::Unlabeled, 0));
      o.require(r.counts.violations == 0, "violations at n=" + std::to_string(n));
      counts.push_back(r.counts);
      o.note("n=" + std::to_string(n) + ": " + std::to_string(r.counts.certifiable) + "/" + std::to_string(r.counts.hfree) +
             " = " + r.fraction_decimal());
    }
    for (int n : {6, 7}) {
      const auto& c = counts[static_cast<std::size_t>(n - 5)];
      o.require(c.certifiable > 0 && c.certifiable < c.hfree, "fraction not strictly inside (0,1) at n=" + std::to_string(n));
    }
    for (std::size_t i = 0; i + 1 < counts.size(); ++i) {
      // a/b <= c/d  <=>  a*d <= c*b
      const BigCount lhs = BigCount(counts[i].certifiable) * counts[i + 1].hfree;
      const BigCount rhs = BigCount(counts[i + 1].certifiable) * counts[i].hfree;
      o.soft(lhs <= rhs, "trend: fraction decreases from n=" + std::to_string(i + 5) + " to n=" + std::to_string(i + 6));
    }
  });

  criterion(9, "girth five statistics", [](Outcome& o) {
    for (int n = 1; n <= 8; ++n) {
      const auto st = girth5_census(n, CensusMode::Unlabeled);
      o.require(st.heavy_failures == 0, "heavy degree failure at n=" + std::to_string(n));
    }
    o.require(s_statistic(cycle(5)) == 1, "s(C5) = " + std::to_string(s_statistic(cycle(5))));
    int checked = 0;
    for (int n = 0; n <= 8; ++n)
      for (const Graph& g : unlabeled_level(n)) {
        ++checked;
        if (s_statistic(g) != oracle::s_statistic(oracle::mat(g))) o.require(false, "s mismatch on " + emit_graph6(g));
      }
    o.note(std::to_string(checked) + " graphs checked against the subset oracle");
  });

  criterion(10, "partition sampler", [](Outcome& o) {
    {
      PartitionSampler s(6, 20240601);
      std::map<std::vector<std::vector<int>>, std::uint64_t> counts;
      const std::uint64_t samples = 1'000'000;
      for (std::uint64_t t = 0; t < samples; ++t) ++counts[s.sample().blocks];
      o.require(counts.size() == 203, "saw " + std::to_string(counts.size()) + " of 203 partitions");
      const double expected = static_cast<double>(samples) / 203.0;
      double stat = 0;
      for (const auto& [p, c] : counts) stat += (static_cast<double>(c) - expected) * (static_cast<double>(c) - expected) / expected;
      stat += static_cast<double>(203 - counts.size()) * expected;
      const boost::math::chi_squared dist(202);
      const double p = boost::math::cdf(boost::math::complement(dist, stat));
      std::ostringstream msg;
      msg << "chi-square " << stat << " on 202 df, p = " << p;
      o.note(msg.str());
      o.require(p > 0.001, "uniformity rejected");
    }
    {
      PartitionSampler s(10, 77);
      const int samples = 200'000;
      double sum = 0, sq = 0;
      for (int t = 0; t < samples; ++t) {
        const double b = static_cast<double>(s.sample().blocks.size());
        sum += b;
        sq += b * b;
      }
      const double mean = sum / samples;
      const double var = (sq - samples * mean * mean) / (samples - 1);
      const double se = std::sqrt(var / samples);
      const double target = 678570.0 / 115975.0 - 1;  // B11/B10 - 1
      std::ostringstream msg;
      msg << "mean blocks at n=10: " << mean << " vs " << target << " (se " << se << ")";
      o.note(msg.str());
      o.require(bell(11) == 678570 && bell(10) == 115975, "Bell constants");
      o.require(std::abs(mean - target) <= 3 * se, "mean block count outside 3 standard errors");
    }
  });

  criterion(11, "determinism and kill-resume", [](Outcome& o) {
    const std::vector<std::vector<std::string>> commands = {
        {"census", "--n", "7", "--forbid", "EhEG", "--theorem", "c6", "--shards", "32"},
        {"census", "--n", "8", "--forbid", "GhCGKC", "--theorem", "c8", "--mode", "unlabeled", "--shards", "16"},
        {"sequences", "--graph", "GhCGKC", "--k", "3"},
        {"verify-claims", "--cycle", "12"},
        {"sample-partitions", "--n", "40", "--samples", "200", "--seed", "9", "--stats"},
        {"girth5", "--n", "7"},
        {"certify", "--theorem", "c8", "--format", "json", "F~~~w"},
    };
    for (const auto& base : commands) {
      std::string first;
      for (const char* threads : {"1", "4", "8"}) {
        auto args = base;
        args.insert(args.end(), {"--threads", threads});
        int code = 0;
        const std::string out = run_tool(args, &code);
        o.require(code == 0, base[0] + " exited " + std::to_string(code));
        if (first.empty()) first = out;
        else o.require(out == first, base[0] + " output differs at --threads " + threads);
      }
    }

    // kill a census process mid-run, then resume from its manifest
    const auto cfg = census_config(7, "c8", CensusMode::Labeled, 7);
    const auto full = run_census(cfg);
    const auto manifest = (std::filesystem::temp_directory_path() / ("wpnlab_accept_" + std::to_string(getpid()) + ".json")).string();
    std::filesystem::remove(manifest);
    const pid_t child = fork();
    if (child == 0) {
      CensusRunOptions opt;
      opt.manifest_path = manifest;
      run_census(cfg, opt);
      _exit(0);
    }
    std::size_t done_at_kill = 0;
    bool killed = false;
    for (int polls = 0; polls < 200000; ++polls) {
      std::this_thread::sleep_for(std::chrono::milliseconds(2));
      std::ifstream in(manifest);
      if (!in) continue;
      nlohmann::json m;
      try {
        in >> m;
      } catch (const nlohmann::json::exception&) {
        continue;
      }
      std::size_t done = 0;
      for (const auto& s : m.at("shards")) done += s.at("done").get<bool>();
      if (done >= 3) {
        kill(child, SIGKILL);
        killed = true;
        done_at_kill = done;
        break;
      }
    }
    int status = 0;
    waitpid(child, &status, 0);
    o.require(killed && WIFSIGNALED(status), "census child was not killed mid-run");
    CensusRunOptions opt;
    opt.manifest_path = manifest;
    opt.resume = true;
    const auto resumed = run_census(cfg, opt);
    o.require(resumed.complete && resumed.counts == full.counts, "resumed census differs from uninterrupted run");
    o.note("killed after " + std::to_string(done_at_kill) + " of 128 shards; resumed counts match");
    std::filesystem::remove(manifest);
  });

  std::cout << (hard_failures == 0 ? "all criteria passed" : std::to_string(hard_failures) + " criteria failed") << "\n";
  return hard_failures == 0 ? 0 : 1;
}
