#pragma once

// The wpn-lab command line.  run_cli() is the whole program; the binary in
// tools/ only forwards argv and the standard streams.

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "census.hpp"
#include "counting.hpp"
#include "cycle_claims.hpp"
#include "error.hpp"
#include "graph6.hpp"
#include "sequences.hpp"
#include "witnessing.hpp"

#ifndef WPNLAB_VERSION
#define WPNLAB_VERSION "0.0.0"
#endif

namespace wpnlab {

inline constexpr const char* kToolName = "wpn-lab";

enum ExitCode : int { kExitOk = 0, kExitFailure = 1, kExitPrecondition = 2, kExitIncomplete = 3 };

namespace cli {

using nlohmann::json;

/// Graph argument: "-" for stdin, an existing file (first non-blank line),
/// or inline graph6 / edge-list text.
inline Graph read_graph_arg(const std::string& arg) {
  auto first_line = [](std::istream& in) {
    std::string line;
    while (std::getline(in, line)) {
      if (!line.empty() && line.back() == '\r') line.pop_back();
      if (line.find_first_not_of(" \t") != std::string::npos) return line;
    }
    throw Error(ErrorCode::BadLength, "no graph in input");
  };
  if (arg == "-") return parse_graph(first_line(std::cin));
  std::error_code ec;
  if (std::filesystem::is_regular_file(arg, ec)) {
    std::ifstream in(arg);
    if (!in) throw Error(ErrorCode::Io, "cannot read " + arg);
    return parse_graph(first_line(in));
  }
  return parse_graph(arg);
}

inline std::vector<Graph> read_graph_list(const std::string& csv) {
  std::vector<Graph> out;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(read_graph_arg(item));
  if (out.empty()) throw Error(ErrorCode::InvalidArgument, "empty graph list");
  return out;
}

inline json partition_json(const Partition& p) {
  json parts = json::array();
  for (int i = 0; i < p.arity; ++i) {
    json part = json::array();
    for (int v : p.part(i)) part.push_back(v);
    parts.push_back(part);
  }
  return {{"part_of", p.part_of}, {"parts", parts}};
}

inline json sequence_json(const WitnessSequence& seq) {
  json out = json::array();
  for (const auto& f : seq) out.push_back(f.describe());
  return out;
}

inline std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

struct Output {
  std::string format;
  std::string path;
  std::ostream* stdout_stream = nullptr;

  void write(const std::string& text) const {
    if (path.empty()) {
      *stdout_stream << text;
      return;
    }
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw Error(ErrorCode::Io, "cannot write " + path);
    out << text;
  }
};

/// Wraps command fields with the tool identity and the hash of `config`.
inline json envelope(const json& config, json body) {
  body["tool"] = kToolName;
  body["version"] = WPNLAB_VERSION;
  body["config"] = config;
  body["config_hash"] = config_hash(config);
  return body;
}

inline std::string dump(const json& j) { return j.dump(2) + "\n"; }

inline int threads_from_env(int fallback) {
  if (const char* env = std::getenv("WPNLAB_THREADS")) {
    try {
      const int t = std::stoi(env);
      if (t >= 1) return t;
    } catch (const std::exception&) {
    }
    throw Error(ErrorCode::InvalidArgument, std::string("WPNLAB_THREADS must be a positive integer, got '") + env + "'");
  }
  return fallback;
}

inline CensusMode parse_mode(const std::string& s) {
  if (s == "labeled") return CensusMode::Labeled;
  if (s == "unlabeled" || s == "unlabeled-weighted") return CensusMode::Unlabeled;
  throw Error(ErrorCode::InvalidArgument, "mode must be labeled or unlabeled");
}

inline std::string format_or(const std::string& chosen, const char* fallback) {
  return chosen.empty() ? fallback : chosen;
}

// ---------------------------------------------------------------------------
// Subcommands

inline int cmd_wpn(const std::string& graph_arg, const Output& out) {
  const Graph g = read_graph_arg(graph_arg);
  const int k = wpn(g);
  const json config = {{"command", "wpn"}, {"graph", emit_graph6(g)}};
  if (out.format == "text") out.write(std::to_string(k) + "\n");
  else if (out.format == "csv") out.write("graph,wpn\n" + csv_escape(emit_graph6(g)) + "," + std::to_string(k) + "\n");
  else out.write(dump(envelope(config, {{"command", "wpn"}, {"graph", emit_graph6(g)}, {"order", g.order()}, {"wpn", k}})));
  return kExitOk;
}

inline int cmd_certify(const std::string& theorem_arg, const std::string& graph_arg, const Output& out) {
  const TheoremId t = parse_theorem(theorem_arg);
  const Graph g = read_graph_arg(graph_arg);
  const auto cert = theorem_certifier(g, t);
  const json config = {{"command", "certify"}, {"theorem", t.str()}, {"graph", emit_graph6(g)}};
  if (out.format == "text") {
    out.write(cert ? partition_json(cert->partition)["parts"].dump() + "\n" : std::string("NONE\n"));
  } else if (out.format == "csv") {
    std::string text = "vertex,part\n";
    if (cert)
      for (int v = 0; v < g.order(); ++v)
        text += std::to_string(v) + "," + std::to_string(cert->partition.part_of[static_cast<std::size_t>(v)]) + "\n";
    out.write(text);
  } else {
    json body = {{"command", "certify"},
                 {"theorem", t.str()},
                 {"graph", emit_graph6(g)},
                 {"sequence", sequence_json(theorem_sequence(t))},
                 {"certified", cert.has_value()},
                 {"partition", cert ? partition_json(cert->partition) : json(nullptr)}};
    out.write(dump(envelope(config, body)));
  }
  return kExitOk;
}

inline int cmd_sequences(const std::string& graph_arg, int k, std::uint64_t budget, const Output& out) {
  const Graph h = read_graph_arg(graph_arg);
  if (k == 0) k = wpn(h);
  const auto result = enumerate_really_canonical_sequences(h, k, budget);
  const bool even_cycle = h.order() >= 6 && h.order() % 2 == 0 && is_isomorphic(h, cycle(h.order()));
  const json config = {{"command", "sequences"}, {"graph", emit_graph6(h)}, {"k", k}, {"budget", budget}};

  json rows = json::array();
  for (const auto& seq : result.sequences) {
    json restricted = json::array();
    for (const auto& f : seq) restricted.push_back(is_restricted(f));
    json row = {{"slots", sequence_json(seq)}, {"restricted", restricted}};
    row["classification"] = even_cycle ? json(classify_sequence(h, seq).label) : json(nullptr);
    rows.push_back(row);
  }
  const std::string status = result.budget_exhausted ? "budget-exhausted" : "complete";

  if (out.format == "text") {
    std::string text;
    for (const auto& row : rows) {
      std::string line = row["classification"].is_null() ? "-" : row["classification"].get<std::string>();
      for (const auto& s : row["slots"]) line += "  " + s.get<std::string>();
      text += line + "\n";
    }
    if (result.budget_exhausted) text += "# budget exhausted\n";
    out.write(text);
  } else if (out.format == "csv") {
    std::string text = "index,classification,slot,family,restricted\n";
    for (std::size_t i = 0; i < rows.size(); ++i)
      for (std::size_t j = 0; j < rows[i]["slots"].size(); ++j) {
        const auto& cls = rows[i]["classification"];
        text += std::to_string(i) + "," + (cls.is_null() ? "" : cls.get<std::string>()) + "," + std::to_string(j) + "," +
                csv_escape(rows[i]["slots"][j].get<std::string>()) + "," +
                (rows[i]["restricted"][j].get<bool>() ? "true" : "false") + "\n";
      }
    out.write(text);
  } else {
    json body = {{"command", "sequences"},
                 {"graph", emit_graph6(h)},
                 {"k", k},
                 {"status", status},
                 {"nodes_expanded", result.nodes_expanded},
                 {"sequences", rows}};
    out.write(dump(envelope(config, body)));
  }
  return result.budget_exhausted ? kExitIncomplete : kExitOk;
}

inline int cmd_verify_claims(int cycle_length, const Output& out) {
  if (cycle_length % 2 != 0 || cycle_length < 12 || cycle_length > kMaxVertices) {
    throw Error(ErrorCode::InvalidArgument, "--cycle must be an even length 2l with 6 <= l <= 32");
  }
  const ClaimReport report = verify_cycle_partition_claims(cycle_length / 2);
  const Graph c = cycle(cycle_length);
  const json config = {{"command", "verify-claims"}, {"cycle", cycle_length}};

  json checks = json::array();
  for (const auto& ch : report.checks) {
    json params = json::object();
    for (const auto& [key, value] : ch.parameters) params[key] = value;
    json row = {{"claim", ch.claim},
                {"parameters", params},
                {"status", ch.found ? "found" : "not-found"},
                {"expected", ch.expected ? "found" : "not-found"},
                {"passed", ch.passed()}};
    if (ch.witness) row["witness"] = partition_json(*ch.witness);
    checks.push_back(row);
  }

  if (out.format == "text" || out.format == "csv") {
    std::string text = out.format == "csv" ? "claim,parameters,status,passed\n" : "";
    for (const auto& row : checks) {
      std::string params;
      for (const auto& [key, value] : row["parameters"].items()) {
        if (!params.empty()) params += ' ';
        params += key + "=" + value.get<std::string>();
      }
      const std::string status = row["status"].get<std::string>();
      const bool ok = row["passed"].get<bool>();
      if (out.format == "csv") text += row["claim"].get<std::string>() + "," + params + "," + status + "," + (ok ? "true" : "false") + "\n";
      else text += (ok ? "ok    " : "FAIL  ") + row["claim"].get<std::string>() + "  " + params + "  " + status + "\n";
    }
    out.write(text);
  } else {
    json body = {{"command", "verify-claims"},
                 {"graph", emit_graph6(c)},
                 {"l", report.l},
                 {"all_passed", report.all_passed()},
                 {"checks", checks}};
    out.write(dump(envelope(config, body)));
  }
  return kExitOk;
}

inline int cmd_count(const std::string& fn, int n, const Output& out) {
  if (n < 0) throw Error(ErrorCode::InvalidArgument, "n must be nonnegative");
  if (n > 10000) throw Error(ErrorCode::TooLarge, "count limited to n <= 10000");
  const auto un = static_cast<unsigned>(n);
  BigCount value;
  if (fn == "bell") value = bell(un);
  else if (fn == "f1") value = f_star(1, un);
  else if (fn == "f2") value = f_star(2, un);
  else if (fn == "f3") value = f_star(3, un);
  else if (fn == "cographs") value = labeled_cograph_count(un);
  else throw Error(ErrorCode::InvalidArgument, "unknown counting function " + fn);
  const json config = {{"command", "count"}, {"fn", fn}, {"n", n}};
  if (out.format == "text") out.write(to_decimal(value) + "\n");
  else if (out.format == "csv") out.write("fn,n,value\n" + fn + "," + std::to_string(n) + "," + to_decimal(value) + "\n");
  else out.write(dump(envelope(config, {{"command", "count"}, {"fn", fn}, {"n", n}, {"value", to_decimal(value)}})));
  return kExitOk;
}

inline int cmd_bound(int n, int l, const Output& out) {
  if (n < 1 || n > 10000) throw Error(ErrorCode::InvalidArgument, "n must lie in [1, 10000]");
  if (l < 4 || l > 10000) throw Error(ErrorCode::InvalidArgument, "l must lie in [4, 10000]");
  const PowerBound b = c2l_lower_bound(static_cast<unsigned>(n), static_cast<unsigned>(l));
  const json config = {{"command", "bound"}, {"n", n}, {"l", l}};
  const std::string exponent = std::to_string(b.exp_num) + (b.is_integer() ? "" : "/" + std::to_string(b.exp_den));
  const std::string expr = "2^(" + exponent + ") * " + to_decimal(b.factor);
  const json value = b.is_integer() ? json(to_decimal(b.value())) : json(nullptr);
  if (out.format == "text") {
    out.write(expr + (b.is_integer() ? " = " + to_decimal(b.value()) : std::string()) + "\n");
  } else if (out.format == "csv") {
    out.write("n,l,exp_num,exp_den,bell_factor,value\n" + std::to_string(n) + "," + std::to_string(l) + "," +
              std::to_string(b.exp_num) + "," + std::to_string(b.exp_den) + "," + to_decimal(b.factor) + "," +
              (b.is_integer() ? to_decimal(b.value()) : std::string()) + "\n");
  } else {
    json body = {{"command", "bound"},
                 {"n", n},
                 {"l", l},
                 {"graph", emit_graph6(cycle(2 * l))},
                 {"exponent", {{"numerator", b.exp_num}, {"denominator", b.exp_den}}},
                 {"bell_factor", to_decimal(b.factor)},
                 {"expression", expr},
                 {"value", value}};
    out.write(dump(envelope(config, body)));
  }
  return kExitOk;
}

inline int cmd_sample_partitions(int n, std::uint64_t samples, std::uint64_t seed, bool stats, double threshold,
                                 const Output& out) {
  if (samples > 100000000) throw Error(ErrorCode::TooLarge, "at most 10^8 samples");
  PartitionSampler sampler(n, seed);
  const double t = threshold >= 0 ? threshold : std::pow(std::log(static_cast<double>(n)), 3);
  json config = {{"command", "sample-partitions"}, {"n", n}, {"samples", samples}, {"seed", seed}, {"stats", stats}};
  if (stats) config["threshold"] = t;

  std::string text;
  json rows = json::array();
  if (out.format == "csv") text = stats ? "blocks,nonsingletons,heavy-vertices\n" : "partition\n";
  for (std::uint64_t i = 0; i < samples; ++i) {
    const SetPartition p = sampler.sample();
    if (stats) {
      const PartitionStats s = partition_stats(p, t);
      if (out.format == "json") {
        rows.push_back({{"blocks", s.blocks}, {"nonsingletons", s.nonsingletons}, {"heavy_vertices", s.heavy_vertices}});
      } else {
        const char sep = out.format == "csv" ? ',' : ' ';
        text += std::to_string(s.blocks) + sep + std::to_string(s.nonsingletons) + sep + std::to_string(s.heavy_vertices) + "\n";
      }
    } else if (out.format == "json") {
      rows.push_back(p.blocks);
    } else {
      std::string line;
      for (const auto& b : p.blocks) {
        if (!line.empty()) line += '|';
        for (std::size_t j = 0; j < b.size(); ++j) line += (j ? " " : "") + std::to_string(b[j]);
      }
      text += line + "\n";
    }
  }
  if (out.format == "json") {
    json body = {{"command", "sample-partitions"}, {"n", n}, {"seed", seed}, {"samples", samples}};
    body[stats ? "stats" : "partitions"] = rows;
    if (stats) body["threshold"] = t;
    out.write(dump(envelope(config, body)));
  } else {
    out.write(text);
  }
  return kExitOk;
}

struct CensusArgs {
  int n = 0;
  std::string forbid;
  std::string theorem;
  std::string mode = "labeled";
  std::uint64_t shards = 1;
  std::string manifest;
  std::string resume;
  std::string shard_csv;
  std::uint64_t stop_after = 0;
};

inline json census_counts_json(const CensusCounts& c) { return c.to_json(); }

inline int cmd_census(const CensusArgs& a, int threads, const Output& out) {
  if (a.shards == 0 || (a.shards & (a.shards - 1)) != 0) throw Error(ErrorCode::InvalidArgument, "--shards must be a power of two");
  if (!a.manifest.empty() && !a.resume.empty() && a.manifest != a.resume) {
    throw Error(ErrorCode::InvalidArgument, "--manifest and --resume name different files");
  }
  CensusConfig config;
  config.n = a.n;
  config.forbidden = read_graph_arg(a.forbid);
  config.theorem = parse_theorem(a.theorem);
  config.mode = parse_mode(a.mode);
  config.shard_bits = std::countr_zero(a.shards);

  CensusRunOptions opt;
  opt.threads = threads;
  opt.resume = !a.resume.empty();
  opt.manifest_path = opt.resume ? a.resume : a.manifest;
  opt.stop_after = a.stop_after;
  const CensusReport r = run_census(config, opt);

  if (!a.shard_csv.empty()) {
    if (opt.manifest_path.empty()) throw Error(ErrorCode::InvalidArgument, "--shard-csv needs --manifest or --resume");
    std::ifstream in(opt.manifest_path);
    const json m = json::parse(in);
    std::string text = "prefix,done,total,hfree,certifiable,violations,reverified\n";
    for (const auto& s : m.at("shards")) {
      const auto& c = s.at("counts");
      text += std::to_string(s.at("prefix").get<std::uint64_t>()) + "," + (s.at("done").get<bool>() ? "true" : "false");
      for (const char* key : {"total", "hfree", "certifiable", "violations", "reverified"}) text += "," + c.at(key).get<std::string>();
      text += "\n";
    }
    Output{"csv", a.shard_csv, out.stdout_stream}.write(text);
  }

  const json cfg = config.to_json();
  const std::string status = r.complete ? "complete" : "stopped";
  const json fraction = r.counts.hfree > 0 ? json(r.fraction_decimal()) : json(nullptr);
  if (out.format == "text") {
    std::string text = "status " + status + "\n";
    const json counts = census_counts_json(r.counts);
    for (const auto& [key, value] : counts.items()) text += key + " " + value.get<std::string>() + "\n";
    text += "certifiable_fraction " + (fraction.is_null() ? std::string("-") : fraction.get<std::string>()) + "\n";
    out.write(text);
  } else if (out.format == "csv") {
    const auto c = census_counts_json(r.counts);
    out.write("n,mode,theorem,status,total,hfree,certifiable,violations,reverified\n" + std::to_string(a.n) + "," +
              to_string(config.mode) + "," + config.theorem.str() + "," + status + "," + c["total"].get<std::string>() + "," +
              c["hfree"].get<std::string>() + "," + c["certifiable"].get<std::string>() + "," +
              c["violations"].get<std::string>() + "," + c["reverified"].get<std::string>() + "\n");
  } else {
    json body = {{"command", "census"},
                 {"n", a.n},
                 {"graph", emit_graph6(config.forbidden)},
                 {"theorem", config.theorem.str()},
                 {"sequence", sequence_json(theorem_sequence(config.theorem))},
                 {"mode", to_string(config.mode)},
                 {"shards", a.shards},
                 {"status", status},
                 {"counts", census_counts_json(r.counts)},
                 {"certifiable_fraction", fraction}};
    out.write(dump(envelope(cfg, body)));
  }
  return r.complete ? kExitOk : kExitIncomplete;
}

inline int cmd_girth5(int n, const std::string& mode_arg, const Output& out) {
  const CensusMode mode = parse_mode(mode_arg);
  if (n < 0 || n > (mode == CensusMode::Labeled ? kMaxLabeledN : kMaxUnlabeledN)) {
    throw Error(ErrorCode::TooLarge, "girth5 census supports n <= 8 labeled, n <= 10 unlabeled");
  }
  const Girth5Stats st = girth5_census(n, mode);
  const json config = {{"command", "girth5"}, {"n", n}, {"mode", to_string(mode)}};
  auto dist = [](const std::map<int, std::uint64_t>& m) {
    json j = json::object();
    for (const auto& [key, value] : m) j[std::to_string(key)] = std::to_string(value);
    return j;
  };
  if (out.format == "text" || out.format == "csv") {
    std::string text = out.format == "csv" ? "n,mode,total,girth5,heavy_failures\n" : "";
    if (out.format == "csv") {
      text += std::to_string(n) + "," + to_string(mode) + "," + std::to_string(st.total) + "," + std::to_string(st.girth5) + "," +
              std::to_string(st.heavy_failures) + "\n";
    } else {
      text += "total " + std::to_string(st.total) + "\ngirth5 " + std::to_string(st.girth5) + "\nheavy_failures " +
              std::to_string(st.heavy_failures) + "\n";
    }
    out.write(text);
  } else {
    json body = {{"command", "girth5"},
                 {"n", n},
                 {"mode", to_string(mode)},
                 {"total", std::to_string(st.total)},
                 {"girth5", std::to_string(st.girth5)},
                 {"heavy_failures", std::to_string(st.heavy_failures)},
                 {"s_distribution", dist(st.s_distribution)},
                 {"max_degree_distribution", dist(st.max_degree_distribution)}};
    out.write(dump(envelope(config, body)));
  }
  return kExitOk;
}

}  // namespace cli

/// Parses argv, runs one subcommand and returns the process exit status.
inline int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Witnessing partition numbers, certificates and exact censuses", kToolName};
  app.set_version_flag("--version", std::string(kToolName) + " " + WPNLAB_VERSION);
  app.require_subcommand(1);
  app.fallthrough();

  std::string format;
  std::string output_path;
  int threads = 0;
  app.add_option("--format", format, "Report format (default depends on the subcommand)")
      ->check(CLI::IsMember({"json", "csv", "text"}));
  app.add_option("-o,--output", output_path, "Write the report here instead of stdout");
  app.add_option("--threads", threads, "Worker threads (default: $WPNLAB_THREADS or 1)")->check(CLI::PositiveNumber);

  std::string graph_arg, theorem_arg, fn;
  int n = 0, l = 0, k = 0, cycle_len = 0;
  std::uint64_t budget = 1000000, samples = 1, seed = 0;
  bool stats = false;
  double threshold = -1;
  std::string mode = "unlabeled";
  cli::CensusArgs census;

  auto* wpn_cmd = app.add_subcommand("wpn", "Witnessing partition number of a graph");
  wpn_cmd->add_option("graph", graph_arg, "graph6 string, file or -")->required();

  auto* certify_cmd = app.add_subcommand("certify", "Look for a certifying partition for a cycle theorem");
  certify_cmd->add_option("--theorem", theorem_arg, "c6, c8, c10 or c2l:<l>")->required();
  certify_cmd->add_option("graph", graph_arg, "graph6 string, file or -")->required();

  auto* seq_cmd = app.add_subcommand("sequences", "Enumerate really canonical witnessing sequences");
  seq_cmd->add_option("--graph", graph_arg, "graph6 string, file or -")->required();
  seq_cmd->add_option("--k", k, "Sequence length (default: wpn of the graph)")->check(CLI::PositiveNumber);
  seq_cmd->add_option("--budget", budget, "Search node budget")->capture_default_str();

  auto* claims_cmd = app.add_subcommand("verify-claims", "Check the partition claims for a long even cycle");
  claims_cmd->add_option("--cycle", cycle_len, "Cycle length 2l")->required();

  auto* count_cmd = app.add_subcommand("count", "Exact counting functions");
  count_cmd->add_option("--fn", fn, "bell, f1, f2, f3 or cographs")
      ->required()
      ->check(CLI::IsMember({"bell", "f1", "f2", "f3", "cographs"}));
  count_cmd->add_option("--n", n, "Argument")->required();

  auto* bound_cmd = app.add_subcommand("bound", "Lower bound on C2l-free graphs on n labeled vertices");
  bound_cmd->add_option("--n", n, "Vertices")->required();
  bound_cmd->add_option("--l", l, "Half the cycle length")->required();

  auto* sample_cmd = app.add_subcommand("sample-partitions", "Uniform random set partitions");
  sample_cmd->add_option("--n", n, "Ground set size")->required();
  sample_cmd->add_option("--samples", samples, "Number of samples")->capture_default_str();
  sample_cmd->add_option("--seed", seed, "RNG seed")->capture_default_str();
  sample_cmd->add_flag("--stats", stats, "Emit block statistics instead of the partitions");
  sample_cmd->add_option("--threshold", threshold, "Heavy block size threshold (default: (ln n)^3)");

  auto* census_cmd = app.add_subcommand("census", "Exact census of graphs certified by a cycle theorem");
  census_cmd->add_option("--n", census.n, "Vertices")->required();
  census_cmd->add_option("--forbid", census.forbid, "Forbidden cycle as graph6, file or -")->required();
  census_cmd->add_option("--theorem", census.theorem, "c6, c8, c10 or c2l:<l>")->required();
  census_cmd->add_option("--mode", census.mode, "labeled or unlabeled")->capture_default_str();
  census_cmd->add_option("--shards", census.shards, "Number of shards, a power of two")->capture_default_str();
  census_cmd->add_option("--manifest", census.manifest, "Write a resumable manifest here");
  census_cmd->add_option("--resume", census.resume, "Resume from (and keep updating) this manifest");
  census_cmd->add_option("--shard-csv", census.shard_csv, "Also write per-shard counts as CSV");
  census_cmd->add_option("--stop-after", census.stop_after, "Stop after this many shards (exit 3)");

  auto* girth_cmd = app.add_subcommand("girth5", "Heavy-degree and s statistics over girth >= 5 graphs");
  girth_cmd->add_option("--n", n, "Vertices")->required();
  girth_cmd->add_option("--mode", mode, "labeled or unlabeled")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitPrecondition;
  }

  try {
    const int thread_count = threads > 0 ? threads : cli::threads_from_env(1);
    cli::Output o{format, output_path, &out};
    if (*wpn_cmd) {
      o.format = cli::format_or(format, "text");
      return cli::cmd_wpn(graph_arg, o);
    }
    if (*certify_cmd) {
      o.format = cli::format_or(format, "text");
      return cli::cmd_certify(theorem_arg, graph_arg, o);
    }
    if (*seq_cmd) {
      o.format = cli::format_or(format, "json");
      return cli::cmd_sequences(graph_arg, k, budget, o);
    }
    if (*claims_cmd) {
      o.format = cli::format_or(format, "json");
      return cli::cmd_verify_claims(cycle_len, o);
    }
    if (*count_cmd) {
      o.format = cli::format_or(format, "text");
      return cli::cmd_count(fn, n, o);
    }
    if (*bound_cmd) {
      o.format = cli::format_or(format, "text");
      return cli::cmd_bound(n, l, o);
    }
    if (*sample_cmd) {
      o.format = cli::format_or(format, "csv");
      return cli::cmd_sample_partitions(n, samples, seed, stats, threshold, o);
    }
    if (*census_cmd) {
      o.format = cli::format_or(format, "json");
      return cli::cmd_census(census, thread_count, o);
    }
    if (*girth_cmd) {
      o.format = cli::format_or(format, "json");
      return cli::cmd_girth5(n, mode, o);
    }
  } catch (const Error& e) {
    err << kToolName << ": " << e.what() << "\n";
    return kExitPrecondition;
  } catch (const std::exception& e) {
    err << kToolName << ": internal error: " << e.what() << "\n";
    return kExitFailure;
  }
  return kExitPrecondition;
}

}  // namespace wpnlab
