#include <catch2/catch_amalgamated.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <wpnlab/cli.hpp>

using namespace wpnlab;
using nlohmann::json;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "wpn-lab");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

json run_json(std::vector<std::string> args) {
  args.push_back("--format");
  args.push_back("json");
  const Run r = run(args);
  INFO(r.err);
  REQUIRE(r.code == 0);
  return json::parse(r.out);
}

const std::string c6 = "EhEG";

}  // namespace

TEST_CASE("wpn prints the number", "[cli]") {
  const Run r = run({"wpn", c6});
  CHECK(r.code == 0);
  CHECK(r.out == "2\n");
  CHECK(run({"wpn", "n=7; edges: 0-1 1-2 2-3 3-4 4-5 5-6 0-6"}).out == "3\n");

  const auto path = std::filesystem::temp_directory_path() / "wpnlab_cli_c6.g6";
  std::ofstream(path) << "\n" << c6 << "\n";
  CHECK(run({"wpn", path.string()}).out == "2\n");
  std::filesystem::remove(path);

  const json j = run_json({"wpn", c6});
  CHECK(j["wpn"] == 2);
  CHECK(j["graph"] == c6);
  CHECK(j["tool"] == "wpn-lab");
  CHECK(j["version"] == WPNLAB_VERSION);
  CHECK(j["config_hash"].get<std::string>().size() == 16);
}

TEST_CASE("certify", "[cli]") {
  CHECK(run({"certify", "--theorem", "c6", c6}).out == "NONE\n");
  CHECK(run({"certify", "--theorem", "c2l:5", c6}).code == kExitPrecondition);
  const Run ok = run({"certify", "--theorem", "c6", "Dhc"});  // C5
  CHECK(ok.code == 0);
  CHECK(ok.out.front() == '[');
  const json j = run_json({"certify", "--theorem", "c8", "F~~~w"});  // K7
  CHECK(j["certified"] == true);
  CHECK(j["partition"]["part_of"].size() == 7);
  CHECK(j["sequence"].size() == 3);
}

TEST_CASE("precondition failures exit with status 2", "[cli]") {
  CHECK(run({"wpn", "A@"}).code == kExitPrecondition);
  CHECK(run({"sequences", "--graph", c6, "--k", "3"}).code == kExitPrecondition);
  CHECK(run({"verify-claims", "--cycle", "10"}).code == kExitPrecondition);
  CHECK(run({"verify-claims", "--cycle", "13"}).code == kExitPrecondition);
  CHECK(run({"bound", "--n", "8", "--l", "3"}).code == kExitPrecondition);
  CHECK(run({"count", "--fn", "nope", "--n", "3"}).code == kExitPrecondition);
  CHECK(run({"census", "--n", "6", "--forbid", c6, "--theorem", "c8"}).code == kExitPrecondition);
  CHECK(run({"census", "--n", "6", "--forbid", c6, "--theorem", "c6", "--shards", "3"}).code == kExitPrecondition);
  CHECK(run({"frobnicate"}).code == kExitPrecondition);
  CHECK(run({}).code == kExitPrecondition);
  const Run e = run({"wpn", "A@"});
  CHECK(e.out.empty());
  CHECK_FALSE(e.err.empty());
}

TEST_CASE("sequences report and budget exhaustion", "[cli]") {
  const json j = run_json({"sequences", "--graph", c6});
  CHECK(j["status"] == "complete");
  CHECK(j["k"] == 2);
  CHECK(j["sequences"].size() == 6);
  for (const auto& s : j["sequences"]) CHECK(s["slots"].size() == 2);
  const Run cut = run({"sequences", "--graph", c6, "--budget", "2"});
  CHECK(cut.code == kExitIncomplete);
  CHECK(json::parse(cut.out)["status"] == "budget-exhausted");
}

TEST_CASE("verify-claims on C12", "[cli]") {
  const json j = run_json({"verify-claims", "--cycle", "12"});
  CHECK(j["all_passed"] == true);
  CHECK(j["l"] == 6);
  int controls = 0;
  for (const auto& c : j["checks"]) {
    CHECK(c["passed"] == true);
    if (c["claim"] == "control") {
      ++controls;
      CHECK(c["status"] == "not-found");
      CHECK_FALSE(c.contains("witness"));
    } else {
      CHECK(c["status"] == "found");
      CHECK(c["witness"]["part_of"].size() == 12);
    }
  }
  CHECK(controls == 1);
}

TEST_CASE("count and bound", "[cli]") {
  CHECK(run({"count", "--fn", "bell", "--n", "10"}).out == "115975\n");
  CHECK(run({"count", "--fn", "f1", "--n", "4"}).out == "30\n");
  CHECK(run({"count", "--fn", "f3", "--n", "4"}).out == "37\n");
  CHECK(run({"count", "--fn", "cographs", "--n", "4"}).out == "52\n");
  CHECK(run({"count", "--fn", "bell", "--n", "3", "--format", "csv"}).out == "fn,n,value\nbell,3,5\n");
  CHECK(run({"bound", "--n", "8", "--l", "4"}).out == "2^(56/3) * 5\n");
  CHECK(run({"bound", "--n", "7", "--l", "4"}).out == "2^(14) * 5 = 81920\n");
  const json j = run_json({"bound", "--n", "8", "--l", "4"});
  CHECK(j["exponent"]["numerator"] == 56);
  CHECK(j["value"].is_null());
}

TEST_CASE("sample-partitions is reproducible", "[cli]") {
  const Run a = run({"sample-partitions", "--n", "30", "--samples", "50", "--seed", "4", "--stats"});
  const Run b = run({"sample-partitions", "--n", "30", "--samples", "50", "--seed", "4", "--stats"});
  const Run c = run({"sample-partitions", "--n", "30", "--samples", "50", "--seed", "5", "--stats"});
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(a.out != c.out);
  CHECK(a.out.rfind("blocks,nonsingletons,heavy-vertices\n", 0) == 0);
  CHECK(std::count(a.out.begin(), a.out.end(), '\n') == 51);
  const json j = run_json({"sample-partitions", "--n", "5", "--samples", "3", "--seed", "1"});
  CHECK(j["partitions"].size() == 3);
}

TEST_CASE("census reports are identical across thread counts", "[cli][property]") {
  const std::vector<std::string> base = {"census", "--n", "6", "--forbid", c6, "--theorem", "c6", "--shards", "16"};
  auto with = [&](const std::string& threads) {
    auto args = base;
    args.push_back("--threads");
    args.push_back(threads);
    return run(args);
  };
  const Run one = with("1");
  CHECK(one.code == 0);
  CHECK(with("4").out == one.out);
  CHECK(with("8").out == one.out);
  const json j = json::parse(one.out);
  CHECK(j["counts"]["hfree"] == "32708");
  CHECK(j["status"] == "complete");
  auto text = base;
  text.insert(text.end(), {"--format", "text"});
  const Run t = run(text);
  CHECK(t.code == 0);
  CHECK(t.out.find("hfree 32708\n") != std::string::npos);

  setenv("WPNLAB_THREADS", "3", 1);
  CHECK(run(base).out == one.out);
  setenv("WPNLAB_THREADS", "zero", 1);
  CHECK(run(base).code == kExitPrecondition);
  unsetenv("WPNLAB_THREADS");
}

TEST_CASE("census stop and resume", "[cli]") {
  const auto manifest = (std::filesystem::temp_directory_path() / "wpnlab_cli_manifest.json").string();
  const auto csv = (std::filesystem::temp_directory_path() / "wpnlab_cli_shards.csv").string();
  std::filesystem::remove(manifest);
  const std::vector<std::string> base = {"census", "--n", "6", "--forbid", c6, "--theorem", "c6", "--shards", "8"};
  const Run full = run(base);

  auto args = base;
  args.insert(args.end(), {"--manifest", manifest, "--stop-after", "2"});
  const Run stopped = run(args);
  CHECK(stopped.code == kExitIncomplete);
  CHECK(json::parse(stopped.out)["status"] == "stopped");

  args = base;
  args.insert(args.end(), {"--resume", manifest, "--shard-csv", csv});
  const Run resumed = run(args);
  CHECK(resumed.code == 0);
  CHECK(resumed.out == full.out);
  std::ifstream in(csv);
  std::string header;
  std::getline(in, header);
  CHECK(header == "prefix,done,total,hfree,certifiable,violations,reverified");

  args = {"census", "--n", "5", "--forbid", c6, "--theorem", "c6", "--shards", "8", "--resume", manifest};
  CHECK(run(args).code == kExitPrecondition);
  std::filesystem::remove(manifest);
  std::filesystem::remove(csv);
}

TEST_CASE("girth5 subcommand", "[cli]") {
  const json j = run_json({"girth5", "--n", "5"});
  CHECK(j["girth5"] == "303");
  CHECK(j["heavy_failures"] == "0");
}

TEST_CASE("output file option", "[cli]") {
  const auto path = (std::filesystem::temp_directory_path() / "wpnlab_cli_out.txt").string();
  const Run r = run({"--output", path, "count", "--fn", "bell", "--n", "4"});
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  std::ifstream in(path);
  std::string line;
  std::getline(in, line);
  CHECK(line == "15");
  std::filesystem::remove(path);
}
