#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cstdio>
#include <json.hpp>
#include <string>

#include "golden_queries.hpp"
#include "subprocess.hpp"

namespace {

std::string bin() { return GONALBN_BIN; }
std::string golden_path(const std::string& name) {
  return std::string(GOLDEN_DIR) + "/" + name;
}

}  // namespace

TEST_CASE("golden outputs are reproduced byte for byte") {
  for (const auto& q : golden_queries) {
    CAPTURE(q.file);
    auto res = run_process(bin() + " " + q.args + " 2>/dev/null");
    CHECK(res.code == 0);
    CHECK(res.out == slurp(golden_path(q.file)));
  }
}

TEST_CASE("repeat runs are byte identical") {
  for (const char* args :
       {"classify --g 10 --nu 3 --d 26 --format json",
        "audit --g-min 8 --g-max 12 --format table", "sweep --g 10"}) {
    auto first = run_process(bin() + " " + args + " 2>/dev/null");
    auto second = run_process(bin() + " " + args + " 2>/dev/null");
    CHECK(first.code == 0);
    CHECK(first.out == second.out);
  }
}

TEST_CASE("json goldens survive a parse and re-dump") {
  for (const auto& q : golden_queries) {
    std::string name = q.file;
    if (name.size() < 5 || name.substr(name.size() - 5) != ".json") continue;
    CAPTURE(name);
    std::string text = slurp(golden_path(name));
    auto j = nlohmann::ordered_json::parse(text);
    CHECK(j.dump(2) + "\n" == text);
  }
}

TEST_CASE("validation failures exit with code 2 and a single stderr line") {
  const char* bad[] = {
      "classify --g 10 --nu 9 --d 26",           // gonality out of range
      "classify --g 10 --nu 3",                  // missing required option
      "classify --g 10 --nu 3 --d 26 --format csv",
      "classify --g 10 --nu 3 --d 26 --format yaml",
      "sweep",                                   // no genus at all
      "sweep --g 10 --g-min 8 --g-max 9",        // both ways at once
      "sweep --g-min 9 --g-max 8",
      "ext --g 10 --d 26 --delta 17 --sigma 3",  // parity mismatch
      "ext --g 10 --d 26 --delta 17 --iso --sigma 2",
      "pencil --g 10 --nu 4 --t -1",
      "nonsense",
  };
  for (const char* args : bad) {
    CAPTURE(args);
    auto res = run_process(bin() + " " + args + " 2>&1 1>/dev/null");
    CHECK(res.code == 2);
    CHECK(res.out.substr(0, 6) == "error:");
    CHECK(std::count(res.out.begin(), res.out.end(), '\n') == 1);
  }
}

TEST_CASE("help exits zero and names the subcommands") {
  auto res = run_process(bin() + " --help 2>/dev/null");
  CHECK(res.code == 0);
  for (const char* name : {"classify", "rank1", "pencil", "splitting", "ext",
                           "fixed-det", "audit", "sweep"}) {
    CAPTURE(name);
    CHECK(res.out.find(name) != std::string::npos);
  }
}

TEST_CASE("--out writes exactly the stdout bytes") {
  std::string tmp = "/tmp/gonalbn_out_check.json";
  std::remove(tmp.c_str());
  auto res = run_process(bin() + " classify --g 10 --nu 3 --d 26 --format json --out " +
                         tmp + " 2>/dev/null");
  CHECK(res.code == 0);
  CHECK(res.out.empty());
  CHECK(slurp(tmp) == slurp(golden_path("classify_10_3_26.json")));
  std::remove(tmp.c_str());
}
