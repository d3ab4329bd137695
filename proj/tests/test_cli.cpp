#include <array>
#include <cstdio>
#include <cstdlib>
#include <string>

#include "boolfun/json_io.hpp"
#include "doctest.h"

namespace {

using boolfun::io::json;

struct RunResult {
  int status = -1;
  std::string out;
};

RunResult run_cli(const std::string& args) {
  const char* cli = std::getenv("BOOLFUN_CLI");
  REQUIRE(cli != nullptr);
  std::string command = std::string(cli) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(command.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult result;
  std::array<char, 4096> buffer;
  std::size_t got;
  while ((got = fread(buffer.data(), 1, buffer.size(), pipe)) > 0) {
    result.out.append(buffer.data(), got);
  }
  int raw = pclose(pipe);
  result.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return result;
}

json run_json(const std::string& args, int expected_status = 0) {
  auto result = run_cli(args);
  CHECK(result.status == expected_status);
  json parsed = json::parse(result.out, nullptr, false);
  REQUIRE_FALSE(parsed.is_discarded());
  return parsed;
}

const char* kMatroidExample = "'{\"n\":3,\"values\":[0,1,1,2,1,2,2,2]}'";
const char* kSplitExample = "'{\"n\":3,\"values\":[0,1,1,3,2,5,5,5]}'";

}  // namespace

TEST_CASE("classify on the rank-function example") {
  json out = run_json(std::string("classify ") + kMatroidExample);
  CHECK(out["is_matroid_rank"] == true);
  CHECK(out["rigid"] == true);
  CHECK(out["hyper_rigid"] == false);
  CHECK(out["modular"] == false);
  CHECK(out["in_bool_max"] == true);
}

TEST_CASE("product, theta and restrict round through JSON") {
  json product = run_json(
      "product '{\"n\":1,\"values\":[0,1]}' '{\"n\":1,\"values\":[0,0]}' "
      "--q1 2 --q2 3");
  CHECK(product["values"] == json::array({0, 1, 0, 2}));
  json back = run_json("restrict '" + product.dump() + "' --subset [1]");
  CHECK(back["values"] == json::array({0, 1}));
  json transformed = run_json("theta '{\"n\":2,\"values\":[0,1,0,2]}' --q -1");
  json recovered = run_json("theta '" + transformed.dump() + "' --q 1");
  CHECK(recovered["values"] == json::array({0, 1, 0, 2}));
}

TEST_CASE("partition commands") {
  json contracted = run_json(std::string("contract ") + kSplitExample +
                             " --partition '{\"n\":3,\"rgs\":[0,0,1]}'");
  CHECK(contracted["values"] == json::array({0, 3, 2, 5}));
  json restricted = run_json(std::string("restrict-by ") + kSplitExample +
                             " --partition '{\"n\":3,\"rgs\":[0,0,1]}'");
  CHECK(restricted["values"] == json::array({0, 1, 1, 3, 2, 3, 3, 5}));
}

TEST_CASE("phi and the counting oracle agree through the tool") {
  // every proper subset of the triangle is independent, so only the
  // monochromatic colorings fail: T^3 - T
  json p = run_json(std::string("phi ") + kMatroidExample);
  CHECK(p["coeffs"] == json::array({"0", "-1", "0", "1"}));
  json c2 = run_json(std::string("phi-count ") + kMatroidExample + " --colors 2");
  CHECK(c2["count"] == 6);
  json c3 = run_json(std::string("phi-count ") + kMatroidExample + " --colors 3");
  CHECK(c3["count"] == 24);
}

TEST_CASE("instance constructors") {
  json rank = run_json(
      "from-graph '{\"vcount\":3,\"ends\":[[1,2],[1,3],[2,3]]}'");
  CHECK(rank["values"] == json::array({0, 1, 1, 2, 1, 2, 2, 2}));
  json gam = run_json(
      "from-hypergraph '{\"n\":3,\"edges\":[[1,2],[1,3],[2,3]]}'");
  CHECK(gam["values"] == json::array({0, 0, 0, 1, 0, 1, 1, 3}));
  json lin = run_json(
      "from-vectors '{\"dim\":2,\"columns\":[[[\"1\",\"1\"],[\"0\",\"1\"]],"
      "[[\"0\",\"1\"],[\"1\",\"1\"]],[[\"1\",\"1\"],[\"1\",\"1\"]]]}'");
  CHECK(lin["values"] == json::array({0, 1, 1, 2, 1, 2, 2, 2}));
  json lin2 = run_json(
      "from-vectors '{\"dim\":2,\"columns\":[[[\"1\",\"1\"],[\"1\",\"1\"]],"
      "[[\"1\",\"1\"],[\"-1\",\"1\"]]]}' --field gf:2");
  CHECK(lin2["values"] == json::array({0, 1, 1, 1}));
  json chrom = run_json("chromatic '{\"n\":3,\"edges\":[[1,2],[1,3],[2,3]]}'");
  CHECK(chrom["coeffs"] == json::array({"0", "2", "-3", "1"}));
}

TEST_CASE("basis and decompose") {
  json basis = run_json(std::string("basis ") + kMatroidExample + " --subset [1,2,3]");
  CHECK(basis["basis"] == json::array({1, 2}));
  json dec = run_json("decompose '{\"n\":2,\"values\":[0,1,1,2]}'");
  CHECK(dec["blocks"] == json::array({json::array({1}), json::array({2})}));
}

TEST_CASE("delta and antipode emit formal sums") {
  // five weak members, but the two singleton-cut partitions give isomorphic
  // tensor factors and merge with coefficient two
  json delta = run_json(std::string("delta ") + kSplitExample + " --family W");
  CHECK(delta["terms"].size() == 4);
  json deltaS = run_json(std::string("delta ") + kSplitExample + " --family S");
  CHECK(deltaS["terms"].size() == 3);
  json anti = run_json("antipode '{\"n\":1,\"values\":[0,6]}'");
  CHECK(anti["terms"].size() == 1);
  CHECK(anti["terms"][0]["coeff"] == "-1");
}

TEST_CASE("verification runs and exit codes") {
  json ok = run_json("verify-axioms --family S --random 25 --max-n 3 --seed 7");
  CHECK(ok["rng"] == "splitmix64");
  CHECK(ok["report"].size() == 25 * 6);
  // the same invocation is byte-identical
  auto once = run_cli("verify-axioms --family S --random 25 --max-n 3 --seed 7");
  auto twice = run_cli("verify-axioms --family S --random 25 --max-n 3 --seed 7");
  CHECK(once.out == twice.out);
}

TEST_CASE("compat-report on the worked example") {
  json report = run_json(std::string("compat-report ") + kSplitExample);
  CHECK(report["counitary"] == false);
  CHECK(report["agree_W_delta"] == false);
  CHECK(report["phi_deltaW"]["coeffs"] !=
        report["phi_deltaS"]["coeffs"]);
}

TEST_CASE("errors surface as structured JSON with status one") {
  auto bad = run_cli("classify '{\"n\":1,\"values\":[9,0]}'");
  CHECK(bad.status == 1);
  auto missing = run_cli("phi /nonexistent.json");
  CHECK(missing.status == 1);
}

TEST_CASE("sampled verification from a file") {
  std::string path = "/tmp/boolfun_sample.json";
  {
    FILE* f = std::fopen(path.c_str(), "w");
    REQUIRE(f != nullptr);
    std::fputs("[{\"n\":1,\"values\":[0,2]},{\"n\":2,\"values\":[0,1,1,3]}]", f);
    std::fclose(f);
  }
  json out = run_json("verify-axioms --family W --sample " + path);
  CHECK(out["report"].size() == 2 * 6);
  for (const auto& entry : out["report"]) CHECK(entry["pass"] == true);
}

TEST_CASE("the environment cap only lowers limits") {
  const char* cli = std::getenv("BOOLFUN_CLI");
  REQUIRE(cli != nullptr);
  std::string command = std::string("BOOLFUN_MAX_N=2 ") + cli +
                        " phi '{\"n\":3,\"values\":[0,0,0,0,0,0,0,1]}' 2>&1";
  FILE* pipe = popen(command.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  std::array<char, 4096> buffer;
  std::size_t got;
  while ((got = fread(buffer.data(), 1, buffer.size(), pipe)) > 0) {
    out.append(buffer.data(), got);
  }
  int raw = pclose(pipe);
  CHECK(WEXITSTATUS(raw) == 1);
  CHECK(out.find("GroundSetTooLarge") != std::string::npos);
}

TEST_CASE("classify reports null beyond the membership cap") {
  std::string table = "{\"n\":6,\"values\":[";
  for (int i = 0; i < 64; ++i) table += (i ? ",0" : "0");
  table += "]}";
  json out = run_json("classify '" + table + "'");
  CHECK(out["in_bool_max"].is_null());
  CHECK(out["modular"] == true);
}

TEST_CASE("every emitted function re-ingests") {
  json out = run_json(std::string("restrict-by ") + kSplitExample +
                      " --partition '{\"n\":3,\"rgs\":[0,1,2]}'");
  json again = run_json("classify '" + out.dump() + "'");
  CHECK(again.contains("modular"));
  CHECK(again["modular"] == true);
}
