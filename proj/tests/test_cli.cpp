#include "severi/cli.hpp"

#include <doctest.h>
#include <json.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

using nlohmann::json;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "severi");
  std::vector<const char*> argv;
  for (const std::string& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  int code = severi::run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string first_line(const std::string& s) { return s.substr(0, s.find('\n')); }

}  // namespace

TEST_CASE("count") {
  CHECK(first_line(run({"count", "--d", "4", "--delta", "3", "--alpha", "2", "--beta", "2"}).out) == "674");
  CHECK(first_line(run({"count", "--d", "4", "--delta", "3", "--alpha", "2", "--beta", "2", "--irr"}).out) == "620");
  CHECK(first_line(run({"count", "--d", "4", "--delta", "2", "--alpha", "4", "--beta", "[]"}).out) == "172");
  CHECK(first_line(run({"count", "--d", "3", "--delta", "1", "--alpha", "[0,1]", "--beta", "1"}).out) == "10");
  CHECK(first_line(run({"count", "--d", "1", "--delta", "0", "--alpha", "1", "--beta", "[]"}).out) == "1");
  Run bad = run({"count", "--d", "4", "--delta", "3", "--alpha", "2", "--beta", "3"});
  CHECK(bad.code == 2);
  CHECK(bad.err.find("invalid key") != std::string::npos);
  CHECK(run({"count", "--d", "4", "--delta", "3", "--alpha", "[2,", "--beta", "2"}).code == 2);
  CHECK(run({"count", "--d", "4"}).code == 2);
}

TEST_CASE("count --expand lists the recursion terms") {
  Run r = run({"count", "--d", "4", "--delta", "3", "--alpha", "2", "--beta", "2", "--expand", "--format", "json"});
  REQUIRE(r.code == 0);
  json j = json::parse(r.out);
  CHECK(j["result"]["value"] == "674");
  std::vector<std::string> values;
  for (const auto& t : j["result"]["terms"]) values.push_back(t["value"]);
  CHECK(values == std::vector<std::string>{"636", "36", "2"});
}

TEST_CASE("json records") {
  Run r = run({"count", "--d", "6", "--delta", "4", "--alpha", "[]", "--beta", "6", "--format", "json"});
  REQUIRE(r.code == 0);
  json j = json::parse(r.out);
  CHECK(j["command"] == "count");
  CHECK(j["inputs"]["d"] == 6);
  CHECK(j["result"].is_string());
  CHECK(j.contains("citations"));

  json s = json::parse(run({"classical", "salmon", "--d", "4", "--format", "json"}).out);
  CHECK(s["result"]["triple_points"] == "3200");
  CHECK(s["result"]["dual"] == "36");

  json p = json::parse(run({"tacnode", "profile", "--m", "2", "--alpha", "-1", "--beta", "0,0", "--format", "json"}).out);
  CHECK(p["result"]["double_roots"] == 2);
  CHECK(p["result"]["worse"] == false);

  json v = json::parse(run({"verify", "--only", "irr", "--format", "json"}).out);
  CHECK(v["command"] == "verify");
}

TEST_CASE("csv headers") {
  CHECK(first_line(run({"count", "--d", "3", "--delta", "1", "--alpha", "0", "--beta", "3", "--format", "csv"}).out) ==
        "expression,coefficient,value,origin");
  CHECK(first_line(run({"verify", "--only", "salmon", "--format", "csv"}).out) ==
        "expression,expected,computed,status,citation");
}

TEST_CASE("verify") {
  Run all = run({"verify"});
  CHECK(all.code == 0);
  CHECK(all.out.find("FAIL") == std::string::npos);
  Run salmon = run({"verify", "--only", "salmon"});
  CHECK(salmon.code == 0);
  CHECK(salmon.out.find("t(4)") != std::string::npos);
  CHECK(salmon.out.find("3200") != std::string::npos);
  Run tac = run({"verify", "--only", "tacnode"});
  CHECK(tac.out.find("swallowtail") != std::string::npos);
  CHECK(run({"verify", "--only", "nothing"}).code == 2);
}

TEST_CASE("tacnode lab") {
  CHECK(first_line(run({"tacnode", "disc", "--m", "2", "--alpha", "-1", "--beta", "0,0"}).out) == "x^4 - 2x^2 + 1");
  CHECK(first_line(run({"tacnode", "cheb", "--kind", "T", "--n", "4"}).out) == "8x^4 - 8x^2 + 1");
  CHECK(first_line(run({"tacnode", "psi", "--m", "3", "--t", "1", "--profile"}).out) == "(2, false)");
  CHECK(first_line(run({"tacnode", "nu", "--m", "3", "--gamma", "1/4"}).out) == "x^3 - (3/4)x");
  CHECK(first_line(run({"tacnode", "swallowtail"}).out) ==
        "4096*a0^3*b1^2 + 4096*a0^2*b0^2 - 18432*a0*b0*b1^2 - 6912*b1^4 - 16384*b0^3");
  CHECK(run({"tacnode", "cusp"}).code == 0);
  CHECK(run({"tacnode", "identities", "--l", "3"}).code == 0);
  CHECK(run({"tacnode", "nu", "--m", "3", "--gamma", "abc"}).code == 2);
  CHECK(run({"tacnode", "nu", "--m", "3", "--gamma", "1"}).code == 2);
  CHECK(run({"tacnode", "disc", "--m", "2", "--alpha", "-1", "--beta", "0"}).code == 2);
}

TEST_CASE("classical and poly commands") {
  Run dual = run({"classical", "dual", "--d", "4", "--h", "2"});
  CHECK(dual.code == 0);
  CHECK(dual.out.find("36") != std::string::npos);
  CHECK(run({"classical", "dual", "--d", "4", "--h", "5"}).code == 2);
  CHECK(run({"classical", "salmon", "--d", "1"}).code == 2);
  CHECK(run({"classical", "triple", "--self-q", "1", "--self-q-prime", "-1"}).code == 0);

  CHECK(first_line(run({"poly", "disc", "a*x^2 + b*x + c", "--var", "x"}).out) == "-4*a*c + b^2");
  CHECK(first_line(run({"poly", "res", "x^2 - a", "x - b", "--var", "x"}).out) == "b^2 - a");
  CHECK(first_line(run({"poly", "gcd", "x^2 - 1", "x^2 + 2x + 1"}).out) == "x + 1");
  CHECK(run({"poly", "qdeg", "a0^2 - 3b0", "--weights", "a0=2,b0=4"}).out.find('4') != std::string::npos);
  CHECK(run({"poly", "disc", "x^2 +", "--var", "x"}).code == 2);
}

TEST_CASE("cache file with a corrupt line") {
  std::filesystem::path path = std::filesystem::temp_directory_path() / "severi_cli_cache_test.jsonl";
  {
    std::ofstream f(path);
    f << R"({"d":3,"delta":1,"alpha":[],"beta":[3],"irr":false,"value":"12"})" << "\n" << "broken\n";
  }
  Run r = run({"count", "--d", "4", "--delta", "3", "--alpha", "0", "--beta", "4", "--cache", path.string()});
  CHECK(r.code == 0);
  CHECK(first_line(r.out) == "675");
  CHECK(r.err.find("line 2") != std::string::npos);

  Run again = run({"count", "--d", "4", "--delta", "3", "--alpha", "0", "--beta", "4", "--cache", path.string()});
  CHECK(first_line(again.out) == "675");
  CHECK(again.err.empty());
  std::filesystem::remove(path);
}
