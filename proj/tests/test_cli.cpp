#include <unistd.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "json.hpp"
#include "opensos/cli.hpp"

using namespace opensos;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run cli(std::vector<std::string> args) {
  args.insert(args.begin(), "opensos");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

const std::string corpus = OPENSOS_TEST_CORPUS;

fs::path scratch(const std::string& name) {
  auto dir = fs::temp_directory_path() / ("opensos-cli-" + std::to_string(::getpid()));
  fs::create_directories(dir);
  return dir / name;
}

void write(const fs::path& p, const std::string& text) { std::ofstream(p) << text; }

}  // namespace

TEST_CASE("documented invocations") {
  auto r = cli({"check", "fh", "plus(x, plus(y, z))", "plus(plus(x, y), z)", "--tss", "Choice", "--spec", corpus});
  CHECK(r.code == kOk);
  CHECK(r.out.find("holds") != std::string::npos);

  r = cli({"check", "ci", "plus(x,y)", "zero", "--tss", "ChoiceWithA", "--term-size", "2", "--spec", corpus});
  CHECK(r.code == kFails);
  CHECK(r.out.find("substitution:") != std::string::npos);

  auto bad = scratch("bad.sos");
  write(bad, "tss Bad { labels: a; op f/1; op g/1; rule \"bad\": g(x) -a-> y |- f(x) -a-> y; }\n");
  r = cli({"gsos-check", bad.string()});
  CHECK(r.code == kFails);
  CHECK(r.out.find("premise source must be an argument variable") != std::string::npos);
}

TEST_CASE("input errors") {
  auto broken = scratch("broken.sos");
  write(broken, "tss T { labels: a;\n op f/1;\n rule \"r\": |- g(x) -a-> x; }\n");
  auto r = cli({"parse-check", broken.string()});
  CHECK(r.code == kInputError);
  CHECK(r.err.find(":3:") != std::string::npos);

  CHECK(cli({"check", "weak", "x", "x", "--tss", "Choice", "--spec", corpus}).code == kInputError);
  CHECK(cli({"check", "fh", "x", "x", "--tss", "Nope", "--spec", corpus}).code == kInputError);
  CHECK(cli({"check", "fh", "plus(x)", "x", "--tss", "Choice", "--spec", corpus}).code == kInputError);
  CHECK(cli({"check", "fh", "x", "x", "--tss", "Choice", "--depth", "0", "--spec", corpus}).code == kInputError);
  CHECK(cli({"frobnicate"}).code == kInputError);
  CHECK(cli({"parse-check", "/nonexistent/file.sos"}).code == kInputError);
}

TEST_CASE("json outputs") {
  auto r = cli({"parse-check", corpus + "/example3.sos", "--json"});
  REQUIRE(r.code == kOk);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j.contains("tss"));
  CHECK(j.contains("eqs"));
  CHECK(j["tss"][0]["rules"][0].contains("premises"));

  r = cli({"ruloids", "plus(x, y)", "--tss", "PlusA", "--spec", corpus, "--json"});
  j = nlohmann::json::parse(r.out);
  REQUIRE(j.size() == 2);
  CHECK(j[0].contains("hyps"));
  CHECK(j[0]["label"] == "a");
  CHECK(j[0]["target"] == "h0");

  r = cli({"check", "pfh", "f(x)", "x", "--tss", "Ex3", "--spec", corpus, "--json"});
  CHECK(r.code == kFails);
  j = nlohmann::json::parse(r.out);
  CHECK(j["witness"]["improper"] == nlohmann::json({"f(x)", "x"}));

  r = cli({"advise", "--tss", "Ex3", "--ext", "Ex3B", "--notion", "fh", "--spec", corpus, "--json"});
  j = nlohmann::json::parse(r.out);
  CHECK(j["axioms"][0]["classification"] == "broken");
  CHECK(j["axioms"][0]["theorems"][0].contains("conjuncts"));
}

TEST_CASE("ruloids print in DSL syntax") {
  auto r = cli({"ruloids", "f(x)", "--tss", "Ex3", "--spec", corpus});
  CHECK(r.out == "x -a-> h0 |- f(x) -a-> h0\n");
}

TEST_CASE("bounds from the environment") {
  ::setenv("OPENSOS_BOUNDS", "term_size=2,depth=5", 1);
  auto r = cli({"check", "ci", "plus(x, y)", "zero", "--tss", "ChoiceWithA", "--spec", corpus, "--json"});
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["bounds"]["term_size"] == 2);
  CHECK(j["bounds"]["depth"] == 5);
  r = cli({"check", "ci", "plus(x, y)", "zero", "--tss", "ChoiceWithA", "--term-size", "1", "--spec", corpus,
           "--json"});
  CHECK(nlohmann::json::parse(r.out)["bounds"]["term_size"] == 1);
  ::setenv("OPENSOS_BOUNDS", "speed=3", 1);
  CHECK(cli({"check", "ci", "zero", "zero", "--tss", "Choice", "--spec", corpus}).code == kInputError);
  ::unsetenv("OPENSOS_BOUNDS");
}

TEST_CASE("corpus runner") {
  auto empty = scratch("empty");
  fs::create_directories(empty);
  auto r = cli({"corpus", empty.string()});
  CHECK(r.code == kOk);
  CHECK(r.out.find("0 passed, 0 failed") != std::string::npos);

  auto dir = scratch("inverted");
  fs::create_directories(dir);
  fs::copy_file(corpus + "/example3.sos", dir / "example3.sos", fs::copy_options::overwrite_existing);
  write(dir / "inverted.json", R"J({"specs": ["example3.sos"], "cases": [
    {"name": "flipped", "args": ["check", "fh", "f(x)", "x", "--tss", "Ex3"], "exit": 1}]})J");
  r = cli({"corpus", dir.string()});
  CHECK(r.code == kFails);
  CHECK(r.err.find("inverted") != std::string::npos);

  write(dir / "inverted.json", R"J({"specs": ["missing.sos"], "cases": []})J");
  CHECK(cli({"corpus", dir.string()}).code == kInputError);

  auto a = cli({"corpus", corpus, "--json"});
  auto b = cli({"corpus", corpus, "--json"});
  CHECK(a.code == kOk);
  CHECK(a.out == b.out);
}
