#include "doctest.h"

#include <cstdio>
#include <functional>
#include <set>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <sys/wait.h>

#include "commands.hpp"
#include "cyclo/errors.hpp"
#include "json_io.hpp"

using namespace cyclo;
using namespace cyclo::cli;
using io::json;

namespace {

CherednikParams golden() { return make_params(make_rational(-1, 2), {0, -1}); }

struct Run {
  int code;
  std::string out;
};

namespace fs = std::filesystem;

std::string write_temp(const std::string& name, const std::string& text) {
  const fs::path path = fs::temp_directory_path() / ("cyclo_cli_" + name);
  std::ofstream(path) << text;
  return path.string();
}

Run run(const std::string& args) {
  const std::string out = (fs::temp_directory_path() / "cyclo_cli_stdout").string();
  const std::string cmd = std::string(CYCLO_CLI_PATH) + " " + args + " > " + out + " 2>/dev/null";
  const int status = std::system(cmd.c_str());
  std::ifstream in(out);
  std::stringstream ss;
  ss << in.rdbuf();
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, ss.str()};
}

int code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (...) {
    std::string msg;
    return exit_code_for_current_exception(msg);
  }
  return 0;
}

}  // namespace

TEST_CASE("parameter files") {
  const auto p = io::params_from_json(json::parse(R"({"level":2,"kappa":"-1/2","s":[0,-1]})"));
  CHECK(p == golden());
  const auto q = io::params_from_json(json::parse(R"({"level":2,"kappa":{"num":-1,"den":2},"s":[0,[0,1]]})"));
  CHECK(q.s(1) == Charge{0, 1});
  const auto irr = io::params_from_json(json::parse(R"({"level":1,"kappa":"irrational","s":[0]})"));
  CHECK_FALSE(irr.kappa().is_rational());
  CHECK_THROWS_AS(io::params_from_json(json::parse(R"({"level":2,"kappa":"-1/2","s":[0]})")), InputError);
  CHECK_THROWS_AS(io::params_from_json(json::parse(R"({"level":1,"kappa":"0","s":[0]})")), InputError);
  CHECK_THROWS_AS(io::params_from_json(json::parse(R"([1,2])")), InputError);
}

TEST_CASE("crystal document contains the golden edge") {
  const json doc = json::parse(cmd_crystal(golden(), 11, Format::json, TiePolicy::by_component));
  const json from = json::parse("[[2,2],[3,1,1,1]]");
  const json to = json::parse("[[3,2],[3,1,1,1]]");
  bool found = false;
  for (const auto& e : doc["edges"])
    found = found || (e["from"] == from && e["to"] == to && e["residue"]["value"] == 0);
  CHECK(found);
  CHECK(doc["nodes"][0]["lambda"] == json::parse("[[],[]]"));
  CHECK(doc["nodes"][0]["singular"] == true);
  // strict mode never trips on a genuine parameter set
  CHECK(cmd_crystal(golden(), 5, Format::json, TiePolicy::strict) ==
        cmd_crystal(golden(), 5, Format::json, TiePolicy::by_component));
  const std::string dot = cmd_crystal(make_params(make_rational(-1, 2), {0}), 2, Format::dot, TiePolicy::by_component);
  CHECK(dot.find("digraph") != std::string::npos);
  CHECK(dot.find("n0 [label=\"[[]]\"") != std::string::npos);
}

TEST_CASE("support table") {
  const json rows = json::parse(cmd_support(make_params(make_rational(-1, 2), {0}), 2));
  REQUIRE(rows.size() == 2);
  CHECK(rows[0]["lambda"] == json::parse("[[2]]"));
  CHECK(rows[0]["finite_dim"] == true);
  CHECK(rows[1]["lambda"] == json::parse("[[1,1]]"));
  CHECK(rows[1]["finite_dim"] == false);
  CHECK(code_of([] { cmd_support(make_irrational_params({Charge{0, 0}}), 2); }) == kInputError);
}

TEST_CASE("fock matrix and subspaces") {
  const auto p = make_params(make_rational(-1, 2), {0});
  const json m = json::parse(cmd_fock_matrix(p, {"bplus", 0, std::nullopt, 1, std::nullopt}));
  CHECK(m["degree_to"] == 2);
  CHECK(m["rows"][0] == json::parse(R"(["[[2]]","[[1,1]]"])"));
  CHECK(m["entries"] == json::parse(R"([[0,0,"1"],[1,0,"-1"]])"));
  CHECK(code_of([&] { cmd_fock_matrix(p, {"f", 0, std::nullopt, 1, std::nullopt}); }) == kInputError);
  CHECK(code_of([&] { cmd_fock_matrix(p, {"g", 0, Residue{}, 1, std::nullopt}); }) == kInputError);

  CHECK(json::parse(cmd_fock_singular(p, 0))["dimension"] == 1);
  CHECK(json::parse(cmd_fock_singular(p, 2))["dimension"] == 0);
  for (const auto& row : json::parse(cmd_fock_filtration(p, 4))["rows"]) CHECK(row["dim"] == row["crystal_count"]);
}

TEST_CASE("params, wallcross, rank1") {
  const json doc = json::parse(cmd_params(golden(), 2));
  CHECK(doc["e"] == 2);
  CHECK(doc["hecke"]["q_exp"] == "1/2");
  CHECK(doc["h"] == json::parse(R"(["0","0"])"));

  const json wc = json::parse(cmd_wallcross(make_params(make_rational(-1, 2), {1, 0}),
                                            WallDescriptor::charge_wall(0, 1, 1), WallCrossStep::Direction::lower, 3));
  std::set<std::string> targets;
  for (const auto& pr : wc["bijection"]) targets.insert(pr["to"].dump());
  CHECK(targets.size() == wc["bijection"].size());

  const json r = json::parse(cmd_rank1(2, {0, make_rational(1, 2)}, 0, 1));
  CHECK(r["dim"] == 1);
  CHECK(r["n"] == 1);
}

TEST_CASE("exit codes") {
  CHECK(code_of([] { throw AmbiguityError("x"); }) == kAmbiguity);
  CHECK(code_of([] { throw TruncationError("x"); }) == kTruncation);
  CHECK(code_of([] { throw InvalidMove("x"); }) == kInputError);
  CHECK(code_of([] { (void)json::parse("{"); }) == kInputError);
  CHECK(code_of([] { throw std::runtime_error("x"); }) == 1);
}

TEST_CASE("binary end to end") {
  const std::string params = write_temp("golden.json", R"({"level":2,"kappa":"-1/2","s":[0,-1]})");
  const Run a = run("--params " + params + " crystal --n-max 4");
  const Run b = run("--params " + params + " crystal --n-max 4");
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(a.out == cmd_crystal(golden(), 4, Format::json, TiePolicy::by_component));
  CHECK(run("--params " + params + " --format dot crystal --n-max 2").out.rfind("digraph", 0) == 0);
  CHECK(run("--params " + params + " support -n 2").code == 0);
  CHECK(run("--params /nonexistent/file.json support -n 2").code == 2);
  CHECK(run("--params " + write_temp("bad.json", "{nope") + " support -n 2").code == 2);
  CHECK(run("--params " + params + " frobnicate").code == 2);
  CHECK(run("rank1 --level 2 --h-values 0,1/2 --k 0 --j 1").code == 0);
  CHECK(run("selftest quick").code == 0);
}
