#include <doctest.h>

#include <array>
#include <cstdio>
#include <sys/wait.h>
#include <string>

#include <json.hpp>

#include "kspf/invariant.hpp"

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
};

RunResult run_cli(const std::string& args) {
  std::string cmd = std::string(KSPF_CLI_PATH) + " " + args + " 2>/dev/null";
  RunResult r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf;
  size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
  int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("is-trivial verdicts and exit codes") {
  RunResult yes = run_cli("is-trivial --nr 3 2 --word \"x1 y1 x1^-1 y1^-1\"");
  CHECK(yes.exit_code == 0);
  CHECK(yes.out.find("verdict: trivial") != std::string::npos);
  RunResult no = run_cli("is-trivial --nr 3 2 --word \"x1\"");
  CHECK(no.exit_code == 1);
  CHECK(no.out.find("verdict: nontrivial") != std::string::npos);
  CHECK(no.out.find("projection 1: a1") != std::string::npos);
  RunResult bad = run_cli("is-trivial --nr 3 2 --word \"x1^\"");
  CHECK(bad.exit_code == 2);
  RunResult unknown = run_cli("is-trivial --nr 3 2 --word \"zz\"");
  CHECK(unknown.exit_code == 2);
  RunResult badnr = run_cli("is-trivial --nr 4 3 --word \"x1\"");
  CHECK(badnr.exit_code == 2);
}

TEST_CASE("json output formats") {
  RunResult r = run_cli("is-trivial --nr 3 2 --word \"x1 y1 x1^-1 y1^-1\" --format json");
  CHECK(r.exit_code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["trivial"] == true);
  CHECK(j["projections"] == nlohmann::json({"", "", ""}));
  CHECK(j["n"] == 3);

  RunResult general =
      run_cli("is-trivial --nr 4 2 --word \"x1_1 x1_2 x1_1^-1 x1_2^-1\" --format json");
  CHECK(general.exit_code == 0);
  CHECK(nlohmann::json::parse(general.out)["trivial"] == true);

  RunResult nf = run_cli("normal-form --nr 4 2 --word \"x1_1 x2_3\" --format json");
  CHECK(nf.exit_code == 0);
  auto jnf = nlohmann::json::parse(nf.out);
  CHECK(jnf["delta"] == "");
  CHECK(jnf["factors"] == nlohmann::json({"x1_1", "", "x2_3"}));

  RunResult inv_text =
      run_cli("invariant --word \"x1 y2 x1^-1 y2^-1 x2 y1 x2^-1 y1^-1\" --format text");
  CHECK(inv_text.exit_code == 0);
  CHECK(inv_text.out.find("count: 1") != std::string::npos);
}

TEST_CASE("invariant subcommand") {
  RunResult r = run_cli("invariant --word \"x1 y2 x1^-1 y2^-1 x2 y1 x2^-1 y1^-1\"");
  CHECK(r.exit_code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["length"] == 8);
  CHECK(j["grid_bound"] == 8);
  CHECK(j["count"].get<long long>() >= 1);
  CHECK(j["pruning"] == true);
  CHECK(j.contains("wall_time_ms"));
  CHECK(j["nontrivial_points"].is_array());

  RunResult empty = run_cli("invariant --word \"\"");
  CHECK(empty.exit_code == 0);
  CHECK(nlohmann::json::parse(empty.out)["count"] == 0);

  RunResult nontrivial = run_cli("invariant --word \"x1 y1\"");
  CHECK(nontrivial.exit_code == 3);
}

TEST_CASE("invariant: pruned and unpruned runs agree") {
  std::string w = " --word \"x1 y2 x1^-1 y2^-1 x2 y1 x2^-1 y1^-1\"";
  auto a = nlohmann::json::parse(run_cli("invariant" + w).out);
  auto b = nlohmann::json::parse(run_cli("invariant --no-pruning" + w).out);
  a.erase("wall_time_ms");
  b.erase("wall_time_ms");
  a.erase("pruning");
  b.erase("pruning");
  CHECK(a == b);
}

TEST_CASE("wn and wn-experiment") {
  RunResult w1 = run_cli("wn --n 1");
  CHECK(w1.exit_code == 0);
  CHECK(w1.out == "x1 y2 x1^-1 y2^-1 x2 y1 x2^-1 y1^-1\n");
  RunResult w2 = run_cli("wn --n 2");
  CHECK(w2.out == "x1^2 y2^2 x1^-2 y2^-2 x2^2 y1^2 x2^-2 y1^-2\n");

  RunResult table = run_cli("wn-experiment --n-max 2 --threads 2");
  CHECK(table.exit_code == 0);
  CHECK(table.out.rfind("n,length,I_lower_bound_paper,I_computed,seconds\n", 0) == 0);
  CHECK(table.out.find("\n1,8,0,") != std::string::npos);
  CHECK(table.out.find("\n2,16,1,") != std::string::npos);
}

TEST_CASE("normal-form subcommand") {
  RunResult r = run_cli("normal-form --nr 4 2 --word \"x1_1\"");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("delta: 1\n") != std::string::npos);
  CHECK(r.out.find("factor 1: x1_1\n") != std::string::npos);
  CHECK(r.out.find("factor 3: 1\n") != std::string::npos);
  // normal form needs n >= r+2
  CHECK(run_cli("normal-form --nr 3 2 --word \"x1\"").exit_code == 2);
}

TEST_CASE("push subcommands") {
  RunResult r = run_cli("push --q 1 --word \"x1\"");
  CHECK(r.exit_code == 0);
  CHECK(r.out == "y1 y2^-1 x1 y2 y1^-1\n");
  CHECK(run_cli("push --q 0 --word \"s\"").out == "\n");
  CHECK(run_cli("push --q 0 --word \"x1 y1\"").out == "x1 y1\n");

  RunResult verify = run_cli("push-verify --q-min -2 --q-max 2");
  CHECK(verify.exit_code == 0);
  CHECK(verify.out.rfind("relator,q,length_of_push,trivial\n", 0) == 0);
  CHECK(verify.out.find(",false") == std::string::npos);
}

TEST_CASE("area-search subcommand") {
  RunResult r = run_cli(
      "area-search --nr 3 2 --word \"x1 y1 x1^-1 y1^-1\" --max-conj 1 --max-states 50000");
  CHECK(r.exit_code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["area"] == 1);
  CHECK(j["certificate"]["steps"].size() == 1);
  RunResult notfound =
      run_cli("area-search --nr 3 2 --word \"x1\" --max-len 10 --max-conj 1 --max-states 200");
  CHECK(notfound.exit_code == 1);
  CHECK(nlohmann::json::parse(notfound.out)["area"].is_null());
}

TEST_CASE("presentation export schema") {
  RunResult r = run_cli("presentation --nr 3 2");
  CHECK(r.exit_code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["generators"] == nlohmann::json({"x1", "x2", "y1", "y2"}));
  REQUIRE(j["relators"].is_array());
  CHECK(j["relators"].size() == 6);
  CHECK(j["relators"][0] == "x1 y1 x1^-1 y1^-1");
  RunResult big = run_cli("presentation --nr 4 2");
  CHECK(nlohmann::json::parse(big.out)["relators"].size() == 18);
}

TEST_CASE("fixed flags give byte-identical output") {
  std::string cmd = "push --q 3 --word \"x1 s y2 s^-1 x2^-1\"";
  RunResult a = run_cli(cmd);
  RunResult b = run_cli(cmd);
  CHECK(a.out == b.out);
  std::string pres = "presentation --nr 5 3";
  CHECK(run_cli(pres).out == run_cli(pres).out);
}

TEST_CASE("unknown subcommand or flag is a config error") {
  CHECK(run_cli("bogus").exit_code == 2);
  CHECK(run_cli("invariant").exit_code == 2);  // missing --word
}

}  // TEST_SUITE
