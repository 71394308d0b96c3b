#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <sys/wait.h>
#include <unistd.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"

// VERSOR_CLI_PATH and GOLDEN_DIR are injected by the build.

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
  std::string err;
};

std::string slurp(const std::filesystem::path& p) {
  std::ifstream f(p, std::ios::binary);
  REQUIRE_MESSAGE(f.good(), "missing file: " << p.string());
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

RunResult run_cli(const std::string& args) {
  static int counter = 0;
  auto dir = std::filesystem::temp_directory_path();
  auto tag = std::to_string(::getpid()) + "_" + std::to_string(++counter);
  auto out_path = dir / ("versor_out_" + tag);
  auto err_path = dir / ("versor_err_" + tag);
  std::string cmd = std::string(VERSOR_CLI_PATH) + " " + args + " > " +
                    out_path.string() + " 2> " + err_path.string();
  int rc = std::system(cmd.c_str());
  RunResult r;
  r.exit_code = (rc >= 0 && WIFEXITED(rc)) ? WEXITSTATUS(rc) : -1;
  r.out = slurp(out_path);
  r.err = slurp(err_path);
  std::filesystem::remove(out_path);
  std::filesystem::remove(err_path);
  return r;
}

std::string golden(const std::string& name) {
  return slurp(std::filesystem::path(GOLDEN_DIR) / name);
}

void check_golden(const std::string& args, const std::string& name) {
  CAPTURE(args);
  RunResult r = run_cli(args);
  CHECK(r.exit_code == 0);
  CHECK(r.err.empty());
  CHECK(r.out == golden(name));
}

}  // namespace

TEST_CASE("golden outputs are reproduced byte for byte") {
  check_golden("roots H3 --format csv", "roots_h3.csv");
  check_golden("roots A1^3 --format json", "roots_a1x3.json");
  check_golden("group A1^3 --pin --format csv", "group_a1x3_pin.csv");
  check_golden("classes H3", "classes_h3.json");
  check_golden("induce H3 --identify", "induce_h3_identify.json");
  check_golden("aut induced:H3", "aut_induced_h3.json");
  check_golden("rep H3 --kind leftmult", "rep_h3_leftmult.json");
  check_golden("rep H3 --kind so3 --format csv", "rep_h3_so3.csv");
  check_golden("chartable H3 --format csv", "chartable_h3.csv");
  check_golden("chartable H3 --binary --format csv",
               "chartable_h3_binary.csv");
  check_golden("mckay H3", "mckay_h3.dot");
  check_golden("mckay A3 --format json", "mckay_a3.json");
  check_golden("fold-e8", "fold_e8.json");
}

TEST_CASE("an edge-list diagram matches its named family byte for byte") {
  RunResult named = run_cli("roots H3 --format csv");
  RunResult dsl =
      run_cli("roots \"rank=3; edges: 1-2:3, 2-3:5\" --format csv");
  CHECK(named.exit_code == 0);
  CHECK(dsl.exit_code == 0);
  CHECK(named.out == dsl.out);
}

TEST_CASE("reruns are deterministic") {
  for (const char* args :
       {"chartable H3 --binary --format csv", "fold-e8", "mckay B3",
        "classes B3 --pin"}) {
    RunResult a = run_cli(args);
    RunResult b = run_cli(args);
    CHECK(a.exit_code == 0);
    CHECK(a.out == b.out);
    CHECK(a.out.size() > 0);
  }
}

TEST_CASE("exit codes distinguish usage errors from domain errors") {
  RunResult bad_name = run_cli("roots Z9");
  CHECK(bad_name.exit_code == 2);
  CHECK(bad_name.err.find("unknown diagram") != std::string::npos);
  CHECK(bad_name.out.empty());

  CHECK(run_cli("roots H3 --format yaml").exit_code == 2);
  CHECK(run_cli("group H3 --pin --spin").exit_code == 2);
  CHECK(run_cli("chartable").exit_code == 2);    // missing argument
  CHECK(run_cli("frobnicate H3").exit_code == 2);
  CHECK(run_cli("induce E8").exit_code == 1);    // needs a rank-3 system
  CHECK(run_cli("--help").exit_code == 0);
  CHECK(run_cli("roots --help").exit_code == 0);
}

TEST_CASE("precision flag changes decimal padding only") {
  RunResult p6 = run_cli("induce H3 --identify");
  RunResult p12 = run_cli("induce H3 --identify --precision 12");
  CHECK(p6.exit_code == 0);
  CHECK(p12.exit_code == 0);
  CHECK(p6.out != p12.out);
}
