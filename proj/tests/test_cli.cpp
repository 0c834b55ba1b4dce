#include "doctest.h"

#include <array>
#include <cstdio>
#include <string>

#ifndef PRONORM_CLI_PATH
#define PRONORM_CLI_PATH "pronorm"
#endif

namespace {

struct RunResult {
  int exit_code;
  std::string output;
};

RunResult run_cli(const std::string& args) {
  std::string cmd = std::string(PRONORM_CLI_PATH) + " " + args + " 2>&1";
  std::array<char, 4096> buf{};
  std::string out;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  while (std::size_t n = fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), n);
  int status = pclose(pipe);
  return {WEXITSTATUS(status), out};
}

}  // namespace

TEST_CASE("group eval reports order and handles") {
  RunResult r = run_cli("group eval '{\"wreath\":{\"base\":{\"cyclic\":3},\"top_degree\":3}}'");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("\"order\": \"162\"") != std::string::npos);

  RunResult sp = run_cli("group eval '{\"sp\":{\"n\":2,\"q\":3}}'");
  CHECK(sp.exit_code == 0);
  CHECK(sp.output.find("\"order\": \"51840\"") != std::string::npos);
}

TEST_CASE("malformed spec exits 2, cap exceeded exits 3") {
  CHECK(run_cli("group eval '{\"sym\":}'").exit_code == 2);
  CHECK(run_cli("group eval '{\"symmetric\":4}'").exit_code == 2);
  CHECK(run_cli("group eval '{\"unknown\":1}'").exit_code == 2);
  // A tiny conjugacy-search cap trips as soon as a witness needs a real
  // search.
  RunResult capped = run_cli(
      "pronormal check '{\"alt\":5}' --subgroup '[[1,0,3,2,4],[2,3,0,1,4]]' "
      "--cap-join 1");
  CHECK(capped.exit_code == 3);
}

TEST_CASE("pronormal check exit codes") {
  // Normal subgroup: pronormal, exit 0.
  RunResult ok = run_cli(
      "pronormal check '{\"sym\":4}' --subgroup "
      "'[[1,0,3,2],[2,3,0,1]]'");
  CHECK(ok.exit_code == 0);
  CHECK(ok.output.find("\"status\": \"pronormal\"") != std::string::npos);

  // The diagonal in the Frobenius product: exit 1 with a failing witness.
  RunResult bad = run_cli(
      "pronormal check '{\"product\":[{\"frobenius73\":{}},{\"frobenius73\":{}}]}' "
      "--subgroup '[[1,2,3,4,5,6,0,8,9,10,11,12,13,7]]'");
  CHECK(bad.exit_code == 1);
  CHECK(bad.output.find("\"status\": \"not_pronormal\"") != std::string::npos);
  CHECK(bad.output.find("\"failing_g\"") != std::string::npos);
  CHECK(bad.output.find("\"join_order\": \"49\"") != std::string::npos);

  // Even index with the NormSyl method: precondition, exit 2.
  RunResult even = run_cli(
      "pronormal check '{\"sym\":4}' --subgroup '[[1,0,2,3]]' --method normsyl");
  CHECK(even.exit_code == 2);

  // Non-member generators: precondition, exit 2.
  RunResult nonmember =
      run_cli("pronormal check '{\"alt\":4}' --subgroup '[[1,0,2,3]]'");
  CHECK(nonmember.exit_code == 2);
}

TEST_CASE("oddindex enumerate lists the overgroups") {
  RunResult r = run_cli("oddindex enumerate '{\"alt\":5}'");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("\"index\": \"15\"") != std::string::npos);
  CHECK(r.output.find("\"index\": \"5\"") != std::string::npos);
  CHECK(r.output.find("\"index\": \"1\"") != std::string::npos);
}

TEST_CASE("oracle command") {
  RunResult r = run_cli("oracle '{\"family\":\"PSp\",\"n\":3,\"q\":3}'");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("has_nonpronormal") != std::string::npos);
  CHECK(r.output.find("symplectic_counterexample_6n") != std::string::npos);

  CHECK(run_cli("oracle '{\"family\":\"PSp\"}'").exit_code == 2);
  CHECK(run_cli("oracle '{\"family\":\"PSL2\",\"q\":3}'").exit_code == 2);
}

TEST_CASE("repro run and filters") {
  RunResult r = run_cli("repro run --filter frobenius_product --format text");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("frobenius_product: pass") != std::string::npos);

  CHECK(run_cli("repro run --filter no_such_scenario").exit_code == 2);
}

TEST_CASE("byte-identical output for identical invocations") {
  const char* cmd =
      "pronormal check '{\"wreath\":{\"base\":{\"cyclic\":3},\"top_degree\":3}}' "
      "--handle top";
  RunResult a = run_cli(cmd);
  RunResult b = run_cli(cmd);
  CHECK(a.exit_code == 1);
  CHECK(a.output == b.output);

  RunResult c = run_cli("oddindex enumerate '{\"sl2\":{\"q\":3}}'");
  RunResult d = run_cli("oddindex enumerate '{\"sl2\":{\"q\":3}}'");
  CHECK(c.output == d.output);
}
