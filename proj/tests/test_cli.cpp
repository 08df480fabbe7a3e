#include <catch_amalgamated.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

namespace {

struct RunResult {
  int exit_code = -1;
  std::string output;
};

RunResult run_cli(const std::string &args) {
  static int counter = 0;
  std::string path = "cli_out_" + std::to_string(counter++) + ".txt";
  std::string cmd = std::string(WPD_CLI_PATH) + " " + args + " > " + path +
                    " 2>&1";
  int status = std::system(cmd.c_str());
  RunResult r;
  r.exit_code = WEXITSTATUS(status);
  std::ifstream f(path);
  std::stringstream ss;
  ss << f.rdbuf();
  r.output = ss.str();
  std::remove(path.c_str());
  return r;
}

std::string slurp(const std::string &path) {
  std::ifstream f(path, std::ios::binary);
  REQUIRE(f);
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

} // namespace

TEST_CASE("eval examples") {
  CHECK(run_cli("eval --weights 2,3 \"[E, x0]\"").output == "2*x0\n");
  CHECK(run_cli("eval --weights 2,3 \"d0 * x0^2\"").output ==
        "x0^2 d0 + 2*x0\n");
  CHECK(run_cli("eval --weights 2,3 \"x0 * x1 - x1 * x0\"").output == "0\n");
  CHECK(run_cli("eval --weights 1,1 \"[E, d1]\"").output == "-d1\n");
}

TEST_CASE("eval round trip") {
  std::string printed =
      run_cli("eval --weights 2,3 \"(x0 + d1)^2 - 1/3*x1\"").output;
  printed.pop_back(); // newline
  RunResult again = run_cli("eval --weights 2,3 \"" + printed + "\"");
  CHECK(again.output == printed + "\n");
}

TEST_CASE("semigroup queries") {
  CHECK(run_cli("semigroup --weights 6,9,20 frobenius").output ==
        "frobenius: 43\n");
  CHECK(run_cli("semigroup --weights 2,3 gaps").output == "gaps: [1]\n");
  RunResult member = run_cli("semigroup --weights 2,3 member 7");
  CHECK(member.exit_code == 0);
  CHECK(member.output.find("member 7: true") == 0);
}

TEST_CASE("exit codes") {
  CHECK(run_cli("classify --weights 1,1,1 --twist 0").exit_code == 0);
  CHECK(run_cli("classify --weights abc --twist 0").exit_code == 2);
  CHECK(run_cli("classify --weights 1,1,1 --twist 1/x").exit_code == 2);
  CHECK(run_cli("eval --weights 2,3 \"x0 +\"").exit_code == 2);
  CHECK(run_cli("eval --weights 2,3 \"x7\"").exit_code == 2);
  CHECK(run_cli("semigroup --weights 2,4 frobenius").exit_code == 3);
  CHECK(run_cli("semigroup --weights 2,4 gaps").exit_code == 3);
  CHECK(run_cli("verify --weights 2,3 --twist 0 koszul --padding 1")
            .exit_code == 3);
  CHECK(run_cli("verify --weights 2,3 --twist 0 koszul").exit_code == 0);
  // a wrong expectation turns into a verification failure
  CHECK(run_cli("verify --weights 2,3 --twist 0 koszul --expect-homology 7")
            .exit_code == 4);
  CHECK(run_cli("nonsense").exit_code == 2);
}

TEST_CASE("golden classification documents") {
  const char *rows[][2] = {
      {"classify_111_0.json", "classify --weights 1,1,1 --twist 0 --format json"},
      {"classify_23_1.json", "classify --weights 2,3 --twist 1 --format json"},
      {"classify_24_3.json", "classify --weights 2,4 --twist 3 --format json"},
      {"classify_111_m5.json",
       "classify --weights 1,1,1 --twist -5 --format json"},
      {"classify_122_half.json",
       "classify --weights 1,2,2 --twist 1/2 --format json"},
  };
  for (const auto &row : rows) {
    std::string golden = slurp(std::string(WPD_GOLDEN_DIR) + "/" + row[0]);
    RunResult r = run_cli(row[1]);
    CHECK(r.exit_code == 0);
    INFO(row[0]);
    CHECK(r.output == golden);
  }
}

TEST_CASE("verify output is reproducible") {
  std::string args =
      "verify --weights 2,3 --twist 0 all --seed 99 --format json";
  RunResult a = run_cli(args);
  RunResult b = run_cli(args);
  CHECK(a.exit_code == 0);
  CHECK(a.output == b.output);
}

TEST_CASE("out file writing") {
  std::string path = "cli_out_file.json";
  RunResult r = run_cli("classify --weights 2,3 --twist 1 --format json --out " +
                        path);
  CHECK(r.exit_code == 0);
  CHECK(r.output.empty());
  std::string contents = slurp(path);
  CHECK(contents.find("\"NonzeroWitness\"") != std::string::npos);
  std::remove(path.c_str());
}
