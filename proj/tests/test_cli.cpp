#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "minherm/matrix_io.hpp"

// End-to-end checks of the command line tool: exit-code contract and
// byte-identical reruns. The binary path is injected by the build.

#ifdef MINHERM_CLI_PATH

namespace {

namespace fs = std::filesystem;

struct RunResult {
  int exit_code = -1;
  std::string output;
};

RunResult run_cli(const std::string& args) {
  const fs::path out_path = fs::temp_directory_path() / "minherm_cli_out.txt";
  const std::string cmd = std::string(MINHERM_CLI_PATH) + " " + args + " > " + out_path.string() + " 2>&1";
  const int raw = std::system(cmd.c_str());
  RunResult r;
  r.exit_code = WEXITSTATUS(raw);
  std::ifstream in(out_path);
  std::stringstream ss;
  ss << in.rdbuf();
  r.output = ss.str();
  return r;
}

fs::path corpus_dir() {
  static const fs::path dir = [] {
    const fs::path d = fs::temp_directory_path() / "minherm_cli_corpus";
    run_cli("examples export " + d.string());
    return d;
  }();
  return dir;
}

}  // namespace

TEST_CASE("verify exit codes across the corpus") {
  CHECK(run_cli("verify " + (corpus_dir() / "minimal-4x4.json").string()).exit_code == 0);
  CHECK(run_cli("verify " + (corpus_dir() / "minimal-2x2.json").string()).exit_code == 0);
  CHECK(run_cli("verify " + (corpus_dir() / "diag-counterexample.json").string()).exit_code == 3);
}

TEST_CASE("verify reports the uncentered spectrum reason") {
  const RunResult r = run_cli("verify " + (corpus_dir() / "diag-counterexample.json").string());
  CHECK(r.output.find("spectrum not centered") != std::string::npos);
}

TEST_CASE("parse errors exit with code 1") {
  CHECK(run_cli("verify /nonexistent.json").exit_code == 1);
  const fs::path bad = fs::temp_directory_path() / "minherm_bad.json";
  std::ofstream(bad) << "{\"n\": 2, \"entries\": [[[0,0],[0,1]],[[0,1],[0,0]]]}";
  CHECK(run_cli("verify " + bad.string()).exit_code == 1);  // not Hermitian
  fs::remove(bad);
}

TEST_CASE("construct then verify round trip") {
  const fs::path out = fs::temp_directory_path() / "minherm_built.json";
  CHECK(run_cli("construct --lambda 1 --a 1 --x 1 -o " + out.string()).exit_code == 0);
  CHECK(run_cli("verify " + out.string()).exit_code == 0);

  // The provenance key does not break the matrix file contract.
  CHECK(minherm::read_matrix(out.string()).dim() == 2);
  fs::remove(out);
}

TEST_CASE("eig prints the known spectrum") {
  const RunResult r = run_cli("eig " + (corpus_dir() / "minimal-4x4.json").string() + " --json");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("\"eigenvalues\"") != std::string::npos);
  CHECK(r.output.find("-2.0") != std::string::npos);
}

TEST_CASE("distance agrees with verify on the flip matrix") {
  const RunResult r = run_cli("distance " + (corpus_dir() / "minimal-2x2.json").string() + " --json");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("\"distance\": 1.0") != std::string::npos);
}

TEST_CASE("identical inputs and seeds give byte-identical output") {
  const std::string args = "distance " + (corpus_dir() / "minimal-4x4.json").string() +
                           " --seed 7 --starts 4 --json";
  const RunResult a = run_cli(args);
  const RunResult b = run_cli(args);
  CHECK(a.exit_code == 0);
  CHECK(a.output == b.output);
}

TEST_CASE("companion subcommand writes a verifiable matrix") {
  const fs::path out = fs::temp_directory_path() / "minherm_q.json";
  const RunResult r =
      run_cli("companion " + (corpus_dir() / "hadamard-3x3-P.json").string() + " -o " + out.string());
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("found") != std::string::npos);
  CHECK(minherm::read_matrix(out.string()).dim() == 3);
  fs::remove(out);
}

TEST_CASE("hull subcommand decides membership") {
  const fs::path t = fs::temp_directory_path() / "minherm_t.json";
  const fs::path g1 = fs::temp_directory_path() / "minherm_g1.json";
  const fs::path g2 = fs::temp_directory_path() / "minherm_g2.json";
  minherm::write_real_vector(t.string(), {0.5, 0.5});
  minherm::write_real_vector(g1.string(), {1.0, 0.0});
  minherm::write_real_vector(g2.string(), {0.0, 1.0});

  const std::string gens = g1.string() + " " + g2.string();
  const RunResult member =
      run_cli("hull --target " + t.string() + " --gens " + gens + " --kind convex --json");
  CHECK(member.exit_code == 0);
  CHECK(member.output.find("\"member\": true") != std::string::npos);

  minherm::write_real_vector(t.string(), {1.5, -0.5});
  const RunResult outside =
      run_cli("hull --target " + t.string() + " --gens " + gens + " --kind cone --json");
  CHECK(outside.exit_code == 0);
  CHECK(outside.output.find("\"member\": false") != std::string::npos);

  fs::remove(t);
  fs::remove(g1);
  fs::remove(g2);
}

TEST_CASE("MINHERM_SEED environment variable is honored") {
  const std::string path = (corpus_dir() / "minimal-2x2.json").string();
  const RunResult env_run = run_cli("distance " + path + " --starts 3 --json");
  // Same command with the env seed set to the default 0 must agree.
  const fs::path out_path = fs::temp_directory_path() / "minherm_env_out.txt";
  const std::string cmd = std::string("MINHERM_SEED=0 ") + MINHERM_CLI_PATH + " distance " + path +
                          " --starts 3 --json > " + out_path.string() + " 2>&1";
  REQUIRE(std::system(cmd.c_str()) == 0);
  std::ifstream in(out_path);
  std::stringstream ss;
  ss << in.rdbuf();
  CHECK(ss.str() == env_run.output);
}

#endif  // MINHERM_CLI_PATH
