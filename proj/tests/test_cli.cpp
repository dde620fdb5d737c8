#include <catch2/catch_amalgamated.hpp>

#include <sys/wait.h>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iterator>
#include <string>

#include <json.hpp>

#include "spinphase/amplitudes.hpp"

using namespace spinphase;

namespace {

struct cli_run {
  int exit_code = -1;
  std::string out;
};

// Runs the installed binary through the shell; stderr is dropped so parse
// errors don't pollute the captured stream.
cli_run run_cli(const std::string& args, const std::string& env_prefix = "") {
  const std::string cmd = env_prefix + SPINPHASE_CLI_PATH " " + args + " 2>/dev/null";
  cli_run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  char buf[4096];
  while (std::size_t n = std::fread(buf, 1, sizeof buf, pipe)) r.out.append(buf, n);
  const int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

}  // namespace

TEST_CASE("cli amplitudes output matches the library") {
  const cli_run r = run_cli("--output json amplitudes --from 0.9,1.7 --to 2.1,5.0");
  REQUIRE(r.exit_code == 0);
  const auto j = nlohmann::json::parse(r.out);

  const amplitude_matrix m = transition_amplitudes(
      direction(0.9, 1.7), direction(2.1, 5.0), phase_convention::new_phase());
  CHECK(j["convention"] == "new");
  CHECK(j["from"]["theta"].get<double>() == m.from.theta);
  CHECK(std::abs(j["psi"][0][0]["re"].get<double>() - m.psi.m11.real()) < 1e-15);
  CHECK(std::abs(j["psi"][1][0]["im"].get<double>() - m.psi.m21.imag()) < 1e-15);
  const auto p = probabilities(m);
  CHECK(std::abs(j["probabilities"][0][1].get<double>() - p[0][1]) < 1e-15);
}

TEST_CASE("cli verify reports a passing suite") {
  const cli_run r = run_cli("--output json verify --samples 40");
  REQUIRE(r.exit_code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["all_passed"].get<bool>());
  CHECK(j["generator"] == "splitmix64");
}

TEST_CASE("cli verify fails with an unreachable tolerance") {
  const cli_run r = run_cli("--tol 1e-300 verify --samples 30");
  CHECK(r.exit_code == 2);
}

TEST_CASE("cli table comparison accepts the documented mismatches") {
  const cli_run r = run_cli("compare-paper --grid uniform");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("Mismatch") != std::string::npos);
}

TEST_CASE("cli limit reductions pass") {
  CHECK(run_cli("reduce --limit pauli --convention old").exit_code == 0);
  CHECK(run_cli("reduce --limit standard").exit_code == 0);
  CHECK(run_cli("--output json reduce --limit azimuth --convention new").exit_code == 0);
}

TEST_CASE("cli simulation is reproducible and honors the seed env variable") {
  const std::string args =
      "--output json simulate --prepare 0,0 --chain '1.2,0.4;0.9,2.2' --shots 20000";
  const cli_run a = run_cli(args + " --seed 7");
  const cli_run b = run_cli(args + " --seed 7");
  REQUIRE(a.exit_code == 0);
  CHECK(a.out == b.out);

  const cli_run via_env = run_cli(args, "SPINPHASE_SEED=7 ");
  CHECK(via_env.exit_code == 0);
  CHECK(via_env.out == a.out);

  const cli_run other = run_cli(args + " --seed 8");
  CHECK(other.out != a.out);
}

TEST_CASE("cli rejects bad invocations with exit code 1") {
  CHECK(run_cli("--convention bogus amplitudes --from 0,0 --to 1,1").exit_code == 1);
  CHECK(run_cli("no-such-command").exit_code == 1);
  CHECK(run_cli("amplitudes --from 0,0").exit_code == 1);
  CHECK(run_cli("simulate --prepare 0,0").exit_code == 1);
}

TEST_CASE("cli verify writes the report to a requested path") {
  const std::string path = std::string(SPINPHASE_CLI_PATH) + ".report.json";
  const cli_run r = run_cli("verify --samples 30 --report " + path);
  REQUIRE(r.exit_code == 0);
  std::ifstream in(path);
  REQUIRE(in.good());
  const std::string text((std::istreambuf_iterator<char>(in)),
                         std::istreambuf_iterator<char>());
  const auto j = nlohmann::json::parse(text);
  CHECK(j["all_passed"].get<bool>());
  CHECK(j["samples"].get<int>() == 30);
  std::remove(path.c_str());
}

TEST_CASE("cli simulate can prepare the down outcome") {
  const cli_run r = run_cli(
      "--output json simulate --prepare 0.4,1.0 --chain 0.4,1.0 --initial down "
      "--shots 500");
  REQUIRE(r.exit_code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["initial"] == "down");
  // Remeasuring the same axis keeps the prepared down outcome every time.
  for (const auto& p : j["paths"]) {
    if (p["path"] == "--") CHECK(p["count"].get<int>() == 500);
  }
}
