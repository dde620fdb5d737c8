#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <cstdint>
#include <string>

#include "spinphase/json_io.hpp"
#include "spinphase/simulate.hpp"

using namespace spinphase;

TEST_CASE("equatorial measurement after a pole preparation splits evenly") {
  sim_config cfg;
  cfg.prepare = direction(0.0, 0.0);
  cfg.chain = {direction(0.5 * pi, 0.0)};
  const sim_result res = run_simulation(cfg);

  REQUIRE(res.paths.size() == 2);
  CHECK(res.paths[0].path == "++");
  CHECK(res.paths[1].path == "+-");

  std::uint64_t total = 0;
  for (const auto& ps : res.paths) total += ps.count;
  CHECK(total == cfg.shots);

  const double sigma = std::sqrt(0.25 / static_cast<double>(cfg.shots));
  for (const auto& ps : res.paths) {
    CHECK(std::abs(ps.predicted - 0.5) < 1e-12);
    CHECK(std::abs(ps.empirical - ps.predicted) <= 4.0 * sigma);
  }
  CHECK(res.max_sigma <= 4.0);
}

TEST_CASE("simulation output is reproducible for a fixed seed") {
  sim_config cfg;
  cfg.prepare = direction(0.7, 0.3);
  cfg.chain = {direction(1.9, 2.2), direction(0.4, 5.0)};
  cfg.shots = 20000;
  cfg.seed = 1234;
  const std::string a = to_json_text(run_simulation(cfg));
  const std::string b = to_json_text(run_simulation(cfg));
  CHECK(a == b);
}

TEST_CASE("swapping the phase convention leaves the counts essentially fixed") {
  sim_config cfg;
  cfg.prepare = direction(1.1, 0.8);
  cfg.chain = {direction(2.0, 4.1), direction(0.9, 1.6)};
  cfg.shots = 50000;

  cfg.convention = phase_convention::old_phase();
  const sim_result old_run = run_simulation(cfg);
  cfg.convention = phase_convention::new_phase();
  const sim_result new_run = run_simulation(cfg);

  REQUIRE(old_run.paths.size() == new_run.paths.size());
  for (std::size_t i = 0; i < old_run.paths.size(); ++i) {
    CHECK(old_run.paths[i].path == new_run.paths[i].path);
    // The outcome probabilities agree across conventions; at most a draw
    // falling exactly between the two rounded step probabilities can move.
    const auto a = old_run.paths[i].count;
    const auto b = new_run.paths[i].count;
    CHECK((a > b ? a - b : b - a) <= 2);
  }
}

TEST_CASE("measuring through an intermediate axis destroys the interference") {
  const direction z(0.0, 0.0), x(0.5 * pi, 0.0);
  const interference_result r = interference_check(z, x, z);
  CHECK(std::abs(r.direct - 1.0) < 1e-12);
  CHECK(std::abs(r.via_measured_b - 0.5) < 1e-12);
}

TEST_CASE("a degenerate intermediate axis leaves both routes equal") {
  const direction a(0.7, 1.2), c(2.1, 4.8);
  const double p_direct = probabilities(
      transition_amplitudes(a, c, phase_convention::new_phase()))[0][0];
  for (const direction& b : {a, c}) {
    const interference_result r = interference_check(a, b, c);
    CHECK(std::abs(r.direct - p_direct) < 1e-12);
    CHECK(std::abs(r.via_measured_b - p_direct) < 1e-12);
  }
}

TEST_CASE("preparing the down outcome mirrors the path tree") {
  sim_config cfg;
  cfg.prepare = direction(0.9, 2.5);
  cfg.initial = outcome::down;
  cfg.chain = {cfg.prepare};
  cfg.shots = 2000;
  const sim_result res = run_simulation(cfg);
  REQUIRE(res.paths.size() == 2);
  CHECK(res.paths[0].path == "-+");
  CHECK(res.paths[1].path == "--");
  CHECK(res.paths[1].count == cfg.shots);
  CHECK(res.paths[1].predicted > 1.0 - 1e-12);
}

TEST_CASE("simulation rejects malformed configurations") {
  sim_config cfg;
  cfg.prepare = direction(0.0, 0.0);
  cfg.chain = {direction(1.0, 1.0)};

  sim_config no_shots = cfg;
  no_shots.shots = 0;
  CHECK_THROWS_AS(run_simulation(no_shots), invalid_config_error);

  sim_config no_chain = cfg;
  no_chain.chain.clear();
  CHECK_THROWS_AS(run_simulation(no_chain), invalid_config_error);

  sim_config long_chain = cfg;
  long_chain.chain.assign(max_chain_length + 1, direction(1.0, 1.0));
  CHECK_THROWS_AS(run_simulation(long_chain), invalid_config_error);
}

TEST_CASE("simulation configs round-trip through JSON") {
  const std::string text = R"({
    "prepare": {"theta": 0.25, "phi": 1.5},
    "initial": "down",
    "chain": [{"theta": 1.57, "phi": 0.0}, {"theta": 2.4, "phi": 3.1}],
    "shots": 5000,
    "seed": 99,
    "convention": "custom:0.2,-0.4"
  })";
  const sim_config cfg = sim_config_from_json(text);
  CHECK(cfg.prepare == direction(0.25, 1.5));
  CHECK(cfg.initial == outcome::down);
  REQUIRE(cfg.chain.size() == 2);
  CHECK(cfg.chain[1] == direction(2.4, 3.1));
  CHECK(cfg.shots == 5000);
  CHECK(cfg.seed == 99);
  CHECK(cfg.convention == phase_convention::custom(0.2, -0.4));

  CHECK_THROWS_AS(sim_config_from_json("{not json"), invalid_config_error);
  CHECK_THROWS_AS(sim_config_from_json(R"({"prepare": {"theta": 0, "phi": 0},
                                           "initial": "sideways",
                                           "chain": [{"theta": 1, "phi": 0}]})"),
                  invalid_config_error);
  CHECK_THROWS_AS(sim_config_from_json(R"({"chain": []})"), invalid_config_error);
  CHECK_THROWS_AS(sim_config_from_json(R"({"prepare": {"theta": "x", "phi": 0},
                                           "chain": [{"theta": 1, "phi": 0}]})"),
                  invalid_config_error);
}
