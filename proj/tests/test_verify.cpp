#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <string>

#include "spinphase/json_io.hpp"
#include "spinphase/verify.hpp"

using namespace spinphase;

TEST_CASE("default invariant suite passes") {
  const verify_report rep = run_suite();
  CHECK(rep.all_passed());
  CHECK(rep.results.size() >= 19);

  CHECK(std::is_sorted(rep.results.begin(), rep.results.end(),
                       [](const invariant_result& a, const invariant_result& b) {
                         return a.name < b.name;
                       }));
  for (const auto& r : rep.results) {
    INFO(r.name);
    CHECK(r.cases > 0);
    CHECK(r.passed);
    CHECK(!r.witness.empty());
    if (r.lower_bound) {
      CHECK(r.value > r.bound);
    } else {
      CHECK(r.value <= r.bound);
    }
  }
}

TEST_CASE("zero-phase custom convention yields the old convention's profile") {
  verify_config custom_cfg;
  custom_cfg.samples = 50;
  custom_cfg.conventions = {phase_convention::custom(0.0, 0.0)};
  verify_config old_cfg;
  old_cfg.samples = 50;
  old_cfg.conventions = {phase_convention::old_phase()};

  const verify_report a = run_suite(custom_cfg);
  const verify_report b = run_suite(old_cfg);
  REQUIRE(a.results.size() == b.results.size());
  for (std::size_t i = 0; i < a.results.size(); ++i) {
    CHECK(a.results[i].name == b.results[i].name);
    CHECK(a.results[i].value == b.results[i].value);
    CHECK(a.results[i].passed);
  }
}

TEST_CASE("suite report serializes deterministically") {
  verify_config cfg;
  cfg.samples = 60;
  const std::string a = to_json_text(run_suite(cfg));
  const std::string b = to_json_text(run_suite(cfg));
  CHECK(a == b);
  CHECK(!a.empty());
  CHECK(a.back() == '\n');
}

TEST_CASE("an impossible tolerance fails the upper-bound invariants") {
  verify_config cfg;
  cfg.samples = 40;
  cfg.tolerance = 1e-300;
  const verify_report rep = run_suite(cfg);
  CHECK_FALSE(rep.all_passed());
}

TEST_CASE("invalid configurations are rejected") {
  verify_config cfg;
  cfg.samples = 0;
  CHECK_THROWS_AS(run_suite(cfg), invalid_config_error);

  verify_config bad_tol;
  bad_tol.tolerance = -1.0;
  CHECK_THROWS_AS(run_suite(bad_tol), invalid_config_error);

  verify_config no_conv;
  no_conv.conventions.clear();
  CHECK_THROWS_AS(run_suite(no_conv), invalid_config_error);
}

TEST_CASE("different seeds keep every invariant within bounds") {
  verify_config cfg;
  cfg.samples = 50;
  cfg.seed = 20260814;
  CHECK(run_suite(cfg).all_passed());
}
