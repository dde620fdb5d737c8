#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "spinphase/paper_tables.hpp"

using namespace spinphase;

TEST_CASE("formula registry is complete and free of duplicate ids") {
  const auto formulas = register_all();
  CHECK(formulas.size() == 122);
  CHECK(formulas.size() >= 40);

  std::set<std::string> ids;
  for (const auto& f : formulas) ids.insert(f.id);
  CHECK(ids.size() == formulas.size());

  for (const auto& f : formulas) {
    CHECK(!f.section.empty());
    CHECK(!f.quote_anchor.empty());
    CHECK(static_cast<bool>(f.evaluate));
    CHECK(static_cast<bool>(f.constructed));
  }
}

TEST_CASE("old-convention run flags exactly the two transposed-entry misprints") {
  const comparison_report rep = compare(uniform_grid(), phase_convention::old_phase());
  CHECK(rep.entries.size() == 32);
  const std::vector<std::string> expected = {"old.sigma_c.12", "old.sigma_c.21"};
  CHECK(rep.mismatch_ids() == expected);
}

TEST_CASE("new-convention run flags the remaining documented misprints") {
  const comparison_report rep = compare(uniform_grid(), phase_convention::new_phase());
  CHECK(rep.entries.size() == 90);

  std::vector<std::string> expected;
  for (const auto& id : documented_typos()) {
    if (id.rfind("old.", 0) != 0) expected.push_back(id);
  }
  CHECK(rep.mismatch_ids() == expected);
}

TEST_CASE("full comparison matches the documented misprint list exactly") {
  const comparison_report rep = compare_all(default_grid());
  CHECK(rep.entries.size() == 122);
  CHECK(rep.mismatch_ids() == documented_typos());

  for (const auto& e : rep.entries) {
    if (e.verdict == formula_verdict::match) {
      CHECK(e.max_residual <= rep.tolerance);
    } else {
      CHECK(e.max_residual > rep.tolerance);
      // Every flagged entry carries a corrected form that actually fixes it.
      REQUIRE(e.has_correction);
      CHECK(e.corrected_max_residual <= 1e-12);
    }
  }
}

TEST_CASE("verdicts are stable across unrelated grids") {
  const comparison_report a = compare_all(uniform_grid());
  const comparison_report b = compare_all(random_grid(200, 99));
  REQUIRE(a.entries.size() == b.entries.size());
  for (std::size_t i = 0; i < a.entries.size(); ++i) {
    CHECK(a.entries[i].formula_id == b.entries[i].formula_id);
    CHECK(a.entries[i].verdict == b.entries[i].verdict);
  }
}

TEST_CASE("custom conventions have no transcribed tables") {
  const comparison_report rep =
      compare(uniform_grid(), phase_convention::custom(0.3, 0.4));
  CHECK(rep.entries.empty());
}

TEST_CASE("comparison rejects an empty grid") {
  angle_grid g;
  g.label = "empty";
  CHECK_THROWS_AS(compare(g, phase_convention::old_phase()), invalid_config_error);
}

TEST_CASE("mismatch witnesses record a concrete violating point") {
  const comparison_report rep = compare(uniform_grid(), phase_convention::old_phase());
  for (const auto& e : rep.entries) {
    if (e.verdict != formula_verdict::mismatch) continue;
    // Re-evaluating the formula at its recorded witness reproduces the gap.
    CHECK(std::abs(e.printed_value - e.constructed_value) >= rep.tolerance);
  }
}
