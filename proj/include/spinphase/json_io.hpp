#pragma once

// JSON views of every report type, plus parsing for simulator configs and
// convention names. Key order is fixed and floating-point values use the
// shortest round-trip form, so serializing the same report twice yields the
// same bytes.

#include <cstdint>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "spinphase/amplitudes.hpp"
#include "spinphase/convention.hpp"
#include "spinphase/direction.hpp"
#include "spinphase/errors.hpp"
#include "spinphase/operators.hpp"
#include "spinphase/paper_tables.hpp"
#include "spinphase/reductions.hpp"
#include "spinphase/rng.hpp"
#include "spinphase/simulate.hpp"
#include "spinphase/verify.hpp"

namespace spinphase {

using json = nlohmann::ordered_json;

namespace detail {

inline json to_json(const cplx& z) { return json{{"re", z.real()}, {"im", z.imag()}}; }

inline json to_json(const direction& d) {
  return json{{"theta", d.theta}, {"phi", d.phi}};
}

inline json to_json(const vec2c& v) { return json::array({to_json(v.x), to_json(v.y)}); }

inline json to_json(const mat2c& m) {
  return json::array({json::array({to_json(m.m11), to_json(m.m12)}),
                      json::array({to_json(m.m21), to_json(m.m22)})});
}

}  // namespace detail

inline outcome parse_outcome(const std::string& text) {
  if (text == "up") return outcome::up;
  if (text == "down") return outcome::down;
  throw invalid_config_error("unknown outcome '" + text + "' (expected up or down)");
}

inline phase_convention parse_convention(const std::string& text) {
  if (text == "old") return phase_convention::old_phase();
  if (text == "new") return phase_convention::new_phase();
  const std::string prefix = "custom:";
  if (text.rfind(prefix, 0) == 0) {
    const std::string body = text.substr(prefix.size());
    const std::size_t comma = body.find(',');
    if (comma != std::string::npos) {
      try {
        std::size_t used_plus = 0, used_minus = 0;
        const double ap = std::stod(body.substr(0, comma), &used_plus);
        const std::string rest = body.substr(comma + 1);
        const double am = std::stod(rest, &used_minus);
        if (used_plus == comma && used_minus == rest.size()) {
          return phase_convention::custom(ap, am);
        }
      } catch (const std::logic_error&) {
      }
    }
  }
  throw invalid_config_error("unknown convention '" + text +
                             "' (expected old, new, or custom:<a>,<b>)");
}

inline json to_json(const amplitude_matrix& m) {
  const auto p = probabilities(m);
  json j;
  j["from"] = detail::to_json(m.from);
  j["to"] = detail::to_json(m.to);
  j["convention"] = m.convention.name();
  j["psi"] = detail::to_json(m.psi);
  j["probabilities"] = json::array({json::array({p[0][0], p[0][1]}),
                                    json::array({p[1][0], p[1][1]})});
  return j;
}

inline json to_json(const operator_set& ops) {
  json j;
  j["b"] = detail::to_json(ops.b);
  j["c"] = detail::to_json(ops.c);
  j["convention"] = ops.convention.name();
  j["sigma_c"] = detail::to_json(ops.sigma_c);
  j["sigma_x"] = detail::to_json(ops.sigma_x);
  j["sigma_y"] = detail::to_json(ops.sigma_y);
  j["sigma_plus"] = detail::to_json(ops.sigma_plus);
  j["sigma_minus"] = detail::to_json(ops.sigma_minus);
  j["eigenvectors"] = json{
      {"c", json{{"plus", detail::to_json(ops.eig_c_plus)},
                 {"minus", detail::to_json(ops.eig_c_minus)}}},
      {"x", json{{"plus", detail::to_json(ops.eig_x_plus)},
                 {"minus", detail::to_json(ops.eig_x_minus)}}},
      {"y", json{{"plus", detail::to_json(ops.eig_y_plus)},
                 {"minus", detail::to_json(ops.eig_y_minus)}}},
  };
  return j;
}

inline json to_json(const comparison_report& rep) {
  json j;
  j["tolerance"] = rep.tolerance;
  j["grid"] = rep.grid_label;
  json entries = json::array();
  for (const auto& e : rep.entries) {
    json je;
    je["formula_id"] = e.formula_id;
    je["section"] = e.section;
    je["quote_anchor"] = e.quote_anchor;
    je["max_residual"] = e.max_residual;
    je["verdict"] = to_string(e.verdict);
    je["witness"] = json{{"b", detail::to_json(e.witness_b)},
                         {"c", detail::to_json(e.witness_c)},
                         {"printed", detail::to_json(e.printed_value)},
                         {"constructed", detail::to_json(e.constructed_value)}};
    if (e.has_correction) {
      je["corrected_max_residual"] = e.corrected_max_residual;
    }
    entries.push_back(std::move(je));
  }
  j["entries"] = std::move(entries);
  return j;
}

inline json to_json(const verify_report& rep) {
  json j;
  j["generator"] = generator_name;
  j["seed"] = rep.config.seed;
  j["samples"] = rep.config.samples;
  j["tolerance"] = rep.config.tolerance;
  json convs = json::array();
  for (const auto& c : rep.config.conventions) convs.push_back(c.name());
  j["conventions"] = std::move(convs);
  j["all_passed"] = rep.all_passed();
  json inv = json::array();
  for (const auto& r : rep.results) {
    inv.push_back(json{{"name", r.name},
                       {"cases", r.cases},
                       {"value", r.value},
                       {"bound", r.bound},
                       {"kind", r.lower_bound ? "lower" : "upper"},
                       {"passed", r.passed},
                       {"witness", r.witness}});
  }
  j["invariants"] = std::move(inv);
  return j;
}

inline json to_json(const sim_result& res) {
  json j;
  j["generator"] = generator_name;
  j["seed"] = res.config.seed;
  j["shots"] = res.config.shots;
  j["convention"] = res.config.convention.name();
  j["prepare"] = detail::to_json(res.config.prepare);
  j["initial"] = res.config.initial == outcome::up ? "up" : "down";
  json chain = json::array();
  for (const auto& d : res.config.chain) chain.push_back(detail::to_json(d));
  j["chain"] = std::move(chain);
  json paths = json::array();
  for (const auto& p : res.paths) {
    paths.push_back(json{{"path", p.path},
                         {"count", p.count},
                         {"predicted", p.predicted},
                         {"empirical", p.empirical}});
  }
  j["paths"] = std::move(paths);
  j["max_abs_error"] = res.max_abs_error;
  j["max_sigma"] = res.max_sigma;
  return j;
}

inline json to_json(const limit_report& rep) {
  json j;
  j["limit"] = rep.limit;
  j["convention"] = rep.convention;
  j["tolerance"] = rep.tolerance;
  j["points"] = rep.points;
  j["max_residual"] = rep.max_residual();
  j["passed"] = rep.passed();
  json checks = json::array();
  for (const auto& c : rep.checks) {
    checks.push_back(json{{"name", c.name}, {"max_residual", c.max_residual}});
  }
  j["checks"] = std::move(checks);
  return j;
}

inline json to_json(const azimuth_scan& scan) {
  json j;
  j["convention"] = scan.convention;
  j["scan_points"] = scan.scan_points;
  j["best_phi"] = scan.best_phi;
  j["best_residual"] = scan.best_residual;
  j["predicted_phi"] = scan.predicted_phi;
  j["predicted_residual"] = scan.predicted_residual;
  j["global_phase"] = detail::to_json(scan.global_phase);
  j["phase_spread"] = scan.phase_spread;
  return j;
}

template <typename T>
inline std::string to_json_text(const T& value) {
  return to_json(value).dump(2) + "\n";
}

inline sim_config sim_config_from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw invalid_config_error(std::string("simulation config is not valid JSON: ") +
                               e.what());
  }
  sim_config cfg;
  try {
    if (!j.contains("prepare") || !j.contains("chain")) {
      throw invalid_config_error("simulation config needs 'prepare' and 'chain'");
    }
    cfg.prepare = direction(j["prepare"].at("theta").get<double>(),
                            j["prepare"].at("phi").get<double>());
    cfg.chain.clear();
    for (const auto& step : j["chain"]) {
      cfg.chain.emplace_back(step.at("theta").get<double>(),
                             step.at("phi").get<double>());
    }
    cfg.shots = j.value("shots", cfg.shots);
    cfg.seed = j.value("seed", cfg.seed);
    if (j.contains("initial")) {
      cfg.initial = parse_outcome(j["initial"].get<std::string>());
    }
    if (j.contains("convention")) {
      cfg.convention = parse_convention(j["convention"].get<std::string>());
    }
  } catch (const json::exception& e) {
    throw invalid_config_error(std::string("malformed simulation config: ") + e.what());
  }
  return cfg;
}

}  // namespace spinphase
