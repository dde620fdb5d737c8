#pragma once

// Property suite over seeded random directions. Every invariant reduces to
// one number: for upper-bound invariants the worst residual seen, which must
// stay at or below the configured tolerance; for lower-bound (detection)
// invariants the weakest violation seen, which must stay above its floor.
// Each result carries the witness at which that extreme occurred. The same
// seed always produces the same report, byte for byte once serialized, so
// reports can be diffed across runs and platforms.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <cstdio>
#include <iterator>
#include <string>
#include <utility>
#include <vector>

#include "spinphase/amplitudes.hpp"
#include "spinphase/convention.hpp"
#include "spinphase/direction.hpp"
#include "spinphase/errors.hpp"
#include "spinphase/linalg.hpp"
#include "spinphase/observable.hpp"
#include "spinphase/operators.hpp"
#include "spinphase/reductions.hpp"
#include "spinphase/rng.hpp"

namespace spinphase {

struct verify_config {
  std::uint64_t seed = default_seed;
  std::size_t samples = 200;
  double tolerance = default_tolerance;
  std::vector<phase_convention> conventions = {
      phase_convention::old_phase(),
      phase_convention::new_phase(),
      phase_convention::custom(0.7, -1.3),
  };
};

struct invariant_result {
  std::string name;
  std::size_t cases = 0;
  double value = 0.0;
  double bound = 0.0;
  bool lower_bound = false;
  bool passed = false;
  std::string witness;
};

struct verify_report {
  verify_config config;
  std::vector<invariant_result> results;

  bool all_passed() const {
    for (const auto& r : results) {
      if (!r.passed) return false;
    }
    return true;
  }

  const invariant_result* worst() const {
    const invariant_result* out = nullptr;
    for (const auto& r : results) {
      if (!r.passed) return &r;
      if (!r.lower_bound && (!out || r.value > out->value)) out = &r;
    }
    return out;
  }
};

namespace detail {

inline std::string angle_text(const direction& d) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "(%.6g, %.6g)", d.theta, d.phi);
  return buf;
}

// Worst case over a sweep: the largest residual for upper-bound invariants,
// the smallest violation for lower-bound ones, with its witness.
struct extreme_case {
  bool seen = false;
  double value = 0.0;
  std::string witness;

  void take_max(double v, std::string w) {
    if (!seen || v > value) {
      seen = true;
      value = v;
      witness = std::move(w);
    }
  }

  void take_min(double v, std::string w) {
    if (!seen || v < value) {
      seen = true;
      value = v;
      witness = std::move(w);
    }
  }
};

}  // namespace detail

inline verify_report run_suite(const verify_config& cfg = {}) {
  if (cfg.samples == 0) {
    throw invalid_config_error("run_suite: samples must be positive");
  }
  if (!std::isfinite(cfg.tolerance) || cfg.tolerance <= 0.0) {
    throw invalid_config_error("run_suite: tolerance must be positive and finite");
  }
  if (cfg.conventions.empty()) {
    throw invalid_config_error("run_suite: at least one convention is required");
  }

  struct sample {
    direction a, b, c, d;
    observable_spec r;
  };
  splitmix64 rng = stream(cfg.seed, 0);
  const auto draw_direction = [&rng] {
    const double theta = rng.uniform(0.0, pi);
    const double phi = rng.uniform(0.0, two_pi);
    return direction(theta, phi);
  };
  std::vector<sample> pool;
  pool.reserve(cfg.samples);
  for (std::size_t i = 0; i < cfg.samples; ++i) {
    sample s;
    s.a = draw_direction();
    s.b = draw_direction();
    s.c = draw_direction();
    s.d = draw_direction();
    s.r = observable_spec{rng.uniform(-2.0, 2.0), rng.uniform(-2.0, 2.0)};
    pool.push_back(s);
  }

  const std::vector<phase_convention>& conventions = cfg.conventions;

  verify_report rep;
  rep.config = cfg;
  const auto upper = [&rep, &cfg](std::string name, std::size_t cases,
                                  const detail::extreme_case& worst) {
    invariant_result r;
    r.name = std::move(name);
    r.cases = cases;
    r.value = worst.value;
    r.bound = cfg.tolerance;
    r.lower_bound = false;
    r.passed = worst.value <= cfg.tolerance;
    r.witness = worst.witness;
    rep.results.push_back(std::move(r));
  };
  const auto lower = [&rep](std::string name, std::size_t cases,
                            const detail::extreme_case& weakest, double floor) {
    invariant_result r;
    r.name = std::move(name);
    r.cases = cases;
    r.value = weakest.value;
    r.bound = floor;
    r.lower_bound = true;
    r.passed = weakest.value >= floor;
    r.witness = weakest.witness;
    rep.results.push_back(std::move(r));
  };

  const auto pair_text = [](const char* na, const direction& da, const char* nb,
                            const direction& db, const std::string& conv) {
    std::string out = na;
    out += "=" + detail::angle_text(da) + " " + nb + "=" + detail::angle_text(db);
    if (!conv.empty()) out += " convention=" + conv;
    return out;
  };

  const cplx im(0.0, 1.0);
  const mat2c id = mat2c::identity();
  const std::size_t nconv = conventions.size();

  {
    detail::extreme_case worst;
    for (const auto& s : pool) {
      for (const auto& conv : conventions) {
        const mat2c f = transition_amplitudes(s.a, s.c, conv).psi;
        const double r = std::max(norm_inf(adjoint(f) * f - id),
                                  norm_inf(f * adjoint(f) - id));
        worst.take_max(r, pair_text("a", s.a, "c", s.c, conv.name()));
      }
    }
    upper("amplitude matrices are unitary", pool.size() * nconv, worst);
  }

  {
    detail::extreme_case worst;
    for (const auto& s : pool) {
      for (const auto& conv : conventions) {
        worst.take_max(hermiticity_check(s.a, s.c, conv),
                       pair_text("a", s.a, "c", s.c, conv.name()));
      }
    }
    upper("reversing the directions conjugates the amplitudes", pool.size() * nconv,
          worst);
  }

  {
    detail::extreme_case worst;
    for (const auto& s : pool) {
      for (const auto& conv : conventions) {
        const amplitude_matrix direct = transition_amplitudes(s.a, s.c, conv);
        const amplitude_matrix via_b = compose(transition_amplitudes(s.a, s.b, conv),
                                               transition_amplitudes(s.b, s.c, conv));
        const amplitude_matrix via_d = compose(transition_amplitudes(s.a, s.d, conv),
                                               transition_amplitudes(s.d, s.c, conv));
        const double r = std::max(norm_inf(via_b.psi - direct.psi),
                                  norm_inf(via_d.psi - via_b.psi));
        worst.take_max(r, pair_text("a", s.a, "c", s.c, conv.name()) +
                              " via b=" + detail::angle_text(s.b) +
                              " d=" + detail::angle_text(s.d));
      }
    }
    upper("composition ignores the intermediate direction", pool.size() * nconv, worst);
  }

  {
    detail::extreme_case worst;
    for (const auto& s : pool) {
      for (const auto& conv : conventions) {
        double r = norm_inf(generalized_component(s.b, s.c, conv) -
                            oracle_component(s.b, s.c, conv));
        // General observable: spectral split of the same change of basis.
        const basis_pair pb = basis_pair_for(s.b, conv);
        const mat2c v{pb.xi_plus.x, pb.xi_minus.x, pb.xi_plus.y, pb.xi_minus.y};
        const mat2c weighted = 0.5 * (s.r.r1 + s.r.r2) * id +
                               cplx(0.5 * (s.r.r1 - s.r.r2)) * spin_projection(s.c);
        r = std::max(r, norm_inf(generalized_component(s.b, s.c, conv, s.r) -
                                 adjoint(v) * weighted * v));
        worst.take_max(r, pair_text("b", s.b, "c", s.c, conv.name()));
      }
    }
    upper("component construction matches the change-of-basis oracle",
          pool.size() * nconv, worst);
  }

  std::vector<operator_set> op_pool;
  op_pool.reserve(pool.size() * nconv);
  for (const auto& s : pool) {
    for (const auto& conv : conventions) {
      op_pool.push_back(build_operator_set(s.b, s.c, conv));
    }
  }
  const auto op_text = [&pair_text](const operator_set& ops) {
    return pair_text("b", ops.b, "c", ops.c, ops.convention.name());
  };

  {
    detail::extreme_case worst;
    for (const auto& ops : op_pool) {
      const double r = std::max({norm_inf(ops.sigma_c * ops.sigma_c - id),
                                 norm_inf(ops.sigma_x * ops.sigma_x - id),
                                 norm_inf(ops.sigma_y * ops.sigma_y - id)});
      worst.take_max(r, op_text(ops));
    }
    upper("squared components equal the identity", op_pool.size(), worst);
  }

  {
    detail::extreme_case worst;
    for (const auto& ops : op_pool) {
      const double r = std::max(
          {norm_inf(commutator(ops.sigma_x, ops.sigma_y) - 2.0 * im * ops.sigma_c),
           norm_inf(commutator(ops.sigma_y, ops.sigma_c) - 2.0 * im * ops.sigma_x),
           norm_inf(commutator(ops.sigma_c, ops.sigma_x) - 2.0 * im * ops.sigma_y)});
      worst.take_max(r, op_text(ops));
    }
    upper("components close the cyclic commutator algebra", op_pool.size(), worst);
  }

  {
    detail::extreme_case worst;
    for (const auto& ops : op_pool) {
      const double r = std::max({norm_inf(anticommutator(ops.sigma_x, ops.sigma_y)),
                                 norm_inf(anticommutator(ops.sigma_y, ops.sigma_c)),
                                 norm_inf(anticommutator(ops.sigma_c, ops.sigma_x))});
      worst.take_max(r, op_text(ops));
    }
    upper("distinct components anticommute", op_pool.size(), worst);
  }

  {
    detail::extreme_case worst;
    for (const auto& ops : op_pool) {
      const double r =
          std::max({norm(ops.sigma_c * ops.eig_c_plus - ops.eig_c_plus),
                    norm(ops.sigma_c * ops.eig_c_minus + ops.eig_c_minus),
                    norm(ops.sigma_x * ops.eig_x_plus - ops.eig_x_plus),
                    norm(ops.sigma_x * ops.eig_x_minus + ops.eig_x_minus),
                    norm(ops.sigma_y * ops.eig_y_plus - ops.eig_y_plus),
                    norm(ops.sigma_y * ops.eig_y_minus + ops.eig_y_minus)});
      worst.take_max(r, op_text(ops));
    }
    upper("eigenvectors satisfy their eigenvalue equations", op_pool.size(), worst);
  }

  {
    detail::extreme_case worst;
    for (const auto& ops : op_pool) {
      double r = 0.0;
      for (const vec2c* v : {&ops.eig_c_plus, &ops.eig_c_minus, &ops.eig_x_plus,
                             &ops.eig_x_minus, &ops.eig_y_plus, &ops.eig_y_minus}) {
        r = std::max(r, std::abs(norm(*v) - 1.0));
      }
      r = std::max(r, std::abs(inner(ops.eig_c_plus, ops.eig_c_minus)));
      r = std::max(r, std::abs(inner(ops.eig_x_plus, ops.eig_x_minus)));
      r = std::max(r, std::abs(inner(ops.eig_y_plus, ops.eig_y_minus)));
      worst.take_max(r, op_text(ops));
    }
    upper("eigenvector pairs are orthonormal", op_pool.size(), worst);
  }

  {
    detail::extreme_case worst;
    for (const auto& ops : op_pool) {
      const double r =
          std::max({norm(ops.sigma_plus * ops.eig_c_minus - 2.0 * ops.eig_c_plus),
                    norm(ops.sigma_plus * ops.eig_c_plus),
                    norm(ops.sigma_minus * ops.eig_c_plus - 2.0 * ops.eig_c_minus),
                    norm(ops.sigma_minus * ops.eig_c_minus)});
      worst.take_max(r, op_text(ops));
    }
    upper("ladder operators shift between eigenvectors", op_pool.size(), worst);
  }

  {
    const phase_convention reference = phase_convention::old_phase();
    detail::extreme_case worst;
    for (const auto& s : pool) {
      const auto p_ref = probabilities(transition_amplitudes(s.a, s.c, reference));
      for (const auto& conv : conventions) {
        const auto p = probabilities(transition_amplitudes(s.a, s.c, conv));
        double r = 0.0;
        for (int i = 0; i < 2; ++i) {
          for (int j = 0; j < 2; ++j) {
            r = std::max(r, std::abs(p[i][j] - p_ref[i][j]));
          }
        }
        worst.take_max(r, pair_text("a", s.a, "c", s.c, conv.name()) + " vs old");
      }
    }
    upper("outcome probabilities are convention independent", pool.size() * nconv,
          worst);
  }

  {
    detail::extreme_case worst;
    for (const auto& s : pool) {
      for (const auto& conv : conventions) {
        const auto p = probabilities(transition_amplitudes(s.a, s.c, conv));
        const double ch = std::cos(0.5 * (s.a.theta - s.c.theta));
        const double sh = std::sin(0.5 * (s.a.theta - s.c.theta));
        const double sp = std::sin(0.5 * (s.c.phi - s.a.phi));
        const double cross = std::sin(s.a.theta) * std::sin(s.c.theta) * sp * sp;
        const double p_same = ch * ch - cross;
        const double p_flip = sh * sh + cross;
        const double r = std::max({std::abs(p[0][0] - p_same), std::abs(p[1][1] - p_same),
                                   std::abs(p[0][1] - p_flip), std::abs(p[1][0] - p_flip)});
        worst.take_max(r, pair_text("a", s.a, "c", s.c, conv.name()));
      }
    }
    upper("outcome probabilities match the closed form", pool.size() * nconv, worst);
  }

  {
    detail::extreme_case worst;
    for (const auto& s : pool) {
      for (const auto& conv : conventions) {
        const auto p = probabilities(transition_amplitudes(s.a, s.c, conv));
        double r = 0.0;
        for (int i = 0; i < 2; ++i) {
          r = std::max(r, std::abs(p[i][0] + p[i][1] - 1.0));
          r = std::max(r, std::abs(p[0][i] + p[1][i] - 1.0));
        }
        worst.take_max(r, pair_text("a", s.a, "c", s.c, conv.name()));
      }
    }
    upper("probability tables are doubly stochastic", pool.size() * nconv, worst);
  }

  {
    detail::extreme_case worst;
    for (const auto& s : pool) {
      for (const auto& conv : conventions) {
        const mat2c rmat = generalized_component(s.a, s.c, conv, s.r);
        const amplitude_matrix m = transition_amplitudes(s.a, s.c, conv);
        const double r = std::max(
            std::abs(rmat(0, 0) - cplx(expectation(outcome::up, m, s.r))),
            std::abs(rmat(1, 1) - cplx(expectation(outcome::down, m, s.r))));
        worst.take_max(r, pair_text("a", s.a, "c", s.c, conv.name()));
      }
    }
    upper("expectation routes agree", pool.size() * nconv, worst);
  }

  {
    detail::extreme_case worst;
    worst.take_max(pauli_limit(phase_convention::old_phase(), cfg.tolerance).max_residual(),
                   "coincident sweep, old convention");
    worst.take_max(pauli_limit(phase_convention::new_phase(), cfg.tolerance).max_residual(),
                   "coincident sweep, new convention");
    worst.take_max(standard_generalized_limit(cfg.tolerance).max_residual(),
                   "equatorial pole, new convention");
    upper("limiting directions give the constant and standard forms", 3, worst);
  }

  {
    const phase_convention zero = phase_convention::custom(0.0, 0.0);
    const phase_convention old = phase_convention::old_phase();
    detail::extreme_case worst;
    for (const auto& s : pool) {
      const basis_pair pz = basis_pair_for(s.c, zero);
      const basis_pair po = basis_pair_for(s.c, old);
      const double r =
          std::max({norm(pz.xi_plus - po.xi_plus), norm(pz.xi_minus - po.xi_minus),
                    norm_inf(transition_amplitudes(s.a, s.c, zero).psi -
                             transition_amplitudes(s.a, s.c, old).psi)});
      worst.take_max(r, pair_text("a", s.a, "c", s.c, ""));
    }
    upper("zero custom phases reproduce the old convention", pool.size(), worst);
  }

  {
    // Every pair from the configured list; a single-entry list is paired
    // with the old convention so the relation is still exercised.
    std::vector<std::pair<phase_convention, phase_convention>> pairs;
    for (std::size_t i = 0; i < nconv; ++i) {
      for (std::size_t j = i + 1; j < nconv; ++j) {
        pairs.push_back({conventions[i], conventions[j]});
      }
    }
    if (pairs.empty()) {
      pairs.push_back({phase_convention::old_phase(), conventions[0]});
    }
    detail::extreme_case worst;
    for (const auto& s : pool) {
      for (const auto& [ca, cb] : pairs) {
        const phase_relation_result rel = phase_relation(ca, cb, s.c);
        const basis_pair pa = basis_pair_for(s.c, ca);
        const basis_pair pb = basis_pair_for(s.c, cb);
        const double r = std::max(
            norm(pb.xi_plus - std::polar(1.0, rel.delta_plus) * pa.xi_plus),
            norm(pb.xi_minus - std::polar(1.0, rel.delta_minus) * pa.xi_minus));
        worst.take_max(r, "c=" + detail::angle_text(s.c) + " " + ca.name() + " -> " +
                              cb.name());
      }
    }
    upper("recovered phase relation links the conventions", pool.size() * pairs.size(),
          worst);
  }

  {
    const phase_convention old = phase_convention::old_phase();
    detail::extreme_case worst;
    for (const auto& s : pool) {
      const operator_set ops = build_operator_set(s.a, s.c, old);
      const double r = std::max(
          norm_inf(old_convention_shortcut(s.a, s.c, component_axis::x) - ops.sigma_x),
          norm_inf(old_convention_shortcut(s.a, s.c, component_axis::y) - ops.sigma_y));
      worst.take_max(r, pair_text("b", s.a, "c", s.c, ""));
    }
    upper("old-convention substitution shortcut matches the ladder route", pool.size(),
          worst);
  }

  // Fixed witnesses, chosen with the c azimuth away from zero where the
  // new-convention discrepancy vanishes.
  const std::pair<direction, direction> witnesses[] = {
      {direction(0.9, 0.4), direction(1.3, 2.0)},
      {direction(1.7, 5.1), direction(0.7, 2.9)},
      {direction(2.2, 1.9), direction(1.9, 4.0)},
  };

  {
    const phase_convention nw = phase_convention::new_phase();
    detail::extreme_case weakest;
    for (const auto& [b, c] : witnesses) {
      const operator_set ops = build_operator_set(b, c, nw);
      const mat2c sub_x = detail::substituted_component(b, c, nw, component_axis::x);
      const double violation =
          norm_inf(commutator(sub_x, ops.sigma_y) - 2.0 * im * ops.sigma_c);
      weakest.take_min(violation, pair_text("b", b, "c", c, ""));
    }
    lower("substitution shortcut misuse under the new convention is detected",
          std::size(witnesses), weakest, 0.1);
  }

  {
    detail::extreme_case weakest;
    for (const auto& [b, c] : witnesses) {
      const operator_set ops_old =
          build_operator_set(b, c, phase_convention::old_phase());
      const operator_set ops_new =
          build_operator_set(b, c, phase_convention::new_phase());
      const double violation =
          norm(ops_new.sigma_c * ops_old.eig_c_plus - ops_old.eig_c_plus);
      weakest.take_min(violation, pair_text("b", b, "c", c, ""));
    }
    lower("eigenvectors do not transfer across conventions", std::size(witnesses),
          weakest, 0.05);
  }

  std::sort(rep.results.begin(), rep.results.end(),
            [](const invariant_result& a, const invariant_result& b) {
              return a.name < b.name;
            });
  return rep;
}

}  // namespace spinphase
