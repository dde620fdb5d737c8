#pragma once

// Seeded Monte-Carlo sampler for chains of successive spin measurements.
// A shot prepares the configured outcome along config.prepare, then measures
// along each chain direction in turn, drawing one uniform variate per step
// from its own splitmix64 stream (stream(seed, shot)), so results are
// identical across platforms and reruns. Every path through the outcome tree
// is tallied and compared with the product of its conditional probabilities.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "spinphase/amplitudes.hpp"
#include "spinphase/convention.hpp"
#include "spinphase/direction.hpp"
#include "spinphase/errors.hpp"
#include "spinphase/observable.hpp"
#include "spinphase/rng.hpp"

namespace spinphase {

struct sim_config {
  direction prepare{};
  outcome initial = outcome::up;
  std::vector<direction> chain;
  std::size_t shots = 100000;
  std::uint64_t seed = default_seed;
  phase_convention convention = phase_convention::new_phase();
};

struct path_stat {
  std::string path;
  std::uint64_t count = 0;
  double predicted = 0.0;
  double empirical = 0.0;
};

struct sim_result {
  sim_config config;
  std::vector<path_stat> paths;
  double max_abs_error = 0.0;
  double max_sigma = 0.0;
};

inline constexpr std::size_t max_chain_length = 16;

inline sim_result run_simulation(const sim_config& cfg) {
  if (cfg.shots == 0) {
    throw invalid_config_error("run_simulation: shots must be positive");
  }
  if (cfg.chain.empty()) {
    throw invalid_config_error("run_simulation: chain must contain at least one direction");
  }
  if (cfg.chain.size() > max_chain_length) {
    throw invalid_config_error("run_simulation: chain longer than " +
                               std::to_string(max_chain_length) + " steps");
  }

  const std::size_t n = cfg.chain.size();
  const std::size_t init = static_cast<std::size_t>(index_of(cfg.initial));
  // prob[k][i][j]: probability of outcome j at step k given outcome i at
  // step k-1 (step 0 conditions on the prepared outcome).
  std::vector<std::array<std::array<double, 2>, 2>> prob;
  prob.reserve(n);
  {
    direction from = cfg.prepare;
    for (const direction& to : cfg.chain) {
      prob.push_back(probabilities(transition_amplitudes(from, to, cfg.convention)));
      from = to;
    }
  }

  std::vector<std::uint64_t> counts(std::size_t{1} << n, 0);
  for (std::size_t shot = 0; shot < cfg.shots; ++shot) {
    splitmix64 rng = stream(cfg.seed, shot);
    std::size_t state = init;
    std::size_t bits = 0;
    for (std::size_t k = 0; k < n; ++k) {
      const double u = rng.uniform();
      const std::size_t next = u < prob[k][state][0] ? 0 : 1;
      bits = (bits << 1) | next;
      state = next;
    }
    ++counts[bits];
  }

  sim_result out;
  out.config = cfg;
  out.paths.reserve(counts.size());
  for (std::size_t m = 0; m < counts.size(); ++m) {
    path_stat ps;
    ps.path = init == 0 ? "+" : "-";
    double predicted = 1.0;
    std::size_t state = init;
    for (std::size_t k = 0; k < n; ++k) {
      const std::size_t bit = (m >> (n - 1 - k)) & 1u;
      ps.path += bit == 0 ? '+' : '-';
      predicted *= prob[k][state][bit];
      state = bit;
    }
    ps.count = counts[m];
    ps.predicted = predicted;
    ps.empirical = static_cast<double>(ps.count) / static_cast<double>(cfg.shots);

    const double err = std::abs(ps.empirical - ps.predicted);
    out.max_abs_error = std::max(out.max_abs_error, err);
    const double var = ps.predicted * (1.0 - ps.predicted) / static_cast<double>(cfg.shots);
    if (var > 0.0) {
      out.max_sigma = std::max(out.max_sigma, err / std::sqrt(var));
    } else if (err > 0.0) {
      out.max_sigma = std::numeric_limits<double>::infinity();
    }
    out.paths.push_back(std::move(ps));
  }
  return out;
}

struct interference_result {
  double direct = 0.0;
  double via_measured_b = 0.0;
};

// Composing the amplitudes through b leaves the up->up probability equal to
// the no-intermediate value; classically chaining the measured step
// probabilities through b does not. Both numbers are returned so callers can
// exhibit the difference (for a=c=z and b equatorial: 1 versus 1/2).
inline interference_result interference_check(
    const direction& a, const direction& b, const direction& c,
    const phase_convention& conv = phase_convention::new_phase()) {
  const amplitude_matrix ab = transition_amplitudes(a, b, conv);
  const amplitude_matrix bc = transition_amplitudes(b, c, conv);
  interference_result out;
  out.direct = std::norm(compose(ab, bc).psi.m11);
  const auto pab = probabilities(ab);
  const auto pbc = probabilities(bc);
  out.via_measured_b = pab[0][0] * pbc[0][0] + pab[0][1] * pbc[1][0];
  return out;
}

}  // namespace spinphase
