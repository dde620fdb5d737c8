#pragma once

// Measurement outcomes and the two-outcome observable description shared by
// the amplitude and operator modules.

#include <cmath>

#include "spinphase/errors.hpp"

namespace spinphase {

enum class outcome { up = 0, down = 1 };

inline int index_of(outcome o) { return o == outcome::up ? 0 : 1; }

// Eigenvalues attached to the (up, down) outcomes of a two-outcome
// observable, in units of hbar/2 for spin components. r = (1, -1) is a spin
// component; r = (3, 3) is the squared total spin.
struct observable_spec {
  double r1 = 1.0;
  double r2 = -1.0;

  observable_spec() = default;
  observable_spec(double r1_, double r2_) : r1(r1_), r2(r2_) {
    if (!std::isfinite(r1_) || !std::isfinite(r2_)) {
      throw non_finite_error("observable_spec: eigenvalues must be finite");
    }
  }
};

}  // namespace spinphase
