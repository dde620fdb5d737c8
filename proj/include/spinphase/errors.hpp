#pragma once

#include <stdexcept>
#include <string>

namespace spinphase {

// Base for all library errors so callers can catch one type.
struct error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct non_finite_error : error {
  using error::error;
};

struct not_hermitian_error : error {
  using error::error;
};

struct not_orthonormal_error : error {
  using error::error;
};

struct direction_mismatch_error : error {
  using error::error;
};

struct convention_mismatch_error : error {
  using error::error;
};

struct convention_unsupported_error : error {
  using error::error;
};

struct not_phase_related_error : error {
  using error::error;
};

struct invalid_config_error : error {
  using error::error;
};

}  // namespace spinphase
