#pragma once

#include <string>

#include "secz/real.hpp"

namespace secz {

struct PrecisionContext {
  long working_digits = 50;
  long guard_digits = 10;
  long quadrature_target_digits = 50;
  double diff_oversample_factor = 2.0;

  // Digits at which intermediate quantities are carried.
  long internal_digits() const { return working_digits + guard_digits; }
};

// Throws for working_digits < 30.
PrecisionContext make_context(long working_digits);

struct RealValue {
  Real value;
  long certified_digits = 0;  // trusted decimal places, 0 = unknown

  std::string str(long decimals) const { return value.to_fixed(decimals); }
};

}  // namespace secz
