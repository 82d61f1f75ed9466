#pragma once

#include <string>
#include <vector>

#include "secz/context.hpp"
#include "secz/real.hpp"

namespace secz {

struct StieltjesStore {
  enum class Source { file, computed };
  std::vector<RealValue> values;  // gamma_0, gamma_1, ...
  Source source = Source::file;
};

// Reads a '# kind=stieltjes' table; gamma_0 is checked against Euler's constant.
StieltjesStore load_stieltjes(const std::string& path);
// gamma_0..gamma_{n_max} from the Taylor jet of (s-1) zeta(s) at s = 1.
StieltjesStore compute_stieltjes(int n_max, const PrecisionContext& ctx);

// Throws if n is out of range and `fallback` is false.
RealValue stieltjes(int n, const StieltjesStore& store, const PrecisionContext& ctx, bool fallback = false);

// eta_0..eta_{n_max}: Taylor coefficients of -zeta'/zeta(s) - 1/(s-1) about
// s = 1, by the recurrence over Stieltjes constants.
std::vector<RealValue> eta_coeffs(int n_max, const StieltjesStore& store, const PrecisionContext& ctx);
RealValue eta_coeff(int n, const StieltjesStore& store, const PrecisionContext& ctx);

}  // namespace secz
