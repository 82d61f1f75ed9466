// High-order numerical differentiation of black-box analytic functions.
//
// All orders come from one interpolating polynomial on an equispaced
// stencil. The stencil half-width is a fixed fraction of the distance to
// the nearest singularity and the point count is chosen so the
// interpolation error on every requested Taylor coefficient is below the
// target. Samples are taken at a raised internal precision that absorbs
// the 1/h^m amplification of rounding errors.
#pragma once

#include <vector>

#include "secz/context.hpp"
#include "secz/quadrature.hpp"
#include "secz/real.hpp"

namespace secz {

struct DiffOptions {
  double radius = 1.0;          // distance from x0 to the nearest singularity of f
  bool exclude_center = false;  // staggered nodes x0 + (k + 1/2) h, never x0 itself
  long target_digits = 0;       // absolute target on Taylor coefficients; 0: ctx.working_digits
};

struct TaylorResult {
  std::vector<Real> coeffs;     // c_k = f^{(k)}(x0) / k!
  std::vector<long> certified;  // decimal places trusted in each c_k
  long internal_digits = 0;
  int points = 0;
};

// f is evaluated at the thread precision in force when it is called;
// it must honour working_digits().
TaylorResult taylor_coefficients(const RealFn& f, const Real& x0, int m_max, const PrecisionContext& ctx,
                                 DiffOptions opt = {});

RealValue derivative_num(const RealFn& f, const Real& x0, int m, const PrecisionContext& ctx,
                         DiffOptions opt = {});

}  // namespace secz
