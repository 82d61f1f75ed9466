// Double-exponential quadrature: tanh-sinh on finite intervals, exp-sinh on
// [lo, inf). Levels are halved until the Bailey error estimate (from the
// last three level sums, relative to the L1 norm of the integrand) clears
// the target.
#pragma once

#include <functional>
#include <vector>

#include "secz/context.hpp"
#include "secz/real.hpp"

namespace secz {

using RealFn = std::function<Real(const Real&)>;

// Vector-valued integrand filling `out` (pre-sized) at node x. Nodes next
// to an endpoint are formed as endpoint + offset, so with lo = 0 a node
// carries its full relative precision.
using VectorFn = std::function<void(const Real& x, std::vector<Real>& out)>;

struct QuadratureOptions {
  long target_digits = 0;  // 0: ctx.quadrature_target_digits
  int max_level = 14;
};

RealValue integrate_finite(const RealFn& f, const Real& lo, const Real& hi, const PrecisionContext& ctx,
                           QuadratureOptions opt = {});
RealValue integrate_semi_infinite(const RealFn& f, const Real& lo, const PrecisionContext& ctx,
                                  QuadratureOptions opt = {});

// All components share the nodes; the result converges when every component has.
std::vector<RealValue> integrate_finite_many(const VectorFn& f, std::size_t count, const Real& lo,
                                             const Real& hi, const PrecisionContext& ctx,
                                             QuadratureOptions opt = {});
std::vector<RealValue> integrate_semi_infinite_many(const VectorFn& f, std::size_t count, const Real& lo,
                                                    const PrecisionContext& ctx, QuadratureOptions opt = {});

}  // namespace secz
