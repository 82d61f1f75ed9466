#pragma once

#include "secz/context.hpp"
#include "secz/jet.hpp"
#include "secz/real.hpp"

namespace secz {

bool is_nonpositive_integer(const Real& x);

// Kernels at the current thread precision.
Real gamma(const Real& x);        // throws at poles
Real recip_gamma(const Real& x);  // exact 0 at poles
Real upper_incomplete_gamma(const Real& s, const Real& x);

// Context-taking wrappers: evaluate with guard digits, certify working digits.
RealValue gamma(const Real& x, const PrecisionContext& ctx);
RealValue recip_gamma(const Real& x, const PrecisionContext& ctx);
RealValue upper_incomplete_gamma(const Real& s, const Real& x, const PrecisionContext& ctx);

// Jet in e of log Gamma(z0 + scale*e), z0 > 0.
Jet log_gamma_jet(const Real& z0, const Real& scale, int order);
// Jet in e of 1/Gamma(z0 + scale*e), any real z0.
Jet recip_gamma_jet(const Real& z0, const Real& scale, int order);

}  // namespace secz
