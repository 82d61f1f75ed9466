#pragma once

#include <gmpxx.h>

#include "secz/real.hpp"

namespace secz {

// Exact B_n with B_1 = -1/2.
mpq_class bernoulli_number(unsigned n);
// Exact B_n(x) = sum_k C(n,k) B_k x^{n-k}.
mpq_class bernoulli_poly(unsigned n, const mpq_class& x);
// Exact Euler number E_k; throws for odd k.
mpz_class euler_number(unsigned k);

// B_{2k}/(2k)! at the current precision, cached per precision.
const Real& bernoulli_over_factorial(unsigned k);

}  // namespace secz
