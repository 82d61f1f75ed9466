#pragma once

#include <cstdint>
#include <vector>

#include "secz/context.hpp"
#include "secz/real.hpp"

namespace secz {

class PrimeTable {
 public:
  // Segmented sieve of Eratosthenes; limit <= 10^9.
  explicit PrimeTable(std::uint64_t limit);

  std::uint64_t limit() const { return limit_; }
  const std::vector<std::uint32_t>& primes() const { return primes_; }

 private:
  std::uint64_t limit_;
  std::vector<std::uint32_t> primes_;
};

// log p if n = p^k, else exactly zero.
Real von_mangoldt(std::uint64_t n);

struct PrimeZetaDeriv {
  RealValue value;
  Real tail_bound;  // integral_cutoff^inf log^m t / t^s dt
};

// (-1)^m sum_{p <= cutoff} log^m p / p^s.
PrimeZetaDeriv prime_zeta_deriv(int m, const Real& s, std::uint64_t cutoff, const PrecisionContext& ctx);
PrimeZetaDeriv prime_zeta_deriv(int m, const Real& s, const PrimeTable& table, const PrecisionContext& ctx);

}  // namespace secz
