// Non-trivial zeros from Z(2m): t_1 = lim Z(2m)^{-1/(2m)} and the recurrence
// t_{n+1} = lim (Z(2m) - sum_{k<=n} t_k^{-2m})^{-1/(2m)}, with Z(2m) either
// exact (Voros closed form) or built from primes.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "secz/adr.hpp"
#include "secz/context.hpp"
#include "secz/real.hpp"

namespace secz {

struct ExtractionReport {
  int n = 0;  // index of the extracted zero
  int m = 0;
  RealValue estimate;  // certified_digits: decimals of the formula value
  long matched_digits_vs_reference = -1;  // agreeing decimals; -1 without a reference
  std::string inputs_provenance;
  // Digits of Z(2m) consumed by subtracting the predecessors.
  double cancellation_digits = 0;
  // Decimals by which the finite-m formula approaches t_n, from the next
  // reference zeros; -1 when unknown.
  long limit_digits = -1;
  // Primes route: predicted |error| of Z(2m) from the truncations.
  Real truncation_estimate;
  bool truncation_dominated = false;
};

// Z(2m)^{-1/(2m)}.
ExtractionReport extract_first_zero(int m, const PrecisionContext& ctx, const ZerosDatabase* reference = nullptr);

// known = t_1..t_n with certified decimals. Throws ErrorKind::precision
// ("insufficient predecessor precision") when the subtraction consumes
// the predecessors' certified digits.
ExtractionReport extract_next_zero(const std::vector<RealValue>& known, int m, const PrecisionContext& ctx,
                                   const ZerosDatabase* reference = nullptr);
// Same, with Z(2m) supplied (one Z(2m) serves a whole recurrence table).
ExtractionReport extract_next_zero(const std::vector<RealValue>& known, int m, const RealValue& z2m,
                                   const PrecisionContext& ctx, const ZerosDatabase* reference = nullptr);

struct PrimeTruncation {
  int K = 2;                   // shift-series terms; larger K amplifies the cutoff error
  int J = 30;                  // prime-power terms
  std::uint64_t cutoff = 1000000;
};

// t_n with Z(2m) from the prime zeta function; known supplies t_1..t_{n-1}.
ExtractionReport extract_zero_from_primes(int n, int m, const PrimeTruncation& tr, const std::vector<RealValue>& known,
                                          const PrecisionContext& ctx, const ZerosDatabase* reference = nullptr);

}  // namespace secz
