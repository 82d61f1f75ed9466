// Taylor expansions of Z about a point, the pole-cancelled A and B series,
// and the Laurent expansion at the double pole s = 1.
//
//   A(s) = (s-1)^2 Z(s)                     radius: distance to -1
//   B(s) = A(s) / Gamma((s+1)/2)            entire
//   Z(s) = 1/(2pi(s-1)^2) - log(2pi)/(2pi(s-1)) + sum C_n (s-1)^n/n!
//
// Tables store derivatives (not Taylor coefficients), as in published tables.
#pragma once

#include <string>
#include <vector>

#include "secz/adr.hpp"
#include "secz/context.hpp"
#include "secz/real.hpp"

namespace secz {

enum class CoeffKind { Zderiv, A, B, C };
enum class Provenance { adr, zeros, mellin, file };

const char* to_string(CoeffKind k);
const char* to_string(Provenance p);
CoeffKind parse_coeff_kind(const std::string& s);

struct CoefficientTable {
  CoeffKind kind = CoeffKind::Zderiv;
  Real center;
  std::vector<RealValue> values;  // values[n] = n-th derivative at center
  Provenance provenance = Provenance::adr;

  int count() const { return static_cast<int>(values.size()); }
};

// (-1)^m sum_n log^m(t_n) t_n^{-a}; certified digits from the zero-density tail.
CoefficientTable Z_derivs_from_zeros(const Real& a, int m_max, const ZerosDatabase& zeros, const PrecisionContext& ctx);
// Numerical derivatives of the ADR evaluator, orders 0..m_max.
CoefficientTable Z_derivs_adr(const Real& a, int m_max, const AdrEvaluator& ev, const PrecisionContext& ctx);

// Leibniz recurrence over a Zderiv table at a.
CoefficientTable A_coeffs(const Real& a, int m_max, const CoefficientTable& zd);
// Differentiates (s-1)^2 Z(s) directly; far better conditioned at high order.
CoefficientTable A_coeffs_adr(const Real& a, int m_max, const AdrEvaluator& ev, const PrecisionContext& ctx);

// Leibniz product of an A table with the Taylor jet of 1/Gamma((s+1)/2).
CoefficientTable B_coeffs(const Real& a, int m_max, const CoefficientTable& A, const PrecisionContext& ctx);
// Differentiates (s-1)^2 Z(s)/Gamma((s+1)/2) directly; any center off the poles.
CoefficientTable B_coeffs_adr(const Real& a, int m_max, const AdrEvaluator& ev, const PrecisionContext& ctx);

struct SeriesValue {
  RealValue value;
  int terms = 0;
  Real last_term;          // magnitude of the last included term
  bool diverging = false;  // term magnitudes stopped decreasing
};

// terms < 0: the whole table.
SeriesValue Z_from_A(const Real& s, const CoefficientTable& tbl, int terms = -1);
SeriesValue Z_from_B(const Real& s, const CoefficientTable& tbl, int terms = -1);
// Principal part plus sum C_n (s-1)^n/n!.
SeriesValue Z_from_C(const Real& s, const CoefficientTable& tbl, int terms = -1);

// C_n = G^{(n)}(1), G the regular part; stencils never touch s = 1.
CoefficientTable laurent_C(int n_max, const AdrEvaluator& ev, const PrecisionContext& ctx);

// H = C_0 - log^2(2pi)/(4pi).
RealValue harmonic_H(const AdrEvaluator& ev, const PrecisionContext& ctx);
RealValue harmonic_H_from_C0(const RealValue& c0);
RealValue C0_from_H(const RealValue& h);

// sum_{n<=k} 1/t_n - log^2(t_k/2pi)/(4pi).
RealValue H_partial_from_zeros(int k, const ZerosDatabase& zeros, const PrecisionContext& ctx);

}  // namespace secz
