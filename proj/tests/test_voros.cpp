#include <gtest/gtest.h>

#include "secz/bernoulli.hpp"
#include "secz/diff.hpp"
#include "secz/errors.hpp"
#include "secz/zeta.hpp"
#include "secz/voros.hpp"

using namespace secz;

namespace {

::testing::AssertionResult close(const Real& a, const Real& b, long digits) {
  Real d = abs(a - b);
  if (d < pow(Real(10), -digits)) return ::testing::AssertionSuccess();
  return ::testing::AssertionFailure() << a.to_sci(40) << " vs " << b.to_sci(40) << " (diff " << d.to_sci(5) << ")";
}

::testing::AssertionResult rel_close(const Real& a, const Real& b, long digits) {
  Real d = abs(a - b) / abs(b);
  if (d < pow(Real(10), -digits)) return ::testing::AssertionSuccess();
  return ::testing::AssertionFailure() << a.to_sci(40) << " vs " << b.to_sci(40) << " (rel " << d.to_sci(5) << ")";
}

const char* kTable3Even[] = {
    "0.023104993115418970788933810430", "0.000037172599285269686164866262", "0.000000144173931400973279695381",
    "0.000000000663031680252990869873", "0.00000000000321366415061660121"};

}  // namespace

TEST(LogZeta, PrimeSumAgreesWithNumericDerivative) {
  auto ctx = make_context(30);
  PrecisionGuard g(40);
  PrimeTable primes(1000000);
  RealValue ps = logzeta_deriv(1, Real(2), LogZetaMethod::prime_sum, ctx, &primes);
  RealValue nd = logzeta_deriv(1, Real(2), LogZetaMethod::numeric_diff, ctx);
  RealValue tj = logzeta_deriv(1, Real(2), LogZetaMethod::taylor_jet, ctx);
  EXPECT_TRUE(close(nd.value, tj.value, 28));
  EXPECT_GE(ps.certified_digits, 4);
  EXPECT_TRUE(close(ps.value, nd.value, ps.certified_digits));
  // Often quoted as -0.569960992662272, which is off in the ninth digit.
  EXPECT_TRUE(close(nd.value, Real("-0.56996099309453280641"), 19));
  // zeta'/zeta(2) directly.
  EXPECT_TRUE(close(tj.value, zeta_log_derivative(Real(2)), 28));
}

TEST(LogZeta, SinglePrimeIsGeometric) {
  auto ctx = make_context(30);
  PrecisionGuard g(40);
  PrimeTable two(2);
  RealValue v = logzeta_deriv(1, Real(2), LogZetaMethod::prime_sum, ctx, &two);
  EXPECT_TRUE(close(v.value, -const_log2() / 3, 30));
}

TEST(LogZeta, MethodsAgreeAtTwo) {
  auto ctx = make_context(40);
  PrecisionGuard g(50);
  auto jet = logzeta_derivs(6, Real(2), LogZetaMethod::taylor_jet, ctx);
  auto num = logzeta_derivs(6, Real(2), LogZetaMethod::numeric_diff, ctx);
  auto sh = logzeta_derivs(6, Real(2), LogZetaMethod::shift_series, ctx);
  for (int m = 0; m < 6; ++m) {
    long c = std::min(jet.values[m].certified_digits, num.values[m].certified_digits) - 2;
    EXPECT_TRUE(close(jet.values[m].value, num.values[m].value, c)) << m + 1;
    EXPECT_TRUE(close(jet.values[m].value, sh.values[m].value, 35)) << m + 1;
  }
}

TEST(LogZeta, Rejections) {
  auto ctx = make_context(30);
  EXPECT_THROW(logzeta_deriv(1, Real(0.5), LogZetaMethod::prime_sum, ctx, nullptr), Error);
  EXPECT_THROW(logzeta_deriv(1, Real(2), LogZetaMethod::prime_sum, ctx, nullptr), Error);
  EXPECT_THROW(logzeta_deriv(1, Real(1), LogZetaMethod::taylor_jet, ctx), Error);
}

TEST(LogZeta, SecondDerivativeAtHalfReproducesZ2) {
  // Solve Z(2) = 1/2 L'' + pi^2/8 + beta(2) - 4 backwards for L''.
  auto ctx = make_context(30);
  PrecisionGuard g(40);
  Real z2("0.023104993115418970788933810430");
  Real pi = const_pi();
  Real oracle = Real(2) * (z2 - pi * pi / 8 - const_catalan() + Real(4));
  RealValue v = logzeta_deriv(2, Real(0.5), LogZetaMethod::numeric_diff, ctx);
  EXPECT_TRUE(close(v.value, oracle, 28));
}

TEST(ShiftBracket, MatchesDirectRoute) {
  auto ctx = make_context(40);
  PrecisionGuard g(50);
  for (int m : {1, 2, 3}) {
    ShiftBracket b = logzeta_shift_bracket(m, -1, ctx);
    EXPECT_TRUE(b.converged) << b.terms << " " << b.last_term.to_sci(5);
    RealValue d = logzeta_deriv(2 * m, Real(0.5), LogZetaMethod::numeric_diff, ctx);
    Real direct = ldexp(Real(1), 2 * m) - d.value / factorial(static_cast<unsigned long>(2 * m - 1));
    long shared = std::min<long>(b.value.certified_digits, d.certified_digits - 3) - 1;
    EXPECT_GE(shared, 30);
    EXPECT_TRUE(close(b.value.value, direct, shared)) << m;
  }
}

TEST(ShiftBracket, SingleTerm) {
  auto ctx = make_context(40);
  PrecisionGuard g(50);
  ShiftBracket b = logzeta_shift_bracket(1, 0, ctx);
  EXPECT_FALSE(b.converged);
  RealValue d2 = logzeta_deriv(2, Real(2), LogZetaMethod::taylor_jet, ctx);
  EXPECT_TRUE(close(b.value.value, -(d2.value - Real(1)), 40));
}

TEST(ZEven, Table3Rows) {
  auto ctx = make_context(40);
  PrecisionGuard g(50);
  for (int m = 1; m <= 5; ++m) {
    RealValue z = Z_even(m, ctx);
    Real ref(kTable3Even[m - 1]);
    EXPECT_EQ(z.value.to_fixed(static_cast<long>(std::string(kTable3Even[m - 1]).size()) - 2),
              std::string(kTable3Even[m - 1]))
        << m;
    EXPECT_TRUE(close(z.value, ref, static_cast<long>(std::string(kTable3Even[m - 1]).size()) - 2));
  }
}

TEST(ZEven, AssemblyFormsAgree) {
  auto ctx = make_context(40);
  PrecisionGuard g(60);
  for (int m = 1; m <= 10; ++m) {
    RealValue a = Z_even(m, ctx, VorosForm::hurwitz);
    RealValue b = Z_even(m, ctx, VorosForm::zeta_beta);
    EXPECT_TRUE(rel_close(a.value, b.value, 38)) << m;
  }
}

TEST(ZEven, ExplicitFormWithNumericDerivative) {
  auto ctx = make_context(40);
  PrecisionGuard g(50);
  RealValue n = Z_even(1, ctx, VorosForm::zeta_beta, LogZetaMethod::numeric_diff);
  RealValue j = Z_even(1, ctx);
  EXPECT_TRUE(rel_close(n.value, j.value, 35));
  RealValue s = Z_even(2, ctx, VorosForm::hurwitz, LogZetaMethod::shift_series);
  EXPECT_TRUE(rel_close(s.value, Z_even(2, ctx).value, 30));
}

TEST(ZEven, BelowFirstZeroPower) {
  // Z(2m)^{-1/(2m)} increases towards t_1 from below.
  auto ctx = make_context(30);
  PrecisionGuard g(40);
  Real prev(0), t1("14.134725141734693790457251983562");
  for (int m = 1; m <= 12; ++m) {
    Real z = Z_even(m, ctx).value;
    Real t = pow(z, Real(-1) / Real(2 * m));
    EXPECT_LT(t, t1);
    EXPECT_GT(t, prev);
    prev = t;
  }
}

TEST(ZEvenPrimes, TrivialTruncations) {
  auto ctx = make_context(30);
  PrecisionGuard g(40);
  // J = 0: only the factorial and Hurwitz parts remain.
  PrimesEstimate e = Z_even_via_primes(1, 5, 0, 100, ctx);
  Real sum(0), c(1);
  for (int k = 0; k <= 5; ++k) {
    Real fq = factorial(static_cast<unsigned long>(k + 1));
    Real inner = -(k % 2 == 0 ? fq : -fq);
    sum += (k % 2 == 0 ? -c : c) * inner;
    c = c * Real(1.5) / Real(k + 1);
  }
  Real expect = -(sum - hurwitz_zeta(Real(2), Real(1.25)) / 4) / 2;
  EXPECT_TRUE(close(e.value.value, expect, 30));
}

TEST(ZEvenPrimes, SinglePrimeRegression) {
  auto ctx = make_context(30);
  PrecisionGuard g(40);
  const int K = 8, J = 30;
  PrimesEstimate e = Z_even_via_primes(1, K, J, 2, ctx);
  // Independent evaluation of the truncated triple sum with p = 2 only.
  Real L = const_log2(), total(0), c(1);
  for (int k = 0; k <= K; ++k) {
    int q = k + 2;
    Real S(0);
    for (int j = 1; j <= J; ++j) S += pow(Real(j), static_cast<long>(q - 1)) * pow(L, static_cast<long>(q)) * pow(Real(4), -j);
    if (q % 2 == 1) S = -S;
    Real fq = factorial(static_cast<unsigned long>(q - 1));
    Real inner = S - (k % 2 == 0 ? fq : -fq);
    total += (k % 2 == 0 ? -c : c) * inner;
    c = c * Real(1.5) / Real(k + 1);
  }
  Real expect = -(total - hurwitz_zeta(Real(2), Real(1.25)) / 4) / 2;
  EXPECT_TRUE(close(e.value.value, expect, 28));
}

TEST(ZEvenPrimes, DiagnosticBoundsErrorOrder) {
  auto ctx = make_context(30);
  PrecisionGuard g(40);
  Real exact = Z_even(1, ctx).value;
  for (int K : {2, 4, 8}) {
    PrimesEstimate e = Z_even_via_primes(1, K, 25, 100000, ctx);
    Real err = abs(e.value.value - exact);
    Real predicted = e.truncation_estimate + e.k_tail_estimate;
    // Same order of magnitude: within a factor of 100 either way.
    EXPECT_LT(std::fabs(err.log10_abs() - predicted.log10_abs()), 2.0) << K << " err " << err.to_sci(4) << " pred "
                                                                       << predicted.to_sci(4);
  }
}

TEST(SpecialValues, NegativeEvenRationals) {
  EXPECT_EQ(Z_neg_even(1), mpq_class(-9, 32));
  EXPECT_EQ(Z_neg_even(2), mpq_class(3, 128));
  EXPECT_EQ(Z_neg_even(3), mpq_class(-69, 512));
  EXPECT_EQ(Z_neg_even(4), mpq_class(-1377, 2048));
  EXPECT_EQ(Z_neg_even(5), mpq_class(-50529, 8192));
  EXPECT_EQ(Z_neg_even(6), mpq_class(-2702757, 32768));
  PrecisionGuard g(30);
  EXPECT_EQ(Real(Z_neg_even(3)).to_fixed(9), "-0.134765625");
  EXPECT_EQ(Real(Z_neg_even(2)).to_fixed(7), "0.0234375");
  EXPECT_EQ(Real(Z_neg_even(1)).to_fixed(5), "-0.28125");
  EXPECT_EQ(Z_at_zero(), mpq_class(7, 8));
  EXPECT_EQ(Real(Z_at_zero()).to_fixed(3), "0.875");
  EXPECT_THROW(Z_neg_even(0), Error);
}

TEST(SpecialValues, DerivativeAtZero) {
  auto ctx = make_context(50);
  PrecisionGuard g(60);
  RealValue v = Z_prime_at_zero(ctx);
  EXPECT_TRUE(close(v.value, Real("0.405908972133847565739955413976"), 30));
  EXPECT_TRUE(close(Real(2) * v.value, Real("0.811817944267695"), 15));
}
