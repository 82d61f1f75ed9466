#include <gtest/gtest.h>

#include <cmath>
#include <cstdio>
#include <fstream>

#include "secz/adr.hpp"
#include "secz/datafile.hpp"
#include "secz/errors.hpp"
#include "secz/gamma.hpp"
#include "secz/golden.hpp"
#include "secz/primes.hpp"
#include "secz/quadrature.hpp"
#include "secz/voros.hpp"

using namespace secz;

namespace {

::testing::AssertionResult close(const Real& a, const Real& b, long digits) {
  Real d = abs(a - b);
  if (d < pow(Real(10), -digits)) return ::testing::AssertionSuccess();
  return ::testing::AssertionFailure() << a.to_sci(40) << " vs " << b.to_sci(40) << " (diff " << d.to_sci(5) << ")";
}

const ZerosDatabase& zeros() {
  static const ZerosDatabase db = load_zeros(data_dir() + "/zeros.txt");
  return db;
}

struct Row {
  const char* s;
  const char* z;
};

const Row kTable3[] = {
    {"-1.5", "0.543192013090835468509500468007"}, {"-0.5", "0.785321481872238131428414667627"},
    {"0.25", "1.046292354793822380550774149561"}, {"0.5", "1.549059995596196967158137380839"},
    {"0.75", "4.003304705990492198451272426242"}, {"1.5", "0.247759676684890683692669878485"},
    {"2", "0.023104993115418970788933810430"},    {"3", "0.000729548272709704215875518569"},
    {"4", "0.000037172599285269686164866262"},    {"5", "0.000002231188699502103328640628"},
    {"6", "0.000000144173931400973279695381"},    {"7", "0.000000009675344542702350408719"},
    {"8", "0.000000000663031680252990869873"},    {"9", "0.000000000045991912392894862969"},
    {"10", "0.00000000000321366415061660121"},    {"11", "0.00000000000022556506251559664"},
};

long decimals_of(const char* s) {
  std::string t(s);
  return static_cast<long>(t.size() - t.find('.') - 1);
}

std::string write_temp(const std::string& name, const std::string& body) {
  std::string path = ::testing::TempDir() + name;
  std::ofstream(path) << body;
  return path;
}

}  // namespace

TEST(Zeros, BundledDatabase) {
  const auto& db = zeros();
  EXPECT_GE(db.size(), 100u);
  EXPECT_GE(db.min_certified_digits, 100);
  PrecisionGuard g(40);
  EXPECT_TRUE(close(db.t[0].value, Real("14.134725141734693790457251983562"), 30));
  for (std::size_t i = 1; i < db.size(); ++i) EXPECT_GT(db.t[i].value, db.t[i - 1].value);
}

TEST(Zeros, RejectsBadFiles) {
  const std::string hdr = "# precision_digits=30\n";
  auto bad_order = write_temp("swapped.txt", hdr + "1 21.022039638771554992628479593896\n2 14.134725141734693790457251983562\n");
  EXPECT_THROW(load_zeros(bad_order), Error);
  auto swapped = write_temp("swapped2.txt", hdr + "2 21.022039638771554992628479593896\n1 14.134725141734693790457251983562\n");
  EXPECT_THROW(load_zeros(swapped), Error);
  auto empty = write_temp("empty.txt", hdr);
  EXPECT_THROW(load_zeros(empty), Error);
  auto off = write_temp("off.txt", hdr + "1 14.2\n");
  EXPECT_THROW(load_zeros(off), Error);
  auto coarse = write_temp("coarse.txt", hdr + "1 14.1347251417\n");
  EXPECT_NO_THROW(load_zeros(coarse));
  EXPECT_THROW(load_zeros(coarse, 20), Error);
  try {
    load_zeros(bad_order);
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::data);
  }
}

TEST(Theta, DominatedByFirstZero) {
  auto ctx = make_context(40);
  PrecisionGuard g(50);
  RealValue th = theta_direct(Real(1), zeros(), 40, ctx);
  const Real& t1 = zeros().t[0].value;
  const Real& t2 = zeros().t[1].value;
  // Second term is e^{-441.9}, far below the first at e^{-199.8}.
  Real lead = exp(-(t1 * t1));
  EXPECT_TRUE(close(th.value / lead, Real(1) + exp(t1 * t1 - t2 * t2), 45));
  EXPECT_TRUE(close(log(th.value), -(t1 * t1), 40));
}

TEST(Theta, MonotoneInCountAndX) {
  auto ctx = make_context(30);
  PrecisionGuard g(40);
  Real prev(0);
  for (int k = 1; k <= 40; ++k) {
    Real v = theta_direct(Real("0.001"), zeros(), k, ctx).value;
    EXPECT_GT(v, prev);
    prev = v;
  }
  Real last = theta_direct(Real("0.0005"), zeros(), 40, ctx).value;
  for (const char* x : {"0.001", "0.01", "0.1", "1", "2"}) {
    Real v = theta_direct(Real(x), zeros(), 40, ctx).value;
    EXPECT_LT(v, last) << x;
    last = v;
  }
  EXPECT_THROW(theta_direct(Real(0), zeros(), 10, ctx), Error);
  EXPECT_THROW(theta_direct(Real(1), zeros(), 100000, ctx), Error);
}

TEST(AdrTerms, PrimeTerm) {
  auto ctx = make_context(30);
  PrecisionGuard g(40);
  AdrParams p;
  p.mangoldt_limit = 1;
  EXPECT_TRUE(adr_P(Real(2), p, ctx).value.is_zero());
  // Only n = 2 contributes.
  p.mangoldt_limit = 2;
  Real L = const_log2();
  Real expect = L / sqrt(Real(2)) / (Real(2) * sqrt(const_pi())) *
                upper_incomplete_gamma(Real(-0.5), L * L / (Real(4) * p.a)) * (L / 2);
  EXPECT_TRUE(close(adr_P(Real(2), p, ctx).value, expect, 38));
}

TEST(AdrTerms, PrimeTermMatchesQuadrature) {
  // (1/Gamma(s/2)) int_0^a x^{s/2-1} (2 sqrt(pi x))^{-1} sum Lambda(n)/sqrt(n) e^{-log^2 n/(4x)} dx
  auto ctx = make_context(30);
  PrecisionGuard g(40);
  AdrParams p;
  p.mangoldt_limit = 30;
  const Real s(0.5);
  std::vector<std::pair<Real, Real>> w;  // (log n, Lambda(n)/sqrt n)
  PrimeTable pt(30);
  for (auto q : pt.primes())
    for (unsigned long n = q; n <= 30; n *= q)
      w.push_back({log(Real(n)), log(Real(static_cast<unsigned long>(q))) / sqrt(Real(n))});
  Real a = p.a;
  RealFn f = [&](const Real& x) {
    Real sum(0);
    for (auto& [ln, c] : w) sum += c * exp(-(ln * ln) / (Real(4) * x));
    return sum * pow(x, s / 2 - Real(1)) / (Real(2) * sqrt(const_pi() * x));
  };
  Real oracle = integrate_finite(f, Real(0), a, ctx).value * recip_gamma(s / 2);
  EXPECT_TRUE(close(adr_P(s, p, ctx).value, oracle, 30));
}

TEST(AdrTerms, ExponentialTerm) {
  auto ctx = make_context(30);
  PrecisionGuard g(40);
  AdrParams p;
  p.e_terms = 1;
  Real a = p.a;
  EXPECT_TRUE(close(adr_E(Real(2), p, ctx).value, a + a * a / 8, 38));
  p.e_terms = 300;
  const Real s(0.5);
  RealFn f = [&](const Real& x) { return exp(x / 4) * pow(x, s / 2 - Real(1)); };
  Real oracle = integrate_finite(f, Real(0), a, ctx).value * recip_gamma(s / 2);
  EXPECT_TRUE(close(adr_E(s, p, ctx).value, oracle, 30));
  EXPECT_THROW(adr_E(Real(-2), p, ctx), Error);
  // Successive series terms shrink by at least a/4.
  Real prev = adr_E(s, AdrParams{p.a, p.N, p.zero_count, p.mangoldt_limit, 1}, ctx).value;
  Real inc_prev(1);
  for (int k = 2; k < 6; ++k) {
    Real v = adr_E(s, AdrParams{p.a, p.N, p.zero_count, p.mangoldt_limit, k}, ctx).value;
    Real inc = abs(v - prev);
    if (k > 2) EXPECT_LT(inc / inc_prev, a / 4);
    inc_prev = inc;
    prev = v;
  }
}

TEST(AdrTerms, SingularTerm) {
  auto ctx = make_context(30);
  PrecisionGuard g(40);
  AdrParams p;
  p.N = 0;
  const Real s(2), a = p.a;
  Real principal = exp((s - 1) / 2 * log(a)) / (Real(4) * sqrt(const_pi())) * recip_gamma(s / 2) *
                   (Real(-2) / ((s - 1) * (s - 1)) + (const_euler() + log(Real(16) * const_pi() * const_pi() * a)) / (s - 1));
  EXPECT_TRUE(close(adr_S(s, p, ctx).value, principal, 38));
  // Double pole dominates just right of 1.
  p.N = 100;
  EXPECT_LT(adr_S(Real("1.00001"), p, ctx).value, Real(-1e6));
  for (const char* pole : {"1", "-1", "-3"}) EXPECT_THROW(adr_S(Real(pole), p, ctx), Error) << pole;
}

TEST(AdrTerms, ZerosTermLimits) {
  auto ctx = make_context(30);
  PrecisionGuard g(40);
  AdrParams p;
  p.zero_count = 1;
  p.a = Real(10);
  EXPECT_LT(abs(adr_A(Real(2), p, zeros(), ctx).value), Real("1e-800"));
  p.a = Real("1e-12");
  const Real& t1 = zeros().t[0].value;
  EXPECT_TRUE(close(adr_A(Real(2), p, zeros(), ctx).value * t1 * t1, Real(1), 9));
  p.zero_count = 200000;
  EXPECT_THROW(adr_A(Real(2), p, zeros(), ctx), Error);
}

TEST(AdrTerms, ZerosTermTruncation) {
  auto ctx = make_context(40);
  PrecisionGuard g(50);
  AdrParams p;
  RealValue a40 = adr_A(Real(2), p, zeros(), ctx);
  p.zero_count = 80;
  RealValue a80 = adr_A(Real(2), p, zeros(), ctx);
  EXPECT_TRUE(close(a40.value, a80.value, a40.certified_digits));
  EXPECT_GE(a40.certified_digits, 40);
}

TEST(Adr, Table3DefaultParameters) {
  auto ctx = make_context(40);
  PrecisionGuard g(40);
  AdrParams p;
  for (const auto& r : kTable3) {
    RealValue z = Z_adr(Real(r.s), p, zeros(), ctx);
    EXPECT_TRUE(close(z.value, Real(r.z), decimals_of(r.z))) << r.s;
  }
}

TEST(Adr, RationalRowsAsLimits) {
  auto ctx = make_context(40);
  PrecisionGuard g(40);
  AdrEvaluator ev(AdrParams{}, zeros());
  EXPECT_TRUE(close(ev(Real(0)), Real(Z_at_zero()), 25));
  for (int m = 1; m <= 3; ++m) EXPECT_TRUE(close(ev(Real(-2 * m)), Real(Z_neg_even(m)), 25)) << m;
  EXPECT_THROW(Z_adr(Real(-2), AdrParams{}, zeros(), ctx), Error);
  EXPECT_THROW(Z_adr(Real(0), AdrParams{}, zeros(), ctx), Error);
  EXPECT_THROW(ev(Real(1)), Error);
  EXPECT_THROW(ev(Real(-3)), Error);
}

TEST(Adr, ContinuityAtExactPoints) {
  auto ctx = make_context(40);
  PrecisionGuard g(40);
  AdrParams p;
  const Real eps("1e-8");
  // Z(eps) - 7/8 ~ Z'(0) eps.
  Real zp0 = Z_prime_at_zero(ctx).value;
  for (int sign : {1, -1}) {
    Real h = sign > 0 ? eps : -eps;
    Real d = Z_adr(h, p, zeros(), ctx).value - Real(Z_at_zero());
    EXPECT_TRUE(close(d / h, zp0, 7)) << sign;
  }
  Real zm2 = Real(Z_neg_even(1));
  Real up = Z_adr(Real(-2) + eps, p, zeros(), ctx).value - zm2;
  Real dn = Z_adr(Real(-2) - eps, p, zeros(), ctx).value - zm2;
  EXPECT_LT(abs(up), Real("1e-6"));
  EXPECT_TRUE(close(up / eps, -(dn / eps), 6));
  for (const char* s : {"-1.9", "-0.5", "0.25"}) EXPECT_NO_THROW(Z_adr(Real(s), p, zeros(), ctx));
}

TEST(Adr, TunedMatchesEvenClosedForms) {
  auto ctx = make_context(60);
  PrecisionGuard g(60);
  AdrParams p = tuned_params(60, zeros());
  for (int m = 1; m <= 10; ++m) {
    Real z = Z_adr(Real(2 * m), p, zeros(), ctx).value;
    Real e = Z_even(m, ctx).value;
    EXPECT_GE(matching_digits(z / e, Real(1)), 50) << m;
  }
}

TEST(Adr, TruncationMonotonicity) {
  auto ctx = make_context(40);
  PrecisionGuard g(40);
  const Real s(0.5);
  AdrParams base;
  AdrEvaluator ev(base, zeros());
  AdrTerms t = ev.terms(s);
  Real z0 = t.A - t.P + t.E - t.S;
  Real bound = max(t.truncation_estimate, pow(Real(10), -38L));
  auto variant = [&](auto mutate) {
    AdrParams q = base;
    mutate(q);
    return Z_adr(s, q, zeros(), ctx).value;
  };
  EXPECT_LE(abs(variant([](AdrParams& q) { q.zero_count = 80; }) - z0), bound);
  EXPECT_LE(abs(variant([](AdrParams& q) { q.mangoldt_limit = 400; }) - z0), bound);
  EXPECT_LE(abs(variant([](AdrParams& q) { q.e_terms = 600; }) - z0), bound);
  EXPECT_LE(abs(variant([](AdrParams& q) { q.N = 160; }) - z0), bound);
  // Cutting N visibly changes the result, by about the reported estimate.
  AdrParams coarse = base;
  coarse.N = 20;
  AdrEvaluator ec(coarse, zeros());
  AdrTerms tc = ec.terms(s);
  Real moved = abs(tc.A - tc.P + tc.E - tc.S - z0);
  EXPECT_GT(moved, Real("1e-30"));
  EXPECT_LT(std::fabs(moved.log10_abs() - tc.truncation_estimate.log10_abs()), 2.0);
}

TEST(AdrDeriv, PublishedDerivatives) {
  auto ctx = make_context(40);
  PrecisionGuard g(40);
  AdrParams p;
  EXPECT_TRUE(close(Z_adr_deriv(Real(2), 0, p, zeros(), ctx).value, Real("0.02310499311541897078893381043"), 29));
  EXPECT_TRUE(close(Z_adr_deriv(Real(2), 1, p, zeros(), ctx).value, Real("-0.09262185134364910430268093267"), 29));
  EXPECT_TRUE(close(Z_adr_deriv(Real(0), 2, p, zeros(), ctx).value, Real("1.56016236721756204469457369276"), 29));
  EXPECT_THROW(Z_adr_deriv(Real(1), 1, p, zeros(), ctx), Error);
}

TEST(AdrDeriv, TaylorReconstruction) {
  // About 2 the radius is 1 (double pole at 1), so with 30 terms at
  // s = 2.3 the principal part alone leaves a remainder near 2e-16. Adding
  // that remainder back exactly must close the gap to the regular part's
  // much smaller tail (radius 3).
  auto ctx = make_context(40);
  PrecisionGuard g(40);
  AdrParams p;
  const int K = 30;
  TaylorResult tr = Z_adr_taylor(Real(2), K, p, zeros(), ctx);
  Real h("0.3"), sum(0), hp(1), pp_trunc(0);
  const Real two_pi = Real(2) * const_pi(), l2p = log(two_pi);
  for (int k = 0; k <= K; ++k) {
    sum += tr.coeffs[static_cast<std::size_t>(k)] * hp;
    // 1/(2pi (s-1)^2) - log(2pi)/(2pi (s-1)) expanded about 2.
    Real ck = (Real(k + 1) - l2p) / two_pi;
    pp_trunc += (k % 2 == 0 ? ck : -ck) * hp;
    hp *= h;
  }
  const Real x = Real(1) + h;
  Real pp_full = Real(1) / (two_pi * x * x) - l2p / (two_pi * x);
  Real z = Z_adr(Real("2.3"), p, zeros(), ctx).value;
  Real remainder = pp_full - pp_trunc;
  EXPECT_GT(abs(remainder), Real("1e-16"));
  EXPECT_LT(std::fabs((sum - z).log10_abs() - remainder.log10_abs()), 0.3);
  EXPECT_TRUE(close(sum + remainder, z, 28));
}

TEST(AdrDeriv, DerivativeAtZeroMatchesClosedForm) {
  auto ctx = make_context(40);
  PrecisionGuard g(40);
  RealValue d = Z_adr_deriv(Real(0), 1, AdrParams{}, zeros(), ctx);
  EXPECT_TRUE(close(d.value, Z_prime_at_zero(ctx).value, 30));
}

TEST(Calibrate, PicksBetterCandidate) {
  auto ctx = make_context(40);
  PrecisionGuard g(40);
  AdrParams good;
  AdrParams poor;
  poor.a = Real("0.005");
  poor.N = 300;
  poor.zero_count = 10;
  std::vector<Anchor> anchors{{Real(2), Z_even(1, ctx).value}};
  Calibration c = calibrate({poor, good}, zeros(), ctx, anchors);
  ASSERT_EQ(c.scores.size(), 2u);
  long direct_poor = matching_digits(Z_adr(Real(2), poor, zeros(), ctx).value, anchors[0].value);
  long direct_good = matching_digits(Z_adr(Real(2), good, zeros(), ctx).value, anchors[0].value);
  ASSERT_NE(direct_poor >= 38, direct_good >= 38);
  EXPECT_EQ(c.scores[0] > c.scores[1], direct_poor > direct_good);
  EXPECT_EQ(c.matched_digits, std::max(c.scores[0], c.scores[1]));
  EXPECT_TRUE(c.params.a == (direct_good > direct_poor ? good.a : poor.a));
}

TEST(Calibrate, SingleAndEmpty) {
  auto ctx = make_context(30);
  PrecisionGuard g(30);
  AdrParams only;
  only.N = 5;
  Calibration c = calibrate({only}, zeros(), ctx, {}, 1000);
  EXPECT_EQ(c.params.N, 5);
  EXPECT_EQ(c.scores.size(), 1u);
  EXPECT_THROW(calibrate({}, zeros(), ctx), Error);
  AdrParams other = only;
  other.N = 6;
  EXPECT_THROW(calibrate({only, other}, zeros(), ctx, {}, 1000), Error);
}

TEST(Adr, RejectsBadParameters) {
  AdrParams p;
  p.a = Real(0);
  EXPECT_THROW(AdrEvaluator(p, zeros()), Error);
  p = AdrParams{};
  p.zero_count = 100000;
  EXPECT_THROW(AdrEvaluator(p, zeros()), Error);
}

// 200-decimal prefixes of Z(3), ..., Z(11); tuned parameters reach 100.
TEST(ZAdr, OddValuesToHundredDigits) {
  auto ctx = make_context(110);
  AdrParams p = tuned_params(110, zeros());
  for (const auto& row : load_golden(data_dir() + "/golden/odd_values.txt")) {
    PrecisionGuard g(ctx.internal_digits());
    RealValue v = Z_adr(Real(row.key), p, zeros(), ctx);
    EXPECT_GE(agreeing_decimals(v.value, row.digits, 200), row.attr_long("min", 100)) << row.key;
    EXPECT_GE(v.certified_digits, 100) << row.key;
  }
}
