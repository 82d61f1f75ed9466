#include <gtest/gtest.h>

#include <cmath>
#include <map>

#include "secz/datafile.hpp"
#include "secz/errors.hpp"
#include "secz/golden.hpp"
#include "secz/voros.hpp"
#include "secz/zerogen.hpp"

using namespace secz;

namespace {

const ZerosDatabase& ref1000() {
  static const ZerosDatabase db = load_zeros(data_dir() + "/zeros_1000.txt");
  return db;
}

const std::vector<GoldenRow>& golden(const char* f) {
  static std::map<std::string, std::vector<GoldenRow>> cache;
  auto it = cache.find(f);
  if (it == cache.end()) it = cache.emplace(f, load_golden(data_dir() + "/golden/" + f)).first;
  return it->second;
}

}  // namespace

TEST(FirstZero, LimitTable) {
  auto ctx = make_context(60);
  PrecisionGuard g(ctx.internal_digits());
  for (const auto& row : golden("first_zero.txt")) {
    int m = static_cast<int>(std::stol(row.key));
    auto r = extract_first_zero(m, ctx, &ref1000());
    SCOPED_TRACE("m=" + row.key);
    // Past accurate_digits the printed value itself is off.
    EXPECT_GE(matched_digits(r.estimate.value, row), row.attr_long("accurate_digits", std::min(30L, row.printed_digits())));
    EXPECT_LT(r.estimate.value, ref1000().t[0].value);  // every finite-m value sits below t_1
    if (row.attrs.count("sig")) EXPECT_EQ(r.matched_digits_vs_reference, row.attr_long("sig", -1));
    if (row.attrs.count("min")) EXPECT_GE(r.matched_digits_vs_reference, row.attr_long("min", -1));
    // The next zeros predict the convergence rate to within a digit.
    if (m >= 5) EXPECT_NEAR(r.limit_digits, r.matched_digits_vs_reference, 2);
  }
}

TEST(FirstZero, IncreasesWithM) {
  auto ctx = make_context(40);
  PrecisionGuard g(ctx.internal_digits());
  Real prev(0);
  for (int m = 1; m <= 12; ++m) {
    Real t = extract_first_zero(m, ctx).estimate.value;
    EXPECT_GT(t, prev) << m;
    prev = t;
  }
}

// m = 250 against 1000-digit predecessors at 1300 digits.
TEST(NextZero, RecurrenceTable) {
  auto ctx = make_context(1300);
  const auto& ref = ref1000();
  const RealValue z500 = Z_even(250, ctx);
  for (const auto& row : golden("next_zeros.txt")) {
    int n = static_cast<int>(std::stol(row.key));
    SCOPED_TRACE("n=" + row.key);
    std::vector<RealValue> known(ref.t.begin(), ref.t.begin() + (n - 1));
    auto r = n == 1 ? extract_first_zero(250, ctx, &ref) : extract_next_zero(known, 250, z500, ctx, &ref);
    EXPECT_EQ(r.n, n);
    EXPECT_NEAR(r.matched_digits_vs_reference, row.attr_long("sig", -1), 2);
    EXPECT_GE(matched_digits(r.estimate.value, row), std::min(row.printed_digits(), row.attr_long("sig", -1) - 2));
    // 1000-digit predecessors leave the formula value itself far more accurate than the limit.
    EXPECT_GT(r.estimate.certified_digits, 500);
    if (n > 1) EXPECT_GT(r.cancellation_digits, 0.0);
  }
}

TEST(NextZero, ShortPredecessorsAreRejected) {
  auto ctx = make_context(100);
  PrecisionGuard g(ctx.internal_digits());
  RealValue t1{ref1000().t[0].value, 20};
  t1.value.rebase();
  try {
    extract_next_zero({t1}, 250, ctx);
    FAIL() << "expected a precision error";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::precision);
    EXPECT_NE(std::string(e.what()).find("insufficient predecessor precision"), std::string::npos);
  }
  // The same predecessor is adequate at small m, with fewer digits claimed.
  auto r = extract_next_zero({t1}, 10, ctx, &ref1000());
  EXPECT_LT(r.estimate.certified_digits, 20);
  EXPECT_GE(r.estimate.certified_digits, 1);
}

TEST(NextZero, SelfCancellationDiagnostic) {
  auto ctx = make_context(120);
  const auto& ref = ref1000();
  PrecisionGuard g(ctx.internal_digits());
  // The t_1 term dominates Z(2m); the cancellation grows like 2m log10(t_2/t_1).
  for (int m : {10, 20, 40}) {
    auto r = extract_next_zero({ref.t[0]}, m, ctx, &ref);
    double expect = 2 * m * std::log10((ref.t[1].value / ref.t[0].value).to_double());
    EXPECT_NEAR(r.cancellation_digits, expect, 0.5) << m;
    // Claimed digits never exceed what survives the cancellation.
    EXPECT_LE(r.estimate.certified_digits, 120 - static_cast<long>(r.cancellation_digits) + 2);
  }
}

TEST(NextZero, RejectsBadInput) {
  auto ctx = make_context(30);
  EXPECT_THROW(extract_first_zero(0, ctx), Error);
  EXPECT_THROW(extract_next_zero({}, 5, ctx), Error);
  const auto& ref = ref1000();
  EXPECT_THROW(extract_next_zero({ref.t[1], ref.t[0]}, 5, ctx), Error);
}

// Z(2) from primes carries the prime-cutoff error into t_1.
TEST(PrimesRoute, FirstZeroFromPrimes) {
  auto ctx = make_context(30);
  PrecisionGuard g(ctx.internal_digits());
  auto r = extract_zero_from_primes(1, 1, {2, 30, 1000000}, {}, ctx, &ref1000());
  auto exact = extract_first_zero(1, ctx);
  Real err = abs(r.estimate.value - exact.estimate.value);
  EXPECT_LT(err, pow(Real(10), -r.estimate.certified_digits));
  EXPECT_TRUE(r.truncation_dominated);
  // Predicted error of t_1 = t (dZ/Z)/2m within one order of magnitude.
  Real pred = r.estimate.value * r.truncation_estimate / Z_even(1, ctx).value / 2L;
  EXPECT_LT(std::abs(err.log10_abs() - pred.log10_abs()), 1.0);
}
