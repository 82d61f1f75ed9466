#include "secz/adr.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <mutex>

#include "secz/bernoulli.hpp"
#include "secz/datafile.hpp"
#include "secz/errors.hpp"
#include "secz/gamma.hpp"
#include "secz/primes.hpp"
#include "secz/voros.hpp"
#include "secz/zeta.hpp"

namespace secz {

namespace {

constexpr double kLn10 = 2.302585092994046;

// Exact B_n(3/4), shared by every evaluator.
const mpq_class& bernoulli_three_quarters(unsigned n) {
  static std::mutex mu;
  static std::map<unsigned, mpq_class> cache;
  std::lock_guard<std::mutex> lk(mu);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  return cache.emplace(n, bernoulli_poly(n, mpq_class(3, 4))).first->second;
}

// k if s = -2k for an integer k >= 0, else -1.
long neg_even_index(const Real& s) {
  if (s > Real(0) || !is_integer(s)) return -1;
  long v = -s.to_long();
  return v % 2 == 0 ? v / 2 : -1;
}

bool is_pole(const Real& s) {
  if (s == Real(1)) return true;
  if (s > Real(0) || !is_integer(s)) return false;
  return (-s.to_long()) % 2 == 1;
}

Real eps_here() { return pow(Real(10), -(working_digits() + 3)); }

}  // namespace

double adr_pole_distance(double s) {
  double d = std::fabs(s - 1.0);
  if (s < 0.0) {
    double odd = 2.0 * std::round((s - 1.0) / 2.0) + 1.0;  // nearest odd integer
    if (odd < 0.0) d = std::min(d, std::fabs(s - odd));
    d = std::min(d, std::fabs(s + 1.0));
  } else {
    d = std::min(d, s + 1.0);
  }
  return d;
}

ZerosDatabase load_zeros(const std::string& path, long min_digits) {
  DataFile f = read_data_file(path);
  if (f.rows.empty()) throw Error(ErrorKind::data, path + ": no zeros");
  long prec = f.header_long("precision_digits", 0);
  ZerosDatabase db;
  db.source_path = path;
  db.min_certified_digits = std::numeric_limits<long>::max();
  PrecisionGuard g(std::max<long>(prec, 30) + 10);
  for (std::size_t i = 0; i < f.rows.size(); ++i) {
    const auto& r = f.rows[i];
    if (r.index != static_cast<long>(i + 1)) throw Error(ErrorKind::data, path + ": zero indices must run 1, 2, ...");
    long cert = certified_decimals(r.digits, prec);
    if (cert < min_digits)
      throw Error(ErrorKind::data, path + ": zero " + std::to_string(r.index) + " has only " + std::to_string(cert) +
                                       " certified digits");
    Real t(r.digits);
    if (!db.t.empty() && !(t > db.t.back().value))
      throw Error(ErrorKind::data, path + ": zeros out of order at index " + std::to_string(r.index));
    db.t.push_back({t, cert});
    db.min_certified_digits = std::min(db.min_certified_digits, cert);
  }
  const Real& t1 = db.t.front().value;
  if (!(t1 > Real("14.13") && t1 < Real("14.14"))) throw Error(ErrorKind::data, path + ": first zero not near 14.1347");
  return db;
}

AdrParams tuned_params(long digits, const ZerosDatabase& zeros) {
  AdrParams p;
  const double D = static_cast<double>(digits);
  const double a = M_PI * M_PI / (4.0 * kLn10 * (D + 15.0));
  p.a = Real(a);
  // Bernoulli terms ~ 2 (2 sqrt(a)/pi)^n Gamma(n/2)/n.
  const double r = std::log10(2.0 * std::sqrt(a) / M_PI);
  p.N = 0;
  for (int n = 1; n < 20000; ++n) {
    double lt = std::log10(2.0) + n * r + std::lgamma(n / 2.0) / kLn10 - std::log10(n);
    if (lt < -(D + 10.0)) {
      p.N = n;
      break;
    }
  }
  if (p.N == 0) throw Error(ErrorKind::convergence, "no Bernoulli truncation reaches the target");
  const double need = (D + 10.0) * kLn10;
  p.zero_count = static_cast<int>(zeros.size());
  for (std::size_t k = 0; k < zeros.size(); ++k) {
    double t = zeros.t[k].value.to_double();
    if (a * t * t >= need) {
      p.zero_count = static_cast<int>(k + 1);
      break;
    }
  }
  p.mangoldt_limit = std::max<std::uint64_t>(100, static_cast<std::uint64_t>(std::exp(std::sqrt(4.0 * a * need) + 1.0)));
  p.e_terms = 300;
  return p;
}

RealValue theta_direct(const Real& x, const ZerosDatabase& zeros, int count, const PrecisionContext& ctx) {
  if (!(x > Real(0))) throw Error(ErrorKind::domain, "theta needs x > 0");
  if (count < 1 || static_cast<std::size_t>(count) > zeros.size())
    throw Error(ErrorKind::data, "insufficient zeros for theta");
  RealValue out;
  Real tail;
  {
    PrecisionGuard g(ctx.internal_digits());
    Real sum(0);
    for (int n = 0; n < count; ++n) {
      const Real& t = zeros.t[static_cast<std::size_t>(n)].value;
      sum += exp(-(t * t * x));
    }
    // Remaining zeros: density log(t/2 pi)/(2 pi) against exp(-t^2 x).
    const Real& tk = zeros.t[static_cast<std::size_t>(count - 1)].value;
    Real pi2 = Real(2) * const_pi();
    tail = exp(-(tk * tk * x)) / (Real(2) * tk * x) * log(tk / pi2) / pi2;
    out.value = sum;
  }
  out.value.rebase();
  long cert = tail.is_zero() ? ctx.working_digits : static_cast<long>(std::floor(-tail.log10_abs()));
  out.certified_digits = std::clamp(cert, 0L, ctx.working_digits);
  return out;
}

struct AdrEvaluator::Cache {
  std::mutex mu;
  std::map<mpfr_prec_t, std::vector<Real>> s_coeffs;  // c_1..c_{N+1}, index n-1
  std::vector<std::pair<std::uint64_t, std::uint32_t>> prime_powers;  // (n, p)
};

AdrEvaluator::AdrEvaluator(AdrParams p, const ZerosDatabase& zeros)
    : p_(std::move(p)), zeros_(&zeros), cache_(std::make_shared<Cache>()) {
  if (!(p_.a > Real(0))) throw Error(ErrorKind::domain, "ADR split point must be positive");
  if (p_.N < 0 || p_.zero_count < 0 || p_.e_terms < 1) throw Error(ErrorKind::domain, "ADR truncations invalid");
  if (static_cast<std::size_t>(p_.zero_count) > zeros.size())
    throw Error(ErrorKind::data, "insufficient zeros: requested " + std::to_string(p_.zero_count) + ", have " +
                                     std::to_string(zeros.size()));
  // Prime powers up to the limit plus the next one, used for the tail.
  std::uint64_t lim = std::max<std::uint64_t>(p_.mangoldt_limit, 2);
  PrimeTable table(2 * lim + 10);
  for (std::uint32_t q : table.primes()) {
    for (std::uint64_t pk = q; pk <= 2 * lim + 10; pk *= q) {
      cache_->prime_powers.emplace_back(pk, q);
      if (pk > (2 * lim + 10) / q) break;
    }
  }
  std::sort(cache_->prime_powers.begin(), cache_->prime_powers.end());
}

const std::vector<Real>& AdrEvaluator::s_coeffs() const {
  const mpfr_prec_t bits = working_bits();
  std::lock_guard<std::mutex> lk(cache_->mu);
  auto it = cache_->s_coeffs.find(bits);
  if (it != cache_->s_coeffs.end()) return it->second;
  std::vector<Real> c;
  Real a = p_.a;
  a.rebase();
  Real w = Real(4) * sqrt(a), wn(1);
  Real fact(1);
  for (int n = 1; n <= p_.N + 1; ++n) {
    wn *= w;
    fact *= static_cast<long>(n);
    Real b(bernoulli_three_quarters(static_cast<unsigned>(n)));
    c.push_back(b / fact * wn * mpfr_gamma_fn(Real(n) / 2));
  }
  return cache_->s_coeffs.emplace(bits, std::move(c)).first->second;
}

Real AdrEvaluator::prime_term(const Real& s, Real* tail) const {
  PrecisionGuard g(working_digits() + 10);
  Real ss = s;
  ss.rebase();
  Real a = p_.a;
  a.rebase();
  const Real rg = recip_gamma(ss / 2);
  const Real h = (Real(1) - ss) / 2;
  const Real eps = eps_here();
  const Real pref = Real(1) / (Real(2) * sqrt(const_pi()));
  auto term = [&](std::uint64_t n, std::uint32_t p) {
    Real ln = log(Real(static_cast<unsigned long>(n)));
    Real x = ln * ln / (Real(4) * a);
    Real v = log(Real(static_cast<unsigned long>(p))) / sqrt(Real(static_cast<unsigned long>(n)));
    return v * upper_incomplete_gamma(h, x) * exp((ss - Real(1)) * log(ln / 2)) * pref * rg;
  };
  Real sum(0);
  Real next(0);
  int small = 0;
  bool cut = false;
  for (const auto& [n, p] : cache_->prime_powers) {
    if (n > p_.mangoldt_limit) {
      if (!cut) next = term(n, p);
      break;
    }
    Real t = term(n, p);
    sum += t;
    if (n > 9 && abs(t) < eps * max(abs(sum), eps)) {
      if (++small >= 3) {
        cut = true;
        next = t;
        break;
      }
    } else {
      small = 0;
    }
  }
  if (tail) *tail = abs(next);
  return sum;
}

Real AdrEvaluator::exp_term(const Real& s, bool limit, Real* tail) const {
  long k = neg_even_index(s);
  if (k >= 0) {
    if (!limit) throw Error(ErrorKind::pole, "exponential term has a 0/0 term at s = -2k; use the limit");
    if (tail) *tail = Real(0);
    Real v = pow(Real(4), -k);
    return k % 2 == 0 ? v : -v;
  }
  PrecisionGuard g(working_digits() + 10);
  Real ss = s;
  ss.rebase();
  Real a = p_.a;
  a.rebase();
  const Real half = ss / 2;
  const Real q = a / 4;
  const Real eps = eps_here();
  Real sum(0), c(1), t;
  int n = 0;
  for (; n <= p_.e_terms; ++n) {
    t = c / (Real(n) + half);
    sum += t;
    if (n > 2 && abs(t) < eps * abs(sum)) break;
    c *= q;
    c /= static_cast<long>(n + 1);
  }
  Real pref = exp(half * log(a)) * recip_gamma(half);
  if (tail) *tail = abs(pref * c * q / static_cast<long>(n + 1));
  return pref * sum;
}

Real AdrEvaluator::singular_term(const Real& s, bool limit, Real* tail) const {
  if (is_pole(s)) throw Error(ErrorKind::pole, "Z has a pole at s = " + s.to_sci(6));
  long k = neg_even_index(s);
  PrecisionGuard g(working_digits() + 10);
  const auto& c = s_coeffs();
  Real ss = s;
  ss.rebase();
  Real a = p_.a;
  a.rebase();
  const Real sm1 = ss - Real(1);
  const Real pref = exp(sm1 / 2 * log(a)) / (Real(4) * sqrt(const_pi()));
  if (k >= 0) {
    if (!limit) throw Error(ErrorKind::pole, "singular term is 0 * inf at s = -2k; use the limit");
    if (tail) *tail = Real(0);
    // Only n = 2k+1 survives: lim (1/Gamma(s/2))/(s+n-1) = (-1)^k k!/2.
    const long n = 2 * k + 1;
    if (n > p_.N) return Real(0);
    Real v = pref * c[static_cast<std::size_t>(n - 1)] * factorial(static_cast<unsigned long>(k)) / 2;
    return k % 2 == 0 ? v : -v;
  }
  const Real rg = recip_gamma(ss / 2);
  Real bracket = Real(-2) / (sm1 * sm1) + (const_euler() + log(Real(16) * const_pi() * const_pi() * a)) / sm1;
  for (int n = 1; n <= p_.N; ++n) bracket += c[static_cast<std::size_t>(n - 1)] / (sm1 + Real(n));
  if (tail) {
    Real d = sm1 + Real(p_.N + 1);
    *tail = d.is_zero() ? Real(0) : abs(pref * rg * c[static_cast<std::size_t>(p_.N)] / d);
  }
  return pref * rg * bracket;
}

Real AdrEvaluator::zeros_term(const Real& s, Real* tail) const {
  PrecisionGuard g(working_digits() + 10);
  Real ss = s;
  ss.rebase();
  Real a = p_.a;
  a.rebase();
  const Real half = ss / 2;
  const Real rg = recip_gamma(half);
  Real sum(0);
  auto term = [&](const Real& t) { return upper_incomplete_gamma(half, a * t * t) * rg * exp(-(ss * log(t))); };
  if (!rg.is_zero())
    for (int n = 0; n < p_.zero_count; ++n) {
      Real t = zeros_->t[static_cast<std::size_t>(n)].value;
      t.rebase();
      sum += term(t);
    }
  if (tail) {
    if (rg.is_zero() || p_.zero_count == 0) {
      *tail = Real(0);
    } else {
      Real tn;
      if (static_cast<std::size_t>(p_.zero_count) < zeros_->size()) {
        tn = zeros_->t[static_cast<std::size_t>(p_.zero_count)].value;
      } else {
        Real tk = zeros_->t.back().value;
        tn = tk + Real(2) * const_pi() / log(tk / (Real(2) * const_pi()));
      }
      tn.rebase();
      *tail = abs(term(tn));
    }
  }
  return sum;
}

AdrTerms AdrEvaluator::terms(const Real& s, bool limits) const {
  AdrTerms r;
  Real ta, tp, te, ts;
  r.A = zeros_term(s, &ta);
  r.P = prime_term(s, &tp);
  r.E = exp_term(s, limits, &te);
  r.S = singular_term(s, limits, &ts);
  r.truncation_estimate = ta + tp + te + ts;
  return r;
}

Real AdrEvaluator::operator()(const Real& s) const {
  AdrTerms t = terms(s, true);
  Real z;
  {
    PrecisionGuard g(working_digits() + 10);
    z = t.A - t.P + t.E - t.S;
  }
  z.rebase();
  return z;
}

namespace {

long cert_from(const Real& tail, long working) {
  if (tail.is_zero()) return working;
  return std::clamp(static_cast<long>(std::floor(-tail.log10_abs())), 0L, working);
}

}  // namespace

RealValue adr_P(const Real& s, const AdrParams& p, const PrecisionContext& ctx) {
  static const ZerosDatabase none;
  AdrParams q = p;
  q.zero_count = 0;
  AdrEvaluator ev(q, none);
  PrecisionGuard g(ctx.internal_digits());
  Real tail;
  Real v = ev.prime_term(s, &tail);
  return {v, cert_from(tail, ctx.working_digits)};
}

RealValue adr_E(const Real& s, const AdrParams& p, const PrecisionContext& ctx) {
  static const ZerosDatabase none;
  AdrParams q = p;
  q.zero_count = 0;
  q.mangoldt_limit = 2;
  AdrEvaluator ev(q, none);
  PrecisionGuard g(ctx.internal_digits());
  Real tail;
  Real v = ev.exp_term(s, false, &tail);
  return {v, cert_from(tail, ctx.working_digits)};
}

RealValue adr_S(const Real& s, const AdrParams& p, const PrecisionContext& ctx) {
  static const ZerosDatabase none;
  AdrParams q = p;
  q.zero_count = 0;
  q.mangoldt_limit = 2;
  AdrEvaluator ev(q, none);
  PrecisionGuard g(ctx.internal_digits());
  Real tail;
  Real v = ev.singular_term(s, false, &tail);
  return {v, cert_from(tail, ctx.working_digits)};
}

RealValue adr_A(const Real& s, const AdrParams& p, const ZerosDatabase& zeros, const PrecisionContext& ctx) {
  AdrParams q = p;
  q.mangoldt_limit = 2;
  AdrEvaluator ev(q, zeros);
  PrecisionGuard g(ctx.internal_digits());
  Real tail;
  Real v = ev.zeros_term(s, &tail);
  long cert = std::min(cert_from(tail, ctx.working_digits), zeros.min_certified_digits);
  return {v, cert};
}

RealValue Z_adr(const Real& s, const AdrParams& p, const ZerosDatabase& zeros, const PrecisionContext& ctx) {
  AdrEvaluator ev(p, zeros);
  RealValue out;
  Real tail;
  {
    PrecisionGuard g(ctx.internal_digits());
    AdrTerms t = ev.terms(s, false);
    out.value = t.A - t.P + t.E - t.S;
    tail = t.truncation_estimate;
  }
  out.value.rebase();
  out.certified_digits = std::min(cert_from(tail, ctx.working_digits), zeros.min_certified_digits);
  return out;
}

TaylorResult Z_adr_taylor(const Real& s, int m_max, const AdrParams& p, const ZerosDatabase& zeros,
                          const PrecisionContext& ctx) {
  if (is_pole(s)) throw Error(ErrorKind::pole, "Z has a pole at s = " + s.to_sci(6));
  auto ev = std::make_shared<AdrEvaluator>(p, zeros);
  RealFn f = [ev](const Real& x) { return (*ev)(x); };
  DiffOptions opt;
  opt.radius = adr_pole_distance(s.to_double());
  return taylor_coefficients(f, s, m_max, ctx, opt);
}

RealValue Z_adr_deriv(const Real& s, int m, const AdrParams& p, const ZerosDatabase& zeros,
                      const PrecisionContext& ctx) {
  if (m < 0) throw Error(ErrorKind::domain, "derivative order must be non-negative");
  if (is_pole(s)) throw Error(ErrorKind::pole, "Z has a pole at s = " + s.to_sci(6));
  auto ev = std::make_shared<AdrEvaluator>(p, zeros);
  RealFn f = [ev](const Real& x) { return (*ev)(x); };
  DiffOptions opt;
  opt.radius = adr_pole_distance(s.to_double());
  return derivative_num(f, s, m, ctx, opt);
}

long matching_digits(const Real& x, const Real& ref) {
  Real d = abs(x - ref);
  if (d.is_zero()) return working_digits();
  Real scale = max(abs(ref), Real(1));
  return std::max(0L, static_cast<long>(std::floor(-(d / scale).log10_abs())));
}

Calibration calibrate(const std::vector<AdrParams>& candidates, const ZerosDatabase& zeros,
                      const PrecisionContext& ctx, std::vector<Anchor> anchors, long min_digits) {
  if (candidates.empty()) throw Error(ErrorKind::domain, "calibration needs at least one candidate");
  PrecisionGuard g(ctx.internal_digits());
  if (anchors.empty()) {
    anchors.push_back({Real(2), Z_even(1, ctx).value});
    anchors.push_back({Real(4), Z_even(2, ctx).value});
    anchors.push_back({Real(0), Real(Z_at_zero())});
  }
  Calibration best;
  best.matched_digits = -1;
  for (const auto& c : candidates) {
    AdrEvaluator ev(c, zeros);
    long score = std::numeric_limits<long>::max();
    for (const auto& an : anchors) score = std::min(score, matching_digits(ev(an.s), an.value));
    best.scores.push_back(score);
    if (score > best.matched_digits) {
      best.matched_digits = score;
      best.params = c;
    }
  }
  if (candidates.size() > 1 && min_digits > 0 && best.matched_digits < min_digits)
    throw Error(ErrorKind::convergence, "no candidate reaches " + std::to_string(min_digits) + " matching digits");
  return best;
}

}  // namespace secz
