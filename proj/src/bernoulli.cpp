#include "secz/bernoulli.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <mutex>
#include <vector>

#include "secz/errors.hpp"

namespace secz {

namespace {

std::mutex g_mu;
std::vector<mpq_class> g_b2k;  // B_{2k}, k = 0..
std::vector<mpz_class> g_e2k;  // E_{2k}

// Tangent numbers by the Brent-Harvey in-place recurrence; all B_{2k}.
void fill_bernoulli(unsigned kmax) {
  if (g_b2k.size() > kmax) return;
  unsigned n = std::max({kmax, 2 * static_cast<unsigned>(g_b2k.size()), 8u});
  std::vector<mpz_class> T(n + 1);
  T[1] = 1;
  for (unsigned k = 2; k <= n; ++k) T[k] = (k - 1) * T[k - 1];
  for (unsigned k = 2; k <= n; ++k)
    for (unsigned j = k; j <= n; ++j) T[j] = (j - k) * T[j - 1] + (j - k + 2) * T[j];
  g_b2k.assign(n + 1, mpq_class(0));
  g_b2k[0] = 1;
  for (unsigned k = 1; k <= n; ++k) {
    mpz_class four_k;
    mpz_ui_pow_ui(four_k.get_mpz_t(), 4, k);
    mpq_class b(T[k] * (2 * k), four_k * (four_k - 1));
    b.canonicalize();
    g_b2k[k] = (k % 2 == 1) ? b : mpq_class(-b);
  }
}

// Secant numbers |E_{2k}| by the analogous recurrence.
void fill_euler(unsigned kmax) {
  if (g_e2k.size() > kmax) return;
  unsigned n = std::max({kmax, 2 * static_cast<unsigned>(g_e2k.size()), 8u});
  std::vector<mpz_class> S(n + 1);
  S[0] = 1;
  for (unsigned k = 1; k <= n; ++k) S[k] = k * S[k - 1];
  for (unsigned k = 1; k <= n; ++k)
    for (unsigned j = k + 1; j <= n; ++j) S[j] = (j - k) * S[j - 1] + (j - k + 1) * S[j];
  g_e2k.assign(n + 1, mpz_class(0));
  for (unsigned k = 0; k <= n; ++k) g_e2k[k] = (k % 2 == 0) ? S[k] : mpz_class(-S[k]);
}

}  // namespace

mpq_class bernoulli_number(unsigned n) {
  if (n == 1) return mpq_class(-1, 2);
  if (n % 2 == 1) return 0;
  std::lock_guard<std::mutex> lk(g_mu);
  fill_bernoulli(n / 2);
  return g_b2k[n / 2];
}

mpq_class bernoulli_poly(unsigned n, const mpq_class& x) {
  mpq_class sum = 0, xp = 1;
  // Accumulate from the x^0 term upward: sum_j C(n, j) B_{n-j} x^j.
  for (unsigned j = 0; j <= n; ++j) {
    mpz_class c;
    mpz_bin_uiui(c.get_mpz_t(), n, j);
    sum += mpq_class(c) * bernoulli_number(n - j) * xp;
    xp *= x;
  }
  return sum;
}

mpz_class euler_number(unsigned k) {
  if (k % 2 == 1) throw Error(ErrorKind::domain, "Euler numbers are indexed by even integers");
  std::lock_guard<std::mutex> lk(g_mu);
  fill_euler(k / 2);
  return g_e2k[k / 2];
}

const Real& bernoulli_over_factorial(unsigned k) {
  static std::mutex mu;
  static std::map<mpfr_prec_t, std::deque<Real>> cache;  // deque: stable references
  mpfr_prec_t bits = working_bits();
  std::lock_guard<std::mutex> lk(mu);
  auto& v = cache[bits];
  if (v.size() <= k) {
    std::size_t old = v.size();
    std::size_t want = std::max<std::size_t>(k + 1, 2 * old);
    mpz_class fact = 1;
    for (std::size_t i = 2; i + 2 <= 2 * old; ++i) fact *= static_cast<unsigned long>(i);  // (2 old - 2)!
    for (std::size_t j = old; j < want; ++j) {
      if (j > 0) fact *= mpz_class(static_cast<unsigned long>((2 * j - 1) * (2 * j)));
      mpq_class b = bernoulli_number(static_cast<unsigned>(2 * j)) / mpq_class(fact);
      v.emplace_back(b);
    }
  }
  return v[k];
}

}  // namespace secz
