#include "secz/jet.hpp"

#include <algorithm>

#include "secz/errors.hpp"

namespace secz {

Jet::Jet(int order) : c_(static_cast<std::size_t>(order + 1)) {}

Jet::Jet(int order, const Real& c, bool variable) : Jet(order) {
  c_[0] = c;
  c_[0].rebase();
  if (variable && order >= 1) c_[1] = Real(1);
}

Real Jet::derivative(int k) const { return c_[static_cast<std::size_t>(k)] * factorial(static_cast<unsigned long>(k)); }

Jet& Jet::operator+=(const Jet& o) {
  for (std::size_t k = 0; k < c_.size() && k < o.c_.size(); ++k) c_[k] += o.c_[k];
  return *this;
}
Jet& Jet::operator-=(const Jet& o) {
  for (std::size_t k = 0; k < c_.size() && k < o.c_.size(); ++k) c_[k] -= o.c_[k];
  return *this;
}
Jet& Jet::operator*=(const Jet& o) { return *this = *this * o; }
Jet& Jet::operator*=(const Real& k) {
  for (auto& x : c_) x *= k;
  return *this;
}
Jet& Jet::operator/=(const Real& k) {
  for (auto& x : c_) x /= k;
  return *this;
}
Jet& Jet::operator+=(const Real& k) {
  c_[0] += k;
  return *this;
}

Jet& Jet::mul_linear(const Real& a, const Real& b) {
  Real t;
  for (std::size_t k = c_.size(); k-- > 0;) {
    mpfr_mul(c_[k].raw(), c_[k].raw(), a.raw(), MPFR_RNDN);
    if (k > 0) {
      mpfr_mul(t.raw(), c_[k - 1].raw(), b.raw(), MPFR_RNDN);
      mpfr_add(c_[k].raw(), c_[k].raw(), t.raw(), MPFR_RNDN);
    }
  }
  return *this;
}

Jet Jet::operator-() const {
  Jet r(*this);
  for (auto& x : r.c_) mpfr_neg(x.raw(), x.raw(), MPFR_RNDN);
  return r;
}

Jet operator*(const Jet& a, const Jet& b) {
  int n = std::min(a.order(), b.order());
  Jet r(n);
  Real t;
  for (int k = 0; k <= n; ++k) {
    mpfr_ptr acc = r[static_cast<std::size_t>(k)].raw();
    for (int j = 0; j <= k; ++j) {
      mpfr_mul(t.raw(), a[static_cast<std::size_t>(j)].raw(), b[static_cast<std::size_t>(k - j)].raw(), MPFR_RNDN);
      mpfr_add(acc, acc, t.raw(), MPFR_RNDN);
    }
  }
  return r;
}

Jet reciprocal(const Jet& a) {
  if (a[0].is_zero()) throw Error(ErrorKind::domain, "jet reciprocal of a series with zero constant term");
  int n = a.order();
  Jet r(n);
  Real inv0 = Real(1) / a[0];
  r[0] = inv0;
  Real t, acc;
  for (int k = 1; k <= n; ++k) {
    mpfr_set_zero(acc.raw(), 1);
    for (int j = 1; j <= k; ++j) {
      mpfr_mul(t.raw(), a[static_cast<std::size_t>(j)].raw(), r[static_cast<std::size_t>(k - j)].raw(), MPFR_RNDN);
      mpfr_add(acc.raw(), acc.raw(), t.raw(), MPFR_RNDN);
    }
    mpfr_mul(acc.raw(), acc.raw(), inv0.raw(), MPFR_RNDN);
    mpfr_neg(r[static_cast<std::size_t>(k)].raw(), acc.raw(), MPFR_RNDN);
  }
  return r;
}

Jet operator/(const Jet& a, const Jet& b) { return a * reciprocal(b); }

Jet exp(const Jet& a) {
  int n = a.order();
  Jet r(n);
  r[0] = exp(a[0]);
  Real t, acc;
  for (int k = 1; k <= n; ++k) {
    mpfr_set_zero(acc.raw(), 1);
    for (int j = 1; j <= k; ++j) {
      mpfr_mul(t.raw(), a[static_cast<std::size_t>(j)].raw(), r[static_cast<std::size_t>(k - j)].raw(), MPFR_RNDN);
      mpfr_mul_si(t.raw(), t.raw(), j, MPFR_RNDN);
      mpfr_add(acc.raw(), acc.raw(), t.raw(), MPFR_RNDN);
    }
    mpfr_div_si(r[static_cast<std::size_t>(k)].raw(), acc.raw(), k, MPFR_RNDN);
  }
  return r;
}

Jet log(const Jet& a) {
  if (!(a[0] > Real(0))) throw Error(ErrorKind::domain, "jet logarithm needs a positive constant term");
  int n = a.order();
  Jet r(n);
  r[0] = log(a[0]);
  Real t, acc;
  for (int k = 1; k <= n; ++k) {
    mpfr_set_zero(acc.raw(), 1);
    for (int j = 1; j < k; ++j) {
      mpfr_mul(t.raw(), r[static_cast<std::size_t>(j)].raw(), a[static_cast<std::size_t>(k - j)].raw(), MPFR_RNDN);
      mpfr_mul_si(t.raw(), t.raw(), j, MPFR_RNDN);
      mpfr_add(acc.raw(), acc.raw(), t.raw(), MPFR_RNDN);
    }
    mpfr_div_si(acc.raw(), acc.raw(), k, MPFR_RNDN);
    mpfr_sub(acc.raw(), a[static_cast<std::size_t>(k)].raw(), acc.raw(), MPFR_RNDN);
    mpfr_div(r[static_cast<std::size_t>(k)].raw(), acc.raw(), a[0].raw(), MPFR_RNDN);
  }
  return r;
}

Jet pow(const Jet& a, const Real& p) {
  Jet l = log(a);
  l *= p;
  return exp(l);
}

void sincos(const Jet& a, Jet& s, Jet& c) {
  int n = a.order();
  s = Jet(n);
  c = Jet(n);
  s[0] = sin(a[0]);
  c[0] = cos(a[0]);
  Real t, as, ac;
  for (int k = 1; k <= n; ++k) {
    mpfr_set_zero(as.raw(), 1);
    mpfr_set_zero(ac.raw(), 1);
    for (int j = 1; j <= k; ++j) {
      const auto ja = a[static_cast<std::size_t>(j)] * static_cast<long>(j);
      mpfr_mul(t.raw(), ja.raw(), c[static_cast<std::size_t>(k - j)].raw(), MPFR_RNDN);
      mpfr_add(as.raw(), as.raw(), t.raw(), MPFR_RNDN);
      mpfr_mul(t.raw(), ja.raw(), s[static_cast<std::size_t>(k - j)].raw(), MPFR_RNDN);
      mpfr_sub(ac.raw(), ac.raw(), t.raw(), MPFR_RNDN);
    }
    mpfr_div_si(s[static_cast<std::size_t>(k)].raw(), as.raw(), k, MPFR_RNDN);
    mpfr_div_si(c[static_cast<std::size_t>(k)].raw(), ac.raw(), k, MPFR_RNDN);
  }
}

Jet inverse_linear(int order, const Real& x0) {
  if (x0.is_zero()) throw Error(ErrorKind::pole, "jet of 1/(x0+e) at x0 = 0");
  Jet r(order);
  Real q = Real(1) / x0;
  Real cur = q;
  Real mq = -q;
  for (int k = 0; k <= order; ++k) {
    r[static_cast<std::size_t>(k)] = cur;
    cur *= mq;
  }
  return r;
}

Jet power_neg(int order, const Real& base, const Real& s0) {
  Jet r(order);
  Real L = log(base);
  Real cur = exp(-(s0 * L));
  Real mL = -L;
  for (int k = 0; k <= order; ++k) {
    r[static_cast<std::size_t>(k)] = cur;
    cur *= mL;
    cur /= static_cast<long>(k + 1);
  }
  return r;
}

}  // namespace secz
