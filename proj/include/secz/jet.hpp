// Truncated Taylor series ("jets") c_0 + c_1 e + ... + c_n e^n.
//
// Used wherever derivatives of a composite function are needed to high
// order: arithmetic on jets is exact differentiation, without the
// precision loss of finite differences.
#pragma once

#include <cstddef>
#include <vector>

#include "secz/real.hpp"

namespace secz {

class Jet {
 public:
  Jet() = default;
  // Zero jet of the given order (order+1 coefficients).
  explicit Jet(int order);
  // Constant c, or the linear jet c + e when `variable` is set.
  Jet(int order, const Real& c, bool variable = false);

  int order() const { return static_cast<int>(c_.size()) - 1; }
  Real& operator[](std::size_t k) { return c_[k]; }
  const Real& operator[](std::size_t k) const { return c_[k]; }
  const std::vector<Real>& coeffs() const { return c_; }
  std::vector<Real>& coeffs() { return c_; }

  // k-th derivative at the expansion point, k! c_k.
  Real derivative(int k) const;

  Jet& operator+=(const Jet& o);
  Jet& operator-=(const Jet& o);
  Jet& operator*=(const Jet& o);
  Jet& operator*=(const Real& k);
  Jet& operator/=(const Real& k);
  Jet& operator+=(const Real& k);
  // Multiply in place by (a + b e).
  Jet& mul_linear(const Real& a, const Real& b);

  friend Jet operator+(Jet a, const Jet& b) { return a += b; }
  friend Jet operator-(Jet a, const Jet& b) { return a -= b; }
  friend Jet operator*(const Jet& a, const Jet& b);
  friend Jet operator/(const Jet& a, const Jet& b);
  friend Jet operator*(Jet a, const Real& k) { return a *= k; }
  Jet operator-() const;

 private:
  std::vector<Real> c_;
};

Jet exp(const Jet& a);
// Requires a[0] > 0.
Jet log(const Jet& a);
Jet reciprocal(const Jet& a);
Jet pow(const Jet& a, const Real& p);
// sin(a), cos(a) computed together.
void sincos(const Jet& a, Jet& s, Jet& c);

// Jet of 1/(x0 + e), requires x0 != 0.
Jet inverse_linear(int order, const Real& x0);
// Jet of b^{-(s0+e)} = b^{-s0} exp(-e log b).
Jet power_neg(int order, const Real& base, const Real& s0);

}  // namespace secz
