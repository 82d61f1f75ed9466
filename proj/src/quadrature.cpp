#include "secz/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <tuple>

#include "secz/errors.hpp"

namespace secz {

namespace {

enum class Rule { tanh_sinh, exp_sinh };

// tanh-sinh: a = x in [0,1), b = 1 - x, w = weight.
// exp-sinh:  a = exp(v), b = exp(-v), w = (pi/2) cosh t, v = (pi/2) sinh t.
struct Node {
  Real a, b, w;
};
using NodeList = std::vector<Node>;

double t_max_for(mpfr_prec_t bits) {
  // Far enough that the endpoint offset reaches 10^{-20 D}; integrands with
  // t^{-0.95}-type singularities still converge.
  double digits = static_cast<double>(bits) * 0.30103;
  double v = 20.0 * digits * 2.302585 / 2.0;
  return std::asinh(2.0 * v / 3.14159265358979);
}

std::shared_ptr<const NodeList> build_nodes(Rule rule, mpfr_prec_t bits, int level) {
  auto g = PrecisionGuard::bits(bits);
  auto out = std::make_shared<NodeList>();
  const double tmax = t_max_for(bits);
  Real half_pi = const_pi() / 2;
  Real h = ldexp(Real(1), -level);
  long first = level == 0 ? 0 : 1;
  long stride = level == 0 ? 1 : 2;
  for (long j = first;; j += stride) {
    Real t = h * j;
    if (t.to_double() > tmax) break;
    Real v = half_pi * sinh(t);
    Real ct = cosh(t);
    Node n;
    if (rule == Rule::tanh_sinh) {
      Real cv = cosh(v);
      n.a = tanh(v);
      n.b = exp(-v) / cv;
      n.w = half_pi * ct / (cv * cv);
    } else {
      n.a = exp(v);
      n.b = Real(1) / n.a;
      n.w = half_pi * ct;
    }
    out->push_back(std::move(n));
  }
  return out;
}

std::shared_ptr<const NodeList> nodes(Rule rule, mpfr_prec_t bits, int level) {
  static std::mutex mu;
  static std::map<std::tuple<int, mpfr_prec_t, int>, std::shared_ptr<const NodeList>> cache;
  auto key = std::make_tuple(static_cast<int>(rule), bits, level);
  {
    std::lock_guard<std::mutex> lk(mu);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  auto built = build_nodes(rule, bits, level);
  std::lock_guard<std::mutex> lk(mu);
  return cache.emplace(key, built).first->second;
}

struct Accumulator {
  std::vector<Real> sum, l1;
};

class Integrator {
 public:
  Integrator(const VectorFn& f, std::size_t count, Rule rule, const Real& lo, const Real& hi)
      : f_(f), count_(count), rule_(rule), lo_(lo), hi_(hi), buf_(count) {
    if (rule == Rule::tanh_sinh) {
      half_ = (hi - lo) / 2;
      mid_ = lo + half_;
    }
  }

  // Adds one level's new nodes, scaled by the level's step (without h).
  void add_level(const NodeList& nl, int level, Accumulator& acc, const Real& cut_scale) {
    const bool level0 = level == 0;
    const double h = std::ldexp(1.0, -level);
    acc.sum.assign(count_, Real(0));
    acc.l1.assign(count_, Real(0));
    for (int side = 0; side < 2; ++side) {
      int quiet = 0;
      for (std::size_t k = 0; k < nl.size(); ++k) {
        bool centre = level0 && k == 0;
        if (centre && side == 1) continue;
        Real x, w;
        point(nl[k], side == 0, x, w);
        if (w.is_zero()) break;
        eval(x);
        Real biggest(0);
        for (std::size_t c = 0; c < count_; ++c) {
          Real term = buf_[c] * w;
          if (!term.is_finite())
            throw Error(ErrorKind::convergence, "integrand not finite at a quadrature node");
          acc.sum[c] += term;
          Real at = abs(term);
          acc.l1[c] += at;
          if (at > biggest) biggest = at;
        }
        double t = level0 ? static_cast<double>(k) : (2.0 * static_cast<double>(k) + 1.0) * h;
        if (t > 1.0 && !cut_scale.is_zero() && biggest < cut_scale) {
          if (++quiet >= 4) break;
        } else {
          quiet = 0;
        }
      }
    }
  }

 private:
  void point(const Node& n, bool plus, Real& x, Real& w) {
    if (rule_ == Rule::tanh_sinh) {
      // Nodes near an endpoint are offset from that endpoint exactly.
      Real off = half_ * n.b;
      x = plus ? hi_ - off : lo_ + off;
      if (n.b > Real(0.5)) x = plus ? mid_ + half_ * n.a : mid_ - half_ * n.a;
      w = half_ * n.w;
    } else {
      Real u = plus ? n.a : n.b;
      x = lo_ + u;
      w = n.w * u;
    }
  }
  void eval(const Real& x) {
    for (auto& v : buf_) v = Real(0);
    f_(x, buf_);
  }

  const VectorFn& f_;
  std::size_t count_;
  Rule rule_;
  Real lo_, hi_, half_, mid_;
  std::vector<Real> buf_;
};

std::vector<RealValue> run(const VectorFn& f, std::size_t count, Rule rule, const Real& lo, const Real& hi,
                           const PrecisionContext& ctx, QuadratureOptions opt) {
  long target = opt.target_digits > 0 ? opt.target_digits : ctx.quadrature_target_digits;
  long work = target + std::max(ctx.guard_digits, 10L) + 5;
  PrecisionGuard g(work);
  mpfr_prec_t bits = working_bits();
  Real lo_w = lo, hi_w = hi;
  lo_w.rebase();
  hi_w.rebase();
  Integrator in(f, count, rule, lo_w, hi_w);

  std::vector<std::vector<Real>> level_sum;  // S_l per component
  std::vector<Real> raw(count, Real(0)), l1raw(count, Real(0));
  Real eps_cut = pow(Real(10), -(work + 2));
  std::vector<double> est(count, 0.0);
  for (int level = 0; level <= opt.max_level; ++level) {
    auto nl = nodes(rule, bits, level);
    Real h = ldexp(Real(1), -level);
    Real scale(0);
    for (std::size_t c = 0; c < count; ++c) scale = max(scale, l1raw[c] * h);
    Accumulator acc;
    in.add_level(*nl, level, acc, scale * eps_cut / h);
    for (std::size_t c = 0; c < count; ++c) {
      raw[c] += acc.sum[c];
      l1raw[c] += acc.l1[c];
    }
    std::vector<Real> s(count);
    for (std::size_t c = 0; c < count; ++c) s[c] = raw[c] * h;
    level_sum.push_back(s);
    if (level < 3) continue;
    bool done = true;
    for (std::size_t c = 0; c < count; ++c) {
      Real l1 = l1raw[c] * h;
      if (l1.is_zero()) {
        est[c] = -static_cast<double>(work);
        continue;
      }
      const auto& s0 = level_sum[static_cast<std::size_t>(level)][c];
      const auto& s1 = level_sum[static_cast<std::size_t>(level - 1)][c];
      const auto& s2 = level_sum[static_cast<std::size_t>(level - 2)][c];
      double d1 = (abs(s0 - s1) / l1).log10_abs();
      double d2 = (abs(s0 - s2) / l1).log10_abs();
      double e;
      if (!std::isfinite(d1) || d1 < -static_cast<double>(work))
        e = -static_cast<double>(work);
      else if (d1 >= 0.0 || d2 >= 0.0 || !std::isfinite(d2))
        e = d1;
      else
        e = std::max(d1 * d1 / d2, 2.0 * d1);
      e = std::max(e, -static_cast<double>(work - 3));
      est[c] = e;
      if (e > -static_cast<double>(target)) done = false;
    }
    if (done) {
      std::vector<RealValue> out(count);
      for (std::size_t c = 0; c < count; ++c) {
        Real l1 = l1raw[c] * h;
        double abs_err = est[c] + (l1.is_zero() ? 0.0 : l1.log10_abs());
        out[c].value = s[c];
        out[c].certified_digits =
            std::clamp(static_cast<long>(std::floor(-abs_err)), 0L, std::min(target, ctx.working_digits));
      }
      return out;
    }
  }
  throw Error(ErrorKind::convergence, "double-exponential quadrature did not converge to the target digits");
}

VectorFn lift(const RealFn& f) {
  return [&f](const Real& x, std::vector<Real>& out) { out[0] = f(x); };
}

}  // namespace

RealValue integrate_finite(const RealFn& f, const Real& lo, const Real& hi, const PrecisionContext& ctx,
                           QuadratureOptions opt) {
  return run(lift(f), 1, Rule::tanh_sinh, lo, hi, ctx, opt)[0];
}

RealValue integrate_semi_infinite(const RealFn& f, const Real& lo, const PrecisionContext& ctx,
                                  QuadratureOptions opt) {
  return run(lift(f), 1, Rule::exp_sinh, lo, lo, ctx, opt)[0];
}

std::vector<RealValue> integrate_finite_many(const VectorFn& f, std::size_t count, const Real& lo,
                                             const Real& hi, const PrecisionContext& ctx,
                                             QuadratureOptions opt) {
  return run(f, count, Rule::tanh_sinh, lo, hi, ctx, opt);
}

std::vector<RealValue> integrate_semi_infinite_many(const VectorFn& f, std::size_t count, const Real& lo,
                                                    const PrecisionContext& ctx, QuadratureOptions opt) {
  return run(f, count, Rule::exp_sinh, lo, lo, ctx, opt);
}

}  // namespace secz
