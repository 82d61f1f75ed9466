#include "secz/stieltjes.hpp"

#include <algorithm>
#include <cmath>

#include "secz/datafile.hpp"
#include "secz/errors.hpp"
#include "secz/zeta.hpp"

namespace secz {

StieltjesStore load_stieltjes(const std::string& path) {
  DataFile f = read_data_file(path);
  auto kind = f.headers.find("kind");
  if (kind == f.headers.end() || kind->second != "stieltjes")
    throw Error(ErrorKind::data, path + ": missing '# kind=stieltjes' header");
  long prec = f.header_long("precision_digits", 0);
  StieltjesStore st;
  st.source = StieltjesStore::Source::file;
  for (std::size_t i = 0; i < f.rows.size(); ++i) {
    const auto& r = f.rows[i];
    if (r.index != static_cast<long>(i)) throw Error(ErrorKind::data, path + ": indices must run 0, 1, 2, ...");
    long cert = certified_decimals(r.digits, prec);
    PrecisionGuard g(std::max<long>(prec, static_cast<long>(r.digits.size())) + 10);
    st.values.push_back({Real(r.digits), cert});
  }
  if (st.values.empty()) throw Error(ErrorKind::data, path + ": no Stieltjes constants");
  PrecisionGuard g(st.values[0].certified_digits + 10);
  Real diff = abs(st.values[0].value - const_euler());
  if (diff > pow(Real(10), -(st.values[0].certified_digits - 1)))
    throw Error(ErrorKind::data, path + ": gamma_0 disagrees with Euler's constant");
  return st;
}

StieltjesStore compute_stieltjes(int n_max, const PrecisionContext& ctx) {
  PrecisionGuard g(ctx.internal_digits());
  ZetaJetOptions opt;
  opt.times_s_minus_1 = true;
  Jet f = hurwitz_zeta_jet(Real(1), Real(1), n_max + 1, opt);
  StieltjesStore st;
  st.source = StieltjesStore::Source::computed;
  for (int n = 0; n <= n_max; ++n) {
    Real v = f[static_cast<std::size_t>(n + 1)] * factorial(static_cast<unsigned long>(n));
    if (n % 2 == 1) v = -v;
    // Factorial scaling costs the digits of n!.
    long lost = static_cast<long>(std::max(0.0, v.log10_abs()));
    st.values.push_back({v, std::max(0L, ctx.working_digits - lost)});
  }
  return st;
}

RealValue stieltjes(int n, const StieltjesStore& store, const PrecisionContext& ctx, bool fallback) {
  if (n < 0) throw Error(ErrorKind::domain, "Stieltjes index must be non-negative");
  if (static_cast<std::size_t>(n) < store.values.size()) return store.values[static_cast<std::size_t>(n)];
  if (!fallback) throw Error(ErrorKind::data, "Stieltjes constant index beyond the store and no fallback");
  return compute_stieltjes(n, ctx).values[static_cast<std::size_t>(n)];
}

std::vector<RealValue> eta_coeffs(int n_max, const StieltjesStore& store, const PrecisionContext& ctx) {
  if (store.values.size() < static_cast<std::size_t>(n_max + 1))
    throw Error(ErrorKind::data, "not enough Stieltjes constants for the requested eta coefficients");
  PrecisionGuard g(ctx.internal_digits());
  std::vector<Real> gam, inv_fact;
  // The recurrence carries relative precision (checked against the jet of
  // log((s-1) zeta(s)) through n = 230), so certify eta_n relatively: the
  // fewest significant digits among the constants used.
  long sig = ctx.working_digits;
  for (int k = 0; k <= n_max; ++k) {
    const RealValue& g = store.values[static_cast<std::size_t>(k)];
    Real v = g.value;
    v.rebase();
    gam.push_back(v);
    inv_fact.push_back(Real(1) / factorial(static_cast<unsigned long>(k)));
    long mag = v.is_zero() ? 0 : static_cast<long>(std::ceil(v.log10_abs()));
    sig = std::min(sig, g.certified_digits + mag);
  }
  std::vector<Real> eta;
  std::vector<RealValue> out;
  for (int n = 0; n <= n_max; ++n) {
    Real acc = gam[static_cast<std::size_t>(n)] * static_cast<long>(n + 1) * inv_fact[static_cast<std::size_t>(n)];
    for (int k = 0; k < n; ++k) {
      Real t = eta[static_cast<std::size_t>(k)] * gam[static_cast<std::size_t>(n - k - 1)] *
               inv_fact[static_cast<std::size_t>(n - k - 1)];
      if ((k - 1) % 2 == 0)
        acc += t;
      else
        acc -= t;
    }
    if ((n + 1) % 2 == 1) acc = -acc;
    eta.push_back(acc);
    long mag = acc.is_zero() ? 0 : static_cast<long>(std::ceil(acc.log10_abs()));
    out.push_back({acc, std::max(0L, sig - 2 - mag)});
  }
  return out;
}

RealValue eta_coeff(int n, const StieltjesStore& store, const PrecisionContext& ctx) {
  return eta_coeffs(n, store, ctx)[static_cast<std::size_t>(n)];
}

}  // namespace secz
