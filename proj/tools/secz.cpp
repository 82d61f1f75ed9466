// secz: evaluate Z(s), emit coefficient tables, extract zeros, sample
// grids and check golden files.
//
// Exit codes: 0 success, 1 verification failure, 2 usage error,
// 3 numeric failure.

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "secz/adr.hpp"
#include "secz/datafile.hpp"
#include "secz/errors.hpp"
#include "secz/golden.hpp"
#include "secz/mellin.hpp"
#include "secz/series.hpp"
#include "secz/stieltjes.hpp"
#include "secz/voros.hpp"
#include "secz/zerogen.hpp"

using namespace secz;
using nlohmann::json;

namespace {

constexpr int kExitVerify = 1;
constexpr int kExitUsage = 2;
constexpr int kExitNumeric = 3;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  long digits = 0;  // 0: per-command default
  std::string method = "auto";
  std::optional<std::string> a;
  std::optional<int> N;
  std::string zeros_path;
  std::string stieltjes_path;
  std::string center;
  int terms = 50;
  std::string out;
  std::string format = "text";
  std::string exclusion = "1e-3";  // grid: pole exclusion radius
};

// ---- formatting ----------------------------------------------------------

std::string format_value(const Real& v, long digits) {
  if (v.is_zero()) return "0";
  Real m = abs(v);
  if (m < Real(1e-8) || !(m < Real(1e8))) return v.to_sci(digits);
  return v.to_fixed(digits);
}

// Terminating decimal of q when its denominator is 2^a 5^b.
std::optional<std::string> exact_decimal(const mpq_class& q) {
  mpz_class den = q.get_den();
  long k = 0;
  mpz_class pow10 = 1;
  while (den != 1) {
    if (den % 2 == 0) den /= 2;
    else if (den % 5 == 0) den /= 5;
    else return std::nullopt;
  }
  while (true) {
    mpq_class scaled = q * pow10;
    scaled.canonicalize();
    if (scaled.get_den() == 1) break;
    pow10 *= 10;
    ++k;
  }
  mpz_class n = abs(q.get_num()) * (pow10 / q.get_den());
  std::string s = n.get_str();
  if (static_cast<long>(s.size()) <= k) s.insert(0, static_cast<std::size_t>(k - static_cast<long>(s.size()) + 1), '0');
  if (k > 0) s.insert(s.size() - static_cast<std::size_t>(k), ".");
  return (q < 0 ? "-" : "") + s;
}

// Exact value of a decimal literal such as "-6.5" or "1e-4".
mpq_class parse_decimal(const std::string& text) {
  std::string t = text;
  long exp10 = 0;
  auto e = t.find_first_of("eE");
  try {
    if (e != std::string::npos) {
      exp10 = std::stol(t.substr(e + 1));
      t = t.substr(0, e);
    }
  } catch (const std::exception&) {
    throw UsageError("not a decimal number: " + text);
  }
  bool neg = !t.empty() && (t[0] == '-' || t[0] == '+');
  bool minus = !t.empty() && t[0] == '-';
  if (neg) t = t.substr(1);
  auto dot = t.find('.');
  if (dot != std::string::npos) {
    exp10 -= static_cast<long>(t.size() - dot - 1);
    t.erase(dot, 1);
  }
  if (t.empty() || t.find_first_not_of("0123456789") != std::string::npos)
    throw UsageError("not a decimal number: " + text);
  mpz_class p10;
  mpz_ui_pow_ui(p10.get_mpz_t(), 10, static_cast<unsigned long>(std::labs(exp10)));
  mpq_class q{mpz_class(t, 10)};
  q = exp10 >= 0 ? mpq_class(q * p10) : mpq_class(q / p10);
  q.canonicalize();
  return minus ? mpq_class(-q) : q;
}

class Emitter {
 public:
  Emitter(const std::string& format, const std::string& path) : format_(format) {
    if (format != "text" && format != "csv" && format != "json-lines")
      throw UsageError("--format must be text, csv or json-lines");
    if (!path.empty()) {
      file_ = std::make_unique<std::ofstream>(path);
      if (!*file_) throw Error(ErrorKind::io, "cannot open " + path);
    }
  }
  std::ostream& os() { return file_ ? *file_ : std::cout; }

  // One record; text mode prints "key: value" pairs on one line.
  void record(const std::vector<std::pair<std::string, std::string>>& fields) {
    if (format_ == "json-lines") {
      json j = json::object();
      // Counts become numbers; digit strings stay strings to keep every digit.
      for (const auto& [k, v] : fields) {
        bool count = k != "s" && k != "key" && k != "value" && k != "estimate" && !v.empty() &&
                     v.find_first_not_of("-0123456789") == std::string::npos && v.size() < 16;
        if (count) j[k] = std::stol(v);
        else j[k] = v;
      }
      os() << j.dump() << '\n';
    } else if (format_ == "csv") {
      if (!header_done_) {
        for (std::size_t i = 0; i < fields.size(); ++i) os() << (i ? "," : "") << fields[i].first;
        os() << '\n';
        header_done_ = true;
      }
      for (std::size_t i = 0; i < fields.size(); ++i) os() << (i ? "," : "") << csv_escape(fields[i].second);
      os() << '\n';
    } else {
      for (std::size_t i = 0; i < fields.size(); ++i)
        os() << (i ? "  " : "") << fields[i].first << '=' << fields[i].second;
      os() << '\n';
    }
  }

 private:
  static std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string r = "\"";
    for (char c : s) r += c == '"' ? std::string("\"\"") : std::string(1, c);
    return r + '"';
  }
  std::string format_;
  std::unique_ptr<std::ofstream> file_;
  bool header_done_ = false;
};

// ---- shared inputs -------------------------------------------------------

class Inputs {
 public:
  explicit Inputs(const Options& o) : o_(o) {}

  const ZerosDatabase& zeros() {
    if (!zeros_) zeros_ = load_zeros(o_.zeros_path.empty() ? data_dir() + "/zeros.txt" : o_.zeros_path);
    return *zeros_;
  }
  const ZerosDatabase& reference_zeros() {
    if (!ref_) ref_ = load_zeros(data_dir() + "/zeros_1000.txt");
    return *ref_;
  }
  const StieltjesStore& stieltjes() {
    if (!st_) st_ = load_stieltjes(o_.stieltjes_path.empty() ? data_dir() + "/stieltjes.txt" : o_.stieltjes_path);
    return *st_;
  }
  AdrParams adr_params(long digits) {
    AdrParams p = tuned_params(digits, zeros());
    if (o_.a) p.a = Real(*o_.a);
    if (o_.N) p.N = *o_.N;
    return p;
  }
  const AdrEvaluator& evaluator(long digits) {
    auto it = evs_.find(digits);
    if (it == evs_.end()) it = evs_.emplace(digits, std::make_unique<AdrEvaluator>(adr_params(digits), zeros())).first;
    return *it->second;
  }

 private:
  const Options& o_;
  std::optional<ZerosDatabase> zeros_, ref_;
  std::optional<StieltjesStore> st_;
  std::map<long, std::unique_ptr<AdrEvaluator>> evs_;
};

// ---- evaluation ----------------------------------------------------------

struct Evaluation {
  Real value;
  long certified = 0;
  std::string method;
  std::optional<std::string> exact;  // terminating-decimal closed form
  std::string diagnostic;
};

std::optional<long> as_integer(const Real& s) {
  if (!(abs(s) < Real(1e15))) return std::nullopt;
  Real f = floor(s);
  if (f != s) return std::nullopt;
  return static_cast<long>(f.to_double());
}

void reject_poles(const Real& s) {
  auto k = as_integer(s);
  if (!k) return;
  if (*k == 1) throw Error(ErrorKind::pole, "double pole at s=1");
  if (*k < 0 && (-*k) % 2 == 1) throw Error(ErrorKind::pole, "simple pole at negative odd integer s=" + std::to_string(*k));
}

bool closed_form_point(const Real& s) {
  auto k = as_integer(s);
  return k && *k % 2 == 0;
}

Evaluation eval_voros(const Real& s, const PrecisionContext& ctx) {
  auto k = as_integer(s);
  if (!k || *k % 2 != 0) throw UsageError("method voros needs an even integer s");
  Evaluation e;
  e.method = "voros";
  if (*k > 0) {
    RealValue v = Z_even(static_cast<int>(*k / 2), ctx);
    e.value = v.value;
    e.certified = v.certified_digits;
    return e;
  }
  mpq_class q = *k == 0 ? Z_at_zero() : Z_neg_even(static_cast<int>(-*k / 2));
  e.value = Real(q);
  e.certified = ctx.working_digits;
  e.exact = exact_decimal(q);
  std::ostringstream d;
  d << "exact " << q.get_str();
  e.diagnostic = d.str();
  return e;
}

Evaluation evaluate(const Real& s, const std::string& method, const PrecisionContext& ctx, Inputs& in,
                    const Options& o) {
  reject_poles(s);
  std::string m = method;
  if (m == "auto") m = closed_form_point(s) ? "voros" : "adr";
  PrecisionGuard g(ctx.internal_digits());
  if (m == "voros") return eval_voros(s, ctx);
  Evaluation e;
  e.method = m;
  if (m == "adr") {
    if (closed_form_point(s) && !(s > Real(0))) {
      // Z_adr rejects s = -2k; the evaluator takes the removable limit.
      const AdrEvaluator& ev = in.evaluator(ctx.working_digits);
      AdrTerms t = ev.terms(s);
      e.value = t.A - t.P + t.E - t.S;
      e.diagnostic = "removable limit; truncation " + t.truncation_estimate.to_sci(3);
      return e;
    }
    RealValue v = Z_adr(s, in.adr_params(ctx.working_digits), in.zeros(), ctx);
    e.value = v.value;
    e.certified = v.certified_digits;
    return e;
  }
  if (m == "series_a" || m == "series_b") {
    Real c(o.center.empty() ? std::string("2") : o.center);
    const AdrEvaluator& ev = in.evaluator(ctx.working_digits);
    SeriesValue sv = m == "series_a" ? Z_from_A(s, A_coeffs_adr(c, o.terms, ev, ctx))
                                     : Z_from_B(s, B_coeffs_adr(c, o.terms, ev, ctx));
    e.value = sv.value.value;
    e.certified = sv.value.certified_digits;
    e.diagnostic = "terms=" + std::to_string(sv.terms) + " last_term=" + sv.last_term.to_sci(3) +
                   (sv.diverging ? " diverging" : "");
    return e;
  }
  if (m == "mellin") {
    if (!(s > Real(0) && s < Real(1))) throw UsageError("method mellin needs 0 < s < 1");
    RealValue v = Z_strip(s, MellinConfig{}, in.stieltjes(), ctx);
    e.value = v.value;
    e.certified = v.certified_digits;
    return e;
  }
  if (m == "pv") {
    if (!(s < Real(1))) throw UsageError("method pv needs s < 1");
    RealValue v = Z_pv(s, MellinConfig{}, ctx);
    e.value = v.value;
    e.certified = v.certified_digits;
    return e;
  }
  throw UsageError("unknown method " + method);
}

std::string render(const Evaluation& e, long digits) {
  if (e.exact) return *e.exact;
  return format_value(e.value, digits);
}

PrecisionContext context_for(long digits) {
  if (digits < 30) throw UsageError("--digits must be at least 30");
  return make_context(digits);
}

// ---- commands ------------------------------------------------------------

int cmd_eval(const std::string& s_text, const Options& o) {
  Inputs in(o);
  Emitter out(o.format, o.out);
  long D = o.digits ? o.digits : 30;
  auto ctx = context_for(D);
  PrecisionGuard g(ctx.internal_digits());
  Real s(s_text);
  Evaluation e = evaluate(s, o.method, ctx, in, o);
  out.record({{"s", s_text},
              {"value", render(e, D)},
              {"certified_digits", std::to_string(e.certified)},
              {"method", e.method},
              {"diagnostic", e.diagnostic}});
  return 0;
}

CoefficientTable build_table(CoeffKind kind, const Real& c, int count, const std::string& method, const PrecisionContext& ctx,
                             Inputs& in) {
  const int n = count - 1;
  if (method == "mellin") {
    if (!(c > Real(0) && c < Real(1))) throw UsageError("mellin tables need a center in (0, 1)");
    CoefficientTable zd = Z_strip_derivs(c, kind == CoeffKind::B ? n + 2 : n, MellinConfig{}, in.stieltjes(), ctx);
    if (kind == CoeffKind::Zderiv) return zd;
    if (kind == CoeffKind::B) {
      CoefficientTable b = B_coeffs_from_derivs(zd, ctx);
      b.values.resize(static_cast<std::size_t>(count));
      return b;
    }
    throw UsageError("mellin tables are Zderiv or B");
  }
  if (method == "zeros") {
    if (kind != CoeffKind::Zderiv || !(c > Real(1))) throw UsageError("zero-sum tables are Zderiv with center > 1");
    return Z_derivs_from_zeros(c, n, in.zeros(), ctx);
  }
  if (method != "auto" && method != "adr") throw UsageError("coefficient methods: auto, adr, mellin, zeros");
  const AdrEvaluator& ev = in.evaluator(ctx.working_digits);
  switch (kind) {
    case CoeffKind::Zderiv: return Z_derivs_adr(c, n, ev, ctx);
    case CoeffKind::A: return A_coeffs_adr(c, n, ev, ctx);
    case CoeffKind::B: return B_coeffs_adr(c, n, ev, ctx);
    case CoeffKind::C: return laurent_C(n, ev, ctx);
  }
  throw UsageError("unknown kind");
}

void check_center(CoeffKind kind, const Real& c) {
  if (kind == CoeffKind::C) {
    if (c != Real(1)) throw UsageError("kind C requires center 1");
    return;
  }
  if (kind == CoeffKind::Zderiv) reject_poles(c);
  if (kind == CoeffKind::A || kind == CoeffKind::B) {
    auto k = as_integer(c);
    if (k && *k < 0 && (-*k) % 2 == 1) throw UsageError("center sits on a pole of the series");
    if (kind == CoeffKind::A && k && *k == -1) throw UsageError("center sits on a pole of the series");
  }
}

int cmd_coeffs(const std::string& kind_text, int count, const Options& o) {
  CoeffKind kind;
  try {
    kind = parse_coeff_kind(kind_text);
  } catch (const Error&) {
    throw UsageError("kind must be Zderiv, A, B or C");
  }
  if (count < 1) throw UsageError("--count must be positive");
  std::string center = o.center.empty() ? (kind == CoeffKind::C ? "1" : "2") : o.center;
  Inputs in(o);
  long D = o.digits ? o.digits : 60;
  auto ctx = context_for(D);
  PrecisionGuard g(ctx.internal_digits());
  Real c(center);
  check_center(kind, c);
  CoefficientTable t = build_table(kind, c, count, o.method, ctx, in);
  std::unique_ptr<std::ofstream> file;
  if (!o.out.empty()) {
    file = std::make_unique<std::ofstream>(o.out);
    if (!*file) throw Error(ErrorKind::io, "cannot open " + o.out);
  }
  std::ostream& os = file ? *file : std::cout;
  if (o.format == "text") {
    // The golden-file layout, so tables can be verified and re-read.
    os << "# <label> | <s-or-index> | <digits> | <source> [key=value ...]\n";
    os << "# " << to_string(kind) << " derivatives at " << center << ", " << D << "-digit working precision\n";
    for (int nrow = 0; nrow < count; ++nrow) {
      const RealValue& v = t.values[static_cast<std::size_t>(nrow)];
      os << to_string(kind) << '@' << center << " | " << nrow << " | " << format_value(v.value, D) << " | computed "
         << to_string(t.provenance) << " certified=" << v.certified_digits << '\n';
    }
    return 0;
  }
  Emitter out(o.format, o.out);
  for (int nrow = 0; nrow < count; ++nrow) {
    const RealValue& v = t.values[static_cast<std::size_t>(nrow)];
    out.record({{"kind", to_string(kind)},
                {"center", center},
                {"n", std::to_string(nrow)},
                {"value", format_value(v.value, D)},
                {"certified_digits", std::to_string(v.certified_digits)},
                {"provenance", to_string(t.provenance)}});
  }
  return 0;
}

int cmd_zeros(int n_max, int m, const Options& o) {
  if (m < 1) throw UsageError("--m must be >= 1");
  if (n_max < 1) throw UsageError("--n-max must be >= 1");
  Inputs in(o);
  const ZerosDatabase& ref = in.reference_zeros();
  if (static_cast<std::size_t>(n_max) > ref.size())
    throw UsageError("--n-max beyond the bundled reference (" + std::to_string(ref.size()) + " zeros)");
  // Predecessors: --zeros, else the bundled 1000-digit file.
  ZerosDatabase pred = o.zeros_path.empty() ? ref : load_zeros(o.zeros_path);
  if (n_max > 1 && pred.size() + 1 < static_cast<std::size_t>(n_max))
    throw UsageError("the predecessor file has too few zeros");
  long pmin = pred.min_certified_digits;
  for (const auto& t : pred.t) pmin = pmin ? std::min(pmin, t.certified_digits) : t.certified_digits;
  long D = o.digits ? o.digits : (n_max > 1 ? pmin + 300 : 60);
  auto ctx = context_for(D);
  PrecisionGuard g(ctx.internal_digits());
  Emitter out(o.format, o.out);
  RealValue z = Z_even(m, ctx);
  for (int n = 1; n <= n_max; ++n) {
    ExtractionReport r;
    if (n == 1) {
      r = extract_first_zero(m, ctx, &ref);
    } else {
      std::vector<RealValue> known(pred.t.begin(), pred.t.begin() + (n - 1));
      r = extract_next_zero(known, m, z, ctx, &ref);
    }
    long shown = std::min<long>(std::max<long>(r.matched_digits_vs_reference + 5, 30), r.estimate.certified_digits);
    out.record({{"n", std::to_string(n)},
                {"m", std::to_string(m)},
                {"estimate", r.estimate.value.to_fixed(shown)},
                {"sig", std::to_string(r.matched_digits_vs_reference)},
                {"certified_digits", std::to_string(r.estimate.certified_digits)},
                {"cancellation_digits", std::to_string(static_cast<long>(std::floor(r.cancellation_digits)))},
                {"inputs", r.inputs_provenance}});
  }
  return 0;
}

int cmd_grid(const std::string& lo_text, const std::string& hi_text, const std::string& step_text, const Options& o) {
  Inputs in(o);
  long D = o.digits ? o.digits : 30;
  auto ctx = context_for(D);
  PrecisionGuard g(ctx.internal_digits());
  // Grid points are exact rationals, so s = 0 or -4 hit the closed forms.
  mpq_class lo = parse_decimal(lo_text), hi = parse_decimal(hi_text), step = parse_decimal(step_text);
  if (!(lo < hi)) throw UsageError("empty grid: lo must be below hi");
  if (!(step > 0)) throw UsageError("step must be positive");
  mpq_class span = (hi - lo) / step;
  mpz_class count_z = span.get_num() / span.get_den();
  if (count_z > 10000000) throw UsageError("grid has more than 10^7 points");
  long count = count_z.get_si() + 1;
  Emitter out(o.format == "text" ? std::string("csv") : o.format, o.out);
  const Real exclusion(parse_decimal(o.exclusion));
  for (long i = 0; i < count; ++i) {
    mpq_class q = lo + step * i;
    q.canonicalize();
    Real s(q);
    std::string s_str = *exact_decimal(q);
    // Nearest pole: 1, or a negative odd integer.
    Real near_odd = floor((s + Real(1)) / Real(2)) * Real(2) - Real(1);
    Real d1 = abs(s - Real(1));
    Real dodd = s < Real(0) ? min(abs(s - near_odd), abs(s - near_odd - Real(2))) : Real(1e9);
    if (d1 < exclusion || dodd < exclusion || d1.is_zero() || dodd.is_zero()) {
      out.record({{"s", s_str}, {"value", ""}, {"flag", "pole"}});
      continue;
    }
    Evaluation e = evaluate(s, o.method, ctx, in, o);
    out.record({{"s", s_str}, {"value", render(e, D)}, {"flag", d1 < Real(0.1) || dodd < Real(0.1) ? "near_pole" : ""}});
  }
  return 0;
}

// ---- verify --------------------------------------------------------------

struct Check {
  long matched = 0;
  long threshold = 0;
  bool pass = false;
  std::string note;
};

long row_threshold(const GoldenRow& row, long fallback) {
  return row.attr_long("min", std::min(row.printed_digits(), fallback));
}

class Verifier {
 public:
  Verifier(const Options& o) : o_(o), in_(o) {}

  Check check(const GoldenRow& row) {
    const std::string& L = row.label;
    if (L == "Z") return check_value(row);
    if (L == "t1") return check_first_zero(row);
    if (L == "t") return check_next_zero(row);
    if (L == "H") return check_h(row);
    if (L.rfind("Zseries:", 0) == 0) return check_series(row);
    auto at = L.find('@');
    if (at != std::string::npos) return check_coeff(row, L.substr(0, at), L.substr(at + 1));
    throw Error(ErrorKind::parse, "line " + std::to_string(row.line) + ": unknown label " + L);
  }

 private:
  long digits_or(long d) const { return o_.digits ? o_.digits : d; }

  Check finish(long matched, long threshold, std::string note = {}) {
    return {matched, threshold, matched >= threshold, std::move(note)};
  }

  Check check_value(const GoldenRow& row) {
    long thr = row_threshold(row, 30);
    Real s(row.key);
    // Even s carries significant digits, so tiny values need no extra decimals.
    long D = digits_or(std::max<long>(thr + 15, 40));
    auto ctx = make_context(D);
    PrecisionGuard g(ctx.internal_digits());
    Evaluation e = evaluate(s, o_.method, ctx, in_, o_);
    long matched = row.attrs.count("min") ? agreeing_decimals(e.value, row.digits, row.printed_digits())
                                          : matched_digits(e.value, row);
    return finish(matched, thr, e.method);
  }

  Check check_first_zero(const GoldenRow& row) {
    auto ctx = make_context(digits_or(60));
    PrecisionGuard g(ctx.internal_digits());
    ExtractionReport r = extract_first_zero(static_cast<int>(std::stol(row.key)), ctx, &in_.reference_zeros());
    long sig = row.attr_long("sig", -1);
    long min_sig = row.attr_long("min", -1);
    bool ok = sig >= 0 ? r.matched_digits_vs_reference == sig : r.matched_digits_vs_reference >= min_sig;
    long printed = matched_digits(r.estimate.value, row);
    ok = ok && printed >= row.attr_long("accurate_digits", std::min(30L, row.printed_digits()));
    return {r.matched_digits_vs_reference, sig >= 0 ? sig : min_sig, ok, "printed digits matched " + std::to_string(printed)};
  }

  Check check_next_zero(const GoldenRow& row) {
    int m = static_cast<int>(row.attr_long("m", 250));
    int n = static_cast<int>(std::stol(row.key));
    const ZerosDatabase& ref = in_.reference_zeros();
    auto ctx = make_context(digits_or(1300));
    PrecisionGuard g(ctx.internal_digits());
    auto key = std::make_pair(m, ctx.working_digits);
    auto it = z_cache_.find(key);
    if (it == z_cache_.end()) it = z_cache_.emplace(key, Z_even(m, ctx)).first;
    ExtractionReport r = n == 1 ? extract_first_zero(m, ctx, &ref)
                                : extract_next_zero({ref.t.begin(), ref.t.begin() + (n - 1)}, m, it->second, ctx, &ref);
    long sig = row.attr_long("sig", 0);
    bool ok = std::abs(r.matched_digits_vs_reference - sig) <= 2;
    return {r.matched_digits_vs_reference, sig, ok, "within 2 of the listed count"};
  }

  Check check_h(const GoldenRow& row) {
    long thr = row_threshold(row, 50);
    RealValue h;
    std::string note;
    if (row.key == "0") {
      auto ctx = make_context(digits_or(std::max<long>(thr + 10, 60)));
      PrecisionGuard g(ctx.internal_digits());
      h = harmonic_H(in_.evaluator(ctx.working_digits), ctx);
      note = "adr";
    } else {
      auto ctx = make_context(digits_or(40));
      PrecisionGuard g(ctx.internal_digits());
      h = H_via_mellin(MellinConfig{}, in_.stieltjes(), ctx);
      note = "mellin";
    }
    return finish(matched_digits(h.value, row), thr, note);
  }

  const CoefficientTable& table(CoeffKind kind, const std::string& center, int count, const std::string& method) {
    std::string key = std::string(to_string(kind)) + "@" + center + "/" + method;
    auto it = tables_.find(key);
    if (it != tables_.end() && it->second.count() >= count) return it->second;
    auto ctx = make_context(digits_or(60));
    PrecisionGuard g(ctx.internal_digits());
    CoefficientTable t = build_table(kind, Real(center), count, method, ctx, in_);
    return tables_[key] = std::move(t);
  }

  int rows_in_file(const std::string& label) const {
    int n = 0;
    for (const auto& r : *rows_) if (r.label == label) n = std::max(n, static_cast<int>(std::stol(r.key)) + 1);
    return n;
  }

  Check check_coeff(const GoldenRow& row, const std::string& kind_text, const std::string& center) {
    CoeffKind kind = parse_coeff_kind(kind_text);
    Real c(center);
    bool mellin = kind != CoeffKind::C && c > Real(0) && c < Real(1);
    int n = static_cast<int>(std::stol(row.key));
    const CoefficientTable& t = table(kind, center, std::max(n + 1, rows_in_file(row.label)), mellin ? "mellin" : "adr");
    long thr = mellin ? (n <= 10 ? 30 : 10) : (n <= 10 ? 45 : 30);
    thr = row_threshold(row, thr);
    return finish(matched_digits(t.values[static_cast<std::size_t>(n)].value, row), thr, mellin ? "mellin" : "adr");
  }

  // "Zseries:<kind>@<center>", key = s: the published truncation agrees
  // with the printed digits, and with Z(s) to exactly sig decimals.
  Check check_series(const GoldenRow& row) {
    std::string tag = row.label.substr(8);
    auto at = tag.find('@');
    CoeffKind kind = parse_coeff_kind(tag.substr(0, at));
    std::string center = tag.substr(at + 1);
    int order = static_cast<int>(row.attr_long("order", 50));
    const CoefficientTable& t = table(kind, center, order + 1, "adr");
    auto ctx = make_context(digits_or(60));
    PrecisionGuard g(ctx.internal_digits());
    Real s(row.key);
    SeriesValue sv = kind == CoeffKind::A   ? Z_from_A(s, t, order + 1)
                     : kind == CoeffKind::B ? Z_from_B(s, t, order + 1)
                                            : Z_from_C(s, t, order + 1);
    long printed = matched_digits(sv.value.value, row);
    Evaluation truth = evaluate(s, "auto", ctx, in_, o_);
    long sig = row.attr_long("sig", 0);
    long agree = agreeing_decimals(sv.value.value, truth.exact ? *truth.exact : truth.value.to_fixed(ctx.working_digits),
                                   ctx.working_digits - 5);
    bool ok = printed >= row.attr_long("accurate_digits", row.printed_digits()) && agree == sig;
    return {agree, sig, ok, "printed digits matched " + std::to_string(printed)};
  }

  const Options& o_;
  Inputs in_;
  std::map<std::pair<int, long>, RealValue> z_cache_;
  std::map<std::string, CoefficientTable> tables_;

 public:
  const std::vector<GoldenRow>* rows_ = nullptr;
};

int cmd_verify(const std::string& path, const Options& o) {
  std::vector<GoldenRow> rows = load_golden(path);
  Verifier v(o);
  v.rows_ = &rows;
  Emitter out(o.format, o.out);
  int failures = 0;
  for (const auto& row : rows) {
    Check c;
    try {
      c = v.check(row);
    } catch (const Error& e) {
      if (e.kind() == ErrorKind::parse || e.kind() == ErrorKind::io) throw;
      c = {0, 0, false, std::string("error: ") + e.what()};
    }
    if (!c.pass) ++failures;
    out.record({{"label", row.label},
                {"key", row.key},
                {"matched", std::to_string(c.matched)},
                {"threshold", std::to_string(c.threshold)},
                {"result", c.pass ? "PASS" : "FAIL"},
                {"note", c.note}});
  }
  out.os() << (o.format == "text" ? "" : "# ") << rows.size() - static_cast<std::size_t>(failures) << "/" << rows.size()
           << " entries pass\n";
  return failures ? kExitVerify : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"secz: the secondary zeta function Z(s) = sum t_n^{-s}"};
  app.require_subcommand(1);
  Options o;
  auto common = [&o](CLI::App* c) {
    c->add_option("--digits", o.digits, "working precision in decimal digits (>= 30)");
    c->add_option("--method", o.method, "auto, voros, adr, series_a, series_b, mellin, pv")
        ->check(CLI::IsMember({"auto", "voros", "adr", "series_a", "series_b", "mellin", "pv", "zeros"}));
    c->add_option("--a", o.a, "ADR heat parameter (default: tuned to --digits)");
    c->add_option("--N", o.N, "ADR Bernoulli terms (default: tuned)");
    c->add_option("--zeros", o.zeros_path, "zeros file");
    c->add_option("--stieltjes", o.stieltjes_path, "Stieltjes constants file");
    c->add_option("--center", o.center, "series or table center");
    c->add_option("--terms", o.terms, "highest series order");
    c->add_option("--out", o.out, "output file (default: stdout)");
    c->add_option("--format", o.format, "text, csv or json-lines")->check(CLI::IsMember({"text", "csv", "json-lines"}));
  };

  std::string s_text;
  auto* eval = app.add_subcommand("eval", "evaluate Z(s)");
  eval->add_option("s", s_text, "point")->required();
  common(eval);

  std::string kind;
  int count = 11;
  auto* coeffs = app.add_subcommand("coeffs", "derivative table of Z, A, B or C");
  coeffs->add_option("kind", kind, "Zderiv, A, B or C")->required();
  coeffs->add_option("--count", count, "rows 0..count-1");
  common(coeffs);

  int n_max = 1, m = 0;
  auto* zeros = app.add_subcommand("zeros", "extract zeros from Z(2m)");
  zeros->add_option("--n-max", n_max, "extract t_1..t_n");
  zeros->add_option("--m", m, "exponent parameter, Z(2m)")->required();
  common(zeros);

  std::string lo, hi, step;
  auto* grid = app.add_subcommand("grid", "sample Z on lo, lo+step, ..., hi");
  grid->add_option("lo", lo)->required();
  grid->add_option("hi", hi)->required();
  grid->add_option("step", step)->required();
  common(grid);
  grid->add_option("--exclusion", o.exclusion, "skip samples this close to a pole (default 1e-3)");

  std::string golden;
  auto* verify = app.add_subcommand("verify", "check a golden file");
  verify->add_option("golden", golden)->required();
  common(verify);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : kExitUsage;
  }

  try {
    if (*eval) return cmd_eval(s_text, o);
    if (*coeffs) return cmd_coeffs(kind, count, o);
    if (*zeros) return cmd_zeros(n_max, m, o);
    if (*grid) return cmd_grid(lo, hi, step, o);
    if (*verify) return cmd_verify(golden, o);
  } catch (const UsageError& e) {
    std::cerr << "secz: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    std::cerr << "secz: " << to_string(e.kind()) << " error: " << e.what() << '\n';
    switch (e.kind()) {
      case ErrorKind::domain:
      case ErrorKind::pole:
      case ErrorKind::parse:
      case ErrorKind::io:
        return kExitUsage;
      default:
        return kExitNumeric;
    }
  } catch (const std::exception& e) {
    std::cerr << "secz: " << e.what() << '\n';
    return kExitNumeric;
  }
  return kExitUsage;
}
