#include "secz/golden.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include "secz/errors.hpp"

namespace secz {

namespace {

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

bool is_number(const std::string& s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  bool digit = false, dot = false;
  for (; i < s.size(); ++i) {
    char c = s[i];
    if (c >= '0' && c <= '9') {
      digit = true;
    } else if (c == '.' && !dot) {
      dot = true;
    } else if ((c == 'e' || c == 'E') && digit) {
      std::size_t j = i + 1;
      if (j < s.size() && (s[j] == '-' || s[j] == '+')) ++j;
      if (j == s.size()) return false;
      return std::all_of(s.begin() + static_cast<long>(j), s.end(), [](char d) { return d >= '0' && d <= '9'; });
    } else {
      return false;
    }
  }
  return digit;
}

}  // namespace

long GoldenRow::attr_long(const std::string& name, long fallback) const {
  auto it = attrs.find(name);
  return it == attrs.end() ? fallback : std::stol(it->second);
}

bool GoldenRow::scientific() const { return digits.find_first_of("eE") != std::string::npos; }

long GoldenRow::printed_digits() const {
  std::string m = digits.substr(0, digits.find_first_of("eE"));
  if (!scientific()) {
    auto dot = m.find('.');
    return dot == std::string::npos ? 0 : static_cast<long>(m.size() - dot - 1);
  }
  long n = 0;
  bool lead = true;
  for (char c : m) {
    if (c < '0' || c > '9') continue;
    if (lead && c == '0') continue;
    lead = false;
    ++n;
  }
  return n;
}

Real GoldenRow::value() const { return Real(digits); }

std::vector<GoldenRow> load_golden(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::io, "cannot open " + path);
  std::vector<GoldenRow> rows;
  std::string line;
  int no = 0;
  while (std::getline(in, line)) {
    ++no;
    std::string t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    std::vector<std::string> f;
    std::stringstream ss(t);
    std::string part;
    while (std::getline(ss, part, '|')) f.push_back(trim(part));
    if (f.size() != 4)
      throw Error(ErrorKind::parse, path + ":" + std::to_string(no) + ": expected 4 '|'-separated fields");
    GoldenRow r;
    r.label = f[0];
    r.key = f[1];
    r.digits = f[2];
    r.line = no;
    if (r.label.empty()) throw Error(ErrorKind::parse, path + ":" + std::to_string(no) + ": empty label");
    if (!is_number(r.digits))
      throw Error(ErrorKind::parse, path + ":" + std::to_string(no) + ": bad digit string '" + r.digits + "'");
    // Trailing key=value words belong to attrs; the rest is the source text.
    std::stringstream ws(f[3]);
    std::string w, src;
    while (ws >> w) {
      auto eq = w.find('=');
      if (eq != std::string::npos && eq > 0) {
        r.attrs[w.substr(0, eq)] = w.substr(eq + 1);
      } else {
        if (!src.empty()) src += ' ';
        src += w;
      }
    }
    r.source = src;
    rows.push_back(std::move(r));
  }
  return rows;
}

long agreeing_decimals(const Real& x, const std::string& ref, long max_decimals) {
  PrecisionGuard g(max_decimals + 40);
  Real r(ref);
  if (x.sign() * r.sign() < 0) return 0;
  const long width = max_decimals + 10;
  auto digits_of = [&](const Real& v) {
    std::string s = abs(v).to_fixed(width + 15);
    return s.substr(0, s.size() - 15);
  };
  auto common = [&](const std::string& a, const std::string& b) {
    auto da = a.find('.'), db = b.find('.');
    if (da != db || a.compare(0, da, b, 0, db) != 0) return 0L;
    long n = 0;
    for (std::size_t i = da + 1; i < a.size() && i < b.size() && a[i] == b[i]; ++i) ++n;
    return n;
  };
  // x's own decimal expansion, rounded to the digits its precision carries.
  Real xr(x.to_sci(std::max(1L, bits_to_digits(x.precision()) - 1)));
  std::string xs = digits_of(xr);
  Real eps = pow(Real(10), -(max_decimals + 20));
  long best = common(xs, digits_of(abs(r)));
  best = std::max(best, common(xs, digits_of(abs(r) - eps)));
  if (!r.is_zero()) best = std::max(best, common(xs, digits_of(abs(r) + eps)));
  return std::min(best, max_decimals);
}

long matched_digits(const Real& x, const GoldenRow& row) {
  const long cap = row.printed_digits();
  PrecisionGuard g(std::max(working_digits(), cap + 20));
  Real r = row.value();
  Real d = abs(x - r);
  if (row.scientific() && !r.is_zero()) d = d / abs(r);
  if (d.is_zero()) return cap;
  return std::clamp(static_cast<long>(std::floor(-d.log10_abs())), 0L, cap);
}

}  // namespace secz
