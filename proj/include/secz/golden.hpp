// Reference-value files: '<label> | <s-or-index> | <digits> | <source> [key=value ...]'
// with '#' comment lines.
#pragma once

#include <map>
#include <string>
#include <vector>

#include "secz/real.hpp"

namespace secz {

struct GoldenRow {
  std::string label;  // e.g. "Z", "A@2", "Zseries:B@2", "t1"
  std::string key;    // argument s or index n, verbatim
  std::string digits;
  std::string source;
  std::map<std::string, std::string> attrs;
  int line = 0;

  long attr_long(const std::string& name, long fallback) const;
  bool scientific() const;
  // Decimal places (fixed rows) or significant digits (scientific rows) printed.
  long printed_digits() const;
  // The printed value; set the precision first.
  Real value() const;
};

std::vector<GoldenRow> load_golden(const std::string& path);

// Leading decimals of x equal to those of ref. A terminating ref also
// matches its ...999 expansion, so -0.28124999999 agrees with -0.28125
// to 11 places.
long agreeing_decimals(const Real& x, const std::string& ref, long max_decimals);

// min(printed digits, floor(-log10 |x - ref|)); relative to |ref| for
// scientific rows.
long matched_digits(const Real& x, const GoldenRow& row);

}  // namespace secz
