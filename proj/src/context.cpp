#include "secz/context.hpp"

#include <algorithm>

#include "secz/errors.hpp"

namespace secz {

const char* to_string(ErrorKind k) {
  switch (k) {
    case ErrorKind::domain: return "domain error";
    case ErrorKind::pole: return "pole";
    case ErrorKind::precision: return "precision error";
    case ErrorKind::convergence: return "non-convergence";
    case ErrorKind::truncation: return "truncation error";
    case ErrorKind::parse: return "parse error";
    case ErrorKind::io: return "i/o error";
    case ErrorKind::data: return "data error";
  }
  return "error";
}

PrecisionContext make_context(long working_digits) {
  if (working_digits < 30)
    throw Error(ErrorKind::domain, "working precision must be at least 30 digits");
  PrecisionContext c;
  c.working_digits = working_digits;
  c.guard_digits = std::max(10L, working_digits / 10);
  c.quadrature_target_digits = working_digits;
  c.diff_oversample_factor = 2.0;
  return c;
}

}  // namespace secz
