#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace hypersplit {

// Exact rational arithmetic is GMP's mpq_class throughout; values are kept
// canonical (reduced, denominator positive).
using Rat = mpq_class;

inline Rat rat(long num, long den = 1) {
  if (den == 0) throw std::invalid_argument("rat: zero denominator");
  Rat r(num, den);
  r.canonicalize();
  return r;
}

// Parses "p" or "p/q" with decimal integers, q != 0.  Rejects anything else.
inline Rat rat_parse(const std::string& s) {
  const auto bad = [&] { return std::invalid_argument("not a rational: '" + s + "'"); };
  auto digits = [](const std::string& t, size_t from, size_t to) {
    if (from >= to) return false;
    for (size_t i = from; i < to; ++i)
      if (t[i] < '0' || t[i] > '9') return false;
    return true;
  };
  size_t slash = s.find('/');
  std::string num = slash == std::string::npos ? s : s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  size_t nstart = (!num.empty() && (num[0] == '-' || num[0] == '+')) ? 1 : 0;
  size_t dstart = (!den.empty() && (den[0] == '-' || den[0] == '+')) ? 1 : 0;
  if (!digits(num, nstart, num.size()) || !digits(den, dstart, den.size())) throw bad();
  Rat r;
  if (mpq_set_str(r.get_mpq_t(), (num + "/" + den).c_str(), 10) != 0) throw bad();
  if (mpz_sgn(mpq_denref(r.get_mpq_t())) == 0) throw bad();
  r.canonicalize();
  return r;
}

// Canonical "p" or "p/q" form (no "/1", denominator positive).
inline std::string rat_str(const Rat& r) { return r.get_str(); }

}  // namespace hypersplit
