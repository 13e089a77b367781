#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

namespace relchar {

using Int = mpz_class;
using Rat = mpq_class;

inline Rat make_rat(long num, long den = 1) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  Rat r(num, den);
  r.canonicalize();
  return r;
}

// Parses "p", "-p", "p/q".  Used by the CLI and the catalog reader.
inline std::optional<Rat> parse_rat(const std::string& s) {
  if (s.empty()) return std::nullopt;
  try {
    Rat r(s);
    if (r.get_den() == 0) return std::nullopt;
    r.canonicalize();
    return r;
  } catch (const std::invalid_argument&) {
    return std::nullopt;
  }
}

// Exact rationals are serialized as "p/q" strings so report goldens never
// pick up float drift.
inline std::string rat_str(const Rat& r) {
  std::string s = r.get_num().get_str();
  if (r.get_den() != 1) s += "/" + r.get_den().get_str();
  return s;
}

inline Rat pow_rat(const Rat& base, long e) {
  if (e == 0) return Rat(1);
  Rat b = e > 0 ? base : Rat(1) / base;
  unsigned long n = static_cast<unsigned long>(e > 0 ? e : -e);
  Rat acc(1);
  Rat p = b;
  while (n) {
    if (n & 1) acc *= p;
    p *= p;
    n >>= 1;
  }
  return acc;
}

inline Int pow_int(const Int& base, unsigned long e) {
  Int out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), e);
  return out;
}

}  // namespace relchar
