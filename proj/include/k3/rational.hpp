#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>

namespace k3 {

using Int = mpz_class;
using Rat = mpq_class;

inline Rat rat(long num, long den = 1) {
  Rat r(num, den);
  r.canonicalize();
  return r;
}

inline Rat rat_from_string(const std::string& s) {
  Rat r(s);
  r.canonicalize();
  return r;
}

// canonical "p" or "p/q" with q > 0
inline std::string to_string(const Rat& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

inline Int pow_int(const Int& base, unsigned long e) {
  Int out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), e);
  return out;
}

inline Rat pow_rat(const Rat& base, long e) {
  if (e == 0) return Rat(1);
  Rat b = e > 0 ? base : Rat(1) / base;
  unsigned long n = e > 0 ? e : -e;
  Rat out(1);
  while (n) {
    if (n & 1) out *= b;
    b *= b;
    n >>= 1;
  }
  return out;
}

inline std::optional<Int> sqrt_exact(const Int& n) {
  if (n < 0) return std::nullopt;
  Int r = sqrt(n);
  if (r * r == n) return r;
  return std::nullopt;
}

// rational square root when it exists
inline std::optional<Rat> sqrt_exact(const Rat& q) {
  auto n = sqrt_exact(Int(q.get_num()));
  auto d = sqrt_exact(Int(q.get_den()));
  if (!n || !d) return std::nullopt;
  return Rat(*n, *d);
}

}  // namespace k3
