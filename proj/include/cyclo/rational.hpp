// rational.hpp - exact rationals backed by GMP.
#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace cyclo {

using Rational = mpq_class;
using Integer = mpz_class;

inline Rational make_rational(long num, long den = 1) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

inline bool is_integer(const Rational& r) { return r.get_den() == 1; }

inline Integer floor_of(const Rational& r) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
  return q;
}

// Representative of r modulo 1 in [0, 1).
inline Rational mod_one(const Rational& r) {
  Rational out = r - Rational(floor_of(r));
  out.canonicalize();
  return out;
}

// "p/q", or "p" when the denominator is 1.
inline std::string to_string(const Rational& r) {
  if (is_integer(r)) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

// Accepts "p", "-p", "p/q".
Rational parse_rational(std::string_view text);

// Integer value of an integral rational that fits in a long.
long to_long(const Rational& r);

}  // namespace cyclo
