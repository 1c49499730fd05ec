// veil/rational.hpp — exact integer/rational scalar layer.
//
// Thin aliases over GMP-backed Boost.Multiprecision types plus the handful of
// exact helpers the rest of the library needs (floor/fractional part, rising
// factorials, binomials, canonical "num/den" rendering).  Everything here is
// value-semantic and exact; nothing in this header touches floating point.
//
// Copyright (c) 2026 The veil authors.  MIT License; see LICENSE.

#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <optional>
#include <stdexcept>
#include <string>

namespace veil {

using Int = boost::multiprecision::mpz_int;
using Rat = boost::multiprecision::mpq_rational;

/// Build p/q (q != 0).  Always use this (or Rat(Int, Int), or division) when
/// either argument can be negative: the two-builtin-int Rat constructor
/// converts a negative *denominator* through unsigned long and yields garbage.
inline Rat rat(long p, long q = 1) {
  if (q == 0) throw std::invalid_argument("rat: zero denominator");
  return Rat(Int(p), Int(q));
}

inline Int rat_num(const Rat& r) { return numerator(r); }
inline Int rat_den(const Rat& r) { return denominator(r); }

inline bool is_integer(const Rat& r) { return rat_den(r) == 1; }

/// Exact floor of a rational.
inline Int floor_rat(const Rat& r) {
  Int n = rat_num(r), d = rat_den(r);  // d > 0 canonically
  Int q = n / d;
  if (n % d != 0 && n < 0) --q;
  return q;
}

/// Fractional part in [0, 1): r - floor(r).
inline Rat frac_mod1(const Rat& r) { return r - Rat(floor_rat(r)); }

/// r as a machine long; throws if it does not fit or is not an integer.
inline long to_long(const Rat& r) {
  if (!is_integer(r)) throw std::invalid_argument("to_long: not an integer");
  return static_cast<long>(rat_num(r));
}

/// Rising factorial (a)_m = a (a+1) ... (a+m-1), m >= 0.
inline Rat pochhammer(const Rat& a, long m) {
  Rat out(1);
  for (long i = 0; i < m; ++i) out *= a + Rat(i);
  return out;
}

/// Falling factorial a (a-1) ... (a-m+1), m >= 0.
inline Rat falling(const Rat& a, long m) {
  Rat out(1);
  for (long i = 0; i < m; ++i) out *= a - Rat(i);
  return out;
}

inline Int factorial(long n) {
  Int out(1);
  for (long i = 2; i <= n; ++i) out *= i;
  return out;
}

/// Binomial coefficient C(n, k) for integer n >= 0.
inline Int binomial(long n, long k) {
  if (k < 0 || k > n) return Int(0);
  Int out(1);
  for (long i = 0; i < k; ++i) { out *= (n - i); out /= (i + 1); }
  return out;
}

/// Integer power with rational base, exponent may be negative (base != 0).
inline Rat pow_rat(const Rat& base, long e) {
  if (e == 0) return Rat(1);
  if (base == 0 && e < 0) throw std::invalid_argument("pow_rat: 0^negative");
  Rat b = e > 0 ? base : Rat(1) / base;
  long n = e > 0 ? e : -e;
  Rat out(1);
  while (n) {
    if (n & 1) out *= b;
    b *= b;
    n >>= 1;
  }
  return out;
}

/// Canonical rendering "num/den" (always includes the denominator).
inline std::string rat_str(const Rat& r) {
  return rat_num(r).str() + "/" + rat_den(r).str();
}

/// Parse "a", "-a", "a/b" into a rational; returns nullopt on malformed input.
inline std::optional<Rat> parse_rat(const std::string& s) {
  if (s.empty()) return std::nullopt;
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rat(Int(s));
    Int n(s.substr(0, slash)), d(s.substr(slash + 1));
    if (d == 0) return std::nullopt;
    return Rat(n, d);
  } catch (...) {
    return std::nullopt;
  }
}

inline int sign(const Rat& r) { return r > 0 ? 1 : (r < 0 ? -1 : 0); }

inline Rat abs_rat(const Rat& r) { return r < 0 ? -r : r; }

}  // namespace veil
