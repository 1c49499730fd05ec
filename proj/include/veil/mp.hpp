// veil/mp.hpp — arbitrary-precision real and complex numerics (MPFR-backed)
// used by the numeric certification layer: precision scoping, principal-branch
// complex functions, and cached Gauss-Legendre nodes.
//
// Precision model.  All working precision is expressed in bits.  A
// PrecisionGuard installs (thread-locally) a default precision that
// guarantees at least the requested number of mantissa bits for every value
// created in its scope, and restores the previous default on exit.
//
// Branch conventions.  log_c is the principal branch (imaginary part in
// (-pi, pi]); pow_c(z, q) = exp_c(q * log_c(z)).  Integration paths keep
// their arguments off the cuts: bulge detours stay in the closed upper half
// plane strictly between 0 and 1, where both z and 1 - z avoid the negative
// real axis.
//
// Copyright (c) 2026 The veil authors.  MIT License; see LICENSE.

#pragma once

#include <veil/rational.hpp>

#include <boost/multiprecision/mpfr.hpp>

#include <map>
#include <mutex>
#include <utility>
#include <vector>

namespace veil {

using MpReal = boost::multiprecision::mpfr_float;

inline unsigned digits10_for_bits(unsigned bits) {
  return static_cast<unsigned>(bits * 0.30103) + 4;
}

/// Scoped (and thread-local) default-precision override, in bits.
class PrecisionGuard {
 public:
  explicit PrecisionGuard(unsigned bits)
      : saved_(MpReal::default_precision()) {
    MpReal::default_precision(digits10_for_bits(bits));
  }
  ~PrecisionGuard() { MpReal::default_precision(saved_); }
  PrecisionGuard(const PrecisionGuard&) = delete;
  PrecisionGuard& operator=(const PrecisionGuard&) = delete;

 private:
  unsigned saved_;
};

inline MpReal to_mp(const Rat& q) { return MpReal(q); }
inline MpReal to_mp(const Int& n) { return MpReal(n); }

inline MpReal mp_pi() { return atan2(MpReal(0), MpReal(-1)); }

/// base^e for strictly positive real base and rational exponent.
inline MpReal pow_mp(const MpReal& base, const Rat& e) {
  if (base <= 0) throw std::domain_error("pow_mp: base <= 0");
  if (is_integer(e)) {
    long n = to_long(e);
    return pow(base, n);
  }
  return exp(to_mp(e) * log(base));
}

/// 2^-b as an exact MpReal at current precision.
inline MpReal pow2_mp(long b) { return ldexp(MpReal(1), b); }

// ---------------------------------------------------------------------------
// Complex arithmetic with principal branches.
// ---------------------------------------------------------------------------

struct MpComplex {
  MpReal re, im;

  MpComplex() : re(0), im(0) {}
  MpComplex(MpReal r) : re(std::move(r)), im(0) {}  // NOLINT(runtime/explicit)
  MpComplex(MpReal r, MpReal i) : re(std::move(r)), im(std::move(i)) {}
  explicit MpComplex(const Rat& q) : re(to_mp(q)), im(0) {}
  explicit MpComplex(long v) : re(v), im(0) {}

  MpComplex& operator+=(const MpComplex& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  MpComplex& operator-=(const MpComplex& o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }
  MpComplex& operator*=(const MpComplex& o) {
    MpReal r = re * o.re - im * o.im;
    im = re * o.im + im * o.re;
    re = std::move(r);
    return *this;
  }
  MpComplex& operator/=(const MpComplex& o) {
    MpReal d = o.re * o.re + o.im * o.im;
    MpReal r = (re * o.re + im * o.im) / d;
    im = (im * o.re - re * o.im) / d;
    re = std::move(r);
    return *this;
  }
};

inline MpComplex operator+(MpComplex a, const MpComplex& b) { return a += b; }
inline MpComplex operator-(MpComplex a, const MpComplex& b) { return a -= b; }
inline MpComplex operator*(MpComplex a, const MpComplex& b) { return a *= b; }
inline MpComplex operator/(MpComplex a, const MpComplex& b) { return a /= b; }
inline MpComplex operator-(const MpComplex& a) { return {-a.re, -a.im}; }

inline MpReal abs_c(const MpComplex& z) { return hypot(z.re, z.im); }
inline MpReal norm_c(const MpComplex& z) { return z.re * z.re + z.im * z.im; }
inline MpComplex conj_c(const MpComplex& z) { return {z.re, -z.im}; }

inline MpComplex exp_c(const MpComplex& z) {
  MpReal m = exp(z.re);
  return {m * cos(z.im), m * sin(z.im)};
}

/// Principal logarithm; arg in (-pi, pi].
inline MpComplex log_c(const MpComplex& z) {
  return {log(abs_c(z)), atan2(z.im, z.re)};
}

/// Principal power z^q for rational q; integer q is evaluated by squaring so
/// it stays branch-free on all of C \ {0}.
inline MpComplex pow_c(const MpComplex& z, const Rat& q) {
  if (is_integer(q)) {
    long n = to_long(q);
    bool inv = n < 0;
    unsigned long m = inv ? static_cast<unsigned long>(-n)
                          : static_cast<unsigned long>(n);
    MpComplex acc(MpReal(1)), base = z;
    while (m) {
      if (m & 1) acc *= base;
      base *= base;
      m >>= 1;
    }
    return inv ? MpComplex(MpReal(1)) / acc : acc;
  }
  return exp_c(MpComplex(to_mp(q)) * log_c(z));
}

inline MpComplex sqrt_c(const MpComplex& z) { return pow_c(z, Rat(1, 2)); }

// ---------------------------------------------------------------------------
// Gauss-Legendre nodes and weights on [-1, 1], cached per (n, bits).
// ---------------------------------------------------------------------------

namespace detail {

/// (P_n(x), P_n'(x)) by the three-term recurrence.
inline std::pair<MpReal, MpReal> legendre_pn(long n, const MpReal& x) {
  MpReal p0(1), p1 = x;
  if (n == 0) return {p0, MpReal(0)};
  for (long j = 2; j <= n; ++j) {
    MpReal p2 = (MpReal(2 * j - 1) * x * p1 - MpReal(j - 1) * p0) / MpReal(j);
    p0 = std::move(p1);
    p1 = std::move(p2);
  }
  MpReal d = MpReal(n) * (x * p1 - p0) / (x * x - 1);
  return {p1, d};
}

}  // namespace detail

/// Nodes and weights of n-point Gauss-Legendre quadrature on [-1, 1] at the
/// given precision.  Returned by value-reference from a process-wide cache.
inline const std::vector<std::pair<MpReal, MpReal>>& gl_nodes(long n,
                                                              unsigned bits) {
  static std::map<std::pair<long, unsigned>,
                  std::vector<std::pair<MpReal, MpReal>>>
      cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_pair(n, bits);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;

  PrecisionGuard guard(bits + 16);
  std::vector<std::pair<MpReal, MpReal>> out(n);
  const MpReal pi = mp_pi();
  const MpReal tol = pow2_mp(-static_cast<long>(bits) - 8);
  for (long i = 1; i <= n; ++i) {
    MpReal x = cos(pi * (MpReal(i) - MpReal(1) / 4) / (MpReal(n) + MpReal(1) / 2));
    for (int it2 = 0; it2 < 200; ++it2) {
      auto [p, d] = detail::legendre_pn(n, x);
      MpReal dx = p / d;
      x -= dx;
      if (abs(dx) < tol) break;
    }
    auto [p, d] = detail::legendre_pn(n, x);
    (void)p;
    out[i - 1] = {x, MpReal(2) / ((1 - x * x) * d * d)};
  }
  return cache.emplace(key, std::move(out)).first->second;
}

}  // namespace veil
