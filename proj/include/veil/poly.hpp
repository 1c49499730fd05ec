// veil/poly.hpp — dense univariate polynomials over the exact rationals.
//
// Coefficients are stored ascending (c[i] multiplies z^i) and trailing zeros
// are trimmed, so the zero polynomial has an empty vector and degree -1.
// Provides ring arithmetic, exact division, monic Euclidean gcd, squarefree
// testing, affine composition, primitive integer normalization, and Sturm
// root counting/isolation on rational intervals — everything exact.
//
// Copyright (c) 2026 The veil authors.  MIT License; see LICENSE.

#pragma once

#include <veil/rational.hpp>

#include <algorithm>
#include <cassert>
#include <initializer_list>
#include <sstream>
#include <utility>
#include <vector>

namespace veil {

class Poly {
 public:
  Poly() = default;
  /*implicit*/ Poly(const Rat& c0) { c_.push_back(c0); trim(); }
  /*implicit*/ Poly(long c0) : Poly(Rat(c0)) {}
  explicit Poly(std::vector<Rat> c) : c_(std::move(c)) { trim(); }
  Poly(std::initializer_list<Rat> c) : c_(c) { trim(); }

  static Poly zero() { return Poly(); }
  static Poly one() { return Poly(Rat(1)); }
  /// coeff * z^d
  static Poly monomial(long d, const Rat& coeff = Rat(1)) {
    if (coeff == 0) return Poly();
    std::vector<Rat> c(static_cast<size_t>(d) + 1, Rat(0));
    c.back() = coeff;
    return Poly(std::move(c));
  }
  /// The polynomial z.
  static Poly z() { return monomial(1); }
  /// The polynomial 1 - z.
  static Poly one_minus_z() { return Poly{Rat(1), Rat(-1)}; }

  long deg() const { return static_cast<long>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<Rat>& coeffs() const { return c_; }

  /// Coefficient of z^i (0 outside the stored range).
  Rat at(long i) const {
    if (i < 0 || i >= static_cast<long>(c_.size())) return Rat(0);
    return c_[static_cast<size_t>(i)];
  }
  /// Leading coefficient (0 for the zero polynomial).
  Rat lc() const { return c_.empty() ? Rat(0) : c_.back(); }

  bool operator==(const Poly& o) const { return c_ == o.c_; }
  bool operator!=(const Poly& o) const { return !(*this == o); }

  Poly operator-() const {
    Poly r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
  }
  Poly& operator+=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rat(0));
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
  }
  Poly& operator-=(const Poly& o) { return *this += -o; }
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }

  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    std::vector<Rat> c(a.c_.size() + b.c_.size() - 1, Rat(0));
    for (size_t i = 0; i < a.c_.size(); ++i)
      for (size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    return Poly(std::move(c));
  }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }
  friend Poly operator*(const Rat& s, Poly p) {
    for (auto& x : p.c_) x *= s;
    p.trim();
    return p;
  }
  friend Poly operator*(Poly p, const Rat& s) { return s * std::move(p); }

  /// d/dz.
  Poly derivative() const {
    if (c_.size() <= 1) return Poly();
    std::vector<Rat> d(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) d[i - 1] = Rat(long(i)) * c_[i];
    return Poly(std::move(d));
  }

  Rat eval(const Rat& x) const {
    Rat acc(0);
    for (size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
    return acc;
  }
  /// Horner evaluation in any field T constructible from Rat.
  template <class T>
  T eval_as(const T& x) const {
    T acc(0);
    for (size_t i = c_.size(); i-- > 0;) acc = acc * x + static_cast<T>(c_[i]);
    return acc;
  }

  /// p(a + b z).
  Poly compose_affine(const Rat& a, const Rat& b) const {
    Poly lin{a, b}, acc;
    for (size_t i = c_.size(); i-- > 0;) acc = acc * lin + Poly(c_[i]);
    return acc;
  }

  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }

  std::string str(const std::string& var = "z") const;

 private:
  std::vector<Rat> c_;
};

/// Exact quotient/remainder over Q (b != 0): a = q*b + r, deg r < deg b.
inline std::pair<Poly, Poly> divrem(const Poly& a, const Poly& b) {
  assert(!b.is_zero());
  std::vector<Rat> r(a.coeffs());
  long db = b.deg();
  if (a.deg() < db) return {Poly(), a};
  std::vector<Rat> q(static_cast<size_t>(a.deg() - db) + 1, Rat(0));
  Rat inv_lb = Rat(1) / b.lc();
  for (long i = a.deg(); i >= db; --i) {
    Rat coef = r[static_cast<size_t>(i)] * inv_lb;
    if (coef == 0) continue;
    q[static_cast<size_t>(i - db)] = coef;
    for (long j = 0; j <= db; ++j)
      r[static_cast<size_t>(i - db + j)] -= coef * b.at(j);
  }
  return {Poly(std::move(q)), Poly(std::move(r))};
}

inline Poly operator/(const Poly& a, const Poly& b) { return divrem(a, b).first; }
inline Poly operator%(const Poly& a, const Poly& b) { return divrem(a, b).second; }

/// True iff b divides a exactly.
inline bool divides(const Poly& b, const Poly& a) {
  if (a.is_zero()) return true;
  return (a % b).is_zero();
}

/// Monic gcd over Q (gcd of 0,0 is 0).
inline Poly gcd_poly(Poly a, Poly b) {
  while (!b.is_zero()) {
    Poly r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.is_zero()) a = (Rat(1) / a.lc()) * a;
  return a;
}

inline bool is_squarefree(const Poly& p) {
  if (p.deg() <= 1) return true;
  return gcd_poly(p, p.derivative()).deg() == 0;
}

/// Scale to integer coefficients with gcd 1 and positive leading coefficient.
inline Poly primitive_part(const Poly& p) {
  if (p.is_zero()) return p;
  Int l(1);
  for (const Rat& c : p.coeffs()) l = lcm(l, rat_den(c));
  Int g(0);
  for (const Rat& c : p.coeffs()) g = gcd(g, Int(c * Rat(l)));
  Rat scale = Rat(l, g);
  if (p.lc() < 0) scale = -scale;
  return scale * p;
}

/// p^m for m >= 0 by binary powering.
inline Poly pow_poly(Poly p, long m) {
  assert(m >= 0);
  Poly out = Poly::one();
  while (m) {
    if (m & 1) out *= p;
    if (m >>= 1) p *= p;
  }
  return out;
}

inline std::string Poly::str(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (long i = deg(); i >= 0; --i) {
    Rat c = at(i);
    if (c == 0) continue;
    if (!first) os << (c > 0 ? " + " : " - ");
    else if (c < 0) os << "-";
    first = false;
    Rat a = abs_rat(c);
    bool unit = (a == 1) && i > 0;
    if (!unit) {
      os << rat_num(a).str();
      if (rat_den(a) != 1) os << "/" << rat_den(a).str();
    }
    if (i > 0) {
      if (!unit) os << "*";
      os << var;
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// Sturm sequences: exact real-root counting and isolation.
// ---------------------------------------------------------------------------

/// Standard Sturm chain p, p', then negated remainders.
inline std::vector<Poly> sturm_chain(const Poly& p) {
  std::vector<Poly> s;
  if (p.is_zero()) return s;
  s.push_back(p);
  Poly d = p.derivative();
  if (d.is_zero()) return s;
  s.push_back(d);
  while (true) {
    Poly r = s[s.size() - 2] % s.back();
    if (r.is_zero()) break;
    s.push_back(-r);
  }
  return s;
}

/// Number of sign alternations of the chain at x.
inline long sturm_variations(const std::vector<Poly>& chain, const Rat& x) {
  long v = 0;
  int prev = 0;
  for (const Poly& p : chain) {
    int s = sign(p.eval(x));
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++v;
    prev = s;
  }
  return v;
}

/// Count distinct real roots in (a, b]; requires a < b.
inline long count_roots_halfopen(const std::vector<Poly>& chain, const Rat& a,
                                 const Rat& b) {
  return sturm_variations(chain, a) - sturm_variations(chain, b);
}

/// Count distinct real roots in the open interval (a, b).
inline long count_roots_open(const Poly& p, const Rat& a, const Rat& b) {
  if (p.is_zero() || p.deg() == 0) return 0;
  auto chain = sturm_chain(p);
  long n = count_roots_halfopen(chain, a, b);
  if (p.eval(b) == 0) --n;
  return n;
}

/// Disjoint rational brackets [lo, hi], each containing exactly one root of p
/// in (a, b), refined until hi - lo <= width.  Endpoints of brackets are
/// guaranteed not to be roots.  Requires p squarefree on the interval.
inline std::vector<std::pair<Rat, Rat>> isolate_roots(const Poly& p,
                                                      const Rat& a,
                                                      const Rat& b,
                                                      const Rat& width) {
  std::vector<std::pair<Rat, Rat>> out;
  if (p.is_zero() || p.deg() == 0) return out;
  auto chain = sturm_chain(p);
  // Worklist of intervals with their root counts.
  struct Item { Rat lo, hi; long cnt; };
  auto count = [&](const Rat& lo, const Rat& hi) {
    long n = count_roots_halfopen(chain, lo, hi);
    if (p.eval(hi) == 0) --n;
    return n;
  };
  std::vector<Item> work;
  work.push_back({a, b, count(a, b)});
  while (!work.empty()) {
    Item it = work.back();
    work.pop_back();
    if (it.cnt == 0) continue;
    Rat mid = (it.lo + it.hi) / 2;
    while (p.eval(mid) == 0) mid = (it.lo + mid) / 2;  // nudge off a root
    if (it.cnt == 1 && it.hi - it.lo <= width) {
      out.emplace_back(it.lo, it.hi);
      continue;
    }
    long left = count(it.lo, mid);
    work.push_back({it.lo, mid, left});
    work.push_back({mid, it.hi, it.cnt - left});
  }
  std::sort(out.begin(), out.end(),
            [](const auto& x, const auto& y) { return x.first < y.first; });
  return out;
}

}  // namespace veil
