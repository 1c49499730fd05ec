// veil/jacobi.hpp — exact Rodrigues construction of the algebraic-solution
// Jacobi polynomials.
//
// For rational parameters (alpha, beta) and degree n, the polynomial is
//
//   J(z) = (z-1)^{-alpha} z^{-beta} d^n/dz^n [ (z-1)^{alpha+n} z^{beta+n} ]
//        = sum_{j=0}^{n} C(n,j) ff(alpha+n, j) ff(beta+n, n-j) z^j (z-1)^{n-j}
//
// (generalized product rule; ff is the falling factorial), normalized here to
// primitive integer coefficients with positive leading coefficient.  The
// result satisfies the hypergeometric-class ODE
//
//   z(1-z) J'' + [beta+1 - (alpha+beta+2) z] J' + n (alpha+beta+n+1) J = 0,
//
// the endpoint relations
//   (beta+1) J'(0) + n(alpha+beta+n+1) J(0) = 0,
//   -(alpha+1) J'(1) + n(alpha+beta+n+1) J(1) = 0,
// does not vanish at z = 0 or z = 1, and has n simple roots in (0,1) for the
// parameter families used by the analysis.  Violations of those structural
// facts are surfaced as exceptions, never silently repaired.
//
// Copyright (c) 2026 The veil authors.  MIT License; see LICENSE.

#pragma once

#include <veil/poly.hpp>
#include <veil/spectral.hpp>

#include <stdexcept>
#include <utility>
#include <vector>

namespace veil {

struct JacobiPoly {
  Poly J;            // primitive integer coefficients, positive leading coeff
  Rat alpha, beta;
  long n = 0;
  std::vector<std::pair<Rat, Rat>> root_brackets;  // n disjoint brackets in (0,1)
};

/// Rodrigues construction for arbitrary rational (alpha, beta), degree n >= 0.
inline Poly rodrigues_poly(const Rat& alpha, const Rat& beta, long n) {
  Poly acc;
  const Poly zm1{Rat(-1), Rat(1)};  // z - 1
  for (long j = 0; j <= n; ++j) {
    Rat coef = Rat(binomial(n, j)) * falling(alpha + Rat(n), j) *
               falling(beta + Rat(n), n - j);
    if (coef == 0) continue;
    acc += coef * (Poly::monomial(j) * pow_poly(zm1, n - j));
  }
  return acc;
}

/// Exact ODE residual: zero polynomial iff J solves the Jacobi equation.
inline Poly jacobi_ode_residual(const Poly& J, const Rat& alpha,
                                const Rat& beta, long n) {
  Poly z = Poly::z();
  Poly zz1 = z * Poly::one_minus_z();                       // z(1-z)
  Poly lin = Poly(beta + 1) - (alpha + beta + Rat(2)) * z;  // beta+1-(a+b+2)z
  Rat eig = Rat(n) * (alpha + beta + Rat(n) + Rat(1));
  return zz1 * J.derivative().derivative() + lin * J.derivative() + eig * J;
}

inline bool verify_jacobi_ode(const JacobiPoly& jp) {
  return jacobi_ode_residual(jp.J, jp.alpha, jp.beta, jp.n).is_zero();
}

/// Builds the normalized Jacobi polynomial for a Line2 spectral class, with
/// isolated roots.  Throws std::logic_error on structural violations
/// (non-Line2 input, root outside (0,1), multiple root, endpoint vanishing).
inline JacobiPoly build_jacobi(const SpectralClass& cls,
                               const Rat& bracket_width = Rat(1, 1024)) {
  if (!cls.is_line2())
    throw std::logic_error("build_jacobi: classification is not Line2");
  JacobiPoly jp;
  jp.alpha = cls.alpha;
  jp.beta = cls.beta;
  jp.n = cls.n;
  jp.J = primitive_part(rodrigues_poly(cls.alpha, cls.beta, cls.n));
  if (jp.J.deg() != jp.n)
    throw std::logic_error("build_jacobi: degree drop in Rodrigues output");
  if (jp.J.eval(Rat(0)) == 0 || jp.J.eval(Rat(1)) == 0)
    throw std::logic_error("build_jacobi: endpoint vanishing");
  if (!is_squarefree(jp.J)) throw std::logic_error("build_jacobi: multiple root");
  jp.root_brackets = isolate_roots(jp.J, Rat(0), Rat(1), bracket_width);
  if (static_cast<long>(jp.root_brackets.size()) != jp.n)
    throw std::logic_error("build_jacobi: root count in (0,1) != n");
  return jp;
}

/// Convenience: classify and build in one step (throws if not Line2).
inline JacobiPoly build_jacobi(int k, long p) {
  return build_jacobi(classify_eigenvalue(k, lambda_of(k, p)));
}

}  // namespace veil
