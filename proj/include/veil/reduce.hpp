// veil/reduce.hpp — exact reduction of integrals ∫ P(z) z^{e0}(1-z)^{e1} / J(z)^2 dz.
//
// Central identity: for the weight Ω = z^{e0}(1-z)^{e1} and a squarefree J
// with J(0)J(1) ≠ 0,
//
//     d/dz [ R · z^{e0+1}(1-z)^{e1+1} / J ]  =  T(R) · z^{e0}(1-z)^{e1} / J²
//
// with the first-order operator
//
//     T(R) = z(1-z) J R' + [ (e0+1 - (e0+e1+2) z) J + z(z-1) J' ] R .
//
// When e0+e1 is not an integer, T raises degree by exactly deg(J)+1, so
// every polynomial P splits uniquely as P = T(R) + Λ with deg Λ ≤ deg J,
// computed by back-substitution from the top degree of P downward.  Λ = 0
// certifies an algebraic primitive in closed form; Λ ≠ 0 certifies a
// transcendental one.  A companion general solver handles ansätze with
// integer exponents (where the shifted prefactor is not forced), used for
// elementary closed forms and exact membership tests.
//
// Copyright (c) 2026 The veil authors.  MIT License; see LICENSE.

#pragma once

#include <veil/kernel.hpp>
#include <veil/linalg.hpp>
#include <veil/poly.hpp>
#include <veil/rational.hpp>

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

namespace veil {

// ---------------------------------------------------------------------------
// Errors

enum class ReduceErrorKind {
  ExponentSumInteger,       // e0+e1 ∈ ℤ: the degree argument breaks down
  NonSquarefreeJ,           // J has a multiple root (or shared root in a product)
  EndpointRoot,             // J(0) = 0 or J(1) = 0
  ExponentDomain,           // exponent outside the domain of the requested op
  IncompatibleKernelClass,  // pairing integrands from different character classes
};

class ReduceError : public std::runtime_error {
 public:
  ReduceError(ReduceErrorKind k, const std::string& msg)
      : std::runtime_error(msg), kind(k) {}
  ReduceErrorKind kind;
};

// ---------------------------------------------------------------------------
// Data

/// The integrand P · z^{e0}(1-z)^{e1} / J².  J defaults to 1 (pure weight
/// case).  J must be squarefree with all roots in (0,1); products of two
/// spectral polynomials are allowed as long as they stay squarefree.
struct ReducedIntegrand {
  Poly P;
  KernelForm kernel;
  Poly J = Poly::one();
};

/// A closed-form primitive  numerator · z^{pre.e0}(1-z)^{pre.e1} / J.
struct ClosedForm {
  Poly numerator;
  KernelForm prefactor;
  Poly J = Poly::one();
};

/// P = T(R) + Λ with deg Λ ≤ deg J.  closed_form is set exactly when Λ = 0.
struct ReductionResult {
  Poly R;
  Poly Lambda;
  std::optional<ClosedForm> closed_form;
};

// ---------------------------------------------------------------------------
// Validation helpers

/// Checks that J is admissible: squarefree and nonvanishing at 0 and 1.
inline void require_admissible_J(const Poly& J) {
  if (J.is_zero())
    throw ReduceError(ReduceErrorKind::NonSquarefreeJ, "J must be nonzero");
  if (J.eval(Rat(0)) == 0 || J.eval(Rat(1)) == 0)
    throw ReduceError(ReduceErrorKind::EndpointRoot,
                      "J vanishes at an endpoint of (0,1)");
  if (!is_squarefree(J))
    throw ReduceError(ReduceErrorKind::NonSquarefreeJ, "J is not squarefree");
}

inline void require_noninteger_sum(const KernelForm& kf) {
  if (is_integer(kf.e0 + kf.e1))
    throw ReduceError(ReduceErrorKind::ExponentSumInteger,
                      "e0+e1 is an integer; reduction theorem inapplicable");
}

// ---------------------------------------------------------------------------
// The operator T

/// T(R) = z(1-z) J R' + [ (e0+1 - (e0+e1+2) z) J + z(z-1) J' ] R.
/// Raises degree by deg(J)+1 whenever e0+e1 ∉ ℤ.
inline Poly apply_T(const Poly& R, const Poly& J, const KernelForm& kf) {
  const Poly z = Poly::z();
  const Poly zz1 = z * (Poly::one() - z);  // z(1-z)
  const Rat s = kf.e0 + kf.e1 + Rat(2);
  // (e0+1) - s*z
  const Poly lin{kf.e0 + Rat(1), -s};
  return zz1 * J * R.derivative() + (lin * J - zz1 * J.derivative()) * R;
}

// ---------------------------------------------------------------------------
// reduce: the unique splitting P = T(R) + Λ

/// Splits P = T(R) + Λ, deg Λ ≤ deg J.  Preconditions: e0+e1 ∉ ℤ (else
/// ExponentSumInteger), J squarefree with J(0)J(1) ≠ 0 (else NonSquarefreeJ /
/// EndpointRoot).  Back-substitution: T raises degree by deg(J)+1, so the
/// coefficients of R are solved from the top degree of P downward; each step
/// divides by lc(J)·(deg J − d − (e0+e1+2)) ≠ 0.
inline ReductionResult reduce(const Poly& P, const Poly& J,
                              const KernelForm& kf) {
  require_noninteger_sum(kf);
  require_admissible_J(J);
  const long n = J.deg();
  const Rat cj = J.lc();
  const Rat s = kf.e0 + kf.e1 + Rat(2);
  Poly R = Poly::zero();
  Poly work = P;
  while (!work.is_zero() && work.deg() > n) {
    const long d = work.deg() - n - 1;
    // leading coefficient of T(z^d) is lc(J)·(n − d − s), nonzero since s ∉ ℤ
    const Rat c = work.lc() / (cj * (Rat(n - d) - s));
    const Poly term = Poly::monomial(d, c);
    R += term;
    work -= apply_T(term, J, kf);
  }
  ReductionResult out{std::move(R), std::move(work), std::nullopt};
  if (out.Lambda.is_zero())
    out.closed_form = ClosedForm{
        out.R, KernelForm{kf.e0 + Rat(1), kf.e1 + Rat(1)}, J};
  return out;
}

/// Exact check that a closed form differentiates back to the integrand:
/// d/dz [ numerator · z^{e0+1}(1-z)^{e1+1} / J ] = P · z^{e0}(1-z)^{e1} / J².
/// Via the T identity this is the polynomial identity T(numerator) = P.
inline bool closed_form_differentiates_to(const ClosedForm& cf, const Poly& P,
                                          const KernelForm& kf) {
  if (!(cf.prefactor.e0 == kf.e0 + Rat(1) && cf.prefactor.e1 == kf.e1 + Rat(1)))
    return false;
  return apply_T(cf.numerator, cf.J, kf) == P;
}

// ---------------------------------------------------------------------------
// mu: normalized value of the convergent integral over (0,1) when J = 1

/// μ(P)/B(e0+1,e1+1) = Σ_m p_m · (e0+1)_m / (e0+e1+2)_m, the exact ratio of
/// ∫₀¹ P z^{e0}(1-z)^{e1} dz to the Beta factor B(e0+1,e1+1).  Preconditions:
/// e0 > −1, e1 > −1 (convergence) and e0+e1 ∉ ℤ.  Since the Beta factor is
/// nonzero, this ratio is an exact zero-test for the integral.
inline Rat mu_ratio(const Poly& P, const KernelForm& kf) {
  if (!(kf.e0 > Rat(-1) && kf.e1 > Rat(-1)))
    throw ReduceError(ReduceErrorKind::ExponentDomain,
                      "mu requires e0 > -1 and e1 > -1");
  require_noninteger_sum(kf);
  Rat acc(0);
  Rat num(1), den(1);  // (e0+1)_m / (e0+e1+2)_m, built incrementally
  const auto& c = P.coeffs();
  for (size_t m = 0; m < c.size(); ++m) {
    if (m > 0) {
      num *= kf.e0 + Rat(1) + Rat(static_cast<long>(m) - 1);
      den *= kf.e0 + kf.e1 + Rat(2) + Rat(static_cast<long>(m) - 1);
    }
    acc += c[m] * num / den;
  }
  return acc;
}

// ---------------------------------------------------------------------------
// Ostrowski pairing: exact detection of  Γ₁ + d·Γ₂ ∈ algebraic functions

/// Brings two integrands over the same J and the same character class onto a
/// common kernel (componentwise minimum of exponents) by multiplying the
/// numerators with the monomial gaps z^{m0}(1-z)^{m1}, then reduces both.
/// Returns the unique constant d with Λ₁ + d·Λ₂ = 0 if it exists (d = 0 when
/// Λ₁ = 0), nullopt when the residuals are not proportional.  Throws
/// IncompatibleKernelClass when J or the character class differ.
inline std::optional<Rat> ostrowski_pair(const ReducedIntegrand& g1,
                                         const ReducedIntegrand& g2) {
  if (!(g1.J == g2.J))
    throw ReduceError(ReduceErrorKind::IncompatibleKernelClass,
                      "ostrowski_pair requires identical J");
  if (!same_character_class(g1.kernel, g2.kernel))
    throw ReduceError(ReduceErrorKind::IncompatibleKernelClass,
                      "ostrowski_pair requires matching character class");
  const KernelForm target{g1.kernel.e0 < g2.kernel.e0 ? g1.kernel.e0
                                                      : g2.kernel.e0,
                          g1.kernel.e1 < g2.kernel.e1 ? g1.kernel.e1
                                                      : g2.kernel.e1};
  auto lift = [&](const ReducedIntegrand& g) {
    long m0 = to_long(g.kernel.e0 - target.e0);
    long m1 = to_long(g.kernel.e1 - target.e1);
    Poly out = g.P;
    for (long i = 0; i < m0; ++i) out = out * Poly::z();
    for (long i = 0; i < m1; ++i) out = out * Poly::one_minus_z();
    return out;
  };
  const Poly L1 = reduce(lift(g1), g1.J, target).Lambda;
  const Poly L2 = reduce(lift(g2), g1.J, target).Lambda;
  if (L1.is_zero()) return Rat(0);
  if (L2.is_zero()) return std::nullopt;  // Λ₁ + d·Λ₂ = 0 unsolvable
  // proportionality: L1 * lc(L2) == L2 * lc(L1), then d = -lc(L1)/lc(L2)
  if (!(L1 * L2.lc() == L2 * L1.lc())) return std::nullopt;
  return -L1.lc() / L2.lc();
}

// ---------------------------------------------------------------------------
// General closed-form solver (integer exponents allowed)

namespace detail {

/// Prefactor exponent for the general ansatz: a non-integer exponent forces
/// the shifted power e+1; an integer exponent e ≥ 0 imposes no vanishing at
/// the point, so the prefactor exponent is 0; an integer e ≤ -2 forces e+1.
/// (e = -1 admits no power-function ansatz: the primitive needs a logarithm.)
inline std::optional<Rat> ansatz_exponent(const Rat& e) {
  if (!is_integer(e)) return e + Rat(1);
  if (e == Rat(-1)) return std::nullopt;
  if (e > Rat(-1)) return Rat(0);
  return e + Rat(1);
}

}  // namespace detail

/// Seeks an exact primitive  A = V · z^{g0}(1-z)^{g1} / J  of the integrand
/// P · z^{e0}(1-z)^{e1} / J², allowing integer exponents (where reduce() is
/// either inapplicable or its forced prefactor too restrictive).  The
/// derivative condition is the polynomial identity
///
///   z(1-z) J V' + [g0(1-z) - g1 z] J V - z(1-z) J' V = P z^{e0-g0+1}(1-z)^{e1-g1+1},
///
/// solved as an exact linear system (it is not triangular when g0+g1 ∈ ℤ hits
/// the exceptional degree).  Returns the verified closed form, or nullopt when
/// no primitive of this shape exists (e.g. a logarithm is unavoidable).
/// Requires J squarefree with J(0)J(1) ≠ 0.
inline std::optional<ClosedForm> closed_primitive(const ReducedIntegrand& g) {
  require_admissible_J(g.J);
  const auto g0 = detail::ansatz_exponent(g.kernel.e0);
  const auto g1 = detail::ansatz_exponent(g.kernel.e1);
  if (!g0 || !g1) return std::nullopt;
  // s_i = e_i - g_i + 1 are nonnegative integers (0 when forced, e_i+1 ≥ 1
  // when the exponent is an integer ≥ 0)
  const long s0 = to_long(g.kernel.e0 - *g0 + Rat(1));
  const long s1 = to_long(g.kernel.e1 - *g1 + Rat(1));
  Poly target = g.P;
  for (long i = 0; i < s0; ++i) target = target * Poly::z();
  for (long i = 0; i < s1; ++i) target = target * Poly::one_minus_z();
  if (target.is_zero()) {
    return ClosedForm{Poly::zero(), KernelForm{*g0, *g1}, g.J};
  }

  const long n = g.J.deg();
  const long D = target.deg();
  // T_g(z^d) has top coefficient lc(J)·(n - d - g0 - g1) at degree d+n+1;
  // when g0+g1 is an integer the degree d* = n - g0 - g1 is exceptional, so
  // allow V up to max(D - n - 1, d*) and solve the full linear system.
  long dv = D - n - 1;
  const Rat gsum = *g0 + *g1;
  if (is_integer(gsum)) {
    const long dstar = n - to_long(gsum);
    if (dstar > dv) dv = dstar;
  }
  if (dv < 0) dv = 0;

  const Poly z = Poly::z();
  const Poly zz1 = z * (Poly::one() - z);
  const Poly lin{*g0, -(*g0 + *g1)};  // g0(1-z) - g1 z = g0 - (g0+g1) z
  auto t_of = [&](const Poly& V) {
    return zz1 * g.J * V.derivative() + lin * g.J * V - zz1 * g.J.derivative() * V;
  };

  const size_t rows = static_cast<size_t>(dv + n + 2);  // degrees 0 .. dv+n+1
  const size_t colsn = static_cast<size_t>(dv + 1);
  Mat A(rows, Vec(colsn, Rat(0)));
  for (long d = 0; d <= dv; ++d) {
    const Poly img = t_of(Poly::monomial(d));
    for (long r = 0; r <= img.deg() && static_cast<size_t>(r) < rows; ++r)
      A[static_cast<size_t>(r)][static_cast<size_t>(d)] = img.at(r);
  }
  Vec b(rows, Rat(0));
  for (long r = 0; r <= D; ++r)
    b[static_cast<size_t>(r)] = target.at(r);
  auto sol = linsolve(A, b);
  if (!sol) return std::nullopt;
  Poly V(*sol);
  // independent verification by exact differentiation
  if (!(t_of(V) == target)) return std::nullopt;
  return ClosedForm{std::move(V), KernelForm{*g0, *g1}, g.J};
}

/// One Hermite step for a rational integrand: writes P/J² = d/dz(A/J) + B/J
/// with deg A < deg J; the pair (A, B) is unique.  ∫P/J² is a rational
/// function (plus a polynomial) iff J divides B: J is squarefree, so any
/// nonzero remainder of B mod J contributes genuine logarithms.
inline std::optional<std::pair<Poly, Poly>> hermite_step(const Poly& P,
                                                         const Poly& J) {
  require_admissible_J(J);
  const long n = J.deg();
  if (n == 0) return std::nullopt;  // not a rational-in-J question
  // P = A'J - AJ' + BJ with deg A ≤ n-1, deg B ≤ max(deg P - n, n - 1)
  long db = P.deg() - n;
  if (db < n - 1) db = n - 1;
  const size_t ca = static_cast<size_t>(n);        // A coefficients
  const size_t cb = static_cast<size_t>(db + 1);   // B coefficients
  long dmax = P.deg();
  if (2 * n - 2 > dmax) dmax = 2 * n - 2;
  if (db + n > dmax) dmax = db + n;
  const size_t rows = static_cast<size_t>(dmax + 1);
  Mat M(rows, Vec(ca + cb, Rat(0)));
  auto put = [&](const Poly& p, size_t col) {
    for (long r = 0; r <= p.deg() && static_cast<size_t>(r) < rows; ++r)
      M[static_cast<size_t>(r)][col] += p.at(r);
  };
  for (size_t j = 0; j < ca; ++j) {
    const Poly mono = Poly::monomial(static_cast<long>(j));
    put(mono.derivative() * J - mono * J.derivative(), j);
  }
  for (size_t j = 0; j < cb; ++j)
    put(Poly::monomial(static_cast<long>(j)) * J, ca + j);
  Vec b(rows, Rat(0));
  for (long r = 0; r <= P.deg(); ++r) b[static_cast<size_t>(r)] = P.at(r);
  auto sol = linsolve(M, b);
  if (!sol) return std::nullopt;
  Poly A(Vec(sol->begin(), sol->begin() + static_cast<long>(ca)));
  Poly B(Vec(sol->begin() + static_cast<long>(ca), sol->end()));
  return std::make_pair(std::move(A), std::move(B));
}

// ---------------------------------------------------------------------------
// decide_algebraic

enum class AlgVerdict {
  AlgebraicExact,        // Λ = 0: closed form R·z^{e0+1}(1-z)^{e1+1}/J
  TranscendentalExact,   // Λ ≠ 0: certified transcendental
  AlgebraicByMonodromy,  // integer exponent: algebraic by the local-character
                         // argument; closed form on request
};

struct AlgebraicityResult {
  AlgVerdict verdict;
  std::optional<ClosedForm> closed_form;
  std::optional<Poly> lambda;  // set on the reduce path
};

/// Decides whether ∫ P z^{e0}(1-z)^{e1}/J² dz is algebraic.  An integer
/// exponent (always ≥ 0 in the families this library builds; asserted here)
/// short-circuits to AlgebraicByMonodromy — the closed form is computed by
/// the general solver only when want_closed_form is set.  Otherwise the
/// reduction P = T(R) + Λ decides: Λ = 0 ⟹ AlgebraicExact with closed form;
/// Λ ≠ 0 ⟹ TranscendentalExact.
inline AlgebraicityResult decide_algebraic(const ReducedIntegrand& g,
                                           bool want_closed_form = false) {
  const bool i0 = is_integer(g.kernel.e0);
  const bool i1 = is_integer(g.kernel.e1);
  if (i0 || i1) {
    if ((i0 && g.kernel.e0 == Rat(-1)) || (i1 && g.kernel.e1 == Rat(-1)))
      throw ReduceError(ReduceErrorKind::ExponentDomain,
                        "integer exponent -1: logarithmic case out of scope");
    AlgebraicityResult out{AlgVerdict::AlgebraicByMonodromy, std::nullopt,
                           std::nullopt};
    if (want_closed_form) out.closed_form = closed_primitive(g);
    return out;
  }
  auto red = reduce(g.P, g.J, g.kernel);
  if (red.Lambda.is_zero())
    return {AlgVerdict::AlgebraicExact, red.closed_form, red.Lambda};
  return {AlgVerdict::TranscendentalExact, std::nullopt, red.Lambda};
}

}  // namespace veil
