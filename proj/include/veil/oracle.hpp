#pragma once
// Certified-precision numerics for integrals of P(z) z^{e0} (1-z)^{e1} / J(z)^2.
//
// Everything in this header is *numeric*: each result carries an error bound
// and a precision tag, and nothing here ever upgrades a numeric observation to
// an exact statement.  The quadrature rules are endpoint-weighted (Gauss-Jacobi
// nodes chosen for the specific exponent pair), never uniform composite rules
// pushed into an endpoint singularity.  Contour integrals run over explicit
// polylines with branch-continuous determinations of log z and log(1-z).
//
// Independence from the exact layer: quadrature is validated against Euler
// Beta values and against the exact moment ratios (different algorithms), and
// the double-pole residue formula is validated once per process against a
// direct circular-contour quadrature before first use.

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <functional>
#include <map>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "veil/kernel.hpp"
#include "veil/mp.hpp"
#include "veil/poly.hpp"
#include "veil/rational.hpp"
#include "veil/reduce.hpp"

namespace veil {

// ---------------------------------------------------------------------------
// Errors, precision context, tagged values
// ---------------------------------------------------------------------------

enum class OracleErrorKind {
  PathHitsPole,        // integration path meets (or grazes) a zero of J
  PrecisionNotReached, // refinement budget exhausted before the tolerance
  Underdetermined,     // relation detection: basis not pairwise independent
  Unstable,            // relation detection: solve ill-conditioned or unstable
  Domain,              // precondition violated (exponents, enclosures, sizes)
};

class OracleError : public std::runtime_error {
 public:
  OracleError(OracleErrorKind k, const std::string& msg)
      : std::runtime_error(msg), kind(k) {}
  OracleErrorKind kind;
};

/// Shared precision policy.  `zero_tolerance` is what "numerically zero"
/// means at this precision; every numeric decision is taken against it.
struct PrecisionContext {
  unsigned working_bits = 256;
  int max_refinement = 6;

  MpReal zero_tolerance() const {
    return pow2_mp(-static_cast<long>(working_bits) / 2);
  }
  PrecisionContext with_bits(unsigned bits) const {
    PrecisionContext c = *this;
    c.working_bits = bits;
    return c;
  }
};

/// A numeric result: value, a rigorous-in-practice error bound (refinement
/// difference plus a rounding floor), the precision it was computed at, and
/// whether the bound met the context tolerance.
struct NumericValue {
  MpComplex value;
  MpReal bound;
  unsigned bits = 0;
  bool converged = false;
};

namespace detail {

inline MpReal round_mp(const MpReal& x) { return floor(MpReal(x + MpReal(0.5))); }

/// Rounding floor used in all bounds: ~2^{16-bits} relative to the value.
inline MpReal bound_floor(unsigned bits, const MpReal& magnitude) {
  return pow2_mp(16 - static_cast<long>(bits)) * (MpReal(1) + magnitude);
}

// ---------------------------------------------------------------------------
// Jacobi polynomials P_n^{(a,b)} and Gauss-Jacobi rules on (0,1)
// ---------------------------------------------------------------------------

/// Value and derivative of the Jacobi polynomial P_n^{(a,b)} at x, by the
/// standard three-term recurrence (derivative carried alongside).
template <class F>
std::pair<F, F> jacobi_pn(long n, const F& a, const F& b, const F& x) {
  F p0(1), d0(0);
  if (n == 0) return {p0, d0};
  F p1 = (a + b + F(2)) / F(2) * x + (a - b) / F(2);
  F d1 = (a + b + F(2)) / F(2);
  for (long m = 2; m <= n; ++m) {
    F fm(static_cast<int>(m));
    F s = F(2) * fm + a + b;
    F c1 = F(2) * fm * (fm + a + b) * (s - F(2));
    F c2 = (s - F(1)) * (a - b) * (a + b);
    F c3 = (s - F(2)) * (s - F(1)) * s;
    F c4 = F(2) * (fm + a - F(1)) * (fm + b - F(1)) * s;
    F p2 = ((c2 + c3 * x) * p1 - c4 * p0) / c1;
    F d2 = ((c2 + c3 * x) * d1 + c3 * p1 - c4 * d0) / c1;
    p0 = p1;
    p1 = p2;
    d0 = d1;
    d1 = d2;
  }
  return {p1, d1};
}

/// Nodes z_i in (0,1) and weights W_i for the rule
///   integral_0^1 h(z) z^{e0} (1-z)^{e1} dz  ~=  sum_i W_i h(z_i),
/// exact for polynomial h up to degree 2n-1.  Requires e0 > -1 and e1 > -1.
/// Cached per (e0, e1, n, bits); thread-safe.
inline const std::vector<std::pair<MpReal, MpReal>>& gauss_jacobi_nodes(
    const Rat& e0, const Rat& e1, long n, unsigned bits) {
  using Key = std::tuple<Rat, Rat, long, unsigned>;
  static std::map<Key, std::vector<std::pair<MpReal, MpReal>>> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(Key{e0, e1, n, bits});
  if (it != cache.end()) return it->second;

  if (e0 <= Rat(-1) || e1 <= Rat(-1))
    throw OracleError(OracleErrorKind::Domain,
                      "gauss_jacobi_nodes: exponents must exceed -1");

  PrecisionGuard guard(bits + 16);
  // Standard orientation: weight (1-x)^alpha (1+x)^beta on (-1,1) maps to
  // z^{e0} (1-z)^{e1} on (0,1) under z = (1+x)/2 with alpha = e1, beta = e0.
  const MpReal a = to_mp(e1), b = to_mp(e0);
  const double ad = static_cast<double>(a), bd = static_cast<double>(b);

  // Locate roots by a sign scan of the double-precision recurrence, then
  // polish each bracket with safeguarded Newton at full precision.
  std::vector<std::pair<double, double>> brackets;
  for (long m = std::max<long>(8 * n, 64); brackets.size() != size_t(n);
       m *= 4) {
    brackets.clear();
    double xp = -1.0;
    double vp = jacobi_pn<double>(n, ad, bd, xp).first;
    for (long j = 1; j <= m; ++j) {
      double x = -std::cos(3.14159265358979323846 * double(j) / double(m));
      double v = jacobi_pn<double>(n, ad, bd, x).first;
      if ((vp < 0 && v > 0) || (vp > 0 && v < 0)) brackets.push_back({xp, x});
      xp = x;
      vp = v;
    }
    if (m > 512 * std::max<long>(n, 1))
      throw std::logic_error("gauss_jacobi_nodes: root scan failed");
  }

  const MpReal newton_tol = pow2_mp(-static_cast<long>(bits) - 8);
  // Weight prefactor: Gamma(n+a+1) Gamma(n+b+1) / (n! Gamma(n+a+b+1)); the
  // 2^{a+b+1} of the classical formula cancels against the (0,1) rescaling.
  const MpReal nf = MpReal(static_cast<long>(n));
  const MpReal cfac = tgamma(MpReal(nf + a + 1)) * tgamma(MpReal(nf + b + 1)) /
                      (tgamma(MpReal(nf + 1)) * tgamma(MpReal(nf + a + b + 1)));

  std::vector<std::pair<MpReal, MpReal>> out;
  out.reserve(n);
  for (auto [lo_d, hi_d] : brackets) {
    // Safeguarded Newton: first shrink the bracket using the sign at the
    // current point, then take the Newton step if it stays inside the
    // updated bracket and bisect otherwise.  The bisection fallback always
    // moves, so the loop cannot stall on a non-root.
    MpReal lo(lo_d), hi(hi_d);
    bool neg_lo = jacobi_pn<MpReal>(n, a, b, lo).first < 0;
    MpReal x = (lo + hi) / 2;
    for (int iter = 0; iter < 2 * static_cast<int>(bits); ++iter) {
      auto [p, dp] = jacobi_pn<MpReal>(n, a, b, x);
      if ((p < 0) == neg_lo)
        lo = x;
      else
        hi = x;
      MpReal next = (lo + hi) / 2;
      if (dp != 0) {
        MpReal cand = MpReal(x - p / dp);
        if (cand > lo && cand < hi) next = cand;
      }
      MpReal step = abs(MpReal(next - x));
      x = next;
      if (step < newton_tol) break;
    }
    MpReal dpx = jacobi_pn<MpReal>(n, a, b, x).second;
    MpReal w = cfac / ((MpReal(1) - x * x) * dpx * dpx);
    out.push_back({MpReal((MpReal(1) + x) / 2), w});
  }
  std::sort(out.begin(), out.end(),
            [](const auto& l, const auto& r) { return l.first < r.first; });
  auto [pos, ok] = cache.emplace(Key{e0, e1, n, bits}, std::move(out));
  (void)ok;
  return pos->second;
}

/// Refinement driver: evaluates `rule(n)` at doubling node counts until the
/// successive difference (plus a rounding floor) meets the tolerance or the
/// refinement budget runs out.  Returns the last value with its bound.
template <class RuleFn>
NumericValue refine_to_tolerance(RuleFn&& rule, long n0,
                                 const PrecisionContext& ctx) {
  PrecisionGuard guard(ctx.working_bits + 16);
  const MpReal tol = ctx.zero_tolerance();
  long n = n0;
  MpComplex prev = rule(n);
  NumericValue best;
  best.bits = ctx.working_bits;
  for (int round = 0; round < std::max(ctx.max_refinement, 1); ++round) {
    n *= 2;
    MpComplex cur = rule(n);
    MpReal diff = abs_c(cur - prev);
    best.value = cur;
    best.bound = MpReal(diff + bound_floor(ctx.working_bits, abs_c(cur)));
    best.converged = best.bound < tol;
    if (best.converged) return best;
    prev = cur;
  }
  return best;  // PrecisionNotReached is soft: caller sees converged == false
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Real-segment quadrature
// ---------------------------------------------------------------------------

namespace detail {

/// One pass of the (0,1) Gauss-Jacobi rule applied to h(z) = P(z)/J(z)^2.
inline MpReal gj_pass(const Poly& P, const Poly& J, const Rat& e0,
                      const Rat& e1, long n, unsigned bits) {
  const auto& nodes = gauss_jacobi_nodes(e0, e1, n, bits);
  MpReal acc(0);
  for (const auto& [z, w] : nodes) {
    MpReal jv = J.eval_as<MpReal>(z);
    acc += w * P.eval_as<MpReal>(z) / (jv * jv);
  }
  return acc;
}

}  // namespace detail

/// Numeric value of  integral_0^1 P z^{e0} (1-z)^{e1} / J^2 dz.
/// Preconditions: e0 > -1 and e1 > -1 (convergence) and J has no root on
/// [0, 1] - a root inside (0,1) raises PathHitsPole (principal values are
/// deliberately not supported; roots are handled via residues and deformed
/// paths in linear_forms, never by segment quadrature through a pole).
inline NumericValue quadrature_segment(const ReducedIntegrand& g,
                                       const PrecisionContext& ctx) {
  require_admissible_J(g.J);
  if (g.kernel.e0 <= Rat(-1) || g.kernel.e1 <= Rat(-1))
    throw OracleError(OracleErrorKind::Domain,
                      "quadrature_segment: exponents must exceed -1");
  if (count_roots_open(g.J, Rat(0), Rat(1)) != 0)
    throw OracleError(OracleErrorKind::PathHitsPole,
                      "quadrature_segment: J vanishes inside (0,1)");
  return detail::refine_to_tolerance(
      [&](long n) {
        return MpComplex(detail::gj_pass(g.P, g.J, g.kernel.e0, g.kernel.e1, n,
                                         ctx.working_bits));
      },
      32, ctx);
}

namespace detail {

/// Quadrature over a subinterval [a,b] of (0,1), with the endpoint weight
/// activated only where the endpoint of the subinterval is 0 or 1.  The
/// change of variable keeps all weighted singular behaviour inside the rule.
inline MpReal subsegment_pass(const ReducedIntegrand& g, const Rat& a,
                              const Rat& b, long n, unsigned bits) {
  const Rat& e0 = g.kernel.e0;
  const Rat& e1 = g.kernel.e1;
  if (a == Rat(0) && b == Rat(1)) return gj_pass(g.P, g.J, e0, e1, n, bits);
  if (a == Rat(0)) {
    // z = b u:  b^{e0+1} * integral u^{e0} [(1-bu)^{e1} P/J^2](bu) du.
    const auto& nodes = gauss_jacobi_nodes(e0, Rat(0), n, bits);
    const MpReal bm = to_mp(b);
    MpReal acc(0);
    for (const auto& [u, w] : nodes) {
      MpReal z = MpReal(bm * u);
      MpReal jv = g.J.eval_as<MpReal>(z);
      acc += w * pow_mp(MpReal(1 - z), e1) * g.P.eval_as<MpReal>(z) / (jv * jv);
    }
    return MpReal(pow_mp(bm, e0 + 1) * acc);
  }
  if (b == Rat(1)) {
    // z = a + (1-a) u:  (1-a)^{e1+1} * integral (1-u)^{e1} [z^{e0} P/J^2] du.
    const auto& nodes = gauss_jacobi_nodes(Rat(0), e1, n, bits);
    const MpReal am = to_mp(a), wm = to_mp(Rat(1) - a);
    MpReal acc(0);
    for (const auto& [u, w] : nodes) {
      MpReal z = MpReal(am + wm * u);
      MpReal jv = g.J.eval_as<MpReal>(z);
      acc += w * pow_mp(z, e0) * g.P.eval_as<MpReal>(z) / (jv * jv);
    }
    return MpReal(pow_mp(wm, e1 + 1) * acc);
  }
  // Interior piece: plain Gauss-Legendre, full integrand is smooth there.
  const auto& nodes = gl_nodes(n, bits);
  const MpReal mid = to_mp((a + b) / 2), half = to_mp((b - a) / 2);
  MpReal acc(0);
  for (const auto& [x, w] : nodes) {
    MpReal z = MpReal(mid + half * x);
    MpReal jv = g.J.eval_as<MpReal>(z);
    acc += w * g.P.eval_as<MpReal>(z) * pow_mp(z, g.kernel.e0) *
           pow_mp(MpReal(1 - z), g.kernel.e1) / (jv * jv);
  }
  return MpReal(half * acc);
}

}  // namespace detail

/// Numeric value of the same integrand restricted to [a,b], 0 <= a < b <= 1.
/// J must be root-free on the closed subinterval.
inline NumericValue quadrature_subsegment(const ReducedIntegrand& g,
                                          const Rat& a, const Rat& b,
                                          const PrecisionContext& ctx) {
  if (!(Rat(0) <= a && a < b && b <= Rat(1)))
    throw OracleError(OracleErrorKind::Domain,
                      "quadrature_subsegment: need 0 <= a < b <= 1");
  if (g.kernel.e0 <= Rat(-1) || g.kernel.e1 <= Rat(-1))
    throw OracleError(OracleErrorKind::Domain,
                      "quadrature_subsegment: exponents must exceed -1");
  if (count_roots_open(g.J, a, b) != 0 || g.J.eval(a) == 0 ||
      g.J.eval(b) == 0)
    throw OracleError(OracleErrorKind::PathHitsPole,
                      "quadrature_subsegment: J vanishes on the subinterval");
  return detail::refine_to_tolerance(
      [&](long n) {
        return MpComplex(detail::subsegment_pass(g, a, b, n, ctx.working_bits));
      },
      32, ctx);
}

// ---------------------------------------------------------------------------
// Branch-tracked polyline contours
// ---------------------------------------------------------------------------

namespace detail {

/// Continuous determination of (log z, log(1-z)) along a path: each new value
/// takes the principal logarithm adjusted by the multiple of 2*pi*i nearest
/// to the previously seen branch.  Consecutive evaluation points must subtend
/// argument steps below pi, which the polyline builders below guarantee.
struct BranchTracker {
  bool init = false;
  MpReal arg0, arg1;

  std::pair<MpComplex, MpComplex> logs(const MpComplex& z) {
    const MpReal two_pi = 2 * mp_pi();
    MpComplex l0 = log_c(z);
    MpComplex l1 = log_c(MpComplex(MpReal(1)) - z);
    if (init) {
      l0.im += two_pi * round_mp(MpReal((arg0 - l0.im) / two_pi));
      l1.im += two_pi * round_mp(MpReal((arg1 - l1.im) / two_pi));
    }
    arg0 = l0.im;
    arg1 = l1.im;
    init = true;
    return {l0, l1};
  }
};

/// One pass over a polyline with n Gauss-Legendre nodes per segment.
inline MpComplex polyline_pass(const ReducedIntegrand& g,
                               const std::vector<MpComplex>& pts, long n,
                               unsigned bits) {
  if (pts.size() < 2)
    throw OracleError(OracleErrorKind::Domain,
                      "polyline: need at least two points");
  const auto& nodes = gl_nodes(n, bits);
  const MpReal pole_tol = pow2_mp(-static_cast<long>(bits) / 2);
  const MpComplex e0(to_mp(g.kernel.e0)), e1(to_mp(g.kernel.e1));
  BranchTracker trk;
  MpComplex acc;
  for (size_t s = 0; s + 1 < pts.size(); ++s) {
    MpComplex mid = (pts[s] + pts[s + 1]) * MpComplex(MpReal(0.5));
    MpComplex half = (pts[s + 1] - pts[s]) * MpComplex(MpReal(0.5));
    MpComplex seg;
    for (const auto& [x, w] : nodes) {
      MpComplex z = mid + half * MpComplex(MpReal(x));
      MpComplex jv = g.J.eval_as<MpComplex>(z);
      if (abs_c(jv) < pole_tol && g.J.deg() > 0)
        throw OracleError(OracleErrorKind::PathHitsPole,
                          "polyline: path grazes a zero of J");
      auto [l0, l1] = trk.logs(z);
      MpComplex omega = exp_c(e0 * l0 + e1 * l1);
      seg += MpComplex(MpReal(w)) * g.P.eval_as<MpComplex>(z) * omega /
             (jv * jv);
    }
    acc += half * seg;
  }
  return acc;
}

}  // namespace detail

/// Integral of P z^{e0} (1-z)^{e1} / J^2 along the polyline through `pts`,
/// with branch-continuous powers.  Homotopic paths (avoiding 0, 1 and the
/// zeros of J) give identical values, so arcs may be approximated by chords.
inline NumericValue contour_integral(const ReducedIntegrand& g,
                                     const std::vector<MpComplex>& pts,
                                     const PrecisionContext& ctx) {
  return detail::refine_to_tolerance(
      [&](long n) { return detail::polyline_pass(g, pts, n, ctx.working_bits); },
      24, ctx);
}

// ---------------------------------------------------------------------------
// Double-pole residues
// ---------------------------------------------------------------------------

namespace detail {

/// Residue of g/J^2 at a simple root x of J, where g = P z^{e0} (1-z)^{e1}:
///   res = (g'(x) J'(x) - g(x) J''(x)) / J'(x)^3,
/// with g' = [P' + P (e0/z - e1/(1-z))] z^{e0} (1-z)^{e1}.  Real x in (0,1).
inline MpReal residue_formula_at(const Poly& P, const KernelForm& kf,
                                 const Poly& J, const MpReal& x) {
  MpReal omega = pow_mp(x, kf.e0) * pow_mp(MpReal(1 - x), kf.e1);
  MpReal pv = P.eval_as<MpReal>(x);
  MpReal gp = (P.derivative().eval_as<MpReal>(x) +
               pv * (to_mp(kf.e0) / x - to_mp(kf.e1) / (MpReal(1) - x))) *
              omega;
  MpReal gv = pv * omega;
  MpReal j1 = J.derivative().eval_as<MpReal>(x);
  MpReal j2 = J.derivative().derivative().eval_as<MpReal>(x);
  return MpReal((gp * j1 - gv * j2) / (j1 * j1 * j1));
}

/// Newton refinement of the root of J isolated by [lo, hi] (exactly one
/// simple root inside, endpoints not roots).
inline MpReal refine_root(const Poly& J, Rat lo, Rat hi, unsigned bits) {
  PrecisionGuard guard(bits + 16);
  const MpReal tol = pow2_mp(-static_cast<long>(bits) - 8);
  const Poly dJ = J.derivative();
  MpReal lom = to_mp(lo), him = to_mp(hi);
  const bool neg_lo = J.eval(lo) < 0;
  MpReal x = (lom + him) / 2;
  for (int iter = 0; iter < 2 * static_cast<int>(bits); ++iter) {
    MpReal f = J.eval_as<MpReal>(x);
    if ((f < 0) == neg_lo)
      lom = x;
    else
      him = x;
    MpReal next = (lom + him) / 2;
    MpReal df = dJ.eval_as<MpReal>(x);
    if (df != 0) {
      MpReal cand = MpReal(x - f / df);
      if (cand > lom && cand < him) next = cand;
    }
    MpReal step = abs(MpReal(next - x));
    x = next;
    if (step < tol) break;
  }
  return x;
}

/// Direct circular-contour evaluation of the same residue: the trapezoid rule
/// on |z - center| = radius (spectrally accurate for periodic analytic
/// integrands), used to validate the closed formula and in cross-checks.
inline MpComplex residue_by_contour(const Poly& P, const KernelForm& kf,
                                    const Poly& J, const MpReal& center,
                                    const MpReal& radius, long npts,
                                    unsigned bits) {
  PrecisionGuard guard(bits + 16);
  const MpReal pi = mp_pi();
  MpComplex acc;
  for (long j = 0; j < npts; ++j) {
    MpReal th = 2 * pi * MpReal(j) / MpReal(npts);
    MpReal c = cos(th), s = sin(th);
    MpComplex z(MpReal(center + radius * c), MpReal(radius * s));
    MpComplex zprime(MpReal(-radius * s), MpReal(radius * c));
    // For a circle around a real root inside (0,1) with small radius, both z
    // and 1-z stay in the right half plane, so principal powers are already
    // branch-continuous along the whole circle.
    MpComplex jv = J.eval_as<MpComplex>(z);
    MpComplex omega = pow_c(z, kf.e0) * pow_c(MpComplex(MpReal(1)) - z, kf.e1);
    acc += P.eval_as<MpComplex>(z) * omega / (jv * jv) * zprime;
  }
  // residue = (1/2 pi i) * closed integral; trapezoid step is 2 pi / npts,
  // so res = (1/(i npts)) * sum f(z_j) z'(theta_j).
  MpComplex sum = acc * MpComplex(MpReal(1) / MpReal(npts));
  return {sum.im, MpReal(-sum.re)};
}

/// One-time validation of the closed residue formula against the direct
/// circular-contour quadrature, on a fixed instance with known geometry.
/// Runs once per process before the formula is first used.
inline void validate_residue_formula_once() {
  static std::once_flag flag;
  std::call_once(flag, [] {
    const unsigned bits = 192;
    PrecisionGuard guard(bits + 16);
    Poly J{Rat(1), Rat(-5), Rat(6)};        // (2z-1)(3z-1), roots 1/2 and 1/3
    Poly P{Rat(5), Rat(2), Rat(3)};
    KernelForm kf{Rat(1, 3), Rat(-1, 2)};
    MpReal x = refine_root(J, Rat(2, 5), Rat(3, 5), bits);
    MpReal direct = residue_formula_at(P, kf, J, x);
    MpComplex loop = residue_by_contour(P, kf, J, to_mp(Rat(1, 2)),
                                        to_mp(Rat(1, 12)), 256, bits);
    MpReal err = abs_c(loop - MpComplex(direct));
    if (!(err < pow2_mp(-80) * (MpReal(1) + abs(direct))))
      throw std::logic_error(
          "residue formula failed its contour validation check");
  });
}

}  // namespace detail

/// Residue of P z^{e0} (1-z)^{e1} / J^2 at the simple root of J isolated by
/// the rational bracket [lo, hi] in (0,1).  The bracket must contain exactly
/// one root; a bracket that is too coarse (several roots, or a root at an
/// endpoint) is refined exactly up to max_refinement rounds and rejected if
/// it cannot be made isolating.  The closed formula is validated once per
/// process against a direct circular-contour quadrature before first use.
inline NumericValue residue_double_pole(const Poly& P, const KernelForm& kf,
                                        const Poly& J, Rat lo, Rat hi,
                                        const PrecisionContext& ctx) {
  require_admissible_J(J);
  if (!(Rat(0) < lo && lo < hi && hi < Rat(1)))
    throw OracleError(OracleErrorKind::Domain,
                      "residue_double_pole: bracket must lie inside (0,1)");
  detail::validate_residue_formula_once();

  // Exact bracket repair: endpoints must not be roots, and exactly one root
  // must lie inside.  Shrink with Sturm counts; reject ambiguous enclosures.
  for (int round = 0; J.eval(lo) == 0 || J.eval(hi) == 0; ++round) {
    if (round >= std::max(ctx.max_refinement, 1))
      throw OracleError(OracleErrorKind::Domain,
                        "residue_double_pole: bracket endpoint sits on a root");
    if (J.eval(lo) == 0) lo = lo + (hi - lo) / 1024;
    if (J.eval(hi) == 0) hi = hi - (hi - lo) / 1024;
  }
  // A coarse-but-isolating enclosure is acceptable (the safeguarded Newton
  // handles any width), but an enclosure holding several roots is ambiguous
  // and cannot be repaired without guessing which root was meant.
  if (count_roots_open(J, lo, hi) != 1)
    throw OracleError(OracleErrorKind::Domain,
                      "residue_double_pole: enclosure does not isolate one "
                      "simple root");

  const unsigned hi_bits = ctx.working_bits + 48;
  PrecisionGuard guard(hi_bits + 16);
  MpReal root = detail::refine_root(J, lo, hi, hi_bits);
  MpReal v_hi = detail::residue_formula_at(P, kf, J, root);
  MpReal v_lo;
  {
    PrecisionGuard coarse(ctx.working_bits + 16);
    MpReal root_lo = detail::refine_root(J, lo, hi, ctx.working_bits);
    v_lo = detail::residue_formula_at(P, kf, J, root_lo);
  }
  NumericValue out;
  out.bits = ctx.working_bits;
  out.value = MpComplex(v_hi);
  out.bound = MpReal(abs(MpReal(v_hi - v_lo)) +
                     detail::bound_floor(ctx.working_bits, abs(v_hi)));
  out.converged = out.bound < ctx.zero_tolerance();
  return out;
}

// ---------------------------------------------------------------------------
// Deformed unit-interval functional and the residue functionals
// ---------------------------------------------------------------------------

/// The dual functionals attached to one integrand: L0 is the (0,1) integral
/// (deformed into the upper half plane when J vanishes inside the interval),
/// and residues[i] = 2 pi i * residue at the i-th root of J in (0,1), roots
/// in ascending order.  These are cross-check functionals: exactness claims
/// always come from the exact layer, never from these numbers.
struct LinearForms {
  NumericValue l0;
  std::vector<NumericValue> residues;
  std::vector<std::pair<Rat, Rat>> root_brackets;
};

inline LinearForms linear_forms(const ReducedIntegrand& g,
                                const PrecisionContext& ctx) {
  require_admissible_J(g.J);
  if (g.kernel.e0 <= Rat(-1) || g.kernel.e1 <= Rat(-1))
    throw OracleError(OracleErrorKind::Domain,
                      "linear_forms: exponents must exceed -1");
  LinearForms out;
  out.root_brackets = isolate_roots(g.J, Rat(0), Rat(1), Rat(1, 1024));
  std::sort(out.root_brackets.begin(), out.root_brackets.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });

  if (out.root_brackets.empty()) {
    out.l0 = quadrature_segment(g, ctx);
    return out;
  }

  // Path 0 -> rho0 -> rho0 + i d -> (1 - rho1) + i d -> 1 - rho1 -> 1,
  // passing above every root of J.  The two real end pieces carry the
  // endpoint weights; the rectangular detour is pole-free by construction.
  const Rat lo_min = out.root_brackets.front().first;
  const Rat hi_max = out.root_brackets.back().second;
  const Rat rho0 = lo_min / 2;
  const Rat rho1 = (Rat(1) - hi_max) / 2;
  Rat delta = std::min({rho0, rho1, Rat(1, 8)});

  NumericValue left = quadrature_subsegment(g, Rat(0), rho0, ctx);
  NumericValue right = quadrature_subsegment(g, Rat(1) - rho1, Rat(1), ctx);
  PrecisionGuard guard(ctx.working_bits + 16);
  const MpReal d = to_mp(delta);
  std::vector<MpComplex> detour = {
      MpComplex(to_mp(rho0)),
      {to_mp(rho0), d},
      {to_mp(Rat(1) - rho1), d},
      MpComplex(to_mp(Rat(1) - rho1)),
  };
  NumericValue mid = contour_integral(g, detour, ctx);

  out.l0.bits = ctx.working_bits;
  out.l0.value = left.value + mid.value + right.value;
  out.l0.bound = MpReal(left.bound + mid.bound + right.bound);
  out.l0.converged = left.converged && mid.converged && right.converged;

  const MpReal two_pi = 2 * mp_pi();
  for (const auto& [blo, bhi] : out.root_brackets) {
    NumericValue r = residue_double_pole(g.P, g.kernel, g.J, blo, bhi, ctx);
    NumericValue form;
    form.bits = r.bits;
    form.value = MpComplex(MpReal(-two_pi * r.value.im),
                           MpReal(two_pi * r.value.re));
    form.bound = MpReal(two_pi * r.bound +
                        detail::bound_floor(ctx.working_bits, abs_c(form.value)));
    form.converged = r.converged;
    out.residues.push_back(std::move(form));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Pochhammer double-loop functional
// ---------------------------------------------------------------------------

/// Closed commutator path A B A^{-1} B^{-1} based near the middle of (0,1):
/// A loops once counterclockwise around 0 at radius rho0, B once around 1 at
/// radius rho1, connected at height delta above the real axis.  Circles are
/// walked as inscribed polygons (path independence in the homotopy class
/// makes chords exact).  The commutator kills every single-valued primitive,
/// so this functional vanishes on exact forms and pairs with the regularized
/// (0,1) integral through the monodromy characters on the rest.
inline std::vector<MpComplex> pochhammer_path(const Rat& rho0, const Rat& rho1,
                                              const Rat& delta,
                                              unsigned bits = 128,
                                              int arc_segments = 16) {
  if (!(Rat(0) < delta && delta < rho0 && delta < rho1 && rho0 < Rat(1, 2) &&
        rho1 < Rat(1, 2)))
    throw OracleError(OracleErrorKind::Domain,
                      "pochhammer_path: need 0 < delta < rho0, rho1 < 1/2");
  PrecisionGuard guard(bits + 16);
  const MpReal pi = mp_pi();
  const MpReal d = to_mp(delta), r0 = to_mp(rho0), r1 = to_mp(rho1);
  const MpComplex base(to_mp(Rat(1, 2)), d);

  // Entry angles chosen so the loops begin at height delta.
  const MpReal th0 = asin(MpReal(d / r0));
  const MpReal th1 = pi - asin(MpReal(d / r1));

  auto circle = [&](const MpReal& cx, const MpReal& rad, const MpReal& start,
                    bool ccw) {
    std::vector<MpComplex> v;
    for (int j = 0; j <= arc_segments; ++j) {
      MpReal th = start + (ccw ? 1 : -1) * 2 * pi * MpReal(j) /
                              MpReal(arc_segments);
      v.push_back({MpReal(cx + rad * cos(th)), MpReal(rad * sin(th))});
    }
    return v;
  };
  auto append = [](std::vector<MpComplex>& path,
                   const std::vector<MpComplex>& piece) {
    for (const auto& p : piece) {
      if (!path.empty() && abs_c(p - path.back()) == 0) continue;
      path.push_back(p);
    }
  };

  std::vector<MpComplex> path{base};
  append(path, circle(MpReal(0), r0, th0, true));   // A
  path.push_back(base);
  append(path, circle(MpReal(1), r1, th1, true));   // B
  path.push_back(base);
  append(path, circle(MpReal(0), r0, th0, false));  // A^{-1}
  path.push_back(base);
  append(path, circle(MpReal(1), r1, th1, false));  // B^{-1}
  path.push_back(base);
  return path;
}

/// The commutator functional applied to an integrand.  Loop radii are chosen
/// from the roots of J so the path encloses only the branch points 0 and 1.
inline NumericValue pochhammer_functional(const ReducedIntegrand& g,
                                          const PrecisionContext& ctx) {
  require_admissible_J(g.J);
  Rat rho0(1, 4), rho1(1, 4);
  auto brackets = isolate_roots(g.J, Rat(0), Rat(1), Rat(1, 1024));
  if (!brackets.empty()) {
    std::sort(brackets.begin(), brackets.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    rho0 = brackets.front().first / 2;
    rho1 = (Rat(1) - brackets.back().second) / 2;
  }
  Rat delta = std::min({Rat(rho0 / 2), Rat(rho1 / 2), Rat(1, 16)});
  auto path = pochhammer_path(rho0, rho1, delta, ctx.working_bits + 16);
  return contour_integral(g, path, ctx);
}

// ---------------------------------------------------------------------------
// Constant-relation detection (two-precision protocol)
// ---------------------------------------------------------------------------

namespace detail {

/// Solve the k x k complex system G c = r by Gaussian elimination with
/// partial pivoting; the smallest pivot magnitude is reported through
/// `min_pivot` for conditioning checks.
inline std::optional<std::vector<MpComplex>> solve_complex(
    std::vector<std::vector<MpComplex>> G, std::vector<MpComplex> r,
    MpReal& min_pivot) {
  const size_t k = G.size();
  min_pivot = MpReal(0);
  for (size_t col = 0; col < k; ++col) {
    size_t piv = col;
    for (size_t row = col + 1; row < k; ++row)
      if (abs_c(G[row][col]) > abs_c(G[piv][col])) piv = row;
    std::swap(G[piv], G[col]);
    std::swap(r[piv], r[col]);
    MpReal mag = abs_c(G[col][col]);
    if (col == 0 || mag < min_pivot) min_pivot = mag;
    if (mag == 0) return std::nullopt;
    for (size_t row = col + 1; row < k; ++row) {
      MpComplex f = G[row][col] / G[col][col];
      for (size_t c2 = col; c2 < k; ++c2) G[row][c2] -= f * G[col][c2];
      r[row] -= f * r[col];
    }
  }
  std::vector<MpComplex> x(k);
  for (size_t col = k; col-- > 0;) {
    MpComplex acc = r[col];
    for (size_t c2 = col + 1; c2 < k; ++c2) acc -= G[col][c2] * x[c2];
    x[col] = acc / G[col][col];
  }
  return x;
}

}  // namespace detail

/// Least-squares detection of target = sum_j c_j basis_j across sampled
/// functional values (one entry per sample functional).  Returns the
/// coefficients when the residual is below the context tolerance, nullopt
/// when the target is genuinely independent.  Preconditions: at least as
/// many samples as basis elements, basis pairwise ratio-independent (else
/// Underdetermined); an ill-conditioned normal system raises Unstable.
/// The result is a numeric observation, never an exact certificate.
inline std::optional<std::vector<MpComplex>> detect_constant_relation(
    const std::vector<MpComplex>& target,
    const std::vector<std::vector<MpComplex>>& basis,
    const PrecisionContext& ctx) {
  const size_t m = target.size();
  const size_t k = basis.size();
  if (k == 0 || m == 0)
    throw OracleError(OracleErrorKind::Domain,
                      "detect_constant_relation: empty input");
  for (const auto& b : basis)
    if (b.size() != m)
      throw OracleError(OracleErrorKind::Domain,
                        "detect_constant_relation: ragged sample vectors");
  if (m < k)
    throw OracleError(OracleErrorKind::Underdetermined,
                      "detect_constant_relation: fewer samples than basis");

  PrecisionGuard guard(ctx.working_bits + 16);
  const MpReal tol = ctx.zero_tolerance();

  auto inf_norm = [](const std::vector<MpComplex>& v) {
    MpReal n(0);
    for (const auto& x : v) n = std::max(n, abs_c(x), std::less<MpReal>());
    return n;
  };

  // Basis sanity: no numerically zero element, no proportional pair.
  std::vector<MpReal> norms(k);
  for (size_t i = 0; i < k; ++i) {
    norms[i] = inf_norm(basis[i]);
    if (norms[i] < tol)
      throw OracleError(OracleErrorKind::Underdetermined,
                        "detect_constant_relation: basis element is zero");
  }
  for (size_t i = 0; i < k; ++i)
    for (size_t j = i + 1; j < k; ++j) {
      MpReal det(0);
      for (size_t r = 0; r < m; ++r)
        for (size_t s = r + 1; s < m; ++s)
          det = std::max(
              det,
              abs_c(basis[i][r] * basis[j][s] - basis[i][s] * basis[j][r]),
              std::less<MpReal>());
      if (det < tol * norms[i] * norms[j])
        throw OracleError(OracleErrorKind::Underdetermined,
                          "detect_constant_relation: basis pair is "
                          "numerically proportional");
    }

  const MpReal tnorm = inf_norm(target);
  if (tnorm < tol) return std::vector<MpComplex>(k);  // zero target: all zero

  // Normal equations G c = r with G = B* B, r = B* t.
  std::vector<std::vector<MpComplex>> G(k, std::vector<MpComplex>(k));
  std::vector<MpComplex> rhs(k);
  for (size_t i = 0; i < k; ++i) {
    for (size_t j = 0; j < k; ++j)
      for (size_t r = 0; r < m; ++r)
        G[i][j] += conj_c(basis[i][r]) * basis[j][r];
    for (size_t r = 0; r < m; ++r) rhs[i] += conj_c(basis[i][r]) * target[r];
  }
  MpReal min_pivot(0);
  auto sol = detail::solve_complex(G, rhs, min_pivot);
  MpReal scale(0);
  for (size_t i = 0; i < k; ++i) scale = std::max(scale, MpReal(norms[i] * norms[i]), std::less<MpReal>());
  if (!sol || min_pivot < tol * tol * scale)
    throw OracleError(OracleErrorKind::Unstable,
                      "detect_constant_relation: normal system is "
                      "ill-conditioned");

  MpReal resid(0);
  for (size_t r = 0; r < m; ++r) {
    MpComplex acc = target[r];
    for (size_t j = 0; j < k; ++j) acc -= (*sol)[j] * basis[j][r];
    resid = std::max(resid, abs_c(acc), std::less<MpReal>());
  }
  if (resid < tol * (MpReal(1) + tnorm)) return sol;
  return std::nullopt;
}

/// Two-precision protocol: the sampler is called at working_bits and again at
/// 2 x working_bits; a relation is reported only when both runs accept it and
/// the coefficient vectors agree at the coarser tolerance.  A relation that
/// passes at one precision but drifts at the other raises Unstable.
template <class Sampler>
std::optional<std::vector<MpComplex>> detect_constant_relation(
    Sampler&& sample, const PrecisionContext& ctx) {
  auto [t1, b1] = sample(ctx.working_bits);
  auto c1 = detect_constant_relation(t1, b1, ctx);
  if (!c1) return std::nullopt;

  PrecisionContext hi = ctx.with_bits(2 * ctx.working_bits);
  auto [t2, b2] = sample(hi.working_bits);
  auto c2 = detect_constant_relation(t2, b2, hi);
  if (!c2) return std::nullopt;  // did not survive the confirmation precision

  PrecisionGuard guard(hi.working_bits + 16);
  MpReal cmax(1);
  for (const auto& c : *c1) cmax = std::max(cmax, abs_c(c), std::less<MpReal>());
  for (size_t i = 0; i < c1->size(); ++i)
    if (abs_c((*c1)[i] - (*c2)[i]) > ctx.zero_tolerance() * cmax)
      throw OracleError(OracleErrorKind::Unstable,
                        "detect_constant_relation: coefficients drift "
                        "between precisions");
  return c2;
}

}  // namespace veil
