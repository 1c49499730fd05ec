// veil/kernel.hpp — exponent calculus: kernels, monodromy characters, the
// E0/E1 integrand exponents, Delta quantities, and the exponent census.
//
// Conventions.  Every kernel is stored as z^{e0} (1-z)^{e1} with exponents
// exact rationals — positive on (0,1); unimodular constants from rewriting
// (z-1)^{e} = (-1)^{e} (1-z)^{e} are absorbed, since only exponents matter
// for characters and only real-branch values for quadrature.  The local
// monodromy character at z = 0 (resp. z = 1) of such a kernel is the class
// e0 mod 1 (resp. e1 mod 1); a kernel is "algebraic by monodromy" when one
// of the exponents is an integer (both are guaranteed != -1 for the VE2/EX2
// integrand families, so no logarithm can appear and the finiteness of the
// remaining local orbit forces algebraicity of the primitive).
//
// First-integral kernels.  A Line2 class with exponents (a, b) has
//   I' = 1 / ( z^{2a} (1-z)^{2b} J^2 )   i.e. kernel (-2a, -2b) over J^2,
// and the base variational kernel is
//   omega = z^{-(3/2 + 1/(2k))} (1-z)^{-5/4}.
//
// Second-variational integrand exponents (numerator J_gamma J_alpha^2 resp.
// J_gamma J_beta J_alpha, denominator 1):
//   VE2:  E0 = a_g + 2 a_a - 3/2 - 1/(2k) = (eps_g + 2 eps_a - 1)/(2k),
//         E1 = b_g + 2 b_a - 5/4,
//   EX2:  E0 = a_g + a_b + a_a - 3/2 - 1/(2k) = (eps_g + eps_b + eps_a - 1)/(2k),
//         E1 = b_g + b_b + b_a - 5/4,
// with E1 in {-1/2, 0, 1/2, 1} always.
//
// Copyright (c) 2026 The veil authors.  MIT License; see LICENSE.

#pragma once

#include <veil/spectral.hpp>

#include <array>
#include <optional>
#include <vector>

namespace veil {

struct KernelForm {
  Rat e0, e1;

  KernelForm() = default;
  KernelForm(Rat a0, Rat a1) : e0(std::move(a0)), e1(std::move(a1)) {}

  bool operator==(const KernelForm& o) const = default;

  /// Kernel of the product of two such factors.
  KernelForm operator+(const KernelForm& o) const {
    return {e0 + o.e0, e1 + o.e1};
  }
};

/// Monodromy character as an exact exponent class q mod 1 (value e^{2 pi i q}).
struct MonodromyCharacter {
  Rat q;  // reduced to [0, 1)

  explicit MonodromyCharacter(const Rat& raw) : q(frac_mod1(raw)) {}
  bool trivial() const { return q == 0; }
  bool operator==(const MonodromyCharacter& o) const = default;
  MonodromyCharacter operator*(const MonodromyCharacter& o) const {
    return MonodromyCharacter(q + o.q);
  }
};

enum class Singularity { AtZero, AtOne };

inline MonodromyCharacter character_of(const KernelForm& kf, Singularity at) {
  return MonodromyCharacter(at == Singularity::AtZero ? kf.e0 : kf.e1);
}

/// Same character at both finite singular points <=> integer exponent shifts.
inline bool same_character_class(const KernelForm& a, const KernelForm& b) {
  return is_integer(a.e0 - b.e0) && is_integer(a.e1 - b.e1);
}

/// (a, b) solution exponents of a Line2 class.
inline std::pair<Rat, Rat> solution_exponents(const SpectralClass& cls) {
  return {cls.a, cls.b};
}

/// Kernel of I'_nu = z^{-2a} (1-z)^{-2b} / J^2 for a Line2 class.
inline KernelForm first_integral_kernel(const SpectralClass& cls) {
  return {Rat(-2) * cls.a, Rat(-2) * cls.b};
}

/// omega = z^{-(3/2 + 1/(2k))} (1-z)^{-5/4}.
inline KernelForm omega_kernel(int k) {
  return {Rat(-3, 2) - Rat(1) / Rat(2 * k), Rat(-5, 4)};
}

namespace detail {

inline Rat b_of_case(int jcase) {
  return (jcase == 1 || jcase == 3) ? Rat(1, 4) : Rat(3, 4);
}
inline int eps_of_case(int jcase) { return jcase <= 2 ? 1 : -1; }

}  // namespace detail

/// VE2 Phi' kernel: E0 = (eps_g + 2 eps_a - 1)/(2k), E1 = b_g + 2 b_a - 5/4.
inline KernelForm ve2_phi_exponents(int k, int jcase_gamma, int jcase_alpha) {
  using namespace detail;
  Rat e0 = Rat(eps_of_case(jcase_gamma) + 2 * eps_of_case(jcase_alpha) - 1) /
           Rat(2 * k);
  Rat e1 = b_of_case(jcase_gamma) + Rat(2) * b_of_case(jcase_alpha) - Rat(5, 4);
  return {e0, e1};
}

/// EX2 Phi' kernel: E0 = (eps_g + eps_b + eps_a - 1)/(2k), E1 = sum b - 5/4.
inline KernelForm ex2_phi_exponents(int k, int jcase_gamma, int jcase_beta,
                                    int jcase_alpha) {
  using namespace detail;
  Rat e0 = Rat(eps_of_case(jcase_gamma) + eps_of_case(jcase_beta) +
               eps_of_case(jcase_alpha) - 1) /
           Rat(2 * k);
  Rat e1 = b_of_case(jcase_gamma) + b_of_case(jcase_beta) +
           b_of_case(jcase_alpha) - Rat(5, 4);
  return {e0, e1};
}

/// Integer-exponent algebraicity shortcut: fires iff e0 or e1 is an integer.
/// (For the integrand families produced here neither can equal -1, which is
/// what licenses the log-free conclusion; assert rather than assume.)
inline bool integer_exponent_shortcut(const KernelForm& kf) {
  return is_integer(kf.e0) || is_integer(kf.e1);
}

/// Delta_{i,j} = (eps_h - eps_i + 3 eps_j - 1)/(2k) for the ambient triple
/// (h, i, j) = (gamma, beta, alpha) in the EX2 second-level character test.
inline Rat ex2_delta(int eps_gamma, int eps_beta, int eps_alpha, int k) {
  return Rat(eps_gamma - eps_beta + 3 * eps_alpha - 1) / Rat(2 * k);
}

// ---------------------------------------------------------------------------
// EX2 exponent census over the 64 case triples.
// ---------------------------------------------------------------------------

struct Ex2Census {
  long e0_int = 0;          // E0 is an integer
  long e1_int = 0;          // E1 is an integer
  long both_int = 0;        // both are
  long algebraic = 0;       // at least one is (shortcut fires)
  long possibly_transcendental = 0;  // neither is
  std::vector<std::array<int, 3>> both_int_cells;  // (gamma, beta, alpha)
};

inline Ex2Census ex2_census(int k) {
  if (k > -3 && k < 3) throw std::domain_error("ex2_census: |k| < 3");
  Ex2Census c;
  for (int g = 1; g <= 4; ++g)
    for (int b = 1; b <= 4; ++b)
      for (int a = 1; a <= 4; ++a) {
        KernelForm kf = ex2_phi_exponents(k, g, b, a);
        bool i0 = is_integer(kf.e0), i1 = is_integer(kf.e1);
        if (i0) ++c.e0_int;
        if (i1) ++c.e1_int;
        if (i0 && i1) {
          ++c.both_int;
          c.both_int_cells.push_back({g, b, a});
        }
        if (i0 || i1) ++c.algebraic;
        else ++c.possibly_transcendental;
      }
  return c;
}

}  // namespace veil
