// Rodrigues construction: exact coefficient agreement with an independent
// computer-algebra oracle, ODE residuals, endpoint non-vanishing, and root
// isolation inside (0,1).

#include <catch2/catch_amalgamated.hpp>

#include <veil/jacobi.hpp>

#include <cstdlib>
#include <string>

#include "fixtures/jacobi_fixtures.hpp"

using namespace veil;

namespace {

Poly parse_coeffs(const char* s) {
  std::vector<Rat> c;
  std::string cur;
  for (const char* q = s;; ++q) {
    if (*q == ',' || *q == '\0') {
      c.emplace_back(Rat(Int(cur)));
      cur.clear();
      if (*q == '\0') break;
    } else {
      cur.push_back(*q);
    }
  }
  return Poly(std::move(c));
}

}  // namespace

TEST_CASE("oracle grid: exact primitive coefficients") {
  for (const auto& f : kJacobiGrid) {
    INFO("k=" << f.k << " p=" << f.p);
    JacobiPoly jp = build_jacobi(f.k, f.p);
    REQUIRE(jp.n == f.n);
    Poly expect = parse_coeffs(f.coeffs);
    REQUIRE(jp.J == expect);
  }
}

TEST_CASE("ODE residual vanishes exactly on the grid") {
  for (const auto& f : kJacobiGrid) {
    INFO("k=" << f.k << " p=" << f.p);
    JacobiPoly jp = build_jacobi(f.k, f.p);
    REQUIRE(verify_jacobi_ode(jp));
    // and fails for a perturbed polynomial of the same degree
    if (jp.n >= 1) {
      JacobiPoly bad = jp;
      bad.J += Poly::one();
      REQUIRE_FALSE(verify_jacobi_ode(bad));
    }
  }
}

TEST_CASE("structure: endpoints, squarefreeness, root isolation") {
  for (const auto& f : kJacobiGrid) {
    INFO("k=" << f.k << " p=" << f.p);
    JacobiPoly jp = build_jacobi(f.k, f.p);
    REQUIRE(jp.J.deg() == jp.n);
    REQUIRE(jp.J.lc() > 0);
    REQUIRE(jp.J.eval(Rat(0)) != 0);
    REQUIRE(jp.J.eval(Rat(1)) != 0);
    REQUIRE(is_squarefree(jp.J));
    REQUIRE(static_cast<long>(jp.root_brackets.size()) == jp.n);
    REQUIRE(count_roots_open(jp.J, Rat(0), Rat(1)) == jp.n);
    auto chain = sturm_chain(jp.J);
    Rat prev(0);
    for (const auto& [lo, hi] : jp.root_brackets) {
      REQUIRE(lo >= prev);
      REQUIRE(lo < hi);
      REQUIRE(hi <= 1);
      REQUIRE(lo > 0);
      REQUIRE(count_roots_halfopen(chain, lo, hi) == 1);
      prev = hi;
    }
  }
}

TEST_CASE("worked examples") {
  JacobiPoly a = build_jacobi(3, 3);
  REQUIRE(a.J.str() == "11*z - 8");
  REQUIRE(a.n == 1);
  REQUIRE(a.J.eval(Rat(8, 11)) == 0);
  REQUIRE(a.root_brackets.size() == 1);
  REQUIRE(a.root_brackets[0].first < Rat(8, 11));
  REQUIRE(Rat(8, 11) < a.root_brackets[0].second);

  JacobiPoly b = build_jacobi(3, 4);
  REQUIRE(b.J.str() == "17*z - 8");
  REQUIRE(b.J.eval(Rat(8, 17)) == 0);

  // degree-0 instances normalize to the constant 1
  REQUIRE(build_jacobi(3, 1).J == Poly::one());
  REQUIRE(build_jacobi(3, 0).J == Poly::one());
}

TEST_CASE("builder rejects non-discrete-series input") {
  SpectralClass fin = classify_eigenvalue(3, Rat(1, 8));
  REQUIRE_THROWS_AS(build_jacobi(fin), std::logic_error);
  SpectralClass none = classify_eigenvalue(5, Rat(2));
  REQUIRE_THROWS_AS(build_jacobi(none), std::logic_error);
}

TEST_CASE("rodrigues sum matches direct ODE solve for generic parameters") {
  // For parameters not tied to any spectral class the construction still
  // produces a degree-n ODE solution.
  for (long n : {0L, 1L, 2L, 3L, 5L}) {
    Rat alpha(1, 3), beta(-2, 7);
    Poly J = rodrigues_poly(alpha, beta, n);
    REQUIRE(J.deg() == n);
    REQUIRE(jacobi_ode_residual(J, alpha, beta, n).is_zero());
  }
}

TEST_CASE("bracket width control") {
  SpectralClass cls = classify_eigenvalue(3, lambda_of(3, 9));  // n = 4
  JacobiPoly jp = build_jacobi(cls, Rat(1, 1L << 20));
  for (const auto& [lo, hi] : jp.root_brackets) REQUIRE(hi - lo <= Rat(1, 1L << 20));
}
