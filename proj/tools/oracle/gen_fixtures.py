#!/usr/bin/env python3
"""Generate C++ test fixture headers from an independent computer-algebra path.

Everything here is computed with sympy's exact rationals and sympy's own
classical Jacobi polynomials (mapped onto the shifted interval), NOT with the
library under test, so the emitted values serve as an independent oracle.

Usage:  python3 tools/oracle/gen_fixtures.py [--outdir tests/fixtures]
"""

import argparse
import os
import sys

import sympy as sp
from sympy import Rational as Q

Z = sp.Symbol("z")


def rs(x):
    """Rational -> canonical "num/den" string (always with denominator)."""
    x = sp.nsimplify(x, rational=True)
    return f"{sp.Rational(x).p}/{sp.Rational(x).q}"


# ---------------------------------------------------------------------------
# Spectral data (independent re-derivation of the discrete series / case table)
# ---------------------------------------------------------------------------

def lambda_of(k, p):
    return p + Q(k, 2) * p * (p - 1)


def case_of(p):
    if p >= 1 and p % 2 == 1:
        return 1
    if p >= 2 and p % 2 == 0:
        return 2
    if p <= 0 and p % 2 == 0:
        return 3
    return 4


def case_data(k, p):
    c = case_of(p)
    eps = 1 if c in (1, 2) else -1
    a = Q(1, 2) + Q(eps, 2 * k)
    b = Q(1, 4) if c in (1, 3) else Q(3, 4)
    alpha = Q(-1, 2) if c in (1, 3) else Q(1, 2)
    beta = Q(eps, k)
    if c == 1:
        n = (p - 1) // 2
    elif c == 2:
        n = p // 2 - 1
    elif c == 3:
        n = -p // 2
    else:
        n = (-p - 1) // 2
    return c, eps, a, b, alpha, beta, n


def line7_lambda(k, p):
    return Q(k - 1, 2 * k) + Q(k, 2) * p * (p + 1)


def finite_lambdas(k):
    """(line, lambda(p)) generators for the finite-group lines of a given k,
    excluding the universal line 7 (handled by line7_lambda)."""
    fams = []
    if k in (3, -3):
        base = Q(-1, 24) if k == 3 else Q(25, 24)
        sgn = 1 if k == 3 else -1
        forms = [
            (8, Q(1, 6), 1, 3),
            (9, Q(3, 32), 1, 4),
            (10, Q(3, 50), 1, 5),
            (11, Q(3, 50), 2, 5),
        ]
        for line, c, m0, m1 in forms:
            fams.append((line if k == 3 else line + 4,
                         lambda p, c=c, m0=m0, m1=m1: base + sgn * c * (m0 + m1 * p) ** 2))
    elif k in (4, -4):
        base = Q(-1, 8) if k == 4 else Q(9, 8)
        sgn = 1 if k == 4 else -1
        fams.append((16 if k == 4 else 17,
                     lambda p: base + sgn * Q(2, 9) * (1 + 3 * p) ** 2))
    elif k in (5, -5):
        base = Q(-9, 40) if k == 5 else Q(49, 40)
        sgn = 1 if k == 5 else -1
        fams.append((18 if k == 5 else 20,
                     lambda p: base + sgn * Q(5, 18) * (1 + 3 * p) ** 2))
        fams.append((19 if k == 5 else 21,
                     lambda p: base + sgn * Q(1, 10) * (2 + 5 * p) ** 2))
    return fams


# ---------------------------------------------------------------------------
# Jacobi fixtures via sympy's classical polynomials:
#   J(z) proportional to P_n^{(beta, alpha)}(1 - 2 z).
# ---------------------------------------------------------------------------

def jacobi_shifted(n, alpha, beta):
    P = sp.jacobi(n, beta, alpha, 1 - 2 * Z)
    return sp.expand((-1) ** n * sp.factorial(n) * P)


def primitive_coeffs(poly_expr, n):
    p = sp.Poly(poly_expr, Z)
    coeffs = p.all_coeffs()[::-1]  # ascending
    assert len(coeffs) == n + 1, (poly_expr, n)
    dens = [sp.Rational(c).q for c in coeffs]
    L = sp.ilcm(*dens) if len(dens) > 1 else dens[0]
    ints = [sp.Integer(sp.Rational(c) * L) for c in coeffs]
    nz = [abs(c) for c in ints if c != 0]
    g = nz[0] if len(nz) == 1 else sp.igcd(*nz)
    ints = [c // g for c in ints]
    if ints[-1] < 0:
        ints = [-c for c in ints]
    return ints


def check_ode(Jp, n, alpha, beta):
    J1, J2 = sp.diff(Jp, Z), sp.diff(Jp, Z, 2)
    res = sp.expand(Z * (1 - Z) * J2 + (beta + 1 - (alpha + beta + 2) * Z) * J1
                    + n * (alpha + beta + n + 1) * Jp)
    assert res == 0, (Jp, n, alpha, beta)


def gen_spectral(out):
    ks = [3, -3, 4, -4, 5, -5, 7, -7]
    rows = []
    for k in ks:
        for p in range(-20, 21):
            lam = lambda_of(k, p)
            c, eps, a, b, alpha, beta, n = case_data(k, p)
            assert (2 * k * p - k + 2) ** 2 == (k - 2) ** 2 + 8 * k * lam
            rows.append(
                f'  {{{k}, "{rs(lam)}", {p}, {c}, {eps}, "{rs(a)}", "{rs(b)}", '
                f'"{rs(alpha)}", "{rs(beta)}", {n}}},')
    def is_line2(k, lam):
        disc = (k - 2) ** 2 + 8 * k * lam
        if disc < 0 or not sp.sqrt(disc).is_integer:
            return False
        s = int(sp.sqrt(disc))
        return any(((k - 2) + sg) % (2 * k) == 0 for sg in (s, -s))

    def finite_scan(k, lam, B=90):
        """First matching finite line, ascending by id; mirrors the
        classifier's scan policy."""
        for p in range(-B, B + 1):
            if line7_lambda(k, p) == lam:
                return 7
        for line, f in sorted(finite_lambdas(k), key=lambda t: t[0]):
            for p in range(-B, B + 1):
                if f(p) == lam:
                    return line
        return None

    fin = []
    for k in (3, -3, 4, -4, 5, -5, 7, -7):
        lams = [line7_lambda(k, p) for p in range(0, 4)]
        lams += [f(p) for _, f in finite_lambdas(k) for p in range(0, 4)]
        for lam in lams:
            line = finite_scan(k, lam)
            assert line is not None and not is_line2(k, lam), (k, lam)
            fin.append(f'  {{{k}, "{rs(lam)}", {line}}},')
    # eigenvalues matching no table line for their k
    notin = []
    for k, lam in [(5, Q(2)), (3, Q(2, 5)), (-3, Q(1, 3)), (7, Q(1, 2)),
                   (4, Q(5, 7)), (-5, Q(1, 2))]:
        assert not is_line2(k, lam) and finite_scan(k, lam) is None, (k, lam)
        notin.append(f'  {{{k}, "{rs(lam)}"}},')
    with open(out, "w") as fh:
        fh.write("// Generated by tools/oracle/gen_fixtures.py -- do not edit.\n")
        fh.write("#pragma once\n\n")
        fh.write("struct SpectralFixture {\n"
                 "  int k; const char* lambda; int p; int jcase; int eps;\n"
                 "  const char* a; const char* b; const char* alpha;\n"
                 "  const char* beta; long n;\n};\n\n")
        fh.write("inline constexpr SpectralFixture kSpectralGrid[] = {\n")
        fh.write("\n".join(rows))
        fh.write("\n};\n\n")
        fh.write("struct FiniteFixture { int k; const char* lambda; int line; };\n\n")
        fh.write("inline constexpr FiniteFixture kFiniteGrid[] = {\n")
        fh.write("\n".join(fin))
        fh.write("\n};\n\n")
        fh.write("struct NotInTableFixture { int k; const char* lambda; };\n\n")
        fh.write("inline constexpr NotInTableFixture kNotInTable[] = {\n")
        fh.write("\n".join(notin))
        fh.write("\n};\n")
    print(f"wrote {out}: {len(rows)} grid, {len(fin)} finite, {len(notin)} none")


def gen_jacobi(out):
    rows = []
    def add(k, p):
        c, eps, a, b, alpha, beta, n = case_data(k, p)
        J = jacobi_shifted(n, alpha, beta)
        check_ode(J, n, alpha, beta)
        J0 = J.subs(Z, 0)
        J1v = J.subs(Z, 1)
        assert J0 != 0 and J1v != 0, (k, p)
        coeffs = primitive_coeffs(J, n)
        cs = ",".join(str(c) for c in coeffs)
        rows.append(f'  {{{k}, {p}, {n}, "{cs}"}},')

    for k in (3, -3, 5, -5, 7, -7):
        for p in range(-13, 14):
            add(k, p)
        for p in (17, 21, 25, -16, -20, -24):
            add(k, p)
    for k in (9, -9):
        for p in (3, 4, -2, -3):
            add(k, p)
    with open(out, "w") as fh:
        fh.write("// Generated by tools/oracle/gen_fixtures.py -- do not edit.\n")
        fh.write("#pragma once\n\n")
        fh.write("struct JacobiFixture { int k; int p; long n; const char* coeffs; };\n\n")
        fh.write("inline constexpr JacobiFixture kJacobiGrid[] = {\n")
        fh.write("\n".join(rows))
        fh.write("\n};\n")
    print(f"wrote {out}: {len(rows)} jacobi fixtures")


# ---------------------------------------------------------------------------
# Integral reduction oracle: solve the splitting from the derivative DEFINITION
# ---------------------------------------------------------------------------

def red_oracle(Pc, Jc, e0, e1):
    """Independent (R, Lambda): solve, as a linear system from the raw
    differentiation identity (no reduction-operator shortcut),

        d/dz [ R z^{e0+1}(1-z)^{e1+1} / J ] = (P - Lambda) z^{e0}(1-z)^{e1}/J^2

    with deg R = deg P - deg J - 1 and deg Lambda <= deg J."""
    P = sum(c * Z**i for i, c in enumerate(Pc))
    J = sum(c * Z**i for i, c in enumerate(Jc))
    n = len(Jc) - 1
    degp = len(Pc) - 1
    dr = degp - n - 1
    rc = list(sp.symbols(f"r0:{dr + 1}")) if dr >= 0 else []
    lc = list(sp.symbols(f"l0:{n + 1}"))
    R = sum(c * Z**i for i, c in enumerate(rc))
    Lam = sum(c * Z**i for i, c in enumerate(lc))
    A = R * Z**(e0 + 1) * (1 - Z)**(e1 + 1) / J
    lhs = sp.cancel(sp.diff(A, Z) * J**2 / (Z**e0 * (1 - Z)**e1))
    resid = sp.expand(lhs - (P - Lam))
    eqs = sp.Poly(resid, Z).all_coeffs()
    sol = sp.linsolve(eqs, rc + lc)
    assert len(sol) == 1, (Pc, Jc, e0, e1)
    vals = list(sol)[0]
    rv = [sp.Rational(v) for v in vals[: len(rc)]]
    lv = [sp.Rational(v) for v in vals[len(rc):]]
    return rv, lv


def mu_oracle(Pc, e0, e1):
    """Independent normalized moment: sum of Beta-function ratios, reduced by
    sympy's gamma simplification (not a Pochhammer product loop)."""
    acc = sp.Integer(0)
    for m, c in enumerate(Pc):
        acc += c * sp.beta(e0 + 1 + m, e1 + 1) / sp.beta(e0 + 1, e1 + 1)
    val = sp.nsimplify(sp.gammasimp(acc), rational=True)
    return sp.Rational(val)


def cs_list(vals):
    return ",".join(rs(v) for v in vals)


def gen_reduce(out):
    import random
    rng = random.Random(20260821)
    js = [
        [1],                      # J = 1
        [-8, 11],                 # the worked spectral polynomial
        [-8, 17],
        [1, -5, 6],               # (2z-1)(3z-1)
        [2, -9, 9],               # squarefree, J(0)J(1) != 0
        [-1, 7, -14, 9],          # cubic, J(0) = -1, J(1) = 1
    ]
    kernels = [
        (Q(1, 3), Q(-1, 2)), (Q(-1, 5), Q(-3, 4)), (Q(2, 7), Q(1, 2)),
        (Q(-2, 3), Q(3, 4)), (Q(7, 3), Q(-5, 4)), (Q(2), Q(-1, 2)),
        (Q(0), Q(1, 3)), (Q(-1, 7), Q(5, 2)),
    ]
    rows = []
    for t in range(44):
        Jc = js[t % len(js)]
        e0, e1 = kernels[t % len(kernels)]
        degp = rng.randrange(0, 10)
        Pc = [Q(rng.randrange(-9, 10)) for _ in range(degp + 1)]
        if all(c == 0 for c in Pc):
            Pc[-1] = Q(1)
        while Pc[-1] == 0:
            Pc[-1] = Q(rng.randrange(-9, 10))
        rv, lv = red_oracle(Pc, [Q(c) for c in Jc], e0, e1)
        rows.append(f'  {{"{cs_list(Pc)}", "{cs_list(Jc)}", "{rs(e0)}", '
                    f'"{rs(e1)}", "{cs_list(rv) if rv else ""}", "{cs_list(lv)}"}},')

    # spectral second-variational numerators: P = J_gamma * J_alpha^2 over J=1
    phi_rows = []
    for (k, pg, pa) in [(5, 3, 1), (5, 2, -2), (3, 3, 4), (5, 4, -1),
                        (7, 5, 3), (5, 0, -2), (3, -2, -4), (5, 5, 3)]:
        cg, eg, ag, bg, alg, beg, ng = case_data(k, pg)
        ca, ea, aa, ba, ala, bea, na = case_data(k, pa)
        # primitive integer representatives with positive leading coefficient,
        # matching the library's normalization of the spectral polynomials
        Jg = sum(c * Z**i
                 for i, c in enumerate(primitive_coeffs(jacobi_shifted(ng, alg, beg), ng)))
        Ja = sum(c * Z**i
                 for i, c in enumerate(primitive_coeffs(jacobi_shifted(na, ala, bea), na)))
        Pfull = sp.expand(Jg * Ja**2)
        e0 = ag + 2 * aa - Q(3, 2) - Q(1, 2 * k)
        e1 = bg + 2 * ba - Q(5, 4)
        Pc = [sp.Rational(c) for c in sp.Poly(Pfull, Z).all_coeffs()[::-1]]
        rv, lv = red_oracle(Pc, [Q(1)], e0, e1)
        mu = mu_oracle(Pc, e0, e1)
        phi_rows.append(f'  {{{k}, {pg}, {pa}, "{rs(e0)}", "{rs(e1)}", '
                        f'"{cs_list(rv) if rv else ""}", "{rs(lv[0])}", "{rs(mu)}"}},')

    mu_rows = []
    for t in range(12):
        e0, e1 = kernels[t % len(kernels)]
        if not (e0 > -1 and e1 > -1):
            e0, e1 = abs(e0), abs(e1) + Q(1, 3)
        if sp.Integer(e0 + e1) == e0 + e1:
            e1 += Q(1, 7)
        degp = rng.randrange(0, 6)
        Pc = [Q(rng.randrange(-9, 10)) for _ in range(degp + 1)]
        if all(c == 0 for c in Pc):
            Pc[0] = Q(2)
        mu = mu_oracle(Pc, e0, e1)
        mu_rows.append(f'  {{"{cs_list(Pc)}", "{rs(e0)}", "{rs(e1)}", "{rs(mu)}"}},')

    with open(out, "w") as fh:
        fh.write("// Generated by tools/oracle/gen_fixtures.py -- do not edit.\n")
        fh.write("#pragma once\n\n")
        fh.write("struct ReduceFixture {\n"
                 "  const char* P; const char* J; const char* e0; const char* e1;\n"
                 "  const char* R; const char* Lambda;\n};\n\n")
        fh.write("inline constexpr ReduceFixture kReduceGrid[] = {\n")
        fh.write("\n".join(rows))
        fh.write("\n};\n\n")
        fh.write("struct PhiReduceFixture {\n"
                 "  int k; int p_gamma; int p_alpha;\n"
                 "  const char* e0; const char* e1;\n"
                 "  const char* R; const char* Lambda; const char* mu;\n};\n\n")
        fh.write("inline constexpr PhiReduceFixture kPhiReduceGrid[] = {\n")
        fh.write("\n".join(phi_rows))
        fh.write("\n};\n\n")
        fh.write("struct MuFixture {\n"
                 "  const char* P; const char* e0; const char* e1; const char* mu;\n};\n\n")
        fh.write("inline constexpr MuFixture kMuGrid[] = {\n")
        fh.write("\n".join(mu_rows))
        fh.write("\n};\n")
    print(f"wrote {out}: {len(rows)} reduce, {len(phi_rows)} phi, {len(mu_rows)} mu")


def gen_oracle(out):
    """Numeric reference values for the quadrature / residue layer.

    The deformed unit-interval integral is computed with mpmath over an
    explicit piecewise path passing above the real zeros of J (the value only
    depends on the homotopy class), and the double-pole residues are computed
    symbolically with sympy at the exact rational roots.
    """
    import mpmath as mp
    mp.mp.dps = 70

    instances = [
        # (P ascending, J ascending, e0, e1); every J has only rational roots
        ([1, 2], [1, -5, 6], Q(1, 3), Q(-1, 2)),          # roots 1/3, 1/2
        ([3, 0, -2], [1, -5, 6], Q(-1, 5), Q(-3, 4)),
        ([-1, 4, 1], [2, -9, 9], Q(2, 7), Q(1, 2)),       # roots 1/3, 2/3
        ([5], [2, -9, 9], Q(-2, 3), Q(3, 4)),
        ([2, -3, 0, 1], [-3, 19, -38, 24], Q(1, 3), Q(-1, 2)),  # 1/3,1/2,3/4
        ([1, 1], [-3, 19, -38, 24], Q(-1, 5), Q(5, 2)),
    ]

    rows = []
    for Pc, Jc, e0, e1 in instances:
        Pp = sum(Q(c) * Z**i for i, c in enumerate(Pc))
        Jp = sum(Q(c) * Z**i for i, c in enumerate(Jc))
        roots = sorted(r for r, m in sp.roots(sp.Poly(Jp, Z)).items())
        assert all(r.is_rational and 0 < r < 1 for r in roots)

        # Residues of P z^e0 (1-z)^e1 / J^2 at each simple root r: write
        # J = (z-r) Qf and evaluate d/dz [g / Qf^2] at r exactly.
        res_strs = []
        for r in roots:
            Qf = sp.cancel(Jp / (Z - r))
            gnum = Pp * Z**e0 * (1 - Z)**e1
            expr = sp.diff(gnum / Qf**2, Z)
            val = sp.simplify(expr.subs(Z, r))
            # independent cross-check inside the generator
            chk = sp.limit(sp.diff(gnum / Jp**2 * (Z - r)**2, Z), Z, r)
            assert sp.simplify(val - chk) == 0
            res_strs.append(mp.nstr(mp.mpf(str(sp.N(val, 60))), 55))

        # Deformed (0,1) integral: 0 -> rho0 on the axis, up to height delta,
        # across above the roots, down, then (1-rho1) -> 1 on the axis.
        rho0 = Q(roots[0], 2)
        rho1 = Q(1 - roots[-1], 2)
        delta = min(rho0, rho1, Q(1, 8))

        def mpq(x):
            x = Q(x)
            return mp.mpf(int(x.p)) / mp.mpf(int(x.q))

        me0, me1 = mpq(e0), mpq(e1)

        def f(zv):
            pv = sum(mp.mpf(c) * zv**i for i, c in enumerate(Pc))
            jv = sum(mp.mpf(c) * zv**i for i, c in enumerate(Jc))
            return pv * mp.power(zv, me0) * mp.power(1 - zv, me1) / jv**2

        total = mp.mpc(0)
        total += mp.quad(f, [mp.mpf(0), mpq(rho0)])
        corners = [mp.mpc(mpq(rho0)), mp.mpc(mpq(rho0), mpq(delta)),
                   mp.mpc(mpq(1 - rho1), mpq(delta)), mp.mpc(mpq(1 - rho1))]
        for pa, pb in zip(corners, corners[1:]):
            total += mp.quad(lambda u, a=pa, b=pb: f(a + (b - a) * u) * (b - a),
                             [mp.mpf(0), mp.mpf(1)])
        total += mp.quad(f, [mpq(1 - rho1), mp.mpf(1)])

        rows.append(
            f'  {{"{cs_list([Q(c) for c in Pc])}", "{cs_list(Jc)}", '
            f'"{rs(e0)}", "{rs(e1)}", "{";".join(rs(r) for r in roots)}", '
            f'"{";".join(res_strs)}", "{mp.nstr(total.real, 55)}", '
            f'"{mp.nstr(total.imag, 55)}"}},')

    with open(out, "w") as fh:
        fh.write("#pragma once\n\n")
        fh.write(
            "// Reference values for the deformed unit-interval functional and\n"
            "// the double-pole residues, from an independent numeric path.\n"
            "struct OracleFixture {\n"
            "  const char* P;         // ascending coefficients\n"
            "  const char* J;\n"
            "  const char* e0;\n"
            "  const char* e1;\n"
            "  const char* roots;     // rational roots of J in (0,1), ascending\n"
            "  const char* residues;  // residue at each root, same order\n"
            "  const char* l0_re;     // deformed (0,1) integral, real part\n"
            "  const char* l0_im;     //   ... imaginary part\n"
            "};\n\n"
            "inline constexpr OracleFixture kOracleGrid[] = {\n")
        fh.write("\n".join(rows))
        fh.write("\n};\n")
    print(f"wrote {out} ({len(rows)} rows)")


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--outdir", default="tests/fixtures")
    args = ap.parse_args()
    os.makedirs(args.outdir, exist_ok=True)
    gen_spectral(os.path.join(args.outdir, "spectral_fixtures.hpp"))
    gen_jacobi(os.path.join(args.outdir, "jacobi_fixtures.hpp"))
    gen_reduce(os.path.join(args.outdir, "reduce_fixtures.hpp"))
    gen_oracle(os.path.join(args.outdir, "oracle_fixtures.hpp"))


if __name__ == "__main__":
    sys.exit(main())
