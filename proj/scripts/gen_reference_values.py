#!/usr/bin/env python3
"""Generate frozen reference values for the test suite.

Everything here is computed with mpmath (50 significant digits) or exact
Fraction arithmetic, independently of the C++ implementation:

  * complete elliptic integral K(k^2), both via mpmath.ellipk and via
    adaptive quadrature of the defining integral,
  * Jacobi sn/cn/dn triples at assorted (x, k^2),
  * Schroedinger residuals of closed-form band-edge states (high-order
    numerical differentiation), confirming the energy/eigenfunction pairs
    used as test anchors,
  * eigenvalues of small nonsymmetric matrices for the dense QR solver test,
  * three-term recurrence coefficients (lambda_j, rho_j, omega_j) for a few
    parameter sets, in exact rational arithmetic.

Output is a C++ header fragment pasted into the tests; rerun only when the
anchor set changes.
"""

from fractions import Fraction

import mpmath as mp
import numpy as np

mp.mp.dps = 50


def emit(name, value, digits=17):
    print(f"  {name} = {mp.nstr(value, digits)};")


print("// ---- complete elliptic integral K (mpmath.ellipk(m), m = k^2) ----")
for ksq in ["0.1", "0.25", "0.5", "0.75", "0.9", "1e-10"]:
    K = mp.ellipk(mp.mpf(ksq))
    print(f"  // k2 = {ksq}:  K = {mp.nstr(K, 20)}")

print()
print("// ---- quadrature cross-check of K at k2 = 1/2 ----")
k2 = mp.mpf(1) / 2
Kq = mp.quad(lambda a: 1 / mp.sqrt(1 - k2 * mp.sin(a) ** 2), [0, mp.pi / 2])
print(f"  // quad:   {mp.nstr(Kq, 22)}")
print(f"  // ellipk: {mp.nstr(mp.ellipk(k2), 22)}")

print()
print("// ---- Jacobi triples sn/cn/dn (mpmath.ellipfun) ----")
cases = [
    ("0.37", "0.25"),
    ("1.0", "0.25"),
    ("2.6", "0.25"),
    ("0.37", "0.5"),
    ("1.3", "0.5"),
    ("3.9", "0.5"),
    ("-0.8", "0.5"),
    ("0.61", "0.75"),
    ("2.0", "0.75"),
    ("5.5", "0.75"),
    ("0.9", "0.9"),
    ("-2.2", "0.9"),
]
for xs, ks in cases:
    x, m = mp.mpf(xs), mp.mpf(ks)
    sn = mp.ellipfun("sn", x, m=m)
    cn = mp.ellipfun("cn", x, m=m)
    dn = mp.ellipfun("dn", x, m=m)
    print(f"  // x = {xs}, k2 = {ks}:")
    print(f"  //   sn = {mp.nstr(sn, 20)}")
    print(f"  //   cn = {mp.nstr(cn, 20)}")
    print(f"  //   dn = {mp.nstr(dn, 20)}")


def jac(x, m):
    return (
        mp.ellipfun("sn", x, m=m),
        mp.ellipfun("cn", x, m=m),
        mp.ellipfun("dn", x, m=m),
    )


def residual(V, phi, E, x, m):
    """|-phi'' + V phi - E phi| at x via mpmath high-order differentiation."""
    f = lambda t: phi(t, m)
    d2 = mp.diff(f, x, 2)
    return abs(-d2 + V(x, m) * f(x) - E * f(x))


print()
print("// ---- closed-form state residual sanity checks ----")

# Associated Lame potential, V = k^2 [m(m+1) sn^2 + l(l+1) cn^2/dn^2].
def V_al(mm, ll):
    def V(x, m):
        sn, cn, dn = jac(x, m)
        return m * (mm * (mm + 1) * sn**2 + ll * (ll + 1) * (cn / dn) ** 2)

    return V


# (m,l) = (1, 1/2): phi = sqrt(1+cn)/sqrt(dn) (2 cn - 1), E = (k^2+9)/4
def phi_a(x, m):
    sn, cn, dn = jac(x, m)
    return mp.sqrt(1 + cn) / mp.sqrt(dn) * (2 * cn - 1)


# companion: phi = sgn(sn) sqrt(1-cn)/sqrt(dn) (2 cn + 1)
def phi_b(x, m):
    sn, cn, dn = jac(x, m)
    return mp.sign(sn) * mp.sqrt(1 - cn) / mp.sqrt(dn) * (2 * cn + 1)


for ks in ["0.25", "0.5", "0.75"]:
    m = mp.mpf(ks)
    E = (m + 9) / 4
    r1 = residual(V_al(mp.mpf(1), mp.mpf(1) / 2), phi_a, E, mp.mpf("0.7"), m)
    r2 = residual(V_al(mp.mpf(1), mp.mpf(1) / 2), phi_b, E, mp.mpf("0.7"), m)
    print(f"  // (1,1/2) k2={ks}: residual(phi1) = {mp.nstr(r1, 5)}, residual(phi2) = {mp.nstr(r2, 5)}")

# Lame m=3: phi_3 = sn cn dn at e_3 = 4(1+k^2)
def phi_lame3(x, m):
    sn, cn, dn = jac(x, m)
    return sn * cn * dn


for ks in ["0.5"]:
    m = mp.mpf(ks)
    r = residual(V_al(mp.mpf(3), mp.mpf(0)), phi_lame3, 4 * (1 + m), mp.mpf("0.9"), m)
    print(f"  // (3,0) k2={ks}: residual(sn cn dn @ 4(1+k2)) = {mp.nstr(r, 5)}")

# Tan family n=0: V = k'^2 (2/cn^2 - 6/dn^2), phi = cn^2/dn^2, E = -2 k'^2
def V_tan0(x, m):
    sn, cn, dn = jac(x, m)
    return (1 - m) * (2 / cn**2 - 6 / dn**2)


def phi_tan0(x, m):
    sn, cn, dn = jac(x, m)
    return cn**2 / dn**2


for ks in ["0.3", "0.7"]:
    m = mp.mpf(ks)
    r = residual(V_tan0, phi_tan0, -2 * (1 - m), mp.mpf("0.4"), m)
    print(f"  // tan n=0 k2={ks}: residual = {mp.nstr(r, 5)}")

# Cot family n=1: V = 2/sn^2 - 12 k'^2/dn^2, phi = sn^2 cn/dn^3, E = k^2 - 3
def V_cot1(x, m):
    sn, cn, dn = jac(x, m)
    return 2 / sn**2 - 12 * (1 - m) / dn**2


def phi_cot1(x, m):
    sn, cn, dn = jac(x, m)
    return sn**2 * cn / dn**3


for ks in ["0.3"]:
    m = mp.mpf(ks)
    r = residual(V_cot1, phi_cot1, m - 3, mp.mpf("0.8"), m)
    print(f"  // cot n=1 k2={ks}: residual(sn^2 cn/dn^3 @ k^2-3) = {mp.nstr(r, 5)}")

print()
print("// ---- dense nonsymmetric eigenvalue anchors (numpy.linalg.eigvals) ----")
rng = np.random.default_rng(421)
A = np.array(
    [
        [4.0, 1.0, 0.0, 0.0],
        [1.0, 3.0, 1.0, 0.5],
        [0.0, 2.0, 2.0, 1.0],
        [0.0, 0.0, 1.0, 1.0],
    ]
)
ev = np.sort(np.linalg.eigvals(A).real)
print("  // A1 (4x4, real spectrum):", ", ".join(f"{v:.17g}" for v in ev))
B = rng.standard_normal((6, 6))
B = B + B.T  # symmetric => real spectrum
evB = np.sort(np.linalg.eigvals(B).real)
print("  // B entries (row-major):")
for row in B:
    print("  //   " + ", ".join(f"{v:.17g}" for v in row))
print("  // B spectrum:", ", ".join(f"{v:.17g}" for v in evB))

print()
print("// ---- exact recurrence coefficients (Fraction arithmetic) ----")
# Derived from the three-term recursion written in hatted coefficients,
# transformed to monic form.  Case numbering: 1..6 the associated Lame
# algebraizations, 7 the 2/cn^2-type family, 8 the 2/sn^2-type family.


def hatted(case, mm, ll, nn, k2):
    one = Fraction(1)
    kp2 = 1 - k2
    if case in (1, 2):
        c_p0, c_00, c_0m = k2 / 2, 2 * (k2 - 2), k2 / 2
        if case == 1:
            c_p, c_0, c_m = k2 * (mm - ll) / 2, one * 0, k2 * (ll - mm) / 2
            d = -(k2 * (ll - mm) ** 2) / 4 - Fraction(nn * (nn + 2), 2)
            c00_raw = 2 - k2
        else:
            c_p, c_0, c_m = k2 * (ll + mm + 1) / 2, one * 0, -k2 * (ll + mm + 1) / 2
            d = -(k2 * (ll + mm + 1) ** 2) / 4 - Fraction(nn * (nn + 2), 2)
            c00_raw = 2 - k2
    elif case in (3, 4):
        c_p0, c_00, c_0m = -k2 / 2, 2 * (k2 - 2), -k2 / 2
        c_p = k2 * (mm - 2 * ll - Fraction(1, 2)) / 2
        c_0 = (2 * ll + 1) * (k2 - 2)
        c_m = -k2 * (2 * ll + mm + Fraction(3, 2)) / 2
        d = -((2 * ll + 1) ** 2) / Fraction(4) - k2 * (mm + Fraction(1, 2)) ** 2 / 4 - Fraction(nn * (nn + 2), 2)
        c00_raw = 2 - k2
    elif case in (5, 6):
        c_p0, c_00, c_0m = k2 / 2, 2 * (k2 - 2), k2 / 2
        c_p = k2 * (2 * mm - ll + Fraction(1, 2)) / 2
        c_0 = (2 * mm + 1) * (k2 - 2)
        c_m = k2 * (2 * mm + ll + Fraction(3, 2)) / 2
        d = -((2 * mm + 1) ** 2) / Fraction(4) - k2 * (ll + Fraction(1, 2)) ** 2 / 4 - Fraction(nn * (nn + 2), 2)
        c00_raw = 2 - k2
    elif case == 7:
        c_p0, c_00, c_0m = -kp2 / 2, 2 * (1 + k2), -kp2 / 2
        c_p, c_0, c_m = kp2 * (nn + 4) / 2, one * 0, -kp2 * (nn + 4) / 2
        d = Fraction(3 * nn * nn + 12 * nn + 8, 4) - k2 * (nn * nn + 8 * nn + 8) / 4
        c00_raw = -(1 + k2)
    else:
        c_p0, c_00, c_0m = -one / 2, 2 * (1 - 2 * k2), -one / 2
        c_p, c_0, c_m = Fraction(nn + 4, 2), one * 0, -Fraction(nn + 4, 2)
        d = Fraction(3 * nn * nn + 12 * nn + 8, 4) - k2 * nn * (nn + 2) / 2
        c00_raw = 2 * k2 - 1
    d1 = d + Fraction(nn * (nn + 2), 12) * (c00_raw - c_00)
    return c_p0, c_00, c_0m, c_p, c_0, c_m, d1


def monic_coeffs(case, mm, ll, nn, k2):
    c_p0, c_00, c_0m, c_p, c_0, c_m, d1 = hatted(case, mm, ll, nn, k2)
    lam, rho, omg = [], [Fraction(0)], [Fraction(1)]
    a = lambda j: -((2 * j - nn + 1) * c_0m + c_m)
    g = lambda j: j * (j - 1 - nn) * ((2 * j - nn - 1) * c_p0 + c_p)
    for j in range(nn + 1):
        lam.append(-d1 - c_0 * (Fraction(j) - Fraction(nn, 2)) - c_00 * (Fraction(j) - Fraction(nn, 2)) ** 2)
        omg.append(a(j) * omg[-1])
        if j >= 1:
            rho.append(-a(j - 1) * g(j))
    rho.append(-a(nn) * g(nn + 1))
    return lam, rho[: nn + 2], omg[: nn + 1]


def show(case, mm, ll, nn, k2, label):
    lam, rho, omg = monic_coeffs(case, mm, ll, nn, k2)
    print(f"  // {label}")
    print("  //   lambda:", ", ".join(str(v) for v in lam))
    print("  //   rho:   ", ", ".join(str(v) for v in rho))
    print("  //   omega: ", ", ".join(str(v) for v in omg))


show(1, Fraction(2), Fraction(1), 3, Fraction(1, 3), "case 1, m=2, l=1, k2=1/3 (n=3)")
show(2, Fraction(3), Fraction(1), 1, Fraction(2, 5), "case 2, m=3, l=1, k2=2/5 (n=1)")
show(3, Fraction(5, 2), Fraction(1), 2, Fraction(1, 2), "case 3, m=5/2, l=1, k2=1/2 (n=2)")
show(5, Fraction(2), Fraction(3, 2), 1, Fraction(3, 4), "case 5, m=2, l=3/2, k2=3/4 (n=1)")
show(7, Fraction(0), Fraction(0), 4, Fraction(1, 4), "case 7, n=4, k2=1/4")
show(8, Fraction(0), Fraction(0), 3, Fraction(3, 7), "case 8, n=3, k2=3/7")

print()
print("// ---- spot check: case 7 n=1 critical polynomial roots ----")
lam, rho, omg = monic_coeffs(7, 0, 0, 1, Fraction(1, 2))
# P2(E) = (E - lam1)(E - lam0) - rho1
import sympy

E = sympy.Symbol("E")
P2 = sympy.expand((E - sympy.Rational(lam[1])) * (E - sympy.Rational(lam[0])) - sympy.Rational(rho[1]))
print("  // P2 =", P2, " roots:", sympy.solve(P2, E), " expect 7k^2-8 = -9/2, 2k^2-3 = -2")
