"""Independent oracle for values frozen into the unit tests.

Psi comes from power sums of the roots (a = xy, b = -x^2 - y^2), Omega from a
separate Fraction DP, harmonic numbers from Fraction sums, Lagarias margins from mpmath.
"""
from fractions import Fraction as Fr

import mpmath
import sympy as sp


def psi_roots(a, b, n):
    s = sp.sqrt(sp.nsimplify(2 * a - b))
    disc = sp.sqrt(s**2 - 4 * sp.nsimplify(a))
    x, y = (s + disc) / 2, (s - disc) / 2
    return sp.nsimplify(sp.simplify(sp.expand((x**n + y**n) / s ** (n % 2))))


def omega(zeta, xi, n):
    K = n // 2
    row = [Fr(1)] * (K + 1)
    c1, c2 = 2 * zeta - xi, 2 * zeta
    for k in range(1, K + 1):
        row = [c1 * (n - r - k) * row[r] - c2 * (n - 2 * r - (n - 1) % 2) * row[r + 1]
               for r in range(K - k + 1)]
    return row


def falling(n):
    out = 1
    for i in range(1, n // 2 + 1):
        out *= n - i
    return out


for a, b, n in [(1, 4, 16), (2, -5, 11), (3, 7, 9), (-2, 3, 12), (Fr(1, 2), Fr(-3, 2), 7)]:
    print("psi", a, b, n, psi_roots(a, b, n))
for z, x, n in [(2, 3, 10), (-1, 2, 9), (Fr(1, 2), Fr(-3, 2), 8), (3, -1, 13)]:
    top = omega(Fr(z), Fr(x), n)[0]
    print("omega", z, x, n, top, top / falling(n), psi_roots(z, x, n))
print("omega level1 (2,3|10)", omega(Fr(2), Fr(3), 10))
for k in [1, 2, 3, 4, 5, 10]:
    print("H", k, sum(Fr(1, t) for t in range(1, k + 1)))
mpmath.mp.dps = 60
for n in [6, 12, 5040, 55440]:
    s = sum(d for d in range(1, n + 1) if n % d == 0)
    h = mpmath.fsum(mpmath.mpf(1) / t for t in range(1, n + 1))
    print("lagarias", n, s, mpmath.nstr(h + mpmath.log(h) * mpmath.exp(h), 20))
def ll(p):
    m, s = 2**p - 1, 4
    for _ in range(p - 2):
        s = (s * s - 2) % m
    return s == 0
print("LL", [p for p in sp.primerange(3, 128) if ll(p)])
for n in [9, 17, 25, 33]:
    m, k = (n - 1) // 2, (n - 1) // 4
    H = sum(Fr(1, t) for t in range(1, k + 1))
    rhs = sp.factorial(m) * 2**m - sp.factorial(m) * 2 ** (m - 1) * n * H
    print("harm", n, falling(n) % n**2, Fr(rhs) % n**2 if Fr(rhs).denominator == 1 else rhs)
