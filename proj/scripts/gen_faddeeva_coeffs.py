#!/usr/bin/env python3
"""Regenerates the frozen numerical constants used by the complex error
function implementation and the quadrature engine:

  src/weideman48.inc   rational-approximation coefficients for w(z) on the
                       mid-range region (Weideman's construction, N = 48)
  src/gauss15.inc      15-point Gauss-Legendre nodes/weights on [-1, 1]

Run from the repository root:  python3 scripts/gen_faddeeva_coeffs.py
"""
import numpy as np
import mpmath as mp

mp.mp.dps = 40

N = 48


def weideman_coeffs(n):
    # Sample f(theta) = exp(-t^2) (L^2 + t^2), t = L tan(theta/2), and take
    # the real DFT; done in mpmath so the frozen doubles are correctly rounded.
    m = 2 * n
    m2 = 2 * m
    L = mp.sqrt(n / mp.sqrt(2))
    ks = list(range(-m + 1, m))
    f = [mp.mpf(0)]
    for k in ks:
        t = L * mp.tan(mp.pi * k / (2 * m))
        f.append(mp.e**(-t * t) * (L * L + t * t))
    # fftshift: rotate so the k = -m+1 sample sits at index m+1
    shifted = f[m:] + f[:m]
    a = []
    for j in range(1, n + 1):
        s = mp.mpf(0)
        for idx, val in enumerate(shifted):
            s += val * mp.cos(2 * mp.pi * j * idx / m2)
        a.append(s / m2)
    a.reverse()  # highest-order coefficient first (Horner)
    return L, a


def gauss_legendre(n):
    seeds, _ = np.polynomial.legendre.leggauss(n)
    nodes = []
    for s in seeds:
        r = mp.findroot(lambda x: mp.legendre(n, x), mp.mpf(s))
        nodes.append(r)
    weights = []
    for r in nodes:
        dp = mp.diff(lambda x: mp.legendre(n, x), r)
        weights.append(2 / ((1 - r * r) * dp * dp))
    return nodes, weights


def fmt(x):
    return mp.nstr(x, 17, strip_zeros=False)


L, a = weideman_coeffs(N)
with open("src/weideman48.inc", "w") as f:
    f.write("// Generated by scripts/gen_faddeeva_coeffs.py. Do not edit.\n")
    f.write(f"inline constexpr double kWeidemanL = {fmt(L)};\n")
    f.write(f"inline constexpr double kWeidemanCoeff[{N}] = {{\n")
    for c in a:
        f.write(f"    {fmt(c)},\n")
    f.write("};\n")

nodes, weights = gauss_legendre(15)
with open("src/gauss15.inc", "w") as f:
    f.write("// Generated by scripts/gen_faddeeva_coeffs.py. Do not edit.\n")
    f.write("inline constexpr double kGauss15Node[15] = {\n")
    for r in nodes:
        f.write(f"    {fmt(r)},\n")
    f.write("};\n")
    f.write("inline constexpr double kGauss15Weight[15] = {\n")
    for w in weights:
        f.write(f"    {fmt(w)},\n")
    f.write("};\n")

print("wrote src/weideman48.inc, src/gauss15.inc")
