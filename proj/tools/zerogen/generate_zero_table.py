#!/usr/bin/env python3
"""Generate a table of imaginary parts of the nontrivial zeros of zeta(s).

The low zeros come from mpmath.zetazero.  Above --split the zeros are located
with a vectorised Riemann-Siegel Z(t) (corrections C0..C4), bracketed between
Gram points and refined by Illinois regula falsi.  Completeness is enforced
with Rosser's rule: every Rosser block must contain as many sign changes as it
has Gram intervals.  Rosser's rule is known to hold far beyond the heights
produced here.

Output format: one ordinate per line, ascending, '#' comment header.
"""

import argparse
import math
import sys

import mpmath
import numpy as np

PI = math.pi


def psi_taylor(degree=64, dps=80):
    """Taylor coefficients of Psi(p) = cos(2pi(p^2-p-1/16))/cos(2pi p) about p=1/2."""
    mpmath.mp.dps = dps
    two_pi = 2 * mpmath.pi
    # numerator in x = p - 1/2:  cos(2pi x^2 - 5pi/8)
    c0, s0 = mpmath.cos(5 * mpmath.pi / 8), mpmath.sin(5 * mpmath.pi / 8)
    num = [mpmath.mpf(0)] * (degree + 1)
    for k in range(0, degree // 2 + 1):
        # cos(2pi x^2) and sin(2pi x^2) series
        coeff = (two_pi ** k) / mpmath.factorial(k)
        power = 2 * k
        if power > degree:
            break
        if k % 2 == 0:
            num[power] += c0 * coeff * (1 if k % 4 == 0 else -1)
        else:
            num[power] += s0 * coeff * (1 if k % 4 == 1 else -1)
    # denominator: cos(2pi (x + 1/2)) = -cos(2pi x)
    den = [mpmath.mpf(0)] * (degree + 1)
    for k in range(0, degree // 2 + 1):
        den[2 * k] = -((-1) ** k) * (two_pi ** (2 * k)) / mpmath.factorial(2 * k)
    out = [mpmath.mpf(0)] * (degree + 1)
    for n in range(degree + 1):
        acc = num[n]
        for j in range(1, n + 1):
            acc -= den[j] * out[n - j]
        out[n] = acc / den[0]
    return out


def derivative_series(coeffs, order):
    res = list(coeffs)
    for _ in range(order):
        res = [res[k] * k for k in range(1, len(res))]
    return res


def correction_polys(degree=64):
    psi = psi_taylor(degree)
    pi = mpmath.pi

    def d(k):
        return derivative_series(psi, k)

    def combine(terms):
        n = max(len(c) for _, c in terms)
        out = [mpmath.mpf(0)] * n
        for w, c in terms:
            for i, v in enumerate(c):
                out[i] += w * v
        return [float(v) for v in out]

    c0 = combine([(1, d(0))])
    c1 = combine([(-1 / (96 * pi**2), d(3))])
    c2 = combine([(1 / (64 * pi**2), d(2)), (1 / (18432 * pi**4), d(6))])
    c3 = combine([(-1 / (64 * pi**2), d(1)), (-1 / (3840 * pi**4), d(5)),
                  (-1 / (5308416 * pi**6), d(9))])
    c4 = combine([(1 / (128 * pi**2), d(0)), (19 / (24576 * pi**4), d(4)),
                  (11 / (5898240 * pi**6), d(8)), (1 / (2038431744 * pi**8), d(12))])
    return [np.array(c[::-1]) for c in (c0, c1, c2, c3, c4)]  # highest power first


CPOLYS = None


def theta(t):
    return (t / 2) * np.log(t / (2 * PI)) - t / 2 - PI / 8 + 1 / (48 * t) \
        + 7 / (5760 * t**3) + 31 / (80640 * t**5)


def siegel_z(t):
    t = np.asarray(t, dtype=np.float64)
    tau = np.sqrt(t / (2 * PI))
    n_terms = np.floor(tau).astype(np.int64)
    frac = tau - n_terms
    th = theta(t)
    total = np.zeros_like(t)
    for n in range(1, int(n_terms.max()) + 1):
        mask = n_terms >= n
        if not mask.any():
            break
        term = np.cos(th - t * math.log(n)) / math.sqrt(n)
        total += np.where(mask, term, 0.0)
    total *= 2
    x = frac - 0.5
    inv = 1.0 / tau
    rem = np.zeros_like(t)
    w = np.ones_like(t)
    for poly in CPOLYS:
        rem += w * np.polyval(poly, x)
        w *= inv
    sign = np.where((n_terms - 1) % 2 == 0, 1.0, -1.0)
    return total + sign * tau ** -0.5 * rem


def gram_point(n):
    """Solve theta(g) = n*pi by Newton iteration (vectorised)."""
    n = np.asarray(n, dtype=np.float64)
    g = np.maximum(2 * PI * (n + 1) / np.maximum(np.log(np.maximum(n, 2.0)), 1.0), 20.0)
    for _ in range(60):
        f = theta(g) - n * PI
        fp = 0.5 * np.log(g / (2 * PI))
        g = g - f / fp
    return g


def refine(a, b, za, zb, iters=80):
    for _ in range(iters):
        c = b - zb * (b - a) / (zb - za)
        zc = siegel_z(c)
        same = np.sign(zc) == np.sign(zb)
        # Illinois update
        a_new = np.where(same, a, b)
        za_new = np.where(same, za * 0.5, zb)
        a, za = a_new, za_new
        b, zb = c, zc
        if np.all(np.abs(b - a) < 1e-12 * b):
            break
    return b


def zeros_between(t_lo_index, t_hi_index, log):
    """Zeros in [g_lo, g_hi) where lo/hi are good Gram indices."""
    idx = np.arange(t_lo_index, t_hi_index + 1)
    grams = gram_point(idx)
    zg = siegel_z(grams)
    good = ((-1.0) ** idx) * zg > 0
    if not good[0] or not good[-1]:
        raise RuntimeError("endpoints must be good Gram points")
    good_pos = np.nonzero(good)[0]
    brackets = []
    sub = 4
    for bi in range(len(good_pos) - 1):
        s, e = good_pos[bi], good_pos[bi + 1]
        expected = e - s
        level = sub
        while True:
            pts = np.concatenate([np.linspace(grams[k], grams[k + 1], level, endpoint=False)
                                  for k in range(s, e)] + [grams[e:e + 1]])
            vals = siegel_z(pts)
            changes = np.nonzero(np.sign(vals[:-1]) != np.sign(vals[1:]))[0]
            if len(changes) == expected:
                for c in changes:
                    brackets.append((pts[c], pts[c + 1], vals[c], vals[c + 1]))
                break
            if len(changes) > expected or level > 4096:
                raise RuntimeError(f"Rosser block [{grams[s]}, {grams[e]}) has {len(changes)} "
                                   f"sign changes, expected {expected}")
            level *= 4
        if bi % 5000 == 0:
            log(f"  block {bi}/{len(good_pos) - 1} at t={grams[s]:.1f}")
    a = np.array([b[0] for b in brackets])
    b = np.array([b[1] for b in brackets])
    za = np.array([b[2] for b in brackets])
    zb = np.array([b[3] for b in brackets])
    roots = np.empty_like(a)
    chunk = 20000
    for i in range(0, len(a), chunk):
        roots[i:i + chunk] = refine(a[i:i + chunk], b[i:i + chunk], za[i:i + chunk], zb[i:i + chunk])
    return roots


def next_good_gram(n, direction=1):
    while True:
        g = gram_point(np.array([n]))
        if ((-1.0) ** n) * siegel_z(g)[0] > 0:
            return n
        n += direction


def main():
    global CPOLYS
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--height", type=float, default=100000.0)
    ap.add_argument("--split", type=float, default=2000.0)
    ap.add_argument("--decimals", type=int, default=10)
    ap.add_argument("--output", required=True)
    args = ap.parse_args()

    def log(msg):
        print(msg, file=sys.stderr, flush=True)

    CPOLYS = correction_polys()
    approx_index = lambda t: int(theta(np.array([t]))[0] / PI)
    lo = next_good_gram(approx_index(args.split))
    hi = next_good_gram(approx_index(args.height) + 1)
    g_lo = gram_point(np.array([lo]))[0]
    log(f"low range via mpmath below g_{lo} = {g_lo:.6f}")

    mpmath.mp.dps = 25
    low = []
    n = 1
    while True:
        z = float(mpmath.zetazero(n).imag)
        if z >= g_lo:
            break
        low.append(z)
        n += 1
    if len(low) != lo + 1:
        raise RuntimeError(f"N(g_{lo}) = {len(low)} differs from {lo + 1}")
    log(f"{len(low)} low zeros")

    high = zeros_between(lo, hi, log)
    zeros = np.concatenate([np.array(low), high])
    zeros = zeros[zeros <= args.height]
    if np.any(np.diff(zeros) <= 0):
        raise RuntimeError("ordinates not strictly increasing")
    with open(args.output, "w") as fh:
        fh.write("# Imaginary parts of the first %d nontrivial zeros of zeta(s), 0 < t <= %g\n"
                 % (len(zeros), args.height))
        fh.write("# generated by tools/zerogen/generate_zero_table.py\n")
        fmt = "%." + str(args.decimals) + "f\n"
        for z in zeros:
            fh.write(fmt % z)
    log(f"wrote {len(zeros)} zeros")


if __name__ == "__main__":
    main()
