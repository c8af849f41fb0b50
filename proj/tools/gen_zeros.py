#!/usr/bin/env python3
"""Generate a table of zeta zero ordinates 0 < gamma <= T.

Zeros are located as sign changes of the Riemann-Siegel Z function
(main sum plus correction terms C0..C4), refined by bisection, and
validated against mpmath:

  * low zeros (gamma < --exact-below) come straight from mpmath.zetazero;
  * a random sample of indexed zeros (plus the last one) is compared with
    mpmath.zetazero, which pins both the value and the index, so a missed
    or spurious sign change below a sampled index is detected.

Usage: gen_zeros.py --count 100000 --out tests/data/zeros_100k.txt
"""
import argparse
import math
import random
import sys
import time

import mpmath as mp
import numpy as np
from numpy.polynomial import chebyshev as C

mp.mp.dps = 40
TWO_PI = 2.0 * math.pi


# ---- correction terms ------------------------------------------------------

def _psi(p):
    return mp.cos(2 * mp.pi * (p * p - p - mp.mpf(1) / 16)) / mp.cos(2 * mp.pi * p)


def _corrections(p):
    d = [mp.diff(_psi, p, k) for k in range(13)]
    pi2 = mp.pi ** 2
    c0 = d[0]
    c1 = -d[3] / (96 * pi2)
    c2 = d[2] / (64 * pi2) + d[6] / (18432 * pi2 ** 2)
    c3 = -d[1] / (64 * pi2) - d[5] / (3840 * pi2 ** 2) - d[9] / (5308416 * pi2 ** 3)
    c4 = (d[0] / (128 * pi2) + 19 * d[4] / (24576 * pi2 ** 2)
          + 11 * d[8] / (5898240 * pi2 ** 3) + d[12] / (2038431744 * pi2 ** 4))
    return [float(c) for c in (c0, c1, c2, c3, c4)]


def fit_corrections(deg=44, nodes=96):
    # Chebyshev nodes on [0,1]; with an even node count none hits the removable
    # singularities of _psi at 1/4 and 3/4
    k = np.arange(nodes)
    xs = 0.5 - 0.5 * np.cos((2 * k + 1) * np.pi / (2 * nodes))
    vals = np.array([_corrections(mp.mpf(float(x))) for x in xs])
    return [C.Chebyshev.fit(xs, vals[:, j], deg, domain=[0, 1]) for j in range(5)]


# ---- Z(t) --------------------------------------------------------------------

def theta(t):
    return (t / 2 * np.log(t / TWO_PI) - t / 2 - np.pi / 8
            + 1 / (48 * t) + 7 / (5760 * t ** 3) + 31 / (80640 * t ** 5))


class ZEval:
    def __init__(self, fits):
        self.fits = fits

    def __call__(self, t):
        t = np.asarray(t, dtype=np.float64)
        out = np.empty_like(t)
        a = np.sqrt(t / TWO_PI)
        n_t = np.floor(a).astype(np.int64)
        p = a - n_t
        th = theta(t)
        nmax = int(n_t.max())
        ns = np.arange(1, nmax + 1, dtype=np.float64)
        logn = np.log(ns)
        rs = 1.0 / np.sqrt(ns)
        chunk = max(1, 2_000_000 // nmax)
        for s in range(0, t.size, chunk):
            sl = slice(s, s + chunk)
            ph = th[sl, None] - t[sl, None] * logn[None, :]
            terms = np.cos(ph) * rs[None, :]
            mask = ns[None, :] <= n_t[sl, None]
            out[sl] = 2.0 * np.sum(np.where(mask, terms, 0.0), axis=1)
        w = 1.0 / a
        corr = np.zeros_like(t)
        wp = np.ones_like(t)
        for f in self.fits:
            corr += f(p) * wp
            wp *= w
        sign = np.where((n_t - 1) % 2 == 0, 1.0, -1.0)
        return out + sign * np.sqrt(w) * corr


# ---- zero search -------------------------------------------------------------

def find_zeros(Z, t_lo, t_hi, step):
    ts = np.arange(t_lo, t_hi + step, step)
    zs = np.concatenate([Z(ts[i:i + 200000]) for i in range(0, ts.size, 200000)])
    idx = np.nonzero(np.sign(zs[:-1]) * np.sign(zs[1:]) < 0)[0]
    a, b = ts[idx].copy(), ts[idx + 1].copy()
    za = zs[idx].copy()
    for _ in range(48):
        m = 0.5 * (a + b)
        zm = Z(m)
        same = np.sign(zm) == np.sign(za)
        a = np.where(same, m, a)
        za = np.where(same, zm, za)
        b = np.where(same, b, m)
    return 0.5 * (a + b)


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--count", type=int, default=100000)
    ap.add_argument("--out", required=True)
    ap.add_argument("--step", type=float, default=0.01)
    ap.add_argument("--exact-below", type=float, default=600.0)
    ap.add_argument("--samples", type=int, default=25)
    args = ap.parse_args()

    t0 = time.time()
    fits = fit_corrections()
    Z = ZEval(fits)
    print(f"fit {time.time() - t0:.1f}s", file=sys.stderr)

    # spot check Z against mpmath
    rng = random.Random(12345)
    worst = 0.0
    for _ in range(30):
        t = rng.uniform(args.exact_below, 75000.0)
        worst = max(worst, abs(float(Z(np.array([t]))[0]) - float(mp.siegelz(t))))
    print(f"max |Z - siegelz| = {worst:.3e}", file=sys.stderr)
    if worst > 1e-8:
        sys.exit("Z evaluation disagrees with mpmath")

    low = []
    n = 1
    while True:
        g = float(mp.zetazero(n).imag)
        if g >= args.exact_below:
            break
        low.append(g)
        n += 1
    print(f"{len(low)} exact low zeros, {time.time() - t0:.1f}s", file=sys.stderr)

    # upper end: slightly past the target zero
    t_top = float(mp.zetazero(args.count).imag) + 0.5
    high = find_zeros(Z, args.exact_below, t_top, args.step)
    zeros = np.concatenate([np.array(low), high])
    zeros = zeros[zeros <= t_top]
    print(f"{zeros.size} zeros found, {time.time() - t0:.1f}s", file=sys.stderr)
    if zeros.size < args.count:
        sys.exit(f"only {zeros.size} zeros found below {t_top}")
    zeros = zeros[:args.count]
    if not np.all(np.diff(zeros) > 0):
        sys.exit("zeros not strictly ascending")

    # random sample against zetazero
    worst = 0.0
    for k in [args.count] + [rng.randint(len(low) + 1, args.count) for _ in range(args.samples)]:
        worst = max(worst, abs(zeros[k - 1] - float(mp.zetazero(k).imag)))
    print(f"max sampled |gamma - zetazero| = {worst:.3e}", file=sys.stderr)
    if worst > 5e-10:
        sys.exit("sampled zeros disagree with mpmath")

    with open(args.out, "w") as fh:
        for g in zeros:
            fh.write(f"{g:.9f}\n")
    print(f"wrote {zeros.size} zeros up to {zeros[-1]:.9f}, {time.time() - t0:.1f}s",
          file=sys.stderr)


if __name__ == "__main__":
    main()
