#!/usr/bin/env python3
"""Regenerate data/b002890.txt without network access.

The free energy per site is expanded directly from the lattice integrand
log(1 - 2px + 2x^2 + 2px^3 + x^4), with coefficients kept as polynomials in
p = cos(t1) + cos(t2). Each p^l is replaced by its angular mean, computed from
mean(cos^j) = C(j, j/2) / 2^j. Exponentiating gives the partition-function
coefficients g(N). This path shares no code with the C++ library.

Usage: make_bfile_snapshot.py [max_index] > data/b002890.txt
"""
import sys
from fractions import Fraction
from math import comb


def mean_cos_power(j):
    return Fraction(comb(j, j // 2), 2 ** j) if j % 2 == 0 else Fraction(0)


def mean_p_power(l):
    return sum(comb(l, j) * mean_cos_power(j) * mean_cos_power(l - j) for j in range(l + 1))


def poly_mul(a, b):
    out = {}
    for i, u in a.items():
        for j, v in b.items():
            out[i + j] = out.get(i + j, 0) + u * v
    return {k: v for k, v in out.items() if v != 0}


def poly_add(a, b, scale=1):
    out = dict(a)
    for k, v in b.items():
        out[k] = out.get(k, 0) + scale * v
    return {k: v for k, v in out.items() if v != 0}


def main():
    max_index = int(sys.argv[1]) if len(sys.argv) > 1 else 49
    order = 2 * max_index + 2
    # u(x) = -2p x + 2x^2 + 2p x^3 + x^4, coefficients are dicts {p-power: value}
    u = [{} for _ in range(order + 1)]
    u[1] = {1: Fraction(-2)}
    u[2] = {0: Fraction(2)}
    if order >= 3:
        u[3] = {1: Fraction(2)}
    if order >= 4:
        u[4] = {0: Fraction(1)}
    # log(1 + u) = sum_k (-1)^(k+1) u^k / k
    log_series = [{} for _ in range(order + 1)]
    power = [dict(c) for c in u]
    for k in range(1, order + 1):
        for n in range(order + 1):
            log_series[n] = poly_add(log_series[n], power[n], Fraction((-1) ** (k + 1), k))
        nxt = [{} for _ in range(order + 1)]
        for i in range(order + 1):
            if not power[i]:
                continue
            for j in range(1, min(4, order - i) + 1):
                nxt[i + j] = poly_add(nxt[i + j], poly_mul(power[i], u[j]))
        power = nxt
    means = {}
    f = [Fraction(0)] * (order + 1)
    for n in range(1, order + 1):
        total = Fraction(0)
        for l, c in log_series[n].items():
            if l not in means:
                means[l] = mean_p_power(l)
            total += c * means[l]
        f[n] = total / 2
    g = [Fraction(0)] * (order + 1)
    g[0] = Fraction(1)
    for m in range(1, order + 1):
        g[m] = sum(n * f[n] * g[m - n] for n in range(1, m + 1)) / m
    print("# A002890: low-temperature series for the square-lattice Ising partition function.")
    print("# Offline snapshot regenerated by tools/make_bfile_snapshot.py (OEIS was not reachable).")
    print("# Index i corresponds to energy offset N = 2*i + 2.")
    for i in range(1, max_index + 1):
        v = g[2 * i + 2]
        assert v.denominator == 1
        print(i, v.numerator)


if __name__ == "__main__":
    main()
