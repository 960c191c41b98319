"""Brute-force oracles, deliberately independent of the normal-form code.

Lattices here are lists of generator vectors.  Membership uses a private
echelon routine; quotient structures are read off from element orders of
explicitly enumerated cosets.
"""

from __future__ import annotations

import itertools
from collections import Counter

Vec = tuple[int, ...]


def echelon(gens, n: int) -> list[tuple[int, Vec]]:
    """(pivot row, vector) pairs; each vector vanishes above its pivot row."""
    pool = [list(g) for g in gens if any(g)]
    basis = []
    for i in range(n):
        while True:
            hot = [v for v in pool if v[i]]
            if len(hot) <= 1:
                break
            p = min(hot, key=lambda v: abs(v[i]))
            for v in hot:
                if v is not p:
                    q = v[i] // p[i]
                    for k in range(n):
                        v[k] -= q * p[k]
            pool = [v for v in pool if any(v)]
        hot = [v for v in pool if v[i]]
        if hot:
            basis.append((i, tuple(hot[0])))
            pool = [v for v in pool if v is not hot[0]]
    return basis


def reduce(basis, x) -> Vec:
    x = list(x)
    for p, v in basis:
        q = x[p] // abs(v[p]) * (1 if v[p] > 0 else -1)
        for k in range(len(x)):
            x[k] -= q * v[k]
    return tuple(x)


def member(gens, x, n: int | None = None) -> bool:
    n = len(x) if n is None else n
    x = list(x)
    for p, v in echelon(gens, n):
        if x[p] % v[p]:
            return False
        q = x[p] // v[p]
        for k in range(n):
            x[k] -= q * v[k]
    return not any(x)


def enumerate_cosets(L_gens, S_gens, n: int, limit: int = 4096) -> list[Vec]:
    """Canonical representatives of L/S by breadth-first search; None if too many."""
    basis = echelon(S_gens, n)
    start = reduce(basis, (0,) * n)
    seen = {start}
    frontier = [start]
    gens = [tuple(g) for g in L_gens] + [tuple(-x for x in g) for g in L_gens]
    while frontier:
        nxt = []
        for c in frontier:
            for g in gens:
                y = reduce(basis, tuple(a + b for a, b in zip(c, g)))
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
                    if len(seen) > limit:
                        return None
        frontier = nxt
    return sorted(seen)


def _primes(m: int) -> list[int]:
    out, p = [], 2
    while p * p <= m:
        if m % p == 0:
            out.append(p)
            while m % p == 0:
                m //= p
        p += 1
    if m > 1:
        out.append(m)
    return out


def structure_by_enumeration(L_gens, S_gens, n: int) -> tuple[int, ...]:
    """Invariant factors of the finite group L/S, from counts of m-torsion."""
    cosets = enumerate_cosets(L_gens, S_gens, n)
    if cosets is None:
        raise ValueError("quotient too large for enumeration")
    order = len(cosets)
    S_gens = list(S_gens)

    def killed(m):
        return sum(1 for c in cosets if member(S_gens, tuple(m * x for x in c), n))

    per_prime: dict[int, list[int]] = {}
    for p in _primes(order):
        logs = [0]
        j = 1
        while True:
            k = killed(p ** j)
            e = 0
            while k > 1:
                k //= p
                e += 1
            logs.append(e)
            if e == logs[-2]:
                break
            j += 1
        # number of cyclic p-factors of order >= p^j is logs[j] - logs[j-1]
        counts = Counter()
        for jj in range(1, len(logs)):
            counts[jj] = logs[jj] - logs[jj - 1]
        powers = []
        for jj in sorted(counts):
            nxt = counts.get(jj + 1, 0)
            powers += [p ** jj] * (counts[jj] - nxt)
        per_prime[p] = sorted(powers, reverse=True)
    width = max((len(v) for v in per_prime.values()), default=0)
    factors = []
    for k in range(width):
        f = 1
        for powers in per_prime.values():
            if k < len(powers):
                f *= powers[k]
        factors.append(f)
    return tuple(sorted(factors))


def index_by_minors(gens, n: int) -> int:
    """Index of a full-rank lattice in Z^n: gcd of the n x n minors (0 if not full rank)."""
    from fractions import Fraction
    from math import gcd

    def det(rows):
        a = [[Fraction(x) for x in r] for r in rows]
        d = Fraction(1)
        for c in range(n):
            p = next((i for i in range(c, n) if a[i][c] != 0), None)
            if p is None:
                return 0
            if p != c:
                a[c], a[p] = a[p], a[c]
                d = -d
            d *= a[c][c]
            for i in range(c + 1, n):
                f = a[i][c] / a[c][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[c])]
        return int(d)

    g = 0
    for cols in itertools.combinations(list(gens), n):
        g = gcd(g, det([[c[i] for c in cols] for i in range(n)]))
    return g
