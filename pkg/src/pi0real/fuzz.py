"""Seeded random generators for property tests.

Every generator takes a :class:`random.Random`; :func:`rng` builds one from
``PI0_SEED`` (default ``20211``) so fuzz runs are reproducible and can be
re-seeded from the environment.
"""

from __future__ import annotations

import os
import random

from . import root_datum as rd
from .gamma_lattice import GammaLattice, base_change
from .real_form import RealFormSpec, catalog, transport_form
from .root_datum import RootDatum, pairing
from .zlattice import IntMatrix

DEFAULT_SEED = 20211


def rng(offset: int = 0) -> random.Random:
    return random.Random(int(os.environ.get("PI0_SEED", DEFAULT_SEED)) + offset)


def random_unimodular(n: int, r: random.Random, steps: int | None = None) -> IntMatrix:
    """Signed permutation times a few elementary column operations."""
    perm = list(range(n))
    r.shuffle(perm)
    m = [[0] * n for _ in range(n)]
    for i, j in enumerate(perm):
        m[i][j] = r.choice((-1, 1))
    for _ in range(steps if steps is not None else 2 * n):
        if n < 2:
            break
        i, j = r.sample(range(n), 2)
        q = r.choice((-2, -1, 1, 2))
        for row in m:
            row[j] += q * row[i]
    return IntMatrix(m, n, n)


SWAP = IntMatrix([[0, 1], [1, 0]])


def random_involution(n: int, r: random.Random) -> GammaLattice:
    """Random sum of trivial, sign and swap blocks, conjugated by a unimodular matrix."""
    blocks, size = [], 0
    while size < n:
        kind = r.choice(("+", "-", "s") if n - size >= 2 else ("+", "-"))
        blocks.append({"+": IntMatrix([[1]]), "-": IntMatrix([[-1]]), "s": SWAP}[kind])
        size += blocks[-1].rows
    return base_change(GammaLattice(n, IntMatrix.block_diag(*blocks)), random_unimodular(n, r))


def reflection(d: RootDatum, i: int) -> IntMatrix:
    """Action of ``s_alpha`` on ``X_*``: ``x -> x - <alpha, x> alpha^vee``."""
    a, ac = d.roots[i], d.coroots[i]
    n = d.rank
    return IntMatrix([[int(p == q) - ac[p] * a[q] for q in range(n)] for p in range(n)], n, n)


def random_weyl_element(d: RootDatum, r: random.Random, length: int = 6) -> tuple[IntMatrix, IntMatrix]:
    """``(w, w^-1)`` for a random word in the simple reflections."""
    n = d.rank
    w = winv = IntMatrix.identity(n)
    if not d.simple_indices:
        return w, winv
    for _ in range(length):
        s = reflection(d, r.choice(d.simple_indices))
        w, winv = w @ s, s @ winv
    return w, winv


def random_orthogonal_theta(d: RootDatum, r: random.Random) -> IntMatrix:
    """``+-`` a product of reflections in mutually orthogonal roots, Weyl-conjugated."""
    n = d.rank
    chosen: list[int] = []
    idx = list(range(len(d.roots)))
    r.shuffle(idx)
    target = r.randint(0, n)
    for i in idx:
        if len(chosen) >= target:
            break
        if all(pairing(d.roots[i], d.coroots[j]) == 0 and pairing(d.roots[j], d.coroots[i]) == 0
               for j in chosen):
            chosen.append(i)
    theta = IntMatrix.identity(n)
    for i in chosen:
        theta = theta @ reflection(d, i)
    if r.random() < 0.5:
        theta = -theta
    w, winv = random_weyl_element(d, r)
    return w @ theta @ winv


SMALL_ENTRIES = [
    ("split", "A", 1, "sc"), ("split", "A", 1, "adjoint"), ("split", "A", 2, "adjoint"),
    ("split", "A", 3, "adjoint"), ("split", "B", 2, "adjoint"), ("split", "C", 2, "adjoint"),
    ("split", "G", 2, "sc"), ("compact", "A", 3, "adjoint"), ("compact", "B", 3, "adjoint"),
    ("gl_r", 1), ("gl_r", 2), ("gl_r", 3), ("torus", 1), ("torus", 2),
    ("u", 1, 1), ("u", 2, 1), ("su", 2, 1), ("su", 2, 2), ("so", 1, 3), ("so", 2, 2),
    ("so", 2, 3), ("so", 1, 4), ("so", 3, 3), ("sp2n_r", 2),
]


def block_theta(*thetas: IntMatrix) -> IntMatrix:
    return IntMatrix.block_diag(*thetas)


def random_pair(r: random.Random, max_rank: int = 8) -> tuple[RootDatum, RealFormSpec]:
    """Product of random catalog entries, randomly re-twisted and base-changed."""
    datum, theta = rd.torus(0), IntMatrix.identity(0)
    for _ in range(r.randint(1, 3)):
        name, *params = r.choice(SMALL_ENTRIES)
        d, f = catalog(name, *params)
        if datum.rank + d.rank > max_rank:
            continue
        if r.random() < 0.15 and datum.rank + 2 * d.rank <= max_rank:
            # a complex group viewed as a real group: conjugation swaps two copies
            n = d.rank
            sign = r.choice((1, -1))
            top = [[0] * n + [sign * int(i == j) for j in range(n)] for i in range(n)]
            bottom = [[sign * int(i == j) for j in range(n)] + [0] * n for i in range(n)]
            d = rd.product(d, d)
            f = RealFormSpec(IntMatrix(top + bottom, 2 * n, 2 * n))
        datum = rd.product(datum, d)
        theta = block_theta(theta, f.theta)
    if datum.rank == 0:
        datum, theta = rd.torus(1), IntMatrix([[r.choice((1, -1))]])
    if r.random() < 0.3:
        theta = random_orthogonal_theta(datum, r)
    elif r.random() < 0.5:
        w, winv = random_weyl_element(datum, r)
        theta = w @ theta @ winv
    f = RealFormSpec(theta, "fuzz")
    if r.random() < 0.7:
        U = random_unimodular(datum.rank, r)
        datum, f = rd.transport(datum, U), transport_form(f, U)
    return datum, f


SC_TYPES = [("A", n) for n in range(1, 9)] + [("B", n) for n in range(2, 9)] + \
    [("C", n) for n in range(3, 9)] + [("D", n) for n in range(4, 9)] + \
    [("E", 6), ("E", 7), ("E", 8), ("F", 4), ("G", 2)]


def random_sc_pair(r: random.Random, max_rank: int = 8) -> tuple[RootDatum, RealFormSpec]:
    """A simply connected datum (possibly a product) with a random valid involution."""
    kinds = [t for t in SC_TYPES if t[1] <= max_rank]
    kind, n = r.choice(kinds)
    d = rd.simple_sc(kind, n)
    if n < max_rank and r.random() < 0.3:
        k2, n2 = r.choice([t for t in kinds if t[1] <= max_rank - n])
        d = rd.product(d, rd.simple_sc(k2, n2))
    f = RealFormSpec(random_orthogonal_theta(d, r), "fuzz-sc")
    if r.random() < 0.5:
        U = random_unimodular(d.rank, r)
        d, f = rd.transport(d, U), transport_form(f, U)
    return d, f
