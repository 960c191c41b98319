"""Root data of connected reductive groups and the standard constructors.

A root datum is stored on the cocharacter side: ``X_*(T) = Z^rank``,
coroots are vectors in ``Z^rank`` and roots are vectors in the dual basis, so
the pairing is the dot product.  ``roots[i]`` is paired with ``coroots[i]``.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass, field
from fractions import Fraction

from .errors import AxiomViolation, InvalidType
from .zlattice import IntMatrix, Vector, as_matrix, inverse_unimodular, rank_q, solve_integer

SIMPLE_TYPES = ("A", "B", "C", "D", "E", "F", "G")


def pairing(a: Vector, b: Vector) -> int:
    return sum(x * y for x, y in zip(a, b))


@dataclass(frozen=True)
class RootDatum:
    rank: int
    coroots: tuple[Vector, ...] = ()
    roots: tuple[Vector, ...] = ()
    simple_indices: tuple[int, ...] = ()
    name: str | None = field(default=None, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "coroots", tuple(tuple(int(x) for x in c) for c in self.coroots))
        object.__setattr__(self, "roots", tuple(tuple(int(x) for x in r) for r in self.roots))
        object.__setattr__(self, "simple_indices", tuple(int(i) for i in self.simple_indices))

    @property
    def semisimple_rank(self) -> int:
        return len(self.simple_indices)

    @property
    def simple_coroots(self) -> tuple[Vector, ...]:
        return tuple(self.coroots[i] for i in self.simple_indices)

    @property
    def simple_roots(self) -> tuple[Vector, ...]:
        return tuple(self.roots[i] for i in self.simple_indices)

    def coroot_set(self) -> frozenset[Vector]:
        return frozenset(self.coroots)


@dataclass(frozen=True)
class CorootEmbedding:
    """Matrix of ``rho_*: X_*(T^sc) -> X_*(T)``; columns are the simple coroots."""

    matrix: IntMatrix


def validate(d: RootDatum) -> RootDatum:
    """Check the root datum axioms and return a deduplicated copy."""
    n = d.rank
    if n < 0:
        raise AxiomViolation("negative rank")
    if len(d.roots) != len(d.coroots):
        raise AxiomViolation(f"{len(d.roots)} roots but {len(d.coroots)} coroots")
    for v in d.roots + d.coroots:
        if len(v) != n:
            raise AxiomViolation(f"vector {v} does not have length {n}")

    pair_of: dict[Vector, Vector] = {}
    keep = []
    for idx, (a, ac) in enumerate(zip(d.roots, d.coroots)):
        if pairing(a, ac) != 2:
            raise AxiomViolation(f"<{a}, {ac}> = {pairing(a, ac)}, expected 2")
        if ac in pair_of:
            if pair_of[ac] != a:
                raise AxiomViolation(f"coroot {ac} paired with both {pair_of[ac]} and {a}")
            continue
        pair_of[ac] = a
        keep.append(idx)
    root_of = pair_of
    if len({a for a in root_of.values()}) != len(root_of):
        raise AxiomViolation("a root is paired with two different coroots")

    for ac, a in root_of.items():
        neg = tuple(-x for x in ac)
        if root_of.get(neg) != tuple(-x for x in a):
            raise AxiomViolation(f"pair ({a}, {ac}) has no negative partner")

    for ac, a in root_of.items():
        for bc, b in root_of.items():
            k = pairing(a, bc)
            rc = tuple(x - k * y for x, y in zip(bc, ac))
            r = tuple(x - pairing(b, ac) * y for x, y in zip(b, a))
            if root_of.get(rc) != r:
                raise AxiomViolation(
                    f"reflection in ({a}, {ac}) sends pair ({b}, {bc}) to ({r}, {rc}), "
                    "which is not a pair of the datum")

    # simple indices refer to the original list; remap onto kept entries
    position = {old: new for new, old in enumerate(keep)}
    simple = []
    for i in d.simple_indices:
        if not 0 <= i < len(d.coroots):
            raise AxiomViolation(f"simple index {i} out of range")
        j = position.get(i)
        if j is None:
            j = [d.coroots[k] for k in keep].index(d.coroots[i])
        simple.append(j)
    if len(set(simple)) != len(simple):
        raise AxiomViolation("repeated simple index")
    out = RootDatum(n, tuple(d.coroots[k] for k in keep), tuple(d.roots[k] for k in keep),
                    tuple(simple), d.name)

    s = len(simple)
    if s > n:
        raise AxiomViolation("more simple coroots than the rank")
    R = IntMatrix.from_columns(out.simple_coroots, n)
    if rank_q(R) != s:
        raise AxiomViolation("simple coroots are linearly dependent")
    for bc in out.coroots:
        c = solve_integer(R, bc)
        if c is None or not (all(x >= 0 for x in c) or all(x <= 0 for x in c)):
            raise AxiomViolation(
                f"coroot {bc} is not an integral combination of simple coroots of uniform sign")
    return out


# --------------------------------------------------------------------------
# Cartan matrices from explicit Euclidean simple roots (Bourbaki numbering)


def _e(n: int, *terms: tuple[int, Fraction | int]) -> tuple[Fraction, ...]:
    v = [Fraction(0)] * n
    for i, c in terms:
        v[i] += c
    return tuple(v)


def _euclidean_simple_roots(kind: str, n: int) -> list[tuple[Fraction, ...]]:
    if kind == "A":
        return [_e(n + 1, (i, 1), (i + 1, -1)) for i in range(n)]
    if kind in "BCD":
        base = [_e(n, (i, 1), (i + 1, -1)) for i in range(n - 1)]
        last = {"B": _e(n, (n - 1, 1)),
                "C": _e(n, (n - 1, 2)),
                "D": _e(n, (n - 2, 1), (n - 1, 1))}[kind]
        return base + [last]
    if kind == "G":
        return [_e(3, (0, 1), (1, -1)), _e(3, (0, -2), (1, 1), (2, 1))]
    if kind == "F":
        h = Fraction(1, 2)
        return [_e(4, (1, 1), (2, -1)), _e(4, (2, 1), (3, -1)), _e(4, (3, 1)),
                _e(4, (0, h), (1, -h), (2, -h), (3, -h))]
    if kind == "E":
        h = Fraction(1, 2)
        e8 = [_e(8, (0, h), (7, h), *[(i, -h) for i in range(1, 7)]),
              _e(8, (0, 1), (1, 1))] + [_e(8, (i, 1), (i - 1, -1)) for i in range(1, 7)]
        return e8[:n]
    raise InvalidType(kind)


def check_type(kind: str, n: int) -> None:
    ok = {"A": n >= 1, "B": n >= 1, "C": n >= 1, "D": n >= 2,
          "E": n in (6, 7, 8), "F": n == 4, "G": n == 2}.get(kind, False)
    if not ok:
        raise InvalidType(f"no simple type {kind}{n}")


@functools.lru_cache(maxsize=None)
def cartan_matrix(kind: str, n: int) -> IntMatrix:
    """``C[i][j] = <coroot_i, root_j> = 2 (a_i, a_j) / (a_i, a_i)``."""
    check_type(kind, n)
    simple = _euclidean_simple_roots(kind, n)
    dot = lambda u, v: sum(x * y for x, y in zip(u, v))  # noqa: E731
    entries = []
    for a in simple:
        row = []
        for b in simple:
            c = 2 * dot(a, b) / dot(a, a)
            assert c.denominator == 1
            row.append(int(c))
        entries.append(row)
    return IntMatrix(entries, n, n)


def reflection_closure(rank: int, simple_roots, simple_coroots) -> tuple[list[Vector], list[Vector]]:
    """All (root, coroot) pairs reachable from the simple ones by simple reflections."""
    simple = list(zip((tuple(a) for a in simple_roots), (tuple(c) for c in simple_coroots)))
    seen = {c: a for a, c in simple}
    order = [c for _, c in simple]
    frontier = list(simple)
    while frontier:
        nxt = []
        for b, bc in frontier:
            for a, ac in simple:
                r = tuple(x - pairing(b, ac) * y for x, y in zip(b, a))
                rc = tuple(x - pairing(a, bc) * y for x, y in zip(bc, ac))
                if rc not in seen:
                    seen[rc] = r
                    order.append(rc)
                    nxt.append((r, rc))
        frontier = nxt
    return [seen[c] for c in order], order


def _from_simple(rank, simple_roots, simple_coroots, name) -> RootDatum:
    roots, coroots = reflection_closure(rank, simple_roots, simple_coroots)
    return validate(RootDatum(rank, tuple(coroots), tuple(roots),
                              tuple(range(len(simple_roots))), name))


def parse_type(token: str, rank: int | None = None) -> tuple[str, int]:
    """``'E6'`` -> ``('E', 6)``; ``('A', 3)`` passes through."""
    token = token.strip().upper()
    kind, digits = token[:1], token[1:]
    if kind not in SIMPLE_TYPES:
        raise InvalidType(f"unknown simple type {token!r}")
    if digits:
        if not digits.isdigit() or (rank is not None and int(digits) != rank):
            raise InvalidType(f"bad type token {token!r}")
        rank = int(digits)
    if rank is None:
        raise InvalidType(f"type {token!r} needs a rank")
    check_type(kind, rank)
    return kind, rank


@functools.lru_cache(maxsize=None)
def simple_sc(kind: str, n: int | None = None) -> RootDatum:
    """Simply connected datum: simple coroots are the standard basis."""
    kind, n = parse_type(kind, n)
    C = cartan_matrix(kind, n)
    eye = IntMatrix.identity(n)
    return _from_simple(n, C.columns(), eye.columns(), f"{kind}{n} sc")


@functools.lru_cache(maxsize=None)
def simple_adjoint(kind: str, n: int | None = None) -> RootDatum:
    """Adjoint datum: simple roots are the standard dual basis."""
    kind, n = parse_type(kind, n)
    C = cartan_matrix(kind, n)
    eye = IntMatrix.identity(n)
    return _from_simple(n, eye.columns(), [C.row(i) for i in range(n)], f"{kind}{n} adjoint")


@functools.lru_cache(maxsize=None)
def classical_so(r: int, odd: bool) -> RootDatum:
    """``SO(2r+1)`` (type B, adjoint) or ``SO(2r)`` (type D) on ``X_* = Z^r``."""
    if r < 0:
        raise InvalidType("negative rank")
    eye = IntMatrix.identity(r).columns()
    diffs = [tuple(a - b for a, b in zip(eye[i], eye[i + 1])) for i in range(r - 1)]
    if odd:
        if r == 0:
            return torus(0)
        roots = diffs + [eye[r - 1]]
        coroots = diffs + [tuple(2 * x for x in eye[r - 1])]
        return _from_simple(r, roots, coroots, f"SO({2 * r + 1})")
    if r < 2:
        return RootDatum(r, name=f"SO({2 * r})")
    last = tuple(a + b for a, b in zip(eye[r - 2], eye[r - 1]))
    return _from_simple(r, diffs + [last], diffs + [last], f"SO({2 * r})")


@functools.lru_cache(maxsize=None)
def gl(n: int) -> RootDatum:
    if n < 1:
        raise InvalidType("gl(n) needs n >= 1")
    eye = IntMatrix.identity(n).columns()
    pairs = []
    for i in range(n):
        for j in range(n):
            if i != j:
                pairs.append((i, j))
    # simple ones (i, i+1) first
    pairs.sort(key=lambda p: (p[1] - p[0] != 1, p))
    vecs = [tuple(a - b for a, b in zip(eye[i], eye[j])) for i, j in pairs]
    return validate(RootDatum(n, tuple(vecs), tuple(vecs), tuple(range(n - 1)), f"GL({n})"))


def torus(n: int) -> RootDatum:
    if n < 0:
        raise InvalidType("torus rank must be >= 0")
    return RootDatum(n, name=f"torus({n})")


def product(d1: RootDatum, d2: RootDatum) -> RootDatum:
    z1, z2 = (0,) * d2.rank, (0,) * d1.rank
    coroots = tuple(c + z1 for c in d1.coroots) + tuple(z2 + c for c in d2.coroots)
    roots = tuple(a + z1 for a in d1.roots) + tuple(z2 + a for a in d2.roots)
    simple = d1.simple_indices + tuple(len(d1.coroots) + i for i in d2.simple_indices)
    name = " x ".join(x for x in (d1.name, d2.name) if x) or None
    return RootDatum(d1.rank + d2.rank, coroots, roots, simple, name)


def coroot_embedding(d: RootDatum) -> CorootEmbedding:
    return CorootEmbedding(IntMatrix.from_columns(d.simple_coroots, d.rank))


def is_simply_connected(d: RootDatum) -> bool:
    R = coroot_embedding(d).matrix
    return d.semisimple_rank == d.rank and abs(R.det()) == 1


def transport(d: RootDatum, U) -> RootDatum:
    """Rewrite the datum in the basis of ``X_*`` given by the columns of ``U``."""
    U = as_matrix(U)
    Uinv = inverse_unimodular(U)
    coroots = tuple(Uinv.apply(c) for c in d.coroots)
    roots = tuple(U.T.apply(a) for a in d.roots)
    return RootDatum(d.rank, coroots, roots, d.simple_indices, d.name)
