"""Exact integer matrices, Smith/Hermite normal forms and lattice arithmetic.

Conventions used throughout the package:

* a matrix acts on column vectors;
* the columns of a *basis matrix* generate a sublattice of ``Z^rows``;
* sublattices are stored in column Hermite normal form, so two lattices are
  equal iff their basis matrices are equal.

All entries are Python ``int`` so nothing ever overflows.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import NotContained, NotUnimodular

Vector = tuple[int, ...]


class IntMatrix:
    """Immutable ``rows x cols`` matrix of Python integers."""

    __slots__ = ("rows", "cols", "_data")

    def __init__(self, data: Iterable[Iterable[int]] = (), rows: int | None = None,
                 cols: int | None = None):
        body = tuple(tuple(int(x) for x in row) for row in data)
        if rows is None:
            rows = len(body)
        if cols is None:
            cols = len(body[0]) if body else 0
        if len(body) != rows:
            if body or rows < 0:
                raise ValueError(f"expected {rows} rows, got {len(body)}")
            body = tuple(() for _ in range(rows))
        for row in body:
            if len(row) != cols:
                raise ValueError("ragged matrix")
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "cols", cols)
        object.__setattr__(self, "_data", body)

    def __setattr__(self, name, value):
        raise AttributeError("IntMatrix is immutable")

    @classmethod
    def zeros(cls, rows: int, cols: int) -> IntMatrix:
        return cls([[0] * cols for _ in range(rows)], rows, cols)

    @classmethod
    def identity(cls, n: int) -> IntMatrix:
        return cls([[int(i == j) for j in range(n)] for i in range(n)], n, n)

    @classmethod
    def diag(cls, entries: Sequence[int]) -> IntMatrix:
        n = len(entries)
        return cls([[entries[i] if i == j else 0 for j in range(n)] for i in range(n)], n, n)

    @classmethod
    def from_columns(cls, columns: Iterable[Iterable[int]], rows: int) -> IntMatrix:
        cols = [tuple(c) for c in columns]
        for c in cols:
            if len(c) != rows:
                raise ValueError(f"column {c} does not have length {rows}")
        return cls([[c[i] for c in cols] for i in range(rows)], rows, len(cols))

    @classmethod
    def block_diag(cls, *blocks: IntMatrix) -> IntMatrix:
        n = sum(b.rows for b in blocks)
        m = sum(b.cols for b in blocks)
        out = [[0] * m for _ in range(n)]
        r0 = c0 = 0
        for b in blocks:
            for i in range(b.rows):
                for j in range(b.cols):
                    out[r0 + i][c0 + j] = b[i, j]
            r0 += b.rows
            c0 += b.cols
        return cls(out, n, m)

    @property
    def shape(self) -> tuple[int, int]:
        return self.rows, self.cols

    def __getitem__(self, idx: tuple[int, int]) -> int:
        i, j = idx
        return self._data[i][j]

    def row(self, i: int) -> Vector:
        return self._data[i]

    def col(self, j: int) -> Vector:
        return tuple(r[j] for r in self._data)

    def columns(self) -> list[Vector]:
        return [self.col(j) for j in range(self.cols)]

    def tolist(self) -> list[list[int]]:
        return [list(r) for r in self._data]

    @property
    def T(self) -> IntMatrix:
        return IntMatrix([[self._data[i][j] for i in range(self.rows)] for j in range(self.cols)],
                         self.cols, self.rows)

    def hstack(self, other: IntMatrix) -> IntMatrix:
        if self.rows != other.rows:
            raise ValueError("row mismatch in hstack")
        return IntMatrix([a + b for a, b in zip(self._data, other._data)], self.rows,
                         self.cols + other.cols)

    def select_columns(self, idx: Iterable[int]) -> IntMatrix:
        idx = list(idx)
        return IntMatrix([[r[j] for j in idx] for r in self._data], self.rows, len(idx))

    def is_zero(self) -> bool:
        return all(x == 0 for r in self._data for x in r)

    def apply(self, v: Sequence[int]) -> Vector:
        if len(v) != self.cols:
            raise ValueError("dimension mismatch")
        return tuple(sum(a * b for a, b in zip(r, v)) for r in self._data)

    def __matmul__(self, other: IntMatrix) -> IntMatrix:
        if self.cols != other.rows:
            raise ValueError(f"cannot multiply {self.shape} by {other.shape}")
        oc = other.columns()
        return IntMatrix([[sum(a * b for a, b in zip(r, c)) for c in oc] for r in self._data],
                         self.rows, other.cols)

    def __add__(self, other: IntMatrix) -> IntMatrix:
        if self.shape != other.shape:
            raise ValueError("shape mismatch")
        return IntMatrix([[a + b for a, b in zip(r, s)] for r, s in zip(self._data, other._data)],
                         self.rows, self.cols)

    def __sub__(self, other: IntMatrix) -> IntMatrix:
        return self + (-other)

    def __neg__(self) -> IntMatrix:
        return IntMatrix([[-a for a in r] for r in self._data], self.rows, self.cols)

    def __eq__(self, other) -> bool:
        if not isinstance(other, IntMatrix):
            return NotImplemented
        return self.shape == other.shape and self._data == other._data

    def __hash__(self) -> int:
        return hash((self.rows, self.cols, self._data))

    def __repr__(self) -> str:
        return f"IntMatrix({self.tolist()!r}, rows={self.rows}, cols={self.cols})"

    def det(self) -> int:
        """Determinant by fraction-free Bareiss elimination."""
        n = self.rows
        if n != self.cols:
            raise ValueError("determinant of a non-square matrix")
        a = self.tolist()
        sign, prev = 1, 1
        for k in range(n - 1):
            if a[k][k] == 0:
                for i in range(k + 1, n):
                    if a[i][k] != 0:
                        a[k], a[i] = a[i], a[k]
                        sign = -sign
                        break
                else:
                    return 0
            for i in range(k + 1, n):
                for j in range(k + 1, n):
                    a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
            prev = a[k][k]
        return sign * a[n - 1][n - 1] if n else 1


def as_matrix(a) -> IntMatrix:
    return a if isinstance(a, IntMatrix) else IntMatrix(a)


@dataclass(frozen=True)
class SmithForm:
    """``U @ A @ V == D`` with ``U``, ``V`` unimodular and ``D`` in Smith form."""

    U: IntMatrix
    D: IntMatrix
    V: IntMatrix

    @property
    def diagonal(self) -> tuple[int, ...]:
        return tuple(self.D[i, i] for i in range(min(self.D.shape)))

    @property
    def rank(self) -> int:
        return sum(1 for d in self.diagonal if d != 0)


@dataclass(frozen=True)
class FiniteAbelianGroup:
    """``Z^free_rank + Z/d_1 + ... + Z/d_k`` with ``d_1 | d_2 | ... | d_k``, ``d_1 >= 2``."""

    free_rank: int = 0
    invariant_factors: tuple[int, ...] = ()

    def __post_init__(self):
        f = tuple(int(d) for d in self.invariant_factors)
        object.__setattr__(self, "invariant_factors", f)
        if self.free_rank < 0:
            raise ValueError("negative free rank")
        for i, d in enumerate(f):
            if d < 2:
                raise ValueError(f"invariant factor {d} < 2")
            if i + 1 < len(f) and f[i + 1] % d:
                raise ValueError(f"invariant factors {f} do not form a divisibility chain")

    @classmethod
    def from_diagonal(cls, diagonal: Iterable[int], ambient_rank: int) -> FiniteAbelianGroup:
        """Structure of ``Z^ambient_rank`` modulo a diagonal lattice (any order of entries)."""
        diagonal = [abs(d) for d in diagonal]
        nonzero = [d for d in diagonal if d]
        free = ambient_rank - len(nonzero)
        sf = snf(IntMatrix.diag(nonzero))
        return cls(free, tuple(d for d in sf.diagonal if d > 1))

    @property
    def is_trivial(self) -> bool:
        return self.free_rank == 0 and not self.invariant_factors

    @property
    def is_finite(self) -> bool:
        return self.free_rank == 0

    @property
    def order(self) -> int | None:
        return math.prod(self.invariant_factors) if self.is_finite else None

    @property
    def two_rank(self) -> int:
        """Number of factors when the group is ``(Z/2)^n``."""
        return len(self.invariant_factors)

    def is_elementary_2(self) -> bool:
        return self.free_rank == 0 and all(d == 2 for d in self.invariant_factors)

    def __add__(self, other: FiniteAbelianGroup) -> FiniteAbelianGroup:
        return _direct_sum(self, other)

    def render(self) -> str:
        if self.is_trivial:
            return "trivial"
        if self.is_elementary_2():
            return f"(Z/2)^{len(self.invariant_factors)}"
        parts = [f"Z/{d}" for d in self.invariant_factors]
        if self.free_rank == 1:
            parts.append("Z")
        elif self.free_rank:
            parts.append(f"Z^{self.free_rank}")
        return " x ".join(parts)

    def to_json(self) -> dict:
        return {"free_rank": self.free_rank, "invariant_factors": list(self.invariant_factors)}

    @classmethod
    def from_json(cls, doc: dict) -> FiniteAbelianGroup:
        return cls(doc["free_rank"], tuple(doc["invariant_factors"]))


def _direct_sum(a: FiniteAbelianGroup, b: FiniteAbelianGroup) -> FiniteAbelianGroup:
    factors = a.invariant_factors + b.invariant_factors
    torsion = FiniteAbelianGroup.from_diagonal(factors, len(factors))
    return FiniteAbelianGroup(a.free_rank + b.free_rank, torsion.invariant_factors)


# --------------------------------------------------------------------------
# normal forms


def snf(A) -> SmithForm:
    """Smith normal form with transforms, by gcd-driven elimination.

    The pivot at each stage is an entry of minimal nonzero absolute value.
    """
    A = as_matrix(A)
    m, n = A.shape
    a = A.tolist()
    u = IntMatrix.identity(m).tolist()
    v = IntMatrix.identity(n).tolist()

    def swap_rows(i, j):
        a[i], a[j] = a[j], a[i]
        u[i], u[j] = u[j], u[i]

    def swap_cols(i, j):
        for r in a:
            r[i], r[j] = r[j], r[i]
        for r in v:
            r[i], r[j] = r[j], r[i]

    def add_row(dst, src, q):
        # row_dst += q * row_src
        a[dst] = [x + q * y for x, y in zip(a[dst], a[src])]
        u[dst] = [x + q * y for x, y in zip(u[dst], u[src])]

    def add_col(dst, src, q):
        for r in a:
            r[dst] += q * r[src]
        for r in v:
            r[dst] += q * r[src]

    for t in range(min(m, n)):
        best = None
        for i in range(t, m):
            for j in range(t, n):
                if a[i][j] and (best is None or abs(a[i][j]) < abs(a[best[0]][best[1]])):
                    best = (i, j)
        if best is None:
            break
        swap_rows(t, best[0])
        swap_cols(t, best[1])
        while True:
            for i in range(t + 1, m):
                if a[i][t]:
                    add_row(i, t, -(a[i][t] // a[t][t]))
            for j in range(t + 1, n):
                if a[t][j]:
                    add_col(j, t, -(a[t][j] // a[t][t]))
            rest = [(abs(a[i][t]), i, None) for i in range(t + 1, m) if a[i][t]]
            rest += [(abs(a[t][j]), None, j) for j in range(t + 1, n) if a[t][j]]
            if rest:
                _, i, j = min(rest, key=lambda r: r[0])
                if i is not None:
                    swap_rows(t, i)
                else:
                    swap_cols(t, j)
                continue
            p = a[t][t]
            bad = next((i for i in range(t + 1, m) for j in range(t + 1, n) if a[i][j] % p), None)
            if bad is None:
                break
            add_row(t, bad, 1)
        if a[t][t] < 0:
            a[t] = [-x for x in a[t]]
            u[t] = [-x for x in u[t]]
    return SmithForm(IntMatrix(u, m, m), IntMatrix(a, m, n), IntMatrix(v, n, n))


def hnf(A) -> tuple[IntMatrix, IntMatrix]:
    """Column Hermite normal form ``H = A @ U`` with ``U`` unimodular.

    ``H`` is lower echelon: pivot rows strictly increase with the column
    index, pivots are positive, entries left of a pivot lie in
    ``[0, pivot)`` and the zero columns come last.
    """
    A = as_matrix(A)
    m, n = A.shape
    h = A.tolist()
    u = IntMatrix.identity(n).tolist()

    def swap_cols(i, j):
        for r in h:
            r[i], r[j] = r[j], r[i]
        for r in u:
            r[i], r[j] = r[j], r[i]

    def add_col(dst, src, q):
        for r in h:
            r[dst] += q * r[src]
        for r in u:
            r[dst] += q * r[src]

    k = 0
    for i in range(m):
        if k == n:
            break
        while True:
            nz = [j for j in range(k, n) if h[i][j]]
            if not nz:
                break
            j0 = min(nz, key=lambda j: abs(h[i][j]))
            swap_cols(k, j0)
            for j in range(k + 1, n):
                if h[i][j]:
                    add_col(j, k, -(h[i][j] // h[i][k]))
            if all(h[i][j] == 0 for j in range(k + 1, n)):
                break
        if h[i][k] == 0:
            continue
        if h[i][k] < 0:
            for r in h:
                r[k] = -r[k]
            for r in u:
                r[k] = -r[k]
        for j in range(k):
            q = h[i][j] // h[i][k]
            if q:
                add_col(j, k, -q)
        k += 1
    return IntMatrix(h, m, n), IntMatrix(u, n, n)


def lattice_basis(A) -> IntMatrix:
    """Canonical basis (nonzero HNF columns) of the column lattice of ``A``."""
    A = as_matrix(A)
    H, _ = hnf(A)
    keep = [j for j in range(H.cols) if any(H[i, j] for i in range(H.rows))]
    return H.select_columns(keep)


def rank(A) -> int:
    return lattice_basis(A).cols


def kernel_saturated(A) -> IntMatrix:
    """Canonical basis of ``{x in Z^cols : A x = 0}``."""
    A = as_matrix(A)
    H, U = hnf(A)
    zero = [j for j in range(H.cols) if all(H[i, j] == 0 for i in range(H.rows))]
    return lattice_basis(U.select_columns(zero)) if zero else IntMatrix.zeros(A.cols, 0)


def lattice_sum(B1, B2) -> IntMatrix:
    B1, B2 = as_matrix(B1), as_matrix(B2)
    return lattice_basis(B1.hstack(B2))


def lattice_intersect(B1, B2) -> IntMatrix:
    B1, B2 = as_matrix(B1), as_matrix(B2)
    if B1.rows != B2.rows:
        raise ValueError("ambient ranks differ")
    B1, B2 = lattice_basis(B1), lattice_basis(B2)
    # x = B1 a = B2 b  <=>  [B1 | -B2] (a, b) = 0
    K = kernel_saturated(B1.hstack(-B2))
    coeffs = IntMatrix([K.row(i) for i in range(B1.cols)], B1.cols, K.cols)
    return lattice_basis(B1 @ coeffs)


def solve_integer(A, b: Sequence[int]) -> Vector | None:
    """Some integer ``x`` with ``A x = b``, or ``None`` if there is none."""
    A = as_matrix(A)
    b = tuple(b)
    if len(b) != A.rows:
        raise ValueError("dimension mismatch")
    H, U = hnf(A)
    y = [0] * A.cols
    residual = list(b)
    k = 0
    for i in range(A.rows):
        if k < A.cols and H[i, k] != 0:
            q, r = divmod(residual[i], H[i, k])
            if r:
                return None
            y[k] = q
            for ii in range(A.rows):
                residual[ii] -= q * H[ii, k]
            k += 1
        elif residual[i] != 0:
            return None
    if any(residual):
        return None
    return U.apply(y)


def inverse_unimodular(U) -> IntMatrix:
    """Exact inverse of a square integer matrix with determinant +-1."""
    U = as_matrix(U)
    n = U.rows
    if n != U.cols or abs(U.det()) != 1:
        raise NotUnimodular(f"matrix {U.tolist()} is not unimodular")
    a = [[Fraction(x) for x in r] + [Fraction(int(i == j)) for j in range(n)]
         for i, r in enumerate(U.tolist())]
    for c in range(n):
        p = next(i for i in range(c, n) if a[i][c] != 0)
        a[c], a[p] = a[p], a[c]
        piv = a[c][c]
        a[c] = [x / piv for x in a[c]]
        for i in range(n):
            if i != c and a[i][c] != 0:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[c])]
    return IntMatrix([[int(x) for x in r[n:]] for r in a], n, n)


def is_unimodular(U) -> bool:
    U = as_matrix(U)
    return U.rows == U.cols and abs(U.det()) == 1


# --------------------------------------------------------------------------
# quotients


@dataclass(frozen=True)
class QuotientPresentation:
    """``L / S`` together with lifts of the cyclic generators to ``L``.

    ``torsion_generators[i]`` generates the factor ``group.invariant_factors[i]``;
    ``free_generators`` lift a basis of the free part.
    """

    group: FiniteAbelianGroup
    torsion_generators: tuple[Vector, ...]
    free_generators: tuple[Vector, ...]


def coordinates(L, S) -> IntMatrix:
    """Coordinates of the columns of ``S`` in the canonical basis of ``L``.

    Raises :class:`NotContained` if a column of ``S`` is not in ``L``.
    """
    L, S = as_matrix(L), as_matrix(S)
    B = lattice_basis(L)
    cols = []
    for j in range(S.cols):
        x = solve_integer(B, S.col(j))
        if x is None:
            raise NotContained(f"vector {S.col(j)} is not in the lattice")
        cols.append(x)
    return IntMatrix.from_columns(cols, B.cols)


def quotient_presentation(L, S) -> QuotientPresentation:
    L, S = as_matrix(L), as_matrix(S)
    if L.rows != S.rows:
        raise ValueError("ambient ranks differ")
    B = lattice_basis(L)
    X = coordinates(B, S)
    sf = snf(X)
    Uinv = inverse_unimodular(sf.U)
    diag = sf.diagonal
    torsion, free, factors = [], [], []
    for i in range(B.cols):
        d = diag[i] if i < len(diag) else 0
        if d == 1:
            continue
        gen = B.apply(Uinv.col(i))
        if d == 0:
            free.append(gen)
        else:
            factors.append(d)
            torsion.append(gen)
    group = FiniteAbelianGroup(len(free), tuple(factors))
    return QuotientPresentation(group, tuple(torsion), tuple(free))


def quotient_structure(ambient_rank: int, S) -> FiniteAbelianGroup:
    """Structure of ``Z^ambient_rank / (column lattice of S)``."""
    S = as_matrix(S)
    if S.rows != ambient_rank:
        raise ValueError("S does not live in Z^ambient_rank")
    sf = snf(S)
    return FiniteAbelianGroup(ambient_rank - sf.rank, tuple(d for d in sf.diagonal if d > 1))


def quotient_structure_rel(L, S) -> FiniteAbelianGroup:
    """Structure of ``L / S`` for a sublattice ``S`` of ``L``."""
    B = lattice_basis(L)
    return quotient_structure(B.cols, coordinates(B, S))


# --------------------------------------------------------------------------
# independent elimination routines (no normal forms), used by oracles


def rank_q(A) -> int:
    """Rank over the rationals."""
    a = [[Fraction(x) for x in r] for r in as_matrix(A).tolist()]
    r = 0
    ncols = len(a[0]) if a else 0
    for c in range(ncols):
        p = next((i for i in range(r, len(a)) if a[i][c] != 0), None)
        if p is None:
            continue
        a[r], a[p] = a[p], a[r]
        for i in range(r + 1, len(a)):
            if a[i][c]:
                f = a[i][c] / a[r][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        r += 1
    return r


def rank_gf2(A) -> int:
    """Rank of ``A mod 2`` over the field with two elements."""
    rows = [sum(((x & 1) << j) for j, x in enumerate(r)) for r in as_matrix(A).tolist()]
    r = 0
    for bit in range(as_matrix(A).cols):
        mask = 1 << bit
        p = next((i for i in range(r, len(rows)) if rows[i] & mask), None)
        if p is None:
            continue
        rows[r], rows[p] = rows[p], rows[r]
        for i in range(len(rows)):
            if i != r and rows[i] & mask:
                rows[i] ^= rows[r]
        r += 1
    return r
