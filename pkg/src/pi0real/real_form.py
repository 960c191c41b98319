"""Galois involutions on ``X_*(T)`` and a catalog of named real forms.

The involution ``theta`` is the action of complex conjugation on the
cocharacters of a maximal torus that contains a maximal split torus.  Blocks
of a maximally split torus ``(R^x)^a x (S^1)^b x (C^x)^c`` contribute
``+1``, ``-1`` and a negated swap respectively.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable

from . import root_datum as rd
from .errors import (
    CorootSetNotStable,
    InputError,
    NoIntegralRestriction,
    NotInvolution,
    UnknownForm,
)
from .gamma_lattice import GammaLattice, invariants
from .root_datum import RootDatum
from .zlattice import IntMatrix, as_matrix, inverse_unimodular, solve_integer


@dataclass(frozen=True)
class RealFormSpec:
    theta: IntMatrix
    name: str | None = field(default=None, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "theta", as_matrix(self.theta))


def real_rank(f: RealFormSpec) -> int:
    """Dimension of the maximal split torus: rank of the fixed lattice of theta."""
    return invariants(GammaLattice.of(f.theta)).cols


def _restriction(d: RootDatum, theta: IntMatrix) -> IntMatrix:
    R = rd.coroot_embedding(d).matrix
    cols = []
    for j in range(R.cols):
        x = solve_integer(R, theta.apply(R.col(j)))
        if x is None:
            raise NoIntegralRestriction(
                f"theta sends simple coroot {R.col(j)} outside the coroot lattice")
        cols.append(x)
    return IntMatrix.from_columns(cols, R.cols)


def validate_form(d: RootDatum, f: RealFormSpec) -> IntMatrix:
    """Check ``f`` against ``d``; returns the induced involution on ``X_*(T^sc)``."""
    theta = f.theta
    if theta.shape != (d.rank, d.rank):
        raise InputError(f"theta has shape {theta.shape}, datum has rank {d.rank}")
    if theta @ theta != IntMatrix.identity(d.rank):
        raise NotInvolution(f"theta {theta.tolist()} does not square to the identity")
    coroots = d.coroot_set()
    for c in d.coroots:
        if theta.apply(c) not in coroots:
            raise CorootSetNotStable(f"theta sends coroot {c} to {theta.apply(c)}")
    theta_sc = _restriction(d, theta)
    if theta_sc @ theta_sc != IntMatrix.identity(theta_sc.rows):
        raise NotInvolution("restriction of theta to X_*(T^sc) is not an involution")
    return theta_sc


def restrict_to_sc(d: RootDatum, f: RealFormSpec) -> GammaLattice:
    theta_sc = validate_form(d, f)
    return GammaLattice(theta_sc.rows, theta_sc)


def transport_form(f: RealFormSpec, U) -> RealFormSpec:
    U = as_matrix(U)
    return RealFormSpec(inverse_unimodular(U) @ f.theta @ U, f.name)


# --------------------------------------------------------------------------
# catalog


def unitary_theta(p: int, q: int) -> IntMatrix:
    n, m = p + q, min(p, q)
    t = [[0] * n for _ in range(n)]
    for i in range(m):
        j = n - 1 - i
        t[i][j] = t[j][i] = -1
    for k in range(m, n - m):
        t[k][k] = -1
    return IntMatrix(t, n, n)


def _isogeny(kind: str, n: int, isogeny: str) -> RootDatum:
    if isogeny in ("sc", "simply_connected", "simply-connected"):
        return rd.simple_sc(kind, n)
    if isogeny in ("adjoint", "ad"):
        return rd.simple_adjoint(kind, n)
    raise UnknownForm(f"unknown isogeny {isogeny!r} (expected sc or adjoint)")


def _simple_args(args) -> tuple[str, int, str]:
    # TYPE RANK [ISOGENY] or TYPE+RANK [ISOGENY], e.g. ("A", 3, "adjoint"), ("E6", "sc")
    args = [str(a) for a in args]
    if not args:
        raise UnknownForm("missing simple type")
    if len(args) > 1 and args[1].lstrip("-").isdigit():
        kind, n = rd.parse_type(args[0], int(args[1]))
        rest = args[2:]
    else:
        kind, n = rd.parse_type(args[0])
        rest = args[1:]
    if len(rest) > 1:
        raise UnknownForm(f"too many parameters: {args}")
    return kind, n, rest[0] if rest else "sc"


def _split(*args):
    kind, n, isogeny = _simple_args(args)
    return _isogeny(kind, n, isogeny), IntMatrix.identity(n), n


def _compact(*args):
    kind, n, isogeny = _simple_args(args)
    return _isogeny(kind, n, isogeny), -IntMatrix.identity(n), 0


def _gl_r(n):
    n = int(n)
    return rd.gl(n), IntMatrix.identity(n), n


def _torus(n):
    n = int(n)
    return rd.torus(n), IntMatrix.identity(n), n


def _u(p, q):
    p, q = int(p), int(q)
    if p < 0 or q < 0 or p + q < 1:
        raise UnknownForm("u(p,q) needs p, q >= 0 and p + q >= 1")
    return rd.gl(p + q), unitary_theta(p, q), min(p, q)


def _su(p, q):
    p, q = int(p), int(q)
    if p < 0 or q < 0 or p + q < 2:
        raise UnknownForm("su(p,q) needs p, q >= 0 and p + q >= 2")
    n = p + q
    big = unitary_theta(p, q)
    R = rd.coroot_embedding(rd.gl(n)).matrix
    theta = IntMatrix.from_columns([solve_integer(R, big.apply(c)) for c in R.columns()], n - 1)
    return rd.simple_sc("A", n - 1), theta, min(p, q)


def _so(p, q):
    p, q = int(p), int(q)
    if p < 0 or q < 0 or p + q < 2:
        raise UnknownForm("so(p,q) needs p, q >= 0 and p + q >= 2")
    r, m = (p + q) // 2, min(p, q)
    d = rd.classical_so(r, odd=bool((p + q) % 2))
    theta = IntMatrix.diag([1] * m + [-1] * (r - m))
    return d, theta, m


def _sp2n_r(n):
    n = int(n)
    return rd.simple_sc("C", n), IntMatrix.identity(n), n


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    params: str
    build: Callable[..., tuple[RootDatum, IntMatrix, int]]
    description: str


CATALOG: dict[str, CatalogEntry] = {
    e.name: e for e in [
        CatalogEntry("split", "TYPE/RANK[/sc|adjoint]", _split, "split form, theta = identity"),
        CatalogEntry("compact", "TYPE/RANK[/sc|adjoint]", _compact,
                     "compact form, theta = -identity"),
        CatalogEntry("gl_r", "N", _gl_r, "GL(N,R)"),
        CatalogEntry("torus", "N", _torus, "split torus (R^x)^N"),
        CatalogEntry("u", "P/Q", _u, "U(P,Q)"),
        CatalogEntry("su", "P/Q", _su, "SU(P,Q)"),
        CatalogEntry("so", "P/Q", _so, "SO(P,Q), types B and D on X_* = Z^r"),
        CatalogEntry("sp2n_r", "N", _sp2n_r, "Sp(2N,R)"),
    ]
}
ALIASES = {"gl": "gl_r", "sp": "sp2n_r"}


def catalog(name: str, *params) -> tuple[RootDatum, RealFormSpec]:
    """Build and validate a named real form, e.g. ``catalog('so', 2, 3)``."""
    key = ALIASES.get(name, name)
    if key not in CATALOG:
        raise UnknownForm(f"unknown real form {name!r}")
    entry = CATALOG[key]
    try:
        d, theta, declared = entry.build(*params)
    except InputError:
        raise
    except (TypeError, ValueError) as exc:
        raise UnknownForm(f"bad parameters for {key}: {entry.params} expected") from exc
    label = "/".join([key, *(str(p) for p in params)])
    f = RealFormSpec(theta, label)
    validate_form(d, f)
    if real_rank(f) != declared:
        raise AssertionError(f"{label}: real rank {real_rank(f)} != declared {declared}")
    return d, f


def parse_catalog_ref(ref: str) -> tuple[str, list[str]]:
    """``'split/A/3/adjoint'`` -> ``('split', ['A', '3', 'adjoint'])``; ``so/2,3`` also works."""
    tokens = [t for part in ref.strip().split("/") for t in part.split(",") if t != ""]
    if not tokens:
        raise UnknownForm("empty group specification")
    return tokens[0], tokens[1:]


def catalog_ref(ref: str) -> tuple[RootDatum, RealFormSpec]:
    name, params = parse_catalog_ref(ref)
    return catalog(name, *params)
