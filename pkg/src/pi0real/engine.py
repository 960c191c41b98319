"""Real component groups of tori and of reductive groups.

Two independent routes to ``pi_0 G(R)`` are implemented:

``pi0_theorem5``
    invariant cocharacters modulo the subgroup generated by all
    ``nu + theta(nu)`` and all coroot-lattice vectors, intersected with the
    invariants;
``pi0_theorem6``
    cokernel of ``H^0(X_*(T^sc)) -> H^0(X_*(T))``.

:func:`pi0` runs both and refuses to answer if they differ.  A witness
``nu`` is an invariant cocharacter; the component it names is
``nu(-1) G(R)^0``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Literal

from . import root_datum as rd
from .errors import InternalInconsistency
from .gamma_lattice import GammaLattice, invariants, norm_sublattice, tate_h0
from .real_form import RealFormSpec, real_rank, restrict_to_sc, validate_form
from .root_datum import RootDatum
from .zlattice import (
    FiniteAbelianGroup,
    IntMatrix,
    Vector,
    inverse_unimodular,
    kernel_saturated,
    lattice_intersect,
    lattice_sum,
    quotient_presentation,
    quotient_structure_rel,
    snf,
)

Path = Literal["theorem5", "theorem6", "torus"]


@dataclass(frozen=True)
class Pi0Result:
    group: FiniteAbelianGroup
    witnesses: tuple[Vector, ...]
    path: Path


@dataclass(frozen=True)
class Pi1Result:
    """``X_*(T) / (coroot lattice)`` with the induced action of theta.

    ``gamma_action[i][j]`` is the coefficient of ``generators[i]`` in
    ``theta(generators[j])``; rows belonging to a cyclic factor ``Z/d`` are
    reduced mod ``d``.  Generators of the finite factors come first.
    """

    group: FiniteAbelianGroup
    generators: tuple[Vector, ...]
    gamma_action: IntMatrix


@dataclass(frozen=True)
class CheckReport:
    name: str
    passed: bool
    skipped: bool
    detail: str


def _finish(L: IntMatrix, S: IntMatrix, path: Path) -> Pi0Result:
    pres = quotient_presentation(L, S)
    return Pi0Result(pres.group, pres.torsion_generators, path)


def pi0_torus(L: GammaLattice) -> Pi0Result:
    h = tate_h0(L)
    return Pi0Result(h.group, h.witnesses, "torus")


def pi0_theorem5(d: RootDatum, f: RealFormSpec) -> Pi0Result:
    validate_form(d, f)
    L = GammaLattice.of(f.theta)
    R = rd.coroot_embedding(d).matrix
    fixed = invariants(L)
    generated = lattice_sum(norm_sublattice(L), R)
    return _finish(fixed, lattice_intersect(generated, fixed), "theorem5")


def pi0_theorem6(d: RootDatum, f: RealFormSpec) -> Pi0Result:
    L_sc = restrict_to_sc(d, f)
    L = GammaLattice.of(f.theta)
    R = rd.coroot_embedding(d).matrix
    image = R @ invariants(L_sc)
    return _finish(invariants(L), lattice_sum(norm_sublattice(L), image), "theorem6")


def pi0(d: RootDatum, f: RealFormSpec) -> Pi0Result:
    r5 = pi0_theorem5(d, f)
    r6 = pi0_theorem6(d, f)
    if r5.group != r6.group:
        raise InternalInconsistency(
            f"the two component-group formulas disagree: {r5.group} vs {r6.group}")
    return r6


def pi1_alg(d: RootDatum, f: RealFormSpec | None = None) -> Pi1Result:
    R = rd.coroot_embedding(d).matrix
    n = d.rank
    sf = snf(R)
    diag = sf.diagonal + (0,) * (n - len(sf.diagonal))
    keep = [i for i in range(n) if diag[i] != 1]
    keep.sort(key=lambda i: diag[i] == 0)
    Uinv = inverse_unimodular(sf.U)
    gens = tuple(Uinv.col(i) for i in keep)
    theta = f.theta if f is not None else IntMatrix.identity(n)
    M = sf.U @ theta @ Uinv
    action = [[M[i, j] % diag[i] if diag[i] else M[i, j] for j in keep] for i in keep]
    group = FiniteAbelianGroup(sum(1 for i in keep if diag[i] == 0),
                               tuple(diag[i] for i in keep if diag[i]))
    return Pi1Result(group, gens, IntMatrix(action, len(keep), len(keep)))


def h0_pi1(d: RootDatum, f: RealFormSpec) -> FiniteAbelianGroup:
    """Tate H^0 of the Galois module ``pi_1 G``, computed on its presentation.

    Invariants lift to ``{x : theta(x) - x in Q}``, norms to
    ``(1 + theta) X_* + Q`` where ``Q`` is the coroot lattice.
    """
    validate_form(d, f)
    n = d.rank
    R = rd.coroot_embedding(d).matrix
    eye = IntMatrix.identity(n)
    K = kernel_saturated((f.theta - eye).hstack(-R))
    lifts = IntMatrix([K.row(i) for i in range(n)], n, K.cols)
    norms = lattice_sum(norm_sublattice(GammaLattice.of(f.theta)), R)
    return quotient_structure_rel(lifts, norms)


def cartan_check(d: RootDatum, f: RealFormSpec) -> CheckReport:
    if not rd.is_simply_connected(d):
        return CheckReport("cartan", True, True, "datum is not simply connected")
    g = pi0(d, f).group
    ok = g.is_trivial
    return CheckReport("cartan", ok, False, f"pi0 = {g.render()}")


def matsumoto_check(d: RootDatum, f: RealFormSpec) -> CheckReport:
    g = pi0(d, f).group
    rr = real_rank(f)
    ok = g.is_elementary_2() and g.two_rank <= rr
    return CheckReport("matsumoto", ok, False, f"pi0 = {g.render()}, real rank {rr}")
