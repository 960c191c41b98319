"""Lattices with an involution and their zeroth Tate cohomology."""

from __future__ import annotations

from dataclasses import dataclass

from .errors import NotInvolution
from .zlattice import (
    FiniteAbelianGroup,
    IntMatrix,
    Vector,
    as_matrix,
    inverse_unimodular,
    kernel_saturated,
    lattice_basis,
    quotient_presentation,
    rank_gf2,
    rank_q,
)


@dataclass(frozen=True)
class GammaLattice:
    """``Z^rank`` with the complex conjugation acting by the matrix ``gamma``."""

    rank: int
    gamma: IntMatrix

    def __post_init__(self):
        g = as_matrix(self.gamma)
        object.__setattr__(self, "gamma", g)
        if g.shape != (self.rank, self.rank):
            raise ValueError(f"gamma has shape {g.shape}, expected {(self.rank, self.rank)}")
        if g @ g != IntMatrix.identity(self.rank):
            raise NotInvolution(f"gamma {g.tolist()} does not square to the identity")

    @classmethod
    def of(cls, gamma) -> GammaLattice:
        g = as_matrix(gamma)
        return cls(g.rows, g)

    @classmethod
    def split(cls, d: int) -> GammaLattice:
        return cls(d, IntMatrix.identity(d))

    @classmethod
    def compact(cls, d: int) -> GammaLattice:
        return cls(d, -IntMatrix.identity(d))

    @classmethod
    def complex(cls, c: int) -> GammaLattice:
        """``c`` copies of the swap lattice (Weil restriction of ``G_m``)."""
        swap = IntMatrix([[0, 1], [1, 0]])
        return cls(2 * c, IntMatrix.block_diag(*[swap] * c))


@dataclass(frozen=True)
class TateH0Result:
    group: FiniteAbelianGroup
    witnesses: tuple[Vector, ...]


def invariants(L: GammaLattice) -> IntMatrix:
    """Saturated basis of the fixed sublattice ``ker(gamma - 1)``."""
    return kernel_saturated(L.gamma - IntMatrix.identity(L.rank))


def norm_sublattice(L: GammaLattice) -> IntMatrix:
    """Basis of ``(1 + gamma) Z^rank``."""
    return lattice_basis(L.gamma + IntMatrix.identity(L.rank))


def tate_h0(L: GammaLattice) -> TateH0Result:
    """Invariants modulo norms, with invariant lifts of the generators.

    The witnesses are the images of the Smith basis vectors and are not
    unique; any invariant vectors whose classes generate would do.
    """
    pres = quotient_presentation(invariants(L), norm_sublattice(L))
    if pres.group.free_rank or any(d != 2 for d in pres.group.invariant_factors):
        raise AssertionError(f"Tate H^0 must be 2-torsion, got {pres.group}")
    return TateH0Result(pres.group, pres.torsion_generators)


def h0_rank_oracle(L: GammaLattice) -> int:
    """Number of Z/2 factors of H^0, from ranks alone.

    Any involution lattice is a sum of trivial, sign and swap summands, which
    contribute 1, 0 and 0 factors; the formula below counts exactly that.
    """
    eye = IntMatrix.identity(L.rank)
    fixed_rank = L.rank - rank_q(L.gamma - eye)
    return fixed_rank - rank_gf2(L.gamma + eye)


def direct_sum(L1: GammaLattice, L2: GammaLattice) -> GammaLattice:
    return GammaLattice(L1.rank + L2.rank, IntMatrix.block_diag(L1.gamma, L2.gamma))


def base_change(L: GammaLattice, U) -> GammaLattice:
    """Rewrite ``gamma`` in the basis given by the columns of ``U``."""
    U = as_matrix(U)
    return GammaLattice(L.rank, inverse_unimodular(U) @ L.gamma @ U)
