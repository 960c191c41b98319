import pytest

from pi0real.errors import NotInvolution, NotUnimodular
from pi0real.fuzz import random_involution, random_unimodular, rng
from pi0real.gamma_lattice import (
    GammaLattice,
    base_change,
    direct_sum,
    h0_rank_oracle,
    invariants,
    norm_sublattice,
    tate_h0,
)
from pi0real.zlattice import FiniteAbelianGroup, IntMatrix, solve_integer

from oracles import structure_by_enumeration

SWAP = GammaLattice.complex(1)


def test_construction_checks_involution():
    with pytest.raises(NotInvolution):
        GammaLattice.of([[0, 2], [0, 1]])
    with pytest.raises(ValueError):
        GammaLattice(2, IntMatrix.identity(3))


def test_invariants():
    assert invariants(GammaLattice.split(3)) == IntMatrix.identity(3)
    assert invariants(GammaLattice.compact(1)).shape == (1, 0)
    assert invariants(SWAP) == IntMatrix([[1], [1]])


def test_norms():
    assert norm_sublattice(GammaLattice.split(2)) == IntMatrix([[2, 0], [0, 2]])
    assert norm_sublattice(GammaLattice.compact(2)).shape == (2, 0)
    assert norm_sublattice(SWAP) == IntMatrix([[1], [1]])


@pytest.mark.parametrize("d", range(0, 6))
def test_split_torus(d):
    h = tate_h0(GammaLattice.split(d))
    assert h.group == FiniteAbelianGroup(0, (2,) * d)
    assert sorted(h.witnesses) == sorted(IntMatrix.identity(d).columns())


def test_sign_and_swap_are_trivial():
    assert tate_h0(GammaLattice.compact(1)).group.is_trivial
    assert tate_h0(SWAP).group.is_trivial


@pytest.mark.parametrize("gamma,expected", [
    (IntMatrix.identity(4), 4),
    (SWAP.gamma, 0),
    (IntMatrix.diag([1, -1]), 1),
    (-IntMatrix.identity(3), 0),
])
def test_rank_oracle_examples(gamma, expected):
    assert h0_rank_oracle(GammaLattice.of(gamma)) == expected


def test_direct_sum_examples():
    empty = GammaLattice.split(0)
    L = GammaLattice.of([[0, -1], [-1, 0]])
    assert direct_sum(L, empty) == L and direct_sum(empty, L) == L
    s2 = direct_sum(GammaLattice.split(1), GammaLattice.split(1))
    assert s2 == GammaLattice.split(2)
    assert tate_h0(s2).group == FiniteAbelianGroup(0, (2, 2))
    mixed = direct_sum(GammaLattice.split(1), GammaLattice.compact(1))
    assert tate_h0(mixed).group == FiniteAbelianGroup(0, (2,))


def test_base_change_examples():
    U = IntMatrix([[1, 1], [0, 1]])
    moved = base_change(SWAP, U)
    assert moved.gamma != SWAP.gamma
    assert tate_h0(moved).group == tate_h0(SWAP).group
    assert base_change(SWAP, IntMatrix.identity(2)) == SWAP
    with pytest.raises(NotUnimodular):
        base_change(SWAP, IntMatrix([[2, 0], [0, 1]]))


@pytest.mark.parametrize("i", range(150))
def test_fuzzed_involutions(i):
    r = rng(1000 + i)
    L = random_involution(r.randint(0, 8), r)
    h = tate_h0(L)
    assert h.group.is_elementary_2()
    assert len(h.witnesses) == h.group.two_rank == h0_rank_oracle(L)
    N = norm_sublattice(L)
    for w in h.witnesses:
        assert L.gamma.apply(w) == w
        assert solve_integer(N, w) is None
    U = random_unimodular(L.rank, r)
    assert tate_h0(base_change(L, U)).group == h.group
    L2 = random_involution(r.randint(0, 4), r)
    assert tate_h0(direct_sum(L, L2)).group == h.group + tate_h0(L2).group


@pytest.mark.parametrize("i", range(40))
def test_small_rank_matches_coset_enumeration(i):
    r = rng(5000 + i)
    L = random_involution(r.randint(1, 3), r)
    fixed, norms = invariants(L), norm_sublattice(L)
    brute = structure_by_enumeration(fixed.columns(), norms.columns(), L.rank)
    assert tate_h0(L).group.invariant_factors == brute
