import pytest

from pi0real import root_datum as rd
from pi0real.errors import AxiomViolation, InvalidType
from pi0real.root_datum import RootDatum, pairing, validate
from pi0real.zlattice import FiniteAbelianGroup, IntMatrix, quotient_structure_rel

from oracles import index_by_minors

ALL_TYPES = [("A", n) for n in range(1, 9)] + [("B", n) for n in range(1, 9)] + \
    [("C", n) for n in range(1, 9)] + [("D", n) for n in range(2, 9)] + \
    [("E", 6), ("E", 7), ("E", 8), ("F", 4), ("G", 2)]

# number of roots of each irreducible type (D2 = A1 x A1)
ROOT_COUNT = {"A": lambda n: n * (n + 1), "B": lambda n: 2 * n * n, "C": lambda n: 2 * n * n,
              "D": lambda n: 2 * n * (n - 1), "E": {6: 72, 7: 126, 8: 240}.get,
              "F": lambda n: 48, "G": lambda n: 12}


def brute_closure(simple_roots, simple_coroots):
    """Closure under all (not just simple) reflections, iterated to a fixpoint."""
    pairs = set(zip(map(tuple, simple_roots), map(tuple, simple_coroots)))
    while True:
        new = set(pairs)
        for a, ac in pairs:
            for b, bc in pairs:
                new.add((tuple(x - pairing(b, ac) * y for x, y in zip(b, a)),
                         tuple(x - pairing(a, bc) * y for x, y in zip(bc, ac))))
        if new == pairs:
            return pairs
        pairs = new


def test_torus_and_a1():
    assert validate(rd.torus(0)) == rd.torus(0)
    for n in range(9):
        assert validate(rd.torus(n)).semisimple_rank == 0
    a1 = RootDatum(1, ((1,),), ((2,),), (0,))
    with pytest.raises(AxiomViolation):
        validate(a1)  # no negative pair
    a1 = RootDatum(1, ((1,), (-1,)), ((2,), (-2,)), (0,))
    assert validate(a1) == a1
    assert rd.simple_sc("A", 1) == a1


def test_tampered_pairing():
    with pytest.raises(AxiomViolation, match="expected 2"):
        validate(RootDatum(1, ((1,), (-1,)), ((1,), (-1,)), (0,)))


def test_reflection_axiom_violation():
    # <a, a^vee> = 2 for both pairs, but reflecting one in the other leaves the set
    bad = RootDatum(2, ((1, 0), (-1, 0), (1, 1), (-1, -1)),
                    ((2, 0), (-2, 0), (0, 2), (0, -2)), (0, 2))
    with pytest.raises(AxiomViolation):
        validate(bad)


def test_duplicates_are_removed():
    a1 = RootDatum(1, ((1,), (-1,), (1,)), ((2,), (-2,), (2,)), (2,))
    v = validate(a1)
    assert len(v.coroots) == 2 and v.simple_coroots == ((1,),)


def test_small_closures():
    assert len(rd.simple_sc("A", 2).coroots) == 6
    assert len(rd.simple_sc("G", 2).coroots) == 12
    assert rd.simple_sc("A", 1).roots[0] == (2,)


@pytest.mark.parametrize("kind,n", ALL_TYPES)
@pytest.mark.parametrize("isogeny", ["sc", "adjoint"])
def test_constructors_validate(kind, n, isogeny):
    d = rd.simple_sc(kind, n) if isogeny == "sc" else rd.simple_adjoint(kind, n)
    assert validate(d) == d
    assert len(d.roots) == len(d.coroots) == ROOT_COUNT[kind](n)
    assert set(d.coroots) == {tuple(-x for x in c) for c in d.coroots}
    again = rd.reflection_closure(d.rank, d.roots, d.coroots)
    assert set(again[1]) == set(d.coroots)
    if n <= 4:
        assert brute_closure(d.simple_roots, d.simple_coroots) == set(zip(d.roots, d.coroots))


@pytest.mark.parametrize("kind,n", ALL_TYPES)
def test_adjoint_index_is_cartan_determinant(kind, n):
    d = rd.simple_adjoint(kind, n)
    C = rd.cartan_matrix(kind, n)
    R = rd.coroot_embedding(d).matrix
    q = quotient_structure_rel(IntMatrix.identity(n), R)
    assert q.order == abs(C.det()) == index_by_minors(R.columns(), n)


@pytest.mark.parametrize("n,det", [(1, 2), (2, 3), (3, 4), (6, 7)])
def test_type_a_index(n, det):
    assert rd.cartan_matrix("A", n).det() == det


def test_adjoint_a_examples():
    assert rd.coroot_embedding(rd.simple_adjoint("A", 1)).matrix == IntMatrix([[2]])
    assert rd.coroot_embedding(rd.simple_adjoint("A", 2)).matrix == IntMatrix([[2, -1], [-1, 2]])


@pytest.mark.parametrize("kind,n", ALL_TYPES)
def test_sc_embedding_is_identity(kind, n):
    d = rd.simple_sc(kind, n)
    assert rd.coroot_embedding(d).matrix == IntMatrix.identity(n)
    assert rd.is_simply_connected(d)


def test_is_simply_connected_negative_cases():
    assert not rd.is_simply_connected(rd.simple_adjoint("A", 1))
    assert not rd.is_simply_connected(rd.gl(3))
    assert not rd.is_simply_connected(rd.torus(2))
    assert rd.is_simply_connected(rd.torus(0))


def test_gl():
    assert rd.gl(1) == rd.torus(1).__class__(1, name="GL(1)")
    assert set(rd.gl(2).coroots) == {(1, -1), (-1, 1)}
    assert len(rd.gl(3).coroots) == 6
    R = rd.coroot_embedding(rd.gl(3)).matrix
    assert R == IntMatrix.from_columns([(1, -1, 0), (0, 1, -1)], 3)


def test_product():
    a1 = rd.simple_sc("A", 1)
    assert rd.product(a1, rd.torus(0)) == a1
    assert len(rd.product(a1, a1).coroots) == 4
    p = rd.product(rd.gl(2), rd.torus(1))
    assert p.rank == 3 and p.semisimple_rank == 1
    x, y, z = rd.gl(2), rd.simple_adjoint("B", 2), rd.simple_sc("G", 2)
    assert rd.product(rd.product(x, y), z) == rd.product(x, rd.product(y, z))
    assert validate(rd.product(x, y)) == rd.product(validate(x), validate(y))


def test_invalid_types():
    for kind, n in [("E", 5), ("F", 3), ("G", 3), ("D", 1), ("H", 3), ("A", 0)]:
        with pytest.raises(InvalidType):
            rd.simple_sc(kind, n)
    assert rd.parse_type("e6") == ("E", 6)


def test_transport_preserves_pairings():
    from pi0real.fuzz import random_unimodular, rng

    d = rd.simple_adjoint("B", 3)
    U = random_unimodular(3, rng(3))
    t = rd.transport(d, U)
    assert validate(t) == t
    assert [pairing(a, c) for a, c in zip(t.roots, t.coroots)] == [2] * len(t.roots)
