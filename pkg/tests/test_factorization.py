import itertools

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from planarmcg.factorization import (
    Factorization,
    factorization,
    global_conjugate,
    hurwitz_inverse,
    hurwitz_move,
    multiplicity_profile,
    product,
    verify_relation_disjoint,
    verify_relation_lantern,
)
from planarmcg.mcg import SizeMismatchError, compose, conjugate, curve, from_braid, identity, invert
from planarmcg.words import Word, cyclic_canonical

from conftest import braid_words, factorizations, interleaved, subsets


def test_product_examples():
    assert product(Factorization((), 3)) == identity(3)
    assert product(factorization([(1,), (2,)], 3)).framing == (1, 1, 0)


def test_mixed_sizes_rejected():
    with pytest.raises(SizeMismatchError):
        Factorization((curve({1}, 3), curve({1}, 4)), 3)


def test_profile_examples(base_pair):
    p = multiplicity_profile(base_pair)
    assert p.M == (2, 2, 0)
    assert p.joint(1, 2) == 2 and p.joint(1, 3) == 0 and p.joint(2, 3) == 0
    q = multiplicity_profile(factorization([(1,)], 3))
    assert q.M == (1, 0, 0) and not q.J.any()


@settings(max_examples=100, deadline=None)
@given(factorizations())
def test_profile_bounds(F):
    p = multiplicity_profile(F)
    for i, j in itertools.permutations(range(1, F.n + 1), 2):
        assert p.M[i - 1] >= p.joint(i, j) >= 0
    assert np.array_equal(p.J, p.J.T)


def test_hurwitz_swaps_disjoint_and_nested_curves():
    F = factorization([(1,), (2,)], 3)
    G = hurwitz_move(F, 1)
    assert G.classes() == (F[1].cls.letters, F[0].cls.letters)
    assert hurwitz_inverse(F, 1).same_curves(G)
    N = factorization([(1, 2, 3), (1, 2)], 3)
    assert hurwitz_move(N, 1).classes() == (N[1].cls.letters, N[0].cls.letters)


def test_hurwitz_on_intersecting_pair():
    F = factorization([(1, 2), (2, 3)], 3)
    G = hurwitz_move(F, 1)
    assert G[0] == F[1]
    # tau_{23}^-1 fixes x1 and sends x2 to (x2 x3)^-1 x2 (x2 x3)
    expected = cyclic_canonical(Word.parse("x1 X3 X2 x2 x2 x3", 3))
    assert G[1].cls == expected
    assert G[1].cls != F[0].cls
    assert product(G) == product(F)


def test_hurwitz_positions_checked():
    F = factorization([(1,), (2,)], 3)
    with pytest.raises(IndexError):
        hurwitz_move(F, 2)
    with pytest.raises(IndexError):
        hurwitz_inverse(F, 0)


def test_hurwitz_inverse_definition():
    F = factorization([(1, 2), (2, 3)], 3)
    G = hurwitz_inverse(F, 1)
    assert G[1] == F[0]
    assert G[0].cls.letters == curve((2, 3), 3, (1, 1)).cls.letters  # tau_12 = sigma_1^2


def test_hurwitz_move_as_global_conjugation(base_pair):
    # two factors: the move is conjugation by tau_b^-1 up to the order of the factors
    a, b = base_pair
    H = hurwitz_move(base_pair, 1)
    C = global_conjugate(base_pair, b.inverse_twist)
    assert sorted(H.classes()) == sorted(C.classes())
    assert H.classes() != C.classes()
    # two moves are conjugation by the inverse monodromy, order included
    HH = hurwitz_move(H, 1)
    phi = product(base_pair)
    assert HH.same_curves(global_conjugate(base_pair, invert(phi)))


def test_global_conjugate_identity(base_pair):
    assert global_conjugate(base_pair, identity(3)).same_curves(base_pair)
    with pytest.raises(SizeMismatchError):
        global_conjugate(base_pair, identity(4))


@settings(max_examples=150, deadline=None)
@given(factorizations(), st.data())
def test_hurwitz_properties(F, data):
    i = data.draw(st.integers(1, len(F) - 1))
    G = hurwitz_move(F, i)
    assert product(G) == product(F)
    assert multiplicity_profile(G) == multiplicity_profile(F)
    assert hurwitz_move(hurwitz_inverse(F, i), i).same_curves(F)
    assert hurwitz_inverse(G, i).same_curves(F)


@settings(max_examples=150, deadline=None)
@given(factorizations(), st.data())
def test_global_conjugation_properties(F, data):
    b = data.draw(braid_words(F.n, 5))
    f = from_braid(b, F.n)
    G = global_conjugate(F, f)
    assert product(G) == conjugate(f, product(F))
    if f.is_pure():
        assert multiplicity_profile(G) == multiplicity_profile(F)


def test_relation_disjoint_examples():
    assert verify_relation_disjoint(curve({1}, 3), curve({2, 3}, 3))
    assert verify_relation_disjoint(curve({1, 2}, 3), curve({1, 2, 3}, 3))
    assert not verify_relation_disjoint(curve({1, 2}, 3), curve({2, 3}, 3))


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_relation_disjoint_matches_ngon_picture(n):
    # canonical curves commute exactly when their hulls are nested or separated
    for A, B in itertools.combinations(subsets(n), 2):
        expected = A <= B or B <= A or (not (A & B) and not interleaved(A, B))
        assert verify_relation_disjoint(curve(A, n), curve(B, n)) == expected, (A, B)


def test_lantern_d3():
    ok, c = verify_relation_lantern({1}, {2}, {3}, 3, bound=2)
    assert ok and c.enclosed == (1, 3)
    assert len(c.conjugator) <= 2


def test_lantern_consecutive_blocks_d4():
    ok, c = verify_relation_lantern({1}, {2, 3}, {4}, 4)
    assert ok and c == curve({1, 4}, 4)


def _cyclic_triples(n):
    for A, B, C in itertools.permutations(subsets(n), 3):
        if A & B or B & C or A & C:
            continue
        U = sorted(A | B | C)
        lab = "".join("A" if x in A else "B" if x in B else "C" for x in U)
        rots = {lab[i:] + lab[:i] for i in range(len(lab))}
        if any(r == "A" * len(A) + "B" * len(B) + "C" * len(C) for r in rots):
            yield A, B, C


@pytest.mark.parametrize("n", [3, 4, 5])
def test_lantern_holds_with_canonical_curves(n):
    for A, B, C in _cyclic_triples(n):
        ok, c = verify_relation_lantern(A, B, C, n, bound=0)
        assert ok, (A, B, C)


def test_lantern_profiles_agree():
    ok, c = verify_relation_lantern({1}, {2}, {3}, 3)
    lhs = factorization([(1,), (2,), (3,), (1, 2, 3)], 3)
    rhs = Factorization((curve({1, 2}, 3), curve({2, 3}, 3), c), 3)
    pl, pr = multiplicity_profile(lhs), multiplicity_profile(rhs)
    assert pl == pr
    assert pl.M == (2, 2, 2)
    assert all(pl.joint(i, j) == 1 for i, j in itertools.combinations(range(1, 4), 2))


def test_lantern_rejects_overlapping_sets():
    with pytest.raises(ValueError):
        verify_relation_lantern({1}, {1, 2}, {3}, 3)
