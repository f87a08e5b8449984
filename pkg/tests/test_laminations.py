from hypothesis import given, settings
from hypothesis import strategies as st

from planarmcg.laminations import Lamination, lamination_of
from planarmcg.mcg import curve, from_braid
from planarmcg.words import canonical_letters

from conftest import braid_words, curves


def test_block_curve_length():
    for n in range(1, 7):
        for a in range(1, n + 1):
            for b in range(a, n + 1):
                assert Lamination.block_curve(a, b, n).length() == b - a + 1


@settings(max_examples=400, deadline=None)
@given(st.integers(2, 8).flatmap(lambda n: st.tuples(curves(n), braid_words(n, 30))))
def test_length_matches_materialized_word(cb):
    c, b = cb
    lam = lamination_of(c.base, c._carrier, c.n)
    assert lam.length() == len(canonical_letters(c.word))
    lam.apply_braid(b)
    f = from_braid(b, c.n)
    assert lam.length() == len(canonical_letters(f.act_letters(c.word)))


@settings(max_examples=200, deadline=None)
@given(st.integers(2, 6).flatmap(lambda n: st.tuples(curves(n), curves(n))))
def test_coordinates_separate_curves(ab):
    a, b = ab
    ka = lamination_of(a.base, a._carrier, a.n).key()
    kb = lamination_of(b.base, b._carrier, b.n).key()
    assert (ka == kb) == (a == b)


def test_half_twist_and_inverse_cancel():
    lam = Lamination.block_curve(2, 3, 5)
    before = lam.key()
    lam.apply_braid((1, 3, -2, 4))
    lam.apply_braid((-4, 2, -3, -1))
    assert lam.key() == before
