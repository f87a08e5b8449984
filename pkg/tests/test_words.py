import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from planarmcg.words import (
    AlphabetMismatchError,
    MalformedWordError,
    Word,
    _least_rotation,
    abelianize,
    canonical_letters,
    conjugacy_equal,
    cyclic_canonical,
    reduce,
)

from conftest import words


def W(text, n=3):
    return Word.parse(text, n)


def test_reduce_examples():
    assert reduce(W("x1 x2 X2 x3")) == W("x1 x3")
    assert reduce(W("")) == W("")
    assert reduce(W("x1 X1 x1")) == W("x1")


def test_reduce_cascades():
    assert reduce(W("x1 x2 x3 X3 X2 X1")).letters == ()


def test_malformed_letters():
    with pytest.raises(MalformedWordError):
        Word((1, 4), 3)
    with pytest.raises(MalformedWordError):
        Word((0,), 3)


def test_parse_accepts_ints_and_prints_back():
    w = Word.parse("1 -2 3", 3)
    assert str(w) == "x1 X2 x3"
    assert Word.parse(str(w), 3) == w


def test_cyclic_canonical_examples():
    assert cyclic_canonical(W("x2 x3")) == cyclic_canonical(W("x3 x2"))
    assert cyclic_canonical(W("x1 x2 x3 X1")) == cyclic_canonical(W("x2 x3"))
    assert cyclic_canonical(W("X3 X2")) == cyclic_canonical(W("x2 x3"))


def test_conjugacy_examples():
    assert conjugacy_equal(W("x1 x2"), W("x2 x1"))
    assert not conjugacy_equal(W("x1 x2"), W("x1 x3"))
    with pytest.raises(AlphabetMismatchError):
        conjugacy_equal(W("x1"), Word((1,), 4))
    with pytest.raises(AlphabetMismatchError):
        W("x1") * Word((1,), 2)


def test_abelianize_examples():
    assert abelianize(W("x1 x2 X1")) == (0, 1, 0)
    assert abelianize(W("x1 x2")) == (1, 1, 0)


@given(st.lists(st.integers(0, 3), max_size=12))
def test_booth_matches_brute_force(keys):
    if not keys:
        return
    k = _least_rotation(keys)
    rots = [keys[i:] + keys[:i] for i in range(len(keys))]
    assert keys[k:] + keys[:k] == min(rots)


@settings(max_examples=300)
@given(words(), st.data())
def test_canonical_form_invariant_under_conjugation_and_inversion(wn, data):
    letters, n = wn
    g, _ = data.draw(words(n=n))
    w = Word(letters, n)
    c = cyclic_canonical(w)
    conj = Word(g, n) * w * Word(g, n).inverse()
    assert cyclic_canonical(conj) == c
    assert cyclic_canonical(w.inverse()) == c
    assert conjugacy_equal(w, conj)


@settings(max_examples=300)
@given(words())
def test_reduce_idempotent_and_shrinking(wn):
    letters, n = wn
    w = Word(letters, n)
    r = reduce(w)
    assert reduce(r) == r
    assert len(r) <= len(w)
    assert all(a != -b for a, b in zip(r.letters, r.letters[1:]))


@settings(max_examples=300)
@given(words(), st.data())
def test_abelianize_homomorphism_and_class_function(wn, data):
    u, n = wn
    v, _ = data.draw(words(n=n))
    U, V = Word(u, n), Word(v, n)
    s = [a + b for a, b in zip(abelianize(U), abelianize(V))]
    assert list(abelianize(U * V)) == s
    assert abelianize(V * U * V.inverse()) == abelianize(U)


@settings(max_examples=200)
@given(words())
def test_canonical_is_cyclically_reduced_minimum(wn):
    letters, n = wn
    c = canonical_letters(letters)
    if c:
        assert c[0] != -c[-1]
    # brute force over rotations of the reduced word and its inverse
    from planarmcg.words import CyclicWord, cyclic_reduce, invert_letters

    r = cyclic_reduce(letters)
    cands = [r[i:] + r[:i] for i in range(len(r))] or [()]
    ri = invert_letters(r)
    cands += [ri[i:] + ri[:i] for i in range(len(ri))]
    assert CyclicWord(c, n).sort_key() == min(CyclicWord(x, n).sort_key() for x in cands)
