import math

import numpy as np
import pytest

from planarmcg.factorization import product
from planarmcg.mcg import compose, conjugate, curve, from_braid, identity
from planarmcg.pa import (
    AffineRep,
    NotATwistPairStretch,
    classify,
    curve_lengths,
    growth_rate,
    stretch_from_z,
    thurston_rep,
    z_from_stretch,
)

LAMBDA4 = 7 + 4 * math.sqrt(3)


def test_z4_product_matches_expected_values():
    a, b = thurston_rep(4)
    m = a @ b
    assert m.tolist() == [[-15, 4], [-4, 1]]
    assert m.trace == -14
    c = classify(m)
    assert c.kind == "hyperbolic"
    assert abs(c.stretch - LAMBDA4) < 1e-12
    assert z_from_stretch(LAMBDA4) == 4


def test_z0_is_identity():
    a, b = thurston_rep(0)
    assert (a @ b).tolist() == [[1, 0], [0, 1]]
    assert classify(a @ b).kind == "parabolic"


@pytest.mark.parametrize("z", range(0, 51))
def test_general_product_and_trace(z):
    a, b = thurston_rep(z)
    m = a @ b
    assert m.tolist() == [[1 - z * z, z], [-z, 1]]
    assert m.trace == 2 - z * z


@pytest.mark.parametrize("z", range(3, 51))
def test_stretch_formula_and_inverse(z):
    a, b = thurston_rep(z)
    c = classify(a @ b)
    assert c.pseudo_anosov
    assert abs(c.stretch - stretch_from_z(z)) <= 1e-12 * c.stretch
    # numpy eigenvalues as a second opinion
    ev = max(abs(np.linalg.eigvals((a @ b).m.astype(float))))
    assert abs(ev - c.stretch) <= 1e-9 * ev
    assert z_from_stretch(stretch_from_z(z)) == z


def test_stretch_examples():
    assert stretch_from_z(2) == 1
    assert abs(stretch_from_z(3) - (7 + 3 * math.sqrt(5)) / 2) < 1e-12
    assert abs(classify([[-8, 3], [-3, 1]]).stretch - (7 + 3 * math.sqrt(5)) / 2) < 1e-12
    assert z_from_stretch(1) == 2
    assert z_from_stretch((7 + 3 * math.sqrt(5)) / 2) == 3


def test_classify_kinds_and_errors():
    assert classify([[0, 1], [-1, 0]]).kind == "elliptic"
    assert classify([[1, 0], [0, 1]]).stretch is None
    with pytest.raises(ValueError):
        classify([[2, 0], [0, 1]])
    with pytest.raises(ValueError):
        AffineRep([[1, 2, 3], [0, 1, 0]])
    with pytest.raises(ValueError):
        thurston_rep(-1)
    with pytest.raises(ValueError):
        stretch_from_z(1)


def test_z_from_stretch_rejects_gaps():
    with pytest.raises(NotATwistPairStretch):
        z_from_stretch(30.0)  # between z = 5 (22.9) and z = 6 (33.97)


def test_growth_of_identity():
    c = curve({1, 2}, 3)
    assert growth_rate(identity(3), c, 5) == 1.0


def test_growth_base_pair(base_pair):
    f = product(base_pair)
    g = growth_rate(f, base_pair[0], 20)
    assert abs(g - LAMBDA4) / LAMBDA4 < 0.01
    assert z_from_stretch(g) == 4


def test_lamination_lengths_agree_with_words(base_pair):
    f = product(base_pair)
    seed = base_pair[0]
    assert curve_lengths(f, seed, 4) == curve_lengths(f, seed, 4, materialize=True)


def test_conjugate_growth_converges_to_same_limit(base_pair):
    # lengths are not conjugation invariant, the limit is
    f = product(base_pair)
    g = from_braid((2, -1, 2), 3)
    h = conjugate(g, f)
    from planarmcg.mcg import apply

    seed = base_pair[0]
    a = growth_rate(f, seed, 20)
    b = growth_rate(h, apply(g, seed), 20)
    assert abs(a - b) < 1e-9
    la = curve_lengths(f, seed, 6)
    lb = curve_lengths(h, apply(g, seed), 6)
    assert la != lb


def test_growth_rate_needs_two_steps():
    with pytest.raises(ValueError):
        growth_rate(identity(3), curve({1, 2}, 3), 1)
