import math
from fractions import Fraction

import pytest

import latpath


def test_golden_row():
    row = latpath.count_row(latpath.ModelSpec.uq(3), 8)
    assert row == {0: 1, 2: 28, 4: 13, 6: 7, 8: 1}
    aux = latpath.count_row(latpath.ModelSpec.auxiliary(3), 8)
    assert aux[2] == 27


def test_closed_form_matches_table():
    model = latpath.ModelSpec.uq(5)
    for n in range(21):
        for m in range(n % 2, n + 1, 2):
            assert latpath.uq_multiplicity(5, m, n) == latpath.weighted_count(model, m, n)


def test_big_integers_cross_the_boundary_exactly():
    assert latpath.binom(400, 200) == math.comb(400, 200)


def test_dimension_conservation():
    dec = latpath.decompose(30, 5)
    assert sum(m * latpath.tilting_dim(k, 5) for k, m in dec.items()) == 2**30


def test_certificates_are_exact_fractions():
    assert latpath.wz_certificate_check("onee", 3, 1, 2) == Fraction(0)
    with pytest.raises(ValueError):
        latpath.wz_certificate_check("onee", 4, 4, 1)  # pole line j = n


def test_enumeration_guard_and_weights():
    model = latpath.ModelSpec.uq(3)
    with pytest.raises(RuntimeError):
        latpath.enumerate_paths(model, 1, 25)
    sample = latpath.enumerate_paths(model, 2, 8)
    assert sum(w for _, w in sample) == 28


def test_boundary_points():
    pts = latpath.boundary_points(latpath.ModelSpec.auxiliary(3), 2, 8)
    assert pts == [(2, 2), (2, 4), (2, 6), (2, 8)]
