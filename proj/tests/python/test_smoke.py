"""Smoke tests for the Python bindings: exact values, exact types, exact errors."""

from fractions import Fraction

import pytest

import quotloc


def test_closed_form_values():
    assert quotloc.intersect_main(2, 3, 0) == Fraction(4)
    assert quotloc.intersect_main(2, 1, 1) == Fraction(-4)
    assert quotloc.intersect_main(3, 6, 0) == Fraction(224)
    assert isinstance(quotloc.intersect_main(1, 0, 0), Fraction)


def test_psi_reduction():
    assert quotloc.intersect_psi(3, 3, 0, [1]) == Fraction(4)
    assert quotloc.intersect_psi(3, 0, 0, [1, 1]) == Fraction(1)
    assert quotloc.intersect_psi(2, 3, 0) == Fraction(4)


def test_localization_matches_closed_form():
    assert quotloc.quot_localized(1, 1, 0, 3, 1) == Fraction(1)
    assert quotloc.quot_localized(1, 1, 0, 3, 1, route="b") == Fraction(1)
    assert quotloc.rhs_red(1, 1, 0) == Fraction(1)
    assert quotloc.rhs_red(2, 5, 0) == Fraction(80)


def test_reduction_bridge():
    m, factor = quotloc.reduction_prefactor(2, 3, 0)
    assert m == 5
    assert factor == Fraction(1, 20)
    assert factor * quotloc.rhs_red(2, 5, 0) == quotloc.intersect_main(2, 3, 0)


def test_fraction_helpers():
    assert quotloc.lemma_bern_limit(2) == Fraction(1, 24)
    assert quotloc.lemma_bern_limit(0) == Fraction(-1)
    assert quotloc.residue_closed(1, 0, 1, 2) == Fraction(1, 4)
    assert quotloc.asymptotic_sum(1, 1, 0, 1) == Fraction(-1)


def test_regime_predicate():
    assert quotloc.in_large_n_regime(1, 3)
    assert not quotloc.in_large_n_regime(2, 3)
    assert quotloc.in_large_n_regime(2, 5)


def test_invalid_input_raises():
    with pytest.raises(ValueError):
        quotloc.intersect_main(2, 4, 0)  # degree constraint
    with pytest.raises(ValueError):
        quotloc.quot_localized(1, 1, 0, 4, 1)  # N must be an odd prime
    with pytest.raises(ValueError):
        quotloc.quot_localized(1, 1, 0, 3, 1, route="c")
    with pytest.raises(ValueError):
        quotloc.intersect_psi(3, 0, 0, [2])
