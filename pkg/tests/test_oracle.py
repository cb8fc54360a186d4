"""Brute-force oracle: enumeration boxes and closed-form crosschecks."""

import math

import pytest
from hypothesis import given, strategies as st

from kummer_moduli.lattice import KummerLattice, SplitClass, divisibility_vector
from kummer_moduli.oracle import (
    SearchBounds,
    default_bounds,
    divisibility_crosscheck,
    enumerate_primitive_classes,
    nonemptiness_crosscheck,
)

BOX = SearchBounds(20, 20, 50)


def test_enumerate_examples():
    assert enumerate_primitive_classes(2, 3, 3, BOX) == []
    assert SplitClass(2, 3, -1, 1) in enumerate_primitive_classes(2, 6, 3, BOX)
    assert SplitClass(2, 2, -1, 2) in enumerate_primitive_classes(2, 5, 2, BOX)


def test_enumerate_results_are_consistent():
    from kummer_moduli.lattice import divisibility_split, square_split

    for c in enumerate_primitive_classes(3, 28, 8, BOX):
        assert square_split(c) == 56
        assert divisibility_split(c) == 8
        assert math.gcd(c.a, c.b) == 1


def test_enumerate_domain():
    with pytest.raises(ValueError):
        enumerate_primitive_classes(1, 4, 1, BOX)
    with pytest.raises(ValueError):
        enumerate_primitive_classes(2, 0, 1, BOX)


def test_search_bounds_validation():
    with pytest.raises(ValueError):
        SearchBounds(0, 5, 5)
    with pytest.raises(ValueError):
        SearchBounds(5, -1, 5)


def test_default_bounds_cover_delta_coefficient():
    for n in (2, 3, 4):
        for d in (1, 17, 100):
            bounds = default_bounds(n, d, 2)
            # witness construction never needs |b| beyond sqrt(d/(n+1)) + margin
            assert bounds.max_b * bounds.max_b * (n + 1) >= d


def test_divisibility_crosscheck_small():
    assert divisibility_crosscheck(2, 2) == []


def test_nonemptiness_crosscheck_small():
    assert nonemptiness_crosscheck(2, 50) == []


def test_nonemptiness_crosscheck_accepts_bounds_override():
    # a deliberately starved box misses genuinely non-empty triples
    starved = SearchBounds(1, 1, 1)
    violations = nonemptiness_crosscheck(2, 30, starved)
    assert (2, 5, 2) in violations


coords = st.tuples(*[st.integers(-40, 40)] * 7).filter(lambda v: any(v))


@given(coords, st.sampled_from([2, 3, 4]))
def test_closed_form_matches_gram_ideal(v, n):
    """The gcd formula used by the numpy crosscheck, pinned to the slow path."""
    lat = KummerLattice(n)
    content = math.gcd(*(abs(x) for x in v[:6])) if any(v[:6]) else 0
    formula = math.gcd(content, 2 * (n + 1) * abs(v[6]))
    assert divisibility_vector(v, lat) == formula
