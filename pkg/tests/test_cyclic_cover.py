"""Cyclic covers of the line branched at four points: characters, genus,
degenerations."""

import math
import random

import pytest
from hypothesis import assume, given, settings, strategies as st

from teichcurves.cyclic_cover import (
    CoverFamily, arithmetic_genus, character_data, cyclic_cover_genus,
    degeneration_at_zero, genus_smooth_fiber)
from teichcurves.errors import IndexOutOfRange, InvalidParams


@st.composite
def cover_families(draw, max_N=60):
    N = draw(st.integers(min_value=2, max_value=max_N))
    a = [draw(st.integers(min_value=1, max_value=N - 1)) for _ in range(3)]
    a4 = (-sum(a)) % N
    assume(a4 != 0)
    a.append(a4)
    assume(math.gcd(N, *a) == 1)
    return CoverFamily(N, tuple(a))


def test_validation():
    with pytest.raises(InvalidParams):
        CoverFamily(5, (1, 2, 3, 5))  # a4 out of range
    with pytest.raises(InvalidParams):
        CoverFamily(5, (1, 2, 3, 3))  # sum not divisible by N
    with pytest.raises(InvalidParams):
        CoverFamily(6, (2, 2, 4, 4))  # imprimitive


def test_character_data_known_family():
    fam = CoverFamily(30, (13, 17, 23, 7))
    cd = character_data(fam, 1)
    assert cd.k == 1 and cd.s == 4 and cd.dim == 2
    assert cd.hodge == (1, 1)
    with pytest.raises(IndexOutOfRange):
        character_data(fam, 0)
    with pytest.raises(IndexOutOfRange):
        character_data(fam, 30)


@given(cover_families())
@settings(max_examples=100, deadline=None)
def test_character_invariants(fam):
    for i in range(1, fam.N):
        cd = character_data(fam, i)
        assert sum(cd.sigma) in (1, 2, 3)
        assert cd.k in (0, 1, 2)
        p, q = cd.hodge
        assert p >= 0 and q >= 0
        assert p == cd.s - 2 - cd.k and q == cd.k
        assert cd.dim == character_data(fam, fam.N - i).dim


def test_genus_smooth_fiber_examples():
    assert genus_smooth_fiber(CoverFamily(30, (13, 17, 23, 7))) == 29
    # elliptic curve: square root of a degree-4 divisor
    assert genus_smooth_fiber(CoverFamily(2, (1, 1, 1, 1))) == 1


def test_riemann_hurwitz_oracle():
    # y^2 = x(x-1): rational curve
    assert cyclic_cover_genus(2, [1, 1]) == 0
    # y^2 = x(x-1)(x-t): elliptic
    assert cyclic_cover_genus(2, [1, 1, 1]) == 1
    # degree-5 cover of the line branched at 4 points (incl. infinity)
    assert cyclic_cover_genus(5, [1, 1, 1]) == 4


def test_degeneration_known():
    fam = CoverFamily(8, (1, 7, 1, 7))
    deg = degeneration_at_zero(fam)
    assert deg.nodes == 2
    assert deg.component_genus == (3, 3)
    assert arithmetic_genus(deg) == genus_smooth_fiber(fam)


def test_degeneration_nontrivial_beta():
    # both beta values exceed 1; the naive two-component identity fails here
    fam = CoverFamily(6, (3, 3, 2, 4))
    deg = degeneration_at_zero(fam, place="inf")
    assert max(deg.beta) > 1
    assert arithmetic_genus(deg) == genus_smooth_fiber(fam)


def test_degeneration_randomized_all_places():
    rng = random.Random(20260823)
    families = []
    while len(families) < 50:
        N = rng.randrange(2, 61)
        a = [rng.randrange(1, N) for _ in range(3)]
        a4 = (-sum(a)) % N
        if a4 == 0 or math.gcd(N, *a, a4) != 1:
            continue
        families.append(CoverFamily(N, (*a, a4)))
    for fam in families:
        g = genus_smooth_fiber(fam)
        for place in ("0", "1", "inf"):
            deg = degeneration_at_zero(fam, place=place)
            assert arithmetic_genus(deg) == g, (fam, place)
