"""Exact-arithmetic helpers: fractional part, CRT, unit residues."""

import math
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from teichcurves.arith import Congruence, crt, frac, unit_residues
from teichcurves.errors import IncompatibleCongruence

rationals = st.fractions(min_value=-10**6, max_value=10**6,
                         max_denominator=10**4)


@given(rationals)
def test_frac_idempotent(q):
    assert frac(frac(q)) == frac(q)


@given(rationals, st.integers(min_value=-50, max_value=50))
def test_frac_integer_shift(q, k):
    assert frac(q + k) == frac(q)


def test_frac_of_integer_is_zero():
    assert frac(7) == 0
    assert frac(Fraction(-3)) == 0
    assert frac(Fraction(0)) == 0


@given(st.lists(st.tuples(st.integers(0, 30), st.integers(2, 40)),
                min_size=1, max_size=4))
def test_crt_roundtrip(pairs):
    congruences = [Congruence(r, m) for r, m in pairs]
    try:
        combined = crt(congruences)
    except IncompatibleCongruence:
        # incompatibility must be genuine: no residue satisfies all
        lcm = math.lcm(*(m for _, m in pairs))
        assert not any(
            all(x % m == r % m for r, m in pairs) for x in range(lcm))
        return
    assert combined.modulus == math.lcm(*(m for _, m in pairs))
    for c in congruences:
        assert combined.residue % c.modulus == c.residue % c.modulus


def test_crt_incompatible():
    with pytest.raises(IncompatibleCongruence):
        crt([Congruence(0, 4), Congruence(1, 2)])


def _phi(L):
    out = L
    p, rest = 2, L
    while p * p <= rest:
        if rest % p == 0:
            out -= out // p
            while rest % p == 0:
                rest //= p
        p += 1
    if rest > 1:
        out -= out // rest
    return out


@given(st.integers(min_value=1, max_value=500))
def test_unit_residues_count_is_totient(L):
    units = unit_residues(L)
    expected = 0 if L == 1 else _phi(L)
    assert len(units) == expected
    assert all(0 < x < L and math.gcd(x, L) == 1 for x in units)


def test_unit_residues_trivial_modulus():
    assert unit_residues(1) == []
