"""Triangle-group family invariants: cases, genera, orbits, boundary fiber,
trace field, primitivity."""

import math
from fractions import Fraction

import pytest

from teichcurves import triangle_family as tf
from teichcurves.cyclic_cover import cyclic_cover_genus, genus_smooth_fiber
from teichcurves.errors import HypothesisUnmet, InvalidParams


def test_build_3_5():
    inv = tf.build(3, 5)
    assert inv.sigma == (Fraction(13, 30), Fraction(17, 30),
                         Fraction(23, 30), Fraction(7, 30))
    assert inv.N == 30 and inv.case == "O"
    assert inv.gamma == 1 and inv.beta == 1 and inv.delta == 1
    assert inv.Nhat == 30 and inv.alpha == 19
    assert inv.alpha_modulus == 30


def test_build_even_cases():
    inv = tf.build(2, 7)
    assert inv.N == 28 and inv.case == "OE" and inv.delta == 2
    assert inv.alpha == 13 and (13 * 13) % 28 == 1
    inv = tf.build(2, 5)
    assert inv.N == 20 and inv.alpha == 9 and (9 * 9) % 20 == 1
    inv = tf.build(4, 12)
    assert inv.case == "S" and inv.N == 12 and inv.gamma == 4


def test_build_swap_flag():
    inv = tf.build(7, 2)
    assert inv.swapped and (inv.m, inv.n) == (2, 7)


def test_alpha_fallback_when_no_involutive_lift():
    # for this pair no residue in the right class squares to 1 mod N,
    # so the involution only exists at the intermediate level
    inv = tf.build(4, 8)
    assert inv.case == "DE" and inv.N == 16 and inv.Nhat == 8
    assert inv.alpha_modulus == 8
    assert (inv.alpha * inv.alpha) % inv.Nhat == 1


def test_sigma_sums():
    for m in range(2, 13):
        for n in range(2, 13):
            if m * n < 6:
                continue
            s = tf.build(m, n).sigma
            assert s[0] + s[1] == 1 and s[2] + s[3] == 1


def test_alpha_is_involution_mod_its_modulus():
    for m in range(2, 16):
        for n in range(m, 16):
            if m * n < 6:
                continue
            inv = tf.build(m, n)
            assert (inv.alpha ** 2) % inv.alpha_modulus == 1 % inv.alpha_modulus


def test_genera_examples():
    inv = tf.build(3, 5)
    assert (tf.genus_Z(inv), tf.genus_Y(inv), tf.genus_X(inv)) == (29, 29, 4)
    inv = tf.build(2, 7)
    assert (tf.genus_Z(inv), tf.genus_Y(inv), tf.genus_X(inv)) == (27, 27, 3)
    assert tf.genus_X(tf.build(4, 9)) == 12
    assert tf.genus_X(tf.build(5, 9)) == 16


def test_genus_Z_matches_cover_formula():
    for m in range(2, 16):
        for n in range(m, 16):
            if m * n < 6:
                continue
            inv = tf.build(m, n)
            assert tf.genus_Z(inv) == genus_smooth_fiber(inv.cover)


def test_genus_X_nonintegral_case_raises():
    with pytest.raises(HypothesisUnmet):
        tf.genus_X(tf.build(6, 10))


def test_fixed_points():
    assert tf.fixed_points(tf.build(3, 5)) == tf.FixedPoints(12, 20, 0)
    assert tf.fixed_points(tf.build(4, 12)) == tf.FixedPoints(8, 24, 2)


def test_zero_count():
    assert tf.zero_count(tf.build(3, 5)) == 1
    assert tf.zero_count(tf.build(4, 8)) == 2


def test_orbits_odd_coprime():
    inv = tf.build(3, 5)
    part = tf.orbits(inv)
    assert part.certified
    assert len(part.orbits) == 4 == (3 - 1) * (5 - 1) // 2
    reps = sorted(o.representative for o in part.orbits)
    assert reps == [1, 2, 4, 7]
    assert frozenset({1, 29, 19, 11}) in {o.members for o in part.orbits}


def test_orbit_sweep_odd_coprime():
    for m in range(3, 16, 2):
        for n in range(m + 2, 16, 2):
            if math.gcd(m, n) != 1:
                continue
            part = tf.orbits(tf.build(m, n))
            assert part.certified
            assert len(part.orbits) == (m - 1) * (n - 1) // 2
            assert len(part.orbits) == tf.genus_X(tf.build(m, n))


def test_orbits_strict():
    with pytest.raises(HypothesisUnmet):
        tf.orbits(tf.build(2, 5), strict=True)
    assert not tf.orbits(tf.build(2, 5)).certified


def test_degeneration_nodes_match_case_formula():
    for m in range(2, 12):
        for n in range(m, 12):
            if m * n < 6:
                continue
            inv = tf.build(m, n)
            if inv.case == "S":
                continue
            from teichcurves.cyclic_cover import degeneration_at_zero
            deg = degeneration_at_zero(inv.cover)
            assert deg.nodes == 2 * inv.m // inv.gamma


def test_ward_fiber():
    w = tf.ward_fiber(3, 5)
    assert w.degree == 10
    assert w.genus == 4 == tf.genus_X(tf.build(3, 5))
    assert w.polygon_angles == (Fraction(1, 5), Fraction(1, 10), Fraction(7, 10))
    # branch exponents reproduce the genus through the independent oracle
    exps = [b.exponent for b in w.branch_points if not b.at_infinity]
    assert cyclic_cover_genus(w.degree, exps) == w.genus
    w = tf.ward_fiber(4, 9)
    assert w.degree == 18 and w.genus == 12


def test_ward_fiber_requires_admissible_pair():
    with pytest.raises(HypothesisUnmet):
        tf.ward_fiber(3, 6)


def test_self_crossing_counts():
    assert [tf.self_crossing_count(m) for m in (2, 3, 4, 5)] == [0, 0, 0, 0]
    assert tf.self_crossing_count(7) == 1
    assert tf.self_crossing_count(9) == 1
    assert tf.self_crossing_count(11) == 2
    assert tf.self_crossing_count(13) == 2


def test_trace_field_degree():
    assert tf.trace_field_degree(3, 5) == 2
    assert tf.trace_field_degree(2, 5) == 2
    assert tf.trace_field_degree(2, 3) == 1


def test_trace_field_bound():
    def phi(L):
        return sum(1 for x in range(1, L) if math.gcd(x, L) == 1)
    for m in range(3, 16, 2):
        for n in range(m + 2, 16, 2):
            if math.gcd(m, n) != 1:
                continue
            assert 4 * tf.trace_field_degree(m, n) <= phi(m * n)


def test_primitivity():
    p = tf.primitivity(3, 5)
    assert not p.algebraically_primitive
    assert p.geometrically_primitive == "Yes"
    assert tf.primitivity(2, 5).geometrically_primitive == "Unknown"


def test_affine_group_label():
    assert tf.affine_group_label(3, 5) == "Delta(3,5,oo)"
    assert tf.affine_group_label(2, 7) == "Delta(2,7,oo)"
    lbl = tf.affine_group_label(5, 5)
    assert "Delta(5,5,oo)" in lbl and "Delta(2,5,oo)" in lbl


def test_veech_family():
    v = tf.veech_family(8)
    assert v.cover.a == (1, 7, 1, 7)
    assert v.genus_X == 3
    assert v.quotient.t == 1 and v.quotient.genus_U == 2
    assert v.quotient.indices == (1, 3)
    v = tf.veech_family(10)
    assert v.genus_X == 4 and v.quotient.t == 1 and v.quotient.genus_U == 2
    v = tf.veech_family(7)
    assert v.genus_X == 3 and v.quotient is None
    with pytest.raises(InvalidParams):
        tf.veech_family(3)
