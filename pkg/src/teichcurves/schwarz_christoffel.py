"""Numerical Schwarz-Christoffel polygons for the explicit boundary fibers.

The integrand prod (u - u_k)^{e_k} with rational exponents in (-1, 0) maps
the real axis to a polygon; side lengths are computed by adaptive quadrature
with the endpoint singularities removed analytically by the power
substitution, and the vertex at infinity by the inversion u = 1/v.  Beta
closed forms give an independent high-precision route for the m = 5 sides.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from scipy.integrate import quad

from .arith import Rational
from .errors import DegenerateEdge, DomainError, HypothesisUnmet, QuadratureFailure


def gamma_fn(x: float) -> float:
    """Gamma function for positive real arguments.

    Raises:
        DomainError: nonpositive argument.
    """
    if x <= 0:
        raise DomainError(f"gamma_fn requires x > 0, got {x}")
    return math.gamma(x)


def beta_fn(a: float, b: float) -> float:
    """Beta function B(a, b) for positive arguments, via log-gamma."""
    if a <= 0 or b <= 0:
        raise DomainError(f"beta_fn requires positive arguments, got ({a}, {b})")
    return math.exp(math.lgamma(a) + math.lgamma(b) - math.lgamma(a + b))


@dataclass(frozen=True)
class SCSpec:
    """Schwarz-Christoffel data: prevertices on the real line with exponents."""

    exponents: tuple[Rational, ...]
    prevertices: tuple[float, ...]
    scale: float = 1.0

    def __post_init__(self) -> None:
        if not all(-1 < e < 0 for e in self.exponents):
            raise HypothesisUnmet(f"exponents must lie in (-1,0): {self.exponents}")
        if sum(self.exponents) >= -1:
            raise HypothesisUnmet("exponent sum must be < -1 for convergence at infinity")
        if list(self.prevertices) != sorted(self.prevertices):
            raise HypothesisUnmet("prevertices must be ascending")


def sc_spec(m: int, n: int) -> SCSpec:
    """SC data of the boundary fiber for (m, n), gcd(m, n)=1 and n odd.

    m odd: exponent 1/2n - 1 at u=2 and 1/n - 1 at u = 2cos(2k pi/m);
    m even: exponent -1/2 at u=2 and 1/n - 1 at u = 2cos((2k-1) pi/m).
    """
    if math.gcd(m, n) != 1 or n % 2 == 0:
        raise HypothesisUnmet(f"need gcd(m,n)=1 and n odd, got ({m},{n})")
    if m % 2 == 1:
        pts = [(2.0 * math.cos(2 * k * math.pi / m), Fraction(1, n) - 1)
               for k in range(1, (m - 1) // 2 + 1)]
        pts.append((2.0, Fraction(1, 2 * n) - 1))
    else:
        pts = [(2.0 * math.cos((2 * k - 1) * math.pi / m), Fraction(1, n) - 1)
               for k in range(1, m // 2 + 1)]
        pts.append((2.0, Fraction(-1, 2)))
    pts.sort(key=lambda t: t[0])
    return SCSpec(exponents=tuple(e for _, e in pts),
                  prevertices=tuple(u for u, _ in pts))


def _integrand_rest(us: Sequence[float], es: Sequence[float], skip: int | None):
    """|prod (u-u_k)^{e_k}| with the factor at index `skip` left out."""
    def f(u: float) -> float:
        out = 1.0
        for j, (uk, ek) in enumerate(zip(us, es)):
            if j != skip:
                out *= abs(u - uk) ** ek
        return out
    return f


def _segment_length(a: float, b: float, us: Sequence[float],
                    es: Sequence[float], tol: float) -> tuple[float, float]:
    """Integral of |prod (u-u_k)^{e_k}| over [a, b] where a, b are prevertices.

    Each half is transformed by u = end +- s^(1/p) with p = 1 + e(end), which
    removes the endpoint singularity exactly; the singular factor is divided
    out analytically so the transformed integrand is bounded.
    """
    mid = 0.5 * (a + b)
    total = err = 0.0
    for lo, hi, end, sign in ((a, mid, a, 1.0), (mid, b, b, -1.0)):
        idx = us.index(end) if end in us else None
        p = 1.0 + float(es[idx]) if idx is not None else 1.0
        rest = _integrand_rest(us, es, idx)

        def f(s: float, _rest=rest, _p=p, _end=end, _sign=sign) -> float:
            return _rest(_end + _sign * s ** (1.0 / _p)) / _p

        val, e = quad(f, 0.0, (hi - lo) ** p, epsabs=tol, epsrel=tol, limit=400)
        total += val
        err += e
    return total, err


def _tail_length(us: Sequence[float], es: Sequence[float],
                 tol: float) -> tuple[float, float]:
    """Integral over [max(us), +infinity): near part + inverted far part."""
    c = max(us) + 1.0
    near, err1 = _segment_length(max(us), c, us, es, tol)
    # Far part via u = 1/v: integrand v^{e0} * prod |1 - u_k v|^{e_k},
    # e0 = -sum(e) - 2 > -1, then the same power substitution at v = 0.
    e0 = -sum(float(e) for e in es) - 2.0
    p = 1.0 + e0

    def g(s: float) -> float:
        v = s ** (1.0 / p)
        out = 1.0
        for uk, ek in zip(us, es):
            out *= abs(1.0 - uk * v) ** float(ek)
        return out / p

    far, err2 = quad(g, 0.0, (1.0 / c) ** p, epsabs=tol, epsrel=tol, limit=400)
    return near + far, err1 + err2


def sc_polygon(spec: SCSpec, quad_tol: float = 1e-10) -> list[complex]:
    """Vertices [w(u_1), ..., w(u_p), w(infinity)] of the SC image polygon.

    The side between consecutive prevertices has constant direction
    pi * sum of the exponents to its right; the two unbounded rays join at
    the vertex for infinity.  The closure defect of the resulting polygon is
    required to stay within the accumulated quadrature error budget.

    Raises:
        QuadratureFailure: if the error estimate or closure exceeds budget.
    """
    us = list(spec.prevertices)
    es = [float(e) for e in spec.exponents]
    p = len(us)
    sides: list[tuple[float, float]] = []  # (length, direction)
    total_err = 0.0
    for j in range(p - 1):
        length, err = _segment_length(us[j], us[j + 1], us, es, quad_tol)
        total_err += err
        sides.append((length, math.pi * sum(es[j + 1:])))
    plus_len, err = _tail_length(us, es, quad_tol)
    total_err += err
    sides.append((plus_len, 0.0))
    # Ray from -infinity to u_1, traversed as the closing side: reflect
    # u -> -u and reuse the tail machinery.
    minus_len, err = _tail_length([-u for u in us], es, quad_tol)
    total_err += err
    sides.append((minus_len, math.pi * sum(es)))

    verts = [0j]
    for length, direction in sides[:-1]:
        verts.append(verts[-1] + spec.scale * length * cmath.exp(1j * direction))
    closing = verts[-1] + spec.scale * sides[-1][0] * cmath.exp(1j * sides[-1][1])
    defect = abs(closing - verts[0])
    scale = max(abs(v) for v in verts)
    budget = max(100.0 * total_err, 10.0 * quad_tol) * max(scale, 1.0)
    if total_err > max(quad_tol * scale * 10.0, quad_tol) or defect > budget:
        raise QuadratureFailure(
            f"quadrature error {total_err:.3e}, closure defect {defect:.3e} "
            f"exceed budget for tol {quad_tol:.1e}")
    return verts


@dataclass(frozen=True)
class SCSides:
    I4_len: float
    I3_len: float


def sc_sides_m5(n: int) -> SCSides:
    """Beta closed forms of the two key side lengths for m = 5.

    |I4| = (1/5)(B(2/5 - 1/2n, 1/n) + B(3/5 - 1/2n, 1/n)); |I3| is the
    modulus of the same Beta values weighted by fifth roots of unity.  The
    phases of the weights depend on branch choices; only moduli are used.
    """
    if n % 2 == 0 or n % 5 == 0 or n < 7:
        raise HypothesisUnmet(f"need odd n >= 7 coprime to 5, got {n}")
    b1 = beta_fn(2.0 / 5.0 - 1.0 / (2 * n), 1.0 / n)
    b2 = beta_fn(3.0 / 5.0 - 1.0 / (2 * n), 1.0 / n)
    z5 = cmath.exp(2j * math.pi / 5)
    z2n_inv = cmath.exp(-1j * math.pi / n)
    i3 = abs((-1 + z5 ** 2 * z2n_inv) * b1 + (-1 + z5 ** 3 * z2n_inv) * b2) / 5.0
    return SCSides(I4_len=(b1 + b2) / 5.0, I3_len=i3)


def _orient(a: complex, b: complex, c: complex) -> float:
    return (b - a).real * (c - a).imag - (b - a).imag * (c - a).real


def count_self_crossings(vertices: Sequence[complex | tuple[float, float]]) -> int:
    """Self-crossing number of a closed polygonal boundary.

    Counted as the winding excess of the tangent direction: a boundary whose
    direction turns through w full revolutions crosses itself w - 1 times in
    this sense (0 for an embedded polygon).  This is the count the closed
    forms of self_crossing_count refer to; the raw number of transversal
    edge-pair intersections can be larger for multiply wound polygons.

    Raises:
        DegenerateEdge: if an edge has (numerically) zero length.
    """
    vs = [complex(*v) if isinstance(v, tuple) else complex(v) for v in vertices]
    k = len(vs)
    if k < 3:
        raise DegenerateEdge("need at least 3 vertices")
    scale = max(abs(v - vs[0]) for v in vs)
    eps = 1e-12 * max(scale, 1.0)
    edges = [vs[(j + 1) % k] - vs[j] for j in range(k)]
    for e in edges:
        if abs(e) <= eps:
            raise DegenerateEdge("zero-length edge")
    turning = 0.0
    for j in range(k):
        a, b = edges[j], edges[(j + 1) % k]
        turning += math.atan2(_orient(0j, a, a + b),
                              a.real * b.real + a.imag * b.imag)
    w = round(turning / (2 * math.pi))
    assert abs(turning / (2 * math.pi) - w) < 1e-9, "non-integral turning number"
    return abs(w) - 1


@dataclass(frozen=True)
class SimilarityResult:
    max_rel_err: float
    table_ratios: tuple[float, ...]
    sc_ratios: tuple[float, ...]


def _sc_exact_angles(spec: SCSpec) -> list[Fraction]:
    """Interior angles (units of pi) of the SC image, vertex for infinity last."""
    angles = [1 + e for e in spec.exponents]
    # total interior angle of a (k+1)-gon is (k-1)*pi
    angles.append(len(angles) - 1 - sum(angles))
    return angles


def _align_by_angles(sc_angles: Sequence[Fraction],
                     table_angles: Sequence[Fraction]) -> list[list[int]]:
    """All side correspondences matching the two exact angle sequences.

    Returns lists `perm` with perm[j] = index of the SC side matching table
    side j, over all cyclic rotations and the reflected traversal.
    """
    k = len(sc_angles)
    matches: list[list[int]] = []
    for reflect in (False, True):
        if reflect:
            angles = [sc_angles[(k - j) % k] for j in range(k)]
            side_of = lambda j: (k - j - 1) % k
        else:
            angles = list(sc_angles)
            side_of = lambda j: j
        for r in range(k):
            if all(angles[(j + r) % k] == table_angles[j] for j in range(k)):
                matches.append([side_of((j + r) % k) for j in range(k)])
    return matches


def similarity_check(m: int, n: int, quad_tol: float = 1e-9) -> SimilarityResult:
    """Compare the SC image polygon with the constructed table, m in {4, 5}.

    The vertex correspondence is fixed by matching the exact interior-angle
    sequences (up to rotation and reflection); both polygons are then
    normalized by the side corresponding to the table's I4 and all side
    ratios compared.
    """
    from .billiards import table  # local import to keep modules decoupled

    if m not in (4, 5):
        raise HypothesisUnmet(f"similarity check defined for m in {{4,5}}, got {m}")
    poly = table(m, n)
    table_lens = poly.edge_lengths()
    i4_idx = poly.edge_labels.index("I4")

    spec = sc_spec(m, n)
    verts = sc_polygon(spec, quad_tol=quad_tol)
    k = len(verts)
    sc_lens = [abs(verts[(j + 1) % k] - verts[j]) for j in range(k)]

    matches = _align_by_angles(_sc_exact_angles(spec), poly.angles)
    if not matches:
        raise HypothesisUnmet("angle sequences of table and SC polygon do not match")
    best = None
    for perm in matches:
        t_ratios = tuple(tl / table_lens[i4_idx] for tl in table_lens)
        s_ratios = tuple(sc_lens[perm[j]] / sc_lens[perm[i4_idx]] for j in range(k))
        err = max(abs(s - t) / t for s, t in zip(s_ratios, t_ratios))
        if best is None or err < best[0]:
            best = (err, t_ratios, s_ratios)
    return SimilarityResult(max_rel_err=best[0], table_ratios=best[1],
                            sc_ratios=best[2])
