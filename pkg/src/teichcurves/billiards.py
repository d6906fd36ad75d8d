"""Billiard tables with angles pi/n-rational, their unfoldings and cylinders.

The tables T(m, n) for m in {2,3,4,5} are built from their interior-angle
lists; the two side lengths that the closed forms prescribe are fixed and the
remaining ones are solved from the closure of the edge chain.  Unfolding is
combinatorial: the reflection group of the edge directions gives the copy
count, and cone data follows from the vertex angles.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from .arith import Rational
from .errors import InvalidParams, IrrationalAngle, SelfCrossing


@dataclass(frozen=True)
class RationalPolygon:
    """Planar polygon with interior angles that are rational multiples of pi.

    vertices are in counterclockwise order; angles[k] is the interior angle
    at vertices[k] as a Fraction (in units of pi).
    """

    vertices: tuple[tuple[float, float], ...]
    angles: tuple[Rational, ...]
    edge_labels: Optional[tuple[str, ...]] = None

    def edge_lengths(self) -> list[float]:
        v = self.vertices
        return [math.dist(v[k], v[(k + 1) % len(v)]) for k in range(len(v))]


@dataclass(frozen=True)
class ConePointClass:
    count: int
    cone_angle: Rational  # in units of 2*pi
    order: int


@dataclass(frozen=True)
class TranslationSurface:
    copies: int
    cone_points: tuple[ConePointClass, ...]
    genus: int
    stratum: tuple[int, ...]


@dataclass(frozen=True)
class Cylinder:
    width: float
    height: float
    modulus: float
    family: str = ""
    multiplicity: int = 1


@dataclass(frozen=True)
class MoebiusMatrix:
    a: float
    b: float
    c: float
    d: float

    def __post_init__(self) -> None:
        det = self.a * self.d - self.b * self.c
        if abs(det - 1.0) > 1e-12:
            raise InvalidParams(f"matrix determinant {det} != 1")

    def trace(self) -> float:
        return self.a + self.d


def polygon_from_angles(angles: Sequence[Rational],
                        known: dict[int, float],
                        edge_labels: Optional[Sequence[str]] = None,
                        ) -> RationalPolygon:
    """Build a closed polygon from its interior angles and two known edges.

    angles[k] sits at vertex k, between edges k-1 and k; edge k runs from
    vertex k to vertex k+1.  Exactly two edge lengths may be left unknown;
    they are solved from the closure of the edge chain.
    """
    k = len(angles)
    angles = tuple(Fraction(a) for a in angles)
    if sum(angles) != k - 2:
        raise InvalidParams(f"interior angles sum to {sum(angles)}*pi, expected {k - 2}*pi")
    unknown = [j for j in range(k) if j not in known]
    if len(unknown) != 2:
        raise InvalidParams(f"exactly two unknown edges required, got {len(unknown)}")

    dirs = [0.0] * k
    acc = Fraction(0)
    for j in range(1, k):
        acc += 1 - angles[j]
        dirs[j] = math.pi * float(acc)
    units = [cmath.exp(1j * d) for d in dirs]

    # Closure: sum over known edges + x*u_p + y*u_q = 0, solved for x, y.
    rhs = -sum(known[j] * units[j] for j in known)
    p, q = unknown
    det = (units[p] * units[q].conjugate()).imag
    if abs(det) < 1e-12:
        raise InvalidParams("unknown edge directions are parallel; closure is singular")
    x = (rhs * units[q].conjugate()).imag / det
    y = -(rhs * units[p].conjugate()).imag / det
    lengths = [known.get(j, 0.0) for j in range(k)]
    lengths[p], lengths[q] = x, y
    if min(lengths) <= 0:
        raise InvalidParams(f"closure gives a nonpositive edge length: {lengths}")

    verts = [0j]
    for j in range(k - 1):
        verts.append(verts[-1] + lengths[j] * units[j])
    closure = abs(verts[0] - (verts[-1] + lengths[-1] * units[-1]))
    scale = max(abs(v) for v in verts)
    assert closure <= 1e-12 * max(scale, 1.0), f"polygon failed to close: {closure}"
    return RationalPolygon(
        vertices=tuple((v.real, v.imag) for v in verts),
        angles=angles,
        edge_labels=tuple(edge_labels) if edge_labels else None,
    )


def _side_lengths(m: int, n: int) -> tuple[float, float, float, float]:
    """(|I1|, |I2|, |I3|, |I4|) for the 4-gon tables, m in {4, 5}."""
    poly = table(m, n)
    lens = poly.edge_lengths()
    by_label = dict(zip(poly.edge_labels, lens))
    return tuple(by_label[f"I{j}"] for j in (1, 2, 3, 4))


def re_I3(n: int) -> float:
    """The horizontal component of I3 for m = 5: cos(pi/n) + cos(pi/5)."""
    return math.cos(math.pi / n) + math.cos(math.pi / 5)


def table(m: int, n: int) -> RationalPolygon:
    """The billiard table T(m, n) for m in {2, 3, 4, 5}.

    m=5: 4-gon with angles (pi/2n, 2pi-5pi/2n, pi/n, pi/n), side I4 of
    length 1 on the positive x-axis, I3 at inclination pi/2n with
    Re(I3) = cos(pi/n) + cos(pi/5); m=4: angles (pi/n, 3pi/2-2pi/n, pi/2,
    pi/n) with |I3| = 2(cos(pi/n) + cos(pi/4)); m=3 and m=2 are triangles.

    Raises:
        InvalidParams: parameters outside the admissible range.
    """
    if m not in (2, 3, 4, 5):
        raise InvalidParams(f"m must be in {{2,3,4,5}}, got {m}")
    if n % 2 == 0 or math.gcd(m, n) != 1:
        raise InvalidParams(f"need n odd and coprime to m, got ({m},{n})")
    if m == 5:
        if n < 7:
            raise InvalidParams(f"m=5 needs n >= 7, got {n}")
        i3 = re_I3(n) / math.cos(math.pi / (2 * n))
        return polygon_from_angles(
            [Fraction(1, 2 * n), 2 - Fraction(5, 2 * n), Fraction(1, n), Fraction(1, n)],
            known={0: 1.0, 3: i3},
            edge_labels=("I4", "I1", "I2", "I3"),
        )
    if m == 4:
        if n < 5:
            raise InvalidParams(f"m=4 needs n >= 5, got {n}")
        i3 = 2.0 * (math.cos(math.pi / n) + math.cos(math.pi / 4))
        return polygon_from_angles(
            [Fraction(1, n), Fraction(3, 2) - Fraction(2, n), Fraction(1, 2), Fraction(1, n)],
            known={0: 1.0, 3: i3},
            edge_labels=("I4", "I1", "I2", "I3"),
        )
    if m == 3:
        if n < 5:
            raise InvalidParams(f"m=3 needs n >= 5, got {n}")
        return polygon_from_angles(
            [Fraction(1, n), Fraction(1, 2 * n), 1 - Fraction(3, 2 * n)],
            known={0: 1.0},
        )
    if n < 3:
        raise InvalidParams(f"m=2 needs n >= 3, got {n}")
    return polygon_from_angles(
        [Fraction(1, 2), Fraction(1, n), Fraction(n - 2, 2 * n)],
        known={0: 1.0},
    )


def unfold(P: RationalPolygon) -> TranslationSurface:
    """Unfold a rational polygon into a translation surface.

    With Nq = lcm of the angle denominators, the reflection group of the edge
    directions is dihedral of order 2*Nq; the unfolding glues that many
    copies.  Each vertex of angle (p/q)*pi yields Nq/q cone points of cone
    angle 2*pi*p.

    Raises:
        IrrationalAngle: if an angle entry is not a Fraction.
    """
    for a in P.angles:
        if not isinstance(a, Fraction):
            raise IrrationalAngle(f"angle {a!r} is not an exact rational multiple of pi")
    k = len(P.angles)
    Nq = math.lcm(*(a.denominator for a in P.angles))

    # Rotation subgroup generated by the edge directions (exact, units of pi).
    acc = Fraction(0)
    dir_dens = [1]
    for j in range(1, k):
        acc += 1 - P.angles[j]
        dir_dens.append((acc % 1).denominator)
    rot_order = math.lcm(*dir_dens)
    assert rot_order == Nq, "polygon has nontrivial linear symmetry"
    copies = 2 * Nq

    genus = 1 + Fraction(Nq, 2) * (k - 2 - sum(Fraction(1, a.denominator) for a in P.angles))
    assert genus.denominator == 1
    genus = int(genus)

    classes: dict[tuple[int, int], int] = {}
    for a in P.angles:
        if a.numerator > 1:
            key = (a.numerator, a.denominator)
            classes[key] = classes.get(key, 0) + Nq // a.denominator
    cone = tuple(ConePointClass(count=c, cone_angle=Fraction(p), order=p - 1)
                 for (p, q), c in sorted(classes.items()))
    stratum = tuple(sorted(
        (cp.order for cp in cone for _ in range(cp.count)), reverse=True))
    assert sum(stratum) == 2 * genus - 2, "Gauss-Bonnet mismatch"
    return TranslationSurface(copies=copies, cone_points=cone,
                              genus=genus, stratum=stratum)


def horizontal_cylinders(m: int, n: int) -> list[Cylinder]:
    """Horizontal cylinder decomposition of the unfolded T(m, n), m in {4,5}.

    Two families of (n-1)/2 cylinder pairs; every modulus is the same, which
    is what makes the horizontal parabolic affine map exist.
    """
    if m not in (4, 5):
        raise InvalidParams(f"cylinder formulas require m in {{4,5}}, got {m}")
    i1, i2, i3, i4 = _side_lengths(m, n)
    out: list[Cylinder] = []
    for k in range(1, (n - 1) // 2 + 1):
        c = math.cos((n - 2 * k) * math.pi / (2 * n))
        if m == 5:
            w, h = 2 * i3 * c, 2 * i4 * math.sin(math.pi / (2 * n)) * c
            wt, ht = 2 * i2 * c, 2 * i1 * math.sin(math.pi / n) * c
        else:
            w, h = 4 * i2 * c, 2 * i1 * math.sin(k * math.pi / n)
            c2 = math.cos((n - 2 * k + 2) * math.pi / (2 * n))
            wt, ht = 2 * i3 * c2, 2 * i4 * c2 * math.sin(math.pi / n)
        out.append(Cylinder(w, h, h / w, family="I3I4" if m == 5 else "I1I2",
                            multiplicity=2))
        out.append(Cylinder(wt, ht, ht / wt, family="I1I2" if m == 5 else "I3I4",
                            multiplicity=2))
    return out


def affine_generators(m: int, n: int) -> tuple[MoebiusMatrix, MoebiusMatrix]:
    """The generators (R, T): rotation by pi/n and the horizontal shear."""
    c, s = math.cos(math.pi / n), math.sin(math.pi / n)
    shear = 2.0 * (math.cos(math.pi / n) + math.cos(math.pi / m)) / s
    return (MoebiusMatrix(c, -s, s, c), MoebiusMatrix(1.0, shear, 0.0, 1.0))


@dataclass(frozen=True)
class FundamentalDomain:
    z0: complex
    circle_center: float
    circle_radius: float
    angle_at_i: float
    angle_at_z0: float
    area: float
    note: str


def fundamental_domain(m: int, n: int) -> FundamentalDomain:
    """Hyperbolic triangle (i, z0, i*oo) bounding a fundamental domain.

    z0 = (cos(pi/n) + cos(pi/m))/sin(pi/n) + i*sin(pi/m)/sin(pi/n); the
    geodesic from i to z0 is the arc |z - cot(pi/n)| = 1/sin(pi/n).  The
    returned angles and area are measured numerically from the geometry.
    """
    s = math.sin(math.pi / n)
    z0 = complex((math.cos(math.pi / n) + math.cos(math.pi / m)) / s,
                 math.sin(math.pi / m) / s)
    center = math.cos(math.pi / n) / s
    radius = 1.0 / s

    def circle_tangent(z: complex) -> complex:
        rad = z - center
        return complex(-rad.imag, rad.real)  # rotate the radius by 90 degrees

    def angle_between(u: complex, v: complex) -> float:
        return math.acos(max(-1.0, min(1.0,
            (u.real * v.real + u.imag * v.imag) / (abs(u) * abs(v)))))

    # At i the triangle sides are the imaginary axis and the circle arc;
    # at z0 they are the vertical line to i*oo and the circle arc.
    a_i = angle_between(1j, -circle_tangent(1j))
    a_z0 = angle_between(1j, circle_tangent(z0))
    area = math.pi - a_i - a_z0  # angle at i*oo is zero
    return FundamentalDomain(
        z0=z0, circle_center=center, circle_radius=radius,
        angle_at_i=a_i, angle_at_z0=a_z0, area=area,
        note=("doubling the triangle across a side doubles this area; the "
              "relation to the group coarea is informational only"),
    )
