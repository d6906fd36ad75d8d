"""The cyclic-cover family realizing the triangle group Delta(m, n, oo).

Given m, n >= 2 with mn >= 6, the fractional exponents

    sigma1 = (nm+m-n)/2mn, sigma2 = (nm-m+n)/2mn,
    sigma3 = (nm+m+n)/2mn, sigma4 = (nm-m-n)/2mn

define an N-cyclic cover family with N the least common denominator.  This
module computes the full invariant record: case classification by 2-adic
valuations, the involution-defining residue alpha, genera of the relevant
quotient curves, fixed-point and zero counts, character orbits, the explicit
fiber equation over the boundary (a 2n-cyclic cover of the line with real
branch values), trace-field degree and primitivity.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .arith import Congruence, Rational, crt, unit_residues
from .cyclic_cover import CoverFamily, cyclic_cover_genus
from .errors import HypothesisUnmet, InvalidParams


def _val2(x: int) -> int:
    """2-adic valuation."""
    v = 0
    while x % 2 == 0:
        x //= 2
        v += 1
    return v


@dataclass(frozen=True)
class FamilyInvariants:
    """Invariant record of the Delta(m, n, oo) family.

    m, n are stored in the internal orientation with mu >= nu; `swapped`
    records whether the caller's order was reversed to achieve that.
    """

    m: int
    n: int
    swapped: bool
    sigma: tuple[Rational, Rational, Rational, Rational]
    N: int
    case: str  # one of "O", "OE", "DE", "S"
    mu: int
    nu: int
    gamma: int
    gamma1: int
    gamma2: int
    gamma_prime: int
    delta: int
    Nhat: int
    beta: int
    alpha: int
    # alpha satisfies alpha^2 = 1 modulo alpha_modulus; this is N whenever a
    # lift of the defining congruences squares to 1 mod N, and Nhat otherwise
    # (the involution then only lives on the intermediate cover).
    alpha_modulus: int
    cover: CoverFamily


def build(m: int, n: int) -> FamilyInvariants:
    """Construct the full invariant record for parameters (m, n).

    Raises:
        InvalidParams: if m, n < 2 or mn < 6.
    """
    if m < 2 or n < 2 or m * n < 6:
        raise InvalidParams(f"need m, n >= 2 and mn >= 6, got ({m}, {n})")
    mu, nu = _val2(m), _val2(n)
    swapped = mu < nu
    if swapped:
        m, n = n, m
        mu, nu = nu, mu

    mn = m * n
    sigma = (
        Fraction(mn + m - n, 2 * mn),
        Fraction(mn - m + n, 2 * mn),
        Fraction(mn + m + n, 2 * mn),
        Fraction(mn - m - n, 2 * mn),
    )
    N = math.lcm(*(s.denominator for s in sigma))
    gamma = math.gcd(m, n)
    gamma1 = math.gcd(2 * mn, mn + m - n)
    gamma2 = math.gcd(2 * mn, mn + m + n)
    gamma_prime = gamma >> nu
    m_odd, n_odd = m >> mu, n >> nu

    if mu == nu == 0:
        case = "O"
    elif nu == 0:
        case = "OE"
    elif mu > nu:
        case = "DE"
    else:
        case = "S"

    assert N == (mn // gamma if case == "S" else 2 * mn // gamma)
    delta = 0 if case == "S" else min(mu - nu + 2, mu + 1)
    Nhat = 2 * N // gamma if case == "DE" else N // gamma
    beta = gamma // 2 if case == "DE" else gamma

    # Defining congruences of alpha: +1 on the m-side, -1 on the n-side,
    # and a 2-power condition depending on the case.
    congruences = [
        Congruence(1, m_odd // gamma_prime),
        Congruence(-1, n_odd // gamma_prime),
    ]
    if delta > 0:
        if case == "DE":
            den = n_odd - (1 << (mu - nu)) * m_odd
            num = n_odd + (1 << (mu - nu)) * m_odd
            assert den % 2 != 0, "2-power congruence denominator must be odd"
            r = num * pow(den, -1, 1 << delta) % (1 << delta)
            congruences.append(Congruence(r, 1 << delta))
        else:
            congruences.append(Congruence(1, 1 << delta))
    base = crt(congruences)

    assert base.modulus == Nhat
    assert (base.residue * base.residue) % Nhat == 1 % Nhat
    alpha = alpha_modulus = None
    for x in range(base.residue % base.modulus, N, base.modulus):
        if 0 < x < N and (x * x) % N == 1:
            alpha, alpha_modulus = x, N
            break
    if alpha is None:
        # No lift squares to 1 mod N; keep the residue at the Nhat level.
        alpha, alpha_modulus = base.residue % Nhat or Nhat, Nhat

    cover = CoverFamily(N, tuple(int(s * N) for s in sigma))
    return FamilyInvariants(
        m=m, n=n, swapped=swapped, sigma=sigma, N=N, case=case, mu=mu, nu=nu,
        gamma=gamma, gamma1=gamma1, gamma2=gamma2, gamma_prime=gamma_prime,
        delta=delta, Nhat=Nhat, beta=beta, alpha=alpha,
        alpha_modulus=alpha_modulus, cover=cover,
    )


def genus_Z(inv: FamilyInvariants) -> int:
    """Genus of the N-cyclic cover Z of the line."""
    div = 2 * inv.gamma if inv.case == "S" else inv.gamma
    total = inv.gamma1 + inv.gamma2
    assert total % div == 0
    return 1 + inv.N - total // div


def genus_Y(inv: FamilyInvariants) -> int:
    """Genus of the intermediate curve Y."""
    return 1 + inv.N * inv.beta - 2 * inv.beta


def genus_X(inv: FamilyInvariants) -> int:
    """Genus of the quotient curve X carrying the Teichmueller structure.

    Raises:
        HypothesisUnmet: if the closed formula is not an integer, which
            happens for some families where m and n share the 2-valuation 1;
            the quotient construction does not apply verbatim there.
    """
    m, n, g = inv.m, inv.n, inv.gamma
    num = (m * n - m - n - g)
    if inv.case == "S":
        if num % 4 != 0:
            raise HypothesisUnmet(
                f"genus formula non-integral for ({inv.m},{inv.n})")
        return num // 4 + 1
    assert (num * inv.beta) % (2 * g) == 0
    return num * inv.beta // (2 * g) + 1


@dataclass(frozen=True)
class FixedPoints:
    tau: int
    rho: int
    sigma: int


def fixed_points(inv: FamilyInvariants) -> FixedPoints:
    """Fixed-point counts of the three involutions acting on Y."""
    if inv.case == "S":
        return FixedPoints(tau=2 * inv.m, rho=2 * inv.n, sigma=2)
    g = inv.gamma
    return FixedPoints(tau=4 * inv.m * inv.beta // g,
                       rho=4 * inv.n * inv.beta // g, sigma=0)


def zero_count(inv: FamilyInvariants) -> int:
    """Number of zeros of the generating differential on X."""
    if inv.case in ("S", "DE"):
        assert inv.gamma % 2 == 0
        return inv.gamma // 2
    return inv.gamma


@dataclass(frozen=True)
class Orbit:
    representative: int
    members: frozenset[int]


@dataclass(frozen=True)
class OrbitPartition:
    orbits: tuple[Orbit, ...]
    certified: bool


def orbits(inv: FamilyInvariants, strict: bool = False) -> OrbitPartition:
    """Character orbits under i ~ -i ~ alpha*i ~ -alpha*i on {m,n-nondivisible i}.

    The orbit decomposition of the variation of Hodge structures into rank-2
    pieces is certified only for m, n odd and coprime; outside that range
    the same partition is returned with certified=False, or HypothesisUnmet
    is raised when strict=True.
    """
    certified = inv.m % 2 == 1 and inv.n % 2 == 1 and inv.gamma == 1
    if strict and not certified:
        raise HypothesisUnmet(f"({inv.m},{inv.n}) not odd coprime")
    N, a = inv.N, inv.alpha
    pool = {i for i in range(1, N) if i % inv.m != 0 and i % inv.n != 0}
    found: list[Orbit] = []
    while pool:
        i = min(pool)
        orb = frozenset({i, N - i, a * i % N, (N - a * i) % N})
        assert orb <= pool
        pool -= orb
        found.append(Orbit(representative=i, members=orb))
    if certified:
        assert len(found) == (inv.m - 1) * (inv.n - 1) // 2
    return OrbitPartition(orbits=tuple(found), certified=certified)


@dataclass(frozen=True)
class BranchPoint:
    """A branch value 2*cos(angle * pi) on the real line (angle exact)."""

    angle: Rational  # value = 2 cos(angle * pi); angle=None is not used, inf below
    value: float
    exponent: int
    at_infinity: bool = False


@dataclass(frozen=True)
class WardCoverSpec:
    """The boundary fiber as an explicit 2n-cyclic cover of the line."""

    degree: int
    branch_points: tuple[BranchPoint, ...]
    differential: str
    polygon_angles: tuple[Rational, ...]
    genus: int


def ward_fiber(m: int, n: int) -> WardCoverSpec:
    """Explicit equation of the boundary fiber, for gcd(m, n)=1 and n odd.

    m odd:  y^(2n) = (u-2) * prod_{k=1..(m-1)/2} (u - 2cos(2k pi/m))^2
    m even: y^(2n) = (u-2)^n * prod_{k=1..m/2} (u - 2cos((2k-1) pi/m))^2

    Raises:
        HypothesisUnmet: unless gcd(m, n) = 1 and n is odd.
    """
    if math.gcd(m, n) != 1 or n % 2 == 0:
        raise HypothesisUnmet(f"need gcd(m,n)=1 and n odd, got ({m},{n})")
    deg = 2 * n
    pts: list[BranchPoint] = []
    if m % 2 == 1:
        pts.append(BranchPoint(Fraction(0), 2.0, 1))
        for k in range(1, (m - 1) // 2 + 1):
            ang = Fraction(2 * k, m)
            pts.append(BranchPoint(ang, 2.0 * math.cos(math.pi * ang), 2))
        diff = (f"omega_0 = y du / ((u-2) * prod_(k=1..{(m - 1) // 2})"
                f" (u - 2cos(2k pi/{m})))")
        # Angle list of the unfolding polygon: (m-1)/2 copies of pi/n, one
        # pi/2n, and the remainder closing the angle sum.
        half = Fraction(m, 2 * n)
        rem = 2 - half if m % 4 == 1 else 1 - half
        angles = [Fraction(1, n)] * ((m - 1) // 2) + [Fraction(1, 2 * n), rem]
    else:
        pts.append(BranchPoint(Fraction(0), 2.0, n))
        for k in range(1, m // 2 + 1):
            ang = Fraction(2 * k - 1, m)
            pts.append(BranchPoint(ang, 2.0 * math.cos(math.pi * ang), 2))
        diff = (f"omega_0 = y du / ((u-2) * prod_(k=1..{m // 2})"
                f" (u - 2cos((2k-1) pi/{m})))")
        rem = Fraction(3 * n - m, 2 * n) if m % 4 == 0 else Fraction(n - m, 2 * n)
        angles = [Fraction(1, 2)] + [Fraction(1, n)] * (m // 2) + [rem]
    exp_inf = (-sum(p.exponent for p in pts)) % deg
    pts.append(BranchPoint(Fraction(0), math.inf, exp_inf, at_infinity=True))
    assert sum(p.exponent for p in pts) % deg == 0
    finite = [p for p in pts if not p.at_infinity]
    genus = cyclic_cover_genus(deg, [p.exponent for p in finite])
    expected = (m + 3) // 2 if m % 2 == 1 else (m + 4) // 2
    assert sum(1 for p in pts if p.exponent % deg != 0) == expected
    return WardCoverSpec(degree=deg, branch_points=tuple(pts),
                         differential=diff, polygon_angles=tuple(angles),
                         genus=genus)


def self_crossing_count(m: int) -> int:
    """Self-crossings of the developed boundary polygon, as a function of m."""
    if m < 2:
        raise InvalidParams(f"need m >= 2, got {m}")
    if m % 2 == 1:
        return (m - 5) // 4 if m % 4 == 1 else (m - 3) // 4
    return (m - 4) // 4 if m % 4 == 0 else (m - 2) // 4


def trace_field_degree(m: int, n: int) -> int:
    """Degree of the trace field of Delta(m, n, oo) by exact enumeration.

    r = phi(L) / #{x in (Z/L)^*: x = +-1 mod 2n and x = +-1 mod 2m},
    with L = lcm(2m, 2n); the trace field is the real cyclotomic subfield
    fixed by that subgroup.
    """
    if m < 2 or n < 2:
        raise InvalidParams("need m, n >= 2")
    L = math.lcm(2 * m, 2 * n)
    units = unit_residues(L)
    fix = [x for x in units
           if (x % (2 * n) in (1, 2 * n - 1)) and (x % (2 * m) in (1, 2 * m - 1))]
    assert len(units) % len(fix) == 0
    return len(units) // len(fix)


@dataclass(frozen=True)
class Primitivity:
    algebraically_primitive: bool
    geometrically_primitive: str  # "Yes" or "Unknown"


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    return all(p % d for d in range(2, int(math.isqrt(p)) + 1))


def primitivity(m: int, n: int) -> Primitivity:
    """Primitivity of the Teichmueller curve of the (m, n) family.

    Algebraically primitive means the trace-field degree equals the genus of
    X; geometric primitivity is certified only for distinct odd primes.
    """
    inv = build(m, n)
    alg = genus_X(inv) == trace_field_degree(m, n)
    geo = ("Yes" if m != n and m % 2 == 1 and n % 2 == 1
           and _is_prime(m) and _is_prime(n) else "Unknown")
    return Primitivity(algebraically_primitive=alg, geometrically_primitive=geo)


def affine_group_label(m: int, n: int) -> str:
    """Label of the projective affine group; ambiguous pair when m = n."""
    if m == n:
        return f"ambiguous {{Delta({m},{m},oo), Delta(2,{m},oo)}}"
    return f"Delta({m},{n},oo)"


@dataclass(frozen=True)
class VeechQuotient:
    t: int
    genus_U: int
    indices: tuple[int, ...]


@dataclass(frozen=True)
class VeechFamily:
    cover: CoverFamily
    genus_X: int
    quotient: VeechQuotient | None


def veech_family(n: int) -> VeechFamily:
    """The regular n-gon family: cover (n, [1, n-1, 1, n-1]).

    For n even the curve X has genus (n-2)/2 and a further quotient U of
    genus t(n)+1 whose character indices are the odd numbers up to 1+2t(n);
    for n odd the genus is (n-1)/2 and there is no quotient here.

    Raises:
        InvalidParams: n < 4.
    """
    if n < 4:
        raise InvalidParams(f"need n >= 4, got {n}")
    cover = CoverFamily(n, (1, n - 1, 1, n - 1))
    if n % 2 == 0:
        k = n // 2
        t = (n - 6) // 4 if k % 2 == 1 else (n - 4) // 4
        quotient = VeechQuotient(t=t, genus_U=t + 1,
                                 indices=tuple(1 + 2 * j for j in range(t + 1)))
        return VeechFamily(cover=cover, genus_X=(n - 2) // 2, quotient=quotient)
    return VeechFamily(cover=cover, genus_X=(n - 1) // 2, quotient=None)
