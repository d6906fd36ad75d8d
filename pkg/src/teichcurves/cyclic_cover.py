"""N-cyclic covers of the line branched at four points.

The family is y^N = x^{a1} (x-1)^{a2} (x-t)^{a3}, with a fourth exponent a4
at infinity making the exponent sum divisible by N.  This module computes
per-character eigenspace data, the genus of a smooth fiber, and the
combinatorics of the stable fiber when two branch points collide.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .arith import Rational, frac
from .errors import IndexOutOfRange, InvalidParams


@dataclass(frozen=True)
class CoverFamily:
    """The family y^N = x^{a1}(x-1)^{a2}(x-t)^{a3} with exponent a4 at infinity."""

    N: int
    a: tuple[int, int, int, int]

    def __post_init__(self) -> None:
        object.__setattr__(self, "a", tuple(self.a))
        if self.N < 2:
            raise InvalidParams(f"N must be >= 2, got {self.N}")
        if len(self.a) != 4:
            raise InvalidParams("exactly four exponents required")
        if not all(0 < ai < self.N for ai in self.a):
            raise InvalidParams(f"exponents must lie strictly between 0 and N: {self.a}")
        if sum(self.a) % self.N != 0:
            raise InvalidParams(f"exponent sum {sum(self.a)} not divisible by N={self.N}")
        if math.gcd(*self.a, self.N) != 1:
            raise InvalidParams("gcd(a1..a4, N) must be 1 (connected family)")

    def sigma(self, i: int) -> tuple[Rational, Rational, Rational, Rational]:
        """Fractional exponents (<i*a1/N>, ..., <i*a4/N>)."""
        return tuple(frac(Fraction(i * ai, self.N)) for ai in self.a)


@dataclass(frozen=True)
class CharacterData:
    """Eigenspace data of the character i of the deck group Z/N."""

    index: int
    sigma: tuple[Rational, Rational, Rational, Rational]
    k: int
    s: int
    dim: int
    hodge: tuple[int, int]


@dataclass(frozen=True)
class DegenerationData:
    """Combinatorics of the stable fiber when two branch points collide.

    Each side of the degenerate fiber consists of beta[j] isomorphic connected
    curves of genus component_genus[j], each a cyclic cover of the line of
    degree component_degree[j], and the two sides meet in `nodes` points.
    """

    nodes: int
    component_degree: tuple[int, int]
    component_genus: tuple[int, int]
    beta: tuple[int, int]


def character_data(fam: CoverFamily, i: int) -> CharacterData:
    """Dimension and Hodge data of the i-th eigenspace of H^1.

    Raises:
        IndexOutOfRange: unless 0 < i < N.
    """
    if not 0 < i < fam.N:
        raise IndexOutOfRange(f"need 0 < i < {fam.N}, got {i}")
    sigma = fam.sigma(i)
    k = int(sum(sigma)) - 1
    d = fam.N // math.gcd(i, fam.N)
    s = sum(1 for ai in fam.a if ai % d != 0)
    dim = s - 2
    return CharacterData(index=i, sigma=sigma, k=k, s=s, dim=dim,
                         hodge=(s - 2 - k, k))


def genus_smooth_fiber(fam: CoverFamily) -> int:
    """Genus of a smooth fiber: N + 1 - (sum of gcd(a_mu, N)) / 2."""
    twice = 2 * (fam.N + 1) - sum(math.gcd(ai, fam.N) for ai in fam.a)
    assert twice % 2 == 0
    return twice // 2


_COLLIDING_PAIRS = {
    # Which branch-point exponents collide for each degenerate fiber:
    # t=0 merges x=0 and x=t; t=1 merges x=1 and x=t; t=inf merges x=t, inf.
    "0": ((0, 2), (1, 3)),
    "1": ((1, 2), (0, 3)),
    "inf": ((2, 3), (0, 1)),
}


def degeneration_at_zero(fam: CoverFamily, place: str = "0") -> DegenerationData:
    """Stable-fiber data at t=0 (or, via `place` in {"0","1","inf"}, elsewhere).

    The genus formula on each side is the corrected one
    g = 1 + (N - gcd(a_i,N) - gcd(a_j,N) - gcd(a_i+a_j,N)) / (2*beta),
    which matches the three-branch-point Riemann-Hurwitz count.
    """
    if place not in _COLLIDING_PAIRS:
        raise InvalidParams(f"place must be one of '0', '1', 'inf', got {place!r}")
    N = fam.N
    pairs = _COLLIDING_PAIRS[place]
    nodes = math.gcd(fam.a[pairs[0][0]] + fam.a[pairs[0][1]], N)
    betas, degrees, genera = [], [], []
    for i, j in pairs:
        ai, aj = fam.a[i], fam.a[j]
        beta = math.gcd(ai, aj, N)
        num = N - math.gcd(ai, N) - math.gcd(aj, N) - math.gcd(ai + aj, N)
        assert num % (2 * beta) == 0
        betas.append(beta)
        degrees.append(N // beta)
        genera.append(1 + num // (2 * beta))
    return DegenerationData(nodes=nodes, component_degree=tuple(degrees),
                            component_genus=tuple(genera), beta=tuple(betas))


def arithmetic_genus(deg: DegenerationData) -> int:
    """Arithmetic genus of the nodal fiber described by `deg`.

    For a nodal curve: sum of component genera + nodes - components + 1.
    Equals the smooth-fiber genus (flat degeneration).
    """
    total_genus = sum(b * g for b, g in zip(deg.beta, deg.component_genus))
    components = sum(deg.beta)
    return total_genus + deg.nodes - components + 1


def cyclic_cover_genus(N: int, exponents: list[int]) -> int:
    """Genus of the connected cyclic cover y^N = prod (x - x_p)^{b_p}.

    Independent Riemann-Hurwitz count over any number of branch points; the
    point at infinity (exponent minus the sum, mod N) is included
    automatically.  Requires gcd of all exponents with N to be 1.
    """
    exps = list(exponents) + [(-sum(exponents)) % N]
    if math.gcd(*exps, N) != 1:
        raise InvalidParams("cover is not connected: gcd(exponents, N) > 1")
    branch = sum(N - math.gcd(b, N) for b in exps)
    twice_g = 2 - 2 * N + branch
    assert twice_g % 2 == 0
    return twice_g // 2
