"""Exact arithmetic substrate: rationals, fractional parts, CRT, residue classes.

All values are immutable and all functions are pure, so everything here is
safe for concurrent use.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from .errors import IncompatibleCongruence

# Exact rational type used throughout the package.  Fraction stores big
# integers in lowest terms with positive denominator, which is exactly the
# contract we need.
Rational = Fraction


def frac(q: Rational | int) -> Rational:
    """Fractional part of q, in [0, 1).

    Args:
        q: any rational (or integer).

    Returns:
        q - floor(q) as an exact Rational.
    """
    q = Fraction(q)
    return q - math.floor(q)


@dataclass(frozen=True)
class Congruence:
    """The congruence class ``residue mod modulus``."""

    residue: int
    modulus: int

    def __post_init__(self) -> None:
        if self.modulus < 1:
            raise ValueError(f"modulus must be positive, got {self.modulus}")
        object.__setattr__(self, "residue", self.residue % self.modulus)


def crt(congruences: Iterable[Congruence]) -> Congruence:
    """Solve a simultaneous system of congruences.

    Moduli need not be pairwise coprime; they must agree on shared factors.
    An empty system yields the trivial class 0 mod 1.

    Raises:
        IncompatibleCongruence: if two constraints conflict.
    """
    r, m = 0, 1
    for c in congruences:
        g = math.gcd(m, c.modulus)
        if (r - c.residue) % g != 0:
            raise IncompatibleCongruence(
                f"no solution: {r} mod {m} vs {c.residue} mod {c.modulus}"
            )
        lcm = m // g * c.modulus
        # Combine via the inverse of m/g modulo modulus/g.
        step = (c.residue - r) // g * pow(m // g, -1, c.modulus // g) % (c.modulus // g)
        r = (r + m * step) % lcm
        m = lcm
    return Congruence(r, m)


def unit_residues(L: int) -> list[int]:
    """Ascending list of x in [1, L) with gcd(x, L) = 1.

    For L = 1 the unit group is trivial and the list is empty.
    """
    if L < 1:
        raise ValueError(f"L must be >= 1, got {L}")
    return [x for x in range(1, L) if math.gcd(x, L) == 1]
