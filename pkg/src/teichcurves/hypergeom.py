"""Rank-2 hypergeometric local data for the eigenspaces of a cyclic cover.

For each character i with one-dimensional (1,0)-part, the eigenspace is
governed by a hypergeometric operator with parameters (A, B, C) read off the
fractional exponents.  This module derives the Riemann scheme, unipotency
after base change, Kodaira-Spencer vanishing orders, the indices where the
Higgs field is maximal, and the exact Lyapunov ratio.
"""

from __future__ import annotations

import enum
import functools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .arith import Rational
from .cyclic_cover import CoverFamily, character_data
from .errors import DegeneratePoint, HypothesisUnmet, TrivialFiltration


@dataclass(frozen=True)
class HGParams:
    """Parameters of the hypergeometric operator for one eigenspace."""

    A: Rational
    B: Rational
    C: Rational


@dataclass(frozen=True)
class RiemannScheme:
    """Local exponents of the rank-2 operator at 0, 1 and infinity."""

    at0: tuple[Rational, Rational]
    at1: tuple[Rational, Rational]
    at_inf: tuple[Rational, Rational]

    def exponents(self) -> list[Rational]:
        return [*self.at0, *self.at1, *self.at_inf]


class PointClass(enum.Enum):
    """Position of a boundary point relative to the singular sets S and S_u."""

    INTERIOR_NOT_S = "interior_not_S"
    IN_S_NOT_SU = "in_S_not_Su"
    IN_SU = "in_Su"


@dataclass(frozen=True)
class KSVanishing:
    order: int
    vanishes: bool


# Sentinel for a boundary point where both local exponents vanish; such a
# point contributes nothing to denominator bookkeeping.
CUSP = None


def gamma_exponents(fam: CoverFamily, i: int) -> tuple[Rational, Rational]:
    """The pair (c1, c2) = (sigma1+sigma3-1, sigma2+sigma3-1) for character i."""
    s = fam.sigma(i)
    return (s[0] + s[2] - 1, s[1] + s[2] - 1)


def hg_params(fam: CoverFamily, i: int) -> HGParams:
    """Hypergeometric parameters of the eigenspace of character i.

    Raises:
        TrivialFiltration: if k(i) != 1, i.e. the Hodge filtration of the
            eigenspace is trivial and there is no rank-2 operator.
    """
    cd = character_data(fam, i)
    if cd.k != 1:
        raise TrivialFiltration(f"k({i}) = {cd.k} != 1")
    s1, s2, s3, _ = cd.sigma
    return HGParams(A=1 - s3, B=2 - (s1 + s2 + s3), C=2 - (s1 + s3))


def riemann_scheme(p: HGParams) -> RiemannScheme:
    """Riemann scheme of the operator with parameters (A, B, C)."""
    zero = Fraction(0)
    return RiemannScheme(
        at0=(zero, 1 - p.C),
        at1=(zero, p.C - p.A - p.B),
        at_inf=(p.A, p.B),
    )


def is_unipotent(scheme: RiemannScheme, ram: tuple[int, int, int]) -> bool:
    """Whether local monodromies become unipotent after the given base change.

    `ram` lists the ramification orders of the base change at 0, 1, infinity;
    unipotency holds exactly when every local exponent times the ramification
    order there is an integer.
    """
    groups = (scheme.at0, scheme.at1, scheme.at_inf)
    return all(
        (e * r).denominator == 1 for g, r in zip(groups, ram) for e in g
    )


def ks_vanishing_order(n_c: int, cls: PointClass) -> KSVanishing:
    """Order of vanishing of the Kodaira-Spencer map at a point of class cls.

    `n_c` is the local exponent normalization (exponents (0, n_c)); it must
    be >= 1 except at points where the monodromy is not unipotent (IN_SU).
    """
    if cls is PointClass.IN_SU:
        return KSVanishing(order=0, vanishes=False)
    if n_c < 1:
        raise DegeneratePoint(f"n_c = {n_c} but class {cls.value} requires n_c >= 1")
    order = n_c - 1 if cls is PointClass.INTERIOR_NOT_S else n_c
    return KSVanishing(order=order, vanishes=order > 0)


@functools.lru_cache(maxsize=None)
def _relevant_indices(fam: CoverFamily) -> list[int]:
    return [i for i in range(1, fam.N) if character_data(fam, i).k == 1]


@functools.lru_cache(maxsize=None)
def base_change_orders(fam: CoverFamily) -> tuple[Optional[int], Optional[int]]:
    """Ramification orders (b0, b1) of the base change making t=0, t=1 unipotent.

    b0 (resp. b1) is the lcm of the denominators of the nonzero local
    exponents at 0 (resp. 1) over all rank-2 eigenspaces.  A point where
    every exponent vanishes is a cusp, reported as None.

    Raises:
        HypothesisUnmet: unless infinity is a cusp for the whole family
            (a3 + a4 divisible by N), the situation all spectra here use.
    """
    if (fam.a[2] + fam.a[3]) % fam.N != 0:
        raise HypothesisUnmet("a3 + a4 must be divisible by N (cusp at infinity)")
    orders: list[Optional[int]] = []
    for mu in range(2):
        b = 1
        seen = False
        for i in _relevant_indices(fam):
            c = gamma_exponents(fam, i)[mu]
            if c != 0:
                b = math.lcm(b, c.denominator)
                seen = True
        orders.append(b if seen else CUSP)
    return tuple(orders)


def higgs_indices(fam: CoverFamily) -> list[int]:
    """Indices i where the Higgs field of the eigenspace is maximal.

    These are the i with k(i) = 1 whose exponent at each non-cusp boundary
    point equals plus or minus 1 over the base-change order there (at a cusp
    the exponent vanishes identically and imposes nothing).
    """
    b0, b1 = base_change_orders(fam)
    out = []
    for i in _relevant_indices(fam):
        good = True
        for c, b in zip(gamma_exponents(fam, i), (b0, b1)):
            if b is CUSP:
                assert c == 0
            elif abs(c) != Fraction(1, b):
                good = False
                break
        if good:
            out.append(i)
    return out


def lyapunov_ratio(fam: CoverFamily, i: int) -> Rational:
    """Exact Lyapunov exponent of the eigenspace of character i.

    Computed as the normalized degree
    (1 - n0/b0 - n1/b1) / (1 - 1/b0 - 1/b1)
    where |c_mu(i)| = n_mu/b_mu and 1/b_mu is taken to be 0 at a cusp.

    Raises:
        TrivialFiltration: if k(i) != 1.
    """
    hg_params(fam, i)  # precondition gate: k(i) must be 1
    b0, b1 = base_change_orders(fam)
    c1, c2 = gamma_exponents(fam, i)
    num = Fraction(1)
    den = Fraction(1)
    for c, b in zip((c1, c2), (b0, b1)):
        if b is not CUSP:
            num -= abs(c)
            den -= Fraction(1, b)
    return num / den
