"""Assembly of full Lyapunov spectra from the exact closed forms.

Two independent routes exist for the (m, n) families: the per-orbit closed
form (certified for m, n odd coprime) and the normalized-degree ratio from
the hypergeometric data.  Both are implemented; the test suite asserts their
exact agreement and the functions here never silently substitute one for
the other.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from .arith import Rational
from .cyclic_cover import character_data
from .errors import InvalidParams
from .hypergeom import gamma_exponents, lyapunov_ratio
from .triangle_family import build, orbits, veech_family


@dataclass(frozen=True)
class SpectrumEntry:
    representative: int
    value: Rational
    multiplicity: int = 1


@dataclass(frozen=True)
class LyapunovSpectrum:
    entries: tuple[SpectrumEntry, ...]
    total_rank: int
    normalization: str
    certified: bool = True
    flags: tuple[str, ...] = ()


def _sorted_entries(pairs: list[tuple[int, Fraction]]) -> tuple[SpectrumEntry, ...]:
    pairs.sort(key=lambda p: (-p[1], p[0]))
    return tuple(SpectrumEntry(representative=i, value=v) for i, v in pairs)


ODD_VEECH_FLAG = (
    "m=2 spectra: the printed closed form 2i/(n-1) for the regular odd n-gon "
    "disagrees with the normalized-degree ratio computed here; both are "
    "reported, neither is reconciled."
)

SPLIT_WEIGHT_FLAG = (
    "orbit closed form uses the weighting (mn - e1*m - e2*n)/(mn - m - n); "
    "the printed variant weights both terms by m, which fails the worked "
    "(3,5) values."
)


def spectrum_general(m: int, n: int) -> LyapunovSpectrum:
    """Lyapunov spectrum of the (m, n) family, one entry per character orbit.

    For m, n odd and coprime each orbit representative i contributes

        lambda(i) = (mn - e1(i)*m - e2(i)*n) / (mn - m - n),
        e1(i) = n*|c1(i)|,  e2(i) = m*|c2(i)|,

    with c_j(i) the nonzero local exponents of the eigenspace.  Outside the
    certified range the normalized-degree ratio is used on the orbit
    representatives with k(i) = 1 and the result is flagged.
    """
    inv = build(m, n)
    part = orbits(inv)
    fam = inv.cover
    mi, ni = inv.m, inv.n
    flags: list[str] = []
    pairs: list[tuple[int, Fraction]] = []
    if part.certified:
        flags.append(SPLIT_WEIGHT_FLAG)
        denom = mi * ni - mi - ni
        for orb in part.orbits:
            i = orb.representative
            c1, c2 = gamma_exponents(fam, i)
            e1 = ni * abs(c1)
            e2 = mi * abs(c2)
            lam = Fraction(mi * ni - e1 * mi - e2 * ni, 1) / denom
            pairs.append((i, lam))
    else:
        flags.append("non-certified branch: normalized-degree ratio on orbit "
                     "representatives with nontrivial filtration")
        if mi == 2 or ni == 2:
            flags.append(ODD_VEECH_FLAG)
        for orb in part.orbits:
            i = orb.representative
            if character_data(fam, i).k == 1:
                pairs.append((i, lyapunov_ratio(fam, i)))
    entries = _sorted_entries(pairs)
    return LyapunovSpectrum(
        entries=entries, total_rank=2 * len(entries),
        normalization="lambda = 1 for the maximal-Higgs eigenspace",
        certified=part.certified, flags=tuple(flags),
    )


def spectrum_veech_even(n: int) -> LyapunovSpectrum:
    """Spectrum of the regular n-gon family, n even: lambda_j = (k-j)/(k-1)."""
    if n < 4 or n % 2 != 0:
        raise InvalidParams(f"need even n >= 4, got {n}")
    k = n // 2
    pairs = [(j, Fraction(k - j, k - 1)) for j in range(1, (n - 2) // 2 + 1)]
    entries = _sorted_entries(pairs)
    return LyapunovSpectrum(
        entries=entries, total_rank=2 * len(entries),
        normalization="index j = 1..(n-2)/2, lambda_j = (k-j)/(k-1), k = n/2",
    )


def spectrum_veech_quotient(n: int) -> LyapunovSpectrum:
    """Spectrum of the quotient family: odd indices 1+2j, j = 0..t(n)."""
    if n < 6 or n % 2 != 0:
        raise InvalidParams(f"need even n >= 6, got {n}")
    k = n // 2
    t = veech_family(n).quotient.t
    pairs = [(1 + 2 * j, Fraction(k - (1 + 2 * j), k - 1)) for j in range(t + 1)]
    entries = _sorted_entries(pairs)
    return LyapunovSpectrum(
        entries=entries, total_rank=2 * len(entries),
        normalization="quotient indices 1+2j, j = 0..t(n)",
    )


def spectrum_veech_odd(n: int) -> LyapunovSpectrum:
    """Spectrum of the regular n-gon family, n odd, as printed: 2i/(n-1).

    Carries a discrepancy flag: the normalized-degree route through the
    (2, n) family gives different values; see spectrum_general(2, n).
    """
    if n < 5 or n % 2 != 1:
        raise InvalidParams(f"need odd n >= 5, got {n}")
    pairs = [(i, Fraction(2 * i, n - 1)) for i in range(1, (n - 1) // 2 + 1)]
    entries = _sorted_entries(pairs)
    return LyapunovSpectrum(
        entries=entries, total_rank=2 * len(entries),
        normalization="printed closed form lambda(i) = 2i/(n-1)",
        certified=False, flags=(ODD_VEECH_FLAG,),
    )


@dataclass(frozen=True)
class SpectrumReport:
    defects: tuple[Rational, ...]
    total: Rational
    denominator_bound: Optional[int] = None
    denominator_bound_ok: Optional[bool] = None
    notes: tuple[str, ...] = field(default=())


def spectrum_report(spec: LyapunovSpectrum, genus: Optional[int] = None,
                    cusps: Optional[int] = None) -> SpectrumReport:
    """Derived report: defects 1 - lambda, denominator bound, spectrum sum.

    When genus g and cusp count s are supplied, each lambda denominator is
    checked against the bound 2g - 2 + s.  The sum of the entries is
    informational, for comparison with an externally supplied degree ratio.
    """
    defects = tuple(1 - e.value for e in spec.entries)
    total = sum((e.value * e.multiplicity for e in spec.entries), Fraction(0))
    bound = ok = None
    if genus is not None and cusps is not None:
        bound = 2 * genus - 2 + cusps
        ok = all(e.value.denominator <= bound for e in spec.entries)
    return SpectrumReport(defects=defects, total=total,
                          denominator_bound=bound, denominator_bound_ok=ok,
                          notes=spec.flags)
