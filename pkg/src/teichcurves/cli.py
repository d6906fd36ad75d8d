"""Command-line front end.

Commands: spectrum, family, billiard, sc-check, unfold, verify.
Formats: table (default), json (schema 1), csv.  Exact rationals are always
printed as p/q next to a decimal rendering; decimals never feed back into
any computation.  Exit codes: 0 ok, 1 verification failure, 2 usage,
3 I/O failure.
"""

from __future__ import annotations

import argparse
import json
import math
import random
import sys
from fractions import Fraction
from typing import Any, Optional, Sequence

from . import billiards, cyclic_cover, hypergeom, lyapunov, schwarz_christoffel
from . import triangle_family as tf
from .errors import HypothesisUnmet, TeichError

CORRECTED_DEGENERATION_FLAG = (
    "degenerate-fiber component genus uses the corrected formula "
    "(validated against a Riemann-Hurwitz recount)")


def _rat(q: Fraction) -> str:
    return f"{q.numerator}/{q.denominator}"


def _dec(x: float) -> str:
    return format(float(x), ".15g")


def _ratdec(q: Fraction) -> str:
    return f"{_rat(q)} ({_dec(q)})"


def _csv_quote(s: str) -> str:
    if any(c in s for c in ',"\n'):
        return '"' + s.replace('"', '""') + '"'
    return s


class Report:
    """Accumulates key/value rows plus optional tabular sections."""

    def __init__(self, command: str, inputs: dict[str, Any]):
        self.command = command
        self.inputs = inputs
        self.rows: list[tuple[str, str]] = []
        self.json_results: dict[str, Any] = {}
        self.tables: list[tuple[list[str], list[list[str]]]] = []
        self.flags: list[str] = []

    def add(self, key: str, display: str, value: Any = None) -> None:
        self.rows.append((key, display))
        self.json_results[key] = display if value is None else value

    def add_table(self, name: str, header: list[str], rows: list[list[str]],
                  json_rows: list[dict[str, Any]]) -> None:
        self.tables.append((header, rows))
        self.json_results[name] = json_rows

    def emit(self, fmt: str, out=None) -> None:
        out = out or sys.stdout
        if fmt == "json":
            doc = {"schema": 1, "command": self.command, "inputs": self.inputs,
                   "results": self.json_results, "flags": self.flags}
            out.write(json.dumps(doc, indent=2) + "\n")
            return
        if fmt == "csv":
            out.write("key,value\n")
            for k, v in self.inputs.items():
                out.write(f"{_csv_quote(str(k))},{_csv_quote(str(v))}\n")
            for k, v in self.rows:
                out.write(f"{_csv_quote(k)},{_csv_quote(v)}\n")
            for header, rows in self.tables:
                out.write(",".join(_csv_quote(h) for h in header) + "\n")
                for r in rows:
                    out.write(",".join(_csv_quote(c) for c in r) + "\n")
            for f in self.flags:
                out.write(f"flag,{_csv_quote(f)}\n")
            return
        args = " ".join(f"{k}={v}" for k, v in self.inputs.items())
        out.write(f"{self.command} {args}\n")
        for k, v in self.rows:
            out.write(f"  {k}: {v}\n")
        for header, rows in self.tables:
            widths = [max(len(h), *(len(r[j]) for r in rows)) if rows else len(h)
                      for j, h in enumerate(header)]
            out.write("  " + "  ".join(h.ljust(w) for h, w in zip(header, widths)).rstrip() + "\n")
            for r in rows:
                out.write("  " + "  ".join(c.ljust(w) for c, w in zip(r, widths)).rstrip() + "\n")
        for f in self.flags:
            out.write(f"  flag: {f}\n")


def _spectrum_report(spec: lyapunov.LyapunovSpectrum, command: str,
                     inputs: dict[str, Any]) -> Report:
    rep = Report(command, inputs)
    rep.add("normalization", spec.normalization)
    rep.add("certified", str(spec.certified).lower(), spec.certified)
    rep.add("total_rank", str(spec.total_rank), spec.total_rank)
    derived = lyapunov.spectrum_report(spec)
    rep.add("sum", _ratdec(derived.total), _rat(derived.total))
    header = ["representative", "lambda", "lambda_decimal", "defect", "multiplicity"]
    rows, jrows = [], []
    for e, d in zip(spec.entries, derived.defects):
        rows.append([str(e.representative), _rat(e.value), _dec(e.value),
                     _rat(d), str(e.multiplicity)])
        jrows.append({"representative": e.representative, "lambda": _rat(e.value),
                      "lambda_decimal": float(e.value), "defect": _rat(d),
                      "multiplicity": e.multiplicity})
    rep.add_table("entries", header, rows, jrows)
    rep.flags.extend(spec.flags)
    return rep


def cmd_spectrum(args) -> int:
    if args.veech_even is not None:
        spec = lyapunov.spectrum_veech_even(args.veech_even)
        inputs = {"veech_even": args.veech_even}
    elif args.veech_quotient is not None:
        spec = lyapunov.spectrum_veech_quotient(args.veech_quotient)
        inputs = {"veech_quotient": args.veech_quotient}
    elif args.veech_odd is not None:
        spec = lyapunov.spectrum_veech_odd(args.veech_odd)
        inputs = {"veech_odd": args.veech_odd}
    elif args.m is not None and args.n is not None:
        spec = lyapunov.spectrum_general(args.m, args.n)
        inputs = {"m": args.m, "n": args.n}
    else:
        print("error: give m n or one of --veech-even/--veech-quotient/--veech-odd",
              file=sys.stderr)
        return 2
    _spectrum_report(spec, "spectrum", inputs).emit(args.format)
    return 0


def cmd_family(args) -> int:
    inv = tf.build(args.m, args.n)
    rep = Report("family", {"m": args.m, "n": args.n})
    rep.add("N", str(inv.N), inv.N)
    rep.add("a", str(list(inv.cover.a)), list(inv.cover.a))
    rep.add("sigma", " ".join(_rat(s) for s in inv.sigma),
            [_rat(s) for s in inv.sigma])
    rep.add("case", inv.case)
    rep.add("gamma", str(inv.gamma), inv.gamma)
    rep.add("gamma1", str(inv.gamma1), inv.gamma1)
    rep.add("gamma2", str(inv.gamma2), inv.gamma2)
    rep.add("beta", str(inv.beta), inv.beta)
    rep.add("delta", str(inv.delta), inv.delta)
    rep.add("Nhat", str(inv.Nhat), inv.Nhat)
    rep.add("alpha", str(inv.alpha), inv.alpha)
    rep.add("alpha_modulus", str(inv.alpha_modulus), inv.alpha_modulus)
    rep.add("genus_Z", str(tf.genus_Z(inv)), tf.genus_Z(inv))
    rep.add("genus_Y", str(tf.genus_Y(inv)), tf.genus_Y(inv))
    try:
        gx = tf.genus_X(inv)
        rep.add("genus_X", str(gx), gx)
    except HypothesisUnmet:
        rep.add("genus_X", "n/a", None)
    fp = tf.fixed_points(inv)
    rep.add("fixed_points", f"tau={fp.tau} rho={fp.rho} sigma={fp.sigma}",
            {"tau": fp.tau, "rho": fp.rho, "sigma": fp.sigma})
    rep.add("zeros", str(tf.zero_count(inv)), tf.zero_count(inv))
    r = tf.trace_field_degree(args.m, args.n)
    rep.add("trace_field_degree", str(r), r)
    try:
        prim = tf.primitivity(args.m, args.n)
        rep.add("algebraically_primitive",
                str(prim.algebraically_primitive).lower(),
                prim.algebraically_primitive)
        rep.add("geometrically_primitive", prim.geometrically_primitive)
    except HypothesisUnmet:
        rep.add("algebraically_primitive", "n/a", None)
        rep.add("geometrically_primitive", "Unknown")
    rep.add("affine_group", tf.affine_group_label(args.m, args.n))
    deg = cyclic_cover.degeneration_at_zero(inv.cover)
    rep.add("degeneration_t0",
            f"nodes={deg.nodes} degrees={deg.component_degree} "
            f"genera={deg.component_genus} beta={deg.beta}",
            {"nodes": deg.nodes, "component_degree": list(deg.component_degree),
             "component_genus": list(deg.component_genus), "beta": list(deg.beta)})
    rep.flags.append(CORRECTED_DEGENERATION_FLAG)
    if inv.swapped:
        rep.flags.append(f"parameters swapped internally to ({inv.m},{inv.n})")
    if args.m == args.n:
        rep.flags.append("affine group ambiguous for m = n; both candidates reported")
    rep.emit(args.format)
    return 0


def _polygon_json(poly: billiards.RationalPolygon) -> dict[str, Any]:
    return {"angles": [[a.numerator, a.denominator] for a in poly.angles],
            "vertices": [[x, y] for x, y in poly.vertices]}


def cmd_billiard(args) -> int:
    if args.m not in (2, 3, 4, 5):
        count = tf.self_crossing_count(args.m)
        print(f"error: T({args.m},{args.n}) has {count} self-crossing(s); the "
              "developed polygon is not embedded for m >= 6, so there is no "
              "billiard table to draw", file=sys.stderr)
        return 2
    poly = billiards.table(args.m, args.n)
    surf = billiards.unfold(poly)
    rep = Report("billiard", {"m": args.m, "n": args.n})
    rep.add("angles", " ".join(_rat(a) for a in poly.angles),
            [[a.numerator, a.denominator] for a in poly.angles])
    rep.add("edge_lengths", " ".join(_dec(x) for x in poly.edge_lengths()),
            [float(x) for x in poly.edge_lengths()])
    if poly.edge_labels:
        rep.add("edge_labels", " ".join(poly.edge_labels), list(poly.edge_labels))
    rep.add("copies", str(surf.copies), surf.copies)
    rep.add("genus", str(surf.genus), surf.genus)
    rep.add("cone_points", "; ".join(
        f"{c.count} point(s) of cone angle {_rat(c.cone_angle)}*2pi (order {c.order})"
        for c in surf.cone_points) or "none",
        [{"count": c.count, "cone_angle": _rat(c.cone_angle), "order": c.order}
         for c in surf.cone_points])
    rep.add("stratum", str(list(surf.stratum)), list(surf.stratum))
    cyls = None
    if args.m in (4, 5):
        cyls = billiards.horizontal_cylinders(args.m, args.n)
        mods = [c.modulus for c in cyls]
        dev = max(mods) - min(mods)
        rep.add("cylinders", str(sum(c.multiplicity for c in cyls)),
                sum(c.multiplicity for c in cyls))
        rep.add("cylinder_modulus", _dec(mods[0]), mods[0])
        rep.add("moduli_max_deviation", _dec(dev), dev)
    rep.json_results["polygon"] = _polygon_json(poly)
    if args.svg:
        from . import figures
        try:
            figures.render_table(poly, args.svg, n=args.n, star=args.star,
                                 cylinders=cyls)
        except OSError as exc:
            print(f"error: cannot write {args.svg}: {exc}", file=sys.stderr)
            return 3
        rep.add("svg", args.svg)
    rep.emit(args.format)
    return 0


def cmd_sc_check(args) -> int:
    rep = Report("sc-check", {"m": args.m, "n": args.n, "tol": args.tol})
    res = schwarz_christoffel.similarity_check(args.m, args.n, quad_tol=args.tol)
    rep.add("max_rel_err", _dec(res.max_rel_err), res.max_rel_err)
    rep.add("table_side_ratios", " ".join(_dec(x) for x in res.table_ratios),
            [float(x) for x in res.table_ratios])
    rep.add("sc_side_ratios", " ".join(_dec(x) for x in res.sc_ratios),
            [float(x) for x in res.sc_ratios])
    verts = schwarz_christoffel.sc_polygon(
        schwarz_christoffel.sc_spec(args.m, args.n), quad_tol=args.tol)
    rep.add("self_crossings",
            str(schwarz_christoffel.count_self_crossings(verts)),
            schwarz_christoffel.count_self_crossings(verts))
    if args.m == 5:
        sides = schwarz_christoffel.sc_sides_m5(args.n)
        ratio = sides.I3_len / sides.I4_len
        target = ((math.cos(math.pi / args.n) + math.cos(math.pi / 5))
                  / math.cos(math.pi / (2 * args.n)))
        rep.add("beta_ratio", _dec(ratio), ratio)
        rep.add("beta_ratio_vs_trig", _dec(abs(ratio - target)), abs(ratio - target))
    rep.emit(args.format)
    return 0


def cmd_unfold(args) -> int:
    poly = billiards.table(args.m, args.n)
    surf = billiards.unfold(poly)
    rep = Report("unfold", {"m": args.m, "n": args.n})
    rep.add("copies", str(surf.copies), surf.copies)
    rep.add("genus", str(surf.genus), surf.genus)
    rep.add("cone_points", "; ".join(
        f"{c.count} point(s) of cone angle {_rat(c.cone_angle)}*2pi (order {c.order})"
        for c in surf.cone_points) or "none",
        [{"count": c.count, "cone_angle": _rat(c.cone_angle), "order": c.order}
         for c in surf.cone_points])
    rep.add("stratum", str(list(surf.stratum)), list(surf.stratum))
    rep.json_results["polygon"] = _polygon_json(poly)
    rep.emit(args.format)
    return 0


def _random_cover(rng: random.Random) -> cyclic_cover.CoverFamily:
    while True:
        N = rng.randint(3, 60)
        a = [rng.randint(1, N - 1) for _ in range(3)]
        a4 = (-sum(a)) % N
        if a4 == 0:
            continue
        try:
            return cyclic_cover.CoverFamily(N, (*a, a4))
        except TeichError:
            continue


def _verify_checks(sweep_max: int):
    odd_pairs = [(m, n) for m in range(3, sweep_max + 1, 2)
                 for n in range(m + 2, sweep_max + 1, 2) if math.gcd(m, n) == 1]

    def dual_formula() -> tuple[bool, str]:
        for m, n in odd_pairs:
            inv = tf.build(m, n)
            spec = lyapunov.spectrum_general(m, n)
            for e in spec.entries:
                if e.value != hypergeom.lyapunov_ratio(inv.cover, e.representative):
                    return False, f"mismatch at ({m},{n}), i={e.representative}"
        return True, f"{len(odd_pairs)} odd coprime pairs"

    def genus_coherence() -> tuple[bool, str]:
        count = 0
        for m in range(2, sweep_max + 1):
            for n in range(m, sweep_max + 1):
                if m * n < 6:
                    continue
                inv = tf.build(m, n)
                if tf.genus_Z(inv) != cyclic_cover.genus_smooth_fiber(inv.cover):
                    return False, f"genus_Z mismatch at ({m},{n})"
                count += 1
        return True, f"{count} families"

    def higgs_orbit() -> tuple[bool, str]:
        for m, n in odd_pairs:
            inv = tf.build(m, n)
            orbit1 = {1, inv.N - 1, inv.alpha, inv.N - inv.alpha}
            if set(hypergeom.higgs_indices(inv.cover)) != orbit1:
                return False, f"higgs indices differ from orbit of 1 at ({m},{n})"
        return True, f"{len(odd_pairs)} odd coprime pairs"

    def degeneration_identity() -> tuple[bool, str]:
        rng = random.Random(7)
        for _ in range(50):
            fam = _random_cover(rng)
            g = cyclic_cover.genus_smooth_fiber(fam)
            for place in ("0", "1", "inf"):
                deg = cyclic_cover.degeneration_at_zero(fam, place)
                if cyclic_cover.arithmetic_genus(deg) != g:
                    return False, f"identity fails for {fam} at t={place}"
        return True, "50 randomized families, all three degenerations"

    def moduli_equal() -> tuple[bool, str]:
        worst = 0.0
        for m, ns in ((5, (7, 9, 11, 13)), (4, (5, 7, 9, 11, 13))):
            for n in ns:
                mods = [c.modulus for c in billiards.horizontal_cylinders(m, n)]
                worst = max(worst, (max(mods) - min(mods)) / mods[0])
        return worst < 1e-10, f"max relative deviation {worst:.2e}"

    def minpoly_residual() -> tuple[bool, str]:
        worst = 0.0
        for n in (7, 9, 11, 13):
            c = math.cos(math.pi / n)
            x = billiards.re_I3(n)
            worst = max(worst, abs(x * x - (2 * c + 0.5) * x + (c * c + c / 2 - 0.25)))
        return worst < 1e-12, f"max residual {worst:.2e}"

    def sc_similarity() -> tuple[bool, str]:
        worst = 0.0
        for m, n in ((5, 9), (4, 9)):
            worst = max(worst,
                        schwarz_christoffel.similarity_check(m, n).max_rel_err)
        return worst < 1e-6, f"max side-ratio error {worst:.2e}"

    def trace_bound() -> tuple[bool, str]:
        for m, n in odd_pairs:
            phi = len([x for x in range(1, m * n) if math.gcd(x, m * n) == 1])
            if tf.trace_field_degree(m, n) > phi // 4:
                return False, f"bound fails at ({m},{n})"
        return True, f"{len(odd_pairs)} odd coprime pairs"

    return [
        ("dual-formula Lyapunov agreement", dual_formula),
        ("genus coherence Z vs cover formula", genus_coherence),
        ("maximal-Higgs indices equal orbit of 1", higgs_orbit),
        ("degeneration arithmetic-genus identity", degeneration_identity),
        ("cylinder moduli equality", moduli_equal),
        ("Re(I3) minimal-polynomial residual", minpoly_residual),
        ("Schwarz-Christoffel similarity", sc_similarity),
        ("trace-field degree bound", trace_bound),
    ]


def cmd_verify(args) -> int:
    checks = _verify_checks(args.sweep_max)
    if args.inject_fault:
        checks.append(("injected fault (negative control)",
                       lambda: (False, "always fails")))
    failures = 0
    for name, fn in checks:
        try:
            ok, detail = fn()
        except Exception as exc:  # a crash in a check is a failure, not an abort
            ok, detail = False, f"exception: {exc}"
        print(f"{'PASS' if ok else 'FAIL'}  {name} ({detail})")
        failures += 0 if ok else 1
    print(f"{len(checks) - failures}/{len(checks)} checks passed")
    return 1 if failures else 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="teichcurves",
        description="Invariants of Teichmueller curves uniformized by "
                    "triangle groups")
    sub = p.add_subparsers(dest="command", required=True)

    def add_format(sp):
        sp.add_argument("--format", choices=("table", "json", "csv"),
                        default="table")

    sp = sub.add_parser("spectrum", help="Lyapunov spectrum of a family")
    sp.add_argument("m", nargs="?", type=int)
    sp.add_argument("n", nargs="?", type=int)
    sp.add_argument("--veech-even", type=int, metavar="N")
    sp.add_argument("--veech-quotient", type=int, metavar="N")
    sp.add_argument("--veech-odd", type=int, metavar="N")
    add_format(sp)
    sp.set_defaults(func=cmd_spectrum)

    sp = sub.add_parser("family", help="full invariant record of the (m,n) family")
    sp.add_argument("m", type=int)
    sp.add_argument("n", type=int)
    add_format(sp)
    sp.set_defaults(func=cmd_family)

    sp = sub.add_parser("billiard", help="billiard table, unfolding, cylinders")
    sp.add_argument("m", type=int)
    sp.add_argument("n", type=int)
    sp.add_argument("--svg", metavar="PATH", help="write a figure of the table")
    sp.add_argument("--star", action="store_true",
                    help="draw the unfolded star instead of the bare table")
    add_format(sp)
    sp.set_defaults(func=cmd_billiard)

    sp = sub.add_parser("sc-check",
                        help="Schwarz-Christoffel similarity verification")
    sp.add_argument("m", type=int)
    sp.add_argument("n", type=int)
    sp.add_argument("--tol", type=float, default=1e-9)
    add_format(sp)
    sp.set_defaults(func=cmd_sc_check)

    sp = sub.add_parser("unfold", help="unfold the billiard table T(m,n)")
    sp.add_argument("m", type=int)
    sp.add_argument("n", type=int)
    add_format(sp)
    sp.set_defaults(func=cmd_unfold)

    sp = sub.add_parser("verify", help="run the cross-formula invariant suite")
    sp.add_argument("--sweep-max", type=int, default=15)
    sp.add_argument("--inject-fault", action="store_true",
                    help=argparse.SUPPRESS)
    sp.set_defaults(func=cmd_verify)
    return p


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    if getattr(args, "sweep_max", None) is not None and args.sweep_max > 25:
        print("error: --sweep-max must be <= 25", file=sys.stderr)
        return 2
    try:
        return args.func(args)
    except TeichError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
