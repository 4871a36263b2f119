"""Command-line entry point: verification suites, user certificates, region
curves for the figures, and small octonionic calculators."""

from __future__ import annotations

import argparse
import json
import math
import sys
from fractions import Fraction

from . import curvforms, normalform, octalg, theoremsuite
from .bernstein import CertFailure, bern_certify, bern_expand
from .exactnum import parse_quadext
from .polycore import parse_poly


def _parse_rat(text: str) -> Fraction:
    if "/" in text:
        num, den = text.split("/", 1)
        return Fraction(int(num), int(den))
    return Fraction(int(text))


def _config_error(msg: str):
    print(f"error: {msg}", file=sys.stderr)
    raise SystemExit(2)


# -- verify ---------------------------------------------------------------------


def cmd_verify(args) -> int:
    eps = _parse_rat(args.eps)
    if not 0 < eps <= Fraction(1, 10):
        _config_error(f"epsilon {eps} out of range (0, 1/10]")
    runner = theoremsuite.SUITES.get(args.target)
    if runner is None:
        _config_error(f"unknown verify target {args.target!r}")
    records = runner(eps) if args.target in ("all", "coass", "cayley") else runner()
    failed = [r for r in records if not r.ok]
    if args.out:
        theoremsuite.records_to_json(records, args.out)
    if args.format == "json" and not args.out:
        print(theoremsuite.records_to_json(records))
    else:
        width = max(len(r.id) for r in records)
        for r in records:
            print(f"{r.status.upper():9s} {r.id:{width}s} {r.wall_time_ms:8.1f} ms  {r.claim}")
        verified = sum(1 for r in records if r.status == "verified")
        assumed = sum(1 for r in records if r.status == "assumed")
        tail = f", {assumed} assumption node(s)" if assumed else ""
        print(f"-- {verified}/{len(records)} verified{tail}, {len(failed)} failed")
    return 0 if not failed else 1


# -- cert ------------------------------------------------------------------------


def _print_cert(cert, poly=None, a=None, b=None) -> None:
    if isinstance(cert, CertFailure):
        print(
            f"failure: no certificate up to degree {cert.last_degree};"
            f" coefficient {cert.negative_index} = {cert.negative_coeff}"
        )
        if poly is not None:
            va = poly.eval_exact({poly.single_variable() or "t": a})
            vb = poly.eval_exact({poly.single_variable() or "t": b})
            if va.sign() * vb.sign() < 0:
                print("the polynomial changes sign on the interval")
        return
    print(f"interval  [{cert.a}, {cert.b}]")
    print(f"degree    {cert.m}")
    print(f"basis     {cert.basis}")
    print(f"verdict   {cert.verdict}")
    for k, c in enumerate(cert.coeffs):
        print(f"  c[{k}] = {c}")


def _run_corpus(path: str, out: str | None) -> int:
    rows = []
    worst = 0
    with open(path) as fh:
        for n, line in enumerate(fh, 1):
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            parts = [p.strip() for p in line.split(";")]
            if len(parts) < 5:
                _config_error(f"line {n}: need poly; a; b; degree; basis")
            poly = parse_poly(parts[0])
            a, b = parse_quadext(parts[1]), parse_quadext(parts[2])
            degree = int(parts[3])
            basis = parts[4]
            ident = parts[5] if len(parts) > 5 else f"line{n}"
            found = bern_certify(poly, a, b, max_m=max(degree + 8, 16), basis=basis)
            if isinstance(found, CertFailure):
                rows.append(
                    {
                        "id": ident,
                        "degree_claimed": degree,
                        "degree_found": None,
                        "verdict": "failure",
                        "margin_min_coeff": str(found.negative_coeff),
                    }
                )
                worst = 1
            else:
                rows.append(
                    {
                        "id": ident,
                        "degree_claimed": degree,
                        "degree_found": found.m,
                        "verdict": found.verdict,
                        "margin_min_coeff": str(found.min_coeff()),
                    }
                )
                if found.m != degree:
                    worst = 1
    payload = json.dumps(rows, indent=1)
    if out:
        with open(out, "w") as fh:
            fh.write(payload)
    else:
        print(payload)
    return worst


def cmd_cert(args) -> int:
    if args.corpus:
        return _run_corpus(args.corpus, args.out)
    if args.poly is None or args.a is None or args.b is None:
        _config_error("cert needs a polynomial and two endpoints (or --corpus)")
    try:
        poly = parse_poly(args.poly)
        a, b = parse_quadext(args.a), parse_quadext(args.b)
    except ValueError as exc:
        _config_error(str(exc))
    if not a < b:
        _config_error(f"empty interval [{a}, {b}]")
    if args.degree is not None:
        try:
            cert = bern_expand(poly, a, b, args.degree, args.basis)
        except ValueError as exc:
            _config_error(str(exc))
        _print_cert(cert)
        return 0 if cert.verdict != "inconclusive" else 1
    cert = bern_certify(poly, a, b, max_m=args.max_degree, basis=args.basis)
    _print_cert(cert, poly, a, b)
    return 0 if not isinstance(cert, CertFailure) else 1


# -- region ------------------------------------------------------------------------


def _figure_curves(figure: int, eps: Fraction):
    """Curve id -> (value function, membership predicate) on the slope plane."""
    eps_f = float(eps)
    root8 = math.sqrt(8.0)

    def lifted(l1, l2):
        d = l1 * l2 - 1
        if abs(d) < 1e-12:
            return None
        return (l1 + l2) / d

    def inner(l1, l2, l3):
        return l1 * l2 < 1 and l2 * l3 < 1 and l3 * l1 < 1

    def outer(l1, l2, l3):
        return (
            l1 > 0 and l2 > 0 and l3 > 0 and l1 * l2 > 1 and l2 * l3 > 1 and l3 * l1 > 1
        )

    def sigma2(l1, l2, l3):
        return l1 * l2 + l2 * l3 + l3 * l1

    curves = {}
    if figure == 1:
        curves["solid_sigma2_level"] = (
            lambda l1, l2, l3: sigma2(l1, l2, l3) + root8 - eps_f,
            inner,
        )
        for name, fn in (
            ("p12", lambda l1, l2, l3: l1 * l2),
            ("p23", lambda l1, l2, l3: l2 * l3),
            ("p31", lambda l1, l2, l3: l3 * l1),
        ):
            curves[f"dotted_{name}_plus"] = (
                lambda l1, l2, l3, fn=fn: fn(l1, l2, l3) - 1.0,
                lambda l1, l2, l3: True,
            )
            curves[f"dotted_{name}_minus"] = (
                lambda l1, l2, l3, fn=fn: fn(l1, l2, l3) + 1.0,
                lambda l1, l2, l3: True,
            )
    elif figure in (2, 3):
        member = inner if figure == 2 else outer
        curves["dotted_det3"] = (
            lambda l1, l2, l3: curvforms.det3_value(l1, l2, l3),
            member,
        )
        curves["dotted_det4_slot1"] = (
            lambda l1, l2, l3: curvforms.det4_value(l2, l3, l1),
            member,
        )
        curves["dotted_det4_slot2"] = (
            lambda l1, l2, l3: curvforms.det4_value(l3, l1, l2),
            member,
        )
        curves["dotted_det4_slot3"] = (
            lambda l1, l2, l3: curvforms.det4_value(l1, l2, l3),
            member,
        )
        if figure == 2:
            curves["solid_sigma2_level"] = (
                lambda l1, l2, l3: sigma2(l1, l2, l3) + root8 - eps_f,
                inner,
            )
        else:
            tau = theoremsuite.tau_algebraic()
            tau.refine(Fraction(1, 10 ** 10))
            level = float(tau.midpoint()) - float(eps)
            for name, fn in (
                ("p12", lambda l1, l2, l3: l1 * l2),
                ("p23", lambda l1, l2, l3: l2 * l3),
                ("p31", lambda l1, l2, l3: l3 * l1),
            ):
                curves[f"solid_{name}_level"] = (
                    lambda l1, l2, l3, fn=fn, level=level: fn(l1, l2, l3) - level,
                    member,
                )
    else:
        _config_error(f"unknown figure {figure}")
    return curves, lifted


def emit_region(figure: int, resolution: int, eps: Fraction):
    """Sign-change-bisected points of the figure curves on the slope plane.

    Yields (figure, curve_id, l1, l2) rows; every point satisfies its defining
    equation to 1e-8.
    """
    curves, lifted = _figure_curves(figure, eps)
    lo, hi = -6.0, 6.0
    step = (hi - lo) / resolution
    axis = [lo + i * step for i in range(resolution + 1)]

    def value(curve, member, l1, l2):
        l3 = lifted(l1, l2)
        if l3 is None or not member(l1, l2, l3):
            return None
        try:
            return curve(l1, l2, l3)
        except ZeroDivisionError:
            return None

    rows = []
    for cid, (curve, member) in curves.items():
        grid = [[value(curve, member, x, y) for y in axis] for x in axis]
        for i in range(resolution + 1):
            for j in range(resolution + 1):
                f0 = grid[i][j]
                if f0 is None:
                    continue
                for di, dj in ((1, 0), (0, 1)):
                    i2, j2 = i + di, j + dj
                    if i2 > resolution or j2 > resolution:
                        continue
                    f1 = grid[i2][j2]
                    if f1 is None or f0 == 0.0 or (f0 > 0) == (f1 > 0):
                        continue
                    ax, ay, bx, by = axis[i], axis[j], axis[i2], axis[j2]
                    va, vb = f0, f1
                    point = None
                    for _ in range(80):
                        mx, my = (ax + bx) / 2, (ay + by) / 2
                        vm = value(curve, member, mx, my)
                        if vm is None:
                            break
                        if abs(vm) <= 1e-10:
                            point = (mx, my)
                            break
                        if (vm > 0) == (va > 0):
                            ax, ay, va = mx, my, vm
                        else:
                            bx, by, vb = mx, my, vm
                    else:
                        point = ((ax + bx) / 2, (ay + by) / 2)
                    if point is None:
                        continue
                    vm = value(curve, member, *point)
                    if vm is not None and abs(vm) <= 1e-8:
                        rows.append((figure, cid, point[0], point[1]))
    return rows


def cmd_region(args) -> int:
    eps = _parse_rat(args.eps)
    if not 0 < eps <= Fraction(1, 10):
        _config_error(f"epsilon {eps} out of range (0, 1/10]")
    if not 1 <= args.resolution <= 4096:
        _config_error("resolution must be between 1 and 4096")
    figures = [args.figure] if args.figure else [1, 2, 3]
    lines = ["figure,curve_id,l1,l2"]
    for figure in figures:
        for fig, cid, l1, l2 in emit_region(figure, args.resolution, eps):
            lines.append(f"{fig},{cid},{l1!r},{l2!r}")
    payload = "\n".join(lines) + "\n"
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(payload)
    else:
        sys.stdout.write(payload)
    return 0


# -- tools -------------------------------------------------------------------------


def _parse_vector(text: str, n: int):
    parts = [p.strip() for p in text.split(",")]
    if len(parts) != n:
        _config_error(f"expected {n} comma-separated entries, got {len(parts)}")
    try:
        return [parse_quadext(p) for p in parts]
    except ValueError:
        return [float(p) for p in parts]


def _parse_floats(text: str):
    """Row-major matrix entries: doubles or exact literals, coerced to float."""
    out = []
    for p in text.split(","):
        p = p.strip()
        try:
            out.append(float(p))
        except ValueError:
            out.append(float(parse_quadext(p)))
    return out


def _fmt_vec(v) -> str:
    return ",".join(str(c) for c in v)


def cmd_tools(args) -> int:
    if args.sub == "cross":
        u, v = _parse_vector(args.vectors[0], 7), _parse_vector(args.vectors[1], 7)
        print(_fmt_vec(octalg.cross7(u, v)))
        return 0
    if args.sub == "assoc":
        u, v, w = (_parse_vector(x, 7) for x in args.vectors[:3])
        print(_fmt_vec(octalg.associator(u, v, w)))
        return 0
    if args.sub == "triple":
        u, v, w = (_parse_vector(x, 8) for x in args.vectors[:3])
        print(_fmt_vec(octalg.triple_cross8(u, v, w)))
        return 0
    if args.sub == "normalform":
        if args.lo:
            x = _parse_floats(args.lo)
            _, J = normalform.lawson_osserman(x)
            nf = normalform.coass_normal_form(J)
        elif args.coass:
            vals = _parse_floats(args.coass)
            if len(vals) != 12:
                _config_error("coassociative graphs need a row-major 3x4 matrix")
            J = [vals[0:4], vals[4:8], vals[8:12]]
            nf = normalform.coass_normal_form(J)
        elif args.assoc_graph:
            vals = _parse_floats(args.assoc_graph)
            if len(vals) != 9:
                _config_error("associative graphs need a row-major 3x3 matrix")
            J = [vals[0:3], vals[3:6], vals[6:9]]
            nf = normalform.associative_normal_form(J)
        elif args.cayley:
            vals = _parse_floats(args.cayley)
            if len(vals) != 16:
                _config_error("graphs in R^8 need a row-major 4x4 matrix")
            J = [vals[0:4], vals[4:8], vals[8:12], vals[12:16]]
            nf = normalform.cayley_normal_form(J)
        else:
            _config_error("normalform needs one of --lo/--coass/--assoc-graph/--cayley")
        print(f"values    {','.join(f'{v:.12g}' for v in nf.values)}")
        print(f"component {nf.component}")
        print(f"residual  {nf.residual:.3g}")
        return 0
    _config_error(f"unknown tool {args.sub!r}")


# -- parser ------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="calicert",
        description="exact certificates for slope regions of calibrated graphs",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument("target", choices=sorted(theoremsuite.SUITES))
    p.add_argument("--eps", default="1/10", help="rational epsilon, e.g. 1/10")
    p.add_argument("--out", help="write the JSON report here")
    p.add_argument("--format", choices=("json", "text"), default="text")
    p.set_defaults(fn=cmd_verify)

    p = sub.add_parser("cert", help="Bernstein-certify a polynomial on an interval")
    p.add_argument("poly", nargs="?", help="polynomial text, e.g. '5*t^2-3*t+1'")
    p.add_argument("a", nargs="?", help="left endpoint (exact literal)")
    p.add_argument("b", nargs="?", help="right endpoint (exact literal)")
    p.add_argument("--degree", type=int, help="expand at this degree instead of searching")
    p.add_argument("--max-degree", type=int, default=64)
    p.add_argument("--basis", choices=("scaled", "binomial"), default="scaled")
    p.add_argument("--corpus", help="run a corpus file (poly; a; b; degree; basis per line)")
    p.add_argument("--out", help="write the JSON report here")
    p.set_defaults(fn=cmd_cert)

    p = sub.add_parser("region", help="emit figure curves as CSV")
    p.add_argument("figure", type=int, nargs="?", choices=(1, 2, 3))
    p.add_argument("--resolution", type=int, default=400)
    p.add_argument("--eps", default="1/10")
    p.add_argument("--out", help="write CSV here")
    p.set_defaults(fn=cmd_region)

    p = sub.add_parser("tools", help="octonionic products and normal forms")
    p.add_argument("sub", choices=("cross", "assoc", "triple", "normalform"))
    p.add_argument("vectors", nargs="*", help="comma-separated vectors")
    p.add_argument("--lo", help="evaluate the explicit cone map at this R^4 point")
    p.add_argument("--coass", help="row-major 3x4 slope matrix")
    p.add_argument("--assoc-graph", help="row-major 3x3 slope matrix")
    p.add_argument("--cayley", help="row-major 4x4 slope matrix")
    p.set_defaults(fn=cmd_tools)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.fn(args)
    except SystemExit:
        raise
    except BrokenPipeError:
        return 0
    return 0


if __name__ == "__main__":
    sys.exit(main())
