"""Command line front end.

Polynomials enter and leave as comma-separated integer coefficients, highest
degree first.  Structured results go to stdout as JSON (sorted keys) or, for
the atlas sweep, as CSV with a fixed header.  Exit codes: 0 on success, 2
when the input is rejected on mathematical grounds (not Salem, not realized,
out of domain), 1 on usage or parse errors.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction

from .classify import SHORT_CASE, InfiniteFamily, realizable
from .errors import ParseError, SalemToriError
from .intervals import Interval, decimal_string
from .poly import IntPoly, format_poly, parse_poly
from .salem import is_salem, lambda_approx
from .torus import (
    NotForced,
    QuadOrderMatrix,
    UNCONSTRAINED,
    a_form_matrix,
    dyadic_cm_family,
    entropy,
    from_quartic,
    gl2z_model,
    is_projective,
    picard_rank,
    quad_order_model,
    reorient,
)

CSV_HEADER = (
    "s_poly",
    "degree",
    "lambda",
    "case",
    "finiteness",
    "witness_count",
    "example_model",
    "projective_types",
    "picard_ranks",
)


class _Parser(argparse.ArgumentParser):
    # usage problems must exit 1, not argparse's default 2
    def error(self, message):
        self.exit(1, f"{self.prog}: error: {message}\n")


def _emit(text: str, out_path):
    if out_path:
        with open(out_path, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _dump_json(obj, out_path) -> int:
    _emit(json.dumps(obj, indent=2, sort_keys=True) + "\n", out_path)
    return 0


def _decimal_in(iv: Interval, places: int = 12) -> str:
    """Decimal guaranteed inside a certified enclosure of iv.

    When iv is tighter than the decimal grid, pad symmetrically to one grid
    step; the padded interval still contains the true value, so the nearest
    grid point to the midpoint is always certified.
    """
    dec = decimal_string(iv, places)
    if dec is None:
        pad = Fraction(1, 2 * 10**places)
        dec = decimal_string(Interval(iv.mid - pad, iv.mid + pad), places)
        assert dec is not None
    return dec


def _interval_json(iv: Interval, places: int = 12):
    return {"lo": str(iv.lo), "hi": str(iv.hi), "decimal": _decimal_in(iv, places)}


def _box_json(box):
    return {"re": _interval_json(box.re), "im": _interval_json(box.im)}


def _jsonify(value):
    if isinstance(value, IntPoly):
        return format_poly(value)
    if isinstance(value, (tuple, list)):
        return [_jsonify(v) for v in value]
    if isinstance(value, Fraction):
        return str(value)
    return value


def _lambda_decimal(cert) -> str:
    """12-place decimal guaranteed to sit inside a certified enclosure.

    The tight interval is padded symmetrically to width exactly 10^-12 so the
    nearest grid point cannot escape it.
    """
    iv = lambda_approx(cert, Fraction(1, 10**13))
    return _decimal_in(iv, 12)


def _classes_json(classes):
    out = []
    for cl in classes:
        if cl.kind == "conjugate":
            out.append({"kind": cl.kind, "indices": list(cl.indices)})
        else:
            out.append({"kind": cl.kind, "gl_params": list(cl.gl_params)})
    return out


def _finiteness_label(report) -> str:
    if report.finiteness is None:
        return "not_realized"
    if isinstance(report.finiteness, InfiniteFamily):
        return "infinite_family"
    return "finite"


def _witness_total(report) -> int:
    return sum(len(w.classes) for w in report.witnesses)


# ----------------------------------------------------------------------
# subcommands


def cmd_is_salem(args) -> int:
    p = parse_poly(args.poly)
    res = is_salem(p)
    if not res:
        obj = {
            "salem": False,
            "poly": format_poly(p),
            "reason": res.reason,
            "witness": _jsonify(res.witness),
            "detail": res.detail,
        }
        _dump_json(obj, args.out)
        return 2
    obj = {
        "salem": True,
        "poly": format_poly(p),
        "degree": res.degree,
        "trace_poly": format_poly(res.trace_poly),
        "circle_root_count": res.circle_root_count,
        "lambda": {
            "lo": str(res.root_interval.lo),
            "hi": str(res.root_interval.hi),
            "decimal": _lambda_decimal(res),
        },
    }
    return _dump_json(obj, args.out)


def cmd_classify(args) -> int:
    p = parse_poly(args.poly)
    res = is_salem(p)
    if not res:
        obj = {
            "error": "not_salem",
            "poly": format_poly(p),
            "reason": res.reason,
            "detail": res.detail,
        }
        _dump_json(obj, args.out)
        return 2
    report = realizable(res)
    obj = {
        "s_poly": format_poly(p),
        "degree": res.degree,
        "lambda": _lambda_decimal(res),
        "case": SHORT_CASE[report.case_tag],
        "case_tag": report.case_tag,
        "q": report.q_value,
        "square_witness": (
            None
            if report.square_witness is None
            else {"r": report.square_witness[0], "sign": report.square_witness[1]}
        ),
        "projective_types": list(report.projective_types),
        "picard_ranks": {k: v for k, v in report.picard_ranks},
        "finiteness": _finiteness_label(report),
        "witness_count": _witness_total(report),
        "witnesses": [
            {
                "q_poly": format_poly(w.q_poly),
                "c_poly": format_poly(w.c_poly),
                "p_poly": format_poly(w.p_poly),
                "classes": _classes_json(w.classes),
            }
            for w in report.witnesses
        ],
    }
    return _dump_json(obj, args.out)


def cmd_wedge(args) -> int:
    from .wedge import exterior_square

    p = parse_poly(args.poly)
    q = exterior_square(p)
    return _dump_json({"poly": format_poly(p), "exterior_square": format_poly(q)}, args.out)


def cmd_invert_wedge(args) -> int:
    from .wedge import invert_wedge

    q = parse_poly(args.poly)
    inv = invert_wedge(q)
    obj = {
        "sextic": format_poly(q),
        "a5": inv.a5,
        "m": inv.m,
        "n": inv.n,
        "candidates": [format_poly(c) for c in inv.candidates],
        "verified": [format_poly(c) for c in inv.verified],
        "obstruction": inv.obstruction,
    }
    return _dump_json(obj, args.out)


def _build_model(args, parser):
    fam = args.family
    if fam == "gl2z":
        if args.r is None or args.det is None:
            parser.error("gl2z needs --r and --det")
        return gl2z_model(args.r, args.det)
    if fam == "quad-order":
        if args.d is None:
            parser.error("quad-order needs --d")
        if args.entries is not None:
            vals = [int(v) for v in args.entries.split(",")]
            if len(vals) != 8:
                parser.error("--entries needs 8 integers a00,b00,a01,b01,a10,b10,a11,b11")
            e = (
                ((vals[0], vals[1]), (vals[2], vals[3])),
                ((vals[4], vals[5]), (vals[6], vals[7])),
            )
            return quad_order_model(QuadOrderMatrix(args.d, e))
        if args.b1 is None or args.b2 is None:
            parser.error("quad-order needs --entries or both --b1 and --b2")
        return quad_order_model(a_form_matrix(args.d, args.b1, args.b2))
    if fam == "quartic":
        if args.poly is None:
            parser.error("quartic needs --poly")
        p = parse_poly(args.poly)
        pairing = None
        if args.pairing is not None:
            parts = args.pairing.split(",")
            if len(parts) != 2:
                parser.error("--pairing needs two indices i,j")
            pairing = (int(parts[0]), int(parts[1]))
        return from_quartic(p, pairing)
    if fam == "dyadic-cm":
        if args.n is None or args.k is None:
            parser.error("dyadic-cm needs --n and --k")
        return dyadic_cm_family(args.n, args.k)
    parser.error(f"unknown family {fam}")


def _model_json(model, eps: Fraction):
    rest = model.salem_factor()
    zero = rest.degree == 0
    ent = entropy(model, eps)
    obj = {
        "family": model.origin.family if model.origin else None,
        "matrix": [list(row) for row in model.matrix],
        "h1_charpoly": format_poly(model.h1_charpoly),
        "h2_charpoly": format_poly(model.h2_charpoly),
        "root_poly": format_poly(model.root_poly),
        "pairing": list(model.pairing),
        "reoriented": model.reoriented,
        "zero_entropy": zero,
        "salem_factor": None if zero else format_poly(rest),
        "entropy": _interval_json(ent),
        "gamma1": _box_json(model.gamma1.box),
        "gamma2": _box_json(model.gamma2.box),
        "h20_product": _box_json(model.h20_product),
    }
    if zero:
        obj["projective"] = None
        obj["picard_rank"] = None
    else:
        obj["projective"] = is_projective(model)
        rank = picard_rank(model)
        obj["picard_rank"] = "unconstrained" if rank is UNCONSTRAINED else rank
    return obj


def _parse_eps(args, parser) -> Fraction:
    try:
        eps = Fraction(args.eps)
    except (ValueError, ZeroDivisionError):
        parser.error(f"--eps must be a rational, got {args.eps!r}")
    if eps <= 0:
        parser.error("--eps must be positive")
    return eps


def cmd_construct(args, parser) -> int:
    eps = _parse_eps(args, parser)
    model = _build_model(args, parser)
    if getattr(args, "reorient_after", False):
        model = reorient(model)
    return _dump_json(_model_json(model, eps), args.out)


def cmd_ns(args, parser) -> int:
    from .torus import ns_charpoly

    model = _build_model(args, parser)
    if getattr(args, "reorient_after", False):
        model = reorient(model)
    res = ns_charpoly(model)
    if isinstance(res, NotForced):
        obj = {"forced": False, "reason": res.reason}
    else:
        obj = {"forced": True, "ns_charpoly": format_poly(res)}
    return _dump_json(obj, args.out)


# ----------------------------------------------------------------------
# atlas sweep


def _sweep(degree: int, bound: int):
    rng = range(-bound, bound + 1)
    if degree == 2:
        for a in rng:
            yield (1, a, 1)
    elif degree == 4:
        for a in rng:
            for b in rng:
                yield (1, a, b, a, 1)
    else:
        for a in rng:
            for b in rng:
                for c in rng:
                    yield (1, a, b, c, b, a, 1)


def _atlas_row(coeffs):
    """One CSV row (tuple of 9 strings) for a candidate, or None if not Salem."""
    p = IntPoly.from_descending(coeffs)
    cert = is_salem(p)
    if not cert:
        return None
    report = realizable(cert)
    lam = _lambda_decimal(cert)
    fin = _finiteness_label(report)
    count = _witness_total(report)
    example = ""
    if report.witnesses:
        if isinstance(report.finiteness, InfiniteFamily):
            r = report.finiteness.r
            det = 1 if report.finiteness.sign == "+" else -1
            example = f"gl2z_model(r={r},det={det})"
        else:
            w = report.witnesses[0]
            cl = w.classes[0]
            if cl.kind == "real":
                example = f"gl2z_model(r={cl.gl_params[0]},det={cl.gl_params[1]})"
            else:
                i, j = cl.indices
                example = f"from_quartic({format_poly(w.p_poly)};pairing={i},{j})"
    types = "+".join(sorted(report.projective_types))
    ranks = "+".join(f"{k}:{v}" for k, v in sorted(report.picard_ranks))
    return (
        format_poly(p),
        str(cert.degree),
        lam,
        SHORT_CASE[report.case_tag],
        fin,
        str(count),
        example,
        types,
        ranks,
    )


def _collect_rows(degree: int, bound: int, workers: int):
    cands = list(_sweep(degree, bound))
    if workers > 1:
        chunk = max(1, len(cands) // (workers * 4))
        with ProcessPoolExecutor(max_workers=workers) as pool:
            rows = [r for r in pool.map(_atlas_row, cands, chunksize=chunk) if r is not None]
    else:
        rows = [r for r in map(_atlas_row, cands) if r is not None]
    rows.sort(key=lambda r: (int(r[1]), Fraction(r[2]), r[0]))
    return rows


def cmd_enumerate(args) -> int:
    rows = _collect_rows(args.degree, args.max_coeff, args.workers)
    if args.format == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(CSV_HEADER)
        writer.writerows(rows)
        _emit(buf.getvalue(), args.out)
        return 0
    objs = [dict(zip(CSV_HEADER, row)) for row in rows]
    return _dump_json(objs, args.out)


# ----------------------------------------------------------------------
# parser wiring


def _add_model_flags(sub):
    sub.add_argument("family", choices=("gl2z", "quad-order", "quartic", "dyadic-cm"))
    sub.add_argument("--r", type=int, default=None)
    sub.add_argument("--det", type=int, default=None)
    sub.add_argument("--d", type=int, default=None)
    sub.add_argument("--b1", type=int, default=None)
    sub.add_argument("--b2", type=int, default=None)
    sub.add_argument("--entries", default=None, help="8 ints a00,b00,a01,b01,a10,b10,a11,b11")
    sub.add_argument("--poly", default=None, help="quartic coefficients, highest first")
    sub.add_argument("--pairing", default=None, help="two root indices i,j")
    sub.add_argument("--n", type=int, default=None)
    sub.add_argument("--k", type=int, default=None)
    sub.add_argument("--eps", default="1/1000000000", help="entropy interval width target")
    sub.add_argument("--out", default=None)


def build_parser() -> _Parser:
    parser = _Parser(prog="salemtori", description=__doc__)
    subs = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    s = subs.add_parser("is-salem", help="certify a polynomial as Salem")
    s.add_argument("poly")
    s.add_argument("--out", default=None)

    s = subs.add_parser("classify", help="case, finiteness and witnesses for a Salem polynomial")
    s.add_argument("poly")
    s.add_argument("--out", default=None)

    s = subs.add_parser("wedge", help="exterior square of a monic quartic")
    s.add_argument("poly")
    s.add_argument("--out", default=None)

    s = subs.add_parser("invert-wedge", help="quartic preimages of a monic sextic")
    s.add_argument("poly")
    s.add_argument("--out", default=None)

    s = subs.add_parser("construct", help="build an explicit torus model")
    _add_model_flags(s)
    s.set_defaults(reorient_after=False)

    s = subs.add_parser("reorient", help="build a model, then flip its orientation")
    _add_model_flags(s)
    s.set_defaults(reorient_after=True)

    s = subs.add_parser("ns", help="divisor-class characteristic polynomial, when forced")
    _add_model_flags(s)
    s.add_argument("--reoriented", dest="reorient_after", action="store_true")

    s = subs.add_parser("enumerate", help="atlas sweep over bounded reciprocal polynomials")
    s.add_argument("--degree", type=int, choices=(2, 4, 6), required=True)
    s.add_argument("--max-coeff", type=int, required=True)
    s.add_argument("--out", default=None)
    s.add_argument("--format", choices=("csv", "json"), default="csv")
    s.add_argument("--workers", type=int, default=1)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "is-salem":
            return cmd_is_salem(args)
        if args.command == "classify":
            return cmd_classify(args)
        if args.command == "wedge":
            return cmd_wedge(args)
        if args.command == "invert-wedge":
            return cmd_invert_wedge(args)
        if args.command in ("construct", "reorient"):
            return cmd_construct(args, parser)
        if args.command == "ns":
            return cmd_ns(args, parser)
        if args.command == "enumerate":
            if args.max_coeff < 0:
                parser.error("--max-coeff must be nonnegative")
            if args.workers < 1:
                parser.error("--workers must be at least 1")
            return cmd_enumerate(args)
        parser.error(f"unknown command {args.command}")
    except ParseError as exc:
        sys.stderr.write(f"salemtori: parse error: {exc}\n")
        return 1
    except SalemToriError as exc:
        _dump_json({"error": {"type": type(exc).__name__, "message": str(exc)}}, None)
        return 2
    return 0


if __name__ == "__main__":
    sys.exit(main())
