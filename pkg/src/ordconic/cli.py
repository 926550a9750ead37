"""Command-line front end.

Subcommands: stats, find-conic, oracle, gen, plot.  Documents go to stdout
(or --out) and are byte-stable across runs and --jobs settings.

Exit codes: 0 success, 2 input error, 3 unsupported field, 4 internal
invariant violation, 5 oracle budget exceeded, 6 render failure.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction
from math import comb

from . import documents as docs
from .configfile import ConfigParseError, dumps, loads
from .errors import (
    DegenerateInput,
    GenerationFailed,
    InternalInvariantViolation,
    OrdconicError,
    PreconditionViolated,
    RenderError,
    UnsupportedDegree,
    UnsupportedField,
)
from .fields import QQ, RationalField
from .finder import AllOnConic, find_ordinary_conic
from .generators import GeneratorSpec, generate
from .incidence import (
    PointConfig,
    dual_hirzebruch_check,
    incidence_profile,
    melchior_check,
    ordinary_line_bound_check,
    primal_hirzebruch_check,
)
from .oracle import (
    enumerate_ordinary_conics,
    exists_conic_through_all_bruteforce,
    find_ordinary_curves_deg_d,
    _monomial_exponents,
)
from .projective import Conic, ProjPoint
from .svgplot import render_svg

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_UNSUPPORTED_FIELD = 3
EXIT_INTERNAL = 4
EXIT_BUDGET = 5
EXIT_RENDER = 6

DEFAULT_BUDGET = 1_000_000


class _BudgetExceeded(OrdconicError):
    pass


def _load(path: str) -> PointConfig:
    with open(path, "r", encoding="utf-8") as fh:
        return loads(fh.read())


def _emit(text: str, out: str | None) -> None:
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _default_jobs() -> int:
    try:
        return max(1, int(os.environ.get("ORDCONIC_JOBS", "1")))
    except ValueError:
        return 1


def cmd_stats(args) -> int:
    cfg = _load(args.input)
    doc = {
        "command": "stats",
        "field": cfg.field.label,
        "s": str(cfg.s),
        "statistics": {},
        "inequalities": [],
        "timing": {"pairs": str(comb(cfg.s, 2))},
    }
    if cfg.s < 2:
        doc["statistics"] = {"t_k": {}, "ordinary_lines": []}
        reason = "fewer than 2 points"
        doc["inequalities"] = [
            docs.inequality_doc("melchior", None, reason),
            docs.inequality_doc("dual-hirzebruch", None, reason),
            docs.inequality_doc("line-arrangement-hirzebruch", None, reason),
            docs.bound_doc(None, reason),
        ]
        _emit(docs.render(doc), args.out)
        return EXIT_OK
    profile = incidence_profile(cfg)
    doc["statistics"] = {
        "t_k": {str(k): str(profile.tk[k]) for k in sorted(profile.tk)},
        "ordinary_lines": [
            {"line": docs.line_doc(ln), "points": [docs.point_doc(p) for p in pts]}
            for ln, pts in profile.ordinary()
        ],
    }
    reports = []
    for name, check in (
        ("melchior", lambda: melchior_check(profile)),
        ("dual-hirzebruch", lambda: dual_hirzebruch_check(profile)),
        (
            "line-arrangement-hirzebruch",
            lambda: primal_hirzebruch_check([ln for ln, _ in profile.lines]),
        ),
    ):
        try:
            reports.append(docs.inequality_doc(name, check()))
        except (PreconditionViolated, DegenerateInput) as exc:
            reports.append(docs.inequality_doc(name, None, str(exc)))
    try:
        reports.append(docs.bound_doc(ordinary_line_bound_check(cfg)))
    except PreconditionViolated as exc:
        reports.append(docs.bound_doc(None, str(exc)))
    doc["inequalities"] = reports
    _emit(docs.render(doc), args.out)
    return EXIT_OK


def cmd_find_conic(args) -> int:
    cfg = _load(args.input)
    result = find_ordinary_conic(cfg)
    doc = {
        "command": "find-conic",
        "field": cfg.field.label,
        "s": str(cfg.s),
        "result": docs.result_doc(result),
        "timing": {"points": str(cfg.s)},
    }
    _emit(docs.render(doc), args.out)
    return EXIT_OK


def _monomial_names(d: int) -> list[str]:
    names = []
    for i, j, k in _monomial_exponents(d):
        term = "".join(
            f"{v}^{e}" if e > 1 else v
            for v, e in (("x", i), ("y", j), ("z", k))
            if e > 0
        )
        names.append(term)
    return names


def cmd_oracle(args) -> int:
    cfg = _load(args.input)
    d = args.degree
    size = (d + 1) * (d + 2) // 2 - 1
    if cfg.s < size:
        raise DegenerateInput(f"need at least {size} points for degree {d}")
    total = comb(cfg.s, size)
    if total > args.budget:
        raise _BudgetExceeded(
            f"{total} subsets exceed the budget of {args.budget} "
            f"(raise it with --budget)"
        )
    jobs = args.jobs if args.jobs is not None else _default_jobs()
    doc = {
        "command": "oracle",
        "field": cfg.field.label,
        "s": str(cfg.s),
        "degree": str(d),
        "result": {},
        "certificates": [],
        "timing": {"subsets": str(total)},
    }
    if d == 2:
        certs = enumerate_ordinary_conics(cfg, jobs=jobs)
        doc["certificates"] = [docs.certificate_doc(c) for c in certs]
        doc["result"] = {
            "count": str(len(certs)),
            "all_singular": all(c.singular for c in certs) if certs else False,
            "all_smooth": all(not c.singular for c in certs) if certs else False,
        }
    else:
        curves = find_ordinary_curves_deg_d(cfg, d, jobs=jobs)
        doc["monomials"] = _monomial_names(d)
        doc["certificates"] = [
            {
                "subset": [docs.point_doc(p) for p in subset],
                "coefficients": [str(c) for c in coeffs],
            }
            for subset, coeffs in curves
        ]
        doc["result"] = {"count": str(len(curves))}
    if args.check_finder:
        if not isinstance(cfg.field, RationalField):
            raise UnsupportedField("--check-finder requires a rational configuration")
        result = find_ordinary_conic(cfg)
        if isinstance(result, AllOnConic):
            agrees = exists_conic_through_all_bruteforce(cfg) is not None
        else:
            agrees = any(
                c.subset == result.witness and c.conic == result.conic
                for c in enumerate_ordinary_conics(cfg)
            )
        doc["finder"] = docs.result_doc(result)
        doc["agrees"] = agrees
        if not agrees:
            raise InternalInvariantViolation("finder disagrees with the oracle")
    _emit(docs.render(doc), args.out)
    return EXIT_OK


def cmd_gen(args) -> int:
    params = None
    if args.params:
        params = tuple(Fraction(tok) for tok in args.params.split(","))
    spec = GeneratorSpec(
        kind=args.kind,
        n=args.n,
        seed=args.seed,
        bound=args.bound,
        p=args.p,
        params=params,
    )
    try:
        cfg = generate(spec)
    except (UnsupportedField, GenerationFailed, ValueError) as exc:
        raise DegenerateInput(str(exc)) from exc
    _emit(dumps(cfg), args.out)
    return EXIT_OK


def cmd_plot(args) -> int:
    cfg = _load(args.input)
    if not isinstance(cfg.field, RationalField):
        raise UnsupportedField("plotting requires a rational configuration")
    conic = None
    witness: tuple[ProjPoint, ...] = ()
    if args.result:
        with open(args.result, "r", encoding="utf-8") as fh:
            doc = json.load(fh)
        payload = doc.get("result", doc)
        if "conic" in payload:
            conic = Conic.make([int(v) for v in payload["conic"]], field=QQ)
        witness = tuple(
            ProjPoint.make(*(int(v) for v in triple), field=QQ)
            for triple in payload.get("witness", [])
        )
    svg = render_svg(
        cfg, conic=conic, witness=witness, chart=args.chart, resolution=args.resolution
    )
    _emit(svg, args.output)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ordconic",
        description="Exact ordinary-line and ordinary-conic toolkit.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_stats = sub.add_parser("stats", help="incidence spectrum and inequality reports")
    p_stats.add_argument("input")
    p_stats.add_argument("--out")
    p_stats.set_defaults(func=cmd_stats)

    p_find = sub.add_parser("find-conic", help="run the constructive conic finder")
    p_find.add_argument("input")
    p_find.add_argument("--out")
    p_find.set_defaults(func=cmd_find_conic)

    p_oracle = sub.add_parser("oracle", help="exhaustive ordinary-curve enumeration")
    p_oracle.add_argument("input")
    p_oracle.add_argument("--degree", type=int, default=2, choices=(1, 2, 3))
    p_oracle.add_argument("--check-finder", action="store_true")
    p_oracle.add_argument("--jobs", type=int, default=None)
    p_oracle.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    p_oracle.add_argument("--out")
    p_oracle.set_defaults(func=cmd_oracle)

    p_gen = sub.add_parser("gen", help="emit a generated configuration file")
    p_gen.add_argument(
        "--kind",
        required=True,
        choices=(
            "singular-only",
            "general-position",
            "finite-plane",
            "triangle-midpoints-centroid",
            "random",
        ),
    )
    p_gen.add_argument("--n", type=int)
    p_gen.add_argument("--seed", type=int)
    p_gen.add_argument("--bound", type=int)
    p_gen.add_argument("--p", type=int)
    p_gen.add_argument("--params", help="comma-separated rational chord parameters")
    p_gen.add_argument("--out")
    p_gen.set_defaults(func=cmd_gen)

    p_plot = sub.add_parser("plot", help="render an SVG figure")
    p_plot.add_argument("input")
    p_plot.add_argument("output")
    p_plot.add_argument("--result", help="result document to overlay (find-conic output)")
    p_plot.add_argument("--chart", choices=("x", "y", "z"), default="z")
    p_plot.add_argument("--resolution", type=int, default=160)
    p_plot.set_defaults(func=cmd_plot)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (ConfigParseError, DegenerateInput, GenerationFailed, UnsupportedDegree) as exc:
        print(f"ordconic: error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except OSError as exc:
        print(f"ordconic: error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except UnsupportedField as exc:
        print(f"ordconic: unsupported field: {exc}", file=sys.stderr)
        return EXIT_UNSUPPORTED_FIELD
    except _BudgetExceeded as exc:
        print(f"ordconic: budget exceeded: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except RenderError as exc:
        print(f"ordconic: render error: {exc}", file=sys.stderr)
        return EXIT_RENDER
    except InternalInvariantViolation as exc:
        print(f"ordconic: internal invariant violation: {exc}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
