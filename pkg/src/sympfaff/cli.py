"""Command-line surface: deterministic, seedable, canonical JSON reports.

Exit codes: 0 all checks passed, 1 a verification failed, 2 usage error.
Reports for identical (command, config, seed) are byte-identical; pass
--timing to append wall-clock data (which breaks byte-identity).
"""

from __future__ import annotations

import argparse
import json
import sys
import time
import dataclasses
from dataclasses import asdict, dataclass

from .chart import chart_suite
from .oracle import (
    dimension_agreement,
    graded_ideal_dimension,
    sample_point,
    verify_points,
)
from .scalars import parse_field, scalar_to_str
from .straighten import TabCombo, exchange_straighten, symp_normal_form
from .tableaux import count_symplectic_standard_even, enumerate_symplectic_standard_even
from .indices import enumerate_even_shapes


@dataclass
class RunConfig:
    n: int
    field: str = "q"
    seed: int = 0
    degree: int | None = None
    points: int | None = None
    count: int | None = None
    shape: list[int] | None = None
    law: str | None = None
    extras: dict = dataclasses.field(default_factory=dict)

    def validate(self):
        if self.n < 4 or self.n % 2:
            raise ValueError(f"n must be an even integer >= 4, got {self.n}")
        parse_field(self.field, self.n // 2)


def canonical_json(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":")) + "\n"


def make_report(command: str, config: RunConfig, results, failures) -> dict:
    cfg = {k: v for k, v in asdict(config).items() if v not in (None, {}, [])}
    return {
        "command": command,
        "config": cfg,
        "results": results,
        "failures": failures,
    }


def _emit(report: dict, args) -> None:
    if args.timing is not None:
        report["timing"] = {"seconds": round(time.time() - args.timing, 3)}
    if args.report == "json":
        sys.stdout.write(canonical_json(report))
        return
    for line in _text_lines(report):
        print(line)


def _text_lines(report: dict):
    yield f"command: {report['command']}"
    for res in report["results"]:
        if isinstance(res, dict):
            yield "  " + ", ".join(f"{k}={v}" for k, v in sorted(res.items()))
        else:
            yield f"  {res}"
    if report["failures"]:
        for f in report["failures"]:
            yield f"FAIL: {f}"
    else:
        yield "all checks passed"


def _cmd_count(args) -> int:
    cfg = RunConfig(n=args.n, degree=args.degree)
    cfg.validate()
    value = count_symplectic_standard_even(args.degree, args.n // 2)
    _emit(make_report("count", cfg, [{"count": value}], []), args)
    return 0


def _cmd_enumerate(args) -> int:
    cfg = RunConfig(n=args.n, degree=args.degree, shape=args.shape)
    cfg.validate()
    r = args.n // 2
    if args.shape is not None:
        shapes = [tuple(args.shape)]
    elif args.degree is not None:
        shapes = enumerate_even_shapes(2 * args.degree, min(r, 2 * args.degree) if args.degree else 0)
    else:
        raise ValueError("enumerate needs --degree or --shape")
    results = []
    for shape in shapes:
        tabs = enumerate_symplectic_standard_even(shape, r)
        results.append({"shape": list(shape), "count": len(tabs),
                        "tableaux": [t.to_json() for t in tabs]})
    _emit(make_report("enumerate", cfg, results, []), args)
    return 0


def _cmd_straighten(args) -> int:
    cfg = RunConfig(n=args.n, law=args.law)
    cfg.validate()
    raw = sys.stdin.read() if args.input == "-" else open(args.input).read()
    combo = TabCombo.from_json(args.n // 2, json.loads(raw))
    out = symp_normal_form(combo) if args.law == "symplectic" else exchange_straighten(combo)
    if args.report == "text":
        # bare combo JSON so straighten output can be piped back in
        sys.stdout.write(canonical_json(out.to_json()))
        return 0
    _emit(make_report("straighten", cfg, [{"combo": out.to_json()}], []), args)
    return 0


def _cmd_dim(args) -> int:
    cfg = RunConfig(n=args.n, degree=args.degree, field=args.field)
    cfg.validate()
    fld = parse_field(args.field, args.n // 2)
    if args.check:
        res = dimension_agreement(args.n, args.degree, fld)
        failures = [] if res["agree"] else [
            f"dim {res['dim']} != tableau count {res['count']}"
        ]
        _emit(make_report("dim", cfg, [res], failures), args)
        return 0 if res["agree"] else 1
    value = graded_ideal_dimension(args.n, args.degree, fld)
    _emit(make_report("dim", cfg, [{"dim": value}], []), args)
    return 0


def _cmd_verify(args) -> int:
    cfg = RunConfig(n=args.n, points=args.points, seed=args.seed)
    cfg.validate()
    agg = verify_points(args.n, args.points, args.seed)
    failures = []
    for rep in agg["reports"]:
        for fam in rep["families"]:
            for msg in fam["failures"]:
                failures.append(f"point {rep['point_index']}, {fam['name']}: {msg}")
    summary = {
        "points": agg["points"],
        "pass": agg["pass"],
        "families": sorted({f["name"] for rep in agg["reports"] for f in rep["families"]}),
        "instances": sum(f["instances"] for rep in agg["reports"] for f in rep["families"]),
    }
    _emit(make_report("verify", cfg, [summary], failures), args)
    return 0 if agg["pass"] else 1


def _cmd_sample(args) -> int:
    cfg = RunConfig(n=args.n, seed=args.seed)
    cfg.validate()
    y = sample_point(args.n, args.seed)
    matrix = [[scalar_to_str(x) for x in row] for row in y]
    _emit(make_report("sample", cfg, [{"matrix": matrix}], []), args)
    return 0


def _cmd_chart(args) -> int:
    cfg = RunConfig(n=args.n, seed=args.seed, count=args.count)
    cfg.validate()
    if args.n % 4:
        raise ValueError("chart needs n divisible by 4")
    agg = chart_suite(args.n, args.seed, args.count)
    failures = [
        f"datum {e['index']}: trace={e['trace_identity']} point_ok={e['point_ok']} "
        f"f_nonzero={e['f_nonzero']}"
        for e in agg["results"]
        if not e["pass"]
    ]
    summary = {"count": agg["count"], "pass": agg["pass"]}
    _emit(make_report("chart", cfg, [summary], failures), args)
    return 0 if agg["pass"] else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sympfaff",
        description="Exact pfaffian algebra and symplectic tableau bases, with "
        "brute-force verification at desk scale.",
    )
    shared = argparse.ArgumentParser(add_help=False)
    shared.add_argument("--report", choices=["text", "json"], default="text")
    shared.add_argument("--timing", action="store_true",
                        help="append wall-clock timing to the report")
    sub = parser.add_subparsers(dest="command", required=True,
                                parser_class=lambda **kw: argparse.ArgumentParser(
                                    parents=[shared], **kw))

    def common(p, seed=False):
        p.add_argument("--n", type=int, required=True, help="matrix size (even, >= 4)")
        if seed:
            p.add_argument("--seed", type=int, default=0)

    p = sub.add_parser("count", help="number of basis tableaux of a degree")
    common(p)
    p.add_argument("--degree", type=int, required=True)
    p.set_defaults(func=_cmd_count)

    p = sub.add_parser("enumerate", help="list basis tableaux")
    common(p)
    p.add_argument("--degree", type=int)
    p.add_argument("--shape", type=lambda s: [int(x) for x in s.split(",")])
    p.set_defaults(func=_cmd_enumerate)

    p = sub.add_parser("straighten", help="normal form of a tableau combination (JSON)")
    common(p)
    p.add_argument("--law", choices=["symplectic", "exchange"], default="symplectic")
    p.add_argument("--input", default="-", help="path or - for stdin")
    p.set_defaults(func=_cmd_straighten)

    p = sub.add_parser("dim", help="graded dimension by exact elimination")
    common(p)
    p.add_argument("--degree", type=int, required=True)
    p.add_argument("--field", default="q", help="q or fp:P with P prime > r")
    p.add_argument("--check", action="store_true",
                   help="also compare against the tableau count")
    p.set_defaults(func=_cmd_dim)

    p = sub.add_parser("verify", help="relation suite at sampled points")
    common(p, seed=True)
    p.add_argument("--points", type=int, default=10)
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("sample", help="sample an exact point of the scheme")
    common(p, seed=True)
    p.set_defaults(func=_cmd_sample)

    p = sub.add_parser("chart", help="random chart data and their points")
    common(p, seed=True)
    p.add_argument("--count", type=int, default=10)
    p.set_defaults(func=_cmd_chart)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    args.timing = time.time() if args.timing else None
    try:
        return args.func(args)
    except (ValueError, FileNotFoundError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
