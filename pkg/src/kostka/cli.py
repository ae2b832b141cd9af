"""Command-line interface.

Exit codes: 0 success, 2 invalid input, 3 resource cap exceeded.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from dataclasses import dataclass, field
from typing import Any, Sequence

from . import checks, counting, euler, faces, hilbert, rays
from .core import ConePoint
from .errors import ResourceLimitError, ValidationError

EXIT_OK = 0
EXIT_INVALID = 2
EXIT_RESOURCE = 3


@dataclass
class Output:
    """A command result: ``data`` for JSON, optional ``header``/``rows`` for csv and table."""

    data: Any
    header: list[str] | None = None
    rows: list[list[Any]] = field(default_factory=list)
    lines: list[str] | None = None  # JSON-lines payload, used instead of ``data``


def _render(out: Output, fmt: str) -> str:
    if fmt == "json":
        if out.lines is not None:
            return "\n".join(out.lines)
        return json.dumps(out.data)
    header, rows = out.header, out.rows
    if header is None:
        header = ["key", "value"]
        rows = [[k, json.dumps(v) if isinstance(v, (list, dict)) else v] for k, v in out.data.items()]
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(header)
        w.writerows(rows)
        return buf.getvalue().rstrip("\n")
    cells = [[str(c) for c in header]] + [["" if c is None else str(c) for c in row] for row in rows]
    widths = [max(len(row[i]) for row in cells if i < len(row)) for i in range(len(header))]
    text = []
    for j, row in enumerate(cells):
        text.append("  ".join(c.rjust(widths[i]) for i, c in enumerate(row)).rstrip())
        if j == 0:
            text.append("  ".join("-" * w for w in widths))
    return "\n".join(text)


def _caps(args) -> dict:
    return {"max_faces": args.max_faces, "time_budget": args.time_budget}


def _label(vals: Sequence[int]) -> rays.RayLabel:
    return rays.make_label(*vals)


def cmd_rays(args) -> Output:
    labels = rays.enumerate_ray_labels(args.r)
    return Output(
        {"r": args.r, "count": len(labels), "labels": [lab.to_json() for lab in labels]},
        ["a", "b", "l"],
        [list(lab) for lab in labels],
    )


def cmd_incidence(args) -> Output:
    lab = rays.check_label(args.r, _label((args.a, args.b, args.l)))
    order = {f: i for i, f in enumerate(rays.facet_ids(args.r))}
    inc = sorted(rays.facet_incidence(args.r, lab), key=order.__getitem__)
    return Output(
        {"r": args.r, "label": lab.to_json(), "facets": [f.to_json() for f in inc]},
        ["kind", "i"],
        [[f.kind, f.i] for f in inc],
    )


def cmd_faces(args) -> Output:
    caps = _caps(args)
    if args.count_only:
        if args.dim is None:
            counts = faces.face_counts(args.r, None, **caps)
        else:
            counts = faces.face_counts(args.r, [args.dim], **caps)
        return Output(
            {"r": args.r, "counts": {str(k): v for k, v in counts.items()}},
            ["dim", "count"],
            [[k, v] for k, v in counts.items()],
        )
    found = faces.enumerate_faces(args.r, args.dim, **caps)
    dumps = [f.to_json() for f in found]
    return Output(
        None,
        ["dim", "labels"],
        [[d["dim"], " ".join("(%d,%d,%d)" % tuple(lab) for lab in d["labels"])] for d in dumps],
        lines=[json.dumps(d) for d in dumps],
    )


def cmd_edge(args) -> Output:
    u, v = _label(args.labels[:3]), _label(args.labels[3:])
    ok = faces.is_edge(args.r, u, v)
    return Output({"r": args.r, "u": u.to_json(), "v": v.to_json(), "edge": ok})


def cmd_maxface(args) -> Output:
    if args.closed_form:
        if len(args.values) != 1:
            raise ValidationError("maxface --closed-form takes exactly one argument d")
        d = args.values[0]
        return Output({"d": d, "m": faces.m_closed_form(d)})
    if len(args.values) != 2:
        raise ValidationError("maxface takes arguments r d")
    r, d = args.values
    m = faces.max_face_vertices(r, d, **_caps(args))
    return Output({"r": r, "d": d, "max_vertices": m})


def _read_json(path: str) -> Any:
    try:
        if path == "-":
            return json.load(sys.stdin)
        with open(path) as fh:
            return json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise ValidationError(f"cannot read JSON from {path}: {exc}") from exc


def cmd_fit(args) -> Output:
    if args.values:
        raw = _read_json(args.values)
        if isinstance(raw, dict) and "values" in raw:
            raw = raw["values"]
        try:
            values = {int(k): int(v) for k, v in raw.items()}
        except (AttributeError, TypeError, ValueError) as exc:
            raise ValidationError("values file must map r to f_d(r)") from exc
    else:
        values = counting.enumerated_values(args.d, **_caps(args))
    poly = counting.fit_face_polynomial(args.d, values)
    data = poly.to_json()
    rows = [[k, a] for k, a in poly.coefficients()]
    if args.eval:
        data["values"] = {str(r): counting.evaluate(poly, r) for r in args.eval}
    return Output(data, ["k", "alpha"], rows)


def cmd_fvector(args) -> Output:
    f = counting.f_vector(args.r, **_caps(args))
    return Output(f.to_json(), ["k", "f"], [[k - 1, x] for k, x in enumerate(f.entries)])


def cmd_hvector(args) -> Output:
    h = counting.h_vector(args.r, **_caps(args))
    data = h.to_json()
    if args.check_conjecture:
        ok, k = counting.check_h_conjecture(args.r, h)
        data["conjecture_holds"] = ok
        data["first_failure"] = k
    if args.format == "json" and not args.check_conjecture and args.bare:
        data = list(h.entries)
    return Output(data, ["k", "h"], [[k, x] for k, x in enumerate(h.entries)])


def cmd_hb_check(args) -> Output:
    raw = _read_json(args.file)
    items = raw if isinstance(raw, list) else [raw]
    results = []
    for obj in items:
        if not isinstance(obj, dict):
            raise ValidationError(f"expected a cone point object, got {obj!r}")
        p = ConePoint.from_json(obj)
        results.append({
            "point": p.to_json(),
            "hilbert_basis": hilbert.is_hilbert_basis_element(p),
            "face_dim": hilbert.cone_face_dimension(p),
        })
    rows = [[json.dumps(r["point"]["lambda"]), json.dumps(r["point"]["mu"]), r["hilbert_basis"]] for r in results]
    data = results if isinstance(raw, list) else results[0]
    return Output(data, ["lambda", "mu", "hilbert_basis"], rows)


def cmd_initial_classify(args) -> Output:
    if args.range is not None:
        bad = hilbert.failing_pairs(args.range)
        return Output(
            {"range": args.range, "failing": [list(p) for p in bad], "count": len(bad)},
            ["lambda1", "mu1"],
            [list(p) for p in bad],
        )
    if len(args.pair) != 2:
        raise ValidationError("initial-classify takes l1 m1, or --range L")
    c = hilbert.classify_initial_pair(*args.pair)
    return Output(c.to_json())


def cmd_construct(args) -> Output:
    build = hilbert.construct_gcd1 if args.family == "gcd1" else hilbert.construct_gcd2
    r, p = build(args.l1, args.m1)
    data = p.to_json()
    data["hilbert_basis"] = hilbert.is_hilbert_basis_element(p)
    data["on_2face"] = hilbert.lies_on_2face(p)
    return Output(data)


def cmd_scan_initial(args) -> Output:
    res = hilbert.scan_initial(args.l1, args.m1, args.r, args.max_candidates, args.budget)
    return Output(res.to_json())


def cmd_probability(args) -> Output:
    iv = euler.initial_pair_probability(args.B)
    data = {"B": args.B, **iv.to_json()}
    return Output(data)


def _condition_set(text: str) -> tuple[int, ...]:
    digits = [c for c in text if c.isdigit()]
    if not digits or len(digits) != len([c for c in text if c not in ", {}"]):
        raise ValidationError(f"cannot parse condition set {text!r}")
    return tuple(int(c) for c in digits)


def cmd_density(args) -> Output:
    if args.I == "any":
        val = euler.inclusion_exclusion_estimate(args.N)
        I: Any = "any"
    else:
        I = list(_condition_set(args.I))
        val = euler.empirical_density(args.N, I)
    return Output({"N": args.N, "I": I, "density": f"{val.numerator}/{val.denominator}", "decimal": f"{float(val):.10f}"})


def cmd_table1(args) -> Output:
    t = checks.table1(args.rmax)
    dmax = 2 * args.rmax - 2
    header = ["r\\d"] + [str(d) for d in range(2, dmax + 1)]
    rows = [[r] + [t[r].get(d) for d in range(2, dmax + 1)] for r in range(2, args.rmax + 1)]
    data = {str(r): {str(d): m for d, m in t[r].items()} for r in range(2, args.rmax + 1)}
    return Output(data, header, rows)


def cmd_table2(args) -> Output:
    t = checks.table2(args.rmax, args.dmax)
    header = ["d\\r"] + [str(r) for r in range(1, args.rmax + 1)]
    rows = [[d] + [t[d][r] for r in range(1, args.rmax + 1)] for d in range(args.dmax + 1)]
    data = {str(d): {str(r): v for r, v in t[d].items()} for d in t}
    return Output(data, header, rows)


def cmd_verify_edges(args) -> Output:
    n, bad = checks.edge_mismatches(args.r)
    return Output({"r": args.r, "pairs": n, "mismatches": [[list(u), list(v)] for u, v, _, _ in bad]})


def cmd_verify_hilbert(args) -> Output:
    n, bad = checks.hilbert_disagreements(args.rmax, args.nmax)
    return Output({"rmax": args.rmax, "nmax": args.nmax, "points": n, "disagreements": [p.to_json() for p, _, _ in bad]})


def cmd_verify_constructions(args) -> Output:
    n, bad = checks.construction_failures(args.max)
    return Output({"max": args.max, "constructions": n, "failures": [p.to_json() for p in bad]})


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "csv", "table"), default="json")
    common.add_argument("--max-faces", type=int, default=None, help="face-count cap (env KOSTKA_MAX_FACES)")
    common.add_argument("--time-budget", type=float, default=None, help="seconds (env KOSTKA_TIME_BUDGET)")

    parser = argparse.ArgumentParser(prog="kostka", description="Faces and Hilbert bases of Kostka cones.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help_):
        p = sub.add_parser(name, parents=[common], help=help_)
        p.set_defaults(func=func)
        return p

    p = add("rays", cmd_rays, "list vertex labels of P_r")
    p.add_argument("r", type=int)
    p = add("incidence", cmd_incidence, "hyperplanes through a vertex")
    for name in ("r", "a", "b", "l"):
        p.add_argument(name, type=int)
    p = add("faces", cmd_faces, "enumerate faces of P_r")
    p.add_argument("r", type=int)
    p.add_argument("--dim", type=int)
    p.add_argument("--count-only", action="store_true")
    p = add("edge", cmd_edge, "decide whether two vertices span an edge")
    p.add_argument("r", type=int)
    p.add_argument("labels", type=int, nargs=6, metavar="N")
    p = add("maxface", cmd_maxface, "maximum vertex count of a d-face")
    p.add_argument("values", type=int, nargs="+", metavar="N")
    p.add_argument("--closed-form", action="store_true")
    p = add("fit", cmd_fit, "fit f_d(r) in the binomial basis")
    p.add_argument("d", type=int)
    p.add_argument("--values", help="JSON file mapping r to f_d(r)")
    p.add_argument("--eval", type=int, nargs="*", help="evaluate the fit at these r")
    p = add("fvector", cmd_fvector, "f-vector of P_r")
    p.add_argument("r", type=int)
    p = add("hvector", cmd_hvector, "h-vector of P_r")
    p.add_argument("r", type=int)
    p.add_argument("--check-conjecture", action="store_true")
    p.add_argument("--bare", action="store_true", help="print only the JSON array")
    p = add("hb-check", cmd_hb_check, "Hilbert basis membership of cone points in a JSON file")
    p.add_argument("file")
    p = add("initial-classify", cmd_initial_classify, "check the sufficient conditions for initial pairs")
    p.add_argument("pair", type=int, nargs="*")
    p.add_argument("--range", type=int)
    p = add("construct", cmd_construct, "build a Hilbert basis element")
    p.add_argument("family", choices=("gcd1", "gcd2"))
    p.add_argument("l1", type=int)
    p.add_argument("m1", type=int)
    p = add("scan-initial", cmd_scan_initial, "search K_r for a Hilbert basis element with given first entries")
    p.add_argument("l1", type=int)
    p.add_argument("m1", type=int)
    p.add_argument("r", type=int)
    p.add_argument("--budget", type=float, default=None, help="seconds")
    p.add_argument("--max-candidates", type=int, default=hilbert.DEFAULT_SCAN_CANDIDATES)
    p = add("probability", cmd_probability, "enclosure of the limiting initial-pair density")
    p.add_argument("--B", type=int, default=10**6)
    p = add("density", cmd_density, "exact density of pairs up to N meeting conditions I (e.g. 1,3 or any)")
    p.add_argument("N", type=int)
    p.add_argument("I")
    p = add("table1", cmd_table1, "maximum face sizes m(r, d)")
    p.add_argument("--rmax", type=int, default=5)
    p = add("table2", cmd_table2, "face counts f_d(r)")
    p.add_argument("--rmax", type=int, default=5)
    p.add_argument("--dmax", type=int, default=3)
    p = add("verify-edges", cmd_verify_edges, "compare the edge rule with closure and rank")
    p.add_argument("r", type=int)
    p = add("verify-hilbert", cmd_verify_hilbert, "compare the column criterion with exhaustive splitting")
    p.add_argument("--rmax", type=int, default=3)
    p.add_argument("--nmax", type=int, default=10)
    p = add("verify-constructions", cmd_verify_constructions, "check both constructions up to a bound")
    p.add_argument("--max", type=int, default=40)
    return parser


def run(argv: Sequence[str] | None = None, stdout=None) -> int:
    stdout = stdout or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code in (0, None) else EXIT_INVALID
    try:
        out = args.func(args)
    except ValidationError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except ResourceLimitError as exc:
        print(f"resource limit: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    print(_render(out, args.format), file=stdout)
    return EXIT_OK


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
