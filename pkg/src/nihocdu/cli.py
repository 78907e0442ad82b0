"""Command line front end.

Data records go to stdout (or --out) as JSON lines or CSV; progress goes to
stderr. Exit codes: 0 success, 1 verification failure, 2 bad input.
"""
from __future__ import annotations

import argparse
import csv
import json
import logging
import sys
from functools import partial

from . import cdiff, circle, niho, quad
from .field import FieldError, FieldSpec, from_hex, make_field, to_hex
from .parallel import parallel_map

log = logging.getLogger("nihocdu")  # parent of nihocdu.parallel


class UsageError(Exception):
    pass


def _int_list(s: str) -> list[int]:
    try:
        return [int(t) for t in s.split(",") if t.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {s!r}")


def _pair_list(s: str) -> list[tuple[int, int]]:
    try:
        return [tuple(int(v) for v in t.split(":")) for t in s.split(",") if t.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected m:k pairs like 3:2,5:10, got {s!r}")


def _field(args) -> FieldSpec:
    if args.n is None:
        raise UsageError("--n is required")
    poly = from_hex(args.poly) if args.poly else None
    return make_field(args.n, poly)


def select_c(F: FieldSpec, selector: str) -> list[int]:
    sel = selector.strip().lower()
    if sel == "all":
        return list(F.elements())
    if sel in ("circle", "non-circle"):
        mu = set(circle.unit_circle(F))
        if sel == "circle":
            return sorted(mu - {1})
        return [c for c in F.elements() if c not in mu and c != 1]
    return [F.check(from_hex(t)) for t in sel.split(",")]


class Writer:
    def __init__(self, fmt: str, stream, columns: list[str] | None = None):
        self.fmt = fmt
        self.stream = stream
        self.columns = columns
        self._csv = None

    def write(self, rec: dict):
        if self.fmt == "json":
            self.stream.write(json.dumps(rec, sort_keys=False) + "\n")
            return
        if self._csv is None:
            cols = self.columns or list(rec)
            self._csv = csv.DictWriter(self.stream, fieldnames=cols, extrasaction="ignore",
                                       lineterminator="\n")
            self._csv.writeheader()
        self._csv.writerow({k: json.dumps(v) if isinstance(v, (list, dict)) else v
                            for k, v in rec.items()})

    def write_row(self, row):
        if self._csv is None:
            self._csv = csv.writer(self.stream, lineterminator="\n")
            self._csv.writerow(self.columns)
        self._csv.writerow(row)


# ---------------------------------------------------------------------------
# subcommands; each returns an exit code

def cmd_field_info(args, out: Writer) -> int:
    F = _field(args)
    rec = F.to_dict()
    rec["subfield_degrees"] = [k for k in range(1, F.n + 1) if F.n % k == 0]
    rec["generator"] = to_hex(F.generator)
    if F.m is not None:
        rec["circle_size"] = len(circle.unit_circle(F))
    out.write(rec)
    return 0


def _spectrum_one(n, poly, d, c):
    F = make_field(n, poly)
    return cdiff.spectrum(cdiff.PowerFunc.make(F, d), c)


def cmd_spectrum(args, out: Writer) -> int:
    F = _field(args)
    if args.d is None or args.d < 1:
        raise UsageError("--d must be a positive integer")
    cs = select_c(F, args.c or "all")
    reps = parallel_map(partial(_spectrum_one, F.n, F.poly, args.d),
                        [(c,) for c in cs], args.jobs, "spectrum")
    for rep in reps:
        if out.fmt == "csv":
            for row in rep.csv_rows():
                out.write_row(row)
        else:
            out.write(rep.to_json())
    return 0


def _load_table(path: str, F: FieldSpec):
    with open(path) as fh:
        text = fh.read()
    try:
        vals = json.loads(text)
        vals = [from_hex(v) if isinstance(v, str) else int(v) for v in vals]
    except json.JSONDecodeError:
        vals = [from_hex(t) for t in text.split()]
    if len(vals) != F.order:
        raise UsageError(f"lookup table has {len(vals)} entries, expected {F.order}")
    for v in vals:
        F.check(v)
    return vals


def cmd_cdu(args, out: Writer) -> int:
    F = _field(args)
    if args.table:
        table, d = _load_table(args.table, F), None
    else:
        if args.d is None or args.d < 1:
            raise UsageError("give --d or --table")
        table, d = cdiff.PowerFunc.make(F, args.d), args.d
    for c in select_c(F, args.c or "all"):
        out.write({"n": F.n, "d": d, "c": to_hex(c),
                   "uniformity": cdiff.cdu_general(F, table, c)})
    return 0


def cmd_verify_theorem1(args, out: Writer) -> int:
    pairs = args.pairs or [(m, k) for m in args.m for k in args.k]
    work, skipped = niho.theorem1_jobs(pairs)
    for s in skipped:
        log.warning("skipping m=%d k=%d: %s", s["m"], s["k"], s["skipped"])
    fn = niho.brute_record if args.brute_only else niho.verify_record
    recs = parallel_map(fn, work, args.jobs, "verify-theorem1")
    for r in recs:
        out.write(r)
    if out.fmt == "json":
        for s in skipped:
            out.write(s)
    return 0 if all(r["pass"] for r in recs) else 1


def cmd_verify_table1(args, out: Writer) -> int:
    n_max = args.n if args.n is not None else 6
    checks = cdiff.verify_catalog(cdiff.TABLE1, n_max)
    for ch in checks:
        out.write(ch.to_json())
    for row in cdiff.TABLE1:
        if row.note:
            log.warning("%s: %s", row.name, row.note)
    return 0 if all(ch.status != "fail" for ch in checks) else 1


def cmd_remark_experiments(args, out: Writer) -> int:
    if len(args.m) != 1 or len(args.k) != 1:
        raise UsageError("remark-experiments takes a single --m and --k")
    p = niho.make_params(args.m[0], args.k[0], experimental=True)
    default = "circle" if p.m % 2 == 0 else "non-circle"
    recs = niho.remark_experiments(p, select_c(p.field, args.c or default))
    for r in recs:
        out.write(r)
    return 0 if all(r.get("in_expected", True) for r in recs) else 1


def cmd_polar(args, out: Writer) -> int:
    F = _field(args)
    if args.x is None:
        raise UsageError("--x is required")
    x = F.check(from_hex(args.x))
    pf = circle.polar_decompose(F, x)
    rec = {"x": to_hex(x), "alpha": to_hex(pf.alpha), "u": to_hex(pf.u)}
    if not F.in_subfield(x, F.m):
        uv = circle.phi_inv(F, x)
        rec["pair_u"], rec["pair_v"] = to_hex(uv.u), to_hex(uv.v)
    out.write(rec)
    return 0


def cmd_quad_roots(args, out: Writer) -> int:
    F = _field(args)
    if args.r is None:
        raise UsageError("--r is required")
    coef = [F.check(from_hex(v or "0")) for v in (args.a, args.b, args.c)]
    q = quad.QuadPoly(args.r, *coef)
    roots = quad.roots_in_field(F, q)
    rec = {"n": F.n, "r": q.r, "a": to_hex(q.a), "b": to_hex(q.b), "c": to_hex(q.c),
           "roots": [to_hex(x) for x in roots], "count": len(roots)}
    if F.m is not None:
        cr = quad.roots_in_circle(F, q)
        rec["circle_roots"] = [to_hex(x) for x in cr]
        rec["circle_count"] = len(cr)
    out.write(rec)
    return 0


COMMANDS = {
    "field-info": (cmd_field_info, None),
    "spectrum": (cmd_spectrum, ["c_hex", "b_hex", "count"]),
    "cdu": (cmd_cdu, ["n", "d", "c", "uniformity"]),
    "verify-theorem1": (cmd_verify_theorem1, ["m", "k", "s", "d", "c_hex",
                                              "structural_uniformity", "brute_uniformity",
                                              "expected", "pass"]),
    "verify-table1": (cmd_verify_table1, ["row", "n", "k", "d", "c", "uniformity",
                                          "expected", "status"]),
    "remark-experiments": (cmd_remark_experiments, ["m", "k", "d", "c_hex", "uniformity",
                                                    "on_circle", "expected_set", "in_expected"]),
    "polar": (cmd_polar, ["x", "alpha", "u", "pair_u", "pair_v"]),
    "quad-roots": (cmd_quad_roots, ["n", "r", "a", "b", "c", "roots", "count",
                                    "circle_roots", "circle_count"]),
}


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="nihocdu",
                                 description="c-differential uniformity of power functions on GF(2^n)")
    sub = ap.add_subparsers(dest="command", required=True)
    for name in COMMANDS:
        p = sub.add_parser(name)
        p.add_argument("--n", type=int, help="field degree (n_max for verify-table1)")
        p.add_argument("--m", type=_int_list, default=[3], help="comma list of m values")
        p.add_argument("--k", type=_int_list, default=[2], help="comma list of k values")
        p.add_argument("--d", type=int, help="exponent (decimal)")
        p.add_argument("--poly", help="reduction polynomial, hex")
        p.add_argument("--c", help="hex value(s), or circle | all | non-circle; "
                                   "for quad-roots the constant coefficient")
        p.add_argument("--format", choices=["json", "csv"], default="json")
        p.add_argument("--jobs", type=int, default=1)
        p.add_argument("--out", help="output file (default stdout)")
        p.add_argument("-v", "--verbose", action="store_true")
        if name == "polar":
            p.add_argument("--x", help="element, hex")
        if name == "quad-roots":
            p.add_argument("--r", type=int)
            p.add_argument("--a")
            p.add_argument("--b")
        if name == "cdu":
            p.add_argument("--table", help="lookup table file: JSON list or whitespace-separated hex")
        if name == "verify-theorem1":
            p.add_argument("--pairs", type=_pair_list,
                           help="explicit m:k pairs, overrides the --m x --k product")
            p.add_argument("--brute-only", action="store_true",
                           help="skip the structural solver")
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    handler = logging.StreamHandler(sys.stderr)
    handler.setFormatter(logging.Formatter("%(levelname)s %(message)s"))
    log.addHandler(handler)
    log.setLevel(logging.INFO if args.verbose else logging.WARNING)
    log.propagate = False
    fn, columns = COMMANDS[args.command]
    stream = open(args.out, "w", newline="") if args.out else sys.stdout
    try:
        return fn(args, Writer(args.format, stream, columns))
    except (UsageError, FieldError, niho.ParamError, ValueError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    finally:
        log.removeHandler(handler)
        if args.out:
            stream.close()


if __name__ == "__main__":
    sys.exit(main())
