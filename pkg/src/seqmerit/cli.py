"""Command-line entry point.

Every command prints one result on stdout, by default a JSON envelope
{command, inputs, result, warnings} with sorted keys. Exit codes: 0 on
success, 1 when a check or tolerance fails, 2 on usage or parse errors.
"""

from __future__ import annotations

import argparse
import csv
import datetime
import io
import json
import sys
from pathlib import Path

import numpy as np

from . import __version__
from .autocorr import autocorrelation_profile
from .designs import (
    characteristic_sequence,
    hadamard_scan,
    is_perfect,
    two_level_gamma,
    verify_difference_set,
)
from .errors import (
    DifferenceSetRejection,
    GuardError,
    NotTwoLevelError,
    SeqMeritError,
)
from .families import FAMILIES, all_ones, alternating, generate
from .merit import merit_report
from .quadrature import (
    equispaced_nodes,
    exact_l4_integral,
    exact_quadrature_result,
    golden_nodes,
    l4_samples,
    qmc_l4_integral,
)
from .search import MODES, SearchSpec, enumerate_bounded, merit_records
from .sequence import loads, render_pm, to_json_obj
from .suites import SUITES

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2

ALL_ONES_NOTE = ("all-ones L4 norm is n(2n^2+1)/3; the form n(2n+1)/3 that is "
                 "sometimes quoted undercounts for n >= 2")


class UsageError(Exception):
    pass


def _read_sequence(args):
    if getattr(args, "file", None):
        try:
            text = Path(args.file).read_text(encoding="utf-8")
        except OSError as exc:
            raise UsageError(f"cannot read {args.file}: {exc}") from None
    elif args.sequence is not None:
        text = args.sequence
    else:
        raise UsageError("give a sequence string or --file")
    return loads(text)


def _csv(rows, header) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    for row in rows:
        writer.writerow(row)
    return buf.getvalue()


def _dict_rows_csv(rows: list[dict]) -> str:
    if not rows:
        return ""
    header = list(rows[0])
    return _csv([[r[h] for h in header] for r in rows], header)


def _inputs(args) -> dict:
    skip = {"func", "format", "timestamps"}
    return {k: v for k, v in sorted(vars(args).items()) if k not in skip}


# -- commands ---------------------------------------------------------------

def cmd_analyze(args):
    s = _read_sequence(args)
    profile = autocorrelation_profile(s)
    warnings = []
    result = {"sequence": to_json_obj(s), "profile": profile.to_dict(),
              "max_sidelobe": profile.max_sidelobe, "is_perfect": is_perfect(s)}
    if s.n >= 2:
        result["merit"] = merit_report(s, qmc_nodes=args.qmc).to_dict()
    if s.is_binary and s.n >= 2:
        try:
            result["two_level_gamma"] = two_level_gamma(s)
        except NotTwoLevelError:
            result["two_level_gamma"] = None
        if s.entries in (all_ones(s.n).entries, alternating(s.n).entries):
            warnings.append(ALL_ONES_NOTE)
    samples = None
    if args.spectrum_samples:
        xs = np.arange(args.spectrum_samples) / args.spectrum_samples
        samples = l4_samples(s, xs)
        result["spectrum_samples"] = samples.tolist()
    if args.format == "csv":
        if samples is not None:
            return EXIT_OK, _csv(samples.tolist(), ["x", "abs_f_sq", "abs_f_4"]), warnings
        return EXIT_OK, profile.to_csv(), warnings
    return EXIT_OK, result, warnings


def cmd_generate(args):
    s = generate(args.family, args.param)
    if args.format == "pm":
        return EXIT_OK, render_pm(s) + "\n", []
    return EXIT_OK, to_json_obj(s), []


def cmd_integrate(args):
    s = _read_sequence(args)
    if args.method == "exact":
        q = exact_quadrature_result(s)
        result = q.to_dict()
        nodes_x = equispaced_nodes(q.N).points
    else:
        nodes = golden_nodes(args.nodes)
        q = qmc_l4_integral(s, nodes)
        exact = exact_l4_integral(s)
        result = q.to_dict()
        result["exact_value"] = exact
        result["abs_error"] = abs(q.value - exact)
        result["within_bound"] = result["abs_error"] <= q.error_bound
        nodes_x = nodes.points
    if args.samples_csv:
        rows = l4_samples(s, nodes_x)[:, [0, 2]]
        Path(args.samples_csv).write_text(_csv(rows.tolist(), ["x", "abs_f_4"]), encoding="utf-8")
    code = EXIT_OK if result.get("within_bound", True) else EXIT_FAIL
    return code, result, []


def cmd_verify_ds(args):
    try:
        members = [int(x) for x in args.set.split(",") if x.strip()]
    except ValueError:
        raise UsageError(f"--set must be comma-separated integers, got {args.set!r}") from None
    try:
        ds = verify_difference_set(members, args.v)
    except DifferenceSetRejection as exc:
        result = {"v": args.v, "k": len(set(members)), "lambda": None, "verified": False,
                  "reason": str(exc)}
        return EXIT_FAIL, result, []
    result = ds.to_dict()
    result["gamma"] = two_level_gamma(characteristic_sequence(ds), ds)
    return EXIT_OK, result, []


def cmd_hadamard_scan(args):
    rows = hadamard_scan(args.n)
    result = {"n": args.n, "count": len(rows), "rows": [render_pm(r) for r in rows]}
    if args.format == "pm":
        return EXIT_OK, "".join(render_pm(r) + "\n" for r in rows), []
    return EXIT_OK, result, []


def cmd_search(args):
    spec = SearchSpec(args.n, args.bound, args.mode, args.symmetry)
    out = enumerate_bounded(spec, workers=args.workers, allow_large=args.allow_large)
    fmt = args.format
    if args.mode == "count":
        if fmt == "json":
            return EXIT_OK, {"count": out}, []
        return EXIT_OK, f"{out}\n", []
    if args.mode == "records":
        payload = None if out is None else out.to_dict()
        if fmt == "json":
            return EXIT_OK, payload, []
        if fmt == "csv":
            rows = [] if out is None else [[payload[k] for k in ("n", "F_num", "F_den", "witness")]]
            return EXIT_OK, _csv(rows, ["n", "F_num", "F_den", "witness"]), []
        return EXIT_OK, "" if out is None else payload["witness"] + "\n", []
    lines = [render_pm(s) for s in out]
    if fmt == "json":
        return EXIT_OK, {"count": len(lines), "sequences": lines}, []
    if fmt == "csv":
        return EXIT_OK, _csv([[x] for x in lines], ["sequence"]), []
    return EXIT_OK, "".join(x + "\n" for x in lines), []


def cmd_records(args):
    recs = merit_records(args.max_n, n_min=args.min_n, allow_large=args.allow_large)
    rows = [r.to_dict() for r in recs]
    if args.format == "json":
        return EXIT_OK, rows, []
    return EXIT_OK, _csv([[r[k] for k in ("n", "F_num", "F_den", "witness")] for r in rows],
                         ["n", "F_num", "F_den", "witness"]), []


def cmd_run_suite(args):
    fn = SUITES[args.name]
    rows = fn(args.n_max) if args.name == "minimal-table" else fn()
    failing = [r for r in rows if not r["ok"]]
    code = EXIT_FAIL if failing else EXIT_OK
    warnings = [f"row failed: {json.dumps(r, sort_keys=True)}" for r in failing]
    if args.format == "csv":
        return code, _dict_rows_csv(rows), warnings
    return code, {"rows": rows, "failed": len(failing)}, warnings


# -- parser -----------------------------------------------------------------

def _positive_int(text):
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if value < 1:
        raise argparse.ArgumentTypeError("must be positive")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="seqmerit", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, formats, default, help_text):
        p = sub.add_parser(name, help=help_text)
        p.set_defaults(func=func)
        p.add_argument("--format", choices=formats, default=default)
        p.add_argument("--timestamps", action="store_true",
                       help="add a UTC timestamp to the JSON envelope")
        return p

    p = add("analyze", cmd_analyze, ["json", "csv"], "json",
            "autocorrelations and merit quantities of one sequence")
    p.add_argument("sequence", nargs="?", help="'+/-' string or JSON sequence")
    p.add_argument("--file", help="read the sequence from a file")
    p.add_argument("--qmc", type=_positive_int, default=None,
                   help="also run the QMC route with this many golden-ratio nodes")
    p.add_argument("--spectrum-samples", type=_positive_int, default=None, metavar="M",
                   help="emit |f|^2 and |f|^4 at M equispaced points")

    p = add("generate", cmd_generate, ["json", "pm"], "json", "generate a family member")
    p.add_argument("family", choices=FAMILIES)
    p.add_argument("param", type=int)

    p = add("integrate", cmd_integrate, ["json"], "json", "L4 integral of a sequence")
    p.add_argument("sequence", nargs="?")
    p.add_argument("--file")
    p.add_argument("--method", choices=["exact", "qmc"], default="exact")
    p.add_argument("--nodes", type=_positive_int, default=10**5)
    p.add_argument("--samples-csv", help="write (x, |f(x)|^4) at the nodes to this file")

    p = add("verify-ds", cmd_verify_ds, ["json"], "json", "verify a cyclic difference set")
    p.add_argument("--set", required=True, help="comma-separated residues, e.g. 1,2,4")
    p.add_argument("--v", type=int, required=True)

    p = add("hadamard-scan", cmd_hadamard_scan, ["json", "pm"], "json",
            "all circulant Hadamard rows of a given length")
    p.add_argument("--n", type=int, required=True)

    p = add("search", cmd_search, ["pm", "json", "csv"], "pm",
            "exhaustive bounded-sidelobe search")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--bound", type=float, required=True)
    p.add_argument("--mode", choices=MODES, default="enumerate")
    p.add_argument("--symmetry", action="store_true", help="canonical representatives only")
    p.add_argument("--workers", type=_positive_int, default=1)
    p.add_argument("--allow-large", action="store_true", help="lift the length guard")

    p = add("records", cmd_records, ["csv", "json"], "csv", "best merit factor per length")
    p.add_argument("--max-n", type=int, required=True)
    p.add_argument("--min-n", type=int, default=2)
    p.add_argument("--allow-large", action="store_true")

    p = add("run-suite", cmd_run_suite, ["json", "csv"], "json", "reproduce a result table")
    p.add_argument("name", choices=sorted(SUITES))
    p.add_argument("--n-max", type=int, default=16, help="largest n for minimal-table")
    return parser


def _emit(args, code, payload, warnings, stdout) -> None:
    if isinstance(payload, str):
        stdout.write(payload)
        for w in warnings:
            print(f"warning: {w}", file=sys.stderr)
        return
    envelope = {"command": args.command, "inputs": _inputs(args), "result": payload,
                "warnings": warnings}
    if args.timestamps:
        envelope["timestamp"] = datetime.datetime.now(datetime.timezone.utc).isoformat()
    stdout.write(json.dumps(envelope, sort_keys=True, allow_nan=False) + "\n")


def main(argv=None, stdout=None) -> int:
    stdout = stdout or sys.stdout
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        code, payload, warnings = args.func(args)
    except (UsageError, GuardError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except SeqMeritError as exc:
        print(f"error: {exc}", file=sys.stderr)
        if isinstance(exc, (ValueError, TypeError)):
            return EXIT_USAGE
        return EXIT_FAIL
    _emit(args, code, payload, warnings, stdout)
    return code


if __name__ == "__main__":
    sys.exit(main())
