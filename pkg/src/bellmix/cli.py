"""Command line front end.

Exit codes: 0 success, 2 parse/usage error, 3 invalid state, 4 point outside
the required region.
"""

from __future__ import annotations

import argparse
import contextlib
import csv
import json
import math
import sys

from . import chsh, measures, regions, states
from .errors import (
    BellMixError,
    NotHermitian,
    NotPSD,
    OutOfRange,
    PositivityViolation,
    TraceNotOne,
)

EXIT_OK, EXIT_PARSE, EXIT_INVALID, EXIT_DOMAIN = 0, 2, 3, 4
_VALIDATION_ERRORS = (NotHermitian, TraceNotOne, NotPSD, PositivityViolation)


class CommandError(Exception):
    def __init__(self, code, message):
        super().__init__(message)
        self.code = code


def _fmt(x) -> str:
    return "" if x is None else f"{x:.12g}"


@contextlib.contextmanager
def _sink(path):
    if path is None or path == "-":
        yield sys.stdout
    else:
        with open(path, "w", encoding="utf-8", newline="") as fh:
            yield fh


def _fmt_vector(v) -> str:
    return "(" + ", ".join(_fmt(x) for x in v) + ")"


def _read_state(path):
    try:
        with open(path, encoding="utf-8") as fh:
            payload = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise CommandError(EXIT_PARSE, f"cannot read state file {path}: {exc}") from exc
    try:
        return states.state_from_json(payload)
    except _VALIDATION_ERRORS as exc:
        failures = getattr(exc, "failures", [exc])
        detail = "; ".join(f"{type(f).__name__}: {f}" for f in failures)
        raise CommandError(EXIT_INVALID, f"invalid state in {path}: {detail}") from exc
    except (KeyError, ValueError, TypeError, IndexError) as exc:
        raise CommandError(EXIT_PARSE, f"malformed state file {path}: {exc!r}") from exc


def _write_report(out, report: dict, fmt: str):
    if fmt == "json":
        out.write(json.dumps(report, indent=2) + "\n")
        return
    width = max(len(k) for k in report)
    for key, value in report.items():
        if isinstance(value, float):
            value = _fmt(value)
        elif isinstance(value, bool):
            value = str(value).lower()
        out.write(f"{key:<{width}}  {value}\n")


def _measure_dict(rho) -> dict:
    rep = measures.measure_report(rho)
    ch = chsh.chsh_report(rho)
    return {
        "concurrence": rep.concurrence,
        "eof": rep.eof,
        "linear_entropy": rep.linear_entropy,
        "purity": rep.purity,
        "m": ch.m,
        "n": ch.n,
        "max_chsh": ch.max_chsh,
        "violates": ch.violates,
    }


# -- commands ----------------------------------------------------------------


def cmd_measures(args):
    rho = _read_state(args.state)
    with _sink(args.output) as out:
        _write_report(out, _measure_dict(rho), args.format)


def _region_point(args, parser):
    try:
        region = regions.classify((args.entropy, args.concurrence))
    except OutOfRange as exc:
        parser.error(str(exc))
    return regions.RegionPoint(args.entropy, args.concurrence), region


def cmd_classify(args, parser):
    point, region = _region_point(args, parser)
    c = point.c
    below = c <= regions.C_CRIT + regions.SNAP
    report = {
        "entropy": point.s,
        "concurrence": c,
        "region": region.value,
        "S1": regions.s1(min(c, regions.C_CRIT)) if below else None,
        "S2": regions.s2(min(c, regions.C_CRIT)) if below else None,
        "Smax": regions.s_max(c),
    }
    with _sink(args.output) as out:
        if args.format == "json":
            out.write(json.dumps(report, indent=2) + "\n")
        else:
            _write_report(out, {k: ("-" if v is None else v) for k, v in report.items()}, "text")


def cmd_witness(args, parser):
    point, region = _region_point(args, parser)
    if region is not regions.Region.LAMBDA2:
        raise CommandError(EXIT_DOMAIN, f"point lies in {region.value}, not in Lambda2; no witness pair exists")
    vbi, non_vbi = regions.witness_pair(point, args.theta)
    rows = {}
    for label, p in (("vbi", vbi), ("non_vbi", non_vbi)):
        path = f"{args.prefix}_{label}.json"
        states.save_state(path, p)
        rho = states.e0_from_params(p)
        m = chsh.horodecki_m(rho)
        rows[label] = {
            "file": path,
            "concurrence": measures.concurrence(rho),
            "linear_entropy": measures.linear_entropy(rho),
            "m": m,
            "violates": m > 1.0,
        }
    a, b = rows["vbi"], rows["non_vbi"]
    same_c = abs(a["concurrence"] - b["concurrence"]) < 1e-9
    same_s = abs(a["linear_entropy"] - b["linear_entropy"]) < 1e-9
    opposite = a["violates"] and not b["violates"]
    report = {"entropy": point.s, "concurrence": point.c, "states": rows,
              "equal_concurrence": same_c, "equal_entropy": same_s, "opposite_verdicts": opposite}
    with _sink(args.output) as out:
        if args.format == "json":
            out.write(json.dumps(report, indent=2) + "\n")
        else:
            for label, row in rows.items():
                out.write(f"[{label}]\n")
                _write_report(out, row, "text")
            _write_report(out, {"equal_concurrence": same_c, "equal_entropy": same_s,
                                "opposite_verdicts": opposite}, "text")
    if not (same_c and same_s and opposite):
        raise CommandError(1, "witness verification failed")


def family_scan_rows(s, c, samples, theta=0.0):
    point = regions.RegionPoint(s, c)
    phis = regions.sample_intervals(regions.admissible_interval(point), samples)
    rows = []
    for phi in phis:
        rho = states.e0_matrix(regions.family_state(point, theta, phi))
        m = chsh.horodecki_m(rho)
        rows.append((phi, m, m > 1.0, measures.linear_entropy(rho), measures.concurrence(rho)))
    return rows


def cmd_family_scan(args, parser):
    if args.samples < 2:
        parser.error("--samples must be at least 2")
    point, region = _region_point(args, parser)
    if region is regions.Region.OUTSIDE:
        raise CommandError(EXIT_DOMAIN, f"(s={point.s}, c={point.c}) lies outside the admissible set")
    rows = family_scan_rows(point.s, point.c, args.samples, args.theta)
    with _sink(args.output) as out:
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow(["phi", "m", "violates", "s_check", "c_check"])
        for phi, m, vbi, s_chk, c_chk in rows:
            writer.writerow([_fmt(phi), _fmt(m), str(vbi).lower(), _fmt(s_chk), _fmt(c_chk)])


def boundary_rows(samples):
    rows = []
    for k in range(1, samples + 1):
        c = k / samples
        below = c <= regions.C_CRIT
        rows.append((c, regions.s1(c) if below else None, regions.s2(c) if below else None, regions.s_max(c)))
    return rows


def cmd_boundary(args, parser):
    if args.samples < 2:
        parser.error("--samples must be at least 2")
    with _sink(args.output) as out:
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow(["c", "S1", "S2", "Smax"])
        for row in boundary_rows(args.samples):
            writer.writerow([_fmt(x) for x in row])


def cmd_chsh_opt(args, parser):
    if args.restarts < 1:
        parser.error("--restarts must be at least 1")
    rho = _read_state(args.state)
    value, op = chsh.optimize_chsh(rho, args.restarts, args.seed)
    exact = 2.0 * math.sqrt(chsh.horodecki_m(rho))
    report = {
        "optimized": value,
        "closed_form": exact,
        "gap": exact - value,
        "a": op.a.tolist(),
        "a_prime": op.a_prime.tolist(),
        "b": op.b.tolist(),
        "b_prime": op.b_prime.tolist(),
    }
    with _sink(args.output) as out:
        if args.format == "json":
            out.write(json.dumps(report, indent=2) + "\n")
        else:
            text = {k: (_fmt_vector(v) if isinstance(v, list) else v) for k, v in report.items()}
            _write_report(out, text, "text")


# -- parser ------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="bellmix",
        description="Entanglement, mixedness and CHSH violation of two-qubit E0 states.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, formats=("text", "json")):
        p.add_argument("--output", "-o", default=None, help="output path (default: stdout)")
        if formats:
            p.add_argument("--format", choices=formats, default=formats[0])

    def point(p):
        p.add_argument("--entropy", "-s", type=float, required=True, help="normalized linear entropy s")
        p.add_argument("--concurrence", "-c", type=float, required=True, help="concurrence c")

    p = sub.add_parser("measures", help="concurrence, EoF, linear entropy and CHSH data of a state file")
    p.add_argument("state", help="JSON state file")
    common(p)

    p = sub.add_parser("classify", help="region of a point (s, c)")
    point(p)
    common(p)

    p = sub.add_parser("witness", help="write a CHSH-violating / non-violating pair with equal (s, c)")
    point(p)
    p.add_argument("--theta", type=float, default=0.0)
    p.add_argument(
        "--prefix", default="witness", help="state files go to PREFIX_vbi.json and PREFIX_non_vbi.json"
    )
    common(p)

    p = sub.add_parser("family-scan", help="CSV of m(phi) along the ellipse of (s, c)")
    point(p)
    p.add_argument("--theta", type=float, default=0.0)
    p.add_argument("--samples", "-n", type=int, default=200)
    common(p, formats=None)

    p = sub.add_parser("boundary", help="CSV of the region boundaries S1, S2, Smax against c")
    p.add_argument("--samples", "-n", type=int, default=200)
    common(p, formats=None)

    p = sub.add_parser("chsh-opt", help="numerical CHSH maximization compared with the closed form")
    p.add_argument("state", help="JSON state file")
    p.add_argument("--restarts", type=int, default=50)
    p.add_argument("--seed", type=int, default=0)
    common(p)
    return parser


_COMMANDS = {
    "measures": lambda args, parser: cmd_measures(args),
    "classify": cmd_classify,
    "witness": cmd_witness,
    "family-scan": cmd_family_scan,
    "boundary": cmd_boundary,
    "chsh-opt": cmd_chsh_opt,
}


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        _COMMANDS[args.command](args, parser)
    except SystemExit as exc:
        return int(exc.code or 0)
    except CommandError as exc:
        print(f"bellmix: {exc}", file=sys.stderr)
        return exc.code
    except BellMixError as exc:
        print(f"bellmix: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_INVALID
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
