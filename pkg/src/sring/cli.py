"""Command-line interface: validation, analysis, separability, duality, suites."""

from __future__ import annotations

import argparse
import json
import sys
import time
from dataclasses import dataclass, field

from .core import SRing, a_subgroups, closure
from .duality import dual_sring
from .errors import LimitExceeded, SRingError, ValidationError
from .multipliers import SeparabilityReport, is_separable
from .oracle import enumerate_srings, is_separable_bruteforce
from .sections import (
    ProjClass,
    frs0,
    is_quasidense,
    principal_sections,
    ring_sections,
    singular_witness,
)
from .verify import SUITES, run_suite

__all__ = ["AnalysisReport", "analyze", "main"]


@dataclass(frozen=True)
class AnalysisReport:
    """Pure projection of the structural invariants of one ring."""

    n: int
    rank: int
    subgroups: tuple[int, ...]
    section_count: int
    principal: tuple[tuple[int, int], ...]
    distinguished: tuple[tuple[int, int], ...]
    quasidense: bool
    witness: ProjClass | None
    separability: SeparabilityReport
    timings: dict[str, float] = field(compare=False)

    def to_json_dict(self) -> dict:
        # Timings are deliberately omitted so output stays byte-identical.
        data = {
            "n": self.n,
            "rank": self.rank,
            "a_subgroups": list(self.subgroups),
            "sections": self.section_count,
            "principal_sections": [{"l": l, "u": u} for l, u in self.principal],
            "frs0": [{"l": l, "u": u} for l, u in self.distinguished],
            "quasidense": self.quasidense,
            "separability": self.separability.to_json_dict(),
        }
        if self.witness is not None:
            data["singular_witness"] = {
                "members": [s.to_json_dict() for s in self.witness.members],
                "smallest": self.witness.smallest.to_json_dict(),
                "largest": self.witness.largest.to_json_dict(),
            }
        return data


def analyze(a: SRing) -> AnalysisReport:
    """Assemble the full structural report for one ring."""
    timings: dict[str, float] = {}

    def timed(key, func, *args):
        t0 = time.perf_counter()
        out = func(*args)
        timings[key] = time.perf_counter() - t0
        return out

    sections = timed("sections", ring_sections, a)
    principal = timed("principal", principal_sections, a)
    distinguished = timed("frs0", frs0, a)
    quasidense = timed("quasidense", is_quasidense, a)
    witness = None if quasidense else timed("witness", singular_witness, a)[0]
    _, report = timed("separability", is_separable, a)
    return AnalysisReport(
        n=a.n,
        rank=a.rank,
        subgroups=a_subgroups(a),
        section_count=len(sections),
        principal=tuple((s.l, s.u) for s in principal),
        distinguished=tuple(sorted((s.l, s.u) for s in distinguished)),
        quasidense=quasidense,
        witness=witness,
        separability=report,
        timings=timings,
    )


# -- plumbing -----------------------------------------------------------------


def _read_sring(path: str) -> SRing:
    text = sys.stdin.read() if path == "-" else open(path, encoding="utf-8").read()
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ValidationError(f"not valid JSON: {exc}") from exc
    return SRing.from_json_dict(data)


def _emit(data: dict) -> None:
    print(json.dumps(data, sort_keys=True, separators=(",", ":")))


def _parse_seed_sets(text: str) -> list[list[int]]:
    if not text.strip():
        return []
    try:
        return [
            [int(part) for part in chunk.split(",") if part.strip()]
            for chunk in text.split(";")
            if chunk.strip()
        ]
    except ValueError as exc:
        raise ValidationError(f"malformed seed sets {text!r}: {exc}") from exc


def _section_text(pairs) -> str:
    return " ".join(f"({l},{u})" for l, u in pairs)


# -- subcommands ---------------------------------------------------------------


def _cmd_validate(args: argparse.Namespace) -> int:
    a = _read_sring(args.input)
    if args.json:
        _emit({"ok": True, "n": a.n, "rank": a.rank})
    else:
        print(f"ok: S-ring over Z_{a.n} with rank {a.rank}")
    return 0


def _cmd_closure(args: argparse.Namespace) -> int:
    seeds = _parse_seed_sets(args.seed_sets)
    a = closure(args.n, seeds)
    if args.json:
        _emit(a.to_json_dict())
    else:
        print(f"closure over Z_{a.n}: rank {a.rank}")
        for cls in a.classes:
            print("  " + ",".join(str(x) for x in cls))
    return 0


def _cmd_analyze(args: argparse.Namespace) -> int:
    report = analyze(_read_sring(args.input))
    if args.json:
        _emit(report.to_json_dict())
        return 0
    print(f"n={report.n} rank={report.rank}")
    print(f"subgroup orders: {' '.join(str(d) for d in report.subgroups)}")
    print(f"sections: {report.section_count}")
    print(f"principal sections: {_section_text(report.principal)}")
    print(f"distinguished sections: {_section_text(report.distinguished)}")
    print(f"quasidense: {report.quasidense}")
    if report.witness is not None:
        s = report.witness.smallest
        print(f"singular witness: smallest member ({s.l},{s.u})")
    sep = report.separability
    print(
        f"multipliers: {sep.mult_order}, outer: {sep.fmult_order},"
        f" projected: {sep.theta_image_order}"
    )
    print(f"separable: {sep.separable}")
    return 0


def _cmd_separability(args: argparse.Namespace) -> int:
    a = _read_sring(args.input)
    decided, report = is_separable(a)
    data = report.to_json_dict()
    agrees = True
    if args.oracle:
        forced = is_separable_bruteforce(a)
        agrees = forced == decided
        data["oracle"] = forced
        data["agrees"] = agrees
    if args.json:
        _emit(data)
    else:
        print(f"separable: {decided}")
        if args.oracle:
            print(f"oracle: {data['oracle']} ({'agrees' if agrees else 'DISAGREES'})")
    return 0 if agrees else 1


def _cmd_dual(args: argparse.Namespace) -> int:
    d = dual_sring(_read_sring(args.input))
    if args.json:
        _emit(d.to_json_dict())
    else:
        print(f"dual S-ring over Z_{d.n}: rank {d.rank}")
        for cls in d.classes:
            print("  " + ",".join(str(x) for x in cls))
    return 0


def _cmd_enumerate(args: argparse.Namespace) -> int:
    if args.max_n is None:
        rings = enumerate_srings(args.n)
    else:
        rings = enumerate_srings(args.n, max_n=args.max_n)
    witnesses = []
    if args.report_nonseparable:
        witnesses = [a for a in rings if not is_separable(a)[0]]
    if args.json:
        data = {
            "n": args.n,
            "count": len(rings),
            "srings": [a.to_json_dict() for a in rings],
        }
        if args.report_nonseparable:
            data["nonseparable"] = [a.to_json_dict() for a in witnesses]
        _emit(data)
        return 0
    print(f"{len(rings)} S-rings over Z_{args.n}")
    for a in rings:
        print("  " + " | ".join(",".join(str(x) for x in cls) for cls in a.classes))
    if args.report_nonseparable:
        print(f"non-separable: {len(witnesses)}")
        for a in witnesses:
            print(
                "  " + " | ".join(",".join(str(x) for x in cls) for cls in a.classes)
            )
    return 0


def _cmd_verify(args: argparse.Namespace) -> int:
    result = run_suite(args.suite, args.max_n)
    if args.json:
        _emit(result.to_json_dict())
    else:
        for check in result.checks:
            mark = "ok  " if check.passed else "FAIL"
            print(f"{mark} {result.suite} {check.name}: {check.detail}")
        print(f"{result.suite}: {'passed' if result.passed else 'FAILED'}")
    return 0 if result.passed else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sring",
        description="Schur rings over cyclic groups: structure and separability.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def with_input(p):
        p.add_argument("input", help="path to an S-ring JSON file, or - for stdin")
        p.add_argument("--json", action="store_true", help="emit canonical JSON")

    p = sub.add_parser("validate", help="check the S-ring axioms")
    with_input(p)
    p.set_defaults(func=_cmd_validate)

    p = sub.add_parser("closure", help="smallest S-ring containing the seed sets")
    p.add_argument("n", type=int, help="order of the underlying cyclic group")
    p.add_argument(
        "--seed-sets",
        default="",
        help='seed subsets as semicolon-separated residue lists, e.g. "1,4;2,3"',
    )
    p.add_argument("--json", action="store_true", help="emit canonical JSON")
    p.set_defaults(func=_cmd_closure)

    p = sub.add_parser("analyze", help="structural report for one ring")
    with_input(p)
    p.set_defaults(func=_cmd_analyze)

    p = sub.add_parser("separability", help="decide separability via multipliers")
    with_input(p)
    p.add_argument(
        "--oracle",
        action="store_true",
        help="cross-check against the brute-force isomorphism search",
    )
    p.set_defaults(func=_cmd_separability)

    p = sub.add_parser("dual", help="dual ring from exact character sums")
    with_input(p)
    p.set_defaults(func=_cmd_dual)

    p = sub.add_parser("enumerate", help="all S-rings over Z_n")
    p.add_argument("n", type=int, help="order of the underlying cyclic group")
    p.add_argument("--json", action="store_true", help="emit canonical JSON")
    p.add_argument("--max-n", type=int, default=None, help="enumeration size limit")
    p.add_argument(
        "--report-nonseparable",
        action="store_true",
        help="also list any non-separable rings found",
    )
    p.set_defaults(func=_cmd_enumerate)

    p = sub.add_parser("verify", help="run a theorem-verification suite")
    p.add_argument("suite", choices=sorted(SUITES), help="suite name")
    p.add_argument("--json", action="store_true", help="emit canonical JSON")
    p.add_argument("--max-n", type=int, default=None, help="override the suite bound")
    p.set_defaults(func=_cmd_verify)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except LimitExceeded as exc:
        print(f"limit exceeded: {exc}", file=sys.stderr)
        return 3
    except FileNotFoundError as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return 2
    except SRingError as exc:
        print(f"input error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
