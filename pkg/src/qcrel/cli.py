"""Command-line surface: structure checks, enumeration, and algorithm runs.

Verbs:
  verify-structure --groupoid SPEC          check the five basis laws
  enumerate --from SPEC --to SPEC           list classical relations (JSON lines)
  check-relation --from SPEC --to SPEC --rel FILE   print all five predicates
  dj --pairA PAIR --pairB PAIR --oracle FILE
  grover --pairS PAIR --pairB PAIR --oracle FILE --sigma INDEX
  homid --pairS PAIR --pairB PAIR --oracle FILE --sigma INDEX

Outputs are deterministic: pair lists are sorted and JSON keys have a fixed
order, so identical inputs produce byte-identical output.  QCREL_THREADS
caps enumeration parallelism without affecting results.  Exit codes: 0 ok,
1 input error, 2 verification property violated.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Optional, Sequence

from .algorithms import (
    DJInstance,
    GroverInstance,
    HomIDInstance,
    RunReport,
    dj_run,
    grouphomid_run,
    grover_run,
)
from .groupoids import (
    ComplementaryPair,
    parse_groupoid_spec,
    parse_pair_spec,
    verify_classical_structure,
)
from .hom_relations import (
    StructuredRel,
    enumerate_classical_relations,
    is_classical_relation,
    is_groupoid_hom_relation,
    is_monoid_hom_relation,
    is_self_conjugate,
    is_surjective_on_objects,
)
from .relations import FinRel


def parse_relation_file(path: str | Path) -> FinRel:
    """Load a relation from the JSON interchange format, with validation."""
    text = Path(path).read_text(encoding="utf-8")
    return FinRel.from_json(text)


def emit_report(report: RunReport, mode: str = "human") -> str:
    """Render a run report as JSON or a small human-readable summary."""
    payload = report.to_json_dict()
    if mode == "json":
        return json.dumps(payload)
    lines = [f"algorithm: {payload['algorithm']}"]
    for key, value in payload["instance"].items():
        lines.append(f"  {key}: {json.dumps(value)}")
    if report.algorithm == "dj":
        scalar = "possible" if payload["scalars"]["composite"] else "impossible"
        lines.append(f"decision: {payload['decision'].upper()} (scalar {scalar})")
        lines.append(f"output: {payload['possible_outcomes'][0]}")
    else:
        lines.append("possible outcomes:")
        for members in payload["possible_outcomes"]:
            lines.append(f"  {members}")
        if not payload["possible_outcomes"]:
            lines.append("  (none)")
    diag = payload["diagnostics"]
    lines.append(
        "diagnostics: "
        f"oracle_unitary={diag['oracle_unitary']} "
        f"diffusion_unitary={diag['diffusion_unitary']} "
        f"queries={diag['queries']}"
    )
    return "\n".join(lines)


def _parse_pair_argument(spec: str, recode: Optional[str]) -> ComplementaryPair:
    pair = parse_pair_spec(spec)
    if recode is None:
        return pair
    try:
        perm = [int(v) for v in recode.split(",")]
    except ValueError as exc:
        raise ValueError(f"recode must be a comma-separated permutation, got {recode!r}") from exc
    return ComplementaryPair(pair.g, pair.h, x_recode=perm)


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="qcrel", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="verb", required=True)

    p = sub.add_parser("verify-structure", help="check the five classical-structure laws")
    p.add_argument("--groupoid", required=True, help="groupoid spec, e.g. Z2^2")
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("enumerate", help="list all classical relations between two groupoids")
    p.add_argument("--from", dest="source", required=True, help="source groupoid spec")
    p.add_argument("--to", dest="target", required=True, help="target groupoid spec")
    p.add_argument("--budget", type=int, default=24, help="max candidate-space bits")
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("check-relation", help="evaluate all five predicates for a relation")
    p.add_argument("--from", dest="source", required=True)
    p.add_argument("--to", dest="target", required=True)
    p.add_argument("--rel", required=True, help="relation file (JSON)")
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("dj", help="run the constant-vs-balanced distinguisher")
    p.add_argument("--pairA", required=True, help="pair spec, e.g. pair(Z2,Z2)")
    p.add_argument("--pairB", required=True)
    p.add_argument("--oracle", required=True, help="blackbox relation file (JSON)")
    p.add_argument("--recodeA", help="advanced: explicit X recoding for system A")
    p.add_argument("--recodeB", help="advanced: explicit X recoding for system B")
    p.add_argument("--unchecked", action="store_true",
                   help="skip the classical-relation check on the blackbox")
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("grover", help="run the single-step search")
    p.add_argument("--pairS", required=True)
    p.add_argument("--pairB", required=True)
    p.add_argument("--oracle", required=True)
    p.add_argument("--sigma", type=int, required=True,
                   help="index of the marking X_B-classical state")
    p.add_argument("--recodeS", help="advanced: explicit X recoding for system S")
    p.add_argument("--recodeB", help="advanced: explicit X recoding for system B")
    p.add_argument("--unchecked", action="store_true",
                   help="skip the classical-relation check on the indicator")
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("homid", help="run the homomorphism identification step")
    p.add_argument("--pairS", required=True)
    p.add_argument("--pairB", required=True)
    p.add_argument("--oracle", required=True)
    p.add_argument("--sigma", type=int, required=True)
    p.add_argument("--recodeS", help="advanced: explicit X recoding for system S")
    p.add_argument("--recodeB", help="advanced: explicit X recoding for system B")
    p.add_argument("--unchecked", action="store_true",
                   help="skip the classical-relation check on the blackbox")
    p.add_argument("--json", action="store_true")

    return parser


def _sigma_state(pair: ComplementaryPair, index: int):
    states = pair.x_classical_states()
    if not (0 <= index < len(states)):
        raise ValueError(f"sigma index {index} out of range: {len(states)} classical states")
    return states[index]


def _cmd_verify_structure(args) -> int:
    z = parse_groupoid_spec(args.groupoid)
    report = verify_classical_structure(z)
    if args.json:
        print(json.dumps({"groupoid": z.spec(), "laws": report.as_dict(),
                          "all_ok": report.all_ok}))
    else:
        for law, ok in report.as_dict().items():
            print(f"{law}: {'ok' if ok else 'FAILED'}")
    return 0 if report.all_ok else 2


def _cmd_enumerate(args) -> int:
    source = parse_groupoid_spec(args.source)
    target = parse_groupoid_spec(args.target)
    for rel in enumerate_classical_relations(source, target, max_candidate_bits=args.budget):
        print(rel.to_json())
    return 0


def _cmd_check_relation(args) -> int:
    source = parse_groupoid_spec(args.source)
    target = parse_groupoid_spec(args.target)
    rel = parse_relation_file(args.rel)
    s = StructuredRel(rel, source, target)
    verdicts = {
        "groupoid_hom": is_groupoid_hom_relation(s),
        "surjective_on_objects": is_surjective_on_objects(s),
        "monoid_hom": is_monoid_hom_relation(s),
        "classical": is_classical_relation(s),
        "self_conjugate": is_self_conjugate(s),
    }
    if args.json:
        print(json.dumps({"from": source.spec(), "to": target.spec(),
                          "rel": rel.to_json_dict(), "predicates": verdicts}))
    else:
        for name, ok in verdicts.items():
            print(f"{name}: {str(ok).lower()}")
    return 0


def _cmd_dj(args) -> int:
    pair_a = _parse_pair_argument(args.pairA, args.recodeA)
    pair_b = _parse_pair_argument(args.pairB, args.recodeB)
    f = StructuredRel(parse_relation_file(args.oracle), pair_a.z, pair_b.z)
    report = dj_run(DJInstance(pair_a, pair_b, f, unchecked=args.unchecked))
    print(emit_report(report, "json" if args.json else "human"))
    return 0


def _cmd_grover(args) -> int:
    pair_s = _parse_pair_argument(args.pairS, args.recodeS)
    pair_b = _parse_pair_argument(args.pairB, args.recodeB)
    f = StructuredRel(parse_relation_file(args.oracle), pair_s.z, pair_b.z)
    sigma = _sigma_state(pair_b, args.sigma)
    report = grover_run(GroverInstance(pair_s, pair_b, f, sigma, unchecked=args.unchecked))
    print(emit_report(report, "json" if args.json else "human"))
    return 0


def _cmd_homid(args) -> int:
    pair_s = _parse_pair_argument(args.pairS, args.recodeS)
    pair_b = _parse_pair_argument(args.pairB, args.recodeB)
    f = StructuredRel(parse_relation_file(args.oracle), pair_s.z, pair_b.z)
    sigma = _sigma_state(pair_b, args.sigma)
    report = grouphomid_run(HomIDInstance(pair_s, pair_b, f, sigma, unchecked=args.unchecked))
    print(emit_report(report, "json" if args.json else "human"))
    return 0


_COMMANDS = {
    "verify-structure": _cmd_verify_structure,
    "enumerate": _cmd_enumerate,
    "check-relation": _cmd_check_relation,
    "dj": _cmd_dj,
    "grover": _cmd_grover,
    "homid": _cmd_homid,
}


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits 2 on usage errors; code 2 is reserved for property
        # violations, so malformed invocations report as input errors.
        return 0 if exc.code == 0 else 1
    try:
        return _COMMANDS[args.verb](args)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    raise SystemExit(main())
