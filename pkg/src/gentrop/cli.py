"""Batch command-line front end.

Reads ideal files (a ``ring <n>`` header, then one homogeneous polynomial per
line, ``#`` comments allowed), runs the requested analysis and emits a
canonical JSON report: sorted keys, sorted generator strings, and every
probabilistic knob recorded, so identical inputs and seeds produce
byte-identical output.

Exit codes: 0 success, 1 failed verification probe, 2 parse/usage error,
3 non-homogeneous input, 4 genericity failure, 5 degree-cap abort.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import random
import sys
from fractions import Fraction

from .fans import adjacent_pairs, maximal_cones, refinement_maximal_cones
from .generic import (
    GenericityFailure,
    GenericityPolicy,
    ProbeResult,
    adjacent_distinct,
    apply_transform,
    classify_cm,
    cone_constancy,
    identity_policy,
    recover_depth,
)
from .groebner import (
    DEFAULT_DEGREE_CAP,
    DegreeCapExceeded,
    Ideal,
    NotGradedError,
    initial_ideal,
)
from .generic import _policy_transforms, gin, tropical_member
from .invariants import depth, dimension, multiplicity
from .poly import GREVLEX, ParseError, parse_polynomial
from .tropmult import intrinsic_multiplicity

EXIT_OK = 0
EXIT_PROBE_FAILED = 1
EXIT_PARSE = 2
EXIT_NOT_GRADED = 3
EXIT_GENERICITY = 4
EXIT_DEGREE_CAP = 5

CONE_BUDGET = 200


def parse_ideal_file(text: str):
    """Parse an ideal file into (n, polynomials).  Raises ParseError."""
    lines = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            lines.append(line)
    if not lines:
        raise ParseError("empty ideal file")
    header = lines[0].split()
    if len(header) != 2 or header[0] != "ring" or not header[1].isdigit():
        raise ParseError(f"bad header {lines[0]!r}; expected 'ring <n>'")
    n = int(header[1])
    if n < 1:
        raise ParseError("ring must have at least one variable")
    polys = [parse_polynomial(line, n) for line in lines[1:]]
    if not polys:
        raise ParseError("ideal file lists no polynomials")
    return n, polys


def format_ideal_file(n: int, polys) -> str:
    return "\n".join([f"ring {n}"] + [str(p) for p in polys]) + "\n"


def _parse_omega(text: str, n: int):
    parts = [p.strip() for p in text.split(",")]
    if len(parts) != n:
        raise ParseError(f"omega needs {n} comma-separated entries")
    try:
        return tuple(Fraction(p) for p in parts)
    except (ValueError, ZeroDivisionError) as exc:
        raise ParseError(f"bad omega entry: {exc}") from None


def _policy(args, n: int) -> GenericityPolicy:
    if args.identity:
        return identity_policy(n)
    return GenericityPolicy(samples=args.samples, bound=args.bound, seed=args.seed)


def _probe_json(p: ProbeResult) -> dict:
    return {
        "kind": p.kind,
        "cone": p.cone.to_json() if p.cone is not None else None,
        "result": p.result,
        "evidence": p.evidence,
        "detail": p.detail,
    }


def _base_report(args, data: bytes, n: int) -> dict:
    return {
        "input_sha256": hashlib.sha256(data).hexdigest(),
        "n": n,
        "seed": args.seed,
        "policy": {
            "samples": args.samples,
            "bound": args.bound,
            "points": args.points,
            "degree_cap": args.degree_cap,
            "identity": bool(args.identity),
        },
    }


def _emit(report: dict, args) -> None:
    text = json.dumps(report, sort_keys=True, indent=2) + "\n"
    sys.stdout.write(text)
    if args.json:
        with open(args.json, "w", encoding="utf-8") as fh:
            fh.write(text)


def _load_ideal(args):
    with open(args.file, "rb") as fh:
        data = fh.read()
    n, polys = parse_ideal_file(data.decode("utf-8"))
    return data, Ideal(n, polys)


def _budget(cones, seed: int):
    if len(cones) <= CONE_BUDGET:
        return list(cones)
    rng = random.Random(f"cone-budget:{seed}")
    idx = sorted(rng.sample(range(len(cones)), CONE_BUDGET))
    return [cones[i] for i in idx]


def cmd_analyze(args) -> int:
    data, I = _load_ideal(args)
    policy = _policy(args, I.n)
    cap = args.degree_cap
    m = dimension(I, cap)
    t = depth(I, policy)
    result = classify_cm(I, policy, points=args.points, degree_cap=cap)
    g = gin(I, GREVLEX, policy, cap)
    report = _base_report(args, data, I.n)
    report.update(
        {
            "dimension": m,
            "depth": t,
            "cm_class": result.label,
            "multiplicity": multiplicity(I, cap),
            "gin": sorted(str(p) for p in g.polynomials()),
            "probes": [_probe_json(p) for p in result.probes],
        }
    )
    _emit(report, args)
    return EXIT_OK


def cmd_tropical(args) -> int:
    data, I = _load_ideal(args)
    policy = _policy(args, I.n)
    cap = args.degree_cap
    w = _parse_omega(args.omega, I.n)
    member = tropical_member(I, w, policy, cap)
    sample = apply_transform(I, _policy_transforms(I.n, policy)[0])
    J = initial_ideal(sample, w, GREVLEX, cap)
    report = _base_report(args, data, I.n)
    report.update(
        {
            "omega": [str(x) for x in w],
            "member": member,
            "initial_ideal": sorted(str(p) for p in J.generators),
        }
    )
    _emit(report, args)
    return EXIT_OK


def _verify_wnm(I, policy, args):
    m = dimension(I, args.degree_cap)
    probes = []
    for cone in _budget(maximal_cones(I.n, m), args.seed):
        ok = cone_constancy(I, cone, args.points, policy, args.degree_cap)
        probes.append(ProbeResult("cone_constancy", cone, ok, "sampled"))
    return probes


def _verify_wnmt(I, policy, args):
    cap = args.degree_cap
    m = dimension(I, cap)
    t = depth(I, policy)
    if not 0 < t < m - 1:
        raise ParseError(
            f"target Wnmt needs 0 < depth < dim-1, got depth {t}, dim {m}"
        )
    probes = []
    for cone in _budget(refinement_maximal_cones(I.n, m, t), args.seed):
        ok = cone_constancy(I, cone, args.points, policy, cap)
        probes.append(ProbeResult("cone_constancy", cone, ok, "sampled"))
    for c1, c2 in _budget(adjacent_pairs(I.n, m, t), args.seed):
        ok = adjacent_distinct(I, c1, c2, policy, cap)
        probes.append(
            ProbeResult(
                "adjacent_pair_distinct",
                c1,
                ok,
                "exact",
                f"versus {c2.to_json()}",
            )
        )
    return probes


def _verify_multiplicity(I, policy, args):
    cap = args.degree_cap
    m = dimension(I, cap)
    t = depth(I, policy)
    if 0 < t < m - 1:
        cones = refinement_maximal_cones(I.n, m, t)
    else:
        cones = maximal_cones(I.n, m)
    probes = []
    for cone in _budget(cones, args.seed):
        rep = intrinsic_multiplicity(I, cone, policy, cap)
        detail = (
            f"dim {rep.dim_initial}->{rep.dim_saturated}, "
            f"m_sat {rep.m_saturated}, m_ideal {rep.m_ideal}"
        )
        probes.append(
            ProbeResult("multiplicity_matches", cone, rep.matches, "exact", detail)
        )
    return probes


def _verify_depth_recovery(I, policy, args):
    cap = args.degree_cap
    m = dimension(I, cap)
    t = depth(I, policy)
    if not 0 < t < m - 1:
        raise ParseError(
            f"target depth-recovery needs 0 < depth < dim-1, got depth {t}, dim {m}"
        )
    recovered = recover_depth(I, policy, cap)
    return [
        ProbeResult(
            "depth_recovery",
            None,
            recovered == t,
            "exact",
            f"recovered {recovered}, depth {t}",
        )
    ]


_TARGETS = {
    "Wnm": _verify_wnm,
    "Wnmt": _verify_wnmt,
    "multiplicity": _verify_multiplicity,
    "depth-recovery": _verify_depth_recovery,
}


def cmd_verify(args) -> int:
    data, I = _load_ideal(args)
    policy = _policy(args, I.n)
    probes = _TARGETS[args.target](I, policy, args)
    passed = all(p.result for p in probes)
    report = _base_report(args, data, I.n)
    report.update(
        {
            "target": args.target,
            "passed": passed,
            "probes": [_probe_json(p) for p in probes],
        }
    )
    _emit(report, args)
    return EXIT_OK if passed else EXIT_PROBE_FAILED


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gentrop",
        description="Generic tropical varieties of graded ideals: exact "
        "dimension, depth, Cohen-Macaulay class and multiplicity.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("file", help="ideal file: 'ring <n>' then one polynomial per line")
        p.add_argument("--seed", type=int, default=0, help="PRNG seed (default 0)")
        p.add_argument("--bound", type=int, default=1000, help="transform entry bound")
        p.add_argument("--samples", type=int, default=2, help="agreeing transforms required")
        p.add_argument("--points", type=int, default=3, help="interior points per cone")
        p.add_argument("--degree-cap", type=int, default=DEFAULT_DEGREE_CAP, dest="degree_cap")
        p.add_argument("--identity", action="store_true", help="use the identity transform (non-generic)")
        p.add_argument("--json", help="also write the report to this path")

    p_analyze = sub.add_parser("analyze", help="dimension, depth, CM class, multiplicity, gin")
    common(p_analyze)
    p_analyze.set_defaults(func=cmd_analyze)

    p_trop = sub.add_parser("tropical", help="tropical membership of a weight vector")
    common(p_trop)
    p_trop.add_argument("--omega", required=True, help="comma-separated rational weights")
    p_trop.set_defaults(func=cmd_tropical)

    p_verify = sub.add_parser("verify", help="fan-structure and multiplicity verification probes")
    common(p_verify)
    p_verify.add_argument("--target", required=True, choices=sorted(_TARGETS))
    p_verify.set_defaults(func=cmd_verify)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except NotGradedError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_NOT_GRADED
    except GenericityFailure as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_GENERICITY
    except DegreeCapExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DEGREE_CAP
    except FileNotFoundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE


if __name__ == "__main__":
    sys.exit(main())
