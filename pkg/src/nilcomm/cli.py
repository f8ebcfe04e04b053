"""Command-line front end: single-partition reports, sweep verification, export.

Subcommands:

* ``invariants``  -- chain invariants, maximum simple chains and the
                     canonical process of one partition;
* ``verify``      -- run the theorem checks over every partition of every
                     n in a range, exit nonzero on any hard failure;
* ``export``      -- poset as DOT, or the full invariant record as JSON.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass, field

from . import greene, matrixlab, uchains, uprocess
from .errors import EnumerationCapExceeded, NilcommError
from .partitions import (
    Partition,
    all_partitions,
    dominance_leq,
    format_partition,
    parse_partition,
    partition_count,
    r_of,
)
from .poset import build_poset, export_dot, export_json

SCHEMA_VERSION = 1
DEFAULT_SEED = 0
MAX_SWEEP_N = 16
PRIME_ENV_VAR = "NILCOMM_PRIME"


@dataclass
class SweepReport:
    """Aggregated results of a verification sweep."""

    n_min: int
    n_max: int
    records: list[dict] = field(default_factory=list)
    failures: list[str] = field(default_factory=list)
    conjecture_checked: int = 0
    conjecture_agreed: int = 0

    @property
    def ok(self) -> bool:
        return not self.failures

    def to_json(self) -> str:
        payload = {
            "schema": SCHEMA_VERSION,
            "n_min": self.n_min,
            "n_max": self.n_max,
            "records": self.records,
            "failures": self.failures,
            "conjecture": {
                "checked": self.conjecture_checked,
                "agreed": self.conjecture_agreed,
            },
        }
        return json.dumps(payload, sort_keys=True, separators=(",", ":"))


def _check_partition(P: Partition, *, with_matrix: bool, prime: int, samples: int,
                     seed: int, strict_conjecture: bool, trace_cap: int,
                     report: SweepReport) -> dict:
    fail = report.failures.append
    name = format_partition(P)
    record: dict = {"P": list(P.parts), "n": P.n}

    lam_u = uchains.lambda_u(P)
    record["lambda_U"] = list(lam_u.parts)

    D = build_poset(P)
    lam = greene.greene_lambda(D)
    record["lambda"] = list(lam.parts)
    if not dominance_leq(lam_u, lam):
        fail(f"{name}: chain invariant does not dominate the anchored one")

    parts = lam_u.parts
    if any(parts[i] - parts[i + 1] < 2 for i in range(len(parts) - 1)):
        fail(f"{name}: parts of {lam_u} differ by less than 2")

    for spec in uchains.iter_specs(P.max_part):
        closed = uchains.cardinality_closed_form(P, spec)
        realized = len(uchains.materialize(P, spec).union)
        if closed != realized:
            fail(f"{name}: spec {spec.anchors} closed form {closed} != {realized}")

    if P.n <= 8:
        profile = greene.chain_union_profile(D).cumulative
        for k in range(P.n + 1):
            got = profile[k] if k < len(profile) else profile[-1]
            want = greene.oracle_max_k_chain_union(D, k)
            if got != want:
                fail(f"{name}: flow c_{k}={got} != oracle {want}")

    try:
        traces = uprocess.enumerate_full_processes(P, cap=trace_cap)
    except EnumerationCapExceeded as exc:
        fail(f"{name}: {exc}")
        return record
    record["processes"] = len(traces)
    for t in traces:
        q = uprocess.q_of_trace(t)
        if q != lam_u:
            fail(f"{name}: trace {t.anchors} gives {q} != {lam_u}")
        for r in range(1, t.steps + 1):
            union_size = len(frozenset().union(*t.removed[:r]))
            want = uchains.max_u_chain_cardinality(P, r)
            if union_size != want:
                fail(f"{name}: trace {t.anchors} prefix {r} covers {union_size} != u_{r}={want}")
            uprocess.union_as_uchain(t, r)

    if with_matrix:
        fld = matrixlab.PrimeField(prime)
        est = matrixlab.generic_jordan_type(P, fld, samples, seed)
        record["Q_est"] = list(est.q.parts)
        if len(est.q) != r_of(P):
            fail(f"{name}: estimated type {est.q} has {len(est.q)} parts, expected {r_of(P)}")
        best_simple, _ = uchains.max_simple_u_chains(P)
        if est.q.max_part != best_simple:
            fail(f"{name}: largest estimated part {est.q.max_part} != max simple size {best_simple}")
        if not dominance_leq(lam_u, est.q):
            fail(f"{name}: {lam_u} not dominated by estimate {est.q}")
        report.conjecture_checked += 1
        if est.q == lam_u:
            report.conjecture_agreed += 1
        elif strict_conjecture:
            fail(f"{name}: conjecture equality failed, {est.q} != {lam_u}")

    return record


def run_sweep(n_min: int, n_max: int, *, with_matrix: bool = False,
              prime: int = matrixlab.DEFAULT_PRIME, samples: int = 5,
              seed: int = DEFAULT_SEED, strict_conjecture: bool = False,
              trace_cap: int = 10 ** 6) -> SweepReport:
    """Verify the theorem suite for every partition of every n in range."""
    report = SweepReport(n_min, n_max)
    for n in range(n_min, n_max + 1):
        count = 0
        for P in all_partitions(n):
            count += 1
            record = _check_partition(
                P, with_matrix=with_matrix, prime=prime, samples=samples,
                seed=seed, strict_conjecture=strict_conjecture,
                trace_cap=trace_cap, report=report,
            )
            report.records.append(record)
        if count != partition_count(n):
            report.failures.append(
                f"n={n}: enumerated {count} partitions, recurrence says {partition_count(n)}"
            )
    return report


def _default_prime() -> int:
    env = os.environ.get(PRIME_ENV_VAR)
    return int(env) if env else matrixlab.DEFAULT_PRIME


def _cmd_invariants(args: argparse.Namespace) -> int:
    P = parse_partition(args.partition)
    best, anchors = uchains.max_simple_u_chains(P)
    if args.max_simple:
        print(f"max simple U-chain: size {best} at anchors {list(anchors)}")
        return 0
    D = build_poset(P)
    print(f"P         {P}  (n = {P.n})")
    print(f"lambda    {greene.greene_lambda(D)}")
    print(f"lambda_U  {uchains.lambda_u(P)}")
    print(f"r_P       {r_of(P)}")
    print(f"max simple U-chain: size {best} at anchors {list(anchors)}")
    trace = uprocess.canonical_process(P)
    print(f"canonical process: anchors {list(trace.anchors)} -> Q = {uprocess.q_of_trace(trace)}")
    for i in range(trace.steps):
        nxt = trace.partitions[i + 1]
        print(f"  step {i + 1}: a={trace.anchors[i]} removes {len(trace.removed[i])} "
              f"vertices -> {nxt if nxt else '()'}")
    return 0


def _cmd_verify(args: argparse.Namespace) -> int:
    if not (1 <= args.n_min <= args.n_max <= MAX_SWEEP_N):
        print(f"error: need 1 <= n_min <= n_max <= {MAX_SWEEP_N}", file=sys.stderr)
        return 2
    report = run_sweep(
        args.n_min, args.n_max,
        with_matrix=args.with_matrix, prime=args.prime, samples=args.samples,
        seed=args.seed, strict_conjecture=args.strict_conjecture,
        trace_cap=args.trace_cap,
    )
    if args.json:
        print(report.to_json())
    else:
        by_n: dict[int, int] = {}
        for rec in report.records:
            by_n[rec["n"]] = by_n.get(rec["n"], 0) + 1
        for n in range(args.n_min, args.n_max + 1):
            print(f"n={n}: {by_n.get(n, 0)} partitions checked")
        if args.with_matrix:
            print(f"conjecture equality: {report.conjecture_agreed}/{report.conjecture_checked}")
        for f in report.failures:
            print(f"FAIL {f}")
        print("PASS" if report.ok else f"FAIL ({len(report.failures)} hard failures)")
    return 0 if report.ok else 1


def _cmd_export(args: argparse.Namespace) -> int:
    P = parse_partition(args.partition)
    if args.format == "dot":
        text = export_dot(build_poset(P))
    else:
        D = build_poset(P)
        trace = uprocess.canonical_process(P)
        record = {
            "schema": SCHEMA_VERSION,
            "P": list(P.parts),
            "n": P.n,
            "lambda": list(greene.greene_lambda(D).parts),
            "lambda_U": list(uchains.lambda_u(P).parts),
            "r_P": r_of(P),
            "max_simple": {
                "size": uchains.max_simple_u_chains(P)[0],
                "anchors": list(uchains.max_simple_u_chains(P)[1]),
            },
            "poset": json.loads(export_json(D)),
            "canonical_process": json.loads(uprocess.trace_to_json(trace)),
        }
        text = json.dumps(record, sort_keys=True, separators=(",", ":")) + "\n"
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="nilcomm",
        description="Chain invariants and generic commutator Jordan types of integer partitions.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    inv = sub.add_parser("invariants", help="report invariants of one partition")
    inv.add_argument("-p", "--partition", required=True, help='partition, e.g. "5,4,3,3,2,1"')
    inv.add_argument("--max-simple", action="store_true",
                     help="print only the maximum simple U-chain")
    inv.set_defaults(func=_cmd_invariants)

    ver = sub.add_parser("verify", help="verify the theorem suite over a range of n")
    ver.add_argument("n_min", type=int)
    ver.add_argument("n_max", type=int)
    ver.add_argument("--with-matrix", action="store_true",
                     help="include finite-field sampling checks")
    ver.add_argument("--prime", type=int, default=_default_prime(),
                     help=f"field modulus (default {matrixlab.DEFAULT_PRIME}, env {PRIME_ENV_VAR})")
    ver.add_argument("--samples", type=int, default=5)
    ver.add_argument("--seed", type=int, default=DEFAULT_SEED)
    ver.add_argument("--strict-conjecture", action="store_true",
                     help="treat a conjecture-equality miss as a failure")
    ver.add_argument("--trace-cap", type=int, default=10 ** 6)
    ver.add_argument("--json", action="store_true", help="emit the sweep report as JSON")
    ver.set_defaults(func=_cmd_verify)

    exp = sub.add_parser("export", help="export the poset or the invariant record")
    exp.add_argument("-p", "--partition", required=True)
    exp.add_argument("--format", choices=("dot", "json"), required=True)
    exp.add_argument("--out", help="output path (default stdout)")
    exp.set_defaults(func=_cmd_export)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except NilcommError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
