"""Command-line front end.

Exit status: 0 when every requested check passes, 1 when a mathematical
check fails, 2 on usage errors, 3 when a certificate stays undecided at the
precision cap.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import random
import sys
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence

from . import bounds as bd
from . import certificates as cf
from .inequalities import STRONG_BRIGGS, InequalityKind, find_threshold, verify_range
from .series import PartitionKind, partition_table

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2
EXIT_UNDECIDED = 3

CONJECTURE_K_MAX = 100
CONJECTURE_N_MAX = 1000
DEFAULT_SEED = 20240601


class UsageError(Exception):
    pass


@dataclass
class RunConfig:
    command: str
    kind: Optional[PartitionKind] = None
    lo: Optional[int] = None
    hi: Optional[int] = None
    precision: int = 128
    out: Optional[str] = None
    fmt: str = "json"
    seed: int = DEFAULT_SEED
    extra: Dict[str, object] = field(default_factory=dict)


def _kind(label: str) -> PartitionKind:
    try:
        kind = PartitionKind.parse(label)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    if kind.k is not None and kind.k < 2:
        raise UsageError("k must be at least 2")
    return kind


def _emit(cfg: RunConfig, text: str) -> None:
    if not text.endswith("\n"):
        text += "\n"
    if cfg.out:
        with open(cfg.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _csv(rows: Sequence[Dict[str, object]]) -> str:
    if not rows:
        return ""
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=list(rows[0]), lineterminator="\n")
    writer.writeheader()
    writer.writerows(rows)
    return buf.getvalue()


# -- commands --------------------------------------------------------------

def run_compute(cfg: RunConfig) -> int:
    hi = cfg.hi
    if hi is None or hi < 0:
        raise UsageError("compute needs --hi >= 0")
    seq = partition_table(cfg.kind, hi)
    _emit(cfg, seq.to_csv() if cfg.fmt == "csv" else seq.dumps())
    return EXIT_OK


def run_verify(cfg: RunConfig) -> int:
    lo, hi = cfg.lo, cfg.hi
    if lo is None or hi is None or lo < 1 or lo > hi:
        raise UsageError("verify needs 1 <= --lo <= --hi")
    ineq = cfg.extra["ineq"]
    seq = partition_table(cfg.kind, hi + ineq.reach)
    report = verify_range(seq, ineq, lo, hi)
    if cfg.fmt == "csv":
        _emit(cfg, _csv([{"n": n, "holds": False} for n in report.failures]) or "n,holds")
    else:
        _emit(cfg, report.dumps())
    return EXIT_OK if report.ok else EXIT_FAIL


def _bound_samples(cfg: RunConfig, start: int) -> List[int]:
    ns = list(cfg.extra.get("n") or [])
    if cfg.lo is not None or cfg.hi is not None:
        lo = cfg.lo if cfg.lo is not None else start
        hi = cfg.hi if cfg.hi is not None else lo
        if lo > hi:
            raise UsageError("empty range")
        ns.extend(range(lo, hi + 1))
    randoms = int(cfg.extra.get("random") or 0)
    if randoms:
        rng = random.Random(cfg.seed)
        ns.extend(rng.randint(start, start + 5000) for _ in range(randoms))
    if not ns:
        ns = [start]
    return sorted(set(ns))


def run_bounds(cfg: RunConfig) -> int:
    table = cfg.extra.get("table")
    if table:
        _emit(cfg, bd.table1_csv() if table == 1 else bd.table2_csv())
        return EXIT_OK
    if cfg.kind is None:
        raise UsageError("bounds needs --kind or --table")
    start = bd.bound_start(cfg.kind)
    ns = _bound_samples(cfg, start)
    if ns[0] < start:
        raise UsageError(f"bounds for {cfg.kind.label} start at n = {start}")
    values = partition_table(cfg.kind, ns[-1])
    variant = str(cfg.extra.get("prefactor", "table"))
    rows = []
    ok = True
    for n in ns:
        pair = bd.bounds_for(cfg.kind, n, cfg.precision, variant)
        row = pair.to_row(values[n])
        ok = ok and bool(row["inside"])
        rows.append(row)
    if cfg.fmt == "csv":
        flat = [{**r, "lower": r["lower"]["decimal"], "upper": r["upper"]["decimal"]} for r in rows]  # type: ignore[index]
        _emit(cfg, _csv(flat))
    else:
        _emit(cfg, json.dumps(rows))
    return EXIT_OK if ok else EXIT_FAIL


def run_certify(cfg: RunConfig) -> int:
    target = str(cfg.extra["target"])
    ray = cfg.extra.get("ray")
    ray = cf.ROOT_BOUNDS[target] if ray is None else ray
    if ray <= 0:
        raise UsageError("--ray must be positive")
    cert = cf.certify_positive_on_ray(cf.target_numerator(target), ray, prec=cfg.precision)
    data = cert.to_json()
    data["target"] = target
    _emit(cfg, json.dumps(data))
    return EXIT_OK if cert.proven else EXIT_UNDECIDED


def run_conjecture(cfg: RunConfig) -> int:
    k_lo, k_hi = int(cfg.extra["k_lo"]), int(cfg.extra["k_hi"])
    n_hi = cfg.hi if cfg.hi is not None else CONJECTURE_N_MAX
    p_lo = int(cfg.extra["p_lo"])
    op_lo = int(cfg.extra["op_lo"])
    if not 2 <= k_lo <= k_hi:
        raise UsageError("need 2 <= --k-lo <= --k-hi")
    if min(p_lo, op_lo) < 1 or max(p_lo, op_lo) > n_hi:
        raise UsageError("need 1 <= start <= --hi")
    if not cfg.extra.get("extended") and (k_hi > CONJECTURE_K_MAX or n_hi > CONJECTURE_N_MAX):
        raise UsageError(f"ranges beyond k <= {CONJECTURE_K_MAX}, n <= {CONJECTURE_N_MAX} need --extended")
    rows = []
    for k in range(k_lo, k_hi + 1):
        for kind, lo in ((PartitionKind.regular(k), p_lo), (PartitionKind.regular_overpartition(k), op_lo)):
            seq = partition_table(kind, n_hi + 2)
            rep = verify_range(seq, STRONG_BRIGGS, lo, n_hi)
            rows.append({"sequence": kind.label, "k": str(k), "lo": str(lo), "hi": str(n_hi),
                         "failures": [str(n) for n in rep.failures]})
    ok = all(not r["failures"] for r in rows)
    if cfg.fmt == "csv":
        _emit(cfg, _csv([{**r, "failures": " ".join(r["failures"])} for r in rows]))  # type: ignore[arg-type]
    else:
        _emit(cfg, json.dumps({"ok": ok, "rows": rows}))
    return EXIT_OK if ok else EXIT_FAIL


def run_report(cfg: RunConfig) -> int:
    """Thresholds of both inequalities for every family, plus the k = 6 desk constants."""
    hi = cfg.hi if cfg.hi is not None else 3000
    if hi < 10:
        raise UsageError("--hi must be at least 10")
    kinds = [PartitionKind.ordinary(), PartitionKind.overpartition()]
    kinds += [PartitionKind.regular(k) for k in range(2, 10)]
    kinds += [PartitionKind.regular_overpartition(k) for k in range(2, 10)]
    rows = []
    for kind in kinds:
        seq = partition_table(kind, hi + 2)
        lc = find_threshold(seq, InequalityKind("log-concavity"), hi)
        sb = find_threshold(seq, STRONG_BRIGGS, hi)
        rows.append({"sequence": kind.label, "hi": str(hi),
                     "log_concavity_from": None if lc is None else str(lc),
                     "strong_briggs_from": None if sb is None else str(sb)})
    if cfg.fmt == "csv":
        _emit(cfg, _csv(rows))
        return EXIT_OK
    desk = {
        "E6": bd.e_desk_constant(6, cfg.precision).to_json(),
        "gamma46": bd.gamma6(46, cfg.precision).to_json(),
        "L677": bd.L6(677, cfg.precision).to_json(),
        "admissible_up_to": str(max(k for k in range(2, 30) if bd.chern_admissible(k))),
    }
    _emit(cfg, json.dumps({"thresholds": rows, "desk": desk}))
    return EXIT_OK


COMMANDS = {
    "compute": run_compute,
    "verify": run_verify,
    "bounds": run_bounds,
    "certify": run_certify,
    "conjecture": run_conjecture,
    "report": run_report,
}


# -- argument parsing ------------------------------------------------------

class _Parser(argparse.ArgumentParser):
    def error(self, message: str):  # argparse exits with 2 already; keep the message short
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", dest="fmt", choices=("json", "csv"), default="json")
    common.add_argument("--precision", type=int, default=None, help="working precision in bits")
    common.add_argument("--out", help="write the report here instead of stdout")
    common.add_argument("--seed", type=int, default=DEFAULT_SEED)

    parser = _Parser(prog="briggs", description="Briggs-type inequalities for partition functions")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("compute", parents=[common], help="exact values a(0..hi)")
    p.add_argument("--kind", required=True, help="p, op, p<k> or op<k>")
    p.add_argument("--hi", type=int, required=True)

    p = sub.add_parser("verify", parents=[common], help="exact check of an inequality on a range")
    p.add_argument("--kind", required=True)
    p.add_argument("--ineq", default="strong-briggs", choices=InequalityKind.ALL)
    p.add_argument("--lo", type=int, required=True)
    p.add_argument("--hi", type=int, required=True)

    p = sub.add_parser("bounds", parents=[common], help="containment of exact values in the bounds")
    p.add_argument("--kind")
    p.add_argument("--n", type=int, action="append", help="sample point (repeatable)")
    p.add_argument("--lo", type=int)
    p.add_argument("--hi", type=int)
    p.add_argument("--random", type=int, default=0, help="add this many seeded random samples")
    p.add_argument("--prefactor", choices=("table", "derived"), default="table")
    p.add_argument("--table", type=int, choices=(1, 2), help="print a constants table as CSV")

    p = sub.add_parser("certify", parents=[common], help="positivity certificate for a proof polynomial")
    p.add_argument("--target", required=True, choices=cf.TARGETS)
    p.add_argument("--ray", type=int, help="start of the ray (default: the known root bound)")

    p = sub.add_parser("conjecture", parents=[common], help="strong Briggs scan over many k")
    p.add_argument("--k-lo", type=int, default=2)
    p.add_argument("--k-hi", type=int, default=CONJECTURE_K_MAX)
    p.add_argument("--p-lo", type=int, default=220, help="first n for p_k")
    p.add_argument("--op-lo", type=int, default=75, help="first n for overpartitions")
    p.add_argument("--hi", type=int, default=CONJECTURE_N_MAX)
    p.add_argument("--extended", action="store_true", help="allow ranges past the default caps")

    p = sub.add_parser("report", parents=[common], help="threshold table and desk constants")
    p.add_argument("--hi", type=int, default=3000)
    return parser


def config_from_args(ns: argparse.Namespace) -> RunConfig:
    cmd = ns.command
    default_prec = 256 if cmd == "certify" else 128
    prec = ns.precision if ns.precision is not None else default_prec
    if prec < 16 or prec > 4096:
        raise UsageError("--precision must be between 16 and 4096")
    kind_label = getattr(ns, "kind", None)
    cfg = RunConfig(cmd, _kind(kind_label) if kind_label else None, getattr(ns, "lo", None),
                    getattr(ns, "hi", None), prec, ns.out, ns.fmt, ns.seed)
    if cmd == "verify":
        cfg.extra["ineq"] = InequalityKind(ns.ineq)
    elif cmd == "bounds":
        cfg.extra.update(n=ns.n, random=ns.random, prefactor=ns.prefactor, table=ns.table)
    elif cmd == "certify":
        cfg.extra.update(target=ns.target, ray=ns.ray)
    elif cmd == "conjecture":
        cfg.extra.update(k_lo=ns.k_lo, k_hi=ns.k_hi, p_lo=ns.p_lo, op_lo=ns.op_lo, extended=ns.extended)
    return cfg


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    ns = parser.parse_args(argv)
    try:
        cfg = config_from_args(ns)
        return COMMANDS[cfg.command](cfg)
    except UsageError as exc:
        print(f"briggs: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
