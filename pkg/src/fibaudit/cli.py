"""Command-line front end: verification suites, identity audits,
coefficient tables, and the closed-form-vs-naive-summation benchmark.

Reports go to standard output (or --out); diagnostics go to standard
error.  Exit codes: 0 success, 1 suite/equality failure, 2 invalid
configuration, 3 printed-form audit FAIL, 4 output I/O failure.
"""
from __future__ import annotations

import argparse
import json
import random
import sys
import time
from dataclasses import dataclass, field
from fractions import Fraction

from .identities import (
    FAMILY_POWER_SIGN,
    IdentityFamily,
    audit,
    closed_form_rhs,
    fib_power_sum_oracle,
)
from .ring import PHI, PSI
from .sequences import binomial, build_coeff_table
from .transforms import (
    Seq,
    binomial_transform,
    corollary1_eval,
    corollary2_eval,
    inverse_transform,
    lemma2_lhs,
    lemma3_sum,
    nabla_direct,
    nabla_sum,
    theorem1_eval,
)

HARD_N_MAX = 4096
HARD_P_MAX = 64
BENCH_N_FLOOR = 256


@dataclass
class RunConfig:
    command: str
    families: list[str] = field(default_factory=lambda: ["all"])
    n_max: int = 16
    p_max: int = 2
    output_format: str = "text"
    output_path: str | None = None
    parallel: bool = False
    unsafe_no_caps: bool = False


def _validate(config: RunConfig) -> str | None:
    if config.n_max < 0:
        return "n-max must be non-negative"
    if config.p_max < 0:
        return "p-max must be non-negative"
    if not config.unsafe_no_caps:
        if config.n_max > HARD_N_MAX:
            return f"n-max exceeds the hard cap {HARD_N_MAX} (use --unsafe-no-caps)"
        if config.p_max > HARD_P_MAX:
            return f"p-max exceeds the hard cap {HARD_P_MAX} (use --unsafe-no-caps)"
    return None


def _parse_families(tokens: list[str]) -> list[IdentityFamily] | None:
    names = {f.value: f for f in IdentityFamily}
    expansions = {
        "all": list(IdentityFamily),
        "REMARK1": [f for f in IdentityFamily if f.value.startswith("REMARK1_")],
        "PROP1": [f for f in IdentityFamily if f.value.startswith("PROP1_")],
        "T4": [IdentityFamily.T4_EVEN, IdentityFamily.T4_ODD],
    }
    out: list[IdentityFamily] = []
    for token in tokens:
        for part in token.split(","):
            part = part.strip()
            if not part:
                continue
            if part in expansions:
                out.extend(expansions[part])
            elif part in names:
                out.append(names[part])
            else:
                return None
    return out


def _emit(config: RunConfig, payload: str) -> int:
    if config.output_path:
        try:
            with open(config.output_path, "w", encoding="utf-8") as fh:
                fh.write(payload)
        except OSError as exc:
            print(f"error: cannot write {config.output_path}: {exc}", file=sys.stderr)
            return 4
    else:
        sys.stdout.write(payload)
    return 0


# ---------------------------------------------------------------------------
# verify
# ---------------------------------------------------------------------------


def _random_seq(rng: random.Random, length: int) -> Seq:
    return Seq(tuple(rng.randint(-50, 50) for _ in range(length)))


def _suite_round_trip(rng, n_max):
    checks = fails = 0
    for _ in range(50):
        a = _random_seq(rng, rng.randint(1, max(1, min(n_max + 1, 64))))
        checks += 2
        if inverse_transform(binomial_transform(a)) != a:
            fails += 1
        if binomial_transform(inverse_transform(a)) != a:
            fails += 1
    return checks, fails


def _suite_lemma1(rng, n_max):
    checks = fails = 0
    top = min(n_max, 32)
    b = _random_seq(rng, top + 1)
    for n in range(top + 1):
        for m in range(n + 1):
            checks += 2
            if nabla_direct(b, m, n) != nabla_sum(b, m, n):
                fails += 1
            lhs = binomial(n, m) * nabla_sum(b, m, n)
            rhs = sum(
                binomial(n, j) * binomial(j, n - m) * (-1) ** (n - j) * b[j]
                for j in range(n + 1)
            )
            if lhs != rhs:
                fails += 1
    return checks, fails


def _suite_lemma2(rng, n_max):
    checks = fails = 0
    top = min(n_max, 32)
    a = _random_seq(rng, top + 1)
    b = binomial_transform(a)
    for n in range(top + 1):
        for m in range(n + 1):
            checks += 2
            if lemma2_lhs(a, m, n) != nabla_sum(b, m, n):
                fails += 1
            weighted = sum(
                binomial(n, k) * binomial(k, m) * a[k] for k in range(n + 1)
            )
            if weighted != binomial(n, m) * nabla_sum(b, m, n):
                fails += 1
    return checks, fails


def _suite_lemma3(rng, n_max):
    checks = fails = 0
    for n in range(1, min(n_max, 30) + 1):
        for m in range(1, n + 1):
            checks += 1
            if lemma3_sum(n, m) != Fraction((-1) ** m, m):
                fails += 1
    return checks, fails


def _suite_theorem1(rng, n_max):
    checks = fails = 0
    for _ in range(25):
        length = rng.randint(1, max(1, min(n_max + 1, 16)))
        a = _random_seq(rng, length)
        c = _random_seq(rng, length)
        lhs, rhs8, rhs81 = theorem1_eval(a, c)
        checks += 1
        if not (lhs == rhs8 == rhs81):
            fails += 1
    return checks, fails


_COROLLARY_XS = (0, 1, -1, Fraction(1, 2), 2, PHI, PSI)


def _suite_corollary1(rng, n_max):
    checks = fails = 0
    for _ in range(15):
        e = _random_seq(rng, rng.randint(1, max(1, min(n_max + 1, 13))))
        for x in _COROLLARY_XS:
            lhs, rhs = corollary1_eval(e, x)
            checks += 1
            if lhs != rhs:
                fails += 1
    return checks, fails


def _suite_corollary2(rng, n_max):
    checks = fails = 0
    for _ in range(15):
        a = _random_seq(rng, rng.randint(1, max(1, min(n_max + 1, 13))))
        for x in _COROLLARY_XS:
            lhs, rhs = corollary2_eval(a, x)
            checks += 1
            if lhs != rhs:
                fails += 1
    return checks, fails


def _suite_gould(rng, n_max):
    checks = fails = 0
    top = min(n_max, 20)
    for n in range(top + 1):
        for m in range(n + 1):
            for l in range(n + 1):
                checks += 1
                lhs = sum(
                    binomial(m, k) * binomial(n - k, l) * (-1) ** k
                    for k in range(m + 1)
                )
                if lhs != binomial(n - m, l - m):
                    fails += 1
    for n in range(1, top + 1):
        for m in range(1, n + 1):
            checks += 1
            lhs = sum(
                binomial(n - m, j) * (-1) ** j * Fraction(m, m + j)
                for j in range(n - m + 1)
            )
            if lhs != Fraction(1, binomial(n, n - m)):
                fails += 1
    return checks, fails


_VERIFY_SUITES = (
    ("round_trip", _suite_round_trip),
    ("lemma1", _suite_lemma1),
    ("lemma2", _suite_lemma2),
    ("lemma3", _suite_lemma3),
    ("theorem1", _suite_theorem1),
    ("corollary1", _suite_corollary1),
    ("corollary2", _suite_corollary2),
    ("gould", _suite_gould),
)


def cmd_verify(config: RunConfig) -> int:
    error = _validate(config)
    if error:
        print(f"error: {error}", file=sys.stderr)
        return 2
    rng = random.Random(20240501)
    lines = []
    any_fail = False
    for name, suite in _VERIFY_SUITES:
        checks, fails = suite(rng, config.n_max)
        status = "PASS" if fails == 0 else "FAIL"
        any_fail = any_fail or fails > 0
        lines.append(f"{status} {name} ({checks} checks, {fails} failures)")
    rc = _emit(config, "\n".join(lines) + "\n")
    if rc:
        return rc
    return 1 if any_fail else 0


# ---------------------------------------------------------------------------
# audit
# ---------------------------------------------------------------------------


def cmd_audit(config: RunConfig) -> int:
    error = _validate(config)
    if error:
        print(f"error: {error}", file=sys.stderr)
        return 2
    families = _parse_families(config.families)
    if not families:
        print(f"error: unknown family in {config.families}", file=sys.stderr)
        return 2
    report = audit(
        families,
        range(config.n_max + 1),
        range(config.p_max + 1),
        parallel=config.parallel,
    )
    if config.output_format == "json":
        payload = report.to_json() + "\n"
    elif config.output_format == "csv":
        payload = report.to_csv()
    else:
        payload = report.to_text()
    rc = _emit(config, payload)
    if rc:
        return rc
    n_fail = sum(1 for e in report.entries if e.verdict == "FAIL")
    print(
        f"audit: {len(report.entries)} cells, {n_fail} printed-form failures",
        file=sys.stderr,
    )
    return 0 if n_fail == 0 else 3


# ---------------------------------------------------------------------------
# tables
# ---------------------------------------------------------------------------


def cmd_tables(config: RunConfig) -> int:
    error = _validate(config)
    if error:
        print(f"error: {error}", file=sys.stderr)
        return 2
    tables = {kind: build_coeff_table(kind, config.n_max) for kind in ("Q", "S")}
    if config.output_format == "json":
        payload = (
            json.dumps({k: [list(r) for r in t.rows] for k, t in tables.items()},
                       indent=2)
            + "\n"
        )
    elif config.output_format == "csv":
        out = []
        for kind, table in tables.items():
            out.append(kind)
            for row in table.rows:
                out.append(",".join(f'"{v}"' for v in row))
        payload = "\n".join(out) + "\n"
    else:
        out = []
        for kind, table in tables.items():
            for n, row in enumerate(table.rows):
                out.append(f"{kind}[{n}]: " + " ".join(str(v) for v in row))
        payload = "\n".join(out) + "\n"
    return _emit(config, payload)


# ---------------------------------------------------------------------------
# bench
# ---------------------------------------------------------------------------

_BENCHMARKABLE = (IdentityFamily.T2, IdentityFamily.T3)


def _time_best(fn, repeats: int = 3) -> float:
    best = float("inf")
    for _ in range(repeats):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def cmd_bench(config: RunConfig) -> int:
    error = _validate(config)
    if error:
        print(f"error: {error}", file=sys.stderr)
        return 2
    if config.n_max < BENCH_N_FLOOR:
        print(
            f"error: bench needs n-max >= {BENCH_N_FLOOR} for meaningful timing",
            file=sys.stderr,
        )
        return 2
    tokens = config.families
    families = (
        list(_BENCHMARKABLE) if tokens == ["all"] else _parse_families(tokens)
    )
    if not families or any(f not in _BENCHMARKABLE for f in families):
        print("error: only T2 and T3 are benchmarkable", file=sys.stderr)
        return 2

    points = []
    n = BENCH_N_FLOOR
    while n <= config.n_max:
        points.append(n)
        n *= 2

    rows = []
    any_mismatch = False
    for family in families:
        power, sign = FAMILY_POWER_SIGN[family]
        p_lo = 1 if family is IdentityFamily.T2 else 0
        for p in range(p_lo, config.p_max + 1):
            for n in points:
                if family is IdentityFamily.T3 and n % 2 == 1:
                    continue
                oracle_value = fib_power_sum_oracle(n, power(p), sign)
                closed_value = closed_form_rhs(family, n, p)
                equal = oracle_value == closed_value
                any_mismatch = any_mismatch or not equal
                t_oracle = _time_best(
                    lambda: fib_power_sum_oracle(n, power(p), sign)
                )
                t_closed = _time_best(lambda: closed_form_rhs(family, n, p))
                rows.append(
                    {
                        "family": family.value,
                        "p": p,
                        "n": n,
                        "oracle_seconds": t_oracle,
                        "closed_form_seconds": t_closed,
                        "speedup": t_oracle / t_closed if t_closed > 0 else float("inf"),
                        "equal": equal,
                    }
                )
    if not rows:
        print("error: empty benchmark grid (check p-max)", file=sys.stderr)
        return 2

    if config.output_format == "json":
        payload = json.dumps(rows, indent=2) + "\n"
    elif config.output_format == "csv":
        header = "family,p,n,oracle_seconds,closed_form_seconds,speedup,equal"
        lines = [header] + [
            f"{r['family']},{r['p']},{r['n']},{r['oracle_seconds']:.6e},"
            f"{r['closed_form_seconds']:.6e},{r['speedup']:.2f},{r['equal']}"
            for r in rows
        ]
        payload = "\n".join(lines) + "\n"
    else:
        lines = [
            f"{r['family']} p={r['p']} n={r['n']}: "
            f"oracle {r['oracle_seconds']:.6f}s, "
            f"closed {r['closed_form_seconds']:.6f}s, "
            f"speedup {r['speedup']:.1f}x, equal={r['equal']}"
            for r in rows
        ]
        payload = "\n".join(lines) + "\n"
    rc = _emit(config, payload)
    if rc:
        return rc
    return 1 if any_mismatch else 0


# ---------------------------------------------------------------------------
# entry point
# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fibaudit",
        description="Exact verification and auditing of binomial-transform "
        "and Fibonacci-power identities.",
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--families", default="all",
        help="comma-separated identity tags (T2, T4, REMARK1, PROP1, ...) or 'all'",
    )
    common.add_argument("--n-max", type=int, default=16)
    common.add_argument("--p-max", type=int, default=2)
    common.add_argument("--format", choices=("json", "csv", "text"), default="text")
    common.add_argument("--out", default=None, metavar="PATH")
    common.add_argument("--parallel", action="store_true")
    common.add_argument("--unsafe-no-caps", action="store_true")

    sub = parser.add_subparsers(dest="command", required=True)
    sub.add_parser("verify", parents=[common], help="run the transform property suites")
    sub.add_parser("audit", parents=[common], help="audit printed identities vs oracles")
    sub.add_parser("tables", parents=[common], help="print the q/s coefficient tables")
    sub.add_parser("bench", parents=[common], help="time closed forms vs naive summation")
    return parser


_COMMANDS = {
    "verify": cmd_verify,
    "audit": cmd_audit,
    "tables": cmd_tables,
    "bench": cmd_bench,
}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code else 0
    config = RunConfig(
        command=args.command,
        families=[args.families],
        n_max=args.n_max,
        p_max=args.p_max,
        output_format=args.format,
        output_path=args.out,
        parallel=args.parallel,
        unsafe_no_caps=args.unsafe_no_caps,
    )
    return _COMMANDS[config.command](config)


if __name__ == "__main__":
    sys.exit(main())
