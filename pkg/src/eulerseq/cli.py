"""Command-line front end.

    eulerseq compute -n 10 -a 1 [--mod 256]
    eulerseq poly -n 8
    eulerseq table -n 10 -a 2 --format csv --out table.csv
    eulerseq verify T3_1 --n 5..40 --a -5..5
    eulerseq verify egf --order 30 --a 2

Exit codes: 0 pass, 1 verification failure, 2 usage or domain error, 3 I/O error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import logging
import random
import sys
import time
from fractions import Fraction
from typing import Callable, Iterable, Optional

from . import identities as ids
from .congruences import SPECS, DomainError, scan
from .exact import NotInvertibleError, ResidueRing, as_scalar
from .sequence import build_table, euler_number, euler_number_mod, euler_number_poly

logger = logging.getLogger(__name__)

EXIT_PASS, EXIT_FAIL, EXIT_USAGE, EXIT_IO = 0, 1, 2, 3


class UsageError(Exception):
    pass


def parse_values(text: str) -> list:
    """``"lo..hi"`` (inclusive ints), comma lists, and fractions: ``"-3..3,1/2"``."""
    out = []
    for part in text.split(","):
        part = part.strip()
        if not part:
            continue
        if ".." in part:
            lo, hi = part.split("..", 1)
            try:
                lo, hi = int(lo), int(hi)
            except ValueError:
                raise UsageError(f"bad range {part!r}: bounds must be integers") from None
            if lo > hi:
                raise UsageError(f"empty range {part!r}")
            out.extend(range(lo, hi + 1))
        else:
            try:
                out.append(as_scalar(Fraction(part)))
            except (ValueError, ZeroDivisionError):
                raise UsageError(f"bad value {part!r}") from None
    if not out:
        raise UsageError(f"no values in {text!r}")
    return out


def _int_values(text: str, what: str) -> list[int]:
    vals = parse_values(text)
    if not all(isinstance(v, int) for v in vals):
        raise UsageError(f"{what} must be integers")
    return vals


def _s(v) -> str:
    return str(v)


# -- identity suites ---------------------------------------------------------
# Each suite yields an IdentityReport per grid cell, or None for a skipped cell.

_DEFAULT_A = "-3..-1,1..3,1/2,-2/5"


def _grid_n_a(args, nmin=1, nmax=40):
    ns = _int_values(args.n or f"{nmin}..{nmax}", "--n")
    As = parse_values(args.a or _DEFAULT_A)
    return ns, As


def _suite_egf(args):
    order = args.order if args.order is not None else 30
    for a in parse_values(args.a or "-3..-1,1..3,1/2,5/3"):
        yield ids.check_egf(order, a)


def _simple(fn, nmin=1, nonzero=False):
    def run(args):
        ns, As = _grid_n_a(args, nmin)
        for n in ns:
            for a in As:
                if n < nmin or (nonzero and a == 0):
                    yield None
                    continue
                yield fn(n, a)
    return run


def _with_y(fn, nmin=0):
    def run(args):
        ns, As = _grid_n_a(args, nmin)
        ys = parse_values(args.y or "-2,0,1,3/2")
        for n in ns:
            for a in As:
                for y in ys:
                    yield None if n < nmin else fn(n, a, y)
    return run


def _suite_weighted(args):
    ns, As = _grid_n_a(args)
    xs = parse_values(args.x0 or "-2..5")
    for n in ns:
        for a in As:
            for x in xs:
                yield None if n < 1 else ids.check_weighted_powersum(x, n, a)


def _suite_powersum(base):
    def run(args):
        ns = _int_values(args.n or "1..40", "--n")
        for n in ns:
            for a in parse_values(args.a or "-5..5"):
                yield None if (n < 1 or a == 0) else ids.check_powersum_theorem(base, n, a)
    return run


def _suite_quartic_general(args):
    ns = _int_values(args.n or "1..25", "--n")
    xs = parse_values(args.x0 or "-1..2")
    for n in ns:
        for a in parse_values(args.a or _DEFAULT_A):
            for x in xs:
                yield None if (n < 1 or a == 0) else ids.check_quartic(n, a, x, general=True)


def _suite_transform(args):
    rng = random.Random(args.seed)
    length = args.length
    trials = args.trials
    for _ in range(trials):
        seq = [Fraction(rng.randint(-50, 50), rng.randint(1, 9)) for _ in range(length)]
        a = 0
        while a == 0:
            a = Fraction(rng.randint(-9, 9), rng.randint(1, 4))
        x0 = Fraction(rng.randint(-9, 9), rng.randint(1, 4))
        yield ids.check_transform_roundtrip(seq, x0, a)


IDENTITY_SUITES: dict[str, Callable] = {
    "egf": _suite_egf,
    "reflection": _simple(ids.check_reflection, nmin=0),
    "three_term": _simple(ids.check_three_term),
    "mixed": _with_y(ids.check_mixed_convolution, nmin=1),
    "addition": _with_y(ids.check_addition),
    "complement": _simple(ids.check_complement),
    "row_sum": _simple(ids.check_row_sum, nonzero=True),
    "weighted_powersum": _suite_weighted,
    "powersum2": _suite_powersum(2),
    "powersum3": _suite_powersum(3),
    "powersum4": _suite_powersum(4),
    "powersum5": _suite_powersum(5),
    "quartic": _simple(lambda n, a: ids.check_quartic(n, a), nonzero=True),
    "quartic_general": _suite_quartic_general,
    "transform": _suite_transform,
}


def _identity_failure(r: ids.IdentityReport) -> dict:
    bad = r if not r.passed else r.secondary
    return {"spec": bad.identity, "n": bad.params.get("n"),
            "a": _s(bad.params.get("a")), "modulus": None,
            "lhs": _s(bad.lhs), "rhs": _s(bad.rhs),
            "params": {k: _s(v) for k, v in bad.params.items()}}


# -- output ------------------------------------------------------------------


def _emit(text: str, out: Optional[str]) -> None:
    if out:
        with open(out, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _record(command: str, parameters: dict, results, t0: float, **extra) -> dict:
    rec = {"command": command, "parameters": parameters, "results": results}
    rec.update(extra)
    rec["timing_ms"] = round((time.perf_counter() - t0) * 1000, 3)
    return rec


def _dump_json(rec: dict) -> str:
    return json.dumps(rec, indent=2) + "\n"


# -- commands ----------------------------------------------------------------


def cmd_compute(args) -> int:
    t0 = time.perf_counter()
    a = as_scalar(Fraction(args.a))
    params = {"n": args.n, "a": _s(a)}
    modulus = args.mod
    if args.rule:
        if a == 0:
            raise UsageError("a modulus rule needs a != 0")
        if args.n % 2 or args.n < 2:
            raise UsageError("a modulus rule needs an even index n >= 2")
        modulus = SPECS[args.rule].modulus(args.n // 2)
        params["rule"] = args.rule
    if modulus is not None:
        if not isinstance(a, int):
            raise UsageError("modular evaluation needs an integer a")
        try:
            ring = ResidueRing(modulus)
        except ValueError as exc:
            raise UsageError(str(exc)) from None
        value = euler_number_mod(args.n, a, ring).value
        params["modulus"] = _s(modulus)
        result = {"value": _s(value), "modulus": _s(modulus)}
        text = f"{value} (mod {modulus})\n"
    else:
        value = euler_number(args.n, a)
        result = {"value": _s(value)}
        text = f"{value}\n"
    if args.format == "json":
        _emit(_dump_json(_record("compute", params, result, t0)), args.out)
    elif args.format == "csv":
        cols = ["n", "value"] + (["modulus"] if modulus is not None else [])
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(cols)
        w.writerow([args.n, result["value"]] + ([result["modulus"]] if modulus is not None else []))
        _emit(buf.getvalue(), args.out)
    else:
        _emit(text, args.out)
    return EXIT_PASS


def cmd_poly(args) -> int:
    t0 = time.perf_counter()
    p = euler_number_poly(args.n)
    if args.format == "json":
        rec = _record("poly", {"n": args.n}, {"text": str(p), "coefficients": [_s(c) for c in p.coeffs]}, t0)
        _emit(_dump_json(rec), args.out)
    elif args.format == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["degree", "coefficient"])
        for i, c in enumerate(p.coeffs):
            w.writerow([i, _s(c)])
        _emit(buf.getvalue(), args.out)
    else:
        _emit(f"{p}\n", args.out)
    return EXIT_PASS


def cmd_table(args) -> int:
    a = as_scalar(Fraction(args.a))
    if args.mod is not None:
        if not isinstance(a, int):
            raise UsageError("modular tables need an integer a")
        try:
            ring = ResidueRing(args.mod)
        except ValueError as exc:
            raise UsageError(str(exc)) from None
        values = [r.value for r in build_table(args.n, a, "modular", ring).values]
    else:
        values = list(build_table(args.n, a).values)
    if args.format == "json":
        # The table itself is the record; no timing so the bytes are reproducible.
        text = json.dumps([{"n": n, "value": _s(v)} for n, v in enumerate(values)], separators=(",", ":")) + "\n"
    elif args.format == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["n", "value"])
        for n, v in enumerate(values):
            w.writerow([n, _s(v)])
        text = buf.getvalue()
    else:
        text = "".join(f"{n} {v}\n" for n, v in enumerate(values))
    _emit(text, args.out)
    return EXIT_PASS


def _verify_congruence(args, t0):
    spec = SPECS[args.suite]
    if not args.n:
        raise UsageError(f"{args.suite} needs --n lo..hi")
    ns = _int_values(args.n, "--n")
    As = _int_values(args.a or "-20..20", "--a")
    rep = scan(spec, ns, As, jobs=args.jobs, keep_reports=args.details)
    params = {"suite": args.suite, "n": args.n, "a": args.a or "-20..20", "modulus_rule": _modulus_label(spec)}
    results = [r.as_dict() for r in rep.reports] if args.details else None
    return params, rep.checks, rep.skipped, [f.as_dict() for f in rep.failures], results


def _modulus_label(spec) -> str:
    if spec.p_adic:
        return f"{spec.prime}^(ord_{spec.prime}(n)+{spec.shift})"
    return str(spec.prime ** spec.shift)


def _verify_identity(args, t0):
    suite = IDENTITY_SUITES[args.suite]
    checks = skipped = 0
    failures, results = [], []
    for r in suite(args):
        if r is None:
            skipped += 1
            continue
        checks += 1
        if args.details:
            results.append({"identity": r.identity, "params": {k: _s(v) for k, v in r.params.items()},
                            "pass": r.ok, "note": r.note})
        if not r.ok:
            failures.append(_identity_failure(r))
    params = {"suite": args.suite}
    for key in ("n", "a", "y", "x0", "order"):
        v = getattr(args, key, None)
        if v is not None:
            params[key] = v
    if args.suite == "transform":
        params.update(seed=args.seed, length=args.length, trials=args.trials)
    return params, checks, skipped, failures, (results if args.details else None)


def cmd_verify(args) -> int:
    t0 = time.perf_counter()
    if args.suite in SPECS:
        params, checks, skipped, failures, results = _verify_congruence(args, t0)
    elif args.suite in IDENTITY_SUITES:
        params, checks, skipped, failures, results = _verify_identity(args, t0)
    else:
        raise UsageError(f"unknown suite {args.suite!r}; known: {', '.join(list(SPECS) + list(IDENTITY_SUITES))}")
    ok = not failures
    if args.format == "json":
        rec = {"command": "verify", "parameters": params, "checks": checks, "skipped": skipped,
               "failures": failures, "pass": ok}
        if results is not None:
            rec["results"] = results
        rec["timing_ms"] = round((time.perf_counter() - t0) * 1000, 3)
        _emit(_dump_json(rec), args.out)
    elif args.format == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["spec", "n", "a", "modulus", "lhs", "rhs"])
        for f in failures:
            w.writerow([f["spec"], f["n"], f["a"], f["modulus"] or "", f["lhs"], f["rhs"]])
        _emit(buf.getvalue(), args.out)
    else:
        lines = [f"{args.suite}: {'PASS' if ok else 'FAIL'} ({checks} checks, {skipped} skipped, {len(failures)} failures)"]
        for f in failures:
            mod = f" mod {f['modulus']}" if f["modulus"] else ""
            lines.append(f"  FAIL {f['spec']} n={f['n']} a={f['a']}{mod}: lhs={f['lhs']} rhs={f['rhs']}")
        if results and args.suite in SPECS:
            for r in results:
                lines.append(f"  n={r['n']} a={r['a']}: lhs={r['lhs']} rhs={r['rhs']} mod {r['modulus']}")
        _emit("\n".join(lines) + "\n", args.out)
    return EXIT_PASS if ok else EXIT_FAIL


# -- argument parsing --------------------------------------------------------


def _positive(text: str) -> int:
    v = int(text)
    if v < 1:
        raise argparse.ArgumentTypeError("must be >= 1")
    return v


def _nonneg(text: str) -> int:
    v = int(text)
    if v < 0:
        raise argparse.ArgumentTypeError("must be >= 0")
    return v


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["json", "csv", "text"], default="text")
    common.add_argument("--out", metavar="PATH", help="write output here instead of stdout")
    common.add_argument("--jobs", type=_positive, default=1, help="worker processes for scans")
    common.add_argument("-v", "--verbose", action="store_true")

    parser = argparse.ArgumentParser(prog="eulerseq", description="Generalized Euler numbers E_{n,a}.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("compute", parents=[common], help="E_{n,a}, exactly or modulo m")
    p.add_argument("-n", type=_nonneg, required=True)
    p.add_argument("-a", required=True, help="integer or fraction p/q")
    g = p.add_mutually_exclusive_group()
    g.add_argument("--mod", type=int, help="reduce modulo this integer")
    g.add_argument("--rule", choices=[k for k, s in SPECS.items() if s.p_adic],
                   help="reduce modulo the prime power of a theorem (uses n/2 for ord_p)")
    p.set_defaults(func=cmd_compute)

    p = sub.add_parser("poly", parents=[common], help="E_{n,a} as a polynomial in a")
    p.add_argument("-n", type=_nonneg, required=True)
    p.set_defaults(func=cmd_poly)

    p = sub.add_parser("table", parents=[common], help="E_{0..N,a}")
    p.add_argument("-n", "-N", dest="n", type=_nonneg, required=True, help="largest index")
    p.add_argument("-a", required=True)
    p.add_argument("--mod", type=int)
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("verify", parents=[common], help="run an identity suite or a congruence scan",
                       description="Suites: " + ", ".join(list(SPECS) + list(IDENTITY_SUITES)))
    p.add_argument("suite")
    p.add_argument("--n", help="index range, e.g. 5..40")
    p.add_argument("--a", help="parameter values, e.g. -5..5 or 1/2,2")
    p.add_argument("--y", help="shift values for addition/mixed")
    p.add_argument("--x0", help="evaluation points for weighted_powersum/quartic_general")
    p.add_argument("--order", type=_nonneg, help="series order for egf")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--length", type=_positive, default=30)
    p.add_argument("--trials", type=_positive, default=20)
    p.add_argument("--details", action="store_true", help="include every check in the output")
    p.set_defaults(func=cmd_verify)
    return parser


_VALUE_FLAGS = {"-a", "--a", "--n", "--y", "--x0"}


def _glue_negative_values(argv: list[str]) -> list[str]:
    # argparse reads "-5..5" or "-1/2" as an option; bind such values to their flag.
    out: list[str] = []
    i = 0
    while i < len(argv):
        tok = argv[i]
        if tok in _VALUE_FLAGS and i + 1 < len(argv) and argv[i + 1].startswith("-") and argv[i + 1][1:2].isdigit():
            out.append(f"{tok}={argv[i + 1]}")
            i += 2
            continue
        out.append(tok)
        i += 1
    return out


def main(argv: Optional[Iterable[str]] = None) -> int:
    parser = build_parser()
    argv = sys.argv[1:] if argv is None else list(argv)
    args = parser.parse_args(_glue_negative_values(argv))
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        return args.func(args)
    except (UsageError, DomainError, NotInvertibleError, ValueError) as exc:
        print(f"eulerseq: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"eulerseq: I/O error: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
