"""
Command line for term queries, identity verification and fuzzing.

Usage:
    horadam term F 10
    horadam term 3,-2,1,4 -25
    horadam term j -4 --closed-form
    horadam solve F L 0 0 1 0 1
    horadam verify --ids catalan-F,three-square-L --range u=-5..5 --format summary
    horadam verify --ids all --format jsonl --out report.jsonl --workers 4
    horadam fuzz --seed 42 --count 1000 --coeff-bound 5 --index-bound 8
    horadam catalog --manifest

Exit status: 0 when nothing fails, 1 when any check fails, 2 on usage errors.
"""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from horadam.catalog import catalog, format_manifest, lookup
from horadam.checks import Skipped, solve_lambda_pair
from horadam.config import FUZZ_COEFF_BOUND, FUZZ_INDEX_BOUND, load_settings
from horadam.console import log, set_quiet
from horadam.fuzz import fuzz_general
from horadam.grid import GridSpec, parse_interval, run_grid
from horadam.report import ReportFormat, VerificationReport, emit_report
from horadam.sequences import (
    BUILTIN_LABELS,
    RecurrencePair,
    SequenceError,
    SequenceSpec,
    builtin,
    format_exact,
    negative_index_closed_form,
    parse_exact,
    sequence_for_label,
    term,
    term_fast,
)
from horadam.templates import PARAMETER_SYMBOLS

EXIT_PASS = 0
EXIT_FAIL = 1
EXIT_USAGE = 2


def parse_sequence(text: str) -> SequenceSpec:
    """A builtin label, a witness label (X, Y) or ``p,q,w0,w1``."""
    if ',' not in text:
        return sequence_for_label(text)
    parts = text.split(',')
    if len(parts) != 4:
        raise SequenceError(f'expected p,q,w0,w1, got {text!r}')
    try:
        p, q = int(parts[0]), int(parts[1])
    except ValueError:
        raise SequenceError(f'p and q must be integers, got {text!r}') from None
    return SequenceSpec(RecurrencePair(p, q), parse_exact(parts[2]), parse_exact(parts[3]))


def parse_range(text: str) -> tuple[str, tuple[int, int]]:
    """``sym=lo..hi`` for one template parameter."""
    symbol, sep, interval = text.partition('=')
    symbol = symbol.strip()
    if not sep or symbol not in PARAMETER_SYMBOLS:
        raise ValueError(f'expected sym=lo..hi with sym in {",".join(PARAMETER_SYMBOLS)}, got {text!r}')
    return symbol, parse_interval(interval)


def _write(data: bytes, out: str | None) -> None:
    if out:
        Path(out).write_bytes(data)
        log(f'Report written to {out}')
    else:
        sys.stdout.write(data.decode('utf-8'))
        sys.stdout.flush()


def _finish(report: VerificationReport, args) -> int:
    _write(emit_report(report, args.format), args.out)
    totals = report.totals
    log(f'SUMMARY: {report.checks} checks, Holds {totals["Holds"]}, Fails {totals["Fails"]}, '
        f'Skipped {totals["Skipped"]} ({report.elapsed:.2f}s)')
    return EXIT_PASS if report.passed else EXIT_FAIL


def cmd_term(args, settings) -> int:
    """Print W_n, or W_{-n} from the reflection formula with --closed-form."""
    if args.closed_form:
        builtin(args.sequence)
        if args.n > 0:
            raise SequenceError('--closed-form evaluates W_{-n}; pass an index n <= 0')
        value = negative_index_closed_form(args.sequence, -args.n)
    else:
        spec = parse_sequence(args.sequence)
        value = term(spec, args.n) if args.recurrence else term_fast(spec, args.n)
    print(format_exact(value))
    return EXIT_PASS


def cmd_solve(args, settings) -> int:
    """Print the solved (lambda1, lambda2), or Skipped when Delta_xy = 0."""
    X, Y = parse_sequence(args.x), parse_sequence(args.y)
    result = solve_lambda_pair(X, Y, args.a, args.b, args.c, args.d, args.e)
    if isinstance(result, Skipped):
        payload = {'outcome': 'Skipped', 'reason': result.reason.value}
    else:
        payload = {'lambda1': format_exact(result[0]), 'lambda2': format_exact(result[1])}
    if args.json:
        print(json.dumps(payload))
    elif 'reason' in payload:
        print(f'Skipped: {payload["reason"]} (Delta_xy = 0)')
    else:
        print(f'lambda1 = {payload["lambda1"]}')
        print(f'lambda2 = {payload["lambda2"]}')
    return EXIT_PASS


def cmd_verify(args, settings) -> int:
    """Grid-verify the requested identities and write the report."""
    ids = [i.strip() for i in args.ids.split(',') if i.strip()]
    grid = GridSpec(
        ranges=dict(args.range or []),
        k_range=parse_interval(args.k) if args.k else None,
        max_tuples=args.max_tuples if args.max_tuples is not None else settings.max_tuples,
    )
    workers = args.workers if args.workers is not None else settings.workers
    if workers < 1:
        raise ValueError(f'--workers must be >= 1, got {workers}')
    report = run_grid(ids, grid, workers=workers)
    return _finish(report, args)


def cmd_fuzz(args, settings) -> int:
    """Check the general lemmas over random recurrences and write the report."""
    report = fuzz_general(args.seed, args.count, args.coeff_bound, args.index_bound)
    return _finish(report, args)


def cmd_catalog(args, settings) -> int:
    """List identity ids, the manifest table, or the full entry of given ids."""
    if args.show:
        for identity_id in args.show:
            t = lookup(identity_id)
            print(f'{t.id} [{t.label}] ({", ".join(t.parameters)})')
            print(f'    {t.formula()}')
            for constraint in t.constraints:
                print(f'    where {constraint}')
            if t.limit:
                print(f'    limit {t.limit}')
            for d in t.nonzero:
                print(f'    requires {d} != 0')
            if t.note:
                print(f'    note: {t.note}')
    elif args.manifest:
        sys.stdout.write(format_manifest())
    else:
        for t in catalog():
            print(t.id)
    return EXIT_PASS


def _add_report_options(parser: argparse.ArgumentParser) -> None:
    parser.add_argument('--format', choices=[f.value for f in ReportFormat], default=ReportFormat.SUMMARY.value,
                        help='Report format (default: summary)')
    parser.add_argument('--out', help='Write the report to PATH instead of stdout')
    parser.add_argument('--quiet', action='store_true', help='No progress logging')


def build_parser() -> argparse.ArgumentParser:
    """Parser with one subcommand per handler; each sets ``handler``."""
    parser = argparse.ArgumentParser(prog='horadam', description='Second-order recurrence identity verifier')
    sub = parser.add_subparsers(dest='command', required=True)

    p = sub.add_parser('term', help='Print W_n exactly')
    p.add_argument('sequence', help=f'One of {", ".join(BUILTIN_LABELS)} or p,q,w0,w1 (seeds may be a/b)')
    p.add_argument('n', type=int, help='Index (any integer)')
    p.add_argument('--recurrence', action='store_true', help='Use the memoized recurrence instead of matrix powers')
    p.add_argument('--closed-form', action='store_true', help='Builtins only: reflection formula for n <= 0')
    p.set_defaults(handler=cmd_term)

    p = sub.add_parser('solve', help='Solve the lambda pair of the three-term relation')
    p.add_argument('x', help='Sequence X')
    p.add_argument('y', help='Sequence Y (same recurrence as X)')
    for symbol in ('a', 'b', 'c', 'd', 'e'):
        p.add_argument(symbol, type=int)
    p.add_argument('--json', action='store_true', help='Output as JSON only')
    p.set_defaults(handler=cmd_solve)

    p = sub.add_parser('verify', help='Grid-verify catalog identities')
    p.add_argument('--ids', default='all', help='Comma-separated identity ids, or all (default)')
    p.add_argument('--range', action='append', type=parse_range, metavar='SYM=LO..HI',
                   help='Override the range of one symbol (repeatable)')
    p.add_argument('--k', metavar='LO..HI', help='Range of summation limits')
    p.add_argument('--max-tuples', type=int, help='Cap on assignments per identity')
    p.add_argument('--workers', type=int, help='Process pool size')
    _add_report_options(p)
    p.set_defaults(handler=cmd_verify)

    p = sub.add_parser('fuzz', help='Fuzz the general lemmas over random recurrences')
    p.add_argument('--seed', type=int, required=True)
    p.add_argument('--count', type=int, required=True)
    p.add_argument('--coeff-bound', type=int, default=FUZZ_COEFF_BOUND)
    p.add_argument('--index-bound', type=int, default=FUZZ_INDEX_BOUND)
    _add_report_options(p)
    p.set_defaults(handler=cmd_fuzz)

    p = sub.add_parser('catalog', help='List the identity catalog')
    p.add_argument('--manifest', action='store_true', help='Print the manifest table')
    p.add_argument('--show', nargs='+', metavar='ID', help='Print the formula of the given identities')
    p.set_defaults(handler=cmd_catalog)
    return parser


def main(argv: list[str] | None = None) -> int:
    """Run one subcommand; returns 0 (pass), 1 (a check failed) or 2 (bad input)."""
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        settings = load_settings()
        set_quiet(settings.quiet or getattr(args, 'quiet', False))
        return args.handler(args, settings)
    except ValueError as e:
        print(f'Error: {e}', file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
