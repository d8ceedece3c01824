"""
Grid verification of catalog entries.

Each identity's free parameters are enumerated over inclusive ranges;
constraint-derived symbols are computed. Spaces larger than max_tuples are
downsampled with a generator seeded from (identity id, grid, max_tuples), so
the subset never depends on run order or worker count.
"""
from __future__ import annotations

import hashlib
import itertools
import time
from collections.abc import Iterable, Iterator, Mapping
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from horadam.catalog import lookup, resolve_ids
from horadam.config import BINOMIAL_K_RANGE, CLOSED_RANGE, GEOMETRIC_K_RANGE, MAX_TUPLES, SUM_OFFSET_RANGE
from horadam.console import log
from horadam.fuzz import Xorshift64Star
from horadam.report import CheckRecord, VerificationReport
from horadam.templates import IdentityTemplate, SumKind, evaluate_instance

Interval = tuple[int, int]


def parse_interval(text: str) -> Interval:
    """``"lo..hi"`` with inclusive, possibly negative, integer bounds."""
    lo, sep, hi = text.partition('..')
    try:
        if not sep:
            raise ValueError
        interval = (int(lo), int(hi))
    except ValueError:
        raise ValueError(f'expected an interval lo..hi, got {text!r}') from None
    _check_interval(text, interval)
    return interval


def _check_interval(name: str, interval: Interval) -> None:
    lo, hi = interval
    if lo > hi:
        raise ValueError(f'{name}: empty interval {lo}..{hi}')


@dataclass(frozen=True)
class GridSpec:
    """Per-symbol ranges override the defaults; k_range applies to summation limits."""

    ranges: tuple[tuple[str, Interval], ...] = ()
    k_range: Interval | None = None
    max_tuples: int = MAX_TUPLES

    def __init__(self, ranges: Mapping[str, Interval] | Iterable[tuple[str, Interval]] = (),
                 k_range: Interval | None = None, max_tuples: int = MAX_TUPLES):
        items = dict(ranges.items() if isinstance(ranges, Mapping) else ranges)
        for symbol, interval in items.items():
            _check_interval(symbol, interval)
        if k_range is not None:
            _check_interval('k', k_range)
        if isinstance(max_tuples, bool) or not isinstance(max_tuples, int) or max_tuples < 1:
            raise ValueError(f'max_tuples must be an integer >= 1, got {max_tuples!r}')
        object.__setattr__(self, 'ranges', tuple(sorted((s, tuple(i)) for s, i in items.items())))
        object.__setattr__(self, 'k_range', tuple(k_range) if k_range is not None else None)
        object.__setattr__(self, 'max_tuples', max_tuples)

    def range_for(self, template: IdentityTemplate, symbol: str) -> Interval:
        """Override, else the default for this kind of identity; a summation limit is clipped to its sign."""
        overrides = dict(self.ranges)
        kind = template.sum_kind
        if kind is not None and template.limit is not None and symbol == template.limit.symbol:
            default = BINOMIAL_K_RANGE if kind is SumKind.BINOMIAL else GEOMETRIC_K_RANGE
            lo, hi = self.k_range or overrides.get(symbol) or default
            if not template.limit.admits(lo):
                lo = 0
            return lo, hi
        if symbol in overrides:
            return overrides[symbol]
        return SUM_OFFSET_RANGE if kind is not None else CLOSED_RANGE


def _sample_seed(template: IdentityTemplate, intervals: list[tuple[str, Interval]], max_tuples: int) -> int:
    grid_text = ';'.join(f'{symbol}={lo}..{hi}' for symbol, (lo, hi) in intervals)
    digest = hashlib.sha256(f'{template.id}|{grid_text}|{max_tuples}'.encode()).digest()
    return int.from_bytes(digest[:8], 'big')


def _floyd_sample(rng: Xorshift64Star, population: int, size: int) -> list[int]:
    """Floyd's algorithm: ``size`` distinct indices below ``population``, sorted."""
    selected: set[int] = set()
    for j in range(population - size, population):
        t = rng.below(j + 1)
        selected.add(j if t in selected else t)
    return sorted(selected)


def assignments(template: IdentityTemplate, grid: GridSpec) -> Iterator[dict[str, int]]:
    """Complete assignments (derived symbols included) in a fixed order."""
    intervals = [(s, grid.range_for(template, s)) for s in template.free_parameters]
    if any(lo > hi for _, (lo, hi) in intervals):
        return
    axes = [range(lo, hi + 1) for _, (lo, hi) in intervals]
    names = [s for s, _ in intervals]
    population = 1
    for axis in axes:
        population *= len(axis)

    if population <= grid.max_tuples:
        for values in itertools.product(*axes):
            yield template.complete(dict(zip(names, values)))
        return

    rng = Xorshift64Star(_sample_seed(template, intervals, grid.max_tuples))
    for flat in _floyd_sample(rng, population, grid.max_tuples):
        values = []
        for axis in reversed(axes):
            flat, digit = divmod(flat, len(axis))
            values.append(axis[digit])
        yield template.complete(dict(zip(names, reversed(values))))


def check_identity(template: IdentityTemplate, grid: GridSpec) -> list[CheckRecord]:
    """One record per grid assignment; assignments come out of complete() already validated."""
    return [CheckRecord.of(template.id, env, evaluate_instance(template, env))
            for env in assignments(template, grid)]


def _check_identity_by_id(identity_id: str, grid: GridSpec) -> list[CheckRecord]:
    return check_identity(lookup(identity_id), grid)


def _log_identity(identity_id: str, records: list[CheckRecord]) -> None:
    fails = sum(1 for r in records if r.outcome.tag == 'Fails')
    mark = '✓' if fails == 0 else '✗'
    log(f'[verify] {mark} {identity_id}: {len(records)} checks, {fails} failing')


def run_grid(ids: str | Iterable[str], grid: GridSpec | None = None, workers: int = 1) -> VerificationReport:
    """Check every requested identity over its grid; output order never depends on ``workers``."""
    grid = grid or GridSpec()
    templates = resolve_ids(ids)
    report = VerificationReport('grid')
    started = time.perf_counter()
    log(f'[verify] {len(templates)} identities, max {grid.max_tuples} assignments each')

    if workers > 1 and len(templates) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            batches = pool.map(_check_identity_by_id, [t.id for t in templates], itertools.repeat(grid))
            for template, records in zip(templates, batches):
                _log_identity(template.id, records)
                report.extend(records)
    else:
        for template in templates:
            records = check_identity(template, grid)
            _log_identity(template.id, records)
            report.extend(records)

    report.elapsed = time.perf_counter() - started
    return report
