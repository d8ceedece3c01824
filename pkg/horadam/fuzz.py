"""
Seeded fuzzing of the general lemmas over random recurrences.

The generator is xorshift64* so a report can be reproduced from its seed
by any implementation:

    state: seeded through one splitmix64 step (a zero state is remapped)
    step:  x ^= x >> 12; x ^= x << 25; x ^= x >> 27   (mod 2^64)
    out:   x * 0x2545F4914F6CDD1D                       (mod 2^64)

Bounded draws use rejection sampling, so they are unbiased.
"""
from __future__ import annotations

import time

from horadam import checks
from horadam.config import FUZZ_COEFF_BOUND, FUZZ_INDEX_BOUND
from horadam.console import log
from horadam.report import CheckRecord, VerificationReport
from horadam.sequences import RecurrencePair, SequenceSpec

MASK64 = (1 << 64) - 1
GOLDEN_GAMMA = 0x9E3779B97F4A7C15
XORSHIFT_MULTIPLIER = 0x2545F4914F6CDD1D


def splitmix64(x: int) -> int:
    """One splitmix64 step; turns the user seed into the initial xorshift state."""
    z = (x + GOLDEN_GAMMA) & MASK64
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
    return z ^ (z >> 31)


class Xorshift64Star:
    def __init__(self, seed: int):
        self._state = splitmix64(seed & MASK64) or GOLDEN_GAMMA

    def next_u64(self) -> int:
        """x ^= x >> 12; x ^= x << 25; x ^= x >> 27, output multiplied mod 2**64."""
        x = self._state
        x ^= x >> 12
        x ^= (x << 25) & MASK64
        x ^= x >> 27
        self._state = x
        return (x * XORSHIFT_MULTIPLIER) & MASK64

    def below(self, n: int) -> int:
        """Uniform integer in [0, n)."""
        if n < 1:
            raise ValueError(f'bound must be >= 1, got {n}')
        limit = (1 << 64) - (1 << 64) % n
        while True:
            value = self.next_u64()
            if value < limit:
                return value % n

    def integer(self, lo: int, hi: int) -> int:
        """Uniform integer in [lo, hi]."""
        if lo > hi:
            raise ValueError(f'empty interval [{lo}, {hi}]')
        return lo + self.below(hi - lo + 1)

    def nonzero(self, bound: int) -> int:
        """Uniform integer in [-bound, bound] without 0."""
        value = self.integer(-bound, bound - 1)
        return value if value < 0 else value + 1


FUZZ_CHECKS = (
    'fuzz/three-term-xx',
    'fuzz/three-term-xy-strict',
    'fuzz/lambda-relation',
    'fuzz/three-term-x0',
    'fuzz/weighted-sum-xy',
    'fuzz/weighted-sum-xx-1',
    'fuzz/weighted-sum-xx-2',
    'fuzz/weighted-sum-xx-3',
    'fuzz/binomial-sum-1',
    'fuzz/binomial-sum-2',
    'fuzz/binomial-sum-3',
)


def _draw_records(rng: Xorshift64Star, draw: int, coeff_bound: int, index_bound: int) -> list[CheckRecord]:
    """Draw one recurrence pair and one index tuple, then run every fuzz check on them."""
    p = rng.integer(-coeff_bound, coeff_bound)
    q = rng.nonzero(coeff_bound)
    x0, x1, y0, y1 = (rng.integer(-coeff_bound, coeff_bound) for _ in range(4))
    pair = RecurrencePair(p, q)
    X = SequenceSpec(pair, x0, x1, name='X')
    Y = SequenceSpec(pair, y0, y1, name='Y')

    a, b, c, d, e, m, m2 = (rng.integer(-index_bound, index_bound) for _ in range(7))
    k_any = rng.integer(-index_bound, index_bound)
    k_binomial = rng.integer(0, index_bound)

    base = {'draw': draw, 'p': p, 'q': q, 'x0': x0, 'x1': x1, 'y0': y0, 'y1': y1,
            'a': a, 'b': b, 'c': c, 'd': d, 'e': e}
    at_m = dict(base, m=m)
    outcomes = [
        (at_m, checks.check_three_term_xx(X, a, b, c, d, e, m)),
        (at_m, checks.check_three_term_xy(X, Y, a, b, c, d, e, m, strict=True)),
        (dict(base, m=m2), checks.check_lambda_relation(X, Y, a, b, c, d, e, m2)),
        (at_m, checks.check_lemma3(X, a, b, c, m)),
        (dict(at_m, k=k_any), checks.check_weighted_sum_xy(X, Y, a, b, c, d, e, m, k_any)),
    ]
    outcomes += [(dict(at_m, k=k_any), checks.check_weighted_sum_xx(X, v, a, b, c, d, e, m, k_any))
                 for v in (1, 2, 3)]
    outcomes += [(dict(at_m, k=k_binomial), checks.check_binomial_sum(X, v, a, b, c, d, e, m, k_binomial))
                 for v in (1, 2, 3)]
    return [CheckRecord.of(name, assignment, outcome)
            for name, (assignment, outcome) in zip(FUZZ_CHECKS, outcomes)]


def fuzz_general(seed: int, count: int, coeff_bound: int = FUZZ_COEFF_BOUND,
                 index_bound: int = FUZZ_INDEX_BOUND) -> VerificationReport:
    """
    Check the general lemmas on ``count`` random same-recurrence pairs.

    Each draw picks (p, q != 0), integer seeds for X and Y and an index tuple,
    then records one outcome per entry of FUZZ_CHECKS.
    """
    for name, value in (('count', count), ('coeff_bound', coeff_bound), ('index_bound', index_bound)):
        if isinstance(value, bool) or not isinstance(value, int) or value < 1:
            raise ValueError(f'{name} must be an integer >= 1, got {value!r}')

    log(f'[fuzz] seed={seed} count={count} coeff_bound={coeff_bound} index_bound={index_bound}')
    started = time.perf_counter()
    rng = Xorshift64Star(seed)
    report = VerificationReport('fuzz', seed=seed)
    progress_every = max(count // 10, 1)
    for draw in range(count):
        report.extend(_draw_records(rng, draw, coeff_bound, index_bound))
        if (draw + 1) % progress_every == 0:
            log(f'[fuzz] {draw + 1}/{count} draws, {report.totals["Fails"]} failing checks')
    report.elapsed = time.perf_counter() - started
    return report
