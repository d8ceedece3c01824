"""
Determinants, the lambda solver and direct checkers for the general lemmas.

Every checker returns a CheckOutcome. A vanishing denominator is reported as
Skipped(ZeroDenominator) and is never a failure.
"""
from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

from horadam.sequences import ExactRational, SequenceError, SequenceSpec, format_exact, normalize, term
from horadam.sums import SumSpec, eval_binomial_sum, eval_geometric_sum, weight_power


class SkipReason(str, Enum):
    ZERO_DENOMINATOR = 'ZeroDenominator'
    PRECONDITION_UNMET = 'PreconditionUnmet'


@dataclass(frozen=True)
class Holds:
    tag = 'Holds'


@dataclass(frozen=True)
class Fails:
    lhs: ExactRational
    rhs: ExactRational
    tag = 'Fails'

    def __str__(self):
        return f'Fails(lhs={format_exact(self.lhs)}, rhs={format_exact(self.rhs)})'


@dataclass(frozen=True)
class Skipped:
    reason: SkipReason
    tag = 'Skipped'


CheckOutcome = Holds | Fails | Skipped

HOLDS = Holds()
ZERO_DENOMINATOR = Skipped(SkipReason.ZERO_DENOMINATOR)


def compare(lhs: ExactRational, rhs: ExactRational) -> CheckOutcome:
    """Holds when both sides are the same rational, otherwise Fails carrying both."""
    lhs, rhs = normalize(lhs), normalize(rhs)
    return HOLDS if lhs == rhs else Fails(lhs, rhs)


def require_same_recurrence(x: SequenceSpec, y: SequenceSpec) -> None:
    """Raise SequenceError unless x and y share (p, q)."""
    if x.pair != y.pair:
        raise SequenceError(
            f'{x.label} and {y.label} do not share a recurrence: '
            f'(p, q) = ({x.pair.p}, {x.pair.q}) vs ({y.pair.p}, {y.pair.q})'
        )


@dataclass(frozen=True)
class DeltaArgs:
    X: SequenceSpec
    Y: SequenceSpec
    d: int
    e: int
    a: int
    b: int

    def __post_init__(self):
        require_same_recurrence(self.X, self.Y)


def delta2(args: DeltaArgs) -> ExactRational:
    """X_{d-a} Y_{e-b} - X_{e-a} Y_{d-b}."""
    X, Y, d, e, a, b = args.X, args.Y, args.d, args.e, args.a, args.b
    return normalize(term(X, d - a) * term(Y, e - b) - term(X, e - a) * term(Y, d - b))


def deltas(X: SequenceSpec, Y: SequenceSpec, a: int, b: int, c: int, d: int, e: int
           ) -> tuple[ExactRational, ExactRational, ExactRational]:
    """(Delta_xy, Delta_1, Delta_2) of the three-term relation X_{m-c} ~ X_{m-a}, Y_{m-b}."""
    return (
        delta2(DeltaArgs(X, Y, d, e, a, b)),
        delta2(DeltaArgs(X, Y, d, e, c, b)),
        delta2(DeltaArgs(X, X, d, e, a, c)),
    )


def solve_lambda_pair(X: SequenceSpec, Y: SequenceSpec, a: int, b: int, c: int, d: int, e: int
                      ) -> tuple[ExactRational, ExactRational] | Skipped:
    """
    Solve X_{n-c} = l1*X_{n-a} + l2*Y_{n-b} at n = d and n = e by Cramer's rule.

    For same-recurrence pairs the solution then holds at every n.
    """
    require_same_recurrence(X, Y)
    dxy, d1, d2 = deltas(X, Y, a, b, c, d, e)
    if dxy == 0:
        return ZERO_DENOMINATOR
    return normalize(Fraction(d1) / dxy), normalize(Fraction(d2) / dxy)


def check_lambda_relation(X: SequenceSpec, Y: SequenceSpec, a: int, b: int, c: int, d: int, e: int,
                          m: int) -> CheckOutcome:
    """X_{m-c} = l1*X_{m-a} + l2*Y_{m-b} with (l1, l2) solved from n = d and n = e."""
    solved = solve_lambda_pair(X, Y, a, b, c, d, e)
    if isinstance(solved, Skipped):
        return solved
    l1, l2 = solved
    return compare(term(X, m - c), l1 * term(X, m - a) + l2 * term(Y, m - b))


def check_three_term_xy(X: SequenceSpec, Y: SequenceSpec, a: int, b: int, c: int, d: int, e: int, m: int,
                        strict: bool = False) -> CheckOutcome:
    """
    Delta_xy X_{m-c} = Delta_1 X_{m-a} + Delta_2 Y_{m-b}.

    The cleared form holds even when Delta_xy = 0; ``strict`` instead skips
    those tuples as PreconditionUnmet.
    """
    require_same_recurrence(X, Y)
    dxy, d1, d2 = deltas(X, Y, a, b, c, d, e)
    if strict and dxy == 0:
        return Skipped(SkipReason.PRECONDITION_UNMET)
    return compare(dxy * term(X, m - c), d1 * term(X, m - a) + d2 * term(Y, m - b))


def check_three_term_xx(X: SequenceSpec, a: int, b: int, c: int, d: int, e: int, m: int) -> CheckOutcome:
    """The three-term relation with Y = X."""
    return check_three_term_xy(X, X, a, b, c, d, e, m)


def check_lemma3(X: SequenceSpec, a: int, b: int, c: int, m: int) -> CheckOutcome:
    """Single-sequence three-term relation with the determinants taken at d = a, e = b."""
    x = lambda n: term(X, n)  # noqa: E731
    lhs = (x(0) ** 2 - x(b - a) * x(a - b)) * x(m - c)
    rhs = ((x(a - c) * x(0) - x(b - c) * x(a - b)) * x(m - a)
           + (x(0) * x(b - c) - x(b - a) * x(a - c)) * x(m - b))
    return compare(lhs, rhs)


def _ratio(numerator: ExactRational, denominator: ExactRational) -> ExactRational:
    return normalize(Fraction(numerator) / denominator)


def check_weighted_sum_xy(X: SequenceSpec, Y: SequenceSpec, a: int, b: int, c: int, d: int, e: int,
                          m: int, k: int) -> CheckOutcome:
    """Geometric sum of Y terms weighted by Delta_xy/Delta_1, against its closed form in X."""
    require_same_recurrence(X, Y)
    dxy, d1, d2 = deltas(X, Y, a, b, c, d, e)
    if 0 in (dxy, d1, d2):
        return ZERO_DENOMINATOR
    weight = _ratio(dxy, d1)
    lhs = eval_geometric_sum(SumSpec(Y, weight, m - k * (a - c) - b + c, a - c), k)
    rhs = (_ratio(dxy, d2) * weight_power(weight, k) * term(X, m)
           - _ratio(d1, d2) * term(X, m - (k + 1) * (a - c)))
    return compare(lhs, rhs)


def _xx_deltas(X: SequenceSpec, a: int, b: int, c: int, d: int, e: int):
    dxx = delta2(DeltaArgs(X, X, d, e, a, b))
    _, d1, d2 = deltas(X, X, a, b, c, d, e)
    return dxx, d1, d2


def _check_variant(variant: int) -> None:
    if variant not in (1, 2, 3):
        raise ValueError(f'variant must be 1, 2 or 3, got {variant!r}')


def check_weighted_sum_xx(X: SequenceSpec, variant: int, a: int, b: int, c: int, d: int, e: int,
                          m: int, k: int) -> CheckOutcome:
    """Single-sequence geometric sum in one of three variants; a zero weight at k < -1 is skipped."""
    _check_variant(variant)
    dxx, d1, d2 = _xx_deltas(X, a, b, c, d, e)
    if d1 == 0 or d2 == 0 or (variant == 3 and dxx == 0):
        return ZERO_DENOMINATOR
    try:
        if variant == 1:
            weight = _ratio(dxx, d1)
            lhs = eval_geometric_sum(SumSpec(X, weight, m - k * (a - c) - b + c, a - c), k)
            rhs = (_ratio(dxx, d2) * weight_power(weight, k) * term(X, m)
                   - _ratio(d1, d2) * term(X, m - (k + 1) * (a - c)))
        elif variant == 2:
            weight = _ratio(dxx, d2)
            lhs = eval_geometric_sum(SumSpec(X, weight, m - k * (b - c) - a + c, b - c), k)
            rhs = (_ratio(dxx, d1) * weight_power(weight, k) * term(X, m)
                   - _ratio(d2, d1) * term(X, m - (k + 1) * (b - c)))
        else:
            weight = _ratio(-d2, d1)
            lhs = eval_geometric_sum(SumSpec(X, weight, m - k * (a - b) + b - c, a - b), k)
            rhs = (_ratio(d2, dxx) * weight_power(weight, k) * term(X, m)
                   + _ratio(d1, dxx) * term(X, m - (k + 1) * (a - b)))
    except ZeroDivisionError:
        # zero weight at a negative power
        return ZERO_DENOMINATOR
    return compare(lhs, rhs)


def check_binomial_sum(X: SequenceSpec, variant: int, a: int, b: int, c: int, d: int, e: int,
                       m: int, k: int) -> CheckOutcome:
    """Binomial-weighted sum in one of three variants against ratio**k * X_m; k must be >= 0."""
    _check_variant(variant)
    if k < 0:
        raise ValueError(f'binomial sums need k >= 0, got k={k}')
    dxx, d1, d2 = _xx_deltas(X, a, b, c, d, e)
    if (d1 if variant == 3 else d2) == 0:
        return ZERO_DENOMINATOR
    if variant == 1:
        s = SumSpec(X, _ratio(d1, d2), m - (b - c) * k, b - a)
        ratio = _ratio(dxx, d2)
    elif variant == 2:
        s = SumSpec(X, _ratio(-dxx, d2), m + (a - b) * k, b - c)
        ratio = _ratio(d1, -d2)
    else:
        s = SumSpec(X, _ratio(-dxx, d1), m + (b - a) * k, a - c)
        ratio = _ratio(d2, -d1)
    return compare(eval_binomial_sum(s, k), weight_power(ratio, k) * term(X, m))
