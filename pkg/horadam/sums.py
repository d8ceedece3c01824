"""
Geometric- and binomial-weighted sums of sequence terms.

Upper limits below zero follow the extended summation convention:
for k < 0, sum_{r=0}^{k} f(r) = -sum_{r=k+1}^{-1} f(r), so k = -1 is the
empty sum and sum(f, k + 1) = sum(f, k) + f(k + 1) holds for every k.
"""
from __future__ import annotations

import math
from collections.abc import Callable
from dataclasses import dataclass
from fractions import Fraction

from horadam.sequences import ExactRational, SequenceSpec, normalize, term


@dataclass(frozen=True)
class SumSpec:
    """Summand shape weight^r * W_{base_index + stride*r}."""

    sequence: SequenceSpec
    weight: ExactRational
    base_index: int
    stride: int

    def __post_init__(self):
        object.__setattr__(self, 'weight', normalize(self.weight))


def sum_convention(f: Callable[[int], ExactRational], k: int) -> ExactRational:
    """sum_{r=0}^{k} f(r), with the negative-limit convention for k < 0."""
    if k >= 0:
        total = sum((f(r) for r in range(k + 1)), 0)
    else:
        total = -sum((f(r) for r in range(k + 1, 0)), 0)
    return normalize(total)


def weight_power(weight: ExactRational, r: int) -> ExactRational:
    """weight**r with 0**0 = 1; a zero weight at r < 0 raises ZeroDivisionError."""
    if r >= 0:
        return normalize(weight ** r)
    if weight == 0:
        raise ZeroDivisionError(f'zero weight raised to the power {r}')
    return normalize(Fraction(weight) ** r)


def _power_series(weight: ExactRational, values: list[ExactRational],
                  coefficients: list[int] | None = None) -> ExactRational:
    """sum_i c_i * weight**i * values[i] over a common denominator, divided once."""
    weight = Fraction(weight)
    numerator, denominator = weight.numerator, weight.denominator
    top = len(values) - 1
    total = 0
    numerator_power = 1
    for i, value in enumerate(values):
        scale = numerator_power * denominator ** (top - i)
        if coefficients is not None:
            scale *= coefficients[i]
        total += scale * value
        numerator_power *= numerator
    return normalize(Fraction(total) / denominator ** top)


def eval_geometric_sum(s: SumSpec, k: int) -> ExactRational:
    """sum_{r=0}^{k} weight^r * W_{base + stride*r} under the summation convention."""
    if k >= 0:
        values = [term(s.sequence, s.base_index + s.stride * r) for r in range(k + 1)]
        return _power_series(s.weight, values)
    if k == -1:
        return 0
    if s.weight == 0:
        raise ZeroDivisionError(f'zero weight raised to the power -1 (k={k})')
    # -sum_{n=1}^{-k-1} weight^(-n) * W_{base - stride*n}
    inverse = 1 / Fraction(s.weight)
    values = [term(s.sequence, s.base_index - s.stride * n) for n in range(1, -k)]
    return normalize(-inverse * _power_series(inverse, values))


def binomial(k: int, r: int) -> int:
    """C(k, r), zero outside 0 <= r <= k."""
    if k < 0:
        raise ValueError(f'binomial sums need a nonnegative upper limit, got k={k}')
    if r < 0 or r > k:
        return 0
    return math.comb(k, r)


def eval_binomial_sum(s: SumSpec, k: int) -> ExactRational:
    """sum_{r=0}^{k} C(k, r) * weight^r * W_{base + stride*r} for k >= 0."""
    if k < 0:
        raise ValueError(f'binomial sums need a nonnegative upper limit, got k={k}')
    values = [term(s.sequence, s.base_index + s.stride * r) for r in range(k + 1)]
    return _power_series(s.weight, values, [binomial(k, r) for r in range(k + 1)])
