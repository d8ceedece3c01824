"""
Exact bidirectional evaluation of second-order recurrences.

A Horadam sequence W(p, q; w0, w1) satisfies W_n = p*W_{n-1} + q*W_{n-2} for
every integer n. Going backwards divides by q, so q = 0 is rejected up front.

Values are exact: ``int`` while they stay integral, ``Fraction`` otherwise.
"""
from __future__ import annotations

import threading
from dataclasses import dataclass, field
from fractions import Fraction
from numbers import Rational

ExactRational = int | Fraction


class SequenceError(ValueError):
    """Rejected sequence definition or query."""


def normalize(value: Rational) -> ExactRational:
    """Collapse integral fractions to ``int`` so equal values print the same."""
    if type(value) is int:
        return value
    if type(value) is Fraction:
        return value.numerator if value.denominator == 1 else value
    if isinstance(value, bool):
        raise TypeError('booleans are not sequence values')
    if isinstance(value, int):
        return value
    if isinstance(value, Rational):
        value = Fraction(value)
        return value.numerator if value.denominator == 1 else value
    raise TypeError(f'exact rational required, got {type(value).__name__}: {value!r}')


def parse_exact(text: str) -> ExactRational:
    """Parse ``"n"`` or ``"n/d"``; decimal input is refused."""
    text = text.strip()
    if not text or any(ch in text for ch in '.eE'):
        raise SequenceError(f'not an exact rational: {text!r}')
    try:
        return normalize(Fraction(text))
    except (ValueError, ZeroDivisionError) as exc:
        raise SequenceError(f'not an exact rational: {text!r}') from exc


def format_exact(value: ExactRational) -> str:
    """``"n"`` for integers, ``"n/d"`` (d >= 1, lowest terms) otherwise."""
    value = normalize(value)
    if isinstance(value, int):
        return str(value)
    return f'{value.numerator}/{value.denominator}'


def _div(numerator: ExactRational, denominator: int) -> ExactRational:
    return normalize(Fraction(numerator) / denominator)


@dataclass(frozen=True)
class RecurrencePair:
    """Coefficients of W_n = p*W_{n-1} + q*W_{n-2}."""

    p: int
    q: int

    def __post_init__(self):
        for name in ('p', 'q'):
            value = getattr(self, name)
            if isinstance(value, bool) or not isinstance(value, int):
                raise SequenceError(f'{name} must be an integer, got {value!r}')
        if self.q == 0:
            raise SequenceError('q must be nonzero: the backward extension divides by q')


class _TermCache:
    """Memoized terms over a contiguous window grown outward from [0, 1]."""

    def __init__(self, w0: ExactRational, w1: ExactRational):
        self._lock = threading.Lock()
        self._forward: list[ExactRational] = [w0, w1]
        # _backward[i] holds W_{-(i+1)}
        self._backward: list[ExactRational] = []

    def __reduce__(self):
        return (_TermCache, (self._forward[0], self._forward[1]))

    def _at(self, n: int) -> ExactRational:
        return self._forward[n] if n >= 0 else self._backward[-n - 1]

    def get(self, pair: RecurrencePair, n: int) -> ExactRational:
        # lists only grow, so a cached index can be read without the lock
        forward, backward = self._forward, self._backward
        if 0 <= n < len(forward):
            return forward[n]
        if n < 0 and -n <= len(backward):
            return backward[-n - 1]
        with self._lock:
            if n >= 0:
                forward = self._forward
                while len(forward) <= n:
                    forward.append(normalize(pair.p * forward[-1] + pair.q * forward[-2]))
                return forward[n]

            backward = self._backward
            while len(backward) < -n:
                j = -(len(backward) + 1)
                backward.append(_div(self._at(j + 2) - pair.p * self._at(j + 1), pair.q))
            return backward[-n - 1]

    def span(self) -> tuple[int, int]:
        with self._lock:
            return -len(self._backward), len(self._forward) - 1


@dataclass(frozen=True)
class SequenceSpec:
    """A bidirectional sequence: recurrence pair plus the seeds W_0, W_1."""

    pair: RecurrencePair
    w0: ExactRational
    w1: ExactRational
    name: str | None = None
    _cache: _TermCache = field(init=False, compare=False, hash=False, repr=False)

    def __post_init__(self):
        if not isinstance(self.pair, RecurrencePair):
            raise SequenceError(f'pair must be a RecurrencePair, got {self.pair!r}')
        try:
            w0, w1 = normalize(self.w0), normalize(self.w1)
        except TypeError as exc:
            raise SequenceError(f'seeds must be exact rationals: {exc}') from exc
        object.__setattr__(self, 'w0', w0)
        object.__setattr__(self, 'w1', w1)
        object.__setattr__(self, '_cache', _TermCache(w0, w1))

    @property
    def label(self) -> str:
        if self.name:
            return self.name
        return (f'W({self.pair.p},{self.pair.q};'
                f'{format_exact(self.w0)},{format_exact(self.w1)})')

    def cached_span(self) -> tuple[int, int]:
        """Inclusive index window currently held by the memo cache."""
        return self._cache.span()


def term(spec: SequenceSpec, n: int) -> ExactRational:
    """W_n by the recurrence, memoized per spec; safe to call from several threads."""
    return spec._cache.get(spec.pair, n)


Matrix = tuple[tuple[ExactRational, ExactRational], tuple[ExactRational, ExactRational]]

_IDENTITY: Matrix = ((1, 0), (0, 1))


def _mat_mul(x: Matrix, y: Matrix) -> Matrix:
    return (
        (normalize(x[0][0] * y[0][0] + x[0][1] * y[1][0]),
         normalize(x[0][0] * y[0][1] + x[0][1] * y[1][1])),
        (normalize(x[1][0] * y[0][0] + x[1][1] * y[1][0]),
         normalize(x[1][0] * y[0][1] + x[1][1] * y[1][1])),
    )


def _mat_pow(base: Matrix, exponent: int) -> Matrix:
    result = _IDENTITY
    while exponent:
        if exponent & 1:
            result = _mat_mul(result, base)
        base = _mat_mul(base, base)
        exponent >>= 1
    return result


def term_fast(spec: SequenceSpec, n: int) -> ExactRational:
    """
    W_n from a power of the companion matrix M = [[p, q], [1, 0]].

    M^n maps (W_1, W_0) to (W_{n+1}, W_n). Negative n uses the exact inverse
    [[0, 1], [1/q, -p/q]] (det M = -q). Independent of the memo cache.
    """
    p, q = spec.pair.p, spec.pair.q
    if n >= 0:
        base: Matrix = ((p, q), (1, 0))
    else:
        base = ((0, 1), (Fraction(1, q), Fraction(-p, q)))
    power = _mat_pow(base, abs(n))
    return normalize(power[1][0] * spec.w1 + power[1][1] * spec.w0)


# label -> (p, q, W_0, W_1)
BUILTIN_DEFINITIONS: dict[str, tuple[int, int, int, int]] = {
    'F': (1, 1, 0, 1),  # Fibonacci
    'L': (1, 1, 2, 1),  # Lucas
    'J': (1, 2, 0, 1),  # Jacobsthal
    'j': (1, 2, 2, 1),  # Jacobsthal-Lucas
    'P': (2, 1, 0, 1),  # Pell
    'Q': (2, 1, 2, 2),  # Pell-Lucas; Q_1 = 2 is the value every Q identity needs
}

BUILTIN_LABELS = tuple(BUILTIN_DEFINITIONS)

# label -> (sign offset, halves): W_{-n} = (-1)^(n + offset) * 2^(-n if halves) * W_n
_NEGATIVE_INDEX_RULES: dict[str, tuple[int, bool]] = {
    'F': (-1, False),
    'L': (0, False),
    'J': (-1, True),
    'j': (0, True),
    'P': (-1, False),
    'Q': (0, False),
}

# Two sequences sharing W_n = 3W_{n-1} - 2W_{n-2}; they stand in for the
# generic X and Y of the general displays in the catalog.
WITNESS_DEFINITIONS: dict[str, tuple[int, int, int, int]] = {
    'X': (3, -2, 1, 4),
    'Y': (3, -2, 2, -1),
}


def _build(label: str, definition: tuple[int, int, int, int]) -> SequenceSpec:
    p, q, w0, w1 = definition
    return SequenceSpec(RecurrencePair(p, q), w0, w1, name=label)


BUILTINS: dict[str, SequenceSpec] = {
    label: _build(label, definition) for label, definition in BUILTIN_DEFINITIONS.items()
}
WITNESSES: dict[str, SequenceSpec] = {
    label: _build(label, definition) for label, definition in WITNESS_DEFINITIONS.items()
}


def builtin(name: str) -> SequenceSpec:
    """One of F, L, J, j, P, Q. Labels are case-sensitive (J and j differ)."""
    try:
        return BUILTINS[name]
    except (KeyError, TypeError):
        raise SequenceError(
            f'unknown sequence {name!r}; expected one of {", ".join(BUILTIN_LABELS)}'
        ) from None


def sequence_for_label(label: str) -> SequenceSpec:
    """Resolve a catalog label: a builtin or one of the witness sequences X, Y."""
    if label in WITNESSES:
        return WITNESSES[label]
    return builtin(label)


def negative_index_closed_form(name: str, n: int) -> ExactRational:
    """W_{-n} for a builtin, from the sign/power-of-two reflection formula."""
    spec = builtin(name)
    if n < 0:
        raise SequenceError(f'closed form takes n >= 0, got {n}')
    offset, halves = _NEGATIVE_INDEX_RULES[name]
    value = Fraction(term(spec, n))
    if (n + offset) % 2:
        value = -value
    if halves:
        value /= 2 ** n
    return normalize(value)
