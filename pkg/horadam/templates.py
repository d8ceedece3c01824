"""
Identity templates: displayed identities as data, evaluated exactly.

A template is ``sum(lhs) = sum(rhs)`` over monomials. A monomial multiplies
an exact coefficient, (-1)^L, 2^L, sequence terms, integer powers of 2x2
determinants of terms and at most one weighted sum. Index expressions are
integer polynomials in the template parameters, compiled once with sympy.
"""
from __future__ import annotations

import re
from collections.abc import Callable, Mapping
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from functools import lru_cache
from tokenize import TokenError

from sympy import Integer, Poly, Symbol, lambdify
from sympy.core.sympify import SympifyError
from sympy.parsing.sympy_parser import parse_expr
from sympy.polys.polyerrors import PolynomialError

from horadam.checks import ZERO_DENOMINATOR, CheckOutcome, compare
from horadam.sequences import ExactRational, SequenceError, SequenceSpec, normalize, sequence_for_label, term
from horadam.sums import SumSpec, eval_binomial_sum, eval_geometric_sum, weight_power

PARAMETER_SYMBOLS = ('a', 'b', 'c', 'd', 'e', 'm', 'n', 'h', 'k', 'u', 'v', 'w')

_SYMPY_SYMBOLS = {name: Symbol(name, integer=True) for name in PARAMETER_SYMBOLS}

Assignment = Mapping[str, int]
# Det values already computed for one assignment, keyed by id(det)
Memo = dict[int, ExactRational]


class TemplateError(ValueError):
    """Malformed template or an assignment it cannot accept."""


@dataclass(frozen=True)
class IndexForm:
    """Integer polynomial over parameter symbols: ((coefficient, ((symbol, exponent), ...)), ...)."""

    text: str
    terms: tuple[tuple[int, tuple[tuple[str, int], ...]], ...]
    symbols: frozenset[str]
    arguments: tuple[str, ...] = ()
    function: Callable[..., int] | None = field(default=None, compare=False, repr=False)

    @staticmethod
    def parse(text: str | int) -> IndexForm:
        return _compile_index(str(text).strip())

    def evaluate(self, env: Assignment) -> int:
        return self.function(*[env[symbol] for symbol in self.arguments])

    def __str__(self):
        return self.text


def _evaluator(gens, expr) -> Callable[..., int]:
    # integer coefficients print as int literals; int arguments give int results
    return lambdify(gens, expr, modules='math')


@lru_cache(maxsize=None)
def _compile_index(text: str) -> IndexForm:
    try:
        expr = parse_expr(text, local_dict=dict(_SYMPY_SYMBOLS))
    except (SyntaxError, TokenError, SympifyError, TypeError) as exc:
        raise TemplateError(f'cannot parse index expression {text!r}: {exc}') from exc

    names = {str(s) for s in getattr(expr, 'free_symbols', ())}
    unknown = names - set(PARAMETER_SYMBOLS)
    if unknown:
        raise TemplateError(f'index expression {text!r} uses unknown symbol(s): {", ".join(sorted(unknown))}')

    if not names:
        if not getattr(expr, 'is_Integer', False):
            raise TemplateError(f'index expression {text!r} is not an integer')
        value = int(expr)
        return IndexForm(text, ((value, ()),) if value else (), frozenset(), (), _evaluator((), Integer(value)))

    gens = sorted(expr.free_symbols, key=str)
    try:
        poly = Poly(expr, *gens)
    except PolynomialError as exc:
        raise TemplateError(f'index expression {text!r} is not a polynomial: {exc}') from exc

    terms = []
    for monom, coefficient in poly.terms():
        if not coefficient.is_Integer:
            raise TemplateError(f'index expression {text!r} has non-integer coefficient {coefficient}')
        powers = tuple((str(g), exponent) for g, exponent in zip(gens, monom) if exponent)
        terms.append((int(coefficient), powers))
    arguments = tuple(str(g) for g in gens)
    return IndexForm(text, tuple(terms), frozenset(names), arguments, _evaluator(gens, poly.as_expr()))


ZERO = IndexForm.parse('0')


@dataclass(frozen=True)
class Term:
    label: str
    index: IndexForm
    sequence: SequenceSpec = field(init=False, compare=False, repr=False)

    def __post_init__(self):
        try:
            object.__setattr__(self, 'sequence', sequence_for_label(self.label))
        except SequenceError as exc:
            raise TemplateError(str(exc)) from exc

    def evaluate(self, env: Assignment) -> ExactRational:
        return term(self.sequence, self.index.evaluate(env))

    def __str__(self):
        return f'{self.label}[{self.index}]'


@dataclass(frozen=True)
class Det:
    """plus[0]*plus[1] - minus[0]*minus[1]."""

    plus: tuple[Term, Term]
    minus: tuple[Term, Term]

    def evaluate(self, env: Assignment, memo: Memo | None = None) -> ExactRational:
        if memo is not None and id(self) in memo:
            return memo[id(self)]
        value = (self.plus[0].evaluate(env) * self.plus[1].evaluate(env)
                 - self.minus[0].evaluate(env) * self.minus[1].evaluate(env))
        if memo is not None:
            memo[id(self)] = value
        return value

    def negated(self) -> Det:
        return Det(self.minus, self.plus)

    @property
    def symbols(self) -> frozenset[str]:
        return frozenset().union(*(t.index.symbols for t in (*self.plus, *self.minus)))

    def __str__(self):
        return f'({self.plus[0]}*{self.plus[1]} - {self.minus[0]}*{self.minus[1]})'


@dataclass(frozen=True)
class DetPower:
    det: Det
    exponent: IndexForm

    def evaluate(self, env: Assignment, memo: Memo | None = None) -> ExactRational:
        return weight_power(self.det.evaluate(env, memo), self.exponent.evaluate(env))

    def __str__(self):
        if self.exponent.text == '1':
            return str(self.det)
        return f'{self.det}^({self.exponent})'


class SumKind(str, Enum):
    GEOMETRIC = 'geometric'
    BINOMIAL = 'binomial'


@dataclass(frozen=True)
class SumFactor:
    """sum_{r=0}^{limit} [C(limit, r)] (num/den)^r * label[base + stride*r]."""

    kind: SumKind
    summand: Term
    weight_numerator: Det
    weight_denominator: Det
    stride: IndexForm
    limit: str = 'k'

    def evaluate(self, env: Assignment, memo: Memo | None = None) -> ExactRational:
        weight = Fraction(self.weight_numerator.evaluate(env, memo)) / self.weight_denominator.evaluate(env, memo)
        s = SumSpec(self.summand.sequence, weight, self.summand.index.evaluate(env), self.stride.evaluate(env))
        if self.kind is SumKind.BINOMIAL:
            return eval_binomial_sum(s, env[self.limit])
        return eval_geometric_sum(s, env[self.limit])

    @property
    def symbols(self) -> frozenset[str]:
        return (self.summand.index.symbols | self.stride.symbols | self.weight_numerator.symbols
                | self.weight_denominator.symbols | {self.limit})

    def __str__(self):
        binom = f'C({self.limit},r)*' if self.kind is SumKind.BINOMIAL else ''
        return (f'sum[r=0..{self.limit}] {binom}({self.weight_numerator}/{self.weight_denominator})^r'
                f'*{self.summand.label}[{self.summand.index} + ({self.stride})*r]')


@dataclass(frozen=True)
class Monomial:
    coefficient: ExactRational = 1
    minus_one_power: IndexForm = ZERO
    two_power: IndexForm = ZERO
    factors: tuple[Term, ...] = ()
    det_powers: tuple[DetPower, ...] = ()
    sum_factor: SumFactor | None = None

    def evaluate(self, env: Assignment, memo: Memo | None = None) -> ExactRational:
        value: ExactRational = self.coefficient
        if self.minus_one_power.evaluate(env) % 2:
            value = -value
        two = self.two_power.evaluate(env)
        value = value * (1 << two) if two >= 0 else Fraction(value, 1 << -two)
        for factor in self.factors:
            value *= factor.evaluate(env)
        for power in self.det_powers:
            value *= power.evaluate(env, memo)
        if self.sum_factor is not None:
            value *= self.sum_factor.evaluate(env, memo)
        return value

    @property
    def symbols(self) -> frozenset[str]:
        found = set(self.minus_one_power.symbols | self.two_power.symbols)
        for factor in self.factors:
            found |= factor.index.symbols
        for power in self.det_powers:
            found |= power.det.symbols | power.exponent.symbols
        if self.sum_factor is not None:
            found |= self.sum_factor.symbols
        return frozenset(found)

    def __str__(self):
        parts = []
        if self.coefficient != 1 or not (self.factors or self.det_powers or self.sum_factor):
            parts.append(str(self.coefficient))
        if self.minus_one_power != ZERO:
            parts.append(f'(-1)^({self.minus_one_power})')
        if self.two_power != ZERO:
            parts.append(f'2^({self.two_power})')
        parts.extend(str(p) for p in self.det_powers)
        if self.sum_factor is not None:
            parts.append(str(self.sum_factor))
        parts.extend(str(f) for f in self.factors)
        return '*'.join(parts)


@dataclass(frozen=True)
class Constraint:
    """symbol = expression; the symbol is derived, never enumerated."""

    symbol: str
    expression: IndexForm

    def __str__(self):
        return f'{self.symbol} = {self.expression}'


class LimitKind(str, Enum):
    INTEGER = 'integer'
    NONNEGATIVE = 'nonnegative'


@dataclass(frozen=True)
class LimitRole:
    symbol: str
    kind: LimitKind

    def admits(self, value: int) -> bool:
        return self.kind is LimitKind.INTEGER or value >= 0

    def __str__(self):
        return f'{self.symbol} >= 0' if self.kind is LimitKind.NONNEGATIVE else f'{self.symbol} any integer'


@dataclass(frozen=True)
class IdentityTemplate:
    id: str
    label: str
    source: str
    parameters: tuple[str, ...]
    lhs: tuple[Monomial, ...]
    rhs: tuple[Monomial, ...]
    constraints: tuple[Constraint, ...] = ()
    limit: LimitRole | None = None
    nonzero: tuple[Det, ...] = ()
    note: str = ''

    def __post_init__(self):
        params = set(self.parameters)
        if len(params) != len(self.parameters):
            raise TemplateError(f'{self.id}: duplicate parameters in {self.parameters}')
        bad = params - set(PARAMETER_SYMBOLS)
        if bad:
            raise TemplateError(f'{self.id}: unsupported parameter(s) {", ".join(sorted(bad))}')

        used = set()
        for monomial in (*self.lhs, *self.rhs):
            used |= monomial.symbols
        for det in self.nonzero:
            used |= det.symbols
        for constraint in self.constraints:
            used |= constraint.expression.symbols | {constraint.symbol}
            if constraint.symbol in constraint.expression.symbols:
                raise TemplateError(f'{self.id}: constraint {constraint} is circular')
        undeclared = used - params
        if undeclared:
            raise TemplateError(f'{self.id}: undeclared symbol(s) {", ".join(sorted(undeclared))}')

        sums = [m.sum_factor for m in (*self.lhs, *self.rhs) if m.sum_factor is not None]
        if sums and self.limit is None:
            raise TemplateError(f'{self.id}: sum identity without a summation limit role')
        if self.limit is not None:
            if self.limit.symbol not in params:
                raise TemplateError(f'{self.id}: limit symbol {self.limit.symbol} is not a parameter')
            if any(s.limit != self.limit.symbol for s in sums):
                raise TemplateError(f'{self.id}: sum limits disagree with {self.limit.symbol}')

    @property
    def derived_parameters(self) -> tuple[str, ...]:
        return tuple(c.symbol for c in self.constraints)

    @property
    def free_parameters(self) -> tuple[str, ...]:
        derived = set(self.derived_parameters)
        return tuple(p for p in self.parameters if p not in derived)

    @property
    def sum_kind(self) -> SumKind | None:
        for monomial in (*self.lhs, *self.rhs):
            if monomial.sum_factor is not None:
                return monomial.sum_factor.kind
        return None

    def complete(self, free_values: Assignment) -> dict[str, int]:
        """Add the constraint-derived symbols to an assignment of the free ones."""
        env = dict(free_values)
        for constraint in self.constraints:
            env[constraint.symbol] = constraint.expression.evaluate(env)
        return env

    def formula(self) -> str:
        def side(monomials):
            text = ' + '.join(str(m) for m in monomials) or '0'
            return text.replace('+ -', '- ')
        return f'{side(self.lhs)} = {side(self.rhs)}'


def check_instance(t: IdentityTemplate, assignment: Assignment) -> CheckOutcome:
    """Validate an assignment against the template, then evaluate both sides exactly."""
    missing = [s for s in t.parameters if s not in assignment]
    if missing:
        raise TemplateError(f'{t.id}: missing value for symbol(s) {", ".join(missing)}')
    unknown = sorted(set(assignment) - set(t.parameters))
    if unknown:
        raise TemplateError(f'{t.id}: symbol(s) {", ".join(unknown)} are not parameters')

    env: dict[str, int] = {}
    for symbol in t.parameters:
        value = assignment[symbol]
        if isinstance(value, bool) or not isinstance(value, int):
            raise TemplateError(f'{t.id}: {symbol} must be an integer, got {value!r}')
        env[symbol] = value
    for constraint in t.constraints:
        expected = constraint.expression.evaluate(env)
        if env[constraint.symbol] != expected:
            raise TemplateError(
                f'{t.id}: constraint {constraint} violated ({constraint.symbol}={env[constraint.symbol]}, '
                f'expected {expected})'
            )
    if t.limit is not None and not t.limit.admits(env[t.limit.symbol]):
        raise TemplateError(f'{t.id}: {t.limit.symbol}={env[t.limit.symbol]} violates {t.limit}')
    return evaluate_instance(t, env)


def evaluate_instance(t: IdentityTemplate, env: Assignment) -> CheckOutcome:
    """
    Evaluate a complete assignment the caller has already validated.

    Each determinant is computed once per assignment, however many
    hypotheses, weights and powers mention it.
    """
    memo: Memo = {}
    try:
        if any(det.evaluate(env, memo) == 0 for det in t.nonzero):
            return ZERO_DENOMINATOR
        lhs = sum((m.evaluate(env, memo) for m in t.lhs), 0)
        rhs = sum((m.evaluate(env, memo) for m in t.rhs), 0)
    except ZeroDivisionError:
        return ZERO_DENOMINATOR
    return compare(lhs, rhs)


# Builders used by the catalog. Products are written "F[d-a]*L[e-b]".

_TERM_PATTERN = re.compile(r'([A-Za-z])\[([^\[\]]+)\]')


def terms(text: str) -> tuple[Term, ...]:
    """Parse a product such as ``F[a]*L[n-b]`` into its terms."""
    found = _TERM_PATTERN.findall(text)
    leftover = _TERM_PATTERN.sub('', text).replace('*', '').strip()
    if leftover or not found:
        raise TemplateError(f'cannot read term product {text!r}')
    return tuple(Term(label, IndexForm.parse(index)) for label, index in found)


def det(plus: str, minus: str) -> Det:
    """Two-by-two determinant written as plus-product minus minus-product."""
    plus_terms, minus_terms = terms(plus), terms(minus)
    if len(plus_terms) != 2 or len(minus_terms) != 2:
        raise TemplateError(f'determinant needs two-term products: {plus!r}, {minus!r}')
    return Det(plus_terms, minus_terms)


def power(d: Det, exponent: str | int = 1) -> DetPower:
    return DetPower(d, IndexForm.parse(exponent))


def mono(product: str = '', *, coeff: ExactRational = 1, sign: str | int = 0, two: str | int = 0,
         dets: tuple[DetPower, ...] = (), total: SumFactor | None = None) -> Monomial:
    """coeff * (-1)**sign * 2**two * product * dets * total."""
    return Monomial(
        coefficient=normalize(coeff),
        minus_one_power=IndexForm.parse(sign),
        two_power=IndexForm.parse(two),
        factors=terms(product) if product else (),
        det_powers=tuple(dets),
        sum_factor=total,
    )


def weighted_sum(kind: SumKind, summand: str, numerator: Det, denominator: Det, stride: str,
                 limit: str = 'k') -> SumFactor:
    """Sum over r = 0..limit of the summand shifted by stride*r, weighted by (numerator/denominator)**r."""
    (start,) = terms(summand)
    return SumFactor(kind, start, numerator, denominator, IndexForm.parse(stride), limit)
