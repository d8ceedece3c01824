"""
The identity catalog.

Every displayed identity is one IdentityTemplate with a stable id. Labels
``eq-NNN`` number the displays in the order they are stated. Entries over X
and Y use the two witness sequences sharing W_n = 3W_{n-1} - 2W_{n-2}.
"""
from __future__ import annotations

from collections.abc import Iterable
from functools import lru_cache

from horadam.templates import (
    Constraint,
    Det,
    IdentityTemplate,
    IndexForm,
    LimitKind,
    LimitRole,
    SumKind,
    det,
    mono,
    power,
    weighted_sum,
)

THREE_TERM = ('a', 'b', 'c', 'd', 'e', 'm')
SUM_PARAMETERS = ('a', 'b', 'c', 'd', 'e', 'm', 'k')

# Sequence with its companion sharing the recurrence, and whether the
# derived forms carry a power of two (q = 2).
PAIRS = (('F', 'L'), ('J', 'j'), ('P', 'Q'))
ORDERED_PAIRS = (('F', 'L'), ('L', 'F'), ('J', 'j'), ('j', 'J'), ('P', 'Q'), ('Q', 'P'))
SINGLES = ('F', 'L', 'J', 'j', 'P', 'Q')
JACOBSTHAL = {'J', 'j'}

ALIASES = {
    'jacobsthal-catalan': 'catalan-J',
    'fib-product': 'product-F',
    'lucas-double': 'double-L',
}

Q_SEED_NOTE = 'holds with Pell-Lucas seeds Q_0 = 2, Q_1 = 2 (Q_1 = 1 breaks it)'


class UnknownIdentityError(ValueError):
    def __init__(self, unknown: Iterable[str]):
        self.unknown = tuple(unknown)
        super().__init__(f'unknown identity id(s): {", ".join(self.unknown)}')


def _two(label: str, exponent: str) -> str:
    return exponent if label in JACOBSTHAL else '0'


def _deltas(x: str, y: str) -> tuple[Det, Det, Det]:
    """Delta_xy, Delta_1, Delta_2 for the relation X_{m-c} ~ X_{m-a}, Y_{m-b}."""
    return (
        det(f'{x}[d-a]*{y}[e-b]', f'{x}[e-a]*{y}[d-b]'),
        det(f'{x}[d-c]*{y}[e-b]', f'{x}[e-c]*{y}[d-b]'),
        det(f'{x}[d-a]*{x}[e-c]', f'{x}[e-a]*{x}[d-c]'),
    )


def _three_term(tid: str, source: str, x: str, y: str, note: str = '') -> dict:
    dxy, d1, d2 = _deltas(x, y)
    return dict(
        id=tid, source=source, parameters=THREE_TERM,
        lhs=(mono(f'{x}[m-c]', dets=(power(dxy),)),),
        rhs=(mono(f'{x}[m-a]', dets=(power(d1),)), mono(f'{y}[m-b]', dets=(power(d2),))),
        note=note,
    )


def _three_term_diagonal(tid: str, x: str) -> dict:
    return dict(
        id=tid, source='general/three-term', parameters=('a', 'b', 'c', 'm'),
        lhs=(mono(f'{x}[0]*{x}[0]*{x}[m-c]'), mono(f'{x}[b-a]*{x}[a-b]*{x}[m-c]', coeff=-1)),
        rhs=(mono(f'{x}[a-c]*{x}[0]*{x}[m-a]'), mono(f'{x}[b-c]*{x}[a-b]*{x}[m-a]', coeff=-1),
             mono(f'{x}[0]*{x}[b-c]*{x}[m-b]'), mono(f'{x}[b-a]*{x}[a-c]*{x}[m-b]', coeff=-1)),
        note='single-sequence three-term relation with d = a, e = b; verified as stated',
    )


_ANY_K = LimitRole('k', LimitKind.INTEGER)
_NONNEGATIVE_K = LimitRole('k', LimitKind.NONNEGATIVE)


def _pair_weighted_sum(tid: str, source: str, x: str, y: str) -> dict:
    dxy, d1, d2 = _deltas(x, y)
    return dict(
        id=tid, source=source, parameters=SUM_PARAMETERS, limit=_ANY_K, nonzero=(dxy, d1, d2),
        lhs=(mono(total=weighted_sum(SumKind.GEOMETRIC, f'{y}[m-k*(a-c)-b+c]', dxy, d1, 'a-c')),),
        rhs=(mono(f'{x}[m]', dets=(power(dxy), power(d2, -1), power(dxy, 'k'), power(d1, '-k'))),
             mono(f'{x}[m-(k+1)*(a-c)]', coeff=-1, dets=(power(d1), power(d2, -1)))),
        note='summand runs over the companion sequence; negative k uses the summation convention',
    )


def _single_deltas(x: str) -> tuple[Det, Det, Det]:
    dxx = det(f'{x}[d-a]*{x}[e-b]', f'{x}[e-a]*{x}[d-b]')
    _, d1, d2 = _deltas(x, x)
    return dxx, d1, d2


def _weighted_sum(tid: str, source: str, x: str, variant: int) -> dict:
    dxx, d1, d2 = _single_deltas(x)
    common = dict(id=tid, source=source, parameters=SUM_PARAMETERS, limit=_ANY_K,
                  note='negative k uses the summation convention')
    if variant == 1:
        return dict(
            common, nonzero=(d1, d2),
            lhs=(mono(total=weighted_sum(SumKind.GEOMETRIC, f'{x}[m-k*(a-c)-b+c]', dxx, d1, 'a-c')),),
            rhs=(mono(f'{x}[m]', dets=(power(dxx), power(d2, -1), power(dxx, 'k'), power(d1, '-k'))),
                 mono(f'{x}[m-(k+1)*(a-c)]', coeff=-1, dets=(power(d1), power(d2, -1)))),
        )
    if variant == 2:
        return dict(
            common, nonzero=(d1, d2),
            lhs=(mono(total=weighted_sum(SumKind.GEOMETRIC, f'{x}[m-k*(b-c)-a+c]', dxx, d2, 'b-c')),),
            rhs=(mono(f'{x}[m]', dets=(power(dxx), power(d1, -1), power(dxx, 'k'), power(d2, '-k'))),
                 mono(f'{x}[m-(k+1)*(b-c)]', coeff=-1, dets=(power(d2), power(d1, -1)))),
        )
    minus_d2 = d2.negated()
    return dict(
        common, nonzero=(d1, d2, dxx),
        lhs=(mono(total=weighted_sum(SumKind.GEOMETRIC, f'{x}[m-k*(a-b)+b-c]', minus_d2, d1, 'a-b')),),
        rhs=(mono(f'{x}[m]', dets=(power(d2), power(dxx, -1), power(minus_d2, 'k'), power(d1, '-k'))),
             mono(f'{x}[m-(k+1)*(a-b)]', dets=(power(d1), power(dxx, -1)))),
    )


def _binomial_sum(tid: str, source: str, x: str, variant: int) -> dict:
    dxx, d1, d2 = _single_deltas(x)
    common = dict(id=tid, source=source, parameters=SUM_PARAMETERS, limit=_NONNEGATIVE_K,
                  note='stated for positive k in the general form and nonnegative k for the named '
                       'sequences; k >= 0 is accepted')
    if variant == 1:
        return dict(
            common, nonzero=(d2,),
            lhs=(mono(total=weighted_sum(SumKind.BINOMIAL, f'{x}[m-(b-c)*k]', d1, d2, 'b-a')),),
            rhs=(mono(f'{x}[m]', dets=(power(dxx, 'k'), power(d2, '-k'))),),
        )
    if variant == 2:
        return dict(
            common, nonzero=(d2,),
            lhs=(mono(total=weighted_sum(SumKind.BINOMIAL, f'{x}[m+(a-b)*k]', dxx.negated(), d2, 'b-c')),),
            rhs=(mono(f'{x}[m]', dets=(power(d1, 'k'), power(d2.negated(), '-k'))),),
        )
    return dict(
        common, nonzero=(d1,),
        lhs=(mono(total=weighted_sum(SumKind.BINOMIAL, f'{x}[m+(b-a)*k]', dxx.negated(), d1, 'a-c')),),
        rhs=(mono(f'{x}[m]', dets=(power(d2, 'k'), power(d1.negated(), '-k'))),),
    )


def _general() -> list[dict]:
    entries = [
        _three_term('three-term-XY', 'general/three-term', 'X', 'Y',
                    note='cleared form; holds with or without Delta_xy != 0'),
        _three_term('three-term-X', 'general/three-term', 'X', 'X',
                    note='single sequence; valid whatever the value of Delta_xx'),
        _three_term_diagonal('three-term-X0', 'X'),
        _pair_weighted_sum('weighted-sum-XY', 'general/weighted-sum', 'X', 'Y'),
    ]
    entries += [_weighted_sum(f'weighted-sum-X-{v}', 'general/weighted-sum', 'X', v) for v in (1, 2, 3)]
    entries += [_binomial_sum(f'binomial-sum-X-{v}', 'general/binomial-sum', 'X', v) for v in (1, 2, 3)]
    return entries


def _pair_derived() -> list[dict]:
    """Consequences of the mixed three-term relation for (F, L), (J, j), (P, Q)."""
    per_pair = []
    for x, y in PAIRS:
        per_pair.append([
            dict(id=f'mixed-at-c-{x}', parameters=('a', 'b', 'c', 'd', 'e'),
                 lhs=(mono(f'{x}[d-c]*{y}[e-b]*{x}[c-a]'), mono(f'{x}[e-c]*{y}[d-b]*{x}[c-a]', coeff=-1)),
                 rhs=(mono(f'{x}[e-a]*{x}[d-c]*{y}[c-b]'), mono(f'{x}[d-a]*{x}[e-c]*{y}[c-b]', coeff=-1)),
                 note='mixed three-term relation at m = c'),
            dict(id=f'mixed-shift-{x}', parameters=('a', 'b', 'c', 'd'),
                 lhs=(mono(f'{x}[d-c]*{y}[a-b]'), mono(f'{x}[a-c]*{y}[d-b]', coeff=-1)),
                 rhs=(mono(f'{x}[d-a]*{y}[c-b]', sign='a-c', two=_two(x, 'a-c')),),
                 note=f'mixed-at-c-{x} with e = a'),
            dict(id=f'mixed-product-{x}', parameters=('n', 'h', 'k'),
                 lhs=(mono(f'{x}[n+h]*{y}[n+k]'), mono(f'{x}[n]*{y}[n+h+k]', coeff=-1)),
                 rhs=(mono(f'{x}[h]*{y}[k]', sign='n', two=_two(x, 'n')),),
                 note=f'mixed-shift-{x} with a = d-h, b = d-n-h-k, c = d-n-h'),
        ])
    families = [
        lambda x, y: dict(
            id=f'mixed-shift-cb-{x}', parameters=('a', 'b', 'd'),
            lhs=(mono(f'{x}[d-b]*{y}[a-b]'), mono(f'{x}[a-b]*{y}[d-b]', coeff=-1)),
            rhs=(mono(f'{x}[d-a]', sign='a-b', **_doubled(x, 'a-b+1')),),
            note=f'mixed-shift-{x} with c = b'),
        lambda x, y: dict(
            id=f'mixed-antisym-{x}', parameters=('u', 'v'),
            lhs=(mono(f'{x}[u]*{y}[v]'), mono(f'{x}[v]*{y}[u]', coeff=-1)),
            rhs=(mono(f'{x}[u-v]', sign='v', **_doubled(x, 'v+1')),),
            note=f'mixed-shift-cb-{x} with d-b = u, a-b = v'),
        lambda x, y: dict(
            id=f'addition-{x}', parameters=('a', 'd'),
            lhs=(mono(f'{x}[d+a]'), mono(f'{x}[d-a]', coeff=-1, sign='a', two=_two(x, 'a'))),
            rhs=(mono(f'{x}[a]*{y}[d]'),),
            note=f'mixed-shift-{x} with b = 0, c = -a'),
        lambda x, y: dict(
            id=f'catalan-{x}', parameters=('a', 'd'),
            lhs=(mono(f'{x}[d]*{x}[d]'), mono(f'{x}[d-a]*{x}[d+a]', coeff=-1)),
            rhs=(mono(f'{x}[a]*{x}[a]', sign='d-a', two=_two(x, 'd-a')),),
            note=f'Catalan identity; mixed-at-c-{x} with b = c = 0, e = a+d'),
        lambda x, y: dict(
            id=f'mixed-sum-{x}', parameters=('a', 'b', 'e'),
            lhs=(mono(f'{x}[e]*{y}[a+b]'), mono(f'{x}[a]*{y}[e-b]', sign='b', two=_two(x, 'b'))),
            rhs=(mono(f'{x}[e+a]*{y}[b]'),),
            note=f'mixed-at-c-{x} with d = 0, c = -a, using addition-dual-{x}'),
    ]
    tail = [
        lambda x, y: dict(
            id=f'doubling-{x}', parameters=('a', 'e'),
            lhs=(mono(f'{x}[e]*{y}[a]'), mono(f'{x}[a]*{y}[e]')),
            rhs=(mono(f'{x}[e+a]', coeff=2),),
            note=f'mixed-sum-{x} with b = 0'),
        lambda x, y: dict(
            id=f'mixed-difference-{x}', parameters=('a', 'b'),
            lhs=(mono(f'{x}[a+b]*{y}[b]'), mono(f'{x}[b]*{y}[a+b]', coeff=-1)),
            rhs=(mono(f'{x}[a]', sign='b', **_doubled(x, 'b+1')),),
            note=f'mixed-sum-{x} with e = b'),
    ]
    lucas_addition = [
        dict(id=f'lucas-addition-{y}', parameters=('a', 'b'),
             lhs=(mono(f'{y}[a+b]'), mono(f'{y}[a-b]', sign='b', two=_two(y, 'b'))),
             rhs=(mono(f'{y}[a]*{y}[b]'),),
             note=f'mixed-sum-{x} with e = a'
                  + ('; right side is Q_a Q_b, the printed Q_a L_b fails (a = b = 1 gives 4 != 2); '
                     + Q_SEED_NOTE if y == 'Q' else ''))
        for x, y in PAIRS
    ]
    double = [
        dict(id=f'double-{y}', parameters=('u',),
             lhs=(mono(f'{y}[2*u]'), mono(sign='u', **_doubled(y, 'u+1'))),
             rhs=(mono(f'{y}[u]*{y}[u]'),),
             note=(f'mixed-at-c-{x} with e = 2u+b, a = d = b, c = b+u'
                   + ('; ' + Q_SEED_NOTE if y == 'Q' else '')))
        for x, y in PAIRS
    ]

    entries = []
    for group in zip(*per_pair):
        entries += group
    for family in families:
        entries += [family(x, y) for x, y in PAIRS]
    entries += lucas_addition
    for family in tail:
        entries += [family(x, y) for x, y in PAIRS]
    entries += double
    for entry in entries:
        entry['source'] = 'pair/derived'
    return entries


def _doubled(label: str, exponent: str) -> dict:
    """2*W or 2^(exponent)*W: the q = 2 forms fold the factor 2 into the power."""
    if label in JACOBSTHAL:
        return {'two': exponent}
    return {'coeff': 2}


def _single_derived() -> list[dict]:
    """Consequences of the single-sequence three-term relation for F, J, P."""
    families = [
        lambda x, y: dict(
            id=f'single-at-b-{x}', parameters=('a', 'b', 'c', 'd', 'e'),
            lhs=(mono(f'{x}[d-a]*{x}[e-b]*{x}[b-c]'), mono(f'{x}[e-a]*{x}[d-b]*{x}[b-c]', coeff=-1)),
            rhs=(mono(f'{x}[d-c]*{x}[e-b]*{x}[b-a]'), mono(f'{x}[e-c]*{x}[d-b]*{x}[b-a]', coeff=-1)),
            note='single-sequence three-term relation at m = b, using W_0 = 0'),
        lambda x, y: dict(
            id=f'addition-dual-{x}', parameters=('a', 'd'),
            lhs=(mono(f'{x}[d+a]'), mono(f'{x}[d-a]', sign='a', two=_two(x, 'a'))),
            rhs=(mono(f'{x}[d]*{y}[a]'),),
            note=f'single-at-b-{x} with b = 0, c = -a, e = a'),
        lambda x, y: dict(
            id=f'product-shift-{x}', parameters=('a', 'b', 'c', 'e'),
            lhs=(mono(f'{x}[a-c]*{x}[e-b]'), mono(f'{x}[e-c]*{x}[a-b]', coeff=-1)),
            rhs=(mono(f'{x}[e-a]*{x}[b-c]', sign='a-b', two=_two(x, 'a-b')),),
            note=f'single-at-b-{x} with d = a'),
        lambda x, y: dict(
            id=f'product-{x}', parameters=('n', 'h', 'k'),
            lhs=(mono(f'{x}[n+h]*{x}[n+k]'), mono(f'{x}[n]*{x}[n+h+k]', coeff=-1)),
            rhs=(mono(f'{x}[h]*{x}[k]', sign='n', two=_two(x, 'n')),),
            note=f'product-shift-{x} with a = e+h, b = e-n-k, c = e-n'),
    ]
    entries = []
    for family in families:
        entries += [family(x, y) for x, y in PAIRS]
    for entry in entries:
        entry['source'] = 'single/derived'
    return entries


def _three_square() -> list[dict]:
    entries = []
    for y in ('L', 'j', 'Q'):
        if y == 'j':
            weights = ('b-a', 'c-b', 'c-a')
        else:
            weights = ('0', '0', '0')
        entries.append(dict(
            id=f'three-square-abc-{y}', parameters=('a', 'b', 'c'),
            lhs=(mono(f'{y}[a-b]*{y}[a-b]', sign='a-b', two=weights[0]),
                 mono(f'{y}[b-c]*{y}[b-c]', sign='b-c', two=weights[1]),
                 mono(f'{y}[a-c]*{y}[a-c]', sign='a-c', two=weights[2])),
            rhs=(mono(f'{y}[a-b]*{y}[b-c]*{y}[a-c]', sign='a-c', two=weights[2]), mono(coeff=4)),
            note='three-term relation with d = a, e = b at m = c'))
    for y in ('L', 'j', 'Q'):
        jac = y == 'j'
        entries.append(dict(
            id=f'three-square-{y}', parameters=('u', 'v', 'w'),
            constraints=(Constraint('w', IndexForm.parse('u+v')),),
            lhs=(mono(f'{y}[u]*{y}[u]', sign='u', two='v' if jac else 0),
                 mono(f'{y}[v]*{y}[v]', sign='v', two='u' if jac else 0),
                 mono(f'{y}[w]*{y}[w]', sign='w')),
            rhs=(mono(f'{y}[u]*{y}[v]*{y}[w]', sign='w'),
                 mono(two='w+2') if jac else mono(coeff=4)),
            note=f'three-square-abc-{y} rewritten with u + v = w'))
    for entry in entries:
        entry['source'] = 'three-square'
        if entry['id'].endswith('-Q'):
            entry['note'] += '; ' + Q_SEED_NOTE
    return entries


def _entries() -> list[dict]:
    entries = _general()
    entries += [_three_term(f'three-term-{x}{y}', 'pair/three-term', x, y) for x, y in ORDERED_PAIRS]
    entries += _pair_derived()
    entries += [_three_term(f'three-term-{x}', 'single/three-term', x, x) for x in SINGLES]
    entries += _single_derived()
    entries += _three_square()
    entries += [_pair_weighted_sum(f'weighted-sum-{x}{y}', 'pair/weighted-sum', x, y) for x, y in ORDERED_PAIRS]
    entries += [_weighted_sum(f'weighted-sum-{x}-{v}', 'single/weighted-sum', x, v)
                for x in SINGLES for v in (1, 2, 3)]
    entries += [_binomial_sum(f'binomial-sum-{x}-{v}', 'single/binomial-sum', x, v)
                for x in SINGLES for v in (1, 2, 3)]
    return entries


@lru_cache(maxsize=1)
def catalog() -> tuple[IdentityTemplate, ...]:
    """All templates, built once, in display order."""
    templates = []
    for number, entry in enumerate(_entries(), start=1):
        templates.append(IdentityTemplate(label=f'eq-{number:03d}', **entry))
    ids = [t.id for t in templates]
    if len(set(ids)) != len(ids):
        raise RuntimeError('duplicate identity ids in catalog')
    return tuple(templates)


@lru_cache(maxsize=1)
def _index() -> dict[str, IdentityTemplate]:
    return {t.id: t for t in catalog()}


def canonical_id(identity_id: str) -> str:
    """Resolve an alias to its catalog id; other ids pass through."""
    return ALIASES.get(identity_id, identity_id)


def lookup(identity_id: str) -> IdentityTemplate:
    """The template for an id or alias, or UnknownIdentityError."""
    try:
        return _index()[canonical_id(identity_id)]
    except KeyError:
        raise UnknownIdentityError([identity_id]) from None


def resolve_ids(ids: str | Iterable[str]) -> list[IdentityTemplate]:
    """``"all"`` or an iterable of ids/aliases; reports every unknown id at once."""
    ids = [ids] if isinstance(ids, str) else list(ids)
    if 'all' in ids:
        return list(catalog())
    index = _index()
    unknown = [i for i in ids if canonical_id(i) not in index]
    if unknown:
        raise UnknownIdentityError(unknown)
    seen: dict[str, IdentityTemplate] = {}
    for i in ids:
        template = index[canonical_id(i)]
        seen.setdefault(template.id, template)
    return list(seen.values())


MANIFEST_COLUMNS = ('id', 'label', 'source', 'parameters', 'constraints', 'limit', 'hypotheses', 'note')


def manifest_rows() -> list[dict[str, str]]:
    """One row per identity, in display order."""
    rows = []
    for t in catalog():
        rows.append({
            'id': t.id,
            'label': t.label,
            'source': t.source,
            'parameters': ','.join(t.parameters),
            'constraints': '; '.join(str(c) for c in t.constraints) or '-',
            'limit': str(t.limit) if t.limit else '-',
            'hypotheses': f'{len(t.nonzero)} det != 0' if t.nonzero else '-',
            'note': t.note or '-',
        })
    return rows


def format_manifest() -> str:
    rows = manifest_rows()
    widths = {col: max(len(col), *(len(r[col]) for r in rows)) for col in MANIFEST_COLUMNS[:-1]}
    lines = []
    header = '  '.join(col.upper().ljust(widths[col]) for col in MANIFEST_COLUMNS[:-1]) + '  NOTE'
    lines.append(header)
    lines.append('-' * len(header))
    for row in rows:
        lines.append('  '.join(row[col].ljust(widths[col]) for col in MANIFEST_COLUMNS[:-1]) + '  ' + row['note'])
    lines.append('')
    lines.append(f'{len(rows)} identities; aliases: '
                 + ', '.join(f'{alias} -> {target}' for alias, target in sorted(ALIASES.items())))
    return '\n'.join(lines) + '\n'
