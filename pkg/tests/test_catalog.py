import itertools

import pytest

from horadam.catalog import (
    ALIASES,
    MANIFEST_COLUMNS,
    ORDERED_PAIRS,
    PAIRS,
    SINGLES,
    UnknownIdentityError,
    canonical_id,
    catalog,
    format_manifest,
    lookup,
    manifest_rows,
    resolve_ids,
)
from horadam.checks import HOLDS, Fails
from horadam.templates import IdentityTemplate, LimitKind, SumKind, check_instance, mono

PAIR_FAMILIES = ('mixed-at-c', 'mixed-shift', 'mixed-product', 'mixed-shift-cb', 'mixed-antisym',
                 'addition', 'catalan', 'mixed-sum', 'doubling', 'mixed-difference')
COMPANION_FAMILIES = ('lucas-addition', 'double')
SINGLE_FAMILIES = ('single-at-b', 'addition-dual', 'product-shift', 'product')


def expected_ids():
    ids = {'three-term-XY', 'three-term-X', 'three-term-X0', 'weighted-sum-XY'}
    ids |= {f'{kind}-X-{v}' for kind in ('weighted-sum', 'binomial-sum') for v in (1, 2, 3)}
    ids |= {f'three-term-{x}{y}' for x, y in ORDERED_PAIRS}
    ids |= {f'weighted-sum-{x}{y}' for x, y in ORDERED_PAIRS}
    ids |= {f'{family}-{x}' for family in PAIR_FAMILIES + SINGLE_FAMILIES for x, _ in PAIRS}
    ids |= {f'{family}-{y}' for family in COMPANION_FAMILIES for _, y in PAIRS}
    ids |= {f'three-term-{x}' for x in SINGLES}
    ids |= {f'three-square-{y}' for _, y in PAIRS} | {f'three-square-abc-{y}' for _, y in PAIRS}
    ids |= {f'{kind}-{x}-{v}' for kind in ('weighted-sum', 'binomial-sum') for x in SINGLES for v in (1, 2, 3)}
    return ids


def test_catalog_size_and_ids():
    templates = catalog()
    assert len(templates) == 118
    assert {t.id for t in templates} == expected_ids()
    assert all(isinstance(t, IdentityTemplate) for t in templates)


def test_labels_follow_display_order():
    assert [t.label for t in catalog()] == [f'eq-{n:03d}' for n in range(1, 119)]
    assert catalog()[0].id == 'three-term-XY'


@pytest.mark.parametrize('alias, target', sorted(ALIASES.items()))
def test_aliases_resolve(alias, target):
    assert canonical_id(alias) == target
    assert lookup(alias) is lookup(target)


def test_unknown_ids_are_all_reported():
    with pytest.raises(UnknownIdentityError) as info:
        resolve_ids(['catalan-F', 'nope', 'also-nope'])
    assert info.value.unknown == ('nope', 'also-nope')
    assert 'nope, also-nope' in str(info.value)
    with pytest.raises(UnknownIdentityError):
        lookup('catalan-X')


def test_resolve_ids_all_and_deduplication():
    assert len(resolve_ids('all')) == 118
    assert [t.id for t in resolve_ids(['lucas-double', 'double-L', 'catalan-F'])] == ['double-L', 'catalan-F']
    assert resolve_ids([]) == []


def test_three_square_j_derives_w():
    template = lookup('three-square-j')
    assert [str(c) for c in template.constraints] == ['w = u+v']
    for u in range(-5, 6):
        for v in range(-5, 6):
            assert check_instance(template, template.complete({'u': u, 'v': v})) == HOLDS


@pytest.mark.parametrize('u', range(-8, 9))
def test_lucas_double(u):
    assert check_instance(lookup('lucas-double'), {'u': u}) == HOLDS


@pytest.mark.parametrize('h, k', [(0, 0), (3, 5), (-2, 7), (-4, -6)])
def test_fib_product_at_zero_shift(h, k):
    assert check_instance(lookup('fib-product'), {'n': 0, 'h': h, 'k': k}) == HOLDS


def test_jacobsthal_catalan_example():
    assert check_instance(lookup('jacobsthal-catalan'), {'a': 1, 'd': 4}) == HOLDS


def test_limit_kinds():
    for t in catalog():
        if t.id.startswith('binomial-sum'):
            assert t.sum_kind is SumKind.BINOMIAL
            assert t.limit.kind is LimitKind.NONNEGATIVE
        elif t.id.startswith('weighted-sum'):
            assert t.sum_kind is SumKind.GEOMETRIC
            assert t.limit.kind is LimitKind.INTEGER
        else:
            assert t.sum_kind is None and t.limit is None


def test_lucas_addition_q_uses_pell_lucas_product():
    stored = lookup('lucas-addition-Q')
    assert check_instance(stored, {'a': 1, 'b': 1}) == HOLDS
    printed = IdentityTemplate(
        id='lucas-addition-Q-printed', label='eq-test', source='test', parameters=('a', 'b'),
        lhs=stored.lhs, rhs=(mono('Q[a]*L[b]'),))
    assert check_instance(printed, {'a': 1, 'b': 1}) == Fails(4, 2)


def test_q_entries_note_the_seed_convention():
    for t in catalog():
        if t.id in ('double-Q', 'lucas-addition-Q', 'three-square-Q', 'three-square-abc-Q'):
            assert 'Q_1 = 2' in t.note


@pytest.mark.parametrize('identity_id', ['catalan-P', 'mixed-antisym-J', 'addition-dual-P', 'product-J',
                                         'mixed-difference-F', 'three-square-abc-Q', 'single-at-b-J'])
def test_closed_identities_hold_on_a_small_grid(identity_id):
    template = lookup(identity_id)
    for env_values in itertools.product(range(-3, 4), repeat=len(template.free_parameters)):
        env = template.complete(dict(zip(template.free_parameters, env_values)))
        assert check_instance(template, env) == HOLDS, env


def test_manifest_rows():
    rows = manifest_rows()
    assert len(rows) == 118
    assert set(rows[0]) == set(MANIFEST_COLUMNS)
    by_id = {row['id']: row for row in rows}
    assert by_id['three-square-L']['constraints'] == 'w = u+v'
    assert by_id['binomial-sum-F-3']['limit'] == 'k >= 0'
    assert by_id['weighted-sum-XY']['hypotheses'] == '3 det != 0'
    assert by_id['catalan-F']['limit'] == '-'


def test_format_manifest():
    text = format_manifest()
    assert text.splitlines()[0].startswith('ID')
    assert '118 identities' in text
    assert 'lucas-double -> double-L' in text
