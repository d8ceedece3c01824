"""Exact identities for second-order recurrences: F, L, J, j, P, Q and arbitrary W(p, q)."""
from horadam.catalog import catalog, lookup
from horadam.checks import (
    CheckOutcome,
    DeltaArgs,
    Fails,
    Holds,
    Skipped,
    SkipReason,
    check_binomial_sum,
    check_lambda_relation,
    check_lemma3,
    check_three_term_xx,
    check_three_term_xy,
    check_weighted_sum_xx,
    check_weighted_sum_xy,
    delta2,
    solve_lambda_pair,
)
from horadam.fuzz import fuzz_general
from horadam.grid import GridSpec, run_grid
from horadam.report import VerificationReport, emit_report
from horadam.sequences import (
    ExactRational,
    RecurrencePair,
    SequenceSpec,
    builtin,
    negative_index_closed_form,
    term,
    term_fast,
)
from horadam.sums import SumSpec, binomial, eval_binomial_sum, eval_geometric_sum, sum_convention
from horadam.templates import IdentityTemplate, Monomial, check_instance, evaluate_instance

__version__ = '0.1.0'
