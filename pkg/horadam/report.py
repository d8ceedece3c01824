"""
Verification reports and their two renderings.

jsonl: one record per check, sorted by (id, assignment), then a totals
record. Wall time is left out so identical runs give identical bytes.
summary: banner-framed text, one line per identity.
"""
from __future__ import annotations

import json
from collections import Counter
from collections.abc import Iterable, Mapping
from dataclasses import dataclass, field
from enum import Enum

from horadam.checks import CheckOutcome, Fails, Skipped
from horadam.sequences import format_exact

OUTCOME_TAGS = ('Holds', 'Fails', 'Skipped')
FAILURES_SHOWN_PER_ID = 5


class ReportFormat(str, Enum):
    JSONL = 'jsonl'
    SUMMARY = 'summary'


@dataclass(frozen=True)
class CheckRecord:
    id: str
    assignment: tuple[tuple[str, int], ...]
    outcome: CheckOutcome

    @classmethod
    def of(cls, identity_id: str, assignment: Mapping[str, int], outcome: CheckOutcome) -> CheckRecord:
        return cls(identity_id, tuple(assignment.items()), outcome)

    def sort_key(self):
        return self.id, tuple(sorted(self.assignment))

    def to_json(self) -> dict:
        record = {'id': self.id, 'assignment': dict(self.assignment), 'outcome': self.outcome.tag}
        if isinstance(self.outcome, Fails):
            record['lhs'] = format_exact(self.outcome.lhs)
            record['rhs'] = format_exact(self.outcome.rhs)
        elif isinstance(self.outcome, Skipped):
            record['reason'] = self.outcome.reason.value
        return record

    def describe_assignment(self) -> str:
        return ', '.join(f'{symbol}={value}' for symbol, value in self.assignment)


@dataclass
class VerificationReport:
    suite: str
    records: list[CheckRecord] = field(default_factory=list)
    seed: int | None = None
    elapsed: float = 0.0

    def extend(self, records: Iterable[CheckRecord]) -> None:
        self.records.extend(records)

    @property
    def totals(self) -> dict[str, int]:
        counts = Counter(r.outcome.tag for r in self.records)
        return {tag: counts.get(tag, 0) for tag in OUTCOME_TAGS}

    @property
    def checks(self) -> int:
        return len(self.records)

    @property
    def failures(self) -> list[CheckRecord]:
        return sorted((r for r in self.records if isinstance(r.outcome, Fails)), key=CheckRecord.sort_key)

    @property
    def skipped_by_reason(self) -> dict[str, int]:
        counts = Counter(r.outcome.reason.value for r in self.records if isinstance(r.outcome, Skipped))
        return dict(sorted(counts.items()))

    @property
    def passed(self) -> bool:
        return self.totals['Fails'] == 0

    def by_identity(self) -> dict[str, dict[str, int]]:
        grouped: dict[str, Counter] = {}
        for record in self.records:
            grouped.setdefault(record.id, Counter())[record.outcome.tag] += 1
        return {
            identity_id: {tag: grouped[identity_id].get(tag, 0) for tag in OUTCOME_TAGS}
            for identity_id in sorted(grouped)
        }

    def totals_record(self) -> dict:
        return {
            'suite': self.suite,
            'totals': self.totals,
            'skipped_by_reason': self.skipped_by_reason,
            'seed': self.seed,
            'passed': self.passed,
        }


def _render_jsonl(report: VerificationReport) -> str:
    lines = [json.dumps(r.to_json()) for r in sorted(report.records, key=CheckRecord.sort_key)]
    lines.append(json.dumps(report.totals_record()))
    return '\n'.join(lines) + '\n'


def _render_summary(report: VerificationReport) -> str:
    lines = ['=' * 70, f'VERIFICATION: {report.suite}', '=' * 70]
    failures: dict[str, list[CheckRecord]] = {}
    for record in report.failures:
        failures.setdefault(record.id, []).append(record)

    per_identity = report.by_identity()
    width = max((len(i) for i in per_identity), default=0)
    for identity_id, counts in per_identity.items():
        mark = '✓' if counts['Fails'] == 0 else '✗'
        line = f'{mark} {identity_id.ljust(width)}  Holds {counts["Holds"]}'
        if counts['Fails']:
            line += f'  Fails {counts["Fails"]}'
        line += f'  Skipped {counts["Skipped"]}'
        lines.append(line)
        for record in failures.get(identity_id, [])[:FAILURES_SHOWN_PER_ID]:
            lines.append(f'    at {record.describe_assignment()}: '
                         f'lhs={format_exact(record.outcome.lhs)} rhs={format_exact(record.outcome.rhs)}')

    totals = report.totals
    passing = sum(1 for counts in per_identity.values() if counts['Fails'] == 0)
    lines.append('=' * 70)
    lines.append(f'SUMMARY: {passing}/{len(per_identity)} identities passed, {report.checks} checks '
                 f'(Holds {totals["Holds"]}, Fails {totals["Fails"]}, Skipped {totals["Skipped"]})')
    if report.skipped_by_reason:
        lines.append('Skipped by reason: '
                     + ', '.join(f'{reason} {count}' for reason, count in report.skipped_by_reason.items()))
    if report.seed is not None:
        lines.append(f'Seed: {report.seed}')
    lines.append(f'Elapsed: {report.elapsed:.2f}s')
    lines.append('=' * 70)
    return '\n'.join(lines) + '\n'


def emit_report(report: VerificationReport, fmt: ReportFormat | str = ReportFormat.JSONL) -> bytes:
    """Render the report as sorted jsonl (byte-stable) or as a human summary."""
    fmt = ReportFormat(fmt)
    if fmt is ReportFormat.JSONL:
        return _render_jsonl(report).encode('utf-8')
    return _render_summary(report).encode('utf-8')
