"""
Fixlab - Report Factory
Deterministic CSV and line-delimited JSON renderings of BoundReports
"""

import csv
import io
import json
from fractions import Fraction
from typing import Any, Dict, Iterable, List

import mpmath
from mpmath import mpf

from fixlab.models.reports import BoundReport

MPF_DIGITS = 20


class ReportFactory:
    """
    REPORT FACTORY
    - CSV columns are fixed: instance_id, lemma_id, relation, lhs, rhs, holds, context
    - context keys are sorted, so equal reports render to equal bytes
    """

    COLUMNS = ('instance_id', 'lemma_id', 'relation', 'lhs', 'rhs', 'holds', 'context')
    SCATTER_COLUMNS = ('instance_id', 'vertices', 'rfx', 'rfx_float')

    @classmethod
    def format_value(cls, value: Any) -> str:
        if isinstance(value, bool):
            return 'true' if value else 'false'
        if value is None:
            return ''
        if isinstance(value, mpf):
            return mpmath.nstr(value, MPF_DIGITS)
        if isinstance(value, Fraction):
            return str(value)
        if isinstance(value, (list, tuple)):
            return '[' + ','.join(cls.format_value(v) for v in value) + ']'
        return str(value)

    @classmethod
    def format_context(cls, context: Dict[str, Any]) -> str:
        return ';'.join(f"{key}={cls.format_value(context[key])}" for key in sorted(context))

    @classmethod
    def build_row(cls, report: BoundReport) -> Dict[str, str]:
        return {
            'instance_id': report.instance_id,
            'lemma_id': report.lemma_id.value,
            'relation': report.relation.value,
            'lhs': cls.format_value(report.lhs),
            'rhs': cls.format_value(report.rhs),
            'holds': cls.format_value(report.holds),
            'context': cls.format_context(report.context),
        }

    @classmethod
    def build_record(cls, report: BoundReport) -> str:
        record = cls.build_row(report)
        record['holds'] = bool(report.holds)
        record['context'] = {key: cls.format_value(report.context[key]) for key in sorted(report.context)}
        return json.dumps(record, sort_keys=True)

    @classmethod
    def to_csv(cls, reports: Iterable[BoundReport], header: bool = True) -> str:
        buffer = io.StringIO()
        writer = csv.DictWriter(buffer, fieldnames=cls.COLUMNS, lineterminator='\n')
        if header:
            writer.writeheader()
        for report in reports:
            writer.writerow(cls.build_row(report))
        return buffer.getvalue()

    @classmethod
    def to_jsonl(cls, reports: Iterable[BoundReport]) -> str:
        return ''.join(cls.build_record(report) + '\n' for report in reports)

    @classmethod
    def render(cls, reports: Iterable[BoundReport], report_format: str, header: bool = True) -> str:
        if report_format == 'jsonl':
            return cls.to_jsonl(reports)
        return cls.to_csv(reports, header=header)

    @classmethod
    def scatter_csv(cls, points: List[Dict[str, Any]]) -> str:
        """rfx against |V|, one row per instance"""
        buffer = io.StringIO()
        writer = csv.DictWriter(buffer, fieldnames=cls.SCATTER_COLUMNS, lineterminator='\n')
        writer.writeheader()
        for point in sorted(points, key=lambda p: p['instance_id']):
            writer.writerow({
                'instance_id': point['instance_id'],
                'vertices': point['vertices'],
                'rfx': cls.format_value(point['rfx']),
                'rfx_float': f"{float(point['rfx']):.6f}",
            })
        return buffer.getvalue()

    @staticmethod
    def sort_reports(reports: Iterable[BoundReport]) -> List[BoundReport]:
        return sorted(reports, key=lambda r: r.sort_key)
