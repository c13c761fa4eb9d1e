"""
Tables for conversion reports and randomized suites
"""
from typing import Dict, Iterable, List, Optional

import pandas as pd

from config import LIFTCOMPARE_COLUMNS


class ConversionAnalytics:
    def __init__(self):
        self.columns = list(LIFTCOMPARE_COLUMNS)

    def liftcompare_table(self, reports: Iterable) -> pd.DataFrame:
        """One row per route in the fixed liftcompare schema"""
        rows = []
        for report in reports:
            rows.append({
                'route': report.route,
                'output_rows': report.output_rows,
                'feasible_bases': report.feasible_basis_count,
                'max_intermediate_rays': report.max_intermediate_rays,
            })
        return pd.DataFrame(rows, columns=self.columns)

    def report_lines(self, report) -> List[str]:
        """Human-readable report for standard error"""
        lines = [
            f"route: {report.route}",
            f"input rows: {report.input_rows}",
            f"output rows: {report.output_rows}",
            f"max intermediate rays: {report.max_intermediate_rays}",
        ]
        if report.feasible_basis_count is not None:
            lines.append(f"feasible bases: {report.feasible_basis_count}")
        return lines

    def suite_table(self, checks: Iterable, dimensions: Optional[Iterable[int]] = None) -> pd.DataFrame:
        """Per-instance outcomes of the four conditions"""
        records = [dict(zip(['a', 'b', 'c', 'd'], check.as_tuple())) for check in checks]
        frame = pd.DataFrame(records, columns=['a', 'b', 'c', 'd'])
        if dimensions is not None:
            frame['n'] = list(dimensions)
        frame['consistent'] = frame[['a', 'b', 'c', 'd']].nunique(axis=1) <= 1
        return frame

    def suite_summary(self, frame: pd.DataFrame) -> Dict:
        """Counts of symmetric, non-symmetric and inconsistent instances"""
        if frame.empty:
            return {'instances': 0, 'symmetric': 0, 'not_symmetric': 0, 'inconsistent': 0}
        return {
            'instances': int(len(frame)),
            'symmetric': int(frame['d'].sum()),
            'not_symmetric': int((~frame['d'].astype(bool)).sum()),
            'inconsistent': int((~frame['consistent']).sum()),
        }

    def summary_by_dimension(self, frame: pd.DataFrame) -> pd.DataFrame:
        if frame.empty or 'n' not in frame:
            return pd.DataFrame(columns=['n', 'instances', 'symmetric'])
        grouped = frame.groupby('n')['d'].agg(['count', 'sum']).reset_index()
        grouped.columns = ['n', 'instances', 'symmetric']
        grouped['symmetric'] = grouped['symmetric'].astype(int)
        return grouped


# Global analytics instance
analytics = ConversionAnalytics()
