"""Rank report

JSON field names follow the report layout: rows, cols, engine, nullity,
singular_values, tolerance, gap_ratio, accounting, verdict. Singular
values are written as hex floats so regression tests compare bits.
"""

import csv
import json
import math
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Dict, Iterable, List, Optional, Sequence, Tuple

from rigidcover.models import EngineKind, Verdict
from rigidcover.rank.accounting import H1Bound
from rigidcover.rank.engine import NullityResult

CSV_COLUMNS = ['state_id', 'window', 'rows', 'cols', 'nullity', 'gap_ratio', 'h1_bound', 'verdict']


def _float_field(value: Optional[float]) -> Any:
    if value is None:
        return None
    if math.isinf(value):
        return 'inf'
    return value


@dataclass
class RankReport:
    """End-to-end rank report for one window

    Attributes:
        rows, cols: System shape
        engine: Engine selection
        nullity: Nullity per engine name
        singular_values: Numeric spectrum, descending
        tolerance: Numeric cut-off
        gap_ratio: Numeric certificate
        accounting: H1 bound
        verdict: Rigidity verdict
        window: (m, n)
        extra: Provenance and comparison sections (config, inputs,
            counts, state, base, oracle), emitted after the core fields
    """
    rows: int
    cols: int
    engine: EngineKind
    nullity: Dict[str, int]
    accounting: H1Bound
    verdict: Verdict
    window: Tuple[int, int]
    singular_values: Optional[List[float]] = None
    tolerance: Optional[float] = None
    gap_ratio: Optional[float] = None
    extra: Dict[str, Any] = field(default_factory=dict)

    @classmethod
    def from_results(cls, engine: EngineKind, results: Sequence[NullityResult],
                     accounting: H1Bound, verdict: Verdict, window: Tuple[int, int],
                     **extra: Any) -> 'RankReport':
        numeric = next((r for r in results if r.engine is EngineKind.NUMERIC), None)
        return cls(
            rows=results[0].rows,
            cols=results[0].cols,
            engine=engine,
            nullity={r.engine.value: r.nullity for r in results},
            accounting=accounting,
            verdict=verdict,
            window=window,
            singular_values=numeric.singular_values if numeric else None,
            tolerance=numeric.tolerance if numeric else None,
            gap_ratio=numeric.gap_ratio if numeric else None,
            extra=dict(extra),
        )

    def to_dict(self) -> Dict[str, Any]:
        data: Dict[str, Any] = {
            'window': list(self.window),
            'rows': self.rows,
            'cols': self.cols,
            'engine': self.engine.value,
            'nullity': dict(self.nullity),
            'singular_values': (None if self.singular_values is None
                                else [float(x).hex() for x in self.singular_values]),
            'tolerance': _float_field(self.tolerance),
            'gap_ratio': _float_field(self.gap_ratio),
            'accounting': self.accounting.to_dict(),
            'verdict': self.verdict.value,
        }
        data.update(self.extra)
        return data

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2) + '\n'

    def csv_row(self, state_id: str = '') -> Dict[str, Any]:
        return {
            'state_id': state_id,
            'window': f'[{self.window[0]},{self.window[1]}]',
            'rows': self.rows,
            'cols': self.cols,
            'nullity': min(self.nullity.values()),
            'gap_ratio': '' if self.gap_ratio is None else _float_field(self.gap_ratio),
            'h1_bound': self.accounting.bound,
            'verdict': self.verdict.value,
        }


def write_csv(path: Path, rows: Iterable[Dict[str, Any]]) -> None:
    """Write summary rows with CSV_COLUMNS as header"""
    with Path(path).open('w', encoding='utf-8', newline='') as handle:
        writer = csv.DictWriter(handle, fieldnames=CSV_COLUMNS)
        writer.writeheader()
        for row in rows:
            writer.writerow(row)
