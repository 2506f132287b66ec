"""Unit tests for rigidcover.rank

Tests the exact and numeric engines, H1 accounting, verdicts and reports.
"""

import csv
import json
import math
from dataclasses import replace

import numpy as np
import pytest

from rigidcover.models import EngineKind, Verdict
from rigidcover.numfield import FieldScalar
from rigidcover.rank import (
    EngineFactory,
    ExactEngine,
    NullityResult,
    NumericEngine,
    RankReport,
    agreed_nullity,
    decide_verdict,
    exact_rank,
    h1_bound,
    kernel_basis,
    run_engines,
    spectrum_nullity,
    to_pair_row,
    write_csv,
)
from rigidcover.system import reduce_tangency, satisfies
from rigidcover.utils.exceptions import (
    EngineDisagreementError,
    InconsistentAccountingError,
    SizeCapError,
)

ROOT2 = FieldScalar(0, 1, 2)


class TestExactRank:
    """Test fraction-free elimination."""

    def test_dependent_rows_over_root2(self):
        rows = [{0: FieldScalar(1, 0, 2), 1: ROOT2}, {0: ROOT2, 1: FieldScalar(2, 0, 2)}]
        assert exact_rank(rows, 2) == 1

    def test_independent_rows_over_root2(self):
        rows = [{0: FieldScalar(1, 0, 2), 1: ROOT2}, {0: ROOT2, 1: FieldScalar(1, 0, 2)}]
        assert exact_rank(rows, 2) == 2

    def test_pair_rows_are_primitive(self):
        row = to_pair_row({0: FieldScalar(1, 0) / 2, 3: FieldScalar(3, 0) / 4})
        assert row == {0: (2, 0), 3: (3, 0)}

    def test_empty_rows(self):
        assert exact_rank([{}, {}], 1) == 0

    def test_octahedron_window(self, octa_system):
        result = ExactEngine().nullity(octa_system)
        assert result.engine is EngineKind.EXACT
        assert result.nullity == 60
        assert result.rank + result.nullity == 256
        assert result.certified(1e6)

    @pytest.mark.parametrize('seed', [0, 1, 2])
    def test_pivot_seed_does_not_change_nullity(self, octa_system, seed):
        reduced = reduce_tangency(octa_system)
        assert ExactEngine(seed=seed).nullity(reduced).nullity == 60

    def test_generic_and_simplified_agree(self, octa_system, octa_generic_system):
        assert ExactEngine().nullity(octa_generic_system).nullity == 60
        basis = kernel_basis(octa_generic_system)
        assert len(basis) == 60
        assert all(satisfies(octa_system, v) for v in basis)

    @pytest.mark.parametrize('seed', [0, 1])
    def test_row_permutation_does_not_change_nullity(self, octa_system, seed):
        order = np.random.default_rng(seed).permutation(len(octa_system.rows))
        shuffled = replace(octa_system, rows=tuple(octa_system.rows[i] for i in order))
        assert ExactEngine().nullity(shuffled).nullity == 60

    def test_reversed_reduced_rows(self, octa_system):
        reduced = reduce_tangency(octa_system)
        reversed_rows = replace(reduced, rows=tuple(reversed(reduced.rows)))
        assert ExactEngine(seed=2).nullity(reversed_rows).nullity == 60

    def test_simplified_basis_solves_generic_rows(self, octa_system, octa_generic_system):
        basis = kernel_basis(octa_system, seed=5)
        assert len(basis) == 60
        assert all(satisfies(octa_generic_system, v) for v in basis)

    def test_kernel_basis_of_reduced_system(self, octa_system):
        reduced = reduce_tangency(octa_system)
        basis = kernel_basis(reduced, seed=3)
        assert len(basis) == 60
        assert all(satisfies(reduced, v) for v in basis)

    def test_quadratic_field_matches_rational_corner(self, corner_system, boosted_corner_system):
        assert boosted_corner_system.d == 2
        rational = ExactEngine().nullity(corner_system).nullity
        assert ExactEngine().nullity(boosted_corner_system).nullity == rational


class TestNumericRank:
    """Test the SVD engine and its certificate."""

    def test_spectrum_with_tiny_value(self):
        result = spectrum_nullity(np.diag([3.0, 2.0, 1e-20]))
        assert result.nullity == 1
        assert result.singular_values[0] == 3.0
        assert result.gap_ratio == pytest.approx(2e20)

    def test_zero_matrix_has_infinite_gap(self):
        result = spectrum_nullity(np.zeros((3, 3)))
        assert result.nullity == 3
        assert math.isinf(result.gap_ratio)

    def test_explicit_tolerance(self):
        result = spectrum_nullity(np.diag([3.0, 2.0, 1e-3]), tolerance=1e-2)
        assert result.nullity == 1
        assert result.tolerance == 1e-2

    def test_octahedron_window(self, octa_system):
        result = NumericEngine().nullity(octa_system)
        assert result.nullity == 60
        assert result.gap_ratio > 1e6
        assert result.certified(1e6)

    def test_numeric_matches_exact_on_corners(self, corner_system, boosted_corner_system):
        for system in (corner_system, boosted_corner_system):
            exact = ExactEngine().nullity(system)
            numeric = NumericEngine().nullity(system)
            assert numeric.nullity == exact.nullity

    def test_paired_window_with_bad_squares(self, paired_system):
        exact = ExactEngine(seed=3).nullity(paired_system)
        numeric = NumericEngine().nullity(paired_system)
        assert numeric.nullity == exact.nullity >= 144
        assert exact.cols == 384

    def test_size_cap(self, octa_system):
        with pytest.raises(SizeCapError):
            NumericEngine(size_cap=100).nullity(octa_system)

    def test_reduced_systems_bypass_the_cap(self, octa_system):
        result = NumericEngine(size_cap=10).nullity(reduce_tangency(octa_system))
        assert result.nullity == 60


class TestRunEngines:
    """Test fanning independent eliminations out across workers."""

    @pytest.mark.parametrize('workers', [1, 2])
    def test_results_keep_system_and_engine_order(self, corner_system, boosted_corner_system, workers):
        engines = [NumericEngine(), ExactEngine(seed=1)]
        results = run_engines(engines, [corner_system, boosted_corner_system], workers)
        assert len(results) == 2
        assert [[r.engine for r in row] for row in results] == [[EngineKind.NUMERIC, EngineKind.EXACT]] * 2
        expected = ExactEngine().nullity(corner_system).nullity
        assert all(r.nullity == expected for row in results for r in row)
        assert results[1][1].cols == boosted_corner_system.shape[1]

    def test_no_systems(self):
        assert run_engines([ExactEngine()], []) == []


class TestEngineFactory:
    """Test engine selection."""

    def test_single_engines(self):
        assert isinstance(EngineFactory.get_engine(EngineKind.NUMERIC), NumericEngine)
        exact = EngineFactory.get_engine(EngineKind.EXACT, seed=5)
        assert isinstance(exact, ExactEngine) and exact.seed == 5

    def test_both_runs_numeric_first(self):
        engines = EngineFactory.get_engines(EngineKind.BOTH, tolerance=1e-9)
        assert [e.kind for e in engines] == [EngineKind.NUMERIC, EngineKind.EXACT]
        assert engines[0].tolerance == 1e-9

    def test_both_is_not_a_single_engine(self):
        with pytest.raises(ValueError):
            EngineFactory.get_engine(EngineKind.BOTH)


def numeric_result(nullity=60, gap=1e12):
    return NullityResult(EngineKind.NUMERIC, 352, 256, 256 - nullity, nullity,
                         singular_values=[1.0], tolerance=1e-12, gap_ratio=gap)


def exact_result(nullity=60):
    return NullityResult(EngineKind.EXACT, 352, 256, 256 - nullity, nullity)


class TestAccounting:
    """Test the H1 bound and verdict rules."""

    def test_positive_bound(self):
        bound = h1_bound(60, 6, 3)
        assert bound.bound == 24
        assert bound.dim_g == 6
        assert bound.verdict is Verdict.BOUND_POSITIVE
        assert bound.to_dict() == {'dimG': 6, 'vertex_count': 6, 'h1_bound': 24}

    def test_rigid(self):
        assert h1_bound(36, 6, 3).verdict is Verdict.RIGID
        assert h1_bound(100, 10, 4).verdict is Verdict.RIGID

    def test_negative_bound(self):
        with pytest.raises(InconsistentAccountingError):
            h1_bound(35, 6, 3)

    def test_agreement(self):
        assert agreed_nullity([numeric_result(), exact_result()]) == 60
        with pytest.raises(EngineDisagreementError):
            agreed_nullity([numeric_result(61), exact_result(60)])

    def test_narrow_gap_is_inconclusive(self):
        bound = h1_bound(60, 6, 3)
        assert decide_verdict([numeric_result(gap=10.0)], bound, 1e6) is Verdict.INCONCLUSIVE
        assert decide_verdict([numeric_result(gap=10.0), exact_result()], bound, 1e6) \
            is Verdict.INCONCLUSIVE

    def test_exact_alone_decides(self):
        assert decide_verdict([exact_result(36)], h1_bound(36, 6, 3), 1e6) is Verdict.RIGID
        assert decide_verdict([exact_result()], h1_bound(60, 6, 3), 1e6) is Verdict.BOUND_POSITIVE


class TestRankReport:
    """Test report serialization."""

    def _report(self, gap=math.inf):
        results = [numeric_result(gap=gap), exact_result()]
        return RankReport.from_results(EngineKind.BOTH, results, h1_bound(60, 6, 3),
                                       Verdict.BOUND_POSITIVE, (-1, 1), counts={'squares': 6})

    def test_json_fields(self):
        data = json.loads(self._report().to_json())
        assert data['rows'] == 352 and data['cols'] == 256
        assert data['nullity'] == {'numeric': 60, 'exact': 60}
        assert data['gap_ratio'] == 'inf'
        assert data['singular_values'] == [(1.0).hex()]
        assert data['accounting']['h1_bound'] == 24
        assert data['verdict'] == 'BoundPositive'
        assert data['counts'] == {'squares': 6}
        assert list(data)[:2] == ['window', 'rows']

    def test_json_is_deterministic(self):
        assert self._report().to_json() == self._report().to_json()

    def test_exact_only_has_no_spectrum(self):
        report = RankReport.from_results(EngineKind.EXACT, [exact_result()], h1_bound(60, 6, 3),
                                         Verdict.BOUND_POSITIVE, (-1, 1))
        data = report.to_dict()
        assert data['singular_values'] is None
        assert data['gap_ratio'] is None
        assert report.csv_row()['gap_ratio'] == ''

    def test_csv(self, tmp_path):
        path = tmp_path / 'summary.csv'
        write_csv(path, [self._report(gap=1e9).csv_row('OOIOIIIO')])
        with path.open(encoding='utf-8', newline='') as f:
            rows = list(csv.DictReader(f))
        assert rows == [{
            'state_id': 'OOIOIIIO',
            'window': '[-1,1]',
            'rows': '352',
            'cols': '256',
            'nullity': '60',
            'gap_ratio': '1000000000.0',
            'h1_bound': '24',
            'verdict': 'BoundPositive',
        }]
