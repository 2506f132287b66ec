"""Unit tests for rigidcover.cover

Tests window construction, count formulas, monodromy and the state search.
"""

from fractions import Fraction

import pytest

from rigidcover.complex import (
    State,
    build_oriented_complex,
    state_is_quasi_coherent,
    state_passes_links,
)
from rigidcover.cover import (
    all_states,
    build_window,
    build_window_s,
    canonical,
    expected_counts,
    monodromy_shift,
    search_states,
)
from rigidcover.models import SquareClass
from rigidcover.rank import ExactEngine
from rigidcover.system import assemble, reduce_tangency
from rigidcover.utils.exceptions import (
    InputError,
    InvalidSquareError,
    LinkConditionError,
    WindowError,
)
from tests.fixtures.polytopes import (
    OCTAHEDRON_STATE_WORD,
    PAIRED_STATE_COUNT,
    PAIRED_STATE_WORD,
    corner_colouring,
    corner_polytope,
    independent_rule,
    octahedron,
    octahedron_colouring,
    octahedron_state,
    paired_colouring,
    paired_fixture_rule,
    paired_rule,
    paired_state,
)


class TestWindow:
    """Test the finite windows of the cyclic cover."""

    @pytest.mark.parametrize('s', [1, 2, 3])
    def test_octahedron_counts(self, octa_complex, s):
        w = build_window_s(octa_complex, s)
        counts = w.counts()
        expected = expected_counts(8, 2, s)
        assert counts['vertices'] == expected['vertices'] == 2 * (2 * s + 1)
        assert counts['edges'] == expected['edges'] == 16 * s
        assert counts['squares'] == 12 * s - 6

    @pytest.mark.parametrize('s', [1, 2, 3])
    def test_corner_counts(self, corner_complex, s):
        w = build_window_s(corner_complex, s)
        assert w.counts()['vertices'] == expected_counts(4, 2, s)['vertices']
        assert w.counts()['edges'] == expected_counts(4, 2, s)['edges']
        # each square of C contributes s or s - 1 lifts
        approx = len(corner_complex.squares) * (s - Fraction(1, 2))
        assert abs(w.counts()['squares'] - approx) <= Fraction(len(corner_complex.squares), 2)

    def test_levels_stay_in_range(self, octa_complex):
        w = build_window(octa_complex, -1, 3)
        assert all(-1 <= t <= 3 for _, t in w.vertices)
        assert all((sum(v) + t) % 2 == 0 for v, t in w.vertices)
        for e in w.edges:
            assert e.even[1] % 2 == 0
            assert abs(e.odd[1] - e.even[1]) == 1

    def test_square_corners_follow_edges(self, octa_window):
        for sq in octa_window.squares:
            ends = set()
            for e in sq.edges:
                edge = octa_window.edges[e]
                ends.update((edge.even, edge.odd))
            assert ends == set(sq.corners)
            assert sq.kind is SquareClass.COHERENT
            assert sq.level.denominator == 1

    def test_window_is_connected(self, octa_window):
        assert octa_window.is_connected()

    def test_too_narrow(self, octa_complex):
        with pytest.raises(WindowError):
            build_window(octa_complex, 0, 1)
        with pytest.raises(WindowError):
            build_window_s(octa_complex, 0)

    def test_invalid_squares_cannot_be_lifted(self):
        cx = build_oriented_complex(octahedron(), octahedron_colouring(),
                                    octahedron_state(), paired_rule((1, 2)))
        with pytest.raises(InvalidSquareError):
            build_window_s(cx, 1)

    def test_bad_squares_sit_at_half_levels(self, paired_complex, paired_window):
        assert paired_complex.square_tally()['bad'] == 16
        bad = [sq for sq in paired_window.squares if sq.kind is SquareClass.BAD]
        assert len(bad) == 16
        assert all(sq.level.denominator == 2 for sq in bad)
        assert all(sq.level.denominator == 1 for sq in paired_window.squares
                   if sq.kind is SquareClass.COHERENT)

    @pytest.mark.parametrize('s', [1, 2, 3])
    def test_bad_square_lifts_grow_with_s(self, paired_complex, s):
        w = build_window_s(paired_complex, s)
        assert sum(sq.kind is SquareClass.BAD for sq in w.squares) == 16 * s
        assert w.counts()['vertices'] == 8 * (2 * s + 1)

    def test_paired_window_is_connected(self, paired_window):
        assert paired_window.is_connected()
        assert paired_window.counts()['edges'] == 64

    def test_failing_links_are_rejected(self):
        cx = build_oriented_complex(octahedron(), octahedron_colouring(),
                                    octahedron_state(range(1, 9)), independent_rule())
        with pytest.raises(LinkConditionError):
            build_window_s(cx, 1)

    def test_paired_all_out_has_isolated_lifts(self):
        # pairing colours 1 and 2 of the checkerboard turns every square bad
        cx = build_oriented_complex(octahedron(), octahedron_colouring(),
                                    octahedron_state(range(1, 9)), paired_rule((1, 2)))
        assert cx.square_tally()['invalid'] == 0
        with pytest.raises(LinkConditionError):
            build_window_s(cx, 1)

    def test_monodromy_shift(self, octa_complex):
        w = build_window(octa_complex, -1, 1)
        shifted = monodromy_shift(w, 1)
        assert (shifted.m, shifted.n) == (1, 3)
        assert shifted.counts() == w.counts()
        assert set(shifted.vertices) <= set(build_window(octa_complex, 1, 3).vertices)
        assert all(b.level == a.level + 2 for a, b in zip(w.squares, shifted.squares))

    def test_monodromy_shift_keeps_nullity(self, octa_complex, octa):
        w = build_window(octa_complex, -1, 1)
        engine = ExactEngine(seed=1)
        nullities = [engine.nullity(reduce_tangency(assemble(window, octa))).nullity
                     for window in (w, monodromy_shift(w, 1), monodromy_shift(w, -2))]
        assert nullities == [60, 60, 60]


class TestStateSearch:
    """Test enumeration of states passing the link condition."""

    def test_all_states_order(self):
        words = [s.encode() for s in all_states((1, 2))]
        assert words == ['OO', 'OI', 'IO', 'II']

    def test_octahedron_search_finds_shipped_state(self):
        found = search_states(octahedron(), octahedron_colouring(), independent_rule())
        assert OCTAHEDRON_STATE_WORD in [s.encode() for s in found]
        assert all(state_passes_links(octahedron(), octahedron_colouring(),
                                      independent_rule(), s) for s in found)

    def test_symmetry_keeps_one_per_orbit(self):
        p, col = corner_polytope(), corner_colouring()
        found = search_states(p, col, independent_rule())
        mirror = {1: 2, 2: 1, 3: 4, 4: 3}
        reduced = search_states(p, col, independent_rule(), symmetries=[mirror])
        assert 0 < len(reduced) <= len(found)
        keys = [canonical(s, [mirror]) for s in reduced]
        assert len(keys) == len(set(keys))

    def test_explicit_candidates(self):
        candidates = [octahedron_state(), octahedron_state(range(1, 9))]
        found = search_states(octahedron(), octahedron_colouring(), independent_rule(),
                              candidates=candidates)
        assert found == [octahedron_state()]

    def test_exhaustive_limit(self, monkeypatch):
        monkeypatch.setattr('rigidcover.cover.search.EXHAUSTIVE_SEARCH_MAX_FACETS', 4)
        with pytest.raises(InputError):
            search_states(octahedron(), octahedron_colouring(), independent_rule())
        assert search_states(corner_polytope(), corner_colouring(), independent_rule())

    def test_paired_search_keeps_liftable_states(self):
        p, col, rule = octahedron(), paired_colouring(), paired_fixture_rule()
        found = search_states(p, col, rule)
        assert len(found) == PAIRED_STATE_COUNT
        assert PAIRED_STATE_WORD in [s.encode() for s in found]
        for state in found:
            assert state_is_quasi_coherent(p, col, rule, state)
            cx = build_oriented_complex(p, col, state, rule)
            assert build_window_s(cx, 1).is_connected()

    def test_paired_search_drops_invalid_squares(self):
        p, col, rule = octahedron(), paired_colouring(), paired_fixture_rule()
        mixed = octahedron_state({1, 2, 3})
        assert state_passes_links(p, col, rule, mixed)
        assert not state_is_quasi_coherent(p, col, rule, mixed)
        found = search_states(p, col, rule, candidates=[mixed, paired_state()])
        assert found == [paired_state()]

    def test_paired_checkerboard_has_no_liftable_state(self):
        assert search_states(octahedron(), octahedron_colouring(), paired_rule((1, 2))) == []

    def test_parallel_search_matches_inline(self):
        p, col, rule = octahedron(), paired_colouring(), paired_fixture_rule()
        assert search_states(p, col, rule, workers=2) == search_states(p, col, rule)

    def test_state_candidates_are_states(self):
        assert all(isinstance(s, State) for s in all_states((1, 2, 3)))
