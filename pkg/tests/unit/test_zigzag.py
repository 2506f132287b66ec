"""Unit tests for rigidcover.cover.zigzag

The level (-1, 0, 1) subcomplex of every cube template must be connected.
"""

import pytest

from rigidcover.cover import check_zigzag, check_zigzag_offset, offsets_for, zigzag_table
from rigidcover.cover.zigzag import base_level, zigzag_subcomplex
from rigidcover.models import CubeTemplate


class TestZigzag:
    """Test the zigzag connectivity check."""

    @pytest.mark.parametrize('dim', range(2, 10))
    @pytest.mark.parametrize('template', list(CubeTemplate))
    def test_connected_for_every_offset(self, dim, template):
        assert check_zigzag(dim, template)

    def test_bad_square_levels(self):
        levels = [base_level(c, CubeTemplate.BAD_TIMES_COHERENT)
                  for c in ((0, 0), (1, 0), (0, 1), (1, 1))]
        assert levels == [0, 1, 1, 0]

    def test_offsets_put_zero_in_range(self):
        assert offsets_for(3, CubeTemplate.COHERENT) == [-3, -2, -1, 0]
        assert offsets_for(3, CubeTemplate.BAD_TIMES_COHERENT) == [-2, -1, 0]

    def test_subcomplex_keeps_level_zero_corners(self):
        graph, zero = zigzag_subcomplex(3, CubeTemplate.COHERENT, -1)
        assert sorted(zero) == [(0, 0, 1), (0, 1, 0), (1, 0, 0)]
        assert all(corner in graph for corner in zero)
        assert (1, 1, 1) not in graph

    def test_offset_without_level_zero_is_rejected(self):
        assert not check_zigzag_offset(2, CubeTemplate.COHERENT, 5)

    def test_table(self):
        table = zigzag_table(3)
        assert {r.dim for r in table} == {2, 3}
        assert all(r.connected for r in table)
        assert table[0].to_dict() == {'dim': 2, 'template': 'coherent', 'offset': -2,
                                      'connected': True}

    @pytest.mark.parametrize('dim', [1, 10])
    def test_dimension_range(self, dim):
        with pytest.raises(ValueError):
            zigzag_table(dim)
        with pytest.raises(ValueError):
            check_zigzag(dim, CubeTemplate.COHERENT)
