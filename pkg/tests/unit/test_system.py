"""Unit tests for rigidcover.system

Tests presentations, tangency and relator rows, system shapes,
coboundary vectors and sparse export.
"""

from fractions import Fraction

import pytest

from rigidcover.cover import build_window_s
from rigidcover.models import AssemblyMode
from rigidcover.numfield import FieldMatrix, FieldScalar, lie_algebra_basis
from rigidcover.polytope import builtin_octahedron
from rigidcover.rank import ExactEngine, vector_rank
from rigidcover.system import (
    KernelVector,
    Relator,
    approximate_system_size,
    assemble,
    assemble_base,
    assign_images,
    coboundary_vectors,
    export_system,
    presentation_of,
    read_exact_triplets,
    reduce_tangency,
    relator_rows,
    satisfies,
    simplified_terms,
    square_word,
    tangency_rows,
    violated_rows,
)
from rigidcover.system.coboundary import row_value
from rigidcover.utils.exceptions import RelatorShapeError
from tests.fixtures.polytopes import synthetic_system


def matrix_vector(generator: int, matrix: FieldMatrix, length: int) -> KernelVector:
    size = matrix.shape[0]
    entries = {generator * size * size + p * size + q: matrix[p, q]
               for p in range(size) for q in range(size) if matrix[p, q]}
    return KernelVector(length, entries)


class TestPresentation:
    """Test groupoid presentations."""

    def test_square_word_shape(self):
        relator = square_word(7, (10, 11, 12, 13))
        assert relator.square == 7
        assert relator.letters == ((13, 1), (12, -1), (11, 1), (10, -1))

    def test_generators_point_to_odd_levels(self, octa_window):
        presentation = presentation_of(octa_window)
        assert len(presentation.vertices) == 6
        for g in presentation.generators:
            assert g.tail[1] % 2 == 0
            assert g.head[1] % 2 != 0

    def test_presentation_of_complex(self, octa_complex):
        presentation = presentation_of(octa_complex)
        assert len(presentation.generators) == 16
        assert len(presentation.relators) == 12

    def test_unknown_source(self):
        with pytest.raises(TypeError):
            presentation_of(object())

    def test_images_are_facet_reflections(self, octa_window, octa):
        presentation = presentation_of(octa_window)
        images = assign_images(octa_window, octa)
        assert len(images) == len(presentation.generators)
        identity = FieldMatrix.identity(4)
        for g, image in zip(presentation.generators, images):
            assert image is octa.reflection(g.facet)
            assert image @ image == identity


class TestEquations:
    """Test tangency and relator rows."""

    def test_tangent_vectors_solve_tangency_rows(self):
        p = builtin_octahedron()
        form = p.form
        m = p.reflection(3)
        rows = tangency_rows(0, m, form)
        assert len(rows) == 16
        for a in lie_algebra_basis(3):
            vector = matrix_vector(0, a @ m, 16)
            assert all(not row_value(row, vector) for row in rows)

    def test_non_tangent_vector_violates_tangency(self):
        p = builtin_octahedron()
        rows = tangency_rows(0, p.reflection(3), p.form)
        vector = matrix_vector(0, FieldMatrix.identity(4), 16)
        assert any(row_value(row, vector) for row in rows)

    def test_simplified_needs_commuting_images(self):
        p = builtin_octahedron()
        images = [p.reflection(1), p.reflection(8)]
        relator = Relator(0, ((0, 1), (1, -1), (0, 1), (1, -1)))
        with pytest.raises(RelatorShapeError):
            simplified_terms(relator, images, 4, 1)

    def test_simplified_needs_alternating_word(self):
        p = builtin_octahedron()
        images = [p.reflection(1), p.reflection(2)]
        relator = Relator(0, ((0, 1), (1, 1), (0, 1), (1, 1)))
        with pytest.raises(RelatorShapeError):
            simplified_terms(relator, images, 4, 1)

    def test_generic_matches_simplified_on_square(self):
        p = builtin_octahedron()
        images = [p.reflection(1), p.reflection(2), p.reflection(1), p.reflection(2)]
        relator = Relator(0, ((0, 1), (1, -1), (2, 1), (3, -1)))
        generic = relator_rows(relator, images, AssemblyMode.GENERIC, p.form)
        simplified = relator_rows(relator, images, AssemblyMode.SIMPLIFIED, p.form)
        assert generic == simplified

    def test_both_is_not_an_assembly_mode(self, octa_window):
        p = builtin_octahedron()
        with pytest.raises(ValueError):
            assemble(octa_window, p, AssemblyMode.BOTH)
        with pytest.raises(ValueError):
            relator_rows(Relator(0, ()), [], AssemblyMode.BOTH, p.form)


class TestSystemShape:
    """Test system dimensions against the count formulas."""

    def test_octahedron_window(self, octa_system):
        assert octa_system.shape == (352, 256)
        assert octa_system.tangency_count == 256
        assert octa_system.relator_count == 96
        assert octa_system.vertex_count == 6
        assert octa_system.dim_g == 6

    def test_octahedron_window_s2(self, octa_complex, octa):
        system = assemble(build_window_s(octa_complex, 2), octa)
        assert system.shape == (800, 512)

    def test_approximate_size(self):
        assert approximate_system_size(3, 8, 12, 2, 1) == (352, 256)
        assert approximate_system_size(3, 8, 12, 2, 2) == (800, 512)
        assert approximate_system_size(4, 120, 720, 5, 1) == (120000, 48000)
        assert approximate_system_size(4, 10, 0, 5, 1)[1] == 4000
        assert approximate_system_size(5, 16, 0, 8, 1)[1] == 73728

    def test_base_complex(self, octa_complex, octa):
        system = assemble_base(octa_complex, octa)
        assert system.shape == (16 * (16 + 12), 256)
        assert system.vertex_count == 4

    def test_columns(self, octa_system):
        assert octa_system.column(2, 1, 3) == 2 * 16 + 1 * 4 + 3
        assert list(octa_system.generator_columns(1)) == list(range(16, 32))

    def test_reduced_system(self, octa_system):
        reduced = reduce_tangency(octa_system)
        assert reduced.reduced
        assert reduced.shape == (96, 96)
        assert reduced.tangency_count == 0
        assert reduce_tangency(reduced) is reduced
        with pytest.raises(ValueError):
            reduced.column(0, 0, 0)

    def test_lifts_share_images(self, octa_system):
        generators = octa_system.presentation.generators
        for g in generators:
            assert octa_system.images[g.index] == builtin_octahedron().reflection(g.facet)

    def test_dense_mirror(self, octa_system):
        dense = octa_system.to_dense()
        assert dense.shape == (352, 256)
        assert (dense != 0).sum() == octa_system.nonzeros()

    def test_constraints_are_appended(self, octa_system):
        extra = octa_system.with_constraints([{0: FieldScalar(1)}])
        assert extra.shape == (353, 256)
        assert extra.constraint_count == 1
        assert octa_system.shape == (352, 256)


class TestCoboundaries:
    """Test the explicit coboundary kernel vectors."""

    @pytest.mark.parametrize('fixture', ['octa_system', 'corner_system', 'boosted_corner_system'])
    def test_coboundaries_solve_the_system(self, request, fixture):
        system = request.getfixturevalue(fixture)
        vectors = coboundary_vectors(system)
        assert len(vectors) == system.dim_g * system.vertex_count
        assert all(satisfies(system, v) for v in vectors)

    def test_coboundary_rank(self, octa_system):
        assert vector_rank(coboundary_vectors(octa_system)) == 36

    def test_coboundaries_of_reduced_system(self, octa_system):
        reduced = reduce_tangency(octa_system)
        vectors = coboundary_vectors(reduced)
        assert all(satisfies(reduced, v) for v in vectors)
        assert vector_rank(vectors) == 36

    def test_coboundaries_on_base_and_wider_window(self, octa_complex, octa):
        for source in (octa_complex, build_window_s(octa_complex, 2)):
            system = assemble(source, octa)
            vectors = coboundary_vectors(system)
            assert all(satisfies(system, v) for v in vectors)
            assert vector_rank(vectors) == 6 * system.vertex_count

    def test_paired_window_coboundaries(self, paired_system):
        vectors = coboundary_vectors(paired_system)
        assert paired_system.vertex_count == 24
        assert all(satisfies(paired_system, v) for v in vectors)
        assert vector_rank(vectors) == 144

    @pytest.mark.parametrize('seed', range(20))
    def test_synthetic_complexes(self, seed):
        system = synthetic_system(seed)
        assert system.d == (2 if seed % 2 else 1)
        vectors = coboundary_vectors(system)
        assert all(satisfies(system, v) for v in vectors)
        assert vector_rank(vectors) == system.dim_g * system.vertex_count
        assert ExactEngine(seed=seed).nullity(system).nullity >= len(vectors)

    def test_length_mismatch(self, octa_system):
        with pytest.raises(ValueError):
            violated_rows(octa_system, KernelVector(3, {}))


class TestExport:
    """Test the sparse triplet export."""

    def test_exact_file_reproduces_rows(self, tmp_path, boosted_corner_system):
        system = boosted_corner_system
        exact, mirror = tmp_path / 'system.txt', tmp_path / 'system.hex'
        count = export_system(system, exact, mirror)
        assert count == system.nonzeros()

        shape, d, entries = read_exact_triplets(exact)
        assert shape == system.shape
        assert d == 2
        assert entries == {(i, j): value for i, row in enumerate(system.rows)
                           for j, value in row.items()}

        lines = mirror.read_text(encoding='utf-8').splitlines()
        assert lines[0].startswith('# rows=')
        i, j, hex_value = lines[1].split()
        assert float.fromhex(hex_value) == float(system.rows[int(i)][int(j)])

    def test_rational_parts(self, tmp_path, octa_system):
        path = tmp_path / 'octa.txt'
        export_system(octa_system, path)
        first = path.read_text(encoding='utf-8').splitlines()[1].split()
        assert len(first) == 6
        assert first[4:] == ['0', '1']
        assert Fraction(int(first[2]), int(first[3])) == octa_system.rows[int(first[0])][int(first[1])]
