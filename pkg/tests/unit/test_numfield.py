"""Unit tests for rigidcover.numfield

Exact arithmetic in Q(sqrt d), dense matrices and the Lorentz algebra.
"""

from fractions import Fraction

import numpy as np
import pytest

from rigidcover.numfield import (
    FieldMatrix,
    FieldScalar,
    LorentzForm,
    in_lie_algebra,
    is_squarefree,
    lie_algebra_basis,
    lie_algebra_dimension,
    lie_coordinates,
    lorentz_product,
    preserves_form,
    reflection_matrix,
)
from rigidcover.utils.exceptions import FieldError


class TestFieldScalar:
    """Test scalar arithmetic and comparisons."""

    def test_rational_field_folds_sqrt_part(self):
        x = FieldScalar(1, 2)
        assert x.b == 0
        assert x == 3

    def test_conjugate_product_is_norm(self):
        x = FieldScalar(1, 1, 2)
        assert x * x.conjugate() == -1
        assert x.norm() == -1

    def test_inverse(self):
        x = FieldScalar(Fraction(1, 3), 2, 5)
        assert x * x.inverse() == 1
        assert FieldScalar(3, 0, 5) / x * x == 3

    def test_division_by_zero(self):
        with pytest.raises(ZeroDivisionError):
            FieldScalar(0, 0, 2).inverse()

    def test_rational_coerces_into_any_field(self):
        assert FieldScalar(2) + FieldScalar(0, 1, 3) == FieldScalar(2, 1, 3)
        assert (FieldScalar(0, 1, 3) * 2).d == 3

    def test_discriminant_mismatch(self):
        with pytest.raises(FieldError):
            FieldScalar(0, 1, 2) + FieldScalar(0, 1, 3)

    def test_discriminant_must_be_squarefree(self):
        with pytest.raises(FieldError):
            FieldScalar(1, 1, 4)
        assert is_squarefree(6)
        assert not is_squarefree(12)

    @pytest.mark.parametrize('a, b, expected', [
        (3, -2, 1),    # 9 > 8
        (1, -1, -1),   # 1 < 2
        (-3, 2, -1),
        (0, 1, 1),
        (0, 0, 0),
    ])
    def test_exact_sign(self, a, b, expected):
        assert FieldScalar(a, b, 2).sign() == expected

    def test_float_embedding(self):
        assert float(FieldScalar(1, 1, 2)) == pytest.approx(1 + 2 ** 0.5)

    def test_parts(self):
        x = FieldScalar.from_parts(2, 4, -3, 9, 7)
        assert x.to_parts() == (1, 2, -1, 3)

    def test_hash_matches_rationals(self):
        assert hash(FieldScalar(Fraction(1, 2), 0, 5)) == hash(FieldScalar(Fraction(1, 2)))


class TestFieldMatrix:
    """Test exact matrix operations."""

    def test_inverse(self):
        m = FieldMatrix([[1, FieldScalar(0, 1, 2)], [0, 1]])
        assert (m @ m.inverse()).is_identity()
        assert m.d == 2

    def test_singular_inverse(self):
        with pytest.raises(ZeroDivisionError):
            FieldMatrix([[1, 2], [2, 4]]).inverse()

    def test_shape_mismatch(self):
        with pytest.raises(FieldError):
            FieldMatrix([[1, 2]]) @ FieldMatrix([[1, 2]])

    def test_to_float(self):
        m = FieldMatrix([[FieldScalar(0, 1, 2), 1]])
        assert np.allclose(m.to_float(), [[2 ** 0.5, 1.0]])

    def test_immutable_and_hashable(self):
        a = FieldMatrix.identity(3)
        b = FieldMatrix.diagonal([1, 1, 1])
        assert a == b
        assert len({a, b}) == 1


class TestLorentz:
    """Test the Lorentz form, reflections and the Lie algebra."""

    def test_product_signature(self):
        form = LorentzForm(3)
        assert lorentz_product([1, 1, 1, -1], [1, 1, 1, -1], form) == 2
        assert lorentz_product([1, 1, 1, -1], [1, 1, -1, -1], form) == 0

    def test_reflection_is_an_isometric_involution(self):
        form = LorentzForm(3)
        r = reflection_matrix([1, 1, 1, -1], form)
        assert (r @ r).is_identity()
        assert preserves_form(r, form)
        assert r.apply([1, 1, 1, -1]) == [-1, -1, -1, 1]

    def test_reflection_over_quadratic_field(self):
        form = LorentzForm(3, 2)
        normal = [FieldScalar(-1, 1, 2), 1, 1, FieldScalar(1, -1, 2)]
        r = reflection_matrix(normal, form)
        assert r.d == 2
        assert (r @ r).is_identity()
        assert preserves_form(r, form)

    def test_timelike_normal_rejected(self):
        with pytest.raises(FieldError):
            reflection_matrix([0, 0, 0, 1], LorentzForm(3))

    @pytest.mark.parametrize('n', [2, 3, 4, 5])
    def test_basis_spans_the_lie_algebra(self, n):
        form = LorentzForm(n)
        basis = lie_algebra_basis(n)
        assert len(basis) == lie_algebra_dimension(n) == n * (n + 1) // 2
        assert all(in_lie_algebra(a, form) for a in basis)

    def test_coordinates_recover_basis_elements(self):
        basis = lie_algebra_basis(3)
        for k, a in enumerate(basis):
            coords = lie_coordinates(a, 3)
            assert coords == [1 if j == k else 0 for j in range(len(basis))]

    def test_conjugation_stays_in_lie_algebra(self):
        form = LorentzForm(3)
        r = reflection_matrix([1, -1, 1, -1], form)
        for a in lie_algebra_basis(3):
            assert in_lie_algebra(r @ a @ r.inverse(), form)

    def test_basis_needs_n_at_least_two(self):
        with pytest.raises(ValueError):
            lie_algebra_basis(1)
