from fractions import Fraction
from itertools import product

import pytest
from hypothesis import given, settings, strategies as st

from gwquot import (
    ClassVector,
    CurveClass,
    Grassmannian,
    ParameterError,
    Product,
    Projective,
    make_model,
)
from gwquot import schubert


def test_projective_model_shape():
    model = make_model(Projective(3))
    assert len(model.basis) == 4
    assert model.complex_dimension == 3
    assert model.c1 == ClassVector.of(model.class_by_tag((1,)), 4)


def test_product_model_shape():
    model = make_model(Product(1, 1))
    assert {b.tag for b in model.basis} == {(0, 0), (1, 0), (0, 1), (1, 1)}
    h1, h2 = model.class_by_tag((1, 0)), model.class_by_tag((0, 1))
    assert model.pairing(h1, h2) == 1
    assert model.pairing(h1, h1) == 0


def test_grassmannian_model_shape():
    model = make_model(Grassmannian(2, 4))
    assert len(model.basis) == 6
    assert model.complex_dimension == 4


@pytest.mark.parametrize("kind", [Projective(0), Product(0, 2), Grassmannian(2, 2), Grassmannian(0, 3)])
def test_invalid_parameters_rejected(kind):
    with pytest.raises(ParameterError):
        make_model(kind)


def test_cup_examples():
    p3 = make_model(Projective(3))
    assert p3.cup(p3.class_by_tag((1,)), p3.class_by_tag((2,))) == ClassVector.of(p3.class_by_tag((3,)))
    p11 = make_model(Product(1, 1))
    h1 = p11.class_by_tag((1, 0))
    assert p11.cup(h1, h1).is_zero
    g24 = make_model(Grassmannian(2, 4))
    s1 = g24.class_by_tag((1,))
    expected = ClassVector.of(g24.class_by_tag((2,))) + ClassVector.of(g24.class_by_tag((1, 1)))
    assert g24.cup(s1, s1) == expected


def test_pairing_examples():
    p3 = make_model(Projective(3))
    assert p3.pairing(p3.class_by_tag((1,)), p3.class_by_tag((2,))) == 1
    g24 = make_model(Grassmannian(2, 4))
    assert g24.pairing(g24.class_by_tag((2,)), g24.class_by_tag((1, 1))) == 0
    assert g24.pairing(g24.class_by_tag((2,)), g24.class_by_tag((2,))) == 1
    for kind in (Projective(4), Product(2, 3), Grassmannian(2, 5)):
        model = make_model(kind)
        assert model.pairing(model.fundamental_class, model.point_class) == 1


def test_c1_dot_examples():
    assert make_model(Projective(3)).c1_dot(CurveClass((1,))) == 4
    assert make_model(Product(1, 1)).c1_dot(CurveClass((1, 1))) == 4
    assert make_model(Grassmannian(2, 4)).c1_dot(CurveClass((2,))) == 8


def test_expected_dim_examples():
    assert make_model(Projective(3)).expected_dim(0, 0, CurveClass((1,))) == 4
    assert make_model(Product(1, 1)).expected_dim(0, 3, CurveClass((1, 1))) == 6
    assert make_model(Projective(5)).expected_dim(0, 5, CurveClass((1,))) == 13


@given(k=st.integers(0, 12), g=st.integers(0, 4), d=st.integers(0, 5))
@settings(max_examples=40, deadline=None)
def test_expected_dim_k_linearity(k, g, d):
    model = make_model(Projective(3))
    a = CurveClass((d,))
    assert model.expected_dim(g, k, a) == model.expected_dim(g, 0, a) + k


def _all_small_models():
    models = [make_model(Projective(n)) for n in range(1, 6)]
    models += [make_model(Product(m, n)) for m in range(1, 4) for n in range(1, 4)]
    models += [make_model(Grassmannian(k, m)) for m in range(2, 6) for k in range(1, m)]
    return models


@pytest.mark.parametrize("model", _all_small_models(), ids=lambda m: str(m.kind))
def test_cup_commutative_and_associative(model):
    basis = model.basis
    for a, b in product(basis, repeat=2):
        assert model.cup(a, b) == model.cup(b, a)
    # associativity over basis triples
    for a, b, c in product(basis, repeat=3):
        left = model.cup(model.cup(a, b), c)
        right = model.cup(a, model.cup(b, c))
        assert left == right


@pytest.mark.parametrize("model", _all_small_models(), ids=lambda m: str(m.kind))
def test_frobenius_property(model):
    for a, b, c in product(model.basis, repeat=3):
        assert model.pairing(model.cup(a, b), c) == model.pairing(a, model.cup(b, c))


@pytest.mark.parametrize("model", _all_small_models(), ids=lambda m: str(m.kind))
def test_pairing_matrix_shape(model):
    matrix = model.pairing_matrix
    n = len(model.basis)
    dim = model.complex_dimension
    for i in range(n):
        for j in range(n):
            assert matrix[i][j] == matrix[j][i]
            if matrix[i][j]:
                assert model.basis[i].codim + model.basis[j].codim == dim
        assert sum(matrix[i]) == 1  # permutation matrix, hence unimodular


@pytest.mark.parametrize("m", range(2, 7))
def test_grassmannian_cup_matches_tableau_enumeration(m):
    for k in range(1, m):
        model = make_model(Grassmannian(k, m))
        cols = m - k
        for a, b in product(model.basis, repeat=2):
            expected = {
                nu: c
                for nu, c in schubert.lr_coeffs_tableau(a.tag, b.tag, max_rows=k).items()
                if schubert.fits_in_box(nu, k, cols)
            }
            got = {cls.tag: int(v) for cls, v in model.cup(a, b).items()}
            assert got == expected


def test_class_vector_arithmetic():
    model = make_model(Projective(2))
    h = model.class_by_tag((1,))
    v = ClassVector.of(h, 2) + ClassVector.of(h, Fraction(1, 2))
    assert v.coeffs[h] == Fraction(5, 2)
    assert (v + v.scale(-1)).is_zero


def test_curve_class_validation():
    model = make_model(Product(1, 2))
    with pytest.raises(ParameterError):
        model.curve(1)
    with pytest.raises(ParameterError):
        model.c1_dot(CurveClass((-1, 0)))
    assert model.curve_zero().is_zero
