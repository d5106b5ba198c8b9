from __future__ import annotations

import pytest
from hypothesis import given, settings, strategies as st

from aperykit import Polynomial, PolyMatrix
from aperykit.polynomial import divides, weighted_degree

monomials = st.tuples(*[st.integers(0, 4)] * 4)
polys = st.dictionaries(monomials, st.integers(-5, 5), max_size=5).map(Polynomial)


def x(i: int, e: int = 1) -> Polynomial:
    return Polynomial.var(i - 1, power=e)


@settings(max_examples=150)
@given(polys, polys, polys)
def test_ring_axioms(f, g, h):
    assert f + g == g + f
    assert f * g == g * f
    assert (f + g) + h == f + (g + h)
    assert (f * g) * h == f * (g * h)
    assert f * (g + h) == f * g + f * h
    assert f - f == Polynomial.zero()
    assert f * 1 == f and f + 0 == f
    assert f * 0 == Polynomial.zero()


@settings(max_examples=100)
@given(polys, polys)
def test_hash_consistent_with_eq(f, g):
    if f == g:
        assert hash(f) == hash(g)
    assert hash(f + g - g) == hash(f)


@given(polys, st.integers(0, 3))
def test_power(f, k):
    expected = Polynomial.constant(1)
    for _ in range(k):
        expected = expected * f
    assert f**k == expected


def test_zero_coefficients_dropped():
    f = Polynomial({(1, 0, 0, 0): 2, (0, 1, 0, 0): 0})
    assert f.terms == {(1, 0, 0, 0): 2}
    assert (x(1) - x(1)).is_zero()
    assert not Polynomial.zero()


def test_rejects_bad_monomials():
    with pytest.raises(ValueError):
        Polynomial({(1, 0, 0): 1})
    with pytest.raises(ValueError):
        Polynomial({(-1, 0, 0, 0): 1})


def test_weighted_degree():
    w = (11, 46, 105, 188)
    assert weighted_degree((0, 0, 0, 2), w) == 376
    assert weighted_degree((30, 1, 0, 0), w) == 376
    assert weighted_degree((0, 0, 0, 0), w) == 0
    f = x(1, 30) * x(2) - x(4, 2)
    assert f.homogeneous_degree(w) == 376
    assert (x(1) + x(2)).homogeneous_degree(w) is None


def test_divides():
    assert divides((1, 0, 2, 0), (1, 1, 2, 0))
    assert not divides((0, 0, 3, 0), (1, 1, 2, 0))


def test_str_and_json():
    f = x(3, 2) - x(1, 2) * x(4)
    assert str(f) == "-x1^2*x4 + x3^2"
    assert f.to_json() == [
        {"exponents": [0, 0, 2, 0], "coefficient": 1},
        {"exponents": [2, 0, 0, 1], "coefficient": -1},
    ]
    assert str(Polynomial.constant(-3)) == "-3"
    assert f.constant_term() == 0 and (f + 4).constant_term() == 4


def test_matrix_product():
    A = PolyMatrix([[x(1), x(2)]])
    B = PolyMatrix([[x(2)], [-x(1)]])
    assert (A @ B).is_zero()
    assert (B @ A).shape == (2, 2)
    assert (B @ A)[0, 0] == x(1) * x(2)
    with pytest.raises(ValueError):
        A @ A
    with pytest.raises(ValueError):
        PolyMatrix([[1, 2], [3]])


@settings(max_examples=60)
@given(st.lists(polys, min_size=4, max_size=4), st.lists(polys, min_size=4, max_size=4),
       st.lists(polys, min_size=2, max_size=2))
def test_matrix_associativity(a, b, c):
    A = PolyMatrix([a[:2], a[2:]])
    B = PolyMatrix([b[:2], b[2:]])
    C = PolyMatrix([[c[0]], [c[1]]])
    assert ((A @ B) @ C).entries == (A @ (B @ C)).entries
