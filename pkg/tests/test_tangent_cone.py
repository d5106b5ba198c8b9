from __future__ import annotations

from functools import reduce
from math import gcd

import pytest
from hypothesis import assume, given, settings, strategies as st

from aperykit import (
    DomainError,
    Gamma4Params,
    NumericalSemigroup,
    apery_set,
    apery_table,
    artinian_socle,
    cz_decompose,
    gamma4_apery_table,
    gorenstein_condition,
    hilbert_from_decomposition,
    ladder_stats,
    landings,
    pseudo_frobenius,
    unique_expression_check,
)
from aperykit.core import max_factorization_length
from aperykit.tangent_cone import (
    CZDecomposition,
    HilbertSeries,
    is_tangent_cone_buchsbaum,
    is_tangent_cone_cm,
    non_unique_apery_elements,
)

from oracles import max_length_brute


def test_ladder_single_landing():
    st_ = ladder_stats((46, 46, 57, 68))
    assert [(l.start, l.end) for l in st_.landings] == [(0, 1)]
    assert (st_.p, st_.d, st_.torsion) == (0, 1, ())


def test_ladder_without_landing():
    st_ = ladder_stats((0, 11, 22, 33))
    assert (st_.p, st_.d, st_.torsion) == (0, 0, ())


def test_ladder_with_torsion():
    st_ = ladder_stats((5, 5, 10, 10, 15))
    assert [(l.start, l.end) for l in st_.landings] == [(0, 1), (2, 3)]
    assert (st_.p, st_.d, st_.torsion) == (1, 3, ((1, 1),))


def test_decreasing_ladder_rejected():
    with pytest.raises(DomainError):
        landings((3, 2))


@settings(max_examples=200)
@given(st.lists(st.integers(0, 5), min_size=1, max_size=12), st.integers(-50, 50))
def test_ladder_shift_invariance(steps, shift):
    values = [sum(steps[: i + 1]) for i in range(len(steps))]
    assert ladder_stats(values) == ladder_stats([v + shift for v in values])


@settings(max_examples=200)
@given(st.lists(st.integers(0, 3), min_size=1, max_size=12))
def test_landings_are_maximal_constant_runs(steps):
    values = [sum(steps[: i + 1]) for i in range(len(steps))]
    found = landings(values)
    for l in found:
        assert len(set(values[l.start : l.end + 1])) == 1
        assert l.start == 0 or values[l.start - 1] != values[l.start]
        assert l.end == len(values) - 1 or values[l.end + 1] != values[l.end]
    covered = sum(l.length + 1 for l in found)
    runs = sum(1 for i in range(1, len(values)) if values[i] == values[i - 1])
    assert covered - len(found) == runs


def test_worked_example_decomposition():
    decomp = cz_decompose(gamma4_apery_table(Gamma4Params(11, 24)))
    assert decomp.shift_histogram() == [1, 3, 4, 3]
    assert decomp.torsion == ()
    assert str(decomp) == "F + F(-1)^3 + F(-2)^4 + F(-3)^3"
    assert is_tangent_cone_cm(decomp) and is_tangent_cone_buchsbaum(decomp)
    assert str(hilbert_from_decomposition(decomp)) == "(1+3x+4x^2+3x^3)/(1-x)"


def test_small_decompositions():
    d23 = cz_decompose(apery_table(NumericalSemigroup((2, 3))))
    assert d23.free_shifts == (0, 1) and d23.torsion == ()
    assert hilbert_from_decomposition(d23).numerator == (1, 1)
    d7 = cz_decompose(gamma4_apery_table(Gamma4Params(7, 1)))
    assert d7.shift_histogram() == [1, 3, 2, 1]
    assert hilbert_from_decomposition(d7).numerator == (1, 3, 2, 1)


def test_synthetic_torsion():
    decomp = CZDecomposition(3, (0, 1, 3), ((1, 1),))
    assert not is_tangent_cone_cm(decomp)
    hs = hilbert_from_decomposition(decomp)
    assert hs.numerator == (1, 2, -1, 1)
    assert hs.at_one() == 3
    assert str(hs) == "(1+2x-x^2+x^3)/(1-x)"


def test_hilbert_series_coefficients():
    assert HilbertSeries((1, 3, 4, 3)).coefficients(6) == [1, 4, 8, 11, 11, 11]


@st.composite
def three_generated(draw):
    gens = sorted(draw(st.lists(st.integers(3, 24), min_size=3, max_size=3, unique=True)))
    assume(reduce(gcd, gens) == 1)
    return NumericalSemigroup(gens)


def _hilbert_function(S: NumericalSemigroup, count: int) -> list[int]:
    """#{s in S : ord(s) = n}, the dimension of m^n / m^(n+1)."""
    top = (count + 2) * S.generators[-1] * S.multiplicity
    out = [0] * count
    for s in range(top):
        ell = max_factorization_length(S, s)
        if ell is not None and ell < count:
            out[ell] += 1
    return out


@settings(max_examples=60, deadline=None)
@given(three_generated())
def test_hilbert_series_matches_hilbert_function(S):
    table = apery_table(S)
    hs = hilbert_from_decomposition(cz_decompose(table))
    n = table.reduction_number + 3
    assert hs.coefficients(n) == _hilbert_function(S, n)
    assert hs.at_one() == S.multiplicity


def test_non_cm_example_has_torsion():
    S = NumericalSemigroup((19, 20, 27))
    decomp = cz_decompose(apery_table(S))
    assert decomp.torsion
    assert not is_tangent_cone_cm(decomp)
    n = apery_table(S).reduction_number + 3
    assert hilbert_from_decomposition(decomp).coefficients(n) == _hilbert_function(S, n)


def test_gorenstein_condition_two_three():
    rep = gorenstein_condition(NumericalSemigroup((2, 3)))
    assert rep.per_n == {1: True} and rep.overall


def test_gorenstein_condition_by_hand():
    # n = 1 for <2,3>: M ∩ (3M - 2) equals 2M = {4, 5, 6, ...}
    ell = {x: max_length_brute((2, 3), x) or 0 for x in range(40)}
    lhs = {x for x in range(1, 30) if ell[x] >= 1 and ell[x + 2] >= 3}
    assert lhs == {x for x in range(1, 30) if ell[x] >= 2} == set(range(4, 30))


def test_gorenstein_condition_gamma4_is_computed():
    S = NumericalSemigroup((11, 46, 105, 188))
    rep = gorenstein_condition(S)
    assert set(rep.per_n) == {1, 2, 3}
    assert all(rep.window[n] >= 328 for n in rep.per_n)


def test_artinian_socle():
    assert artinian_socle(NumericalSemigroup((2, 3))) == [3]
    assert artinian_socle(NumericalSemigroup((3, 5, 7))) == [5, 7]
    S = NumericalSemigroup((11, 46, 105, 188))
    assert len(artinian_socle(S)) == len(pseudo_frobenius(S)) == 3


def test_unique_expression_control():
    S = NumericalSemigroup((5, 6, 9))
    ap = apery_set(S, 5)
    assert not unique_expression_check(S, ap)
    assert 18 in non_unique_apery_elements(S, ap)
    T = NumericalSemigroup((11, 46, 105, 188))
    assert unique_expression_check(T, apery_set(T, 11))
