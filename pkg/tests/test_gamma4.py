from __future__ import annotations

import pytest
from hypothesis import given, settings, strategies as st
from math import gcd

from aperykit import (
    Gamma4Params,
    ParameterError,
    apery_set,
    apery_table,
    frobenius,
    gamma4_apery,
    gamma4_apery_table,
    gamma4_frobenius,
    gamma4_hilbert_series,
    gamma4_pf,
    gamma4_semigroup,
    gamma4_tk,
    pseudo_frobenius,
)
from aperykit.gamma4 import (
    derivation_exponents,
    digits,
    frobenius_by_cases,
    frobenius_cross_check,
    gamma4_apery_by_residue,
    gamma4_generators,
    gamma4_reduction_number,
    gamma4_type,
    case_table_tk,
    omega,
)
from aperykit.verify import depth_histogram, verify_gamma4

from oracles import apery_scan, pf_by_definition

EXAMPLE = Gamma4Params(11, 24)


def params_strategy(max_a: int = 40, max_d: int = 30):
    return st.tuples(st.integers(7, max_a), st.integers(1, max_d)).filter(
        lambda t: gcd(*t) == 1
    ).map(lambda t: Gamma4Params(*t))


def test_example_generators_and_omega_row():
    assert gamma4_generators(EXAMPLE) == (11, 46, 105, 188)
    row = [0] + [e.omega for e in gamma4_apery(EXAMPLE)]
    assert row == [0, 46, 92, 105, 151, 197, 188, 234, 280, 293, 339]


def test_omega_nine_spot_value():
    assert omega(EXAMPLE, 9) == 293
    assert digits(9) == (1, 1, 0)


def test_example_table_column_of_92():
    table = gamma4_apery_table(EXAMPLE)
    col = table.column(92 % 11)
    assert col[2] == 92
    assert col[3] == 103


def test_example_pf_and_frobenius():
    assert gamma4_pf(EXAMPLE) == {186, 269, 328}
    assert gamma4_pf(EXAMPLE, unshifted=True) == {197, 280, 339}
    assert gamma4_frobenius(EXAMPLE) == 328
    assert gamma4_type(EXAMPLE) == 3


def test_example_hilbert():
    hs = gamma4_hilbert_series(EXAMPLE)
    assert hs.numerator == (1, 3, 4, 3)
    assert str(hs) == "(1+3x+4x^2+3x^3)/(1-x)"
    assert gamma4_reduction_number(EXAMPLE) == 3


@pytest.mark.parametrize("a, d", [(6, 1), (7, 7), (12, 9), (0, 1), (11, 0)])
def test_invalid_params(a, d):
    with pytest.raises(ParameterError):
        Gamma4Params(a, d)


def test_from_mq():
    p = Gamma4Params.from_mq(2, 3, 4)
    assert (p.a, p.m, p.q) == (15, 2, 3)


def test_closed_forms_small_grid_against_scan():
    for a in range(7, 26):
        for d in range(1, 12):
            if gcd(a, d) != 1:
                continue
            p = Gamma4Params(a, d)
            gens = gamma4_generators(p)
            scan = apery_scan(gens, a)
            assert gamma4_apery_by_residue(p) == tuple(scan[r] for r in range(a))


@settings(max_examples=60, deadline=None)
@given(params_strategy(max_a=30, max_d=20))
def test_pf_against_definition(p):
    assert gamma4_pf(p) == pf_by_definition(gamma4_generators(p))


@settings(max_examples=100, deadline=None)
@given(params_strategy())
def test_closed_forms_against_engine(p):
    S = gamma4_semigroup(p)
    assert gamma4_apery_by_residue(p) == apery_set(S, p.a).elements
    assert gamma4_pf(p) == pseudo_frobenius(S)
    assert gamma4_frobenius(p) == frobenius(S)
    table = apery_table(S)
    assert gamma4_apery_table(p) == table
    assert gamma4_tk(p) == depth_histogram(table)
    assert sum(gamma4_tk(p)) == p.a


def test_uncorrected_tk_differs_only_for_q0():
    for a in range(7, 60):
        p = Gamma4Params(a, 1)
        raw, fixed = case_table_tk(p, corrected=False), case_table_tk(p, corrected=True)
        assert (raw != fixed) == (p.q == 0)
        if p.q == 0:
            assert sum(raw) == a + 1


def test_frobenius_guard_warnings():
    # q = 2 with a <= 2d: the literal guard picks the wrong index
    p = Gamma4Params(8, 5)
    warnings = frobenius_cross_check(p)
    assert [w.claim for w in warnings] == ["frobenius case selection (q=2, guard a > 2)"]
    assert frobenius_by_cases(p, literal_guard=False) == gamma4_frobenius(p)
    assert all(w.known for w in warnings)


def test_derivation_exponents():
    assert derivation_exponents(EXAMPLE) == {187, 270, 329}


def test_verify_gamma4_example_passes():
    rep = verify_gamma4(EXAMPLE, gorenstein=True)
    assert rep.ok
    assert all(rep.checks.values())
    assert all(d.known for d in rep.discrepancies)
