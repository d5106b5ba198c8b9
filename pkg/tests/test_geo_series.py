from __future__ import annotations

from math import gcd

import pytest
from hypothesis import given, settings, strategies as st

from aperykit import (
    GeoParams,
    ParameterError,
    apery_set,
    apery_table,
    geo_apery,
    geo_apery_table,
    geo_hilbert_series,
    geo_semigroup,
    min_digit_sum,
    r_adic,
    table_depth,
)
from aperykit.geo_series import geo_apery_by_residue, geo_generators
from aperykit.verify import verify_geo

from oracles import apery_scan

EXAMPLE = GeoParams(7, 3, 2, 1, 2)


def test_example_generators_and_row():
    assert geo_generators(EXAMPLE) == (7, 10, 13, 19)
    row = [0] + [w for _, _, w in geo_apery(EXAMPLE)]
    assert row == [0, 10, 13, 23, 19, 29, 32]


def test_example_against_scan():
    scan = apery_scan(geo_generators(EXAMPLE), 7)
    assert geo_apery_by_residue(EXAMPLE) == tuple(scan[r] for r in range(7))


def test_r_adic_examples():
    assert r_adic(11, 2, 2).digits == (1, 1, 2)
    assert r_adic(11, 2, 2).digit_sum == 4
    assert r_adic(11, 2, 2).value == 11
    assert r_adic(5, 3, 0).digits == (5,)
    assert min_digit_sum(11, 2, 2) == 4


@settings(max_examples=200, deadline=None)
@given(st.integers(0, 400), st.integers(2, 5), st.integers(0, 4))
def test_r_adic_minimises_digit_sum(mval, r, n):
    rep = r_adic(mval, r, n)
    assert rep.value == mval
    assert all(c < r for c in rep.digits[:-1])
    assert rep.digit_sum == min_digit_sum(mval, r, n)


@pytest.mark.parametrize(
    "vals",
    [(7, 3, 1, 1, 2), (6, 5, 2, 1, 1), (7, 2, 2, 1, 2), (8, 7, 2, 1, 1), (7, 5, 7, 1, 1)],
)
def test_invalid_params(vals):
    with pytest.raises(ParameterError):
        GeoParams(*vals)


def test_non_minimal_reports_witness():
    with pytest.raises(ParameterError, match=r"11 has factorization \(3, 1\)"):
        GeoParams(2, 3, 3, 1, 1)


def _valid_params():
    out = []
    for a in range(7, 16):
        for r in (2, 3):
            for h in (1, 2):
                for n in (1, 2):
                    base = h * n * (r - 1)
                    for d in range(base + 1, base + 6):
                        try:
                            out.append(GeoParams(a, d, r, h, n))
                        except ParameterError:
                            pass
    return out


@pytest.mark.parametrize("p", _valid_params()[::5], ids=lambda p: "-".join(map(str, p.as_dict().values())))
def test_closed_forms_against_engine(p):
    S = geo_semigroup(p)
    assert geo_apery_by_residue(p) == apery_set(S, p.a).elements
    table = apery_table(S)
    assert geo_apery_table(p) == table
    assert table_depth(p) == table.reduction_number
    assert geo_hilbert_series(p).at_one() == p.a


def test_verify_geo_example():
    rep = verify_geo(EXAMPLE, gorenstein=True)
    assert rep.ok and all(rep.checks.values())
