"""
Partial sums of a geometric progression
=======================================

With ``a_0 = a`` and ``a_{k+1} = h a + r^k d`` the Apery element of index
``i`` is ``l_i h a + i d``, where ``l_i`` is the digit sum of the base-r
expansion of ``i`` whose top digit (position n) is unbounded.
"""

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
from aperykit.geo_series import geo_apery_by_residue

# %%
# Digits
# ------
# The truncated expansion minimises the digit sum over all ways of writing
# ``i`` as a combination of ``1, r, ..., r^n``.

for i in range(12):
    rep = r_adic(i, 2, 2)
    print(i, rep.digits, rep.digit_sum, min_digit_sum(i, 2, 2))

# %%
# An instance
# -----------

p = GeoParams(7, 3, 2, 1, 2)
S = geo_semigroup(p)
print(S)
print([(i, ell, w) for i, ell, w in geo_apery(p)])
print("engine agrees:", geo_apery_by_residue(p) == apery_set(S, p.a).elements)
print("table agrees:", geo_apery_table(p) == apery_table(S), "depth", table_depth(p))
print(geo_hilbert_series(p))

# %%
# Hypotheses are checked up front
# -------------------------------

for vals in [(7, 2, 2, 1, 2), (2, 3, 3, 1, 1)]:
    try:
        GeoParams(*vals)
    except ParameterError as exc:
        print(vals, "->", exc)
