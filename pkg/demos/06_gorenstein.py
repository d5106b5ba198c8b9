"""
Is the tangent cone Gorenstein?
===============================

A Gorenstein tangent cone forces ``nM ∩ ((n+2)M - a) = (n+1)M`` for
``1 <= n <= r``.  This demo evaluates that condition and, independently,
the socle of ``G / t^a G``.  When the tangent cone is Cohen-Macaulay the
element ``t^a`` is regular on it, so it is Gorenstein exactly when that
socle is one-dimensional.
"""

from aperykit import (
    Gamma4Params,
    NumericalSemigroup,
    apery_table,
    artinian_socle,
    cz_decompose,
    gamma4_semigroup,
    gorenstein_condition,
)

# %%
# The necessary condition holds for the Gamma4 instances
# ------------------------------------------------------

for a, d in [(11, 24), (7, 1), (12, 5), (13, 2)]:
    S = gamma4_semigroup(Gamma4Params(a, d))
    print((a, d), gorenstein_condition(S).per_n)

# %%
# Socle dimensions
# ----------------
# Type-one semigroups appear exactly when a is a multiple of 6, and their
# Cohen-Macaulay tangent cones turn out to be Gorenstein.

for a, d in [(11, 24), (7, 1), (12, 5), (18, 1), (24, 5)]:
    S = gamma4_semigroup(Gamma4Params(a, d))
    cm = not cz_decompose(apery_table(S)).torsion
    socle = artinian_socle(S)
    print((a, d), "CM" if cm else "not CM", "socle", socle)

# %%
# Controls: ``<2,3>`` is Gorenstein, ``<3,5,7>`` is not.

for gens in [(2, 3), (3, 5, 7)]:
    print(gens, artinian_socle(NumericalSemigroup(gens)))
