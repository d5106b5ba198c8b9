"""
Apery sets and the Frobenius problem
====================================

The Apery set of a numerical semigroup with respect to one of its elements
``n`` holds, for every residue class mod ``n``, the least semigroup element
in that class.  Everything else in this demo (Frobenius number,
pseudo-Frobenius numbers, type) is read off from it.
"""

import time

import numpy as np

from aperykit import (
    NumericalSemigroup,
    apery_set,
    factorizations,
    frobenius,
    pseudo_frobenius,
    semigroup_type,
)

# %%
# A first semigroup
# -----------------
# ``<2,3>`` misses only 1.

S = NumericalSemigroup((2, 3))
print(S, "Frobenius:", frobenius(S), "Apery set:", apery_set(S, 2).elements)

# %%
# Residue classes of a four-generated semigroup
# ---------------------------------------------
# Elements are listed by residue, so entry ``r`` is congruent to ``r`` mod 11.

S = NumericalSemigroup((11, 46, 105, 188))
ap = apery_set(S, 11)
for r, w in enumerate(ap.elements):
    print(f"residue {r:2d}: {w}")

# %%
# The largest Apery element minus the modulus is the Frobenius number.
# Pseudo-Frobenius numbers come from the maximal elements of the Apery set.

print("F =", frobenius(S))
print("PF =", sorted(pseudo_frobenius(S)), "type", semigroup_type(S))

# %%
# Factorizations
# --------------
# Exponent vectors over the generators, largest last-generator exponent first.

T = NumericalSemigroup((7, 15, 24, 34))
for fac in factorizations(T, 54):
    print(fac, "length", sum(fac))

# %%
# Large moduli
# ------------
# The Apery set is a shortest-path problem on Z/aZ.  Each generator's arcs
# split the residues into cycles settled by one prefix-minimum pass, so a
# modulus of a million is cheap.

a = 10**6
big = NumericalSemigroup((a, a + 3, 3 * a + 9, 4 * a + 18))
start = time.perf_counter()
ap = apery_set(big, a)
print(f"a = {a}: {time.perf_counter() - start:.2f}s, max element {max(ap.elements)}")
print("mean Apery element / a:", np.mean(ap.elements) / a)
