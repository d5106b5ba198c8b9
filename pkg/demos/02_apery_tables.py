"""
Apery tables and the tangent cone
=================================

Row ``n`` of the Apery table lists, per residue, the least element of
``nM`` where ``M`` is the maximal ideal.  Each column is a ladder; its flat
stretches (landings) describe the tangent cone as a module over the fiber
cone of ``t^a``.
"""

from aperykit import (
    NumericalSemigroup,
    apery_table,
    cz_decompose,
    hilbert_from_decomposition,
    ladder_stats,
)
from aperykit.core import max_factorization_length

# %%
# A table
# -------

S = NumericalSemigroup((7, 15, 24, 34))
table = apery_table(S)
for n, row in enumerate(table.rows):
    print(f"Ap({n}M):", row)
print("reduction number:", table.reduction_number)

# %%
# Ladders and landings
# --------------------
# One landing per column means a free summand and no torsion.

for r in range(table.modulus):
    stats = ladder_stats(table.column(r))
    print(r, table.column(r), "shift", stats.d, "torsion", stats.torsion)

decomp = cz_decompose(table)
print(decomp)
print(hilbert_from_decomposition(decomp))

# %%
# A tangent cone that is not Cohen-Macaulay
# -----------------------------------------
# ``<19,20,27>`` has columns with two landings, giving torsion summands.

S = NumericalSemigroup((19, 20, 27))
decomp = cz_decompose(apery_table(S))
print(decomp)
hs = hilbert_from_decomposition(decomp)
print(hs)

# %%
# The numerator over (1-x) must reproduce the Hilbert function
# ``dim m^n / m^(n+1)``, which counts elements of order exactly n.

count = 10
direct = [0] * count
for s in range(20 * 27 * 19):
    ell = max_factorization_length(S, s)
    if ell is not None and ell < count:
        direct[ell] += 1
print("from decomposition:", hs.coefficients(count))
print("by counting:       ", direct)
