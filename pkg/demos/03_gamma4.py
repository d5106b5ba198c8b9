"""
Partial sums of an arithmetic progression
=========================================

For ``a >= 7`` and ``gcd(a, d) = 1`` the semigroup
``<a, 2a+d, 3a+3d, 4a+6d>`` has closed forms for its Apery set, table,
pseudo-Frobenius numbers and Hilbert series.  Here they are compared with
the generic engine.
"""

from aperykit import (
    Gamma4Params,
    apery_set,
    apery_table,
    gamma4_apery,
    gamma4_apery_table,
    gamma4_hilbert_series,
    gamma4_pf,
    gamma4_semigroup,
    pseudo_frobenius,
)
from aperykit.gamma4 import frobenius_cross_check, gamma4_apery_by_residue, case_table_tk
from aperykit.verify import depth_histogram

# %%
# The worked example a = 11, d = 24
# ---------------------------------
# Index ``i = 6 mu + 3 nu + xi`` gives ``omega(i) = (4mu + 3nu + 2xi) a + i d``.

p = Gamma4Params(11, 24)
for e in gamma4_apery(p):
    print(e.i, (e.mu, e.nu, e.xi), e.omega)

S = gamma4_semigroup(p)
print("closed form == engine:", gamma4_apery_by_residue(p) == apery_set(S, p.a).elements)

# %%
# The table, printed by index like the omega row above.

table = gamma4_apery_table(p)
for row in table.rows:
    print([row[(i * p.d) % p.a] for i in range(p.a)])
print("engine agrees:", table == apery_table(S))
print(gamma4_hilbert_series(p))

# %%
# Pseudo-Frobenius numbers
# ------------------------
# They are Apery elements minus a.  Listing the Apery elements themselves
# is a common alternative convention.

print("PF:", sorted(gamma4_pf(p)), "engine:", sorted(pseudo_frobenius(S)))
print("unshifted:", sorted(gamma4_pf(p, unshifted=True)))

# %%
# The t_k counts when a is a multiple of 6
# ----------------------------------------
# The case table counts the index (mu, 0, 0) = a, which is not below a.
# One is subtracted at k = mu.

q0 = Gamma4Params(18, 5)
print("uncorrected:", case_table_tk(q0, corrected=False))
print("corrected:  ", case_table_tk(q0))
print("histogram:  ", depth_histogram(apery_table(gamma4_semigroup(q0))))

# %%
# Choosing the Frobenius index when a = 2 mod 6
# ---------------------------------------------
# The larger of omega(a-1) and omega(a-3) wins; which one depends on a > 2d.

for a, d in [(8, 3), (8, 5), (14, 9)]:
    warnings = frobenius_cross_check(Gamma4Params(a, d))
    print((a, d), [w.claim for w in warnings] or "all guards agree")
