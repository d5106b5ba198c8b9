"""
Defining ideal and free resolution
==================================

The kernel of ``k[x1..x4] -> k[t]``, ``x_i -> t^{a_i}``, is generated by
weighted-homogeneous binomials.  The explicit families are checked three
ways: both monomials of each binomial factor the same element; the quotient
by the generators and x1 has dimension a; and the degrees match the Betti
elements found from factorization graphs.
"""

from aperykit import (
    Gamma4Params,
    betti_degrees,
    gamma4_semigroup,
    hq_generators,
    resolution_matrices,
    standard_monomial_count,
    verify_complex,
)
from aperykit.binomial_ideal import set_x1_zero
from aperykit.gamma4 import gamma4_generators
from aperykit.polynomial import weighted_degree

# %%
# Generators
# ----------

p = Gamma4Params(11, 24)
w = gamma4_generators(p)
for b in hq_generators(p):
    print(f"{str(b):28s} degree {weighted_degree(b.plus, w)}")
print("Betti elements:", betti_degrees(gamma4_semigroup(p)))

# %%
# Setting x1 = 0 leaves a monomial ideal in x2, x3, x4.  Its standard
# monomials number exactly a when the binomials generate the whole ideal.

images = set_x1_zero(hq_generators(p))
print(images, "->", standard_monomial_count(images), "standard monomials")

# %%
# Resolutions
# -----------
# The matrices compose to zero, have no unit entries and admit a consistent
# grading of every free module.

for a, d in [(12, 1), (7, 1), (9, 2), (10, 3)]:
    q = Gamma4Params(a, d)
    res = resolution_matrices(q)
    report = verify_complex(res.phi1, res.phi2, res.phi3, gamma4_generators(q))
    print((a, d), "signature", res.signature, "ok", report.ok)

print(resolution_matrices(Gamma4Params(7, 1)).phi2)
