"""Closed forms for the semigroup generated by partial sums of an arithmetic progression.

With ``s_n = n(2a + (n-1)d)/2`` the generators are
``(a, 2a+d, 3a+3d, 4a+6d)``.  Writing ``i = 6*mu + 3*nu + xi`` with
``nu in {0,1}``, ``xi in {0,1,2}``, the Apery element of index ``i`` is
``omega(i) = (4mu + 3nu + 2xi) a + i d``, which lies in the residue class
``i*d mod a``.
"""
from __future__ import annotations

from dataclasses import dataclass
from math import gcd

import numpy as np

from .core import AperyTable, NumericalSemigroup
from .errors import ParameterError
from .report import Discrepancy
from .tangent_cone import HilbertSeries

# indices (a - k) whose omega values form PF + a, by q = a mod 6
PF_OFFSETS = {
    0: (1,),
    1: (1, 2),
    2: (1, 3),
    3: (1, 4),
    4: (1, 2, 5),
    5: (1, 3, 6),
}


@dataclass(frozen=True)
class Gamma4Params:
    a: int
    d: int

    def __post_init__(self):
        if self.a < 7:
            raise ParameterError(f"a must be >= 7 for a minimal generating set, got a={self.a}")
        if self.d < 1:
            raise ParameterError(f"d must be positive, got d={self.d}")
        if gcd(self.a, self.d) != 1:
            raise ParameterError(f"gcd(a, d) must be 1, got a={self.a}, d={self.d}")

    @classmethod
    def from_mq(cls, m: int, q: int, d: int) -> "Gamma4Params":
        return cls(6 * m + q, d)

    @property
    def m(self) -> int:
        return self.a // 6

    @property
    def q(self) -> int:
        return self.a % 6

    def as_dict(self) -> dict[str, int]:
        return {"a": self.a, "d": self.d}


@dataclass(frozen=True)
class Gamma4AperyEntry:
    i: int
    mu: int
    nu: int
    xi: int
    omega: int

    @property
    def depth(self) -> int:
        return self.mu + self.nu + self.xi


def gamma4_generators(p: Gamma4Params) -> tuple[int, int, int, int]:
    a, d = p.a, p.d
    return tuple(n * (2 * a + (n - 1) * d) // 2 for n in range(1, 5))


def gamma4_semigroup(p: Gamma4Params) -> NumericalSemigroup:
    return NumericalSemigroup(gamma4_generators(p))


def digits(i: int) -> tuple[int, int, int]:
    """``(mu, nu, xi)`` with ``i = 6 mu + 3 nu + xi``."""
    mu, qi = divmod(i, 6)
    if qi >= 3:
        return mu, 1, qi - 3
    return mu, 0, qi


def omega(p: Gamma4Params, i: int) -> int:
    mu, nu, xi = digits(i)
    return (4 * mu + 3 * nu + 2 * xi) * p.a + i * p.d


def residue_of_index(p: Gamma4Params, i: int) -> int:
    return (i * p.d) % p.a


def gamma4_apery(p: Gamma4Params) -> list[Gamma4AperyEntry]:
    out = []
    for i in range(1, p.a):
        mu, nu, xi = digits(i)
        out.append(Gamma4AperyEntry(i, mu, nu, xi, omega(p, i)))
    return out


def gamma4_apery_by_residue(p: Gamma4Params) -> tuple[int, ...]:
    i = np.arange(p.a, dtype=np.int64)
    mu, rem = np.divmod(i, 6)
    nu = rem // 3
    weight = 4 * mu + 3 * nu + 2 * (rem - 3 * nu)
    elems = np.empty(p.a, dtype=np.int64)
    elems[(i * p.d) % p.a] = weight * p.a + i * p.d
    return tuple(elems.tolist())


def gamma4_pf(p: Gamma4Params, unshifted: bool = False) -> set[int]:
    """Pseudo-Frobenius numbers ``omega(a-k) - a``.

    ``unshifted=True`` returns the Apery elements ``omega(a-k)`` themselves.
    """
    shift = 0 if unshifted else p.a
    return {omega(p, p.a - k) - shift for k in PF_OFFSETS[p.q]}


def gamma4_type(p: Gamma4Params) -> int:
    return len(PF_OFFSETS[p.q])


def gamma4_frobenius(p: Gamma4Params) -> int:
    return max(gamma4_pf(p))


def frobenius_by_cases(p: Gamma4Params, literal_guard: bool = True) -> int:
    """Frobenius number by case selection on q, shifted by -a.

    For q = 2 the stated guard reads ``a > 2``; ``literal_guard=False``
    uses ``a > 2d``, the sign of ``omega(a-3) - omega(a-1)``.
    """
    a, d, q = p.a, p.d, p.q
    if q in (0, 3, 5):
        k = 1
    elif q == 1:
        k = 2 if 3 * a > d else 1
    elif q == 2:
        cond = a > 2 if literal_guard else a > 2 * d
        k = 3 if cond else 1
    else:
        k = 2 if a > d else 1
    return omega(p, a - k) - a


def frobenius_cross_check(p: Gamma4Params) -> list[Discrepancy]:
    """Warnings where a case guard disagrees with max(PF)."""
    computed = gamma4_frobenius(p)
    out = []
    for literal in (True, False):
        claimed = frobenius_by_cases(p, literal_guard=literal)
        if claimed != computed:
            guard = "a > 2" if literal else "a > 2d"
            out.append(
                Discrepancy(
                    params=p.as_dict(),
                    claim=f"frobenius case selection (q={p.q}, guard {guard})",
                    computed=computed,
                    expected=claimed,
                    known=True,
                )
            )
    return out


def case_table_tk(p: Gamma4Params, corrected: bool = True) -> tuple[int, ...]:
    """Counts t_k of indices 0..a-1 with mu+nu+xi = k, from the case table.

    For q = 0 the triple (mu, 0, 0) would be the index a itself, so the
    corrected count at k = mu is one less than the uncorrected table.
    """
    mu, q = p.m, p.q
    t = [0] * (mu + 3)
    t[0], t[1] = 1, 3
    if mu == 1:
        t[2] = q // 2 + 2
    else:
        t[2] = 5
        for k in range(3, mu + 1):
            t[k] = 6
        t[mu + 1] = q // 2 + 3
    t[mu + 2] = 1 if q <= 2 else (2 if q <= 4 else 3)
    if corrected and q == 0:
        t[mu] -= 1
    return tuple(t)


def gamma4_tk(p: Gamma4Params) -> tuple[int, ...]:
    return case_table_tk(p, corrected=True)


def gamma4_hilbert_series(p: Gamma4Params) -> HilbertSeries:
    return HilbertSeries(gamma4_tk(p))


def gamma4_reduction_number(p: Gamma4Params) -> int:
    return p.a // 6 + 2


def gamma4_apery_table(p: Gamma4Params) -> AperyTable:
    """Closed-form table, columns indexed by residue.

    Column of index t keeps omega(t) while s <= depth(t), then becomes
    (3mu + 2nu + xi + s) a + t d.
    """
    a, d = p.a, p.d
    R = gamma4_reduction_number(p)
    rows = []
    for s in range(R + 1):
        row = [0] * a
        for t in range(a):
            mu, nu, xi = digits(t)
            if s <= mu + nu + xi:
                val = (4 * mu + 3 * nu + 2 * xi) * a + t * d
            else:
                val = (3 * mu + 2 * nu + xi + s) * a + t * d
            row[(t * d) % a] = val
        rows.append(tuple(row))
    return AperyTable(a, tuple(rows))


def derivation_exponents(p: Gamma4Params) -> set[int]:
    """Exponents e of the derivations t^e generating Der_k."""
    return {x + 1 for x in gamma4_pf(p)}
