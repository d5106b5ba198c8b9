"""Semigroups ``<a, ha + r^k d : 0 <= k <= n>`` built from a geometric progression.

The Apery element of index ``i`` is ``l_i h a + i d`` where ``l_i`` is the
digit sum of the base-r expansion of ``i`` truncated at position n (the top
digit absorbs the remainder).
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import gcd

from .core import AperyTable, NumericalSemigroup, redundant_generators
from .errors import DomainError, ParameterError
from .tangent_cone import HilbertSeries


@dataclass(frozen=True)
class RAdicDigits:
    """Digits ``alpha_0..alpha_n``; all but the top one are below r."""

    digits: tuple[int, ...]
    r: int

    @property
    def digit_sum(self) -> int:
        return sum(self.digits)

    @property
    def value(self) -> int:
        return sum(c * self.r**k for k, c in enumerate(self.digits))


def r_adic(mval: int, r: int, n: int) -> RAdicDigits:
    if r < 2:
        raise ParameterError(f"base r must be >= 2, got {r}")
    if mval < 0 or n < 0:
        raise DomainError(f"need mval >= 0 and n >= 0, got mval={mval}, n={n}")
    out = []
    rest = mval
    for _ in range(n):
        rest, digit = divmod(rest, r)
        out.append(digit)
    out.append(rest)
    return RAdicDigits(tuple(out), r)


def min_digit_sum(mval: int, r: int, n: int) -> int:
    """Least sum of ``beta_k`` over all ``mval = sum beta_k r^k``, by exhaustive search."""
    if r < 2:
        raise ParameterError(f"base r must be >= 2, got {r}")

    @lru_cache(maxsize=None)
    def best(rest: int, top: int) -> int:
        if top == 0:
            return rest
        w = r**top
        return min(b + best(rest - b * w, top - 1) for b in range(rest // w + 1))

    return best(mval, n)


@dataclass(frozen=True)
class GeoParams:
    a: int
    d: int
    r: int
    h: int
    n: int

    def __post_init__(self):
        a, d, r, h, n = self.a, self.d, self.r, self.h, self.n
        if min(a, d, h, n) < 1:
            raise ParameterError(f"a, d, h, n must be positive: {self.as_dict()}")
        if a < 2:
            raise ParameterError(f"a must be >= 2, got {a}")
        if r < 2:
            raise ParameterError(f"ratio r must be >= 2, got {r}")
        if gcd(a, d) != 1 or gcd(a, r) != 1:
            raise ParameterError(f"need gcd(a,d) = gcd(a,r) = 1: {self.as_dict()}")
        if d <= h * n * (r - 1):
            raise ParameterError(f"need d > h*n*(r-1) = {h * n * (r - 1)}, got d={d}")
        gens = _raw_generators(self)
        redundant = redundant_generators(NumericalSemigroup(gens))
        if redundant:
            g, fac = redundant[0]
            raise ParameterError(
                f"generators {gens} are not minimal: {g} has factorization {fac} over the others"
            )

    def as_dict(self) -> dict[str, int]:
        return {"a": self.a, "d": self.d, "r": self.r, "h": self.h, "n": self.n}


def _raw_generators(p: GeoParams) -> tuple[int, ...]:
    return (p.a,) + tuple(p.h * p.a + p.r**k * p.d for k in range(p.n + 1))


def geo_generators(p: GeoParams) -> tuple[int, ...]:
    return _raw_generators(p)


def geo_semigroup(p: GeoParams) -> NumericalSemigroup:
    return NumericalSemigroup(geo_generators(p))


def geo_apery(p: GeoParams) -> list[tuple[int, int, int]]:
    """``(i, l_i, omega_i)`` for i = 1..a-1."""
    out = []
    for i in range(1, p.a):
        ell = r_adic(i, p.r, p.n).digit_sum
        out.append((i, ell, ell * p.h * p.a + i * p.d))
    return out


def geo_apery_by_residue(p: GeoParams) -> tuple[int, ...]:
    elems = [0] * p.a
    for i, _, w in geo_apery(p):
        elems[(i * p.d) % p.a] = w
    return tuple(elems)


def table_depth(p: GeoParams) -> int:
    return max(ell for _, ell, _ in geo_apery(p))


def geo_apery_table(p: GeoParams) -> AperyTable:
    a, d, h = p.a, p.d, p.h
    depth = table_depth(p)
    ells = [0] + [ell for _, ell, _ in geo_apery(p)]
    rows = []
    for s in range(depth + 1):
        row = [0] * a
        for t in range(a):
            base = ells[t] * h * a + t * d
            row[(t * d) % a] = base if s <= ells[t] else base + (s - ells[t]) * a
        rows.append(tuple(row))
    return AperyTable(a, tuple(rows))


def geo_hilbert_series(p: GeoParams) -> HilbertSeries:
    """Numerator coefficient at k counts indices with digit sum k."""
    counts = [0] * (table_depth(p) + 1)
    counts[0] = 1
    for _, ell, _ in geo_apery(p):
        counts[ell] += 1
    return HilbertSeries(tuple(counts))
