"""Closed-form-free invariants of an arbitrary numerical semigroup.

Everything here works from the generator list alone and serves as the
reference against which the family-specific formulas are checked.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache, reduce
from math import gcd
from typing import Iterable, Sequence

import numpy as np

from .errors import DomainError, RangeError

# int64 headroom: sentinel plus a single step must not wrap
_INF = np.int64(2**62)
_LIMIT = 2**62

Factorization = tuple[int, ...]


@dataclass(frozen=True)
class NumericalSemigroup:
    """Semigroup generated by a strictly increasing list with gcd 1.

    The list need not be minimal; see :func:`is_minimal_generating`.
    """

    generators: tuple[int, ...]

    def __init__(self, generators: Iterable[int]):
        gens = tuple(int(g) for g in generators)
        if len(gens) < 2:
            raise DomainError(f"need at least two generators, got {gens}")
        if any(b <= a for a, b in zip(gens, gens[1:])):
            raise DomainError(f"generators must be strictly increasing: {gens}")
        if gens[0] < 2:
            raise DomainError(f"smallest generator must be >= 2: {gens}")
        if reduce(gcd, gens) != 1:
            raise DomainError(f"generators must have gcd 1: {gens}")
        if gens[0] * gens[-1] >= _LIMIT:
            raise RangeError(f"multiplicity times largest generator overflows int64: {gens}")
        object.__setattr__(self, "generators", gens)

    @property
    def multiplicity(self) -> int:
        return self.generators[0]

    @property
    def embedding_dimension(self) -> int:
        """Size of the minimal generating set (not of the stored list)."""
        return len(self.generators) - len(redundant_generators(self))

    def __len__(self) -> int:
        return len(self.generators)

    def __str__(self) -> str:
        return "<" + ",".join(map(str, self.generators)) + ">"


@dataclass(frozen=True)
class AperySet:
    """Least semigroup element of every residue class modulo ``modulus``."""

    modulus: int
    elements: tuple[int, ...]

    def __getitem__(self, residue: int) -> int:
        return self.elements[residue % self.modulus]

    def __iter__(self):
        return iter(self.elements)

    def __len__(self) -> int:
        return self.modulus

    def as_set(self) -> set[int]:
        return set(self.elements)

    def contains(self, x: int) -> bool:
        """Membership in the semigroup, read off the Apery set."""
        return x >= 0 and x >= self.elements[x % self.modulus]


@dataclass(frozen=True)
class AperyTable:
    """Rows ``s = 0..R`` of distinguished elements of Ap(sM), indexed by residue."""

    modulus: int
    rows: tuple[tuple[int, ...], ...]

    @property
    def reduction_number(self) -> int:
        return len(self.rows) - 1

    def column(self, residue: int) -> tuple[int, ...]:
        return tuple(row[residue] for row in self.rows)

    def columns(self) -> list[tuple[int, ...]]:
        return [self.column(r) for r in range(self.modulus)]

    def entry(self, s: int, residue: int) -> int:
        """Entry for any ``s >= 0``; rows past R grow by the modulus."""
        if s <= self.reduction_number:
            return self.rows[s][residue]
        return self.rows[-1][residue] + (s - self.reduction_number) * self.modulus


# ---------------------------------------------------------------------------
# dynamic-programming tables


def _reachable(gens: Sequence[int], limit: int) -> np.ndarray:
    reach = np.zeros(limit + 1, dtype=bool)
    reach[0] = True
    for g in gens:
        # block k only depends on block k-1, already final for this generator
        for start in range(g, limit + 1, g):
            stop = min(start + g, limit + 1)
            reach[start:stop] |= reach[start - g : stop - g]
    return reach


def _max_lengths(gens: Sequence[int], limit: int) -> np.ndarray:
    """``L[x]`` = longest factorization of x, -1 when x is not representable."""
    lengths = np.full(limit + 1, -1, dtype=np.int64)
    lengths[0] = 0
    for g in gens:
        for start in range(g, limit + 1, g):
            stop = min(start + g, limit + 1)
            prev = lengths[start - g : stop - g]
            cand = np.where(prev >= 0, prev + 1, -1)
            np.maximum(lengths[start:stop], cand, out=lengths[start:stop])
    return lengths


class _LengthOracle:
    """Growing cache of the max-length table for one generator list."""

    def __init__(self, gens: Sequence[int]):
        self.gens = tuple(gens)
        self.table = _max_lengths(self.gens, 64)

    def __call__(self, x: int) -> int:
        if x >= len(self.table):
            self.table = _max_lengths(self.gens, max(2 * len(self.table), x + 1))
        return int(self.table[x])

    def upto(self, limit: int) -> np.ndarray:
        self(limit)
        return self.table[: limit + 1]


@lru_cache(maxsize=256)
def _length_oracle(gens: tuple[int, ...]) -> _LengthOracle:
    return _LengthOracle(gens)


# ---------------------------------------------------------------------------
# membership, Apery sets, Frobenius


def contains(S: NumericalSemigroup, x: int) -> bool:
    if x < 0:
        raise DomainError(f"membership is only defined for x >= 0, got {x}")
    return bool(_reachable(S.generators, x)[x])


def _round_robin(residues: np.ndarray, g: int, a: int) -> None:
    """Relax every arc r -> r+g of the residue graph, in place.

    The arcs of one generator split the residues into gcd(a, g) cycles.
    Starting each cycle at its current minimum, a single prefix-min pass
    settles the whole cycle.
    """
    step = g % a
    if step == 0:
        return
    ncyc = gcd(a, step)
    length = a // ncyc
    pos = np.arange(length, dtype=np.int64)
    order = (np.arange(ncyc, dtype=np.int64)[:, None] + pos[None, :] * step) % a
    start = np.argmin(residues[order], axis=1)
    order = np.take_along_axis(order, (start[:, None] + pos[None, :]) % length, axis=1)
    offset = pos * g
    vals = residues[order] - offset
    residues[order] = np.minimum.accumulate(vals, axis=1) + offset


def apery_set(S: NumericalSemigroup, a: int) -> AperySet:
    """Apery set of ``S`` with respect to ``a``, by shortest paths on Z/aZ."""
    if a <= 0:
        raise DomainError(f"Apery modulus must be positive, got {a}")
    if a not in S.generators and not contains(S, a):
        raise DomainError(f"{a} is not an element of {S}")
    if a * S.generators[-1] >= _LIMIT:
        raise RangeError(f"modulus {a} times largest generator overflows int64")
    dist = np.full(a, _INF, dtype=np.int64)
    dist[0] = 0
    for g in S.generators:
        _round_robin(dist, g, a)
    return AperySet(a, tuple(int(v) for v in dist))


def frobenius(S: NumericalSemigroup) -> int:
    m = S.multiplicity
    return max(apery_set(S, m).elements) - m


def pseudo_frobenius(S: NumericalSemigroup) -> set[int]:
    """PF(S): maximal Apery elements under the semigroup order, shifted by -m.

    ``w`` is maximal in Ap(S, m) iff no generator step ``w + g`` stays in
    the Apery set, since the set is closed downward for that order.
    """
    m = S.multiplicity
    ap = apery_set(S, m)
    maximal = []
    for w in ap.elements:
        if w == 0:
            continue
        if all(ap.contains(w + g - m) for g in S.generators):
            maximal.append(w)
    return {w - m for w in maximal}


def semigroup_type(S: NumericalSemigroup) -> int:
    return len(pseudo_frobenius(S))


# ---------------------------------------------------------------------------
# generators and factorizations


def _factorizations(gens: Sequence[int], x: int) -> list[Factorization]:
    """Exponent vectors over ``gens`` summing to ``x``.

    Ordered lexicographically descending from the last generator's exponent.
    """
    k = len(gens)
    if x < 0:
        return []
    out: list[Factorization] = []
    coeffs = [0] * k

    def rec(idx: int, rest: int) -> None:
        g = gens[idx]
        if idx == 0:
            if rest % g == 0:
                coeffs[0] = rest // g
                out.append(tuple(coeffs))
            return
        for c in range(rest // g, -1, -1):
            coeffs[idx] = c
            rec(idx - 1, rest - c * g)
        coeffs[idx] = 0

    rec(k - 1, x)
    return out


def factorizations(S: NumericalSemigroup, x: int) -> list[Factorization]:
    if x < 0:
        raise DomainError(f"factorizations need x >= 0, got {x}")
    return _factorizations(S.generators, x)


def max_factorization_length(S: NumericalSemigroup, x: int) -> int | None:
    """Longest factorization length of ``x``; None when ``x`` is not in S."""
    if x < 0:
        raise DomainError(f"factorization length needs x >= 0, got {x}")
    n = _length_oracle(S.generators)(x)
    return None if n < 0 else n


def in_sumset(S: NumericalSemigroup, x: int, n: int) -> bool:
    """Whether ``x`` lies in nM, M = S minus {0}."""
    if n == 0:
        return x == 0
    if x <= 0:
        return False
    length = _length_oracle(S.generators)(x)
    return length >= n


def redundant_generators(S: NumericalSemigroup) -> list[tuple[int, Factorization]]:
    """Generators lying in the semigroup of the others, with a witness."""
    gens = S.generators
    out = []
    for j, g in enumerate(gens):
        others = gens[:j] + gens[j + 1 :]
        facs = _factorizations(others, g)
        if facs:
            out.append((g, facs[0]))
    return out


def is_minimal_generating(S: NumericalSemigroup) -> bool:
    return not redundant_generators(S)


# ---------------------------------------------------------------------------
# Apery table


def apery_table(S: NumericalSemigroup) -> AperyTable:
    """Apery table with respect to the multiplicity.

    Row n+1 keeps an entry of row n when it still lies in (n+1)M and adds
    the multiplicity otherwise; stops at the first row whose successor is
    the row shifted by the multiplicity.
    """
    a = S.multiplicity
    oracle = _length_oracle(S.generators)
    row = list(apery_set(S, a).elements)
    rows = [tuple(row)]
    n = 0
    while True:
        oracle(max(row))
        nxt = [w if oracle(w) >= n + 1 else w + a for w in row]
        if all(v == w + a for v, w in zip(nxt, row)):
            break
        rows.append(tuple(nxt))
        row = nxt
        n += 1
    return AperyTable(a, tuple(rows))


def reduction_number(S: NumericalSemigroup) -> int:
    return apery_table(S).reduction_number


# ---------------------------------------------------------------------------
# Betti elements


def _find(parent: list[int], i: int) -> int:
    while parent[i] != i:
        parent[i] = parent[parent[i]]
        i = parent[i]
    return i


def factorization_graph_components(facs: Sequence[Factorization]) -> int:
    """Connected components of the graph joining factorizations with common support."""
    parent = list(range(len(facs)))
    nvars = len(facs[0]) if facs else 0
    for k in range(nvars):
        first = None
        for idx, f in enumerate(facs):
            if f[k] > 0:
                if first is None:
                    first = idx
                else:
                    ri, rj = _find(parent, first), _find(parent, idx)
                    if ri != rj:
                        parent[rj] = ri
    return len({_find(parent, i) for i in range(len(facs))})


def betti_degrees(S: NumericalSemigroup, bound: int | None = None) -> dict[int, int]:
    """Degrees of minimal binomial generators of the defining ideal, with multiplicity.

    ``s`` contributes (components - 1) when its factorization graph is
    disconnected.  Default ``bound`` is F(S) + sum of generators + 1.
    """
    gens = S.generators
    if bound is None:
        bound = frobenius(S) + sum(gens) + 1
    by_value: dict[int, list[Factorization]] = {}
    k = len(gens)
    coeffs = [0] * k

    def rec(idx: int, value: int) -> None:
        if idx == k:
            by_value.setdefault(value, []).append(tuple(coeffs))
            return
        g = gens[idx]
        c = 0
        while value + c * g <= bound:
            coeffs[idx] = c
            rec(idx + 1, value + c * g)
            c += 1
        coeffs[idx] = 0

    rec(0, 0)
    out = {}
    for s in sorted(by_value):
        facs = by_value[s]
        if len(facs) < 2:
            continue
        extra = factorization_graph_components(facs) - 1
        if extra > 0:
            out[s] = extra
    return out
