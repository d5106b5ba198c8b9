"""Ladders of an Apery table and the tangent cone as a fiber-cone module.

Every column of an Apery table is a non-decreasing sequence (a ladder).
Its constant runs (landings) give one free summand per residue plus
torsion summands when a column has more than one landing.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from .core import (
    AperySet,
    AperyTable,
    NumericalSemigroup,
    _factorizations,
    _length_oracle,
    apery_set,
    apery_table,
    frobenius,
)
from .errors import DomainError


@dataclass(frozen=True)
class Landing:
    start: int
    end: int

    @property
    def length(self) -> int:
        return self.end - self.start


@dataclass(frozen=True)
class LadderStats:
    landings: tuple[Landing, ...]
    p: int
    d: int
    torsion: tuple[tuple[int, int], ...]


def landings(values: Sequence[int]) -> list[Landing]:
    """Maximal constant runs of length >= 1 (at least two equal entries)."""
    if any(b < a for a, b in zip(values, values[1:])):
        raise DomainError(f"ladder must be non-decreasing: {list(values)}")
    out = []
    i = 0
    n = len(values)
    while i < n:
        j = i
        while j + 1 < n and values[j + 1] == values[i]:
            j += 1
        if j > i:
            out.append(Landing(i, j))
        i = j + 1
    return out


def ladder_stats(values: Sequence[int]) -> LadderStats:
    """Number p of extra landings, free shift d and torsion pairs (b_j, c_j).

    With landings L_0 < ... < L_p: d = e(L_p), b_j = e(L_{j-1}) and
    c_j = s(L_j) - e(L_{j-1}).  A ladder without landings has d = 0.
    """
    found = landings(values)
    if not found:
        return LadderStats((), 0, 0, ())
    torsion = tuple(
        (prev.end, cur.start - prev.end) for prev, cur in zip(found, found[1:])
    )
    return LadderStats(tuple(found), len(found) - 1, found[-1].end, torsion)


@dataclass(frozen=True)
class CZDecomposition:
    """Free summands F(-d) and torsion summands F/(t^a)^c F(-b) of the tangent cone."""

    modulus: int
    free_shifts: tuple[int, ...]
    torsion: tuple[tuple[int, int], ...] = field(default=())

    def shift_histogram(self) -> list[int]:
        counts = Counter(self.free_shifts)
        return [counts.get(k, 0) for k in range(max(self.free_shifts) + 1)]

    def __str__(self) -> str:
        parts = []
        for k, c in enumerate(self.shift_histogram()):
            if c == 0:
                continue
            base = "F" if k == 0 else f"F(-{k})"
            parts.append(base if c == 1 else f"{base}^{c}")
        for b, c in self.torsion:
            parts.append(f"F/(t^a)^{c}F(-{b})")
        return " + ".join(parts)


def cz_decompose(table: AperyTable) -> CZDecomposition:
    shifts = [0]
    torsion = []
    for residue in range(1, table.modulus):
        stats = ladder_stats(table.column(residue))
        shifts.append(stats.d)
        torsion.extend(stats.torsion)
    return CZDecomposition(table.modulus, tuple(sorted(shifts)), tuple(sorted(torsion)))


def is_tangent_cone_cm(decomp: CZDecomposition) -> bool:
    """Cohen-Macaulay iff the tangent cone is free over the fiber cone."""
    return not decomp.torsion


def is_tangent_cone_buchsbaum(decomp: CZDecomposition) -> bool:
    """Report-only: true when Cohen-Macaulay, otherwise undecided (False)."""
    return is_tangent_cone_cm(decomp)


@dataclass(frozen=True)
class HilbertSeries:
    """Rational series ``numerator(x) / (1 - x)``."""

    numerator: tuple[int, ...]

    def at_one(self) -> int:
        return sum(self.numerator)

    def coefficients(self, count: int) -> list[int]:
        """First ``count`` coefficients of the power series."""
        num = np.zeros(count, dtype=np.int64)
        k = min(count, len(self.numerator))
        num[:k] = self.numerator[:k]
        return [int(v) for v in np.cumsum(num)]

    def __str__(self) -> str:
        text = ""
        for k, c in enumerate(self.numerator):
            if c == 0:
                continue
            mon = "" if k == 0 else ("x" if k == 1 else f"x^{k}")
            coef = str(abs(c)) if (abs(c) != 1 or k == 0) else ""
            sign = "-" if c < 0 else ("+" if text else "")
            text += f"{sign}{coef}{mon}"
        return f"({text or '0'})/(1-x)"


def hilbert_from_decomposition(decomp: CZDecomposition) -> HilbertSeries:
    """Free summand F(-d) adds x^d; torsion F/(t^a)^c F(-b) adds x^b - x^(b+c).

    The torsion part has finite length, so its series is x^b (1 - x^c)/(1 - x).
    """
    top = max(decomp.free_shifts)
    for b, c in decomp.torsion:
        top = max(top, b + c)
    num = [0] * (top + 1)
    for d in decomp.free_shifts:
        num[d] += 1
    for b, c in decomp.torsion:
        num[b] += 1
        num[b + c] -= 1
    while len(num) > 1 and num[-1] == 0:
        num.pop()
    return HilbertSeries(tuple(num))


@dataclass(frozen=True)
class GorensteinReport:
    """Per-n truth of nM ∩ ((n+2)M - a) = (n+1)M on a finite window.

    This is a necessary condition for a Gorenstein tangent cone, not a
    decision procedure.
    """

    per_n: dict[int, bool]
    window: dict[int, int]

    @property
    def overall(self) -> bool:
        return all(self.per_n.values())


def gorenstein_condition(S: NumericalSemigroup) -> GorensteinReport:
    a = S.multiplicity
    R = apery_table(S).reduction_number
    F = frobenius(S)
    oracle = _length_oracle(S.generators)
    per_n, window = {}, {}
    for n in range(1, R + 1):
        top = F + (n + 2) * S.generators[-1]
        lengths = oracle.upto(top + a)
        xs = np.arange(top + 1)
        in_n = (lengths[: top + 1] >= n) & (xs > 0)
        shifted = lengths[a : top + a + 1] >= n + 2
        in_next = (lengths[: top + 1] >= n + 1) & (xs > 0)
        per_n[n] = bool(np.array_equal(in_n & shifted, in_next))
        window[n] = top
    return GorensteinReport(per_n, window)


def unique_expression_check(S: NumericalSemigroup, ap: AperySet) -> bool:
    """Every nonzero Apery element has exactly one factorization.

    A factorization using the modulus would put w - a in S, so only the
    remaining generators are searched.
    """
    others = tuple(g for g in S.generators if g != ap.modulus)
    for w in ap.elements:
        if w == 0:
            continue
        if len(_factorizations(others, w)) != 1:
            return False
    return True


def non_unique_apery_elements(S: NumericalSemigroup, ap: AperySet) -> list[int]:
    others = tuple(g for g in S.generators if g != ap.modulus)
    return [w for w in ap.elements if w and len(_factorizations(others, w)) != 1]


def artinian_socle(S: NumericalSemigroup) -> list[int]:
    """Apery elements spanning the socle of ``G / t^a G`` as a graded ring.

    ``t^w`` times ``t^g`` is nonzero exactly when ``w + g`` is again in the
    Apery set with order ord(w) + 1.  When the tangent cone is Cohen-Macaulay
    ``t^a`` is regular on it, so it is Gorenstein iff this list has one element.
    """
    a = S.multiplicity
    ap = apery_set(S, a).as_set()
    oracle = _length_oracle(S.generators)
    order = {w: oracle(w) for w in ap}
    return sorted(
        w for w in ap
        if not any(w + g in ap and order[w + g] == order[w] + 1 for g in S.generators[1:])
    )
