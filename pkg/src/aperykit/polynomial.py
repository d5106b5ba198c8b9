"""Sparse polynomials with integer coefficients and matrices over them."""
from __future__ import annotations

from typing import Iterable, Mapping, Sequence

Monomial = tuple[int, ...]


def weighted_degree(mon: Monomial, weights: Sequence[int]) -> int:
    return sum(e * w for e, w in zip(mon, weights))


def divides(u: Monomial, v: Monomial) -> bool:
    return all(a <= b for a, b in zip(u, v))


class Polynomial:
    """Map from exponent tuples to nonzero integer coefficients."""

    __slots__ = ("terms", "nvars")

    def __init__(self, terms: Mapping[Monomial, int] | None = None, nvars: int = 4):
        self.nvars = nvars
        clean = {}
        for mon, c in (terms or {}).items():
            if len(mon) != nvars:
                raise ValueError(f"monomial {mon} does not have {nvars} exponents")
            if any(e < 0 for e in mon):
                raise ValueError(f"negative exponent in {mon}")
            if c:
                clean[tuple(mon)] = int(c)
        self.terms = clean

    @classmethod
    def monomial(cls, mon: Monomial, coeff: int = 1) -> "Polynomial":
        return cls({tuple(mon): coeff}, nvars=len(mon))

    @classmethod
    def constant(cls, c: int, nvars: int = 4) -> "Polynomial":
        return cls({(0,) * nvars: c}, nvars=nvars)

    @classmethod
    def zero(cls, nvars: int = 4) -> "Polynomial":
        return cls({}, nvars=nvars)

    @classmethod
    def var(cls, i: int, nvars: int = 4, power: int = 1) -> "Polynomial":
        mon = [0] * nvars
        mon[i] = power
        return cls.monomial(tuple(mon))

    def _coerce(self, other) -> "Polynomial":
        if isinstance(other, Polynomial):
            return other
        if isinstance(other, int):
            return Polynomial.constant(other, self.nvars)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self.terms)
        for mon, c in other.terms.items():
            out[mon] = out.get(mon, 0) + c
        return Polynomial(out, self.nvars)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial({m: -c for m, c in self.terms.items()}, self.nvars)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out: dict[Monomial, int] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                mon = tuple(x + y for x, y in zip(m1, m2))
                out[mon] = out.get(mon, 0) + c1 * c2
        return Polynomial(out, self.nvars)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        out = Polynomial.constant(1, self.nvars)
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __bool__(self):
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def constant_term(self) -> int:
        return self.terms.get((0,) * self.nvars, 0)

    def sorted_terms(self) -> list[tuple[Monomial, int]]:
        """Terms by total degree, then lexicographic exponent order."""
        return sorted(self.terms.items(), key=lambda t: (sum(t[0]), t[0]))

    def weighted_degrees(self, weights: Sequence[int]) -> set[int]:
        return {weighted_degree(m, weights) for m in self.terms}

    def homogeneous_degree(self, weights: Sequence[int]) -> int | None:
        """Common weighted degree of all terms, None if mixed or zero."""
        degs = self.weighted_degrees(weights)
        return degs.pop() if len(degs) == 1 else None

    def to_json(self) -> list[dict]:
        return [{"exponents": list(m), "coefficient": c} for m, c in self.sorted_terms()]

    def __repr__(self) -> str:
        return f"Polynomial({self})"

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for mon, c in sorted(self.terms.items(), key=lambda t: (sum(t[0]), t[0]), reverse=True):
            factors = []
            for i, e in enumerate(mon):
                if e == 1:
                    factors.append(f"x{i + 1}")
                elif e > 1:
                    factors.append(f"x{i + 1}^{e}")
            body = "*".join(factors)
            if not body:
                body = str(abs(c))
            elif abs(c) != 1:
                body = f"{abs(c)}*{body}"
            sign = "-" if c < 0 else "+"
            parts.append((sign, body))
        first_sign, first = parts[0]
        text = ("-" if first_sign == "-" else "") + first
        for sign, body in parts[1:]:
            text += f" {sign} {body}"
        return text


class PolyMatrix:
    """Dense rows x cols matrix of :class:`Polynomial` entries."""

    def __init__(self, rows: Iterable[Iterable[Polynomial | int]], nvars: int = 4):
        self.nvars = nvars
        self.entries = [
            [e if isinstance(e, Polynomial) else Polynomial.constant(e, nvars) for e in row]
            for row in rows
        ]
        widths = {len(r) for r in self.entries}
        if len(widths) > 1:
            raise ValueError(f"ragged matrix with row widths {sorted(widths)}")

    @property
    def shape(self) -> tuple[int, int]:
        return len(self.entries), (len(self.entries[0]) if self.entries else 0)

    def __getitem__(self, ij: tuple[int, int]) -> Polynomial:
        i, j = ij
        return self.entries[i][j]

    def __matmul__(self, other: "PolyMatrix") -> "PolyMatrix":
        n, k = self.shape
        k2, m = other.shape
        if k != k2:
            raise ValueError(f"cannot multiply {self.shape} by {other.shape}")
        out = []
        for i in range(n):
            row = []
            for j in range(m):
                acc = Polynomial.zero(self.nvars)
                for t in range(k):
                    if self.entries[i][t] and other.entries[t][j]:
                        acc = acc + self.entries[i][t] * other.entries[t][j]
                row.append(acc)
            out.append(row)
        return PolyMatrix(out, self.nvars)

    def is_zero(self) -> bool:
        return all(e.is_zero() for row in self.entries for e in row)

    def nonzero_entries(self):
        for i, row in enumerate(self.entries):
            for j, e in enumerate(row):
                if e:
                    yield i, j, e

    def to_json(self) -> list[list[list[dict]]]:
        return [[e.to_json() for e in row] for row in self.entries]

    def __str__(self) -> str:
        return "\n".join("[" + ", ".join(str(e) for e in row) + "]" for row in self.entries)
