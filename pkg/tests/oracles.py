"""Deliberately naive reference implementations used only by the tests."""
from __future__ import annotations

from functools import lru_cache
from itertools import product


def members(gens, limit: int) -> list[bool]:
    """Boolean sieve of the semigroup up to ``limit`` inclusive."""
    ok = [False] * (limit + 1)
    ok[0] = True
    for x in range(1, limit + 1):
        ok[x] = any(x >= g and ok[x - g] for g in gens)
    return ok


def conductor_bound(gens) -> int:
    # Frobenius number < (g0 - 1)(g_last - 1)
    return (gens[0] - 1) * (gens[-1] - 1) + 1


def apery_scan(gens, a: int) -> dict[int, int]:
    """Least element of each residue class by scanning the sieve."""
    limit = conductor_bound(gens) + a * 2 + max(gens) * a
    ok = members(gens, limit)
    out: dict[int, int] = {}
    for x, inside in enumerate(ok):
        if inside and x % a not in out:
            out[x % a] = x
        if len(out) == a:
            break
    return out


def frobenius_scan(gens) -> int:
    ok = members(gens, conductor_bound(gens) + gens[0])
    gaps = [x for x, inside in enumerate(ok) if not inside]
    return gaps[-1] if gaps else -1


def pf_by_definition(gens) -> set[int]:
    """Gaps x with x + s in S for every nonzero s (checked on a window)."""
    F = frobenius_scan(gens)
    ok = members(gens, 2 * F + 2 * max(gens) + 2)
    nonzero = [s for s in range(1, F + max(gens) + 1) if ok[s]]
    return {x for x in range(1, F + 1) if not ok[x] and all(ok[x + s] for s in nonzero)}


def factorizations_brute(gens, x: int) -> set[tuple[int, ...]]:
    ranges = [range(x // g + 1) for g in gens]
    return {c for c in product(*ranges) if sum(ci * g for ci, g in zip(c, gens)) == x}


def max_length_brute(gens, x: int) -> int | None:
    facs = factorizations_brute(gens, x)
    return max(map(sum, facs)) if facs else None


def apery_table_brute(gens, rows: int) -> list[tuple[int, ...]]:
    """Row n: least element of nM in each residue class mod the multiplicity."""
    a = gens[0]
    limit = conductor_bound(gens) + (rows + 2) * a * max(gens)

    @lru_cache(maxsize=None)
    def best(x: int) -> int:
        if x == 0:
            return 0
        vals = [best(x - g) for g in gens if x >= g]
        vals = [v for v in vals if v >= 0]
        return 1 + max(vals) if vals else -1

    out = []
    for n in range(rows + 1):
        row = [None] * a
        for x in range(limit + 1):
            if row[x % a] is None and best(x) >= n:
                row[x % a] = x
        out.append(tuple(row))
    return out
