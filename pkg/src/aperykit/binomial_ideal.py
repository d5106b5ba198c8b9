"""Defining ideal of k[Gamma_4] and its graded free resolution.

All families are instantiated at concrete ``(m, d)`` with ``a = 6m + q``;
the exponent ``E = 4m + d`` recurs throughout.  Variables ``x1..x4``
carry weights equal to the four generators.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product
from typing import Sequence

from .core import _factorizations, betti_degrees
from .errors import ConsistencyError, DomainError, StructureError
from .gamma4 import Gamma4Params, gamma4_generators, gamma4_semigroup
from .polynomial import Monomial, Polynomial, PolyMatrix, divides, weighted_degree
from .report import InstanceReport

BETTI_SIGNATURES = {
    0: (1, 3, 3, 1),
    1: (1, 5, 6, 2),
    2: (1, 5, 6, 2),
    3: (1, 4, 5, 2),
    4: (1, 4, 6, 3),
    5: (1, 4, 6, 3),
}


def _mon(e1: int, e2: int = 0, e3: int = 0, e4: int = 0) -> Monomial:
    mon = (e1, e2, e3, e4)
    if min(mon) < 0:
        raise ConsistencyError(f"negative exponent after instantiation: {mon}")
    return mon


def X(e1: int, e2: int = 0, e3: int = 0, e4: int = 0) -> Polynomial:
    return Polynomial.monomial(_mon(e1, e2, e3, e4))


@dataclass(frozen=True)
class Binomial:
    """``x^plus - x^minus``."""

    plus: Monomial
    minus: Monomial

    def __post_init__(self):
        if self.plus == self.minus:
            raise StructureError(f"binomial with equal monomials {self.plus}")

    def as_polynomial(self) -> Polynomial:
        return Polynomial.monomial(self.plus) - Polynomial.monomial(self.minus)

    def __str__(self) -> str:
        return f"{Polynomial.monomial(self.plus)} - {Polynomial.monomial(self.minus)}"


def is_homogeneous(b: Binomial, weights: Sequence[int]) -> bool:
    return weighted_degree(b.plus, weights) == weighted_degree(b.minus, weights)


def hq_generators(p: Gamma4Params) -> list[Binomial]:
    m, q, d = p.m, p.q, p.d
    E = 4 * m + d
    out = [Binomial(_mon(0, 0, 2), _mon(2, 0, 0, 1)), Binomial(_mon(0, 3), _mon(3, 0, 1))]
    if q == 0:
        out.append(Binomial(_mon(E), _mon(0, 0, 0, m)))
    elif q == 1 and m == 1 and d == 1:
        out += [
            Binomial(_mon(7), _mon(0, 1, 0, 1)),
            Binomial(_mon(4, 2), _mon(0, 0, 1, 1)),
            Binomial(_mon(2, 2, 1), _mon(0, 0, 0, 2)),
        ]
    elif q == 1:
        out += [
            Binomial(_mon(E - 6, 5), _mon(0, 0, 0, m + 1)),
            Binomial(_mon(E - 1, 2), _mon(0, 0, 1, m)),
            Binomial(_mon(E + 2), _mon(0, 1, 0, m)),
        ]
    elif q == 2:
        out += [
            Binomial(_mon(E - 4, 4), _mon(0, 0, 0, m + 1)),
            Binomial(_mon(E + 1, 1), _mon(0, 0, 1, m)),
            Binomial(_mon(E + 4), _mon(0, 2, 0, m)),
        ]
    elif q == 3:
        out += [
            Binomial(_mon(E - 2, 3), _mon(0, 0, 0, m + 1)),
            Binomial(_mon(E + 3), _mon(0, 0, 1, m)),
        ]
    elif q == 4:
        out += [
            Binomial(_mon(E, 2), _mon(0, 0, 0, m + 1)),
            Binomial(_mon(E + 5), _mon(0, 1, 1, m)),
        ]
    else:
        out += [
            Binomial(_mon(E + 2, 1), _mon(0, 0, 0, m + 1)),
            Binomial(_mon(E + 7), _mon(0, 2, 1, m)),
        ]
    return out


def set_x1_zero(H: Sequence[Binomial]) -> list[Monomial]:
    """Monomial generators of the image of ``H`` modulo x1.

    Usually exactly one monomial of each binomial is free of x1.  When both
    are (x1 exponent 0 after instantiation) and one of them is divisible by
    an image already found, the binomial reduces to the other monomial.
    """
    out: list[Monomial] = []
    pending = []
    for b in H:
        free = [mon for mon in (b.plus, b.minus) if mon[0] == 0]
        if not free:
            raise StructureError(f"{b} has no monomial free of x1")
        if len(free) == 1:
            out.append(free[0])
        else:
            pending.append(b)
    for b in pending:
        reducible = [any(divides(g, mon) for g in out) for mon in (b.plus, b.minus)]
        if reducible == [True, False]:
            out.append(b.minus)
        elif reducible == [False, True]:
            out.append(b.plus)
        else:
            raise StructureError(f"{b} does not reduce to a monomial modulo x1")
    return out


def standard_monomial_count(gens: Sequence[Monomial], variables: Sequence[int] = (1, 2, 3)) -> int:
    """Monomials in ``variables`` divisible by none of ``gens``.

    The quotient must be finite: each listed variable needs a pure power
    among the generators.
    """
    box = []
    for v in variables:
        powers = [g[v] for g in gens if g[v] > 0 and all(g[u] == 0 for u in range(len(g)) if u != v)]
        if not powers:
            raise DomainError(f"no pure power of x{v + 1}: quotient is infinite")
        box.append(min(powers))
    for g in gens:
        if any(g[u] for u in range(len(g)) if u not in variables):
            raise DomainError(f"generator {g} involves variables outside {tuple(variables)}")
    nvars = len(gens[0])
    count = 0
    for exps in product(*(range(b) for b in box)):
        mon = [0] * nvars
        for v, e in zip(variables, exps):
            mon[v] = e
        if not any(divides(g, mon) for g in gens):
            count += 1
    return count


def is_set_theoretic_ci(p: Gamma4Params) -> bool:
    """Report-only flag, keyed on q."""
    return p.q in (0, 3, 4, 5)


def betti_signature(q: int) -> tuple[int, int, int, int]:
    if q not in BETTI_SIGNATURES:
        raise DomainError(f"q must be in 0..5, got {q}")
    return BETTI_SIGNATURES[q]


@dataclass(frozen=True)
class Resolution:
    q: int
    phi1: PolyMatrix
    phi2: PolyMatrix
    phi3: PolyMatrix

    @property
    def signature(self) -> tuple[int, int, int, int]:
        return (self.phi1.shape[0], self.phi1.shape[1], self.phi2.shape[1], self.phi3.shape[1])

    def matrices(self) -> dict[str, PolyMatrix]:
        return {"phi1": self.phi1, "phi2": self.phi2, "phi3": self.phi3}


def _koszul(f1: Polynomial, f2: Polynomial, f3: Polynomial):
    z = Polynomial.zero()
    phi1 = PolyMatrix([[f1, f2, f3]])
    phi2 = PolyMatrix([[-f2, -f3, z], [f1, z, -f3], [z, f1, f2]])
    phi3 = PolyMatrix([[f3], [-f2], [f1]])
    return phi1, phi2, phi3


def resolution_matrices(p: Gamma4Params) -> Resolution:
    """phi1, phi2, phi3 of the minimal graded free resolution of A/P.

    For q = 0 this is the Koszul complex of the three generators.
    """
    m, q, d = p.m, p.q, p.d
    E = 4 * m + d
    z = Polynomial.zero()
    f1 = X(3, 0, 1) - X(0, 3)
    f2 = X(2, 0, 0, 1) - X(0, 0, 2)
    g1, g2 = f2, -f1  # x1^2 x4 - x3^2 and x2^3 - x1^3 x3

    if q == 0:
        h = [b.as_polynomial() for b in hq_generators(p)]
        return Resolution(q, *_koszul(*h))

    if q == 1 and m == 1 and d == 1:
        phi1 = PolyMatrix([[f1, f2, X(7) - X(0, 1, 0, 1), X(4, 2) - X(0, 0, 1, 1), X(2, 2, 1) - X(0, 0, 0, 2)]])
        phi2 = PolyMatrix([
            [X(4), X(0, 0, 0, 1), z, X(2, 0, 1), z, X(0, 0, 2)],
            [z, z, X(0, 0, 0, 1), X(5), X(2, 2), X(3, 0, 1) - X(0, 3)],
            [-X(0, 0, 1), -X(0, 2), z, -X(0, 0, 0, 1), z, -X(2, 2)],
            [X(0, 1), X(3), -X(0, 0, 1), z, -X(0, 0, 0, 1), X(5)],
            [z, z, X(2), X(0, 1), X(0, 0, 1), z],
        ])
        phi3 = PolyMatrix([
            [X(0, 0, 0, 1), X(0, 2, 1)],
            [-X(4), -X(0, 0, 2)],
            [z, X(0, 3) - X(3, 0, 1)],
            [-X(0, 0, 1), -X(2, 2)],
            [X(0, 1), X(5)],
            [X(2), X(0, 0, 0, 1)],
        ])
    elif q == 1:
        phi1 = PolyMatrix([[
            f1, f2,
            X(E + 2) - X(0, 1, 0, m),
            X(E - 1, 2) - X(0, 0, 1, m),
            X(E - 6, 5) - X(0, 0, 0, m + 1),
        ]])
        phi2 = PolyMatrix([
            [g1, X(E - 1), X(0, 0, 0, m), X(E - 4, 2), X(E - 3, 0, 1) + X(E - 6, 3), X(E - 6, 2, 1)],
            [g2, z, z, X(0, 0, 0, m), X(E), X(E - 3, 2)],
            # -x2^2 in column 3 keeps phi1 * phi2 = 0
            [z, -X(0, 0, 1), -X(0, 2), z, -X(0, 0, 0, 1), z],
            [z, X(0, 1), X(3), -X(0, 0, 1), z, -X(0, 0, 0, 1)],
            [z, z, z, X(2), X(0, 1), X(0, 0, 1)],
        ])
        phi3 = PolyMatrix([
            [X(E - 3), X(0, 0, 0, m)],
            [-X(0, 0, 0, 1), -X(0, 2, 1)],
            [z, -g1],
            [z, -g2],
            [X(0, 0, 1), X(2, 2)],
            [-X(0, 1), -X(5)],
        ])
    elif q == 2:
        phi1 = PolyMatrix([[
            f1, f2,
            X(E + 1, 1) - X(0, 0, 1, m),
            X(E + 4) - X(0, 2, 0, m),
            X(E - 4, 4) - X(0, 0, 0, m + 1),
        ]])
        phi2 = PolyMatrix([
            # + sign on x1^(E-4) x2^3 keeps phi1 * phi2 = 0
            [g1, X(0, 0, 0, m), X(E - 2, 1), X(E + 1), X(E - 4, 1, 1), X(E - 1, 0, 1) + X(E - 4, 3)],
            [g2, z, X(0, 0, 0, m), z, X(E - 1, 1), X(E + 2)],
            [z, X(3), -X(0, 0, 1), X(0, 2), -X(0, 0, 0, 1), z],
            [z, -X(0, 1), z, -X(0, 0, 1), z, -X(0, 0, 0, 1)],
            [z, z, X(2), z, X(0, 0, 1), X(0, 2)],
        ])
        phi3 = PolyMatrix([
            [X(E - 1), X(0, 0, 0, m)],
            [z, -g1],
            [z, -g2],
            [-X(0, 0, 0, 1), -X(0, 1, 1)],
            [-X(0, 2), -X(5)],
            [X(0, 0, 1), X(2, 1)],
        ])
    elif q == 3:
        f4 = X(E - 2, 3) - X(0, 0, 0, m + 1)
        phi1 = PolyMatrix([[f1, f2, X(E + 3) - X(0, 0, 1, m), f4]])
        phi2 = PolyMatrix([
            [g1, X(E), X(0, 0, 1, m), X(E - 2, 0, 1), f4],
            [g2, X(0, 0, 0, m), X(3, 0, 0, m), X(E + 1), z],
            [z, -X(0, 0, 1), -X(0, 3), -X(0, 0, 0, 1), z],
            [z, X(2), X(5), X(0, 0, 1), g2],
        ])
        phi3 = PolyMatrix([
            [X(0, 0, 0, m), X(E + 1)],
            [-X(0, 3), -X(3, 0, 0, 1)],
            [X(0, 0, 1), X(0, 0, 0, 1)],
            [z, -g2],
            [X(2), X(0, 0, 1)],
        ])
    elif q == 4:
        f4 = X(E, 2) - X(0, 0, 0, m + 1)
        phi1 = PolyMatrix([[f1, f2, X(E + 5) - X(0, 1, 1, m), f4]])
        phi2 = PolyMatrix([
            [g1, X(E + 2), X(0, 0, 1, m), X(E, 0, 1), f4, z],
            [g2, X(0, 1, 0, m), X(3, 0, 0, m), X(E + 3), z, f4],
            [z, -X(0, 0, 1), -X(0, 2), -X(0, 0, 0, 1), z, z],
            [z, X(2, 1), X(5), X(0, 1, 1), g2, -g1],
        ])
        phi3 = PolyMatrix([
            [X(0, 0, 0, m), z, X(E)],
            [-X(0, 2), z, -X(0, 0, 0, 1)],
            [X(0, 0, 1), X(0, 0, 0, 1), z],
            [z, -X(0, 2), X(0, 0, 1)],
            [X(2), X(0, 0, 1), z],
            [z, X(3), -X(0, 1)],
        ])
    else:
        f3 = X(E + 2, 1) - X(0, 0, 0, m + 1)
        phi1 = PolyMatrix([[f1, f2, f3, X(E + 7) - X(0, 2, 1, m)]])
        phi2 = PolyMatrix([
            [g1, X(0, 0, 1, m), X(E + 4), f3, z, X(E + 2, 0, 1)],
            [g2, X(3, 0, 0, m), X(0, 2, 0, m), z, f3, X(E + 5)],
            [z, X(5), X(2, 2), g2, -g1, X(0, 2, 1)],
            [z, -X(0, 1), -X(0, 0, 1), z, z, -X(0, 0, 0, 1)],
        ])
        phi3 = PolyMatrix([
            [X(0, 0, 0, m), z, X(E + 2)],
            [X(0, 0, 1), X(0, 0, 0, 1), z],
            [-X(0, 1), z, -X(0, 0, 0, 1)],
            [X(2), X(0, 0, 1), z],
            [z, X(3), -X(0, 2)],
            [z, -X(0, 1), X(0, 0, 1)],
        ])
    return Resolution(q, phi1, phi2, phi3)


@dataclass(frozen=True)
class ComplexFailure:
    matrix: str
    row: int
    col: int
    reason: str


@dataclass
class ComplexReport:
    failures: list[ComplexFailure] = field(default_factory=list)
    column_degrees: dict[str, list[int | None]] = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return not self.failures


def _graded_columns(name: str, mat: PolyMatrix, row_degrees: Sequence[int | None],
                    weights: Sequence[int], report: ComplexReport) -> list[int | None]:
    nrows, ncols = mat.shape
    degs: list[int | None] = []
    for j in range(ncols):
        col_deg = None
        for i in range(nrows):
            entry = mat[i, j]
            if not entry:
                continue
            e = entry.homogeneous_degree(weights)
            if e is None:
                report.failures.append(ComplexFailure(name, i, j, "entry is not weighted-homogeneous"))
                continue
            if row_degrees[i] is None:
                continue
            total = row_degrees[i] + e
            if col_deg is None:
                col_deg = total
            elif total != col_deg:
                report.failures.append(
                    ComplexFailure(name, i, j, f"column degree {total} != {col_deg}")
                )
        if col_deg is None:
            report.failures.append(ComplexFailure(name, -1, j, "column has no degree"))
        degs.append(col_deg)
    return degs


def verify_complex(phi1: PolyMatrix, phi2: PolyMatrix, phi3: PolyMatrix,
                   weights: Sequence[int]) -> ComplexReport:
    """Zero compositions, no unit entries, and consistent column degrees."""
    report = ComplexReport()
    named = (("phi1", phi1), ("phi2", phi2), ("phi3", phi3))
    for (na, A), (nb, B) in zip(named, named[1:]):
        if A.shape[1] != B.shape[0]:
            report.failures.append(ComplexFailure(f"{na}*{nb}", -1, -1, f"shapes {A.shape} x {B.shape}"))
            return report
        for i, j, e in (A @ B).nonzero_entries():
            report.failures.append(ComplexFailure(f"{na}*{nb}", i, j, f"composition entry {e} != 0"))
    for name, mat in named:
        for i, j, e in mat.nonzero_entries():
            if e.constant_term():
                report.failures.append(ComplexFailure(name, i, j, "nonzero constant term"))
    row_degrees: list[int | None] = [0] * phi1.shape[0]
    for name, mat in named:
        row_degrees = _graded_columns(name, mat, row_degrees, weights, report)
        report.column_degrees[name] = row_degrees
    return report


def cross_check_betti(p: Gamma4Params) -> InstanceReport:
    """Generation (Gastinger count) and minimality (Betti oracle) of H_q."""
    report = InstanceReport(p.as_dict())
    weights = gamma4_generators(p)
    S = gamma4_semigroup(p)
    H = hq_generators(p)
    degrees = []
    homogeneous = True
    factors = True
    for b in H:
        homogeneous &= is_homogeneous(b, weights)
        deg = weighted_degree(b.plus, weights)
        degrees.append(deg)
        facs = set(_factorizations(S.generators, deg))
        factors &= b.plus in facs and b.minus in facs
    report.check("ideal.homogeneous", homogeneous)
    report.check("ideal.same_element", factors)
    count = standard_monomial_count(set_x1_zero(H))
    report.check("ideal.gastinger_count", count == p.a, count, p.a)
    oracle = betti_degrees(S)
    multiset = sorted(s for s, c in oracle.items() for _ in range(c))
    report.check("ideal.betti_degrees", sorted(degrees) == multiset, sorted(degrees), multiset)
    beta1 = betti_signature(p.q)[1]
    report.check("ideal.count_beta1", len(H) == beta1, len(H), beta1)
    return report


def verify_resolution(p: Gamma4Params) -> InstanceReport:
    report = InstanceReport(p.as_dict())
    res = resolution_matrices(p)
    cx = verify_complex(res.phi1, res.phi2, res.phi3, gamma4_generators(p))
    report.check("resolution.complex", cx.ok, [f.__dict__ for f in cx.failures], [])
    sig = betti_signature(p.q)
    report.check("resolution.signature", res.signature == sig, res.signature, sig)
    gens = [b.as_polynomial() for b in hq_generators(p)]
    phi1 = res.phi1.entries[0]
    same = len(phi1) == len(gens) and all(f in gens or -f in gens for f in phi1)
    report.check("resolution.phi1_is_hq", same)
    return report
