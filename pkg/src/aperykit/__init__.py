"""Apery sets, Apery tables and tangent cones of numerical semigroups.

Generic oracles live in :mod:`aperykit.core`; closed forms for the two
families of partial-sum semigroups live in :mod:`aperykit.gamma4` and
:mod:`aperykit.geo_series` and are checked against the oracles by
:mod:`aperykit.verify`.
"""
from __future__ import annotations

from .binomial_ideal import (
    Binomial,
    Resolution,
    betti_signature,
    cross_check_betti,
    hq_generators,
    resolution_matrices,
    standard_monomial_count,
    verify_complex,
    verify_resolution,
)
from .core import (
    AperySet,
    AperyTable,
    NumericalSemigroup,
    apery_set,
    apery_table,
    betti_degrees,
    contains,
    factorizations,
    frobenius,
    in_sumset,
    is_minimal_generating,
    max_factorization_length,
    pseudo_frobenius,
    reduction_number,
    semigroup_type,
)
from .errors import (
    AperyError,
    ConsistencyError,
    DomainError,
    ParameterError,
    RangeError,
    StructureError,
)
from .gamma4 import (
    Gamma4Params,
    gamma4_apery,
    gamma4_apery_table,
    gamma4_frobenius,
    gamma4_generators,
    gamma4_hilbert_series,
    gamma4_pf,
    gamma4_semigroup,
    gamma4_tk,
)
from .geo_series import (
    GeoParams,
    geo_apery,
    geo_apery_table,
    geo_hilbert_series,
    geo_semigroup,
    min_digit_sum,
    r_adic,
    table_depth,
)
from .polynomial import Polynomial, PolyMatrix
from .report import Discrepancy, InstanceReport
from .tangent_cone import (
    CZDecomposition,
    HilbertSeries,
    artinian_socle,
    cz_decompose,
    gorenstein_condition,
    hilbert_from_decomposition,
    ladder_stats,
    landings,
    unique_expression_check,
)
from .verify import sweep_gamma4, sweep_geo, verify_gamma4, verify_geo

__version__ = "0.1.0"
