"""Ranks of the pre-modular categories C(g, q, ell) from quantum groups at roots of unity."""

from .errors import (
    DegenerateLevel,
    IndivisibleRank,
    InvalidLieType,
    InvalidParity,
    MethodDisagreement,
    NonUnitDenominator,
    ParityMismatch,
    QGRankError,
)
from .rank_engine import Method, RankQuery, RankResult, rank, rank_table
from .root_systems import AlcoveParams, LieType, alcove_params, build_root_system

__all__ = [
    "AlcoveParams",
    "DegenerateLevel",
    "IndivisibleRank",
    "InvalidLieType",
    "InvalidParity",
    "LieType",
    "Method",
    "MethodDisagreement",
    "NonUnitDenominator",
    "ParityMismatch",
    "QGRankError",
    "RankQuery",
    "RankResult",
    "alcove_params",
    "build_root_system",
    "rank",
    "rank_table",
]
