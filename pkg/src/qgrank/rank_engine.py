"""Rank queries: method dispatch, cross-checking and subcategory ranks."""

from __future__ import annotations

import enum
from dataclasses import dataclass, replace
from math import gcd
from typing import Callable, Iterable, Optional

from . import alcove_oracle, genfunc
from .errors import DegenerateLevel, IndivisibleRank, MethodDisagreement
from .root_systems import AlcoveParams, LieType, params_for_level


class Method(str, enum.Enum):
    GENERATING_FUNCTION = "generating_function"
    ENUMERATION = "enumeration"
    BOTH = "both"

    @classmethod
    def parse(cls, text) -> "Method":
        if isinstance(text, cls):
            return text
        aliases = {"gf": cls.GENERATING_FUNCTION, "enum": cls.ENUMERATION}
        if text in aliases:
            return aliases[text]
        return cls(text)

    @property
    def short(self) -> str:
        return {"generating_function": "gf", "enumeration": "enum", "both": "both"}[self.value]


@dataclass(frozen=True)
class RankQuery:
    lie_type: LieType
    ell: int
    method: Method = Method.BOTH

    def __post_init__(self):
        if isinstance(self.ell, bool) or not isinstance(self.ell, int) or self.ell < 1:
            raise ValueError(f"ell must be a positive integer, got {self.ell!r}")
        object.__setattr__(self, "method", Method.parse(self.method))


@dataclass(frozen=True)
class RankResult:
    lie_type: LieType
    ell: int
    rank: int
    ell_m: int
    ell0: int
    s: int
    parts: tuple[int, ...]
    method: Method
    methods_agreed: Optional[bool]  # None unless method is BOTH
    subcategory_rank: Optional[int] = None
    subcategory_reason: Optional[str] = None


Counter = Callable[[AlcoveParams, int], int]


def _compute(q: RankQuery, gf_counter: Counter, enum_counter: Counter) -> RankResult:
    params = params_for_level(q.lie_type, q.ell)
    s = alcove_oracle.check_level(params, q.ell)
    agreed = None
    if q.method is Method.GENERATING_FUNCTION:
        value = gf_counter(params, q.ell)
    elif q.method is Method.ENUMERATION:
        value = enum_counter(params, q.ell)
    else:
        value = gf_counter(params, q.ell)
        other = enum_counter(params, q.ell)
        if value != other:
            raise MethodDisagreement(
                f"{q.lie_type} at ell = {q.ell}: generating function gives {value}, "
                f"enumeration gives {other}"
            )
        agreed = True
    return RankResult(
        lie_type=q.lie_type,
        ell=q.ell,
        rank=value,
        ell_m=params.ell_m,
        ell0=params.ell0,
        s=s,
        parts=params.parts,
        method=q.method,
        methods_agreed=agreed,
    )


def rank(
    q: RankQuery,
    *,
    gf_counter: Counter = genfunc.rank_coefficient,
    enum_counter: Counter = alcove_oracle.count_alcove,
) -> RankResult:
    """Rank of the category at level ``q.ell``.

    The counter hooks exist for fault injection in the verifier; callers
    should leave them alone. For types A and B the subcategory rank from
    :func:`subcategory_rank_A` / :func:`subcategory_rank_B` is attached
    when it applies.
    """
    result = _compute(q, gf_counter, enum_counter)
    sub, reason = _subcategory(result)
    if sub is None:
        return result
    return replace(result, subcategory_rank=sub, subcategory_reason=reason)


def _subcategory(result: RankResult):
    t = result.lie_type
    if t.series == "A" and gcd(result.ell, t.rank + 1) == 1:
        n = t.rank + 1
        if result.rank % n:
            raise IndivisibleRank(f"rank {result.rank} of {t} at ell = {result.ell} is not divisible by {n}")
        return result.rank // n, "A: integer weights, gcd(ell, r+1) = 1"
    if t.series == "B" and result.ell % 2 == 1:
        if result.rank % 2:
            raise IndivisibleRank(f"rank {result.rank} of {t} at odd ell = {result.ell} is odd")
        return result.rank // 2, "B: non-spin weights, ell odd"
    return None, None


def subcategory_rank_A(q: RankQuery) -> Optional[int]:
    if q.lie_type.series != "A":
        raise ValueError(f"subcategory_rank_A needs a type A query, got {q.lie_type}")
    if gcd(q.ell, q.lie_type.rank + 1) != 1:
        return None
    return rank(q).subcategory_rank


def subcategory_rank_B(q: RankQuery) -> Optional[int]:
    if q.lie_type.series != "B":
        raise ValueError(f"subcategory_rank_B needs a type B query, got {q.lie_type}")
    if q.ell % 2 == 0:
        return None
    return rank(q).subcategory_rank


def rank_table(
    t: LieType, ell_range: Iterable[int], method: Method | str = Method.BOTH
) -> list[tuple[int, Optional[RankResult]]]:
    """``(ell, result)`` for each ``ell``; degenerate levels give ``(ell, None)``."""
    out = []
    for ell in ell_range:
        try:
            out.append((ell, rank(RankQuery(t, ell, method))))
        except DegenerateLevel:
            out.append((ell, None))
    return out
