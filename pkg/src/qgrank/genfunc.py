"""Exact rational power series and the rank generating function.

``F(x) = 1/(1-x) * prod_{k in S} 1/(1-x^k)``; its coefficient at
``x^s`` with ``s = ell - rho_pairing - 1`` is the rank at level ``ell``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Mapping

from .errors import NonUnitDenominator
from .alcove_oracle import check_level
from .root_systems import AlcoveParams


class SparsePolynomial:
    """Integer polynomial stored as ``{exponent: coefficient}`` without zeros."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[int, int] | None = None):
        clean = {}
        for e, c in (terms or {}).items():
            if e < 0:
                raise ValueError(f"negative exponent {e}")
            if c:
                clean[int(e)] = int(c)
        self._terms = clean

    @classmethod
    def one(cls):
        return cls({0: 1})

    @classmethod
    def one_minus_x_pow(cls, k: int):
        """The factor ``1 - x^k``."""
        if k < 1:
            raise ValueError("k must be positive")
        return cls({0: 1, k: -1})

    @property
    def terms(self) -> dict[int, int]:
        return dict(self._terms)

    @property
    def degree(self) -> int:
        return max(self._terms, default=-1)

    def __getitem__(self, e: int) -> int:
        return self._terms.get(e, 0)

    def __eq__(self, other):
        if isinstance(other, SparsePolynomial):
            return self._terms == other._terms
        if isinstance(other, int):
            return self._terms == ({0: other} if other else {})
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def __add__(self, other):
        out = dict(self._terms)
        for e, c in other._terms.items():
            out[e] = out.get(e, 0) + c
        return SparsePolynomial(out)

    def __neg__(self):
        return SparsePolynomial({e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        out: dict[int, int] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                out[e1 + e2] = out.get(e1 + e2, 0) + c1 * c2
        return SparsePolynomial(out)

    def truncate(self, order: int) -> "SparsePolynomial":
        return SparsePolynomial({e: c for e, c in self._terms.items() if e <= order})

    def __repr__(self):
        if not self._terms:
            return "0"
        bits = []
        for e in sorted(self._terms):
            c = self._terms[e]
            mono = "" if e == 0 else ("x" if e == 1 else f"x^{e}")
            if not mono:
                bits.append(str(c))
            elif c == 1:
                bits.append(mono)
            elif c == -1:
                bits.append(f"-{mono}")
            else:
                bits.append(f"{c}*{mono}")
        return " + ".join(bits).replace("+ -", "- ")


@dataclass(frozen=True)
class RationalSeries:
    numerator: SparsePolynomial
    denominator: SparsePolynomial
    # exponents k of the (1 - x^k) factors, when built from factors
    factors: tuple[int, ...] = field(default=(), compare=False)

    def describe_denominator(self) -> str:
        if not self.factors:
            return f"({self.denominator!r})"
        out = []
        for k in sorted(set(self.factors)):
            base = "(1 - x)" if k == 1 else f"(1 - x^{k})"
            mult = self.factors.count(k)
            out.append(base if mult == 1 else f"{base}^{mult}")
        return "".join(out)


def from_factors(exponents, numerator: SparsePolynomial | None = None) -> RationalSeries:
    """``numerator / prod (1 - x^k)``."""
    den = SparsePolynomial.one()
    for k in exponents:
        den = den * SparsePolynomial.one_minus_x_pow(k)
    return RationalSeries(numerator or SparsePolynomial.one(), den, tuple(exponents))


def build_F(params: AlcoveParams) -> RationalSeries:
    return from_factors((1,) + tuple(params.parts))


def expand(series: RationalSeries, order: int) -> list[int]:
    """Coefficients ``c_0..c_order`` of the power-series expansion.

    Uses the recurrence ``d_0 c_n = a_n - sum_{k>=1} d_k c_{n-k}``.
    """
    if order < 0:
        raise ValueError("order must be non-negative")
    den = series.denominator
    d0 = den[0]
    if d0 not in (1, -1):
        raise NonUnitDenominator(f"denominator constant term is {d0}, not a unit")
    tail = sorted((e, c) for e, c in den.terms.items() if e > 0)
    num = series.numerator
    coeffs = [0] * (order + 1)
    for n in range(order + 1):
        acc = num[n]
        for e, c in tail:
            if e > n:
                break
            acc -= c * coeffs[n - e]
        coeffs[n] = acc * d0  # d0 is its own inverse
    return coeffs


def multiply_truncated(coeffs, poly: SparsePolynomial, order: int) -> list[int]:
    """``(sum coeffs[n] x^n) * poly`` through ``x^order``."""
    out = [0] * (order + 1)
    for e, c in poly.terms.items():
        for n in range(0, order + 1 - e):
            out[n + e] += c * coeffs[n]
    return out


def coefficient(params: AlcoveParams, exponent: int) -> int:
    if exponent < 0:
        return 0
    return expand(build_F(params), exponent)[exponent]


def rank_coefficient(params: AlcoveParams, ell: int) -> int:
    """Rank at level ``ell``: the coefficient of ``x^(ell - rho_pairing - 1)`` in F."""
    s = check_level(params, ell)
    return coefficient(params, s)
