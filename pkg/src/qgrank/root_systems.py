"""Exact root-system data for the simple Lie algebras.

Roots are integer vectors of simple-root coefficients and weights are
integer vectors of fundamental-weight coefficients. Simple roots are
numbered as in Bourbaki. The invariant form is normalized so that short
roots have squared length 2, hence ``(alpha_i, alpha_i) = 2 * d_i`` with
``d_i`` in ``{1, m}``.

The pairing of a fundamental weight with a simple root is
``(lambda_i, alpha_k) = d_k * delta_ik``, which keeps every computation
in the integers without an ambient Euclidean embedding.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .errors import InvalidLieType, InvalidParity

SERIES = "ABCDEFG"

# Coxeter and dual Coxeter numbers, as functions of the rank.
COXETER = {
    "A": lambda r: r + 1,
    "B": lambda r: 2 * r,
    "C": lambda r: 2 * r,
    "D": lambda r: 2 * r - 2,
    "E": lambda r: {6: 12, 7: 18, 8: 30}[r],
    "F": lambda r: 12,
    "G": lambda r: 6,
}
DUAL_COXETER = {
    "A": lambda r: r + 1,
    "B": lambda r: 2 * r - 1,
    "C": lambda r: r + 1,
    "D": lambda r: 2 * r - 2,
    "E": lambda r: {6: 12, 7: 18, 8: 30}[r],
    "F": lambda r: 9,
    "G": lambda r: 4,
}

_TYPE_RE = re.compile(r"^\s*([A-Ga-g])\s*_?\s*(\d+)\s*$")


def _valid(series, rank):
    if series == "A":
        return rank >= 1
    if series in "BC":
        return rank >= 2
    if series == "D":
        return rank >= 4
    if series == "E":
        return rank in (6, 7, 8)
    if series == "F":
        return rank == 4
    if series == "G":
        return rank == 2
    return False


@dataclass(frozen=True, order=True)
class LieType:
    """A simple Lie type ``X_r``; low-rank coincidences are rejected."""

    series: str
    rank: int

    def __post_init__(self):
        if not isinstance(self.series, str) or self.series.upper() not in SERIES:
            raise InvalidLieType(f"unknown Lie series {self.series!r}")
        object.__setattr__(self, "series", self.series.upper())
        if isinstance(self.rank, bool) or not isinstance(self.rank, int):
            raise InvalidLieType(f"rank must be an integer, got {self.rank!r}")
        if not _valid(self.series, self.rank):
            raise InvalidLieType(
                f"{self.series}{self.rank} is not an accepted type "
                "(A_r r>=1, B_r/C_r r>=2, D_r r>=4, E6/E7/E8, F4, G2)"
            )

    @classmethod
    def parse(cls, text: str) -> "LieType":
        """Parse labels such as ``"G2"``, ``"b5"`` or ``"E_8"``."""
        match = _TYPE_RE.match(text) if isinstance(text, str) else None
        if match is None:
            raise InvalidLieType(f"cannot parse Lie type {text!r}")
        return cls(match.group(1).upper(), int(match.group(2)))

    @property
    def label(self) -> str:
        return f"{self.series}{self.rank}"

    def __str__(self):
        return self.label


def all_types(max_rank: int = 8) -> list[LieType]:
    """Every accepted type of rank at most ``max_rank``, in a fixed order."""
    out = []
    for series in SERIES:
        for rank in range(1, max_rank + 1):
            if _valid(series, rank):
                out.append(LieType(series, rank))
    return out


def _dynkin_edges(t: LieType):
    """Edges ``(i, j, a_ij, a_ji)`` of the Dynkin diagram, 0-based indices."""
    r = t.rank
    s = t.series
    if s == "A":
        return [(i, i + 1, -1, -1) for i in range(r - 1)]
    if s == "B":
        # alpha_r short
        return [(i, i + 1, -1, -1) for i in range(r - 2)] + [(r - 2, r - 1, -1, -2)]
    if s == "C":
        # alpha_r long
        return [(i, i + 1, -1, -1) for i in range(r - 2)] + [(r - 2, r - 1, -2, -1)]
    if s == "D":
        chain = [(i, i + 1, -1, -1) for i in range(r - 2)]
        return chain + [(r - 3, r - 1, -1, -1)]
    if s == "E":
        # 1-3-4-5-...-r with 2 attached to 4
        edges = [(0, 2, -1, -1), (1, 3, -1, -1)]
        edges += [(i, i + 1, -1, -1) for i in range(2, r - 1)]
        return edges
    if s == "F":
        return [(0, 1, -1, -1), (1, 2, -1, -2), (2, 3, -1, -1)]
    if s == "G":
        # alpha_1 short, alpha_2 long
        return [(0, 1, -3, -1)]
    raise InvalidLieType(s)


def cartan_matrix(t: LieType) -> tuple[tuple[int, ...], ...]:
    """Cartan matrix with ``A[i][j] = <alpha_i^vee, alpha_j>``."""
    r = t.rank
    a = [[2 if i == j else 0 for j in range(r)] for i in range(r)]
    for i, j, aij, aji in _dynkin_edges(t):
        a[i][j] = aij
        a[j][i] = aji
    return tuple(tuple(row) for row in a)


def symmetrizer(cartan) -> tuple[int, ...]:
    """Solve ``d_i A_ij = d_j A_ji`` with the smallest entry equal to 1."""
    r = len(cartan)
    d = [None] * r
    d[0] = Fraction(1)
    stack = [0]
    while stack:
        i = stack.pop()
        for j in range(r):
            if j != i and cartan[i][j] != 0 and d[j] is None:
                d[j] = d[i] * cartan[i][j] / cartan[j][i]
                stack.append(j)
    if any(x is None for x in d):
        raise InvalidLieType("Dynkin diagram is not connected")
    low = min(d)
    d = [x / low for x in d]
    if any(x.denominator != 1 for x in d):
        raise InvalidLieType("non-integral symmetrizer")
    return tuple(int(x) for x in d)


def positive_roots_closure(cartan) -> list[tuple[int, ...]]:
    """Positive roots by closure over simple-root strings.

    For a root ``beta`` and simple root ``alpha_i`` with
    ``beta - p*alpha_i`` a root and ``beta - (p+1)*alpha_i`` not,
    ``beta + alpha_i`` is a root iff ``p - <alpha_i^vee, beta> > 0``.
    Roots are returned sorted by height, then lexicographically.
    """
    r = len(cartan)
    simple = [tuple(1 if k == i else 0 for k in range(r)) for i in range(r)]
    roots = set(simple)
    layer = list(simple)
    while layer:
        nxt = set()
        for beta in layer:
            for i in range(r):
                p = 0
                probe = list(beta)
                while True:
                    probe[i] -= 1
                    if tuple(probe) in roots:
                        p += 1
                    else:
                        break
                pairing = sum(cartan[i][j] * beta[j] for j in range(r))
                if p - pairing > 0:
                    up = list(beta)
                    up[i] += 1
                    up = tuple(up)
                    if up not in roots:
                        nxt.add(up)
        roots |= nxt
        layer = sorted(nxt)
    return sorted(roots, key=lambda v: (sum(v), v))


def form(d, cartan, beta, gamma) -> int:
    """Invariant form ``(beta, gamma)`` of two vectors in simple-root coordinates."""
    r = len(cartan)
    return sum(
        beta[i] * gamma[j] * d[i] * cartan[i][j] for i in range(r) for j in range(r)
    )


@dataclass(frozen=True)
class RootSystemData:
    lie_type: LieType
    cartan: tuple[tuple[int, ...], ...]
    symmetrizer: tuple[int, ...]
    positive_roots: tuple[tuple[int, ...], ...]
    theta0: tuple[int, ...]
    theta1: tuple[int, ...]
    m: int
    h: int
    h_dual: int

    @property
    def rank(self) -> int:
        return self.lie_type.rank

    def squared_length(self, beta) -> int:
        return form(self.symmetrizer, self.cartan, beta, beta)


@lru_cache(maxsize=None)
def build_root_system(t: LieType) -> RootSystemData:
    if not isinstance(t, LieType):
        raise InvalidLieType(f"expected a LieType, got {t!r}")
    cartan = cartan_matrix(t)
    d = symmetrizer(cartan)
    m = max(d)
    roots = positive_roots_closure(cartan)

    def highest(candidates):
        top = max(sum(v) for v in candidates)
        best = [v for v in candidates if sum(v) == top]
        assert len(best) == 1, best
        return best[0]

    long_roots = [v for v in roots if form(d, cartan, v, v) == 2 * m]
    short_roots = [v for v in roots if form(d, cartan, v, v) == 2]
    theta0 = highest(long_roots)
    theta1 = highest(short_roots)
    return RootSystemData(
        lie_type=t,
        cartan=cartan,
        symmetrizer=d,
        positive_roots=tuple(roots),
        theta0=theta0,
        theta1=theta1,
        m=m,
        h=COXETER[t.series](t.rank),
        h_dual=DUAL_COXETER[t.series](t.rank),
    )


def pairing_with_theta(rs: RootSystemData, which: str):
    """Return ``(L, rho_pairing)`` for ``theta0`` (``"long"``) or ``theta1`` (``"short"``).

    ``L[i] = (lambda_i, theta)`` in Bourbaki order and
    ``rho_pairing = (rho, theta)``. Writing ``theta = sum c_k alpha_k``
    gives ``L[i] = c_i d_i`` and, since ``rho = sum lambda_i``,
    ``rho_pairing = sum_i L[i]``.
    """
    if which == "long":
        theta = rs.theta0
    elif which == "short":
        theta = rs.theta1
    else:
        raise ValueError(f"which must be 'long' or 'short', not {which!r}")
    pairings = tuple(c * d for c, d in zip(theta, rs.symmetrizer))
    rho_pairing = sum(c * d for c, d in zip(theta, rs.symmetrizer))
    return pairings, rho_pairing


@dataclass(frozen=True)
class AlcoveParams:
    """One row of the rank table: the part multiset, offset and minimal level.

    ``parts`` is sorted ascending; ``order[k]`` is the (0-based, Bourbaki)
    index of the fundamental weight whose pairing is ``parts[k]``, so a
    weight label ``a`` in parts order is ``sum_k a[k] * lambda_{order[k]}``.
    """

    lie_type: LieType
    ell_m: int
    parts: tuple[int, ...]
    rho_pairing: int
    ell0: int
    m: int
    order: tuple[int, ...] = ()

    def matches(self, ell: int) -> bool:
        """True if the divisibility of ``ell`` by ``m`` selects this row."""
        return ell_m_for(ell, self.m) == self.ell_m

    def bound(self, ell: int) -> int:
        """The partition bound ``s = ell - rho_pairing - 1``."""
        return ell - self.rho_pairing - 1

    def theorem_exponent(self, ell: int) -> int:
        return ell - self.ell0 + self.ell_m


def ell_m_for(ell: int, m: int) -> int:
    return 0 if ell % m == 0 else 1


def minimal_level(rho_pairing: int, m: int, ell_m: int) -> int:
    """Least ``ell > rho_pairing`` whose divisibility by ``m`` matches ``ell_m``."""
    ell = rho_pairing + 1
    while ell_m_for(ell, m) != ell_m:
        ell += 1
    return ell


@lru_cache(maxsize=None)
def alcove_params(t: LieType, ell_m: int) -> AlcoveParams:
    rs = build_root_system(t)
    if ell_m not in (0, 1):
        raise InvalidParity(f"ell_m must be 0 or 1, got {ell_m!r}")
    if rs.m == 1 and ell_m == 1:
        raise InvalidParity(f"{t} is simply laced: every ell is divisible by m = 1")
    pairings, rho_pairing = pairing_with_theta(rs, "long" if ell_m == 0 else "short")
    order = tuple(sorted(range(t.rank), key=lambda i: (pairings[i], i)))
    return AlcoveParams(
        lie_type=t,
        ell_m=ell_m,
        parts=tuple(pairings[i] for i in order),
        rho_pairing=rho_pairing,
        ell0=minimal_level(rho_pairing, rs.m, ell_m),
        m=rs.m,
        order=order,
    )


def params_for_level(t: LieType, ell: int) -> AlcoveParams:
    """Alcove parameters for the row selected by ``ell``'s divisibility."""
    m = build_root_system(t).m
    return alcove_params(t, ell_m_for(ell, m))


def admissible_parities(t: LieType) -> tuple[int, ...]:
    return (0,) if build_root_system(t).m == 1 else (0, 1)
