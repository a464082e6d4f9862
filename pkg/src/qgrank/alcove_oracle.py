"""Direct enumeration of the dominant weights inside the level-``ell`` alcove.

A label ``a`` (coordinates in the order of ``params.parts``) belongs to
the alcove iff ``sum_i a_i * parts_i <= ell - rho_pairing - 1``. This
module shares no code with :mod:`qgrank.partitions`, so agreement between
the two is a genuine cross-check.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DegenerateLevel, ParityMismatch
from .root_systems import AlcoveParams


@dataclass(frozen=True, order=True)
class WeightLabel:
    coeffs: tuple[int, ...]

    def __post_init__(self):
        if any(a < 0 for a in self.coeffs):
            raise ValueError(f"weight {self.coeffs} is not dominant")

    def __str__(self):
        return ",".join(str(a) for a in self.coeffs)


def check_level(params: AlcoveParams, ell: int) -> int:
    """Validate ``ell`` against ``params`` and return the bound ``s``."""
    if isinstance(ell, bool) or not isinstance(ell, int) or ell < 1:
        raise ValueError(f"ell must be a positive integer, got {ell!r}")
    if not params.matches(ell):
        want = "divisible" if params.ell_m == 0 else "not divisible"
        raise ParityMismatch(
            f"ell = {ell} does not match the {params.lie_type} row with ell_m = "
            f"{params.ell_m} (ell must be {want} by m = {params.m})"
        )
    if ell <= params.rho_pairing:
        cls = "m | ell" if params.ell_m == 0 else "m !| ell"
        raise DegenerateLevel(
            f"{params.lie_type} at ell = {ell} is degenerate: need ell >= ell0 = "
            f"{params.ell0} for {cls} (m = {params.m})",
            ell0=params.ell0,
        )
    return ell - params.rho_pairing - 1


def _labels(parts, budget):
    if len(parts) == 1:
        for a in range(budget // parts[0] + 1):
            yield (a,)
        return
    head, rest = parts[0], parts[1:]
    for a in range(budget // head + 1):
        for tail in _labels(rest, budget - a * head):
            yield (a,) + tail


def enumerate_alcove(params: AlcoveParams, ell: int) -> list[WeightLabel]:
    """All alcove labels at level ``ell``, in lexicographic order."""
    s = check_level(params, ell)
    return [WeightLabel(a) for a in _labels(params.parts, s)]


def count_alcove(params: AlcoveParams, ell: int) -> int:
    """Size of the alcove without building the labels.

    Bounded loops over the coordinates, memoized on
    ``(coordinate index, remaining budget)``; the last coordinate is
    counted in closed form.
    """
    s = check_level(params, ell)
    parts = params.parts
    r = len(parts)
    memo: dict[tuple[int, int], int] = {}

    def count(i, budget):
        if i == r - 1:
            return budget // parts[i] + 1
        key = (i, budget)
        hit = memo.get(key)
        if hit is not None:
            return hit
        total = 0
        b = budget
        while b >= 0:
            total += count(i + 1, b)
            b -= parts[i]
        memo[key] = total
        return total

    return count(0, s)


def in_alcove(params: AlcoveParams, ell: int, coeffs) -> bool:
    s = ell - params.rho_pairing - 1
    return all(a >= 0 for a in coeffs) and sum(
        a * p for a, p in zip(coeffs, params.parts)
    ) <= s
