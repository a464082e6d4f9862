"""Partitions with parts from a fixed multiset.

Repeated parts are distinct part types: with ``T = [1, 1]`` the
partitions of 2 are ``2*t1``, ``t1 + t2`` and ``2*t2``.
"""

from __future__ import annotations


def _check_parts(parts):
    parts = tuple(parts)
    if not parts:
        raise ValueError("part multiset must be non-empty")
    for p in parts:
        if isinstance(p, bool) or not isinstance(p, int) or p < 1:
            raise ValueError(f"parts must be positive integers, got {p!r}")
    return parts


def partition_counts(parts, n: int) -> list[int]:
    """``[P_T(0), ..., P_T(n)]`` by the coin-counting DP."""
    parts = _check_parts(parts)
    if n < 0:
        raise ValueError("n must be non-negative")
    ways = [0] * (n + 1)
    ways[0] = 1
    for p in parts:
        for k in range(p, n + 1):
            ways[k] += ways[k - p]
    return ways


def count_partitions(parts, n: int) -> int:
    """Number of partitions of ``n`` into parts from ``parts``."""
    return partition_counts(parts, n)[n]


def count_partitions_upto(parts, s: int) -> int:
    """Number of partitions of all ``0 <= n <= s`` into parts from ``parts``."""
    total = 0
    for c in partition_counts(parts, s):
        total += c
    return total
