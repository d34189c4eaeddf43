"""Lexicographically least representation as a sum of four squares."""

from __future__ import annotations

from functools import lru_cache
from math import isqrt


@lru_cache(maxsize=None)
def _least(n: int, k: int):
    if k == 1:
        r = isqrt(n)
        return (r,) if r * r == n else None
    for a in range(isqrt(n) + 1):
        rest = _least(n - a * a, k - 1)
        if rest is not None:
            return (a,) + rest
    return None


def least_squares(n: int, k: int) -> tuple[int, ...] | None:
    """Least (a_1..a_k) in lexicographic order with sum of squares n, or None."""
    if n < 0 or k < 1:
        raise ValueError("need n >= 0 and k >= 1")
    return _least(n, k)


def four_squares(n: int) -> tuple[int, int, int, int]:
    rep = least_squares(n, 4)
    # Lagrange: never None
    assert rep is not None, f"no four-square representation of {n}"
    return rep
