"""The lacunary set A of sums of distinct p^(j^j) and the product identity."""

from __future__ import annotations

from itertools import combinations

from dprmlab.ffdio.series import PowerSeriesTrunc, genseries


def generator(p: int, j: int) -> int:
    return p ** (j**j)


def bigA_members(p: int, j_max: int) -> list[int]:
    """All subset sums of p^(1^1), ..., p^(j_max^j_max), sorted (0 included)."""
    gens = [generator(p, j) for j in range(1, j_max + 1)]
    sums = {}
    for k in range(len(gens) + 1):
        for sub in combinations(range(1, j_max + 1), k):
            s = sum(gens[j - 1] for j in sub)
            assert s not in sums, "subset sums of distinct generators collided"
            sums[s] = sub
    return sorted(sums)


def member_support(p: int, a: int) -> list[int]:
    """Positions of nonzero base-p digits; raises if a digit exceeds 1."""
    out, i = [], 0
    while a:
        a, r = divmod(a, p)
        if r > 1:
            raise ValueError(f"digit {r} at position {i}")
        if r:
            out.append(i)
        i += 1
    return out


def count_below(p: int, x: int) -> int:
    """N(A, x) by subset-sum counting.

    The generators g_1 < g_2 < ... are super-increasing (g_k exceeds the
    sum of all earlier ones), so with g_k the largest generator <= x,
    N(A, x) = 2^(k-1) + N_{<k}(A, x - g_k): every subset of the earlier
    generators fits, and subsets using g_k are counted recursively.
    """
    if x < 0:
        return 0
    k = 0
    while generator(p, k + 1) <= x:
        k += 1
    total = 0
    while k >= 1 and x >= 0:
        g = generator(p, k)
        if g <= x:
            total += 2 ** (k - 1)
            x -= g
        k -= 1
    return total + 1  # the empty sum, 0 <= x


def bigA_counting_check(p: int, j: int) -> int:
    """N(A, p^(j^j))."""
    return count_below(p, generator(p, j))


def n_r(p: int, r: int) -> int:
    return sum(generator(p, j) for j in range(1, r + 1))


def product_sides(p: int, r: int, N: int):
    one_plus_t = PowerSeriesTrunc(p, N, [1, 1])
    lhs = one_plus_t ** n_r(p, r)
    rhs = PowerSeriesTrunc.const(p, N, 1)
    for j in range(1, r + 1):
        rhs = rhs * (PowerSeriesTrunc.const(p, N, 1) + PowerSeriesTrunc.monomial(p, N, generator(p, j)))
    return lhs, rhs


def product_identity_check(p: int, r: int, N: int) -> bool:
    """(1+t)^(n_r) == prod_{j<=r} (1 + t^(p^(j^j))) mod t^N."""
    lhs, rhs = product_sides(p, r, N)
    return lhs == rhs


def bigA_series(p: int, N: int) -> PowerSeriesTrunc:
    j = 1
    while generator(p, j) < N:
        j += 1
    return genseries(iter(bigA_members(p, j)), p, N, complete_below=generator(p, j))


def fA_convergence_check(p: int, r: int, N: int) -> int:
    """ord(f_A - (1+t)^(n_r)) at precision N (N means no difference seen)."""
    lhs, _ = product_sides(p, r, N)
    gap = (bigA_series(p, N) - lhs).ord()
    bound = min(generator(p, r), N)
    assert gap > bound or gap >= N, "truncation does not converge as expected"
    return gap
