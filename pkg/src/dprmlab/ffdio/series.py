"""Truncated Laurent series over F_p and the Christol-type residual checks."""

from __future__ import annotations

from typing import Iterable, Mapping

import numpy as np

from dprmlab.kernel import StructuralError


class PowerSeriesTrunc:
    """sum_{v <= i < N} c_i t^i, known exactly up to (not including) t^N.

    ``v`` may be negative (finite principal part).  Products keep the
    overlap rule: a result is only known below min(N1 + v2, N2 + v1).
    """

    __slots__ = ("p", "N", "v", "c")

    def __init__(self, p: int, N: int, coeffs: Iterable[int] = (), v: int = 0):
        if N < v:
            raise StructuralError("precision below the first exponent")
        arr = np.zeros(N - v, dtype=np.int64)
        vals = np.asarray(list(coeffs), dtype=np.int64)[: N - v]
        arr[: len(vals)] = vals % p
        self.p, self.N, self.v, self.c = p, N, v, arr

    @classmethod
    def _raw(cls, p, N, v, arr):
        out = cls.__new__(cls)
        out.p, out.N, out.v, out.c = p, N, v, arr % p
        return out

    @classmethod
    def monomial(cls, p, N, k, a=1):
        v = min(k, 0)
        arr = np.zeros(N - v, dtype=np.int64)
        if k < N:
            arr[k - v] = a % p
        return cls._raw(p, N, v, arr)

    @classmethod
    def const(cls, p, N, a):
        return cls.monomial(p, N, 0, a)

    @classmethod
    def from_exponents(cls, p, N, exps: Iterable[int], v: int = 0):
        arr = np.zeros(N - v, dtype=np.int64)
        for e in exps:
            if v <= e < N:
                arr[e - v] = (arr[e - v] + 1) % p
        return cls._raw(p, N, v, arr)

    def coeff(self, i: int) -> int:
        if i < self.v:
            return 0
        if i >= self.N:
            raise StructuralError(f"coefficient {i} is beyond precision {self.N}")
        return int(self.c[i - self.v])

    def _align(self, other):
        if isinstance(other, int):
            other = PowerSeriesTrunc.const(self.p, self.N, other)
        if other.p != self.p:
            raise StructuralError("characteristic mismatch")
        v = min(self.v, other.v)
        N = min(self.N, other.N)
        a = np.zeros(N - v, dtype=np.int64)
        b = np.zeros(N - v, dtype=np.int64)
        a[self.v - v: self.v - v + max(0, N - self.v)] = self.c[: max(0, N - self.v)]
        b[other.v - v: other.v - v + max(0, N - other.v)] = other.c[: max(0, N - other.v)]
        return v, N, a, b

    def __add__(self, other):
        v, N, a, b = self._align(other)
        return PowerSeriesTrunc._raw(self.p, N, v, a + b)

    __radd__ = __add__

    def __neg__(self):
        return PowerSeriesTrunc._raw(self.p, self.N, self.v, -self.c)

    def __sub__(self, other):
        v, N, a, b = self._align(other)
        return PowerSeriesTrunc._raw(self.p, N, v, a - b)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            return PowerSeriesTrunc._raw(self.p, self.N, self.v, self.c * other)
        if other.p != self.p:
            raise StructuralError("characteristic mismatch")
        v = self.v + other.v
        N = min(self.N + other.v, other.N + self.v)
        if N <= v:
            return PowerSeriesTrunc._raw(self.p, v, v, np.zeros(0, dtype=np.int64))
        L = N - v
        a, b = self.c[:L], other.c[:L]
        prod = np.convolve(a, b)[:L] % self.p
        arr = np.zeros(L, dtype=np.int64)
        arr[: len(prod)] = prod
        return PowerSeriesTrunc._raw(self.p, N, v, arr)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        """Square-and-multiply; n may be a huge integer."""
        if n < 0:
            raise StructuralError("negative powers are not supported")
        result = PowerSeriesTrunc.const(self.p, self.N, 1)
        if n == 0:
            return result
        if self.v < 0:
            raise StructuralError("powers of Laurent tails are not supported")
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def ord(self):
        """Order of the first nonzero coefficient; N when none is known to be nonzero."""
        nz = np.nonzero(self.c)[0]
        return int(nz[0]) + self.v if len(nz) else self.N

    def is_zero(self) -> bool:
        return not np.any(self.c)

    def __eq__(self, other):
        if not isinstance(other, PowerSeriesTrunc):
            return NotImplemented
        return (self - other).is_zero()

    __hash__ = None

    def sparse(self) -> list[tuple[int, int]]:
        return [(int(i) + self.v, int(a)) for i, a in enumerate(self.c) if a]

    def __repr__(self):
        terms = ", ".join(f"{e}:{a}" for e, a in self.sparse())
        return f"PowerSeriesTrunc(p={self.p}, N={self.N}, {{{terms}}})"


def genseries(members: Iterable[int], p: int, N: int, complete_below: int | None = None,
              constant: int = 0) -> PowerSeriesTrunc:
    """f_A = sum_{a in A} t^a mod t^N from an increasing stream of members.

    Reading stops at the first member >= N.  If the stream ends earlier,
    membership is only known below ``complete_below`` (default: last member
    + 1); a gap before N is an error naming the first uncovered exponent.
    """
    exps = []
    last = -1
    reached = False
    for a in members:
        if a <= last:
            raise StructuralError("members must be strictly increasing")
        last = a
        if a >= N:
            reached = True
            break
        exps.append(a)
    if not reached:
        covered = complete_below if complete_below is not None else last + 1
        if covered < N:
            raise StructuralError(f"member prefix does not cover exponent {covered}")
    f = PowerSeriesTrunc.from_exponents(p, N, exps)
    return f + constant if constant else f


def verify_algebraic(f: PowerSeriesTrunc, P: Mapping[tuple[int, int], int]) -> int:
    """t-adic order of P(f, t) = sum c * t^j * f^i over the terms {(i, j): c}.

    A value >= f.N means the relation holds at that precision.
    """
    p = f.p
    res = PowerSeriesTrunc(p, f.N)
    for (i, j), c in sorted(P.items()):
        if i < 0 or j < 0:
            raise StructuralError("relation exponents must be non-negative")
        res = res + (f ** i) * PowerSeriesTrunc.monomial(p, f.N, j, c)
    return res.ord()


def artin_schreier_relation(p: int) -> dict:
    """T^p - T + t."""
    return {(p, 0): 1, (1, 0): -1, (0, 1): 1}


def geometric_relation() -> dict:
    """(1 - t) T - 1."""
    return {(1, 0): 1, (1, 1): -1, (0, 0): -1}


def powers_of_p(p: int):
    k = 1
    while True:
        yield k
        k *= p


def christol_fb(p: int, b: int, N: int) -> PowerSeriesTrunc:
    """f_b = b + t + t^p + t^(p^2) + ..."""
    return genseries(powers_of_p(p), p, N, constant=b)


def christol_naturals(p: int, N: int) -> PowerSeriesTrunc:
    from itertools import count

    return genseries(count(), p, N)
