"""Shared substrate: pairing codecs, budgets and fuel-driven enumerators.

Every semi-decidable object in the package is represented as a *tick
stream*: a generator that yields either an emitted item or the sentinel
``TICK`` (one unit of internal work with nothing to show).  Wrapping a tick
stream in an :class:`Enumerator` with a fuel value makes the prefix finite
and reproducible: the prefix at fuel ``f`` is always a prefix of the prefix
at fuel ``f' >= f``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, isqrt
from typing import Callable, Iterable, Iterator

TICK = object()

Rational = Fraction


class BudgetExhausted(Exception):
    """Raised internally when a :class:`Budget` runs out."""


class StructuralError(ValueError):
    """Malformed input: arity mismatch, bad expression, unknown name."""


def cantor_pair(a: int, b: int) -> int:
    if a < 0 or b < 0:
        raise ValueError("cantor_pair takes natural numbers")
    s = a + b
    return s * (s + 1) // 2 + b


def cantor_unpair(n: int) -> tuple[int, int]:
    if n < 0:
        raise ValueError("cantor_unpair takes a natural number")
    w = (isqrt(8 * n + 1) - 1) // 2
    b = n - w * (w + 1) // 2
    return w - b, b


def tuple_encode(xs: Iterable[int]) -> int:
    """Right-nested pairing: [x1, ..., xr] -> <x1, <x2, ... <x_{r-1}, xr>>>."""
    xs = list(xs)
    if not xs:
        raise ValueError("tuple_encode needs arity >= 1")
    code = xs[-1]
    for x in reversed(xs[:-1]):
        code = cantor_pair(x, code)
    return code


def tuple_decode(n: int, r: int) -> list[int]:
    if r < 1:
        raise ValueError("tuple_decode needs arity >= 1")
    out = []
    for _ in range(r - 1):
        a, n = cantor_unpair(n)
        out.append(a)
    out.append(n)
    return out


def list_encode(xs: Iterable[int]) -> int:
    """Variable-length lists: 0 is the empty list, otherwise 1 + <len-1, tuple>."""
    xs = list(xs)
    if not xs:
        return 0
    return 1 + cantor_pair(len(xs) - 1, tuple_encode(xs))


def list_decode(n: int) -> list[int]:
    if n == 0:
        return []
    k, body = cantor_unpair(n - 1)
    return tuple_decode(body, k + 1)


def zigzag(n: int) -> int:
    """Bijection N -> Z: 0, -1, 1, -2, 2, ..."""
    return -((n + 1) // 2) if n % 2 else n // 2


def unzigzag(z: int) -> int:
    return -2 * z - 1 if z < 0 else 2 * z


def reduce_fraction(num: int, den: int) -> Fraction:
    if den == 0:
        raise ZeroDivisionError("zero denominator")
    g = gcd(num, den)
    if den < 0:
        g = -g
    return Fraction(num // g, den // g)


@dataclass(frozen=True)
class Yes:
    """Positive answer of a semi-decision, with its witness."""

    witness: object


@dataclass(frozen=True)
class Unknown:
    """Search ran out of fuel; says nothing about the truth of the query."""

    fuel_used: int


SemiDecision = Yes | Unknown


@dataclass
class Budget:
    """Count of atomic evaluation steps still permitted."""

    steps: int
    used: int = 0

    def spend(self, k: int = 1) -> None:
        if self.steps < k:
            self.used += self.steps
            self.steps = 0
            raise BudgetExhausted
        self.steps -= k
        self.used += k


class Enumerator:
    """Single-consumer, fuel-bounded view of a tick stream.

    Each element drawn from ``ticks`` (an item or ``TICK``) costs one unit of
    fuel.  Iteration stops when the fuel is spent or the stream ends.
    """

    def __init__(self, ticks: Iterable, fuel: int):
        if fuel < 0:
            raise ValueError("fuel must be non-negative")
        self._ticks = iter(ticks)
        self.fuel = fuel
        self.fuel_used = 0
        self.finished = False  # stream ended on its own

    def __iter__(self) -> Iterator:
        while self.fuel_used < self.fuel:
            try:
                x = next(self._ticks)
            except StopIteration:
                self.finished = True
                return
            self.fuel_used += 1
            if x is not TICK:
                yield x

    def prefix(self) -> list:
        return list(self)

    @property
    def exhausted(self) -> bool:
        return not self.finished and self.fuel_used >= self.fuel


def antidiagonal(n_rows: int | None = None) -> Iterator[tuple[int, int]]:
    """(i, s) pairs sweeping d = i + s = 0, 1, 2, ..., smallest i first."""
    d = 0
    while True:
        top = d if n_rows is None else min(d, n_rows - 1)
        for i in range(top + 1):
            yield i, d - i
        d += 1


def dovetail_ticks(search: Callable[[int, int], bool]) -> Iterator:
    """Tick stream of every i for which ``search(i, s)`` holds for some s.

    Probes run along anti-diagonals; each i is emitted once, at its first
    successful probe.  Probes of already-emitted rows are skipped but still
    cost a tick so the schedule does not depend on outcomes.
    """
    done: set[int] = set()
    for i, s in antidiagonal():
        if i in done:
            yield TICK
        elif search(i, s):
            done.add(i)
            yield i
        else:
            yield TICK


def dovetail(search: Callable[[int, int], bool], fuel: int) -> Enumerator:
    return Enumerator(dovetail_ticks(search), fuel)


def explicit_ticks(items: Iterable) -> Iterator:
    for x in items:
        yield x


def interleave(*streams: Iterable) -> Iterator[tuple[int, object]]:
    """Round-robin over tick streams, yielding (stream index, tick)."""
    its = [iter(s) for s in streams]
    alive = list(range(len(its)))
    while alive:
        for k in list(alive):
            try:
                yield k, next(its[k])
            except StopIteration:
                alive.remove(k)


class LazyList:
    """Memoized prefix of an item stream (TICKs skipped), indexable by position."""

    def __init__(self, ticks: Iterable):
        self._it = iter(ticks)
        self.items: list = []
        self.ended = False

    def step(self) -> bool:
        """Advance one tick; True if a new item arrived."""
        if self.ended:
            return False
        try:
            x = next(self._it)
        except StopIteration:
            self.ended = True
            return False
        if x is TICK:
            return False
        self.items.append(x)
        return True

    def get(self, k: int, max_ticks: int | None = None):
        spent = 0
        while len(self.items) <= k:
            if self.ended or (max_ticks is not None and spent >= max_ticks):
                return None
            self.step()
            spent += 1
        return self.items[k]
