"""Digit automata (least significant digit first) and counting functions."""

from __future__ import annotations

from bisect import bisect_right
from dataclasses import dataclass
from typing import Hashable, Mapping, Sequence

from dprmlab.kernel import StructuralError


def digits_lsb(n: int, base: int) -> list[int]:
    """Base-``base`` digits of n, least significant first; 0 has no digits."""
    out = []
    while n:
        n, r = divmod(n, base)
        out.append(r)
    return out


@dataclass(frozen=True)
class DigitAutomaton:
    base: int
    states: tuple
    delta: Mapping[tuple[Hashable, int], Hashable]
    initial: Hashable
    accepting: frozenset

    def __post_init__(self):
        for s in self.states:
            for d in range(self.base):
                if self.delta.get((s, d)) not in self.states:
                    raise StructuralError(f"transition from {s!r} on {d} is missing")
        if self.initial not in self.states or not self.accepting <= set(self.states):
            raise StructuralError("initial/accepting states must be states")

    def run(self, digits: Sequence[int]):
        s = self.initial
        for d in digits:
            s = self.delta[(s, d)]
        return s

    def accepts(self, n: int) -> bool:
        return self.run(digits_lsb(n, self.base)) in self.accepting

    def zero_invariant(self, max_len: int = 6) -> bool:
        """Appending high-order zeros never changes acceptance (checked on all
        digit strings up to ``max_len``)."""
        from itertools import product

        for k in range(max_len + 1):
            for ds in product(range(self.base), repeat=k):
                a = self.run(ds) in self.accepting
                if (self.run(ds + (0,)) in self.accepting) != a:
                    return False
        return True


def multiples_automaton(m: int, base: int) -> DigitAutomaton:
    """Multiples of m: track (value mod m, base^position mod m)."""
    states = []
    delta = {}
    w0 = 1 % m
    todo = [(0, w0)]
    seen = {(0, w0)}
    while todo:
        r, w = todo.pop()
        states.append((r, w))
        for d in range(base):
            nxt = ((r + d * w) % m, (w * base) % m)
            delta[((r, w), d)] = nxt
            if nxt not in seen:
                seen.add(nxt)
                todo.append(nxt)
    states.sort()
    return DigitAutomaton(base, tuple(states), delta, (0, w0),
                          frozenset(s for s in states if s[0] == 0))


def powers_of_base_automaton(base: int) -> DigitAutomaton:
    """{base^k}: digit strings 0...01 followed by any number of high zeros."""
    delta = {}
    for d in range(base):
        delta[("A", d)] = "A" if d == 0 else ("B" if d == 1 else "dead")
        delta[("B", d)] = "B" if d == 0 else "dead"
        delta[("dead", d)] = "dead"
    return DigitAutomaton(base, ("A", "B", "dead"), delta, "A", frozenset({"B"}))


def count_accepted(M: DigitAutomaton, x: int) -> int:
    """#{0 <= n <= x : M accepts n} by a digit DP over the digits of x.

    Shorter numbers are padded with high zeros, which is harmless for
    zero-invariant automata (the built-ins are).
    """
    if x < 0:
        return 0
    xd = digits_lsb(x, M.base)
    # state -> count, split by comparison of the low part with x's low part
    table = {(M.initial, "eq"): 1}
    for xi in xd:
        nxt: dict = {}
        for (s, cmp), cnt in table.items():
            for d in range(M.base):
                c = "lt" if d < xi else ("gt" if d > xi else cmp)
                key = (M.delta[(s, d)], c)
                nxt[key] = nxt.get(key, 0) + cnt
        table = nxt
    return sum(cnt for (s, cmp), cnt in table.items() if cmp != "gt" and s in M.accepting)


def counting(A, x: int) -> int:
    """N(A, x) = #{n in A : n <= x} for an automaton or a sorted list."""
    if isinstance(A, DigitAutomaton):
        return count_accepted(A, x)
    return bisect_right(list(A), x)
