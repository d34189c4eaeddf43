"""Algorithms on presentations: E_rho, pullbacks, bijectivization,
equivalence by the diagonal test, transfer, and universal listings."""

from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from itertools import count
from typing import Callable, Sequence

from dprmlab.kernel import (
    TICK,
    Enumerator,
    LazyList,
    StructuralError,
    Unknown,
    Yes,
    cantor_unpair,
    tuple_decode,
)
from dprmlab.presentations.core import LeastCodeIndex, Presentation

log = logging.getLogger(__name__)


# ---- E_rho -------------------------------------------------------------

def e_rho_ticks(rho: Presentation):
    """Scan N^2 in Cantor order, emitting (m, n) with rho(m) = rho(n)."""
    for k in count():
        m, n = cantor_unpair(k)
        yield (m, n) if rho.equal(m, n) else TICK


def e_rho_enumerate(rho: Presentation, fuel: int) -> Enumerator:
    return Enumerator(e_rho_ticks(rho), fuel)


# ---- rho-pullbacks -----------------------------------------------------

def _pullback_probe(f, r, eps: LazyList, y: int, lag: int):
    """Check the matrix of the mu-search at y; return the x it witnesses or None.

    y codes (g0, g1..gr); the condition is f_j(g0) = eps_1(g_j) and
    eps_2(g_j) = x_j, where eps lists E_rho.  Each probe may advance the
    E_rho stream by at most ``lag`` ticks.
    """
    g = tuple_decode(y, r + 1)
    fx = f(g[0])
    if len(fx) != r:
        raise StructuralError(f"f returned {len(fx)} coordinates, expected {r}")
    x = []
    for j in range(r):
        e = eps.get(g[j + 1], lag)
        if e is None or e[0] != fx[j]:
            return None
        x.append(e[1])
    return tuple(x)


def rho_pullback_ticks(rho: Presentation, f: Callable[[int], Sequence[int]], r: int,
                       lag: int = 1 << 16):
    """Tick stream of rho^*(X) where rho o f lists X.

    phi(x) = mu y [f_j(g0(y)) = eps_1(g_j(y)) and eps_2(g_j(y)) = x_j] has
    rho^*(X) as its domain.  Each y witnesses exactly one x (read off from
    eps_2), so running the probes y = 0, 1, 2, ... once serves the
    mu-searches of every x at the same time; the first y that witnesses x
    is the value phi(x).
    """
    eps = LazyList(e_rho_ticks(rho))
    seen = set()
    for y in count():
        x = _pullback_probe(f, r, eps, y, lag)
        if x is None or x in seen:
            yield TICK
        else:
            seen.add(x)
            yield x


def rho_pullback_enumerator(rho: Presentation, f, r: int, fuel: int) -> Enumerator:
    return Enumerator(rho_pullback_ticks(rho, f, r), fuel)


def pullback_mu(rho: Presentation, f, r: int, x: Sequence[int], fuel: int):
    """phi(x) itself: the least y witnessing x, or Unknown."""
    eps = LazyList(e_rho_ticks(rho))
    x = tuple(x)
    for y in range(fuel):
        if _pullback_probe(f, r, eps, y, 1 << 16) == x:
            return Yes(y)
    return Unknown(fuel)


# ---- bijectivization ---------------------------------------------------

def bijectivize(rho: Presentation, fuel: int, upto: int | None = None) -> list[int]:
    """Prefix of h with rho o h bijective.

    h(0) = 0 and h(x) = mu y [sum_{j<x} chi_E(h(j), y) = 0].  Every y below
    h(x-1) already failed that test for a shorter history, so the search for
    h(x) can start at h(x-1) + 1 without changing its value.  ``fuel``
    counts E_rho decisions; running out returns the prefix built so far.
    """
    if not rho.e_decidable:
        raise StructuralError(f"bijectivize needs a decidable E_rho; {rho.name} has none")
    h = [0]
    spent = 0
    while upto is None or len(h) <= upto:
        y = h[-1] + 1
        while True:
            hit = False
            for hj in h:
                if spent >= fuel:
                    return h
                spent += 1
                if rho.equal(hj, y):
                    hit = True
                    break
            if not hit:
                break
            y += 1
        h.append(y)
    return h


def check_bijectivization(rho: Presentation, h: Sequence[int]) -> bool:
    """Re-verify a bijectivize prefix with fresh E_rho decisions.

    Distinctness: no two h(i) are E-equivalent.  Minimality: every y below
    h(x) that is not itself some h(j) must be E-equivalent to an h(j) with
    j < x; as h increases, that means to some h(j) < y.
    """
    if not h or h[0] != 0 or any(a >= b for a, b in zip(h, h[1:])):
        return False
    for x in range(1, len(h)):
        if any(rho.equal(h[j], h[x]) for j in range(x)):
            return False
    members = set(h)
    for y in range(h[-1]):
        if y in members:
            continue
        if not any(rho.equal(hj, y) for hj in h if hj < y):
            return False
    return True


# ---- diagonal test -----------------------------------------------------

def delta_ticks(gamma: Presentation, rho: Presentation):
    """Delta(gamma, rho) = {(m, n) : gamma(m) = rho(n)} in Cantor order."""
    eq = rho.structure.eq
    for k in count():
        m, n = cantor_unpair(k)
        yield (m, n) if eq(gamma.decode(m), rho.decode(n)) else TICK


def delta_enumerate(gamma: Presentation, rho: Presentation, fuel: int) -> Enumerator:
    return Enumerator(delta_ticks(gamma, rho), fuel)


class Translation:
    """phi(n) = f2(mu y [f1(y) = n]) for the listing f = (f1, f2) of Delta.

    ``mode="delta"`` walks the Delta enumeration literally.  ``mode="row"``
    uses that Cantor order lists the pairs (n, k) with fixed n by increasing
    k, so the first pair with first coordinate n carries the least k with
    rho(k) = gamma(n); that k is found by a least-code scan of rho.
    """

    def __init__(self, gamma: Presentation, rho: Presentation, mode: str = "row"):
        if mode not in ("row", "delta"):
            raise StructuralError(f"unknown translation mode {mode!r}")
        if gamma.structure is not rho.structure:
            raise StructuralError("presentations of different structures")
        self.gamma, self.rho, self.mode = gamma, rho, mode
        self._delta = LazyList(delta_ticks(gamma, rho))
        self._index = LeastCodeIndex(rho)

    def __call__(self, n: int, fuel: int):
        if self.mode == "row":
            k = self._index.lookup(self.gamma.decode(n), fuel)
            return Unknown(fuel) if k is None else Yes(k)
        pos = 0
        while True:
            item = self._delta.get(pos, fuel)
            if item is None:
                return Unknown(fuel)
            if item[0] == n:
                return Yes(item[1])
            pos += 1


def find_translation(gamma: Presentation, rho: Presentation, upto: int, fuel: int,
                     mode: str = "row") -> list:
    """[phi(0), ..., phi(upto)] as SemiDecisions."""
    phi = Translation(gamma, rho, mode)
    return [phi(n, fuel) for n in range(upto + 1)]


# ---- transfer along an interpretation ----------------------------------

def transfer_presentation(theta, rho: Presentation, f: Callable[[int], Sequence[int]],
                          name: str | None = None, max_skip: int = 10_000) -> Presentation:
    """gamma = theta o rho^(r) o f.

    Tuples from f outside rho^*(dom theta) are logged and skipped: gamma(n)
    uses the n-th tuple of f that lies in the domain.
    """
    r = theta.rank
    good: list[tuple] = []
    state = {"next": 0}

    def fill(n):
        while len(good) <= n:
            misses = 0
            while True:
                k = state["next"]
                state["next"] += 1
                codes = tuple(f(k))
                if len(codes) != r:
                    raise StructuralError(f"f({k}) has {len(codes)} coordinates, rank is {r}")
                vals = tuple(rho.decode(c) for c in codes)
                if theta.in_domain(vals):
                    good.append(vals)
                    break
                log.warning("transfer: f(%d) = %s lies outside the domain; skipped", k, codes)
                misses += 1
                if misses > max_skip:
                    raise StructuralError("f keeps producing tuples outside the domain")
        return good[n]

    def decode(n):
        return theta.apply(fill(n))

    return Presentation(name or f"{theta.name}({rho.name})", decode, theta.target)


# ---- universal listings ------------------------------------------------

@dataclass(frozen=True)
class UniversalListingData:
    """Data of the unique-listability criterion.

    ``seeds[n]`` is tau(n) for n <= c.  For n > c, ``part(n)`` picks the
    block A_i, ``h(n)`` gives r indices below n, and tau(n) = F_i(tau(h(n)))
    whenever tau(h(n)) lies in ``domains[i]``.
    """

    c: int
    r: int
    seeds: tuple
    h: Callable[[int], tuple]
    part: Callable[[int], int]
    F: tuple
    domains: tuple

    def listing(self, n: int):
        """tau_data(n), by the same recursion on values."""
        vals = list(self.seeds)
        if n < len(vals):
            return vals[n]
        cache: dict[int, object] = {}

        def go(m):
            if m <= self.c:
                return self.seeds[m]
            if m not in cache:
                i = self.part(m)
                cache[m] = self.F[i](*(go(k) for k in self.h(m)))
            return cache[m]

        return go(n)


def _q_h(n: int) -> tuple[int]:
    if n % 4 == 3:
        return ((n - 1) // 2,)
    if n % 4 == 0:
        return (n // 2,)
    return (max(0, n - 2),)


def _q_part(n: int) -> int:
    return {3: 0, 0: 1}.get(n % 4, 2)


def rational_listing_data() -> UniversalListingData:
    """Q with c = 2, seeds 0, 1, -1 and F = (x+1, x-1, 1/x) on n = 3, 0, {1,2} mod 4."""
    return UniversalListingData(
        c=2, r=1,
        seeds=(Fraction(0), Fraction(1), Fraction(-1)),
        h=_q_h, part=_q_part,
        F=(lambda x: x + 1, lambda x: x - 1, lambda x: 1 / x),
        domains=(lambda x: True, lambda x: True, lambda x: x != 0),
    )


def natural_listing_data() -> UniversalListingData:
    """N with c = 0, seed 0 and the single map x+1 applied to n-1."""
    return UniversalListingData(
        c=0, r=1, seeds=(0,),
        h=lambda n: (n - 1,), part=lambda n: 0,
        F=(lambda x: x + 1,), domains=(lambda x: True,),
    )


def graph_ticks(data: UniversalListingData, rho: Presentation, i: int):
    """rho-pullback of the graph of F_i: tuples (a0, a1..ar) in code order with
    rho(a0) = F_i(rho(a1), ..., rho(ar)) and the arguments in the domain."""
    F, dom, r = data.F[i], data.domains[i], data.r
    for y in count():
        a = tuple_decode(y, r + 1)
        args = tuple(rho.decode(x) for x in a[1:])
        if dom(*args) and rho.structure.eq(rho.decode(a[0]), F(*args)):
            yield tuple(a)
        else:
            yield TICK


class UniversalListing:
    """alpha(n) = f_{i0}(mu y [f_{ij}(y) = alpha(h_j(n)) for all j]) for n in A_i.

    Seeds alpha(n) for n <= c are least codes of tau(n).  ``mode="graph"``
    runs the mu-search over the graph enumerator literally.  ``mode="row"``
    uses that the graph is listed in increasing code order and the code of
    (a0, t) grows with a0 for fixed t, so the first hit is the least a0 with
    rho(a0) = F_i(rho(t)); it is read from a least-code scan of rho.
    """

    def __init__(self, data: UniversalListingData, rho: Presentation, mode: str = "row"):
        if mode not in ("row", "graph"):
            raise StructuralError(f"unknown universal-listing mode {mode!r}")
        self.data, self.rho, self.mode = data, rho, mode
        self.alpha: list[int] = []
        self._index = LeastCodeIndex(rho)
        self._graphs = [LazyList(graph_ticks(data, rho, i)) for i in range(len(data.F))]

    def _least(self, value, fuel):
        return self._index.lookup(value, fuel)

    def _next(self, fuel: int):
        n = len(self.alpha)
        d = self.data
        if n <= d.c:
            return self._least(d.seeds[n], fuel)
        i = d.part(n)
        targets = tuple(self.alpha[k] for k in d.h(n))
        if self.mode == "row":
            args = tuple(self.rho.decode(t) for t in targets)
            if not d.domains[i](*args):
                raise StructuralError(f"listing data violated at n={n}: argument outside domain")
            return self._least(d.F[i](*args), fuel)
        g = self._graphs[i]
        pos = 0
        while True:
            item = g.get(pos, fuel)
            if item is None:
                return None
            if item[1:] == targets:
                return item[0]
            pos += 1

    def __call__(self, n: int, fuel: int):
        while len(self.alpha) <= n:
            a = self._next(fuel)
            if a is None:
                return Unknown(fuel)
            self.alpha.append(a)
        return Yes(self.alpha[n])


def universal_listing_alpha(data: UniversalListingData, rho: Presentation, n: int,
                            fuel: int, mode: str = "row"):
    return UniversalListing(data, rho, mode)(n, fuel)
