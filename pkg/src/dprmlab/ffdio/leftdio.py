"""Left-Diophantine approximation of real algebraic numbers.

For a polynomial p with a simple root alpha, oriented so that p > 0 just
left of alpha and p < 0 on (alpha, q2], the set X = {u : p(u) > 0, u < q2}
has supremum alpha.  X is enumerated along the tau listing of Q.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import count
from typing import Sequence

from dprmlab.kernel import TICK, Enumerator, StructuralError
from dprmlab.presentations.rationals import tau

Poly = tuple  # Fraction coefficients, lowest degree first


def _trim(cs) -> Poly:
    cs = [Fraction(c) for c in cs]
    while cs and cs[-1] == 0:
        cs.pop()
    return tuple(cs)


def peval(p: Poly, x) -> Fraction:
    v = Fraction(0)
    for a in reversed(p):
        v = v * x + a
    return v


def pderiv(p: Poly) -> Poly:
    return _trim(i * a for i, a in enumerate(p) if i)


def prem(a: Poly, b: Poly) -> Poly:
    a = list(a)
    while len(a) >= len(b) and a:
        f = a[-1] / b[-1]
        shift = len(a) - len(b)
        for i, c in enumerate(b):
            a[i + shift] -= f * c
        a = list(_trim(a))
    return tuple(a)


def sturm_sequence(p: Poly) -> list[Poly]:
    seq = [_trim(p), pderiv(p)]
    while seq[-1]:
        r = tuple(-c for c in prem(seq[-2], seq[-1]))
        if not r:
            break
        seq.append(r)
    return seq


def _sign_changes(seq, x) -> int:
    signs = [s for s in (peval(q, x) for q in seq) if s != 0]
    return sum(1 for a, b in zip(signs, signs[1:]) if (a > 0) != (b > 0))


def count_roots(seq, a, b) -> int:
    """Distinct real roots in (a, b]."""
    return _sign_changes(seq, a) - _sign_changes(seq, b)


def _sign(x) -> int:
    return (x > 0) - (x < 0)


@dataclass(frozen=True)
class AlgebraicReal:
    """The unique root of ``poly`` in (lo, hi], with p(lo) != 0."""

    poly: Poly
    lo: Fraction
    hi: Fraction

    def refine(self, width) -> "AlgebraicReal":
        lo, hi = self.lo, self.hi
        s_lo = _sign(peval(self.poly, lo))
        while hi - lo > width:
            mid = (lo + hi) / 2
            v = peval(self.poly, mid)
            if v == 0:
                return AlgebraicReal(self.poly, mid - width / 4, mid)
            if _sign(v) == s_lo:
                lo = mid
            else:
                hi = mid
        return AlgebraicReal(self.poly, lo, hi)


def l_alpha_member(q, alpha: AlgebraicReal) -> bool:
    """Exact test of q < alpha."""
    q = Fraction(q)
    if q <= alpha.lo:
        return True
    if q >= alpha.hi:
        return False
    v = peval(alpha.poly, q)
    if v == 0:
        return False
    return _sign(v) == _sign(peval(alpha.poly, alpha.lo))


@dataclass(frozen=True)
class LeftSetup:
    poly: Poly  # oriented: p(q2) < 0, p > 0 just left of alpha
    q1: Fraction
    q2: Fraction
    alpha: AlgebraicReal
    flipped: bool


def _cauchy_bound(p: Poly) -> Fraction:
    lead = p[-1]
    return 1 + max(abs(a / lead) for a in p[:-1]) if len(p) > 1 else Fraction(1)


def left_setup(minpoly: Sequence, q2) -> LeftSetup:
    """Orient p and isolate alpha, the largest root of p below q2."""
    p = _trim(minpoly)
    q2 = Fraction(q2)
    if len(p) < 2:
        raise StructuralError("need a nonconstant polynomial")
    flipped = False
    v2 = peval(p, q2)
    if v2 == 0:
        raise StructuralError("q2 is a root; choose q2 strictly above alpha")
    if v2 > 0:
        p, flipped = tuple(-c for c in p), True
    seq = sturm_sequence(p)
    low = -_cauchy_bound(p) - 1
    if count_roots(seq, low, q2) == 0:
        raise StructuralError("no real root below q2")
    lo, hi = low, q2
    # keep: a root in (lo, hi], none in (hi, q2]
    while count_roots(seq, lo, hi) > 1:
        mid = (lo + hi) / 2
        if count_roots(seq, mid, hi) >= 1:
            lo = mid
        else:
            hi = mid
    if peval(p, lo) == 0:
        lo -= (hi - lo) / 2 ** 20
    alpha = AlgebraicReal(p, lo, hi)
    # q1: a rational left of alpha with no root in [q1, alpha)
    q1 = lo
    # sign convention: p > 0 on [q1, alpha), p < 0 on (alpha, q2]
    probes = [q1, q2] + [q1 + (hi - q1) * k / 8 for k in range(1, 8)]
    for u in probes:
        val = peval(p, u)
        left = l_alpha_member(u, alpha)
        if (left and val <= 0) or (not left and u != hi and val >= 0 and peval(p, u) != 0):
            raise StructuralError(f"sign convention violated at u = {u}")
    if peval(p, q1) <= 0:
        raise StructuralError("sign convention violated left of alpha")
    return LeftSetup(p, q1, q2, alpha, flipped)


def leftdio_ticks(setup: LeftSetup):
    for n in count():
        u = tau(n)
        yield u if (u < setup.q2 and peval(setup.poly, u) > 0) else TICK


def leftdio_enumerate(minpoly: Sequence, q2, fuel: int) -> Enumerator:
    return Enumerator(leftdio_ticks(left_setup(minpoly, q2)), fuel)
