"""Presentations rho: N -> M and the built-in registry."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from dprmlab.kernel import (
    StructuralError,
    Unknown,
    Yes,
    cantor_pair,
    cantor_unpair,
    unzigzag,
    zigzag,
)
from dprmlab.presentations.rationals import tau, tau_inverse
from dprmlab.presentations.structures import INT, NAT, RAT, StructureOracle, fpt


@dataclass(frozen=True, eq=False)
class Presentation:
    """A computable surjection onto the canonical elements of ``structure``.

    ``e_decide`` decides E_rho (two codes name the same element); when it
    is omitted, canonical equality of decoded values is used.  ``least_code``
    is an optional fast inverse returning the *least* code of an element;
    ``inverse_search`` falls back to a scan when it is absent.
    """

    name: str
    decode: Callable[[int], object]
    structure: StructureOracle
    e_decidable: bool = True
    e_decide: Callable[[int, int], bool] | None = None
    least_code: Callable[[object], int] | None = None
    bijective: bool = False

    def __call__(self, n: int):
        return self.decode(n)

    def equal(self, m: int, n: int) -> bool:
        if not self.e_decidable:
            raise StructuralError(f"E_rho is not decidable for {self.name}")
        if self.e_decide is not None:
            return self.e_decide(m, n)
        return self.structure.eq(self.decode(m), self.decode(n))

    def inverse_search(self, m, fuel: int):
        """Yes(n) with decode(n) = m, or Unknown after ``fuel`` decodes."""
        if self.least_code is not None:
            n = self.least_code(m)
            if n is not None and self.structure.eq(self.decode(n), m):
                return Yes(n)
        for n in range(fuel):
            if self.structure.eq(self.decode(n), m):
                return Yes(n)
        return Unknown(fuel)

    def __repr__(self):
        return f"Presentation({self.name!r})"


class LeastCodeIndex:
    """Least code of each value, found by scanning decode(0), decode(1), ...

    The scan is shared between lookups; ``limit`` bounds how far any single
    lookup may push it.
    """

    def __init__(self, rho: Presentation):
        self.rho = rho
        self.first: dict = {}
        self.scanned = 0

    def lookup(self, value, limit: int) -> int | None:
        if value in self.first:
            return self.first[value]
        while self.scanned < limit:
            v = self.rho.decode(self.scanned)
            self.first.setdefault(v, self.scanned)
            self.scanned += 1
            if v == value:
                return self.scanned - 1
        return None


# ---- built-ins ---------------------------------------------------------

def _nat_id() -> Presentation:
    return Presentation("nat-id", lambda n: n, NAT, least_code=lambda m: m, bijective=True)


def _int_zigzag() -> Presentation:
    return Presentation("int-zigzag", zigzag, INT, least_code=unzigzag, bijective=True)


def _int_pairs_decode(n: int) -> int:
    a, b = cantor_unpair(n)
    return a - b


def _int_pairs_least(z: int) -> int:
    # pair(a, b) grows with a + b, and along a fixed sum with b
    return cantor_pair(z, 0) if z >= 0 else cantor_pair(0, -z)


def _int_pairs() -> Presentation:
    return Presentation("int-pairs", _int_pairs_decode, INT, least_code=_int_pairs_least)


def _rat_tau() -> Presentation:
    return Presentation("rat-tau", tau, RAT, least_code=tau_inverse, bijective=True)


def rat_pair_raw(n: int) -> tuple[int, int]:
    """Code n -> (a, b) with b >= 1, via (i, j) = unpair(n), a = zigzag(i), b = j + 1."""
    i, j = cantor_unpair(n)
    return zigzag(i), j + 1


def rat_pair_code(a: int, b: int) -> int:
    if b < 1:
        raise ValueError("denominator must be positive")
    return cantor_pair(unzigzag(a), b - 1)


def _rat_pairs_decode(n: int) -> Fraction:
    a, b = rat_pair_raw(n)
    return Fraction(a, b)


def _rat_pairs_eq(m: int, n: int) -> bool:
    a, b = rat_pair_raw(m)
    c, d = rat_pair_raw(n)
    return a * d == c * b


def _rat_pairs_least(r) -> int:
    r = Fraction(r)
    return rat_pair_code(r.numerator, r.denominator)


def _rat_pairs() -> Presentation:
    return Presentation(
        "rat-pairs", _rat_pairs_decode, RAT,
        e_decide=_rat_pairs_eq, least_code=_rat_pairs_least,
    )


def monic_by_index(p: int, j: int):
    """j-th monic polynomial over F_p: degree blocks of size p^d, low digits first."""
    from dprmlab.ffdio.poly import FpPoly

    d = 0
    while j >= p**d:
        j -= p**d
        d += 1
    digits = []
    for _ in range(d):
        j, r = divmod(j, p)
        digits.append(r)
    return FpPoly(p, digits + [1])


def poly_by_index(p: int, i: int):
    from dprmlab.ffdio.poly import FpPoly

    digits = []
    while i:
        i, r = divmod(i, p)
        digits.append(r)
    return FpPoly(p, digits)


def poly_index(f) -> int:
    return sum(a * f.p**k for k, a in enumerate(f.c))


def monic_index(f) -> int:
    d = f.deg
    offset = sum(f.p**e for e in range(d))
    return offset + sum(a * f.p**k for k, a in enumerate(f.c[:-1]))


def _fp_ratfun(p: int) -> Presentation:
    from dprmlab.ffdio.poly import FpRatFun

    def decode(n):
        i, j = cantor_unpair(n)
        return FpRatFun(poly_by_index(p, i), monic_by_index(p, j))

    def code(f):
        # a code of f, not necessarily the least; inverse_search checks it
        return cantor_pair(poly_index(f.num), monic_index(f.den))

    return Presentation(f"fp-ratfun:{p}", decode, fpt(p), least_code=code)


_BUILTIN = {
    "nat-id": _nat_id,
    "int-zigzag": _int_zigzag,
    "int-pairs": _int_pairs,
    "rat-tau": _rat_tau,
    "rat-pairs": _rat_pairs,
}
_CACHE: dict[str, Presentation] = {}


def registry_names() -> list[str]:
    return sorted(_BUILTIN) + ["fp-ratfun:p"]


def get_presentation(name: str) -> Presentation:
    if name in _CACHE:
        return _CACHE[name]
    if name in _BUILTIN:
        pres = _BUILTIN[name]()
    elif name.startswith("fp-ratfun:"):
        tail = name.split(":", 1)[1]
        if not tail.isdigit():
            raise StructuralError(f"bad prime in {name!r}")
        pres = _fp_ratfun(int(tail))
    else:
        raise StructuralError(f"unknown presentation {name!r}; known: {registry_names()}")
    _CACHE[name] = pres
    return pres


def permuted(rho: Presentation, sigma: Callable[[int], int], sigma_inv: Callable[[int], int],
             name: str | None = None) -> Presentation:
    """rho o sigma for a computable permutation sigma of N."""
    least = None
    if rho.bijective and rho.least_code is not None:
        least = lambda m: sigma_inv(rho.least_code(m))  # noqa: E731
    e = None
    if rho.e_decide is not None:
        e = lambda m, n: rho.e_decide(sigma(m), sigma(n))  # noqa: E731
    return Presentation(
        name or f"{rho.name}*sigma", lambda n: rho.decode(sigma(n)), rho.structure,
        e_decidable=rho.e_decidable, e_decide=e, least_code=least, bijective=rho.bijective,
    )


def swap_pairs(n: int) -> int:
    """The involution 2k <-> 2k+1; used as the fixed test permutation of N."""
    return n ^ 1
