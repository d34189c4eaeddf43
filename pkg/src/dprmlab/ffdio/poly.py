"""Exact arithmetic in F_p[t] and F_p(t).

Polynomials are immutable tuples of coefficients, lowest degree first,
with no trailing zeros (the zero polynomial is the empty tuple).
"""

from __future__ import annotations

import re
from functools import total_ordering

from dprmlab.kernel import StructuralError


def _is_prime(p: int) -> bool:
    return p >= 2 and all(p % d for d in range(2, int(p**0.5) + 1))


def _trim(cs) -> tuple:
    cs = list(cs)
    while cs and cs[-1] == 0:
        cs.pop()
    return tuple(cs)


@total_ordering
class FpPoly:
    __slots__ = ("p", "c")

    def __init__(self, p: int, coeffs=()):
        if not _is_prime(p):
            raise StructuralError(f"{p} is not a prime")
        self.p = p
        self.c = _trim(int(a) % p for a in coeffs)

    # construction helpers
    @classmethod
    def const(cls, p, a):
        return cls(p, (a,))

    @classmethod
    def monomial(cls, p, n, a=1):
        return cls(p, (0,) * n + (a,))

    @classmethod
    def t(cls, p):
        return cls.monomial(p, 1)

    def _mk(self, cs):
        out = FpPoly.__new__(FpPoly)
        out.p = self.p
        out.c = _trim(cs)
        return out

    def _coerce(self, other):
        if isinstance(other, FpPoly):
            if other.p != self.p:
                raise StructuralError("characteristic mismatch")
            return other
        if isinstance(other, int):
            return FpPoly(self.p, (other,))
        return NotImplemented

    @property
    def deg(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.c) - 1

    def is_zero(self) -> bool:
        return not self.c

    def lead(self) -> int:
        return self.c[-1] if self.c else 0

    def coeff(self, i: int) -> int:
        return self.c[i] if 0 <= i < len(self.c) else 0

    def ord0(self) -> int | None:
        """Order of vanishing at t = 0 (None for zero)."""
        for i, a in enumerate(self.c):
            if a:
                return i
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        n = max(len(self.c), len(other.c))
        return self._mk((self.coeff(i) + other.coeff(i)) % self.p for i in range(n))

    __radd__ = __add__

    def __neg__(self):
        return self._mk((-a) % self.p for a in self.c)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if not self.c or not other.c:
            return self._mk(())
        out = [0] * (len(self.c) + len(other.c) - 1)
        for i, a in enumerate(self.c):
            if a:
                for j, b in enumerate(other.c):
                    out[i + j] += a * b
        return self._mk(x % self.p for x in out)

    __rmul__ = __mul__

    def scale(self, a: int):
        return self._mk((a * x) % self.p for x in self.c)

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative exponent for a polynomial")
        result = FpPoly(self.p, (1,))
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def frobenius(self, s: int = 1):
        """f(t)^(p^s): coefficients are fixed by Frobenius on F_p."""
        step = self.p**s
        out = [0] * (step * self.deg + 1) if self.c else []
        for i, a in enumerate(self.c):
            out[i * step] = a
        return self._mk(out)

    def divmod(self, other):
        other = self._coerce(other)
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        p = self.p
        r = list(self.c)
        inv = pow(other.lead(), p - 2, p)
        dq = len(r) - len(other.c)
        if dq < 0:
            return self._mk(()), self
        q = [0] * (dq + 1)
        for k in range(dq, -1, -1):
            a = r[k + other.deg] * inv % p
            q[k] = a
            if a:
                for j, b in enumerate(other.c):
                    r[k + j] = (r[k + j] - a * b) % p
        return self._mk(q), self._mk(r)

    def __floordiv__(self, other):
        return self.divmod(other)[0]

    def __mod__(self, other):
        return self.divmod(other)[1]

    def monic(self):
        if self.is_zero():
            return self
        return self.scale(pow(self.lead(), self.p - 2, self.p))

    def gcd(self, other):
        a, b = self, self._coerce(other)
        while not b.is_zero():
            a, b = b, a % b
        return a.monic()

    def derivative(self):
        return self._mk((i * a) % self.p for i, a in enumerate(self.c) if i > 0)

    def __call__(self, x: int) -> int:
        v = 0
        for a in reversed(self.c):
            v = (v * x + a) % self.p
        return v

    def __eq__(self, other):
        if isinstance(other, int):
            other = FpPoly(self.p, (other,))
        if not isinstance(other, FpPoly):
            return NotImplemented
        return self.p == other.p and self.c == other.c

    def __lt__(self, other):
        return (self.p, len(self.c), self.c[::-1]) < (other.p, len(other.c), other.c[::-1])

    def __hash__(self):
        return hash((self.p, self.c))

    def __repr__(self):
        return f"FpPoly({self.p}, {list(self.c)})"

    def __str__(self):
        return format_poly(self)


def format_poly(f: FpPoly, var: str = "t") -> str:
    if f.is_zero():
        return "0"
    terms = []
    for i, a in enumerate(f.c):
        if not a:
            continue
        if i == 0:
            terms.append(str(a))
            continue
        mono = var if i == 1 else f"{var}^{i}"
        terms.append(mono if a == 1 else f"{a}*{mono}")
    return " + ".join(terms)


@total_ordering
class FpRatFun:
    """num/den in lowest terms with monic denominator; zero is 0/1."""

    __slots__ = ("num", "den")

    def __init__(self, num: FpPoly, den: FpPoly | None = None):
        if den is None:
            den = FpPoly(num.p, (1,))
        if num.p != den.p:
            raise StructuralError("characteristic mismatch")
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        if num.is_zero():
            self.num, self.den = num, FpPoly(num.p, (1,))
            return
        g = num.gcd(den)
        num, den = num // g, den // g
        inv = pow(den.lead(), num.p - 2, num.p)
        self.num, self.den = num.scale(inv), den.scale(inv)

    @property
    def p(self) -> int:
        return self.num.p

    @classmethod
    def from_coeffs(cls, p, num, den=(1,)):
        return cls(FpPoly(p, num), FpPoly(p, den))

    @classmethod
    def const(cls, p, a):
        return cls(FpPoly(p, (a,)))

    @classmethod
    def t(cls, p):
        return cls(FpPoly.t(p))

    def _coerce(self, other):
        if isinstance(other, FpRatFun):
            return other
        if isinstance(other, FpPoly):
            return FpRatFun(other)
        if isinstance(other, int):
            return FpRatFun.const(self.p, other)
        return NotImplemented

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return FpRatFun(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        return FpRatFun(-self.num, self.den)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return FpRatFun(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def inverse(self):
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero")
        return FpRatFun(self.den, self.num)

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __rtruediv__(self, other):
        return self._coerce(other) * self.inverse()

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        return FpRatFun(self.num**n, self.den**n)

    def frobenius(self, s: int = 1):
        return FpRatFun(self.num.frobenius(s), self.den.frobenius(s))

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self.num == other.num and self.den == other.den

    def __lt__(self, other):
        return (self.num, self.den) < (other.num, other.den)

    def __hash__(self):
        return hash((self.num, self.den))

    def height(self) -> int:
        return max(self.num.deg, self.den.deg)

    def __repr__(self):
        return f"FpRatFun({self.p}, {list(self.num.c)}, {list(self.den.c)})"

    def __str__(self):
        if self.den.deg == 0:
            return format_poly(self.num)
        n, d = format_poly(self.num), format_poly(self.den)
        if len(self.num.c) - self.num.c.count(0) > 1:
            n = f"({n})"
        if len(self.den.c) - self.den.c.count(0) > 1:
            d = f"({d})"
        return f"{n}/{d}"


def t_adic_ord(f) -> int | float:
    """t-adic valuation; +inf for zero."""
    if isinstance(f, FpPoly):
        f = FpRatFun(f)
    if f.is_zero():
        return float("inf")
    return f.num.ord0() - f.den.ord0()


_POLY = re.compile(r"^\s*poly\s+p\s*=\s*(\d+)\s*\[([^\]]*)\]\s*$")


def parse_poly(text: str) -> FpPoly:
    """``poly p=3 [1,0,2]`` is 1 + 2t^2."""
    m = _POLY.match(text)
    if not m:
        raise StructuralError(f"cannot parse polynomial {text!r}")
    body = m.group(2).strip()
    coeffs = [int(x) for x in body.split(",")] if body else []
    return FpPoly(int(m.group(1)), coeffs)


def parse_ratfun(text: str) -> FpRatFun:
    """``poly p=3 [0,1] / poly p=3 [1,1]``; a lone polynomial is also accepted."""
    parts = text.split("/")
    if len(parts) == 1:
        return FpRatFun(parse_poly(parts[0]))
    if len(parts) != 2:
        raise StructuralError(f"cannot parse rational function {text!r}")
    return FpRatFun(parse_poly(parts[0]), parse_poly(parts[1]))


def format_ratfun_coeffs(f: FpRatFun) -> str:
    return f"poly p={f.p} {list(f.num.c)} / poly p={f.p} {list(f.den.c)}"
