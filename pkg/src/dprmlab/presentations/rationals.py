"""The bijections q: Z_{>0} -> Q_{>0} and tau: N -> Q, with their inverses."""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence


def q_pos(n: int) -> Fraction:
    """q(1) = 1, q(2m) = q(m) + 1, q(2m+1) = 1 / q(2m)."""
    if n < 1:
        raise ValueError("q_pos is defined for n >= 1")
    ops = []
    while n > 1:
        if n % 2 == 0:
            ops.append("S")
            n //= 2
        else:
            ops.append("R")
            n -= 1
    x = Fraction(1)
    for op in reversed(ops):
        x = x + 1 if op == "S" else 1 / x
    return x


def tau(n: int) -> Fraction:
    """tau(0)=0, tau(1)=1, tau(2)=-1; for n >= 3 by residue of n mod 4:
    3 -> tau((n-1)/2) + 1, 0 -> tau(n/2) - 1, 1 or 2 -> 1 / tau(n-2)."""
    if n < 0:
        raise ValueError("tau is defined on N")
    ops = []
    while n >= 3:
        r = n % 4
        if r == 3:
            ops.append(1)
            n = (n - 1) // 2
        elif r == 0:
            ops.append(-1)
            n //= 2
        else:
            ops.append(0)
            n -= 2
    x = (Fraction(0), Fraction(1), Fraction(-1))[n]
    for op in reversed(ops):
        if op == 0:
            # never hit for n >= 3: tau(n-2) != 0 since n-2 >= 1
            assert x != 0, "tau recurrence divided by zero"
            x = 1 / x
        else:
            x = x + op
    return x


def tau_table(upto: int) -> list[Fraction]:
    """[tau(0), ..., tau(upto)] by the same recurrence, bottom-up."""
    out = [Fraction(0), Fraction(1), Fraction(-1)][: upto + 1]
    for n in range(3, upto + 1):
        r = n % 4
        if r == 3:
            out.append(out[(n - 1) // 2] + 1)
        elif r == 0:
            out.append(out[n // 2] - 1)
        else:
            out.append(1 / out[n - 2])
    return out


def continued_fraction(r: Fraction) -> list[int]:
    """Expansion [a0; a1, ..., ad] of r > 0 with d >= 1 and ad = 1."""
    r = Fraction(r)
    if r <= 0:
        raise ValueError("continued_fraction needs r > 0")
    terms = []
    num, den = r.numerator, r.denominator
    while den:
        a, rem = divmod(num, den)
        terms.append(a)
        num, den = den, rem
    if len(terms) == 1:
        return [terms[0] - 1, 1]
    terms[-1] -= 1
    terms.append(1)
    return terms


def cf_value(terms: Sequence[int]) -> Fraction:
    x = Fraction(terms[-1])
    for a in reversed(terms[:-1]):
        x = a + 1 / x
    return x


def cf_encode(terms: Sequence[int]) -> int:
    """n = 2^{a0} (2^{a1} ( ... (2^{a_{d-1}} + 1) ... ) + 1)."""
    terms = list(terms)
    if len(terms) < 2:
        raise ValueError("need at least two terms [a0; ..., ad] with d >= 1")
    if terms[0] < 0 or any(a < 1 for a in terms[1:]):
        raise ValueError("need a0 >= 0 and aj >= 1 for j >= 1")
    if terms[-1] != 1:
        raise ValueError("last term must be 1")
    v = 1
    for a in reversed(terms[1:-1]):
        v = (v << a) + 1
    return v << terms[0]


def tau_inverse(r) -> int:
    r = Fraction(r)
    if r == 0:
        return 0
    k = cf_encode(continued_fraction(abs(r)))
    return 2 * k - 1 if r > 0 else 2 * k
