"""Goedel numbering and universal evaluation.

Codes are built from Cantor pairs ``<tag, payload>``:

    Zero(k)          <0, k>
    Succ             <1, 0>
    Proj(i, k)       <2, <i, k>>
    Compose(g, hs)   <3, <code g, list code of hs>>
    PrimRec(b, s)    <4, <code b, code s>>
    Mu(b)            <5, code b>

Decoding is total: anything that is not the code of a well-formed
expression (unknown tag, bad payload, arity clash) decodes to
``diverging(1)``.  Code 0 is ``<0, 0>`` = ``Zero(0)``.
"""

from __future__ import annotations

from functools import lru_cache

from dprmlab.kernel import (
    Budget,
    StructuralError,
    cantor_pair,
    cantor_unpair,
    list_decode,
    list_encode,
)
from dprmlab.recfun.evaluate import EvalOutcome, Exhausted, eval_expr
from dprmlab.recfun.expr import (
    Compose,
    Mu,
    PrimRec,
    Proj,
    RecFun,
    Succ,
    Zero,
    diverging,
    is_well_formed,
)

FALLBACK = diverging(1)


def godel_encode(f: RecFun) -> int:
    if isinstance(f, Zero):
        return cantor_pair(0, f.n)
    if isinstance(f, Succ):
        return cantor_pair(1, 0)
    if isinstance(f, Proj):
        return cantor_pair(2, cantor_pair(f.index, f.n))
    if isinstance(f, Compose):
        inner = list_encode(godel_encode(h) for h in f.inners)
        return cantor_pair(3, cantor_pair(godel_encode(f.outer), inner))
    if isinstance(f, PrimRec):
        return cantor_pair(4, cantor_pair(godel_encode(f.base), godel_encode(f.step)))
    if isinstance(f, Mu):
        return cantor_pair(5, godel_encode(f.body))
    raise StructuralError(f"not a RecFun node: {f!r}")


class _Invalid(Exception):
    pass


def _decode(n: int) -> RecFun:
    tag, payload = cantor_unpair(n)
    if tag == 0:
        return Zero(payload)
    if tag == 1:
        if payload != 0:
            raise _Invalid
        return Succ()
    if tag == 2:
        i, k = cantor_unpair(payload)
        return Proj(i, k)
    if tag == 3:
        g, hs = cantor_unpair(payload)
        inners = tuple(_decode(h) for h in list_decode(hs))
        if not inners:
            raise _Invalid
        return Compose(_decode(g), inners)
    if tag == 4:
        b, s = cantor_unpair(payload)
        return PrimRec(_decode(b), _decode(s))
    if tag == 5:
        return Mu(_decode(payload))
    raise _Invalid


@lru_cache(maxsize=512)
def godel_decode(n: int) -> RecFun:
    """Program with code n; decoding huge codes is slow, so results are cached."""
    try:
        f = _decode(n)
    except (_Invalid, RecursionError):
        return FALLBACK
    return f if is_well_formed(f) else FALLBACK


def eval_universal(e: int, args, budget: int | Budget) -> EvalOutcome:
    """Run program number ``e``; decoding is free, evaluation is charged as in eval_expr.

    A program whose arity does not match ``len(args)`` is treated as the
    everywhere-diverging function of the right arity.
    """
    args = tuple(args)
    f = godel_decode(e)
    if f.arity != len(args):
        f = diverging(len(args))
    return eval_expr(f, args, budget)


def is_exhausted(out: EvalOutcome) -> bool:
    return isinstance(out, Exhausted)
