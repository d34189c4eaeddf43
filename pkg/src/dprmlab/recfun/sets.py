"""Listable subsets of N^r and their closure operations.

A set is anything with an ``arity`` and a ``ticks()`` method returning a
fresh tick stream of r-tuples.  Closure operations build new sets whose
streams are deterministic functions of their operands' streams, so every
prefix is reproducible.
"""

from __future__ import annotations

from typing import Callable, Iterable, Sequence

from dprmlab.kernel import (
    TICK,
    Enumerator,
    StructuralError,
    antidiagonal,
    interleave,
    tuple_decode,
)
from dprmlab.recfun.evaluate import HaltingCache, eval_expr
from dprmlab.recfun.expr import RecFun
from dprmlab.recfun.godel import eval_universal


class ListableSet:
    arity: int

    def ticks(self) -> Iterable:
        raise NotImplementedError

    def enumerate(self, fuel: int) -> Enumerator:
        return Enumerator(self.ticks(), fuel)

    def prefix(self, fuel: int) -> list[tuple]:
        return self.enumerate(fuel).prefix()


class DomainOf(ListableSet):
    """dom(f) for a partial recursive f of arity r >= 1."""

    def __init__(self, f: RecFun):
        f.check()
        if f.arity < 1:
            raise StructuralError("DomainOf needs arity >= 1")
        self.f = f
        self.arity = f.arity

    def ticks(self):
        caches: dict[int, HaltingCache] = {}
        done: set[int] = set()
        for i, s in antidiagonal():
            if i in done:
                yield TICK
                continue
            if i not in caches:
                x = tuple(tuple_decode(i, self.arity))
                caches[i] = HaltingCache(lambda b, x=x: eval_expr(self.f, x, b))
            if caches[i].halts_within(s):
                done.add(i)
                del caches[i]
                yield tuple(tuple_decode(i, self.arity))
            else:
                yield TICK


class ImageOf(ListableSet):
    """Image of n -> (f_1(n), ..., f_r(n)) for total unary programs f_j."""

    def __init__(self, fns: Sequence[RecFun]):
        if not fns:
            raise StructuralError("ImageOf needs at least one function")
        for f in fns:
            f.check()
            if f.arity != 1:
                raise StructuralError("ImageOf functions must be unary")
        self.fns = tuple(fns)
        self.arity = len(fns)

    def ticks(self):
        seen: set[tuple] = set()
        done: set[int] = set()
        for n, s in antidiagonal():
            if n in done:
                yield TICK
                continue
            outs = [eval_expr(f, (n,), s) for f in self.fns]
            if all(hasattr(o, "value") for o in outs):
                done.add(n)
                t = tuple(o.value for o in outs)
                if t not in seen:
                    seen.add(t)
                    yield t
                    continue
            yield TICK


class Explicit(ListableSet):
    """Set given directly by a factory of tick streams (possibly empty)."""

    def __init__(self, factory: Callable[[], Iterable], arity: int):
        self.factory = factory
        self.arity = arity

    def ticks(self):
        seen: set[tuple] = set()
        for x in self.factory():
            if x is TICK:
                yield TICK
                continue
            t = x if isinstance(x, tuple) else (x,)
            if len(t) != self.arity:
                raise StructuralError(f"item {t} does not have arity {self.arity}")
            if t in seen:
                yield TICK
            else:
                seen.add(t)
                yield t

    @classmethod
    def empty(cls, arity: int = 1) -> "Explicit":
        return cls(lambda: iter(()), arity)

    @classmethod
    def from_predicate(cls, pred: Callable[[int], bool], arity: int = 1) -> "Explicit":
        """Decidable set: scan codes 0, 1, 2, ... of N^arity."""

        def gen():
            n = 0
            while True:
                t = tuple(tuple_decode(n, arity))
                yield t if pred(*t) else TICK
                n += 1

        return cls(gen, arity)


class _Derived(ListableSet):
    def __init__(self, arity: int, make):
        self.arity = arity
        self._make = make

    def ticks(self):
        return self._make()


def _require_same_arity(sets):
    ks = {s.arity for s in sets}
    if len(ks) != 1:
        raise StructuralError(f"arity mismatch: {sorted(ks)}")


def set_union(*sets: ListableSet) -> ListableSet:
    _require_same_arity(sets)

    def gen():
        seen = set()
        for _, x in interleave(*(s.ticks() for s in sets)):
            if x is TICK or x in seen:
                yield TICK
            else:
                seen.add(x)
                yield x

    return _Derived(sets[0].arity, gen)


def set_intersect(*sets: ListableSet) -> ListableSet:
    _require_same_arity(sets)

    def gen():
        seen = [set() for _ in sets]
        emitted = set()
        for k, x in interleave(*(s.ticks() for s in sets)):
            if x is TICK:
                yield TICK
                continue
            seen[k].add(x)
            if x not in emitted and all(x in sk for sk in seen):
                emitted.add(x)
                yield x
            else:
                yield TICK

    return _Derived(sets[0].arity, gen)


def set_product(a: ListableSet, b: ListableSet) -> ListableSet:
    def gen():
        got_a: list[tuple] = []
        got_b: list[tuple] = []
        for k, x in interleave(a.ticks(), b.ticks()):
            if x is TICK:
                yield TICK
                continue
            if k == 0:
                got_a.append(x)
                batch = [x + y for y in got_b]
            else:
                got_b.append(x)
                batch = [y + x for y in got_a]
            if not batch:
                yield TICK
            yield from batch

    return _Derived(a.arity + b.arity, gen)


def set_project(a: ListableSet, coords: Sequence[int]) -> ListableSet:
    """Keep (and reorder) the given coordinates; also covers permutations."""
    coords = tuple(coords)
    if not coords or any(not 0 <= c < a.arity for c in coords):
        raise StructuralError(f"bad coordinates {coords} for arity {a.arity}")

    def gen():
        seen = set()
        for x in a.ticks():
            if x is TICK:
                yield TICK
                continue
            y = tuple(x[c] for c in coords)
            if y in seen:
                yield TICK
            else:
                seen.add(y)
                yield y

    return _Derived(len(coords), gen)


def set_permute(a: ListableSet, perm: Sequence[int]) -> ListableSet:
    if sorted(perm) != list(range(a.arity)):
        raise StructuralError(f"{perm} is not a permutation of {a.arity} coordinates")
    return set_project(a, perm)


def _check_fns(fns, arity):
    for f in fns:
        f.check()
        if f.arity != arity:
            raise StructuralError(f"function arity {f.arity}, expected {arity}")


def set_image(fns: Sequence[RecFun], a: ListableSet) -> ListableSet:
    """f(A) for a tuple of programs f = (f_1..f_k), each of arity a.arity.

    Evaluation budgets are dovetailed against the arrival order of A, so a
    program that runs out of budget only delays (never breaks) the stream.
    """
    fns = tuple(fns)
    _check_fns(fns, a.arity)

    def gen():
        src = a.ticks()
        rows: list[tuple] = []
        done: set[int] = set()
        seen: set[tuple] = set()
        sched = antidiagonal()
        src_alive = True
        while True:
            if src_alive:
                try:
                    x = next(src)
                except StopIteration:
                    src_alive = False
                    x = TICK
                if x is not TICK:
                    rows.append(x)
                yield TICK
            k, s = next(sched)
            if k >= len(rows) or k in done:
                if not src_alive and len(done) == len(rows) and k >= len(rows):
                    return
                yield TICK
                continue
            outs = [eval_expr(f, rows[k], s) for f in fns]
            if all(hasattr(o, "value") for o in outs):
                done.add(k)
                t = tuple(o.value for o in outs)
                if t not in seen:
                    seen.add(t)
                    yield t
                    continue
            yield TICK

    return _Derived(len(fns), gen)


def set_preimage(fns: Sequence[RecFun], b: ListableSet, arity: int) -> ListableSet:
    """f^{-1}(B) for programs f_1..f_k of the given source arity."""
    fns = tuple(fns)
    if len(fns) != b.arity:
        raise StructuralError(f"{len(fns)} functions but target arity {b.arity}")
    _check_fns(fns, arity)

    def gen():
        src = b.ticks()
        in_b: set[tuple] = set()
        pending: dict[tuple, list[tuple]] = {}
        done: set[int] = set()
        emitted: set[tuple] = set()
        for i, s in antidiagonal():
            # one tick of B, one evaluation probe
            x = next(src, TICK)
            if x is not TICK:
                in_b.add(x)
                for row in pending.pop(x, []):
                    if row not in emitted:
                        emitted.add(row)
                        yield row
            if i in done:
                yield TICK
                continue
            row = tuple(tuple_decode(i, arity))
            outs = [eval_expr(f, row, s) for f in fns]
            if not all(hasattr(o, "value") for o in outs):
                yield TICK
                continue
            done.add(i)
            val = tuple(o.value for o in outs)
            if val in in_b:
                emitted.add(row)
                yield row
            else:
                pending.setdefault(val, []).append(row)
                yield TICK

    return _Derived(arity, gen)


def halting_ticks():
    """Tick stream of H = {x : program x halts on input x}."""
    caches: dict[int, HaltingCache] = {}
    done: set[int] = set()
    for x, s in antidiagonal():
        if x in done:
            yield TICK
            continue
        if x not in caches:
            caches[x] = HaltingCache(lambda b, x=x: eval_universal(x, (x,), b))
        if caches[x].halts_within(s):
            done.add(x)
            del caches[x]
            yield x
        else:
            yield TICK


def halting_prefix(fuel: int) -> Enumerator:
    return Enumerator(halting_ticks(), fuel)
