"""Abstract syntax of mu-recursive programs.

Conventions (fixed for the whole package):

* ``PrimRec(base, step)`` recurses on its *first* argument::

      f(0, xs)   = base(xs)
      f(y+1, xs) = step(y, f(y, xs), xs)

* ``Mu(body)`` searches its *first* argument::

      Mu(body)(xs) = least y with body(y, xs) == 0,
                     every body(y', xs) for y' < y halting with a non-zero value.
"""

from __future__ import annotations

from dataclasses import dataclass

from dprmlab.kernel import StructuralError


class RecFun:
    arity: int

    def check(self) -> None:
        """Raise StructuralError unless the tree is arity-consistent."""
        _check(self)

    def __call__(self, *inners: "RecFun") -> "Compose":
        return Compose(self, tuple(inners))


@dataclass(frozen=True)
class Zero(RecFun):
    n: int

    @property
    def arity(self) -> int:
        return self.n


@dataclass(frozen=True)
class Succ(RecFun):
    @property
    def arity(self) -> int:
        return 1


@dataclass(frozen=True)
class Proj(RecFun):
    index: int
    n: int

    @property
    def arity(self) -> int:
        return self.n


@dataclass(frozen=True)
class Compose(RecFun):
    outer: RecFun
    inners: tuple

    @property
    def arity(self) -> int:
        if not self.inners:
            raise StructuralError("Compose needs at least one inner function")
        return self.inners[0].arity


@dataclass(frozen=True)
class PrimRec(RecFun):
    base: RecFun
    step: RecFun

    @property
    def arity(self) -> int:
        return self.base.arity + 1


@dataclass(frozen=True)
class Mu(RecFun):
    body: RecFun

    @property
    def arity(self) -> int:
        return self.body.arity - 1


def _check(f: RecFun) -> None:
    # iterative so that deep programs do not hit the recursion limit
    stack = [f]
    while stack:
        g = stack.pop()
        if isinstance(g, Zero):
            if g.n < 0:
                raise StructuralError("Zero arity must be >= 0")
        elif isinstance(g, Succ):
            pass
        elif isinstance(g, Proj):
            if not 0 <= g.index < g.n:
                raise StructuralError(f"Proj({g.index},{g.n}) out of range")
        elif isinstance(g, Compose):
            if not g.inners:
                raise StructuralError("Compose needs at least one inner function")
            if len(g.inners) != g.outer.arity:
                raise StructuralError(
                    f"outer arity {g.outer.arity} but {len(g.inners)} inner functions"
                )
            ks = {h.arity for h in g.inners}
            if len(ks) != 1:
                raise StructuralError(f"inner functions disagree on arity: {sorted(ks)}")
            stack.append(g.outer)
            stack.extend(g.inners)
        elif isinstance(g, PrimRec):
            if g.step.arity != g.base.arity + 2:
                raise StructuralError(
                    f"PrimRec step arity {g.step.arity} != base arity {g.base.arity} + 2"
                )
            stack.extend((g.base, g.step))
        elif isinstance(g, Mu):
            if g.body.arity < 1:
                raise StructuralError("Mu body needs arity >= 1")
            stack.append(g.body)
        else:
            raise StructuralError(f"not a RecFun node: {g!r}")


def is_well_formed(f: RecFun) -> bool:
    try:
        _check(f)
    except StructuralError:
        return False
    return True


def diverging(arity: int) -> RecFun:
    """Canonical everywhere-undefined function: mu y [y + 1 = 0]."""
    return Mu(Compose(Succ(), (Proj(0, arity + 1),)))


def size(f: RecFun) -> int:
    n, stack = 0, [f]
    while stack:
        g = stack.pop()
        n += 1
        if isinstance(g, Compose):
            stack.append(g.outer)
            stack.extend(g.inners)
        elif isinstance(g, PrimRec):
            stack.extend((g.base, g.step))
        elif isinstance(g, Mu):
            stack.append(g.body)
    return n
