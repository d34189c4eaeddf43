"""Budgeted evaluation.

Step accounting: one step for every node visit (each time a node is
applied to arguments) plus one extra step for every Mu probe.  PrimRec
iterates instead of recursing, so Python stack depth is bounded by the
depth of the expression tree, not by the size of the inputs.
"""

from __future__ import annotations

from dataclasses import dataclass

from dprmlab.kernel import Budget, BudgetExhausted, StructuralError
from dprmlab.recfun.expr import Compose, Mu, PrimRec, Proj, RecFun, Succ, Zero


@dataclass(frozen=True)
class Value:
    value: int
    steps_used: int


@dataclass(frozen=True)
class Exhausted:
    steps_used: int


EvalOutcome = Value | Exhausted


def eval_expr(f: RecFun, args, budget: int | Budget) -> EvalOutcome:
    f.check()
    args = tuple(args)
    if len(args) != f.arity:
        raise StructuralError(f"arity {f.arity} function applied to {len(args)} arguments")
    if any((not isinstance(a, int)) or a < 0 for a in args):
        raise StructuralError("arguments must be natural numbers")
    b = budget if isinstance(budget, Budget) else Budget(budget)
    start = b.used
    try:
        v = _run(f, args, b)
    except BudgetExhausted:
        return Exhausted(b.used - start)
    return Value(v, b.used - start)


def _run(f: RecFun, args: tuple, b: Budget) -> int:
    b.spend()
    if isinstance(f, Zero):
        return 0
    if isinstance(f, Succ):
        return args[0] + 1
    if isinstance(f, Proj):
        return args[f.index]
    if isinstance(f, Compose):
        inner = tuple(_run(h, args, b) for h in f.inners)
        return _run(f.outer, inner, b)
    if isinstance(f, PrimRec):
        y, rest = args[0], args[1:]
        acc = _run(f.base, rest, b)
        for k in range(y):
            acc = _run(f.step, (k, acc) + rest, b)
        return acc
    if isinstance(f, Mu):
        y = 0
        while True:
            b.spend()
            if _run(f.body, (y,) + args, b) == 0:
                return y
            y += 1
    raise StructuralError(f"not a RecFun node: {f!r}")


class HaltingCache:
    """Answers "does f(args) halt within s steps?" without re-running from scratch.

    A run at budget B either returns Value(u) (halts at every s >= u) or
    exhausts (fails for every s <= B).  Budgets grow geometrically, so the
    total work for a row is linear in the largest probe.
    """

    def __init__(self, run):
        self._run = run  # budget -> EvalOutcome
        self.halt_steps: int | None = None
        self.value: int | None = None
        self.known_fail: int = -1

    def halts_within(self, s: int) -> bool:
        if self.halt_steps is not None:
            return self.halt_steps <= s
        if s <= self.known_fail:
            return False
        budget = max(s, 2 * self.known_fail + 2)
        out = self._run(budget)
        if isinstance(out, Value):
            self.halt_steps, self.value = out.steps_used, out.value
            return out.steps_used <= s
        self.known_fail = budget
        return False
