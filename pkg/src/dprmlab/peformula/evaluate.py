"""Semi-decision of p.e. formulas over a presented structure.

A formula is renamed apart and put in prenex form (existentials commute
with conjunction and disjunction once bound names are distinct), leaving a
quantifier-free matrix.  Candidate witnesses are tuples of presentation
indices, visited by increasing total index; among tuples with the same
total, the one giving the larger index to the innermost variable comes
first.  One unit of fuel is one matrix evaluation.
"""

from __future__ import annotations

from itertools import count
from typing import Iterator, Mapping, Sequence

from dprmlab.kernel import TICK, Enumerator, StructuralError, Unknown, Yes
from dprmlab.peformula.syntax import (
    And,
    App,
    Atomic,
    Const,
    Exists,
    Num,
    Or,
    Var,
    all_vars,
    free_vars,
    sort_vars,
)
from dprmlab.presentations.core import Presentation
from dprmlab.presentations.structures import StructureOracle


def eval_term(t, structure: StructureOracle, env: Mapping):
    if isinstance(t, Var):
        try:
            return env[t.name]
        except KeyError:
            raise StructuralError(f"unbound variable {t.name!r}") from None
    if isinstance(t, Const):
        return structure.const(t.name)
    if isinstance(t, Num):
        one = structure.const("1")
        v = one
        for _ in range(t.value - 1):
            v = structure.apply("+", v, one)
        return v
    if isinstance(t, App):
        return structure.apply(t.fn, *(eval_term(a, structure, env) for a in t.args))
    raise StructuralError(f"not a term: {t!r}")


def eval_matrix(phi, structure: StructureOracle, env: Mapping) -> bool:
    """Truth of a quantifier-free formula."""
    if isinstance(phi, Atomic):
        return structure.holds(phi.rel, *(eval_term(a, structure, env) for a in phi.args))
    if isinstance(phi, And):
        return eval_matrix(phi.left, structure, env) and eval_matrix(phi.right, structure, env)
    if isinstance(phi, Or):
        return eval_matrix(phi.left, structure, env) or eval_matrix(phi.right, structure, env)
    raise StructuralError("eval_matrix called on a quantified formula")


def _fresh(base: str, taken: set[str]) -> str:
    k = 1
    while f"{base}_{k}" in taken:
        k += 1
    name = f"{base}_{k}"
    taken.add(name)
    return name


def _subst_var(t, old: str, new: str):
    if isinstance(t, Var):
        return Var(new) if t.name == old else t
    if isinstance(t, App):
        return App(t.fn, tuple(_subst_var(a, old, new) for a in t.args))
    return t


def rename(phi, old: str, new: str):
    """Rename free occurrences of ``old``."""
    if isinstance(phi, Atomic):
        return Atomic(phi.rel, tuple(_subst_var(a, old, new) for a in phi.args))
    if isinstance(phi, (And, Or)):
        return type(phi)(rename(phi.left, old, new), rename(phi.right, old, new))
    if phi.var == old:
        return phi
    return Exists(phi.var, rename(phi.body, old, new))


def prenex(phi) -> tuple[list[str], object]:
    """(bound variables outermost first, matrix), with bound names made distinct
    from each other and from the free variables."""
    taken = set(all_vars(phi))
    used = set(free_vars(phi))

    def go(f):
        if isinstance(f, Atomic):
            return [], f
        if isinstance(f, (And, Or)):
            lv, lm = go(f.left)
            rv, rm = go(f.right)
            return lv + rv, type(f)(lm, rm)
        v, body = f.var, f.body
        if v in used:
            nv = _fresh(v, taken)
            body = rename(body, v, nv)
            v = nv
        used.add(v)
        vs, m = go(body)
        return [v] + vs, m

    return go(phi)


def compositions(total: int, k: int) -> Iterator[tuple[int, ...]]:
    """k-tuples of naturals summing to ``total``; larger last entries first."""
    if k == 0:
        if total == 0:
            yield ()
        return
    if k == 1:
        yield (total,)
        return
    for last in range(total, -1, -1):
        for rest in compositions(total - last, k - 1):
            yield rest + (last,)


def index_tuples(k: int) -> Iterator[tuple[int, ...]]:
    if k == 0:
        yield ()
        return
    for s in count():
        yield from compositions(s, k)


def satisfy_search(phi, pres: Presentation, assignment: Mapping, fuel: int):
    """Yes({var: witness}) if phi holds at ``assignment``, found within fuel;
    otherwise Unknown.  Never answers no."""
    missing = free_vars(phi) - set(assignment)
    if missing:
        raise StructuralError(f"assignment misses free variables {sort_vars(missing)}")
    bound, matrix = prenex(phi)
    env = dict(assignment)
    structure = pres.structure
    spent = 0
    for idx in index_tuples(len(bound)):
        if spent >= fuel:
            return Unknown(spent)
        spent += 1
        for v, i in zip(bound, idx):
            env[v] = pres.decode(i)
        if eval_matrix(matrix, structure, env):
            return Yes({v: env[v] for v in bound})
    return Unknown(spent)  # only reached with no bound variables


def verify_witnesses(phi, structure: StructureOracle, assignment: Mapping,
                     witnesses: Mapping) -> bool:
    """Independent re-check of a Yes answer."""
    bound, matrix = prenex(phi)
    env = dict(assignment)
    env.update(witnesses)
    if set(bound) - set(env):
        return False
    return eval_matrix(matrix, structure, env)


def definable_ticks(phi, pres: Presentation, free: Sequence[str] | None = None):
    """Tuples of elements satisfying phi, free variables outermost in the search."""
    free = list(free) if free is not None else sort_vars(free_vars(phi))
    extra = free_vars(phi) - set(free)
    if extra:
        raise StructuralError(f"free variables {sort_vars(extra)} are not listed")
    bound, matrix = prenex(phi)
    names = free + bound
    structure = pres.structure
    seen = set()
    for idx in index_tuples(len(names)):
        env = {v: pres.decode(i) for v, i in zip(names, idx)}
        if eval_matrix(matrix, structure, env):
            out = tuple(env[v] for v in free)
            if out not in seen:
                seen.add(out)
                yield out
                continue
        yield TICK
        if not names:
            return


def definable_prefix(phi, pres: Presentation, fuel: int,
                     free: Sequence[str] | None = None) -> Enumerator:
    return Enumerator(definable_ticks(phi, pres, free), fuel)
