"""Interpretations between structures: built-ins, composition, formula
pullback, homotopy sets and graphs.

An interpretation theta: M ~> N of rank r has a domain in M^r and a
surjection from it onto N.  Pullback formulas live over the variables
x0, x1, ...; an n-ary symbol (graph arity n+1 for functions, with the
value first) uses x_{i*r + j} for coordinate j of argument i.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import count
from typing import Callable, Mapping, Sequence

from dprmlab.kernel import TICK, Enumerator, StructuralError, tuple_decode
from dprmlab.peformula.evaluate import eval_matrix, prenex, rename
from dprmlab.peformula.syntax import (
    And,
    App,
    Atomic,
    Const,
    Eq,
    Exists,
    Num,
    Or,
    Var,
    all_vars,
    conj,
    exists_many,
    free_vars,
    parse_formula,
    sort_vars,
)
from dprmlab.presentations.core import Presentation
from dprmlab.presentations.structures import INT, NAT, RAT, StructureOracle

log = logging.getLogger(__name__)


def xs(k: int, start: int = 0) -> list[str]:
    return [f"x{i}" for i in range(start, start + k)]


@dataclass(frozen=True, eq=False)
class Interpretation:
    name: str
    source: StructureOracle
    target: StructureOracle
    rank: int
    map: Callable[[tuple], object] | None = None
    domain: Callable[[tuple], bool] | None = None
    domain_formula: object = None
    pullbacks: Mapping[str, object] = field(default_factory=dict)

    @property
    def executable(self) -> bool:
        return self.map is not None

    def in_domain(self, vals: Sequence) -> bool:
        vals = tuple(vals)
        if len(vals) != self.rank:
            raise StructuralError(f"{self.name}: expected {self.rank} coordinates, got {len(vals)}")
        if not all(self.source.member(v) for v in vals):
            return False
        return self.domain is None or bool(self.domain(vals))

    def apply(self, vals: Sequence):
        if self.map is None:
            raise StructuralError(f"{self.name} has no executable map")
        vals = tuple(vals)
        if not self.in_domain(vals):
            raise StructuralError(f"{self.name}: {vals} is outside the domain")
        return self.map(vals)

    def __repr__(self):
        return f"Interpretation({self.name!r}, rank={self.rank})"


# ---- built-ins ---------------------------------------------------------

def _f(text: str):
    return parse_formula(text)


def _nz() -> Interpretation:
    # (a, b) -> a - b; argument i occupies x_{2i}, x_{2i+1}
    return Interpretation(
        "nz", NAT, INT, 2,
        map=lambda v: v[0] - v[1],
        domain=lambda v: True,
        domain_formula=_f("x0 = x0 & x1 = x1"),
        pullbacks={
            "=": _f("x0 + x3 = x2 + x1"),
            "+": _f("x0 + x3 + x5 = x2 + x4 + x1"),
            "*": _f("x0 + x2 * x5 + x3 * x4 = x1 + x2 * x4 + x3 * x5"),
            "0": _f("x0 = x1"),
            "1": _f("x0 = x1 + 1"),
        },
    )


def _zn() -> Interpretation:
    # nonnegative integers -> N, identity on values; n >= 0 iff a sum of four squares
    return Interpretation(
        "zn", INT, NAT, 1,
        map=lambda v: v[0],
        domain=lambda v: v[0] >= 0,
        domain_formula=_f("E a. E b. E c. E d. x0 = a * a + b * b + c * c + d * d"),
        pullbacks={
            "=": _f("x0 = x1"),
            "+": _f("x0 = x1 + x2"),
            "*": _f("x0 = x1 * x2"),
            "0": _f("x0 = 0"),
            "1": _f("x0 = 1"),
        },
    )


def _kappa() -> Interpretation:
    # x1 != 0 iff x1*u = (2v - 1)(3w - 1) for some integers u, v, w:
    # the right side never vanishes, and any nonzero x1 divides such a product
    return Interpretation(
        "kappa-zq", INT, RAT, 2,
        map=lambda v: Fraction(v[0], v[1]),
        domain=lambda v: v[1] != 0,
        domain_formula=_f("E u. E v. E w. x1 * u + (v + v) + (w + w + w) = 6 * v * w + 1"),
        pullbacks={
            "=": _f("x0 * x3 = x2 * x1"),
            "+": _f("x0 * x3 * x5 = (x2 * x5 + x4 * x3) * x1"),
            "*": _f("x0 * x3 * x5 = x2 * x4 * x1"),
            "0": _f("x0 = 0"),
            "1": _f("x0 = x1"),
        },
    )


def identity(structure: StructureOracle) -> Interpretation:
    pulls = {
        "=": _f("x0 = x1"),
        "+": _f("x0 = x1 + x2"),
        "*": _f("x0 = x1 * x2"),
    }
    for c in structure.signature.constants:
        pulls[c] = Eq(Var("x0"), Const(c))
    return Interpretation(
        f"id-{structure.name}", structure, structure, 1,
        map=lambda v: v[0], domain=lambda v: True,
        domain_formula=_f("x0 = x0"), pullbacks=pulls,
    )


def int_in_rat() -> Interpretation:
    """Z as the integer points of Q: executable only, since no p.e. formula
    for Z inside Q is available to serve as domain formula."""
    return Interpretation(
        "int-in-rat", RAT, INT, 1,
        map=lambda v: int(v[0]),
        domain=lambda v: v[0].denominator == 1,
        domain_formula=None,
        pullbacks={
            "=": _f("x0 = x1"),
            "+": _f("x0 = x1 + x2"),
            "*": _f("x0 = x1 * x2"),
            "0": _f("x0 = 0"),
            "1": _f("x0 = 1"),
        },
    )


_REGISTRY = {"nz": _nz, "zn": _zn, "kappa-zq": _kappa, "int-in-rat": int_in_rat}


def builtin_interpretations() -> dict[str, Interpretation]:
    out = {k: make() for k, make in _REGISTRY.items()}
    out["id"] = identity(INT)
    return out


def get_interpretation(name: str, structure: StructureOracle | None = None) -> Interpretation:
    """Registry lookup; ``id`` is the identity on ``structure`` (default Z)."""
    if name == "id":
        return identity(structure or INT)
    if name in _REGISTRY:
        return _REGISTRY[name]()
    raise StructuralError(f"unknown interpretation {name!r}; known: {sorted(_REGISTRY) + ['id']}")


# ---- formula pullback --------------------------------------------------

class _Fresh:
    def __init__(self, taken):
        self.taken = set(taken)
        self.k = 0

    def __call__(self, base="z"):
        while True:
            self.k += 1
            name = f"{base}{self.k}"
            if name not in self.taken:
                self.taken.add(name)
                return name


def _flatten_term(t, fresh, atoms, bound):
    """Name t by a variable, recording graph atoms (symbol, value var, arg vars)."""
    if isinstance(t, Var):
        return t.name
    v = fresh("w")
    bound.append(v)
    if isinstance(t, Const):
        atoms.append((t.name, v, ()))
    elif isinstance(t, Num):
        # n = 1 + 1 + ... + 1
        one = fresh("w")
        bound.append(one)
        atoms.append(("1", one, ()))
        acc = one
        for _ in range(t.value - 1):
            nxt = fresh("w")
            bound.append(nxt)
            atoms.append(("+", nxt, (acc, one)))
            acc = nxt
        atoms.append(("=", None, (v, acc)))
    elif isinstance(t, App):
        args = tuple(_flatten_term(a, fresh, atoms, bound) for a in t.args)
        atoms.append((t.fn, v, args))
    else:
        raise StructuralError(f"not a term: {t!r}")
    return v


def _instantiate(template, mapping: dict[str, str], fresh):
    """Copy a pullback template, renaming x_i via ``mapping`` and its bound variables apart."""
    bound, matrix = prenex(template)
    ren = {}
    for b in bound:
        ren[b] = fresh("u")
    body = matrix
    # two-step renaming avoids clashes between old and new names
    tmp = {}
    for old in sorted(set(mapping) | set(ren)):
        t = fresh("tmp")
        tmp[t] = mapping.get(old, ren.get(old))
        body = rename(body, old, t)
    for t, new in tmp.items():
        body = rename(body, t, new)
    return [ren[b] for b in bound], body


def pull_formula(theta: Interpretation, psi, free_order: Sequence[str] | None = None):
    """theta^*(psi): a formula over the source whose free variables x_{i*r+j}
    code coordinate j of the i-th free variable of psi (in ``free_order``).

    The result also asserts that every free and bound target variable is
    represented by a tuple in dom(theta).
    """
    if theta.domain_formula is None:
        raise StructuralError(f"{theta.name} has no domain formula; formulas cannot be pulled back")
    r = theta.rank
    free = list(free_order) if free_order is not None else sort_vars(free_vars(psi))
    fresh = _Fresh(all_vars(psi) | set(xs(r * (len(free) + 1))))
    blocks: dict[str, list[str]] = {}
    for i, v in enumerate(free):
        blocks[v] = [f"x{i * r + j}" for j in range(r)]
    src_bound: list[str] = []

    def block(v):
        if v not in blocks:
            blocks[v] = [fresh("s") for _ in range(r)]
            src_bound.extend(blocks[v])
        return blocks[v]

    def dom(v):
        bs, body = _instantiate(theta.domain_formula, {f"x{j}": block(v)[j] for j in range(r)}, fresh)
        src_bound.extend(bs)
        return body

    def atom(sym, value, args):
        if sym not in theta.pullbacks:
            raise StructuralError(f"{theta.name} has no pullback for {sym!r}")
        slots = ([value] if value is not None else []) + list(args)
        mapping = {}
        for i, v in enumerate(slots):
            for j in range(r):
                mapping[f"x{i * r + j}"] = block(v)[j]
        bs, body = _instantiate(theta.pullbacks[sym], mapping, fresh)
        src_bound.extend(bs)
        return body

    def go(phi):
        if isinstance(phi, Atomic):
            atoms, tbound = [], []
            names = [_flatten_term(a, fresh, atoms, tbound) for a in phi.args]
            parts = [atom(s, v, a) for s, v, a in atoms]
            parts.append(atom(phi.rel, None, names))
            parts += [dom(v) for v in tbound]
            return conj(parts)
        if isinstance(phi, (And, Or)):
            return type(phi)(go(phi.left), go(phi.right))
        # existential over the target: fresh tuple in dom(theta)
        v = phi.var
        saved = blocks.pop(v, None)
        body = go(phi.body)
        body = And(dom(v), body)
        blocks.pop(v, None)
        if saved is not None:
            blocks[v] = saved
        return body

    core = go(_rename_bound_apart(psi, fresh))
    core = conj([dom(v) for v in free] + [core])
    return exists_many(src_bound, core)


def _rename_bound_apart(phi, fresh):
    if isinstance(phi, Atomic):
        return phi
    if isinstance(phi, (And, Or)):
        return type(phi)(_rename_bound_apart(phi.left, fresh), _rename_bound_apart(phi.right, fresh))
    nv = fresh("b")
    return Exists(nv, _rename_bound_apart(rename(phi.body, phi.var, nv), fresh))


# ---- composition -------------------------------------------------------

def _slots(structure: StructureOracle, sym: str) -> int:
    """Number of element slots in the pullback of ``sym`` (value first for functions)."""
    sig = structure.signature
    if sym in sig.relations:
        return sig.relations[sym]
    if sym in sig.functions:
        return sig.functions[sym] + 1
    if sym in sig.constants:
        return 1
    raise StructuralError(f"{sym!r} is not a symbol of {structure.name}")


def compose_interpretations(theta1: Interpretation, theta2: Interpretation,
                            name: str | None = None) -> Interpretation:
    """zeta = theta2 o theta1^(r2) : M1 ~> M3, of rank r1 * r2.

    A zeta-tuple is r2 blocks of r1 source coordinates; block k is sent to
    M2 by theta1 and the r2 results go through theta2.  Formulas are
    composed when theta1 has a domain formula; otherwise only the
    executable map is available.
    """
    if theta1.target is not theta2.source:
        raise StructuralError(
            f"cannot compose: {theta1.name} lands in {theta1.target.name}, "
            f"{theta2.name} starts from {theta2.source.name}"
        )
    r1, r2 = theta1.rank, theta2.rank
    name = name or f"{theta2.name}.{theta1.name}"

    def split(vals):
        return [tuple(vals[k * r1:(k + 1) * r1]) for k in range(r2)]

    def domain(vals):
        blocks = split(vals)
        if not all(theta1.in_domain(b) for b in blocks):
            return False
        return theta2.in_domain(tuple(theta1.apply(b) for b in blocks))

    def map_(vals):
        return theta2.apply(tuple(theta1.apply(b) for b in split(vals)))

    executable = theta1.executable and theta2.executable

    dom_f, pulls = None, {}
    if theta1.domain_formula is not None and theta2.domain_formula is not None:
        dom_f = pull_formula(theta1, theta2.domain_formula, xs(r2))
        for sym, phi in theta2.pullbacks.items():
            pulls[sym] = pull_formula(theta1, phi, xs(_slots(theta2.source, sym) * r2))
    return Interpretation(name, theta1.source, theta2.target, r1 * r2,
                          map=map_ if executable else None,
                          domain=domain if executable else None, domain_formula=dom_f, pullbacks=pulls)


# ---- homotopy sets and graphs -----------------------------------------

def homotopy_ticks(theta: Interpretation, theta2: Interpretation, pres: Presentation):
    """K(theta, theta2) = {(u, v) : theta(u) = theta2(v)} over one source presentation."""
    if not (theta.executable and theta2.executable):
        raise StructuralError("homotopy enumeration needs executable maps")
    if theta.target is not theta2.target:
        raise StructuralError("homotopy needs a common target")
    r, r2 = theta.rank, theta2.rank
    eq = theta.target.eq
    seen = set()
    for k in count():
        codes = tuple_decode(k, r + r2)
        vals = tuple(pres.decode(c) for c in codes)
        u, v = vals[:r], vals[r:]
        if (vals not in seen and theta.in_domain(u) and theta2.in_domain(v)
                and eq(theta.apply(u), theta2.apply(v))):
            seen.add(vals)
            yield (u, v)
        else:
            yield TICK


def homotopy_prefix(theta, theta2, pres: Presentation, fuel: int) -> Enumerator:
    return Enumerator(homotopy_ticks(theta, theta2, pres), fuel)


def graph_ticks(theta: Interpretation, source: Presentation, target: Presentation):
    """Gamma(theta) = {(x0, x) : x in dom theta, x0 = theta(x)}."""
    if not theta.executable:
        raise StructuralError("graph enumeration needs an executable map")
    r = theta.rank
    eq = theta.target.eq
    seen = set()
    for k in count():
        codes = tuple_decode(k, r + 1)
        x0 = target.decode(codes[0])
        x = tuple(source.decode(c) for c in codes[1:])
        item = (x0,) + x
        if item not in seen and theta.in_domain(x) and eq(x0, theta.apply(x)):
            seen.add(item)
            yield item
        else:
            yield TICK


def graph_prefix(theta, source: Presentation, target: Presentation, fuel: int) -> Enumerator:
    return Enumerator(graph_ticks(theta, source, target), fuel)


def check_pullbacks(theta: Interpretation, samples: Sequence[tuple]) -> list[str]:
    """Compare the quantifier-free pullback formulas with the executable map
    on all slot fillings drawn from ``samples``; returns the disagreements."""
    from itertools import product

    t = theta.target
    good = [tuple(x) for x in samples if theta.in_domain(x)]
    bad = []
    for sym in sorted(theta.pullbacks):
        phi = theta.pullbacks[sym]
        bound, matrix = prenex(phi)
        if bound:
            raise StructuralError(f"pullback of {sym!r} is not quantifier-free")
        k = _slots(t, sym)
        for slots in product(good, repeat=k):
            env = {f"x{i}": v for i, v in enumerate(c for s in slots for c in s)}
            imgs = [theta.apply(s) for s in slots]
            if sym in t.signature.relations:
                want = t.holds(sym, *imgs)
            elif sym in t.signature.functions:
                want = t.eq(imgs[0], t.apply(sym, *imgs[1:]))
            else:
                want = t.eq(imgs[0], t.const(sym))
            if eval_matrix(matrix, theta.source, env) != want:
                bad.append(f"{sym} at {slots}")
    return bad
