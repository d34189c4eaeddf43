"""Positive-existential formulas: AST, parser and canonical printer.

Grammar (whitespace-insensitive)::

    formula := conj ('|' conj)*
    conj    := unit ('&' unit)*
    unit    := 'E' VAR '.' formula        ; the body extends as far right as possible
             | '(' formula ')'
             | term '=' term
    term    := prod ('+' prod)*
    prod    := atom ('*' atom)*
    atom    := VAR | CONST | NUMERAL | '(' term ')'

Identifiers are variables unless they are declared constants.  ``0`` and
``1`` are the constants of the arithmetic language; larger numerals are
shorthand for 1 + 1 + ... + 1.  There is no negation and no universal
quantifier: such formulas cannot even be represented.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable

from dprmlab.kernel import StructuralError


# ---- terms -------------------------------------------------------------

@dataclass(frozen=True)
class Var:
    name: str


@dataclass(frozen=True)
class Const:
    name: str


@dataclass(frozen=True)
class Num:
    """Numeral n >= 2, read as a sum of n ones."""

    value: int


@dataclass(frozen=True)
class App:
    fn: str
    args: tuple


Term = Var | Const | Num | App


# ---- formulas ----------------------------------------------------------

@dataclass(frozen=True)
class Atomic:
    rel: str
    args: tuple


@dataclass(frozen=True)
class And:
    left: object
    right: object


@dataclass(frozen=True)
class Or:
    left: object
    right: object


@dataclass(frozen=True)
class Exists:
    var: str
    body: object


PEFormula = Atomic | And | Or | Exists


def Eq(a, b) -> Atomic:
    return Atomic("=", (a, b))


def conj(parts: Iterable) -> PEFormula:
    parts = list(parts)
    if not parts:
        return Eq(Const("0"), Const("0"))
    out = parts[0]
    for p in parts[1:]:
        out = And(out, p)
    return out


def disj(parts: Iterable) -> PEFormula:
    parts = list(parts)
    out = parts[0]
    for p in parts[1:]:
        out = Or(out, p)
    return out


def exists_many(names: Iterable[str], body) -> PEFormula:
    for v in reversed(list(names)):
        body = Exists(v, body)
    return body


def term_vars(t) -> set[str]:
    if isinstance(t, Var):
        return {t.name}
    if isinstance(t, App):
        out = set()
        for a in t.args:
            out |= term_vars(a)
        return out
    return set()


def free_vars(phi) -> set[str]:
    if isinstance(phi, Atomic):
        out = set()
        for a in phi.args:
            out |= term_vars(a)
        return out
    if isinstance(phi, (And, Or)):
        return free_vars(phi.left) | free_vars(phi.right)
    if isinstance(phi, Exists):
        return free_vars(phi.body) - {phi.var}
    raise StructuralError(f"not a formula: {phi!r}")


def all_vars(phi) -> set[str]:
    if isinstance(phi, Atomic):
        return free_vars(phi)
    if isinstance(phi, (And, Or)):
        return all_vars(phi.left) | all_vars(phi.right)
    return all_vars(phi.body) | {phi.var}


def sort_vars(names: Iterable[str]) -> list[str]:
    """x0, x1, ..., x10 in numeric order, then everything else alphabetically."""

    def key(v):
        m = re.fullmatch(r"([A-Za-z_]+)(\d+)", v)
        return (m.group(1), int(m.group(2)), "") if m else (v, -1, v)

    return sorted(names, key=key)


# ---- parser ------------------------------------------------------------

class FormulaSyntaxError(StructuralError):
    def __init__(self, msg: str, pos: int):
        super().__init__(f"{msg} at position {pos}")
        self.pos = pos


_TOK = re.compile(r"\s*(?:([A-Za-z_][A-Za-z0-9_']*)|(\d+)|([()+*=&|.]))")


def _lex(text: str) -> list[tuple[str, str, int]]:
    out, pos = [], 0
    while True:
        while pos < len(text) and text[pos].isspace():
            pos += 1
        if pos >= len(text):
            break
        m = _TOK.match(text, pos)
        if not m:
            raise FormulaSyntaxError(f"unexpected character {text[pos]!r}", pos)
        if m.group(1):
            kind = "E" if m.group(1) == "E" else "id"
            out.append((kind, m.group(1), m.start(1)))
        elif m.group(2):
            out.append(("num", m.group(2), m.start(2)))
        else:
            out.append((m.group(3), m.group(3), m.start(3)))
        pos = m.end()
    out.append(("end", "", len(text)))
    return out


class _Parser:
    def __init__(self, text: str, constants):
        self.toks = _lex(text)
        self.k = 0
        self.constants = set(constants)

    def peek(self):
        return self.toks[self.k]

    def take(self, kind):
        tok = self.peek()
        if tok[0] != kind:
            want = "identifier" if kind == "id" else repr(kind)
            got = "end of input" if tok[0] == "end" else repr(tok[1])
            raise FormulaSyntaxError(f"expected {want}, found {got}", tok[2])
        self.k += 1
        return tok

    def formula(self):
        left = self.conj()
        while self.peek()[0] == "|":
            self.k += 1
            left = Or(left, self.conj())
        return left

    def conj(self):
        left = self.unit()
        while self.peek()[0] == "&":
            self.k += 1
            left = And(left, self.unit())
        return left

    def unit(self):
        kind, _, pos = self.peek()
        if kind == "E":
            self.k += 1
            var = self.take("id")[1]
            if var in self.constants:
                raise FormulaSyntaxError(f"cannot quantify the constant {var!r}", pos)
            self.take(".")
            return Exists(var, self.formula())
        if kind == "(":
            save = self.k
            try:
                return self.atomic()
            except FormulaSyntaxError:
                self.k = save
            self.k += 1
            phi = self.formula()
            self.take(")")
            return phi
        return self.atomic()

    def atomic(self):
        a = self.term()
        self.take("=")
        b = self.term()
        return Eq(a, b)

    def term(self):
        left = self.prod()
        while self.peek()[0] == "+":
            self.k += 1
            left = App("+", (left, self.prod()))
        return left

    def prod(self):
        left = self.atom()
        while self.peek()[0] == "*":
            self.k += 1
            left = App("*", (left, self.atom()))
        return left

    def atom(self):
        kind, val, pos = self.peek()
        if kind == "id":
            self.k += 1
            return Const(val) if val in self.constants else Var(val)
        if kind == "num":
            self.k += 1
            n = int(val)
            return Const(val) if n < 2 else Num(n)
        if kind == "(":
            self.k += 1
            t = self.term()
            self.take(")")
            return t
        got = "end of input" if kind == "end" else repr(val)
        raise FormulaSyntaxError(f"expected a term, found {got}", pos)


def parse_formula(text: str, constants: Iterable[str] = ()) -> PEFormula:
    p = _Parser(text, constants)
    phi = p.formula()
    kind, val, pos = p.peek()
    if kind != "end":
        raise FormulaSyntaxError(f"unexpected {val!r}", pos)
    return phi


def parse_term(text: str, constants: Iterable[str] = ()):
    p = _Parser(text, constants)
    t = p.term()
    kind, val, pos = p.peek()
    if kind != "end":
        raise FormulaSyntaxError(f"unexpected {val!r}", pos)
    return t


# ---- printer -----------------------------------------------------------

_TPREC = {"+": 1, "*": 2}


def format_term(t, prec: int = 0) -> str:
    if isinstance(t, Var):
        return t.name
    if isinstance(t, Const):
        return t.name
    if isinstance(t, Num):
        return str(t.value)
    if isinstance(t, App) and t.fn in _TPREC and len(t.args) == 2:
        p = _TPREC[t.fn]
        # left-associative: the right operand needs parentheses at equal precedence
        s = f"{format_term(t.args[0], p)} {t.fn} {format_term(t.args[1], p + 1)}"
        return f"({s})" if p < prec else s
    raise StructuralError(f"cannot print term {t!r}")


_FPREC = {Or: 1, And: 2}


def format_formula(phi, prec: int = 0, last: bool = True) -> str:
    """Print with the fewest parentheses that parse back to the same tree.

    ``last`` says whether nothing follows in the enclosing text; an
    unparenthesized quantifier would otherwise swallow what follows.
    """
    if isinstance(phi, Atomic):
        if phi.rel != "=" or len(phi.args) != 2:
            raise StructuralError(f"cannot print atom {phi!r}")
        return f"{format_term(phi.args[0])} = {format_term(phi.args[1])}"
    if isinstance(phi, Exists):
        s = f"E {phi.var}. {format_formula(phi.body, 0, True)}"
        return s if last else f"({s})"
    p = _FPREC[type(phi)]
    op = " | " if isinstance(phi, Or) else " & "
    paren = p < prec
    inner_last = last or paren
    s = format_formula(phi.left, p, False) + op + format_formula(phi.right, p + 1, inner_last)
    return f"({s})" if paren else s
