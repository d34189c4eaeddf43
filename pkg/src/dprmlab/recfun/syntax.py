"""S-expression surface syntax for mu-recursive programs.

Grammar::

    expr  := 'succ'
           | '(' 'zero' NAT ')'
           | '(' 'proj' NAT NAT ')'          ; index, arity
           | '(' 'comp' expr expr+ ')'       ; outer, inners
           | '(' 'prim' expr expr ')'        ; base, step
           | '(' 'mu' expr ')'
           | NAME                            ; entry of the standard library

Comments start with ``;`` and run to the end of the line.  A corpus file
holds one program per non-blank line, optionally prefixed ``name:``.
"""

from __future__ import annotations

import re

from dprmlab.kernel import StructuralError
from dprmlab.recfun.expr import Compose, Mu, PrimRec, Proj, RecFun, Succ, Zero

_TOKEN = re.compile(r"\s*(?:(;[^\n]*)|(\()|(\))|([A-Za-z_][A-Za-z0-9_\-]*)|(\d+))")


class SyntaxErrorAt(StructuralError):
    def __init__(self, msg: str, pos: int):
        super().__init__(f"{msg} at position {pos}")
        self.pos = pos


def _tokens(text: str):
    pos = 0
    out = []
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            if text[pos:].strip() == "":
                break
            raise SyntaxErrorAt(f"unexpected character {text[pos]!r}", pos)
        if m.group(1) is None:
            start = m.start(m.lastindex)
            out.append((m.group(m.lastindex), start))
        pos = m.end()
    return out


def parse_program(text: str, library: dict | None = None) -> RecFun:
    if library is None:
        from dprmlab.recfun.library import LIBRARY as library
    toks = _tokens(text)
    f, k = _parse(toks, 0, library)
    if k != len(toks):
        raise SyntaxErrorAt("trailing input", toks[k][1])
    f.check()
    return f


def _parse(toks, k, library):
    if k >= len(toks):
        raise SyntaxErrorAt("unexpected end of input", toks[-1][1] if toks else 0)
    tok, pos = toks[k]
    if tok == "succ":
        return Succ(), k + 1
    if tok != "(":
        if tok in library:
            return library[tok], k + 1
        raise SyntaxErrorAt(f"unknown name {tok!r}", pos)
    if k + 1 >= len(toks):
        raise SyntaxErrorAt("unexpected end of input", pos)
    head, hpos = toks[k + 1]
    k += 2
    if head == "zero":
        n, k = _nat(toks, k)
        f = Zero(n)
    elif head == "proj":
        i, k = _nat(toks, k)
        n, k = _nat(toks, k)
        f = Proj(i, n)
    elif head == "comp":
        outer, k = _parse(toks, k, library)
        inners = []
        while k < len(toks) and toks[k][0] != ")":
            h, k = _parse(toks, k, library)
            inners.append(h)
        if not inners:
            raise SyntaxErrorAt("comp needs at least one inner function", hpos)
        f = Compose(outer, tuple(inners))
    elif head == "prim":
        b, k = _parse(toks, k, library)
        s, k = _parse(toks, k, library)
        f = PrimRec(b, s)
    elif head == "mu":
        b, k = _parse(toks, k, library)
        f = Mu(b)
    else:
        raise SyntaxErrorAt(f"unknown form {head!r}", hpos)
    if k >= len(toks) or toks[k][0] != ")":
        raise SyntaxErrorAt("expected ')'", toks[k][1] if k < len(toks) else pos)
    return f, k + 1


def _nat(toks, k):
    if k >= len(toks) or not toks[k][0].isdigit():
        raise SyntaxErrorAt("expected a natural number", toks[k][1] if k < len(toks) else 0)
    return int(toks[k][0]), k + 1


def format_program(f: RecFun) -> str:
    if isinstance(f, Succ):
        return "succ"
    if isinstance(f, Zero):
        return f"(zero {f.n})"
    if isinstance(f, Proj):
        return f"(proj {f.index} {f.n})"
    if isinstance(f, Compose):
        return "(comp " + " ".join(format_program(g) for g in (f.outer,) + f.inners) + ")"
    if isinstance(f, PrimRec):
        return f"(prim {format_program(f.base)} {format_program(f.step)})"
    if isinstance(f, Mu):
        return f"(mu {format_program(f.body)})"
    raise StructuralError(f"not a RecFun node: {f!r}")


def parse_corpus(text: str) -> list[tuple[str, RecFun]]:
    out = []
    for lineno, line in enumerate(text.splitlines(), 1):
        body = line.split(";", 1)[0].strip()
        if not body:
            continue
        name = f"line{lineno}"
        m = re.match(r"([A-Za-z_][A-Za-z0-9_\-]*)\s*:\s*(.*)$", body)
        if m:
            name, body = m.group(1), m.group(2)
        try:
            out.append((name, parse_program(body)))
        except StructuralError as exc:
            raise StructuralError(f"line {lineno}: {exc}") from None
    return out
