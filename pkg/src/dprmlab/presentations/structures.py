"""Signatures and executable structures (N, Z, Q, F_p(t))."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Mapping

from dprmlab.kernel import StructuralError


@dataclass(frozen=True)
class Signature:
    constants: tuple[str, ...] = ()
    functions: Mapping[str, int] = field(default_factory=dict)
    relations: Mapping[str, int] = field(default_factory=lambda: {"=": 2})

    def __post_init__(self):
        if self.relations.get("=") != 2:
            raise StructuralError("a signature must contain binary '='")
        clash = set(self.constants) & (set(self.functions) | set(self.relations))
        if clash:
            raise StructuralError(f"symbols declared twice: {sorted(clash)}")

    def __hash__(self):
        return hash((self.constants, tuple(sorted(self.functions.items())),
                     tuple(sorted(self.relations.items()))))


ARITH = Signature(constants=("0", "1"), functions={"+": 2, "*": 2})


def arith_with(*consts: str) -> Signature:
    return Signature(constants=ARITH.constants + consts, functions=dict(ARITH.functions))


@dataclass(frozen=True, eq=False)
class StructureOracle:
    """Canonical elements with computable symbol interpretations.

    ``member`` decides whether a Python value is a canonical element;
    equality of canonical elements is Python ``==``.
    """

    name: str
    signature: Signature
    constants: Mapping[str, object]
    functions: Mapping[str, Callable]
    relations: Mapping[str, Callable] = field(default_factory=dict)
    member: Callable[[object], bool] = lambda x: True

    def __post_init__(self):
        missing = [c for c in self.signature.constants if c not in self.constants]
        missing += [f for f in self.signature.functions if f not in self.functions]
        missing += [r for r in self.signature.relations if r != "=" and r not in self.relations]
        if missing:
            raise StructuralError(f"{self.name}: no interpretation for {missing}")

    def eq(self, a, b) -> bool:
        return a == b

    def const(self, name: str):
        return self.constants[name]

    def apply(self, name: str, *args):
        arity = self.signature.functions.get(name)
        if arity is None:
            raise StructuralError(f"{self.name}: unknown function symbol {name!r}")
        if len(args) != arity:
            raise StructuralError(f"{name} takes {arity} arguments, got {len(args)}")
        return self.functions[name](*args)

    def holds(self, name: str, *args) -> bool:
        if name == "=":
            return self.eq(*args)
        return bool(self.relations[name](*args))


def _add(a, b):
    return a + b


def _mul(a, b):
    return a * b


NAT = StructureOracle(
    "N", ARITH, {"0": 0, "1": 1}, {"+": _add, "*": _mul},
    member=lambda x: isinstance(x, int) and x >= 0,
)
INT = StructureOracle(
    "Z", ARITH, {"0": 0, "1": 1}, {"+": _add, "*": _mul},
    member=lambda x: isinstance(x, int),
)
RAT = StructureOracle(
    "Q", ARITH, {"0": Fraction(0), "1": Fraction(1)}, {"+": _add, "*": _mul},
    member=lambda x: isinstance(x, Fraction),
)

_FPT: dict[int, StructureOracle] = {}


def fpt(p: int) -> StructureOracle:
    """F_p(t) in the arithmetic language with the extra constant ``t``."""
    if p not in _FPT:
        from dprmlab.ffdio.poly import FpRatFun

        _FPT[p] = StructureOracle(
            f"F{p}(t)",
            arith_with("t"),
            {"0": FpRatFun.const(p, 0), "1": FpRatFun.const(p, 1), "t": FpRatFun.t(p)},
            {"+": _add, "*": _mul},
            member=lambda x: isinstance(x, FpRatFun) and x.p == p,
        )
    return _FPT[p]


STRUCTURES = {"N": NAT, "Z": INT, "Q": RAT}


def structure_by_name(name: str) -> StructureOracle:
    if name in STRUCTURES:
        return STRUCTURES[name]
    if name.startswith("F") and name.endswith("(t)") and name[1:-3].isdigit():
        return fpt(int(name[1:-3]))
    raise StructuralError(f"unknown structure {name!r}")
