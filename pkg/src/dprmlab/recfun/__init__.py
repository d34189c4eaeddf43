"""Mu-recursive programs: evaluation, Goedel numbers, listable sets."""

from dprmlab.recfun.evaluate import EvalOutcome, Exhausted, Value, eval_expr
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
from dprmlab.recfun.godel import eval_universal, godel_decode, godel_encode
from dprmlab.recfun.sets import (
    DomainOf,
    Explicit,
    ImageOf,
    ListableSet,
    halting_prefix,
    set_image,
    set_intersect,
    set_permute,
    set_preimage,
    set_product,
    set_project,
    set_union,
)
from dprmlab.recfun.syntax import format_program, parse_corpus, parse_program

__all__ = [
    "Compose", "DomainOf", "EvalOutcome", "Exhausted", "Explicit", "ImageOf",
    "ListableSet", "Mu", "PrimRec", "Proj", "RecFun", "Succ", "Value", "Zero",
    "diverging", "eval_expr", "eval_universal", "format_program", "godel_decode",
    "godel_encode", "halting_prefix", "is_well_formed", "parse_corpus",
    "parse_program", "set_image", "set_intersect", "set_permute", "set_preimage",
    "set_product", "set_project", "set_union",
]
