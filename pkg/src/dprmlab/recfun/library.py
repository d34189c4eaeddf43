"""Small standard library of programs and the reference test corpus."""

from __future__ import annotations

from dprmlab.recfun.expr import Compose, Mu, PrimRec, Proj, RecFun, Succ, Zero


def const(k: int, arity: int) -> RecFun:
    f: RecFun = Zero(arity)
    for _ in range(k):
        f = Compose(Succ(), (f,))
    return f


def swap(f: RecFun) -> RecFun:
    """g(a, b) = f(b, a)."""
    return Compose(f, (Proj(1, 2), Proj(0, 2)))


# add(y, x) = x + y
ADD = PrimRec(Proj(0, 1), Compose(Succ(), (Proj(1, 3),)))
# pred(y) = max(y - 1, 0)
PRED = PrimRec(Zero(0), Proj(0, 2))
# sub_rev(y, x) = x -. y ; monus(x, y) = x -. y
SUB_REV = PrimRec(Proj(0, 1), Compose(PRED, (Proj(1, 3),)))
MONUS = swap(SUB_REV)
# mul(y, x) = x * y
MUL = PrimRec(Zero(1), Compose(ADD, (Proj(1, 3), Proj(2, 3))))
ABSDIFF = Compose(ADD, (MONUS, swap(MONUS)))
# sg(x) = 1 if x > 0 else 0 ; nsg(x) = 1 - sg(x)
SG = PrimRec(Zero(0), const(1, 2))
NSG = PrimRec(const(1, 0), Zero(2))
DOUBLE = Compose(ADD, (Proj(0, 1), Proj(0, 1)))
SQUARE = Compose(MUL, (Proj(0, 1), Proj(0, 1)))

# mu y [ y + y = 4 ] : arity 0, value 2
DOUBLING_EQUALS_4 = Mu(Compose(ABSDIFF, (Compose(DOUBLE, (Proj(0, 1),)), const(4, 1))))
# mu y [ y + 1 = 0 ] : never halts
NEVER_ZERO = Mu(Compose(Succ(), (Proj(0, 2),)))
# exact half: mu y [ |2y - x| = 0 ], defined on even x
HALF_EXACT = Mu(Compose(ABSDIFF, (Compose(DOUBLE, (Proj(0, 2),)), Proj(1, 2))))
# exact square root, defined on perfect squares
SQRT_EXACT = Mu(Compose(ABSDIFF, (Compose(SQUARE, (Proj(0, 2),)), Proj(1, 2))))
# least y with y * y >= x  (total)
CEIL_SQRT = Mu(Compose(MONUS, (Proj(1, 2), Compose(SQUARE, (Proj(0, 2),)))))
# exact difference x - y, defined when x >= y: mu z [ |z + y - x| = 0 ]
DIFF_EXACT = Mu(
    Compose(
        ABSDIFF,
        (Compose(ADD, (Proj(0, 3), Proj(2, 3))), Proj(1, 3)),
    )
)

LIBRARY: dict[str, RecFun] = {
    "add": ADD,
    "pred": PRED,
    "monus": MONUS,
    "mul": MUL,
    "absdiff": ABSDIFF,
    "sg": SG,
    "nsg": NSG,
    "double": DOUBLE,
    "square": SQUARE,
    "half_exact": HALF_EXACT,
    "sqrt_exact": SQRT_EXACT,
    "ceil_sqrt": CEIL_SQRT,
    "diff_exact": DIFF_EXACT,
    "never_zero": NEVER_ZERO,
}


def corpus() -> list[tuple[str, RecFun, object]]:
    """Twenty programs of arity 1 or 2 with a Python reference (None = undefined)."""

    def sub(x, y):
        return max(x - y, 0)

    return [
        ("zero1", Zero(1), lambda x: 0),
        ("succ", Succ(), lambda x: x + 1),
        ("proj0of2", Proj(0, 2), lambda x, y: x),
        ("proj1of2", Proj(1, 2), lambda x, y: y),
        ("add", ADD, lambda y, x: x + y),
        ("pred", PRED, lambda y: max(y - 1, 0)),
        ("monus", MONUS, sub),
        ("mul", MUL, lambda y, x: x * y),
        ("absdiff", ABSDIFF, lambda x, y: abs(x - y)),
        ("sg", SG, lambda x: 1 if x else 0),
        ("nsg", NSG, lambda x: 0 if x else 1),
        ("double", DOUBLE, lambda x: 2 * x),
        ("square", SQUARE, lambda x: x * x),
        ("plus3", Compose(ADD, (const(3, 1), Proj(0, 1))), lambda x: x + 3),
        ("half_exact", HALF_EXACT, lambda x: x // 2 if x % 2 == 0 else None),
        ("sqrt_exact", SQRT_EXACT, _sqrt_exact),
        ("ceil_sqrt", CEIL_SQRT, _ceil_sqrt),
        ("diff_exact", DIFF_EXACT, lambda x, y: x - y if x >= y else None),
        ("never_zero", NEVER_ZERO, lambda x: None),
        ("mu_const0", Mu(Zero(2)), lambda x: 0),
    ]


def _sqrt_exact(x):
    from math import isqrt

    r = isqrt(x)
    return r if r * r == x else None


def _ceil_sqrt(x):
    from math import isqrt

    r = isqrt(x)
    return r if r * r == x else r + 1
