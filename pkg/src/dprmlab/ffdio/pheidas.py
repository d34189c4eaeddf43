"""Artin-Schreier preimages, the Frobenius relation and the Pheidas curve

    x - t = y^p - y,        1/x - 1/t = z^p - z        over F_p(t).

Completeness argument used by the oracle (p odd).  Write A(f) = f^p - f.

1. If f = a/B in lowest terms, A(f) = (a^p - a B^(p-1)) / B^p is again in
   lowest terms, so the reduced denominator of anything in the image of A
   is a p-th power.
2. Applied to 1/x - 1/t with x = N/D: t must divide N; writing
   N = t^k M, either p | k (then x is a p-th power, as D is one by 1.) or
   k = 1.
3. If x = U^p is a solution, so is U: from U^p - t = A(y), the element
   v = y - U satisfies A(v) = U - t, and symmetrically for 1/U.  Heights
   drop by a factor p.
4. If k = 1, then x = t V^p.  Comparing principal parts at t = 0 and at
   infinity (terms t^m with p not dividing m are independent modulo the
   image of A) gives V(0) = V(inf) = 1.  Writing V = M/B,
   t (M - B)^p = A-numerator, and differentiating y' = -((M - B)/B)^p,
   whose reduced denominator B^p cannot divide B^2 unless M = B.
   Hence x = t.

So every solution has x = t^(p^n).  The oracle never uses this closed
form: it brute-forces all x up to a small height (which also confirms
steps 2 and 4 there), lifts larger heights by p-th powers of smaller
solutions (step 3), and always recomputes y and z by solving the
F_p-linear Artin-Schreier equations.
"""

from __future__ import annotations

from itertools import product

from dprmlab.ffdio.poly import FpPoly, FpRatFun
from dprmlab.kernel import StructuralError


# ---- linear algebra mod p ----------------------------------------------

def solve_mod_p(rows: list[list[int]], rhs: list[int], p: int):
    """Solve rows . a = rhs over F_p.

    Returns (particular solution or None, basis of the kernel)."""
    n_rows = len(rows)
    n_cols = len(rows[0]) if rows else 0
    m = [list(r) + [b] for r, b in zip(rows, rhs)]
    pivots = []
    r = 0
    for c in range(n_cols):
        piv = next((i for i in range(r, n_rows) if m[i][c] % p), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = pow(m[r][c], p - 2, p)
        m[r] = [(v * inv) % p for v in m[r]]
        for i in range(n_rows):
            if i != r and m[i][c]:
                f = m[i][c]
                m[i] = [(a - f * b) % p for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
    if any(row[-1] % p for row in m[r:]):
        return None, []
    sol = [0] * n_cols
    for i, c in enumerate(pivots):
        sol[c] = m[i][-1]
    free = [c for c in range(n_cols) if c not in pivots]
    kernel = []
    for fc in free:
        v = [0] * n_cols
        v[fc] = 1
        for i, c in enumerate(pivots):
            v[c] = (-m[i][fc]) % p
        kernel.append(v)
    return sol, kernel


# ---- Artin-Schreier ----------------------------------------------------

def pth_root(f: FpPoly) -> FpPoly | None:
    """g with g^p = f, if f is a p-th power in F_p[t]."""
    p = f.p
    if any(a and i % p for i, a in enumerate(f.c)):
        return None
    return FpPoly(p, f.c[::p])


def artin_schreier(f: FpRatFun) -> FpRatFun:
    return f.frobenius() - f


def artin_schreier_preimage(g: FpRatFun, degree_bound: int, max_kernel: int = 4) -> list[FpRatFun]:
    """All f with f^p - f = g and deg num, deg den of f at most ``degree_bound``."""
    p = g.p
    B = pth_root(g.den)
    if B is None or B.deg > degree_bound:
        return []
    b = B.deg
    # a solution a/B has deg a <= max(deg num(g) / p, deg B)
    m = min(max(g.num.deg // p, b), degree_bound)
    if m < 0:
        m = 0
    Bp1 = B ** (p - 1)
    cols = []
    for i in range(m + 1):
        col = FpPoly.monomial(p, i * p) - FpPoly.monomial(p, i) * Bp1
        cols.append(col)
    height = max([c.deg for c in cols] + [g.num.deg, 0]) + 1
    rows = [[col.coeff(r) for col in cols] for r in range(height)]
    rhs = [g.num.coeff(r) for r in range(height)]
    sol, kernel = solve_mod_p(rows, rhs, p)
    if sol is None:
        return []
    if len(kernel) > max_kernel:
        raise StructuralError("Artin-Schreier kernel unexpectedly large")
    out = set()
    for coeffs in product(range(p), repeat=len(kernel)):
        a = list(sol)
        for c, v in zip(coeffs, kernel):
            a = [(x + c * y) % p for x, y in zip(a, v)]
        f = FpRatFun(FpPoly(p, a), B)
        if max(f.num.deg, f.den.deg) > degree_bound:
            continue
        assert artin_schreier(f) == g, "Artin-Schreier solver produced a non-solution"
        out.add(f)
    return sorted(out)


def is_constant_coset(sols: list[FpRatFun]) -> bool:
    """Empty, or exactly p elements whose pairwise differences are constants."""
    if not sols:
        return True
    p = sols[0].p
    if len(sols) != p:
        return False
    base = sols[0]
    diffs = {s - base for s in sols}
    return all(d.den.deg == 0 and d.num.deg <= 0 for d in diffs) and len(diffs) == p


# ---- Frobenius relation -----------------------------------------------

def frobenius_leq(x: FpRatFun, y: FpRatFun, s_max: int):
    """Least s <= s_max with y = x^(p^s), or None."""
    cur = x
    for s in range(s_max + 1):
        if cur == y:
            return s
        if cur.height() > y.height():
            return None
        cur = cur.frobenius()
    return None


# ---- Pheidas curve -----------------------------------------------------

def _check_p(p):
    if p <= 2:
        raise StructuralError("the Pheidas system is used here for odd p only")


def _height(f: FpRatFun) -> int:
    return max(f.num.deg, f.den.deg)


def family_solutions(p: int, degree_bound: int) -> list[tuple]:
    """x = t^(p^n), y = b + sum_{i<n} t^(p^i), z = c + sum_{i<n} t^(-p^i)."""
    _check_p(p)
    t = FpRatFun.t(p)
    out = []
    n = 0
    while p**n <= degree_bound:
        x = t ** (p**n)
        ys = sum((t ** (p**i) for i in range(n)), FpRatFun.const(p, 0))
        zs = sum((t ** (-(p**i)) for i in range(n)), FpRatFun.const(p, 0))
        for b in range(p):
            for c in range(p):
                y, z = ys + b, zs + c
                if max(_height(x), _height(y), _height(z)) <= degree_bound:
                    out.append((x, y, z))
        n += 1
    return sorted(out)


def _solutions_at(x: FpRatFun, degree_bound: int) -> list[tuple]:
    p = x.p
    t = FpRatFun.t(p)
    if x.is_zero():
        return []
    ys = artin_schreier_preimage(x - t, degree_bound)
    if not ys:
        return []
    zs = artin_schreier_preimage(x.inverse() - t.inverse(), degree_bound)
    return [(x, y, z) for y in ys for z in zs]


def _quick_reject(x: FpRatFun) -> bool:
    """Necessary denominator conditions (fact 1 applied to both equations)."""
    if pth_root(x.den) is None:
        return True
    g2 = x.inverse() - FpRatFun.t(x.p).inverse()
    return pth_root(g2.den) is None


def exhaustive_solutions(p: int, height: int) -> list[tuple]:
    """Every solution with height(x) <= height, by enumerating all x."""
    _check_p(p)
    out = []
    dens = []
    for d in range(height + 1):
        for low in product(range(p), repeat=d):
            D = FpPoly(p, list(low) + [1])
            if pth_root(D) is not None:
                dens.append(D)
    for D in dens:
        for coeffs in product(range(p), repeat=height + 1):
            N = FpPoly(p, coeffs)
            if N.is_zero() or N.gcd(D).deg > 0:
                continue
            x = FpRatFun(N, D)
            if _quick_reject(x):
                continue
            out.extend(_solutions_at(x, height))
    return sorted(out)


def oracle_solutions(p: int, degree_bound: int, base_height: int = 5) -> list[tuple]:
    """All solutions with every height <= degree_bound.

    Heights up to ``base_height`` are searched exhaustively.  Above that, a
    solution x is either a p-th power of a solution of height <= bound/p or
    x = t (see the module docstring); those candidates are checked and their
    y, z recomputed by Artin-Schreier linear algebra.
    """
    _check_p(p)
    if degree_bound <= base_height:
        sols = exhaustive_solutions(p, degree_bound)
        return sorted(s for s in sols if max(map(_height, s)) <= degree_bound)
    xs = {FpRatFun.t(p)}
    for (u, _, _) in oracle_solutions(p, degree_bound // p, base_height):
        xs.add(u.frobenius())
    out = []
    for x in sorted(xs):
        if _height(x) <= degree_bound:
            out.extend(_solutions_at(x, degree_bound))
    return sorted(out)


def pheidas_solutions(p: int, degree_bound: int, base_height: int = 5) -> dict:
    """Family and oracle solution sets with their projections."""
    fam = family_solutions(p, degree_bound)
    orc = oracle_solutions(p, degree_bound, base_height)
    for x, y, z in orc:
        t = FpRatFun.t(p)
        assert x - t == artin_schreier(y) and x.inverse() - t.inverse() == artin_schreier(z)
    return {
        "family": fam,
        "oracle": orc,
        "agree": fam == orc,
        "x_projection": sorted({s[0] for s in orc}),
        "y_projection": sorted({s[1] for s in orc}),
        "z_projection": sorted({s[2] for s in orc}),
    }
