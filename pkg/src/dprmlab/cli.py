"""Command-line front end.

Every subcommand prints one JSON object per line.  The first line is the
configuration header ``{"config": {...}}``; the rest are result records.
``--plain`` prints the same records as a tab-separated table instead.
Output depends on the flags alone, so equal flags give identical bytes.

Exit status: 0 success, 2 configuration error, 3 internal assertion
failure, 4 every search in the run ran out of fuel.

Recursive programs use the s-expression syntax::

    expr := succ | (zero K) | (proj I K) | (comp G H1 ... Hm)
          | (prim B S) | (mu F) | NAME

where NAME is a library entry such as ``add`` or ``mul`` (PrimRec
recurses on its first argument, Mu searches its first argument).
Formulas use the positive-existential grammar::

    phi := t = t | phi & phi | phi | phi | E x. phi | (phi)
    t   := x | 0 | 1 | NUMERAL | t + t | t * t | (t)
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from typing import Callable

from dprmlab.kernel import StructuralError, Unknown, Yes

EXIT_OK, EXIT_CONFIG, EXIT_ASSERT, EXIT_UNKNOWN = 0, 2, 3, 4


class Result:
    """Records of one run plus counts of answered and unanswered searches."""

    def __init__(self):
        self.records: list[dict] = []
        self.known = 0
        self.unknown = 0

    def add(self, **rec):
        self.records.append(rec)

    def search(self, outcome) -> bool:
        if isinstance(outcome, Unknown):
            self.unknown += 1
            return False
        self.known += 1
        return True


def _encode(obj):
    if isinstance(obj, (Fraction,)):
        return str(obj)
    if isinstance(obj, (set, frozenset)):
        return sorted(obj, key=str)
    if isinstance(obj, Yes):
        return {"yes": obj.witness}
    if isinstance(obj, Unknown):
        return {"unknown": obj.fuel_used}
    return str(obj)


def _dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"), default=_encode,
                      ensure_ascii=False)


def _cell(v) -> str:
    if isinstance(v, (str, int, Fraction)):
        return str(v)
    return _dumps(v)


def _ints(text: str) -> list[int]:
    text = text.strip()
    if not text:
        return []
    try:
        return [int(x) for x in text.split(",")]
    except ValueError:
        raise StructuralError(f"expected comma-separated integers, got {text!r}") from None


def _rational(text: str) -> Fraction:
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError):
        raise StructuralError(f"not a rational number: {text!r}") from None


def _positive(name: str, value: int):
    if value is not None and value <= 0:
        raise StructuralError(f"--{name.replace('_', '-')} must be positive, got {value}")


# ---- recfun ------------------------------------------------------------

def _program(args):
    from dprmlab.recfun import parse_program

    if args.program_file:
        with open(args.program_file, encoding="utf-8") as fh:
            text = fh.read()
    elif args.program:
        text = args.program
    else:
        raise StructuralError("give --program or --program-file")
    return parse_program(text)


def cmd_recfun_eval(args, res: Result):
    from dprmlab.recfun import Value, eval_expr, format_program, godel_encode

    f = _program(args)
    out = eval_expr(f, _ints(args.args), args.fuel)
    if isinstance(out, Value):
        res.known += 1
        res.add(program=format_program(f), godel=godel_encode(f), status="value",
                value=out.value, steps=out.steps_used)
    else:
        res.unknown += 1
        res.add(program=format_program(f), godel=godel_encode(f), status="unknown",
                steps=out.steps_used)


def cmd_halting(args, res: Result):
    from dprmlab.recfun import halting_prefix

    e = halting_prefix(args.fuel)
    for i, x in enumerate(e):
        res.add(index=i, member=x)
    res.add(fuel_used=e.fuel_used, count=len(res.records))


# ---- presentations -------------------------------------------------------

def cmd_tau(args, res: Result):
    from dprmlab.presentations import tau_table

    for n, q in enumerate(tau_table(args.upto)):
        res.add(n=n, tau=q)


def cmd_tau_inv(args, res: Result):
    from dprmlab.presentations import tau, tau_inverse

    for text in args.q:
        q = _rational(text)
        n = tau_inverse(q)
        assert tau(n) == q, "tau_inverse failed to round-trip"
        res.add(q=q, n=n)


def cmd_cf_encode(args, res: Result):
    from dprmlab.presentations import cf_encode, cf_value, q_pos

    terms = _ints(args.terms)
    n = cf_encode(terms)
    q = q_pos(n)
    assert q == cf_value(terms), "q_pos does not invert cf_encode"
    res.add(terms=terms, n=n, q_pos=q)


def _pres(name):
    from dprmlab.presentations import get_presentation

    return get_presentation(name)


def cmd_bijectivize(args, res: Result):
    from dprmlab.presentations import bijectivize, check_bijectivization

    rho = _pres(args.rho)
    h = bijectivize(rho, args.fuel, upto=args.upto)
    for x, code in enumerate(h):
        res.add(x=x, h=code, value=rho.decode(code))
    if len(h) <= args.upto:
        res.unknown += 1
    else:
        res.known += 1
    res.add(entries=len(h), verified=check_bijectivization(rho, h))


def cmd_equiv(args, res: Result):
    from dprmlab.presentations import find_translation, permuted, swap_pairs

    gamma, rho = _pres(args.gamma), _pres(args.rho)
    if args.permute_gamma:
        gamma = permuted(gamma, swap_pairs, swap_pairs, f"{gamma.name}.swap")
    phis = find_translation(gamma, rho, args.upto, args.fuel, mode=args.mode)
    for n, phi in enumerate(phis):
        if res.search(phi):
            ok = rho.structure.eq(rho.decode(phi.witness), gamma.decode(n))
            res.add(n=n, phi=phi.witness, value=gamma.decode(n), check="ok" if ok else "FAIL")
            assert ok, f"translation wrong at n={n}"
        else:
            res.add(n=n, phi=None, value=gamma.decode(n), check="unknown")


def cmd_universal_listing(args, res: Result):
    from dprmlab.presentations import (
        UniversalListing,
        natural_listing_data,
        rational_listing_data,
        tau,
    )

    rho = _pres(args.rho)
    data = rational_listing_data() if rho.structure.name == "Q" else natural_listing_data()
    if rho.structure.name not in ("Q", "N"):
        raise StructuralError("universal listings are provided for N and Q presentations")
    ul = UniversalListing(data, rho, mode=args.mode)
    for n in range(args.upto + 1):
        a = ul(n, args.fuel)
        if not res.search(a):
            res.add(n=n, alpha=None, check="unknown")
            break
        v = rho.decode(a.witness)
        want = tau(n) if rho.structure.name == "Q" else n
        ok = rho.structure.eq(v, want)
        res.add(n=n, alpha=a.witness, value=v, check="ok" if ok else "FAIL")
        assert ok, f"universal listing wrong at n={n}"


# ---- peformula ----------------------------------------------------------

def _formula(args, structure):
    from dprmlab.peformula import parse_formula

    if args.formula_file:
        with open(args.formula_file, encoding="utf-8") as fh:
            text = fh.read()
    elif args.formula:
        text = args.formula
    else:
        raise StructuralError("give --formula or --formula-file")
    return parse_formula(text, constants=structure.signature.constants)


def _assignment(items, structure) -> dict:
    out = {}
    for item in items or ():
        var, sep, val = item.partition("=")
        if not sep:
            raise StructuralError(f"assignment {item!r} is not of the form var=value")
        if structure.name.startswith("F"):
            from dprmlab.ffdio import parse_ratfun

            out[var.strip()] = parse_ratfun(val)
        else:
            q = _rational(val)
            out[var.strip()] = q if structure.name == "Q" else int(q)
    return out


def cmd_pe_eval(args, res: Result):
    from dprmlab.peformula import format_formula, satisfy_search, verify_witnesses

    pres = _pres(args.pres)
    phi = _formula(args, pres.structure)
    env = _assignment(args.assign, pres.structure)
    out = satisfy_search(phi, pres, env, args.fuel)
    if res.search(out):
        assert verify_witnesses(phi, pres.structure, env, out.witness)
        res.add(formula=format_formula(phi), assignment=env, result="yes",
                witnesses=dict(sorted(out.witness.items())))
    else:
        res.add(formula=format_formula(phi), assignment=env, result="unknown",
                fuel_used=out.fuel_used)


def cmd_pe_enumerate(args, res: Result):
    from dprmlab.peformula import definable_prefix

    pres = _pres(args.pres)
    phi = _formula(args, pres.structure)
    free = [v.strip() for v in args.free.split(",")] if args.free else None
    e = definable_prefix(phi, pres, args.fuel, free)
    for i, tup in enumerate(e):
        res.add(index=i, tuple=list(tup))
    res.add(fuel_used=e.fuel_used, count=len(res.records))


def _interp(name, structure_name=None):
    from dprmlab.peformula import get_interpretation
    from dprmlab.presentations import structure_by_name

    return get_interpretation(name, structure_by_name(structure_name) if structure_name else None)


def cmd_compose(args, res: Result):
    from dprmlab.peformula import compose_interpretations, format_formula

    t1, t2 = _interp(args.theta1), _interp(args.theta2)
    th = compose_interpretations(t1, t2)
    dom = format_formula(th.domain_formula) if th.domain_formula is not None else None
    res.add(name=th.name, source=th.source.name, target=th.target.name, rank=th.rank,
            domain_formula=dom)
    for sym in sorted(th.pullbacks):
        res.add(symbol=sym, pullback=format_formula(th.pullbacks[sym]))


def cmd_graph(args, res: Result):
    from dprmlab.peformula import graph_prefix

    th = _interp(args.theta)
    e = graph_prefix(th, _pres(args.source), _pres(args.target), args.fuel)
    for i, item in enumerate(e):
        res.add(index=i, value=item[0], args=list(item[1:]))
    res.add(fuel_used=e.fuel_used, count=len(res.records))


def cmd_homotopy(args, res: Result):
    from dprmlab.peformula import homotopy_prefix

    e = homotopy_prefix(_interp(args.theta), _interp(args.theta2), _pres(args.pres), args.fuel)
    for i, (u, v) in enumerate(e):
        res.add(index=i, u=list(u), v=list(v))
    res.add(fuel_used=e.fuel_used, count=len(res.records))


def cmd_foursquares(args, res: Result):
    from dprmlab.peformula import four_squares

    ns = _ints(args.n) if args.n else range(args.upto + 1)
    for n in ns:
        if n < 0:
            raise StructuralError("four squares needs n >= 0")
        sq = four_squares(n)
        assert sum(a * a for a in sq) == n
        res.add(n=n, squares=list(sq))


# ---- ffdio ---------------------------------------------------------------

def cmd_pheidas(args, res: Result):
    from dprmlab.ffdio import pheidas_solutions

    out = pheidas_solutions(args.p, args.deg, base_height=args.base_height)
    assert out["agree"], "family and oracle solution sets differ"
    for x, y, z in out["oracle"]:
        res.add(x=x, y=y, z=z)
    res.add(x_projection=out["x_projection"])
    res.add(y_projection=out["y_projection"])
    res.add(z_projection=out["z_projection"])
    res.add(solutions=len(out["oracle"]), family_agrees=out["agree"])


def cmd_frobenius(args, res: Result):
    from dprmlab.ffdio import frobenius_leq, parse_ratfun

    x, y = parse_ratfun(args.x), parse_ratfun(args.y)
    if x.p != y.p:
        raise StructuralError("x and y live over different primes")
    s = frobenius_leq(x, y, args.smax)
    res.add(x=x, y=y, result="no" if s is None else "yes", s=s)


def cmd_automaton(args, res: Result):
    from dprmlab.ffdio import count_accepted, multiples_automaton, powers_of_base_automaton

    if args.kind == "multiples":
        M = multiples_automaton(args.m, args.base)
    else:
        M = powers_of_base_automaton(args.base)
    assert M.zero_invariant(4), "automaton depends on trailing high zeros"
    members = [n for n in range(args.upto + 1) if M.accepts(n)]
    res.add(kind=args.kind, base=args.base, states=len(M.states), accepted=members,
            count=count_accepted(M, args.upto))


def cmd_christol(args, res: Result):
    from dprmlab.ffdio import (
        artin_schreier_relation,
        christol_fb,
        christol_naturals,
        geometric_relation,
        verify_algebraic,
    )

    for b in range(args.p):
        r = verify_algebraic(christol_fb(args.p, b, args.N), artin_schreier_relation(args.p))
        res.add(series=f"f_{b}", relation="T^p - T + t", residual_ord=r, passes=r >= args.N)
    r = verify_algebraic(christol_naturals(args.p, args.N), geometric_relation())
    res.add(series="f_N", relation="(1 - t) T - 1", residual_ord=r, passes=r >= args.N)


def cmd_bigA(args, res: Result):
    from dprmlab.ffdio import bigA_counting_check, bigA_members, member_support

    members = bigA_members(args.p, args.jmax)
    for a in members:
        res.add(member=a, support=member_support(args.p, a))
    for j in range(1, args.jmax + 1):
        c = bigA_counting_check(args.p, j)
        res.add(j=j, count=c, expected=1 + 2 ** (j - 1))


def cmd_product_identity(args, res: Result):
    from dprmlab.ffdio import fA_convergence_check, n_r, product_identity_check

    res.add(p=args.p, r=args.r, N=args.N, n_r=n_r(args.p, args.r),
            identity=product_identity_check(args.p, args.r, args.N),
            fA_gap=fA_convergence_check(args.p, args.r, args.N))


def cmd_leftdio(args, res: Result):
    from dprmlab.ffdio import l_alpha_member, left_setup
    from dprmlab.ffdio.leftdio import leftdio_ticks
    from dprmlab.kernel import Enumerator

    coeffs = [_rational(c) for c in args.minpoly.split(",")]
    setup = left_setup(coeffs, _rational(args.q2))
    e = Enumerator(leftdio_ticks(setup), args.fuel)
    best = None
    for i, u in enumerate(e):
        assert l_alpha_member(u, setup.alpha)
        best = u if best is None else max(best, u)
        res.add(index=i, u=u)
    alpha = setup.alpha.refine(Fraction(1, 10**12))
    res.add(count=len(res.records), max=best, alpha_approx=f"{float(alpha.hi):.12f}",
            gap=None if best is None else f"{float(alpha.hi - best):.12f}")


# ---- parser ---------------------------------------------------------------

def _add(sub, name, func: Callable, help_text: str):
    p = sub.add_parser(name, help=help_text)
    p.set_defaults(func=func)
    p.add_argument("--plain", action="store_true", help="tab-separated table output")
    return p


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="dprmlab", description=__doc__.splitlines()[0])
    sub = ap.add_subparsers(dest="command", required=True)

    p = _add(sub, "recfun-eval", cmd_recfun_eval, "evaluate a recursive program")
    p.add_argument("--program")
    p.add_argument("--program-file")
    p.add_argument("--args", default="")
    p.add_argument("--fuel", type=int, default=10_000)

    p = _add(sub, "halting", cmd_halting, "enumerate the halting set")
    p.add_argument("--fuel", type=int, default=2_000)

    p = _add(sub, "tau", cmd_tau, "list tau(0..upto)")
    p.add_argument("--upto", type=int, default=10)

    p = _add(sub, "tau-inv", cmd_tau_inv, "index of rationals in the tau listing")
    p.add_argument("--q", action="append", required=True)

    p = _add(sub, "cf-encode", cmd_cf_encode, "code of a continued fraction")
    p.add_argument("--terms", required=True, help="a0,a1,...,ad with ad = 1")

    p = _add(sub, "bijectivize", cmd_bijectivize, "least-code bijectivization")
    p.add_argument("--rho", default="rat-pairs")
    p.add_argument("--upto", type=int, default=50)
    p.add_argument("--fuel", type=int, default=1_000_000)

    p = _add(sub, "equiv", cmd_equiv, "translate between two presentations")
    p.add_argument("--gamma", default="rat-tau")
    p.add_argument("--rho", default="rat-pairs")
    p.add_argument("--upto", type=int, default=50)
    p.add_argument("--fuel", type=int, default=1_000_000)
    p.add_argument("--mode", choices=("row", "delta"), default="row")
    p.add_argument("--permute-gamma", action="store_true", help="use gamma o sigma, sigma(n) = n xor 1")

    p = _add(sub, "universal-listing", cmd_universal_listing, "alpha with rho o alpha = tau")
    p.add_argument("--rho", default="rat-pairs")
    p.add_argument("--upto", type=int, default=50)
    p.add_argument("--fuel", type=int, default=1_000_000)
    p.add_argument("--mode", choices=("row", "graph"), default="row")

    for name, func, help_text in (("pe-eval", cmd_pe_eval, "search witnesses for a formula"),
                                  ("pe-enumerate", cmd_pe_enumerate, "enumerate a definable set")):
        p = _add(sub, name, func, help_text)
        p.add_argument("--formula")
        p.add_argument("--formula-file")
        p.add_argument("--pres", default="nat-id")
        p.add_argument("--fuel", type=int, default=10_000)
        if name == "pe-eval":
            p.add_argument("--assign", action="append", help="var=value, repeatable")
        else:
            p.add_argument("--free", help="comma-separated output variables")

    p = _add(sub, "compose", cmd_compose, "compose two interpretations")
    p.add_argument("--theta1", required=True)
    p.add_argument("--theta2", required=True)

    p = _add(sub, "graph", cmd_graph, "enumerate the graph of an interpretation")
    p.add_argument("--theta", required=True)
    p.add_argument("--source", required=True)
    p.add_argument("--target", required=True)
    p.add_argument("--fuel", type=int, default=2_000)

    p = _add(sub, "homotopy", cmd_homotopy, "enumerate K(theta, theta2)")
    p.add_argument("--theta", required=True)
    p.add_argument("--theta2", required=True)
    p.add_argument("--pres", required=True)
    p.add_argument("--fuel", type=int, default=2_000)

    p = _add(sub, "foursquares", cmd_foursquares, "lexicographically least four squares")
    p.add_argument("--upto", type=int, default=20)
    p.add_argument("--n", help="comma-separated values instead of 0..upto")

    p = _add(sub, "pheidas", cmd_pheidas, "solutions of the Pheidas system")
    p.add_argument("--p", type=int, default=3)
    p.add_argument("--deg", type=int, default=27)
    p.add_argument("--base-height", type=int, default=5)

    p = _add(sub, "frobenius", cmd_frobenius, "decide y = x^(p^s), s <= smax")
    p.add_argument("--x", required=True, help="e.g. 'poly p=3 [0,1]'")
    p.add_argument("--y", required=True)
    p.add_argument("--smax", type=int, default=8)

    p = _add(sub, "automaton", cmd_automaton, "run a digit automaton")
    p.add_argument("--kind", choices=("multiples", "powers"), default="powers")
    p.add_argument("--base", type=int, default=2)
    p.add_argument("--m", type=int, default=3)
    p.add_argument("--upto", type=int, default=100)

    p = _add(sub, "christol", cmd_christol, "algebraic relations of generating series")
    p.add_argument("--p", type=int, default=3)
    p.add_argument("--N", type=int, default=81)

    p = _add(sub, "bigA", cmd_bigA, "the lacunary set of sums of p^(j^j)")
    p.add_argument("--p", type=int, default=2)
    p.add_argument("--jmax", type=int, default=3)

    p = _add(sub, "product-identity", cmd_product_identity, "(1+t)^(n_r) against the product")
    p.add_argument("--p", type=int, default=2)
    p.add_argument("--r", type=int, default=2)
    p.add_argument("--N", type=int, default=64)

    p = _add(sub, "leftdio", cmd_leftdio, "enumerate {u < q2 : p(u) > 0} in tau order")
    p.add_argument("--minpoly", default="2,0,-1", help="coefficients, lowest degree first")
    p.add_argument("--q2", default="2")
    p.add_argument("--fuel", type=int, default=1_000)
    return ap


_PRIMES = {"p"}
_NAMES = {"rho": "presentation", "gamma": "presentation", "pres": "presentation",
          "source": "presentation", "target": "presentation"}


def validate(args) -> None:
    """Reject bad limits and unknown registry names before any work."""
    from dprmlab.presentations import registry_names

    for key, value in vars(args).items():
        if key in ("fuel", "upto", "deg", "N", "smax", "jmax", "r", "m", "base", "base_height"):
            if key in ("upto", "smax") and value == 0:
                continue
            _positive(key, value)
        if key in _PRIMES and value is not None:
            if value < 2 or any(value % d == 0 for d in range(2, int(value**0.5) + 1)):
                raise StructuralError(f"--p must be prime, got {value}")
        if key in _NAMES and value is not None:
            try:
                _pres(value)
            except StructuralError:
                raise StructuralError(
                    f"--{key}: unknown presentation {value!r}; known: {registry_names()}"
                ) from None
    if args.command == "pheidas" and args.p == 2:
        raise StructuralError("--p: the Pheidas system is provided for odd p")


def config_header(args) -> dict:
    cfg = {k: v for k, v in sorted(vars(args).items()) if k not in ("func", "plain")}
    return {"config": cfg}


def emit(header: dict, records: list[dict], plain: bool, out) -> None:
    if not plain:
        out.write(_dumps(header) + "\n")
        for r in records:
            out.write(_dumps(r) + "\n")
        return
    cfg = header["config"]
    out.write("# " + " ".join(f"{k}={_cell(v)}" for k, v in cfg.items()) + "\n")
    keys: list[str] = []
    for r in records:
        ks = list(r)
        if ks != keys:
            keys = ks
            out.write("\t".join(keys) + "\n")
        out.write("\t".join(_cell(r[k]) for k in keys) + "\n")


def main(argv=None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as e:
        return int(e.code) if e.code else EXIT_OK
    try:
        validate(args)
    except StructuralError as e:
        print(f"dprmlab {args.command}: config error: {e}", file=sys.stderr)
        return EXIT_CONFIG
    res = Result()
    try:
        args.func(args, res)
    except AssertionError as e:
        print(f"dprmlab {args.command}: internal assertion failed: {e}", file=sys.stderr)
        return EXIT_ASSERT
    except (StructuralError, OSError) as e:
        print(f"dprmlab {args.command}: error: {e}", file=sys.stderr)
        return EXIT_CONFIG
    emit(config_header(args), res.records, args.plain, sys.stdout)
    if res.unknown and not res.known:
        return EXIT_UNKNOWN
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
