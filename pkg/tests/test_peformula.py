from fractions import Fraction as F
from itertools import product

import pytest
from hypothesis import given, settings, strategies as st

from dprmlab.kernel import StructuralError, Unknown, Yes
from dprmlab.peformula import (
    And,
    App,
    Atomic,
    Const,
    Exists,
    FormulaSyntaxError,
    Num,
    Or,
    Var,
    builtin_interpretations,
    check_pullbacks,
    compose_interpretations,
    definable_prefix,
    eval_matrix,
    format_formula,
    four_squares,
    free_vars,
    get_interpretation,
    graph_prefix,
    homotopy_prefix,
    least_squares,
    parse_formula,
    prenex,
    pull_formula,
    satisfy_search,
    verify_witnesses,
)
from dprmlab.presentations import INT, NAT, RAT, get_presentation

NAT_ID = get_presentation("nat-id")
INT_Z = get_presentation("int-zigzag")


# ---- syntax --------------------------------------------------------------

var_names = st.sampled_from(["x", "y", "z", "w1"])
terms = st.recursive(
    st.one_of(var_names.map(Var), st.sampled_from(["0", "1"]).map(Const),
              st.integers(2, 5).map(Num)),
    lambda sub: st.builds(lambda op, a, b: App(op, (a, b)), st.sampled_from(["+", "*"]), sub, sub),
    max_leaves=6,
)
atoms = st.builds(lambda a, b: Atomic("=", (a, b)), terms, terms)
formulas = st.recursive(
    atoms,
    lambda sub: st.one_of(
        st.builds(And, sub, sub),
        st.builds(Or, sub, sub),
        st.builds(Exists, var_names, sub),
    ),
    max_leaves=5,
)


@given(formulas)
@settings(max_examples=200)
def test_format_parse_roundtrip(phi):
    assert parse_formula(format_formula(phi)) == phi


def test_exists_scopes_to_the_right():
    phi = parse_formula("E y. x = y & y = 1")
    assert isinstance(phi, Exists) and free_vars(phi) == {"x"}
    psi = parse_formula("(E y. x = y) & y = 1")
    assert free_vars(psi) == {"x", "y"}
    assert format_formula(psi) == "(E y. x = y) & y = 1"


def test_numerals_and_precedence():
    phi = parse_formula("x = 1 + 2 * y")
    assert phi.args[1] == App("+", (Const("1"), App("*", (Num(2), Var("y")))))


@pytest.mark.parametrize("text,pos", [("~ (x = y)", 0), ("x = ", 4), ("A x. x = x", 2), ("x = y )", 6)])
def test_syntax_errors(text, pos):
    with pytest.raises(FormulaSyntaxError) as err:
        parse_formula(text)
    assert err.value.pos == pos


def test_declared_constants():
    phi = parse_formula("x = t * t", constants=("t",))
    assert phi.args[1] == App("*", (Const("t"), Const("t")))


def test_prenex_renames_apart():
    phi = parse_formula("(E y. x = y + y) & (E y. x = y * y) & y = 0")
    bound, matrix = prenex(phi)
    assert len(set(bound)) == 2 and "y" not in bound
    assert free_vars(matrix) == {"x", "y"} | set(bound)


# ---- semi-decision -------------------------------------------------------

def test_satisfy_finds_half():
    out = satisfy_search(parse_formula("E y. y + y = x"), NAT_ID, {"x": 4}, 100)
    assert out == Yes({"y": 2})


def test_satisfy_never_says_no():
    out = satisfy_search(parse_formula("E y. y + 1 = 0"), NAT_ID, {}, 500)
    assert out == Unknown(500)


def test_satisfy_missing_assignment():
    with pytest.raises(StructuralError):
        satisfy_search(parse_formula("x = 0"), NAT_ID, {}, 10)


def test_witness_tie_order():
    # total 2 is reached first; within it the inner variable takes the larger index
    out = satisfy_search(parse_formula("E a. E b. a + b = 2"), NAT_ID, {}, 100)
    assert out == Yes({"a": 0, "b": 2})


def test_quantifier_free_uses_one_unit():
    assert satisfy_search(parse_formula("x = x"), NAT_ID, {"x": 3}, 1) == Yes({})


@given(st.integers(0, 30), st.integers(0, 30))
@settings(max_examples=40, deadline=None)
def test_satisfy_sum_matches_oracle(a, b):
    phi = parse_formula("E u. x = y + u")
    out = satisfy_search(phi, NAT_ID, {"x": a, "y": b}, 60)
    if a >= b:
        assert out == Yes({"u": a - b})
        assert verify_witnesses(phi, NAT, {"x": a, "y": b}, out.witness)
    else:
        assert isinstance(out, Unknown)


def test_definable_squares():
    got = definable_prefix(parse_formula("E y. x = y * y"), NAT_ID, 200).prefix()
    assert [t[0] for t in got] == [0, 1, 4, 9]


def test_definable_prefix_sound_over_rationals():
    phi = parse_formula("E y. x * y = 1")
    got = definable_prefix(phi, get_presentation("rat-tau"), 300).prefix()
    assert got and all(t[0] != 0 for t in got)


def test_four_squares_define_naturals_in_integers():
    phi = parse_formula("E a. E b. E c. E d. x = a * a + b * b + c * c + d * d")
    got = [t[0] for t in definable_prefix(phi, INT_Z, 40_000).prefix()]
    assert all(v >= 0 for v in got)
    assert set(range(6)) <= set(got)


# ---- four squares ----------------------------------------------------------

def brute_least_four(n):
    r = int(n**0.5) + 1
    for q in product(range(r + 1), repeat=4):
        if sum(a * a for a in q) == n:
            return q


def test_four_squares_values():
    assert four_squares(7) == (1, 1, 1, 2)
    assert four_squares(0) == (0, 0, 0, 0)
    assert least_squares(3, 2) is None


def test_four_squares_lexicographic_vs_brute_force():
    for n in range(300):
        assert four_squares(n) == brute_least_four(n)


@given(st.integers(0, 10**6))
@settings(max_examples=100, deadline=None)
def test_four_squares_identity(n):
    assert sum(a * a for a in four_squares(n)) == n


# ---- interpretations --------------------------------------------------------

def test_builtin_maps():
    th = builtin_interpretations()
    assert th["nz"].apply((5, 3)) == 2
    assert th["kappa-zq"].apply((3, -6)) == F(-1, 2)
    assert th["zn"].in_domain((4,)) and not th["zn"].in_domain((-1,))
    assert not th["kappa-zq"].in_domain((1, 0))
    assert th["int-in-rat"].domain_formula is None


@pytest.mark.parametrize("name,samples", [
    ("nz", [(a, b) for a in range(4) for b in range(4)]),
    ("zn", [(z,) for z in range(-2, 5)]),
    ("kappa-zq", [(a, b) for a in range(-2, 3) for b in range(-2, 3)]),
    ("int-in-rat", [(F(a, b),) for a in range(-3, 4) for b in (1, 2)]),
])
def test_pullbacks_agree_with_maps(name, samples):
    assert check_pullbacks(get_interpretation(name), samples) == []


def test_check_pullbacks_detects_wrong_formula():
    theta = get_interpretation("nz")
    broken = type(theta)("nz-bad", theta.source, theta.target, 2, theta.map, theta.domain,
                         theta.domain_formula, {**theta.pullbacks, "0": parse_formula("x0 = 0")})
    assert check_pullbacks(broken, [(1, 1), (0, 0)])


@pytest.mark.parametrize("x1", [1, -1, 2, 3, -4, 5])
def test_kappa_domain_formula_accepts_nonzero(x1):
    theta = get_interpretation("kappa-zq")
    out = satisfy_search(theta.domain_formula, INT_Z, {"x0": 0, "x1": x1}, 200_000)
    assert isinstance(out, Yes)
    assert verify_witnesses(theta.domain_formula, INT, {"x0": 0, "x1": x1}, out.witness)


def test_kappa_domain_formula_has_no_witness_at_zero():
    theta = get_interpretation("kappa-zq")
    _, matrix = prenex(theta.domain_formula)
    rng = range(-6, 7)
    for u, v, w in product(rng, rng, rng):
        env = {"x0": 0, "x1": 0, "u": u, "v": v, "w": w}
        assert not eval_matrix(matrix, INT, env)


def test_pullback_of_even_integers_to_naturals():
    theta = get_interpretation("nz")
    psi = parse_formula("E y. x = y + y")
    pulled = pull_formula(theta, psi, ["x"])
    for a, b in product(range(3), range(3)):
        out = satisfy_search(pulled, NAT_ID, {"x0": a, "x1": b}, 30_000)
        if (a - b) % 2 == 0:
            assert isinstance(out, Yes), (a, b)
        else:
            assert isinstance(out, Unknown)


def test_composition_rank_and_map():
    zeta = compose_interpretations(get_interpretation("nz"), get_interpretation("zn"))
    assert zeta.rank == 2 and zeta.source is NAT and zeta.target is NAT
    assert zeta.apply((5, 2)) == 3
    assert not zeta.in_domain((2, 5))
    assert zeta.domain_formula is not None


def test_composition_formula_shape():
    zeta = compose_interpretations(get_interpretation("nz"), get_interpretation("zn"))
    assert free_vars(zeta.domain_formula) == {"x0", "x1"}
    assert set(zeta.pullbacks) == {"=", "+", "*", "0", "1"}
    assert free_vars(zeta.pullbacks["+"]) == {f"x{i}" for i in range(6)}


def test_pullback_of_squares_to_differences():
    # the pullback used by composition, on a formula with one witness
    pulled = pull_formula(get_interpretation("nz"), parse_formula("E a. x = a * a"), ["x"])
    for a, b in [(4, 0), (5, 1), (1, 0), (2, 2)]:
        assert isinstance(satisfy_search(pulled, NAT_ID, {"x0": a, "x1": b}, 100_000), Yes)
    assert isinstance(satisfy_search(pulled, NAT_ID, {"x0": 2, "x1": 0}, 5_000), Unknown)


def test_composition_rank_multiplies():
    zeta = compose_interpretations(get_interpretation("kappa-zq"), get_interpretation("int-in-rat"))
    assert zeta.rank == 2 and zeta.domain_formula is None
    assert zeta.apply((6, 3)) == 2
    assert not zeta.in_domain((1, 2))
    big = compose_interpretations(get_interpretation("nz"), get_interpretation("kappa-zq"))
    assert big.rank == 4 and big.apply((3, 0, 0, 2)) == F(-3, 2)


def test_composition_needs_matching_structures():
    with pytest.raises(StructuralError):
        compose_interpretations(get_interpretation("nz"), get_interpretation("nz"))


def test_graph_prefix_sound():
    theta = get_interpretation("kappa-zq")
    items = graph_prefix(theta, INT_Z, get_presentation("rat-tau"), 5000).prefix()
    assert (F(1, 2), 1, 2) in items
    assert all(q == F(a, b) for q, a, b in items)


def test_homotopy_prefix_sound():
    nz = get_interpretation("nz")
    pairs = homotopy_prefix(nz, nz, NAT_ID, 500).prefix()
    assert pairs and all(u[0] - u[1] == v[0] - v[1] for u, v in pairs)
    assert ((1, 0), (2, 1)) in homotopy_prefix(nz, nz, NAT_ID, 5000).prefix()


def test_identity_interpretation():
    ident = get_interpretation("id", RAT)
    assert ident.apply((F(2, 3),)) == F(2, 3)
    assert check_pullbacks(ident, [(F(0),), (F(1),), (F(1, 2),)]) == []
