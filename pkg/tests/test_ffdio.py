import math
from fractions import Fraction as F
from itertools import product

import pytest
from hypothesis import given, settings, strategies as st

from dprmlab.ffdio import (
    AlgebraicReal,
    FpPoly,
    FpRatFun,
    PowerSeriesTrunc,
    artin_schreier,
    artin_schreier_preimage,
    artin_schreier_relation,
    bigA_counting_check,
    bigA_members,
    christol_fb,
    christol_naturals,
    count_accepted,
    count_below,
    counting,
    exhaustive_solutions,
    fA_convergence_check,
    family_solutions,
    format_ratfun_coeffs,
    frobenius_leq,
    genseries,
    geometric_relation,
    is_constant_coset,
    l_alpha_member,
    left_setup,
    leftdio_enumerate,
    member_support,
    multiples_automaton,
    oracle_solutions,
    parse_poly,
    parse_ratfun,
    pheidas_solutions,
    powers_of_base_automaton,
    product_identity_check,
    sturm_sequence,
    t_adic_ord,
    verify_algebraic,
)
from dprmlab.ffdio.automata import DigitAutomaton
from dprmlab.kernel import StructuralError

P = 3


def poly(cs, p=P):
    return FpPoly(p, cs)


def rat(num, den=(1,), p=P):
    return FpRatFun.from_coeffs(p, num, den)


coeff_lists = st.lists(st.integers(0, P - 1), max_size=5)
polys = coeff_lists.map(poly)
ratfuns = st.builds(
    lambda n, d: FpRatFun(poly(n), poly(d)),
    coeff_lists,
    coeff_lists.filter(lambda c: any(c)),
)


def naive_mul(a, b, p):
    out = [0] * (len(a) + len(b))
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] = (out[i + j] + x * y) % p
    return out


# ---- exact arithmetic --------------------------------------------------------

@given(coeff_lists, coeff_lists)
def test_poly_mul_matches_naive(a, b):
    assert poly(a) * poly(b) == poly(naive_mul(a, b, P))


@given(polys, polys.filter(lambda f: not f.is_zero()))
def test_poly_divmod(a, b):
    q, r = a.divmod(b)
    assert q * b + r == a and r.deg < b.deg


@given(ratfuns, ratfuns, ratfuns)
@settings(max_examples=60)
def test_ratfun_ring_laws(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert a * (b + c) == a * b + a * c
    assert a - a == FpRatFun.const(P, 0)


@given(ratfuns, ratfuns)
@settings(max_examples=60)
def test_ord_is_a_valuation(a, b):
    if not a.is_zero() and not b.is_zero():
        assert t_adic_ord(a * b) == t_adic_ord(a) + t_adic_ord(b)
    assert t_adic_ord(a + b) >= min(t_adic_ord(a), t_adic_ord(b))


@given(ratfuns)
@settings(max_examples=60)
def test_normal_form(f):
    assert f.den.lead() == 1
    assert f.num.gcd(f.den).deg == 0
    assert f == parse_ratfun(format_ratfun_coeffs(f))


def test_ord_examples():
    assert t_adic_ord(rat([0, 0, 0, 1], [1, 1])) == 3
    assert t_adic_ord(FpRatFun.const(P, 1)) == 0
    assert t_adic_ord(FpRatFun.const(P, 0)) == math.inf
    t = FpRatFun.t(P)
    assert (1 / t) * t == FpRatFun.const(P, 1)
    assert t_adic_ord(t ** -2) == -2


def test_division_by_zero():
    with pytest.raises(ZeroDivisionError):
        FpRatFun.t(P) / FpRatFun.const(P, 0)


def test_poly_text_format():
    f = parse_poly("poly p=3 [1,0,2]")
    assert f == poly([1, 0, 2]) and str(f) == "1 + 2*t^2"
    with pytest.raises(StructuralError):
        parse_poly("poly 3 [1]")


def test_frobenius_is_additive():
    a, b = rat([1, 2, 1], [0, 1]), rat([2, 0, 1])
    assert (a + b).frobenius() == a.frobenius() + b.frobenius()


# ---- Frobenius relation and Artin-Schreier ----------------------------------

def test_frobenius_leq():
    t = FpRatFun.t(P)
    assert frobenius_leq(t, t**3, 5) == 1
    assert frobenius_leq(t, t, 5) == 0
    assert frobenius_leq(t, t**2, 5) is None
    assert frobenius_leq(t + 1, (t + 1) ** 9, 5) == 2


@pytest.mark.parametrize("p", [3, 5])
def test_artin_schreier_kernel_is_prime_field(p):
    sols = artin_schreier_preimage(FpRatFun.const(p, 0), 3)
    assert sols == sorted(FpRatFun.const(p, b) for b in range(p))


@pytest.mark.parametrize("p", [3, 5])
def test_artin_schreier_examples(p):
    t = FpRatFun.t(p)
    assert artin_schreier_preimage(t**p - t, p) == sorted(t + b for b in range(p))
    sols = artin_schreier_preimage(t ** (p * p) - t, p * p)
    assert sols == sorted(t + t**p + b for b in range(p))


def test_artin_schreier_no_solution():
    t = FpRatFun.t(P)
    assert artin_schreier_preimage(t, 6) == []
    assert artin_schreier_preimage(1 / (t + 1), 6) == []


@given(ratfuns)
@settings(max_examples=40, deadline=None)
def test_artin_schreier_recovers_preimage(f):
    g = artin_schreier(f)
    sols = artin_schreier_preimage(g, max(f.height(), 0) + 1)
    assert f in sols and is_constant_coset(sols)


# ---- Pheidas curve -------------------------------------------------------------

def test_family_examples_are_solutions():
    t = FpRatFun.t(P)
    for x, y, z in family_solutions(P, 9):
        assert x - t == artin_schreier(y)
        assert 1 / x - 1 / t == artin_schreier(z)
    assert (t**3, t + 1, 1 / t + 2) in family_solutions(P, 3)


@pytest.mark.parametrize("p,h", [(3, 3), (3, 4), (5, 2)])
def test_exhaustive_search_equals_family(p, h):
    assert exhaustive_solutions(p, h) == family_solutions(p, h)


def test_oracle_bound_27():
    out = pheidas_solutions(3, 27)
    t = FpRatFun.t(3)
    assert out["agree"]
    assert out["x_projection"] == [t, t**3, t**9, t**27]
    s2 = {b + sum((t ** (3**i) for i in range(n)), FpRatFun.const(3, 0))
          for n in range(4) for b in range(3)}
    assert set(out["y_projection"]) == s2  # S2 together with F_3 (the n = 0 row)


def test_oracle_rejects_characteristic_two():
    with pytest.raises(StructuralError):
        oracle_solutions(2, 4)


# ---- automata and counting -------------------------------------------------------

def test_multiples_of_three():
    m = multiples_automaton(3, 2)
    assert [m.accepts(n) for n in (0, 3, 6, 1, 2)] == [True, True, True, False, False]
    assert all(m.accepts(n) == (n % 3 == 0) for n in range(500))


@pytest.mark.parametrize("mod,base", [(3, 2), (5, 3), (4, 2), (7, 10)])
def test_multiples_counting_dp(mod, base):
    m = multiples_automaton(mod, base)
    assert m.zero_invariant(4)
    for x in range(0, 400, 7):
        assert count_accepted(m, x) == x // mod + 1


def test_powers_of_two():
    m = powers_of_base_automaton(2)
    assert [m.accepts(n) for n in (1, 2, 4, 3)] == [True, True, True, False]
    assert m.zero_invariant(6)
    assert counting(m, 100) == 7


def test_counting_bound_for_recognizable_set():
    m = powers_of_base_automaton(2)
    for x in range(1, 5000):
        assert count_accepted(m, x) >= math.log2(x)


def test_automaton_requires_total_transitions():
    with pytest.raises(StructuralError):
        DigitAutomaton(2, ("a",), {("a", 0): "a"}, "a", frozenset({"a"}))


def test_counting_on_lists():
    assert counting([1, 2, 4, 8], 5) == 3


# ---- Christol series --------------------------------------------------------------

@pytest.mark.parametrize("p", [2, 3, 5])
@pytest.mark.parametrize("N", [64, 81, 256])
def test_christol_artin_schreier_roots(p, N):
    for b in range(p):
        assert verify_algebraic(christol_fb(p, b, N), artin_schreier_relation(p)) >= N


@pytest.mark.parametrize("N", [64, 81, 256])
def test_geometric_series(N):
    assert verify_algebraic(christol_naturals(2, N), geometric_relation()) >= N


def test_t_against_linear_relation():
    f = PowerSeriesTrunc.monomial(3, 40, 1)
    assert verify_algebraic(f, {(1, 0): 1, (0, 1): -1}) >= 40


def test_wrong_relation_has_finite_residual():
    f = christol_fb(3, 0, 81)
    assert verify_algebraic(f, geometric_relation()) < 81


def test_series_overlap_rule():
    a = PowerSeriesTrunc(3, 10, [1, 1])
    inv_t = PowerSeriesTrunc.monomial(3, 10, -1)
    prod = a * inv_t
    assert prod.v == -1 and prod.N == 9
    assert prod.coeff(-1) == 1 and prod.coeff(0) == 1
    with pytest.raises(StructuralError):
        prod.coeff(9)


def test_series_big_power():
    # (1 + t)^(2^40) = 1 + t^(2^40) in characteristic 2
    f = PowerSeriesTrunc(2, 100, [1, 1]) ** (2**40)
    assert f.sparse() == [(0, 1)]


def test_genseries_insufficient_prefix():
    with pytest.raises(StructuralError, match="exponent 5"):
        genseries(iter([0, 2, 4]), 3, 20, complete_below=5)
    f = genseries(iter([0, 2, 4]), 3, 5)
    assert f.sparse() == [(0, 1), (2, 1), (4, 1)]


# ---- the lacunary set A ------------------------------------------------------------

def test_bigA_prefix():
    assert bigA_members(2, 2) == [0, 2, 16, 18]
    assert 0 in bigA_members(3, 3)


@pytest.mark.parametrize("p", [2, 3])
def test_bigA_counting(p):
    assert [bigA_counting_check(p, j) for j in range(1, 6)] == [1 + 2 ** (j - 1) for j in range(1, 6)]


@pytest.mark.parametrize("p", [2, 3])
def test_count_below_matches_enumeration(p):
    members = bigA_members(p, 3)
    for x in list(range(0, 200)) + members:
        assert count_below(p, x) == sum(1 for a in members if a <= x)


@pytest.mark.parametrize("p", [2, 3])
def test_bigA_digit_support(p):
    for a in bigA_members(p, 3):
        assert set(member_support(p, a)) <= {1, 4, 27}


def test_bigA_counting_ratio_decreases():
    ratios = [bigA_counting_check(2, j) / (j**j * math.log(2)) for j in range(1, 6)]
    assert all(b < a for a, b in zip(ratios, ratios[1:]))


@pytest.mark.parametrize("p,r,N", [(2, 2, 64), (2, 3, 1024), (3, 2, 256), (3, 1, 30)])
def test_product_identity(p, r, N):
    assert product_identity_check(p, r, N)


def test_fA_convergence():
    assert fA_convergence_check(2, 1, 64) == 16
    assert fA_convergence_check(3, 1, 200) == 81


# ---- left-Diophantine sets --------------------------------------------------------

SQRT2 = [2, 0, -1]


def test_sqrt2_membership():
    setup = left_setup(SQRT2, 2)
    alpha = setup.alpha
    assert l_alpha_member(1, alpha) and l_alpha_member(0, alpha)
    assert not l_alpha_member(F(3, 2), alpha)
    assert l_alpha_member(F(141, 100), alpha) and not l_alpha_member(F(142, 100), alpha)


def test_sqrt2_prefix_approaches_root():
    xs = leftdio_enumerate(SQRT2, 2, 1000).prefix()
    setup = left_setup(SQRT2, 2)
    assert all(u < 2 and 2 - u * u > 0 for u in xs)
    assert all(l_alpha_member(u, setup.alpha) for u in xs if u > 0)
    assert F(1) in xs and F(3, 2) not in xs
    assert abs(math.sqrt(2) - float(max(xs))) < 1e-3


def test_orientation_flip():
    setup = left_setup([-2, 0, 1], 2)  # u^2 - 2 is positive at q2
    assert setup.flipped
    assert l_alpha_member(1, setup.alpha) and not l_alpha_member(F(3, 2), setup.alpha)


def test_cube_root():
    setup = left_setup([3, 0, 0, -1], 2)
    a = setup.alpha.refine(F(1, 10**6))
    assert abs(float(a.hi) - 3 ** (1 / 3)) < 1e-5


def test_no_root_below_q2():
    with pytest.raises(StructuralError):
        left_setup([1, 0, 1], 5)


def test_sturm_counts_roots():
    from dprmlab.ffdio.leftdio import count_roots, _trim

    seq = sturm_sequence(_trim([-6, 11, -6, 1]))  # roots 1, 2, 3
    assert count_roots(seq, 0, 4) == 3
    assert count_roots(seq, F(3, 2), 4) == 2


def test_algebraic_real_refine():
    a = AlgebraicReal(tuple(F(c) for c in SQRT2), F(1), F(2)).refine(F(1, 1000))
    assert a.hi - a.lo <= F(1, 1000) and a.lo < F(1414214, 10**6) <= a.hi
