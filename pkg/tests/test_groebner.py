from fractions import Fraction as F

import pytest
import sympy
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from bsato.conegen import ExponentMatrix, af_generators
from bsato.errors import ZeroEliminationIdeal
from bsato.exactalg import MultiPoly, UniPoly
from bsato.groebner import (
    block_order,
    buchberger,
    eliminate_to_univariate,
    grevlex,
    ideal_equal,
    ideal_member,
    is_groebner,
    is_reduced,
    lex,
    minimal_polynomial,
    normal_form,
)

s1, s2 = MultiPoly.variable(2, 0), MultiPoly.variable(2, 1)


def test_normal_form_examples():
    basis = [s1 + 1, s2 + 1]
    assert normal_form(s1 + s2 + 2, basis, grevlex(2)).is_zero()
    assert normal_form(MultiPoly.constant(2, 1), basis, grevlex(2)) == MultiPoly.constant(2, 1)
    x = MultiPoly.variable(1, 0)
    assert normal_form(x * x, [x + 1], grevlex(1)) == MultiPoly.constant(1, 1)


def test_buchberger_examples():
    assert set(buchberger([s1 + 1, s2 + 1]).generators) == {s1 + 1, s2 + 1}
    assert buchberger([s1, s1 + 1]).is_unit()
    assert set(buchberger([s1 * s2, s1 * s1]).generators) == {s1 * s2, s1 * s1}


def test_ideal_member_examples():
    assert ideal_member(s1 + s2 + 2, [s1 + 1, s2 + 1])
    assert not ideal_member(MultiPoly.constant(2, 1), [s1 + 1, s2 + 1])
    assert ideal_member(MultiPoly.zero(2), [s1 * s2])


def test_ideal_equal_examples():
    x = MultiPoly.variable(1, 0)
    assert ideal_equal([x + 1], [x * 2 + 2])
    assert not ideal_equal([x], [x * x])


def test_eliminate_examples():
    t3 = MultiPoly.variable(3, 2)
    a, b = MultiPoly.variable(3, 0), MultiPoly.variable(3, 1)
    assert eliminate_to_univariate([a + 1, b + 1, t3 - a - b]) == UniPoly.linear(2)
    x, t = MultiPoly.variable(2, 0), MultiPoly.variable(2, 1)
    assert eliminate_to_univariate([x, t - x]) == UniPoly([0, 1])


def test_eliminate_hull_ideal_generators():
    A = ExponentMatrix.from_monomials([(0, 1, 1), (1, 0, 1), (1, 1, 0)])
    gens = [g.extend(1) for g in af_generators(A)]
    t = MultiPoly.variable(4, 3)
    rel = t - MultiPoly.linear([1, 1, 1, 0])
    assert eliminate_to_univariate(gens + [rel]) == UniPoly([6, 10, F(11, 2), 1])


def test_zero_elimination_ideal():
    x, t = MultiPoly.variable(2, 0), MultiPoly.variable(2, 1)
    with pytest.raises(ZeroEliminationIdeal):
        eliminate_to_univariate([x * t])
    with pytest.raises(ZeroEliminationIdeal):
        minimal_polynomial(s1, [s2], max_degree=5)


def test_minimal_polynomial_divides_members():
    A = ExponentMatrix.from_monomials([(2, 0), (0, 2)])
    gens = af_generators(A)
    b = minimal_polynomial(MultiPoly.linear([1, 1]), gens)
    diag = MultiPoly.linear([1, 1])
    # (t+1)(t+3/2)(t+2)(t+5) is a member; b must divide it
    member = UniPoly.linear(1) * UniPoly([3, 2]) * UniPoly.linear(2) * UniPoly.linear(5)
    value = MultiPoly.constant(2, 0)
    for c in reversed(member.coeffs):
        value = value * diag + c
    assert ideal_member(value, gens)
    assert divmod(member, b)[1].is_zero()


# random ideals compared against sympy


def poly_strategy(nvars, max_terms=4, max_deg=2):
    term = st.tuples(st.tuples(*[st.integers(0, max_deg)] * nvars), st.integers(-4, 4).filter(bool))
    return st.lists(term, min_size=1, max_size=max_terms).map(lambda ts: MultiPoly(nvars, ts))


def to_sympy(p, xs):
    return sum(sympy.Rational(c.numerator, c.denominator) * sympy.prod([x**e for x, e in zip(xs, exp)]) for exp, c in p)


def from_sympy(expr, xs, order):
    poly = sympy.Poly(expr, *xs)
    terms = {m: F(int(c.p), int(c.q)) for m, c in poly.terms()}
    lead = terms[max(terms, key=order.key)]
    return MultiPoly(len(xs), {m: c / lead for m, c in terms.items()})


ideals = st.sampled_from([2, 3]).flatmap(
    lambda n: st.tuples(st.just(n), st.lists(poly_strategy(n), min_size=1, max_size=3))
)


@settings(max_examples=120)
@given(ideals, st.sampled_from(["grevlex", "lex"]))
def test_basis_matches_sympy(data, kind):
    n, gens = data
    gens = [g for g in gens if not g.is_zero()]
    assume(gens)
    order = grevlex(n) if kind == "grevlex" else lex(n)
    gb = buchberger(gens, order)
    xs = sympy.symbols(f"x0:{n}")
    ref = sympy.groebner([to_sympy(g, xs) for g in gens], *xs, order="grevlex" if kind == "grevlex" else "lex")
    assert set(gb.generators) == {from_sympy(e, xs, order) for e in ref.exprs}


@settings(max_examples=120)
@given(ideals, st.data())
def test_s_pairs_reduce_and_normal_form_idempotent(data, draw):
    n, gens = data
    gens = [g for g in gens if not g.is_zero()]
    assume(gens)
    gb = buchberger(gens)
    assert is_groebner(gb)
    assert is_reduced(gb)
    for g in gens:
        assert normal_form(g, gb).is_zero()
    p = draw.draw(poly_strategy(n, 5, 3))
    r = normal_form(p, gb)
    assert normal_form(r, gb) == r
    assert ideal_member(p - r, gb)


@settings(max_examples=100)
@given(st.lists(st.fractions(min_value=-3, max_value=3, max_denominator=3), min_size=1, max_size=3), st.integers(0, 2))
def test_block_elimination_agrees_with_minimal_polynomial(roots, extra):
    # ideal (prod (s1 + a), s2 - s1^extra) in s1, s2; element s1 + s2
    p = MultiPoly.constant(2, 1)
    for a in roots:
        p = p * (s1 + a)
    gens = [p, s2 - s1**extra]
    elem = s1 + s2
    mp = minimal_polynomial(elem, gens)
    t = MultiPoly.variable(3, 2)
    lifted = [g.extend(1) for g in gens] + [t - elem.extend(1)]
    assert eliminate_to_univariate(lifted) == mp


def test_determinism():
    A = ExponentMatrix.from_monomials([(2, 0), (1, 1), (0, 2)])
    gens = af_generators(A)
    assert buchberger(gens).generators == buchberger(list(gens)).generators
    assert block_order(3, 2).key((1, 0, 0)) > block_order(3, 2).key((0, 0, 5))
