from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

import oracles
from conftest import polys
from wittpoisson.exprio import parse_poly as P
from wittpoisson.poly import (Poly, leading_split, lie_ideal_closure, monomial_key,
                              poisson_bracket, u_act, witt_act, x)


def test_arith_examples():
    assert x(1) + x(1) == P("2*x1")
    assert x(1) * Poly.zero() == Poly.zero()
    assert (x(1) + x(2)) * (x(1) - x(2)) == P("x1^2 - x2^2")


def test_zero_has_no_grading():
    with pytest.raises(ValueError):
        Poly.zero().d()
    with pytest.raises(ValueError):
        Poly.zero().o()


def test_partition_must_be_positive():
    with pytest.raises(ValueError):
        Poly({(0, 2): 1})
    with pytest.raises(ValueError):
        x(0)


@given(polys(), polys())
def test_product_degree_adds(f, g):
    if f and g:
        assert (f * g).d() == f.d() + g.d()


def test_bracket_examples():
    assert poisson_bracket(x(1), x(2)) == x(3)
    assert poisson_bracket(x(2), x(2)) == 0
    assert poisson_bracket(x(1) * x(2), x(3)) == P("2*x2*x4 + x1*x5")


def test_witt_act_examples():
    assert witt_act(1, x(5)) == 4 * x(6)
    assert witt_act(3, x(3)) == 0
    # the value is x4*x5 + 2*x3*x6 (e2.x3 = x5, e2.x4 = 2*x6)
    got = witt_act(2, x(3) * x(4))
    assert got == P("x4*x5 + 2*x3*x6")
    assert got == oracles.derivation(2, x(3) * x(4))
    with pytest.raises(ValueError):
        witt_act(0, x(1))


def test_u_act_examples():
    assert u_act((6,), x(7) * x(20)) == P("14*x7*x26 + x13*x20")
    assert u_act((1, 5), x(10) * x(30)) == P("850*x10*x36 + 225*x11*x35 + 145*x15*x31 + 70*x16*x30")
    assert u_act((1,), x(1)) == 0
    with pytest.raises(ValueError):
        u_act((), x(1))


def test_u_act_is_rightmost_first():
    f = x(10) * x(30)
    assert u_act((1, 5), f) == witt_act(1, witt_act(5, f))
    assert u_act((1, 5), f) != u_act((5, 1), f)


@given(polys(), polys())
def test_bracket_matches_differentiation_oracle(f, g):
    assert poisson_bracket(f, g) == oracles.bracket(f, g)


@given(st.integers(1, 10), polys())
def test_witt_act_is_bracket_with_generator(k, f):
    assert witt_act(k, f) == poisson_bracket(x(k), f)


@given(polys(max_terms=5), polys(max_terms=5), polys(max_terms=5))
def test_jacobi(f, g, h):
    total = (poisson_bracket(f, poisson_bracket(g, h)) + poisson_bracket(g, poisson_bracket(h, f))
             + poisson_bracket(h, poisson_bracket(f, g)))
    assert total == 0


@given(polys(), polys(), polys())
def test_leibniz(f, g, h):
    assert poisson_bracket(f, g * h) == g * poisson_bracket(f, h) + poisson_bracket(f, g) * h


@given(polys(), polys())
def test_antisymmetry_and_gradings(f, g):
    b = poisson_bracket(f, g)
    assert b + poisson_bracket(g, f) == 0
    if b:
        assert b.d() <= f.d() + g.d()
        assert b.o() <= f.o() + g.o() - 1


def test_leading_split_examples():
    p, q, n = leading_split(x(2) ** 2)
    assert (p, q, n) == (2 * x(2), Poly.zero(), 2)
    p, q, n = leading_split(x(1))
    assert (p, q, n) == (Poly.zero(), Poly.zero(), 1)
    f = P("x1*x5 - 4*x2*x4 + 3*x3^2")
    p, q, n = leading_split(f)
    assert n == 5
    assert p == P("4*x1")
    for bad in (Poly.zero(), Poly.const(3)):
        with pytest.raises(ValueError):
            leading_split(bad)


@given(polys(constant=False))
def test_leading_split_properties(f):
    if not f or f.max_index() == 0:
        return
    p, q, n = leading_split(f)
    assert poisson_bracket(x(1), f) == x(n + 1) * p + q
    assert p.max_index() <= n and q.max_index() <= n
    if p:
        assert p.o() <= f.o() - 1
    if q:
        assert q.o() <= f.o()
    inner = poisson_bracket(x(1), f)
    for t in range(1, 6):
        lhs = poisson_bracket(x(t), inner)
        q2 = lhs - (n + 1 - t) * x(n + 1 + t) * p
        assert q2.max_index() <= n + t


def test_lie_ideal_examples():
    c = lie_ideal_closure(x(3), 30)
    assert all(c.contains_generator(m) for m in range(4, 31))
    c = lie_ideal_closure(x(1), 30)
    assert c.contains_generator(1) and all(c.contains_generator(m) for m in range(3, 31))
    c = lie_ideal_closure(x(1) + x(2), 30)
    assert c.complement_dim <= 2
    with pytest.raises(ValueError):
        lie_ideal_closure(x(1) * x(2), 30)


@pytest.mark.parametrize("n", range(1, 9))
def test_lie_ideal_contains_tail(n):
    c = lie_ideal_closure(x(n), 30)
    assert all(c.contains_generator(m) for m in range(n + 2, 31))


def test_monomial_key_is_pair_order_on_pairs():
    pairs = [(i, j) for i in range(1, 9) for j in range(i, 12)]
    by_key = sorted(pairs, key=monomial_key)
    by_pair = sorted(pairs, key=lambda p: (p[0] + p[1], p[1]))
    assert by_key == by_pair


def test_coefficients_are_exact():
    f = P("1/3*x1") + P("1/6*x1")
    assert f.coefficient((1,)) == Fraction(1, 2)
