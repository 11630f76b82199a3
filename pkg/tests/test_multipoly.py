import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from jackpoly.alpha import ALPHA, AlphaRational
from jackpoly.errors import NonzeroRemainder, VariableCountMismatch
from jackpoly.multipoly import MultiPoly, exact_divide_diff, parse, poly_arith, render, scale

from conftest import multipolys

x1, x2 = MultiPoly.var(2, 1), MultiPoly.var(2, 2)


def test_poly_arith_examples():
    assert poly_arith(x1 + x2, x1 - x2, "add") == scale(x1, 2)
    assert poly_arith(x1 - x2, x1 + x2, "mul") == x1 * x1 - x2 * x2
    prod = poly_arith(x1 + x2, MultiPoly.zero(2), "mul")
    assert prod.is_zero() and prod.terms == {}


def test_poly_arith_mismatch():
    with pytest.raises(VariableCountMismatch):
        poly_arith(x1, MultiPoly.var(3, 1), "add")


def test_scale_examples():
    assert scale(x1, ALPHA) == MultiPoly(2, {(1, 0): ALPHA})
    assert scale(x1 + x2, 0).is_zero()
    assert scale(scale(x1 * x2, 2), AlphaRational(1, 2)) == x1 * x2


def test_exact_divide_diff_examples():
    assert exact_divide_diff(x1 * x1 - x2 * x2, 1, 2) == x1 + x2
    assert exact_divide_diff(x1 - x2, 1, 2) == MultiPoly.constant(2)
    with pytest.raises(NonzeroRemainder):
        exact_divide_diff(x1, 1, 2)


def test_render_grammar():
    f = scale(x1 * x1 * x2, ALPHA + 1) + scale(x2, -2) + MultiPoly.constant(2, 3)
    assert render(f) == "(1 + a)*x1^2*x2 + (-2)*x2 + (3)"
    assert render(MultiPoly.zero(3)) == "0"
    assert parse("(1 + a)*x1^2*x2 + (-2)*x2 + (3)", 2) == f


def test_canonical_order_is_graded_lex():
    f = x2 + x1 * x2 + x1 * x1 + x1
    assert [m for m, _ in f] == [(2, 0), (1, 1), (1, 0), (0, 1)]


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 3).flatmap(lambda n: st.tuples(multipolys(n=n), multipolys(n=n), multipolys(n=n))))
def test_ring_laws(fgh):
    f, g, h = fgh
    assert f + g == g + f
    assert f * g == g * f
    assert (f + g) + h == f + (g + h)
    assert (f * g) * h == f * (g * h)
    assert f * (g + h) == f * g + f * h


@settings(max_examples=60, deadline=None)
@given(multipolys(n=3), st.sampled_from([(1, 2), (2, 1), (1, 3), (3, 2)]))
def test_divide_diff_inverts_multiplication(q, ij):
    i, j = ij
    d = MultiPoly.var(3, i) - MultiPoly.var(3, j)
    assert exact_divide_diff(q * d, i, j) == q


@settings(max_examples=80, deadline=None)
@given(multipolys(rational=True))
def test_render_parse_roundtrip(f):
    assert parse(render(f), f.n) == f
    assert all(not c.is_zero() for c in f.terms.values())
