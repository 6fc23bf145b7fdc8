import pytest
from hypothesis import given, settings, strategies as st

from eccad.poly import (
    ParseError,
    Poly,
    PolyError,
    VarOrder,
    content_prim,
    default_order,
    gcd,
    parse_poly,
    refine_coprime,
    sqf_factors,
    squarefree_basis,
    squarefree_part,
)

from conftest import ORDER, P

XY = VarOrder(["x", "y"])


@st.composite
def polys(draw, order=XY, max_deg=3, max_terms=5):
    n = len(order)
    terms = draw(
        st.dictionaries(
            st.tuples(*[st.integers(0, max_deg)] * n),
            st.integers(-9, 9).filter(bool),
            max_size=max_terms,
        )
    )
    return Poly.from_terms(order, terms)


def test_parse_and_print_round_trip():
    p = P("x*y - z^2 - w^2")
    assert parse_poly(str(p), ORDER) == p
    assert P("(x+1)^2") == P("x^2 + 2*x + 1")
    assert P(" 2 * x*y ") == P("2*x*y")


def test_parse_errors():
    with pytest.raises(ParseError):
        parse_poly("x +* y", XY)
    with pytest.raises(ParseError):
        parse_poly("x + q", XY)


def test_default_order_is_alphabetical_last_highest():
    assert default_order(["y", "x", "z"]).names == ("x", "y", "z")
    assert VarOrder.parse("z > y > x").names == ("x", "y", "z")
    assert VarOrder.parse("a, b").names == ("a", "b")


def test_degrees_and_mvar():
    p = P("x*y^3 - w^5 + z")
    assert p.degree("y") == 3
    assert p.mvar_name() == "z"
    assert p.total_degree() == 5
    assert P("7").mvar() is None


def test_exquo_inexact_raises():
    with pytest.raises(PolyError):
        P("x^2 + 1").exquo(P("x + 1"))


def test_gcd_examples():
    assert gcd(P("x^2 - y^2"), P("x^2 + 2*x*y + y^2")) == P("x + y")
    assert gcd(P("2*x + 2"), P("4*x + 4")).normalized() == P("x + 1")
    assert gcd(P("x"), P("y")).is_constant


def test_content_and_squarefree():
    c, pp = content_prim(P("x*y^2 + x^2*y"), "y")
    assert c.normalized() == P("x")
    assert pp.normalized() == P("y^2 + x*y").normalized()
    assert squarefree_part(P("(x-1)^3*(x+2)")).normalized() == P("(x-1)*(x+2)").normalized()
    facs = sqf_factors(P("(x-1)^2*(x+1)"))
    assert {f.normalized() for f in facs} == {P("x-1").normalized(), P("x+1").normalized()}


def test_squarefree_basis_is_pairwise_coprime():
    A = [P("(y-x)*(y+1)"), P("(y+1)^2*(y-2)"), P("y^2-x^2")]
    B = squarefree_basis(A, "y")
    B = sorted(B, key=str)
    for i, a in enumerate(B):
        for b in B[i + 1:]:
            assert gcd(a, b).is_constant
    # every input divides a power of the product of the basis
    prod = P("1")
    for b in B:
        prod = prod * b
    for a in A:
        assert squarefree_part(a).divides(prod)


def test_refine_coprime_splits_common_parts():
    out = refine_coprime([P("(x-1)*(x-2)"), P("(x-2)*(x-3)")])
    got = {p.normalized() for p in out}
    want = {P(t).normalized() for t in ("x-1", "x-2", "x-3")}
    assert got == want


@settings(max_examples=60, deadline=None)
@given(polys(), polys(), polys())
def test_ring_axioms(a, b, c):
    assert (a + b) * c == a * c + b * c
    assert (a * b) * c == a * (b * c)
    assert a - a == Poly(XY)


@settings(max_examples=60, deadline=None)
@given(polys(max_deg=2), polys(max_deg=2), polys(max_deg=2))
def test_gcd_divides_and_is_maximal(a, b, h):
    if a.is_zero or b.is_zero or h.is_zero:
        return
    f, g = a * h, b * h
    d = gcd(f, g)
    assert d.divides(f) and d.divides(g)
    assert h.divides(d)


@settings(max_examples=60, deadline=None)
@given(polys(), st.integers(-5, 5), st.integers(-5, 5))
def test_eval_partial_matches_full_evaluation(p, x, y):
    full = p.eval_partial({"x": x, "y": y})
    assert full.is_constant
    step = p.eval_partial({"x": x}).eval_partial({"y": y})
    assert step == full


@settings(max_examples=40, deadline=None)
@given(polys())
def test_text_round_trip(p):
    assert parse_poly(str(p), XY) == p
