import pytest
from hypothesis import given, settings, strategies as st

from eccad.groebner import (
    buchberger,
    elimination_split,
    is_groebner,
    is_reduced,
    reduce,
    reduce_with_quotients,
)
from eccad.poly import Poly, VarOrder

from conftest import P

F1, F2, F3 = P("x*y - z^2 - w^2"), P("x + y^2 + z + w"), P("x - y^2 + z - w")


def norm(polys):
    return {p.normalized() for p in polys}


def test_worked_basis():
    G = buchberger([F1, F2, F3])
    want = [
        "z + x",
        "y^2 + w",
        "-w^2 - x^2 + x*y",
        "w^2*x + w^2*y + x^3 + w*x",
        "x^4 + 2*x^2*w^2 + w^4 + x^2*w",
    ]
    assert norm(G) == norm(P(t) for t in want)
    assert is_groebner(G)
    assert is_reduced(G)
    split = elimination_split(G)
    assert len(split["z"]) == 1 and len(split["y"]) == 3 and len(split["x"]) == 1
    assert split["w"] == frozenset()


def test_ideal_membership():
    G = buchberger([F1, F2, F3])
    for f in (F1, F2, F3, F1 * F2 - P("x") * F3):
        assert reduce(f, G).is_zero
    assert not G.contains(P("x + 1"))


def test_quotients_reconstruct():
    G = buchberger([F1, F2, F3])
    p = P("x^3*y*z + w^2 - 7")
    r, qs = reduce_with_quotients(p, G)
    total = r
    for q, g in zip(qs, G):
        total = total + q * g
    assert total == p


def test_unit_ideal():
    G = buchberger([P("x"), P("x - 1")])
    assert G.is_unit
    assert len(G) == 1


def test_variables_are_their_own_basis():
    order = VarOrder(["x", "y"])
    G = buchberger([Poly.var(order, "x"), Poly.var(order, "y")])
    assert norm(G) == {Poly.var(order, "x"), Poly.var(order, "y")}


XY = VarOrder(["x", "y"])


@st.composite
def biv(draw):
    terms = draw(
        st.dictionaries(
            st.tuples(st.integers(0, 2), st.integers(0, 2)),
            st.integers(-4, 4).filter(bool),
            min_size=1,
            max_size=4,
        )
    )
    return Poly.from_terms(XY, terms)


@settings(max_examples=40, deadline=None)
@given(st.lists(biv(), min_size=1, max_size=3))
def test_output_satisfies_buchberger_criterion(F):
    G = buchberger(F)
    assert is_groebner(G)
    assert is_reduced(G)
    for f in F:
        assert reduce(f, G).is_zero
    # reduced bases are unique, so rebuilding from G is a no-op
    assert norm(buchberger(list(G))) == norm(G)
