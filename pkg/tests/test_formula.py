from fractions import Fraction

import pytest

from eccad.algnum import SamplePoint
from eccad.formula import (
    And,
    Atom,
    Not,
    Or,
    defining_polynomials,
    eval_truth,
    explicit_ec_list,
    explicit_ecs,
    nnf,
    parse_formula,
    replace_ecs,
)
from eccad.poly import ParseError

from conftest import P, SYSTEM


def test_header_sets_order(system):
    assert system.order.names == ("w", "x", "y", "z")
    assert isinstance(system.qff, And)
    assert len(system.qff.children) == 4


def test_default_order_without_header():
    f = parse_formula("y^2 + x < 1")
    assert f.order.names == ("x", "y")


def test_operators_and_precedence():
    f = parse_formula("x > 0 \\/ x < -1 /\\ ~(x = 3)")
    assert isinstance(f.qff, Or)
    g = parse_formula("x > 0 || x < -1 && !(x == 3)")
    assert str(f) == str(g)


def test_relations_move_terms_left():
    f = parse_formula("x^2 <= y + 1")
    a = f.qff
    assert isinstance(a, Atom) and a.rel == "<="
    assert a.poly == parse_formula("x^2 - y - 1 <= 0").qff.poly


def test_parse_errors():
    with pytest.raises(ParseError):
        parse_formula("x > ")
    with pytest.raises(ParseError):
        parse_formula("")
    with pytest.raises(ParseError):
        parse_formula("x + 1")


def test_explicit_ecs_are_and_reachable_only(system):
    assert len(explicit_ec_list(system)) == 3
    f = parse_formula("x = 0 \\/ y = 0")
    assert explicit_ecs(f) == frozenset()
    f = parse_formula("x = 0 /\\ (y = 0 \\/ x + y > 1) /\\ ~(y = 2)")
    assert [str(p) for p in explicit_ecs(f)] == ["x"]


def test_defining_polynomials(system):
    assert len(defining_polynomials(system)) == 4


def test_eval_truth_exact(system):
    # w = 0, x = 0, y = 0, z = 0 satisfies the equations but not h > 0
    assert eval_truth(system, SamplePoint([0, 0, 0, 0])) is False
    f = parse_formula("x^2 - 2 < 0 /\\ x > 0")
    assert eval_truth(f, SamplePoint([1])) is True
    assert eval_truth(f, SamplePoint([Fraction(3, 2)])) is False


def test_nnf_pushes_negations():
    f = parse_formula("~(x > 0 /\\ ~(y = 1))")
    g = nnf(f)
    assert isinstance(g, Or)
    rels = sorted(c.rel for c in g.children)
    assert rels == ["<=", "="]
    for pt in ([1, 1], [-1, 0], [2, 3]):
        assert eval_truth(f, SamplePoint(pt)) == eval_truth(g, SamplePoint(pt))


def test_replace_ecs_keeps_other_conjuncts(system):
    g = replace_ecs(system, [P("z + x"), P("y^2 + w")])
    assert isinstance(g, And)
    assert [c.rel for c in g.children] == ["=", "=", ">"]
    assert not any(isinstance(c, Not) for c in g.children)
