import pytest

from eccad.elim import discriminant, resultant
from eccad.poly import PolyError, VarOrder, parse_poly
from eccad.projection import (
    OP_EC_STAR,
    OP_FULL,
    DegreeLimit,
    proj_ec,
    proj_ec_star,
    proj_full,
    project_all,
)

XY = VarOrder(["x", "y"])


def Q(t):
    return parse_poly(t, XY)


def norm(ps):
    return {p.normalized() for p in ps if not p.is_constant}


def test_proj_full_contents():
    f, g = Q("y^2 + x^2 - 1"), Q("y - x")
    out = proj_full([f, g], "y")
    want = norm([discriminant(f, "y"), resultant(f, g, "y")])
    assert want <= out
    assert all(p.mvar_name() in (None, "x") for p in out)


def test_proj_ec_drops_non_ec_discriminants():
    f, g, h = Q("y - x"), Q("y^2 + x^2 - 1"), Q("y^2 - x^3")
    P = proj_ec([f, g, h], [f], "y")
    assert norm([resultant(g, h, "y")]).isdisjoint(P)
    assert discriminant(g, "y").normalized() not in P
    Pstar = proj_ec_star([f, g, h], [f], "y")
    assert discriminant(g, "y").normalized() in Pstar
    assert P <= Pstar


def test_ec_basis_must_be_inside_projection_basis():
    with pytest.raises(PolyError):
        proj_ec([Q("y - x")], [Q("y + x")], "y")


def test_operator_schedule(system):
    from eccad.ecpipe import enumerate_designations, propagate_resultants
    from eccad.formula import defining_polynomials, explicit_ec_list

    C = propagate_resultants(explicit_ec_list(system), system.order)
    D = enumerate_designations(C)[0]
    run = project_all(defining_polynomials(system) | D.contents, system.order, D.as_dict())
    # every EC level projects with P*_F; level 1 has nothing to project
    assert run.ops == [None, OP_EC_STAR, OP_EC_STAR, OP_EC_STAR]
    for k in range(4):
        assert all(p.mvar() is not None and p.mvar() <= k for p in run.A[k])
        for f in run.F[k]:
            assert f in run.B[k]
    assert "tdeg" in run.table()


def test_full_schedule_without_ecs():
    run = project_all([Q("y^2 + x^2 - 1")], XY)
    assert run.ops[1] == OP_FULL
    assert norm([Q("x^2 - 1")]) <= set(run.A[0])


def test_degree_limit():
    with pytest.raises(DegreeLimit):
        project_all([Q("y^3 + x^7 - 1"), Q("y^2 - x^5")], XY, max_degree=4)
