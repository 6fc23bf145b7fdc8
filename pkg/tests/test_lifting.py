import random
from fractions import Fraction

import pytest

from eccad.algnum import sign_at
from eccad.ecpipe import candidates_for, enumerate_designations
from eccad.formula import defining_polynomials, eval_truth, explicit_ec_list, parse_formula
from eccad.lifting import (
    CYLINDER,
    Fail,
    ResourceLimit,
    cell_truths,
    lift_all,
    locate,
    sector_samples,
    to_json,
    verify_sign_invariance,
    verify_truth_invariance,
)
from eccad.algnum import RealAlgebraic, isolate_real_roots
from eccad.poly import parse_poly
from eccad.projection import project_all


def build(text, strategy="explicit", which=0, **kw):
    F = parse_formula(text)
    C = candidates_for(strategy, explicit_ec_list(F), F.order)
    D = enumerate_designations(C)[which]
    run = project_all(defining_polynomials(F) | D.contents, F.order, D.as_dict())
    return F, lift_all(run, **kw)


def test_single_root_gives_three_cells():
    F, cad = build("x = 0")
    assert cad.counts() == [3]
    assert cell_truths(cad, F) == [False, True, False]
    assert [c.dimension for c in cad.cells] == [1, 0, 1]


def test_disc_counts_and_sign_invariance():
    F, cad = build("vars: y > x\nx^2 + y^2 - 1 < 0", strategy="none")
    assert cad.counts() == [5, 13]
    rep = verify_sign_invariance(cad, defining_polynomials(F), trials=400, seed=2)
    assert rep.ok and rep.checked == 400
    assert verify_truth_invariance(cad, F, trials=400, seed=3).ok


def test_ec_levels_use_cylinders_off_the_constraint():
    F, cad = build("vars: y > x\nx^2 + y^2 - 1 = 0 /\\ y > x")
    assert cad.counts() == [9, 33]
    kinds = {st.kind for st in cad.stacks.values()}
    assert CYLINDER not in kinds  # level 1 carries no EC
    rep = verify_truth_invariance(cad, F, trials=600, seed=4)
    assert rep.ok
    for c in cad.cells:
        if c.ec:
            assert sign_at(parse_poly("x^2 + y^2 - 1", F.order), c.sample) == 0


def test_cylinders_over_non_ec_cells():
    F, cad = build("vars: z > y > x\nz - x*y = 0 /\\ y - x^2 = 0 /\\ x + y + z > 0")
    assert any(st.kind == CYLINDER for st in cad.stacks.values())
    assert verify_truth_invariance(cad, F, trials=600, seed=5).ok


def test_nullification_over_a_curve_fails():
    F, cad = build("vars: z > y > x > w\nx*w + y*z = 0")
    assert isinstance(cad, Fail)
    assert not cad
    assert "nullified" in cad.message(F.order)
    assert cad.level == 4


def test_nullification_over_a_point_is_relaxed():
    F, cad = build("vars: z > y > x\nx*z - y = 0 /\\ z > 0")
    assert not isinstance(cad, Fail)
    assert cad.relaxed
    assert verify_truth_invariance(cad, F, trials=600, seed=6).ok


def test_locate_returns_cell_with_matching_signs():
    F, cad = build("vars: y > x\ny^2 - x^3 + x = 0 /\\ y < 1", strategy="none")
    polys = sorted(defining_polynomials(F), key=str)
    rng = random.Random(0)
    for _ in range(200):
        p = (Fraction(rng.randint(-160, 160), 64), Fraction(rng.randint(-160, 160), 64))
        c = locate(p, cad)
        assert [sign_at(q, p) for q in polys] == [sign_at(q, c.sample) for q in polys]
        assert eval_truth(F, p) == eval_truth(F, c.sample)
    for c in cad.cells:
        if all(a.is_rational for a in c.sample):
            assert locate([a.value for a in c.sample], cad).index == c.index


def test_sector_samples_interleave_roots():
    roots = isolate_real_roots(parse_poly("x^3 - 2*x"))
    refined, samples = sector_samples(roots)
    assert len(samples) == 4
    for s, r in zip(samples, refined):
        assert RealAlgebraic.rational(s) < r
    assert RealAlgebraic.rational(samples[-1]) > refined[-1]
    assert sector_samples([]) == ([], [Fraction(0)])


def test_cell_limit():
    with pytest.raises(ResourceLimit):
        build("vars: y > x\nx^2 + y^2 - 1 < 0", strategy="none", max_cells=10)


def test_json_export():
    F, cad = build("x^2 - 2 = 0")
    d = to_json(cad, F)
    assert d["stats"]["counts"] == [5]
    assert [c["truth"] for c in d["cells"]] == [False, True, False, True, False]
    assert "defpoly" in d["cells"][1]["sample"][0]
