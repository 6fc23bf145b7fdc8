"""Lifting: stacks over EC sections, cylinders elsewhere, and point location.

Cells are built level by level.  Over a cell where the previous designated
EC vanishes a full stack is generated with respect to the EC basis (or the
whole projection basis when there is no EC at that level); every other cell
is extended to a single cylinder cell, since the formula is false there.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cmp_to_key
from math import ceil, floor
from typing import Iterable

from .algnum import (
    RealAlgebraic,
    SamplePoint,
    NullifiedError,
    compare,
    isolate_real_roots,
    nullified_at,
    roots_at,
    separate,
    sign_at,
    simplest_between,
)
from .poly import Poly, VarOrder, sorted_polys
from .projection import ProjectionRun

STACK = "stack"
CYLINDER = "cylinder"
RELAXED = "relaxed"


class ResourceLimit(RuntimeError):
    """A configured size guard was exceeded."""


@dataclass(frozen=True)
class Cell:
    index: tuple
    sample: SamplePoint
    ec: bool = False  # the designated EC of this level vanishes on the cell

    @property
    def level(self) -> int:
        return len(self.index)

    @property
    def dimension(self) -> int:
        return sum(i % 2 for i in self.index)

    def is_section(self, k: int | None = None) -> bool:
        k = len(self.index) if k is None else k
        return self.index[k - 1] % 2 == 0


@dataclass
class Stack:
    """Cells over one base cell together with the data needed to locate points."""

    base: tuple
    level: int
    kind: str
    polys: tuple
    sections: list
    cells: list

    def __len__(self):
        return len(self.cells)


@dataclass
class Fail:
    """Lifting stopped: ``poly`` is nullified over ``cell``."""

    level: int
    cell: Cell
    poly: Poly

    def __bool__(self):
        return False

    def message(self, order: VarOrder) -> str:
        return (
            f"FAIL: {self.poly} is nullified over cell {list(self.cell.index)} "
            f"at level {self.level} ({order.names[self.level - 1]})"
        )


@dataclass
class CAD:
    order: VarOrder
    levels: list  # levels[k - 1] lists the cells of R^k in index order
    stacks: dict  # base index -> Stack (the empty tuple keys the base line)
    run: ProjectionRun | None = None
    relaxed: list = field(default_factory=list)

    @property
    def cells(self) -> list:
        return self.levels[-1]

    @property
    def n(self) -> int:
        return len(self.levels)

    def __len__(self):
        return len(self.cells)

    def counts(self) -> list:
        return [len(c) for c in self.levels]


# --------------------------------------------------------------------------
# stacks


def _merge_roots(groups: Iterable[list]) -> list:
    roots = [r for g in groups for r in g]
    roots.sort(key=cmp_to_key(compare))
    out = []
    for r in roots:
        if out and compare(out[-1], r) == 0:
            # prefer the cheaper representation of a repeated root
            if r.degree < out[-1].degree:
                out[-1] = r
            continue
        out.append(r)
    return out


def _lower(r: RealAlgebraic) -> Fraction:
    return r.value if r.value is not None else r.lo


def _upper(r: RealAlgebraic) -> Fraction:
    return r.value if r.value is not None else r.hi


def sector_samples(roots: list) -> tuple:
    """Refined roots and one rational sample per sector (``len(roots) + 1``)."""
    if not roots:
        return [], [Fraction(0)]
    roots = list(roots)
    for i in range(len(roots) - 1):
        roots[i], roots[i + 1] = separate(roots[i], roots[i + 1])
    samples = [Fraction(floor(_lower(roots[0])) - 1)]
    for a, b in zip(roots, roots[1:]):
        samples.append(simplest_between(_upper(a), _lower(b)))
    samples.append(Fraction(ceil(_upper(roots[-1])) + 1))
    return roots, samples


def _stack_cells(base: Cell, roots: list, ec_sections: bool) -> tuple:
    roots, between = sector_samples(roots)
    cells = []
    idx = 1
    for i, s in enumerate(between):
        cells.append(Cell(base.index + (idx,), base.sample.extend(RealAlgebraic.rational(s)), False))
        idx += 1
        if i < len(roots):
            cells.append(Cell(base.index + (idx,), base.sample.extend(roots[i]), ec_sections))
            idx += 1
    return roots, cells


def base_phase(run: ProjectionRun) -> Stack:
    """Cells of the real line from the level-one polynomials."""
    F1 = run.F[0]
    polys = sorted_polys(F1 if F1 else run.B[0])
    roots = _merge_roots(isolate_real_roots(p) for p in polys)
    root_cell = Cell((), SamplePoint(()), True)
    roots, cells = _stack_cells(root_cell, roots, bool(F1))
    return Stack((), 1, STACK, tuple(polys), roots, cells)


def gen_stack(c: Cell, L: Iterable[Poly], v, ec_sections: bool = False, kind: str = STACK) -> Stack:
    """Stack over ``c`` with respect to ``L`` (raises NullifiedError)."""
    L = tuple(sorted_polys(L))
    roots = _merge_roots(roots_at(p, c.sample, v) for p in L)
    roots, cells = _stack_cells(c, roots, ec_sections)
    k = len(c.index) + 1
    return Stack(c.index, k, kind, L, roots, cells)


def _cylinder(c: Cell, k: int) -> Stack:
    cell = Cell(c.index + (1,), c.sample.extend(RealAlgebraic.rational(0)), False)
    return Stack(c.index, k, CYLINDER, (), [], [cell])


def lift_all(run: ProjectionRun, max_cells: int | None = None):
    """Lift the projection run to a CAD of R^n, or return :class:`Fail`."""
    order = run.order
    n = len(order)
    stacks = {}
    relaxed = []
    st = base_phase(run)
    stacks[()] = st
    levels = [st.cells]
    _guard(max_cells, len(st.cells))
    for k in range(2, n + 1):
        v = k - 1
        Fk = run.F[k - 1]
        L = sorted_polys(Fk if Fk else run.B[k - 1])
        prev_has_ec = bool(run.F[k - 2])
        cells = []
        for c in levels[-1]:
            if prev_has_ec and not c.ec:
                st = _cylinder(c, k)
            else:
                dead = [p for p in L if nullified_at(p, c.sample, v)]
                if not dead:
                    st = gen_stack(c, L, v, ec_sections=bool(Fk))
                elif c.dimension == 0:
                    # over a point every polynomial set is delineable; lift with
                    # the surviving projection factors, the nullified EC holds on
                    # the whole fibre
                    wide = sorted_polys(set(run.B[k - 1]) | set(L))
                    live = [p for p in wide if not nullified_at(p, c.sample, v)]
                    st = gen_stack(c, live, v, kind=RELAXED)
                    ec_all = bool(Fk) and any(p in Fk for p in dead)
                    if ec_all:
                        st.cells = [Cell(x.index, x.sample, True) for x in st.cells]
                    elif Fk:
                        st.cells = [Cell(x.index, x.sample, False) for x in st.cells]
                    relaxed.append((k, c.index, tuple(dead)))
                else:
                    return Fail(k, c, dead[0])
            stacks[c.index] = st
            cells.extend(st.cells)
            _guard(max_cells, len(cells))
        levels.append(cells)
    return CAD(order, levels, stacks, run, relaxed)


def _guard(limit, count):
    if limit is not None and count > limit:
        raise ResourceLimit(f"cell count {count} exceeds the limit {limit}")


# --------------------------------------------------------------------------
# point location and verification


class LocateError(RuntimeError):
    pass


def locate(point, cad: CAD) -> Cell:
    """Cell containing a point with rational coordinates."""
    pt = [Fraction(x) for x in point]
    if len(pt) != cad.n:
        raise ValueError(f"point has {len(pt)} coordinates, the CAD has dimension {cad.n}")
    base = ()
    prefix = SamplePoint(())
    cell = None
    for k in range(1, cad.n + 1):
        st = cad.stacks[base]
        t = RealAlgebraic.rational(pt[k - 1])
        if st.kind == CYLINDER:
            pos = 1
        else:
            if k == 1:
                roots = st.sections
            else:
                try:
                    roots = _merge_roots(roots_at(p, prefix, k - 1) for p in st.polys)
                except NullifiedError as e:
                    raise LocateError(f"{e.poly} vanishes identically over the point") from None
                if len(roots) != len(st.sections):
                    raise LocateError(
                        f"stack over {list(base)} has {len(st.sections)} sections "
                        f"but {len(roots)} at {[str(x) for x in pt[:k - 1]]}"
                    )
            pos = _position(t, roots)
        cell = st.cells[pos - 1]
        base = cell.index
        prefix = prefix.extend(t)
    return cell


def _position(t: RealAlgebraic, roots: list) -> int:
    for i, r in enumerate(roots):
        c = compare(t, r)
        if c < 0:
            return 2 * i + 1
        if c == 0:
            return 2 * i + 2
    return 2 * len(roots) + 1


def sample_box(cad: CAD) -> list:
    """Per-coordinate bounds covering every sample and section, widened by 1."""
    lo = [Fraction(-1)] * cad.n
    hi = [Fraction(1)] * cad.n
    for level in cad.levels:
        for c in level:
            k = len(c.index) - 1
            a = c.sample[k]
            lo[k] = min(lo[k], floor(_lower(a)) - 1)
            hi[k] = max(hi[k], ceil(_upper(a)) + 1)
    return list(zip(lo, hi))


def random_points(cad: CAD, trials: int, seed: int, den: int = 64) -> list:
    """Seeded rational points; a share of coordinates snap to rational samples."""
    rng = random.Random(seed)
    box = sample_box(cad)
    snaps = [
        sorted({c.sample[k].value for c in cad.levels[k] if c.sample[k].value is not None})
        for k in range(cad.n)
    ]
    pts = []
    for _ in range(trials):
        p = []
        for k, (a, b) in enumerate(box):
            if snaps[k] and rng.random() < 0.2:
                p.append(rng.choice(snaps[k]))
            else:
                p.append(Fraction(rng.randint(int(a * den), int(b * den)), den))
        pts.append(tuple(p))
    return pts


@dataclass
class VerifyReport:
    trials: int
    checked: int
    violations: list

    @property
    def ok(self) -> bool:
        return not self.violations


def verify_truth_invariance(cad: CAD, formula, trials: int = 1000, seed: int = 0) -> VerifyReport:
    """Compare the formula's truth at random points with the truth at their cell's sample."""
    from .formula import eval_truth

    truth = {}
    bad = []
    checked = 0
    for p in random_points(cad, trials, seed):
        try:
            c = locate(p, cad)
        except LocateError as e:
            bad.append((p, None, str(e)))
            continue
        if c.index not in truth:
            truth[c.index] = eval_truth(formula, c.sample)
        checked += 1
        if eval_truth(formula, p) != truth[c.index]:
            bad.append((p, c.index, "truth differs from the cell sample"))
    return VerifyReport(trials, checked, bad)


def verify_sign_invariance(cad: CAD, polys: Iterable[Poly], trials: int = 1000, seed: int = 0) -> VerifyReport:
    """Points in one cell must share the sign vector of that cell's sample."""
    polys = sorted_polys(polys)
    signs = {}
    bad = []
    checked = 0
    for p in random_points(cad, trials, seed):
        try:
            c = locate(p, cad)
        except LocateError as e:
            bad.append((p, None, str(e)))
            continue
        if c.index not in signs:
            signs[c.index] = tuple(sign_at(q, c.sample) for q in polys)
        checked += 1
        vec = tuple(sign_at(q, p) for q in polys)
        if vec != signs[c.index]:
            bad.append((p, c.index, "sign vector differs from the cell sample"))
    return VerifyReport(trials, checked, bad)


def cell_truths(cad: CAD, formula) -> list:
    from .formula import eval_truth

    return [eval_truth(formula, c.sample) for c in cad.cells]


def to_json(cad: CAD, formula=None) -> dict:
    truths = cell_truths(cad, formula) if formula is not None else [None] * len(cad.cells)
    return {
        "variables": list(cad.order.names),
        "cells": [
            {"index": list(c.index), "sample": c.sample.to_json(cad.order), "truth": t}
            for c, t in zip(cad.cells, truths)
        ],
        "stats": {"counts": cad.counts(), "fail": False, "relaxed": len(cad.relaxed)},
    }
