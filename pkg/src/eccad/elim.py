"""Resultants, discriminants and coefficient sets.

Resultants are computed with the subresultant polynomial remainder sequence
over ``Z[other variables]`` (or ``Q[...]``), so every intermediate division is
exact.  The sign is that of the Sylvester determinant with the rows of the
first argument on top.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations

from .poly import Poly, PolyError, polyset, uprem, _ustrip


class ElimError(PolyError):
    pass


@dataclass(frozen=True)
class ElimStep:
    op: str
    var: str
    inputs: tuple
    output: Poly
    degrees: tuple  # max degree per variable of the output, lowest variable first
    total_degree: int


@dataclass
class ElimTrace:
    steps: list = field(default_factory=list)

    def record(self, op, var, inputs, output):
        step = ElimStep(op, var, tuple(inputs), output, output.degrees(), output.total_degree())
        self.steps.append(step)
        return step

    def zero_results(self):
        return [s for s in self.steps if s.output.is_zero]

    def constant_results(self):
        return [s for s in self.steps if s.output.is_constant and not s.output.is_zero]

    def table(self) -> str:
        """Plain-text table: step, eliminated variable, per-variable degrees, total degree."""
        if not self.steps:
            return "(no elimination steps)"
        names = self.steps[0].output.order.names
        head = ["step", "op", "var"] + [f"deg_{n}" for n in names] + ["tdeg"]
        rows = []
        for i, s in enumerate(self.steps, 1):
            if s.output.is_zero:
                degs = ["-"] * len(names)
                td = "-"
            else:
                degs = [str(d) for d in s.degrees]
                td = str(s.total_degree)
            rows.append([str(i), s.op, s.var] + degs + [td])
        widths = [max(len(r[j]) for r in rows + [head]) for j in range(len(head))]
        fmt = "  ".join("{:>%d}" % w for w in widths)
        return "\n".join([fmt.format(*head)] + [fmt.format(*r) for r in rows])


def _res_lists(A: list, B: list, order) -> Poly:
    # subresultant PRS on coefficient lists, deg A >= deg B >= 1
    one = Poly.const(order, 1)
    g = one
    h = one
    s = 1
    while True:
        dA = len(A) - 1
        dB = len(B) - 1
        delta = dA - dB
        if dA & 1 and dB & 1:
            s = -s
        R = _ustrip(uprem(A, B))
        A = B
        if not R:
            return Poly.const(order, 0)
        div = g * h**delta
        B = [c.exquo(div) for c in R]
        g = A[-1]
        if delta == 1:
            h = g
        elif delta > 1:
            h = (g**delta).exquo(h ** (delta - 1))
        if len(B) - 1 <= 0:
            break
    dA = len(A) - 1
    lb = B[0]
    if dA == 1:
        h = lb
    else:
        h = (lb**dA).exquo(h ** (dA - 1))
    return h * s


def resultant(f: Poly, g: Poly, v) -> Poly:
    """Sylvester resultant of ``f`` and ``g`` with respect to ``v``."""
    if f.order != g.order:
        raise PolyError("polynomials use different variable orders")
    i = f.order.index(v)
    if f.is_zero or g.is_zero:
        raise ElimError("resultant of a zero polynomial")
    df, dg = f.degree(i), g.degree(i)
    if df == 0 and dg == 0:
        raise ElimError(f"both polynomials are constant in {f.order.names[i]}")
    if df == 0:
        return f**dg
    if dg == 0:
        return g**df
    A = f.coeffs(i)
    B = g.coeffs(i)
    sign = 1
    if df < dg:
        A, B = B, A
        if df & 1 and dg & 1:
            sign = -1
    r = _res_lists(A, B, f.order)
    return -r if sign < 0 else r


def discriminant(f: Poly, v) -> Poly:
    """``(-1)**(d(d-1)/2) * res(f, f') / lc(f)``; linear polynomials give 1."""
    i = f.order.index(v)
    d = f.degree(i)
    if d <= 0:
        raise ElimError(f"discriminant needs positive degree in {f.order.names[i]}")
    if d == 1:
        return Poly.const(f.order, 1)
    r = resultant(f, f.diff(i), i).exquo(f.lc(i))
    return -r if (d * (d - 1) // 2) & 1 else r


def coeff_set(f: Poly, v) -> frozenset:
    """All coefficients of powers of ``v``, normalised, constants dropped."""
    return polyset(c for c in f.coeffs(v) if not c.is_zero)


def pairwise_resultants(polys, v, trace: ElimTrace | None = None, op="res") -> list:
    """Raw resultants of every unordered pair with positive degree in ``v``."""
    order = None
    out = []
    work = [p for p in polys if p.degree(v) > 0]
    for f, g in combinations(work, 2):
        order = f.order
        r = resultant(f, g, v)
        if trace is not None:
            trace.record(op, order.names[order.index(v)], (f, g), r)
        out.append(r)
    return out


def iterated_chain(F, vars) -> tuple:
    """Cascade of pairwise resultants, eliminating ``vars`` top-down.

    Returns ``(levels, trace)``: ``levels[j]`` holds the distinct nonconstant
    results after eliminating ``vars[j]`` (raw, not normalised, first
    representative of each normalised class).  Zero and constant resultants
    are kept in the trace only.  Inputs free of the eliminated variable pass
    through to the next level.
    """
    trace = ElimTrace()
    current = list(F)
    levels = []
    for v in vars:
        passed = [p for p in current if p.degree(v) <= 0]
        results = pairwise_resultants(current, v, trace)
        seen = set()
        nxt = []
        for r in passed + results:
            if r.is_constant:
                continue
            key = r.normalized()
            if key in seen:
                continue
            seen.add(key)
            nxt.append(r)
        levels.append([r for r in nxt if r not in passed])
        current = nxt
    return levels, trace
