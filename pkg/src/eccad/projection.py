"""Projection operators and the full projection phase with designated ECs."""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable

from .elim import discriminant, resultant
from .poly import Poly, PolyError, VarOrder, content_prim, polyset, sorted_polys, squarefree_basis

OP_FULL = "P"
OP_EC = "P_F"
OP_EC_STAR = "P*_F"


def _check_basis(B, v):
    for b in B:
        if b.degree(v) <= 0 or b.mvar() != b.order.index(v):
            raise PolyError(f"{b} does not have main variable {b.order.names[b.order.index(v)]}")


def _coeffs(B, v) -> list:
    return [c for b in B for c in b.coeffs(v) if not c.is_zero]


def _discs(B, v) -> list:
    return [discriminant(b, v) for b in B]


def proj_full(B: Iterable[Poly], v) -> frozenset:
    """Coefficients, discriminants and pairwise resultants."""
    B = sorted_polys(B)
    _check_basis(B, v)
    out = _coeffs(B, v) + _discs(B, v)
    out += [resultant(f, g, v) for f, g in combinations(B, 2)]
    return polyset(out)


def _split(B, F, v):
    B = sorted_polys(B)
    F = sorted_polys(F)
    _check_basis(B, v)
    Bset = set(B)
    if any(f not in Bset for f in F):
        raise PolyError("the EC basis must be a subset of the projection basis")
    rest = [b for b in B if b not in set(F)]
    return B, F, rest


def proj_ec(B: Iterable[Poly], F: Iterable[Poly], v) -> frozenset:
    """``P(F)`` plus resultants of EC factors with the other basis elements."""
    B, F, rest = _split(B, F, v)
    out = set(proj_full(F, v)) if F else set()
    out |= polyset(resultant(f, g, v) for f in F for g in rest)
    return frozenset(out)


def proj_ec_star(B: Iterable[Poly], F: Iterable[Poly], v) -> frozenset:
    """``proj_ec`` together with the discriminants of the non-EC elements."""
    B, F, rest = _split(B, F, v)
    return proj_ec(B, F, v) | polyset(_discs(rest, v))


@dataclass
class LevelStats:
    level: int
    var: str
    count: int
    basis_size: int
    max_degrees: tuple
    max_total_degree: int
    op: str | None = None


@dataclass
class ProjectionRun:
    """Output of the projection phase (index ``k - 1`` holds level ``k``)."""

    order: VarOrder
    A: list
    B: list
    F: list
    ops: list
    E: list = field(default_factory=list)

    @property
    def n(self) -> int:
        return len(self.order)

    def level(self, k: int) -> dict:
        return {"A": self.A[k - 1], "B": self.B[k - 1], "F": self.F[k - 1], "op": self.ops[k - 1]}

    def stats(self) -> list:
        out = []
        for k in range(self.n, 0, -1):
            A = self.A[k - 1]
            degs = tuple(
                max((p.degree(i) for p in A), default=0) if A else 0 for i in range(self.n)
            )
            out.append(
                LevelStats(
                    k,
                    self.order.names[k - 1],
                    len(A),
                    len(self.B[k - 1]),
                    tuple(max(d, 0) for d in degs),
                    max((p.total_degree() for p in A), default=0),
                    self.ops[k - 1],
                )
            )
        return out

    def table(self) -> str:
        names = self.order.names
        head = ["level", "var", "|A|", "|B|", "op"] + [f"deg_{n}" for n in names] + ["tdeg"]
        rows = []
        for s in self.stats():
            rows.append(
                [str(s.level), s.var, str(s.count), str(s.basis_size), s.op or "-"]
                + [str(d) for d in s.max_degrees]
                + [str(s.max_total_degree)]
            )
        widths = [max(len(r[j]) for r in rows + [head]) for j in range(len(head))]
        fmt = "  ".join("{:>%d}" % w for w in widths)
        return "\n".join([fmt.format(*head)] + [fmt.format(*r) for r in rows])


class DegreeLimit(RuntimeError):
    """A projection polynomial exceeded the configured degree guard."""


def project_all(polys: Iterable[Poly], order: VarOrder, ecs: dict | None = None,
                max_degree: int | None = None) -> ProjectionRun:
    """Projection phase with designated ECs ``{variable: polynomial}``.

    Designated ECs are adjoined to the input set so that each EC basis is a
    subset of the projection basis at its level.
    """
    n = len(order)
    E = [None] * n
    for v, p in (ecs or {}).items():
        k = order.index(v)
        if p is None:
            continue
        if p.mvar() != k:
            raise PolyError(f"designated EC {p} does not have main variable {order.names[k]}")
        E[k] = p
    current = set(polyset(polys)) | set(polyset(p for p in E if p is not None))
    A = [frozenset()] * n
    B = [frozenset()] * n
    F = [frozenset()] * n
    ops = [None] * n
    for k in range(n - 1, -1, -1):
        here = [p for p in current if p.mvar() == k]
        lower = {p for p in current if p.mvar() is not None and p.mvar() < k}
        A[k] = frozenset(here) | frozenset(lower)
        C = set(lower)
        prims = []
        for p in here:
            c, pp = content_prim(p, k)
            if not c.is_constant:
                C.add(c.normalized())
            prims.append(pp)
        B[k] = squarefree_basis(prims, k) if prims else frozenset()
        if E[k] is not None:
            F[k] = frozenset(b for b in B[k] if b.divides(E[k]))
        if k == 0:
            break
        if F[k]:
            ops[k] = OP_EC_STAR
            proj = proj_ec_star(B[k], F[k], k)
        else:
            ops[k] = OP_FULL
            proj = proj_full(B[k], k) if B[k] else frozenset()
        current = polyset(C) | proj
        if max_degree is not None:
            for p in current:
                if max(p.degrees()) > max_degree:
                    raise DegreeLimit(f"projection factor of degree {max(p.degrees())} exceeds {max_degree}")
    return ProjectionRun(order, A, B, F, ops, E)
