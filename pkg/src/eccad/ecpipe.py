"""Equational-constraint designations.

Candidates for the designated EC at each main variable come either from
propagating the explicit ECs by iterated resultants or from a lex Groebner
basis of the ideal they generate.  A designation picks at most one
candidate per main variable.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product
from typing import Iterable

from .elim import ElimTrace, pairwise_resultants
from .groebner import GroebnerBasis, buchberger, elimination_split
from .poly import Poly, VarOrder, content_prim, squarefree_part

SOURCES = ("explicit", "resultant", "groebner")


class InconsistentECs(ValueError):
    """The equational constraints have no common zero."""

    def __init__(self, reason: str = ""):
        self.reason = reason
        msg = "inconsistent ECs: formula unsatisfiable"
        super().__init__(f"{msg} ({reason})" if reason else msg)


@dataclass(frozen=True)
class Candidate:
    poly: Poly
    source: str
    label: str

    def __str__(self):
        return f"{self.label} = {self.poly}"


@dataclass
class Candidates:
    """Candidate ECs bucketed by main variable (highest variable first)."""

    order: VarOrder
    buckets: dict
    trace: ElimTrace | None = None
    basis: GroebnerBasis | None = None

    def bucket(self, v) -> tuple:
        return self.buckets.get(self.order.names[self.order.index(v)], ())

    def sizes(self) -> dict:
        return {v: len(b) for v, b in self.buckets.items()}

    def count(self) -> int:
        n = 1
        for b in self.buckets.values():
            n *= max(1, len(b))
        return n


@dataclass(frozen=True)
class Designation:
    """At most one primitive squarefree EC per main variable."""

    order: VarOrder
    entries: tuple  # (variable name, Poly, source, label), highest variable first
    contents: frozenset = field(default_factory=frozenset)

    def get(self, v) -> Poly | None:
        name = self.order.names[self.order.index(v)]
        for nm, p, _, _ in self.entries:
            if nm == name:
                return p
        return None

    def label(self) -> str:
        return "(" + ", ".join(lb for _, _, _, lb in self.entries) + ")"

    def as_dict(self) -> dict:
        return {nm: p for nm, p, _, _ in self.entries}

    def sources(self) -> dict:
        return {nm: src for nm, _, src, _ in self.entries}


def _bucketize(order: VarOrder, cands: Iterable[Candidate]) -> dict:
    out = {nm: [] for nm in reversed(order.names)}
    seen = set()
    for c in cands:
        if c.poly.is_constant:
            continue
        key = c.poly.normalized()
        if key in seen:
            continue
        seen.add(key)
        out[order.names[c.poly.mvar()]].append(c)
    return {k: tuple(v) for k, v in out.items()}


def _check_constants(E):
    for p in E:
        if p.is_constant and not p.is_zero:
            raise InconsistentECs(f"constant equation {p} = 0")


def explicit_candidates(E: Iterable[Poly], order: VarOrder) -> Candidates:
    E = [p for p in E if not p.is_zero]
    _check_constants(E)
    cands = [Candidate(p, "explicit", f"f{i}") for i, p in enumerate(E, 1)]
    return Candidates(order, _bucketize(order, cands))


def _level_label(depth: int, i: int) -> str:
    if depth == 0:
        return f"f{i}"
    if depth == 1:
        return f"r{i}"
    if depth == 2:
        return f"R{i}"
    return f"R{depth}_{i}"


def propagate_resultants(E: Iterable[Poly], order: VarOrder) -> Candidates:
    """Cascade of pairwise resultants from the highest variable downward."""
    E = [p for p in E if not p.is_zero]
    _check_constants(E)
    trace = ElimTrace()
    cands = [Candidate(p, "explicit", f"f{i}") for i, p in enumerate(E, 1)]
    # items carry their elimination depth so labels follow the cascade
    current = [(p, 0) for p in E]
    seen = {p.normalized() for p in E}
    counters: dict = {}
    # the lowest variable only yields constants, but a nonzero one still
    # proves the equations have no common zero
    for k in range(len(order) - 1, -1, -1):
        v = order.names[k]
        active = [(p, d) for p, d in current if p.degree(k) > 0]
        passed = [(p, d) for p, d in current if p.degree(k) <= 0]
        if len(active) < 2:
            current = passed + active
            continue
        depth = max(d for _, d in active) + 1
        results = pairwise_resultants([p for p, _ in active], v, trace)
        nxt = list(passed)
        for r in results:
            if r.is_zero:
                continue
            if r.is_constant:
                raise InconsistentECs(f"resultant in {v} is the constant {r}")
            key = r.normalized()
            if key in seen:
                continue
            seen.add(key)
            counters[depth] = counters.get(depth, 0) + 1
            cands.append(Candidate(r, "resultant", _level_label(depth, counters[depth])))
            nxt.append((r, depth))
        current = nxt
    return Candidates(order, _bucketize(order, cands), trace=trace)


def gb_precondition(E: Iterable[Poly], order: VarOrder, mode: str = "replace") -> Candidates:
    """Candidates from the reduced lex Groebner basis of the ECs."""
    if mode not in ("replace", "augment"):
        raise ValueError(f"unknown preconditioning mode {mode!r}")
    E = [p for p in E if not p.is_zero]
    if not E:
        raise ValueError("Groebner preconditioning needs at least one EC")
    _check_constants(E)
    G = buchberger(E)
    if G.is_unit:
        raise InconsistentECs("the equations generate the unit ideal")
    split = elimination_split(G)
    # label g1, g2, ... from the highest leading term down
    ranked = sorted(G.gens, key=lambda p: max(p._t), reverse=True)
    labels = {p: f"g{i}" for i, p in enumerate(ranked, 1)}
    gb_cands = {
        v: sorted((Candidate(p, "groebner", labels[p]) for p in split[v]), key=_lab_key)
        for v in split
    }
    if mode == "replace":
        flat = [c for v in reversed(order.names) for c in gb_cands[v]]
        return Candidates(order, _bucketize(order, flat), basis=G)
    base = explicit_candidates(E, order).buckets
    flat = []
    for v in reversed(order.names):
        if base.get(v):
            flat.extend(base[v])
        else:
            flat.extend(gb_cands[v])
    return Candidates(order, _bucketize(order, flat), basis=G)


def _lab_key(c: Candidate):
    digits = "".join(ch for ch in c.label if ch.isdigit())
    return (c.label.rstrip("0123456789"), int(digits) if digits else 0)


def prepare(p: Poly, v: int):
    """Squarefree primitive part of ``p`` in ``v`` and the discarded content."""
    cont, prim = content_prim(p, v)
    return squarefree_part(prim), cont


def make_designation(order: VarOrder, chosen: Iterable[Candidate]) -> Designation:
    entries = []
    contents = []
    for c in chosen:
        v = c.poly.mvar()
        ec, cont = prepare(c.poly, v)
        if not cont.is_constant:
            contents.append(cont)
        entries.append((order.names[v], ec, c.source, c.label))
    entries.sort(key=lambda e: -order.index(e[0]))
    return Designation(order, tuple(entries), frozenset(q.normalized() for q in contents))


def enumerate_designations(cands: Candidates) -> list:
    """Cartesian product over the nonempty buckets (deterministic order)."""
    order = cands.order
    buckets = [b for v, b in sorted(cands.buckets.items(), key=lambda kv: -order.index(kv[0])) if b]
    if not buckets:
        return [Designation(order, ())]
    return [make_designation(order, combo) for combo in product(*buckets)]


def manual_designation(order: VarOrder, polys: Iterable[Poly], source: str = "explicit") -> Designation:
    cands = [Candidate(p, source, f"e{i}") for i, p in enumerate(polys, 1)]
    seen = {}
    for c in cands:
        v = c.poly.mvar()
        if v is None:
            raise ValueError(f"designated EC {c.poly} is constant")
        if v in seen:
            raise ValueError(f"two designated ECs share main variable {order.names[v]}")
        seen[v] = c
    return make_designation(order, cands)


def candidates_for(strategy: str, E: list, order: VarOrder) -> Candidates:
    """Dispatch on the strategy names used by the command line."""
    if strategy == "none" or not E:
        return Candidates(order, {v: () for v in reversed(order.names)})
    if strategy == "explicit":
        return explicit_candidates(E, order)
    if strategy == "resultants":
        return propagate_resultants(E, order)
    if strategy in ("gb", "gb-replace"):
        return gb_precondition(E, order, "replace")
    if strategy == "gb-augment":
        return gb_precondition(E, order, "augment")
    raise ValueError(f"unknown EC strategy {strategy!r}")

