"""Quantifier-free Tarski formulas over one variable order."""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable

from .algnum import sign_at
from .poly import ParseError, Poly, PolyParser, VarOrder, default_order, polyset, scan_names

RELATIONS = ("=", "!=", "<", "<=", ">", ">=")

_NEGATE = {"=": "!=", "!=": "=", "<": ">=", ">=": "<", ">": "<=", "<=": ">"}
_HOLDS = {
    "=": lambda s: s == 0,
    "!=": lambda s: s != 0,
    "<": lambda s: s < 0,
    "<=": lambda s: s <= 0,
    ">": lambda s: s > 0,
    ">=": lambda s: s >= 0,
}


class QFF:
    """Base class of formula nodes."""

    __slots__ = ()

    def __and__(self, other):
        return And((self, other))

    def __or__(self, other):
        return Or((self, other))

    def __invert__(self):
        return Not(self)

    def __str__(self):
        return format_formula(self)


@dataclass(frozen=True)
class Atom(QFF):
    poly: Poly
    rel: str

    def __post_init__(self):
        if self.rel not in RELATIONS:
            raise ValueError(f"unknown relation {self.rel!r}")


@dataclass(frozen=True)
class And(QFF):
    children: tuple


@dataclass(frozen=True)
class Or(QFF):
    children: tuple


@dataclass(frozen=True)
class Not(QFF):
    child: QFF


@dataclass(frozen=True)
class Formula:
    """A parsed input: the formula together with its variable order."""

    qff: QFF
    order: VarOrder

    def __str__(self):
        return format_formula(self.qff)


# --------------------------------------------------------------------------
# parsing

_REL_TOKENS = ("<=", ">=", "!=", "==", "=", "<", ">")
_AND_TOKENS = ("/\\", "&&")
_OR_TOKENS = ("\\/", "||")
_NOT_TOKENS = ("~", "!")


class FormulaParser(PolyParser):
    def formula(self):
        return self.disj()

    def disj(self):
        parts = [self.conj()]
        while True:
            tok = self.peek(*_OR_TOKENS)
            if not tok:
                break
            self.pos += len(tok)
            parts.append(self.conj())
        return parts[0] if len(parts) == 1 else Or(tuple(parts))

    def conj(self):
        parts = [self.neg()]
        while True:
            tok = self.peek(*_AND_TOKENS)
            if not tok:
                break
            self.pos += len(tok)
            parts.append(self.neg())
        return parts[0] if len(parts) == 1 else And(tuple(parts))

    def neg(self):
        tok = self.peek(*_NOT_TOKENS)
        if tok and not self.peek("!="):
            self.pos += len(tok)
            return Not(self.neg())
        return self.primary()

    def primary(self):
        start = self.pos
        if self.peek("("):
            # either a parenthesised formula or a relation whose lhs starts with "("
            try:
                return self.relation()
            except ParseError:
                self.pos = start
            self.eat("(")
            inner = self.formula()
            self.eat(")")
            return inner
        return self.relation()

    def relation(self):
        lhs = self.expr()
        rel = self.peek(*_REL_TOKENS)
        if not rel:
            raise ParseError("expected a relation", self.pos, self.text)
        self.pos += len(rel)
        rhs = self.expr()
        return Atom(lhs - rhs, "=" if rel == "==" else rel)


_HEADER = re.compile(r"^\s*vars\s*:\s*(.*)$")


def parse_formula(text: str, order: VarOrder | str | None = None) -> Formula:
    """Parse formula text, honouring an optional ``vars:`` header line."""
    lines = text.splitlines()
    body = []
    header = None
    for ln in lines:
        stripped = ln.split("#", 1)[0]
        m = _HEADER.match(stripped)
        if m and header is None and not body:
            header = m.group(1)
            continue
        body.append(stripped)
    src = " ".join(body).strip()
    if not src:
        raise ParseError("empty formula", 0, text)
    if isinstance(order, str):
        order = VarOrder.parse(order)
    if order is None and header:
        order = VarOrder.parse(header)
    if order is None:
        names = [n for n in scan_names(src)]
        order = default_order(names or ["x"])
    p = FormulaParser(src, order)
    qff = p.formula()
    if not p.at_end():
        raise ParseError("trailing input", p.pos, src)
    return Formula(qff, order)


def parse(text: str, order=None) -> QFF:
    return parse_formula(text, order).qff


# --------------------------------------------------------------------------
# printing


def format_formula(f: QFF, top: bool = True) -> str:
    if isinstance(f, Atom):
        return f"{f.poly} {f.rel} 0"
    if isinstance(f, Not):
        return "~(" + format_formula(f.child) + ")"
    sep = " /\\ " if isinstance(f, And) else " \\/ "
    inner = sep.join(format_formula(c, False) for c in f.children)
    return inner if top else "(" + inner + ")"


# --------------------------------------------------------------------------
# queries


def atoms(f: QFF) -> Iterable[Atom]:
    if isinstance(f, Atom):
        yield f
    elif isinstance(f, Not):
        yield from atoms(f.child)
    else:
        for c in f.children:
            yield from atoms(c)


def _qff(f):
    return f.qff if isinstance(f, Formula) else f


def defining_polynomials(f) -> frozenset:
    """Normalised nonconstant atom polynomials."""
    return polyset(a.poly for a in atoms(_qff(f)) if not a.poly.is_constant)


def explicit_ec_list(f) -> list:
    """Equality-atom polynomials reachable through And nodes, as written, in order."""
    found = []
    seen = set()

    def walk(g):
        if isinstance(g, Atom):
            if g.rel == "=" and not g.poly.is_zero:
                key = g.poly.normalized()
                if key not in seen:
                    seen.add(key)
                    found.append(g.poly)
        elif isinstance(g, And):
            for c in g.children:
                walk(c)

    walk(_qff(f))
    return found


def explicit_ecs(f) -> frozenset:
    """Polynomials of equality atoms reachable from the root through And nodes."""
    return polyset(p for p in explicit_ec_list(f) if not p.is_constant)


def eval_truth(f, point) -> bool:
    """Exact truth value at a sample point (lowest variable first)."""
    f = _qff(f)
    cache = {}

    def ev(g):
        if isinstance(g, Atom):
            s = cache.get(g.poly)
            if s is None:
                s = cache[g.poly] = sign_at(g.poly, point)
            return _HOLDS[g.rel](s)
        if isinstance(g, Not):
            return not ev(g.child)
        if isinstance(g, And):
            return all(ev(c) for c in g.children)
        return any(ev(c) for c in g.children)

    return ev(f)


def eval_signs(f, signs: dict) -> bool:
    """Truth value given precomputed signs keyed by atom polynomial."""
    f = _qff(f)
    if isinstance(f, Atom):
        return _HOLDS[f.rel](signs[f.poly])
    if isinstance(f, Not):
        return not eval_signs(f.child, signs)
    if isinstance(f, And):
        return all(eval_signs(c, signs) for c in f.children)
    return any(eval_signs(c, signs) for c in f.children)


def nnf(f, negate: bool = False) -> QFF:
    """Negation normal form (negations absorbed into relations)."""
    f = _qff(f)
    if isinstance(f, Atom):
        return Atom(f.poly, _NEGATE[f.rel]) if negate else f
    if isinstance(f, Not):
        return nnf(f.child, not negate)
    kids = tuple(nnf(c, negate) for c in f.children)
    if isinstance(f, And):
        return Or(kids) if negate else And(kids)
    return And(kids) if negate else Or(kids)


def replace_ecs(f, equations: Iterable[Poly]) -> QFF:
    """Swap the top-level equational conjuncts of ``f`` for ``equations``."""
    f = _qff(f)
    conj = list(f.children) if isinstance(f, And) else [f]
    rest = [c for c in conj if not (isinstance(c, Atom) and c.rel == "=")]
    new = [Atom(p, "=") for p in equations] + rest
    return new[0] if len(new) == 1 else And(tuple(new))
