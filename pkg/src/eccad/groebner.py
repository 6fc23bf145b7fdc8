"""Buchberger's algorithm over Q with lexicographic monomial order.

Monomials are the packed exponent keys of :class:`~eccad.poly.Poly`; since the
highest variable sits in the most significant bits, comparing keys as
integers is exactly lex order, so leading terms are ``max`` of the keys.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from .poly import Poly, PolyError, VarOrder


class InconsistentError(PolyError):
    """The equations generate the unit ideal (no common complex zero)."""


@dataclass(frozen=True)
class MonomialOrder:
    order: VarOrder
    kind: str = "lex"

    def __post_init__(self):
        if self.kind != "lex":
            raise PolyError(f"unsupported monomial order {self.kind!r}")

    def key(self, packed: int) -> int:
        return packed


@dataclass(frozen=True)
class GroebnerBasis:
    gens: tuple
    order: MonomialOrder
    reduced: bool = True

    def __iter__(self):
        return iter(self.gens)

    def __len__(self):
        return len(self.gens)

    @property
    def is_unit(self) -> bool:
        return any(g.is_constant for g in self.gens)

    def contains(self, p: Poly) -> bool:
        return reduce(p, self).is_zero


def _lcm(order: VarOrder, a: int, b: int) -> int:
    return order.pack(max(x, y) for x, y in zip(order.unpack(a), order.unpack(b)))


def _monic(t: dict) -> dict:
    lc = t[max(t)]
    if lc == 1:
        return dict(t)
    return {k: _frac(Fraction(c) / lc) for k, c in t.items()}


def _frac(c):
    return c.numerator if isinstance(c, Fraction) and c.denominator == 1 else c


def _normal_form(t: dict, basis: list, order: VarOrder, quotients: list | None = None) -> dict:
    """Fully reduce ``t`` modulo ``basis`` (pairs ``(lead key, monic dict)``)."""
    t = dict(t)
    heap = [-k for k in t]
    heapq.heapify(heap)
    rem = {}
    divides = order.divides
    while heap:
        m = -heapq.heappop(heap)
        c = t.pop(m, None)
        if c is None:
            continue
        while heap and -heap[0] == m:
            heapq.heappop(heap)
        for idx, (lm, g) in enumerate(basis):
            if divides(lm, m):
                shift = m - lm
                if quotients is not None:
                    q = quotients[idx]
                    q[shift] = q.get(shift, 0) + c
                for k, gc in g.items():
                    if k == lm:
                        continue
                    kk = k + shift
                    v = t.get(kk, 0) - c * gc
                    if v:
                        if kk not in t:
                            heapq.heappush(heap, -kk)
                        t[kk] = _frac(v) if isinstance(v, Fraction) else v
                    else:
                        t.pop(kk, None)
                break
        else:
            rem[m] = c
    return rem


def _spoly(f: tuple, g: tuple, order: VarOrder) -> dict:
    lf, tf = f
    lg, tg = g
    L = _lcm(order, lf, lg)
    sf, sg = L - lf, L - lg
    out = {}
    for k, c in tf.items():
        out[k + sf] = c
    for k, c in tg.items():
        kk = k + sg
        v = out.get(kk, 0) - c
        if v:
            out[kk] = v
        else:
            out.pop(kk, None)
    return out


def _coprime(order, a: int, b: int) -> bool:
    return all(x == 0 or y == 0 for x, y in zip(order.unpack(a), order.unpack(b)))


def buchberger(F: Iterable[Poly], order: MonomialOrder | VarOrder | None = None) -> GroebnerBasis:
    """Reduced lex Groebner basis of ``F``."""
    F = [p for p in F]
    if not F:
        raise PolyError("buchberger needs at least one polynomial")
    if any(p.is_zero for p in F):
        raise PolyError("buchberger input contains the zero polynomial")
    vo = F[0].order
    if isinstance(order, MonomialOrder):
        mo = order
    else:
        mo = MonomialOrder(order or vo)
    if mo.order != vo or any(p.order != vo for p in F):
        raise PolyError("polynomials use different variable orders")
    if any(p.is_constant for p in F):
        return GroebnerBasis((Poly.const(vo, 1),), mo)

    G: list = []  # (lead, monic dict); None marks a discarded element
    pairs: list = []  # heap of (lcm, i, j)
    for p in sorted(F, key=lambda p: max(p._t)):
        t = _normal_form(p._t, [g for g in G if g is not None], vo)
        if t:
            _update(G, pairs, _monic(t), vo)
    while pairs:
        L, i, j = heapq.heappop(pairs)
        if G[i] is None or G[j] is None:
            continue
        s = _spoly(G[i], G[j], vo)
        h = _normal_form(s, [g for g in G if g is not None], vo)
        if not h:
            continue
        if max(h) == 0:
            return GroebnerBasis((Poly.const(vo, 1),), mo)
        _update(G, pairs, _monic(h), vo)
    return GroebnerBasis(_interreduce([g for g in G if g is not None], vo), mo)


def _update(G: list, pairs: list, h: dict, order: VarOrder):
    # Gebauer-Moeller installation of new element h (first and second criteria)
    lh = max(h)
    k = len(G)
    live = [i for i, g in enumerate(G) if g is not None]
    cands = {i: _lcm(order, G[i][0], lh) for i in live}
    coprime = {i: _coprime(order, G[i][0], lh) for i in live}
    divides = order.divides
    C = list(live)
    D = []
    while C:
        i = C.pop(0)
        Li = cands[i]
        if coprime[i] or not any(divides(cands[j], Li) for j in C + D):
            D.append(i)
    new_pairs = [(cands[i], i, k) for i in D if not coprime[i]]
    # drop old pairs whose lcm is a proper multiple of lm(h) and of both new lcms
    survivors = []
    for L, i, j in pairs:
        if (
            divides(lh, L)
            and _lcm(order, G[i][0], lh) != L
            and _lcm(order, G[j][0], lh) != L
        ):
            continue
        survivors.append((L, i, j))
    pairs[:] = survivors
    heapq.heapify(pairs)
    for p in new_pairs:
        heapq.heappush(pairs, p)
    G.append((lh, h))


def _interreduce(G: list, order: VarOrder) -> tuple:
    divides = order.divides
    minimal = []
    for i, (lm, g) in enumerate(G):
        if any(j != i and divides(lj, lm) and (lj != lm or j < i) for j, (lj, _) in enumerate(G)):
            continue
        minimal.append((lm, g))
    out = []
    for i, (lm, g) in enumerate(minimal):
        others = [h for j, h in enumerate(minimal) if j != i]
        tail = {k: c for k, c in g.items() if k != lm}
        red = _normal_form(tail, others, order)
        red[lm] = 1
        out.append(Poly._raw(order, {k: _frac(Fraction(c)) for k, c in red.items()}).normalized())
    out.sort(key=lambda p: max(p._t))
    return tuple(out)


def reduce(p: Poly, G: GroebnerBasis | Iterable[Poly]) -> Poly:
    """Normal form of ``p`` modulo the basis ``G``."""
    return reduce_with_quotients(p, G)[0]


def reduce_with_quotients(p: Poly, G) -> tuple:
    """``(r, qs)`` with ``p == sum(q_i * g_i) + r`` and ``r`` fully reduced."""
    gens = list(G.gens if isinstance(G, GroebnerBasis) else G)
    order = p.order
    if any(g.order != order for g in gens):
        raise PolyError("polynomials use different variable orders")
    basis = []
    scale = []
    for g in gens:
        lm = max(g._t)
        lc = g._t[lm]
        basis.append((lm, _monic(g._t)))
        scale.append(Fraction(lc))
    qs = [dict() for _ in gens]
    r = _normal_form(p._t, basis, order, qs)
    rem = Poly._raw(order, r)
    quots = [
        Poly._raw(order, {k: _frac(Fraction(c) / s) for k, c in q.items() if c})
        for q, s in zip(qs, scale)
    ]
    return rem, quots


def s_polynomial(f: Poly, g: Poly) -> Poly:
    a = (max(f._t), _monic(f._t))
    b = (max(g._t), _monic(g._t))
    return Poly._raw(f.order, _spoly(a, b, f.order))


def is_groebner(G: Iterable[Poly]) -> bool:
    """Buchberger's criterion: every S-polynomial reduces to zero."""
    gens = list(G)
    for i in range(len(gens)):
        for j in range(i + 1, len(gens)):
            if not reduce(s_polynomial(gens[i], gens[j]), gens).is_zero:
                return False
    return True


def is_reduced(G: GroebnerBasis) -> bool:
    order = G.order.order
    leads = [max(g._t) for g in G.gens]
    for i, g in enumerate(G.gens):
        if not g.is_normalized():
            return False
        for k in g._t:
            for j, lm in enumerate(leads):
                if j != i and order.divides(lm, k):
                    return False
    return True


def elimination_split(G: GroebnerBasis) -> dict:
    """Bucket basis elements by main variable (every variable gets a bucket)."""
    order = G.order.order
    out = {name: [] for name in order.names}
    for g in G.gens:
        v = g.mvar()
        if v is not None:
            out[order.names[v]].append(g)
    return {k: frozenset(v) for k, v in out.items()}
