"""Real algebraic numbers, root isolation and exact signs at sample points.

A :class:`RealAlgebraic` is either an exact rational or a squarefree integer
polynomial together with an open rational interval holding exactly one of
its roots.  Signs at points with algebraic coordinates are decided exactly:
a zero test runs Euclid's algorithm over Q(alpha_1, ..., alpha_k), deciding
each leading coefficient by the same test one level down, and only nonzero
values are settled by interval refinement.
"""

from __future__ import annotations

from fractions import Fraction
from math import floor, ceil, gcd as igcd, isqrt
from typing import Mapping, Sequence

from . import kernels
from .poly import Poly, PolyError, _ustrip, uprem
from .elim import resultant


class NullifiedError(ArithmeticError):
    """The polynomial vanishes identically over the sample point."""

    def __init__(self, poly, point=None):
        self.poly = poly
        self.point = point
        super().__init__(f"{poly} is nullified at the sample point")


# --------------------------------------------------------------------------
# dense integer univariate helpers (coefficients lowest first)


def dup_strip(f):
    f = list(f)
    while f and f[-1] == 0:
        f.pop()
    return f


def dup_primitive(f):
    f = dup_strip(f)
    if not f:
        return f
    g = 0
    for c in f:
        g = igcd(g, c)
    if f[-1] < 0:
        g = -g
    return [c // g for c in f]


def dup_from_rationals(cs):
    den = 1
    for c in cs:
        if isinstance(c, Fraction):
            den = den * c.denominator // igcd(den, c.denominator)
    return dup_primitive([int(c * den) for c in cs])


def dup_diff(f):
    return [i * c for i, c in enumerate(f)][1:]


def _dup_int_exquo(f, g):
    # quotient with integer coefficients, or None when g does not divide f
    f = list(f)
    dg = len(g) - 1
    if len(f) - 1 < dg:
        return None if any(f) else []
    lc = g[-1]
    q = [0] * (len(f) - dg)
    for i in range(len(f) - 1 - dg, -1, -1):
        c, r = divmod(f[i + dg], lc)
        if r:
            return None
        q[i] = c
        if c:
            for j in range(dg + 1):
                f[i + j] -= c * g[j]
    if any(f[:dg]):
        return None
    return q


def _dup_interpolate(h, x):
    # balanced base-x digits of h
    out = []
    half = x // 2
    while h:
        r = h % x
        if r > half:
            r -= x
        out.append(r)
        h = (h - r) // x
    return out


def _dup_heu_gcd(f, g):
    """Heuristic gcd by evaluation at a large integer; None when inconclusive."""
    fn = max(abs(c) for c in f)
    gn = max(abs(c) for c in g)
    B = 2 * min(fn, gn) + 29
    x = max(min(B, 99 * isqrt(B)), 2 * min(fn // abs(f[-1]), gn // abs(g[-1])) + 2)
    for _ in range(6):
        ff = kernels.dup_eval_scaled(f, x, 1)
        gg = kernels.dup_eval_scaled(g, x, 1)
        if ff and gg:
            h = igcd(ff, gg)
            H = dup_primitive(_dup_interpolate(h, x))
            if H and _dup_int_exquo(f, H) is not None and _dup_int_exquo(g, H) is not None:
                return H
            for cof, a, b in ((ff // h, f, g), (gg // h, g, f)):
                C = _dup_interpolate(cof, x)
                if not C:
                    continue
                H = _dup_int_exquo(a, C)
                if H is not None:
                    H = dup_primitive(H)
                    if H and _dup_int_exquo(b, H) is not None:
                        return H
        x = 73794 * x * isqrt(isqrt(x)) // 27011
    return None


def dup_gcd(f, g):
    f = dup_primitive(f)
    g = dup_primitive(g)
    if not f:
        return g
    if not g:
        return f
    if len(f) == 1 or len(g) == 1:
        return [1]
    h = _dup_heu_gcd(f, g)
    if h is not None:
        return h
    if len(f) < len(g):
        f, g = g, f
    while g:
        r = dup_strip(kernels.dup_prem(f, g))
        f, g = g, dup_primitive(r)
        if len(g) == 1:
            return [1]
    return dup_primitive(f)


def dup_exquo(f, g):
    """Exact quotient of integer polynomials (result made primitive)."""
    q = _dup_int_exquo(f, g)
    if q is not None:
        return dup_primitive(q)
    f = [Fraction(c) for c in f]
    q = [Fraction(0)] * (len(f) - len(g) + 1)
    lc = g[-1]
    for i in range(len(f) - len(g), -1, -1):
        c = f[i + len(g) - 1] / lc
        q[i] = c
        for j, gc in enumerate(g):
            f[i + j] -= c * gc
    if any(f):
        raise PolyError("inexact univariate division")
    return dup_from_rationals(q)


def dup_sqf_part(f):
    f = dup_primitive(f)
    if len(f) <= 2:
        return f
    g = dup_gcd(f, dup_diff(f))
    if len(g) == 1:
        return f
    return dup_exquo(f, g)


def dup_sign_at(f, r) -> int:
    r = Fraction(r)
    v = kernels.dup_eval_scaled(f, r.numerator, r.denominator)
    return (v > 0) - (v < 0)


def dup_eval(f, r):
    r = Fraction(r)
    acc = Fraction(0)
    for c in reversed(f):
        acc = acc * r + c
    return acc


def dup_to_poly(f, order, v) -> Poly:
    return Poly.from_terms(
        order, {tuple(e if j == order.index(v) else 0 for j in range(len(order))): c
                for e, c in enumerate(f) if c}
    )


def _fmt_dup(f, name="t") -> str:
    from .poly import VarOrder

    return str(dup_to_poly(f, VarOrder([name]), name))


# --------------------------------------------------------------------------
# real algebraic numbers


class RealAlgebraic:
    """A real algebraic number (defining polynomial plus isolating interval)."""

    __slots__ = ("poly", "lo", "hi", "value", "_slo", "rel", "tower", "_red")

    def __init__(self, poly, lo, hi, value=None, _slo=None, rel=None, tower=None, _red=None):
        self.poly = tuple(poly)
        self.lo = Fraction(lo)
        self.hi = Fraction(hi)
        self.value = value
        self._slo = _slo  # sign of the polynomial at lo, filled lazily
        # optional lifting polynomial over lower algebraic coordinates
        # ``tower`` ({index: RealAlgebraic}) having this number as a root
        self.rel = rel
        self.tower = tower
        self._red = _red  # cached squarefree relation, see _relation

    @classmethod
    def rational(cls, q) -> "RealAlgebraic":
        q = Fraction(q)
        return cls((-q.numerator, q.denominator), q, q, q)

    @property
    def is_rational(self) -> bool:
        return self.value is not None

    @property
    def degree(self) -> int:
        return 1 if self.value is not None else len(self.poly) - 1

    def width(self) -> Fraction:
        return self.hi - self.lo

    def bisect(self) -> "RealAlgebraic":
        if self.value is not None:
            return self
        mid = (self.lo + self.hi) / 2
        sm = dup_sign_at(self.poly, mid)
        if sm == 0:
            return RealAlgebraic.rational(mid)
        slo = self._slo
        if slo is None:
            slo = self._slo = dup_sign_at(self.poly, self.lo)
        if sm == slo:
            return RealAlgebraic(self.poly, mid, self.hi, None, sm, self.rel, self.tower, self._red)
        return RealAlgebraic(self.poly, self.lo, mid, None, slo, self.rel, self.tower, self._red)

    def refine(self, width) -> "RealAlgebraic":
        a = self
        width = Fraction(width)
        while a.value is None and a.hi - a.lo > width:
            a = a.bisect()
        return a

    def approx(self) -> float:
        if self.value is not None:
            return float(self.value)
        return float(self.refine(Fraction(1, 1 << 40)).lo)

    def contains(self, r) -> bool:
        r = Fraction(r)
        if self.value is not None:
            return r == self.value
        return self.lo < r < self.hi and dup_sign_at(self.poly, r) == 0

    def __neg__(self):
        if self.value is not None:
            return RealAlgebraic.rational(-self.value)
        n = len(self.poly) - 1
        p = [c if (i % 2 == n % 2) else -c for i, c in enumerate(self.poly)]
        return RealAlgebraic(dup_primitive(p), -self.hi, -self.lo)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = RealAlgebraic.rational(other)
        if not isinstance(other, RealAlgebraic):
            return NotImplemented
        return compare(self, other) == 0

    def __lt__(self, other):
        if isinstance(other, (int, Fraction)):
            other = RealAlgebraic.rational(other)
        return compare(self, other) < 0

    def __hash__(self):
        # equal numbers may carry different polynomials; hash only rationals finely
        return hash(self.value) if self.value is not None else hash("alg")

    def __repr__(self):
        if self.value is not None:
            return f"RealAlgebraic({self.value})"
        return f"RealAlgebraic({_fmt_dup(self.poly)}, ({self.lo}, {self.hi}))"

    def to_json(self, var="t") -> dict:
        if self.value is not None:
            return {"rational": str(self.value)}
        return {"defpoly": _fmt_dup(self.poly, var), "lo": str(self.lo), "hi": str(self.hi),
                "approx": self.approx()}


_RATIONAL_DEN_CAP = 1 << 16


def _try_rational(a: RealAlgebraic) -> RealAlgebraic:
    """Detect a rational root hiding behind an interval."""
    f = a.poly
    if len(f) == 2:
        return RealAlgebraic.rational(Fraction(-f[0], f[1]))
    # denominators of rational roots divide lc; only small ones are looked for
    L = min(abs(f[-1]), _RATIONAL_DEN_CAP)
    # at most one fraction with denominator <= L fits in a gap below 1/(2 L^2)
    a = a.refine(Fraction(1, 2 * L * L))
    if a.value is not None:
        return a
    cand = ((a.lo + a.hi) / 2).limit_denominator(L)
    if a.lo < cand < a.hi and dup_sign_at(f, cand) == 0:
        return RealAlgebraic.rational(cand)
    return a


def compare(a: RealAlgebraic, b: RealAlgebraic) -> int:
    """Exact three-way comparison."""
    if a.value is not None and b.value is not None:
        return (a.value > b.value) - (a.value < b.value)
    if a.value is not None:
        return -compare(b, a)
    if b.value is not None:
        r = b.value
        if a.lo < r < a.hi and dup_sign_at(a.poly, r) == 0:
            return 0
        while a.value is None and a.lo <= r <= a.hi:
            a = a.bisect()
        if a.value is not None:
            return (a.value > r) - (a.value < r)
        return 1 if a.lo > r else -1
    if a.hi <= b.lo:
        return -1
    if b.hi <= a.lo:
        return 1
    g = dup_gcd(a.poly, b.poly) if a.poly != b.poly else list(a.poly)
    if len(g) > 1 and dup_sign_at(g, a.lo) * dup_sign_at(g, a.hi) < 0:
        # a is a root of b's polynomial: equal iff a sits inside b's interval
        while True:
            if b.lo < a.lo and a.hi < b.hi:
                return 0
            if a.hi <= b.lo:
                return -1
            if b.hi <= a.lo:
                return 1
            a = a.bisect()
            if a.value is not None:
                return compare(a, b)
    while True:
        a = a.bisect()
        b = b.bisect()
        if a.value is not None or b.value is not None:
            return compare(a, b)
        if a.hi <= b.lo:
            return -1
        if b.hi <= a.lo:
            return 1


def separate(a: RealAlgebraic, b: RealAlgebraic):
    """Refine two distinct numbers ``a < b`` until ``a.hi < b.lo``."""
    while a.hi >= b.lo:
        if a.value is None and (b.value is not None or a.width() >= b.width()):
            a = a.bisect()
        elif b.value is None:
            b = b.bisect()
        else:
            break
    return a, b


def simplest_between(lo: Fraction, hi: Fraction) -> Fraction:
    """A short dyadic rational strictly inside ``(lo, hi)``."""
    if lo >= hi:
        raise ValueError("empty gap")
    k = 0
    while True:
        scale = 1 << k
        cand = Fraction(floor(lo * scale) + 1, scale)
        if cand < hi:
            # nudge toward the middle among equally short candidates
            mid = (lo + hi) / 2
            best = Fraction(round(mid * scale), scale)
            return best if lo < best < hi else cand
        k += 1


# --------------------------------------------------------------------------
# isolation


def _cauchy_exp(f) -> int:
    lc = abs(f[-1])
    m = max(abs(c) for c in f[:-1])
    bound = 1 + Fraction(m, lc)
    return max(1, ceil(bound).bit_length())


def _positive_roots(f):
    # f squarefree, f(0) != 0; returns sorted RealAlgebraic list of roots > 0.
    # Roots in (0, 1) come straight from f, roots above 1 from the reversed
    # polynomial, so bisection depth tracks root separation rather than size.
    out = []
    for c, j, exact in kernels.descartes_01(f):
        lo = Fraction(c, 1 << j)
        if exact:
            if c:
                out.append(RealAlgebraic.rational(lo))
        else:
            out.append(RealAlgebraic(f, lo, Fraction(c + 1, 1 << j)))
    if sum(f) == 0:
        out.append(RealAlgebraic.rational(1))
    top = None
    for c, j, exact in kernels.descartes_01(f[::-1]):
        if exact:
            out.append(RealAlgebraic.rational(Fraction(1 << j, c)))
            continue
        if c == 0:
            if top is None:
                top = Fraction(1 << _cauchy_exp(f))
            hi = top
        else:
            hi = Fraction(1 << j, c)
        out.append(RealAlgebraic(f, Fraction(1 << j, c + 1), hi))
    out.sort(key=lambda a: a.lo)
    return out


def isolate_dup(f) -> list:
    """Distinct real roots of an integer polynomial, increasing."""
    f = dup_primitive(f)
    if len(f) <= 1:
        if not f:
            raise ValueError("zero polynomial has no isolated roots")
        return []
    f = dup_sqf_part(f)
    roots = []
    zero = f[0] == 0
    if zero:
        f = f[1:]
    if len(f) > 1:
        neg = [c if i % 2 == 0 else -c for i, c in enumerate(f)]
        neg = dup_primitive(neg)
        roots = [-a for a in reversed(_positive_roots(neg))]
        if zero:
            roots.append(RealAlgebraic.rational(0))
        roots.extend(_positive_roots(f))
    elif zero:
        roots.append(RealAlgebraic.rational(0))
    roots = [_try_rational(a) if a.value is None else a for a in roots]
    return _shrink_defpolys(roots)


def _shrink_defpolys(roots):
    # drop linear factors of detected rational roots from the others' polynomials
    rats = [a.value for a in roots if a.value is not None]
    if not rats or all(a.value is not None for a in roots):
        return roots
    out = []
    for a in roots:
        if a.value is None:
            f = list(a.poly)
            for r in rats:
                lin = [-r.numerator, r.denominator]
                if dup_sign_at(f, r) == 0:
                    f = dup_exquo(f, lin)
            a = RealAlgebraic(f, a.lo, a.hi)
        out.append(a)
    return out


def isolate_real_roots(p: Poly) -> list:
    """Real roots of a univariate polynomial, strictly increasing."""
    if p.is_zero:
        raise ValueError("cannot isolate the roots of the zero polynomial")
    if p.is_constant:
        return []
    vs = p.variables()
    if len(vs) != 1:
        raise PolyError(f"{p} is not univariate")
    return isolate_dup(dup_from_rationals(p.univariate_coeffs(vs[0])))


def refine(a: RealAlgebraic, width) -> RealAlgebraic:
    return a.refine(width)


# --------------------------------------------------------------------------
# sample points


class SamplePoint(tuple):
    """Coordinates (one RealAlgebraic per variable, lowest variable first)."""

    def __new__(cls, coords=()):
        return super().__new__(
            cls, (c if isinstance(c, RealAlgebraic) else RealAlgebraic.rational(c) for c in coords)
        )

    def extend(self, coord) -> "SamplePoint":
        return SamplePoint(tuple(self) + (coord,))

    def rational_bindings(self, order) -> dict:
        return {order.names[i]: c.value for i, c in enumerate(self) if c.value is not None}

    def to_json(self, order) -> list:
        return [c.to_json(order.names[i]) for i, c in enumerate(self)]


def _as_point(s) -> SamplePoint:
    return s if isinstance(s, SamplePoint) else SamplePoint(s)


# interval arithmetic -------------------------------------------------------


def _ipow(lo, hi, e):
    if e == 1:
        return lo, hi
    a, b = lo**e, hi**e
    if e % 2 == 0:
        if lo <= 0 <= hi:
            return Fraction(0), max(a, b)
        return min(a, b), max(a, b)
    return a, b


def _interval_eval(p: Poly, box: Mapping[int, tuple]):
    """Enclosure of ``p`` over a box ``{var index: (lo, hi)}``."""
    powers = {}
    total_lo = Fraction(0)
    total_hi = Fraction(0)
    n = len(p.order)
    for k, c in p._t.items():
        exps = p.order.unpack(k)
        lo = hi = Fraction(c)
        for i in range(n):
            e = exps[i]
            if not e:
                continue
            key = (i, e)
            iv = powers.get(key)
            if iv is None:
                iv = powers[key] = _ipow(box[i][0], box[i][1], e)
            a, b = iv
            prods = (lo * a, lo * b, hi * a, hi * b)
            lo, hi = min(prods), max(prods)
        total_lo += lo
        total_hi += hi
    return total_lo, total_hi


def _refined(pt: dict) -> dict:
    return {i: a.bisect() for i, a in pt.items()}


def _box(pt):
    return {i: (a.lo, a.hi) for i, a in pt.items()}


# tower arithmetic over Q(alpha) -------------------------------------------


def _closure(pt: Mapping[int, RealAlgebraic]) -> dict:
    """Add the coordinates that the relations of ``pt`` refer to."""
    out = dict(pt)
    todo = list(pt.values())
    while todo:
        a = todo.pop()
        for i, b in (a.tower or {}).items():
            if i not in out:
                out[i] = b
                todo.append(b)
    return out


def _relation(a: RealAlgebraic, order, j: int) -> list:
    """Squarefree polynomial in coordinate ``j`` over the lower coordinates
    vanishing at ``a``, with leading coefficient nonzero there."""
    if a._red is not None:
        return a._red
    R = None
    if a.value is None and a.rel is not None and a.tower and 0 < a.rel.degree(j) < a.degree:
        lower = _closure(a.tower)
        cs = _trim([_reduce(c, lower) for c in a.rel.coeffs(j)], lower)
        if len(cs) > 2:
            D = tower_gcd(cs, [c * i for i, c in enumerate(cs)][1:], lower)
            if len(D) > 1:
                cs = _trim(tower_quo(cs, D, lower), lower)
        if 1 < len(cs) <= a.degree:
            R = _scalar_normalize(cs)
    if R is None:
        R = [Poly.const(order, c) for c in a.poly]
    a._red = R
    return R


def _reduce(c: Poly, pt: Mapping[int, RealAlgebraic]) -> Poly:
    """Reduce degrees in each algebraic coordinate below its relation degree
    (values at the point change by a nonzero factor at most)."""
    for i in sorted(pt, reverse=True):
        a = pt[i]
        if c.degree(i) <= 0:
            continue
        if a._red is not None or a.rel is not None:
            rel = _relation(a, c.order, i)
            if any(not x.is_constant for x in rel):
                if c.degree(i) >= len(rel) - 1:
                    cs = uprem(c.coeffs(i), rel)
                    c = Poly.from_coeffs(c.order, i, _ustrip(cs)) if cs else c * 0
                continue
        q = a.poly
        D = len(q) - 1
        if c.degree(i) < D:
            continue
        cs = c.coeffs(i)
        lq = q[-1]
        for e in range(len(cs) - 1, D - 1, -1):
            top = cs[e]
            if top.is_zero:
                continue
            # x^e = x^(e-D) * x^D and x^D = -(q_0 + ... + q_{D-1} x^{D-1}) / lq
            for j in range(D):
                if q[j]:
                    cs[e - D + j] = cs[e - D + j] - top * Fraction(q[j], lq)
            cs[e] = top * 0
        c = Poly.from_coeffs(c.order, i, _ustrip(cs))
    return c


def _scalar_normalize(cs: list) -> list:
    # divide a coefficient list by a common rational so it stays small
    terms = [a for c in cs for a in c._t.values()]
    if not terms:
        return cs
    probe = Poly._raw(cs[0].order, dict(enumerate(terms)))
    k = probe.int_content()
    if k == 1:
        return cs
    return [c / k for c in cs]


def is_zero_at(c: Poly, pt: Mapping[int, RealAlgebraic]) -> bool:
    """Exact test ``c(alpha) == 0`` for algebraic (non-rational) coordinates ``pt``."""
    if c.is_zero:
        return True
    if c.is_constant:
        return False
    pt = {i: a for i, a in pt.items() if c.degree(i) > 0}
    lo, hi = _interval_eval(c, _box(pt))
    if lo > 0 or hi < 0:
        return False
    pt = _closure(pt)
    c = _reduce(c, pt)
    if c.is_constant:
        return c.is_zero
    j = c.mvar()
    lower = {i: a for i, a in pt.items() if i < j}
    G = tower_gcd(c.coeffs(j), _relation(pt[j], c.order, j), lower)
    if len(G) <= 1:
        return False
    a = pt[j]
    s_lo = _sign_nonzero(_eval_list(G, a.lo), lower)
    s_hi = _sign_nonzero(_eval_list(G, a.hi), lower)
    return s_lo * s_hi < 0


def _defpoly_coeffs(a: RealAlgebraic, order, j) -> list:
    return [Poly.const(order, c) for c in a.poly]


def _eval_list(cs: list, r) -> Poly:
    acc = cs[-1] * 1
    for c in reversed(cs[:-1]):
        acc = acc * r + c
    return acc


def _trim(cs: list, pt) -> list:
    cs = _ustrip(list(cs))
    while cs and is_zero_at(cs[-1], pt):
        cs.pop()
    return cs


def tower_gcd(A: list, B: list, pt) -> list:
    """A gcd in Q(alpha)[x] of coefficient lists (up to a unit)."""
    A = _trim([_reduce(c, pt) for c in A], pt)
    B = _trim([_reduce(c, pt) for c in B], pt)
    if len(A) < len(B):
        A, B = B, A
    while B:
        if len(B) == 1:
            return B
        R = [_reduce(c, pt) for c in uprem(A, B)]
        R = _trim(R, pt)
        A, B = B, _scalar_normalize(R) if R else R
    return A


def tower_quo(A: list, H: list, pt) -> list:
    """Pseudo-quotient ``lc(H)^k * A / H`` in Q(alpha)[x] (a unit multiple of A/H)."""
    lc = H[-1]
    dh = len(H) - 1
    r = list(A)
    q = [r[0] * 0] * (len(A) - dh)
    while len(r) - 1 >= dh:
        top = r[-1]
        s = len(r) - 1 - dh
        q = [c * lc for c in q]
        q[s] = q[s] + top
        r = [c * lc for c in r]
        for i, hc in enumerate(H):
            r[i + s] = r[i + s] - top * hc
        r.pop()
        r = _trim([_reduce(c, pt) for c in r], pt)
        if not r:
            break
    return _ustrip([_reduce(c, pt) for c in q])


def _sign_nonzero(c: Poly, pt) -> int:
    # c(alpha) known to be nonzero: refine until the enclosure excludes 0
    pt = {i: a for i, a in pt.items() if c.degree(i) > 0}
    if not pt:
        v = c.constant_value()
        return (v > 0) - (v < 0)
    while True:
        lo, hi = _interval_eval(c, _box(pt))
        if lo > 0:
            return 1
        if hi < 0:
            return -1
        pt = _refined(pt)
        for i, a in pt.items():
            if a.value is not None:
                c = c.eval_partial({c.order.names[i]: a.value})
        pt = {i: a for i, a in pt.items() if a.value is None and c.degree(i) > 0}
        if not pt:
            v = c.constant_value()
            return (v > 0) - (v < 0)


def _split_point(p: Poly, s: SamplePoint):
    # substitute rational coordinates; keep the algebraic ones that matter
    bind = {}
    alg = {}
    for i, a in enumerate(s):
        if p.degree(i) <= 0:
            continue
        if a.value is not None:
            bind[p.order.names[i]] = a.value
        else:
            alg[i] = a
    q = p.eval_partial(bind) if bind else p
    alg = {i: a for i, a in alg.items() if q.degree(i) > 0}
    return q, alg


def sign_at(p: Poly, s) -> int:
    """Exact sign of ``p`` at the sample point ``s``."""
    s = _as_point(s)
    for i in p.variables():
        if i >= len(s):
            raise PolyError(f"sample point does not bind {p.order.names[i]}")
    q, alg = _split_point(p, s)
    if not alg:
        v = q.constant_value()
        return (v > 0) - (v < 0)
    lo, hi = _interval_eval(q, _box(alg))
    if lo > 0:
        return 1
    if hi < 0:
        return -1
    if is_zero_at(q, alg):
        return 0
    return _sign_nonzero(q, alg)


# --------------------------------------------------------------------------
# roots over a sample point


def _norm(P: Poly, alg: dict, v: int) -> Poly:
    """A nonzero rational polynomial in ``v`` vanishing at every root of P(alpha, v)."""
    order = P.order
    tower = _closure(alg)
    for j in sorted(tower, reverse=True):
        if P.degree(j) <= 0:
            continue
        lower = {i: a for i, a in tower.items() if i < j}
        q = _relation(tower[j], order, j)
        # strip conjugates theta of alpha_j over which P(alpha_lower, theta, v) == 0
        H = q
        for c in P.coeffs(v):
            if c.is_zero:
                continue
            H = tower_gcd(H, c.coeffs(j), lower)
            if len(H) <= 1:
                break
        if len(H) > 1:
            q = tower_quo(q, H, lower)
        Q = Poly.from_coeffs(order, j, q)
        P = resultant(Q, P, j)
    return P


def roots_at(p: Poly, s, v) -> list:
    """Real roots in ``v`` of ``p`` specialised at ``s`` (coordinates below ``v``)."""
    s = _as_point(s)
    k = p.order.index(v)
    for i in p.variables():
        if i > k:
            raise PolyError(f"{p} involves variables above {p.order.names[k]}")
        if i < k and i >= len(s):
            raise PolyError(f"sample point does not bind {p.order.names[i]}")
    q, alg = _split_point(p, SamplePoint(tuple(s)[:k]))
    cs = q.coeffs(k)
    if all(is_zero_at(c, alg) if alg else c.is_zero for c in cs):
        raise NullifiedError(p, s)
    if not alg:
        spec = Poly.from_coeffs(q.order, k, [Poly.const(q.order, c.constant_value()) for c in cs])
        if spec.is_constant:
            return []
        return isolate_dup(dup_from_rationals(spec.univariate_coeffs(k)))
    N = _norm(q, alg, k)
    if N.is_constant:
        return []
    cands = isolate_dup(dup_from_rationals(N.univariate_coeffs(k)))
    shared = None
    for b in cands:
        if b.value is None:
            b.rel, b.tower = q, dict(alg)
            if shared is None:
                shared = _relation(b, q.order, k)
            b._red = shared
    return [b for b in cands if _is_root(q, alg, k, b)]


def _is_root(q: Poly, alg: dict, k: int, b: RealAlgebraic) -> bool:
    if b.value is not None:
        r = q.eval_partial({q.order.names[k]: b.value})
        return is_zero_at(r, {i: a for i, a in alg.items() if r.degree(i) > 0})
    pt = dict(alg)
    pt[k] = b
    # a few cheap refinements usually separate non-roots from zero
    for _ in range(4):
        lo, hi = _interval_eval(q, _box(pt))
        if lo > 0 or hi < 0:
            return False
        pt = _refined(pt)
        if any(a.value is not None for a in pt.values()):
            break
    return is_zero_at(q, {i: a for i, a in {**alg, k: b}.items()})


def nullified_at(p: Poly, s, v) -> bool:
    """True when every coefficient of ``p`` in ``v`` vanishes at ``s``."""
    s = _as_point(s)
    k = p.order.index(v)
    q, alg = _split_point(p, SamplePoint(tuple(s)[:k]))
    for c in q.coeffs(k):
        if c.is_zero:
            continue
        if not alg:
            return False
        if not is_zero_at(c, {i: a for i, a in alg.items() if c.degree(i) > 0}):
            return False
    return True
