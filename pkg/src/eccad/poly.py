"""Exact multivariate polynomials over the rationals.

A polynomial is a map from exponent vectors to nonzero rational coefficients,
tied to a :class:`VarOrder`.  Exponent vectors are dense (one slot per
variable) but stored packed into a single Python integer, with the highest
variable in the most significant field.  With that layout, comparing packed
exponents as integers *is* the lexicographic order with the highest variable
first, and multiplying monomials is integer addition.

Coefficients are ``int`` whenever possible and ``fractions.Fraction``
otherwise; nothing here ever touches floating point.
"""

from __future__ import annotations

import heapq
import re
from fractions import Fraction
from functools import lru_cache
from math import gcd as igcd
from math import isqrt
from math import lcm as ilcm
from typing import Iterable, Mapping

from . import kernels

FIELD = 24
_FMASK = (1 << FIELD) - 1
MAX_DEGREE = (1 << (FIELD - 1)) - 1


class PolyError(ValueError):
    """Structural misuse: mismatched orders, bad variables, inexact division."""


class ParseError(ValueError):
    def __init__(self, message: str, pos: int, text: str = ""):
        self.pos = pos
        self.text = text
        super().__init__(f"{message} at position {pos}")


# --------------------------------------------------------------------------
# variable orders


class VarOrder:
    """Ordered variables; position 0 is the lowest variable."""

    __slots__ = ("names", "_index", "_guard")

    def __init__(self, names: Iterable[str]):
        names = tuple(names)
        if not names:
            raise PolyError("a variable order needs at least one variable")
        if len(set(names)) != len(names):
            raise PolyError(f"repeated variable in order {names}")
        for nm in names:
            if not re.fullmatch(r"[A-Za-z_][A-Za-z_0-9]*", nm):
                raise PolyError(f"bad variable name {nm!r}")
        self.names = names
        self._index = {nm: i for i, nm in enumerate(names)}
        self._guard = sum(1 << (FIELD * i + FIELD - 1) for i in range(len(names)))

    @classmethod
    def parse(cls, text: str) -> "VarOrder":
        """Parse ``"z > y > x > w"`` (highest first) or a comma list (lowest first)."""
        text = text.strip()
        if ">" in text:
            return cls(reversed([t.strip() for t in text.split(">")]))
        if "<" in text:
            return cls(t.strip() for t in text.split("<"))
        return cls(t.strip() for t in text.replace(",", " ").split())

    def __len__(self):
        return len(self.names)

    def __iter__(self):
        return iter(self.names)

    def __eq__(self, other):
        return isinstance(other, VarOrder) and self.names == other.names

    def __hash__(self):
        return hash(self.names)

    def __repr__(self):
        return f"VarOrder({' > '.join(reversed(self.names))})"

    def index(self, v) -> int:
        if isinstance(v, int):
            if not 0 <= v < len(self.names):
                raise PolyError(f"variable index {v} out of range")
            return v
        try:
            return self._index[v]
        except KeyError:
            raise PolyError(f"unknown variable {v!r}") from None

    def name(self, i: int) -> str:
        return self.names[i]

    def pack(self, exps) -> int:
        key = 0
        for i, e in enumerate(exps):
            if e < 0 or e > MAX_DEGREE:
                raise PolyError(f"exponent {e} out of range")
            key |= e << (FIELD * i)
        return key

    def unpack(self, key: int) -> tuple:
        return tuple((key >> (FIELD * i)) & _FMASK for i in range(len(self.names)))

    def divides(self, a: int, b: int) -> bool:
        """True when monomial ``a`` divides monomial ``b`` (packed)."""
        g = self._guard
        return ((b | g) - a) & g == g


def _field(key: int, i: int) -> int:
    return (key >> (FIELD * i)) & _FMASK


def _qdiv(a, b):
    if type(a) is int and type(b) is int and a % b == 0:
        return a // b
    r = Fraction(a) / b
    return r.numerator if r.denominator == 1 else r


def _clean(c):
    if type(c) is Fraction and c.denominator == 1:
        return c.numerator
    return c


# --------------------------------------------------------------------------
# polynomials


class Poly:
    """Immutable multivariate polynomial with rational coefficients."""

    __slots__ = ("order", "_t", "_hash")

    def __init__(self, order: VarOrder, packed: Mapping[int, object] | None = None):
        self.order = order
        self._t = dict(packed) if packed else {}
        self._hash = None

    # -- construction --------------------------------------------------

    @classmethod
    def _raw(cls, order, t):
        p = cls.__new__(cls)
        p.order = order
        p._t = t
        p._hash = None
        return p

    @classmethod
    def from_terms(cls, order: VarOrder, terms: Mapping[tuple, object]) -> "Poly":
        t = {}
        for exps, c in terms.items():
            if len(exps) != len(order):
                raise PolyError(f"exponent vector {exps} has wrong length")
            c = _clean(c)
            if c:
                k = order.pack(exps)
                t[k] = _clean(t.get(k, 0) + c)
                if not t[k]:
                    del t[k]
        return cls._raw(order, t)

    @classmethod
    def const(cls, order: VarOrder, c) -> "Poly":
        c = _clean(Fraction(c) if not isinstance(c, int) else c)
        return cls._raw(order, {0: c} if c else {})

    @classmethod
    def var(cls, order: VarOrder, v, power: int = 1) -> "Poly":
        i = order.index(v)
        return cls._raw(order, {power << (FIELD * i): 1})

    @classmethod
    def parse(cls, text: str, order: VarOrder) -> "Poly":
        return parse_poly(text, order)

    # -- views ---------------------------------------------------------

    @property
    def terms(self) -> dict:
        """Exponent-vector view ``{(e_1, ..., e_n): coeff}``."""
        up = self.order.unpack
        return {up(k): c for k, c in self._t.items()}

    def items_desc(self):
        """Packed terms in lex-descending order."""
        return sorted(self._t.items(), reverse=True)

    def __len__(self):
        return len(self._t)

    def __bool__(self):
        return bool(self._t)

    @property
    def is_zero(self) -> bool:
        return not self._t

    @property
    def is_constant(self) -> bool:
        return not self._t or (len(self._t) == 1 and 0 in self._t)

    def constant_value(self):
        if not self.is_constant:
            raise PolyError(f"{self} is not constant")
        return self._t.get(0, 0)

    def degree(self, v) -> int:
        """Degree in ``v``; -1 for the zero polynomial."""
        if not self._t:
            return -1
        i = self.order.index(v)
        sh = FIELD * i
        return max((k >> sh) & _FMASK for k in self._t)

    def degrees(self) -> tuple:
        n = len(self.order)
        out = [0] * n
        for k in self._t:
            for i in range(n):
                e = (k >> (FIELD * i)) & _FMASK
                if e > out[i]:
                    out[i] = e
        return tuple(out)

    def total_degree(self) -> int:
        if not self._t:
            return -1
        return max(sum(self.order.unpack(k)) for k in self._t)

    def max_degree(self) -> int:
        """Largest degree in any single variable."""
        return max(self.degrees(), default=0)

    def mvar(self) -> int | None:
        """Index of the main (highest present) variable, ``None`` for constants."""
        if self.is_constant:
            return None
        top = max(self._t)
        return (top.bit_length() - 1) // FIELD

    def mvar_name(self) -> str | None:
        i = self.mvar()
        return None if i is None else self.order.names[i]

    def variables(self) -> tuple:
        return tuple(i for i, d in enumerate(self.degrees()) if d > 0)

    def leading(self):
        """Lex-leading ``(packed exponent, coefficient)``."""
        k = max(self._t)
        return k, self._t[k]

    def lc_lex(self):
        return self._t[max(self._t)] if self._t else 0

    # -- arithmetic ----------------------------------------------------

    def _check(self, other):
        if self.order != other.order:
            raise PolyError("polynomials use different variable orders")

    def _coerce(self, other):
        if isinstance(other, Poly):
            self._check(other)
            return other
        if isinstance(other, (int, Fraction)):
            return Poly.const(self.order, other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        t = dict(self._t)
        for k, c in other._t.items():
            v = t.get(k, 0) + c
            if v:
                t[k] = _clean(v)
            else:
                t.pop(k, None)
        return Poly._raw(self.order, t)

    __radd__ = __add__

    def __neg__(self):
        return Poly._raw(self.order, {k: -c for k, c in self._t.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if not other:
                return Poly._raw(self.order, {})
            return Poly._raw(self.order, {k: _clean(c * other) for k, c in self._t.items()})
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if not self._t or not other._t:
            return Poly._raw(self.order, {})
        t = kernels.mul_terms(self._t, other._t)
        return Poly._raw(self.order, {k: _clean(c) for k, c in t.items()})

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            raise PolyError("negative power")
        result = Poly.const(self.order, 1)
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def __truediv__(self, other):
        if isinstance(other, Poly):
            self._check(other)
            return self.exquo(other)
        if not other:
            raise ZeroDivisionError("polynomial division by zero")
        return Poly._raw(self.order, {k: _qdiv(c, other) for k, c in self._t.items()})

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.order == other.order and self._t == other._t
        if isinstance(other, (int, Fraction)):
            return self.is_constant and self._t.get(0, 0) == other
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.order, frozenset(self._t.items())))
        return self._hash

    def shift(self, v, k: int) -> "Poly":
        """Multiply by ``v**k``."""
        s = k << (FIELD * self.order.index(v))
        return Poly._raw(self.order, {e + s: c for e, c in self._t.items()})

    def exquo(self, q: "Poly") -> "Poly":
        """Exact quotient ``self / q``; raises :class:`PolyError` if inexact."""
        if not q._t:
            raise ZeroDivisionError("polynomial division by zero")
        if not self._t:
            return self
        if q.is_constant:
            return self / q._t[0]
        qitems = q.items_desc()
        lq, lc = qitems[0]
        rest = qitems[1:]
        divides = self.order.divides
        rem = dict(self._t)
        heap = [-k for k in rem]
        heapq.heapify(heap)
        out = {}
        while rem:
            k = -heapq.heappop(heap)
            c = rem.get(k)
            if c is None:
                continue
            if not divides(lq, k):
                raise PolyError(f"{q} does not divide {self}")
            m = k - lq
            mc = _qdiv(c, lc)
            out[m] = mc
            del rem[k]
            for qk, qc in rest:
                kk = qk + m
                old = rem.get(kk)
                v = (old or 0) - mc * qc
                if v:
                    rem[kk] = _clean(v)
                    if old is None:
                        heapq.heappush(heap, -kk)
                elif old is not None:
                    del rem[kk]
        return Poly._raw(self.order, out)

    def divides(self, other: "Poly") -> bool:
        try:
            other.exquo(self)
        except PolyError:
            return False
        return True

    # -- calculus and substitution -------------------------------------

    def diff(self, v) -> "Poly":
        i = self.order.index(v)
        sh = FIELD * i
        one = 1 << sh
        t = {}
        for k, c in self._t.items():
            e = (k >> sh) & _FMASK
            if e:
                t[k - one] = c * e
        return Poly._raw(self.order, t)

    def eval_partial(self, bind: Mapping) -> "Poly":
        """Substitute rationals for some variables; the result keeps the order."""
        if not bind:
            return self
        slots = []
        for v, val in bind.items():
            i = self.order.index(v)
            slots.append((FIELD * i, Fraction(val)))
        t = {}
        for k, c in self._t.items():
            for sh, val in slots:
                e = (k >> sh) & _FMASK
                if e:
                    c = c * val**e
                    k -= e << sh
                    if not c:
                        break
            if c:
                v = t.get(k, 0) + c
                if v:
                    t[k] = _clean(v)
                else:
                    t.pop(k, None)
        return Poly._raw(self.order, t)

    def __call__(self, **bind):
        return self.eval_partial(bind)

    # -- univariate views ----------------------------------------------

    def coeffs(self, v) -> list:
        """Coefficients w.r.t. ``v`` as a list (index = power), each free of ``v``."""
        i = self.order.index(v)
        sh = FIELD * i
        mask = _FMASK << sh
        buckets: dict = {}
        for k, c in self._t.items():
            e = (k & mask) >> sh
            buckets.setdefault(e, {})[k & ~mask] = c
        if not buckets:
            return []
        out = [Poly._raw(self.order, {}) for _ in range(max(buckets) + 1)]
        for e, t in buckets.items():
            out[e] = Poly._raw(self.order, t)
        return out

    @classmethod
    def from_coeffs(cls, order: VarOrder, v, cs) -> "Poly":
        sh = FIELD * order.index(v)
        t = {}
        for e, c in enumerate(cs):
            for k, a in c._t.items():
                t[k + (e << sh)] = a
        return cls._raw(order, t)

    def lc(self, v) -> "Poly":
        cs = self.coeffs(v)
        return cs[-1] if cs else self

    def univariate_coeffs(self, v) -> list:
        """Rational coefficients (lowest first) of a polynomial in ``v`` alone."""
        i = self.order.index(v)
        for k in self._t:
            if k & ~(_FMASK << (FIELD * i)):
                raise PolyError(f"{self} is not univariate in {self.order.names[i]}")
        cs = [0] * (self.degree(i) + 1)
        for k, c in self._t.items():
            cs[_field(k, i)] = c
        return cs

    # -- normalisation -------------------------------------------------

    def int_content(self):
        """Rational ``c > 0`` such that ``self / c`` has coprime integer coefficients."""
        if not self._t:
            return 0
        den = 1
        num = 0
        for c in self._t.values():
            if type(c) is Fraction:
                den = ilcm(den, c.denominator)
        for c in self._t.values():
            num = igcd(num, int(c * den))
        return Fraction(num, den)

    def normalized(self) -> "Poly":
        """Integer-primitive with positive lex-leading coefficient; constants -> 1."""
        if not self._t:
            return self
        if self.is_constant:
            return Poly._raw(self.order, {0: 1})
        c = self.int_content()
        if self._t[max(self._t)] < 0:
            c = -c
        if c == 1:
            return self
        if c.denominator == 1:
            n = c.numerator
            return Poly._raw(self.order, {k: int(a) // n for k, a in self._t.items()})
        return Poly._raw(self.order, {k: _clean(a / c) for k, a in self._t.items()})

    def is_normalized(self) -> bool:
        return self.normalized() == self and all(type(c) is int for c in self._t.values())

    def sort_key(self):
        return (self.mvar() if self._t else -1, tuple(self.items_desc()))

    # -- text ----------------------------------------------------------

    def __str__(self):
        return format_poly(self)

    def __repr__(self):
        return f"Poly({format_poly(self)!r})"


def _fmt_coeff(c) -> str:
    return str(c)


def format_poly(p: Poly) -> str:
    """Canonical text: lex-descending terms, variables lowest first in a monomial."""
    if not p._t:
        return "0"
    names = p.order.names
    parts = []
    for k, c in p.items_desc():
        exps = p.order.unpack(k)
        mono = []
        for i, e in enumerate(exps):
            if e == 1:
                mono.append(names[i])
            elif e > 1:
                mono.append(f"{names[i]}^{e}")
        neg = c < 0
        a = -c if neg else c
        if mono:
            body = "*".join(mono)
            if a != 1:
                sa = _fmt_coeff(a)
                if "/" in sa:
                    sa = f"({sa})"
                body = f"{sa}*{body}"
        else:
            body = _fmt_coeff(a)
        parts.append(("-" if neg else "+", body))
    first_sign, first = parts[0]
    out = ("-" if first_sign == "-" else "") + first
    for sign, body in parts[1:]:
        out += f" {sign} {body}"
    return out


# --------------------------------------------------------------------------
# parsing

_TOKEN = re.compile(
    r"\s*(?:(?P<num>\d+(?:\.\d+)?)|(?P<name>[A-Za-z_][A-Za-z_0-9]*)|(?P<op>\*\*|[-+*/^()]))"
)


class PolyParser:
    """Recursive-descent parser for polynomial expressions.

    ``formula.FormulaParser`` reuses the scanner and ``expr`` entry point.
    """

    def __init__(self, text: str, order: VarOrder | None):
        self.text = text
        self.order = order
        self.pos = 0
        self.seen: list = []

    # scanner helpers
    def _skip_ws(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self, *alts):
        self._skip_ws()
        for a in alts:
            if self.text.startswith(a, self.pos):
                return a
        return None

    def eat(self, tok):
        if self.peek(tok) != tok:
            raise ParseError(f"expected {tok!r}", self.pos, self.text)
        self.pos += len(tok)

    def at_end(self):
        self._skip_ws()
        return self.pos >= len(self.text)

    def _token(self):
        m = _TOKEN.match(self.text, self.pos)
        if not m or m.end() == self.pos:
            return None
        return m

    # grammar
    def expr(self):
        acc = self.term()
        while True:
            op = self.peek("+", "-")
            if not op:
                return acc
            self.pos += 1
            rhs = self.term()
            acc = acc + rhs if op == "+" else acc - rhs

    def term(self):
        acc = self.unary()
        while True:
            op = self.peek("**", "*", "/\\", "/")
            if op not in ("*", "/"):
                return acc
            self.pos += 1
            start = self.pos
            rhs = self.unary()
            if op == "*":
                acc = acc * rhs
            else:
                if not rhs.is_constant or rhs.is_zero:
                    raise ParseError("division only by nonzero constants", start, self.text)
                acc = acc / rhs.constant_value()

    def unary(self):
        op = self.peek("-", "+")
        if op:
            self.pos += 1
            val = self.unary()
            return -val if op == "-" else val
        return self.power()

    def power(self):
        base = self.atom()
        op = self.peek("^", "**")
        if op:
            self.pos += len(op)
            self._skip_ws()
            m = re.compile(r"\d+").match(self.text, self.pos)
            if not m:
                raise ParseError("expected integer exponent", self.pos, self.text)
            self.pos = m.end()
            base = base ** int(m.group())
        return base

    def atom(self):
        self._skip_ws()
        start = self.pos
        if self.peek("("):
            self.pos += 1
            val = self.expr()
            self.eat(")")
            return val
        m = self._token()
        if m is None:
            raise ParseError("unexpected input", start, self.text)
        if m.group("num"):
            self.pos = m.end()
            return Poly.const(self.order, Fraction(m.group("num")))
        if m.group("name"):
            self.pos = m.end()
            nm = m.group("name")
            if nm not in self.order._index:
                raise ParseError(f"unknown variable {nm!r}", start, self.text)
            return Poly.var(self.order, nm)
        raise ParseError(f"unexpected {m.group('op')!r}", start, self.text)


def scan_names(text: str) -> list:
    """Identifiers appearing in ``text`` (in first-appearance order)."""
    seen = []
    for m in re.finditer(r"[A-Za-z_][A-Za-z_0-9]*", text):
        if m.group() not in seen:
            seen.append(m.group())
    return seen


def default_order(names: Iterable[str]) -> VarOrder:
    """Alphabetical order with the alphabetically last name highest."""
    return VarOrder(sorted(set(names)))


def parse_poly(text: str, order: VarOrder | None = None) -> Poly:
    if order is None:
        names = scan_names(text)
        if not names:
            names = ["x"]
        order = default_order(names)
    p = PolyParser(text, order)
    val = p.expr()
    if not p.at_end():
        raise ParseError("trailing input", p.pos, text)
    return val


# --------------------------------------------------------------------------
# ring-level operations


def arith(p: Poly, q: Poly, op: str) -> Poly:
    if p.order != q.order:
        raise PolyError("polynomials use different variable orders")
    if op == "add":
        return p + q
    if op == "sub":
        return p - q
    if op == "mul":
        return p * q
    raise PolyError(f"unknown operation {op!r}")


def uprem(f: list, g: list) -> list:
    """Pseudo-remainder of coefficient lists (coefficients are Polys)."""
    dg = len(g) - 1
    lc = g[-1]
    r = list(f)
    e = len(r) - dg
    while r and len(r) - 1 >= dg:
        top = r[-1]
        s = len(r) - 1 - dg
        r = [c * lc for c in r]
        for i, gc in enumerate(g):
            if gc:
                r[i + s] = r[i + s] - top * gc
        r.pop()
        while r and r[-1].is_zero:
            r.pop()
        e -= 1
    if e > 0 and r:
        m = lc**e
        r = [c * m for c in r]
    return r


def _ustrip(cs):
    while cs and cs[-1].is_zero:
        cs.pop()
    return cs


@lru_cache(maxsize=1 << 16)
def gcd(p: Poly, q: Poly) -> Poly:
    """Normalised gcd in Q[x_1..x_n]; ``gcd(0, 0) = 0``."""
    if p.is_zero:
        return q.normalized()
    if q.is_zero:
        return p.normalized()
    if p.is_constant or q.is_constant:
        return Poly.const(p.order, 1)
    if p == q:
        return p.normalized()
    p = p.normalized()
    q = q.normalized()
    try:
        return _heu_gcd(p, q)[0].normalized()
    except _HeuristicFailed:
        return _gcd_prs(p, q)


class _HeuristicFailed(Exception):
    pass


_HEU_TRIES = 6


def _max_norm(p: Poly) -> int:
    return max(abs(c) for c in p._t.values())


def _smod(c: int, m: int) -> int:
    r = c % m
    return r - m if r > m // 2 else r


def _interpolate(h: Poly, x: int, v: int) -> Poly:
    # recover the polynomial in v whose value at v = x is h (balanced digits)
    order = h.order
    shift = FIELD * v
    out = {}
    i = 0
    t = dict(h._t)
    while t:
        nxt = {}
        for k, c in t.items():
            d = _smod(c, x)
            if d:
                out[k + (i << shift)] = d
            rest = (c - d) // x
            if rest:
                nxt[k] = rest
        t = nxt
        i += 1
    g = Poly._raw(order, out)
    if out and g.lc_lex() < 0:
        g = -g
    return g


def _int_exquo(f: Poly, h: Poly):
    # quotient over Z, or None when h does not divide f there
    try:
        q = f.exquo(h)
    except PolyError:
        return None
    if any(type(c) is not int for c in q._t.values()):
        return None
    return q


def _heu_gcd(f: Poly, g: Poly) -> tuple:
    """Heuristic gcd of integer polynomials: ``(h, f/h, g/h)``.

    Evaluates the main variable at a large integer, recurses, and lifts the
    result back by balanced base-``x`` digits; a candidate is accepted only
    when it divides both inputs exactly over Z.
    """
    order = f.order
    if f.is_zero or g.is_zero:
        raise _HeuristicFailed
    if f.is_constant and g.is_constant:
        a, b = f.constant_value(), g.constant_value()
        if type(a) is not int or type(b) is not int:
            raise _HeuristicFailed
        c = igcd(a, b)
        return Poly.const(order, c), Poly.const(order, a // c), Poly.const(order, b // c)
    v = max(i for i in (f.mvar(), g.mvar()) if i is not None)
    cf, cg = f.int_content(), g.int_content()
    if cf.denominator != 1 or cg.denominator != 1:
        raise _HeuristicFailed
    cf, cg = cf.numerator, cg.numerator
    ground = igcd(cf, cg)
    f = f / cf if cf != 1 else f
    g = g / cg if cg != 1 else g
    kf, kg = cf // ground, cg // ground
    fn, gn = _max_norm(f), _max_norm(g)
    B = 2 * min(fn, gn) + 29
    x = max(min(B, 99 * isqrt(B)), 2 * min(fn // abs(f.lc_lex()), gn // abs(g.lc_lex())) + 4)
    name = order.names[v]
    for _ in range(_HEU_TRIES):
        ff = f.eval_partial({name: x})
        gg = g.eval_partial({name: x})
        if not ff.is_zero and not gg.is_zero:
            try:
                h, cff, cfg = _heu_gcd(ff, gg)
            except _HeuristicFailed:
                h = None
            if h is not None:
                cand = _interpolate(h, x, v)
                cand = cand / cand.int_content()
                qf = _int_exquo(f, cand)
                if qf is not None:
                    qg = _int_exquo(g, cand)
                    if qg is not None:
                        return cand * ground, qf * kf, qg * kg
                cff = _interpolate(cff, x, v)
                hh = _int_exquo(f, cff)
                if hh is not None:
                    qg = _int_exquo(g, hh)
                    if qg is not None:
                        return hh * ground, cff * kf, qg * kg
                cfg = _interpolate(cfg, x, v)
                hh = _int_exquo(g, cfg)
                if hh is not None:
                    qf = _int_exquo(f, hh)
                    if qf is not None:
                        return hh * ground, qf * kf, cfg * kg
        x = 73794 * x * isqrt(isqrt(x)) // 27011
    raise _HeuristicFailed


def _gcd_prs(p: Poly, q: Poly) -> Poly:
    mp, mq = p.mvar(), q.mvar()
    v = max(mp, mq)
    if mp != v:
        return gcd(p, content(q, v))
    if mq != v:
        return gcd(content(p, v), q)
    cp, pp = content_prim(p, v)
    cq, pq = content_prim(q, v)
    c = gcd(cp, cq)
    a = pp.coeffs(v)
    b = pq.coeffs(v)
    if len(a) < len(b):
        a, b = b, a
    while b:
        r = _ustrip(uprem(a, b))
        a = b
        if not r:
            b = r
            break
        if len(r) == 1:
            # constant in v: primitive inputs are coprime
            return c
        rp = Poly.from_coeffs(p.order, v, r)
        _, rp = content_prim(rp, v)
        b = rp.coeffs(v)
    g = Poly.from_coeffs(p.order, v, a)
    g = content_prim(g, v)[1]
    return (c * g).normalized()


def content(p: Poly, v) -> Poly:
    return content_prim(p, v)[0]


@lru_cache(maxsize=1 << 16)
def _content_cached(p: Poly, i: int):
    cs = [c for c in p.coeffs(i) if not c.is_zero]
    # cheap exits: a constant coefficient forces content 1
    cs.sort(key=len)
    g = None
    for c in cs:
        if c.is_constant:
            return Poly.const(p.order, 1)
    for c in cs:
        g = c.normalized() if g is None else gcd(g, c)
        if g.is_constant:
            return Poly.const(p.order, 1)
    return g


def content_prim(p: Poly, v) -> tuple:
    """``(content, primitive part)`` of ``p`` with respect to ``v``.

    The content is a normalised polynomial free of ``v``; ``p == content * prim``.
    ``p == 0`` gives ``(0, 0)``.
    """
    i = p.order.index(v)
    if p.is_zero:
        return p, p
    if p.degree(i) == 0:
        # p is its own content; the numeric factor stays on the primitive part
        c = p.normalized()
        return c, Poly.const(p.order, _qdiv(p.lc_lex(), c.lc_lex()))
    c = _content_cached(p, i)
    if c.is_constant:
        return c, p
    return c, p.exquo(c)


def primitive_part(p: Poly, v) -> Poly:
    return content_prim(p, v)[1]


def squarefree_part(p: Poly) -> Poly:
    """Normalised squarefree part (product of the distinct irreducible factors)."""
    out = Poly.const(p.order, 1)
    for f in sqf_factors(p):
        out = out * f
    return out.normalized()


def _yun(f: Poly, v: int) -> list:
    # f primitive w.r.t. v, deg_v f > 0
    df = f.diff(v)
    a = gcd(f, df)
    b = f.exquo(a)
    c = df.exquo(a)
    d = c - b.diff(v)
    out = []
    while not b.is_constant:
        a = gcd(b, d)
        if not a.is_constant:
            out.append(a.normalized())
        b = b.exquo(a)
        c = d.exquo(a)
        d = c - b.diff(v)
    return out


def sqf_factors(p: Poly) -> list:
    """Squarefree factors (not yet pairwise coprime) covering the zero set of ``p``."""
    if p.is_constant:
        return []
    v = p.mvar()
    c, pp = content_prim(p, v)
    out = sqf_factors(c)
    out.extend(_yun(pp, v))
    return out


def refine_coprime(polys: Iterable[Poly]) -> list:
    """Pairwise-gcd refinement of squarefree polynomials to a coprime basis."""
    work = []
    for f in polys:
        f = f.normalized()
        if not f.is_constant and f not in work:
            work.append(f)
    changed = True
    while changed:
        changed = False
        for i in range(len(work)):
            for j in range(i + 1, len(work)):
                g = gcd(work[i], work[j])
                if g.is_constant:
                    continue
                a = work[i].exquo(g)
                b = work[j].exquo(g)
                rest = [w for k, w in enumerate(work) if k not in (i, j)]
                for h in (g, a, b):
                    h = h.normalized()
                    if not h.is_constant and h not in rest:
                        rest.append(h)
                work = rest
                changed = True
                break
            if changed:
                break
    return sorted(work, key=Poly.sort_key)


def squarefree_basis(A: Iterable[Poly], v) -> frozenset:
    """Finest squarefree basis obtainable without factoring over Q.

    Each element is split by Yun's decomposition, then the pieces are refined
    by pairwise gcds until they are pairwise coprime.
    """
    A = list(A)
    if not A:
        return frozenset()
    i = A[0].order.index(v)
    pieces = []
    for f in A:
        if f.is_zero:
            continue
        if f.mvar() != i:
            raise PolyError(f"{f} does not have main variable {A[0].order.names[i]}")
        pieces.extend(sqf_factors(f))
    return frozenset(refine_coprime(pieces))


def polyset(polys: Iterable[Poly]) -> frozenset:
    """Canonical PolySet: normalised, deduplicated, zero and constants dropped."""
    out = set()
    for p in polys:
        if p.is_constant:
            continue
        out.add(p.normalized())
    return frozenset(out)


def sorted_polys(S: Iterable[Poly]) -> list:
    return sorted(S, key=Poly.sort_key)


def eval_partial(p: Poly, bind: Mapping) -> Poly:
    return p.eval_partial(bind)
