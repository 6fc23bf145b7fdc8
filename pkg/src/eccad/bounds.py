"""Growth tables for projection sets and cell-count bounds.

Quantities are products of powers over the bases ``2``, ``m`` and ``d``
with integer exponents, which is all the bound formulas need.
"""

from __future__ import annotations

from dataclasses import dataclass, field

VARIANTS = ("iterated_resultant", "gb")
_SYMBOLS = ("m", "d")


class BoundsError(ValueError):
    pass


@dataclass(frozen=True)
class PowerProduct:
    """``prod(base**exp)`` over integer bases and the symbols m, d."""

    factors: tuple = ()  # sorted ((base, exponent), ...)

    @staticmethod
    def of(**kw) -> "PowerProduct":
        # PowerProduct.of(two=3, m=1, d=2)
        facs = {}
        for k, e in kw.items():
            base = 2 if k == "two" else k
            if e:
                facs[base] = facs.get(base, 0) + e
        return PowerProduct._make(facs)

    @staticmethod
    def _make(facs: dict) -> "PowerProduct":
        return PowerProduct(tuple(sorted(((b, e) for b, e in facs.items() if e), key=_base_key)))

    def exponent(self, base) -> int:
        for b, e in self.factors:
            if b == base:
                return e
        return 0

    def __mul__(self, other: "PowerProduct") -> "PowerProduct":
        facs = dict(self.factors)
        for b, e in other.factors:
            facs[b] = facs.get(b, 0) + e
        return PowerProduct._make(facs)

    def __pow__(self, k: int) -> "PowerProduct":
        return PowerProduct._make({b: e * k for b, e in self.factors})

    def evaluate(self, m: int = 1, d: int = 1) -> int:
        env = {"m": m, "d": d}
        out = 1
        for b, e in self.factors:
            if e < 0:
                raise BoundsError("negative exponent")
            out *= (env[b] if isinstance(b, str) else b) ** e
        return out

    def __str__(self):
        if not self.factors:
            return "1"
        parts = []
        for b, e in self.factors:
            parts.append(str(b) if e == 1 else f"{b}^{e}")
        return " ".join(parts)


def _base_key(item):
    b = item[0]
    return (1, _SYMBOLS.index(b)) if isinstance(b, str) else (0, b)


ONE = PowerProduct()


@dataclass(frozen=True)
class MDPair:
    """A set partitionable into ``M`` classes of combined degree at most ``D``."""

    M: int
    D: int

    def __post_init__(self):
        if self.M < 1 or self.D < 1:
            raise BoundsError("M and D must be positive")

    def root_bound(self) -> int:
        return self.M * self.D


@dataclass(frozen=True)
class Row:
    variables: int
    label: str
    number: PowerProduct
    degree: PowerProduct
    ec_degree: PowerProduct | None = None

    def md(self, m: int, d: int) -> MDPair:
        return MDPair(self.number.evaluate(m, d), self.degree.evaluate(m, d))


@dataclass
class BoundTable:
    """Rows from ``n`` variables down to 1; EC levels are the first ``l + 1``."""

    n: int
    m: int | None
    d: int | None
    l: int
    variant: str
    rows: list = field(default_factory=list)

    def row(self, variables: int) -> Row:
        return self.rows[self.n - variables]

    def schedule(self) -> list:
        return ["P*_F" if s < self.l else "P" for s in range(self.n - 1)]

    def numeric(self) -> bool:
        return self.m is not None and self.d is not None

    def format(self, evaluate: bool = False) -> str:
        gb = self.variant == "gb"
        head = ["Variables", "Number", "Degree"] + (["EC degree"] if gb else [])
        lines = []
        for r in self.rows:
            cells = [r.label, r.number, r.degree] + ([r.ec_degree or ""] if gb else [])
            if evaluate and self.numeric():
                cells = [c if isinstance(c, str) else c.evaluate(self.m, self.d) for c in cells]
            lines.append([str(c) for c in cells])
        w = [max(len(x[j]) for x in lines + [head]) for j in range(len(head))]
        fmt = " | ".join("{:<%d}" % k for k in w)
        sep = "-+-".join("-" * k for k in w)
        return "\n".join([fmt.format(*head).rstrip(), sep] + [fmt.format(*x).rstrip() for x in lines])


def _label(s: int) -> str:
    if s == 0:
        return "n"
    return f"n-{s}"


def _check(n, m, d, l):
    if n < 1:
        raise BoundsError("n must be at least 1")
    if not 0 <= l <= n - 1:
        raise BoundsError(f"need 0 <= l <= n-1, got l={l}, n={n}")
    for name, v in (("m", m), ("d", d)):
        if v is not None and v < 1:
            raise BoundsError(f"{name} must be at least 1")


def _number(s: int, l: int) -> PowerProduct:
    if s <= l:
        return PowerProduct.of(two=s, m=1)
    r = s - l
    if l == 0:
        # sign-invariant growth, whose product reproduces the dominant term eq1
        return PowerProduct.of(two=2 ** (r - 1), m=2**r)
    return PowerProduct.of(two=2**r * l, m=2**r)


def _t1_degree(s: int) -> PowerProduct:
    return PowerProduct.of(two=2**s - 1, d=2**s)


def _t2_degrees(s: int, l: int):
    if s <= l:
        return PowerProduct.of(d=s + 1), PowerProduct.of(d=s * (s + 1) // 2 + 1)
    r = s - l
    return None, PowerProduct.of(d=2 ** (r - 1) * l * (l + 1) + 2**r)


def table_growth(n: int, m: int | None = None, d: int | None = None, l: int = 0,
                 variant: str = "iterated_resultant") -> BoundTable:
    """Number and degree of projection sets at each level."""
    _check(n, m, d, l)
    if variant not in VARIANTS:
        raise BoundsError(f"unknown variant {variant!r}")
    t = BoundTable(n, m, d, l, variant)
    for s in range(n):
        number = _number(s, l)
        if variant == "iterated_resultant":
            t.rows.append(Row(n - s, _label(s), number, _t1_degree(s)))
        else:
            ec, others = _t2_degrees(s, l)
            t.rows.append(Row(n - s, _label(s), number, others, ec))
    if n > 1:
        t.rows[-1] = Row(1, "1", t.rows[-1].number, t.rows[-1].degree, t.rows[-1].ec_degree)
    return t


# --------------------------------------------------------------------------
# cell counts


def _lift_degree(t: BoundTable, s: int) -> PowerProduct:
    r = t.rows[s]
    return r.ec_degree if r.ec_degree is not None else r.degree


def cell_bound(t: BoundTable, mode: str = "product_eq6") -> int:
    """Numeric cell-count bound from a table with numeric m and d."""
    if not t.numeric():
        raise BoundsError("cell_bound needs numeric m and d")
    m, d = t.m, t.d
    if mode == "product_eq6":
        out = 1
        for r in t.rows:
            out *= 2 * r.number.evaluate(m, d) * r.degree.evaluate(m, d) + 1
        return out
    if mode == "ec_lifting_eq7":
        out = 2
        for s in range(t.l + 1):
            out *= _lift_degree(t, s).evaluate(m, d)
        for r in t.rows[t.l + 1:]:
            out *= 2 * r.number.evaluate(m, d) * r.degree.evaluate(m, d) + 1
        return out
    raise BoundsError(f"unknown mode {mode!r}")


def cell_bound_dominant(t: BoundTable, mode: str = "product_eq6") -> PowerProduct:
    """The same bounds as products of powers with the ``+1`` terms dropped."""
    two = PowerProduct.of(two=1)
    if mode == "product_eq6":
        out = ONE
        for r in t.rows:
            out = out * two * r.number * r.degree
        return out
    if mode == "ec_lifting_eq7":
        out = two
        for s in range(t.l + 1):
            out = out * _lift_degree(t, s)
        for r in t.rows[t.l + 1:]:
            out = out * two * r.number * r.degree
        return out
    raise BoundsError(f"unknown mode {mode!r}")


def dominant_term(n: int, m: int | None = None, d: int | None = None, l: int = 0,
                  which: str = "eq1"):
    """Closed forms: ``eq1``/``eq2`` as PowerProducts (ints given m, d), ``eq8_exponent`` as int."""
    _check(n, m, d, l)
    if which == "eq8_exponent":
        return eq8_exponent(n, l)
    e = 2**n - 1
    if which == "eq1":
        pp = PowerProduct.of(two=e + 2 ** (n - 1) - 1, d=e, m=e)
    elif which == "eq2":
        pp = PowerProduct.of(two=e + l * 2 ** (n - l) - 3 * l, d=e, m=2 ** (n - l) - 2)
    else:
        raise BoundsError(f"unknown closed form {which!r}")
    if m is not None and d is not None:
        return pp.evaluate(m, d)
    return pp


def eq8_exponent(n: int, l: int) -> int:
    # 2^(n-l) (l^2+l+2)/2 - (l^2+l)/2 - 2, every term is an integer
    _check(n, None, None, l)
    return 2 ** (n - l - 1) * (l * l + l + 2) - (l * l + l) // 2 - 2


def gb_exponent_by_rows(n: int, l: int) -> int:
    """Exponent of d summed row by row from the GB degree table."""
    _check(n, None, None, l)
    top = sum(s + 1 for s in range(l + 1))
    rest = sum(2 ** (r - 1) * l * (l + 1) + 2**r for r in range(1, n - l))
    return top + rest


@dataclass(frozen=True)
class ExponentComparison:
    n: int
    l: int
    closed_form: int
    by_rows: int

    @property
    def offset(self) -> int:
        return self.by_rows - self.closed_form

    def __str__(self):
        return f"n={self.n} l={self.l} closed_form={self.closed_form} by_rows={self.by_rows} offset={self.offset}"


def compare_gb_exponent(n: int, l: int) -> ExponentComparison:
    return ExponentComparison(n, l, eq8_exponent(n, l), gb_exponent_by_rows(n, l))


# --------------------------------------------------------------------------
# observed runs


@dataclass(frozen=True)
class ObservedRow:
    variables: int
    var: str
    count: int
    basis_size: int
    max_degree: int
    mvar_degree: int
    ec_degree: int | None


def measure_run(run) -> list:
    """Per-level counts and degrees of a projection run, highest level first."""
    if run is None or not getattr(run, "A", None):
        return []
    out = []
    for k in range(run.n, 0, -1):
        A = run.A[k - 1]
        ec = run.E[k - 1] if run.E else None
        out.append(
            ObservedRow(
                k,
                run.order.names[k - 1],
                len(A),
                len(run.B[k - 1]),
                max((max(p.degree(i) for i in range(run.n)) for p in A), default=0),
                max((p.degree(k - 1) for p in A), default=0),
                None if ec is None else max(ec.degree(i) for i in range(run.n)),
            )
        )
    return out


def compare_run(run, d: int, m: int | None = None, l: int | None = None,
                variant: str = "gb") -> list:
    """``(variables, predicted degree, observed degree)`` triples."""
    obs = measure_run(run)
    if not obs:
        return []
    n = run.n
    if l is None:
        l = sum(1 for e in run.E[1:] if e is not None) if run.E else 0
        l = min(l, n - 1)
    t = table_growth(n, m or 1, d, l, variant)
    return [(o.variables, t.row(o.variables).degree.evaluate(m or 1, d), o.max_degree) for o in obs]
