from fractions import Fraction

import pytest

from eccad.formula import parse_formula
from eccad.poly import Poly, VarOrder, parse_poly

SYSTEM = """vars: z > y > x > w
x*y - z^2 - w^2 = 0 /\\ x + y^2 + z + w = 0 /\\ x - y^2 + z - w = 0 /\\ x + y + z + w > 0
"""

ORDER = VarOrder.parse("z > y > x > w")


def P(text, order=ORDER):
    return parse_poly(text, order)


@pytest.fixture
def system():
    return parse_formula(SYSTEM)


@pytest.fixture
def order():
    return ORDER


# ---------------------------------------------------------------------------
# independent oracles


def sylvester_matrix(f: Poly, g: Poly, v) -> list:
    a = list(reversed(f.coeffs(v)))
    b = list(reversed(g.coeffs(v)))
    m, n = len(a) - 1, len(b) - 1
    zero = f * 0
    size = m + n
    rows = []
    for i in range(n):
        rows.append([zero] * i + a + [zero] * (size - m - 1 - i))
    for i in range(m):
        rows.append([zero] * i + b + [zero] * (size - n - 1 - i))
    return rows


def bareiss_det(M: list):
    """Fraction-free determinant; entries support +, -, * and exact division."""
    M = [list(r) for r in M]
    n = len(M)
    if n == 0:
        return 1
    sign = 1
    prev = None
    for k in range(n - 1):
        if _is_zero(M[k][k]):
            for i in range(k + 1, n):
                if not _is_zero(M[i][k]):
                    M[k], M[i] = M[i], M[k]
                    sign = -sign
                    break
            else:
                return M[0][0] * 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = M[i][j] * M[k][k] - M[i][k] * M[k][j]
                M[i][j] = num if prev is None else _exdiv(num, prev)
        prev = M[k][k]
    d = M[n - 1][n - 1]
    return d if sign > 0 else -d


def _is_zero(x):
    return x.is_zero if isinstance(x, Poly) else x == 0


def _exdiv(a, b):
    if isinstance(a, Poly):
        return a.exquo(b)
    q = Fraction(a) / b
    assert q.denominator == 1
    return int(q)


def sylvester_resultant(f: Poly, g: Poly, v) -> Poly:
    return bareiss_det(sylvester_matrix(f, g, v))


def sturm_count(f: list) -> int:
    """Distinct real roots of an integer polynomial (coefficients lowest first)."""
    f = [Fraction(c) for c in f]
    while f and f[-1] == 0:
        f.pop()
    if len(f) <= 1:
        return 0
    seq = [f, [i * c for i, c in enumerate(f)][1:]]
    while len(seq[-1]) > 1:
        r = _rem(seq[-2], seq[-1])
        if not r:
            break
        seq.append([-c for c in r])

    def variations(signs):
        s = [x for x in signs if x != 0]
        return sum(1 for a, b in zip(s, s[1:]) if a != b)

    at_neg = [(1 if (len(p) - 1) % 2 == 0 else -1) * (1 if p[-1] > 0 else -1) for p in seq]
    at_pos = [1 if p[-1] > 0 else -1 for p in seq]
    return variations(at_neg) - variations(at_pos)


def _rem(a, b):
    a = list(a)
    while len(a) >= len(b) and a:
        q = a[-1] / b[-1]
        s = len(a) - len(b)
        for i, c in enumerate(b):
            a[s + i] -= q * c
        a.pop()
        while a and a[-1] == 0:
            a.pop()
    return a
