"""Pure-Python reference kernels.

Two families of hot loops live here:

* sparse products of packed-monomial term maps (``{packed_exponent: coeff}``),
* dense univariate integer polynomials (coefficient lists, lowest degree
  first) used by Descartes root isolation and exact sign evaluation.

``eccad._ckernels`` is a compiled twin with identical signatures; ``eccad.kernels``
picks whichever is importable.
"""


def mul_terms(a, b):
    """Product of two packed term maps."""
    if len(a) < len(b):
        a, b = b, a
    out = {}
    get = out.get
    for eb, cb in b.items():
        for ea, ca in a.items():
            e = ea + eb
            out[e] = get(e, 0) + ca * cb
    return {e: c for e, c in out.items() if c}


def dup_shift1(p):
    """Taylor shift ``p(x) -> p(x + 1)`` in place-free form."""
    q = list(p)
    n = len(q) - 1
    for i in range(n):
        for j in range(n - 1, i - 1, -1):
            q[j] += q[j + 1]
    return q


def sign_variations(p):
    count = 0
    prev = 0
    for c in p:
        if c:
            if prev and (c > 0) != (prev > 0):
                count += 1
            prev = c
    return count


def dup_eval_scaled(p, num, den):
    """Return ``den**deg(p) * p(num/den)`` as an exact integer."""
    n = len(p) - 1
    if n < 0:
        return 0
    acc = p[n]
    dpow = 1
    for i in range(n - 1, -1, -1):
        dpow *= den
        acc = acc * num + p[i] * dpow
    return acc


def _halve(p):
    # 2**n * p(x / 2)
    n = len(p) - 1
    return [c << (n - i) for i, c in enumerate(p)]


def _var_01(p):
    # sign variations of (x + 1)**n * p(1 / (x + 1)), bounding roots in (0, 1)
    return sign_variations(dup_shift1(p[::-1]))


def descartes_01(p):
    """Isolate the roots of a squarefree integer polynomial in ``[0, 1)``.

    Returns ``(c, k, exact)`` triples: ``exact`` means the root is the dyadic
    ``c / 2**k``; otherwise the open interval ``(c / 2**k, (c + 1) / 2**k)``
    holds exactly one root and neither endpoint is a root.
    """
    out = []
    stack = [(list(p), 0, 0)]
    while stack:
        q, c, k = stack.pop()
        at_lo = q[0] == 0
        # a left child shares its left endpoint with the parent
        if at_lo and (k == 0 or c & 1):
            out.append((c, k, True))
        v = _var_01(q)
        if v == 0:
            continue
        if v == 1 and not at_lo and sum(q) != 0:
            out.append((c, k, False))
            continue
        left = _halve(q)
        right = dup_shift1(left)
        stack.append((right, 2 * c + 1, k + 1))
        stack.append((left, 2 * c, k + 1))
    return out


def dup_prem(f, g):
    """Pseudo-remainder of integer polynomials, ``lc(g)**(df-dg+1) * f mod g``."""
    df = len(f) - 1
    dg = len(g) - 1
    if df < dg:
        return list(f)
    r = list(f)
    lc = g[-1]
    for _ in range(df - dg + 1):
        if len(r) - 1 < dg:
            r = [c * lc for c in r]
            continue
        top = r[-1]
        shift = len(r) - 1 - dg
        r = [c * lc for c in r]
        for i, gc in enumerate(g):
            r[i + shift] -= top * gc
        r.pop()
        while r and r[-1] == 0:
            r.pop()
    return r
