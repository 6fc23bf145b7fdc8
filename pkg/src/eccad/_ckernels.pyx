# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled twins of the kernels in ``_kernels_py`` (same signatures and results)."""


def mul_terms(dict a, dict b):
    cdef dict out = {}
    cdef object ea, ca, eb, cb, e, prev
    if len(a) < len(b):
        a, b = b, a
    for eb, cb in b.items():
        for ea, ca in a.items():
            e = ea + eb
            prev = out.get(e)
            if prev is None:
                out[e] = ca * cb
            else:
                out[e] = prev + ca * cb
    return {e: c for e, c in out.items() if c}


cpdef list dup_shift1(p):
    cdef list q = list(p)
    cdef Py_ssize_t n = len(q) - 1
    cdef Py_ssize_t i, j
    for i in range(n):
        for j in range(n - 1, i - 1, -1):
            q[j] = q[j] + q[j + 1]
    return q


cpdef int sign_variations(p):
    cdef int count = 0
    cdef int prev = 0
    cdef int s
    for c in p:
        if c:
            s = 1 if c > 0 else -1
            if prev and s != prev:
                count += 1
            prev = s
    return count


cpdef object dup_eval_scaled(p, num, den):
    cdef Py_ssize_t n = len(p) - 1
    cdef Py_ssize_t i
    if n < 0:
        return 0
    acc = p[n]
    if den == 1:
        for i in range(n - 1, -1, -1):
            acc = acc * num + p[i]
        return acc
    dpow = 1
    for i in range(n - 1, -1, -1):
        dpow = dpow * den
        acc = acc * num + p[i] * dpow
    return acc


cdef list _halve(list p):
    cdef Py_ssize_t n = len(p) - 1
    cdef Py_ssize_t i
    return [p[i] << (n - i) for i in range(n + 1)]


cdef int _var_01(list p):
    return sign_variations(dup_shift1(p[::-1]))


def descartes_01(p):
    cdef list out = []
    cdef list stack = [(list(p), 0, 0)]
    cdef list q, left, right
    cdef int v
    cdef bint at_lo
    while stack:
        q, c, k = stack.pop()
        at_lo = q[0] == 0
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
    cdef Py_ssize_t df = len(f) - 1
    cdef Py_ssize_t dg = len(g) - 1
    cdef Py_ssize_t i, shift, step
    cdef list r, gl
    if df < dg:
        return list(f)
    r = list(f)
    gl = list(g)
    lc = gl[dg]
    for step in range(df - dg + 1):
        if len(r) - 1 < dg:
            r = [c * lc for c in r]
            continue
        top = r[len(r) - 1]
        shift = len(r) - 1 - dg
        r = [c * lc for c in r]
        for i in range(dg + 1):
            if gl[i]:
                r[i + shift] = r[i + shift] - top * gl[i]
        r.pop()
        while r and r[len(r) - 1] == 0:
            r.pop()
    return r
