# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled twins of the loops in ``_kernels.py``.

Loop indices are C integers; the arithmetic stays on Python integers so
results match the pure-Python module exactly.
"""

from math import isqrt


def seidel_zigzag(Py_ssize_t n_max):
    """Zigzag numbers a(0..n_max) via the Seidel-Entringer boustrophedon."""
    cdef Py_ssize_t n, k
    cdef list row, new, out
    out = [1]
    row = [1]
    for n in range(1, n_max + 1):
        new = [0] * (n + 1)
        acc = 0
        for k in range(1, n + 1):
            acc += row[n - k]
            new[k] = acc
        row = new
        out.append(acc)
    return out


def egf_multiply(list f, list g, Py_ssize_t n_terms):
    """Binomial convolution h[n] = sum C(n,k) f[k] g[n-k] over integers."""
    cdef Py_ssize_t n, k
    cdef list h, binom, nxt
    h = [0] * n_terms
    binom = [1]
    for n in range(n_terms):
        if n:
            nxt = [1] * (n + 1)
            for k in range(1, n):
                nxt[k] = binom[k - 1] + binom[k]
            binom = nxt
        acc = 0
        for k in range(n + 1):
            fk = f[k]
            if fk:
                gk = g[n - k]
                if gk:
                    acc += binom[k] * fk * gk
        h[n] = acc
    return h


def egf_divide(list f, list h, Py_ssize_t n_terms):
    """Integer long division in the binomial-convolution ring.

    Returns G with G[n] = n! * h0^(n+1) * [x^n](F/H) when f and h hold
    n!-scaled integer coefficients of F and H; h[0] must be nonzero.
    """
    cdef Py_ssize_t n, k
    cdef list p, g, binom, nxt
    h0 = h[0]
    # h0 powers: p[j] = h0**j
    p = [1]
    for n in range(n_terms):
        p.append(p[n] * h0)
    g = [0] * n_terms
    binom = [1]
    for n in range(n_terms):
        if n:
            nxt = [1] * (n + 1)
            for k in range(1, n):
                nxt[k] = binom[k - 1] + binom[k]
            binom = nxt
        acc = f[n] * p[n]
        for k in range(n):
            gk = g[k]
            if gk:
                hk = h[n - k]
                if hk:
                    acc -= binom[k] * gk * hk * p[n - k - 1]
        g[n] = acc
    return g


def lambert_fixed(k, q, wp, n_terms):
    """Fixed-point sum_{n=1}^{N} n^k q^n / (1 - q^n), with q scaled by 2^wp."""
    # n, wp stay Python ints: n ** k and 1 << wp must not wrap
    one = 1 << wp
    qn = one
    total = 0
    for n in range(1, n_terms + 1):
        qn = (qn * q) >> wp
        if not qn:
            break
        total += ((n ** k) * qn << wp) // (one - qn)
    return total


cdef object _nint_div(object a, object b):
    # round(a / b) for integers, b != 0, ties away from zero
    if b < 0:
        a, b = -a, -b
    if a >= 0:
        return (2 * a + b) // (2 * b)
    return -((-2 * a + b) // (2 * b))


def pslq_fixed(list x, prec, tol, Py_ssize_t max_iter, norm_cap):
    """PSLQ on fixed-point inputs ``x`` (scaled by 2^prec).

    Returns ``(status, vector, iterations, norm_bound, y_now, y_prev)`` with
    status one of ``"found"``, ``"excluded"``, ``"precision"``, ``"cap"``.
    ``norm_bound`` is a lower bound (fixed point) on the Euclidean norm of
    any integer relation, read off the H diagonal.  ``norm_cap`` (integer)
    is the relation norm above which the search stops as excluded.
    """
    cdef Py_ssize_t n, i, j, k, m, it, jmin
    cdef list s, y, H, A, B, gpow, Hi, Hj, Ai, Aj, Bk
    n = len(x)
    one = 1 << prec
    # gamma = sqrt(4/3); powers used in the selection step
    gamma = isqrt((4 << (2 * prec)) // 3)
    gpow = [one]
    for i in range(n):
        gpow.append((gpow[i] * gamma) >> prec)

    s = [0] * n
    for k in range(n):
        acc = 0
        for j in range(k, n):
            acc += (x[j] * x[j]) >> prec
        s[k] = isqrt(acc << prec)
    t = s[0]
    if not t:
        return ("precision", None, 0, 0, 0, 0)
    y = [(xk << prec) // t for xk in x]
    s = [(sk << prec) // t for sk in s]

    H = [[0] * (n - 1) for _ in range(n)]
    for i in range(n):
        if i <= n - 2:
            H[i][i] = (s[i + 1] << prec) // s[i] if s[i] else 0
        for j in range(i):
            d = (s[j] * s[j + 1]) >> prec
            H[i][j] = (-y[i] * y[j]) // d if d else 0
    A = [[int(i == j) for j in range(n)] for i in range(n)]
    B = [[int(i == j) for j in range(n)] for i in range(n)]

    for i in range(1, n):
        for j in range(i - 1, -1, -1):
            hjj = H[j][j]
            if not hjj:
                continue
            q = _nint_div(H[i][j], hjj)
            if not q:
                continue
            y[j] += q * y[i]
            Hi = H[i]
            Hj = H[j]
            for k in range(j + 1):
                Hi[k] -= q * Hj[k]
            Ai = A[i]
            Aj = A[j]
            for k in range(n):
                Ai[k] -= q * Aj[k]
                B[k][j] += q * B[k][i]

    # an exact relation can surface during the initial reduction
    ymin = None
    jmin = 0
    for j in range(n):
        v = abs(y[j])
        if ymin is None or v < ymin:
            ymin = v
            jmin = j
    if ymin <= tol:
        return ("found", [B[k][jmin] for k in range(n)], 0, 0, ymin, one)

    limit = one
    # reference scale before the first iteration: inputs are normalized to 1
    y_prev = one
    it = 0
    norm_bound = 0
    while it < max_iter:
        it += 1
        m = 0
        best = -1
        for i in range(n - 1):
            sz = gpow[i + 1] * abs(H[i][i])
            if sz > best:
                best = sz
                m = i
        y[m], y[m + 1] = y[m + 1], y[m]
        H[m], H[m + 1] = H[m + 1], H[m]
        A[m], A[m + 1] = A[m + 1], A[m]
        for k in range(n):
            Bk = B[k]
            Bk[m], Bk[m + 1] = Bk[m + 1], Bk[m]
        if m <= n - 3:
            a = H[m][m]
            b = H[m][m + 1]
            t0 = isqrt(a * a + b * b)
            if not t0:
                return ("precision", None, it, norm_bound, 0, y_prev)
            t1 = (a << prec) // t0
            t2 = (b << prec) // t0
            for i in range(m, n):
                Hi = H[i]
                t3 = Hi[m]
                t4 = Hi[m + 1]
                Hi[m] = (t1 * t3 + t2 * t4) >> prec
                Hi[m + 1] = (t1 * t4 - t2 * t3) >> prec
        for i in range(m + 1, n):
            for j in range(min(i - 1, m + 1), -1, -1):
                hjj = H[j][j]
                if not hjj:
                    continue
                q = _nint_div(H[i][j], hjj)
                if not q:
                    continue
                y[j] += q * y[i]
                Hi = H[i]
                Hj = H[j]
                for k in range(j + 1):
                    Hi[k] -= q * Hj[k]
                Ai = A[i]
                Aj = A[j]
                for k in range(n):
                    Ai[k] -= q * Aj[k]
                    B[k][j] += q * B[k][i]

        ymin = None
        jmin = 0
        for j in range(n):
            v = abs(y[j])
            if ymin is None or v < ymin:
                ymin = v
                jmin = j
        if ymin <= tol:
            vec = [B[k][jmin] for k in range(n)]
            return ("found", vec, it, norm_bound, ymin, y_prev)
        y_prev = ymin

        hmax = 0
        for j in range(n - 1):
            v = abs(H[j][j])
            if v > hmax:
                hmax = v
        if hmax:
            norm_bound = (one * one) // hmax
            if norm_bound > norm_cap * one:
                return ("excluded", None, it, norm_bound, ymin, y_prev)
        amax = 0
        for row in A:
            for v in row:
                if abs(v) > amax:
                    amax = abs(v)
        if amax > limit:
            return ("precision", None, it, norm_bound, ymin, y_prev)
    return ("cap", None, it, norm_bound, y_prev, y_prev)
