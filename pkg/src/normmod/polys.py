"""Dense univariate polynomial arithmetic over Z and Q.

A polynomial is a list of coefficients in ascending degree order, so
[-2, 0, 0, 1] is x^3 - 2.  Coefficients are ints or Fractions, never
floats; every routine here is exact.
"""

from fractions import Fraction
from math import comb, gcd, isqrt


def trim(p):
    """Drop trailing zeros; the zero polynomial is []."""
    n = len(p)
    while n and p[n - 1] == 0:
        n -= 1
    return list(p[:n])


def degree(p):
    """Degree of p, with degree([]) == -1."""
    p = trim(p)
    return len(p) - 1


def add(p, q):
    if len(p) < len(q):
        p, q = q, p
    out = list(p)
    for i, c in enumerate(q):
        out[i] += c
    return trim(out)


def neg(p):
    return [-c for c in p]


def sub(p, q):
    return add(p, neg(q))


def mul(p, q):
    p, q = trim(p), trim(q)
    if not p or not q:
        return []
    out = [0] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a:
            for j, b in enumerate(q):
                out[i + j] += a * b
    return trim(out)


def scale(p, c):
    if c == 0:
        return []
    return [a * c for a in p]


def evaluate(p, x):
    acc = 0
    for c in reversed(trim(p)):
        acc = acc * x + c
    return acc


def derivative(p):
    return trim([i * c for i, c in enumerate(p)][1:])


def divmod_exact(p, q):
    """Quotient and remainder of p by q over the rationals."""
    q = trim(q)
    if not q:
        raise ZeroDivisionError("polynomial division by zero")
    rem = [Fraction(c) for c in trim(p)]
    lead = Fraction(q[-1])
    dq = len(q) - 1
    quo = [Fraction(0)] * max(len(rem) - dq, 0)
    while len(rem) - 1 >= dq and rem:
        c = rem[-1] / lead
        k = len(rem) - 1 - dq
        quo[k] = c
        for i, b in enumerate(q):
            rem[k + i] -= c * b
        rem = trim(rem)
    return trim(quo), rem


def divides(q, p):
    """True when q divides p exactly."""
    _, rem = divmod_exact(p, q)
    return not rem


def content(p):
    g = 0
    for c in p:
        g = gcd(g, c)
    return g


def int_det(rows):
    """Determinant of a square integer matrix (Bareiss, fraction-free)."""
    m = [list(r) for r in rows]
    n = len(m)
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k]:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
            m[i][k] = 0
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


def resultant(p, q):
    """Resultant of two integer polynomials via the Sylvester matrix."""
    p, q = trim(p), trim(q)
    dp, dq = len(p) - 1, len(q) - 1
    if dp < 0 or dq < 0:
        return 0
    if dp == 0:
        return p[0] ** dq
    if dq == 0:
        return q[0] ** dp
    size = dp + dq
    rows = []
    pd = list(reversed(p))  # descending
    qd = list(reversed(q))
    for i in range(dq):
        rows.append([0] * i + pd + [0] * (size - dp - 1 - i))
    for i in range(dp):
        rows.append([0] * i + qd + [0] * (size - dq - 1 - i))
    return int_det(rows)


def discriminant(f):
    """Discriminant of a monic integer polynomial f.

    Computed as (-1)^(r(r-1)/2) * Res(f, f') with r = deg f.
    """
    f = trim(f)
    r = len(f) - 1
    if r < 1 or f[-1] != 1:
        raise ValueError("discriminant expects a monic polynomial of degree >= 1")
    sign = -1 if (r * (r - 1) // 2) % 2 else 1
    return sign * resultant(f, derivative(f))


def _integer_divisors(n):
    n = abs(n)
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d != n // d:
                large.append(n // d)
        d += 1
    return small + large[::-1]


def _div_exact_int(p, q):
    """Divide integer polynomial p by monic integer q; None when not exact over Z."""
    rem = list(trim(p))
    q = trim(q)
    dq = len(q) - 1
    quo = [0] * (len(rem) - dq)
    while len(rem) - 1 >= dq and rem:
        c = rem[-1]
        k = len(rem) - 1 - dq
        quo[k] = c
        for i, b in enumerate(q):
            rem[k + i] -= c * b
        rem = trim(rem)
    return quo if not rem else None


def is_irreducible_monic(f):
    """Irreducibility of a monic integer polynomial over Q.

    Trial factorization: enumerate candidate monic integer factors of
    degree up to deg(f)//2 with coefficients inside a Mignotte-style box
    (|g_i| <= C(d,i) * ceil(l2norm(f))), constant terms restricted to
    divisors of f(0).  Exact and cheap at the degrees used here.
    """
    f = trim(f)
    r = len(f) - 1
    if r <= 0 or f[-1] != 1:
        raise ValueError("expected a monic polynomial of positive degree")
    if any(Fraction(c).denominator != 1 for c in f):
        raise ValueError("expected integer coefficients")
    f = [int(c) for c in f]
    if r == 1:
        return True
    if f[0] == 0:
        return False  # x divides f
    norm_bound = isqrt(sum(int(c) * int(c) for c in f)) + 1
    for d in range(1, r // 2 + 1):
        bounds = [comb(d, i) * norm_bound for i in range(d)]
        candidates = [c for c in _integer_divisors(f[0]) if c <= bounds[0]]
        candidates = [c for c in candidates] + [-c for c in candidates]

        def search(coeffs, idx):
            if idx == d:
                if _div_exact_int(f, coeffs + [1]) is not None:
                    return True
                return False
            for c in range(-bounds[idx], bounds[idx] + 1):
                if search(coeffs + [c], idx + 1):
                    return True
            return False

        for c0 in candidates:
            if search([c0], 1):
                return False
    return True


def sturm_chain(p):
    """Sturm chain of a squarefree-or-not polynomial, over Fractions."""
    p0 = [Fraction(c) for c in trim(p)]
    chain = [p0, [Fraction(c) for c in derivative(p0)]]
    while degree(chain[-1]) > 0:
        _, rem = divmod_exact(chain[-2], chain[-1])
        rem = neg(rem)
        if not rem:
            break
        chain.append(rem)
    return [c for c in chain if c]


def _sign_changes(values):
    signs = [1 if v > 0 else -1 for v in values if v != 0]
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def count_roots_greater(p, a):
    """Number of distinct real roots of p in the open interval (a, oo)."""
    chain = sturm_chain(p)
    at_a = [evaluate(q, Fraction(a)) for q in chain]
    at_inf = [q[-1] for q in chain]  # sign at +oo is the leading sign
    return _sign_changes(at_a) - _sign_changes(at_inf)


def has_real_root_at_least(p, a):
    """True when p has a real root >= a."""
    if evaluate(p, Fraction(a)) == 0:
        return True
    return count_roots_greater(p, a) > 0


def euler_phi(n):
    if n < 1:
        raise ValueError("euler_phi expects n >= 1")
    out = n
    m = n
    d = 2
    while d * d <= m:
        if m % d == 0:
            out -= out // d
            while m % d == 0:
                m //= d
        d += 1
    if m > 1:
        out -= out // m
    return out
