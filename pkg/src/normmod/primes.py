"""Primality testing and integer factorization.

Miller-Rabin with the first thirteen primes as witnesses is a proven
deterministic test below 3317044064679887385961981 (~3.3e24); above that
the same witness set plus a few extras is used and the answer is declared
probabilistic by prime_certainty().
"""

from math import gcd, isqrt

_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)
_DETERMINISTIC_BELOW = 3317044064679887385961981
_EXTRA_WITNESSES = (43, 47, 53, 59, 61, 67, 71, 73)

_SMALL_PRIMES = []
_sieve_limit = 1000
_flags = bytearray([1]) * (_sieve_limit + 1)
_flags[0:2] = b"\x00\x00"
for _i in range(2, isqrt(_sieve_limit) + 1):
    if _flags[_i]:
        _flags[_i * _i :: _i] = b"\x00" * len(_flags[_i * _i :: _i])
_SMALL_PRIMES = [i for i, f in enumerate(_flags) if f]
del _flags, _i


def _mr_witness(a, n, d, s):
    x = pow(a, d, n)
    if x == 1 or x == n - 1:
        return False
    for _ in range(s - 1):
        x = x * x % n
        if x == n - 1:
            return False
    return True  # a witnesses compositeness


def is_prime(n):
    if n < 2:
        return False
    for p in _SMALL_PRIMES:
        if n % p == 0:
            return n == p
        if p * p > n:
            return True
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    witnesses = _WITNESSES if n < _DETERMINISTIC_BELOW else _WITNESSES + _EXTRA_WITNESSES
    return not any(_mr_witness(a, n, d, s) for a in witnesses)


def prime_certainty(n):
    """'deterministic' when is_prime(n) is proven, else 'probabilistic'."""
    return "deterministic" if n < _DETERMINISTIC_BELOW else "probabilistic"


def next_prime(n):
    k = n + 1
    if k <= 2:
        return 2
    if k % 2 == 0:
        k += 1
    while not is_prime(k):
        k += 2
    return k


def _pollard_brent(n):
    """One nontrivial factor of an odd composite n (Brent's cycle variant)."""
    if n % 2 == 0:
        return 2
    # deterministic parameter sweep keeps results reproducible
    for c in range(1, 100):
        y, m, g, r, q = 2, 128, 1, 1, 1
        x = ys = y
        while g == 1:
            x = y
            for _ in range(r):
                y = (y * y + c) % n
            k = 0
            while k < r and g == 1:
                ys = y
                for _ in range(min(m, r - k)):
                    y = (y * y + c) % n
                    q = q * abs(x - y) % n
                g = gcd(q, n)
                k += m
            r *= 2
        if g == n:
            g = 1
            while g == 1:
                ys = (ys * ys + c) % n
                g = gcd(abs(x - ys), n)
        if g != n:
            return g
    raise ArithmeticError(f"factorization failed for {n}")


def factor(n):
    """Prime factorization as a dict {prime: exponent}; n must be >= 1."""
    if n < 1:
        raise ValueError("factor expects n >= 1")
    out = {}
    for p in _SMALL_PRIMES:
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
    stack = [n] if n > 1 else []
    while stack:
        m = stack.pop()
        if m == 1:
            continue
        if is_prime(m):
            out[m] = out.get(m, 0) + 1
            continue
        d = _pollard_brent(m)
        stack.append(d)
        stack.append(m // d)
    return dict(sorted(out.items()))


def divisors_sorted(n):
    """All positive divisors of n in increasing order."""
    fac = factor(n) if isinstance(n, int) else dict(n)
    divs = [1]
    for p, e in fac.items():
        divs = [d * p**k for d in divs for k in range(e + 1)]
    return sorted(divs)
