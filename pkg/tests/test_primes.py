import random

import pytest

from normmod import primes


def _sieve(limit):
    flags = bytearray([1]) * (limit + 1)
    flags[0:2] = b"\x00\x00"
    for i in range(2, int(limit**0.5) + 1):
        if flags[i]:
            flags[i * i :: i] = b"\x00" * len(flags[i * i :: i])
    return {i for i, f in enumerate(flags) if f}


def test_is_prime_against_sieve():
    table = _sieve(10_000)
    for n in range(10_000):
        assert primes.is_prime(n) == (n in table)


def test_known_large_cases():
    assert primes.is_prime(2**61 - 1)
    assert not primes.is_prime(3215031751)  # strong pseudoprime to 2,3,5,7
    assert not primes.is_prime(341550071728321)  # spsp to the first 7 primes
    assert primes.is_prime(571397)
    assert not primes.is_prime(285701)  # 13 * 21977


def test_certainty_tiers():
    assert primes.prime_certainty(10**9 + 7) == "deterministic"
    assert primes.prime_certainty(3.3e24.__trunc__() * 10) == "probabilistic"


def test_next_prime():
    assert primes.next_prime(1) == 2
    assert primes.next_prime(2) == 3
    assert primes.next_prime(14) == 17
    assert primes.next_prime(571396) == 571397


def test_factor_round_trip():
    rng = random.Random(23)
    for _ in range(40):
        n = rng.randint(2, 10**9)
        fac = primes.factor(n)
        prod = 1
        for p, e in fac.items():
            assert primes.is_prime(p)
            prod *= p**e
        assert prod == n


def test_factor_semiprimes():
    assert primes.factor(10403) == {101: 1, 103: 1}
    # 2^67 - 1, Cole's factorization
    assert primes.factor(2**67 - 1) == {193707721: 1, 761838257287: 1}


def test_divisors_sorted():
    assert primes.divisors_sorted(12) == [1, 2, 3, 4, 6, 12]
    assert primes.divisors_sorted(1) == [1]
    assert primes.divisors_sorted(97) == [1, 97]
    divs = primes.divisors_sorted(2**4 * 3**2)
    assert len(divs) == 15 and divs == sorted(divs)


def test_factor_rejects_nonpositive():
    with pytest.raises(ValueError):
        primes.factor(0)
