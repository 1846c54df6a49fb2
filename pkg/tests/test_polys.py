import random
from fractions import Fraction

import pytest

from normmod import linalg, polys


def test_trim_and_degree():
    assert polys.trim([0, 1, 0, 0]) == [0, 1]
    assert polys.trim([0, 0]) == []
    assert polys.degree([]) == -1
    assert polys.degree([5]) == 0
    assert polys.degree([-2, 0, 0, 1]) == 3


def test_arithmetic_round_trip():
    rng = random.Random(7)
    for _ in range(50):
        p = [rng.randint(-9, 9) for _ in range(rng.randint(1, 6))]
        q = [rng.randint(-9, 9) for _ in range(rng.randint(1, 6))]
        assert polys.mul(p, q) == polys.mul(q, p)
        assert polys.add(polys.sub(p, q), q) == polys.trim(p)
        x = rng.randint(-5, 5)
        assert polys.evaluate(polys.mul(p, q), x) == polys.evaluate(p, x) * polys.evaluate(q, x)


def test_divmod_exact_reconstructs():
    rng = random.Random(11)
    for _ in range(50):
        d = [rng.randint(-5, 5) for _ in range(rng.randint(1, 4))] + [1]
        p = [rng.randint(-9, 9) for _ in range(rng.randint(1, 7))]
        quo, rem = polys.divmod_exact(p, d)
        back = polys.add(polys.mul(quo, d), rem)
        assert back == [Fraction(c) for c in polys.trim(p)]
        assert polys.degree(rem) < polys.degree(d)


def test_int_det_matches_fraction_det():
    # Bareiss vs. Gaussian elimination: two independent determinant routes
    rng = random.Random(13)
    for _ in range(40):
        n = rng.randint(1, 5)
        mat = [[rng.randint(-9, 9) for _ in range(n)] for _ in range(n)]
        assert polys.int_det(mat) == linalg.det(mat)


def test_resultant_and_discriminant():
    # disc(x^3 + q) = -27 q^2 by the cubic formula
    assert polys.discriminant([-2, 0, 0, 1]) == -108
    # disc(x^2 + bx + c) = b^2 - 4c
    assert polys.discriminant([-2, 0, 1]) == 8
    assert polys.discriminant([1, 0, 1]) == -4
    # shifting x -> x+1 permutes nothing: same roots pairwise differences
    assert polys.discriminant([-1, 3, 3, 1]) == -108


def test_resultant_multiplicativity():
    rng = random.Random(17)
    for _ in range(20):
        f = [rng.randint(-4, 4) for _ in range(rng.randint(1, 3))] + [1]
        g = [rng.randint(-4, 4) for _ in range(rng.randint(1, 3))] + [1]
        h = [rng.randint(-4, 4) for _ in range(rng.randint(1, 3))] + [1]
        lhs = polys.resultant(f, polys.mul(g, h))
        assert lhs == polys.resultant(f, g) * polys.resultant(f, h)


@pytest.mark.parametrize(
    "poly,expected",
    [
        ([-2, 0, 0, 1], True),  # x^3 - 2
        ([-2, 0, 0, 0, 1], True),  # x^4 - 2
        ([1, 0, 1], True),  # x^2 + 1
        ([-1, 3, 3, 1], True),  # x^3 + 3x^2 + 3x - 1
        ([1, 1, 1, 1, 1], True),  # fifth cyclotomic
        ([-1, 0, 0, 1], False),  # x^3 - 1 = (x-1)(x^2+x+1)
        ([4, 0, 0, 0, 1], False),  # x^4 + 4 = (x^2-2x+2)(x^2+2x+2)
        ([-4, 0, 1], False),  # x^2 - 4
        ([6, 0, -5, 0, 1], False),  # (x^2-2)(x^2-3)
        ([0, 1, 1], False),  # x^2 + x
    ],
)
def test_irreducibility(poly, expected):
    assert polys.is_irreducible_monic(poly) is expected


def test_irreducibility_rejects_bad_input():
    with pytest.raises(ValueError):
        polys.is_irreducible_monic([1, 2])  # not monic
    with pytest.raises(ValueError):
        polys.is_irreducible_monic([Fraction(1, 2), 1])


def test_real_root_counting():
    both = polys.mul([-2, 0, 1], [-3, 0, 1])  # roots at +-sqrt2, +-sqrt3
    assert polys.count_roots_greater(both, 0) == 2
    assert polys.count_roots_greater(both, 2) == 0
    assert polys.count_roots_greater(both, Fraction(3, 2)) == 1
    assert not polys.has_real_root_at_least([1, 0, 1], -10)  # x^2 + 1
    assert polys.has_real_root_at_least(both, 1)


def test_real_roots_of_progression_poly():
    # g_3(X) - g_3(5) has largest real root exactly 5
    g = [1]
    for i in (1, 2, 3):
        g = polys.mul(g, [-1] + [0] * (i - 1) + [1])
    shifted = polys.sub(g, [polys.evaluate(g, 5)])
    assert polys.has_real_root_at_least(shifted, 5)
    assert not polys.has_real_root_at_least(shifted, 6)
    assert not polys.has_real_root_at_least(shifted, Fraction(51, 10))


def test_euler_phi():
    values = {1: 1, 2: 1, 3: 2, 4: 2, 6: 2, 8: 4, 9: 6, 12: 4, 30: 8}
    for n, expected in values.items():
        assert polys.euler_phi(n) == expected
