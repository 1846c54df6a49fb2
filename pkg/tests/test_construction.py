import random
import time
from fractions import Fraction
from math import gcd

import pytest

from normmod import (
    NumberField,
    Order,
    SearchExhaustedError,
    build_counterexample,
    certificate_from_text,
    certificate_to_text,
    coset_order,
    crt_exponents,
    functional_gram_det,
    functional_kernel_module,
    intersect_modules,
    kernel_ring_condition,
    module_from_generators,
    multiplier_ring,
    next_faithful_prime,
    power_in_module,
    progression_params,
    scaled_monomial_module,
    scaled_monomial_order,
    shifted_order,
    unit_exponent_poly,
    verify_certificate,
)
from normmod import polys
from normmod.construction import PrimeSequence, _power_basis_order


def test_unit_exponent_poly():
    assert unit_exponent_poly(1) == [-1, 1]
    g3 = unit_exponent_poly(3)
    assert polys.degree(g3) == 6  # r(r+1)/2
    assert polys.evaluate(g3, 2) == 21  # 1 * 3 * 7
    assert polys.evaluate(g3, 5) == 11904  # 4 * 24 * 124
    with pytest.raises(ValueError):
        unit_exponent_poly(0)


def test_progression_params():
    p3 = progression_params(3)
    assert (p3.anchor, p3.base_value, p3.modulus) == (5, 11904, 285696)
    p2 = progression_params(2)
    assert (p2.anchor, p2.base_value, p2.modulus) == (5, 96, 576)
    assert gcd(p3.modulus, p3.anchor) == 1


def test_progression_keeps_quotient_integral():
    params = progression_params(3)
    g = unit_exponent_poly(3)
    for k in (1, 2, 7):
        x = params.anchor + k * params.modulus
        value = polys.evaluate(g, x)
        assert value % params.base_value == 0
        assert value % params.modulus == params.base_value % params.modulus


def test_next_faithful_prime():
    seq = PrimeSequence(params=progression_params(3))
    p1 = next_faithful_prime(seq, avoid_disc=-108, max_steps=5)
    assert p1 == 571397  # anchor itself fails the real-root condition
    p2 = next_faithful_prime(seq, avoid_disc=-108, max_steps=25)
    assert p2 == 6285317
    assert len(seq.product_values) == 2
    assert gcd(seq.product_values[0], seq.product_values[1]) == 1
    assert all(v > 1 for v in seq.product_values)
    assert all(p % 285696 == 5 for p in seq.found)


def test_next_faithful_prime_avoids_disc():
    # with 571397 dividing the discriminant the first prime is skipped, and
    # 1142789 no longer conflicts with anyone's quotient value
    seq = PrimeSequence(params=progression_params(3))
    p = next_faithful_prime(seq, avoid_disc=571397 * 3, max_steps=25)
    assert p == 1142789 and p % 285696 == 5


def test_next_faithful_prime_exhaustion():
    seq = PrimeSequence(params=progression_params(3))
    with pytest.raises(SearchExhaustedError):
        next_faithful_prime(seq, max_steps=1)


def test_coset_order_worked_examples(cubic, eps):
    one = cubic.one()
    assert coset_order(eps, scaled_monomial_order(eps, one, 2)) == 4
    assert coset_order(eps, scaled_monomial_order(eps, one, 3)) == 3
    power_order = _power_basis_order(eps)
    assert coset_order(eps, power_order) == 1
    assert coset_order(eps, scaled_monomial_order(eps, one, 7)) == 19


def test_coset_order_divisor_hint_agrees(cubic, eps):
    one = cubic.one()
    for n, expected in ((2, 4), (3, 3), (5, 8), (7, 19), (11, 40), (13, 61)):
        ring = scaled_monomial_order(eps, one, n)
        assert coset_order(eps, ring) == expected
        for multiple in (1, 2, 6):
            assert coset_order(eps, ring, divisor_hint=expected * multiple) == expected


def test_coset_order_divisibility_tower(cubic, eps):
    # eps^t in Z + abO forces eps^t in Z + aO, so the small order divides
    one = cubic.one()
    orders = {n: coset_order(eps, scaled_monomial_order(eps, one, n)) for n in (2, 3, 4, 6, 12)}
    assert orders[4] % orders[2] == 0
    assert orders[6] % orders[2] == 0
    assert orders[6] % orders[3] == 0
    assert orders[12] % orders[6] == 0


def test_coset_order_validates_unit(cubic):
    with pytest.raises(ValueError):
        coset_order(cubic.theta(), _power_basis_order(cubic.theta()))  # norm 2


def test_crt_exponents():
    assert crt_exponents([4, 3]) == {(): 1, (1,): 4, (2,): 9, (1, 2): 12}
    out = crt_exponents([2, 3, 5])
    assert out[(2,)] == 21  # 1 mod 2, 0 mod 3, 1 mod 5
    assert out[(1, 2, 3)] == 30
    assert list(crt_exponents([4, 3]).keys()) == [(), (1,), (2,), (1, 2)]
    values = list(crt_exponents([4, 3, 19]).values())
    assert len(set(v % 228 for v in values)) == 8  # distinct residues
    assert all(1 <= v <= 228 for v in values)
    with pytest.raises(ValueError):
        crt_exponents([4, 6])
    with pytest.raises(ValueError):
        crt_exponents([1, 3])


def test_scaled_monomial_module(cubic, eps):
    one = cubic.one()
    m6 = scaled_monomial_module(eps, one, 6)
    assert m6.lattice.basis == ((1, 0, 0), (0, 1, 0), (0, 0, 6))
    m1 = scaled_monomial_module(eps, one, 1)
    assert m1.lattice == _power_basis_order(eps).lattice
    assert m6.rank == 3


def test_scaled_monomial_two_generators(quartic):
    th = quartic.theta()
    m = scaled_monomial_module(th**2, th, 5)
    assert m.lattice.basis == (
        (1, 0, 0, 0),
        (0, 1, 0, 0),
        (0, 0, 1, 0),
        (0, 0, 0, 5),
    )
    ring = scaled_monomial_order(th**2, th, 5)
    assert ring.lattice == multiplier_ring(m).lattice


def test_scaled_monomial_rejects_non_monic(pell_field):
    th = pell_field.theta()
    with pytest.raises(ValueError):
        # theta = (1/2) * (2 theta): second generator not integral over Z[2 theta]
        scaled_monomial_module(th * 2, th, 3)


def test_scaled_monomial_rejects_non_integral(cubic):
    with pytest.raises(ValueError):
        scaled_monomial_module(cubic.theta() / 2, cubic.one(), 3)


def test_closed_form_ring_matches_generic(cubic, eps, quartic):
    one3 = cubic.one()
    for n in range(2, 13):
        closed = scaled_monomial_order(eps, one3, n)
        generic = multiplier_ring(scaled_monomial_module(eps, one3, n))
        assert closed.lattice == generic.lattice
    th = quartic.theta()
    for n in range(2, 13):
        closed = scaled_monomial_order(th, quartic.one(), n)
        generic = multiplier_ring(scaled_monomial_module(th, quartic.one(), n))
        assert closed.lattice == generic.lattice


def test_intersection_identities(cubic, eps):
    rng = random.Random(83)
    one = cubic.one()
    from math import lcm

    for _ in range(25):
        ks = [rng.randint(2, 30) for _ in range(rng.randint(2, 3))]
        modules = [scaled_monomial_module(eps, one, k) for k in ks]
        rings = [scaled_monomial_order(eps, one, k) for k in ks]
        cap_m = modules[0]
        for m in modules[1:]:
            cap_m = intersect_modules(cap_m, m)
        cap_o = rings[0]
        for o in rings[1:]:
            cap_o = intersect_modules(cap_o, o)
        target = lcm(*ks)
        assert cap_m.lattice == scaled_monomial_module(eps, one, target).lattice
        assert cap_o.lattice == scaled_monomial_order(eps, one, target).lattice


def test_unit_power_lands_in_shifted_order(cubic, eps):
    # eta^11904 lies in Z + 5 Z[eta]: the quotient g(5)/base is 1
    start = time.perf_counter()
    order5 = shifted_order(_power_basis_order(eps), 5)
    assert power_in_module(eps, 11904, order5)
    assert time.perf_counter() - start < 0.1

    # independent oracle: power (x - 1) mod (x^3 - 2, 5), then change basis
    def mulmod5(a, b):
        prod = [0] * 5
        for i in range(3):
            for j in range(3):
                prod[i + j] += a[i] * b[j]
        return [(prod[0] + 2 * prod[3]) % 5, (prod[1] + 2 * prod[4]) % 5, prod[2] % 5]

    acc, base, e = [1, 0, 0], [4, 1, 0], 11904
    while e:
        if e & 1:
            acc = mulmod5(acc, base)
        e >>= 1
        if e:
            base = mulmod5(base, base)
    # coordinates in basis (1, eta, eta^2): c = v2, b = v1 + 2 v2 (mod 5)
    assert (acc[1] + 2 * acc[2]) % 5 == 0 and acc[2] % 5 == 0


def test_build_counterexample_n1(cubic, eps):
    cert = build_counterexample(cubic, eps, 1, mode="direct", prime_bound=50)
    assert cert.primes == [2] and cert.coset_orders == [4]
    assert cert.exponents == {(): 1, (1,): 4}
    assert cert.units[()] == eps and cert.units[(1,)] == eps**4
    assert verify_certificate(cert).ok


def test_build_counterexample_worked_example(cubic, eps):
    cert = build_counterexample(cubic, eps, 2, mode="direct", prime_bound=50)
    assert cert.primes == [2, 3]
    assert cert.coset_orders == [4, 3]
    assert cert.module.lattice.basis == ((1, 0, 0), (0, 1, 0), (0, 0, 6))
    assert cert.exponents == {(): 1, (1,): 4, (2,): 9, (1, 2): 12}
    assert len(cert.units) == 4
    result = verify_certificate(cert)
    assert result.ok and result.failed_labels() == []


def test_build_counterexample_n3(cubic, eps):
    cert = build_counterexample(cubic, eps, 3, mode="direct", prime_bound=200)
    assert cert.primes == [2, 3, 7]
    assert cert.coset_orders == [4, 3, 19]
    assert len(cert.units) == 8
    assert verify_certificate(cert).ok


def test_build_counterexample_rejects_bad_eta(cubic, quartic):
    with pytest.raises(ValueError):
        build_counterexample(cubic, cubic.theta(), 1)  # norm 2
    with pytest.raises(ValueError):
        build_counterexample(cubic, cubic.one(), 1)  # root of unity
    th = quartic.theta()
    nongen = quartic.one() + th**2  # norm-1 unit of the quadratic subfield
    assert nongen.is_norm1_unit()
    with pytest.raises(ValueError):
        build_counterexample(quartic, nongen, 1)


def test_build_counterexample_exhaustion(cubic, eps):
    with pytest.raises(SearchExhaustedError):
        build_counterexample(cubic, eps, 3, mode="direct", prime_bound=5)


def test_hand_built_prime3_certificate(cubic, eps):
    # the N = 1 instance with prime 3: units {eps, eps^3}, orders (3)
    from normmod.construction import CounterexampleCertificate

    one = cubic.one()
    cert = CounterexampleCertificate(
        field=cubic,
        eta=eps,
        epsilon=eps,
        mode="direct",
        primes=[3],
        coset_orders=[3],
        module=scaled_monomial_module(eps, one, 3),
        coeff_ring=scaled_monomial_order(eps, one, 3),
        exponents={(): 1, (1,): 3},
        units={(): eps, (1,): eps**3},
    )
    assert verify_certificate(cert).ok


def test_faithful_mode(cubic, eps):
    cert = build_counterexample(cubic, eps, 1, mode="faithful", prime_bound=10)
    assert cert.primes == [571397]
    assert cert.primes[0] % 285696 == 5
    assert cert.coset_orders == [1943419831]
    params = progression_params(3)
    assert cert.epsilon == eps**params.base_value
    assert cert.exponents == {(): 1, (1,): 1943419831}
    assert cert.units[()] == cert.epsilon
    assert cert.units[(1,)] is None  # too large to materialize
    result = verify_certificate(cert)
    assert result.ok, result.failed_labels()


def test_faithful_round_trip(cubic, eps):
    cert = build_counterexample(cubic, eps, 1, mode="faithful", prime_bound=10)
    text = certificate_to_text(cert)
    assert "epsilon^1943419831" in text
    again = certificate_from_text(text)
    assert verify_certificate(again).ok


def test_certificate_text_golden(cubic, eps):
    cert = build_counterexample(cubic, eps, 2, mode="direct", prime_bound=50)
    expected = """[field]
-2,0,0,1
[eta]
-1,1,0
[epsilon]
-1,1,0
[mode]
direct
[primes]
2,3
[coset-orders]
4,3
[module]
den=1
1,0,0;0,1,0;0,0,6
[coeff-ring]
den=1
1,0,0;0,6,0;0,0,6
[exponents]
S={}: 1
S={1}: 4
S={2}: 9
S={1,2}: 12
[units]
-1,1,0
-7,-2,6
-161,-99,180
1513,-1662,366
"""
    assert certificate_to_text(cert) == expected
    again = certificate_from_text(expected)
    assert verify_certificate(again).ok


def test_certificate_parse_errors(cubic, eps):
    from normmod import CertificateFormatError

    cert = build_counterexample(cubic, eps, 2, mode="direct", prime_bound=50)
    text = certificate_to_text(cert)
    with pytest.raises(CertificateFormatError):
        certificate_from_text(text.replace("[units]\n", "[units]\n-1,1,0\n"))
    with pytest.raises(CertificateFormatError):
        certificate_from_text(text.replace("[mode]\ndirect\n", "[mode]\nsideways\n"))
    with pytest.raises(CertificateFormatError):
        certificate_from_text(text.replace("[eta]\n-1,1,0\n", ""))
    with pytest.raises(CertificateFormatError):
        certificate_from_text(text + "[field]\n-2,0,0,1\n")


def test_verify_flags_tampering(cubic, eps):
    cert = build_counterexample(cubic, eps, 2, mode="direct", prime_bound=50)
    text = certificate_to_text(cert)
    bad = certificate_from_text(text.replace("4,3", "4,6"))
    result = verify_certificate(bad)
    assert not result.ok and "(c)" in result.failed_labels()


# -- kernel modules -----------------------------------------------------------


@pytest.fixture()
def unit_order():
    field = NumberField([-1, 3, 3, 1])  # power basis of the unit itself
    u = field.theta()
    order = Order(field, module_from_generators(
        field, [field.one(), u, u * u]).lattice)
    return field, u, order


def test_functional_gram_det(unit_order):
    field, u, order = unit_order
    basis = [field.one(), u, u * u]
    assert functional_gram_det(order, [0, 1, 0], basis=basis) == -10
    # basis independence: the canonical basis covector gives the same det
    assert functional_gram_det(order, [0, 1, 0]) == functional_gram_det(
        order, [0, 1, 0], basis=order.basis_elements()
    )


def test_functional_kernel_module(unit_order):
    field, u, order = unit_order
    basis = [field.one(), u, u * u]
    km = functional_kernel_module(order, [0, 1, 0], 3, basis=basis)
    expected = module_from_generators(field, [field.one(), u * 3, u * u])
    assert km.lattice == expected.lattice
    assert km.is_full()
    assert functional_kernel_module(order, [0, 1, 0], 1, basis=basis).lattice == order.lattice
    for n in (2, 3, 4, 7, 9):
        assert functional_kernel_module(order, [0, 1, 0], n, basis=basis).rank == 3


def test_functional_kernel_preconditions(unit_order):
    field, u, order = unit_order
    basis = [field.one(), u, u * u]
    with pytest.raises(ValueError):
        functional_kernel_module(order, [0, 0, 0], 3, basis=basis)
    with pytest.raises(ValueError):
        functional_kernel_module(order, [1, 0, 0], 3, basis=basis)  # phi(1) != 0
    with pytest.raises(ValueError):
        functional_kernel_module(order, [0, 1, 0], 3, basis=basis, unit=u)  # phi(u) = 1
    # u^2 is a designated unit the functional kills
    km = functional_kernel_module(order, [0, 1, 0], 3, basis=basis, unit=u * u)
    assert km.contains(u * u)


def test_kernel_ring_condition_and_multiplier(unit_order):
    field, u, order = unit_order
    basis = [field.one(), u, u * u]
    for n in (3, 7, 9):
        assert kernel_ring_condition(order, [0, 1, 0], n, basis=basis)
        km = functional_kernel_module(order, [0, 1, 0], n, basis=basis)
        assert multiplier_ring(km).lattice == shifted_order(order, n).lattice
    assert not kernel_ring_condition(order, [0, 1, 0], 5, basis=basis)


def test_covector_basis_validation(unit_order):
    field, u, order = unit_order
    short = [field.one(), u]
    with pytest.raises(ValueError):
        functional_gram_det(order, [0, 1, 0], basis=short + [u * Fraction(1, 2)])
