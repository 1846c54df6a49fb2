"""Construction and verification of modules with many pairwise non-associates.

The builder produces a certificate: a full module M in a number field K,
a norm-1 unit eps, primes k_1..k_N with coset orders l_1..l_N (the least
t with eps^t in the coefficient ring of the scaled monomial module for
k_i), and 2^N exponents a_S from the Chinese Remainder Theorem.  The
units eps^{a_S} then lie in M and are pairwise non-associate, and
verify_certificate re-derives every one of these claims from scratch.

Two modes are supported.  Direct mode takes eps equal to the supplied
unit and searches small primes whose coset orders happen to be coprime.
Faithful mode raises the unit to a fixed power first and draws primes
from an arithmetic progression; the coset orders then divide provably
coprime integers, at the price of much larger numbers (the certificate
stores units of that size as explicit powers rather than coordinates).
"""

from dataclasses import dataclass, field as dataclass_field
from fractions import Fraction
from math import factorial, gcd, lcm

from . import linalg, polys, primes
from .fields import (
    FieldElement,
    NumberField,
    format_element,
    format_poly,
    parse_element,
    parse_poly,
)
from .lattices import ZLattice, integer_kernel, lattice_from_text, lattice_to_text
from .modules import (
    Order,
    PowerMembership,
    ZModule,
    intersect_modules,
    is_norm1_unit_of_order,
    multiplier_ring,
    power_in_module,
)

# a certificate stores a unit's coordinates only below this many digits;
# beyond it the unit is recorded as an explicit power of eps
MATERIALIZE_DIGIT_LIMIT = 200_000

COSET_SEARCH_BOUND = 10**6


class SearchExhaustedError(RuntimeError):
    pass


class CertificateFormatError(ValueError):
    pass


# -- the prime progression ------------------------------------------------------


def unit_exponent_poly(r):
    """Product of (X^i - 1) for i = 1..r, as an integer coefficient list.

    Evaluated at a prime p, the result is a multiple of the order of every
    unit in every residue field of degree <= r over Z/p.
    """
    if r < 1:
        raise ValueError("degree must be >= 1")
    out = [1]
    for i in range(1, r + 1):
        term = [-1] + [0] * (i - 1) + [1]  # X^i - 1
        out = polys.mul(out, term)
    return out


@dataclass(frozen=True)
class ProgressionParams:
    """Arithmetic progression whose primes keep g(p)/base_value integral.

    anchor is the least prime above degree+1, base_value = g(anchor), and
    modulus = base_value * (degree+1)!; every x congruent to anchor mod
    modulus has g(x) divisible by base_value.
    """

    degree: int
    anchor: int
    base_value: int
    modulus: int


def progression_params(r):
    if r < 2:
        raise ValueError("degree must be >= 2")
    g = unit_exponent_poly(r)
    anchor = primes.next_prime(r + 1)
    base_value = polys.evaluate(g, anchor)
    modulus = base_value * factorial(r + 1)
    if gcd(modulus, anchor) != 1:
        raise AssertionError("anchor prime must not divide the modulus")
    return ProgressionParams(degree=r, anchor=anchor, base_value=base_value, modulus=modulus)


@dataclass
class PrimeSequence:
    """State of the faithful prime search (or a plain prime stream)."""

    params: ProgressionParams
    mode: str = "faithful"
    found: list = dataclass_field(default_factory=list)
    product_values: list = dataclass_field(default_factory=list)

    def next_plain_prime(self):
        p = primes.next_prime(self.found[-1] if self.found else 1)
        self.found.append(p)
        return p


def next_faithful_prime(seq, avoid_disc=1, max_steps=200):
    """Smallest usable progression prime above the last one found.

    Usable means: prime, congruent to the anchor, larger than every real
    root of g(X) - base_value (so the quotient exceeds 1), not dividing
    avoid_disc, and with g(p)/base_value coprime to all previous quotient
    values.  max_steps bounds how many progression terms are examined.
    """
    if seq.mode != "faithful":
        raise ValueError("faithful search on a non-faithful sequence")
    params = seq.params
    g = unit_exponent_poly(params.degree)
    shifted = polys.sub(g, [params.base_value])
    start = seq.found[-1] if seq.found else 0
    for k in range(max_steps + 1):
        p = params.anchor + k * params.modulus
        if p <= start or not primes.is_prime(p):
            continue
        if avoid_disc and abs(avoid_disc) % p == 0:
            continue
        if polys.has_real_root_at_least(shifted, p):
            continue
        value = polys.evaluate(g, p)
        if value % params.base_value:
            raise AssertionError("progression must keep the quotient integral")
        value //= params.base_value
        if any(gcd(value, prev) != 1 for prev in seq.product_values):
            continue
        if value <= 1:
            continue
        seq.found.append(p)
        seq.product_values.append(value)
        return p
    raise SearchExhaustedError(
        f"no usable prime within {max_steps} progression steps"
    )


# -- scaled monomial modules ------------------------------------------------------


def _monomial_data(alpha1, alpha2):
    """Validate the two generators and return (r1, r2, monomials).

    alpha1 must be an algebraic integer; alpha2 must generate the rest of
    the field over Q(alpha1) with a minimal polynomial that is monic with
    coefficients in Z[alpha1]; together the monomials alpha1^i alpha2^j
    form a Q-basis of the field.
    """
    field = alpha1.field
    if alpha2.field != field:
        raise ValueError("generators from different fields")
    if not alpha1.is_algebraic_integer():
        raise ValueError("alpha1 must be an algebraic integer")
    r = field.degree
    r1 = polys.degree([c for c in alpha1.min_poly()])
    if r % r1:
        raise ValueError("degree of alpha1 must divide the field degree")
    r2 = r // r1
    monomials = {}
    for i in range(r1):
        for j in range(r2):
            monomials[(i, j)] = alpha1**i * alpha2**j
    mat = [list(monomials[(i, j)].coords) for i in range(r1) for j in range(r2)]
    if linalg.rank(mat) != r:
        raise ValueError("monomials in alpha1, alpha2 do not span the field")
    # minimal polynomial of alpha2 over Q(alpha1) must be monic over Z[alpha1]:
    # express alpha2^r2 in the monomial basis and demand integer coordinates
    target = list((alpha2**r2).coords)
    sol = linalg.solve(linalg.transpose(mat), target)
    if sol is None or any(c.denominator != 1 for c in sol):
        raise ValueError(
            "minimal polynomial of alpha2 over Z[alpha1] is not monic integral"
        )
    return r1, r2, monomials


def scaled_monomial_module(alpha1, alpha2, n):
    """Full module spanned by the monomials, with the top one scaled by n."""
    if n < 1:
        raise ValueError("scale must be a positive integer")
    r1, r2, monomials = _monomial_data(alpha1, alpha2)
    gens = []
    for (i, j), m in monomials.items():
        if (i, j) == (r1 - 1, r2 - 1):
            gens.append(m * n)
        else:
            gens.append(m)
    return ZModule.from_generators(alpha1.field, gens)


def scaled_monomial_order(alpha1, alpha2, n):
    """Closed form of the coefficient ring: 1 plus n times each monomial."""
    if n < 1:
        raise ValueError("scale must be a positive integer")
    r1, r2, monomials = _monomial_data(alpha1, alpha2)
    gens = [alpha1.field.one()]
    for (i, j), m in monomials.items():
        if (i, j) != (0, 0):
            gens.append(m * n)
    mod = ZModule.from_generators(alpha1.field, gens)
    return Order(mod.field, mod.lattice)


# -- coset orders and exponents ---------------------------------------------------


def coset_order(eps, order, search_bound=COSET_SEARCH_BOUND, divisor_hint=None):
    """Least t >= 1 with eps^t inside the order.

    With divisor_hint (a known multiple of the answer) the divisors of the
    hint are tried in increasing order; otherwise the powers of eps are
    walked one by one with coordinates kept reduced, so they never grow.
    """
    if eps.norm() != 1 or not eps.is_algebraic_integer():
        raise ValueError("coset orders are defined for norm-1 unit arguments")
    member = PowerMembership(eps, order)
    if divisor_hint is not None:
        for t in primes.divisors_sorted(divisor_hint):
            if member(t):
                return t
        raise SearchExhaustedError("divisor hint exhausted without membership")
    t = member.first_power_in(search_bound)
    if t is None:
        raise SearchExhaustedError(f"no membership up to t = {search_bound}")
    return t


def crt_exponents(coset_orders):
    """CRT exponents a_S for every subset S of {1..N}.

    a_S is the smallest positive solution of a == 0 mod l_i for i in S and
    a == 1 mod l_i otherwise; the all-zeros class comes out as lcm(l_i)
    rather than 0 so that every emitted unit is a nontrivial power.
    Subsets are keyed by sorted tuples and generated in binary-counter
    order (bit i-1 of the counter toggles membership of i).
    """
    orders = list(coset_orders)
    if any(l <= 1 for l in orders):
        raise ValueError("coset orders must all exceed 1")
    for i, a in enumerate(orders):
        for b in orders[i + 1 :]:
            if gcd(a, b) != 1:
                raise ValueError("coset orders must be pairwise coprime")
    n = len(orders)
    total = 1
    for l in orders:
        total *= l
    out = {}
    for mask in range(1 << n):
        subset = tuple(i + 1 for i in range(n) if mask >> i & 1)
        a = 0
        for i, l in enumerate(orders):
            res = 0 if (i + 1) in subset else 1
            m_i = total // l
            a += res * m_i * pow(m_i, -1, l)
        a %= total
        out[subset] = a if a else total
    return out


# -- certificates -----------------------------------------------------------------


@dataclass
class CounterexampleCertificate:
    """Everything needed to re-check the construction offline."""

    field: NumberField
    eta: FieldElement
    epsilon: FieldElement
    mode: str
    primes: list
    coset_orders: list
    module: ZModule
    coeff_ring: Order
    exponents: dict  # subset tuple -> exponent
    units: dict  # subset tuple -> FieldElement or None when not materialized

    @property
    def n_primes(self):
        return len(self.primes)


def _power_basis_order(eps):
    field = eps.field
    cols = []
    cur = field.one()
    for _ in range(field.degree):
        cols.append(cur.coords)
        cur = cur * eps
    mod = ZModule.from_generators(field, [field.element(c) for c in cols])
    return Order(field, mod.lattice)


def _materialize(eps, exponent):
    """eps^exponent, or None when the coordinates would be absurdly large."""
    coords = eps.integer_coords()
    digits = max(len(str(abs(c))) for c in coords) if coords else 64
    if exponent * digits > MATERIALIZE_DIGIT_LIMIT:
        return None
    return eps**exponent


def build_counterexample(field, eta, n_primes, mode="direct", prime_bound=50):
    """Assemble a certificate with 2^N pairwise non-associate norm-1 units.

    eta must be a norm-1 unit of infinite order generating the field.  In
    direct mode the primes are the smallest ones (up to prime_bound) whose
    coset orders are > 1 and pairwise coprime.  In faithful mode eps is
    eta raised to the progression's base power and primes come from
    next_faithful_prime, with prime_bound capping the progression steps.
    """
    if n_primes < 1:
        raise ValueError("need at least one prime")
    if mode not in ("direct", "faithful"):
        raise ValueError("mode must be 'direct' or 'faithful'")
    if not eta.is_norm1_unit():
        raise ValueError("eta must be an algebraic integer of norm 1")
    if eta.is_root_of_unity():
        raise ValueError("eta must not be a root of unity")
    if polys.degree(eta.min_poly()) != field.degree:
        raise ValueError("eta must generate the field")

    one = field.one()
    if mode == "direct":
        eps = eta
        accepted, orders = [], []
        p = 1
        while len(accepted) < n_primes:
            p = primes.next_prime(p)
            if p > prime_bound:
                raise SearchExhaustedError(
                    f"fewer than {n_primes} usable primes below {prime_bound}"
                )
            ring = scaled_monomial_order(eps, one, p)
            l = coset_order(eps, ring)
            if l <= 1 or any(gcd(l, prev) != 1 for prev in orders):
                continue
            accepted.append(p)
            orders.append(l)
    else:
        params = progression_params(field.degree)
        eps = eta ** params.base_value
        if polys.degree(eps.min_poly()) != field.degree:
            raise ValueError(
                "the powered unit no longer generates the field; "
                "supply a different unit"
            )
        avoid = _power_basis_order(eps).disc
        seq = PrimeSequence(params=params)
        accepted, orders = [], []
        while len(accepted) < n_primes:
            p = next_faithful_prime(seq, avoid_disc=avoid, max_steps=prime_bound)
            ring = scaled_monomial_order(eps, one, p)
            l = coset_order(eps, ring, divisor_hint=seq.product_values[-1])
            if l <= 1 or any(gcd(l, prev) != 1 for prev in orders):
                continue  # cannot happen for faithful primes, but stay safe
            accepted.append(p)
            orders.append(l)

    modulus = lcm(*accepted) if len(accepted) > 1 else accepted[0]
    module = scaled_monomial_module(eps, one, modulus)
    intersection = None
    for p in accepted:
        m_p = scaled_monomial_module(eps, one, p)
        intersection = m_p if intersection is None else intersect_modules(intersection, m_p)
    if intersection.lattice != module.lattice:
        raise AssertionError("intersection disagrees with the lcm module")
    ring = scaled_monomial_order(eps, one, modulus)
    if mode == "direct" and multiplier_ring(module).lattice != ring.lattice:
        raise AssertionError("closed-form coefficient ring disagrees with the generic one")
    exponents = crt_exponents(orders)
    units = {s: _materialize(eps, a) for s, a in exponents.items()}
    return CounterexampleCertificate(
        field=field,
        eta=eta,
        epsilon=eps,
        mode=mode,
        primes=accepted,
        coset_orders=orders,
        module=module,
        coeff_ring=ring,
        exponents=exponents,
        units=units,
    )


# -- verification ------------------------------------------------------------------


@dataclass
class CheckResult:
    label: str
    ok: bool
    detail: str = ""


@dataclass
class VerificationResult:
    ok: bool
    checks: list

    def failed_labels(self):
        return [c.label for c in self.checks if not c.ok]


def verify_certificate(cert):
    """Re-check a certificate without trusting any stated value.

    The transcript labels follow the conditions of the underlying
    counting argument: (a) proper containment of each coefficient ring in
    its module, (b) eps in the module but not the ring, (c) recomputed
    coset orders, pairwise coprime and > 1, (d) the coefficient ring of
    the stated module equals the intersection of the per-prime rings;
    plus structural checks (format, unit, coeff-ring, exponents,
    membership, units, ratios).
    """
    checks = []

    def add(label, ok, detail=""):
        checks.append(CheckResult(label, bool(ok), detail))
        return ok

    n = cert.n_primes
    subsets_ok = list(cert.exponents.keys()) == _binary_counter_subsets(n)
    fmt_ok = (
        len(cert.coset_orders) == n
        and n >= 1
        and subsets_ok
        and list(cert.units.keys()) == list(cert.exponents.keys())
    )
    add("format", fmt_ok, "prime/order/exponent tables must line up")
    if not fmt_ok:
        return VerificationResult(False, checks)

    eps = cert.epsilon
    unit_ok = eps.is_norm1_unit() and not eps.is_root_of_unity()
    if cert.mode == "direct":
        unit_ok = unit_ok and eps == cert.eta
    else:
        params = progression_params(cert.field.degree)
        unit_ok = unit_ok and eps == cert.eta ** params.base_value
    add("unit", unit_ok, "eps must be a non-torsion norm-1 unit tied to eta")

    one = cert.field.one()
    per_prime_modules = []
    per_prime_rings = []
    build_err = None
    try:
        for p in cert.primes:
            m_p = scaled_monomial_module(eps, one, p)
            per_prime_modules.append(m_p)
            per_prime_rings.append(multiplier_ring(m_p))
    except (ValueError, ArithmeticError) as exc:
        build_err = str(exc)
    if build_err is not None:
        add("(a)", False, f"could not rebuild per-prime modules: {build_err}")
        return VerificationResult(False, checks)

    cond_a = all(
        all(m.contains(b) for b in o.basis_elements()) and o.lattice != m.lattice
        for o, m in zip(per_prime_rings, per_prime_modules)
    )
    add("(a)", cond_a, "each coefficient ring must sit strictly inside its module")

    cond_b = all(
        m.contains(eps) and not o.contains(eps)
        for o, m in zip(per_prime_rings, per_prime_modules)
    )
    add("(b)", cond_b, "eps must lie in each module but in none of the rings")

    hint_values = None
    if cert.mode == "faithful":
        params = progression_params(cert.field.degree)
        g = unit_exponent_poly(params.degree)
        hint_values = [
            polys.evaluate(g, p) // params.base_value for p in cert.primes
        ]
    cond_c = True
    detail_c = ""
    for i, (ring, stated) in enumerate(zip(per_prime_rings, cert.coset_orders)):
        hint = hint_values[i] if hint_values else None
        try:
            recomputed = coset_order(eps, ring, divisor_hint=hint)
        except (SearchExhaustedError, ValueError) as exc:
            cond_c, detail_c = False, str(exc)
            break
        if recomputed != stated:
            cond_c = False
            detail_c = f"coset order for prime {cert.primes[i]}: {recomputed} != {stated}"
            break
    if cond_c:
        ls = cert.coset_orders
        if any(l <= 1 for l in ls):
            cond_c, detail_c = False, "coset orders must exceed 1"
        elif any(
            gcd(ls[i], ls[j]) != 1 for i in range(n) for j in range(i + 1, n)
        ):
            cond_c, detail_c = False, "coset orders must be pairwise coprime"
    add("(c)", cond_c, detail_c)

    ring_of_module = None
    try:
        ring_of_module = multiplier_ring(cert.module)
    except (ValueError, ArithmeticError) as exc:
        add("(d)", False, f"stated module has no multiplier ring: {exc}")
    if ring_of_module is not None:
        ring_intersection = per_prime_rings[0]
        for o in per_prime_rings[1:]:
            ring_intersection = intersect_modules(ring_intersection, o)
        add(
            "(d)",
            ring_of_module.lattice == ring_intersection.lattice,
            "coefficient ring of the module must equal the intersection of the rings",
        )

    add(
        "coeff-ring",
        ring_of_module is not None and cert.coeff_ring.lattice == ring_of_module.lattice,
        "stated coefficient ring must match the recomputed one",
    )

    try:
        expected_exponents = crt_exponents(cert.coset_orders)
        add("exponents", cert.exponents == expected_exponents,
            "exponents must be the canonical CRT solutions")
    except ValueError as exc:
        add("exponents", False, str(exc))

    module_member = PowerMembership(eps, cert.module)
    membership_ok = all(module_member(a) for a in cert.exponents.values())
    add("membership", membership_ok, "every eps^a_S must lie in the module")

    units_ok = True
    for subset, stated_unit in cert.units.items():
        if stated_unit is None:
            continue  # recorded as an explicit power; nothing extra to compare
        expected = _materialize(eps, cert.exponents[subset])
        if expected is None or stated_unit != expected:
            units_ok = False
            break
    add("units", units_ok, "stated unit coordinates must equal eps^a_S")

    ratios_ok = True
    if ring_of_module is not None:
        ring_member = PowerMembership(eps, ring_of_module)
        exps = list(cert.exponents.values())
        for i in range(len(exps)):
            for j in range(i + 1, len(exps)):
                diff = abs(exps[i] - exps[j])
                if diff == 0 or ring_member(diff):
                    ratios_ok = False
                    break
            if not ratios_ok:
                break
    else:
        ratios_ok = False
    add("ratios", ratios_ok, "no ratio of two emitted units may lie in the ring")

    return VerificationResult(all(c.ok for c in checks), checks)


def _binary_counter_subsets(n):
    return [tuple(i + 1 for i in range(n) if mask >> i & 1) for mask in range(1 << n)]


# -- kernel modules (the more general construction) --------------------------------


def _canonical_covector(order, phi, basis):
    """Rewrite a covector given on `basis` against the canonical lattice basis.

    The functional itself is basis-independent; only its coordinate list
    changes.  With basis=None the covector already refers to the canonical
    basis.  Both bases generate the same lattice, so the change of basis
    is integral.
    """
    r = order.field.degree
    if len(phi) != r:
        raise ValueError("functional length must match the order rank")
    phi = [int(p) for p in phi]
    if basis is None:
        return phi
    mat = [list(b.coords) for b in basis]
    if len(basis) != r or linalg.rank(mat) != r:
        raise ValueError("basis must be r independent elements")
    out = []
    for elem in order.basis_elements():
        coords = linalg.solve(linalg.transpose(mat), list(elem.coords))
        if coords is None or any(c.denominator != 1 for c in coords):
            raise ValueError("given basis does not generate the order")
        out.append(sum(p * int(c) for p, c in zip(phi, coords)))
    # the reverse direction must be integral too for a genuine Z-basis
    for b in basis:
        if not order.contains(b):
            raise ValueError("given basis does not generate the order")
    return out


def functional_kernel_module(order, phi, n, basis=None, unit=None):
    """{x in O : phi(x) == 0 mod n} for a Z-linear functional on O.

    phi is the list of the functional's integer values on `basis` (the
    order's canonical basis when omitted); it must kill 1 (and the
    designated unit, when one is supplied) and must not vanish
    identically.  The result is always a full module.
    """
    if n < 1:
        raise ValueError("modulus must be a positive integer")
    phi = _canonical_covector(order, phi, basis)
    if not any(phi):
        raise ValueError("the functional must not vanish identically")
    r = order.field.degree

    def phi_of(element):
        coords = order.lattice.solve(element.coords)
        if coords is None:
            raise ValueError("functional applied outside the order")
        return sum(p * c for p, c in zip(phi, coords))

    if phi_of(order.field.one()) != 0:
        raise ValueError("the functional must vanish on 1")
    if unit is not None and phi_of(unit) != 0:
        raise ValueError("the functional must vanish on the designated unit")
    # kernel of [phi | n] in Z^(r+1), projected back onto the order coordinates
    ker = integer_kernel([list(phi) + [n]])
    coeff_cols = [kcol[:r] for kcol in ker.basis]
    den = order.lattice.den
    cols = []
    for c in coeff_cols:
        cols.append(
            [sum(ci * col[i] for ci, col in zip(c, order.lattice.basis)) for i in range(r)]
        )
    return ZModule(order.field, ZLattice.from_integer_columns(cols, r, den=den))


def functional_gram_det(order, phi, basis=None):
    """det of the matrix phi(w_i * w_j); independent of the basis choice."""
    phi = _canonical_covector(order, phi, basis)
    elems = order.basis_elements()
    rows = []
    for a in elems:
        row = []
        for b in elems:
            coords = order.lattice.solve((a * b).coords)
            if coords is None:
                raise ValueError("order is not multiplicatively closed")
            row.append(sum(p * c for p, c in zip(phi, coords)))
        rows.append(row)
    return polys.int_det(rows)


def kernel_ring_condition(order, phi, n, basis=None):
    """gcd(n, det phi(w_i w_j)) == 1: then the kernel's ring is Z + n*O."""
    return gcd(n, functional_gram_det(order, phi, basis)) == 1


def shifted_order(order, n):
    """The order Z + n*O inside the field of O."""
    field = order.field
    gens = [field.one()] + [b * n for b in order.basis_elements()]
    mod = ZModule.from_generators(field, gens)
    return Order(field, mod.lattice)


# -- certificate text format --------------------------------------------------------


_SECTIONS = (
    "field",
    "eta",
    "epsilon",
    "mode",
    "primes",
    "coset-orders",
    "module",
    "coeff-ring",
    "exponents",
    "units",
)


def _subset_key(subset):
    return "S={" + ",".join(str(i) for i in subset) + "}"


def certificate_to_text(cert):
    out = []
    out.append("[field]")
    out.append(format_poly(cert.field.min_poly))
    out.append("[eta]")
    out.append(format_element(cert.eta))
    out.append("[epsilon]")
    out.append(format_element(cert.epsilon))
    out.append("[mode]")
    out.append(cert.mode)
    out.append("[primes]")
    out.append(",".join(str(p) for p in cert.primes))
    out.append("[coset-orders]")
    out.append(",".join(str(l) for l in cert.coset_orders))
    out.append("[module]")
    out.append(lattice_to_text(cert.module.lattice))
    out.append("[coeff-ring]")
    out.append(lattice_to_text(cert.coeff_ring.lattice))
    out.append("[exponents]")
    for subset, a in cert.exponents.items():
        out.append(f"{_subset_key(subset)}: {a}")
    out.append("[units]")
    for subset, u in cert.units.items():
        if u is None:
            out.append(f"epsilon^{cert.exponents[subset]}")
        else:
            out.append(format_element(u))
    return "\n".join(out) + "\n"


def certificate_from_text(text):
    sections = {}
    current = None
    for raw in text.splitlines():
        line = raw.strip()
        if not line:
            continue
        if line.startswith("[") and line.endswith("]"):
            current = line[1:-1]
            if current not in _SECTIONS:
                raise CertificateFormatError(f"unknown section [{current}]")
            if current in sections:
                raise CertificateFormatError(f"duplicate section [{current}]")
            sections[current] = []
            continue
        if current is None:
            raise CertificateFormatError("content before the first section")
        sections[current].append(line)
    missing = [s for s in _SECTIONS if s not in sections]
    if missing:
        raise CertificateFormatError(f"missing sections: {', '.join(missing)}")

    try:
        field = NumberField(parse_poly(sections["field"][0]))
        mode = sections["mode"][0]
        if mode not in ("direct", "faithful"):
            raise CertificateFormatError(f"unknown mode {mode!r}")
        eta = parse_element(field, sections["eta"][0])
        epsilon = parse_element(field, sections["epsilon"][0])
        prime_list = [int(x) for x in sections["primes"][0].split(",")]
        orders = [int(x) for x in sections["coset-orders"][0].split(",")]
        module = ZModule(field, lattice_from_text("\n".join(sections["module"])))
        ring = Order(field, lattice_from_text("\n".join(sections["coeff-ring"])))
        exponents = {}
        for line in sections["exponents"]:
            key, _, value = line.partition(":")
            key = key.strip()
            if not key.startswith("S={") or not key.endswith("}"):
                raise CertificateFormatError(f"bad exponent line {line!r}")
            inner = key[3:-1]
            subset = tuple(int(x) for x in inner.split(",")) if inner else ()
            exponents[subset] = int(value.strip())
        units = {}
        subsets = list(exponents.keys())
        unit_lines = sections["units"]
        if len(unit_lines) != len(subsets):
            raise CertificateFormatError("unit line count must match exponent count")
        for subset, line in zip(subsets, unit_lines):
            if line.startswith("epsilon^"):
                stated = int(line[len("epsilon^") :])
                if stated != exponents[subset]:
                    raise CertificateFormatError(
                        "deferred unit exponent disagrees with the exponent table"
                    )
                units[subset] = None
            else:
                units[subset] = parse_element(field, line)
    except CertificateFormatError:
        raise
    except (ValueError, IndexError) as exc:
        raise CertificateFormatError(f"malformed certificate: {exc}") from exc

    return CounterexampleCertificate(
        field=field,
        eta=eta,
        epsilon=epsilon,
        mode=mode,
        primes=prime_list,
        coset_orders=orders,
        module=module,
        coeff_ring=ring,
        exponents=exponents,
        units=units,
    )
