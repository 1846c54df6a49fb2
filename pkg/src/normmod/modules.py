"""Z-modules and orders inside a number field.

A ZModule pairs a NumberField with a ZLattice holding the power-basis
coordinates of its generators as columns.  Orders are full modules that
contain 1 and are closed under multiplication; the multiplier ring of a
full module (all alpha with alpha*M inside M) is always such an order.
"""

from fractions import Fraction
from math import lcm

from . import linalg
from .fields import (
    FieldMismatchError,
    NumberField,
    format_element,
    format_poly,
    parse_element,
    parse_poly,
    pow_coords_mod,
)
from .lattices import ZLattice, integer_kernel


class NotFullRankError(ValueError):
    """Raised when an operation needs a full module but got a thinner one."""


class NotAnOrderError(ValueError):
    pass


class ZModule:
    """Finitely generated Z-submodule of a number field."""

    def __init__(self, field, lattice):
        if lattice.ambient_dim != field.degree:
            raise ValueError("lattice ambient dimension != field degree")
        self.field = field
        self.lattice = lattice

    @classmethod
    def from_generators(cls, field, elements):
        if not elements:
            raise ValueError("a module needs at least one generator")
        cols = []
        for e in elements:
            if e.field != field:
                raise FieldMismatchError("generator from a different field")
            cols.append(e.coords)
        return cls(field, ZLattice.from_rational_columns(cols, field.degree))

    @property
    def rank(self):
        return self.lattice.rank

    def is_full(self):
        return self.lattice.is_full()

    def contains(self, element):
        if element.field != self.field:
            raise FieldMismatchError("element from a different field")
        return self.lattice.contains(element.coords)

    def basis_elements(self):
        return [self.field.element(col) for col in self.lattice.basis_rational_columns()]

    def span_contains(self, element):
        """Membership in the Q-span of the module."""
        cols = [list(c) for c in self.lattice.basis_rational_columns()]
        if not cols:
            return element.is_zero()
        return linalg.solve(linalg.transpose(cols), list(element.coords)) is not None

    def __eq__(self, other):
        if not isinstance(other, ZModule):
            return NotImplemented
        return self.field == other.field and self.lattice == other.lattice

    def __hash__(self):
        return hash((self.field.min_poly, self.lattice))

    def __repr__(self):
        return f"{type(self).__name__}(rank={self.rank}, den={self.lattice.den})"


class Order(ZModule):
    """A full module that is a ring containing 1."""

    def __init__(self, field, lattice):
        super().__init__(field, lattice)
        if not self.is_full():
            raise NotAnOrderError("an order must have full rank")
        if not self.contains(field.one()):
            raise NotAnOrderError("an order must contain 1")
        basis = self.basis_elements()
        for i, a in enumerate(basis):
            for b in basis[i:]:
                if not self.contains(a * b):
                    raise NotAnOrderError("basis is not closed under multiplication")
        self._disc = None

    @property
    def disc(self):
        """Discriminant: det of the trace form on the lattice basis."""
        if self._disc is None:
            basis = self.basis_elements()
            mat = [[(a * b).trace() for b in basis] for a in basis]
            d = linalg.det(mat)
            if d.denominator != 1:
                raise AssertionError("order discriminant must be an integer")
            self._disc = int(d)
        return self._disc


def module_from_generators(field, elements):
    return ZModule.from_generators(field, elements)


def intersect_modules(m1, m2):
    if m1.field != m2.field:
        raise FieldMismatchError("modules live in different fields")
    return ZModule(m1.field, m1.lattice.intersect(m2.lattice))


def multiplier_ring(module):
    """The ring of coefficients {alpha : alpha * M subset of M} of a full M.

    Computed generically: for each basis element b the set of alpha with
    alpha*b in M is the preimage lattice of M under multiplication by b;
    the multiplier ring is the intersection of these r preimages.
    """
    if not module.is_full():
        raise NotFullRankError("multiplier ring is computed for full modules only")
    field = module.field
    r = field.degree
    result = None
    den = module.lattice.den
    for b in module.basis_elements():
        rep = b.regular_rep()
        rep_inv = linalg.inv(rep)
        cols = []
        for col in module.lattice.basis:
            vec = linalg.mat_vec(rep_inv, [Fraction(x, den) for x in col])
            cols.append(vec)
        pre = ZLattice.from_rational_columns(cols, r)
        result = pre if result is None else result.intersect(pre)
    return Order(field, result)


def subfield_closure(field, elements):
    """Canonical Q-basis of the subfield generated by the given elements.

    Saturates the span of {1} + elements under multiplication; the result
    of each round is put in reduced row echelon form, so the basis is
    deterministic.
    """
    vecs = [list(field.one().coords)]
    for e in elements:
        if e.field != field:
            raise FieldMismatchError("element from a different field")
        vecs.append(list(e.coords))
    while True:
        rows, _ = linalg.rref(vecs)
        basis = [row for row in rows if any(row)]
        els = [field.element(row) for row in basis]
        new_vecs = [list(b) for b in basis]
        grew = False
        for i, a in enumerate(els):
            for b in els[i:]:
                prod = list((a * b).coords)
                if linalg.rank(new_vecs + [prod]) > len(new_vecs):
                    new_vecs.append(prod)
                    grew = True
        if not grew:
            return els
        vecs = new_vecs


def restrict(module, subfield_generators):
    """The submodule of elements that stay in span(M) under the subfield.

    For L = Q(generators), returns {beta in M : lam * beta in span_Q(M)
    for every lam in L}; allowing an integer multiple of lam*beta to land
    in M is the same as asking lam*beta to land in the rational span.
    """
    field = module.field
    r = field.degree
    lam_basis = subfield_closure(field, subfield_generators)
    span_cols = [list(c) for c in module.lattice.basis_rational_columns()]
    if not span_cols:
        return module
    # functionals vanishing exactly on span_Q(M): left kernel of the basis
    funcs = linalg.nullspace(span_cols)
    if not funcs:
        return module  # the span is all of the field
    cond_rows = []
    for lam in lam_basis:
        rep = lam.regular_rep()
        for func in funcs:
            cond_rows.append([sum(func[i] * rep[i][j] for i in range(r)) for j in range(r)])
    # restrict to lattice coordinates: beta = (1/den) B c, conditions become
    # (cond_rows . B) c = 0 over the integers
    den = module.lattice.den
    int_rows = []
    for row in cond_rows:
        entries = [
            sum(Fraction(row[i]) * col[i] for i in range(r)) for col in module.lattice.basis
        ]
        mult = 1
        for x in entries:
            mult = lcm(mult, x.denominator)
        int_rows.append([int(x * mult) for x in entries])
    ker = integer_kernel(int_rows)
    new_cols = []
    for kcol in ker.basis:
        new_cols.append(
            [sum(c * col[i] for c, col in zip(kcol, module.lattice.basis)) for i in range(r)]
        )
    return ZModule(field, ZLattice.from_integer_columns(new_cols, r, den=den))


def span_stabilizer_field(module):
    """Q-basis of {alpha : alpha * span_Q(M) = span_Q(M)}.

    This is the largest subfield L of the ambient field for which the
    restriction of M to L still has full rational rank in M; it always
    contains Q and its dimension divides the field degree.
    """
    field = module.field
    r = field.degree
    span_cols = [list(c) for c in module.lattice.basis_rational_columns()]
    if not span_cols:
        raise ValueError("stabilizer of the zero module is undefined")
    funcs = linalg.nullspace(span_cols)  # left kernel of the basis matrix
    cond_rows = []
    for vcol in span_cols:
        rep = field.element(vcol).regular_rep()
        for func in funcs:
            cond_rows.append([sum(func[i] * rep[i][j] for i in range(r)) for j in range(r)])
    if cond_rows:
        basis_vecs = linalg.nullspace(cond_rows)
    else:
        basis_vecs = [list(row) for row in linalg.identity(r)]
    rows, _ = linalg.rref(basis_vecs)
    out = [field.element(row) for row in rows if any(row)]
    # sanity: multiplicatively closed and of dimension dividing r
    dim = len(out)
    if r % dim != 0:
        raise AssertionError("stabilizer dimension must divide the field degree")
    mat = [list(e.coords) for e in out]
    for i, a in enumerate(out):
        for b in out[i:]:
            if linalg.rank(mat + [list((a * b).coords)]) != dim:
                raise AssertionError("stabilizer is not multiplicatively closed")
    return out


def is_norm1_unit_of_order(element, order):
    """Membership plus norm 1; the inverse lies in the order automatically.

    For an algebraic integer u of norm 1 the monic characteristic
    polynomial has constant term +-1, so u^-1 is in Z[u] and no separate
    inverse-membership test is needed.
    """
    return order.contains(element) and element.norm() == 1


def associates(a, b, module, order=None):
    """True when a = u*b for a norm-1 unit u of the module's coefficient ring."""
    if a.is_zero() or b.is_zero():
        raise ValueError("associate testing needs nonzero elements")
    if not module.is_full():
        raise NotFullRankError("associates are defined against a full module")
    if order is None:
        order = multiplier_ring(module)
    return is_norm1_unit_of_order(a / b, order)


class PowerMembership:
    """Fast membership tests for powers of one fixed element in one module.

    When the base generates the field and is an algebraic integer, the test
    runs in the base's own power basis: base**t has integer coordinates
    u_t there (x^t reduced by the base's minimal polynomial), and u_t lies
    in the module iff q * adj(T) * u_t == 0 mod |det T|, where T is the
    module basis written in the base's power basis and q clears its
    denominators.  det T stays small even when the base's coordinates are
    astronomically large, so the modular exponentiation is cheap.  Bases
    that do not generate the field fall back to the ambient power basis,
    and non-integral bases to exact powering.
    """

    def __init__(self, base, module):
        if base.field != module.field:
            raise FieldMismatchError("base from a different field")
        if not module.is_full():
            raise NotFullRankError("modular membership needs a full module")
        self.base = base
        self.module = module
        self.mode = None
        field = base.field
        r = field.degree
        coords = base.integer_coords()
        if coords is None:
            self.mode = "exact"
            return
        g = base.min_poly()
        if len(g) - 1 == r and all(c.denominator == 1 for c in g):
            # membership matrix in the base's power basis
            power_cols = []
            cur = field.one()
            for _ in range(r):
                power_cols.append(list(cur.coords))
                cur = cur * base
            p_inv = linalg.inv(linalg.transpose(power_cols))
            den = module.lattice.den
            t_mat = [
                linalg.mat_vec(p_inv, [Fraction(x, den) for x in col])
                for col in module.lattice.basis
            ]
            t_rows = linalg.transpose(t_mat)
            q = 1
            for row in t_rows:
                for x in row:
                    q = lcm(q, x.denominator)
            t_int = [[int(x * q) for x in row] for row in t_rows]
            d = linalg.det(t_int)
            m = int(abs(d))
            self.mode = "power-basis"
            self.modulus = m
            if m > 1:
                inv_rows = linalg.inv(t_int)
                self.test_matrix = [
                    [int(x * d) * q % m for x in row] for row in inv_rows
                ]
                self.min_poly_mod = tuple(int(c) % m for c in g[:-1])
            return
        self.mode = "ambient"
        m, adj = module.lattice.membership_modulus_data()
        self.modulus = m
        den = module.lattice.den
        self.test_matrix = [[x * den % m for x in row] for row in adj] if m > 1 else None
        self.coords = coords

    def _power_basis_coords_mod(self, exponent):
        # x^exponent mod (g, m) by square and multiply on coefficient vectors
        r = self.base.field.degree
        result = [1] + [0] * (r - 1)
        square = [0, 1] + [0] * (r - 2)
        e = exponent
        while e:
            if e & 1:
                result = self._mulmod_power_basis(result, square)
            e >>= 1
            if e:
                square = self._mulmod_power_basis(square, square)
        return result

    def _test(self, u):
        m = self.modulus
        return all(
            sum(r * x for r, x in zip(row, u)) % m == 0 for row in self.test_matrix
        )

    def __call__(self, exponent):
        if exponent < 0:
            # inverse-power membership only reduces to |exponent| inside a
            # ring, where norm-1 units have their inverses alongside them
            if isinstance(self.module, Order) and self.base.is_norm1_unit():
                exponent = -exponent
            else:
                return self.module.contains(self.base**exponent)
        if self.mode == "exact":
            return self.module.contains(self.base**exponent)
        if self.modulus == 1:
            return True
        if self.mode == "power-basis":
            u = self._power_basis_coords_mod(exponent)
        else:
            u = pow_coords_mod(self.base.field, self.coords, exponent, self.modulus)
        return self._test(u)

    def first_power_in(self, bound):
        """Least t in [1, bound] with base**t in the module, else None."""
        if self.mode == "exact":
            cur = self.base
            for t in range(1, bound + 1):
                if self.module.contains(cur):
                    return t
                cur = cur * self.base
            return None
        if self.modulus == 1:
            return 1
        if self.mode == "power-basis":
            r = self.base.field.degree
            step = [0, 1] + [0] * (r - 2)
            cur = list(step)
            for t in range(1, bound + 1):
                if self._test(cur):
                    return t
                cur = self._mulmod_power_basis(cur, step)
            return None
        m = self.modulus
        step = tuple(c % m for c in self.coords)
        cur = step
        from .fields import mul_coords_mod

        for t in range(1, bound + 1):
            if self._test(cur):
                return t
            cur = mul_coords_mod(self.base.field, cur, step, m)
        return None

    def _mulmod_power_basis(self, a, b):
        r = self.base.field.degree
        m = self.modulus
        g = self.min_poly_mod
        prod = [0] * (2 * r - 1)
        for i in range(r):
            if a[i]:
                for j in range(r):
                    if b[j]:
                        prod[i + j] += a[i] * b[j]
        for k in range(2 * r - 2, r - 1, -1):
            c = prod[k] % m
            if c:
                base_idx = k - r
                for i in range(r):
                    if g[i]:
                        prod[base_idx + i] -= c * g[i]
            prod[k] = 0
        return [x % m for x in prod[:r]]


def power_in_module(base, exponent, module):
    """Does base**exponent lie in the module?  Never materializes the power."""
    return PowerMembership(base, module)(exponent)


# -- text format ----------------------------------------------------------------


def module_to_text(module):
    """Field polynomial line, then one generator element line per basis vector."""
    lines = [format_poly(module.field.min_poly)]
    for e in module.basis_elements():
        lines.append(format_element(e))
    return "\n".join(lines)


def module_from_text(text):
    lines = [ln.strip() for ln in text.strip().splitlines() if ln.strip()]
    if len(lines) < 2:
        raise ValueError("module text needs a field line and at least one generator")
    field = NumberField(parse_poly(lines[0]))
    gens = [parse_element(field, ln) for ln in lines[1:]]
    return ZModule.from_generators(field, gens)
