"""Exact arithmetic in a number field Q[x]/(f).

A NumberField is presented by a monic irreducible integer polynomial f of
degree r >= 2; elements are length-r vectors of Fractions giving the
coordinates in the power basis 1, theta, ..., theta^(r-1), where theta is
the class of x.  No embeddings are ever evaluated numerically: norms and
traces go through the regular representation, so everything stays exact.
"""

from fractions import Fraction
from itertools import product

from . import linalg, polys
from .bigtext import int_to_str, str_to_int


class FieldMismatchError(ValueError):
    pass


class NumberField:
    """Q[x]/(f) for a monic irreducible integer f, deg f >= 2."""

    def __init__(self, min_poly):
        coeffs = polys.trim([int(c) for c in min_poly])
        if len(coeffs) < 3:
            raise ValueError("defining polynomial must have degree >= 2")
        if coeffs[-1] != 1:
            raise ValueError("defining polynomial must be monic")
        if not polys.is_irreducible_monic(coeffs):
            raise ValueError("defining polynomial is reducible over Q")
        self.min_poly = tuple(coeffs)
        self.degree = len(coeffs) - 1
        self.power_basis_disc = polys.discriminant(list(coeffs))
        if self.power_basis_disc == 0:
            raise ValueError("zero discriminant")  # unreachable for irreducible f
        # reduction table: theta^(r+k) as a power-basis vector, k = 0..r-2
        r = self.degree
        table = []
        cur = [-c for c in coeffs[:-1]]  # theta^r
        table.append(tuple(cur))
        for _ in range(r - 2):
            cur = self._shift_reduce(cur)
            table.append(tuple(cur))
        self._power_table = tuple(table)

    def _shift_reduce(self, coords):
        # multiply by theta, one reduction step, used only to build the table
        r = self.degree
        top = coords[-1]
        shifted = [0] + list(coords[:-1])
        if top:
            for i in range(r):
                shifted[i] += top * -self.min_poly[i]
        return shifted

    def element(self, coords):
        return FieldElement(self, coords)

    def zero(self):
        return FieldElement(self, [0] * self.degree)

    def one(self):
        return FieldElement(self, [1] + [0] * (self.degree - 1))

    def theta(self):
        return FieldElement(self, [0, 1] + [0] * (self.degree - 2))

    def from_rational(self, q):
        return FieldElement(self, [Fraction(q)] + [0] * (self.degree - 1))

    def __eq__(self, other):
        if not isinstance(other, NumberField):
            return NotImplemented
        return self.min_poly == other.min_poly

    def __hash__(self):
        return hash(self.min_poly)

    def __repr__(self):
        return f"NumberField({format_poly(self.min_poly)})"


class FieldElement:
    """Element of a NumberField as a power-basis coordinate vector."""

    __slots__ = ("field", "coords")

    def __init__(self, field, coords):
        coords = tuple(Fraction(c) for c in coords)
        if len(coords) != field.degree:
            raise ValueError("coordinate vector has the wrong length")
        self.field = field
        self.coords = coords

    def _check(self, other):
        if self.field != other.field:
            raise FieldMismatchError("elements live in different fields")

    def is_zero(self):
        return all(c == 0 for c in self.coords)

    def is_one(self):
        return self.coords[0] == 1 and all(c == 0 for c in self.coords[1:])

    def is_rational(self):
        return all(c == 0 for c in self.coords[1:])

    def integer_coords(self):
        """Coordinates as ints when all are integral, else None."""
        if any(c.denominator != 1 for c in self.coords):
            return None
        return tuple(int(c) for c in self.coords)

    def __add__(self, other):
        self._check(other)
        return FieldElement(self.field, [a + b for a, b in zip(self.coords, other.coords)])

    def __sub__(self, other):
        self._check(other)
        return FieldElement(self.field, [a - b for a, b in zip(self.coords, other.coords)])

    def __neg__(self):
        return FieldElement(self.field, [-a for a in self.coords])

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return FieldElement(self.field, [a * other for a in self.coords])
        self._check(other)
        r = self.field.degree
        prod = [Fraction(0)] * (2 * r - 1)
        for i, a in enumerate(self.coords):
            if a:
                for j, b in enumerate(other.coords):
                    if b:
                        prod[i + j] += a * b
        out = prod[:r]
        for k, c in enumerate(prod[r:]):
            if c:
                row = self.field._power_table[k]
                for i in range(r):
                    if row[i]:
                        out[i] += c * row[i]
        return FieldElement(self.field, out)

    __rmul__ = __mul__

    def inverse(self):
        """Multiplicative inverse via the extended Euclidean algorithm mod f."""
        if self.is_zero():
            raise ZeroDivisionError("zero has no inverse")
        f = [Fraction(c) for c in self.field.min_poly]
        a = polys.trim(list(self.coords))
        # extended gcd of a and f in Q[x]
        r0, r1 = a, f
        s0, s1 = [Fraction(1)], []
        while polys.degree(r1) >= 0:
            q, rem = polys.divmod_exact(r0, r1)
            r0, r1 = r1, rem
            s0, s1 = s1, polys.sub(s0, polys.mul(q, s1))
        # r0 is a nonzero constant: gcd(a, f) since f is irreducible
        c = r0[0]
        inv_coords = [x / c for x in s0]
        inv_coords += [Fraction(0)] * (self.field.degree - len(inv_coords))
        return FieldElement(self.field, inv_coords[: self.field.degree])

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return FieldElement(self.field, [a / Fraction(other) for a in self.coords])
        self._check(other)
        return self * other.inverse()

    def __pow__(self, e):
        if not isinstance(e, int):
            raise TypeError("exponent must be an integer")
        base = self
        if e < 0:
            base = self.inverse()
            e = -e
        result = self.field.one()
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def __eq__(self, other):
        if not isinstance(other, FieldElement):
            return NotImplemented
        return self.field == other.field and self.coords == other.coords

    def __hash__(self):
        return hash((self.field.min_poly, self.coords))

    def __repr__(self):
        return f"FieldElement({format_element(self)})"

    # -- algebraic invariants ------------------------------------------------

    def regular_rep(self):
        """Multiplication-by-self matrix: column j is self * theta^j."""
        r = self.field.degree
        cols = []
        cur = self
        theta = self.field.theta()
        for _ in range(r):
            cols.append(cur.coords)
            cur = cur * theta
        return [[cols[j][i] for j in range(r)] for i in range(r)]

    def norm(self):
        return linalg.det(self.regular_rep())

    def trace(self):
        rep = self.regular_rep()
        return sum(rep[i][i] for i in range(self.field.degree))

    def min_poly(self):
        """Monic minimal polynomial over Q, ascending Fraction coefficients."""
        r = self.field.degree
        powers = [self.field.one().coords]
        cur = self.field.one()
        for _ in range(r):
            cur = cur * self
            powers.append(cur.coords)
        for d in range(1, r + 1):
            cols = [list(powers[k]) for k in range(d)]
            target = list(powers[d])
            sol = linalg.solve(linalg.transpose(cols), target)
            if sol is not None:
                return [-c for c in sol] + [Fraction(1)]
        raise AssertionError("unreachable: element of degree > field degree")

    def is_algebraic_integer(self):
        return all(c.denominator == 1 for c in self.min_poly())

    def is_norm1_unit(self):
        return self.is_algebraic_integer() and self.norm() == 1

    def is_root_of_unity(self):
        """True when self^w == 1 for some w with euler_phi(w) <= degree.

        phi(w) >= sqrt(w/2) bounds the orders to check by 2r^2.
        """
        if self.is_zero():
            return False
        r = self.field.degree
        one = self.field.one()
        for w in range(1, 2 * r * r + 1):
            if polys.euler_phi(w) <= r and self**w == one:
                return True
        return False


def find_small_unit(field, height_bound):
    """First norm-1 non-torsion algebraic integer with small coordinates.

    Scans integer coordinate vectors with |c_i| <= height_bound in
    lexicographic order; returns None when the box holds no such unit.
    """
    if height_bound < 0:
        raise ValueError("height bound must be >= 0")
    for coords in product(range(-height_bound, height_bound + 1), repeat=field.degree):
        if not any(coords):
            continue
        cand = field.element(coords)
        if cand.norm() != 1:
            continue
        if not cand.is_algebraic_integer():
            continue
        if cand.is_root_of_unity():
            continue
        return cand
    return None


# -- modular coordinate arithmetic --------------------------------------------


def mul_coords_mod(field, a, b, modulus):
    """Product of two integer coordinate vectors, reduced mod modulus."""
    r = field.degree
    prod = [0] * (2 * r - 1)
    for i in range(r):
        if a[i]:
            for j in range(r):
                if b[j]:
                    prod[i + j] = (prod[i + j] + a[i] * b[j]) % modulus
    out = list(prod[:r])
    for k in range(r - 1):
        c = prod[r + k]
        if c:
            row = field._power_table[k]
            for i in range(r):
                if row[i]:
                    out[i] = (out[i] + c * row[i]) % modulus
    return tuple(x % modulus for x in out)


def pow_coords_mod(field, coords, exponent, modulus):
    """coords^exponent mod modulus in Z[x]/(f); coords must be integral."""
    if exponent < 0:
        raise ValueError("negative exponent")
    if modulus == 1:
        return tuple(0 for _ in range(field.degree))
    result = tuple([1] + [0] * (field.degree - 1))
    base = tuple(int(c) % modulus for c in coords)
    e = exponent
    while e:
        if e & 1:
            result = mul_coords_mod(field, result, base, modulus)
        e >>= 1
        if e:
            base = mul_coords_mod(field, base, base, modulus)
    return result


# -- text formats --------------------------------------------------------------


def parse_poly(text):
    """Comma-separated integers, ascending degree: '-2,0,0,1' is x^3 - 2."""
    return [int(part.strip()) for part in text.strip().split(",")]


def format_poly(coeffs):
    return ",".join(str(int(c)) for c in coeffs)


def parse_element(field, text):
    parts = [p.strip() for p in text.strip().split(",")]
    if len(parts) != field.degree:
        raise ValueError(
            f"expected {field.degree} coordinates, got {len(parts)}"
        )
    coords = []
    for part in parts:
        num, slash, den = part.partition("/")
        coords.append(
            Fraction(str_to_int(num), str_to_int(den)) if slash else Fraction(str_to_int(num))
        )
    return field.element(coords)


def format_element(elem):
    out = []
    for c in elem.coords:
        num = int_to_str(c.numerator)
        out.append(num if c.denominator == 1 else f"{num}/{int_to_str(c.denominator)}")
    return ",".join(out)
