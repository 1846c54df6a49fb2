"""Norm forms: exact expansion, brute-force solving, and solution families.

A norm form is a*N(alpha_1 X_1 + ... + alpha_n X_n) for a rational scale a
and field elements alpha_i.  Expansion is purely algebraic: the norm of
the generic linear combination is the determinant of sum_j X_j * rep(alpha_j),
a polynomial identity that never touches complex embeddings.  Solutions of
F(x) = m are grouped into families: orbits under the norm-1 unit group of
the coefficient ring of the module the alpha_i generate.
"""

from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from math import isqrt

from . import linalg, primes
from .fields import NumberField, format_element, parse_element
from .modules import (
    NotFullRankError,
    ZModule,
    is_norm1_unit_of_order,
    multiplier_ring,
    subfield_closure,
)
from .lattices import ZLattice


class DegenerateFormError(ValueError):
    pass


# -- tiny multivariate polynomials (exponent tuple -> coefficient) ---------------


def _mp_add(a, b):
    out = dict(a)
    for k, v in b.items():
        s = out.get(k, 0) + v
        if s:
            out[k] = s
        elif k in out:
            del out[k]
    return out


def _mp_mul(a, b):
    out = {}
    for ka, va in a.items():
        for kb, vb in b.items():
            k = tuple(x + y for x, y in zip(ka, kb))
            s = out.get(k, 0) + va * vb
            if s:
                out[k] = s
            elif k in out:
                del out[k]
    return out


def _mp_eval(poly, xs):
    total = 0
    for exps, coeff in poly.items():
        term = coeff
        for x, e in zip(xs, exps):
            if e:
                term *= x**e
        total += term
    return total


class NormForm:
    """a * Norm(alpha_1 X_1 + ... + alpha_n X_n) with exact expansion."""

    def __init__(self, field, scale, coeffs):
        scale = Fraction(scale)
        if scale == 0:
            raise DegenerateFormError("the scale must be nonzero")
        if len(coeffs) < 2:
            raise ValueError("a norm form needs at least two coefficients")
        for c in coeffs:
            if c.field != field:
                raise ValueError("coefficient from a different field")
        if linalg.rank([list(c.coords) for c in coeffs]) != len(coeffs):
            raise DegenerateFormError("coefficients must be Q-linearly independent")
        self.field = field
        self.scale = scale
        self.coeffs = list(coeffs)
        self._expanded = None

    @property
    def nvars(self):
        return len(self.coeffs)

    def linear_value(self, xs):
        """The field element alpha_1 x_1 + ... + alpha_n x_n."""
        out = self.field.zero()
        for c, x in zip(self.coeffs, xs):
            if x:
                out = out + c * int(x)
        return out

    def expand(self):
        """Integer polynomial {exponents: coefficient}; cached.

        Determinant of sum_j X_j rep(alpha_j), expanded by minors with
        memoization on column subsets, then scaled by a.  A non-integral
        coefficient means the scale was wrong for a norm form and raises.
        """
        if self._expanded is not None:
            return self._expanded
        n = self.nvars
        r = self.field.degree
        reps = [c.regular_rep() for c in self.coeffs]
        zero_exp = (0,) * n
        entries = []
        for i in range(r):
            row = []
            for j in range(r):
                poly = {}
                for v in range(n):
                    coeff = reps[v][i][j]
                    if coeff:
                        exps = tuple(int(k == v) for k in range(n))
                        poly[exps] = poly.get(exps, 0) + coeff
                row.append(poly)
            entries.append(row)

        memo = {}

        def minor(i, cols):
            if i == r:
                return {zero_exp: Fraction(1)}
            key = (i, cols)
            if key in memo:
                return memo[key]
            total = {}
            for idx, c in enumerate(cols):
                entry = entries[i][c]
                if not entry:
                    continue
                sub = minor(i + 1, cols[:idx] + cols[idx + 1 :])
                term = _mp_mul(entry, sub)
                if idx % 2:
                    term = {k: -v for k, v in term.items()}
                total = _mp_add(total, term)
            memo[key] = total
            return total

        det = minor(0, tuple(range(r)))
        out = {}
        for k, v in det.items():
            value = v * self.scale
            if value == 0:
                continue
            if Fraction(value).denominator != 1:
                raise DegenerateFormError(
                    "expansion is not integral; the scale does not match the form"
                )
            out[k] = int(value)
        self._expanded = out
        return out

    def evaluate(self, xs):
        """F(x) through the expanded polynomial (exact)."""
        if len(xs) != self.nvars:
            raise ValueError("wrong number of arguments")
        return _mp_eval(self.expand(), [int(x) for x in xs])

    def norm_value(self, xs):
        """a * Norm(L(x)) straight through field arithmetic (the slow route)."""
        return self.scale * self.linear_value(xs).norm()

    def __repr__(self):
        return f"NormForm(scale={self.scale}, nvars={self.nvars})"


def solve_box(form, target, box):
    """All x with F(x) = target and |x_i| <= box, sorted lexicographically.

    Plain exhaustive enumeration; the last variable is evaluated by Horner
    steps on a specialized univariate polynomial.  The zero vector is
    never reported (F(0) = 0 and targets are nonzero).
    """
    if target == 0:
        raise ValueError("family grouping needs a nonzero target")
    poly = form.expand()
    n = form.nvars
    max_last = max((k[-1] for k in poly), default=0)
    # split monomials by the exponent of the last variable
    by_last = [dict() for _ in range(max_last + 1)]
    for exps, coeff in poly.items():
        by_last[exps[-1]][exps[:-1]] = coeff
    sols = []
    rng = range(-box, box + 1)
    for prefix in product(rng, repeat=n - 1):
        spec = [_mp_eval(p, prefix) for p in by_last]
        for y in rng:
            acc = 0
            for c in reversed(spec):
                acc = acc * y + c
            if acc == target and (y or any(prefix)):
                sols.append(prefix + (y,))
    return sols


def group_families(solutions, form, module, order=None):
    """Partition solutions into associate classes of their linear values.

    Two solutions x, y land in one family when L(x)/L(y) is a norm-1 unit
    of the coefficient ring of the given (full) module.  Families come out
    ordered by their lexicographically smallest member, which is also the
    family head.
    """
    if not module.is_full():
        raise NotFullRankError("family grouping is defined for full modules")
    if order is None:
        order = multiplier_ring(module)
    families = []  # (representative value, members)
    for x in sorted(solutions):
        value = form.linear_value(x)
        if value.is_zero():
            raise ValueError("solutions must have nonzero linear value")
        for rep_value, members in families:
            if is_norm1_unit_of_order(value / rep_value, order):
                members.append(tuple(x))
                break
        else:
            families.append((value, [tuple(x)]))
    return [members for _, members in families]


def _is_square(n):
    return n >= 0 and isqrt(n) ** 2 == n


def quad_one_family(a, b, c, target, box):
    """Check that a binary quadratic norm form has at most one solution family.

    Builds the form a*N(X + alpha Y) with alpha = (b + sqrt(D))/(2a),
    solves |target| = +-1 inside the box, groups, and also enumerates the
    classical module-class candidates (A, B) with -A <= B < A,
    B^2 - 4AC = D and target = A*S^2, which pins A = 1 and B in {-1, 0}.
    True when both routes allow at most one family.
    """
    if target not in (1, -1):
        raise ValueError("the one-family check is about targets +-1")
    disc = b * b - 4 * a * c
    if a == 0 or _is_square(disc):
        raise DegenerateFormError("form is reducible over Q")
    field = NumberField([-disc, 0, 1])  # x^2 - D
    theta = field.theta()
    one = field.one()
    alpha = (one * b + theta) / (2 * a)
    form = NormForm(field, Fraction(a), [one, alpha])
    sols = solve_box(form, target, box)
    if sols:
        module = ZModule.from_generators(field, [one, alpha])
        families = group_families(sols, form, module)
    else:
        families = []
    # module-class candidates for |m| = 1
    candidates = 0
    for big_a in primes.divisors_sorted(1):
        if not _is_square(1 // big_a):
            continue
        for big_b in range(-big_a, big_a):
            if (big_b * big_b - disc) % (4 * big_a) == 0:
                candidates += 1
    return len(families) <= 1 and candidates <= 1


def ratio_field_degree(alpha1, alpha2, alpha3):
    """[Q(alpha2/alpha1, alpha3/alpha1) : Q] for independent alphas.

    The hypothesis check for the three-variable family bound: when the
    result exceeds 3, the module generated by the alphas is not
    proportional to a full module in any subfield.
    """
    for x in (alpha1, alpha2, alpha3):
        if x.is_zero():
            raise ValueError("the coefficients must be nonzero")
    mat = [list(x.coords) for x in (alpha1, alpha2, alpha3)]
    if linalg.rank(mat) != 3:
        raise DegenerateFormError("coefficients must be Q-linearly independent")
    field = alpha1.field
    return len(subfield_closure(field, [alpha2 / alpha1, alpha3 / alpha1]))


# -- the prime partition of Z^n ----------------------------------------------------


@dataclass(frozen=True)
class PartitionFamily:
    """The p+1 block matrices whose images cover Z^n."""

    prime: int
    blocks: tuple  # p+1 matrices, each a tuple of row tuples

    def lattices(self):
        n = len(self.blocks[0])
        out = []
        for mat in self.blocks:
            cols = [tuple(mat[i][j] for i in range(n)) for j in range(n)]
            out.append(ZLattice.from_integer_columns(cols, n))
        return out


def partition_matrices(p, n):
    """The 2x2 seeds ((p,0),(0,1)) and ((0,-1),(p,-j)), padded by identity."""
    if not primes.is_prime(p):
        raise ValueError("partition matrices need a prime")
    if n < 2:
        raise ValueError("need at least two variables")
    seeds = [((p, 0), (0, 1))] + [((0, -1), (p, -j)) for j in range(1, p + 1)]
    blocks = []
    for seed in seeds:
        rows = []
        for i in range(n):
            row = [0] * n
            if i < 2:
                row[0], row[1] = seed[i][0], seed[i][1]
            else:
                row[i] = 1
            rows.append(tuple(row))
        blocks.append(tuple(rows))
    return PartitionFamily(prime=p, blocks=tuple(blocks))


def verify_partition(family, box):
    """Exhaustively check that the block images cover the whole box."""
    lats = family.lattices()
    n = len(family.blocks[0])
    for point in product(range(-box, box + 1), repeat=n):
        if not any(lat.contains(point) for lat in lats):
            return False
    return True


# -- text format --------------------------------------------------------------------


def form_to_text(form):
    """'a | alpha_1 | alpha_2 | ...' with elements in coordinate format."""
    scale = form.scale
    head = str(scale.numerator) if scale.denominator == 1 else f"{scale.numerator}/{scale.denominator}"
    return " | ".join([head] + [format_element(c) for c in form.coeffs])


def form_from_text(field, text):
    parts = [p.strip() for p in text.split("|")]
    if len(parts) < 3:
        raise ValueError("a form needs a scale and at least two coefficients")
    scale = Fraction(parts[0])
    coeffs = [parse_element(field, p) for p in parts[1:]]
    return NormForm(field, scale, coeffs)
