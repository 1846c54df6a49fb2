"""Integer lattices in canonical Hermite normal form.

A ZLattice is (1/den) * (Z-span of the columns of an integer matrix B)
inside Q^r.  B is kept in column Hermite normal form: pivot rows strictly
increase column by column, pivots are positive, and within a pivot row
every entry to the left of the pivot is reduced into [0, pivot).  Together
with gcd(den, content(B)) = 1 this makes the representation unique, so
two lattices are equal exactly when their (den, basis) pairs are equal.
"""

from fractions import Fraction
from math import gcd, lcm

from . import linalg
from .bigtext import int_to_str, str_to_int


class DimensionMismatchError(ValueError):
    pass


def _row_hnf(mat):
    """Canonical row HNF; returns the nonzero rows."""
    rows = [list(r) for r in mat]
    rows = [r for r in rows if any(r)]
    if not rows:
        return []
    ncols = len(rows[0])
    rank = 0
    for c in range(ncols):
        while True:
            nz = [i for i in range(rank, len(rows)) if rows[i][c]]
            if len(nz) <= 1:
                break
            i0 = min(nz, key=lambda i: abs(rows[i][c]))
            for i in nz:
                if i == i0:
                    continue
                q = rows[i][c] // rows[i0][c]
                if q:
                    rows[i] = [a - q * b for a, b in zip(rows[i], rows[i0])]
        nz = [i for i in range(rank, len(rows)) if rows[i][c]]
        if not nz:
            continue
        i0 = nz[0]
        rows[rank], rows[i0] = rows[i0], rows[rank]
        if rows[rank][c] < 0:
            rows[rank] = [-a for a in rows[rank]]
        piv = rows[rank][c]
        for i in range(rank):
            q = rows[i][c] // piv
            if q:
                rows[i] = [a - q * b for a, b in zip(rows[i], rows[rank])]
        rank += 1
        rows = [r for r in rows if any(r)]
        if rank == len(rows):
            break
    return rows[:rank]


def hnf_columns(columns):
    """Canonical column-HNF basis of the integer span of the given columns."""
    return [tuple(r) for r in _row_hnf(columns)]


class ZLattice:
    """A finitely generated subgroup of Q^r in canonical form."""

    __slots__ = ("ambient_dim", "rank", "den", "basis")

    def __init__(self, ambient_dim, den, basis):
        # callers go through the factories below; inputs here are canonical
        self.ambient_dim = ambient_dim
        self.den = den
        self.basis = basis  # tuple of column tuples
        self.rank = len(basis)

    @classmethod
    def from_integer_columns(cls, columns, ambient_dim, den=1):
        if den <= 0:
            raise ValueError("denominator must be positive")
        cols = [tuple(c) for c in columns]
        for c in cols:
            if len(c) != ambient_dim:
                raise DimensionMismatchError("column length != ambient dimension")
        basis = hnf_columns(cols)
        g = 0
        for col in basis:
            for x in col:
                g = gcd(g, x)
        g = gcd(g, den)
        if g > 1:
            basis = [tuple(x // g for x in col) for col in basis]
            den //= g
        return cls(ambient_dim, den, tuple(basis))

    @classmethod
    def from_rational_columns(cls, columns, ambient_dim):
        cols = [[Fraction(x) for x in c] for c in columns]
        d = 1
        for c in cols:
            for x in c:
                d = lcm(d, x.denominator)
        ints = [tuple(int(x * d) for x in c) for c in cols]
        return cls.from_integer_columns(ints, ambient_dim, den=d)

    # -- structure ---------------------------------------------------------

    def is_full(self):
        return self.rank == self.ambient_dim

    def basis_rational_columns(self):
        return [[Fraction(x, self.den) for x in col] for col in self.basis]

    def _pivot_rows(self):
        return [next(i for i, x in enumerate(col) if x) for col in self.basis]

    def __eq__(self, other):
        if not isinstance(other, ZLattice):
            return NotImplemented
        return (self.ambient_dim, self.den, self.basis) == (
            other.ambient_dim,
            other.den,
            other.basis,
        )

    def __hash__(self):
        return hash((self.ambient_dim, self.den, self.basis))

    def __repr__(self):
        return f"ZLattice(dim={self.ambient_dim}, rank={self.rank}, den={self.den})"

    # -- membership --------------------------------------------------------

    def solve(self, vector):
        """Integer coordinates of vector in this basis, or None."""
        if len(vector) != self.ambient_dim:
            raise DimensionMismatchError("vector length != ambient dimension")
        if all(isinstance(x, int) for x in vector):
            w = [x * self.den for x in vector]
        else:
            w = [Fraction(x) * self.den for x in vector]
            if any(x.denominator != 1 for x in w):
                return None
            w = [int(x) for x in w]
        pivot_rows = self._pivot_rows()
        coeffs = [0] * self.rank
        j = 0
        for row in range(self.ambient_dim):
            if j < self.rank and pivot_rows[j] == row:
                q, rem = divmod(w[row], self.basis[j][row])
                if rem:
                    return None
                if q:
                    w = [a - q * b for a, b in zip(w, self.basis[j])]
                coeffs[j] = q
                j += 1
            elif w[row]:
                return None
        return tuple(coeffs)

    def contains(self, vector):
        return self.solve(vector) is not None

    # -- lattice operations --------------------------------------------------

    def intersect(self, other):
        """Set intersection, again as a canonical lattice."""
        if not isinstance(other, ZLattice):
            raise TypeError("intersect expects a ZLattice")
        if self.ambient_dim != other.ambient_dim:
            raise DimensionMismatchError("ambient dimensions differ")
        d = lcm(self.den, other.den)
        b1 = [tuple(x * (d // self.den) for x in col) for col in self.basis]
        b2 = [tuple(x * (d // other.den) for x in col) for col in other.basis]
        if not b1 or not b2:
            return ZLattice.from_integer_columns([], self.ambient_dim)
        # kernel of [B1 | -B2]: for (u, v) in it, B1 u = B2 v lies in both spans
        stacked = [
            [col[i] for col in b1] + [-col[i] for col in b2]
            for i in range(self.ambient_dim)
        ]
        ker = integer_kernel(stacked)
        cols = []
        for kcol in ker.basis:
            u = kcol[: len(b1)]
            vec = [sum(c * col[i] for c, col in zip(u, b1)) for i in range(self.ambient_dim)]
            cols.append(vec)
        return ZLattice.from_integer_columns(cols, self.ambient_dim, den=d)

    def membership_modulus_data(self):
        """(modulus, adjugate) for fast modular membership; full-rank only.

        v is in the lattice iff den*v is integral and adj(B) * (den*v) == 0
        mod |det B|, entrywise.
        """
        if not self.is_full():
            raise ValueError("modular membership needs a full-rank lattice")
        rows = [[col[i] for col in self.basis] for i in range(self.ambient_dim)]
        d = linalg.det(rows)
        inv = linalg.inv(rows)
        adj = [[int(x * d) for x in row] for row in inv]
        m = int(abs(d))
        if d < 0:
            adj = [[-x for x in row] for row in adj]
        return m, adj


def hnf(columns, ambient_dim=None, den=1):
    """Canonical lattice spanned by integer columns (scaled by 1/den)."""
    cols = [tuple(c) for c in columns]
    if ambient_dim is None:
        if not cols:
            raise ValueError("ambient dimension required for an empty generating set")
        ambient_dim = len(cols[0])
    return ZLattice.from_integer_columns(cols, ambient_dim, den=den)


def integer_kernel(rows):
    """Canonical basis of {x in Z^n : M x = 0} for an integer matrix M (rows)."""
    m = len(rows)
    n = len(rows[0]) if m else 0
    if n == 0:
        return ZLattice.from_integer_columns([], 0)
    # column operations tracked through an identity block: row-HNF the
    # transpose [M^T | I]; rows whose M^T part vanished hold kernel vectors
    work = []
    for j in range(n):
        work.append([rows[i][j] for i in range(m)] + [int(k == j) for k in range(n)])
    reduced = _row_hnf(work)
    kernel_cols = [tuple(r[m:]) for r in reduced if not any(r[:m])]
    return ZLattice.from_integer_columns(kernel_cols, n)


def solve_in_lattice(lattice, vector):
    return lattice.solve(vector)


# -- text format -------------------------------------------------------------


def lattice_to_text(lattice):
    """den= line plus the basis matrix, rows ';'-separated, entries ','."""
    rows = [
        ",".join(int_to_str(col[i]) for col in lattice.basis)
        for i in range(lattice.ambient_dim)
    ]
    return f"den={lattice.den}\n" + ";".join(rows)


def lattice_from_text(text):
    lines = [ln.strip() for ln in text.strip().splitlines() if ln.strip()]
    den = 1
    if lines and lines[0].startswith("den="):
        den = str_to_int(lines[0][4:])
        lines = lines[1:]
    if not lines:
        raise ValueError("missing matrix line")
    rows = [[str_to_int(x) for x in row.split(",")] for row in ";".join(lines).split(";")]
    ambient = len(rows)
    cols = [tuple(row[j] for row in rows) for j in range(len(rows[0]))]
    return ZLattice.from_integer_columns(cols, ambient, den=den)
