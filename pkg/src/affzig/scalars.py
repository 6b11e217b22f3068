"""
Exact coefficient rings and truncated graded-dimension series.

Everything in this package computes over an exact commutative coefficient
ring: the integers (default), the rationals, or a prime field Z/p.  No
floating point is used anywhere.  Ring elements are plain Python objects
(`int` for Z and Z/p residues, `Fraction` for Q); the ring object carries
the arithmetic.

This module also provides the exact linear algebra shared by the rest of
the package (row reduction, rank, kernels and solving over Q or Z/p) and
`GradedDim`, a truncated power series in q with integer coefficients used
for graded-dimension bookkeeping.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction


class IntegerRing:
    """The ring of integers."""

    name = "int"
    is_field = False
    characteristic = 0

    def coerce(self, x):
        if isinstance(x, int):
            return x
        if isinstance(x, Fraction) and x.denominator == 1:
            return int(x)
        raise TypeError(f"not an integer: {x!r}")

    zero = 0
    one = 1

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return a * b

    def neg(self, a):
        return -a

    def is_zero(self, a):
        return a == 0

    def is_unit(self, a):
        return a in (1, -1)

    def inv(self, a):
        if a in (1, -1):
            return a
        raise ZeroDivisionError(f"{a} is not a unit in Z")


class RationalRing:
    """The field of rational numbers."""

    name = "rat"
    is_field = True
    characteristic = 0

    def coerce(self, x):
        return Fraction(x)

    zero = Fraction(0)
    one = Fraction(1)

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return a * b

    def neg(self, a):
        return -a

    def is_zero(self, a):
        return a == 0

    def is_unit(self, a):
        return a != 0

    def inv(self, a):
        return Fraction(1) / a


class PrimeField:
    """The prime field Z/p, elements stored as residues in [0, p)."""

    is_field = True

    def __init__(self, p: int):
        if p < 2 or any(p % k == 0 for k in range(2, int(p**0.5) + 1)):
            raise ValueError(f"modulus must be prime, got {p}")
        self.p = p
        self.name = f"mod:{p}"
        self.characteristic = p
        self.zero = 0
        self.one = 1 % p

    def coerce(self, x):
        if isinstance(x, Fraction):
            if x.denominator % self.p == 0:
                raise ZeroDivisionError("denominator divisible by p")
            return x.numerator * pow(x.denominator, -1, self.p) % self.p
        return int(x) % self.p

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def mul(self, a, b):
        return (a * b) % self.p

    def neg(self, a):
        return (-a) % self.p

    def is_zero(self, a):
        return a % self.p == 0

    def is_unit(self, a):
        return a % self.p != 0

    def inv(self, a):
        return pow(a, -1, self.p)


ZZ = IntegerRing()
QQ = RationalRing()


def ring_from_name(name: str):
    """Parse a CLI ring selector: "int", "rat" or "mod:p"."""
    if name == "int":
        return ZZ
    if name == "rat":
        return QQ
    if name.startswith("mod:"):
        return PrimeField(int(name[4:]))
    raise ValueError(f"unknown ring {name!r}")


def field_of(ring):
    """The field computations over `ring` embed into (Q for Z)."""
    if ring.is_field:
        return ring
    return QQ


# ---------------------------------------------------------------------------
# exact linear algebra (dense, small matrices; field coefficients)


def row_reduce(rows: list[list], field) -> tuple[list[list], list[int]]:
    """Return (reduced rows, pivot column indices); rows are modified copies."""
    rows = [list(map(field.coerce, r)) for r in rows]
    if not rows:
        return [], []
    ncols = len(rows[0])
    pivots = []
    r = 0
    for c in range(ncols):
        pick = None
        for i in range(r, len(rows)):
            if not field.is_zero(rows[i][c]):
                pick = i
                break
        if pick is None:
            continue
        rows[r], rows[pick] = rows[pick], rows[r]
        inv = field.inv(rows[r][c])
        rows[r] = [field.mul(inv, x) for x in rows[r]]
        for i in range(len(rows)):
            if i != r and not field.is_zero(rows[i][c]):
                f = rows[i][c]
                rows[i] = [field.sub(x, field.mul(f, y)) for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return rows[:r], pivots


def matrix_rank(rows: list[list], field) -> int:
    return len(row_reduce(rows, field)[0])


def kernel_basis(rows: list[list], field, ncols: int) -> list[list]:
    """Basis of the right kernel {v : A v = 0} of the matrix with given rows."""
    red, pivots = row_reduce(rows, field)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        v = [field.zero] * ncols
        v[f] = field.one
        for i, p in enumerate(pivots):
            v[p] = field.neg(red[i][f])
        basis.append(v)
    return basis


def solve_unique(rows: list[list], rhs: list, field):
    """Solve A x = b when a solution exists; return None if inconsistent.

    The caller is responsible for uniqueness (full column rank) if needed.
    """
    if not rows:
        return [] if all(field.is_zero(field.coerce(b)) for b in rhs) else None
    ncols = len(rows[0])
    aug = [list(r) + [b] for r, b in zip(rows, rhs)]
    red, pivots = row_reduce(aug, field)
    x = [field.zero] * ncols
    for i, p in enumerate(pivots):
        if p == ncols:
            return None  # pivot in the augmented column: inconsistent
        x[p] = red[i][ncols]
    return x


def integer_matrix_det(rows: list[list[int]]) -> int:
    """Determinant of a square integer matrix, exactly (via fractions)."""
    n = len(rows)
    m = [[Fraction(x) for x in r] for r in rows]
    det = Fraction(1)
    for c in range(n):
        pick = next((i for i in range(c, n) if m[i][c] != 0), None)
        if pick is None:
            return 0
        if pick != c:
            m[c], m[pick] = m[pick], m[c]
            det = -det
        det *= m[c][c]
        inv = 1 / m[c][c]
        for i in range(c + 1, n):
            if m[i][c] != 0:
                f = m[i][c] * inv
                m[i] = [x - f * y for x, y in zip(m[i], m[c])]
    assert det.denominator == 1
    return int(det)


def invert_matrix(rows: list[list], field) -> list[list] | None:
    """Inverse of a square matrix over a field, or None if singular."""
    n = len(rows)
    aug = [list(map(field.coerce, r)) + [field.one if i == j else field.zero for j in range(n)]
           for i, r in enumerate(rows)]
    red, pivots = row_reduce(aug, field)
    if pivots[:n] != list(range(n)):
        return None
    return [r[n:] for r in red]


# ---------------------------------------------------------------------------
# truncated graded dimensions


@dataclass(frozen=True)
class GradedDim:
    """Coefficients of a power series in q, truncated at degree D."""

    trunc: int
    coeffs: tuple[int, ...]

    @staticmethod
    def from_coeffs(coeffs, trunc: int) -> "GradedDim":
        if trunc < 0:
            raise ValueError("truncation degree must be >= 0")
        cs = list(coeffs)[: trunc + 1]
        cs += [0] * (trunc + 1 - len(cs))
        return GradedDim(trunc, tuple(cs))

    @staticmethod
    def zero(trunc: int) -> "GradedDim":
        return GradedDim.from_coeffs([], trunc)

    def __add__(self, other: "GradedDim") -> "GradedDim":
        assert self.trunc == other.trunc
        return GradedDim(self.trunc, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __mul__(self, other: "GradedDim") -> "GradedDim":
        assert self.trunc == other.trunc
        out = [0] * (self.trunc + 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                if i + j > self.trunc:
                    break
                out[i + j] += a * b
        return GradedDim(self.trunc, tuple(out))

    def scale(self, k: int) -> "GradedDim":
        return GradedDim(self.trunc, tuple(k * c for c in self.coeffs))

    def to_json(self) -> dict:
        return {"trunc": self.trunc, "coeffs": list(self.coeffs)}


def series_of_rational(numerator, denominator_factors, trunc: int) -> GradedDim:
    """Expand numerator / prod_k (1 - q^{d_k}) as a series up to degree `trunc`.

    `numerator` is an iterable of integer coefficients (q^0, q^1, ...);
    `denominator_factors` lists the exponents d_k >= 1.
    """
    if trunc < 0:
        raise ValueError("truncation degree must be >= 0")
    for d in denominator_factors:
        if d < 1:
            raise ValueError(f"denominator factor exponent must be >= 1, got {d}")
    out = list(numerator)[: trunc + 1]
    out += [0] * (trunc + 1 - len(out))
    # multiplying by 1/(1-q^d) is a running sum with stride d
    for d in denominator_factors:
        for i in range(d, trunc + 1):
            out[i] += out[i - d]
    return GradedDim(trunc, tuple(out))


def poly_long_division_series(numerator, denominator, trunc: int) -> list[int]:
    """Series expansion of numerator/denominator by long division (oracle use).

    `denominator` must have nonzero constant term; exact rational arithmetic.
    """
    num = [Fraction(c) for c in numerator] + [Fraction(0)] * (trunc + 1)
    den = [Fraction(c) for c in denominator]
    assert den[0] != 0
    out = []
    for i in range(trunc + 1):
        c = num[i] / den[0]
        out.append(c)
        for j, dj in enumerate(den):
            if i + j <= trunc:
                num[i + j] -= c * dj
    assert all(c.denominator == 1 for c in out)
    return [int(c) for c in out]
