"""Exact scalars and dense linear algebra over the rationals and prime fields.

Scalars are ``fractions.Fraction`` values over the rationals and canonical
residues (plain ints in ``[0, p)``) over GF(p).  Matrices are immutable,
dense and row-major.  Everything is exact: there is no floating point
anywhere in the package and equality is structural.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence

RATIONAL = "rational"
PRIME = "prime"

_INT_PATTERN = r"[+-]?\d+"


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    f = 3
    while f * f <= p:
        if p % f == 0:
            return False
        f += 2
    return True


@dataclass(frozen=True)
class FieldSpec:
    """The coefficient field: the rationals, or GF(p) with p prime."""

    kind: str
    p: int | None = None

    def __post_init__(self) -> None:
        if self.kind == RATIONAL:
            if self.p is not None:
                raise ValueError("rational field takes no modulus")
        elif self.kind == PRIME:
            p = self.p
            if not isinstance(p, int) or isinstance(p, bool) or not _is_prime(p):
                raise ValueError(f"modulus must be a prime integer, got {p!r}")
        else:
            raise ValueError(f"unknown field kind: {self.kind!r}")

    @classmethod
    def rational(cls) -> "FieldSpec":
        return cls(RATIONAL)

    @classmethod
    def prime(cls, p: int) -> "FieldSpec":
        return cls(PRIME, p)

    @property
    def label(self) -> str:
        return "rational" if self.kind == RATIONAL else f"gf{self.p}"

    # scalar construction -------------------------------------------------

    @property
    def zero(self):
        return Fraction(0) if self.kind == RATIONAL else 0

    @property
    def one(self):
        return Fraction(1) if self.kind == RATIONAL else 1

    def from_int(self, k: int):
        return Fraction(k) if self.kind == RATIONAL else k % self.p

    def parse(self, value):
        """Scalar from an int or a string 'a' / 'a/b'.  Decimal notation is
        rejected: inputs must denote exact field elements."""
        if isinstance(value, bool):
            raise ValueError("booleans are not field elements")
        if self.kind == RATIONAL:
            if isinstance(value, int):
                return Fraction(value)
            if isinstance(value, str):
                parts = value.strip().split("/")
                if len(parts) > 2 or not all(_looks_int(s) for s in parts):
                    raise ValueError(f"not an exact rational: {value!r}")
                num = int(parts[0])
                den = int(parts[1]) if len(parts) == 2 else 1
                if den == 0:
                    raise ValueError(f"zero denominator: {value!r}")
                return Fraction(num, den)
            raise ValueError(f"not an exact rational: {value!r}")
        if isinstance(value, str):
            if not _looks_int(value.strip()):
                raise ValueError(f"not a residue: {value!r}")
            value = int(value)
        if not isinstance(value, int):
            raise ValueError(f"not a residue: {value!r}")
        if not 0 <= value < self.p:
            raise ValueError(f"residue {value} out of range [0, {self.p})")
        return value

    def format(self, a):
        """Canonical document form: an int, or 'num/den' for non-integers."""
        if a.denominator == 1:
            return int(a)
        return f"{a.numerator}/{a.denominator}"

    def sort_key(self, a) -> tuple:
        if self.kind == RATIONAL:
            return (a.numerator, a.denominator)
        return (a,)

    # arithmetic -----------------------------------------------------------

    def add(self, a, b):
        return a + b if self.kind == RATIONAL else (a + b) % self.p

    def sub(self, a, b):
        return a - b if self.kind == RATIONAL else (a - b) % self.p

    def mul(self, a, b):
        return a * b if self.kind == RATIONAL else (a * b) % self.p

    def neg(self, a):
        return -a if self.kind == RATIONAL else (-a) % self.p

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        if self.kind == RATIONAL:
            return 1 / Fraction(a)
        return pow(a, -1, self.p)

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    # row kernels used by the echelon-form code ---------------------------

    def row_axpy(self, v: list, c, r: list) -> list:
        """v - c*r, elementwise over rows of equal length."""
        if self.kind == RATIONAL:
            return [x - c * y for x, y in zip(v, r)]
        p = self.p
        return [(x - c * y) % p for x, y in zip(v, r)]

    def row_scale(self, v: list, c) -> list:
        if self.kind == RATIONAL:
            return [c * x for x in v]
        p = self.p
        return [(c * x) % p for x in v]

    def dot(self, u: Sequence, v: Sequence):
        if self.kind == RATIONAL:
            return Fraction(sum(a * b for a, b in zip(u, v)))
        return sum(a * b for a, b in zip(u, v)) % self.p


def _looks_int(s: str) -> bool:
    s = s.strip()
    if s and s[0] in "+-":
        s = s[1:]
    return s.isdigit()


@dataclass(frozen=True)
class ExactMatrix:
    """Immutable dense matrix with entries in a fixed field."""

    rows: int
    cols: int
    entries: tuple
    field: FieldSpec

    def __post_init__(self) -> None:
        if self.rows < 1 or self.cols < 1:
            raise ValueError("matrix dimensions must be positive")
        if len(self.entries) != self.rows * self.cols:
            raise ValueError("entry count does not match the declared shape")

    @classmethod
    def from_rows(cls, field: FieldSpec, data: Sequence[Sequence]) -> "ExactMatrix":
        rows = len(data)
        if rows == 0:
            raise ValueError("matrix dimensions must be positive")
        cols = len(data[0])
        if any(len(r) != cols for r in data):
            raise ValueError("ragged rows")
        ents = tuple(x for r in data for x in r)
        return cls(rows, cols, ents, field)

    @classmethod
    def identity(cls, field: FieldSpec, n: int) -> "ExactMatrix":
        one, zero = field.one, field.zero
        ents = tuple(one if i == j else zero for i in range(n) for j in range(n))
        return cls(n, n, ents, field)

    @classmethod
    def zeros(cls, field: FieldSpec, rows: int, cols: int) -> "ExactMatrix":
        return cls(rows, cols, (field.zero,) * (rows * cols), field)

    @classmethod
    def diagonal(cls, field: FieldSpec, diag: Sequence) -> "ExactMatrix":
        n = len(diag)
        zero = field.zero
        ents = tuple(diag[i] if i == j else zero for i in range(n) for j in range(n))
        return cls(n, n, ents, field)

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    def entry(self, i: int, j: int):
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> list:
        return list(self.entries[i * self.cols : (i + 1) * self.cols])

    def row_lists(self) -> list[list]:
        return [self.row(i) for i in range(self.rows)]

    def _same_shape(self, other: "ExactMatrix") -> None:
        if self.field != other.field:
            raise ValueError("field mismatch")
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ValueError("shape mismatch")

    def __add__(self, other: "ExactMatrix") -> "ExactMatrix":
        self._same_shape(other)
        add = self.field.add
        ents = tuple(add(a, b) for a, b in zip(self.entries, other.entries))
        return ExactMatrix(self.rows, self.cols, ents, self.field)

    def __sub__(self, other: "ExactMatrix") -> "ExactMatrix":
        self._same_shape(other)
        sub = self.field.sub
        ents = tuple(sub(a, b) for a, b in zip(self.entries, other.entries))
        return ExactMatrix(self.rows, self.cols, ents, self.field)

    def __neg__(self) -> "ExactMatrix":
        neg = self.field.neg
        return ExactMatrix(self.rows, self.cols, tuple(neg(a) for a in self.entries), self.field)

    def __mul__(self, other):
        if not isinstance(other, ExactMatrix):
            return self.scale(other)
        if self.field != other.field:
            raise ValueError("field mismatch")
        if self.cols != other.rows:
            raise ValueError("shape mismatch in product")
        dot = self.field.dot
        cols = [
            [other.entries[r * other.cols + c] for r in range(other.rows)]
            for c in range(other.cols)
        ]
        ents = tuple(dot(self.row(i), col) for i in range(self.rows) for col in cols)
        return ExactMatrix(self.rows, other.cols, ents, self.field)

    def __rmul__(self, other):
        return self.scale(other)

    def scale(self, c) -> "ExactMatrix":
        mul = self.field.mul
        return ExactMatrix(self.rows, self.cols, tuple(mul(c, a) for a in self.entries), self.field)

    def power(self, k: int) -> "ExactMatrix":
        if not self.is_square:
            raise ValueError("powers need a square matrix")
        if k < 0:
            raise ValueError("negative powers are not supported")
        acc = ExactMatrix.identity(self.field, self.rows)
        for _ in range(k):
            acc = acc * self
        return acc

    def apply(self, vec: Sequence) -> tuple:
        """Matrix times column vector."""
        if len(vec) != self.cols:
            raise ValueError("vector length mismatch")
        dot = self.field.dot
        return tuple(dot(self.row(i), vec) for i in range(self.rows))

    def transpose(self) -> "ExactMatrix":
        ents = tuple(self.entry(i, j) for j in range(self.cols) for i in range(self.rows))
        return ExactMatrix(self.cols, self.rows, ents, self.field)

    def trace(self):
        if not self.is_square:
            raise ValueError("trace needs a square matrix")
        acc = self.field.zero
        for i in range(self.rows):
            acc = self.field.add(acc, self.entry(i, i))
        return acc

    def is_zero(self) -> bool:
        return all(not x for x in self.entries)


# ---------------------------------------------------------------------------
# reduced row echelon form and friends


@dataclass(frozen=True)
class RrefResult:
    reduced: ExactMatrix
    rank: int
    pivots: tuple[int, ...]


def _rref_rows(rows: list[list], field: FieldSpec) -> tuple[list[list], list[int]]:
    """In-place Gauss-Jordan on a list of rows; returns (rows, pivot columns).

    Pivoting takes the first row with a nonzero entry in the current column,
    so the result is deterministic.  Pivots are normalized to 1 and cleared
    above and below, which makes the output the unique reduced form.
    """
    if not rows:
        return rows, []
    ncols = len(rows[0])
    pivots: list[int] = []
    r = 0
    for col in range(ncols):
        pivot_row = None
        for k in range(r, len(rows)):
            if rows[k][col]:
                pivot_row = k
                break
        if pivot_row is None:
            continue
        rows[r], rows[pivot_row] = rows[pivot_row], rows[r]
        inv = field.inv(rows[r][col])
        if inv != field.one:
            rows[r] = field.row_scale(rows[r], inv)
        for k in range(len(rows)):
            if k != r and rows[k][col]:
                rows[k] = field.row_axpy(rows[k], rows[k][col], rows[r])
        pivots.append(col)
        r += 1
        if r == len(rows):
            break
    return rows, pivots


def rref(m: ExactMatrix) -> RrefResult:
    """Unique reduced row echelon form, rank and pivot columns of m."""
    rows, pivots = _rref_rows(m.row_lists(), m.field)
    ents = tuple(x for row in rows for x in row)
    return RrefResult(ExactMatrix(m.rows, m.cols, ents, m.field), len(pivots), tuple(pivots))


def kernel_basis(m: ExactMatrix) -> list[tuple]:
    """Basis of the right kernel of m, read off the reduced echelon form.

    One vector per free column, with a 1 in the free position; this is the
    standard canonical kernel basis, so the output is deterministic.
    """
    res = rref(m)
    field = m.field
    pivots = list(res.pivots)
    pivot_set = set(pivots)
    free = [c for c in range(m.cols) if c not in pivot_set]
    basis = []
    for f in free:
        vec = [field.zero] * m.cols
        vec[f] = field.one
        for k, pc in enumerate(pivots):
            vec[pc] = field.neg(res.reduced.entry(k, f))
        basis.append(tuple(vec))
    return basis


class SubspaceBasis:
    """A subspace kept as reduced-echelon rows, with exact membership tests.

    Rows are fully reduced, pivot-normalized and sorted by pivot column, so
    two instances spanning the same subspace hold identical rows.  Stored
    row lists are never mutated in place, which keeps copies cheap.
    """

    __slots__ = ("ambient_dim", "field", "_rows", "_pivots")

    def __init__(self, ambient_dim: int, field: FieldSpec):
        if ambient_dim < 1:
            raise ValueError("ambient dimension must be positive")
        self.ambient_dim = ambient_dim
        self.field = field
        self._rows: list[list] = []
        self._pivots: list[int] = []

    @property
    def dim(self) -> int:
        return len(self._rows)

    @property
    def vectors(self) -> tuple[tuple, ...]:
        return tuple(tuple(r) for r in self._rows)

    def copy(self) -> "SubspaceBasis":
        dup = SubspaceBasis(self.ambient_dim, self.field)
        dup._rows = list(self._rows)
        dup._pivots = list(self._pivots)
        return dup

    def residue(self, vec: Sequence) -> list:
        """vec reduced against the stored rows; zero iff vec lies in the span."""
        if len(vec) != self.ambient_dim:
            raise ValueError("vector length mismatch")
        v = list(vec)
        axpy = self.field.row_axpy
        for row, piv in zip(self._rows, self._pivots):
            c = v[piv]
            if c:
                v = axpy(v, c, row)
        return v

    def contains(self, vec: Sequence) -> bool:
        return not any(self.residue(vec))

    def add(self, vec: Sequence) -> bool:
        """Insert vec; returns True when the dimension grew."""
        v = self.residue(vec)
        lead = -1
        for idx, x in enumerate(v):
            if x:
                lead = idx
                break
        if lead < 0:
            return False
        field = self.field
        v = field.row_scale(v, field.inv(v[lead]))
        rows, pivots = [], []
        placed = False
        for row, piv in zip(self._rows, self._pivots):
            c = row[lead]
            row = field.row_axpy(row, c, v) if c else row
            if not placed and piv > lead:
                rows.append(v)
                pivots.append(lead)
                placed = True
            rows.append(row)
            pivots.append(piv)
        if not placed:
            rows.append(v)
            pivots.append(lead)
        self._rows = rows
        self._pivots = pivots
        return True

    def add_all(self, vecs: Iterable[Sequence]) -> int:
        grown = 0
        for v in vecs:
            if self.add(v):
                grown += 1
        return grown

    def __eq__(self, other) -> bool:
        if not isinstance(other, SubspaceBasis):
            return NotImplemented
        return (
            self.ambient_dim == other.ambient_dim
            and self.field == other.field
            and self.vectors == other.vectors
        )

    def __repr__(self) -> str:
        return f"SubspaceBasis(dim={self.dim}, ambient={self.ambient_dim})"


def matrices_span(mats: Sequence[ExactMatrix]) -> SubspaceBasis:
    """Row space of the flattened matrices (all must share shape and field)."""
    mats = list(mats)
    if not mats:
        raise ValueError("need at least one matrix")
    first = mats[0]
    for m in mats[1:]:
        if m.field != first.field or (m.rows, m.cols) != (first.rows, first.cols):
            raise ValueError("matrices must share shape and field")
    span = SubspaceBasis(first.rows * first.cols, first.field)
    for m in mats:
        span.add(m.entries)
    return span


def span_rank(mats: Sequence[ExactMatrix]) -> int:
    """Dimension of the span of the given matrices inside End(V)."""
    mats = list(mats)
    if not mats:
        return 0
    return matrices_span(mats).dim


def solve_row_combination(rows: Sequence[Sequence], target: Sequence, field: FieldSpec):
    """Coefficients c with sum(c_k * rows[k]) == target, or None if unsolvable.

    Free coefficients, if any, are set to zero.
    """
    k = len(rows)
    if k == 0:
        return [] if not any(target) else None
    ambient = len(target)
    grid = [[rows[i][r] for i in range(k)] + [target[r]] for r in range(ambient)]
    reduced, pivots = _rref_rows(grid, field)
    if k in pivots:
        return None
    coeffs = [field.zero] * k
    for r, pc in enumerate(pivots):
        coeffs[pc] = reduced[r][k]
    return coeffs


# ---------------------------------------------------------------------------
# polynomials


@dataclass(frozen=True)
class Polynomial:
    """Dense polynomial with ascending coefficients, trailing zeros trimmed."""

    coeffs: tuple
    field: FieldSpec

    def __post_init__(self) -> None:
        c = tuple(self.coeffs)
        while c and not c[-1]:
            c = c[:-1]
        object.__setattr__(self, "coeffs", c)

    @classmethod
    def zero(cls, field: FieldSpec) -> "Polynomial":
        return cls((), field)

    @classmethod
    def one(cls, field: FieldSpec) -> "Polynomial":
        return cls((field.one,), field)

    @classmethod
    def constant(cls, c, field: FieldSpec) -> "Polynomial":
        return cls((c,), field)

    @classmethod
    def variable(cls, field: FieldSpec) -> "Polynomial":
        return cls((field.zero, field.one), field)

    @classmethod
    def from_roots(cls, field: FieldSpec, roots: Sequence) -> "Polynomial":
        """Monic product of (x - r) over the given roots."""
        acc = cls.one(field)
        for r in roots:
            acc = acc * cls((field.neg(r), field.one), field)
        return acc

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == self.field.one

    def _check(self, other: "Polynomial") -> None:
        if self.field != other.field:
            raise ValueError("field mismatch")

    def __add__(self, other: "Polynomial") -> "Polynomial":
        self._check(other)
        add, zero = self.field.add, self.field.zero
        n = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (zero,) * (n - len(self.coeffs))
        b = other.coeffs + (zero,) * (n - len(other.coeffs))
        return Polynomial(tuple(add(x, y) for x, y in zip(a, b)), self.field)

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        return self + other.scale(self.field.neg(self.field.one))

    def __mul__(self, other: "Polynomial") -> "Polynomial":
        self._check(other)
        if self.is_zero or other.is_zero:
            return Polynomial.zero(self.field)
        add, mul, zero = self.field.add, self.field.mul, self.field.zero
        out = [zero] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            for j, b in enumerate(other.coeffs):
                if b:
                    out[i + j] = add(out[i + j], mul(a, b))
        return Polynomial(tuple(out), self.field)

    def scale(self, c) -> "Polynomial":
        mul = self.field.mul
        return Polynomial(tuple(mul(c, a) for a in self.coeffs), self.field)

    def __call__(self, x):
        acc = self.field.zero
        for c in reversed(self.coeffs):
            acc = self.field.add(self.field.mul(acc, x), c)
        return acc

    def deflate(self, root) -> "Polynomial":
        """Quotient by (x - root); requires root to be an exact root."""
        if self.degree < 1:
            raise ValueError("cannot deflate a constant")
        add, mul = self.field.add, self.field.mul
        out = [self.field.zero] * self.degree
        carry = self.field.zero
        for i in range(self.degree, 0, -1):
            carry = add(self.coeffs[i], mul(root, carry))
            out[i - 1] = carry
        rem = add(self.coeffs[0], mul(root, carry))
        if rem:
            raise ValueError("not a root")
        return Polynomial(tuple(out), self.field)

    def padded(self, length: int) -> tuple:
        if len(self.coeffs) > length:
            raise ValueError("polynomial longer than requested padding")
        return self.coeffs + (self.field.zero,) * (length - len(self.coeffs))


# ---------------------------------------------------------------------------
# characteristic polynomial and eigen decomposition


def char_poly(m: ExactMatrix) -> Polynomial:
    """Monic characteristic polynomial det(x*I - m), computed exactly.

    Uses the trace recurrence when 1..n are invertible in the field (always
    over the rationals, and over GF(p) when p > n); otherwise falls back to
    cofactor expansion over polynomial entries, which is division free.
    """
    if not m.is_square:
        raise ValueError("characteristic polynomial needs a square matrix")
    n = m.rows
    field = m.field
    if field.kind == RATIONAL or field.p > n:
        coeffs = [field.zero] * (n + 1)
        coeffs[n] = field.one
        acc = ExactMatrix.zeros(field, n, n)
        ident = ExactMatrix.identity(field, n)
        for k in range(1, n + 1):
            acc = m * acc + ident.scale(coeffs[n - k + 1])
            tr = (m * acc).trace()
            coeffs[n - k] = field.neg(field.div(tr, field.from_int(k)))
        return Polynomial(tuple(coeffs), field)
    grid = []
    for i in range(n):
        row = []
        for j in range(n):
            c = field.neg(m.entry(i, j))
            row.append(Polynomial((c, field.one), field) if i == j else Polynomial((c,), field))
        grid.append(row)
    return _poly_det(grid, field)


def _poly_det(grid: list[list[Polynomial]], field: FieldSpec) -> Polynomial:
    n = len(grid)
    if n == 1:
        return grid[0][0]
    acc = Polynomial.zero(field)
    sign = field.one
    for j in range(n):
        top = grid[0][j]
        if not top.is_zero:
            minor = [[grid[i][c] for c in range(n) if c != j] for i in range(1, n)]
            acc = acc + (top * _poly_det(minor, field)).scale(sign)
        sign = field.neg(sign)
    return acc


class EigenFailure(Enum):
    """Why an eigen decomposition over the base field does not exist."""

    NOT_DIAGONALIZABLE = "not_diagonalizable"
    EIGENVALUE_OUTSIDE_FIELD = "eigenvalue_outside_field"


@dataclass(frozen=True)
class EigenData:
    """Distinct eigenvalues (sorted by the field's total order) with bases of
    the matching eigenspaces."""

    eigenvalues: tuple
    eigenspaces: tuple[tuple[tuple, ...], ...]

    @property
    def dims(self) -> tuple[int, ...]:
        return tuple(len(sp) for sp in self.eigenspaces)


def _divisors(n: int) -> list[int]:
    n = abs(n)
    out = []
    i = 1
    while i * i <= n:
        if n % i == 0:
            out.append(i)
            if i != n // i:
                out.append(n // i)
        i += 1
    return sorted(out)


def _rational_roots(poly: Polynomial) -> list[tuple]:
    """(root, multiplicity) pairs for all rational roots, by the integer
    root bound on the denominator-cleared coefficients."""
    field = poly.field
    work = poly
    found = []
    zero_mult = 0
    while work.degree > 0 and not work.coeffs[0]:
        work = Polynomial(work.coeffs[1:], field)
        zero_mult += 1
    if zero_mult:
        found.append((Fraction(0), zero_mult))
    if work.degree < 1:
        return found
    scale = math.lcm(*(c.denominator for c in work.coeffs))
    ints = [int(c * scale) for c in work.coeffs]
    candidates = set()
    for a in _divisors(ints[0]):
        for b in _divisors(ints[-1]):
            candidates.add(Fraction(a, b))
            candidates.add(Fraction(-a, b))
    for r in sorted(candidates):
        mult = 0
        while work.degree > 0 and work(r) == 0:
            work = work.deflate(r)
            mult += 1
        if mult:
            found.append((r, mult))
        if work.degree < 1:
            break
    return found


def _prime_roots(poly: Polynomial) -> list[tuple]:
    field = poly.field
    work = poly
    found = []
    for r in range(field.p):
        mult = 0
        while work.degree > 0 and work(r) == 0:
            work = work.deflate(r)
            mult += 1
        if mult:
            found.append((r, mult))
        if work.degree < 1:
            break
    return found


@lru_cache(maxsize=None)
def eigen_data(m: ExactMatrix):
    """Exact eigen decomposition of m over its own field.

    Returns EigenData on success.  Returns a verdict instead of raising when
    the matrix has no such decomposition: EIGENVALUE_OUTSIDE_FIELD when the
    characteristic polynomial does not split into linear factors over the
    field, NOT_DIAGONALIZABLE when it splits but the eigenspace dimensions
    do not sum to n.
    """
    if not m.is_square:
        raise ValueError("eigen decomposition needs a square matrix")
    n = m.rows
    field = m.field
    cp = char_poly(m)
    roots = _rational_roots(cp) if field.kind == RATIONAL else _prime_roots(cp)
    if sum(mult for _, mult in roots) < n:
        return EigenFailure.EIGENVALUE_OUTSIDE_FIELD
    roots.sort(key=lambda rm: field.sort_key(rm[0]))
    ident = ExactMatrix.identity(field, n)
    spaces = []
    total = 0
    for theta, _ in roots:
        basis = kernel_basis(m - ident.scale(theta))
        total += len(basis)
        spaces.append(tuple(basis))
    if total < n:
        return EigenFailure.NOT_DIAGONALIZABLE
    return EigenData(tuple(r for r, _ in roots), tuple(spaces))
