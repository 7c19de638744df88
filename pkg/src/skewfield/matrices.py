"""Dense exact matrices over a field descriptor.

Entries are stored as raw canonical payloads (Fraction, residue int, or
coefficient tuple) and all inner loops go through the descriptor's payload
arithmetic, so results are exact and deterministic for every field kind.

Matrices are immutable; operations return new matrices and are safe to use
from concurrent code.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import (BadParams, DescriptorMismatch, NonSquare, ShapeMismatch,
                     Singular)
from .fields import FieldDescriptor, FieldElement, Polynomial, QQ


class Matrix:
    __slots__ = ("field", "nrows", "ncols", "rows")

    def __init__(self, field: FieldDescriptor, rows):
        data = tuple(tuple(field.coerce(v) for v in row) for row in rows)
        if not data or not data[0]:
            raise BadParams("matrices must have at least one row and column")
        width = len(data[0])
        if any(len(row) != width for row in data):
            raise BadParams("all rows must have the same length")
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "nrows", len(data))
        object.__setattr__(self, "ncols", width)
        object.__setattr__(self, "rows", data)

    def __setattr__(self, name, value):
        raise AttributeError("Matrix is immutable")

    # -- constructors --------------------------------------------------------

    @classmethod
    def identity(cls, field: FieldDescriptor, n: int) -> "Matrix":
        one, zero = field.one, field.zero
        return cls(field, [[one if i == j else zero for j in range(n)]
                           for i in range(n)])

    @classmethod
    def zeros(cls, field: FieldDescriptor, nrows: int, ncols: int | None = None) -> "Matrix":
        ncols = nrows if ncols is None else ncols
        zero = field.zero
        return cls(field, [[zero] * ncols for _ in range(nrows)])

    @classmethod
    def diagonal(cls, field: FieldDescriptor, values) -> "Matrix":
        vals = [field.coerce(v) for v in values]
        zero = field.zero
        n = len(vals)
        return cls(field, [[vals[i] if i == j else zero for j in range(n)]
                           for i in range(n)])

    @classmethod
    def from_columns(cls, field: FieldDescriptor, columns) -> "Matrix":
        cols = [list(c) for c in columns]
        return cls(field, [[cols[j][i] for j in range(len(cols))]
                           for i in range(len(cols[0]))])

    @classmethod
    def elementary(cls, field: FieldDescriptor, n: int, i: int, j: int, c) -> "Matrix":
        """I + c * E_ij with i != j; determinant one."""
        if i == j:
            raise BadParams("elementary transvection needs i != j")
        rows = [list(r) for r in cls.identity(field, n).rows]
        rows[i][j] = field.coerce(c)
        return cls(field, rows)

    # -- basic accessors -----------------------------------------------------

    def __getitem__(self, key) -> FieldElement:
        i, j = key
        return FieldElement(self.field, self.rows[i][j])

    def column(self, j):
        return tuple(row[j] for row in self.rows)

    def is_square(self) -> bool:
        return self.nrows == self.ncols

    def _require_square(self):
        if not self.is_square():
            raise NonSquare(f"matrix is {self.nrows}x{self.ncols}")

    def _check_compatible(self, other):
        if not isinstance(other, Matrix):
            raise ShapeMismatch("expected a matrix operand")
        if self.field != other.field:
            raise DescriptorMismatch("matrices over different fields")

    # -- ring operations -----------------------------------------------------

    def __add__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        self._check_compatible(other)
        if (self.nrows, self.ncols) != (other.nrows, other.ncols):
            raise ShapeMismatch("matrix addition needs equal shapes")
        add = self.field.add
        return Matrix(self.field,
                      [[add(a, b) for a, b in zip(ra, rb)]
                       for ra, rb in zip(self.rows, other.rows)])

    def __sub__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        self._check_compatible(other)
        if (self.nrows, self.ncols) != (other.nrows, other.ncols):
            raise ShapeMismatch("matrix subtraction needs equal shapes")
        sub = self.field.sub
        return Matrix(self.field,
                      [[sub(a, b) for a, b in zip(ra, rb)]
                       for ra, rb in zip(self.rows, other.rows)])

    def __neg__(self):
        neg = self.field.neg
        return Matrix(self.field, [[neg(a) for a in row] for row in self.rows])

    def __mul__(self, other):
        if isinstance(other, Matrix):
            self._check_compatible(other)
            if self.ncols != other.nrows:
                raise ShapeMismatch(
                    f"cannot multiply {self.nrows}x{self.ncols} by "
                    f"{other.nrows}x{other.ncols}")
            field = self.field
            add, mul, zero = field.add, field.mul, field.zero
            bt = list(zip(*other.rows))
            out = []
            for row in self.rows:
                out_row = []
                for col in bt:
                    acc = zero
                    for a, b in zip(row, col):
                        acc = add(acc, mul(a, b))
                    out_row.append(acc)
                out.append(out_row)
            return Matrix(field, out)
        scalar = self._as_scalar(other)
        if scalar is None:
            return NotImplemented
        mul = self.field.mul
        return Matrix(self.field,
                      [[mul(a, scalar) for a in row] for row in self.rows])

    def __rmul__(self, other):
        scalar = self._as_scalar(other)
        if scalar is None:
            return NotImplemented
        mul = self.field.mul
        return Matrix(self.field,
                      [[mul(scalar, a) for a in row] for row in self.rows])

    def _as_scalar(self, value):
        if isinstance(value, FieldElement):
            if value.field != self.field:
                raise DescriptorMismatch("scalar from a different field")
            return value.payload
        if isinstance(value, (int, Fraction)):
            return self.field.coerce(value)
        return None

    def __pow__(self, e: int):
        self._require_square()
        if e < 0:
            return self.inverse() ** (-e)
        result = Matrix.identity(self.field, self.nrows)
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return (self.field == other.field and self.rows == other.rows)

    def __hash__(self):
        return hash((self.field.kind, self.rows))

    def transpose(self) -> "Matrix":
        return Matrix(self.field, list(zip(*self.rows)))

    # -- predicates ----------------------------------------------------------

    def is_zero(self) -> bool:
        is_zero = self.field.is_zero
        return all(is_zero(a) for row in self.rows for a in row)

    def is_identity(self) -> bool:
        return self.is_square() and self == Matrix.identity(self.field, self.nrows)

    def is_scalar(self) -> bool:
        """True iff the matrix equals lambda * I for some field scalar."""
        self._require_square()
        lam = self.rows[0][0]
        is_zero = self.field.is_zero
        for i, row in enumerate(self.rows):
            for j, a in enumerate(row):
                if i == j:
                    if a != lam:
                        return False
                elif not is_zero(a):
                    return False
        return True

    # -- elimination-based operations -----------------------------------------

    def det(self) -> FieldElement:
        """Exact determinant by Gaussian elimination.

        Pivot selection is the first row with a nonzero entry in the current
        column, so results are deterministic.
        """
        self._require_square()
        field = self.field
        rows = [list(r) for r in self.rows]
        n = self.nrows
        sign_flip = False
        det = field.one
        for col in range(n):
            pivot = None
            for r in range(col, n):
                if not field.is_zero(rows[r][col]):
                    pivot = r
                    break
            if pivot is None:
                return FieldElement(field, field.zero)
            if pivot != col:
                rows[col], rows[pivot] = rows[pivot], rows[col]
                sign_flip = not sign_flip
            pv = rows[col][col]
            det = field.mul(det, pv)
            pv_inv = field.inv(pv)
            for r in range(col + 1, n):
                factor = field.mul(rows[r][col], pv_inv)
                if field.is_zero(factor):
                    continue
                for c in range(col, n):
                    rows[r][c] = field.sub(rows[r][c],
                                           field.mul(factor, rows[col][c]))
        if sign_flip:
            det = field.neg(det)
        return FieldElement(field, det)

    def trace(self) -> FieldElement:
        self._require_square()
        field = self.field
        acc = field.zero
        for i in range(self.nrows):
            acc = field.add(acc, self.rows[i][i])
        return FieldElement(field, acc)

    def inverse(self) -> "Matrix":
        """Exact inverse by Gauss-Jordan elimination; raises Singular."""
        self._require_square()
        field = self.field
        n = self.nrows
        left = [list(r) for r in self.rows]
        right = [list(r) for r in Matrix.identity(field, n).rows]
        for col in range(n):
            pivot = None
            for r in range(col, n):
                if not field.is_zero(left[r][col]):
                    pivot = r
                    break
            if pivot is None:
                raise Singular("matrix is not invertible")
            if pivot != col:
                left[col], left[pivot] = left[pivot], left[col]
                right[col], right[pivot] = right[pivot], right[col]
            pv_inv = field.inv(left[col][col])
            left[col] = [field.mul(pv_inv, a) for a in left[col]]
            right[col] = [field.mul(pv_inv, a) for a in right[col]]
            for r in range(n):
                if r == col:
                    continue
                factor = left[r][col]
                if field.is_zero(factor):
                    continue
                left[r] = [field.sub(a, field.mul(factor, b))
                           for a, b in zip(left[r], left[col])]
                right[r] = [field.sub(a, field.mul(factor, b))
                            for a, b in zip(right[r], right[col])]
        return Matrix(field, right)

    def kernel_basis(self):
        """Exact basis of the right null space, ordered by free column index.

        Each basis vector is a tuple of FieldElement coordinates with a 1 in
        its free column.  Empty list iff the matrix has full column rank.
        """
        field = self.field
        rows = [list(r) for r in self.rows]
        n, m = self.nrows, self.ncols
        pivots = []  # (row, col)
        r = 0
        for col in range(m):
            pivot = None
            for k in range(r, n):
                if not field.is_zero(rows[k][col]):
                    pivot = k
                    break
            if pivot is None:
                continue
            rows[r], rows[pivot] = rows[pivot], rows[r]
            pv_inv = field.inv(rows[r][col])
            rows[r] = [field.mul(pv_inv, a) for a in rows[r]]
            for k in range(n):
                if k == r:
                    continue
                factor = rows[k][col]
                if field.is_zero(factor):
                    continue
                rows[k] = [field.sub(a, field.mul(factor, b))
                           for a, b in zip(rows[k], rows[r])]
            pivots.append((r, col))
            r += 1
            if r == n:
                break
        pivot_cols = {col for _, col in pivots}
        basis = []
        for free in range(m):
            if free in pivot_cols:
                continue
            vec = [field.zero] * m
            vec[free] = field.one
            for row_idx, col in pivots:
                vec[col] = field.neg(rows[row_idx][free])
            basis.append(tuple(FieldElement(field, v) for v in vec))
        return basis

    def rank(self) -> int:
        return self.ncols - len(self.kernel_basis())

    def min_poly(self) -> Polynomial:
        """Monic minimal polynomial, by the first linear dependence among
        the flattened powers I, A, A^2, ...

        The dependence search keeps an eliminated row per power together with
        the combination that produced it, so the reduction that hits zero
        directly yields the (automatically monic) coefficient vector.
        """
        self._require_square()
        field = self.field
        n = self.nrows
        reduced = []   # (pivot_index, row, combo)
        power = Matrix.identity(field, n)
        k = 0
        while True:
            row = [a for r in power.rows for a in r]
            combo = [field.zero] * (k + 1)
            combo[k] = field.one
            for pivot_idx, prow, pcombo in reduced:
                factor = row[pivot_idx]
                if field.is_zero(factor):
                    continue
                row = [field.sub(a, field.mul(factor, b))
                       for a, b in zip(row, prow)]
                for i, b in enumerate(pcombo):
                    combo[i] = field.sub(combo[i], field.mul(factor, b))
            pivot_idx = next((i for i, a in enumerate(row)
                              if not field.is_zero(a)), None)
            if pivot_idx is None:
                return Polynomial(field, combo)
            pv_inv = field.inv(row[pivot_idx])
            row = [field.mul(pv_inv, a) for a in row]
            combo = [field.mul(pv_inv, a) for a in combo]
            reduced.append((pivot_idx, row, combo))
            power = power * self
            k += 1

    # -- formatting ----------------------------------------------------------

    def to_str_rows(self):
        to_str = self.field.scalar_to_str
        return [[to_str(a) for a in row] for row in self.rows]

    def __str__(self):
        rows = self.to_str_rows()
        widths = [max(len(rows[i][j]) for i in range(self.nrows))
                  for j in range(self.ncols)]
        lines = ["[" + "  ".join(e.rjust(w) for e, w in zip(row, widths)) + "]"
                 for row in rows]
        return "\n".join(lines)

    def __repr__(self):
        body = "; ".join(" ".join(row) for row in self.to_str_rows())
        return f"Matrix({self.field}, {body})"


def det(m: Matrix) -> FieldElement:
    return m.det()


def trace(m: Matrix) -> FieldElement:
    return m.trace()


def mat_inverse(m: Matrix) -> Matrix:
    return m.inverse()


def min_poly(m: Matrix) -> Polynomial:
    return m.min_poly()


def is_scalar(m: Matrix) -> bool:
    return m.is_scalar()


def kernel_basis(m: Matrix):
    return m.kernel_basis()


def qq_matrix(rows) -> Matrix:
    """Convenience constructor for matrices over the rationals."""
    return Matrix(QQ, rows)
