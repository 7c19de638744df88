"""Constructive commutator decompositions of exact matrices.

* ``additive_commutator_decomp``: writes a trace-zero C as AB - BA with
  trace-zero A, B, via conjugation to a zero-diagonal matrix M and the
  divided-difference solution M = [diag(1..m), B'] with B'_ij =
  M_ij / (i - j).
* ``multiplicative_commutator_decomp``: writes a non-scalar C in SL_m as
  A B A^-1 B^-1 with non-scalar determinant-one factors.  C is first
  factored as X * Y with prescribed distinct eigenvalues b_1..b_m for X and
  their inverses for Y (inductive factorization: conjugate C so its leading
  column is (b_1 * b_1^-1, 1, 0, ...), split one eigenvalue pair off, and
  recurse on the Schur-style reduced block).  Exact diagonalization of X
  and Y^-1 then yields B = Y^-1 and the similarity A carrying B to X.
  The eigenvalue tuple has product one and one eigenvector column of A is
  rescaled, so both factors land in SL_m exactly; tuples are retried from a
  seeded stream if a reduced block degenerates to a scalar.
* ``iterated_*_decomp``: recurse on both factors to depth n, giving 2^n
  factors that replay through the word evaluators exactly.

Decomposition records refuse to carry ``verified=True`` unless the replay
equation and the per-factor side conditions check out at construction.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import reduce

from .errors import (ArityMismatch, BadDeterminant, BadParams, BadTrace,
                     CharTooSmall, DegenerateChoiceExhausted, DepthArityCap,
                     ScalarInput, SkewfieldError, SmallField)
from .fields import FieldDescriptor, QQ
from .matrices import Matrix
from .sampling import derive_seed, derived_rng
from .words import u_eval, v_eval

DEFAULT_DEPTH_CAP = 10
DEFAULT_TUPLE_RETRIES = 32

UNIPOTENT = "unipotent"
NILPOTENT = "nilpotent"


def special_matrix_T(m: int, kind: str, field: FieldDescriptor = QQ) -> Matrix:
    """The two main-proof gadget matrices: ones on the first superdiagonal,
    plus a unit diagonal for the unipotent kind.

    Both have minimal polynomial of full degree m: (x-1)^m and x^m.
    """
    if m < 1:
        raise BadParams("size must be >= 1")
    if kind not in (UNIPOTENT, NILPOTENT):
        raise BadParams(f"kind must be '{UNIPOTENT}' or '{NILPOTENT}', got {kind!r}")
    one, zero = field.one, field.zero
    rows = []
    for i in range(m):
        row = [zero] * m
        if kind == UNIPOTENT:
            row[i] = one
        if i + 1 < m:
            row[i + 1] = one
        rows.append(row)
    return Matrix(field, rows)


# ---------------------------------------------------------------------------
# vector helpers (payload lists)
# ---------------------------------------------------------------------------

def _mat_vec(M: Matrix, v):
    field = M.field
    add, mul, zero = field.add, field.mul, field.zero
    out = []
    for row in M.rows:
        acc = zero
        for a, x in zip(row, v):
            acc = add(acc, mul(a, x))
        out.append(acc)
    return out


def _unit_vector(field, m, i):
    v = [field.zero] * m
    v[i] = field.one
    return v


def _is_multiple(field, v, w):
    """True iff w lies in the span of the nonzero vector v."""
    pivot = next(i for i, a in enumerate(v) if not field.is_zero(a))
    lam = field.div(w[pivot], v[pivot])
    return all(w[i] == field.mul(lam, v[i]) for i in range(len(v)))


def _noncommuting_vector(C: Matrix):
    """Some v with v and Cv linearly independent; exists iff C is non-scalar.

    Standard basis vectors are tried first; if all their images are
    proportional, C is diagonal and e_i + e_j works for any two distinct
    diagonal entries.
    """
    field, m = C.field, C.nrows
    for i in range(m):
        v = _unit_vector(field, m, i)
        if not _is_multiple(field, v, C.column(i)):
            return v
    for i in range(m):
        for j in range(i + 1, m):
            if C.rows[i][i] != C.rows[j][j]:
                v = _unit_vector(field, m, i)
                v[j] = field.one
                return v
    raise SkewfieldError("internal: matrix is scalar, no independent image")


def _extend_to_basis(field, vectors, m):
    """Complete the independent ``vectors`` to a basis with standard basis
    vectors, greedily in index order (deterministic)."""
    reduced = []   # (pivot index, normalized row)
    chosen = []

    def try_add(v):
        row = list(v)
        for pivot, prow in reduced:
            f = row[pivot]
            if field.is_zero(f):
                continue
            row = [field.sub(a, field.mul(f, b)) for a, b in zip(row, prow)]
        pivot = next((i for i, a in enumerate(row) if not field.is_zero(a)), None)
        if pivot is None:
            return False
        inv = field.inv(row[pivot])
        reduced.append((pivot, [field.mul(inv, a) for a in row]))
        chosen.append(list(v))
        return True

    for v in vectors:
        if not try_add(v):
            raise SkewfieldError("internal: starting vectors are dependent")
    for i in range(m):
        if len(chosen) == m:
            break
        try_add(_unit_vector(field, m, i))
    return chosen


def _submatrix(M: Matrix, r0: int, c0: int) -> Matrix:
    return Matrix(M.field, [row[c0:] for row in M.rows[r0:]])


def _block_diag_one(Q: Matrix) -> Matrix:
    field = Q.field
    m = Q.nrows + 1
    rows = [[field.one] + [field.zero] * (m - 1)]
    for row in Q.rows:
        rows.append([field.zero] + list(row))
    return Matrix(field, rows)


def _require_char(field: FieldDescriptor, m: int):
    ch = field.characteristic
    if ch != 0 and ch <= m:
        raise CharTooSmall(
            f"characteristic {ch} must be zero or exceed the size {m}")


# ---------------------------------------------------------------------------
# additive path
# ---------------------------------------------------------------------------

def zero_diagonal_similarity(C: Matrix) -> Matrix:
    """An invertible P with P^-1 C P having an all-zero diagonal.

    Requires trace(C) = 0 and characteristic 0 or > m.  Induction: pick v
    with v, Cv independent (a nonzero trace-zero matrix here is never
    scalar), change basis to [v, Cv, ...] so the (1,1) entry becomes zero,
    and recurse on the trailing block, which still has trace zero.
    """
    if not C.trace().is_zero():
        raise BadTrace("zero-diagonal similarity needs a trace-zero matrix")
    _require_char(C.field, C.nrows)
    return _zero_diag_rec(C)


def _zero_diag_rec(C: Matrix) -> Matrix:
    field, m = C.field, C.nrows
    if C.is_zero():
        return Matrix.identity(field, m)
    v = _noncommuting_vector(C)
    w = _mat_vec(C, v)
    basis = _extend_to_basis(field, [v, w], m)
    P = Matrix.from_columns(field, basis)
    M = P.inverse() * C * P
    B = _submatrix(M, 1, 1)
    if not B.is_zero() and B.is_scalar():
        # Unreachable when char = 0 or > m (the block has trace zero), kept
        # as a guard: mix the block with row/column 1 by a transvection.
        for i in range(1, m):
            E = Matrix.elementary(field, m, i, 0, 1)
            M2 = E.inverse() * M * E
            B2 = _submatrix(M2, 1, 1)
            if B2.is_zero() or not B2.is_scalar():
                P, M, B = P * E, M2, B2
                break
        else:
            raise CharTooSmall("trailing block is a nonzero scalar")
    Q = _zero_diag_rec(B)
    return P * _block_diag_one(Q)


def additive_commutator_decomp(C: Matrix):
    """C = AB - BA exactly with trace(A) = trace(B) = 0.

    After conjugating to zero-diagonal M, the pair D = diag(1..m) and
    B'_ij = M_ij / (i - j) satisfies M = DB' - B'D; conjugating back and
    shifting each factor by (tr/m) * I (which leaves the commutator
    unchanged) makes both traces zero.
    """
    if not C.trace().is_zero():
        raise BadTrace("additive commutator targets must have trace zero")
    field, m = C.field, C.nrows
    _require_char(field, m)
    if C.is_zero():
        z = Matrix.zeros(field, m)
        return z, z
    P = _zero_diag_rec(C)
    P_inv = P.inverse()
    M = P_inv * C * P
    D = Matrix.diagonal(field, range(1, m + 1))
    bp_rows = []
    for i in range(m):
        row = []
        for j in range(m):
            if i == j:
                row.append(field.zero)
            else:
                row.append(field.div(M.rows[i][j], field.coerce(i - j)))
        bp_rows.append(row)
    B_prime = Matrix(field, bp_rows)
    A = P * D * P_inv
    B = P * B_prime * P_inv
    eye = Matrix.identity(field, m)
    A = A - (A.trace() / m) * eye
    B = B - (B.trace() / m) * eye
    if A * B - B * A != C:
        raise SkewfieldError("internal: additive commutator replay failed")
    return A, B


# ---------------------------------------------------------------------------
# multiplicative path
# ---------------------------------------------------------------------------

class _Degenerate(Exception):
    """Internal: the current eigenvalue tuple hit a scalar reduced block."""


def _default_eigentuple(m: int):
    values = [Fraction(i) for i in range(2, m + 1)]
    prod = reduce(lambda a, b: a * b, values, Fraction(1))
    return values + [1 / prod]


def _random_eigentuple(rng, m: int):
    while True:
        values = []
        while len(values) < m - 1:
            c = Fraction(rng.randint(-9, 9), rng.randint(1, 3))
            if c != 0 and c not in values:
                values.append(c)
        prod = reduce(lambda a, b: a * b, values, Fraction(1))
        last = 1 / prod
        if last not in values:
            return values + [last]


def _sourour_factor(C: Matrix, pairs):
    """C = X * Y with prescribed eigenvalue pairs; needs
    prod(beta_i * gamma_i) = det(C) and non-scalar blocks all the way down.
    """
    field, m = C.field, C.nrows
    beta, gamma = pairs[0]
    if m == 1:
        if C.rows[0][0] != field.mul(beta, gamma):
            raise SkewfieldError("internal: eigenvalue bookkeeping broke")
        return Matrix(field, [[beta]]), Matrix(field, [[gamma]])
    if C.is_scalar():
        raise _Degenerate
    t = field.mul(beta, gamma)
    v = _noncommuting_vector(C)
    w = _mat_vec(C, v)
    second = [field.sub(a, field.mul(t, x)) for a, x in zip(w, v)]
    basis = _extend_to_basis(field, [v, second], m)
    S = Matrix.from_columns(field, basis)
    M = S.inverse() * C * S          # leading column is (t, 1, 0, ..., 0)
    x_col = [field.div(M.rows[i][0], gamma) for i in range(1, m)]
    y_row = [field.div(a, beta) for a in M.rows[0][1:]]
    reduced_rows = []
    for i in range(1, m):
        row = []
        for j in range(1, m):
            row.append(field.sub(M.rows[i][j],
                                 field.mul(x_col[i - 1], y_row[j - 1])))
        reduced_rows.append(row)
    X2, Y2 = _sourour_factor(Matrix(field, reduced_rows), pairs[1:])
    x_rows = [[beta] + [field.zero] * (m - 1)]
    for i in range(m - 1):
        x_rows.append([x_col[i]] + list(X2.rows[i]))
    y_rows = [[gamma] + y_row]
    for i in range(m - 1):
        y_rows.append([field.zero] + list(Y2.rows[i]))
    X = Matrix(field, x_rows)
    Y = Matrix(field, y_rows)
    S_inv = S.inverse()
    return S * X * S_inv, S * Y * S_inv


def _eigenvector_matrix(X: Matrix, eigenvalues) -> Matrix:
    field, m = X.field, X.nrows
    cols = []
    for lam in eigenvalues:
        shifted = X - Matrix.diagonal(field, [lam] * m)
        basis = shifted.kernel_basis()
        if len(basis) != 1:
            raise _Degenerate
        cols.append([fe.payload for fe in basis[0]])
    S = Matrix.from_columns(field, cols)
    if S.det().is_zero():
        raise _Degenerate
    return S


def _scale_column(M: Matrix, j: int, scalar) -> Matrix:
    field = M.field
    rows = [list(row) for row in M.rows]
    for row in rows:
        row[j] = field.mul(row[j], scalar)
    return Matrix(field, rows)


def _commutator_with_tuple(C: Matrix, eigentuple):
    field = C.field
    betas = [field.coerce(value) for value in eigentuple]
    # Pair beta_i with 1/beta_{i+1} (cyclically): the pair products still
    # multiply to det(C) = 1, but the per-level leading entries beta*gamma
    # now depend on the tuple, so retries genuinely change the reduction.
    pairs = [(beta, field.inv(betas[(i + 1) % len(betas)]))
             for i, beta in enumerate(betas)]
    X, Y = _sourour_factor(C, pairs)
    S_X = _eigenvector_matrix(X, betas)
    B = Y.inverse()
    S_Y = _eigenvector_matrix(B, betas)
    # force det(A) = 1 by rescaling one eigenvector column of S_X
    mu = field.div(S_Y.det().payload, S_X.det().payload)
    S_X = _scale_column(S_X, 0, mu)
    A = S_X * S_Y.inverse()
    if A.is_scalar():
        raise _Degenerate
    if A * B * A.inverse() * B.inverse() != C:
        raise SkewfieldError("internal: multiplicative commutator replay failed")
    return A, B


def multiplicative_commutator_decomp(C: Matrix, seed: int = 0,
                                     max_tuple_retries: int = DEFAULT_TUPLE_RETRIES):
    """C = A B A^-1 B^-1 with A, B non-scalar and of determinant one.

    Requires det(C) = 1, C non-scalar, and an infinite base field.  On a
    degenerate eigenvalue-tuple choice the tuple is retried from a seeded
    stream, so results are reproducible.
    """
    d = C.det()
    if C.field.kind == "prime_field":
        raise SmallField("multiplicative decomposition needs an infinite field")
    if d != 1:
        raise BadDeterminant(f"target must have determinant 1, got {d}")
    if C.is_scalar():
        raise ScalarInput("single commutators only reach non-scalar matrices")
    m = C.nrows
    for attempt in range(max_tuple_retries + 1):
        if attempt == 0:
            eigentuple = _default_eigentuple(m)
        else:
            eigentuple = _random_eigentuple(
                derived_rng(seed, f"eigentuple:{attempt}"), m)
        try:
            return _commutator_with_tuple(C, eigentuple)
        except _Degenerate:
            continue
    raise DegenerateChoiceExhausted(
        f"no usable eigenvalue tuple after {max_tuple_retries + 1} attempts")


# ---------------------------------------------------------------------------
# iterated decompositions
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class MultDecomposition:
    """2^depth non-scalar factors whose u-word replays to the target.

    ``verified`` can only be set after the exact replay and the per-factor
    checks pass; construction raises otherwise.
    """

    target: Matrix
    depth: int
    factors: tuple
    verified: bool = False
    seed: int | None = None

    def __post_init__(self):
        if len(self.factors) != 2 ** self.depth:
            raise ArityMismatch(
                f"depth {self.depth} needs {2 ** self.depth} factors")
        if self.verified:
            for k, f in enumerate(self.factors):
                if f.is_scalar():
                    raise BadParams(f"factor {k + 1} is scalar; refusing to verify")
                if f.det().is_zero():
                    raise BadParams(f"factor {k + 1} is singular; refusing to verify")
            if self.replay() != self.target:
                raise BadParams("u-word replay mismatch; refusing to verify")

    def replay(self) -> Matrix:
        return u_eval(self.depth, self.factors, cap=max(self.depth, DEFAULT_DEPTH_CAP))

    @property
    def factor_determinants(self):
        return [f.det() for f in self.factors]


@dataclass(frozen=True)
class AddDecomposition:
    """2^depth trace-zero factors whose v-word replays to the target."""

    target: Matrix
    depth: int
    factors: tuple
    verified: bool = False
    seed: int | None = None

    def __post_init__(self):
        if len(self.factors) != 2 ** self.depth:
            raise ArityMismatch(
                f"depth {self.depth} needs {2 ** self.depth} factors")
        if self.verified:
            for k, f in enumerate(self.factors):
                if not f.trace().is_zero():
                    raise BadParams(
                        f"factor {k + 1} has nonzero trace; refusing to verify")
            if self.replay() != self.target:
                raise BadParams("v-word replay mismatch; refusing to verify")

    def replay(self) -> Matrix:
        return v_eval(self.depth, self.factors, cap=max(self.depth, DEFAULT_DEPTH_CAP))

    @property
    def factor_traces(self):
        return [f.trace() for f in self.factors]


def iterated_mult_decomp(C: Matrix, n: int, seed: int = 0,
                         cap: int = DEFAULT_DEPTH_CAP) -> MultDecomposition:
    """Split C into a single commutator and recurse on both factors; every
    intermediate factor is non-scalar with determinant one, so the
    recursion's preconditions hold by construction."""
    if n < 1:
        raise BadParams("depth must be >= 1")
    if n > cap:
        raise DepthArityCap(f"depth {n} exceeds cap {cap} (2^{n} factors)")

    def rec(target, depth, path):
        if depth == 0:
            return [target]
        A, B = multiplicative_commutator_decomp(
            target, seed=derive_seed(seed, path))
        return rec(A, depth - 1, path + "L") + rec(B, depth - 1, path + "R")

    factors = rec(C, n, "u")
    return MultDecomposition(target=C, depth=n, factors=tuple(factors),
                             verified=True, seed=seed)


def iterated_add_decomp(C: Matrix, n: int,
                        cap: int = DEFAULT_DEPTH_CAP) -> AddDecomposition:
    """Split C into a single additive commutator (both factors trace-zero)
    and recurse; the zero matrix decomposes as [0, 0] at every level."""
    if n < 1:
        raise BadParams("depth must be >= 1")
    if n > cap:
        raise DepthArityCap(f"depth {n} exceeds cap {cap} (2^{n} factors)")

    def rec(target, depth):
        if depth == 0:
            return [target]
        A, B = additive_commutator_decomp(target)
        return rec(A, depth - 1) + rec(B, depth - 1)

    factors = rec(C, n)
    return AddDecomposition(target=C, depth=n, factors=tuple(factors),
                            verified=True)
