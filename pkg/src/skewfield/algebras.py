"""Finite-dimensional unital algebras given by structure constants.

An algebra over a field F is described by basis products e_i * e_j =
sum_k c[i][j][k] e_k, the unit's coordinates, and optional declarations:
``degree`` m (with dim = m^2) and a ``division`` flag.  Unit laws and
associativity on all basis triples are checked at construction.

Division-ness of the shipped presets is declared, not verified in general:

* quaternion(a, b) with a < 0 and b < 0 over Q has a positive definite norm
  form x^2 - a*y^2 - b*z^2 + a*b*w^2, hence no zero divisors.
* cyclic3 is the degree-3 cyclic algebra built from the real subfield K of
  the 7th cyclotomic field (minimal polynomial x^3 + x^2 - 2x - 1, generator
  alpha = 2cos(2*pi/7)) with automorphism alpha -> alpha^2 - 2 and symbol
  relation u^3 = 2.  The rational prime 2 is inert in K (2 has order 3 in
  (Z/7Z)*/{+-1}), so 2 is not a norm from K, and a cyclic algebra of prime
  degree whose symbol is not a norm is a division algebra.

Descriptors and elements are immutable; all operations are pure.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import (BadParams, DescriptorMismatch, NotADivisionPreset,
                     NotInvertible, Singular)
from .fields import (FieldDescriptor, FieldElement, Polynomial, QQ,
                     number_field)
from .matrices import Matrix


class AlgebraDescriptor:
    __slots__ = ("field", "dim", "table", "unit", "degree", "division",
                 "basis_names", "label")

    def __init__(self, field: FieldDescriptor, table, unit, degree=None,
                 division=False, basis_names=None, label=None,
                 _skip_checks=False):
        d = len(table)
        tbl = tuple(tuple(tuple(field.coerce(c) for c in cell) for cell in row)
                    for row in table)
        if any(len(row) != d for row in tbl) or \
           any(len(cell) != d for row in tbl for cell in row):
            raise BadParams("structure constants must form a d x d x d cube")
        unit = tuple(field.coerce(c) for c in unit)
        if len(unit) != d:
            raise BadParams("unit coordinate length must equal the dimension")
        if degree is not None and degree * degree != d:
            raise BadParams(f"declared degree {degree} needs dimension {degree**2}, got {d}")
        if basis_names is None:
            basis_names = tuple(f"e{i}" for i in range(d))
        else:
            basis_names = tuple(basis_names)
            if len(basis_names) != d:
                raise BadParams("need one basis name per dimension")
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "dim", d)
        object.__setattr__(self, "table", tbl)
        object.__setattr__(self, "unit", unit)
        object.__setattr__(self, "degree", degree)
        object.__setattr__(self, "division", bool(division))
        object.__setattr__(self, "basis_names", basis_names)
        object.__setattr__(self, "label", label)
        if not _skip_checks:
            self._check_unit()
            self._check_associativity()

    def __setattr__(self, name, value):
        raise AttributeError("AlgebraDescriptor is immutable")

    # -- construction-time checks --------------------------------------------

    def _check_unit(self):
        for i in range(self.dim):
            basis = self._basis_coords(i)
            if self.mul_coords(self.unit, basis) != basis:
                raise BadParams(f"unit fails 1*e{i} = e{i}")
            if self.mul_coords(basis, self.unit) != basis:
                raise BadParams(f"unit fails e{i}*1 = e{i}")

    def _check_associativity(self):
        field = self.field
        d = self.dim
        tbl = self.table
        add, mul, is_zero = field.add, field.mul, field.is_zero
        for i in range(d):
            for j in range(d):
                cij = tbl[i][j]
                for k in range(d):
                    cjk = tbl[j][k]
                    for s in range(d):
                        left = field.zero
                        right = field.zero
                        for l in range(d):
                            if not is_zero(cij[l]):
                                left = add(left, mul(cij[l], tbl[l][k][s]))
                            if not is_zero(cjk[l]):
                                right = add(right, mul(cjk[l], tbl[i][l][s]))
                        if left != right:
                            raise BadParams(
                                f"structure constants are not associative at "
                                f"(e{i}, e{j}, e{k})")

    def _basis_coords(self, i):
        return tuple(self.field.one if k == i else self.field.zero
                     for k in range(self.dim))

    # -- coordinate arithmetic -------------------------------------------------

    def mul_coords(self, x, y):
        field = self.field
        add, mul, is_zero = field.add, field.mul, field.is_zero
        out = [field.zero] * self.dim
        for i, xi in enumerate(x):
            if is_zero(xi):
                continue
            row = self.table[i]
            for j, yj in enumerate(y):
                if is_zero(yj):
                    continue
                coeff = mul(xi, yj)
                for k, c in enumerate(row[j]):
                    if not is_zero(c):
                        out[k] = add(out[k], mul(coeff, c))
        return tuple(out)

    # -- elements ----------------------------------------------------------------

    def element(self, coords) -> "AlgebraElement":
        return AlgebraElement(self, coords)

    def basis_element(self, i) -> "AlgebraElement":
        if isinstance(i, str):
            try:
                i = self.basis_names.index(i)
            except ValueError:
                raise BadParams(f"unknown basis name {i!r}") from None
        return AlgebraElement(self, self._basis_coords(i))

    def one(self) -> "AlgebraElement":
        return AlgebraElement(self, self.unit)

    def zero(self) -> "AlgebraElement":
        return AlgebraElement(self, (self.field.zero,) * self.dim)

    def scalar(self, value) -> "AlgebraElement":
        c = self.field.coerce(value)
        mul = self.field.mul
        return AlgebraElement(self, tuple(mul(c, u) for u in self.unit))

    def __eq__(self, other):
        if not isinstance(other, AlgebraDescriptor):
            return NotImplemented
        return (self.field == other.field and self.table == other.table
                and self.unit == other.unit)

    def __hash__(self):
        return hash((self.field.kind, self.dim, self.unit))

    def __repr__(self):
        name = self.label or f"algebra(dim={self.dim})"
        return f"AlgebraDescriptor({name} over {self.field})"


class AlgebraElement:
    __slots__ = ("algebra", "coords")

    def __init__(self, algebra: AlgebraDescriptor, coords):
        coords = tuple(algebra.field.coerce(c) for c in coords)
        if len(coords) != algebra.dim:
            raise BadParams("coordinate length must equal the algebra dimension")
        object.__setattr__(self, "algebra", algebra)
        object.__setattr__(self, "coords", coords)

    def __setattr__(self, name, value):
        raise AttributeError("AlgebraElement is immutable")

    def _check(self, other):
        if not isinstance(other, AlgebraElement):
            raise DescriptorMismatch("expected an algebra element")
        if self.algebra != other.algebra:
            raise DescriptorMismatch("elements from different algebras")

    def __add__(self, other):
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        self._check(other)
        add = self.algebra.field.add
        return AlgebraElement(self.algebra,
                              tuple(add(a, b) for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other):
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        self._check(other)
        sub = self.algebra.field.sub
        return AlgebraElement(self.algebra,
                              tuple(sub(a, b) for a, b in zip(self.coords, other.coords)))

    def __neg__(self):
        neg = self.algebra.field.neg
        return AlgebraElement(self.algebra, tuple(neg(a) for a in self.coords))

    def __mul__(self, other):
        if isinstance(other, AlgebraElement):
            self._check(other)
            return AlgebraElement(self.algebra,
                                  self.algebra.mul_coords(self.coords, other.coords))
        scalar = self._as_scalar(other)
        if scalar is None:
            return NotImplemented
        mul = self.algebra.field.mul
        return AlgebraElement(self.algebra,
                              tuple(mul(a, scalar) for a in self.coords))

    def __rmul__(self, other):
        scalar = self._as_scalar(other)
        if scalar is None:
            return NotImplemented
        mul = self.algebra.field.mul
        return AlgebraElement(self.algebra,
                              tuple(mul(scalar, a) for a in self.coords))

    def _as_scalar(self, value):
        if isinstance(value, FieldElement):
            if value.field != self.algebra.field:
                raise DescriptorMismatch("scalar from a different field")
            return value.payload
        if isinstance(value, (int, Fraction)):
            return self.algebra.field.coerce(value)
        return None

    def __pow__(self, e: int):
        if e < 0:
            return self.inverse() ** (-e)
        result = self.algebra.one()
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def __eq__(self, other):
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        return self.algebra == other.algebra and self.coords == other.coords

    def __hash__(self):
        return hash((self.algebra.dim, self.coords))

    def is_zero(self) -> bool:
        is_zero = self.algebra.field.is_zero
        return all(is_zero(c) for c in self.coords)

    def is_one(self) -> bool:
        return self.coords == self.algebra.unit

    def is_central(self) -> bool:
        """True iff the element commutes with every basis element."""
        alg = self.algebra
        for i in range(alg.dim):
            basis = alg._basis_coords(i)
            if alg.mul_coords(self.coords, basis) != alg.mul_coords(basis, self.coords):
                return False
        return True

    def regular_representation(self) -> Matrix:
        """Matrix of left multiplication in the algebra basis (faithful,
        unital homomorphism)."""
        alg = self.algebra
        cols = [alg.mul_coords(self.coords, alg._basis_coords(j))
                for j in range(alg.dim)]
        return Matrix.from_columns(alg.field, cols)

    def right_regular_representation(self) -> Matrix:
        alg = self.algebra
        cols = [alg.mul_coords(alg._basis_coords(j), self.coords)
                for j in range(alg.dim)]
        return Matrix.from_columns(alg.field, cols)

    def inverse(self) -> "AlgebraElement":
        """Two-sided inverse, by solving the regular-representation system."""
        try:
            inv = self.regular_representation().inverse()
        except Singular:
            raise NotInvertible("element has a singular regular representation") from None
        coords = inv * Matrix.from_columns(self.algebra.field, [self.algebra.unit])
        return AlgebraElement(self.algebra, coords.column(0))

    def min_poly(self) -> Polynomial:
        return self.regular_representation().min_poly()

    def subfield_degree(self) -> int:
        """dim_F F(x), the degree of the minimal polynomial."""
        return self.min_poly().degree

    def centralizer_dimension(self) -> int:
        commutator_map = self.regular_representation() - self.right_regular_representation()
        return len(commutator_map.kernel_basis())

    def __str__(self):
        alg = self.algebra
        field = alg.field
        parts = []
        for name, c in zip(alg.basis_names, self.coords):
            if field.is_zero(c):
                continue
            text = field.scalar_to_str(c)
            negative = text.startswith("-")
            mag = text[1:] if negative else text
            if name == "1":
                body = mag
            elif mag == "1":
                body = name
            else:
                body = f"{mag}*{name}"
            if not parts:
                parts.append(("-" if negative else "") + body)
            else:
                parts.append(("- " if negative else "+ ") + body)
        return " ".join(parts) if parts else "0"

    def __repr__(self):
        return f"AlgebraElement({self.algebra!r}, {self})"


# ---------------------------------------------------------------------------
# spec-level operation aliases
# ---------------------------------------------------------------------------

def alg_mul(x: AlgebraElement, y: AlgebraElement) -> AlgebraElement:
    return x * y


def alg_inverse(x: AlgebraElement) -> AlgebraElement:
    return x.inverse()


def regular_representation(x: AlgebraElement) -> Matrix:
    return x.regular_representation()


def min_poly_elt(x: AlgebraElement) -> Polynomial:
    return x.min_poly()


def is_central(x: AlgebraElement) -> bool:
    return x.is_central()


def subfield_degree(x: AlgebraElement) -> int:
    return x.subfield_degree()


@dataclass(frozen=True)
class MaximalSubfieldReport:
    is_maximal: bool
    element_degree: int
    algebra_degree: int
    min_poly: Polynomial
    centralizer_dimension: int
    centralizer_consistent: bool


def maximal_subfield_check(x: AlgebraElement) -> MaximalSubfieldReport:
    """Does F(x) have the full degree m inside a declared division preset?

    Cross-checks via the centralizer: when deg F(x) = m, the centralizer of
    x must have dimension exactly m.
    """
    alg = x.algebra
    if not alg.division or alg.degree is None:
        raise NotADivisionPreset(
            "maximal-subfield check needs a declared division algebra with a degree")
    mp = x.min_poly()
    deg = mp.degree
    m = alg.degree
    cdim = x.centralizer_dimension()
    is_max = deg == m
    consistent = (cdim == m) if is_max else True
    return MaximalSubfieldReport(is_maximal=is_max, element_degree=deg,
                                 algebra_degree=m, min_poly=mp,
                                 centralizer_dimension=cdim,
                                 centralizer_consistent=consistent)


# ---------------------------------------------------------------------------
# presets
# ---------------------------------------------------------------------------

def matrix_algebra(m: int) -> AlgebraDescriptor:
    """Full m x m matrix algebra over Q via matrix units E_ij
    (E_ij E_kl = delta_jk E_il); degree m, not division."""
    if m < 1:
        raise BadParams("matrix algebra size must be >= 1")
    d = m * m
    field = QQ
    zero_cell = (field.zero,) * d

    def idx(i, j):
        return i * m + j

    table = [[None] * d for _ in range(d)]
    for i in range(m):
        for j in range(m):
            for k in range(m):
                for l in range(m):
                    cell = list(zero_cell)
                    if j == k:
                        cell[idx(i, l)] = field.one
                    table[idx(i, j)][idx(k, l)] = tuple(cell)
    unit = [field.zero] * d
    for i in range(m):
        unit[idx(i, i)] = field.one
    names = tuple(f"e{i + 1}{j + 1}" for i in range(m) for j in range(m))
    return AlgebraDescriptor(QQ, table, unit, degree=m, division=(m == 1),
                             basis_names=names, label=f"matrix:{m}")


def quaternion_algebra(a, b) -> AlgebraDescriptor:
    """Basis (1, i, j, k) with i^2 = a, j^2 = b, ij = -ji = k."""
    a = Fraction(a)
    b = Fraction(b)
    if a == 0 or b == 0:
        raise BadParams("quaternion parameters must be nonzero")
    zero, one = Fraction(0), Fraction(1)

    def vec(c0=0, c1=0, c2=0, c3=0):
        return (Fraction(c0), Fraction(c1), Fraction(c2), Fraction(c3))

    e0, e1, e2, e3 = vec(1), vec(0, 1), vec(0, 0, 1), vec(0, 0, 0, 1)
    table = [
        [e0, e1, e2, e3],
        [e1, vec(a), e3, vec(0, 0, a)],            # i*1, i*i, i*j, i*k
        [e2, vec(0, 0, 0, -1), vec(b), vec(0, -b)],  # j*1, j*i, j*j, j*k
        [e3, vec(0, 0, -a), vec(0, b), vec(-a * b)],  # k*1, k*i, k*j, k*k
    ]
    division = a < 0 and b < 0   # definite norm form; sufficient, not necessary
    label = f"quaternion:{a},{b}"
    return AlgebraDescriptor(QQ, table, e0, degree=2, division=division,
                             basis_names=("1", "i", "j", "k"), label=label)


CYCLIC3_MODULUS = (Fraction(-1), Fraction(-2), Fraction(1), Fraction(1))
CYCLIC3_GAMMA = Fraction(2)


def cyclic3_algebra() -> AlgebraDescriptor:
    """Degree-3 division algebra over Q: basis a^i u^j (0 <= i, j <= 2) with
    a a root of x^3 + x^2 - 2x - 1, u a = (a^2 - 2) u, and u^3 = 2."""
    K = number_field(CYCLIC3_MODULUS)
    alpha = K.coerce((0, 1, 0))
    sigma_alpha = K.sub(K.mul(alpha, alpha), K.coerce(2))

    def apply_sigma(payload):
        # substitute alpha -> sigma(alpha) coefficientwise
        acc = K.coerce(0)
        power = K.one
        for c in payload:
            acc = K.add(acc, K.mul(K.coerce(c), power))
            power = K.mul(power, sigma_alpha)
        return acc

    sigma_pows = [alpha, sigma_alpha, apply_sigma(sigma_alpha)]

    d = 9

    def idx(i, j):
        return i + 3 * j

    field = QQ
    table = [[None] * d for _ in range(d)]
    for i in range(3):
        for j in range(3):
            for k in range(3):
                for l in range(3):
                    # (a^i u^j)(a^k u^l) = a^i sigma^j(a)^k u^(j+l)
                    coeff_poly = K.one
                    for _ in range(k):
                        coeff_poly = K.mul(coeff_poly, sigma_pows[j])
                    for _ in range(i):
                        coeff_poly = K.mul(coeff_poly, alpha)
                    e = j + l
                    gamma = CYCLIC3_GAMMA if e >= 3 else Fraction(1)
                    e %= 3
                    cell = [field.zero] * d
                    for t in range(3):
                        cell[idx(t, e)] = coeff_poly[t] * gamma
                    table[idx(i, j)][idx(k, l)] = tuple(cell)
    unit = [field.zero] * d
    unit[idx(0, 0)] = field.one
    names = ("1", "a", "a2", "u", "au", "a2u", "u2", "au2", "a2u2")
    return AlgebraDescriptor(QQ, table, unit, degree=3, division=True,
                             basis_names=names, label="cyclic3")


def preset(name: str) -> AlgebraDescriptor:
    """Resolve a preset name: ``matrix:m``, ``quaternion:a,b``, or ``cyclic3``."""
    if name == "cyclic3":
        return cyclic3_algebra()
    if name.startswith("matrix:"):
        try:
            m = int(name.split(":", 1)[1])
        except ValueError:
            raise BadParams(f"bad matrix preset {name!r}") from None
        return matrix_algebra(m)
    if name.startswith("quaternion:"):
        params = name.split(":", 1)[1].split(",")
        if len(params) != 2:
            raise BadParams("quaternion preset needs two parameters a,b")
        try:
            a, b = Fraction(params[0]), Fraction(params[1])
        except (ValueError, ZeroDivisionError):
            raise BadParams(f"bad quaternion parameters {params!r}") from None
        return quaternion_algebra(a, b)
    raise BadParams(f"unknown preset {name!r}")


def parse_element(alg: AlgebraDescriptor, text: str) -> AlgebraElement:
    """Parse a linear combination over the preset basis names,
    e.g. ``1 + 2/3*i - j``.  A bare rational term means that multiple of
    the algebra unit."""
    import re

    s = text.strip()
    if not s:
        raise BadParams("empty element text")
    token = re.compile(r"\s*([+-])\s*|\s*([0-9]+(?:/[0-9]+)?)\s*|"
                       r"\s*([A-Za-z][A-Za-z0-9]*)\s*|\s*(\*)\s*")
    pos = 0
    toks = []
    while pos < len(s):
        m = token.match(s, pos)
        if not m or m.end() == pos:
            raise BadParams(f"bad element syntax near {s[pos:]!r}")
        toks.append(m)
        pos = m.end()

    result = None
    sign = 1
    i = 0
    expect_term = True
    while i < len(toks):
        m = toks[i]
        if m.group(1):
            if expect_term and m.group(1) == "-":
                sign = -sign
                i += 1
                continue
            if expect_term:
                i += 1
                continue
            sign = -1 if m.group(1) == "-" else 1
            expect_term = True
            i += 1
            continue
        coeff = Fraction(1)
        name = None
        if m.group(2):
            coeff = Fraction(m.group(2))
            i += 1
            if i < len(toks) and toks[i].group(4):
                i += 1
                if i >= len(toks) or not toks[i].group(3):
                    raise BadParams("expected basis name after '*'")
                name = toks[i].group(3)
                i += 1
        elif m.group(3):
            name = m.group(3)
            i += 1
        else:
            raise BadParams(f"unexpected token in element text {text!r}")
        term = alg.scalar(coeff) if name is None else \
            alg.basis_element(name) * FieldElement.of(alg.field, coeff)
        if sign < 0:
            term = -term
        result = term if result is None else result + term
        sign = 1
        expect_term = False
    if result is None or expect_term:
        raise BadParams(f"incomplete element text {text!r}")
    return result
