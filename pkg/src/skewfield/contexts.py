"""Ring contexts: a uniform handle on "square matrices over F" and
"elements of a structure-constant algebra".

A context supplies units, scalar embedding, and seeded random sampling; the
ring operations themselves live on the element types (Matrix,
AlgebraElement), which share operator syntax.
"""

from __future__ import annotations

import random

from .algebras import AlgebraDescriptor, AlgebraElement, preset
from .errors import BadParams, NotInvertible
from .fields import FieldDescriptor, QQ
from .matrices import Matrix
from .sampling import random_matrix, random_scalar


class MatrixContext:
    """Square matrices of a fixed size over a fixed field."""

    def __init__(self, field: FieldDescriptor, size: int):
        if size < 1:
            raise BadParams("matrix context size must be >= 1")
        self.field = field
        self.size = size

    def one(self) -> Matrix:
        return Matrix.identity(self.field, self.size)

    def zero(self) -> Matrix:
        return Matrix.zeros(self.field, self.size)

    def scalar(self, value) -> Matrix:
        return Matrix.diagonal(self.field, [value] * self.size)

    def random_element(self, rng: random.Random, num_bound: int = 5,
                       den_bound: int = 1) -> Matrix:
        return random_matrix(rng, self.field, self.size, num_bound, den_bound)

    def random_invertible(self, rng: random.Random, num_bound: int = 5,
                          den_bound: int = 1) -> Matrix:
        while True:
            m = self.random_element(rng, num_bound, den_bound)
            if not m.det().is_zero():
                return m

    def random_nonzero(self, rng: random.Random, num_bound: int = 5,
                       den_bound: int = 1) -> Matrix:
        while True:
            m = self.random_element(rng, num_bound, den_bound)
            if not m.is_zero():
                return m

    def contains(self, x) -> bool:
        return (isinstance(x, Matrix) and x.field == self.field
                and x.nrows == x.ncols == self.size)

    def description(self) -> str:
        if self.field == QQ:
            return f"matrix:{self.size}"
        return f"matrix:{self.size}@{self.field}"

    def __eq__(self, other):
        return (isinstance(other, MatrixContext) and self.field == other.field
                and self.size == other.size)

    def __repr__(self):
        return f"MatrixContext({self.description()})"


class AlgebraContext:
    """Elements of a finite-dimensional structure-constant algebra."""

    def __init__(self, algebra: AlgebraDescriptor):
        self.algebra = algebra
        self.field = algebra.field

    def one(self) -> AlgebraElement:
        return self.algebra.one()

    def zero(self) -> AlgebraElement:
        return self.algebra.zero()

    def scalar(self, value) -> AlgebraElement:
        return self.algebra.scalar(value)

    def random_element(self, rng: random.Random, num_bound: int = 5,
                       den_bound: int = 1) -> AlgebraElement:
        coords = [random_scalar(rng, self.field, num_bound, den_bound)
                  for _ in range(self.algebra.dim)]
        return AlgebraElement(self.algebra, coords)

    def random_nonzero(self, rng: random.Random, num_bound: int = 5,
                       den_bound: int = 1) -> AlgebraElement:
        while True:
            x = self.random_element(rng, num_bound, den_bound)
            if not x.is_zero():
                return x

    def random_invertible(self, rng: random.Random, num_bound: int = 5,
                          den_bound: int = 1) -> AlgebraElement:
        while True:
            x = self.random_nonzero(rng, num_bound, den_bound)
            try:
                x.inverse()
            except NotInvertible:
                continue
            return x

    def contains(self, x) -> bool:
        return isinstance(x, AlgebraElement) and x.algebra == self.algebra

    def description(self) -> str:
        return self.algebra.label or f"algebra(dim={self.algebra.dim})"

    def __eq__(self, other):
        return (isinstance(other, AlgebraContext)
                and self.algebra == other.algebra)

    def __repr__(self):
        return f"AlgebraContext({self.description()})"


def context_from_name(name: str):
    """``matrix:m`` gives square rational matrices; any algebra preset name
    gives its element context."""
    if name.startswith("matrix:"):
        try:
            size = int(name.split(":", 1)[1])
        except ValueError:
            raise BadParams(f"bad matrix context {name!r}") from None
        return MatrixContext(QQ, size)
    return AlgebraContext(preset(name))
