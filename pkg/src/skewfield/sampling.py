"""Seeded random generation of exact test data.

All samplers take an explicit ``random.Random`` and are deterministic given
the seed.  ``derive_seed`` gives a stable per-trial seed from (seed, index)
via SHA-256, so trial streams are independent of scheduling and platform.
"""

from __future__ import annotations

import hashlib
import random
from fractions import Fraction

from .fields import FieldDescriptor, QQ
from .matrices import Matrix


def derive_seed(seed: int, index) -> int:
    digest = hashlib.sha256(f"{seed}:{index}".encode()).digest()
    return int.from_bytes(digest[:8], "big")


def derived_rng(seed: int, index) -> random.Random:
    return random.Random(derive_seed(seed, index))


def random_fraction(rng: random.Random, num_bound: int = 5, den_bound: int = 1) -> Fraction:
    num = rng.randint(-num_bound, num_bound)
    den = rng.randint(1, den_bound) if den_bound > 1 else 1
    return Fraction(num, den)


def random_scalar(rng: random.Random, field: FieldDescriptor,
                  num_bound: int = 5, den_bound: int = 1):
    """Raw canonical payload of a bounded-height random scalar."""
    if field.kind == "prime_field":
        return rng.randrange(field.p)
    if field.kind == "rationals":
        return random_fraction(rng, num_bound, den_bound)
    return tuple(random_fraction(rng, num_bound, den_bound)
                 for _ in range(field.extension_degree))


def random_matrix(rng: random.Random, field: FieldDescriptor, n: int,
                  num_bound: int = 5, den_bound: int = 1) -> Matrix:
    return Matrix(field, [[random_scalar(rng, field, num_bound, den_bound)
                           for _ in range(n)] for _ in range(n)])


def random_invertible_matrix(rng: random.Random, field: FieldDescriptor, n: int,
                             num_bound: int = 5, den_bound: int = 1) -> Matrix:
    while True:
        m = random_matrix(rng, field, n, num_bound, den_bound)
        if not m.det().is_zero():
            return m


def random_sl_matrix(rng: random.Random, field: FieldDescriptor, n: int,
                     transvections: int = 6, num_bound: int = 3,
                     non_scalar: bool = True) -> Matrix:
    """Product of seeded elementary transvections: determinant one by
    construction.  Resamples in the rare case the product is scalar."""
    while True:
        m = Matrix.identity(field, n)
        for _ in range(transvections):
            i = rng.randrange(n)
            j = rng.randrange(n - 1)
            if j >= i:
                j += 1
            c = random_scalar(rng, field, num_bound)
            if field.is_zero(c):
                c = field.one
            m = m * Matrix.elementary(field, n, i, j, c)
        if not non_scalar or not m.is_scalar():
            return m


def random_trace_zero_matrix(rng: random.Random, field: FieldDescriptor, n: int,
                             num_bound: int = 5) -> Matrix:
    """Random matrix with the trace shifted off: subtract (tr/n) * I.

    Needs characteristic 0 or coprime to n.
    """
    m = random_matrix(rng, field, n, num_bound)
    shift = m.trace() / n
    return m - shift * Matrix.identity(field, n)


def random_upper_triangular(rng: random.Random, field: FieldDescriptor, n: int,
                            invertible: bool = True, num_bound: int = 3) -> Matrix:
    rows = []
    for i in range(n):
        row = []
        for j in range(n):
            if j < i:
                row.append(field.zero)
            elif j == i and invertible:
                c = random_scalar(rng, field, num_bound)
                while field.is_zero(c):
                    c = random_scalar(rng, field, num_bound)
                row.append(c)
            else:
                row.append(random_scalar(rng, field, num_bound))
        rows.append(row)
    return Matrix(field, rows)


def random_rational_matrix(rng: random.Random, n: int, num_bound: int = 5,
                           den_bound: int = 1) -> Matrix:
    return random_matrix(rng, QQ, n, num_bound, den_bound)
