"""Exact scalar arithmetic over the rationals, prime fields, and number fields.

Every scalar is held in a unique canonical form (reduced fraction, residue in
[0, p), or reduced coefficient vector), so equality is payload comparison and
all computed identities can be checked with ``==``.  There is no floating
point anywhere in this package.

Values are immutable after construction; every operation is a pure function.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property

from .errors import BadParams, DescriptorMismatch, ZeroInverse

RATIONALS = "rationals"
PRIME_FIELD = "prime_field"
NUMBER_FIELD = "number_field"


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    d = 3
    while d * d <= p:
        if p % d == 0:
            return False
        d += 2
    return True


def _as_fraction(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value)
    raise BadParams(f"cannot interpret {value!r} as an exact rational")


# ---------------------------------------------------------------------------
# polynomial helpers over Fraction coefficient tuples (low degree first)
# ---------------------------------------------------------------------------

def _poly_trim(coeffs):
    c = list(coeffs)
    while c and not c[-1]:
        c.pop()
    return tuple(c)


def _poly_divmod(num, den):
    """Exact division with remainder in Q[x]; den must be nonzero."""
    num = list(num)
    q = [Fraction(0)] * max(0, len(num) - len(den) + 1)
    lead = den[-1]
    while len(num) >= len(den) and _poly_trim(num):
        if not num[-1]:
            num.pop()
            continue
        shift = len(num) - len(den)
        factor = num[-1] / lead
        q[shift] = factor
        for i, d in enumerate(den):
            num[shift + i] -= factor * d
        num.pop()
    return _poly_trim(q), _poly_trim(num)


def _poly_ext_gcd(a, b):
    """Extended Euclid in Q[x]: returns (g, s, t) with s*a + t*b = g."""
    r0, r1 = _poly_trim(a), _poly_trim(b)
    s0, s1 = (Fraction(1),), ()
    t0, t1 = (), (Fraction(1),)
    while r1:
        q, r = _poly_divmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, _poly_sub(s0, _poly_mul_plain(q, s1))
        t0, t1 = t1, _poly_sub(t0, _poly_mul_plain(q, t1))
    return r0, s0, t0


def _poly_sub(a, b):
    n = max(len(a), len(b))
    out = [Fraction(0)] * n
    for i, c in enumerate(a):
        out[i] += c
    for i, c in enumerate(b):
        out[i] -= c
    return _poly_trim(out)


def _poly_mul_plain(a, b):
    if not a or not b:
        return ()
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if not x:
            continue
        for j, y in enumerate(b):
            out[i + j] += x * y
    return _poly_trim(out)


# ---------------------------------------------------------------------------
# field descriptors
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class FieldDescriptor:
    """One of Q, F_p, or Q[x]/(f) with f monic of degree >= 1.

    For number fields, irreducibility of the modulus is a declared assumption
    of the caller; construction only runs a rational-root sanity probe (a
    rational root disproves irreducibility for degree >= 2).  Full
    factorization is out of scope.
    """

    kind: str
    p: int | None = None
    modulus: tuple[Fraction, ...] | None = None   # monic, low degree first

    def __post_init__(self):
        if self.kind == RATIONALS:
            if self.p is not None or self.modulus is not None:
                raise BadParams("rationals take no parameters")
        elif self.kind == PRIME_FIELD:
            if not isinstance(self.p, int) or not _is_prime(self.p):
                raise BadParams(f"prime field modulus must be prime, got {self.p!r}")
        elif self.kind == NUMBER_FIELD:
            mod = self.modulus
            if not mod or len(mod) < 2:
                raise BadParams("number field modulus must have degree >= 1")
            if mod[-1] != 1:
                raise BadParams("number field modulus must be monic")
            if len(mod) >= 3 and _has_rational_root(mod):
                raise BadParams("number field modulus has a rational root; "
                                "it cannot be irreducible")
        else:
            raise BadParams(f"unknown field kind {self.kind!r}")

    @property
    def characteristic(self) -> int:
        return self.p if self.kind == PRIME_FIELD else 0

    @property
    def extension_degree(self) -> int:
        if self.kind == NUMBER_FIELD:
            return len(self.modulus) - 1
        return 1

    # -- canonical payloads -------------------------------------------------

    @cached_property
    def zero(self):
        return self.coerce(0)

    @cached_property
    def one(self):
        return self.coerce(1)

    def coerce(self, value):
        """Normalize ``value`` to this field's canonical payload."""
        if isinstance(value, FieldElement):
            if value.field != self:
                raise DescriptorMismatch("element belongs to a different field")
            return value.payload
        if self.kind == RATIONALS:
            return _as_fraction(value)
        if self.kind == PRIME_FIELD:
            if isinstance(value, str):
                value = int(value)
            if isinstance(value, Fraction):
                if value.denominator % self.p == 0:
                    raise ZeroInverse(f"denominator divisible by {self.p}")
                value = value.numerator * pow(value.denominator, -1, self.p)
            if not isinstance(value, int):
                raise BadParams(f"cannot coerce {value!r} into F_{self.p}")
            return value % self.p
        # number field
        d = self.extension_degree
        if isinstance(value, (int, Fraction)):
            vec = [_as_fraction(value)] + [Fraction(0)] * (d - 1)
            return tuple(vec)
        if isinstance(value, str):
            parts = value.split(",")
            value = tuple(Fraction(part) for part in parts)
        if isinstance(value, (tuple, list)):
            vec = [_as_fraction(v) for v in value]
            if len(vec) > d:
                vec = list(self._nf_reduce(tuple(vec)))
            vec += [Fraction(0)] * (d - len(vec))
            return tuple(vec)
        raise BadParams(f"cannot coerce {value!r} into this number field")

    # -- raw payload arithmetic (used by matrices for speed) ----------------

    def add(self, a, b):
        if self.kind == PRIME_FIELD:
            return (a + b) % self.p
        if self.kind == RATIONALS:
            return a + b
        return tuple(x + y for x, y in zip(a, b))

    def sub(self, a, b):
        if self.kind == PRIME_FIELD:
            return (a - b) % self.p
        if self.kind == RATIONALS:
            return a - b
        return tuple(x - y for x, y in zip(a, b))

    def neg(self, a):
        if self.kind == PRIME_FIELD:
            return (-a) % self.p
        if self.kind == RATIONALS:
            return -a
        return tuple(-x for x in a)

    def mul(self, a, b):
        if self.kind == PRIME_FIELD:
            return (a * b) % self.p
        if self.kind == RATIONALS:
            return a * b
        return self._nf_reduce(_poly_mul_plain(a, b))

    def inv(self, a):
        if self.is_zero(a):
            raise ZeroInverse("0 has no multiplicative inverse")
        if self.kind == PRIME_FIELD:
            return pow(a, -1, self.p)
        if self.kind == RATIONALS:
            return 1 / a
        g, s, _ = _poly_ext_gcd(_poly_trim(a), self.modulus)
        if len(g) != 1:
            raise BadParams("number field modulus is reducible: "
                            "declared irreducibility assumption violated")
        scaled = tuple(c / g[0] for c in s)
        return self.coerce(scaled)

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def is_zero(self, a) -> bool:
        if self.kind == NUMBER_FIELD:
            return not any(a)
        return not a

    def _nf_reduce(self, coeffs):
        d = self.extension_degree
        _, rem = _poly_divmod(coeffs, self.modulus)
        return tuple(rem) + (Fraction(0),) * (d - len(rem))

    # -- formatting ----------------------------------------------------------

    def scalar_to_str(self, payload) -> str:
        if self.kind == RATIONALS:
            return str(payload)
        if self.kind == PRIME_FIELD:
            return str(payload)
        return ",".join(str(c) for c in payload)

    def to_str(self) -> str:
        """Short field tag used in all JSON file formats."""
        if self.kind == RATIONALS:
            return "Q"
        if self.kind == PRIME_FIELD:
            return f"Fp:{self.p}"
        return "NF:" + ",".join(str(c) for c in self.modulus)

    def __str__(self):
        return self.to_str()


def _has_rational_root(mod) -> bool:
    # rational root theorem on the integer-scaled polynomial
    denom_lcm = 1
    for c in mod:
        denom_lcm = denom_lcm * c.denominator // _gcd(denom_lcm, c.denominator)
    ints = [int(c * denom_lcm) for c in mod]
    lead, const = ints[-1], ints[0]
    if const == 0:
        return True
    for p in _divisors(abs(const)):
        for q in _divisors(abs(lead)):
            for num in (p, -p):
                r = Fraction(num, q)
                val = Fraction(0)
                for c in reversed(ints):
                    val = val * r + c
                if val == 0:
                    return True
    return False


def _gcd(a, b):
    while b:
        a, b = b, a % b
    return a


def _divisors(n):
    out = []
    d = 1
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            if d != n // d:
                out.append(n // d)
        d += 1
    return sorted(out)


def rationals() -> FieldDescriptor:
    return FieldDescriptor(RATIONALS)


def prime_field(p: int) -> FieldDescriptor:
    return FieldDescriptor(PRIME_FIELD, p=p)


def number_field(modulus) -> FieldDescriptor:
    """Q[x]/(f) for a monic f given by exact coefficients, low degree first."""
    coeffs = tuple(_as_fraction(c) for c in modulus)
    return FieldDescriptor(NUMBER_FIELD, modulus=coeffs)


def field_from_str(tag: str) -> FieldDescriptor:
    if tag == "Q":
        return rationals()
    if tag.startswith("Fp:"):
        return prime_field(int(tag[3:]))
    if tag.startswith("NF:"):
        return number_field([Fraction(c) for c in tag[3:].split(",")])
    raise BadParams(f"unknown field tag {tag!r}")


QQ = rationals()


# ---------------------------------------------------------------------------
# field elements
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class FieldElement:
    """An exact scalar; equal elements always have identical payloads."""

    field: FieldDescriptor
    payload: object

    @staticmethod
    def of(field: FieldDescriptor, value) -> "FieldElement":
        return FieldElement(field, field.coerce(value))

    def _lift(self, other):
        if isinstance(other, FieldElement):
            if other.field != self.field:
                raise DescriptorMismatch("elements belong to different fields")
            return other.payload
        if isinstance(other, (int, Fraction)):
            return self.field.coerce(other)
        return None

    def __add__(self, other):
        p = self._lift(other)
        if p is None:
            return NotImplemented
        return FieldElement(self.field, self.field.add(self.payload, p))

    __radd__ = __add__

    def __sub__(self, other):
        p = self._lift(other)
        if p is None:
            return NotImplemented
        return FieldElement(self.field, self.field.sub(self.payload, p))

    def __rsub__(self, other):
        p = self._lift(other)
        if p is None:
            return NotImplemented
        return FieldElement(self.field, self.field.sub(p, self.payload))

    def __neg__(self):
        return FieldElement(self.field, self.field.neg(self.payload))

    def __mul__(self, other):
        p = self._lift(other)
        if p is None:
            return NotImplemented
        return FieldElement(self.field, self.field.mul(self.payload, p))

    __rmul__ = __mul__

    def __truediv__(self, other):
        p = self._lift(other)
        if p is None:
            return NotImplemented
        return FieldElement(self.field, self.field.div(self.payload, p))

    def __rtruediv__(self, other):
        p = self._lift(other)
        if p is None:
            return NotImplemented
        return FieldElement(self.field, self.field.div(p, self.payload))

    def __pow__(self, e: int):
        if e < 0:
            return self.inverse() ** (-e)
        result = FieldElement(self.field, self.field.one)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base if e > 1 else base
            e >>= 1
        return result

    def inverse(self) -> "FieldElement":
        return FieldElement(self.field, self.field.inv(self.payload))

    def is_zero(self) -> bool:
        return self.field.is_zero(self.payload)

    def __eq__(self, other):
        if isinstance(other, FieldElement):
            return self.field == other.field and self.payload == other.payload
        if isinstance(other, (int, Fraction)):
            return self.payload == self.field.coerce(other)
        return NotImplemented

    def __hash__(self):
        return hash((self.field.kind, self.payload))

    def __str__(self):
        return self.field.scalar_to_str(self.payload)

    def __repr__(self):
        return f"FieldElement({self.field}, {self})"


def field_inverse(a: FieldElement) -> FieldElement:
    """Multiplicative inverse; raises ZeroInverse on the zero scalar."""
    return a.inverse()


# ---------------------------------------------------------------------------
# univariate polynomials over a field (used for minimal polynomials)
# ---------------------------------------------------------------------------

class Polynomial:
    """Dense univariate polynomial with exact coefficients, low degree first."""

    def __init__(self, field: FieldDescriptor, coeffs):
        payloads = [field.coerce(c) for c in coeffs]
        while payloads and field.is_zero(payloads[-1]):
            payloads.pop()
        self.field = field
        self.coeffs = tuple(payloads)

    @property
    def degree(self) -> int:
        """Degree, with the zero polynomial reported as -1."""
        return len(self.coeffs) - 1

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == self.field.one

    def coefficient(self, i: int) -> FieldElement:
        if i >= len(self.coeffs):
            return FieldElement(self.field, self.field.zero)
        return FieldElement(self.field, self.coeffs[i])

    def __call__(self, x):
        """Evaluate at a scalar, matrix, or algebra element (exactly)."""
        unit = x ** 0
        total = None
        power = unit
        for c in self.coeffs:
            term = power * FieldElement(self.field, c)
            total = term if total is None else total + term
            power = power * x
        if total is None:
            return unit - unit
        return total

    def __eq__(self, other):
        return (isinstance(other, Polynomial) and self.field == other.field
                and self.coeffs == other.coeffs)

    def __hash__(self):
        return hash((self.field.kind, self.coeffs))

    def __str__(self):
        if not self.coeffs:
            return "0"
        field = self.field
        parts = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if field.is_zero(c) and len(self.coeffs) > 1:
                continue
            text = field.scalar_to_str(c)
            negative = text.startswith("-")
            mag = text[1:] if negative else text
            if i == 0:
                body = mag
            else:
                xpow = "x" if i == 1 else f"x^{i}"
                body = xpow if mag == "1" else f"{mag}*{xpow}"
            if not parts:
                parts.append(("-" if negative else "") + body)
            else:
                parts.append(("- " if negative else "+ ") + body)
        return " ".join(parts)

    def __repr__(self):
        return f"Polynomial({self.field}, {self})"

    def to_strings(self):
        return [self.field.scalar_to_str(c) for c in self.coeffs]
