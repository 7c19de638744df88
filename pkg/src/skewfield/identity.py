"""Noncommutative rational expressions and randomized identity testing.

Grammar (whitespace-insensitive; juxtaposition multiplication is rejected):

    expr   := term (("+" | "-") term)*
    term   := factor ("*" factor)*
    factor := atom ("^" signed_int)?
    atom   := ident | rational | "(" expr ")"
            | "mc(" expr "," expr ")" | "ac(" expr "," expr ")"

``mc(a, b)`` is sugar for a b a^-1 b^-1 and ``ac(a, b)`` for ab - ba.
Evaluation is exact and bottom-up; a substitution is permissible when every
required inverse exists, and evaluation short-circuits on the first failed
inversion, reporting the path to the offending node.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from itertools import permutations

from .errors import (BadParams, DepthCap, NoPermissibleSamples, NotInvertible,
                     ParseError, Singular, UnboundVariable, ZeroInverse)
from .sampling import derived_rng
from .words import DEFAULT_GN_CAP, DEFAULT_WORD_CAP, permutation_sign


# ---------------------------------------------------------------------------
# AST
# ---------------------------------------------------------------------------

class RationalExpr:
    __slots__ = ()


@dataclass(frozen=True)
class Var(RationalExpr):
    name: str


@dataclass(frozen=True)
class Const(RationalExpr):
    value: Fraction

    def __post_init__(self):
        object.__setattr__(self, "value", Fraction(self.value))


@dataclass(frozen=True)
class Add(RationalExpr):
    left: RationalExpr
    right: RationalExpr


@dataclass(frozen=True)
class Sub(RationalExpr):
    left: RationalExpr
    right: RationalExpr


@dataclass(frozen=True)
class Neg(RationalExpr):
    operand: RationalExpr


@dataclass(frozen=True)
class Mul(RationalExpr):
    left: RationalExpr
    right: RationalExpr


@dataclass(frozen=True)
class Pow(RationalExpr):
    base: RationalExpr
    exponent: int


@dataclass(frozen=True)
class MC(RationalExpr):
    """Multiplicative commutator sugar: l r l^-1 r^-1."""
    left: RationalExpr
    right: RationalExpr


@dataclass(frozen=True)
class AC(RationalExpr):
    """Additive commutator sugar: l r - r l."""
    left: RationalExpr
    right: RationalExpr


def children(e: RationalExpr):
    if isinstance(e, (Add, Sub, Mul, MC, AC)):
        return (e.left, e.right)
    if isinstance(e, Neg):
        return (e.operand,)
    if isinstance(e, Pow):
        return (e.base,)
    return ()


def variables(e: RationalExpr) -> frozenset:
    if isinstance(e, Var):
        return frozenset((e.name,))
    out = frozenset()
    for c in children(e):
        out |= variables(c)
    return out


# ---------------------------------------------------------------------------
# printing
# ---------------------------------------------------------------------------

_ADD, _MUL, _POW, _ATOM = 0, 1, 2, 3


def to_text(e: RationalExpr) -> str:
    """Grammar-conformant text; parse(to_text(e)) == e structurally for
    trees without Neg nodes or negative constants (the grammar has no unary
    minus, so those print as explicit ``(0 - ...)`` subtractions)."""
    return _render(e)[0]


def _render(e):
    if isinstance(e, Var):
        return e.name, _ATOM
    if isinstance(e, Const):
        if e.value < 0:
            return f"(0 - {-e.value})", _ATOM
        return str(e.value), _ATOM
    if isinstance(e, Add):
        return f"{_at(e.left, _ADD)} + {_at(e.right, _MUL)}", _ADD
    if isinstance(e, Sub):
        return f"{_at(e.left, _ADD)} - {_at(e.right, _MUL)}", _ADD
    if isinstance(e, Neg):
        return f"(0 - {_at(e.operand, _MUL)})", _ATOM
    if isinstance(e, Mul):
        return f"{_at(e.left, _MUL)} * {_at(e.right, _POW)}", _MUL
    if isinstance(e, Pow):
        return f"{_at(e.base, _ATOM)}^{e.exponent}", _POW
    if isinstance(e, MC):
        return f"mc({_at(e.left, _ADD)}, {_at(e.right, _ADD)})", _ATOM
    if isinstance(e, AC):
        return f"ac({_at(e.left, _ADD)}, {_at(e.right, _ADD)})", _ATOM
    raise BadParams(f"not a rational expression node: {e!r}")


def _at(e, min_level):
    text, level = _render(e)
    if level < min_level:
        return f"({text})"
    return text


# ---------------------------------------------------------------------------
# parsing
# ---------------------------------------------------------------------------

_TOKEN_RE = re.compile(
    r"(?P<ws>\s+)|(?P<num>[0-9]+(?:/[0-9]+)?)|"
    r"(?P<ident>[A-Za-z_][A-Za-z_0-9]*)|(?P<sym>[()+\-*^,])")

_SUGAR = {"mc": MC, "ac": AC}


def _tokenize(text):
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if m is None:
            raise ParseError(f"unexpected character {text[pos]!r}", pos)
        if m.lastgroup != "ws":
            tokens.append((m.lastgroup, m.group(), pos))
        pos = m.end()
    return tokens


class _Parser:
    def __init__(self, text):
        self.text = text
        self.tokens = _tokenize(text)
        self.pos = 0

    def peek(self):
        if self.pos < len(self.tokens):
            return self.tokens[self.pos]
        return ("end", "", len(self.text))

    def advance(self):
        tok = self.peek()
        self.pos += 1
        return tok

    def expect_sym(self, sym):
        kind, value, pos = self.peek()
        if kind != "sym" or value != sym:
            raise ParseError(f"expected {sym!r}, found {value or 'end of input'!r}",
                             pos, expected=(sym,))
        return self.advance()

    def parse(self):
        e = self.expr()
        kind, value, pos = self.peek()
        if kind != "end":
            raise ParseError(
                f"unexpected {value!r} (juxtaposition is not multiplication)",
                pos, expected=("+", "-", "end of input"))
        return e

    def expr(self):
        e = self.term()
        while True:
            kind, value, _ = self.peek()
            if kind == "sym" and value in "+-":
                self.advance()
                rhs = self.term()
                e = Add(e, rhs) if value == "+" else Sub(e, rhs)
            else:
                return e

    def term(self):
        e = self.factor()
        while True:
            kind, value, _ = self.peek()
            if kind == "sym" and value == "*":
                self.advance()
                e = Mul(e, self.factor())
            else:
                return e

    def factor(self):
        e = self.atom()
        kind, value, _ = self.peek()
        if kind == "sym" and value == "^":
            self.advance()
            return Pow(e, self.signed_int())
        return e

    def signed_int(self):
        negative = False
        kind, value, pos = self.peek()
        if kind == "sym" and value == "-":
            negative = True
            self.advance()
            kind, value, pos = self.peek()
        if kind != "num" or "/" in value:
            raise ParseError(f"expected an integer exponent, found {value!r}",
                             pos, expected=("integer",))
        self.advance()
        return -int(value) if negative else int(value)

    def atom(self):
        kind, value, pos = self.peek()
        if kind == "num":
            self.advance()
            return Const(Fraction(value))
        if kind == "ident":
            self.advance()
            if value in _SUGAR:
                node = _SUGAR[value]
                self.expect_sym("(")
                left = self.expr()
                self.expect_sym(",")
                right = self.expr()
                self.expect_sym(")")
                return node(left, right)
            return Var(value)
        if kind == "sym" and value == "(":
            self.advance()
            e = self.expr()
            self.expect_sym(")")
            return e
        raise ParseError(f"expected an atom, found {value or 'end of input'!r}",
                         pos, expected=("identifier", "rational", "("))


def parse(text: str) -> RationalExpr:
    return _Parser(text).parse()


# ---------------------------------------------------------------------------
# evaluation
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class EvalOutcome:
    value: object = None
    failure_path: tuple | None = None
    failure_reason: str | None = None

    @property
    def ok(self) -> bool:
        return self.failure_path is None


class _NotPermissible(Exception):
    def __init__(self, path, reason):
        super().__init__(reason)
        self.path = path
        self.reason = reason


def eval_expr(e: RationalExpr, env: dict, ctx) -> EvalOutcome:
    """Exact bottom-up evaluation of ``e`` with variables bound by ``env``
    in the ring context ``ctx``.  Shared subtrees are evaluated once."""
    missing = sorted(variables(e) - set(env))
    if missing:
        raise UnboundVariable(f"unbound variables: {', '.join(missing)}")
    try:
        value = _eval(e, env, ctx, (), {})
    except _NotPermissible as stop:
        return EvalOutcome(None, stop.path, stop.reason)
    return EvalOutcome(value, None, None)


def _invert(value, path, what):
    try:
        return value ** -1
    except (Singular, NotInvertible, ZeroInverse):
        raise _NotPermissible(path, f"{what} is not invertible") from None


def _eval(e, env, ctx, path, cache):
    key = id(e)
    if key in cache:
        return cache[key]
    if isinstance(e, Var):
        value = env[e.name]
    elif isinstance(e, Const):
        value = ctx.scalar(e.value)
    elif isinstance(e, Add):
        value = _eval(e.left, env, ctx, path + (0,), cache) \
            + _eval(e.right, env, ctx, path + (1,), cache)
    elif isinstance(e, Sub):
        value = _eval(e.left, env, ctx, path + (0,), cache) \
            - _eval(e.right, env, ctx, path + (1,), cache)
    elif isinstance(e, Neg):
        value = -_eval(e.operand, env, ctx, path + (0,), cache)
    elif isinstance(e, Mul):
        value = _eval(e.left, env, ctx, path + (0,), cache) \
            * _eval(e.right, env, ctx, path + (1,), cache)
    elif isinstance(e, Pow):
        base = _eval(e.base, env, ctx, path + (0,), cache)
        if e.exponent < 0:
            inv = _invert(base, path, "power base")
            value = inv ** (-e.exponent)
        else:
            value = base ** e.exponent
    elif isinstance(e, MC):
        left = _eval(e.left, env, ctx, path + (0,), cache)
        right = _eval(e.right, env, ctx, path + (1,), cache)
        left_inv = _invert(left, path + (0,), "mc left operand")
        right_inv = _invert(right, path + (1,), "mc right operand")
        value = left * right * left_inv * right_inv
    elif isinstance(e, AC):
        left = _eval(e.left, env, ctx, path + (0,), cache)
        right = _eval(e.right, env, ctx, path + (1,), cache)
        value = left * right - right * left
    else:
        raise BadParams(f"not a rational expression node: {e!r}")
    cache[key] = value
    return value


# ---------------------------------------------------------------------------
# identity testing
# ---------------------------------------------------------------------------

MODE_ZERO = "zero"
MODE_ONE = "one"


@dataclass(frozen=True)
class IdentityReport:
    expression: str
    context: str
    mode: str
    trials: int
    permissible: int
    seed: int
    counterexample_trial: int | None
    counterexample_env: dict | None     # variable name -> element
    counterexample_value: object = None

    @property
    def holds(self) -> bool:
        """No counterexample among the permissible samples."""
        return self.counterexample_trial is None


def identity_test(expr, ctx, mode: str = MODE_ZERO, trials: int = 200,
                  seed: int = 0, num_bound: int = 5, den_bound: int = 5,
                  retry_cap: int = 8, label: str | None = None) -> IdentityReport:
    """Sample seeded substitutions with bounded-height entries and report
    the first one where the value differs from 0 (mode ``zero``) or from
    the unit (mode ``one``).

    Trial i draws from a seed derived from (seed, i), so reports are
    deterministic and independent of scheduling; non-permissible draws are
    resampled up to ``retry_cap`` times within the trial, then the trial is
    counted as skipped.  Raises NoPermissibleSamples when every trial was
    skipped.
    """
    if trials < 1:
        raise BadParams("trials must be >= 1")
    if mode not in (MODE_ZERO, MODE_ONE):
        raise BadParams(f"mode must be 'zero' or 'one', got {mode!r}")
    if isinstance(expr, str):
        tree = parse(expr)
        text = expr
    else:
        tree = expr
        text = label if label is not None else to_text(expr)
    names = sorted(variables(tree))
    permissible = 0
    cx_trial = None
    cx_env = None
    cx_value = None
    for i in range(trials):
        rng = derived_rng(seed, i)
        outcome = None
        for _ in range(retry_cap):
            env = {name: ctx.random_element(rng, num_bound, den_bound)
                   for name in names}
            outcome = eval_expr(tree, env, ctx)
            if outcome.ok:
                break
        if outcome is None or not outcome.ok:
            continue
        permissible += 1
        value = outcome.value
        holds_here = value.is_zero() if mode == MODE_ZERO else value == ctx.one()
        if not holds_here:
            cx_trial, cx_env, cx_value = i, env, value
            break
    if permissible == 0:
        raise NoPermissibleSamples(
            f"all {trials} sampled substitutions were non-permissible")
    return IdentityReport(
        expression=text, context=ctx.description(), mode=mode, trials=trials,
        permissible=permissible, seed=seed, counterexample_trial=cx_trial,
        counterexample_env=cx_env, counterexample_value=cx_value)


@dataclass(frozen=True)
class NontrivialityReport:
    expression: str
    max_size: int
    trials: int
    seed: int
    nontrivial_evidence: bool
    witness_size: int | None
    witness_trial: int | None
    witness_env: dict | None
    witness_value: object = None

    @property
    def inconclusive(self) -> bool:
        return not self.nontrivial_evidence


def nontriviality_probe(expr, max_size: int, trials: int = 50,
                        seed: int = 0) -> NontrivialityReport:
    """Search matrix contexts of sizes 1..max_size for a permissible
    substitution with a nonzero value.  Finding one is evidence the
    expression is nonzero in the free field; finding none is reported as
    inconclusive, never as triviality.
    """
    from .contexts import MatrixContext
    from .fields import QQ

    if isinstance(expr, str):
        tree = parse(expr)
        text = expr
    else:
        tree = expr
        text = to_text(expr)
    names = sorted(variables(tree))
    for size in range(1, max_size + 1):
        ctx = MatrixContext(QQ, size)
        for t in range(trials):
            rng = derived_rng(seed, f"{size}:{t}")
            env = {name: ctx.random_element(rng, 5, 5) for name in names}
            outcome = eval_expr(tree, env, ctx)
            if outcome.ok and not outcome.value.is_zero():
                return NontrivialityReport(
                    expression=text, max_size=max_size, trials=trials,
                    seed=seed, nontrivial_evidence=True, witness_size=size,
                    witness_trial=t, witness_env=env,
                    witness_value=outcome.value)
    return NontrivialityReport(
        expression=text, max_size=max_size, trials=trials, seed=seed,
        nontrivial_evidence=False, witness_size=None, witness_trial=None,
        witness_env=None)


# ---------------------------------------------------------------------------
# composite-identity builders and the shipped catalog
# ---------------------------------------------------------------------------

KIND_MULT = "mult"
KIND_ADD = "add"


def word_expr(kind: str, names) -> RationalExpr:
    """Balanced commutator nesting of the named variables (length 2^n)."""
    names = list(names)
    if len(names) == 1:
        return Var(names[0])
    if len(names) % 2:
        raise BadParams("word variable count must be a power of two")
    half = len(names) // 2
    node = MC if kind == KIND_MULT else AC
    return node(word_expr(kind, names[:half]), word_expr(kind, names[half:]))


def build_gn_word_expr(gn_depth: int, word_depth: int, kind: str,
                       gn_cap: int = DEFAULT_GN_CAP,
                       word_cap: int = DEFAULT_WORD_CAP) -> RationalExpr:
    """The fully expanded signed permutation sum with the commutator word
    inlined in the test slot: variables x1..x_{2^n} feed the word, y1..yl
    fill the r-slots.  Word power nodes are shared, so evaluation computes
    the word value once per substitution."""
    if kind not in (KIND_MULT, KIND_ADD):
        raise BadParams(f"kind must be 'mult' or 'add', got {kind!r}")
    if gn_depth < 1 or word_depth < 1:
        raise BadParams("depths must be >= 1")
    if gn_depth > gn_cap:
        raise DepthCap(f"gn depth {gn_depth} exceeds cap {gn_cap}")
    if word_depth > word_cap:
        raise DepthCap(f"word depth {word_depth} exceeds cap {word_cap}")
    xs = [f"x{i + 1}" for i in range(2 ** word_depth)]
    ys = [f"y{i + 1}" for i in range(gn_depth)]
    w = word_expr(kind, xs)
    powers = {e: (w if e == 1 else Pow(w, e)) for e in range(gn_depth + 1)}
    total = None
    for perm in permutations(range(gn_depth + 1)):
        node = powers[perm[0]]
        for yname, p in zip(ys, perm[1:]):
            node = Mul(Mul(node, Var(yname)), powers[p])
        if total is None:
            total = node
        elif permutation_sign(perm) > 0:
            total = Add(total, node)
        else:
            total = Sub(total, node)
    return total


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    text: str
    mode: str
    outcome_recorded: bool = False


# The paper-adjacent classics.  Note mc(x, y) requires inverses of x and y,
# so substitutions hitting singular values are non-permissible and skipped.
CATALOG = {
    "hua": CatalogEntry(
        "hua", "(x^-1 + (y^-1 - x)^-1)^-1 - x + x*y*x", MODE_ZERO),
    "sum-inverse": CatalogEntry(
        "sum-inverse", "(x+y)^-1 - y^-1*(x^-1+y^-1)^-1*x^-1", MODE_ZERO),
    "hall-2x2": CatalogEntry(
        "hall-2x2", "ac(ac(x,y)^2, z)", MODE_ZERO),
    # Written "= 0" in the multiplicative-commutator style; the intended
    # comparison target is ambiguous, so runs record the outcome (mode one)
    # rather than asserting it.
    "m3-example": CatalogEntry(
        "m3-example", "mc(mc(x, mc(y,z)*x*mc(y,x)^-1)^3, z)", MODE_ONE,
        outcome_recorded=True),
}

# Entry names exercised by the degree-2 cross-context consistency check.
SHIPPED_CATALOG = ("hua", "sum-inverse", "hall-2x2", "m3-example",
                   "gn-un:2,1", "gn-vn:2,1")

_BUILDER_RE = re.compile(r"^gn-(un|vn):(\d+),(\d+)$")


def resolve_builtin(name: str):
    """Map a catalog name (or gn-un:l,n / gn-vn:l,n) to
    (tree, label, mode, outcome_recorded)."""
    entry = CATALOG.get(name)
    if entry is not None:
        return parse(entry.text), entry.text, entry.mode, entry.outcome_recorded
    m = _BUILDER_RE.match(name)
    if m:
        kind = KIND_MULT if m.group(1) == "un" else KIND_ADD
        gn_depth, word_depth = int(m.group(2)), int(m.group(3))
        tree = build_gn_word_expr(gn_depth, word_depth, kind)
        return tree, name, MODE_ZERO, False
    raise BadParams(f"unknown builtin identity {name!r}")
