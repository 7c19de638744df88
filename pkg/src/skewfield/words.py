"""The three word families evaluated on any ring context.

* ``gn_eval``: the signed permutation sum
  sum over delta in S_{n+1} of sign(delta) * a^delta(0) r_1 a^delta(1) ...
  r_n a^delta(n), which vanishes for all r-tuples exactly when ``a`` is
  algebraic of degree <= n over the base field.
* ``u_eval``: the depth-n left-balanced multiplicative commutator word on
  2^n inputs, u_1(a, b) = a b a^-1 b^-1.
* ``v_eval``: its additive counterpart, v_1(a, b) = ab - ba.

Elements may be matrices or algebra elements; everything is exact, and the
permutation sum is accumulated in lexicographic order so results are
bit-reproducible.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations

from .errors import (ArityMismatch, BadParams, DepthCap, NotInvertible,
                     Singular, ZeroInverse)
from .sampling import derived_rng

DEFAULT_GN_CAP = 7
DEFAULT_WORD_CAP = 10


def permutation_sign(perm) -> int:
    inversions = 0
    for i in range(len(perm)):
        for j in range(i + 1, len(perm)):
            if perm[i] > perm[j]:
                inversions += 1
    return -1 if inversions & 1 else 1


def gn_eval(a, rs, cap: int = DEFAULT_GN_CAP):
    """Evaluate the degree-n algebraicity test polynomial at (a, rs).

    Powers a^0 .. a^n are computed once; the sum then costs
    (n+1)! * O(n) multiplications.
    """
    rs = list(rs)
    n = len(rs)
    if n < 1:
        raise BadParams("gn_eval needs at least one r argument")
    if n > cap:
        raise DepthCap(f"gn depth {n} exceeds cap {cap}")
    powers = [a ** 0]
    for _ in range(n):
        powers.append(powers[-1] * a)
    total = None
    for perm in permutations(range(n + 1)):
        term = powers[perm[0]]
        for r, p in zip(rs, perm[1:]):
            term = term * r * powers[p]
        if permutation_sign(perm) < 0:
            term = -term
        total = term if total is None else total + term
    return total


def _check_word_args(n, inputs, cap):
    if n < 1:
        raise BadParams("word depth must be >= 1")
    if n > cap:
        raise DepthCap(f"word depth {n} exceeds cap {cap}")
    if len(inputs) != 2 ** n:
        raise ArityMismatch(
            f"depth {n} needs {2 ** n} inputs, got {len(inputs)}")


def u_eval(n: int, inputs, cap: int = DEFAULT_WORD_CAP):
    """Depth-n multiplicative commutator word; every intermediate value is
    inverted, so NotInvertible names the offending input or intermediate."""
    inputs = list(inputs)
    _check_word_args(n, inputs, cap)

    def invert(value, depth, lo, hi):
        try:
            return value ** -1
        except (Singular, NotInvertible, ZeroInverse) as exc:
            if depth == 0:
                where = f"input {lo + 1}"
            else:
                where = f"intermediate u_{depth} on inputs {lo + 1}..{hi}"
            raise NotInvertible(f"{where} is not invertible") from exc

    def rec(lo, hi, depth):
        if depth == 0:
            return inputs[lo]
        mid = (lo + hi) // 2
        left = rec(lo, mid, depth - 1)
        right = rec(mid, hi, depth - 1)
        left_inv = invert(left, depth - 1, lo, mid)
        right_inv = invert(right, depth - 1, mid, hi)
        return left * right * left_inv * right_inv

    return rec(0, len(inputs), n)


def v_eval(n: int, inputs, cap: int = DEFAULT_WORD_CAP):
    """Depth-n additive commutator word; no inverses are needed."""
    inputs = list(inputs)
    _check_word_args(n, inputs, cap)

    def rec(lo, hi, depth):
        if depth == 0:
            return inputs[lo]
        mid = (lo + hi) // 2
        left = rec(lo, mid, depth - 1)
        right = rec(mid, hi, depth - 1)
        return left * right - right * left

    return rec(0, len(inputs), n)


@dataclass(frozen=True)
class DegreeProbeReport:
    probe_degree: int | None
    exact_degree: int
    agree: bool
    trials: int
    seed: int
    cap: int

    def to_obj(self):
        return {
            "probe_degree": self.probe_degree,
            "exact_degree": self.exact_degree,
            "agree": self.agree,
            "trials": self.trials,
            "seed": self.seed,
            "cap": self.cap,
        }


def algebraic_degree_probe(ctx, a, trials: int = 20, seed: int = 0,
                           cap: int = DEFAULT_GN_CAP) -> DegreeProbeReport:
    """Probe the algebraic degree of ``a`` by testing vanishing of the
    permutation-sum polynomial on sampled tuples, and cross-check against
    the exact minimal-polynomial degree.

    ``probe_degree`` is the least n at which every sampled tuple gave zero
    (the previous n had a nonzero sample, or n = 1).  Disagreement with the
    exact degree is reported, never raised.
    """
    exact = a.min_poly().degree
    probe = None
    for n in range(1, cap + 1):
        all_zero = True
        for t in range(trials):
            rng = derived_rng(seed, f"{n}:{t}")
            rs = [ctx.random_element(rng) for _ in range(n)]
            if not gn_eval(a, rs, cap=cap).is_zero():
                all_zero = False
                break
        if all_zero:
            probe = n
            break
    return DegreeProbeReport(probe_degree=probe, exact_degree=exact,
                             agree=probe == exact, trials=trials, seed=seed,
                             cap=cap)
