"""JSON file formats with exact scalar strings.

Every scalar is serialized through the field's canonical string form
("p/q", residue, or comma-joined coefficient list), so parsing round-trips
bit-exactly.  ``canonical_dumps`` sorts keys, making reports byte-identical
across runs for equal inputs.
"""

from __future__ import annotations

import json

from .algebras import AlgebraDescriptor, AlgebraElement
from .decomp import AddDecomposition, MultDecomposition
from .errors import BadParams
from .fields import field_from_str
from .matrices import Matrix


def canonical_dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2) + "\n"


# -- matrices ---------------------------------------------------------------

def matrix_to_obj(m: Matrix) -> dict:
    return {"field": m.field.to_str(), "rows": m.to_str_rows()}


def matrix_from_obj(obj) -> Matrix:
    if not isinstance(obj, dict) or "field" not in obj or "rows" not in obj:
        raise BadParams("matrix object needs 'field' and 'rows'")
    field = field_from_str(obj["field"])
    return Matrix(field, obj["rows"])


# -- algebras ---------------------------------------------------------------

def algebra_to_obj(alg: AlgebraDescriptor) -> dict:
    to_str = alg.field.scalar_to_str
    obj = {
        "field": alg.field.to_str(),
        "dim": alg.dim,
        "unit": [to_str(c) for c in alg.unit],
        "table": [[[to_str(c) for c in cell] for cell in row]
                  for row in alg.table],
        "division": alg.division,
        "names": list(alg.basis_names),
    }
    if alg.degree is not None:
        obj["degree"] = alg.degree
    if alg.label is not None:
        obj["label"] = alg.label
    return obj


def algebra_from_obj(obj) -> AlgebraDescriptor:
    field = field_from_str(obj["field"])
    alg = AlgebraDescriptor(
        field, obj["table"], obj["unit"], degree=obj.get("degree"),
        division=obj.get("division", False), basis_names=obj.get("names"),
        label=obj.get("label"))
    if alg.dim != obj["dim"]:
        raise BadParams("algebra dimension does not match its table")
    return alg


# -- ring elements (matrices or algebra elements) -----------------------------

def element_to_obj(x) -> dict:
    if isinstance(x, Matrix):
        return matrix_to_obj(x)
    if isinstance(x, AlgebraElement):
        to_str = x.algebra.field.scalar_to_str
        return {"coords": [to_str(c) for c in x.coords]}
    raise BadParams(f"cannot serialize ring element {x!r}")


def element_from_obj(ctx, obj):
    if "rows" in obj:
        m = matrix_from_obj(obj)
        if not ctx.contains(m):
            raise BadParams("matrix does not belong to the given context")
        return m
    if "coords" in obj:
        x = AlgebraElement(ctx.algebra, obj["coords"])
        return x
    raise BadParams("unknown ring element object")


def env_to_obj(env: dict) -> dict:
    return {name: element_to_obj(x) for name, x in env.items()}


def env_from_obj(ctx, obj: dict) -> dict:
    return {name: element_from_obj(ctx, x) for name, x in obj.items()}


# -- decomposition certificates ------------------------------------------------

def decomposition_to_obj(dec) -> dict:
    if isinstance(dec, MultDecomposition):
        kind = "mult"
        side = [str(d) for d in dec.factor_determinants]
    elif isinstance(dec, AddDecomposition):
        kind = "add"
        side = [str(t) for t in dec.factor_traces]
    else:
        raise BadParams(f"cannot serialize {type(dec).__name__} as a certificate")
    return {
        "kind": kind,
        "depth": dec.depth,
        "target": matrix_to_obj(dec.target),
        "factors": [matrix_to_obj(f) for f in dec.factors],
        "verified": dec.verified,
        "seed": dec.seed,
        "factor_dets_or_traces": side,
    }


def decomposition_from_obj(obj):
    """Returns (kind, target, depth, factors, seed); replay is the caller's
    job so verification failures can report coordinates."""
    kind = obj.get("kind")
    if kind not in ("mult", "add"):
        raise BadParams(f"unknown certificate kind {kind!r}")
    target = matrix_from_obj(obj["target"])
    factors = tuple(matrix_from_obj(f) for f in obj["factors"])
    depth = int(obj["depth"])
    return kind, target, depth, factors, obj.get("seed")


# -- reports --------------------------------------------------------------------

def identity_report_to_obj(report) -> dict:
    obj = {
        "expression": report.expression,
        "context": report.context,
        "mode": report.mode,
        "trials": report.trials,
        "permissible": report.permissible,
        "seed": report.seed,
        "holds": report.holds,
    }
    if report.counterexample_trial is not None:
        obj["counterexample"] = {
            "trial": report.counterexample_trial,
            "env": env_to_obj(report.counterexample_env),
            "value": element_to_obj(report.counterexample_value),
        }
    return obj


def nontriviality_report_to_obj(report) -> dict:
    obj = {
        "expression": report.expression,
        "max_size": report.max_size,
        "trials": report.trials,
        "seed": report.seed,
        "nontrivial_evidence": report.nontrivial_evidence,
    }
    if report.nontrivial_evidence:
        obj["witness"] = {
            "size": report.witness_size,
            "trial": report.witness_trial,
            "env": env_to_obj(report.witness_env),
            "value": element_to_obj(report.witness_value),
        }
    else:
        obj["note"] = ("no nonzero permissible value found; "
                       "inconclusive, not a triviality verdict")
    return obj
