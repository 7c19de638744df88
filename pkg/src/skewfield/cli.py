"""Command-line front end.

Subcommands: algdeg, decompose, witness, identity, verify, matrix special-t.

Exit codes: 0 success (including an identity with no counterexample and a
witness run that merely exhausted its budget), 1 domain/precondition errors
and failed verification, 2 parse or usage errors, 3 identity counterexample
found, 4 no permissible samples.
"""

from __future__ import annotations

import argparse
import sys
from dataclasses import dataclass

from . import __version__
from .algebras import AlgebraDescriptor, parse_element, preset
from .contexts import AlgebraContext, MatrixContext, context_from_name
from .decomp import iterated_add_decomp, iterated_mult_decomp, special_matrix_T
from .errors import (BadParams, NoPermissibleSamples, NotADivisionPreset,
                     NotInvertible, ParseError, SkewfieldError)
from .fields import Polynomial
from .identity import (MODE_ONE, MODE_ZERO, identity_test, resolve_builtin)
from .matrices import Matrix
from .sampling import derived_rng
from .serialize import (canonical_dumps, decomposition_from_obj,
                        decomposition_to_obj, element_to_obj,
                        identity_report_to_obj, matrix_from_obj,
                        matrix_to_obj)
from .words import (DEFAULT_WORD_CAP, algebraic_degree_probe, u_eval, v_eval)

EXIT_OK = 0
EXIT_DOMAIN = 1
EXIT_PARSE = 2
EXIT_COUNTEREXAMPLE = 3
EXIT_NO_PERMISSIBLE = 4


# ---------------------------------------------------------------------------
# witness search (Theorem-style experiments on division presets)
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class WitnessReport:
    """Outcome of sampling word values in a division preset, looking for one
    whose minimal polynomial has the full degree m (so it generates a
    maximal subfield).

    ``observed_max_degree`` is the largest degree seen across all sampled
    word values; it is a lower bound for the maximum over the whole algebra,
    which sampling cannot compute.
    """

    preset: str
    kind: str
    depth: int
    trials: int
    seed: int
    success: bool
    algebra_degree: int
    observed_max_degree: int
    witness: object = None
    inputs: tuple | None = None
    min_poly: Polynomial | None = None
    witness_trial: int | None = None


def witness_search(algebra, kind: str, depth: int, trials: int = 100,
                   seed: int = 0, num_bound: int = 10, den_bound: int = 10,
                   resample_cap: int = 8) -> WitnessReport:
    """Sample 2^depth-tuples of nonzero elements, evaluate the commutator
    word, and stop at the first value generating a maximal subfield.

    Budget exhaustion is reported (success=False), never raised: the search
    certifies found witnesses and reports lower bounds otherwise.  Every
    success is replayed from the recorded inputs before being returned.
    """
    if isinstance(algebra, str):
        label = algebra
        algebra = preset(algebra)
    else:
        label = algebra.label or "algebra"
    if not isinstance(algebra, AlgebraDescriptor) or not algebra.division \
            or algebra.degree is None:
        raise NotADivisionPreset(
            "witness search needs a declared division preset with a degree")
    if kind not in ("mult", "add"):
        raise BadParams(f"kind must be 'mult' or 'add', got {kind!r}")
    if depth < 1 or depth > DEFAULT_WORD_CAP:
        raise BadParams(f"depth must be in 1..{DEFAULT_WORD_CAP}")
    evaluate = u_eval if kind == "mult" else v_eval
    ctx = AlgebraContext(algebra)
    m = algebra.degree
    arity = 2 ** depth
    observed = 0
    for trial in range(trials):
        rng = derived_rng(seed, trial)
        value = None
        inputs = None
        for _ in range(resample_cap):
            candidate = [ctx.random_nonzero(rng, num_bound, den_bound)
                         for _ in range(arity)]
            try:
                value = evaluate(depth, candidate)
            except NotInvertible:
                continue   # resample the tuple; cannot happen in a true division algebra
            inputs = tuple(candidate)
            break
        if inputs is None:
            continue
        mp = value.min_poly()
        observed = max(observed, mp.degree)
        if mp.degree == m:
            replay = evaluate(depth, inputs)
            if replay != value or replay.min_poly().degree != m:
                raise SkewfieldError("internal: witness replay failed")
            return WitnessReport(
                preset=label, kind=kind, depth=depth, trials=trials,
                seed=seed, success=True, algebra_degree=m,
                observed_max_degree=observed, witness=value, inputs=inputs,
                min_poly=mp, witness_trial=trial)
    return WitnessReport(
        preset=label, kind=kind, depth=depth, trials=trials, seed=seed,
        success=False, algebra_degree=m, observed_max_degree=observed)


def witness_report_to_obj(report: WitnessReport) -> dict:
    obj = {
        "preset": report.preset,
        "kind": report.kind,
        "depth": report.depth,
        "trials": report.trials,
        "seed": report.seed,
        "success": report.success,
        "algebra_degree": report.algebra_degree,
        "observed_max_degree": report.observed_max_degree,
        "observed_max_degree_is_lower_bound": True,
    }
    if report.success:
        obj["witness"] = element_to_obj(report.witness)
        obj["inputs"] = [element_to_obj(x) for x in report.inputs]
        obj["min_poly"] = report.min_poly.to_strings()
        obj["min_poly_text"] = str(report.min_poly)
        obj["witness_trial"] = report.witness_trial
    return obj


# ---------------------------------------------------------------------------
# command implementations
# ---------------------------------------------------------------------------

def _emit(args, obj, text_lines):
    payload = canonical_dumps(obj) if args.format == "json" \
        else "\n".join(text_lines) + "\n"
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(payload)
    else:
        sys.stdout.write(payload)


def _load_json(path):
    import json
    with open(path) as fh:
        return json.load(fh)


def cmd_algdeg(args) -> int:
    if args.matrix_file:
        element = matrix_from_obj(_load_json(args.matrix_file))
        ctx = MatrixContext(element.field, element.nrows)
        shown = "matrix from " + args.matrix_file
    elif args.preset:
        alg = preset(args.preset)
        if not args.element:
            raise BadParams("--preset needs --element")
        element = parse_element(alg, args.element)
        ctx = AlgebraContext(alg)
        shown = f"{args.element} in {args.preset}"
    else:
        raise BadParams("algdeg needs --matrix-file or --preset/--element")
    report = algebraic_degree_probe(ctx, element, trials=args.trials,
                                    seed=args.seed)
    obj = report.to_obj()
    obj["element"] = shown
    obj["min_poly"] = str(element.min_poly())
    lines = [
        f"element: {shown}",
        f"exact degree:  {report.exact_degree}  (min poly {element.min_poly()})",
        f"probe degree:  {report.probe_degree}",
        f"agree: {report.agree}",
    ]
    _emit(args, obj, lines)
    return EXIT_OK


def cmd_decompose(args) -> int:
    target = matrix_from_obj(_load_json(args.matrix_file))
    if args.kind == "mult":
        dec = iterated_mult_decomp(target, args.depth, seed=args.seed)
    else:
        dec = iterated_add_decomp(target, args.depth)
    obj = decomposition_to_obj(dec)
    lines = [
        f"decomposed {target.nrows}x{target.ncols} target into "
        f"{len(dec.factors)} factors (depth {dec.depth}, kind {args.kind})",
        f"verified: {dec.verified}",
        "factor dets/traces: " + ", ".join(obj["factor_dets_or_traces"]),
    ]
    _emit(args, obj, lines)
    return EXIT_OK


def cmd_witness(args) -> int:
    report = witness_search(args.preset, args.kind, args.depth,
                            trials=args.trials, seed=args.seed)
    obj = witness_report_to_obj(report)
    lines = [
        f"preset {report.preset}, kind {report.kind}, depth {report.depth}: "
        f"success={report.success}",
        f"algebra degree: {report.algebra_degree}",
        f"observed max degree (lower bound): {report.observed_max_degree}",
    ]
    if report.success:
        lines.append(f"witness: {report.witness}")
        lines.append(f"min poly: {report.min_poly}")
        lines.append(f"found at trial {report.witness_trial}")
    _emit(args, obj, lines)
    return EXIT_OK


def cmd_identity(args) -> int:
    if args.builtin:
        tree, label, mode, outcome_recorded = resolve_builtin(args.builtin)
        if args.mode:
            mode = args.mode
    elif args.expr:
        tree, label = args.expr, args.expr
        mode = args.mode or MODE_ZERO
        outcome_recorded = False
    else:
        raise BadParams("identity needs --builtin or --expr")
    ctx = context_from_name(args.context)
    report = identity_test(tree, ctx, mode=mode, trials=args.trials,
                           seed=args.seed,
                           label=label if not isinstance(tree, str) else None)
    obj = identity_report_to_obj(report)
    obj["outcome_recorded"] = outcome_recorded
    lines = [
        f"expression: {report.expression}",
        f"context: {report.context}  mode: {report.mode}",
        f"permissible samples: {report.permissible} of {report.trials} trials",
    ]
    if report.holds:
        lines.append(f"no counterexample among {report.permissible} permissible samples")
    else:
        lines.append(f"counterexample at trial {report.counterexample_trial}")
    _emit(args, obj, lines)
    return EXIT_OK if report.holds else EXIT_COUNTEREXAMPLE


def cmd_verify(args) -> int:
    obj = _load_json(args.certificate)
    if "kind" in obj and obj.get("kind") in ("mult", "add"):
        kind, target, depth, factors, _ = decomposition_from_obj(obj)
        value = u_eval(depth, factors) if kind == "mult" else v_eval(depth, factors)
        if value == target:
            for k, f in enumerate(factors):
                if kind == "mult" and f.is_scalar():
                    print(f"FAIL: factor {k + 1} is scalar")
                    return EXIT_DOMAIN
                if kind == "add" and not f.trace().is_zero():
                    print(f"FAIL: factor {k + 1} has nonzero trace")
                    return EXIT_DOMAIN
            print(f"OK: {kind} certificate replays exactly "
                  f"({len(factors)} factors, depth {depth})")
            return EXIT_OK
        for i in range(target.nrows):
            for j in range(target.ncols):
                if value.rows[i][j] != target.rows[i][j]:
                    print(f"FAIL: first mismatch at entry ({i + 1}, {j + 1}): "
                          f"replay gives "
                          f"{value.field.scalar_to_str(value.rows[i][j])}, "
                          f"certificate says "
                          f"{target.field.scalar_to_str(target.rows[i][j])}")
                    return EXIT_DOMAIN
        print("FAIL: replay mismatch")
        return EXIT_DOMAIN
    if "preset" in obj and "witness" in obj:
        alg = preset(obj["preset"])
        inputs = [alg.element(x["coords"]) for x in obj["inputs"]]
        witness = alg.element(obj["witness"]["coords"])
        evaluate = u_eval if obj["kind"] == "mult" else v_eval
        value = evaluate(obj["depth"], inputs)
        if value != witness:
            print("FAIL: witness replay differs from the recorded value")
            return EXIT_DOMAIN
        degree = value.min_poly().degree
        if degree != obj["algebra_degree"]:
            print(f"FAIL: witness degree {degree} != algebra degree "
                  f"{obj['algebra_degree']}")
            return EXIT_DOMAIN
        print(f"OK: witness certificate replays exactly (degree {degree})")
        return EXIT_OK
    raise BadParams("unrecognized certificate layout")


def cmd_special_t(args) -> int:
    m = special_matrix_T(args.size, args.kind)
    obj = matrix_to_obj(m)
    _emit(args, obj, [str(m)])
    return EXIT_OK


# ---------------------------------------------------------------------------
# argument parsing
# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--trials", type=int, default=100)
    common.add_argument("--out", help="write the report to this path")
    common.add_argument("--format", choices=("json", "text"), default="text")

    parser = argparse.ArgumentParser(
        prog="skewfield",
        description="Exact experiments with commutator words, decompositions, "
                    "and rational identities in division algebras")
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("algdeg", parents=[common],
                       help="exact and probed algebraic degree of an element")
    p.add_argument("--matrix-file", help="JSON matrix file")
    p.add_argument("--preset", help="algebra preset name")
    p.add_argument("--element", help="element text, e.g. '1 + 2/3*i - j'")
    p.set_defaults(func=cmd_algdeg)

    p = sub.add_parser("decompose", parents=[common],
                       help="iterated commutator decomposition of a matrix")
    p.add_argument("--kind", choices=("mult", "add"), required=True)
    p.add_argument("--matrix-file", required=True)
    p.add_argument("--depth", type=int, required=True)
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("witness", parents=[common],
                       help="search a division preset for a word value "
                            "generating a maximal subfield")
    p.add_argument("--preset", required=True)
    p.add_argument("--kind", choices=("mult", "add"), required=True)
    p.add_argument("--depth", type=int, required=True)
    p.set_defaults(func=cmd_witness)

    p = sub.add_parser("identity", parents=[common],
                       help="randomized rational-identity test")
    p.add_argument("--builtin", help="catalog name, e.g. hua or gn-un:3,1")
    p.add_argument("--expr", help="expression text")
    p.add_argument("--context", required=True,
                   help="matrix:m, quaternion:a,b, or cyclic3")
    p.add_argument("--mode", choices=(MODE_ZERO, MODE_ONE))
    p.set_defaults(func=cmd_identity)

    p = sub.add_parser("verify", parents=[common],
                       help="replay a certificate file exactly")
    p.add_argument("certificate")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("matrix", help="matrix constructions")
    msub = p.add_subparsers(dest="matrix_command", required=True)
    q = msub.add_parser("special-t", parents=[common],
                        help="the unipotent/nilpotent superdiagonal gadget")
    q.add_argument("--size", type=int, required=True)
    q.add_argument("--kind", choices=("unipotent", "nilpotent"), required=True)
    q.set_defaults(func=cmd_special_t)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"error: ParseError: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except NoPermissibleSamples as exc:
        print(f"error: NoPermissibleSamples: {exc}", file=sys.stderr)
        return EXIT_NO_PERMISSIBLE
    except (OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except SkewfieldError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_DOMAIN


if __name__ == "__main__":
    sys.exit(main())
