"""skewfield: exact computational algebra for division rings.

Exact scalars (rationals, prime fields, number fields), exact linear
algebra, structure-constant algebras with division presets, the
algebraicity-test permutation sum g_n, iterated multiplicative/additive
commutator words u_n/v_n, constructive commutator decompositions, and
randomized rational-identity testing -- no floating point anywhere.
"""

__version__ = "0.1.0"

from .errors import (ArityMismatch, BadDeterminant, BadParams, BadTrace,
                     CharTooSmall, ContextMismatch, DegenerateChoiceExhausted,
                     DepthArityCap, DepthCap, DescriptorMismatch,
                     NoPermissibleSamples, NonSquare, NotADivisionPreset,
                     NotInvertible, ParseError, ScalarInput, ShapeMismatch,
                     Singular, SkewfieldError, SmallField, UnboundVariable,
                     ZeroInverse)
from .fields import (FieldDescriptor, FieldElement, Polynomial, QQ,
                     field_from_str, field_inverse, number_field, prime_field,
                     rationals)
from .matrices import (Matrix, det, is_scalar, kernel_basis, mat_inverse,
                       min_poly, qq_matrix, trace)
from .algebras import (AlgebraDescriptor, AlgebraElement, alg_inverse,
                       alg_mul, cyclic3_algebra, is_central, matrix_algebra,
                       maximal_subfield_check, min_poly_elt, parse_element,
                       preset, quaternion_algebra, regular_representation,
                       subfield_degree)
from .contexts import AlgebraContext, MatrixContext, context_from_name
from .words import (algebraic_degree_probe, gn_eval, permutation_sign, u_eval,
                    v_eval)
from .decomp import (AddDecomposition, MultDecomposition,
                     additive_commutator_decomp, iterated_add_decomp,
                     iterated_mult_decomp, multiplicative_commutator_decomp,
                     special_matrix_T, zero_diagonal_similarity)
from .identity import (AC, Add, CATALOG, Const, EvalOutcome, IdentityReport,
                       MC, Mul, Neg, NontrivialityReport, Pow, RationalExpr,
                       SHIPPED_CATALOG, Sub, Var, build_gn_word_expr,
                       eval_expr, identity_test, nontriviality_probe, parse,
                       resolve_builtin, to_text, variables, word_expr)
from .sampling import derive_seed, derived_rng
from .cli import WitnessReport, witness_search
