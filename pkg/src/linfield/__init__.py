"""Exact first-order linear differential operators over Q(x1, ..., xn)."""

from .annihilator import annihilate, coset_membership, coset_operator, kernel_membership
from .derivations import (
    VectorA,
    apply_derivation,
    chain_rule_check,
    grad,
    inner_product,
    partial,
)
from .errors import (
    DependentInputError,
    LinfieldError,
    NonIntegerExponentError,
    ParseError,
    PoleError,
    PreconditionError,
    UndefinedCompositionError,
    UnknownVariableError,
    ZeroDenominatorError,
    ZeroEtaError,
    ZeroInverseError,
)
from .expr import parse, parse_operator, parse_ratfunc
from .field import (
    Poly,
    RatFunc,
    Scalar,
    decode_sequence,
    encode_sequence,
    eval_point,
    poly_gcd,
    ratfunc_add,
    ratfunc_inv,
    ratfunc_mul,
    ratfunc_neg,
    ratfunc_new,
    substitute,
)
from .independence import JacobianMatrix, is_functionally_independent, jacobian, rank
from .operators import (
    NHOperator,
    conjugate,
    in_kernel,
    kernel_rank_bound,
    nh_apply,
    ratio_in_homogeneous_kernel,
    verify_affine_solutions,
    verify_product_structure,
)
from .oracle import GenParams, identity_check, random_ratfunc

__version__ = "0.1.0"
