"""Exact tensor-trait toolkit: annihilator ideals, operator algebras,
densors, singularity complexes, and composability verdicts."""

from .annihilator import ann_operator, ann_set, joint_annihilator, min_poly_axis
from .categories import (
    ComposabilityVerdict,
    Homotopism,
    TensorCategory,
    compose_homotopisms,
    composability_verdict,
    shuffle_category,
    verify_homotopism,
)
from .characters import PartialCharacter, binomial_character
from .complexes import SimplicialComplex, complex_of, stanley_reisner
from .fields import QQ, PrimeField, RationalField
from .galois import (
    OperatorSpace,
    ProductLaw,
    SymbolicSystem,
    check_product_closure,
    densor,
    generic_points,
    named_algebra,
    op_space_equations,
    op_space_linear,
    ten_closure,
    torus_transform,
)
from .groebner import Ideal, buchberger, intersect, saturate
from .operators import (
    TransverseOperator,
    apply_monomial,
    apply_polynomial,
    compose,
    is_trait,
)
from .polys import GREVLEX, LEX, MultiPoly, poly_from_string, poly_to_string
from .singularity import (
    Subframe,
    monomial_trait_probe,
    nabla_complex,
    omega_UV_spanning,
    sr_ideal_of_subframe,
    verify_singularity_theorem,
)
from .tensors import Frame, Tensor, TensorSpace, contract_axis, evaluate, shuffle

__version__ = "0.1.0"
