"""Exact-arithmetic and high-precision toolkit for q-Bessel functions,
Dunkl-type operators, their limit transitions, and the Askey-Wilson-type
operator algebras they generate."""

from .numerics import ComplexRational, ExactScalar, I, LaurentPoly, poly_eval, poly_is_proper
from .qseries import HyperSpec, classical_hyp, phi, pochhammer, q_pochhammer
from .opalgebra import (
    LinOp,
    Representation,
    RelationReport,
    casimir_value,
    check_relation,
    intertwining_check,
    op_apply,
    q_bracket,
    rep_daha,
    rep_dunkl,
    rep_little_q_jacobi,
    rep_minus1_jacobi,
    rep_qbessel2,
    rep_qbessel3,
    rep_qlaguerre,
)
from .families import (
    PolyFamilyInstance,
    jacobi_classical,
    laguerre_classical,
    little_q_jacobi,
    minus1_jacobi,
    orthogonality_sum,
    q_laguerre,
)
from .besselfam import (
    TruncSeries,
    bessel_norm,
    cas,
    dunkl_kernel,
    jackson_q_bessel,
    minus1_bessel,
    q_bessel2_norm,
    q_bessel3_norm,
    raising_lowering_check,
)
from .transforms import TransformSpec, forward, inverse, roundtrip_residual
from .limits import LimitCase, qshifted_limit_check, registered_cases, run_limit

__version__ = "0.1.0"
