"""Exact-arithmetic workbench for splitting algebraic structures.

Everything runs over the rationals with :class:`fractions.Fraction` —
no floats, no tolerances.  The package covers:

* modified Baxter operators and their transposed coalgebra version
  (:mod:`splitalg.baxter`);
* two-, three-, four-, and nine-operation splittings of associative
  products, with tensor products, opposites, transposes, and the
  derived pre-Lie and Lie structures (:mod:`splitalg.splitting`);
* twisted bialgebras, convolution on endomorphism spaces, and the
  nine-operation structure living there (:mod:`splitalg.bialgebra`);
* path algebras of weighted acyclic graphs and their coproducts
  (:mod:`splitalg.graphalg`);
* exact degree-3 dimensions of binary quadratic operad presentations
  (:mod:`splitalg.operad`);
* a mechanical formal-deformation engine: cross-term identity systems,
  operator-level equations, and order-by-order series checks
  (:mod:`splitalg.deformation`);
* unit actions: compatibility on the augmented space and coherence on
  mixed tensor spaces (:mod:`splitalg.unit_action`);
* kind-tagged JSON envelopes and a command-line driver
  (:mod:`splitalg.jsonio`, :mod:`splitalg.cli`).
"""

from __future__ import annotations

from .algebra_core import (
    CoalgebraData,
    FiniteAlgebra,
    check_algebra,
    check_coassociative,
    full_matrix_algebra,
    triangular_matrix_algebra,
    triangular_matrix_coalgebra,
)
from .baxter import (
    check_baxter,
    check_cobaxter,
    commute,
    transpose_operator,
    triangular_baxter_example,
    triangular_column_operator,
    triangular_row_coproduct_operator,
    triangular_row_operator,
)
from .bialgebra import (
    ConvolutionStructure,
    EpsilonBialgebra,
    check_eps_bialgebra,
    check_hypercubic,
    convolution_report,
    convolution_structure,
    ennea_on_end,
    prelie_from_bialgebra,
)
from .deformation import (
    DeformationInstance,
    DeformedSystem,
    baxter_deformation,
    check_deformation_instance,
    cross_term_system,
    deformed_structure_check,
    instance_operator_equation,
    two_operator_equation,
)
from .exactlin import (
    LinearOperator,
    Matrix,
    Scalar,
    Tensor3,
    basis_vector,
    combine,
    rat,
)
from .graphalg import (
    PathAlgebra,
    WeightedDigraph,
    chain_coproduct,
    chain_order,
    path_algebra,
    splitting_coproduct,
    weighted_coproduct,
)
from .operad import Degree3Count, builtin_presentations, degree3_dimension
from .relations import (
    FOUR_OP_SYSTEM,
    NINE_OP_SYSTEM,
    THREE_OP_SYSTEM,
    TWO_OP_SYSTEM,
    AxiomSystem,
    Relation,
    Term,
    TPoly,
    check_system,
    resolve_tensor,
)
from .report import Report, Witness
from .splitting import (
    EnneaStructure,
    PreLieStructure,
    TrialgebraStructure,
    check_dialgebra,
    check_ennea,
    check_jacobi,
    check_prelie,
    check_quadri,
    check_trialgebra,
    ennea_from_baxter_on_trialgebra,
    ennea_from_commuting_pair,
    horizontal_trialgebra,
    opposite_ennea,
    prelie_pair_from_ennea,
    quadri_from_commuting_pair,
    tensor_ennea,
    transpose_ennea,
    trialgebra_from_baxter,
    vertical_trialgebra,
)
from .unit_action import (
    check_coherence,
    check_ennea_coherence,
    check_unit_compatibility,
    ennea_coherence,
    nine_op_unit_rules,
    unit_rules,
)

__version__ = "0.1.0"
