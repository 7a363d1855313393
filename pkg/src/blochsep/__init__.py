"""Entanglement detection for bipartite and tripartite states from their
generator-basis (Bloch) expansion and contraction transforms."""

__version__ = "0.1.0"

from .bloch import (
    BlochVector,
    TripartiteBloch,
    decompose,
    inner_radius,
    outer_radius,
    reconstruct,
    conditional_operator_check,
)
from .detection import (
    NEG_MARGIN,
    DetectionReport,
    SearchStrategy,
    StrategyKind,
    Verdict,
    critical_parameter,
    detect,
    enumerate_sign_diagonals,
    local_refine,
    ppt_check,
    random_contraction,
    sweep,
)
from .gamma import (
    TransformPair,
    apply_gamma,
    constraint_check,
    gamma_matrix,
    transpose_diagonal,
    transpose_pair,
    ppt_as_gamma,
)
from .generators import GeneratorBasis, build_generators
from .linalg import (
    POS_TOL,
    DensityMatrix,
    herm_eigvals,
    kron,
    min_eig,
    partial_trace,
    partial_transpose,
)
from .states import (
    SeparableEnsemble,
    ghz_mixed,
    isotropic,
    random_density,
    random_separable,
)
