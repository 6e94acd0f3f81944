"""Covers of nilpotent orbit closures in classical Lie algebras and their
Q-factorial terminalizations, computed from Jordan types."""

from .errors import (
    InvalidCover,
    InvalidCoverDegree,
    InvalidOrbit,
    InvalidPartition,
    InvalidPivot,
    InvalidStrategy,
    NilcoverError,
    StrategyStuck,
    UnsupportedHypotheses,
)
from .induction import (
    InductionChain,
    InductionStep,
    StepKind,
    induce_double_type_I,
    induce_type_I,
    induce_type_II,
    sl_block_step,
)
from .partition import (
    Algebra,
    ConditionReport,
    OrbitId,
    Partition,
    VeryEvenLabel,
    canonicalize,
    check_conditions,
    counts,
    dual,
    gap_members,
    is_rather_odd,
    is_very_even,
    sl_block_decomposition,
    validate_jordan_type,
)
from .slices import codim2_degenerations, cover_fiber_over_codim2, terminality_verdict
from .terminalization import (
    Strategy,
    TerminalizationReport,
    build,
    canonical_strategy,
    degree_ledger,
)
from .topology import (
    CoverSpec,
    FiniteGroupDescriptor,
    cover_menu,
    fundamental_group,
    parse_cover,
    q_factorial_verdict,
)

__version__ = "0.1.0"
