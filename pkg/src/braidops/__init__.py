"""Braiding operators as quantum gates, entanglement tests, and a state-sum
link invariant for closed braids."""

from .braids import (
    BraidSyntaxError,
    BraidWord,
    ClosureData,
    Generator,
    closure_data,
    compose,
    conjugate,
    format_braid_word,
    free_reduce,
    mirror,
    parse_braid_word,
    sigma,
    stabilize,
    virt,
)
from .engine import (
    QuantumState,
    WordOperatorDescriptor,
    apply_generator,
    apply_word,
    dense_matrix,
    weighted_trace,
)
from .entangle import (
    Bipartition,
    EngineConsistencyError,
    MeasurementRecord,
    aravind_demo,
    ghz_state,
    lemma_demo,
    measure_qubit,
    product_test_2q,
    schmidt_rank,
)
from .fixtures import FIXTURE_WORDS, fixture
from .laurent import LaurentValue
from .rmatrix import (
    NonUnitParameterError,
    RParams,
    TwoSiteOperator,
    build_P,
    build_R,
    build_R_from_M,
    build_tau,
    check_unitary,
    check_yang_baxter,
)
from .statesum import (
    VirtualWordError,
    bracket_state_sum,
    bracket_state_sum_naive,
    bracket_via_trace,
    evaluate_at_phases,
    linking_law,
    q_from_phases,
    sigma_zero_one,
    z_invariant,
    z_special,
)
from .virtualrel import RelationInstance, check_relation, relation_catalog

__version__ = "0.1.0"

__all__ = [
    "BraidSyntaxError",
    "BraidWord",
    "Bipartition",
    "ClosureData",
    "EngineConsistencyError",
    "FIXTURE_WORDS",
    "Generator",
    "LaurentValue",
    "MeasurementRecord",
    "NonUnitParameterError",
    "QuantumState",
    "RParams",
    "RelationInstance",
    "TwoSiteOperator",
    "VirtualWordError",
    "WordOperatorDescriptor",
    "apply_generator",
    "apply_word",
    "aravind_demo",
    "bracket_state_sum",
    "bracket_state_sum_naive",
    "bracket_via_trace",
    "build_P",
    "build_R",
    "build_R_from_M",
    "build_tau",
    "check_relation",
    "check_unitary",
    "check_yang_baxter",
    "closure_data",
    "compose",
    "conjugate",
    "dense_matrix",
    "evaluate_at_phases",
    "fixture",
    "format_braid_word",
    "free_reduce",
    "ghz_state",
    "lemma_demo",
    "linking_law",
    "measure_qubit",
    "mirror",
    "parse_braid_word",
    "product_test_2q",
    "q_from_phases",
    "relation_catalog",
    "schmidt_rank",
    "sigma",
    "sigma_zero_one",
    "stabilize",
    "virt",
    "weighted_trace",
    "z_invariant",
    "z_special",
]
