"""Hamiltonian circle labels in complete graphs over the Klein four-group.

Edges of a complete graph carry labels from the four-element group; the
label of a circle is the sum of its edge labels.  This library classifies
instances by their triangle-label diversity, predicts which of the four
labels Hamiltonian circles can realize, constructs explicit witness
circles for all four when diversity allows, and machine-verifies the
underlying structural claims over their full finite domains.
"""

from .census import (
    CommonSignTriple,
    EdgeStructure,
    K4Class,
    TheoryViolationError,
    TriangleCensus,
    classify_k4,
    distinct_sign_edge_structure,
    find_consecutive_distinct_triple,
    triangle_census,
)
from .cycle_space import TriangleBasis, basis, decompose_hamiltonian, is_even_subgraph
from .graph import (
    Circle,
    Path,
    SignedCompleteGraph,
    Triangle,
    build,
    circle_symmetric_difference,
    triangle_sign,
    walk_sign,
)
from .group import ELEMENTS, F22, add, fourth_element, pair_sums
from .io_gen import (
    InstanceRecord,
    ParseError,
    gen_exhaustive_normalized,
    gen_random,
    instance_from_index,
    named_instance,
    parse,
    serialize,
)
from .lemma_lab import VerificationReport, describe, lemma_ids, verify
from .oracle import (
    PathMultisetReport,
    Spectrum,
    hamiltonian_paths_spectrum,
    hamiltonian_spectrum,
    k4_path_report,
)
from .solver import (
    CaseNotApplicableError,
    CounterexampleCandidateError,
    RestrictedSpectrumError,
    SpectrumPrediction,
    UnsupportedSizeError,
    WitnessSet,
    WitnessVerificationError,
    build_from_four_sign_path,
    construct_witnesses,
    necklace_construct,
    predict_spectrum,
    verify_witness_set,
)
from .switching import apply as apply_switching
from .switching import normalize_at

__version__ = "0.1.0"

__all__ = [
    "F22", "ELEMENTS", "add", "fourth_element", "pair_sums",
    "SignedCompleteGraph", "Circle", "Path", "Triangle", "build",
    "walk_sign", "triangle_sign", "circle_symmetric_difference",
    "TriangleBasis", "basis", "decompose_hamiltonian", "is_even_subgraph",
    "apply_switching", "normalize_at",
    "TriangleCensus", "triangle_census", "K4Class", "classify_k4",
    "CommonSignTriple", "find_consecutive_distinct_triple",
    "EdgeStructure", "distinct_sign_edge_structure", "TheoryViolationError",
    "Spectrum", "hamiltonian_spectrum", "hamiltonian_paths_spectrum",
    "PathMultisetReport", "k4_path_report",
    "SpectrumPrediction", "predict_spectrum", "WitnessSet",
    "construct_witnesses", "build_from_four_sign_path", "necklace_construct",
    "verify_witness_set", "RestrictedSpectrumError", "UnsupportedSizeError",
    "CounterexampleCandidateError", "CaseNotApplicableError",
    "WitnessVerificationError",
    "VerificationReport", "verify", "lemma_ids", "describe",
    "InstanceRecord", "serialize", "parse", "ParseError",
    "gen_random", "gen_exhaustive_normalized", "instance_from_index",
    "named_instance",
]
