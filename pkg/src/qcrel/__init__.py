"""qcrel: a possibilistic model of quantum computation over finite sets and relations."""

from .relations import (
    FinRel,
    StateVec,
    Scalar,
    POSSIBLE,
    IMPOSSIBLE,
    then,
    compose,
    after,
    converse,
    tensor,
    symmetric_difference,
    identity,
    empty,
    full,
    swap,
    primitive,
    is_unitary,
    is_unitary_by_composition,
    born_scalar,
    as_bool_matrix,
)
from .groupoids import (
    AbelianGroup,
    Groupoid,
    LawReport,
    check_structure_laws,
    verify_classical_structure,
    ComplementaryPair,
    make_complementary_pair,
    cnot,
    is_complementary,
    fourier_rel,
    parse_group_spec,
    parse_groupoid_spec,
    parse_pair_spec,
)
from .hom_relations import (
    StructuredRel,
    ClassicalEquations,
    classical_equations,
    is_groupoid_hom_relation,
    is_surjective_on_objects,
    is_monoid_hom_relation,
    is_classical_relation,
    is_self_conjugate,
    enumerate_classical_relations,
)
from .oracles import OracleSpec, build_oracle, oracle_query_count
from .algorithms import (
    CONSTANT,
    BALANCED,
    NEITHER,
    UNDETERMINED,
    RunReport,
    DJInstance,
    dj_classify,
    dj_run,
    GroverInstance,
    grover_diffusion,
    grover_zero_condition,
    grover_opposite_mapping,
    grover_run,
    HomIDInstance,
    grouphomid_necessary,
    grouphomid_run,
)

__version__ = "0.1.0"

__all__ = [
    "FinRel", "StateVec", "Scalar", "POSSIBLE", "IMPOSSIBLE",
    "then", "compose", "after", "converse", "tensor", "symmetric_difference",
    "identity", "empty", "full", "swap", "primitive",
    "is_unitary", "is_unitary_by_composition", "born_scalar", "as_bool_matrix",
    "AbelianGroup", "Groupoid", "LawReport",
    "check_structure_laws", "verify_classical_structure",
    "ComplementaryPair", "make_complementary_pair",
    "cnot", "is_complementary", "fourier_rel",
    "parse_group_spec", "parse_groupoid_spec", "parse_pair_spec",
    "StructuredRel", "ClassicalEquations", "classical_equations",
    "is_groupoid_hom_relation", "is_surjective_on_objects",
    "is_monoid_hom_relation", "is_classical_relation", "is_self_conjugate",
    "enumerate_classical_relations",
    "OracleSpec", "build_oracle", "oracle_query_count",
    "CONSTANT", "BALANCED", "NEITHER", "UNDETERMINED",
    "RunReport",
    "DJInstance", "dj_classify", "dj_run",
    "GroverInstance", "grover_diffusion", "grover_zero_condition",
    "grover_opposite_mapping", "grover_run",
    "HomIDInstance", "grouphomid_necessary", "grouphomid_run",
]
