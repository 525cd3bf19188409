"""Exact workbench for 2-characters, Frobenius TQFTs, cobordism words and anomalies."""

from ._core import (  # noqa: F401
    AnomalousTheory,
    BoundaryCondition,
    CobWord,
    CobaltError,
    Cocycle,
    CrossedModule,
    FiniteGroup,
    FrobeniusAlgebra,
    HomotopyFixedPoint,
    ModularData,
    ProjRep,
    Scalar,
    SemitrivializedAnomaly,
    TwoCharacter,
    anomaly_character,
    center,
    coboundary,
    commutator_pairing,
    conductor_cap,
    conjugacy_classes,
    character_over,
    cylinderize,
    eval_1d,
    eval_closed_2d,
    extract_holonomy,
    from_cocycle,
    from_fixed_point,
    genus_invariant,
    handle_element,
    holonomy_table,
    is_semisimple,
    load_boundary_condition,
    load_cocycle,
    load_frobenius,
    load_group,
    load_modular,
    load_projrep,
    make_group,
    make_group_algebra,
    mapping_cylinder,
    modular_defect,
    multiply_cocycles,
    parse_word,
    pi0,
    reduce_boundary,
    scalar,
    serialize_word,
    set_conductor_cap,
    to_fixed_point,
    transmission,
    twisted_regular_rep,
    two_group_anomaly,
    verify_anomaly,
    verify_anomalous_theory,
    verify_cocycle,
    verify_crossed_module,
    verify_fixed_point,
    verify_frobenius,
    verify_group,
    verify_modular,
    verify_projrep,
    verify_two_character,
)

__version__ = "0.1.0"
