"""Frequentist evidence theory: belief functions estimated from measured
populations, Dempster combination and labeling processes.

Rationals cross the boundary as :class:`fractions.Fraction`. Library errors
raise :class:`EvidenceError` with ``args == (message, code)``.
"""

from ._evidence import (
    EvidenceError,
    Frame,
    FrameSubset,
    MassFunction,
    PopulationRecord,
    Population,
    LabelingProcessSpec,
    VerificationReport,
    belief,
    plausibility,
    belief_table,
    mass_from_belief,
    dempster_combine,
    measure,
    measure_labeled,
    effective_response,
    expr_holds,
    estimate_mass,
    estimate_belief_direct,
    estimate_plausibility_direct,
    validate_axioms,
    synthesize_population,
    simple_relabel,
    general_relabel,
    expected_class_weights,
    coot_frame,
    coot_label,
    coot_fixture,
    coot_standin,
    verify_coot_table,
    verify_mte_axioms,
    verify_simple_relabel,
    verify_general_relabel,
    mass_to_json,
    mass_from_json,
    population_to_csv,
    population_from_csv,
)

__all__ = [name for name in dir() if not name.startswith("_")]
