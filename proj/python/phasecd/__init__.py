from ._phasecd import (
    PhaseSequence,
    autocorrelation,
    design,
    generate,
    isl,
    isl_db,
    load_sequence,
    objective,
    pareto,
    psl,
    psl_db,
    save_sequence,
    sequence_from_json,
    sequence_to_json,
    __version__,
)

__all__ = [
    "PhaseSequence",
    "autocorrelation",
    "design",
    "generate",
    "isl",
    "isl_db",
    "load_sequence",
    "objective",
    "pareto",
    "psl",
    "psl_db",
    "save_sequence",
    "sequence_from_json",
    "sequence_to_json",
    "__version__",
]
