"""Pattern statistics in compositions and words."""

from ._core import (
    PATTERNS,
    __version__,
    avoiders,
    brute_force,
    brute_force_words,
    count_occurrences,
    emit_curve,
    estimate,
    eval_f,
    expand,
    run_cli,
    winding_number,
    words,
)

__all__ = [
    "PATTERNS",
    "__version__",
    "avoiders",
    "brute_force",
    "brute_force_words",
    "count_occurrences",
    "emit_curve",
    "estimate",
    "eval_f",
    "expand",
    "run_cli",
    "winding_number",
    "words",
]
