"""Exact construction and verification of a 1280-word, distance-5 binary code
of length 19, and of the kissing configuration its sign vectors form."""

from ._core import (
    CODE_SIZE,
    GOLDEN_CHECKSUM,
    TOTAL_POINTS,
    build_code,
    emit_vectors,
    max_coclique_clebsch,
    min_distance,
    run_pipeline,
    table1,
    verify_configuration,
    word_add,
    word_info,
)

__all__ = [
    "CODE_SIZE",
    "GOLDEN_CHECKSUM",
    "TOTAL_POINTS",
    "build_code",
    "emit_vectors",
    "max_coclique_clebsch",
    "min_distance",
    "run_pipeline",
    "table1",
    "verify_all",
    "verify_configuration",
    "word_add",
    "word_info",
]


def verify_all(threads: int = 1, base_points_file: str | None = None) -> bool:
    """Run the full pipeline and return True when every certificate passes."""
    return run_pipeline(threads=threads, base_points_file=base_points_file)["all_pass"]
