"""Minimal invariable generating sets of symmetric groups.

Partitions are passed and returned in the text format `7,5,1^3`.
"""

from ._migs import (
    bound_report,
    build_x_family,
    corollary_inequality,
    cycle_types_meeting_at_least,
    find_mig_set_of_size,
    is_mig_set,
    lemma_partition,
    max_family,
    parity,
    partial_sums,
    run_acceptance,
    upper_bound,
    verify_family,
)

__all__ = [
    "bound_report",
    "build_x_family",
    "corollary_inequality",
    "cycle_types_meeting_at_least",
    "find_mig_set_of_size",
    "is_mig_set",
    "lemma_partition",
    "max_family",
    "parity",
    "partial_sums",
    "run_acceptance",
    "upper_bound",
    "verify_family",
]
