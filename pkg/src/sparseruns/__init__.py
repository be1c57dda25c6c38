"""Runs (maximal repetitions) over a general ordered alphabet.

The package computes all runs of a string whose symbols admit only order
comparisons, using a difference-cover-sampled sparse LCE index, and ships
brute-force oracles plus comparison-count instrumentation for verification.
"""

from .difference_cover import (DifferenceCover, build_difference_cover,
                               is_difference_cover)
from .oracles import lce_matrix, naive_lce, naive_runs, naive_sparse_sort
from .runs import (LceOracle, Run, compare_suffixes, compute_runs,
                   next_smaller_suffix, run_stats)
from .sparse_lce import (SampleSet, SparseLceIndex, build_index, choose_tau)
from .symbols import (ComparisonCounter, Text, byte_compare,
                      opaque_text_from_bytes, text_from_bytes)

__all__ = [
    "ComparisonCounter", "DifferenceCover", "LceOracle", "Run", "SampleSet",
    "SparseLceIndex", "Text", "build_difference_cover", "build_index",
    "byte_compare", "choose_tau", "compare_suffixes", "compute_runs",
    "is_difference_cover", "lce_matrix", "naive_lce", "naive_runs",
    "naive_sparse_sort", "next_smaller_suffix", "opaque_text_from_bytes",
    "run_stats", "text_from_bytes",
]
