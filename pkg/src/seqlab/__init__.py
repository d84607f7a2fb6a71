"""Executable companion to OEIS A000975 (1, 2, 5, 10, 21, 42, 85, ...).

The sequence is evaluated five ways, linked to triangular numbers and
binary palindromes, to the zero runs of A265158, to the Chinese Rings
puzzle and the Gray code, and to affinity partitions and 2-colored
bubbles. ``seqlab verify all`` replays every claim over a finite range.
"""

from .seq_core import (
    METHODS,
    SeqId,
    a_of,
    b_table,
    bit_length,
    catalan,
    palindrome_p,
    palindrome_p_div3,
    reverse_bits,
    s_count,
    seq_b,
    triangular,
)
from .words import BitWord, b_is_zero, enum_catalan, is_catalan, run_start_indices
from .runs import Run, RecordTable, extract_runs, record_run_number, records, run_length_seq
from .puzzles import gray_code, gray_index, legal_moves, ring_distance, ring_path
from .colorings import (
    AffinityPartition,
    Bubble,
    bubble_to_partition,
    enum_bubbles,
    enum_partitions,
    partition_to_bubble,
    verify_bijection,
)
from .report import Report

__version__ = "0.1.0"
