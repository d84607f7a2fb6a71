"""Term lookup by sequence name, used by the CLI and b-file I/O."""

from __future__ import annotations

from typing import Iterator, List, Optional, Tuple, Union

from . import runs, seq_core, words
from .errors import DomainError, RangeError
from .seq_core import SeqId

# largest scan used to reach far terms of RunLen / RunStart
MAX_SCAN_BITS = 26


def as_seq_id(name: Union[str, SeqId]) -> SeqId:
    try:
        return SeqId(name)
    except ValueError:
        names = ", ".join(s.value for s in SeqId)
        raise DomainError(f"unknown sequence {name!r}; known: {names}") from None


def _scalar(seq: SeqId, method: Optional[str]):
    if seq is SeqId.A:
        return lambda n: seq_core.a_of(n, method or "rec")
    if seq is SeqId.B:
        return lambda n: seq_core.seq_b(n, method or "rec")
    if method is not None:
        raise DomainError(f"sequence {seq.value} takes no method")
    return {
        SeqId.T: seq_core.triangular,
        SeqId.P: seq_core.palindrome_p,
        SeqId.P_div3: seq_core.palindrome_p_div3,
        SeqId.Rev: seq_core.reverse_bits,
        SeqId.C: seq_core.catalan,
        SeqId.S: seq_core.s_count,
        SeqId.RecordRunNo: lambda i: runs.record_run_number(i + 1),
    }.get(seq)


def _run_lengths(count: int) -> List[int]:
    for bits in range(4, MAX_SCAN_BITS + 1):
        found = runs.extract_runs(bits)
        if len(found) >= count:
            return [r.length for r in found]
    raise RangeError(f"fewer than {count} runs below 2**{MAX_SCAN_BITS}")


def _run_starts(count: int) -> List[int]:
    bits = 2
    while True:
        found = words.run_start_indices(bits)
        if len(found) >= count:
            return found
        if bits >= 2 * MAX_SCAN_BITS:
            raise RangeError(f"fewer than {count} run starts below 2**{bits}")
        bits += 1


def terms(seq: Union[str, SeqId], first: int, last: int,
          method: Optional[str] = None) -> Iterator[Tuple[int, int]]:
    """Yield ``(index, value)`` for ``first <= index <= last``."""
    seq = as_seq_id(seq)
    if first < seq.offset:
        raise DomainError(f"{seq.value} starts at index {seq.offset}, not {first}")
    if last < first:
        raise DomainError(f"empty range {first}..{last}")
    fn = _scalar(seq, method)
    if fn is not None:
        for i in range(first, last + 1):
            yield i, fn(i)
        return
    if method is not None:
        raise DomainError(f"sequence {seq.value} takes no method")
    values = _run_lengths(last) if seq is SeqId.RunLen else _run_starts(last)
    for i in range(first, last + 1):
        yield i, values[i - 1]
