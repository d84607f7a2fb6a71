"""Runs of zeros in B, the run-length sequence R (A264784) and its records."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, List, Optional, Tuple

import numpy as np

from . import seq_core
from .errors import DomainError, RangeError, require_positive
from .report import Report


@dataclass(frozen=True)
class Run:
    start: int
    length: int
    ordinal: int

    @property
    def end(self) -> int:
        """Index of the last zero in the run."""
        return self.start + self.length - 1


@dataclass(frozen=True)
class RecordTable:
    records: Tuple[Tuple[int, Run], ...]

    def __iter__(self) -> Iterator[Tuple[int, Run]]:
        return iter(self.records)

    def __len__(self) -> int:
        return len(self.records)

    def __getitem__(self, rank: int) -> Run:
        """Run holding record ``rank`` (1-based)."""
        if not 1 <= rank <= len(self.records):
            raise RangeError(f"record rank {rank} not observed; have {len(self.records)}")
        return self.records[rank - 1][1]


def _check_bits(max_bits: int) -> None:
    require_positive(max_bits, "max_bits")
    if max_bits < 2:
        raise DomainError(f"max_bits must be >= 2, got {max_bits}")


def runs_in_table(b: np.ndarray) -> List[Run]:
    """Maximal zero runs of a B table (``b[n] == B(n)``, index 0 ignored).

    A run is reported only if the entry right after it is present in the
    table and nonzero; a run reaching the last index may be cut short and
    is dropped.
    """
    zero = np.zeros(len(b) + 1, dtype=np.int8)
    zero[1:len(b)] = b[1:] == 0
    edges = np.diff(zero)
    starts = np.flatnonzero(edges == 1) + 1
    stops = np.flatnonzero(edges == -1) + 1  # first nonzero index after each run
    runs = []
    for s, e in zip(starts.tolist(), stops.tolist()):
        if e >= len(b):
            break
        runs.append(Run(start=s, length=e - s, ordinal=len(runs) + 1))
    return runs


def extract_runs(max_bits: int, b: Optional[np.ndarray] = None) -> List[Run]:
    """All complete zero runs of B lying below ``2**max_bits``."""
    _check_bits(max_bits)
    if b is None:
        b = seq_core.b_table(max_bits)
    return runs_in_table(b)


def run_length_seq(i: int, max_bits: int) -> int:
    """R(i), the length of the i-th zero run of B."""
    require_positive(i, "i")
    runs = extract_runs(max_bits)
    if i > len(runs):
        raise RangeError(f"only {len(runs)} runs below 2**{max_bits}; enlarge max_bits")
    return runs[i - 1].length


def record_runs(runs: List[Run]) -> RecordTable:
    """Runs strictly longer than every earlier run; the first run counts."""
    best = 0
    out = []
    for run in runs:
        if run.length > best:
            best = run.length
            out.append((len(out) + 1, run))
    return RecordTable(tuple(out))


def records(max_bits: int) -> RecordTable:
    return record_runs(extract_runs(max_bits))


def record_run_number(r: int) -> int:
    """Ordinal of the r-th record run, from partial sums of Catalan numbers.

    Odd ``r = 2j+1`` gives ``2*(C(0)+...+C(j-1)) + C(j)``, even ``r = 2j+2``
    gives ``2*(C(0)+...+C(j))``. This is A155051(r-1).
    """
    require_positive(r, "r")
    j, odd = divmod(r - 1, 2)
    full = 2 * sum(seq_core.catalan(i) for i in range(j))
    return full + (2 if odd else 1) * seq_core.catalan(j)


def verify_theorem_4_4(max_k: int, b: Optional[np.ndarray] = None) -> Report:
    """Zero runs on [A(k)+1, 2^k-1] for 2 <= k <= max_k, and nothing else is a record.

    ``b`` overrides the B table (used for fault injection).
    """
    require_positive(max_k, "max_k")
    if max_k < 2:
        raise DomainError(f"max_k must be >= 2, got {max_k}")
    rep = Report("theorem-4-4", f"2 <= k <= {max_k}")
    with rep.timed():
        if b is None:
            b = seq_core.b_table(max_k)
        expected_records = []
        for k in range(2, max_k + 1):
            ak = seq_core.a_of(k)
            lo, hi = ak + 1, (1 << k) - 1
            span = b[lo:hi + 1]
            nz = np.flatnonzero(span != 0)
            if nz.size:
                n = lo + int(nz[0])
                rep.fail(f"B({n}) with k={k}", 0, int(b[n]))
            rep.check(b[ak] != 0, f"B(A({k}))=B({ak})", "nonzero", int(b[ak]))
            rep.check(b[1 << k] == 1 << k, f"B(2^{k})", 1 << k, int(b[1 << k]))
            rep.check(hi - ak == seq_core.a_of(k - 1), f"length of run at k={k}",
                      seq_core.a_of(k - 1), hi - ak)
            expected_records.append((lo, seq_core.a_of(k - 1)))
        found = [(run.start, run.length) for _, run in record_runs(runs_in_table(b))]
        if found != expected_records:
            for i in range(max(len(found), len(expected_records))):
                want = expected_records[i] if i < len(expected_records) else None
                got = found[i] if i < len(found) else None
                rep.check(want == got, f"record rank {i + 1} (start, length)", want, got)
    return rep


_ORDINAL_NOTE = (
    "A155051(7) = 18 = 2*(C(0)+C(1)+C(2)+C(3)); "
    "the summand set {2C(0), 2C(1), 2C(3), 2C(4)} would give 40"
)


def verify_theorem_4_8(max_rank: int, max_bits: int) -> Report:
    """R(record_run_number(n)) = A(n) for n <= max_rank, checked against a scan."""
    require_positive(max_rank, "max_rank")
    _check_bits(max_bits)
    rep = Report("theorem-4-8", f"1 <= n <= {max_rank}, runs below 2^{max_bits}")
    with rep.timed():
        runs = extract_runs(max_bits)
        table = record_runs(runs)
        if max_rank > len(table):
            raise RangeError(
                f"only {len(table)} record runs below 2**{max_bits}; enlarge max_bits"
            )
        for n in range(1, max_rank + 1):
            ordinal = record_run_number(n)
            observed = table[n].ordinal
            rep.check(ordinal == observed, f"ordinal of record {n}", observed, ordinal)
            if ordinal > len(runs):
                rep.fail(f"R({ordinal})", seq_core.a_of(n), "beyond scan")
                continue
            length = runs[ordinal - 1].length
            rep.check(length == seq_core.a_of(n), f"R(A155051({n - 1}))", seq_core.a_of(n), length)
            rep.check(table[n].length == seq_core.a_of(n), f"record {n} length",
                      seq_core.a_of(n), table[n].length)
        if max_rank >= 8:
            rep.notes.append(_ORDINAL_NOTE)
    return rep
