"""OEIS b-file reading and writing.

A b-file holds one ``index value`` pair per line, indices rising by one
from the sequence offset. Blank lines and lines starting with ``#`` are
comments.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, List, Optional, TextIO, Tuple, Union

from . import sequences
from .report import Report


class BFileError(ValueError):
    def __init__(self, line_no: int, message: str):
        super().__init__(f"line {line_no}: {message}")
        self.line_no = line_no


@dataclass
class BFile:
    offset: int
    entries: List[Tuple[int, int]] = field(default_factory=list)

    def __len__(self) -> int:
        return len(self.entries)


def format_lines(entries: Iterable[Tuple[int, int]]) -> str:
    return "".join(f"{i} {v}\n" for i, v in entries)


def write(entries: Iterable[Tuple[int, int]], fh: TextIO, comments: Iterable[str] = ()) -> None:
    for c in comments:
        fh.write(f"# {c}\n")
    fh.write(format_lines(entries))


def export(seq, offset: int, count: int, method: Optional[str] = None) -> BFile:
    if count < 1:
        raise ValueError(f"count must be >= 1, got {count}")
    return BFile(offset, list(sequences.terms(seq, offset, offset + count - 1, method)))


def parse(text: str, offset: Optional[int] = None) -> BFile:
    """Parse b-file text; ``offset`` defaults to the first index present."""
    entries = []
    expected = offset
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 2:
            raise BFileError(line_no, f"expected 'index value', got {raw!r}")
        try:
            index, value = int(parts[0]), int(parts[1])
        except ValueError:
            raise BFileError(line_no, f"non-integer field in {raw!r}") from None
        if expected is None:
            expected = index
        if index != expected:
            raise BFileError(line_no, f"index {index} out of sequence, expected {expected}")
        entries.append((index, value))
        expected += 1
    if not entries:
        raise BFileError(0, "no entries")
    return BFile(entries[0][0] if offset is None else offset, entries)


def read(source: Union[str, TextIO], offset: Optional[int] = None) -> BFile:
    if isinstance(source, str):
        with open(source, encoding="utf-8") as fh:
            return parse(fh.read(), offset)
    return parse(source.read(), offset)


def check(bf: BFile, seq, method: Optional[str] = None, cap: int = 10) -> Report:
    """Recompute every term of ``bf`` and report mismatches."""
    sid = sequences.as_seq_id(seq)
    first, last = bf.entries[0][0], bf.entries[-1][0]
    rep = Report(f"bfile:{sid.value}", f"{first} <= n <= {last}", cap=cap)
    with rep.timed():
        derived = dict(sequences.terms(sid, first, last, method))
        for index, value in bf.entries:
            rep.check(derived[index] == value, f"{sid.value}({index})", derived[index], value)
    return rep
