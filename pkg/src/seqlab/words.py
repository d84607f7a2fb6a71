"""Words over {0, 1}: Catalan words, the zero test for B, run-start indices."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, List, Union

from .errors import DomainError, require_nonnegative, require_positive


@dataclass(frozen=True, order=True)
class BitWord:
    """A finite word over ``{0, 1}``.

    Unlike an integer, a word keeps its leading zeros: ``BitWord("0011")``
    and ``BitWord("11")`` are different words. The empty word is allowed.
    Ordering is lexicographic with ``0 < 1``.
    """

    bits: str = ""

    def __post_init__(self):
        if not isinstance(self.bits, str):
            raise TypeError(f"bits must be a str, got {type(self.bits).__name__}")
        if self.bits.strip("01"):
            raise DomainError(f"not a binary word: {self.bits!r}")

    @classmethod
    def from_int(cls, n: int, length: int | None = None) -> "BitWord":
        """Binary form of ``n``; with ``length``, left-padded with zeros."""
        require_nonnegative(n)
        bits = format(n, "b")
        if length is not None:
            if length < len(bits):
                raise DomainError(f"{n} needs {len(bits)} bits, not {length}")
            bits = bits.rjust(length, "0")
        return cls(bits)

    def to_int(self) -> int:
        if not self.bits:
            raise DomainError("the empty word has no numeric value")
        if len(self.bits) > 1 and self.bits[0] == "0":
            raise DomainError(f"ambiguous leading zero in {self.bits!r}")
        return int(self.bits, 2)

    def __len__(self) -> int:
        return len(self.bits)

    def __iter__(self) -> Iterator[int]:
        return (int(c) for c in self.bits)

    def __getitem__(self, i):
        if isinstance(i, slice):
            return BitWord(self.bits[i])
        return int(self.bits[i])

    def __add__(self, other: "BitWord") -> "BitWord":
        return BitWord(self.bits + _as_bits(other))

    def __str__(self) -> str:
        return self.bits

    def ones(self) -> int:
        return self.bits.count("1")

    def zeros(self) -> int:
        return self.bits.count("0")

    def reversed(self) -> "BitWord":
        return BitWord(self.bits[::-1])


def _as_bits(w: Union[BitWord, str]) -> str:
    if isinstance(w, BitWord):
        return w.bits
    return BitWord(w).bits


def is_catalan(w: Union[BitWord, str]) -> bool:
    """True iff ``w`` is balanced and no prefix has more ones than zeros."""
    depth = 0
    for c in _as_bits(w):
        depth += 1 if c == "0" else -1
        if depth < 0:
            return False
    return depth == 0


@lru_cache(maxsize=None)
def _catalan_strings(half: int) -> tuple:
    # lexicographic (0 < 1) generation; the cache holds immutable tuples only
    out = []

    def extend(prefix: str, zeros: int, ones: int) -> None:
        if zeros == ones == half:
            out.append(prefix)
            return
        if zeros < half:
            extend(prefix + "0", zeros + 1, ones)
        if ones < zeros:
            extend(prefix + "1", zeros, ones + 1)

    extend("", 0, 0)
    return tuple(out)


def enum_catalan(length: int) -> List[BitWord]:
    """All Catalan words of the given even length, lexicographically."""
    require_nonnegative(length, "length")
    if length % 2:
        raise DomainError(f"Catalan words have even length, got {length}")
    return [BitWord(s) for s in _catalan_strings(length // 2)]


def b_is_zero(n: int) -> bool:
    """Decide ``B(n) == 0`` from the bits of ``n`` alone.

    Reading the bits after the leading 1 from left to right, B(n) vanishes
    exactly when the ones seen so far at some point outnumber the zeros.
    """
    require_positive(n)
    balance = 0
    for c in format(n, "b")[1:]:
        balance += 1 if c == "1" else -1
        if balance > 0:
            return True
    return False


def run_start_indices(max_bits: int) -> List[int]:
    """Indices ``n < 2**max_bits`` at which a run of zeros of B begins.

    These are the numbers written ``1w1`` or ``1w10`` in binary with ``w`` a
    (possibly empty) Catalan word.
    """
    require_positive(max_bits, "max_bits")
    if max_bits < 2:
        raise DomainError(f"max_bits must be >= 2, got {max_bits}")
    starts = []
    for inner in range(0, max_bits - 1, 2):
        for w in _catalan_strings(inner // 2):
            if inner + 2 <= max_bits:
                starts.append(int("1" + w + "1", 2))
            if inner + 3 <= max_bits:
                starts.append(int("1" + w + "10", 2))
    starts.sort()
    return starts
