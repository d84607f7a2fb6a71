"""Exact evaluators for A000975 and its companion sequences.

Everything here works on Python ints, so values are exact at any size.
The one exception is :func:`b_table`, a numpy fast path for bulk scans of
B whose entries never exceed their index and therefore fit in int64.
"""

from __future__ import annotations

from enum import Enum
from math import comb

import numpy as np

from .errors import DomainError, require_nonnegative, require_positive
from .words import BitWord

METHODS = ("rec", "binary", "complement", "gap", "closed")


class SeqId(str, Enum):
    """Names of the sequences the CLI can print, with their first index."""

    A = "A"
    T = "T"
    P = "P"
    P_div3 = "P_div3"
    Rev = "Rev"
    B = "B"
    C = "C"
    S = "S"
    RunLen = "RunLen"
    RunStart = "RunStart"
    RecordRunNo = "RecordRunNo"

    @property
    def offset(self) -> int:
        return 0 if self in (SeqId.C, SeqId.RecordRunNo) else 1


# -- A(n) ---------------------------------------------------------------------

def _a_rec(n: int) -> int:
    # double, or double and add one, according to parity of the index
    a = 1
    for i in range(2, n + 1):
        a = 2 * a + (i & 1)
    return a


def _a_binary(n: int) -> int:
    return alternating_word(n).to_int()


def _a_complement(n: int) -> int:
    a = 1
    for i in range(2, n + 1):
        a = ((1 << i) - 1) - a
    return a


def _a_gap(n: int) -> int:
    prev, cur = 1, 2  # A(1), A(2)
    if n == 1:
        return prev
    for i in range(3, n + 1):
        prev, cur = cur, prev + (1 << (i - 1))
    return cur


def _a_closed(n: int) -> int:
    sign = 1 if n % 2 == 0 else -1
    num = (1 << (n + 2)) - 3 - sign
    q, r = divmod(num, 6)
    assert r == 0, (n, r)
    return q


def _a_parity_split(n: int) -> int:
    num = (1 << (n + 1)) - (1 if n % 2 else 2)
    q, r = divmod(num, 3)
    assert r == 0, (n, r)
    return q


def _a_two_thirds_floor(n: int) -> int:
    return (2 << n) // 3


_A_METHODS = {
    "rec": _a_rec,
    "binary": _a_binary,
    "complement": _a_complement,
    "gap": _a_gap,
    "closed": _a_closed,
}

# not exposed through ``a_of``; used as extra cross-checks
INTERNAL_A_FORMS = {
    "parity_split": _a_parity_split,
    "two_thirds_floor": _a_two_thirds_floor,
}


def alternating_word(n: int) -> BitWord:
    """The length-``n`` word ``1010...``."""
    require_positive(n)
    return BitWord(("10" * ((n + 1) // 2))[:n])


def a_of(n: int, method: str = "rec") -> int:
    """A(n), the n-th term of A000975 (1, 2, 5, 10, 21, ...).

    ``method`` selects one of five independent evaluators; all of them
    return the same value.
    """
    require_positive(n)
    try:
        fn = _A_METHODS[method]
    except KeyError:
        raise DomainError(f"unknown method {method!r}; choose from {METHODS}") from None
    return fn(n)


# -- triangular numbers and palindromes ------------------------------------------

def triangular(n: int) -> int:
    require_positive(n)
    return n * (n + 1) // 2


def bit_length(n: int) -> int:
    require_positive(n)
    return n.bit_length()


def reverse_bits(n: int) -> int:
    """Read the binary digits of ``n`` backwards (A030101)."""
    require_positive(n)
    out = 0
    while n:
        out = (out << 1) | (n & 1)
        n >>= 1
    return out


def palindrome_p(n: int) -> int:
    """Even-length binary palindrome: ``n`` followed by its reversal (A048701)."""
    return (n << bit_length(n)) + reverse_bits(n)


def palindrome_p_div3(n: int) -> int:
    q, r = divmod(palindrome_p(n), 3)
    if r:
        raise ArithmeticError(f"P({n}) is not divisible by 3")
    return q


# -- B(n) = A265158 -----------------------------------------------------------------

def _b_rec(n: int) -> int:
    # unwind n -> n // 2 down to 1, then apply the recurrence on the way back
    parities = []
    while n > 1:
        parities.append(n & 1)
        n >>= 1
    value = 1
    for odd in reversed(parities):
        value = value // 2 if odd else 2 * value
    return value


def _b_scan(n: int) -> int:
    bits = format(n, "b")
    value = 1
    for c in bits[1:]:
        if c == "0":
            value *= 2
        elif value == 1:
            value = 0
        else:
            value //= 2
    return value


def seq_b(n: int, method: str = "rec") -> int:
    """B(n): B(1) = 1, B(2n) = 2B(n), B(2n+1) = floor(B(n)/2).

    ``method="scan"`` reads the bits of ``n`` left to right instead of
    following the recursion.
    """
    require_positive(n)
    if method == "rec":
        return _b_rec(n)
    if method == "scan":
        return _b_scan(n)
    raise DomainError(f"unknown method {method!r}; choose 'rec' or 'scan'")


def b_table(max_bits: int) -> np.ndarray:
    """Array ``t`` with ``t[n] == B(n)`` for ``1 <= n <= 2**max_bits``.

    ``t[0]`` is a -1 placeholder.
    """
    require_nonnegative(max_bits, "max_bits")
    if max_bits > 40:
        raise DomainError("b_table is limited to max_bits <= 40")
    top = 1 << max_bits
    t = np.empty(top + 1, dtype=np.int64)
    t[0] = -1
    t[1] = 1
    for k in range(1, max_bits):
        parent = t[1 << (k - 1):1 << k]
        lo, hi = 1 << k, 1 << (k + 1)
        t[lo:hi:2] = 2 * parent
        t[lo + 1:hi:2] = parent // 2
    if max_bits:
        t[top] = 2 * t[top >> 1]
    return t


# -- Catalan numbers and the string count S(n) ------------------------------------------

def catalan(n: int) -> int:
    require_nonnegative(n)
    return comb(2 * n, n) // (n + 1)


def s_count(n: int) -> int:
    """Strings of length n over {b, u} whose number of b's is 2n+1 mod 3."""
    require_positive(n)
    residue = (2 * n + 1) % 3
    return sum(comb(n, k) for k in range(residue, n + 1, 3))
