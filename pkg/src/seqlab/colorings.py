"""Affinity partitions around a circular table and 2-colored bubbles.

Partitions are strings over ``ABC``; seat 0 is ``A`` and seat 1 is ``B``.
Bubbles are a base color plus a border word over ``b`` (blue) and ``u``
(uncolored). A partition becomes a bubble by walking the seats in index
order and coloring each edge blue when the letter steps forward in the
cycle A -> B -> C -> A, uncolored when it steps backward.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import List

from . import seq_core
from .errors import DomainError, InversionError
from .report import Report

LETTERS = "ABC"
BLUE, PLAIN = "b", "u"


@dataclass(frozen=True, order=True)
class AffinityPartition:
    seats: str

    def __post_init__(self):
        s = self.seats
        if len(s) < 3 or s.strip(LETTERS):
            raise DomainError(f"not a seating over ABC of size >= 3: {s!r}")
        if s[:2] != "AB":
            raise DomainError(f"seats 0 and 1 must be A and B: {s!r}")
        if any(s[i] == s[(i + 1) % len(s)] for i in range(len(s))):
            raise DomainError(f"neighbours share a group: {s!r}")
        if set(s) != set(LETTERS):
            raise DomainError(f"some group is empty: {s!r}")

    @property
    def m(self) -> int:
        return len(self.seats)

    def __str__(self) -> str:
        return self.seats


@dataclass(frozen=True, order=True)
class Bubble:
    based: bool
    border: str

    def __post_init__(self):
        if len(self.border) < 2 or self.border.strip(BLUE + PLAIN):
            raise DomainError(f"border must be >= 2 letters over b/u: {self.border!r}")

    @property
    def arity(self) -> int:
        return len(self.border)

    def __str__(self) -> str:
        return f"{BLUE if self.based else PLAIN}:{self.border}"

    @classmethod
    def parse(cls, text: str) -> "Bubble":
        base, sep, border = text.partition(":")
        if not sep or base not in (BLUE, PLAIN):
            raise DomainError(f"bad bubble encoding {text!r}")
        return cls(base == BLUE, border)


def is_admissible(border: str, based: bool = True) -> bool:
    """Membership test for the bubbles counted by A(arity - 1).

    For based bubbles the number of blue border edges must be congruent to
    2*arity + 1 mod 3, and two neighbouring border edges must share a color.
    Unbased bubbles swap the roles of the two colors.
    """
    n = len(border)
    counted = border.count(BLUE if based else PLAIN)
    if counted % 3 != (2 * n + 1) % 3:
        return False
    return any(border[i] == border[i + 1] for i in range(n - 1))


def enum_bubbles(arity: int, based: bool = True) -> List[Bubble]:
    """Admissible bubbles of the given arity, borders in lexicographic order."""
    if arity < 2:
        raise DomainError(f"arity must be >= 2, got {arity}")
    return [
        Bubble(based, "".join(w))
        for w in product(BLUE + PLAIN, repeat=arity)
        if is_admissible("".join(w), based)
    ]


def enum_partitions(people: int) -> List[AffinityPartition]:
    """All affinity partitions of ``people`` seats, lexicographically."""
    if people < 3:
        raise DomainError(f"need at least 3 people, got {people}")
    out = []

    def extend(prefix: str) -> None:
        if len(prefix) == people:
            if prefix[-1] != "A" and "C" in prefix:
                out.append(AffinityPartition(prefix))
            return
        for c in LETTERS:
            if c != prefix[-1]:
                extend(prefix + c)

    extend("AB")
    return out


def _step(x: str, y: str) -> str:
    d = (LETTERS.index(y) - LETTERS.index(x)) % 3
    if d == 0:
        raise DomainError(f"equal neighbours {x}{y}")
    return BLUE if d == 1 else PLAIN


def partition_to_bubble(p: AffinityPartition) -> Bubble:
    if not isinstance(p, AffinityPartition):
        p = AffinityPartition(str(p))
    s = p.seats
    m = len(s)
    if _step(s[0], s[1]) != BLUE:
        raise DomainError(f"base edge of {s!r} is not blue")
    border = "".join(_step(s[i], s[(i + 1) % m]) for i in range(1, m))
    return Bubble(True, border)


def bubble_to_partition(b: Bubble) -> AffinityPartition:
    """Walk the letter cycle: forward on blue edges, backward on uncolored ones."""
    if not b.based:
        raise InversionError(f"only based bubbles map to partitions: {b}")
    pos = 1  # seat 0 is A, the blue base steps to B
    seats = ["A", "B"]
    for c in b.border:
        pos = (pos + (1 if c == BLUE else -1)) % 3
        seats.append(LETTERS[pos])
    if seats.pop() != "A":
        raise InversionError(f"border of {b} does not close the cycle")
    try:
        return AffinityPartition("".join(seats))
    except DomainError as exc:
        raise InversionError(f"{b} does not give a partition: {exc}") from None


def linear_ab_strings(length: int) -> List[str]:
    """Strings over ABC starting ``AB``, no equal neighbours, all letters used."""
    if length < 3:
        raise DomainError(f"length must be >= 3, got {length}")
    out = []

    def extend(prefix: str) -> None:
        if len(prefix) == length:
            if "C" in prefix:
                out.append(prefix)
            return
        for c in LETTERS:
            if c != prefix[-1]:
                extend(prefix + c)

    extend("AB")
    return out


def verify_bijection(people_max: int) -> Report:
    """Partition -> bubble is a bijection onto based bubbles, for 3 <= m <= people_max."""
    if people_max < 3:
        raise DomainError(f"people_max must be >= 3, got {people_max}")
    rep = Report("bijection", f"3 <= people <= {people_max}")
    with rep.timed():
        for m in range(3, people_max + 1):
            parts = enum_partitions(m)
            images = [partition_to_bubble(p) for p in parts]
            bubbles = enum_bubbles(m - 1, based=True)
            want = seq_core.a_of(m - 2)
            rep.check(len(parts) == want, f"#partitions({m})", want, len(parts))
            rep.check(len(bubbles) == want, f"#based bubbles({m - 1})", want, len(bubbles))
            rep.check(len(set(images)) == len(images), f"injective at m={m}",
                      len(images), len(set(images)))
            rep.check(set(images) == set(bubbles), f"image at m={m}",
                      len(bubbles), len(set(images) & set(bubbles)))
            for p, b in zip(parts, images):
                if not rep.check(is_admissible(b.border), f"{p} -> {b}", "admissible", False):
                    continue
                try:
                    back = bubble_to_partition(b)
                except InversionError as exc:
                    rep.fail(f"invert {b}", str(p), str(exc))
                    continue
                rep.check(back == p, f"round trip {p}", str(p), str(back))
            for b in bubbles:
                try:
                    p = bubble_to_partition(b)
                except InversionError as exc:
                    rep.fail(f"invert {b}", "partition", str(exc))
                    continue
                rep.check(partition_to_bubble(p) == b, f"round trip {b}", str(b),
                          str(partition_to_bubble(p)))
    return rep
