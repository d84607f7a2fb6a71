from itertools import product

import pytest

from seqlab.colorings import (
    AffinityPartition,
    Bubble,
    bubble_to_partition,
    enum_bubbles,
    enum_partitions,
    is_admissible,
    linear_ab_strings,
    partition_to_bubble,
    verify_bijection,
)
from seqlab.errors import DomainError, InversionError
from seqlab.seq_core import a_of, s_count


def _brute_partitions(m):
    out = []
    for tail in product("ABC", repeat=m - 2):
        s = "AB" + "".join(tail)
        if set(s) == set("ABC") and all(s[i] != s[i - 1] for i in range(m)):
            out.append(s)
    return out


class TestPartitions:
    def test_six_people(self):
        assert len(enum_partitions(6)) == 10

    def test_three_people(self):
        assert [p.seats for p in enum_partitions(3)] == ["ABC"]

    def test_fourteen_people(self):
        assert len(enum_partitions(14)) == a_of(12) == 2730

    @pytest.mark.parametrize("m", range(3, 11))
    def test_against_brute_force(self, m):
        assert [p.seats for p in enum_partitions(m)] == _brute_partitions(m)

    @pytest.mark.parametrize("m", range(3, 15))
    def test_counts(self, m):
        assert len(enum_partitions(m)) == a_of(m - 2)

    @pytest.mark.parametrize("bad", ["ABAB", "AB", "BAC", "ABCA", "ABBC", "ABX"])
    def test_invalid(self, bad):
        with pytest.raises(DomainError):
            AffinityPartition(bad)


class TestBubbles:
    @pytest.mark.parametrize("arity, count", [(2, 1), (3, 2), (4, 5), (5, 10)])
    def test_small_counts(self, arity, count):
        assert len(enum_bubbles(arity)) == count

    @pytest.mark.parametrize("n", range(2, 17))
    def test_counts(self, n):
        based, unbased = enum_bubbles(n, True), enum_bubbles(n, False)
        assert len(based) == len(unbased) == a_of(n - 1)
        assert len(based) == s_count(n) - (n % 2)

    def test_conditions_by_hand(self):
        assert is_admissible("bb")
        assert not is_admissible("ub")
        assert is_admissible("buu") and is_admissible("uub")
        assert not is_admissible("ubu")  # right count, but alternates
        assert is_admissible("uu", based=False)

    def test_swap_colors(self):
        for n in range(2, 10):
            swapped = {b.border.translate(str.maketrans("bu", "ub")) for b in enum_bubbles(n, True)}
            assert swapped == {b.border for b in enum_bubbles(n, False)}

    def test_encoding(self):
        b = Bubble(True, "bub")
        assert str(b) == "b:bub"
        assert Bubble.parse("u:uu") == Bubble(False, "uu")
        with pytest.raises(DomainError):
            Bubble.parse("x:bb")
        with pytest.raises(DomainError):
            Bubble(True, "b")


class TestCorrespondence:
    def test_abcabc(self):
        b = partition_to_bubble(AffinityPartition("ABCABC"))
        assert b == Bubble(True, "bbbbb")
        assert is_admissible(b.border)

    def test_abc(self):
        assert partition_to_bubble(AffinityPartition("ABC")) == Bubble(True, "bb")
        assert bubble_to_partition(Bubble(True, "bb")).seats == "ABC"

    def test_six_people_bijective(self):
        images = {partition_to_bubble(p) for p in enum_partitions(6)}
        assert images == set(enum_bubbles(5))
        assert {bubble_to_partition(b) for b in enum_bubbles(5)} == set(enum_partitions(6))

    @pytest.mark.parametrize("m", range(3, 13))
    def test_round_trips(self, m):
        for p in enum_partitions(m):
            b = partition_to_bubble(p)
            assert is_admissible(b.border)
            assert bubble_to_partition(b) == p

    def test_inversion_rejects_inadmissible(self):
        with pytest.raises(InversionError):
            bubble_to_partition(Bubble(True, "ubu"))  # ABAB..A, no C
        with pytest.raises(InversionError):
            bubble_to_partition(Bubble(True, "bu"))  # does not close
        with pytest.raises(InversionError):
            bubble_to_partition(Bubble(False, "uu"))

    def test_inversion_never_fails_on_valid_bubbles(self):
        for n in range(2, 14):
            for b in enum_bubbles(n):
                bubble_to_partition(b)

    def test_verify_bijection(self):
        assert verify_bijection(6).status == "pass"
        assert verify_bijection(12).status == "pass"


@pytest.mark.parametrize("n", range(1, 11))
def test_lossers_split(n):
    strings = linear_ab_strings(n + 2)
    assert len(strings) == 2**n - 1
    wrapped = [s for s in strings if s[-1] != "A"]
    shortened = {s[:-1] for s in strings if s[-1] == "A"}
    assert len(wrapped) == a_of(n)
    assert {p.seats for p in enum_partitions(n + 2)} == set(wrapped)
    if n >= 2:
        assert shortened == {p.seats for p in enum_partitions(n + 1)}
    else:
        assert not shortened
