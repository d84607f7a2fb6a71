from itertools import product

import pytest
from hypothesis import given, strategies as st

from seqlab.errors import DomainError
from seqlab.seq_core import b_table, catalan, seq_b
from seqlab.words import BitWord, b_is_zero, enum_catalan, is_catalan, run_start_indices


class TestBitWord:
    def test_leading_zeros_kept(self):
        assert BitWord("0011") != BitWord("11")
        assert len(BitWord("0011")) == 4

    def test_empty_word(self):
        assert len(BitWord()) == 0
        with pytest.raises(DomainError):
            BitWord().to_int()

    def test_rejects_non_binary(self):
        with pytest.raises(DomainError):
            BitWord("012")

    def test_to_int_rejects_leading_zero(self):
        with pytest.raises(DomainError):
            BitWord("01").to_int()
        assert BitWord("0").to_int() == 0

    def test_padding(self):
        assert BitWord.from_int(5, 6).bits == "000101"
        with pytest.raises(DomainError):
            BitWord.from_int(5, 2)

    @given(st.integers(min_value=0, max_value=2**100))
    def test_round_trip(self, n):
        assert BitWord.from_int(n).to_int() == n


@pytest.mark.parametrize("w, expected", [("0101", True), ("", True), ("10", False),
                                         ("0011", True), ("0110", False), ("000", False)])
def test_is_catalan(w, expected):
    assert is_catalan(w) is expected
    assert is_catalan(BitWord(w)) is expected


def test_enum_catalan_small():
    assert [w.bits for w in enum_catalan(0)] == [""]
    assert [w.bits for w in enum_catalan(2)] == ["01"]
    assert [w.bits for w in enum_catalan(4)] == ["0011", "0101"]
    assert [w.bits for w in enum_catalan(6)] == ["000111", "001011", "001101", "010011", "010101"]


def test_enum_catalan_odd_length():
    with pytest.raises(DomainError):
        enum_catalan(5)


@pytest.mark.parametrize("m", range(0, 11))
def test_enum_catalan_counts_and_order(m):
    ws = enum_catalan(2 * m)
    assert len(ws) == catalan(m)
    assert all(is_catalan(w) for w in ws)
    assert all(a < b for a, b in zip(ws, ws[1:]))


def test_enum_catalan_against_brute_force():
    for m in range(0, 7):
        brute = ["".join(w) for w in product("01", repeat=2 * m) if is_catalan("".join(w))]
        assert [w.bits for w in enum_catalan(2 * m)] == brute


@pytest.mark.parametrize("n, expected", [(22, True), (18, False)])
def test_b_is_zero_examples(n, expected):
    assert b_is_zero(n) is expected


def test_b_is_zero_powers_of_two():
    assert not any(b_is_zero(2**k) for k in range(21))


@given(st.integers(min_value=1, max_value=2**200))
def test_b_is_zero_matches_seq_b(n):
    assert b_is_zero(n) == (seq_b(n) == 0)


def test_b_is_zero_exhaustive_to_2_pow_20():
    zero = (b_table(20) == 0).tolist()
    assert all(b_is_zero(n) == zero[n] for n in range(1, 2**20 + 1))


def test_run_starts_first_values():
    assert run_start_indices(7) == [3, 6, 11, 22, 39, 43, 78, 86]


def test_run_starts_equal_scan():
    for bits in (2, 5, 12, 20):
        t = b_table(bits).tolist()
        scanned = [n for n in range(2, 2**bits) if t[n] == 0 and t[n - 1] != 0]
        assert run_start_indices(bits) == scanned


def test_run_starts_per_even_bit_length():
    starts = run_start_indices(20)
    for k in range(1, 11):
        count = sum(1 for n in starts if n.bit_length() == 2 * k)
        assert count == catalan(k - 1)


def test_run_starts_domain():
    with pytest.raises(DomainError):
        run_start_indices(1)
