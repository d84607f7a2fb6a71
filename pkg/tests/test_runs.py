from pathlib import Path

import pytest

from seqlab import runs
from seqlab.errors import RangeError
from seqlab.runs import (
    extract_runs,
    record_run_number,
    records,
    run_length_seq,
    runs_in_table,
    verify_theorem_4_4,
    verify_theorem_4_8,
)
from seqlab.seq_core import a_of, b_table, catalan

GOLDEN = Path(__file__).parent / "golden"


def _scan_runs(bits):
    # plain loop over the table, no numpy edge detection
    t = b_table(bits).tolist()
    out, start = [], None
    for n in range(1, len(t)):
        if t[n] == 0 and start is None:
            start = n
        elif t[n] != 0 and start is not None:
            out.append((start, n - start))
            start = None
    return out


def test_first_run():
    r = extract_runs(4)[0]
    assert (r.start, r.length, r.ordinal) == (3, 1, 1)


def test_run_at_11():
    r = next(r for r in extract_runs(5) if r.start == 11)
    assert r.length == 5 and r.end == 15


def test_lengths_prefix():
    assert [r.length for r in extract_runs(12)[:8]] == [1, 2, 5, 10, 1, 21, 2, 42]


def test_lengths_match_listing():
    listing = [int(x) for x in (GOLDEN / "RunLen_prefix.txt").read_text().split()]
    assert [r.length for r in extract_runs(12)][: len(listing)] == listing


@pytest.mark.parametrize("bits", [2, 3, 8, 14])
def test_extract_runs_matches_loop(bits):
    got = extract_runs(bits)
    assert [(r.start, r.length) for r in got] == _scan_runs(bits)
    assert [r.ordinal for r in got] == list(range(1, len(got) + 1))


def test_run_invariants():
    t = b_table(16)
    for r in extract_runs(16):
        assert t[r.start - 1] != 0 and t[r.end + 1] != 0
        assert (t[r.start:r.end + 1] == 0).all()


def test_truncated_run_dropped():
    t = b_table(6)
    t[64] = 0  # the last run now reaches the end of the table
    assert runs_in_table(t) == extract_runs(6)[:-1]


@pytest.mark.parametrize("bits", range(2, 21))
def test_zero_and_nonzero_counts_add_up(bits):
    t = b_table(bits)
    zeros = sum(r.length for r in extract_runs(bits))
    nonzero = int((t[1:2**bits] != 0).sum())
    assert zeros + nonzero == 2**bits - 1


def test_runs_per_bit_length():
    all_runs = extract_runs(20)
    for k in range(1, 11):
        lo, hi = 2 ** (2 * k - 1), 2 ** (2 * k)
        inside = [r for r in all_runs if lo <= r.start and r.end < hi]
        assert len(inside) == catalan(k - 1)
        assert max(r.length for r in inside) == inside[-1].length == a_of(2 * k - 1)


@pytest.mark.parametrize("i, expected", [(4, 10), (13, 85), (18, 170)])
def test_run_length_seq(i, expected):
    assert run_length_seq(i, 12) == expected


def test_run_length_seq_range_error():
    with pytest.raises(RangeError):
        run_length_seq(1000, 8)


def test_records():
    table = records(22)
    assert [run.ordinal for _, run in table][:8] == [1, 2, 3, 4, 6, 8, 13, 18]
    for rank, run in table:
        k = rank + 1
        assert run.length == a_of(rank)
        assert (run.start, run.end) == (a_of(k) + 1, 2**k - 1)
    assert (table[3].start, table[3].end) == (11, 15)


@pytest.mark.parametrize("r, expected", [(1, 1), (5, 6), (7, 13), (8, 18)])
def test_record_run_number(r, expected):
    assert record_run_number(r) == expected


def test_record_run_number_matches_scan():
    table = records(22)
    assert len(table) == 21
    for rank, run in table:
        assert record_run_number(rank) == run.ordinal


def test_verify_record_spans():
    assert verify_theorem_4_4(2).status == "pass"
    assert verify_theorem_4_4(20).status == "pass"


def test_verify_record_spans_detects_hole():
    t = b_table(8)
    t[5] = 0
    rep = verify_theorem_4_4(8, b=t)
    assert rep.status == "fail"
    assert any("B(A(3))" in w for w, _, _ in rep.counterexamples)


def test_verify_record_ordinals():
    rep = verify_theorem_4_8(10, 22)
    assert rep.status == "pass"
    assert rep.notes  # the A155051(7) arithmetic note


def test_verify_record_ordinals_needs_enough_bits():
    with pytest.raises(RangeError):
        verify_theorem_4_8(10, 6)


def test_verify_record_ordinals_catches_bad_formula(monkeypatch):
    monkeypatch.setattr(runs, "record_run_number", lambda r: 40 if r == 8 else [1, 2, 3, 4, 6, 8, 13][r - 1])
    assert verify_theorem_4_8(8, 12).status == "fail"
