"""Registry of verifiable claims.

Each verifier pits the library function under test against an independent
oracle (string manipulation, brute-force enumeration, a direct scan of B)
over a finite range and returns a :class:`~seqlab.report.Report`.
Library functions are looked up through their modules at call time so a
patched function is what gets verified.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Callable, Dict, Optional

import numpy as np

from . import colorings, puzzles, runs, seq_core, words
from .report import MAX_COUNTEREXAMPLES, Report


@dataclass(frozen=True)
class Claim:
    id: str
    summary: str
    fn: Callable[..., Report]
    max_n: Optional[int] = None
    max_bits: Optional[int] = None


def _char_equiv(rep, max_n, max_bits):
    rep.range = f"1 <= n <= {max_n}"
    forms = {m: (lambda n, m=m: seq_core.a_of(n, m)) for m in seq_core.METHODS}
    forms.update(seq_core.INTERNAL_A_FORMS)
    for n in range(1, max_n + 1):
        ref = int("".join("1" if i % 2 == 0 else "0" for i in range(n)), 2)
        for name, fn in forms.items():
            v = fn(n)
            rep.check(v == ref, f"A({n}) via {name}", ref, v)


def _parity(rep, max_n, max_bits):
    rep.range = f"1 <= n <= {max_n}"
    a = seq_core.a_of
    for n in range(1, max_n + 1):
        rep.check(a(n) % 2 == n % 2, f"A({n}) mod 2", n % 2, a(n) % 2)
        if n >= 2:
            rep.check(a(n) + a(n - 1) == (1 << n) - 1, f"A({n})+A({n - 1})",
                      (1 << n) - 1, a(n) + a(n - 1))
        if n >= 3:
            rep.check(a(n) - a(n - 2) == 1 << (n - 1), f"A({n})-A({n - 2})",
                      1 << (n - 1), a(n) - a(n - 2))


def _lemma_3_1(rep, max_n, max_bits):
    rep.range = f"1 <= n <= {max_n}"
    for n in range(1, max_n + 1):
        s = format(n, "b")
        want = int(s + s[::-1], 2)
        got = seq_core.palindrome_p(n)
        rep.check(got == want, f"P({n})", want, got)
        rep.check(seq_core.bit_length(n) == len(s), f"bit_length({n})", len(s),
                  seq_core.bit_length(n))
        rep.check(seq_core.reverse_bits(n) == int(s[::-1], 2), f"R({n})",
                  int(s[::-1], 2), seq_core.reverse_bits(n))
        rep.check(want % 3 == 0, f"P({n}) mod 3", 0, want % 3)


def _theorem_3_2(rep, max_n, max_bits):
    rep.range = f"1 <= n <= {max_n}"
    agree = set()
    for n in range(1, max_n + 1):
        t = seq_core.triangular(n)
        p3 = seq_core.palindrome_p_div3(n)
        if t == p3:
            agree.add(n)
        # which side of T(n) P(n)/3 falls on, by position of n inside its bit range
        k = n.bit_length()
        ak = seq_core.a_of(k)
        if n < ak:
            rep.check(p3 > t, f"P({n})/3 > T({n})", ">", (p3, t))
        elif n > ak:
            rep.check(p3 < t, f"P({n})/3 < T({n})", "<", (p3, t))
    a_vals = set()
    k = 1
    while seq_core.a_of(k) <= max_n:
        a_vals.add(seq_core.a_of(k))
        k += 1
    for n in sorted(agree - a_vals):
        rep.fail(f"T({n}) = P({n})/3 but n is not a term of A", "unequal", "equal")
    for n in sorted(a_vals - agree):
        rep.fail(f"n = {n} is a term of A but T(n) != P(n)/3", "equal", "unequal")
    rep.notes.append("agreement at n = " + ", ".join(map(str, sorted(agree))))


def _lemma_4_1(rep, max_n, max_bits):
    rep.range = f"1 <= k <= {max_bits}"
    for k in range(1, max_bits + 1):
        want = 1 if k % 2 else 2
        got = seq_core.seq_b(seq_core.a_of(k))
        rep.check(got == want, f"B(A({k}))", want, got)


def _lemma_4_2(rep, max_n, max_bits):
    rep.range = f"2 <= k <= {max_bits}"
    for k in range(2, max_bits + 1):
        got = seq_core.seq_b(seq_core.a_of(k) + 1)
        rep.check(got == 0, f"B(A({k})+1)", 0, got)


def _lemma_4_3(rep, max_n, max_bits):
    rep.range = f"0 <= k <= {max_bits}"
    for k in range(0, max_bits + 1):
        got = seq_core.seq_b(1 << k)
        rep.check(got == 1 << k, f"B(2^{k})", 1 << k, got)


def _theorem_4_4(rep, max_n, max_bits):
    inner = runs.verify_theorem_4_4(max_bits)
    _absorb(rep, inner)


def _lemma_4_6(rep, max_n, max_bits):
    rep.range = f"1 <= n < 2^{max_bits}"
    b = seq_core.b_table(max_bits)
    zero = (b == 0).tolist()
    for n in range(1, 1 << max_bits):
        got = words.b_is_zero(n)
        rep.check(got == zero[n], f"b_is_zero({n})", zero[n], got)


def _lemma_4_7(rep, max_n, max_bits):
    rep.range = f"1 <= n < 2^{max_bits}"
    b = seq_core.b_table(max_bits)[: 1 << max_bits]
    z = b == 0
    scanned = (np.flatnonzero(z[2:] & ~z[1:-1]) + 2).tolist()
    generated = words.run_start_indices(max_bits)
    gs, ss = set(generated), set(scanned)
    rep.check(generated == sorted(gs), "run_start_indices is sorted and distinct",
              "sorted", "unsorted")
    for n in sorted(ss - gs):
        rep.fail(f"run starts at {n}", "generated", "missing")
    for n in sorted(gs - ss):
        rep.fail(f"generated {n}", "run start", "not a run start")
    for bits in range(2, max_bits + 1):
        lo, hi = 1 << (bits - 1), 1 << bits
        count = sum(lo <= n < hi for n in scanned)
        want = seq_core.catalan((bits - 2) // 2)
        rep.check(count == want, f"runs among {bits}-bit indices", want, count)


def _theorem_4_8(rep, max_n, max_bits):
    max_rank = max_n if max_n is not None else max_bits - 1
    _absorb(rep, runs.verify_theorem_4_8(max_rank, max_bits))


def _lemma_5_1(rep, max_n, max_bits):
    rep.range = f"1 <= n <= {max_n}"
    brute_max = min(max_n + 1, 16)
    for n in range(1, max_n + 1):
        got = seq_core.s_count(n) + seq_core.s_count(n + 1)
        rep.check(got == 1 << n, f"S({n})+S({n + 1})", 1 << n, got)
    for n in range(1, brute_max + 1):
        r = (2 * n + 1) % 3
        good = ["".join(w) for w in product("bu", repeat=n) if w.count("b") % 3 == r]
        rep.check(seq_core.s_count(n) == len(good), f"S({n})", len(good), seq_core.s_count(n))
        alternating = [w for w in good if all(w[i] != w[i + 1] for i in range(n - 1))]
        want = 1 if n % 2 else 0
        rep.check(len(alternating) == want, f"alternating strings among S({n})",
                  want, len(alternating))


def _grow_bubbles(max_arity: int, based: bool) -> Dict[int, set]:
    # closure under edge substitution, starting from the all-one-color triangle
    one, other = ("b", "u") if based else ("u", "b")
    levels = {2: {one * 2}}
    for n in range(2, max_arity):
        nxt = set()
        for w in levels[n]:
            for i, c in enumerate(w):
                nxt.add(w[:i] + (other * 2 if c == one else one * 2) + w[i + 1:])
        levels[n + 1] = nxt
    return levels


def _theorem_5_2(rep, max_n, max_bits):
    rep.range = f"2 <= arity <= {max_n}"
    grown = {True: _grow_bubbles(max_n, True), False: _grow_bubbles(max_n, False)}
    for n in range(2, max_n + 1):
        want = seq_core.a_of(n - 1)
        for based in (True, False):
            found = colorings.enum_bubbles(n, based)
            tag = "based" if based else "unbased"
            rep.check(len(found) == want, f"#{tag} bubbles of arity {n}", want, len(found))
            borders = {b.border for b in found}
            rep.check(borders == grown[based][n], f"{tag} arity {n} vs substitution closure",
                      len(grown[based][n]), len(borders & grown[based][n]))
        alt = seq_core.s_count(n) - (n % 2)
        rep.check(alt == want, f"S({n}) minus alternating", want, alt)


def _bijection(rep, max_n, max_bits):
    _absorb(rep, colorings.verify_bijection(max_n))


def _occurrence_1(rep, max_n, max_bits):
    rep.range = f"1 <= rings <= {max_n}"
    for n in range(1, max_n + 1):
        graph = puzzles.state_graph(n)
        where = f"{n} rings"
        edges = {frozenset((u, v)) for u, nbrs in graph.items() for v in nbrs}
        rep.check(len(edges) == (1 << n) - 1, f"edges, {where}", (1 << n) - 1, len(edges))
        sym = all(u in graph[v] for u, nbrs in graph.items() for v in nbrs)
        rep.check(sym, f"symmetric moves, {where}", True, sym)
        ends = sorted(u for u, nbrs in graph.items() if len(nbrs) == 1)
        want_ends = sorted(["0" * n, "1" + "0" * (n - 1)])
        rep.check(ends == want_ends, f"endpoints, {where}", want_ends, ends)
        deg = max(len(nbrs) for nbrs in graph.values())
        rep.check(deg <= 2, f"max degree, {where}", 2, deg)
        dist = puzzles.bfs_distances(n, "0" * n)
        rep.check(len(dist) == 1 << n, f"connected, {where}", 1 << n, len(dist))
        ones = "1" * n
        for label, got in (("bfs", dist.get(ones)), ("closed form", puzzles.ring_distance("0" * n, ones))):
            rep.check(got == seq_core.a_of(n), f"dist(0^n, 1^n) by {label}, {where}",
                      seq_core.a_of(n), got)
        if n >= 2:
            tail = "1" + "0" * (n - 1)
            from_ones = puzzles.bfs_distances(n, ones)[tail]
            got = puzzles.ring_distance(ones, tail)
            want = seq_core.a_of(n - 1)
            rep.check(from_ones == want, f"dist(1^n, 10^(n-1)) by bfs, {where}", want, from_ones)
            rep.check(got == want, f"dist(1^n, 10^(n-1)) closed form, {where}", want, got)


def _occurrence_2(rep, max_n, max_bits):
    rep.range = f"1 <= n <= {max_n}; round trip below 2^{max_bits}"
    for n in range(1, max_n + 1):
        got = puzzles.gray_index("1" * n)
        rep.check(got == seq_core.a_of(n), f"gray_index(1^{n})", seq_core.a_of(n), got)
    for n in range(1, min(max_n, max_bits) + 1):
        code = [w.bits for w in puzzles.gray_code(n)]
        pos = code.index("1" * n)
        rep.check(pos == seq_core.a_of(n), f"position of 1^{n} in listing", seq_core.a_of(n), pos)
        rep.check(len(set(code)) == 1 << n, f"{n}-bit code is a permutation", 1 << n, len(set(code)))
        for i in range(len(code) - 1):
            d = sum(x != y for x, y in zip(code[i], code[i + 1]))
            rep.check(d == 1, f"hamming(g{i}, g{i + 1}), n={n}", 1, d)
    for i in range(1 << max_bits):
        w = puzzles.gray_encode(i, max_bits)
        got = puzzles.gray_index(w)
        rep.check(got == i, f"decode(encode({i}))", i, got)


def _occurrence_3(rep, max_n, max_bits):
    rep.range = f"3 <= people <= {max_n}"
    for m in range(3, max_n + 1):
        found = [p.seats for p in colorings.enum_partitions(m)]
        want = seq_core.a_of(m - 2)
        rep.check(len(found) == want, f"#partitions of {m} people", want, len(found))
        if m <= 10:
            brute = sorted(
                "AB" + "".join(t) for t in product("ABC", repeat=m - 2)
                if _cyclic_ok("AB" + "".join(t))
            )
            rep.check(sorted(found) == brute, f"partitions of {m} vs brute force",
                      len(brute), len(set(found) & set(brute)))


def _cyclic_ok(s: str) -> bool:
    return set(s) == set("ABC") and all(s[i] != s[i - 1] for i in range(len(s)))


def _lossers(rep, max_n, max_bits):
    rep.range = f"1 <= n <= {max_n}"
    for n in range(1, max_n + 1):
        strings = colorings.linear_ab_strings(n + 2)
        brute = sorted(
            s for s in ("AB" + "".join(t) for t in product("ABC", repeat=n))
            if "C" in s and all(x != y for x, y in zip(s, s[1:]))
        )
        rep.check(sorted(strings) == brute, f"linear strings of length {n + 2}",
                  len(brute), len(strings))
        rep.check(len(strings) == (1 << n) - 1, f"#linear strings, n={n}",
                  (1 << n) - 1, len(strings))
        wrapped = {s for s in strings if s[-1] != "A"}
        shortened = {s[:-1] for s in strings if s[-1] == "A"}
        here = {p.seats for p in colorings.enum_partitions(n + 2)}
        below = {p.seats for p in colorings.enum_partitions(n + 1)} if n >= 2 else set()
        rep.check(wrapped == here, f"strings ending B/C = partitions of {n + 2}",
                  len(here), len(wrapped))
        rep.check(shortened == below, f"strings ending A, shortened = partitions of {n + 1}",
                  len(below), len(shortened))
        a_prev = seq_core.a_of(n - 1) if n >= 2 else 0
        rep.check(len(wrapped) == seq_core.a_of(n), f"#wrapped, n={n}", seq_core.a_of(n), len(wrapped))
        rep.check(len(shortened) == a_prev, f"#shortened, n={n}", a_prev, len(shortened))


def _absorb(rep: Report, inner: Report) -> None:
    rep.range = inner.range
    rep.notes.extend(inner.notes)
    for w, e, a in inner.counterexamples:
        rep.fail(w, e, a)
    rep.failures += max(0, inner.failures - len(inner.counterexamples))


CLAIMS: Dict[str, Claim] = {
    c.id: c
    for c in [
        Claim("char-equiv", "five evaluators of A(n) agree", _char_equiv, max_n=200),
        Claim("parity", "A(n) has the parity of n; complement and gap identities", _parity, max_n=200),
        Claim("lemma-3-1", "P(n) = n*2^k + R(n)", _lemma_3_1, max_n=100000),
        Claim("theorem-3-2", "T(n) = P(n)/3 iff n is a term of A", _theorem_3_2, max_n=65536),
        Claim("lemma-4-1", "B(A(k)) is 1 for odd k, 2 for even k", _lemma_4_1, max_bits=20),
        Claim("lemma-4-2", "B(A(k)+1) = 0 for k >= 2", _lemma_4_2, max_bits=20),
        Claim("lemma-4-3", "B(2^k) = 2^k", _lemma_4_3, max_bits=20),
        Claim("theorem-4-4", "record zero runs of B span [A(k)+1, 2^k-1]", _theorem_4_4, max_bits=20),
        Claim("lemma-4-6", "bit-scan zero test agrees with B", _lemma_4_6, max_bits=20),
        Claim("lemma-4-7", "run starts are 1w1 and 1w10 with w Catalan", _lemma_4_7, max_bits=20),
        Claim("theorem-4-8", "A(n) = R(A155051(n-1))", _theorem_4_8, max_bits=22),
        Claim("lemma-5-1", "S(n) + S(n+1) = 2^n", _lemma_5_1, max_n=40),
        Claim("theorem-5-2", "bubbles of arity n number A(n-1)", _theorem_5_2, max_n=16),
        Claim("bijection", "partitions and based bubbles correspond", _bijection, max_n=12),
        Claim("occurrence-1", "Chinese Rings state graph", _occurrence_1, max_n=12),
        Claim("occurrence-2", "Gray code distance from 0^n to 1^n", _occurrence_2, max_n=30, max_bits=16),
        Claim("occurrence-3", "affinity partitions count", _occurrence_3, max_n=14),
        Claim("lossers", "linear AB-strings split into partitions", _lossers, max_n=10),
    ]
}


def run_claim(claim_id: str, max_n: Optional[int] = None, max_bits: Optional[int] = None,
              cap: int = MAX_COUNTEREXAMPLES) -> Report:
    """Run one claim; bounds left as ``None`` take the claim's defaults."""
    claim = CLAIMS[claim_id]
    rep = Report(claim_id, "", cap=cap)
    n = max_n if max_n is not None else claim.max_n
    bits = max_bits if max_bits is not None else claim.max_bits
    with rep.timed():
        claim.fn(rep, n, bits)
    return rep
