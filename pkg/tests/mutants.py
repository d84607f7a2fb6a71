"""One fault per claim: a patch that must turn the claim's verdict into a failure."""

from seqlab import colorings, puzzles, runs, seq_core, words


def _wrap(module, name, bad):
    def apply(mp):
        orig = getattr(module, name)
        mp.setattr(module, name, lambda *a, **k: bad(orig, *a, **k))
    return apply


def _closed_off_by_one(mp):
    orig = seq_core._A_METHODS["closed"]
    mp.setitem(seq_core._A_METHODS, "closed", lambda n: orig(n) + (n == 150))


def _b_table_with_hole(mp):
    orig = seq_core.b_table

    def patched(bits):
        t = orig(bits)
        t[5] = 0
        return t

    mp.setattr(seq_core, "b_table", patched)


def _drop_run_start(mp):
    orig = words.run_start_indices
    mp.setattr(words, "run_start_indices", lambda bits: [n for n in orig(bits) if n != 43])


def _bad_admissible(mp):
    orig = colorings.is_admissible
    # forget the neighbouring-color condition
    mp.setattr(colorings, "is_admissible",
               lambda w, based=True: orig(w, based) or (len(w) == 5 and w == ("ububu" if based else "bubub")))


MUTANTS = {
    "char-equiv": _closed_off_by_one,
    "parity": _wrap(seq_core, "a_of", lambda f, n, m="rec": f(n, m) + (n == 7)),
    "lemma-3-1": _wrap(seq_core, "reverse_bits", lambda f, n: f(n) if n != 1000 else f(n) + 2),
    "theorem-3-2": _wrap(seq_core, "triangular", lambda f, n: f(n) + (n == 21)),
    "lemma-4-1": _wrap(seq_core, "seq_b", lambda f, n, m="rec": 2 if n == 5 else f(n, m)),
    "lemma-4-2": _wrap(seq_core, "seq_b", lambda f, n, m="rec": 1 if n == 11 else f(n, m)),
    "lemma-4-3": _wrap(seq_core, "seq_b", lambda f, n, m="rec": 0 if n == 1024 else f(n, m)),
    "theorem-4-4": _b_table_with_hole,
    "lemma-4-6": _wrap(words, "b_is_zero", lambda f, n: f(n) if n != 42 else True),
    "lemma-4-7": _drop_run_start,
    "theorem-4-8": _wrap(runs, "record_run_number", lambda f, r: 40 if r == 8 else f(r)),
    "lemma-5-1": _wrap(seq_core, "s_count", lambda f, n: f(n) + (n == 9)),
    "theorem-5-2": _bad_admissible,
    "bijection": _wrap(colorings, "partition_to_bubble",
                       lambda f, p: colorings.Bubble(True, "bb") if p.seats == "ABCABC" else f(p)),
    "occurrence-1": _wrap(puzzles, "legal_moves",
                          lambda f, s: [] if str(s) == "0110" else f(s)),
    "occurrence-2": _wrap(puzzles, "gray_index", lambda f, w: f(w) ^ (str(w) == "1" * 20)),
    "occurrence-3": _wrap(colorings, "enum_partitions", lambda f, m: f(m)[:-1] if m == 9 else f(m)),
    "lossers": _wrap(colorings, "linear_ab_strings",
                     lambda f, n: f(n) + (["ABCBC"] if n == 5 else [])),
}
