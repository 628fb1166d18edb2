"""Hypothesis strategies shared by the property tests."""

from hypothesis import strategies as st

from motzkin.words import GenSymbol, Word


def letters(n: int, kinds: str = "rltp"):
    opts = [GenSymbol(k, i) for k in kinds for i in range(1, n + (1 if k == "p" else 0))]
    return st.sampled_from(opts)


def words(n: int, max_len: int = 8, kinds: str = "rltp"):
    return st.lists(letters(n, kinds), max_size=max_len).map(lambda xs: Word(n, tuple(xs)))


widths = st.integers(min_value=2, max_value=5)
