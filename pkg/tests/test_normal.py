import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from motzkin.diagram import Diagram, beta, tau
from motzkin.rewrite import (
    SubsetWeight, is_ptp, minimal_rtl_run, normalize, normalize_trace, ptp_trace, subset_weight,
    to_minimal_rtl, to_ptp,
)
from motzkin.structure import is_standard, standard_word
from motzkin.words import Word, evaluate, l, p, phi_letters, r, t, word_parse
from strategies import words


def image(letters, n) -> Diagram:
    return Diagram(n, phi_letters(n, letters)[0])


def small_words(n, max_len, with_p=False):
    al = [g(i) for g in (r, l, t) for i in range(1, n)]
    if with_p:
        al += [p(i) for i in range(1, n + 1)]
    for k in range(max_len + 1):
        for ws in itertools.product(al, repeat=k):
            yield Word(n, ws)


def minimality_holds(run) -> bool:
    n = run.word.n
    x = run.word.letters
    p1, body, p2 = x[:run.a], x[run.a:run.b], x[run.b:]
    if any(g.kind == "t" for g in p1 + p2) or any(g.kind != "t" for g in body):
        return False
    u, v = beta(image(p1, n)), tau(image(p2, n))
    if u != frozenset(range(1, len(u) + 1)) or v != frozenset(range(1, len(v) + 1)):
        return False
    partner = phi_letters(n, body)[0]

    def live(s):
        return (s + 1 in u) if s < n else (s - n + 1 in v)

    return all(live(s) == live(q) for s, q in enumerate(partner))


# ---------------------------------------------------------------- weights


def test_subset_weight_examples():
    assert subset_weight(set()) == SubsetWeight(0)
    assert subset_weight({1}) < subset_weight({2})
    assert int(subset_weight({1})) == 2 and int(subset_weight({2})) == 4
    assert subset_weight({1, 2}) >= subset_weight({1})


subsets = st.frozensets(st.integers(1, 8), max_size=8)


@given(subsets, subsets)
def test_weight_monotone_under_inclusion(x, y):
    assert subset_weight(x) <= subset_weight(x | y)


@given(subsets, st.integers(1, 7))
def test_weight_shift_right_increases(x, i):
    x = x - {i, i + 1}
    assert subset_weight(x | {i}) < subset_weight(x | {i + 1})


@settings(max_examples=300, deadline=None)
@given(st.integers(2, 6).flatmap(lambda n: st.tuples(words(n, 8, "rlp"), st.integers(1, n - 1))))
def test_l_on_the_left_lowers_top_weight(case):
    w, i = case
    n = w.n
    v = tau(evaluate(w))
    after = tau(evaluate(Word(n, (l(i),) + w.letters)))
    if i + 1 in v:
        assert subset_weight(after) < subset_weight(v)


@settings(max_examples=300, deadline=None)
@given(st.integers(2, 6).flatmap(lambda n: st.tuples(words(n, 8, "rlp"), st.integers(1, n - 1))))
def test_r_on_the_left_can_raise_top_weight(case):
    # the r-direction version of the ordering statement: r_j moves top j to j+1
    w, j = case
    n = w.n
    v = tau(evaluate(w))
    after = tau(evaluate(Word(n, (r(j),) + w.letters)))
    if j in v and j + 1 not in v:
        assert subset_weight(after) > subset_weight(v)
    if j + 1 in v:
        assert subset_weight(after) <= subset_weight(v)


# ---------------------------------------------------------------- PTP form


def test_ptp_examples():
    assert to_ptp(word_parse("r1", 2)) == word_parse("r1", 2)
    out = to_ptp(word_parse("t1 l1 t1", 2))
    assert is_ptp(out)
    assert evaluate(out) == evaluate(word_parse("t1 l1 t1", 2))


def test_ptp_exhaustive_small():
    for n, max_len, with_p in ((2, 5, True), (3, 5, False)):
        for w in small_words(n, max_len, with_p):
            tr = ptp_trace(w)
            assert is_ptp(tr.end)
            assert tr.verify(strict=False)


# ---------------------------------------------------------------- minimal form


def test_minimal_identity():
    assert to_minimal_rtl(Word(3, ())) == Word(3, ())


def test_minimal_example():
    w = word_parse("t1 p1", 2)
    run = minimal_rtl_run(w)
    assert minimality_holds(run)
    assert evaluate(run.word) == evaluate(w)
    assert run.trace.verify(strict=False)


def test_minimal_exhaustive_small():
    for n, max_len, with_p in ((2, 5, True), (3, 5, False)):
        for w in small_words(n, max_len, with_p):
            run = minimal_rtl_run(to_ptp(w))
            assert minimality_holds(run), w
            assert evaluate(run.word) == evaluate(w)
            assert all(a > b for a, b in zip(run.weights, run.weights[1:]))


# ---------------------------------------------------------------- normalize


def test_normalize_examples():
    assert normalize(Word(3, ())).word.letters == ()
    w = word_parse("t1 r1", 2)
    assert normalize(w) == standard_word(evaluate(w))


@settings(max_examples=300, deadline=None)
@given(st.integers(1, 5).flatmap(lambda n: words(n, 10)))
def test_normalize_matches_oracle(w):
    sw = normalize(w)
    assert sw == standard_word(evaluate(w))
    assert is_standard(sw)


@settings(max_examples=150, deadline=None)
@given(st.integers(2, 4).flatmap(lambda n: words(n, 8)))
def test_normalize_trace_is_certified(w):
    log = []
    tr = normalize_trace(w, log)
    assert tr.start == w
    assert tr.replay() == tr.end
    assert tr.verify(strict=False)
    for weights in log:
        assert all(a > b for a, b in zip(weights, weights[1:]))


@settings(max_examples=150, deadline=None)
@given(st.integers(2, 4).flatmap(lambda n: words(n, 8)))
def test_supplement_needed_exactly_when_t_dies(w):
    tr = normalize_trace(w)
    has_t = any(g.kind == "t" for g in w.letters)
    if has_t and not any(g.kind == "t" for g in tr.end.letters):
        assert tr.supplement_steps > 0
    if not has_t:
        assert tr.supplement_steps == 0


@pytest.mark.parametrize("n", [1, 2])
def test_normal_forms_count_small(n):
    forms = {normalize(w).word for w in small_words(n, 6, with_p=True)}
    assert len(forms) == {1: 2, 2: 9}[n]
