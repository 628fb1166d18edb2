import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from motzkin.diagram import Monoid, belongs, make_diagram, multiply
from motzkin.enumeration import catalan, enumerate_monoid
from motzkin.errors import InvalidBallot, NotInRP, NotInTL
from motzkin.structure import (
    all_ballots, ballot_to_rp, decompose, factor_lp, factor_rp, is_standard, rp_to_ballot,
    shifted, standard_word, star, star_word, tl_standard_word,
)
from motzkin.words import evaluate
from strategies import words

SEVEN = [("t1", "t3"), ("t4", "b1"), ("t5", "b2"), ("t6", "b7"), ("b3", "b6"), ("b4", "b5")]
SEVEN_SHIFTED = [("t1", "t2"), ("t3", "b1"), ("t4", "b2"), ("t5", "b7"), ("b3", "b6"), ("b4", "b5")]


@pytest.mark.parametrize("n", range(1, 5))
def test_decompose_round_trip(n):
    for d in enumerate_monoid(Monoid.MOTZKIN, n):
        tri = decompose(d)
        assert belongs(tri.r, Monoid.RP) and belongs(tri.t, Monoid.TL) and belongs(tri.l, Monoid.LP)
        assert tri.product() == (d, 0)


def test_seven_vertex_shift():
    d = make_diagram(7, SEVEN)
    assert shifted(d) == make_diagram(7, SEVEN_SHIFTED)
    assert decompose(d).product() == (d, 0)


@pytest.mark.parametrize("n", range(1, 6))
def test_rp_and_lp_factorizations(n):
    for d in enumerate_monoid(Monoid.RP, n):
        assert evaluate(factor_rp(d)) == d
    for d in enumerate_monoid(Monoid.LP, n):
        assert evaluate(factor_lp(d)) == d
    with pytest.raises(NotInRP):
        rp_to_ballot(make_diagram(2, [("t1", "b2")]))


@pytest.mark.parametrize("n", range(1, 7))
def test_ballot_bijection(n):
    seqs = list(all_ballots(n))
    assert len(seqs) == catalan(n + 1)
    for s in seqs:
        assert rp_to_ballot(ballot_to_rp(s)) == s
    for d in enumerate_monoid(Monoid.RP, n):
        assert ballot_to_rp(rp_to_ballot(d)) == d


def test_poset_example():
    d = make_diagram(3, [("t2", "b1"), ("t3", "b2")])
    seq = (1, 1, -1, 1, -1, 1, -1, -1)
    assert rp_to_ballot(d).entries == seq
    assert ballot_to_rp(seq) == d


def test_invalid_ballots():
    for bad in [(1, -1, -1, 1), (1, 1), (1, 0), (1,)]:
        with pytest.raises(InvalidBallot):
            ballot_to_rp(bad)


@pytest.mark.parametrize("n", range(1, 5))
def test_standard_words(n):
    seen = set()
    for d in enumerate_monoid(Monoid.MOTZKIN, n):
        sw = standard_word(d)
        assert is_standard(sw)
        assert evaluate(sw.word) == d
        seen.add(sw.word)
    assert len(seen) == len(enumerate_monoid(Monoid.MOTZKIN, n))


def test_tl_standard_needs_full_diagram():
    with pytest.raises(NotInTL):
        tl_standard_word(make_diagram(2, []))


@settings(max_examples=100, deadline=None)
@given(st.integers(1, 5).flatmap(lambda n: words(n, 8)))
def test_star_is_an_anti_automorphism(w):
    assert evaluate(star_word(w)) == star(evaluate(w))
    assert star(star(evaluate(w))) == evaluate(w)


@settings(max_examples=100, deadline=None)
@given(st.integers(1, 5).flatmap(lambda n: st.tuples(words(n, 6), words(n, 6))))
def test_star_reverses_products(ws):
    a, b = (evaluate(w) for w in ws)
    assert star(multiply(a, b).diagram) == multiply(star(b), star(a)).diagram
