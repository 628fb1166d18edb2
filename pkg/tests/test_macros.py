import pytest

import macro_cases as cases
from motzkin.errors import BadIndices, LetterOutOfRange
from motzkin.rewrite import (
    macro_burrow, macro_fuse, macro_hop, macro_slide, macro_t_death, macro_wallslide,
)
from motzkin.words import Word, phi, word_parse

MAX_N = 6


def same_image(a: Word, b: Word) -> bool:
    return phi(a).diagram == phi(b).diagram


def certified(lhs, rhs, tr, strict=True) -> bool:
    return tr.start == lhs and tr.end == rhs and tr.verify(strict=strict) and same_image(lhs, rhs)


def test_hop_examples():
    lhs, rhs, _ = macro_hop(1, 3, 3)
    assert (str(lhs), str(rhs)) == ("t2 p1", "t2 t1 l2 l1")
    lhs, rhs, _ = macro_hop(1, 5, 5)
    assert (str(lhs), str(rhs)) == ("t4 t2 p1", "t4 t2 t3 t1 l4 l3 l2 l1")


@pytest.mark.parametrize("i,k,n", list(cases.hop(MAX_N)))
def test_hop_all(i, k, n):
    assert certified(*macro_hop(i, k, n))


def test_hop_bad():
    with pytest.raises(BadIndices):
        macro_hop(1, 2, 3)


def test_slide_examples():
    rhs_t, tr = macro_slide((1, 3), word_parse("t2", 3))
    assert str(rhs_t) == "t1"
    rhs_t, tr = macro_slide((1, 3), Word(3, ()))
    assert rhs_t.letters == () and tr.verify()


@pytest.mark.parametrize("run,T", list(cases.slide(MAX_N)))
def test_slide_all(run, T):
    rhs_t, tr = macro_slide(run, T)
    assert tr.verify()
    assert same_image(tr.start, tr.end)
    assert all(run[0] <= g.index <= run[1] - 2 for g in rhs_t.letters)


def test_slide_out_of_range():
    with pytest.raises(LetterOutOfRange):
        macro_slide((1, 3), word_parse("t1", 3))


def test_burrow_example_and_rules():
    lhs, rhs, tr = macro_burrow(2, 3)
    assert (str(lhs), str(rhs)) == ("t1 p2", "t1 t2 l1 l2")
    assert certified(lhs, rhs, tr)


@pytest.mark.parametrize("i,n", list(cases.burrow(MAX_N)))
def test_burrow_all(i, n):
    lhs, rhs, tr = macro_burrow(i, n)
    assert certified(lhs, rhs, tr)
    # p_i = r_i l_i, then t_{i-1} r_i = t_{i-1} t_i l_{i-1}
    assert [st.rule.family_id for st in tr.steps] == ["D.1", "M.10a"]


def test_wallslide_examples():
    lhs, rhs, tr = macro_wallslide(word_parse("t1", 4), Word(4, ()), 3)
    assert (str(lhs), str(rhs)) == ("t1 p3", "r3 t1 l3")
    lhs, rhs, tr = macro_wallslide(Word(3, ()), Word(3, ()), 2)
    assert (str(lhs), str(rhs)) == ("p2", "r2 l2")


@pytest.mark.parametrize("T,T2,i", list(cases.wallslide(MAX_N)))
def test_wallslide_all(T, T2, i):
    assert certified(*macro_wallslide(T, T2, i))


def test_wallslide_rejects_neighbour():
    with pytest.raises(LetterOutOfRange):
        macro_wallslide(word_parse("t2", 4), Word(4, ()), 3)


def test_fuse_examples():
    res = macro_fuse(3, 1, 2, 3)
    assert (str(res.lhs), str(res.rhs)) == ("t1 p2", "t1 p1")
    res = macro_fuse(1, 3, 1, 4)
    assert (str(res.lhs), str(res.rhs)) == ("t2 t1 p3", "p1 t2 t1")


@pytest.mark.parametrize("case,i,j,n", list(cases.fuse(MAX_N)))
def test_fuse_all(case, i, j, n):
    res = macro_fuse(case, i, j, n)
    assert certified(res.lhs, res.rhs, res.trace)
    assert certified(res.lhs, res.third, res.third_trace)


def test_fuse_bad_case():
    with pytest.raises(BadIndices):
        macro_fuse(1, 1, 3, 4)


def test_t_death_base():
    lhs, rhs, tr = macro_t_death(1, word_parse("t1", 2), 2)
    assert (str(lhs), str(rhs)) == ("p1 p2 t1 p1 p2", "p1 p2")


@pytest.mark.parametrize("k,T,n", list(cases.t_death(MAX_N)))
def test_t_death_all(k, T, n):
    lhs, rhs, tr = macro_t_death(k, T, n)
    assert certified(lhs, rhs, tr, strict=False)
    # a t letter can only die through the supplement relation
    assert tr.verify(strict=True) == (not T.letters)
    assert (tr.supplement_steps > 0) == bool(T.letters)
