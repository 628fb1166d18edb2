import pytest

from motzkin.diagram import Monoid, belongs
from motzkin.enumeration import closed_form, enumerate_monoid, generator_closure, report
from motzkin.errors import BoundExceeded
from oracles import catalan, motzkin_monoid_size, planar_rook_size, right_planar_brute, rook_size


@pytest.mark.parametrize("n", range(1, 7))
def test_small_counts(n):
    assert len(enumerate_monoid(Monoid.RP, n)) == right_planar_brute(n) == catalan(n + 1)
    assert len(enumerate_monoid(Monoid.LP, n)) == catalan(n + 1)
    assert len(enumerate_monoid(Monoid.P, n)) == planar_rook_size(n)
    assert len(enumerate_monoid(Monoid.R, n)) == rook_size(n)
    assert len(enumerate_monoid(Monoid.TL, n)) == catalan(n)


def test_listed_values():
    assert [len(enumerate_monoid(Monoid.RP, n)) for n in range(1, 6)] == [2, 5, 14, 42, 132]
    assert len(enumerate_monoid(Monoid.P, 2)) == 6
    assert len(enumerate_monoid(Monoid.R, 2)) == 7


@pytest.mark.parametrize("n", range(1, 5))
def test_motzkin_two_ways(n):
    direct = set(enumerate_monoid(Monoid.MOTZKIN, n))
    assert direct == generator_closure(Monoid.MOTZKIN, n)
    assert len(direct) == motzkin_monoid_size(n)


@pytest.mark.parametrize("monoid", [Monoid.P, Monoid.RP, Monoid.LP, Monoid.TL])
def test_closure_matches_enumeration(monoid):
    for n in range(1, 5):
        assert set(enumerate_monoid(monoid, n)) == generator_closure(monoid, n)


def test_membership_of_enumerated():
    for m in (Monoid.P, Monoid.RP, Monoid.LP, Monoid.TL):
        assert all(belongs(d, m) for d in enumerate_monoid(m, 4))


def test_report_by_rank():
    rep = report(Monoid.TL, 4)
    assert rep.consistent and rep.count == 14 and rep.closed_form == 14
    assert closed_form(Monoid.MOTZKIN, 3) is None


def test_bound():
    with pytest.raises(BoundExceeded):
        enumerate_monoid(Monoid.MOTZKIN, 9)
    with pytest.raises(BoundExceeded):
        enumerate_monoid(Monoid.R, 9)
