import pytest

from motzkin.diagram import Monoid
from motzkin.relations import Source, catalog_json, relation_catalog, supplement_catalog
from motzkin.words import l, p, r, t

CATALOGS = [Monoid.P, Monoid.RP, Monoid.LP, Monoid.TL, Monoid.MOTZKIN]


@pytest.mark.parametrize("monoid", CATALOGS)
@pytest.mark.parametrize("n", range(1, 7))
def test_every_instance_holds(monoid, n):
    assert all(rel.holds() for rel in relation_catalog(monoid, n))


def test_repaired_commutations_present():
    rels = {(rel.lhs.letters, rel.rhs.letters) for rel in relation_catalog(Monoid.MOTZKIN, 5)}
    assert ((r(1), l(3)), (l(3), r(1))) in rels
    assert ((t(1), t(3)), (t(3), t(1))) in rels


def test_loop_power_on_tl_square():
    sq = [rel for rel in relation_catalog(Monoid.TL, 3) if rel.lhs.letters == (t(1), t(1))]
    assert sq and sq[0].x_power == 1 and sq[0].rhs.letters == (t(1),)


def test_t_appears_on_both_sides_or_neither():
    for n in range(2, 7):
        for m in CATALOGS:
            for rel in relation_catalog(m, n):
                has = [any(g.kind == "t" for g in w.letters) for w in (rel.lhs, rel.rhs)]
                assert has[0] == has[1]


def test_supplement_is_separate_and_true():
    sup = supplement_catalog(4)
    assert [rel.lhs.letters for rel in sup] == [(p(i), t(i), p(i)) for i in range(1, 4)]
    assert all(rel.holds() and rel.source is Source.SUPPLEMENT for rel in sup)
    assert not set(sup) & set(relation_catalog(Monoid.MOTZKIN, 4))


def test_catalog_json():
    assert '"lhs"' in catalog_json(Monoid.RP, 3)


def test_rook_has_no_catalog():
    with pytest.raises(ValueError):
        relation_catalog(Monoid.R, 3)
