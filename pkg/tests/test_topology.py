import pytest

from nilcover.errors import InvalidCover
from nilcover.partition import Algebra, OrbitId, counts, is_rather_odd, iter_orbits
from nilcover.topology import (
    CoverKind,
    CoverSpec,
    FiniteGroupDescriptor,
    GroupKind,
    QFactorial,
    cover_menu,
    cyclic_cover,
    fundamental_group,
    parse_cover,
    q_factorial_verdict,
    universal_cover,
    y_cover,
)

O = OrbitId.of


def test_fundamental_group_examples():
    g = fundamental_group(O("sl", "9,6"))
    assert (g.kind, g.param, g.order) == (GroupKind.CYCLIC, 3, 3)
    g = fundamental_group(O("sp", "6^2,4^2"))
    assert (g.kind, g.param, g.order) == (GroupKind.ELEM_ABELIAN_2, 2, 4)
    g = fundamental_group(O("so", "4^2,3,1"))
    assert (g.kind, g.param, g.order) == (GroupKind.CENTRAL_EXT_BY_2, 1, 4)


def test_descriptor_json_shape():
    d = FiniteGroupDescriptor(GroupKind.CENTRAL_EXT_BY_2, 2)
    assert d.to_dict() == {"kind": "central_ext_by_2", "param": 2, "order": 8}
    assert FiniteGroupDescriptor.from_dict(d.to_dict()) == d


def test_zero_and_small_orbits():
    assert fundamental_group(O("so", "1^5")).order == 1
    assert fundamental_group(O("so", "3,1")).order == 4  # rather odd, a = 2
    assert fundamental_group(O("so", "3")).order == 2  # rather odd, a = 1
    assert fundamental_group(O("so", "2^2")).order == 2  # very even


def test_cover_menus():
    assert sorted(c.degree for c in cover_menu(O("sl", "4"))) == [1, 2, 4]
    assert [(c.kind, c.degree) for c in cover_menu(O("sp", "6"))] == [(CoverKind.UNIVERSAL, 2)]
    assert [(c.kind, c.degree) for c in cover_menu(O("so", "11^3,3^2,1"))] == [(CoverKind.UNIVERSAL, 4)]
    assert [c.degree for c in cover_menu(O("so", "13^2,3,1"))] == [4]
    menu = cover_menu(O("so", "4^2,3,1"))
    assert [(c.kind, c.degree) for c in menu] == [(CoverKind.UNIVERSAL, 4), (CoverKind.Y_COVER, 2)]


@pytest.mark.parametrize("n", range(1, 13))
def test_pi1_invariants_exhaustive(n):
    for alg in Algebra:
        for o in iter_orbits(alg, n):
            g = fundamental_group(o)
            a, b, d = counts(o.partition)
            assert g.order == universal_cover(o).degree
            if alg is Algebra.SO:
                assert (g.kind is GroupKind.CENTRAL_EXT_BY_2) == is_rather_odd(o.partition)
                assert g.order == 2 ** (max(a - 1, 0) + is_rather_odd(o.partition))
            elif alg is Algebra.SP:
                assert g.order == 2 ** b
            else:
                assert g.order == d
            for c in cover_menu(o):
                assert g.order % c.degree == 0
            menu_degrees = [c.degree for c in cover_menu(o)]
            if alg is Algebra.SL:
                assert 1 in menu_degrees
            elif 1 in menu_degrees:
                # only when the cover is trivial by arithmetic
                assert g.order == 1 or (is_rather_odd(o.partition) and a <= 1)


def test_parse_cover():
    o = O("sl", "4")
    assert parse_cover("cyclic:2", o) == CoverSpec(CoverKind.CYCLIC_SL, 2, 2)
    assert parse_cover(None, o).degree == 4
    with pytest.raises(InvalidCover):
        parse_cover("cyclic:3", o)
    with pytest.raises(InvalidCover):
        parse_cover("cyclic:x", o)
    with pytest.raises(InvalidCover):
        parse_cover("ycover", O("so", "11^3,3^2,1"))
    with pytest.raises(InvalidCover):
        parse_cover("weird", o)
    assert parse_cover("ycover", O("so", "4^2,3,1")) == y_cover(O("so", "4^2,3,1"))


def test_cover_roundtrip():
    for c in (cyclic_cover(O("sl", "4"), 2), universal_cover(O("sp", "6")), y_cover(O("so", "5,3,1"))):
        assert CoverSpec.from_dict(c.to_dict()) == c


def test_cyclic_cover_rejected_outside_sl():
    with pytest.raises(InvalidCover):
        parse_cover("cyclic:2", O("sp", "6"))


def test_q_factorial_examples():
    o = O("sp", "4,3^2,2,1^2")
    assert q_factorial_verdict(o, universal_cover(o)) is QFactorial.YES
    o = O("sl", "3^2")
    for c in cover_menu(o):
        assert q_factorial_verdict(o, c) is QFactorial.YES
    o = O("so", "3^2,2^2")
    assert q_factorial_verdict(o, universal_cover(o)) is QFactorial.UNKNOWN
    assert q_factorial_verdict(o, universal_cover(o), certified_construction=True) is QFactorial.VIA_CONSTRUCTION
    o = O("sp", "6^2,4^2")
    assert q_factorial_verdict(o, universal_cover(o)) is QFactorial.UNKNOWN


def test_q_factorial_rejects_foreign_cover():
    with pytest.raises(InvalidCover):
        q_factorial_verdict(O("sp", "6"), CoverSpec(CoverKind.UNIVERSAL, 4))
