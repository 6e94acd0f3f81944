import pytest

from nilcover.errors import UnsupportedHypotheses
from nilcover.partition import Algebra, OrbitId, Partition, check_conditions, is_rather_odd, iter_orbits
from nilcover.slices import (
    GapCase,
    LocalModel,
    Slice,
    SliceKind,
    TerminalStatus,
    TerminalityVerdict,
    codim2_degenerations,
    cover_fiber_over_codim2,
    terminality_verdict,
)
from nilcover.topology import cover_menu, universal_cover, y_cover

from oracles import jordan_ok

O = OrbitId.of
P = Partition.parse


def loci(alg, text):
    return [(l.gap_member, str(l.degeneration), str(l.slice)) for l in codim2_degenerations(O(alg, text))]


def test_sl_rows():
    assert loci("sl", "5") == [(5, "4,1", "A4")]
    assert loci("sl", "3^2") == [(3, "3,2,1", "A2")]
    assert loci("sl", "1^3") == []
    with pytest.raises(UnsupportedHypotheses):
        codim2_degenerations(O("sl", "3,1"))


def test_sp_simple_rule():
    assert loci("sp", "4,2") == [(4, "3^2", "A1"), (2, "4,1^2", "A1")]
    assert loci("sp", "4,3^2,2,1^2") == []
    with pytest.raises(UnsupportedHypotheses):
        codim2_degenerations(O("sp", "8,4,2,1^2"))


def test_so_rather_odd_case_table():
    assert loci("so", "7,4^2,3") == [(7, "5^3,3", "A1"), (3, "7,4^2,1^3", "A1")]
    assert [l.case for l in codim2_degenerations(O("so", "7,4^2,3"))] == [GapCase.ODD_FAR, GapCase.ODD_FAR]
    (ex,) = codim2_degenerations(O("so", "5,1"))
    assert (ex.case, str(ex.degeneration), str(ex.slice)) == (GapCase.EXCEPTIONAL, "3^2", "A3")
    (odd,) = codim2_degenerations(O("so", "4^2,3,1"))
    assert (odd.case, str(odd.degeneration)) == (GapCase.ODD_NEAR, "4^2,2^2")
    assert odd.very_even_split  # [4^2,2^2] is very even
    (even,) = codim2_degenerations(O("so", "4^2,2^2,1"))
    assert (even.case, str(even.degeneration), str(even.slice)) == (GapCase.EVEN_NEAR, "3^4,1", "A1uA1")


def test_very_even_source_has_single_branch():
    ls = codim2_degenerations(O("so", "4^2,2^2"))
    assert [(l.gap_member, str(l.degeneration), str(l.slice)) for l in ls] == [
        (4, "3^4", "A1"), (2, "4^2,1^4", "A1")
    ]


def test_very_even_split_flag():
    # [3,1] degenerates at gap 3 to the very even [2^2]
    (l,) = codim2_degenerations(O("so", "3,1"))
    assert str(l.degeneration) == "2^2" and l.very_even_split


def test_locus_json_shape():
    (l,) = codim2_degenerations(O("sl", "5"))
    assert l.to_dict() == {"gap": 5, "degeneration": "4,1", "slice": "A4", "very_even_split": False}


def test_slice_parse_roundtrip():
    for s in (Slice(SliceKind.A, 3), Slice(SliceKind.A1_UNION_A1)):
        assert Slice.parse(str(s)) == s
    with pytest.raises(ValueError):
        Slice(SliceKind.A, 0)


def _supported_orbits(n):
    for alg in Algebra:
        for o in iter_orbits(alg, n):
            try:
                yield o, codim2_degenerations(o)
            except UnsupportedHypotheses:
                continue


@pytest.mark.parametrize("n", range(1, 13))
def test_degenerations_valid_exhaustive(n):
    for o, ls in _supported_orbits(n):
        for l in ls:
            q = l.degeneration
            assert q.size == o.size
            assert jordan_ok(o.algebra.value, q.to_list()), (o, l)
            if o.algebra is Algebra.SP:
                assert l.gap_member % 2 == 0
            if l.case is GapCase.EXCEPTIONAL:
                p = o.partition
                assert l.gap_member % 2 == 1 and l.gap_member >= 5
                assert p.r(l.gap_member) == 1 and p.r(l.gap_member - 4) == 1


@pytest.mark.parametrize("n", range(1, 13))
def test_cover_fibers_degree_identity_exhaustive(n):
    for o, ls in _supported_orbits(n):
        for cover in cover_menu(o):
            for l in ls:
                f = cover_fiber_over_codim2(o, cover, l)
                # each branch of the slice is covered cover.degree times
                assert f.copies * f.sheet_degree == cover.degree * f.branches, (o, cover, l, f)
                assert f.branches == l.slice.branches


def test_cover_fiber_examples():
    o = O("sp", "4,2")
    for l in codim2_degenerations(o):
        f = cover_fiber_over_codim2(o, universal_cover(o), l)
        assert (f.copies, f.local_model) == (2, LocalModel.SMOOTH_C2)  # 2^{b-1}, b = 2
    o = O("sl", "5")
    (l,) = codim2_degenerations(o)
    assert cover_fiber_over_codim2(o, universal_cover(o), l).local_model is LocalModel.SMOOTH_C2
    o = O("so", "4^2,2^2,1")  # a = 1
    (l,) = codim2_degenerations(o)
    f = cover_fiber_over_codim2(o, universal_cover(o), l)
    assert (f.copies, f.local_model) == (2, LocalModel.SMOOTH_C2)
    o = O("so", "5,3,1")  # Y-cover over an odd gap with r_{i-2} != 0 is smooth
    for l in codim2_degenerations(o):
        f = cover_fiber_over_codim2(o, y_cover(o), l)
        if l.case is GapCase.ODD_NEAR:
            assert f.local_model is LocalModel.SMOOTH_C2


def test_terminality_examples():
    o = O("sl", "3^2")
    v = terminality_verdict(o, universal_cover(o))
    assert v.status is TerminalStatus.TERMINAL and "rectangular" in v.reason
    o = O("sp", "4,3^2,2,1^2")
    assert terminality_verdict(o, universal_cover(o)).status is TerminalStatus.TERMINAL
    o = O("sp", "8,4,2,1^2")
    assert terminality_verdict(o, universal_cover(o)).status is TerminalStatus.NOT_ASSERTED
    o = O("sl", "4")
    assert terminality_verdict(o, cover_menu(o)[1]).status is TerminalStatus.NOT_ASSERTED


def test_terminality_verdict_roundtrip():
    v = TerminalityVerdict(TerminalStatus.TERMINAL, "x")
    assert TerminalityVerdict.from_dict(v.to_dict()) == v


@pytest.mark.parametrize("n", range(1, 13))
def test_terminal_only_under_hypotheses_exhaustive(n):
    for alg in (Algebra.SP, Algebra.SO):
        for o in iter_orbits(alg, n):
            c = check_conditions(o)
            bundle = c.cond_i and (c.cond_iii if alg is Algebra.SO and is_rather_odd(o.partition) else c.cond_ii)
            for cover in cover_menu(o):
                if terminality_verdict(o, cover).status is TerminalStatus.TERMINAL:
                    assert bundle, (o, cover)
