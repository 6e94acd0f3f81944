import pytest

from nilcover.errors import InvalidCoverDegree, InvalidOrbit, InvalidPivot
from nilcover.induction import (
    InductionChain,
    InductionStep,
    StepKind,
    double_type_I_eligible,
    induce_double_type_I,
    induce_type_I,
    induce_type_II,
    sl_block_step,
)
from nilcover.partition import Algebra, OrbitId, Partition, VeryEvenLabel, counts, gap_members, iter_orbits

from oracles import jordan_ok

O = OrbitId.of
P = Partition.parse


def summary(step):
    return str(step.target.partition), step.block, step.springer_degree


def test_type_I_examples():
    assert summary(induce_type_I(O("sp", "6^2,4^2"), 4)) == ("4^2,2^2", 4, 1)
    assert summary(induce_type_I(O("sp", "8,5^2,4,3^2"), 8)) == ("6,5^2,4,3^2", 1, 1)
    assert summary(induce_type_I(O("so", "11^3,3^2,1"), 11)) == ("9^3,3^2,1", 3, 1)


def test_type_I_count_preservation_flag():
    # pivot 6 merges 6 into 4: b drops from 2 to 1
    assert not induce_type_I(O("sp", "6^2,4^2"), 6).preserves_count
    assert induce_type_I(O("sp", "6^2,4^2"), 4).preserves_count


def test_type_I_rejects_non_gap():
    with pytest.raises(InvalidPivot):
        induce_type_I(O("sp", "4,3^2,2,1^2"), 4)
    with pytest.raises(InvalidOrbit):
        induce_type_I(O("sl", "4"), 4)


def test_type_II_examples():
    assert summary(induce_type_II(O("sp", "4^2,2^2"), 4)) == ("3^2,2^2", 1, 2)
    assert summary(induce_type_II(O("sp", "3^2,2^2"), 2)) == ("1^4", 3, 2)
    assert summary(induce_type_II(O("so", "5^2,3,1"), 5)) == ("4^2,3,1", 1, 2)


def test_type_II_degree_one_cases_in_so():
    # target very even
    s = induce_type_II(O("so", "3^2"), 3)
    assert str(s.target.partition) == "2^2" and s.springer_degree == 1
    assert s.target.very_even_label is VeryEvenLabel.INDUCED
    # m = 2r: [3^2,1^2] at pivot 1 has r = 1 + 2 = 3 and m = 8 != 6, so degree 2
    assert induce_type_II(O("so", "3^2,1^2"), 1).springer_degree == 2
    # m = 2r: [1^2] at pivot 1 has r = 1 and m = 2
    s = induce_type_II(O("so", "1^2"), 1)
    assert s.target.size == 0 and s.springer_degree == 1


def test_type_II_rejects():
    with pytest.raises(InvalidPivot):
        induce_type_II(O("sp", "4,2^2"), 4)  # multiplicity 1
    with pytest.raises(InvalidPivot):
        induce_type_II(O("sp", "3^2,2^2"), 3)  # wrong parity


def test_double_type_I_examples():
    s = induce_double_type_I(O("so", "15,8^2,3"), 15)
    assert (str(s.target.partition), s.block, s.flag_block, str(s.levi_orbit)) == ("11,8^2,3", 1, 2, "2")
    s = induce_double_type_I(O("so", "11,8^2,3"), 8)
    assert (str(s.target.partition), s.block, s.flag_block, str(s.levi_orbit)) == ("7,4^2,3", 3, 6, "2^3")
    p = P("7,6^2,3^2")
    assert not any(double_type_I_eligible(p, i) for i in p.members())


def test_double_type_I_requires_rather_odd_so():
    with pytest.raises(InvalidOrbit):
        induce_double_type_I(O("sp", "8"), 8)
    with pytest.raises(InvalidPivot):
        induce_double_type_I(O("so", "11^3,3^2,1"), 11)
    with pytest.raises(InvalidPivot):
        induce_double_type_I(O("so", "11,8^2,3"), 11)  # r_8 != 0


def test_sl_block_examples():
    chain, blocks = sl_block_step(O("sl", "9,6"), 3)
    assert chain.flag_type == (6, 6, 3)
    assert [str(s.levi_orbit) for s in chain.steps] == ["3^2", "3^2", "3"]
    chain, _ = sl_block_step(O("sl", "4"), 2)
    assert chain.flag_type == (2, 2)
    assert [str(s.levi_orbit) for s in chain.steps] == ["2", "2"]
    chain, _ = sl_block_step(O("sl", "2"), 2)
    assert chain.flag_type == (2,)
    with pytest.raises(InvalidCoverDegree):
        sl_block_step(O("sl", "4"), 3)


def test_sl_block_repeats_f_times():
    chain, b = sl_block_step(O("sl", "4^2"), 2)
    # dual [2^4], gcd 4, e = 2, f = 2, blocks [2]
    assert (b.f, b.blocks) == (2, (2,))
    assert chain.flag_type == (4, 4)


def test_chain_flag_palindrome():
    o = O("sp", "6^2,4^2")
    s1 = induce_type_I(o, 4)
    s2 = induce_type_II(s1.target, 4)
    s3 = induce_type_II(s2.target, 2)
    chain = InductionChain.from_steps(o, [s1, s2, s3])
    assert chain.flag_type == (4, 1, 3, 4, 3, 1, 4)
    assert chain.tail.partition == P("1^4")


def test_step_roundtrip():
    o = O("so", "3^2")
    for s in (induce_type_II(o, 3), induce_type_I(O("sp", "6^2,4^2"), 4),
              induce_double_type_I(O("so", "15,8^2,3"), 15)):
        assert InductionStep.from_dict(s.to_dict()) == s


def _all_steps(n):
    for alg in (Algebra.SP, Algebra.SO):
        for o in iter_orbits(alg, n):
            p = o.partition
            for g in gap_members(p):
                yield induce_type_I(o, g)
            parity = 0 if alg is Algebra.SP else 1
            for v, k in p.parts:
                if k == 2 and v % 2 == parity:
                    yield induce_type_II(o, v)
            if alg is Algebra.SO:
                for i in p.members():
                    if double_type_I_eligible(p, i):
                        try:
                            yield induce_double_type_I(o, i)
                        except InvalidPivot:
                            pass  # source not rather odd


@pytest.mark.parametrize("n", range(1, 15))
def test_step_invariants_exhaustive(n):
    for s in _all_steps(n):
        m, mt = s.source.size, s.target.size
        per = 4 if s.kind is StepKind.DOUBLE_TYPE_I else 2
        assert m - mt == per * s.block
        assert jordan_ok(s.source.algebra.value, s.target.partition.to_list())
        assert s.springer_degree in (1, 2)
        if s.springer_degree == 2:
            assert s.kind is StepKind.TYPE_II
        if s.kind is StepKind.TYPE_II:
            a0, b0, _ = counts(s.source.partition)
            a1, b1, _ = counts(s.target.partition)
            if s.source.algebra is Algebra.SP:
                assert b1 == b0 - 1
            else:
                assert a1 == a0 - 1
