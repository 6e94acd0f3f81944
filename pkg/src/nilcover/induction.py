"""Single induction steps: each rewrites a Jordan type into the Jordan type of
a smaller Levi orbit it is induced from, together with the flag block the
parabolic contributes and the degree of the generalized Springer map."""
from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Optional

from .errors import InvalidOrbit, InvalidPivot
from .partition import (
    Algebra,
    OrbitId,
    Partition,
    VeryEvenLabel,
    check_conditions,
    counts,
    gap_members,
    is_rather_odd,
    is_very_even,
    sl_block_decomposition,
)


class StepKind(str, Enum):
    TYPE_I = "type_I"
    TYPE_II = "type_II"
    DOUBLE_TYPE_I = "double_type_I"
    SL_BLOCK = "sl_block"


TYPE_II_NOTE = "block r = 1 + sum of r_j over j > pivot (agrees with the worked flags)"


@dataclass(frozen=True)
class InductionStep:
    """``block`` is r for type I/II, s for double type I (flag block 2s) and
    i*e for an sl block. For sl blocks ``target`` is the gl-block orbit."""

    kind: StepKind
    pivot: int
    block: int
    source: OrbitId
    target: OrbitId
    springer_degree: int
    preserves_count: bool = True
    levi_orbit: Optional[Partition] = None
    note: str = ""

    @property
    def flag_block(self) -> int:
        return 2 * self.block if self.kind is StepKind.DOUBLE_TYPE_I else self.block

    def to_dict(self) -> dict:
        return {
            "kind": self.kind.value,
            "pivot": self.pivot,
            "block": self.block,
            "target": str(self.target.partition),
            "springer_degree": self.springer_degree,
            "source": str(self.source.partition),
            "source_label": self.source.very_even_label.value if self.source.very_even_label else None,
            "algebra": self.source.algebra.value,
            "target_label": self.target.very_even_label.value if self.target.very_even_label else None,
            "preserves_count": self.preserves_count,
            "levi_orbit": None if self.levi_orbit is None else str(self.levi_orbit),
            "note": self.note,
        }

    @classmethod
    def from_dict(cls, data: dict) -> "InductionStep":
        kind = StepKind(data["kind"])
        algebra = Algebra(data["algebra"])
        source = _orbit_from_text(algebra, data["source"], data.get("source_label"))
        target = _orbit_from_text(algebra, data["target"], data.get("target_label"))
        levi = data.get("levi_orbit")
        return cls(
            kind,
            int(data["pivot"]),
            int(data["block"]),
            source,
            target,
            int(data["springer_degree"]),
            bool(data.get("preserves_count", True)),
            None if levi is None else Partition.parse(levi),
            data.get("note", ""),
        )


def _orbit_from_text(algebra: Algebra, text: str, label) -> OrbitId:
    p = Partition.parse(text) if text else Partition(())
    return OrbitId(algebra, p, label)


def _target(algebra: Algebra, p: Partition, label) -> OrbitId:
    if algebra is Algebra.SO and is_very_even(p):
        return OrbitId(algebra, p, label)
    return OrbitId(algebra, p)


def _shift(p: Partition, threshold: int, amount: int, strict: bool = False) -> Partition:
    """Subtract ``amount`` from every part >= threshold (> when strict);
    parts that reach 0 are dropped."""
    raw = []
    for v in p:
        if v > threshold or (v == threshold and not strict):
            v -= amount
        if v > 0:
            raw.append(v)
    return Partition.from_list(raw)


def tracked_count(algebra: Algebra, p: Partition) -> int:
    """b for sp, a for so."""
    a, b, _ = counts(p)
    return b if algebra is Algebra.SP else a


def _require_classical(orbit: OrbitId):
    if orbit.algebra is Algebra.SL:
        raise InvalidOrbit("type I/II inductions are defined for sp and so")


def induce_type_I(orbit: OrbitId, gap: int) -> InductionStep:
    _require_classical(orbit)
    p = orbit.partition
    if gap not in gap_members(p):
        raise InvalidPivot(f"{gap} is not a gap member of {p}")
    block = sum(k for v, k in p.parts if v >= gap)
    q = _shift(p, gap, 2)
    # the very even label of the source (if any) is inherited by the target
    target = _target(orbit.algebra, q, orbit.very_even_label or VeryEvenLabel.INDUCED)
    keeps = tracked_count(orbit.algebra, q) == tracked_count(orbit.algebra, p)
    return InductionStep(StepKind.TYPE_I, gap, block, orbit, target, 1, keeps, Partition(((1, block),)))


def induce_type_II(orbit: OrbitId, pivot: int) -> InductionStep:
    _require_classical(orbit)
    p = orbit.partition
    parity = 0 if orbit.algebra is Algebra.SP else 1
    if pivot < 1 or pivot % 2 != parity or p.r(pivot) != 2:
        kind = "even" if parity == 0 else "odd"
        raise InvalidPivot(f"{pivot} is not an {kind} member of multiplicity 2 in {p}")
    block = 1 + sum(k for v, k in p.parts if v > pivot)
    raw = [v - 2 if v > pivot else v for v in p if v != pivot] + [pivot - 1] * 2
    q = Partition.from_list(v for v in raw if v > 0)
    degree = 2
    if orbit.algebra is Algebra.SO and (is_very_even(q) or orbit.size == 2 * block):
        degree = 1
    target = _target(orbit.algebra, q, VeryEvenLabel.INDUCED)
    keeps = tracked_count(orbit.algebra, q) == tracked_count(orbit.algebra, p)
    levi = Partition(((1, block),))
    return InductionStep(StepKind.TYPE_II, pivot, block, orbit, target, degree, keeps, levi, TYPE_II_NOTE)


def double_type_I_eligible(p: Partition, i: int) -> bool:
    if p.r(i) == 0:
        return False
    if i % 2 == 1:
        return i >= 5 and all(p.r(i - k) == 0 for k in range(1, 5))
    return i >= 4 and all(p.r(i - k) == 0 for k in range(1, 4))


def induce_double_type_I(orbit: OrbitId, gap: int) -> InductionStep:
    if orbit.algebra is not Algebra.SO:
        raise InvalidOrbit("double type I inductions are defined for so")
    p = orbit.partition
    if not is_rather_odd(p) or not check_conditions(orbit).cond_i:
        raise InvalidPivot(f"{p} is not rather odd with (i)")
    if not double_type_I_eligible(p, gap):
        raise InvalidPivot(f"{gap} is not a long gap member of {p}")
    s = sum(k for v, k in p.parts if v >= gap)
    q = _shift(p, gap, 4)
    target = _target(Algebra.SO, q, orbit.very_even_label or VeryEvenLabel.INDUCED)
    keeps = tracked_count(Algebra.SO, q) == tracked_count(Algebra.SO, p)
    return InductionStep(StepKind.DOUBLE_TYPE_I, gap, s, orbit, target, 1, keeps, Partition(((2, s),)))


@dataclass(frozen=True)
class InductionChain:
    """``tail`` is the orbit left in the smallest algebra (None for sl)."""

    steps: tuple[InductionStep, ...]
    flag_type: tuple[int, ...]
    tail: Optional[OrbitId] = None

    @classmethod
    def from_steps(cls, orbit: OrbitId, steps) -> "InductionChain":
        steps = tuple(steps)
        if orbit.algebra is Algebra.SL:
            return cls(steps, tuple(s.block for s in steps), None)
        tail = steps[-1].target if steps else orbit
        head = [s.flag_block for s in steps]
        middle = [tail.size] if tail.size else []
        return cls(steps, tuple(head + middle + head[::-1]), tail)

    def to_dict(self) -> dict:
        return {"steps": [s.to_dict() for s in self.steps], "flag_type": list(self.flag_type)}


@dataclass(frozen=True)
class SlBlocks:
    gcd: int
    e: int
    f: int
    blocks: tuple[int, ...]


def sl_block_step(orbit: OrbitId, e: int) -> tuple[InductionChain, SlBlocks]:
    """The sl chain fragment for the cyclic cover of degree e: one step per
    Levi block, i*e each, f = gcd/e consecutive copies per dual block."""
    if orbit.algebra is not Algebra.SL:
        raise InvalidOrbit("sl block steps are defined for sl")
    d, f, blocks = sl_block_decomposition(orbit.partition, e)
    steps = []
    for i in blocks:
        levi = Partition(((e, i),))
        for _ in range(f):
            steps.append(
                InductionStep(StepKind.SL_BLOCK, i, i * e, orbit, OrbitId(Algebra.SL, levi), 1, True, levi)
            )
    return InductionChain.from_steps(orbit, steps), SlBlocks(d, e, f, tuple(blocks))
