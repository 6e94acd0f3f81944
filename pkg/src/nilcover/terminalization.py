"""Q-factorial terminalizations of covers of nilpotent orbit closures.

A terminalization is described by a chain of inductions (which fixes the
parabolic's flag type), the Levi orbit left at the end, the cover of that
base used in the fibre, and the degree ledger

    deg(cover) = deg(generalized Springer map) * deg(base cover).
"""
from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from math import prod
from typing import Optional, Sequence

from .errors import InvalidStrategy, StrategyStuck
from .induction import (
    InductionChain,
    InductionStep,
    StepKind,
    double_type_I_eligible,
    induce_double_type_I,
    induce_type_I,
    induce_type_II,
    sl_block_step,
)
from .partition import (
    Algebra,
    OrbitId,
    Partition,
    check_conditions,
    counts,
    gap_members,
    is_rather_odd,
)
from .slices import TerminalityVerdict, TerminalStatus, terminality_verdict
from .topology import (
    CoverKind,
    CoverSpec,
    QFactorial,
    cover_menu,
    q_factorial_hypothesis,
    q_factorial_verdict,
    require_in_menu,
    universal_cover,
    y_cover,
)


class StageKind(str, Enum):
    TYPE_I = "type_I"
    TYPE_II = "type_II"
    DOUBLE_TYPE_I = "double_type_I"


@dataclass(frozen=True)
class Strategy:
    """``explicit`` replays ``steps``, a sequence of (kind, pivot) pairs."""

    mode: str = "canonical"
    steps: tuple[tuple[StepKind, int], ...] = ()

    @classmethod
    def explicit(cls, steps: Sequence) -> "Strategy":
        return cls("explicit", tuple((StepKind(k), int(i)) for k, i in steps))


CANONICAL = Strategy()


def canonical_strategy(stage: StageKind, candidates: Sequence[InductionStep]) -> Optional[int]:
    """Largest admissible pivot; type I stages only admit count-preserving
    steps. None when nothing is admissible."""
    if stage is StageKind.TYPE_I:
        candidates = [c for c in candidates if c.preserves_count]
    if not candidates:
        return None
    return max(c.pivot for c in candidates)


class BaseCover(str, Enum):
    UNIVERSAL = "universal"
    Y_COVER = "y_cover"
    PRODUCT_MOD_H = "product_mod_h"


class CoveringGroupKind(str, Enum):
    TRIVIAL = "trivial"
    S_Z_F = "s_z_f"  # S(Z^f) inside the centre of SL(e)^f
    KERNEL_H = "kernel_h"  # kernel of prod mu_{i e} -> mu_e, t -> prod t^i
    SUM_KERNEL_2 = "sum_kernel_2"  # kernel of the sum (Z/2)^{k+1} -> Z/2


@dataclass(frozen=True)
class CoveringGroupDescriptor:
    kind: CoveringGroupKind
    e: int = 1
    f: int = 1
    blocks: tuple[int, ...] = ()
    k: int = 0

    @property
    def order(self) -> int:
        if self.kind is CoveringGroupKind.TRIVIAL:
            return 1
        if self.kind is CoveringGroupKind.S_Z_F:
            return self.e ** (self.f - 1)
        if self.kind is CoveringGroupKind.SUM_KERNEL_2:
            return 2 ** self.k
        return self.e ** (len(self.blocks) - 1) * prod(self.blocks)

    def to_dict(self) -> dict:
        out: dict = {"kind": self.kind.value, "order": self.order}
        if self.kind is CoveringGroupKind.S_Z_F:
            out.update(e=self.e, f=self.f)
        elif self.kind is CoveringGroupKind.KERNEL_H:
            out.update(e=self.e, blocks=list(self.blocks))
        elif self.kind is CoveringGroupKind.SUM_KERNEL_2:
            out.update(k=self.k)
        return out

    @classmethod
    def from_dict(cls, data: dict) -> "CoveringGroupDescriptor":
        kind = CoveringGroupKind(data["kind"])
        return cls(kind, data.get("e", 1), data.get("f", 1), tuple(data.get("blocks", ())), data.get("k", 0))


TRIVIAL_GROUP = CoveringGroupDescriptor(CoveringGroupKind.TRIVIAL)


@dataclass(frozen=True)
class Degrees:
    cover_degree: int
    springer_total: int
    base_cover_degree: int

    def as_tuple(self) -> tuple[int, int, int]:
        return (self.cover_degree, self.springer_total, self.base_cover_degree)


class Crepant(str, Enum):
    YES = "yes"
    NO = "no"
    UNKNOWN = "unknown"


@dataclass(frozen=True)
class CrepantVerdict:
    verdict: Crepant
    reason: str

    def to_dict(self) -> dict:
        return {"verdict": self.verdict.value, "reason": self.reason}

    @classmethod
    def from_dict(cls, data: dict) -> "CrepantVerdict":
        return cls(Crepant(data["verdict"]), data["reason"])


@dataclass(frozen=True)
class LeviBlock:
    """A gl factor of the Levi: its size and the orbit carried there."""

    size: int
    orbit: Partition


@dataclass(frozen=True)
class BaseFactor:
    """One factor of the fibre over the zero section: a cover of degree
    ``cover_degree`` of the closure of ``orbit`` in its simple factor."""

    algebra: Algebra
    orbit: Partition
    cover_degree: int
    q_factorial: bool
    terminal: bool
    smooth: Optional[bool]


@dataclass(frozen=True)
class TerminalizationReport:
    orbit: OrbitId
    cover: CoverSpec
    chain: InductionChain
    flag_type: tuple[int, ...]
    levi_blocks: tuple[LeviBlock, ...]
    base: Optional[OrbitId]
    base_cover: BaseCover
    covering_group: CoveringGroupDescriptor
    degrees: Degrees
    q_factorial: QFactorial
    terminal: TerminalityVerdict
    crepant_resolution: CrepantVerdict
    base_factors: tuple[BaseFactor, ...] = field(default=(), compare=False, repr=False)


def degree_ledger(report: TerminalizationReport) -> tuple[int, int, int]:
    d = report.degrees
    if d.cover_degree != d.springer_total * d.base_cover_degree:
        raise AssertionError(f"degree ledger broken for {report.orbit}: {d.as_tuple()}")
    return d.as_tuple()


# -- pi_1 orders, valid also for the empty partition (a point) -------------

def _universal_degree(algebra: Algebra, p: Partition) -> int:
    a, b, d = counts(p)
    if algebra is Algebra.SP:
        return 2 ** b
    if algebra is Algebra.SL:
        return max(d, 1)
    extra = 1 if is_rather_odd(p) else 0
    return 2 ** (max(a - 1, 0) + extra)


def _y_degree(p: Partition) -> int:
    return 2 ** max(counts(p)[0] - 1, 0)


# -- canonical pipelines ---------------------------------------------------

def _has_pivot_of_mult_2(algebra: Algebra, p: Partition) -> list[int]:
    parity = 0 if algebra is Algebra.SP else 1
    return [v for v, k in p.parts if v % 2 == parity and k == 2]


def _run_stage(orbit, steps, stage, done, make_candidates):
    cur = steps[-1].target if steps else orbit
    while not done(cur):
        cands = make_candidates(cur)
        pivot = canonical_strategy(stage, cands)
        if pivot is None:
            raise StrategyStuck(f"no admissible {stage.value} step at {cur}", steps)
        step = next(c for c in cands if c.pivot == pivot)
        steps.append(step)
        cur = step.target
    return cur


def _canonical_steps(orbit: OrbitId, cover: CoverSpec) -> list[InductionStep]:
    steps: list[InductionStep] = []
    alg = orbit.algebra

    def type_I(cur):
        return [induce_type_I(cur, g) for g in gap_members(cur.partition)]

    def type_II(cur):
        return [induce_type_II(cur, v) for v in _has_pivot_of_mult_2(alg, cur.partition)]

    def cond_ii(cur):
        return not cur.partition or check_conditions(cur).cond_ii

    def no_pivot(cur):
        return not _has_pivot_of_mult_2(alg, cur.partition)

    if alg is Algebra.SO and is_rather_odd(orbit.partition) and cover.kind is CoverKind.UNIVERSAL:
        def double(cur):
            p = cur.partition
            return [induce_double_type_I(cur, i) for i in p.members() if double_type_I_eligible(p, i)]

        def cond_iii(cur):
            return not cur.partition or check_conditions(cur).cond_iii

        _run_stage(orbit, steps, StageKind.DOUBLE_TYPE_I, cond_iii, double)
        return steps
    _run_stage(orbit, steps, StageKind.TYPE_I, cond_ii, type_I)
    _run_stage(orbit, steps, StageKind.TYPE_II, no_pivot, type_II)
    return steps


def _replay(orbit: OrbitId, strategy: Strategy) -> list[InductionStep]:
    steps: list[InductionStep] = []
    cur = orbit
    makers = {
        StepKind.TYPE_I: induce_type_I,
        StepKind.TYPE_II: induce_type_II,
        StepKind.DOUBLE_TYPE_I: induce_double_type_I,
    }
    for kind, pivot in strategy.steps:
        if kind not in makers:
            raise InvalidStrategy(f"{kind.value} steps cannot be given explicitly")
        step = makers[kind](cur, pivot)
        steps.append(step)
        cur = step.target
    return steps


# -- assembling the report ---------------------------------------------------

def _orbit_factor(algebra: Algebra, p: Partition, base_cover: BaseCover) -> BaseFactor:
    """The tail factor, with the verdicts the orbit-level rules give."""
    if not p or all(v == 1 for v in p.members()):
        # a point
        deg = _y_degree(p) if base_cover is BaseCover.Y_COVER else _universal_degree(algebra, p)
        return BaseFactor(algebra, p, deg, True, True, True)
    orbit = OrbitId.of(algebra, p)
    cover = y_cover(orbit) if base_cover is BaseCover.Y_COVER else universal_cover(orbit)
    q = q_factorial_hypothesis(orbit) is not None
    terminal = terminality_verdict(orbit, cover).status is TerminalStatus.TERMINAL
    smooth = True if (algebra is Algebra.SP and p.parts == ((2, 1),)) else None
    return BaseFactor(algebra, p, cover.degree, q, terminal, smooth)


def _gl_factor(block: LeviBlock, e: int) -> BaseFactor:
    """Universal cover of [e^i] in sl(i e): Q-factorial and terminal."""
    p = block.orbit
    smooth = True if e == 1 or p.parts == ((2, 1),) else None
    return BaseFactor(Algebra.SL, p, e, True, True, smooth)


def _finish(orbit, cover, chain, levi_blocks, base, base_cover, group, degrees, factors, explicit):
    if degrees.cover_degree != degrees.springer_total * degrees.base_cover_degree:
        msg = f"degree ledger fails for {orbit}: {degrees.as_tuple()}"
        if explicit:
            raise InvalidStrategy(msg)
        raise AssertionError(msg)
    certified_q = all(f.q_factorial for f in factors)
    q = q_factorial_verdict(orbit, cover, certified_construction=certified_q)
    how = "quotient of a product of " if group.order > 1 else ""
    if all(f.terminal for f in factors):
        terminal = TerminalityVerdict(
            TerminalStatus.TERMINAL, f"bundle over {how}terminal base factors with Q-factorial fibre"
        )
    else:
        terminal = TerminalityVerdict(TerminalStatus.NOT_ASSERTED, "a base factor is not certified terminal")
    crepant = _crepant(orbit, cover, group, factors)
    return TerminalizationReport(
        orbit, cover, chain, chain.flag_type, tuple(levi_blocks), base, base_cover, group, degrees,
        q, terminal, crepant, tuple(factors),
    )


def _crepant(orbit, cover, group, factors) -> CrepantVerdict:
    if orbit.algebra is Algebra.SL:
        if cover.degree == 1:
            return CrepantVerdict(Crepant.YES, "trivial cover: the bundle over the zero Levi orbit is smooth")
        if orbit.partition.parts == ((2, 1),):
            return CrepantVerdict(Crepant.YES, "double cover of the regular orbit in sl(2) is C^2")
        return CrepantVerdict(Crepant.NO, "sl: no nontrivial cover other than C^2 -> [2] has a crepant resolution")
    if group.order == 1 and all(f.smooth for f in factors):
        return CrepantVerdict(Crepant.YES, "every base factor is smooth")
    return CrepantVerdict(Crepant.UNKNOWN, "smoothness of the base is not decided")


def _build_sl(orbit: OrbitId, cover: CoverSpec) -> TerminalizationReport:
    e = cover.degree
    chain, sl = sl_block_step(orbit, e)
    levi = [LeviBlock(s.block, s.levi_orbit) for s in chain.steps]
    if e == 1:
        group = TRIVIAL_GROUP
    elif all(i == 1 for i in sl.blocks):
        group = CoveringGroupDescriptor(CoveringGroupKind.S_Z_F, e=e, f=sl.f)
    else:
        expanded = tuple(i for i in sl.blocks for _ in range(sl.f))
        group = CoveringGroupDescriptor(CoveringGroupKind.KERNEL_H, e=e, blocks=expanded)
    factors = [_gl_factor(b, e) for b in levi]
    # H contains the kernel of prod mu_{i e} -> prod mu_e, which acts trivially
    effective = group.order // prod(i for i in group.blocks) if group.kind is CoveringGroupKind.KERNEL_H else group.order
    base_degree = prod(f.cover_degree for f in factors) // effective
    degrees = Degrees(e, 1, base_degree)
    kind = BaseCover.UNIVERSAL if effective == 1 else BaseCover.PRODUCT_MOD_H
    return _finish(orbit, cover, chain, levi, None, kind, group, degrees, factors, False)


def build(orbit: OrbitId, cover: Optional[CoverSpec] = None, strategy: Strategy = CANONICAL) -> TerminalizationReport:
    if cover is None:
        cover = universal_cover(orbit)
    require_in_menu(orbit, cover)
    if orbit.algebra is Algebra.SL:
        if strategy.mode == "explicit" and strategy.steps:
            raise InvalidStrategy("sl terminalizations have no choices to replay")
        return _build_sl(orbit, cover)

    explicit = strategy.mode == "explicit"
    steps = _replay(orbit, strategy) if explicit else _canonical_steps(orbit, cover)
    chain = InductionChain.from_steps(orbit, steps)
    tail = chain.tail
    kinds = {s.kind for s in steps}
    levi = [LeviBlock(s.flag_block, s.levi_orbit) for s in steps]
    springer = prod(s.springer_degree for s in steps)
    double_pipeline = orbit.algebra is Algebra.SO and is_rather_odd(orbit.partition) and cover.kind is CoverKind.UNIVERSAL

    if double_pipeline:
        if kinds - {StepKind.DOUBLE_TYPE_I}:
            raise InvalidStrategy("a rather odd so orbit with its universal cover admits only double type I steps")
        k = len(steps)
        group = CoveringGroupDescriptor(CoveringGroupKind.SUM_KERNEL_2, k=k) if k else TRIVIAL_GROUP
        base_cover = BaseCover.PRODUCT_MOD_H if k else BaseCover.UNIVERSAL
        gl = [_gl_factor(b, 2) for b in levi]
        tail_factor = _orbit_factor(Algebra.SO, tail.partition, BaseCover.UNIVERSAL)
        factors = gl + [tail_factor]
        base_degree = prod(f.cover_degree for f in factors) // (2 ** k)
    else:
        if StepKind.DOUBLE_TYPE_I in kinds:
            raise InvalidStrategy("double type I steps belong to the rather odd universal pipeline")
        group = TRIVIAL_GROUP
        if orbit.algebra is Algebra.SO and is_rather_odd(tail.partition):
            base_cover = BaseCover.Y_COVER
        else:
            base_cover = BaseCover.UNIVERSAL
        factors = [_orbit_factor(orbit.algebra, tail.partition, base_cover)]
        base_degree = factors[0].cover_degree
    degrees = Degrees(cover.degree, springer, base_degree)
    return _finish(orbit, cover, chain, levi, tail, base_cover, group, degrees, factors, explicit)


def build_all_covers(orbit: OrbitId) -> list[TerminalizationReport]:
    return [build(orbit, c) for c in cover_menu(orbit)]
