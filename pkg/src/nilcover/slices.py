"""Codimension-2 orbits in an orbit closure, their transverse slices, and how
the covers split over them."""
from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Optional

from .errors import UnsupportedHypotheses
from .partition import (
    Algebra,
    OrbitId,
    Partition,
    check_conditions,
    counts,
    gap_members,
    is_rather_odd,
    is_very_even,
)
from .topology import CoverKind, CoverSpec, cover_menu, require_in_menu


class SliceKind(str, Enum):
    A = "A"  # A_k surface singularity
    A1_UNION_A1 = "A1uA1"


@dataclass(frozen=True)
class Slice:
    kind: SliceKind
    k: int = 1

    def __post_init__(self):
        if self.kind is SliceKind.A and self.k < 1:
            raise ValueError("A_k needs k >= 1")

    def __str__(self) -> str:
        return "A1uA1" if self.kind is SliceKind.A1_UNION_A1 else f"A{self.k}"

    @property
    def branches(self) -> int:
        return 2 if self.kind is SliceKind.A1_UNION_A1 else 1

    @classmethod
    def parse(cls, text: str) -> "Slice":
        if text == "A1uA1":
            return cls(SliceKind.A1_UNION_A1)
        return cls(SliceKind.A, int(text[1:]))


A1 = Slice(SliceKind.A, 1)


class GapCase(str, Enum):
    """Which replacement rule produced a locus."""

    SL_SUBREGULAR = "sl"
    SIMPLE = "simple"  # sp under (i),(ii) and its so analogue
    EXCEPTIONAL = "exceptional"
    ODD_NEAR = "odd_near"  # odd gap, r_{i-2} != 0
    ODD_FAR = "odd_far"  # odd gap, r_{i-2} = 0
    EVEN_FAR = "even_far"  # even gap, r_{i-2} = 0
    EVEN_NEAR = "even_near"  # even gap, r_{i-2} != 0 (i = 2 included)


@dataclass(frozen=True)
class Codim2Locus:
    gap_member: int
    degeneration: Partition
    slice: Slice
    very_even_split: bool
    case: GapCase

    def to_dict(self) -> dict:
        return {
            "gap": self.gap_member,
            "degeneration": str(self.degeneration),
            "slice": str(self.slice),
            "very_even_split": self.very_even_split,
        }


def _replace(p: Partition, *delta: tuple[int, int]) -> Partition:
    mult = p.multiplicities()
    for v, k in delta:
        if v <= 0:
            continue
        mult[v] = mult.get(v, 0) + k
        if mult[v] < 0:
            raise AssertionError(f"negative multiplicity at {v} replacing in {p}")
    return Partition.from_multiplicities(mult)


def _supported(orbit: OrbitId) -> Optional[str]:
    """Name of the hypothesis set the orbit falls in, or None."""
    p = orbit.partition
    if orbit.algebra is Algebra.SL:
        return "sl_rectangular" if len(p.parts) == 1 else None
    cond = check_conditions(orbit)
    if orbit.algebra is Algebra.SP:
        return "sp_i_ii" if cond.cond_i and cond.cond_ii else None
    if is_rather_odd(p):
        return "so_rather_odd_i_iii" if cond.cond_i and cond.cond_iii else None
    return "so_i_ii" if cond.cond_i and cond.cond_ii else None


def is_exceptional_gap(p: Partition, i: int) -> bool:
    return i % 2 == 1 and i >= 5 and p.r(i - 1) == p.r(i - 2) == p.r(i - 3) == 0


def _so_rather_odd_locus(p: Partition, i: int) -> Codim2Locus:
    r = p.r
    if is_exceptional_gap(p, i):
        assert r(i) == 1 and r(i - 4) == 1, (p, i)
        deg = _replace(p, (i, -1), (i - 4, -1), (i - 2, 2))
        return Codim2Locus(i, deg, Slice(SliceKind.A, 3), is_very_even(deg), GapCase.EXCEPTIONAL)
    # a missing value 0 counts as present: the i = 2 and i = 3 boundary cases
    near = i == 2 or r(i - 2) != 0
    if i % 2 == 0:
        if near:
            deg = _replace(p, (i, -2), (i - 1, 4), (i - 2, -2))
            sl = A1 if is_very_even(p) else Slice(SliceKind.A1_UNION_A1)
            return Codim2Locus(i, deg, sl, is_very_even(deg), GapCase.EVEN_NEAR)
        deg = _replace(p, (i, -2), (i - 1, 3), (i - 3, -1))
        return Codim2Locus(i, deg, A1, is_very_even(deg), GapCase.EVEN_FAR)
    if near:
        deg = _replace(p, (i, -1), (i - 1, 2), (i - 2, -1))
        return Codim2Locus(i, deg, A1, is_very_even(deg), GapCase.ODD_NEAR)
    deg = _replace(p, (i, -1), (i - 2, 3), (i - 3, -2))
    return Codim2Locus(i, deg, A1, is_very_even(deg), GapCase.ODD_FAR)


def codim2_degenerations(orbit: OrbitId) -> list[Codim2Locus]:
    """One locus per gap member, for orbits in a supported hypothesis set:
    sl [d^i]; sp with (i),(ii); so rather odd with (i),(iii); so not rather
    odd with (i),(ii)."""
    kind = _supported(orbit)
    if kind is None:
        raise UnsupportedHypotheses(f"no slice classification for {orbit}")
    p = orbit.partition
    loci = []
    for i in gap_members(p):
        if kind == "sl_rectangular":
            deg = _replace(p, (i, -1), (i - 1, 1), (1, 1))
            loci.append(Codim2Locus(i, deg, Slice(SliceKind.A, i - 1), False, GapCase.SL_SUBREGULAR))
        elif kind == "so_rather_odd_i_iii":
            loci.append(_so_rather_odd_locus(p, i))
        else:
            # by (ii) the gap has the parity opposite to the constrained
            # members and i - 2 is a member (or 0)
            deg = _replace(p, (i, -1), (i - 1, 2), (i - 2, -1))
            split = orbit.algebra is Algebra.SO and is_very_even(deg)
            loci.append(Codim2Locus(i, deg, A1, split, GapCase.SIMPLE))
    return loci


class LocalModel(str, Enum):
    SMOOTH_C2 = "smooth_c2"
    A = "A"


@dataclass(frozen=True)
class CoverFiber:
    """The preimage of a transverse slice: ``copies`` components in total,
    each a ``local_model`` mapping with degree ``sheet_degree`` onto its
    branch of the slice."""

    copies: int
    local_model: LocalModel
    model_k: int
    sheet_degree: int
    branches: int

    def __str__(self) -> str:
        model = "C2" if self.local_model is LocalModel.SMOOTH_C2 else f"A{self.model_k}"
        return f"{self.copies} x {model}"


def _smooth(copies: int, sheet: int, branches: int = 1) -> CoverFiber:
    return CoverFiber(copies, LocalModel.SMOOTH_C2, 0, sheet, branches)


def _a1(copies: int, branches: int = 1, sheet: int = 1) -> CoverFiber:
    return CoverFiber(copies, LocalModel.A, 1, sheet, branches)


def cover_fiber_over_codim2(orbit: OrbitId, cover: CoverSpec, locus: Codim2Locus) -> CoverFiber:
    kind = _supported(orbit)
    if kind is None:
        raise UnsupportedHypotheses(f"no slice classification for {orbit}")
    require_in_menu(orbit, cover)
    deg = cover.degree
    a = counts(orbit.partition)[0]
    if kind == "sl_rectangular":
        # pi_1 of the slice minus the origin maps isomorphically onto pi_1 of
        # the orbit, so every cover stays connected over the slice
        d = locus.gap_member
        f = d // deg
        if f == 1:
            return _smooth(1, deg)
        return CoverFiber(1, LocalModel.A, f - 1, deg, 1)
    if kind in ("sp_i_ii", "so_i_ii"):
        return _smooth(deg // 2, 2)
    case = locus.case
    if cover.kind is CoverKind.UNIVERSAL:
        if case is GapCase.EXCEPTIONAL:
            return _smooth(2 ** (a - 2), 4)
        if case is GapCase.EVEN_NEAR and locus.slice.branches == 2:
            return _smooth(2 ** (max(a - 1, 0) + 1), 2, 2)
        return _smooth(2 ** max(a - 1, 0), 2)
    # Y-cover of a rather odd orbit
    if case is GapCase.ODD_NEAR:
        return _smooth(2 ** (a - 2), 2)
    if case is GapCase.EXCEPTIONAL:
        return CoverFiber(2 ** (a - 2), LocalModel.A, 1, 2, 1)
    if case is GapCase.EVEN_NEAR and locus.slice.branches == 2:
        return _a1(2 * deg, 2)
    return _a1(deg)


class TerminalStatus(str, Enum):
    TERMINAL = "terminal_codim_ge_4"
    NOT_ASSERTED = "not_asserted"


@dataclass(frozen=True)
class TerminalityVerdict:
    status: TerminalStatus
    reason: str

    def to_dict(self) -> dict:
        return {"status": self.status.value, "reason": self.reason}

    @classmethod
    def from_dict(cls, data: dict) -> "TerminalityVerdict":
        return cls(TerminalStatus(data["status"]), data["reason"])


def terminality_verdict(orbit: OrbitId, cover: CoverSpec) -> TerminalityVerdict:
    """Terminal singularities follow once the singular locus of the normal
    variety X has codimension >= 4; each rule below certifies that."""
    require_in_menu(orbit, cover)
    p = orbit.partition
    kind = _supported(orbit)
    universal = cover.degree == max(c.degree for c in cover_menu(orbit))
    if kind == "sl_rectangular" and universal:
        rule = "regular orbit" if p.parts[0][1] == 1 else "rectangular Jordan type"
        return TerminalityVerdict(TerminalStatus.TERMINAL, f"sl universal cover, {rule}")
    if kind == "sp_i_ii":
        return TerminalityVerdict(TerminalStatus.TERMINAL, "sp universal cover, conditions (i),(ii)")
    if kind == "so_i_ii":
        return TerminalityVerdict(TerminalStatus.TERMINAL, "so universal cover, not rather odd, conditions (i),(ii)")
    if kind == "so_rather_odd_i_iii":
        if cover.kind is CoverKind.UNIVERSAL:
            return TerminalityVerdict(
                TerminalStatus.TERMINAL, "so universal cover, rather odd, conditions (i),(iii)"
            )
        loci = codim2_degenerations(orbit)
        if all(l.case is GapCase.ODD_NEAR for l in loci):
            return TerminalityVerdict(
                TerminalStatus.TERMINAL, "so Y-cover, rather odd, every gap odd with r_{i-2} != 0"
            )
    return TerminalityVerdict(TerminalStatus.NOT_ASSERTED, "no hypothesis bundle matched")

