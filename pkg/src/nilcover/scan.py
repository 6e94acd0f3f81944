"""Exhaustive invariant scans over all small orbits."""
from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field
from typing import Iterable, Optional

from .errors import StrategyStuck, UnsupportedHypotheses
from .induction import (
    StepKind,
    double_type_I_eligible,
    induce_double_type_I,
    induce_type_I,
    induce_type_II,
    tracked_count,
)
from .partition import (
    Algebra,
    OrbitId,
    check_conditions,
    counts,
    dual,
    gap_members,
    is_rather_odd,
    is_valid_jordan_type,
    is_very_even,
    iter_orbits,
    iter_partitions,
)
from .slices import GapCase, codim2_degenerations, cover_fiber_over_codim2
from .terminalization import Crepant, build
from .topology import CoverKind, GroupKind, cover_menu, fundamental_group

DEFAULT_BOUND = 14


@dataclass(frozen=True)
class ScanConfig:
    max_size: int = 12
    bound: int = DEFAULT_BOUND
    # the sl crepant survey is reported separately for sizes up to this
    sl_crepant_max: int = 8
    max_examples: int = 5


@dataclass
class ScanSummary:
    config: ScanConfig
    checked: dict[str, int] = field(default_factory=lambda: defaultdict(int))
    violations: dict[str, int] = field(default_factory=lambda: defaultdict(int))
    examples: dict[str, list[str]] = field(default_factory=lambda: defaultdict(list))
    sl_crepant_exceptions: set[tuple[str, int]] = field(default_factory=set)

    def check(self, name: str, ok: bool, example: str = ""):
        self.checked[name] += 1
        if not ok:
            self.violations[name] += 1
            if len(self.examples[name]) < self.config.max_examples:
                self.examples[name].append(example)

    @property
    def total_violations(self) -> int:
        return sum(self.violations.values())

    def to_dict(self) -> dict:
        names = sorted(self.checked)
        return {
            "max_size": self.config.max_size,
            "invariants": {
                n: {"checked": self.checked[n], "violations": self.violations.get(n, 0),
                    "examples": self.examples.get(n, [])}
                for n in names
            },
            "sl_crepant_exceptions": [
                {"partition": p, "e": e} for p, e in sorted(self.sl_crepant_exceptions)
            ],
            "total_violations": self.total_violations,
        }


def expected_degrees(orbit: OrbitId, cover_kind: CoverKind, cover_degree: int) -> tuple[int, int, int]:
    """The degree ledger recomputed from the counts a, b and the number of
    multiplicity-2 members of the original partition, without building any
    chain. The inductions that precede the type II steps never change the
    multiplicities of the members they track, so those counts can be read off
    the input."""
    p = orbit.partition
    a, b, _ = counts(p)
    if orbit.algebra is Algebra.SL:
        return (cover_degree, 1, cover_degree)
    if orbit.algebra is Algebra.SP:
        e = sum(1 for v, k in p.parts if v % 2 == 0 and k == 2)
        return (2 ** b, 2 ** e, 2 ** (b - e))
    odd_mult = [k for v, k in p.parts if v % 2 == 1]
    if is_rather_odd(p) and cover_kind is CoverKind.UNIVERSAL:
        n = 2 ** (max(a - 1, 0) + 1)
        return (n, 1, n)
    e = sum(1 for k in odd_mult if k == 2)
    if any(k >= 3 for k in odd_mult):
        return (2 ** (a - 1), 2 ** e, 2 ** (a - e - 1))
    springer = 2 ** e if any(k == 1 for k in odd_mult) else 2 ** max(e - 1, 0)
    return (2 ** max(a - 1, 0), springer, 2 ** max(a - e - 1, 0))


def _steps_from(orbit: OrbitId):
    """Every single induction step available at the orbit."""
    p = orbit.partition
    if orbit.algebra is Algebra.SL:
        return
    for g in gap_members(p):
        yield induce_type_I(orbit, g)
    parity = 0 if orbit.algebra is Algebra.SP else 1
    for v, k in p.parts:
        if v % 2 == parity and k == 2:
            yield induce_type_II(orbit, v)
    if orbit.algebra is Algebra.SO and is_rather_odd(p):
        for i in p.members():
            if double_type_I_eligible(p, i):
                yield induce_double_type_I(orbit, i)


def _partition_invariants(s: ScanSummary, n: int):
    for p in iter_partitions(n):
        s.check("dual_involution", dual(dual(p)) == p, str(p))
        s.check("dual_size", dual(p).size == n, str(p))
        gaps = gap_members(p)
        s.check("gap_members_are_members", all(g in p.members() and p.r(g - 1) == 0 for g in gaps), str(p))
        if is_very_even(p):
            s.check("very_even_implies_rather_odd", is_rather_odd(p) and counts(p)[0] == 0, str(p))


def _orbit_invariants(s: ScanSummary, orbit: OrbitId):
    p = orbit.partition
    tag = str(orbit)
    alg = orbit.algebra
    if alg is not Algebra.SL:
        s.check("condition_i_automatic", check_conditions(orbit).cond_i, tag)
    cond = check_conditions(orbit)
    s.check(
        "witnesses_match_flags",
        all((not flag) == any(w[0] == name for w in cond.witnesses)
            for name, flag in (("i", cond.cond_i), ("ii", cond.cond_ii), ("iii", cond.cond_iii))),
        tag,
    )
    pi1 = fundamental_group(orbit)
    menu = cover_menu(orbit)
    universal = max(c.degree for c in menu)
    s.check("pi1_equals_universal_degree", pi1.order == universal, tag)
    s.check("menu_degrees_divide_pi1", all(pi1.order % c.degree == 0 for c in menu), tag)
    # outside sl a degree-1 entry is either a trivial pi_1 or the Y-cover
    # of a rather odd type with at most one odd member
    has_one = 1 in [c.degree for c in menu]
    if alg is Algebra.SL:
        s.check("degree_1_in_sl_menu", has_one, tag)
    else:
        s.check("degree_1_outside_sl_explained",
                not has_one or pi1.order == 1 or (is_rather_odd(p) and counts(p)[0] <= 1), tag)
    if alg is Algebra.SO:
        s.check("rather_odd_iff_central_ext", is_rather_odd(p) == (pi1.kind is GroupKind.CENTRAL_EXT_BY_2), tag)
    if alg is Algebra.SP:
        s.check("sp_pi1_is_2_to_b", pi1.order == 2 ** counts(p)[1], tag)

    for step in _steps_from(orbit):
        stag = f"{tag} {step.kind.value}@{step.pivot}"
        shrink = 4 * step.block if step.kind is StepKind.DOUBLE_TYPE_I else 2 * step.block
        s.check("step_size_conservation", step.target.size == orbit.size - shrink, stag)
        s.check("step_validity", is_valid_jordan_type(alg, step.target.partition), stag)
        s.check("springer_degree_2_only_type_II",
                step.springer_degree in (1, 2) and (step.springer_degree == 1 or step.kind is StepKind.TYPE_II), stag)
        before = tracked_count(alg, p)
        after = tracked_count(alg, step.target.partition)
        s.check("preserves_count_flag", step.preserves_count == (before == after), stag)
        if step.kind is StepKind.TYPE_I:
            # a merge can only happen at i - 2, and an sp part 2 vanishes
            i = step.pivot
            if alg is Algebra.SP:
                rule = not (i % 2 == 0 and (i == 2 or p.r(i - 2) > 0))
            else:
                rule = not (i % 2 == 1 and p.r(i - 2) > 0)
            s.check("type_I_preservation_rule", step.preserves_count == rule, stag)
        if step.kind is StepKind.TYPE_II:
            s.check("type_II_drops_count_by_1", after == before - 1, stag)
        if step.kind is StepKind.DOUBLE_TYPE_I:
            s.check("double_type_I_keeps_rather_odd", is_rather_odd(step.target.partition) and before == after, stag)

    for cover in menu:
        ctag = f"{tag} {cover}"
        try:
            r = build(orbit, cover)
        except StrategyStuck:
            s.check("no_strategy_stuck", False, ctag)
            continue
        s.check("no_strategy_stuck", True, ctag)
        d = r.degrees
        s.check("degree_ledger_product", d.cover_degree == d.springer_total * d.base_cover_degree, ctag)
        s.check("degree_ledger_oracle",
                d.as_tuple() == expected_degrees(orbit, cover.kind, cover.degree), ctag)
        s.check("cover_degree_matches_menu", d.cover_degree == cover.degree, ctag)
        s.check("flag_sum", sum(r.flag_type) == orbit.size, ctag)
        if alg is not Algebra.SL:
            s.check("flag_palindrome", tuple(r.flag_type) == tuple(reversed(r.flag_type)), ctag)
        steps = r.chain.steps
        s.check("chain_length_bound", len(steps) <= orbit.size // 2 or alg is Algebra.SL, ctag)
        s.check("sizes_strictly_decrease",
                all(st.target.size < st.source.size for st in steps) or alg is Algebra.SL, ctag)
        if alg is Algebra.SL:
            if cover.degree > 1 and orbit.size <= s.config.sl_crepant_max:
                if r.crepant_resolution.verdict is not Crepant.NO:
                    s.sl_crepant_exceptions.add((str(p), cover.degree))
            continue
        _stage_invariants(s, orbit, cover, r, ctag)


def _stage_invariants(s, orbit, cover, r, ctag):
    alg = orbit.algebra
    base = r.base
    steps = r.chain.steps
    bc = check_conditions(base) if base.partition else None
    if alg is Algebra.SP:
        s.check("sp_base_conditions", bc is None or (bc.cond_i and bc.cond_ii and bc.cond_iii), ctag)
    elif is_rather_odd(orbit.partition) and cover.kind is CoverKind.UNIVERSAL:
        s.check("so_rather_odd_base_conditions", bc is None or (bc.cond_i and bc.cond_iii), ctag)
    else:
        no_pivot = all(not (v % 2 == 1 and k == 2) for v, k in base.partition.parts)
        s.check("so_base_conditions", (bc is None or bc.cond_ii) and no_pivot, ctag)
    kinds = [st.kind for st in steps]
    # stage 1 before stage 2
    s.check("stages_ordered", kinds == sorted(kinds, key=lambda k: k is StepKind.TYPE_II), ctag)
    for st in steps:
        if st.kind in (StepKind.TYPE_I, StepKind.DOUBLE_TYPE_I):
            s.check("stage_1_preserves_count", st.preserves_count, ctag)
        else:
            before = tracked_count(alg, st.source.partition)
            s.check("stage_2_drops_count", tracked_count(alg, st.target.partition) == before - 1, ctag)
    parity = 0 if alg is Algebra.SP else 1
    e = sum(1 for v, k in orbit.partition.parts if v % 2 == parity and k == 2)
    if not (alg is Algebra.SO and is_rather_odd(orbit.partition) and cover.kind is CoverKind.UNIVERSAL):
        s.check("type_II_count_equals_e", kinds.count(StepKind.TYPE_II) == e, ctag)


def _slice_invariants(s: ScanSummary, orbit: OrbitId):
    try:
        loci = codim2_degenerations(orbit)
    except UnsupportedHypotheses:
        return
    tag = str(orbit)
    p = orbit.partition
    for l in loci:
        ltag = f"{tag} gap {l.gap_member}"
        s.check("degeneration_valid_same_size",
                l.degeneration.size == orbit.size and is_valid_jordan_type(orbit.algebra, l.degeneration), ltag)
        s.check("degeneration_differs", l.degeneration != p, ltag)
        if orbit.algebra is Algebra.SP:
            s.check("sp_gap_members_even", l.gap_member % 2 == 0, ltag)
        if l.case is GapCase.EXCEPTIONAL:
            i = l.gap_member
            s.check("exceptional_gap_shape", i % 2 == 1 and i >= 5 and p.r(i) == 1 and p.r(i - 4) == 1, ltag)
        for cover in cover_menu(orbit):
            f = cover_fiber_over_codim2(orbit, cover, l)
            s.check("fiber_degree_bound", f.copies * f.sheet_degree <= cover.degree * f.branches, ltag)


def run_scan(config: ScanConfig = ScanConfig(), algebras: Optional[Iterable[Algebra]] = None) -> ScanSummary:
    if config.max_size > config.bound:
        raise ValueError(f"max size {config.max_size} exceeds the configured bound {config.bound}")
    s = ScanSummary(config)
    algebras = list(algebras or Algebra)
    for n in range(1, config.max_size + 1):
        _partition_invariants(s, n)
        for alg in algebras:
            for orbit in iter_orbits(alg, n):
                _orbit_invariants(s, orbit)
                _slice_invariants(s, orbit)
    return s
