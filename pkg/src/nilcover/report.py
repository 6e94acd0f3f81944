"""JSON and text rendering of terminalization reports."""
from __future__ import annotations

import json
from math import prod
from typing import Optional

from .induction import InductionChain, InductionStep
from .partition import Algebra, OrbitId, Partition, VeryEvenLabel
from .slices import TerminalityVerdict
from .terminalization import (
    BaseCover,
    CoveringGroupDescriptor,
    CoveringGroupKind,
    CrepantVerdict,
    Degrees,
    LeviBlock,
    TerminalizationReport,
)
from .topology import CoverSpec, QFactorial

SCHEMA = 1


def orbit_to_dict(orbit: Optional[OrbitId]) -> Optional[dict]:
    if orbit is None:
        return None
    return {
        "algebra": orbit.algebra.value,
        "size": orbit.size,
        "partition": str(orbit.partition),
        "very_even_label": orbit.very_even_label.value if orbit.very_even_label else None,
    }


def orbit_from_dict(data: Optional[dict]) -> Optional[OrbitId]:
    if data is None:
        return None
    text = data["partition"]
    p = Partition.parse(text) if text else Partition(())
    label = data.get("very_even_label")
    orbit = OrbitId(Algebra(data["algebra"]), p, VeryEvenLabel(label) if label else None)
    if orbit.size != data["size"]:
        raise ValueError(f"size {data['size']} does not match partition {text}")
    return orbit


def report_to_dict(report: TerminalizationReport) -> dict:
    d = report.degrees
    return {
        "schema": SCHEMA,
        "orbit": orbit_to_dict(report.orbit),
        "cover": report.cover.to_dict(),
        "chain": report.chain.to_dict(),
        "flag_type": list(report.flag_type),
        "levi_blocks": [{"size": b.size, "orbit": str(b.orbit)} for b in report.levi_blocks],
        "base": orbit_to_dict(report.base),
        "base_cover": report.base_cover.value,
        "covering_group": report.covering_group.to_dict(),
        "degrees": {
            "cover_degree": d.cover_degree,
            "springer_total": d.springer_total,
            "base_cover_degree": d.base_cover_degree,
        },
        "q_factorial": report.q_factorial.value,
        "terminal": report.terminal.to_dict(),
        "crepant_resolution": report.crepant_resolution.to_dict(),
    }


def report_from_dict(data: dict) -> TerminalizationReport:
    if data.get("schema") != SCHEMA:
        raise ValueError(f"unsupported report schema {data.get('schema')!r}")
    chain = InductionChain(
        tuple(InductionStep.from_dict(s) for s in data["chain"]["steps"]),
        tuple(data["chain"]["flag_type"]),
        None,
    )
    base = orbit_from_dict(data["base"])
    chain = InductionChain(chain.steps, chain.flag_type, base)
    return TerminalizationReport(
        orbit=orbit_from_dict(data["orbit"]),
        cover=CoverSpec.from_dict(data["cover"]),
        chain=chain,
        flag_type=tuple(data["flag_type"]),
        levi_blocks=tuple(LeviBlock(b["size"], Partition.parse(b["orbit"])) for b in data["levi_blocks"]),
        base=base,
        base_cover=BaseCover(data["base_cover"]),
        covering_group=CoveringGroupDescriptor.from_dict(data["covering_group"]),
        degrees=Degrees(**data["degrees"]),
        q_factorial=QFactorial(data["q_factorial"]),
        terminal=TerminalityVerdict.from_dict(data["terminal"]),
        crepant_resolution=CrepantVerdict.from_dict(data["crepant_resolution"]),
    )


def render_json(report: TerminalizationReport, **extra) -> str:
    out = report_to_dict(report)
    out.update(extra)
    return json.dumps(out, indent=2)


def parse_json(text: str) -> TerminalizationReport:
    return report_from_dict(json.loads(text))


def _bracket(p: Partition) -> str:
    return f"[{p}]"


def describe_base(report: TerminalizationReport) -> str:
    """Human-readable fibre over the zero section, e.g. "C^2" or
    "(X[2] x X[2^3] x X[7,4^2,3]) / H"."""
    group = report.covering_group
    if report.orbit.algebra is Algebra.SL:
        names = [_factor_name(Algebra.SL, b.orbit, "X") for b in report.levi_blocks]
    else:
        names = [_factor_name(Algebra.SL, b.orbit, "X") for b in report.levi_blocks if b.orbit.largest > 1]
        letter = "Y" if report.base_cover is BaseCover.Y_COVER else "X"
        names.append(_factor_name(report.orbit.algebra, report.base.partition, letter))
    names = [n for n in names if n != "point"] or ["point"]
    body = " x ".join(names)
    effective = group.order
    if group.kind is CoveringGroupKind.KERNEL_H:
        # the part of H inside prod mu_i acts trivially
        effective //= prod(group.blocks)
    if effective > 1:
        return f"({body}) / H" if len(names) > 1 else f"{body} / H"
    return body


def _factor_name(algebra: Algebra, p: Partition, letter: str) -> str:
    if not p or p.largest == 1:
        return "point"
    if p.parts == ((2, 1),) and algebra in (Algebra.SL, Algebra.SP):
        return "C^2"
    return f"{letter}{_bracket(p)}"


def render_text(report: TerminalizationReport) -> str:
    d = report.degrees
    g = report.covering_group
    lines = [
        f"orbit: {report.orbit.algebra.value}({report.orbit.size}) {_bracket(report.orbit.partition)}"
        + (f" label {report.orbit.very_even_label.value}" if report.orbit.very_even_label else ""),
        f"cover: {report.cover} degree {report.cover.degree}",
        "chain:",
    ]
    for n, s in enumerate(report.chain.steps, 1):
        lines.append(
            f"  {n}. {s.kind.value} pivot {s.pivot} block {s.block} -> {_bracket(s.target.partition)}"
            f" springer_degree {s.springer_degree}"
        )
    if not report.chain.steps:
        lines.append("  (no steps)")
    lines += [
        "flag_type: " + " ".join(str(x) for x in report.flag_type),
        "levi_blocks: " + (" ".join(f"gl({b.size}){_bracket(b.orbit)}" for b in report.levi_blocks) or "none"),
        "base: " + ("none" if report.base is None else
                    f"{report.base.algebra.value}({report.base.size}) {_bracket(report.base.partition)}"),
        f"base_cover: {report.base_cover.value}",
        f"base_object: {describe_base(report)}",
        f"covering_group: {g.kind.value} order {g.order}",
        f"degrees: cover_degree {d.cover_degree} springer_total {d.springer_total} base_cover_degree {d.base_cover_degree}",
        f"q_factorial: {report.q_factorial.value}",
        f"terminal: {report.terminal.status.value} ({report.terminal.reason})",
        f"crepant_resolution: {report.crepant_resolution.verdict.value} ({report.crepant_resolution.reason})",
    ]
    return "\n".join(lines)
