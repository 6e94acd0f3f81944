"""Reference cases with expected report fragments, and a subset matcher."""
from __future__ import annotations

import json
from dataclasses import dataclass
from importlib import resources
from pathlib import Path
from typing import Any, Optional

from .partition import OrbitId
from .report import report_to_dict
from .terminalization import build
from .topology import parse_cover


@dataclass(frozen=True)
class CorpusCase:
    name: str
    algebra: str
    partition: str
    cover: str
    expected: dict

    @classmethod
    def from_dict(cls, data: dict) -> "CorpusCase":
        inp = data["input"]
        return cls(data["name"], inp["algebra"], inp["partition"], inp.get("cover", "universal"), data["expected"])


def load_corpus(path: Optional[str] = None) -> list[CorpusCase]:
    if path is None:
        text = resources.files("nilcover").joinpath("data/corpus.json").read_text()
    else:
        text = Path(path).read_text()
    data = json.loads(text)
    if not isinstance(data, list):
        raise ValueError("corpus must be a JSON array of cases")
    return [CorpusCase.from_dict(c) for c in data]


def subset_diff(expected: Any, actual: Any, where: str = "") -> list[str]:
    """Differences between ``expected`` and the matching part of ``actual``.
    Dicts match on the expected keys only; everything else must be equal."""
    if isinstance(expected, dict):
        if not isinstance(actual, dict):
            return [f"{where or '.'}: expected an object, got {actual!r}"]
        out = []
        for k, v in expected.items():
            if k not in actual:
                out.append(f"{where}.{k}: missing")
            else:
                out.extend(subset_diff(v, actual[k], f"{where}.{k}"))
        return out
    if expected != actual:
        return [f"{where or '.'}: expected {expected!r}, got {actual!r}"]
    return []


def run_case(case: CorpusCase) -> list[str]:
    orbit = OrbitId.of(case.algebra, case.partition)
    report = build(orbit, parse_cover(case.cover, orbit))
    return subset_diff(case.expected, report_to_dict(report))
