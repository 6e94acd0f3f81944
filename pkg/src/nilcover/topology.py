"""Fundamental groups of nilpotent orbits and the covers of their closures."""
from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Optional

from .errors import InvalidCover, InvalidOrbit
from .partition import (
    Algebra,
    OrbitId,
    counts,
    is_rather_odd,
    validate_jordan_type,
)


class GroupKind(str, Enum):
    CYCLIC = "cyclic"
    ELEM_ABELIAN_2 = "elem_abelian_2"
    CENTRAL_EXT_BY_2 = "central_ext_by_2"


@dataclass(frozen=True)
class FiniteGroupDescriptor:
    """Structure of pi_1 of an orbit. A central extension by Z/2 is recorded
    by its quotient rank only; the extension class is not determined."""

    kind: GroupKind
    param: int

    @property
    def order(self) -> int:
        if self.kind is GroupKind.CYCLIC:
            return self.param
        if self.kind is GroupKind.ELEM_ABELIAN_2:
            return 2 ** self.param
        return 2 ** (self.param + 1)

    def to_dict(self) -> dict:
        return {"kind": self.kind.value, "param": self.param, "order": self.order}

    @classmethod
    def from_dict(cls, data: dict) -> "FiniteGroupDescriptor":
        return cls(GroupKind(data["kind"]), int(data["param"]))


class CoverKind(str, Enum):
    UNIVERSAL = "universal"
    CYCLIC_SL = "cyclic"
    Y_COVER = "ycover"


@dataclass(frozen=True)
class CoverSpec:
    kind: CoverKind
    degree: int
    e: Optional[int] = None  # cyclic sl covers only

    def __str__(self) -> str:
        if self.kind is CoverKind.CYCLIC_SL:
            return f"cyclic:{self.e}"
        return self.kind.value

    def to_dict(self) -> dict:
        return {"kind": self.kind.value, "param": self.e, "degree": self.degree}

    @classmethod
    def from_dict(cls, data: dict) -> "CoverSpec":
        return cls(CoverKind(data["kind"]), int(data["degree"]), data.get("param"))


def _require_valid(orbit: OrbitId):
    if not validate_jordan_type(orbit) or not orbit.partition:
        raise InvalidOrbit(f"{orbit} is not a valid nilpotent orbit")


def fundamental_group(orbit: OrbitId) -> FiniteGroupDescriptor:
    _require_valid(orbit)
    a, b, d = counts(orbit.partition)
    if orbit.algebra is Algebra.SL:
        return FiniteGroupDescriptor(GroupKind.CYCLIC, d)
    if orbit.algebra is Algebra.SP:
        return FiniteGroupDescriptor(GroupKind.ELEM_ABELIAN_2, b)
    if is_rather_odd(orbit.partition):
        return FiniteGroupDescriptor(GroupKind.CENTRAL_EXT_BY_2, max(a - 1, 0))
    return FiniteGroupDescriptor(GroupKind.ELEM_ABELIAN_2, max(a - 1, 0))


def universal_cover(orbit: OrbitId) -> CoverSpec:
    """For sl the universal cover is the cyclic cover of degree gcd_d."""
    order = fundamental_group(orbit).order
    if orbit.algebra is Algebra.SL:
        return CoverSpec(CoverKind.CYCLIC_SL, order, order)
    return CoverSpec(CoverKind.UNIVERSAL, order)


def y_cover(orbit: OrbitId) -> CoverSpec:
    if orbit.algebra is not Algebra.SO or not is_rather_odd(orbit.partition):
        raise InvalidCover(f"no Y-cover distinct from the universal cover for {orbit}")
    a = counts(orbit.partition)[0]
    return CoverSpec(CoverKind.Y_COVER, 2 ** max(a - 1, 0))


def cyclic_cover(orbit: OrbitId, e: int) -> CoverSpec:
    if orbit.algebra is not Algebra.SL:
        raise InvalidCover("cyclic covers are listed for sl orbits only")
    d = counts(orbit.partition)[2]
    if e < 1 or d % e:
        raise InvalidCover(f"cyclic degree {e} does not divide gcd {d}")
    return CoverSpec(CoverKind.CYCLIC_SL, e, e)


def cover_menu(orbit: OrbitId) -> list[CoverSpec]:
    _require_valid(orbit)
    if orbit.algebra is Algebra.SL:
        d = counts(orbit.partition)[2]
        return [CoverSpec(CoverKind.CYCLIC_SL, e, e) for e in range(1, d + 1) if d % e == 0]
    menu = [universal_cover(orbit)]
    if orbit.algebra is Algebra.SO and is_rather_odd(orbit.partition):
        menu.append(y_cover(orbit))
    return menu


def parse_cover(text: Optional[str], orbit: OrbitId) -> CoverSpec:
    """'universal' (default), 'cyclic:<e>' or 'ycover'."""
    text = (text or "universal").strip().lower()
    if text == "universal":
        return universal_cover(orbit)
    if text == "ycover":
        return y_cover(orbit)
    if text.startswith("cyclic:"):
        try:
            e = int(text.split(":", 1)[1])
        except ValueError:
            raise InvalidCover(f"malformed cover {text!r}") from None
        return cyclic_cover(orbit, e)
    raise InvalidCover(f"unknown cover {text!r}")


def require_in_menu(orbit: OrbitId, cover: CoverSpec):
    if cover not in cover_menu(orbit):
        raise InvalidCover(f"{cover} (degree {cover.degree}) is not a cover of {orbit}")


class QFactorial(str, Enum):
    YES = "yes"
    VIA_CONSTRUCTION = "via_construction"
    UNKNOWN = "unknown"


def q_factorial_hypothesis(orbit: OrbitId) -> Optional[str]:
    """Name of the rule making every etale cover Q-factorial, or None."""
    p = orbit.partition
    if orbit.algebra is Algebra.SL:
        if len(p.parts) <= 1:
            return "sl: Jordan type [d^i]"
        return None
    parity = 0 if orbit.algebra is Algebra.SP else 1
    offending = [v for v, k in p.parts if v % 2 == parity and k == 2]
    if offending:
        return None
    kind = "even" if parity == 0 else "odd"
    return f"{orbit.algebra.value}: no {kind} member of multiplicity 2"


def q_factorial_verdict(orbit: OrbitId, cover: CoverSpec, certified_construction: bool = False) -> QFactorial:
    """Q-factoriality of the cover X itself.

    ``certified_construction`` is set by the terminalization builder when the
    object it built is Q-factorial by the quotient and bundle rules even though
    no direct hypothesis applies.
    """
    require_in_menu(orbit, cover)
    if q_factorial_hypothesis(orbit) is not None:
        return QFactorial.YES
    if certified_construction:
        return QFactorial.VIA_CONSTRUCTION
    return QFactorial.UNKNOWN
