"""Partition arithmetic for Jordan types of classical nilpotent orbits."""
from __future__ import annotations

import re
from bisect import bisect_left
from dataclasses import dataclass, field
from enum import Enum
from functools import reduce
from math import gcd
from typing import Iterable, Iterator, Optional

from .errors import InvalidCoverDegree, InvalidOrbit, InvalidPartition


class Algebra(str, Enum):
    SL = "sl"
    SP = "sp"
    SO = "so"


class VeryEvenLabel(str, Enum):
    PLUS = "+"
    MINUS = "-"
    # chosen abstractly as the orbit a larger orbit is induced from
    INDUCED = "induced"


@dataclass(frozen=True)
class Partition:
    """Run-length encoded partition: ``parts`` is ((value, multiplicity), ...)
    with values strictly decreasing.

    The empty partition is allowed internally (targets of inductions that
    consume the whole space) but ``canonicalize`` and ``parse`` reject it.
    """

    parts: tuple[tuple[int, int], ...]
    _keys: tuple[int, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        parts = tuple((int(v), int(k)) for v, k in self.parts)
        for v, k in parts:
            if v < 1 or k < 1:
                raise InvalidPartition(f"non-positive value or multiplicity in {parts}")
        for (v1, _), (v2, _) in zip(parts, parts[1:]):
            if v1 <= v2:
                raise InvalidPartition(f"values not strictly decreasing in {parts}")
        object.__setattr__(self, "parts", parts)
        # ascending copy of the values for bisection
        object.__setattr__(self, "_keys", tuple(v for v, _ in reversed(parts)))

    @classmethod
    def from_list(cls, raw: Iterable[int]) -> "Partition":
        """Build from a flat list, allowing the empty list."""
        counts: dict[int, int] = {}
        for x in raw:
            x = int(x)
            if x < 1:
                raise InvalidPartition(f"non-positive part {x}")
            counts[x] = counts.get(x, 0) + 1
        return cls(tuple(sorted(counts.items(), reverse=True)))

    @classmethod
    def from_multiplicities(cls, mult: dict[int, int]) -> "Partition":
        return cls(tuple(sorted(((v, k) for v, k in mult.items() if k > 0 and v > 0), reverse=True)))

    @classmethod
    def parse(cls, text: str) -> "Partition":
        """Parse "6^2,4^2" or "6,6,4,4"; whitespace and brackets are ignored."""
        body = re.sub(r"[\s\[\]]", "", text)
        if not body:
            raise InvalidPartition("empty partition text")
        raw: list[int] = []
        for token in body.split(","):
            m = re.fullmatch(r"(\d+)(?:\^(\d+))?", token)
            if m is None:
                raise InvalidPartition(f"malformed part {token!r} in {text!r}")
            value, mult = int(m.group(1)), int(m.group(2) or 1)
            if value < 1 or mult < 1:
                raise InvalidPartition(f"non-positive part {token!r} in {text!r}")
            raw.extend([value] * mult)
        return cls.from_list(raw)

    def __str__(self) -> str:
        return ",".join(str(v) if k == 1 else f"{v}^{k}" for v, k in self.parts)

    def __iter__(self) -> Iterator[int]:
        for v, k in self.parts:
            for _ in range(k):
                yield v

    def __len__(self) -> int:
        return sum(k for _, k in self.parts)

    def __bool__(self) -> bool:
        return bool(self.parts)

    def to_list(self) -> list[int]:
        return list(self)

    @property
    def size(self) -> int:
        return sum(v * k for v, k in self.parts)

    @property
    def largest(self) -> int:
        return self.parts[0][0] if self.parts else 0

    @property
    def smallest(self) -> int:
        return self.parts[-1][0] if self.parts else 0

    def r(self, i: int) -> int:
        """Multiplicity of the value i (0 when absent)."""
        j = bisect_left(self._keys, i)
        if j < len(self._keys) and self._keys[j] == i:
            return self.parts[len(self._keys) - 1 - j][1]
        return 0

    def members(self) -> list[int]:
        return [v for v, _ in self.parts]

    def multiplicities(self) -> dict[int, int]:
        return dict(self.parts)


def canonicalize(raw: Iterable[int]) -> Partition:
    raw = list(raw)
    if not raw:
        raise InvalidPartition("empty partition")
    return Partition.from_list(raw)


def dual(p: Partition) -> Partition:
    """Conjugate partition: the k-th part counts parts of p that are >= k."""
    mult: dict[int, int] = {}
    # below each distinct value v (down to the next one) the column height is
    # the number of parts >= v
    height = 0
    values = p.members() + [0]
    for idx, (v, k) in enumerate(p.parts):
        height += k
        mult[height] = v - values[idx + 1]
    return Partition.from_multiplicities(mult)


def gap_members(p: Partition) -> list[int]:
    return [i for i in p.members() if i > 1 and p.r(i - 1) == 0]


def is_very_even(p: Partition) -> bool:
    return bool(p) and all(v % 2 == 0 for v in p.members())


def is_rather_odd(p: Partition) -> bool:
    return all(k == 1 for v, k in p.parts if v % 2 == 1)


def counts(p: Partition) -> tuple[int, int, int]:
    """(a, b, gcd_d): distinct odd members, distinct even members, gcd of parts."""
    a = sum(1 for v in p.members() if v % 2 == 1)
    b = sum(1 for v in p.members() if v % 2 == 0)
    return a, b, reduce(gcd, p.members(), 0)


def sl_block_decomposition(p: Partition, e: int) -> tuple[int, int, list[int]]:
    """Return (gcd_d, f, blocks) where the dual is [i_1^d, ..., i_r^d] and
    f = gcd_d / e. Blocks are descending."""
    d = counts(p)[2]
    if e < 1 or d % e:
        raise InvalidCoverDegree(f"cover degree {e} does not divide gcd {d} of {p}")
    blocks: list[int] = []
    for v, k in dual(p).parts:
        blocks.extend([v] * (k // d))
    return d, d // e, blocks


def is_valid_jordan_type(algebra: Algebra, p: Partition) -> bool:
    if algebra is Algebra.SL:
        return True
    if algebra is Algebra.SP:
        return all(k % 2 == 0 for v, k in p.parts if v % 2 == 1)
    return all(k % 2 == 0 for v, k in p.parts if v % 2 == 0)


@dataclass(frozen=True)
class OrbitId:
    """A nilpotent orbit: Lie type, Jordan type and, for very even SO types,
    a label. The ambient size is the partition sum."""

    algebra: Algebra
    partition: Partition
    very_even_label: Optional[VeryEvenLabel] = None

    def __post_init__(self):
        object.__setattr__(self, "algebra", Algebra(self.algebra))
        if self.very_even_label is not None:
            object.__setattr__(self, "very_even_label", VeryEvenLabel(self.very_even_label))
            if self.algebra is not Algebra.SO or not is_very_even(self.partition):
                raise InvalidOrbit("very even label on a partition that is not a very even so-type")

    @property
    def size(self) -> int:
        return self.partition.size

    @classmethod
    def of(cls, algebra, partition, label=None) -> "OrbitId":
        """Validated constructor for user input; very even SO types default
        to the + label."""
        algebra = Algebra(algebra)
        if isinstance(partition, str):
            partition = Partition.parse(partition)
        elif not isinstance(partition, Partition):
            partition = canonicalize(partition)
        if not partition:
            raise InvalidPartition("empty partition")
        if not is_valid_jordan_type(algebra, partition):
            raise InvalidPartition(f"{partition} is not a Jordan type in {algebra.value}")
        if algebra is Algebra.SO and is_very_even(partition) and label is None:
            label = VeryEvenLabel.PLUS
        return cls(algebra, partition, label)

    def __str__(self) -> str:
        tag = f"{self.very_even_label.value}" if self.very_even_label else ""
        return f"{self.algebra.value}({self.size})[{self.partition}]{tag}"


def validate_jordan_type(orbit: OrbitId) -> bool:
    return is_valid_jordan_type(orbit.algebra, orbit.partition) and (
        orbit.algebra is not Algebra.SP or orbit.size % 2 == 0
    )


@dataclass(frozen=True)
class ConditionReport:
    cond_i: bool
    cond_ii: bool
    cond_iii: bool
    witnesses: tuple[tuple[str, int], ...] = ()

    def to_dict(self) -> dict:
        return {
            "cond_i": self.cond_i,
            "cond_ii": self.cond_ii,
            "cond_iii": self.cond_iii,
            "witnesses": [list(w) for w in self.witnesses],
        }


def _missing_of_parity(p: Partition, start: int) -> list[int]:
    top = p.largest
    return [i for i in range(start, top + 1, 2) if p.r(i) == 0]


def _so_adjacency_witnesses(p: Partition) -> list[int]:
    bad = []
    members = p.members()
    for hi, lo in zip(members, members[1:]):
        gap = hi - lo
        if gap > 4 or (gap == 4 and (hi % 2 == 0 or lo % 2 == 0)):
            bad.append(hi)
    if members and members[-1] >= 4:
        bad.append(members[-1])
    return bad


def check_conditions(orbit: OrbitId) -> ConditionReport:
    """Conditions (i), (ii), (iii) for sp and so. For sl none of them is
    defined and the report is vacuously true."""
    p = orbit.partition
    if orbit.algebra is Algebra.SL:
        return ConditionReport(True, True, True)
    if orbit.algebra is Algebra.SP:
        w_i = [v for v, k in p.parts if v % 2 == 1 and k % 2 == 1]
        w_ii = _missing_of_parity(p, 2)
        w_iii = [v for v, k in p.parts if v % 2 == 0 and k == 2]
    else:
        w_i = [v for v, k in p.parts if v % 2 == 0 and k % 2 == 1]
        w_ii = _missing_of_parity(p, 1)
        w_iii = _so_adjacency_witnesses(p)
    witnesses = [("i", x) for x in w_i] + [("ii", x) for x in w_ii] + [("iii", x) for x in w_iii]
    return ConditionReport(not w_i, not w_ii, not w_iii, tuple(witnesses))


def iter_partitions(n: int, largest: Optional[int] = None) -> Iterator[Partition]:
    """All partitions of n >= 1, in reverse lexicographic order."""
    def rec(rest: int, cap: int) -> Iterator[list[int]]:
        if rest == 0:
            yield []
            return
        for head in range(min(rest, cap), 0, -1):
            for tail in rec(rest - head, head):
                yield [head] + tail

    for raw in rec(n, largest or n):
        yield Partition.from_list(raw)


def iter_orbits(algebra: Algebra, n: int) -> Iterator[OrbitId]:
    """Every orbit of the algebra with ambient size n. Very even so-types are
    listed once, with the + label; the label never changes combinatorics."""
    algebra = Algebra(algebra)
    if algebra is Algebra.SP and n % 2:
        return
    for p in iter_partitions(n):
        if is_valid_jordan_type(algebra, p):
            yield OrbitId.of(algebra, p)
