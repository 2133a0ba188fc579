"""Equivalence relations on the ground set and their closure approximations."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import EmptyList, MixedGroundSizes
from .filtration import FiltrationSeq
from .topology import Topology, closure


def _canonical(labels: Iterable) -> tuple:
    seen: dict = {}
    return tuple(seen.setdefault(lab, len(seen)) for lab in labels)


@dataclass(frozen=True)
class Partition:
    n: int
    block_of: tuple

    def __post_init__(self):
        if len(self.block_of) != self.n:
            raise ValueError("block_of must have one entry per point")
        object.__setattr__(self, "block_of", _canonical(self.block_of))

    @classmethod
    def from_blocks(cls, n: int, blocks: Iterable[Iterable[int]]) -> "Partition":
        labels: list = [None] * n
        for b, block in enumerate(blocks):
            for x in block:
                if not 0 <= x < n or labels[x] is not None:
                    raise ValueError(f"point {x} is out of range or listed twice")
                labels[x] = b
        if None in labels:
            raise ValueError("blocks do not cover the ground set")
        return cls(n, tuple(labels))

    @classmethod
    def identity(cls, n: int) -> "Partition":
        return cls(n, tuple(range(n)))

    @classmethod
    def one_block(cls, n: int) -> "Partition":
        return cls(n, (0,) * n)

    def block_masks(self) -> list[int]:
        masks = [0] * (max(self.block_of, default=-1) + 1)
        for x, b in enumerate(self.block_of):
            masks[b] |= 1 << x
        return masks

    def blocks(self) -> list[list[int]]:
        out: list[list[int]] = [[] for _ in range(max(self.block_of, default=-1) + 1)]
        for x, b in enumerate(self.block_of):
            out[b].append(x)
        return out

    def related(self, x: int, y: int) -> bool:
        return self.block_of[x] == self.block_of[y]

    def refines(self, other: "Partition") -> bool:
        """True if every block of self sits inside a block of ``other``."""
        _same_n(self, other)
        return all(
            other.block_of[x] == other.block_of[y]
            for x in range(self.n) for y in range(self.n) if self.related(x, y)
        )

    def to_dict(self) -> dict:
        return {"n": self.n, "blocks": self.blocks()}


def partition_from_dict(record: dict) -> Partition:
    return Partition.from_blocks(int(record["n"]), record["blocks"])


def all_partitions(n: int):
    """Every partition of ``range(n)`` as restricted growth strings."""
    def grow(prefix: list[int], top: int):
        if len(prefix) == n:
            yield Partition(n, tuple(prefix))
            return
        for b in range(top + 2):
            yield from grow(prefix + [b], max(top, b))
    yield from grow([], -1)


def _same_n(a, b) -> None:
    if a.n != b.n:
        raise MixedGroundSizes(f"{a.n} != {b.n}")


def approx(E: Partition, T: Topology) -> Partition:
    """Identify points whose E-classes have the same T-closure."""
    _same_n(E, T)
    cls = [closure(T, m) for m in E.block_masks()]
    return Partition(E.n, tuple(cls[b] for b in E.block_of))


def approx_chain(E: Partition, seq: FiltrationSeq) -> list[Partition]:
    _same_n(E, seq)
    return [approx(E, t) for t in seq.stages]


def relation_meet(ps: Sequence[Partition]) -> Partition:
    """Intersection of the relations: x, y together iff together in every input."""
    if not ps:
        raise EmptyList("relation_meet needs at least one partition")
    n = ps[0].n
    for p in ps:
        _same_n(p, ps[0])
    return Partition(n, tuple(tuple(p.block_of[x] for p in ps) for x in range(n)))


def classes_open(E: Partition, T: Topology) -> bool:
    _same_n(E, T)
    return all(T.is_open(m) for m in E.block_masks())
