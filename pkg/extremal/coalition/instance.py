"""Coalition instances, class partitions and the instance file format.

Instance files start with ``n k r``; each further line ``i: s1 s2 ... sk``
fixes the friend list of child ``i``.  Children without a line are left open.
"""

from __future__ import annotations

from collections.abc import Iterable, Iterator, Mapping
from dataclasses import dataclass, field
from pathlib import Path

from pydantic import BaseModel, ConfigDict, Field, ValidationError, model_validator

from extremal.core.errors import InfeasibleParameters, InvalidInputError, MalformedPartition
from extremal.graphs import Digraph


class CoalitionInstance(BaseModel):
    """n children listing k friends each; children ``0..r-1`` form the coalition R."""

    model_config = ConfigDict(frozen=True)

    n: int = Field(..., ge=2, description="Number of children")
    k: int = Field(..., ge=1, description="Size of every friend list")
    r: int = Field(..., ge=1, description="Coalition size; R = {0, ..., r-1}")
    choices: dict[int, tuple[int, ...]] = Field(
        default_factory=dict, description="Fixed friend lists, keyed by child"
    )

    @model_validator(mode="after")
    def validate_lists(self) -> CoalitionInstance:
        """Every fixed list has k distinct friends in range, never the child itself."""
        if self.n < self.k + 1:
            raise ValueError(f"n={self.n} must be at least k+1={self.k + 1}")
        if self.r > self.n:
            raise ValueError(f"coalition size r={self.r} exceeds n={self.n}")
        for child, friends in self.choices.items():
            if not 0 <= child < self.n:
                raise ValueError(f"child {child} out of range")
            if len(set(friends)) != self.k or len(friends) != self.k:
                raise ValueError(f"child {child} must list exactly {self.k} distinct friends")
            if child in friends:
                raise ValueError(f"child {child} lists itself")
            if any(not 0 <= f < self.n for f in friends):
                raise ValueError(f"child {child} lists a friend out of range")
        return self

    @classmethod
    def build(
        cls, n: int, k: int, r: int, choices: Mapping[int, Iterable[int]] | None = None
    ) -> CoalitionInstance:
        """Validated constructor that reports problems as :class:`InvalidInputError`."""
        lists = {i: tuple(sorted(s)) for i, s in (choices or {}).items()}
        try:
            return cls(n=n, k=k, r=r, choices=lists)
        except ValidationError as exc:
            raise InvalidInputError(str(exc)) from exc

    @property
    def coalition(self) -> frozenset[int]:
        return frozenset(range(self.r))

    def choice(self, child: int) -> frozenset[int]:
        try:
            return frozenset(self.choices[child])
        except KeyError:
            raise InfeasibleParameters(f"child {child} has no fixed friend list") from None

    def is_complete(self) -> bool:
        return len(self.choices) == self.n

    def open_children(self) -> list[int]:
        return [j for j in range(self.n) if j not in self.choices]

    def coalition_only(self) -> CoalitionInstance:
        """The same instance with every list outside R removed."""
        missing = [i for i in range(self.r) if i not in self.choices]
        if missing:
            raise InvalidInputError(f"coalition members {missing} have no friend list")
        kept = {i: s for i, s in self.choices.items() if i < self.r}
        return CoalitionInstance(n=self.n, k=self.k, r=self.r, choices=kept)

    def with_choices(self, extra: Mapping[int, Iterable[int]]) -> CoalitionInstance:
        merged = dict(self.choices)
        merged.update({j: tuple(sorted(s)) for j, s in extra.items()})
        return CoalitionInstance.build(self.n, self.k, self.r, merged)

    def digraph(self) -> Digraph:
        """Arc ``i -> j`` for every ``j`` in ``S_i``; every out-degree is k."""
        if not self.is_complete():
            raise InfeasibleParameters(f"children {self.open_children()} have open lists")
        return Digraph(self.n, [self.choices[i] for i in range(self.n)])


@dataclass(frozen=True, slots=True)
class PartitionResult:
    """Disjoint classes covering ``0..n-1``.

    ``completed`` holds the full instance the partition was built against
    when the builder chose the open friend lists.
    """

    parts: tuple[frozenset[int], ...]
    completed: CoalitionInstance | None = field(default=None, compare=False)

    @classmethod
    def of(
        cls, parts: Iterable[Iterable[int]], completed: CoalitionInstance | None = None
    ) -> PartitionResult:
        frozen = tuple(frozenset(p) for p in parts)
        return cls(tuple(sorted(frozen, key=lambda p: min(p, default=-1))), completed)

    def __iter__(self) -> Iterator[frozenset[int]]:
        return iter(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def part_of(self) -> dict[int, int]:
        return {v: index for index, part in enumerate(self.parts) for v in part}

    def splits(self, vertices: Iterable[int]) -> bool:
        """True iff ``vertices`` meet at least two classes."""
        owner = self.part_of()
        return len({owner[v] for v in vertices}) > 1

    def check_cover(self, n: int) -> None:
        seen: set[int] = set()
        for part in self.parts:
            if not part:
                raise MalformedPartition("partition contains an empty class")
            if not seen.isdisjoint(part):
                raise MalformedPartition(f"classes overlap on {sorted(seen & part)}")
            seen |= part
        if seen != set(range(n)):
            raise MalformedPartition(f"classes cover {len(seen)} of {n} children")

    def as_lists(self) -> list[list[int]]:
        return [sorted(p) for p in self.parts]


def verify_partition(inst: CoalitionInstance, pr: PartitionResult) -> bool:
    """Every child has a listed friend inside its own class."""
    pr.check_cover(inst.n)
    for part in pr.parts:
        for child in part:
            if inst.choice(child).isdisjoint(part):
                return False
    return True


def parse_instance(text: str) -> CoalitionInstance:
    stripped = (line.split("#", 1)[0].strip() for line in text.splitlines())
    lines = [line for line in stripped if line]
    if not lines:
        raise InvalidInputError("empty instance file")
    try:
        n, k, r = (int(token) for token in lines[0].split())
    except ValueError as exc:
        raise InvalidInputError(f"bad header {lines[0]!r}, expected 'n k r'") from exc
    choices: dict[int, list[int]] = {}
    for line in lines[1:]:
        head, sep, tail = line.partition(":")
        if not sep:
            raise InvalidInputError(f"bad choice line {line!r}, expected 'i: s1 ... sk'")
        try:
            child = int(head)
            friends = [int(token) for token in tail.split()]
        except ValueError as exc:
            raise InvalidInputError(f"bad choice line {line!r}") from exc
        if child in choices:
            raise InvalidInputError(f"child {child} listed twice")
        choices[child] = friends
    return CoalitionInstance.build(n, k, r, choices)


def load_instance(path: Path) -> CoalitionInstance:
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise InvalidInputError(f"cannot read {path}: {exc}") from exc
    return parse_instance(text)


def format_instance(inst: CoalitionInstance) -> str:
    lines = [f"{inst.n} {inst.k} {inst.r}"]
    for child in sorted(inst.choices):
        lines.append(f"{child}: " + " ".join(str(f) for f in inst.choices[child]))
    return "\n".join(lines) + "\n"
