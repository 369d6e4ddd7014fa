"""Finite universes, subsets stored as bitmasks, and soft sets over them."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Mapping


class IncompatibleOperands(ValueError):
    """Raised when two operands live over different universes or parameter sets."""


@dataclass(frozen=True)
class Universe:
    """An ordered collection of distinct, named alternatives."""

    elements: tuple[str, ...]

    def __init__(self, elements: Iterable[str]):
        elements = tuple(elements)
        if not elements:
            raise ValueError("universe must be non-empty")
        for name in elements:
            if not isinstance(name, str) or not name:
                raise ValueError(f"universe element names must be non-empty strings, got {name!r}")
        if len(set(elements)) != len(elements):
            raise ValueError("universe element names must be unique")
        object.__setattr__(self, "elements", elements)
        object.__setattr__(self, "_index", {name: i for i, name in enumerate(elements)})

    @classmethod
    def numbered(cls, size: int, prefix: str = "u") -> Universe:
        """``u1 .. u<size>``."""
        return cls(f"{prefix}{i}" for i in range(1, size + 1))

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self) -> Iterator[str]:
        return iter(self.elements)

    def index(self, name: str) -> int:
        try:
            return self._index[name]
        except KeyError:
            raise KeyError(f"unknown element {name!r}") from None

    @property
    def full_mask(self) -> int:
        return (1 << len(self.elements)) - 1

    def subset(self, names: Iterable[str] = ()) -> Subset:
        """Build a subset from element names."""
        bits = 0
        for name in names:
            bits |= 1 << self.index(name)
        return Subset(self, bits)

    def subset_of_indices(self, indices: Iterable[int]) -> Subset:
        bits = 0
        for i in indices:
            if not 0 <= i < len(self.elements):
                raise IndexError(f"element index {i} out of range for universe of size {len(self)}")
            bits |= 1 << i
        return Subset(self, bits)

    def empty(self) -> Subset:
        return Subset(self, 0)

    def full(self) -> Subset:
        return Subset(self, self.full_mask)

    def __repr__(self) -> str:
        return f"Universe({list(self.elements)!r})"


@dataclass(frozen=True)
class Subset:
    """A subset of a universe, held as an integer bitmask over element indices.

    Iteration yields element indices in ascending order, which is also the
    order used by :meth:`names` and by every serializer in the package.
    """

    universe: Universe
    bits: int = 0

    def __post_init__(self):
        if self.bits < 0 or self.bits >> len(self.universe):
            raise ValueError("subset bits reach outside the universe")

    def _check(self, other: Subset) -> None:
        if not isinstance(other, Subset):
            raise TypeError(f"expected Subset, got {type(other).__name__}")
        if other.universe is not self.universe and other.universe != self.universe:
            raise IncompatibleOperands("subsets belong to different universes")

    def __iter__(self) -> Iterator[int]:
        bits = self.bits
        i = 0
        while bits:
            if bits & 1:
                yield i
            bits >>= 1
            i += 1

    def __len__(self) -> int:
        return self.bits.bit_count()

    def __bool__(self) -> bool:
        return self.bits != 0

    def __contains__(self, item: int | str) -> bool:
        if isinstance(item, str):
            item = self.universe.index(item)
        return bool(self.bits >> item & 1)

    def names(self) -> list[str]:
        return [self.universe.elements[i] for i in self]

    def is_empty(self) -> bool:
        return self.bits == 0

    def is_full(self) -> bool:
        return self.bits == self.universe.full_mask

    def __or__(self, other: Subset) -> Subset:
        self._check(other)
        return Subset(self.universe, self.bits | other.bits)

    def __and__(self, other: Subset) -> Subset:
        self._check(other)
        return Subset(self.universe, self.bits & other.bits)

    def __sub__(self, other: Subset) -> Subset:
        self._check(other)
        return Subset(self.universe, self.bits & ~other.bits)

    def __invert__(self) -> Subset:
        return Subset(self.universe, self.universe.full_mask & ~self.bits)

    def __le__(self, other: Subset) -> bool:
        self._check(other)
        return self.bits & ~other.bits == 0

    def __ge__(self, other: Subset) -> bool:
        return other <= self

    def __lt__(self, other: Subset) -> bool:
        return self <= other and self.bits != other.bits

    def __gt__(self, other: Subset) -> bool:
        return other < self

    def __str__(self) -> str:
        return "{" + ",".join(self.names()) + "}"

    def __repr__(self) -> str:
        return f"Subset({str(self)})"


def subset_union(a: Subset, b: Subset) -> Subset:
    return a | b


def subset_intersect(a: Subset, b: Subset) -> Subset:
    return a & b


def subset_complement(a: Subset) -> Subset:
    return ~a


def subset_difference(a: Subset, b: Subset) -> Subset:
    return a - b


def is_subset(a: Subset, b: Subset) -> bool:
    return a <= b


def union_all(universe: Universe, subsets: Iterable[Subset]) -> Subset:
    """Union of ``subsets``; the empty union is the empty set."""
    bits = 0
    for s in subsets:
        bits |= s.bits
    return Subset(universe, bits)


def intersect_all(universe: Universe, subsets: Iterable[Subset]) -> Subset:
    """Intersection of ``subsets``; the empty intersection is the whole universe."""
    bits = universe.full_mask
    for s in subsets:
        bits &= s.bits
    return Subset(universe, bits)


@dataclass(frozen=True)
class SoftSet:
    """A parametrized family of subsets: each parameter maps to a subset.

    The approximate function is total; parameters missing from the mapping
    passed to the constructor map to the empty set.
    """

    universe: Universe
    parameters: tuple[str, ...]
    values: tuple[Subset, ...]

    def __init__(self, universe: Universe, parameters: Iterable[str],
                 approx: Mapping[str, Subset | Iterable[str]] | None = None):
        parameters = tuple(parameters)
        if len(set(parameters)) != len(parameters):
            raise ValueError("parameter names must be unique")
        approx = dict(approx or {})
        unknown = set(approx) - set(parameters)
        if unknown:
            raise KeyError(f"approximation given for unknown parameters {sorted(unknown)}")
        values = []
        for p in parameters:
            v = approx.get(p, ())
            if not isinstance(v, Subset):
                v = universe.subset(v)
            elif v.universe != universe:
                raise IncompatibleOperands(f"value of parameter {p!r} uses a different universe")
            values.append(v)
        object.__setattr__(self, "universe", universe)
        object.__setattr__(self, "parameters", parameters)
        object.__setattr__(self, "values", tuple(values))

    @classmethod
    def empty(cls, universe: Universe, parameters: Iterable[str]) -> SoftSet:
        return cls(universe, parameters)

    @classmethod
    def full(cls, universe: Universe, parameters: Iterable[str]) -> SoftSet:
        parameters = tuple(parameters)
        return cls(universe, parameters, {p: universe.full() for p in parameters})

    def __call__(self, parameter: str) -> Subset:
        try:
            return self.values[self.parameters.index(parameter)]
        except ValueError:
            raise KeyError(f"unknown parameter {parameter!r}") from None

    def items(self) -> list[tuple[str, Subset]]:
        return list(zip(self.parameters, self.values))

    def pairs(self) -> list[tuple[str, Subset]]:
        """The displayed form: parameters with an empty value are left out."""
        return [(p, v) for p, v in self.items() if v]

    def _zip(self, other: SoftSet):
        if self.universe != other.universe:
            raise IncompatibleOperands("soft sets belong to different universes")
        if self.parameters != other.parameters:
            raise IncompatibleOperands("soft sets use different parameter sets")
        return zip(self.values, other.values)

    def _with(self, values: Iterable[Subset]) -> SoftSet:
        return SoftSet(self.universe, self.parameters, dict(zip(self.parameters, values)))

    def to_dict(self) -> dict[str, list[str]]:
        return {p: v.names() for p, v in self.pairs()}

    @classmethod
    def from_dict(cls, universe: Universe, parameters: Iterable[str],
                  data: Mapping[str, Iterable[str]]) -> SoftSet:
        return cls(universe, parameters, data)

    def __str__(self) -> str:
        return "{" + ", ".join(f"({p},{v})" for p, v in self.pairs()) + "}"


def softset_union(s: SoftSet, t: SoftSet) -> SoftSet:
    return s._with(a | b for a, b in s._zip(t))


def softset_intersect(s: SoftSet, t: SoftSet) -> SoftSet:
    return s._with(a & b for a, b in s._zip(t))


def softset_complement(s: SoftSet) -> SoftSet:
    return s._with(~a for a in s.values)


def softset_difference(s: SoftSet, t: SoftSet) -> SoftSet:
    return s._with(a - b for a, b in s._zip(t))


def is_soft_subset(s: SoftSet, t: SoftSet) -> bool:
    return all(a <= b for a, b in s._zip(t))
