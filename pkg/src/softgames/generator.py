"""Seeded random soft games built on SplitMix64, reproducible across implementations."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

from .game import NPersonGame, PayoffTable, TwoPersonGame
from .softset import Subset, Universe

MASK64 = (1 << 64) - 1

CONSTRAINTS = ("none", "disjoint", "universal", "disjoint_universal")


class UnsupportedConstraint(ValueError):
    pass


class SplitMix64:
    """The SplitMix64 generator (Steele, Lea and Flood)."""

    __slots__ = ("state", "draws")

    def __init__(self, seed: int):
        self.state = seed & MASK64
        self.draws = 0

    def next(self) -> int:
        self.state = (self.state + 0x9E3779B97F4A7C15) & MASK64
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
        self.draws += 1
        return z ^ (z >> 31)


def threshold(p: Fraction | str | float) -> int:
    """floor(p * 2**64); a draw below it counts as a success."""
    p = Fraction(p)
    if not 0 <= p <= 1:
        raise ValueError(f"probability must lie in [0, 1], got {p}")
    return (p.numerator << 64) // p.denominator


def random_subset(rng: SplitMix64, universe: Universe, p: Fraction | str = Fraction(1, 2)) -> Subset:
    """Include each element when its draw falls below ``p``; uses exactly ``len(universe)`` draws."""
    cut = threshold(p)
    bits = 0
    for i in range(len(universe)):
        if rng.next() < cut:
            bits |= 1 << i
    return Subset(universe, bits)


@dataclass(frozen=True)
class GenSpec:
    seed: int
    universe_size: int
    dims: tuple[int, ...]
    constraint: str = "none"
    inclusion_prob: Fraction = Fraction(1, 2)

    def __post_init__(self):
        object.__setattr__(self, "dims", tuple(self.dims))
        object.__setattr__(self, "inclusion_prob", Fraction(self.inclusion_prob))
        object.__setattr__(self, "constraint", self.constraint.replace("-", "_"))
        if not 0 <= self.seed <= MASK64:
            raise ValueError("seed must be an unsigned 64-bit integer")
        if self.universe_size < 1:
            raise ValueError("universe_size must be at least 1")
        if len(self.dims) < 2 or any(d < 1 for d in self.dims):
            raise ValueError(f"dims need at least two players with at least one strategy each, got {self.dims}")
        if self.constraint not in CONSTRAINTS:
            raise ValueError(f"constraint must be one of {CONSTRAINTS}, got {self.constraint!r}")
        if self.constraint != "none" and len(self.dims) > 2:
            raise UnsupportedConstraint(f"constraint {self.constraint!r} is only defined for two players")
        threshold(self.inclusion_prob)


def _cell_pair(rng: SplitMix64, universe: Universe, constraint: str, cut: int) -> tuple[int, int]:
    a = b = 0
    for i in range(len(universe)):
        bit = 1 << i
        if constraint == "disjoint_universal":
            if rng.next() < cut:
                a |= bit
            else:
                b |= bit
            continue
        first, second = rng.next(), rng.next()
        if constraint == "disjoint":
            # player 1, else player 2, else nobody
            if first < cut:
                a |= bit
            elif second < cut:
                b |= bit
        else:
            # both players, else player 1 alone, else player 2 alone
            if first < cut:
                a |= bit
                b |= bit
            elif second < cut:
                a |= bit
            else:
                b |= bit
    return a, b


def random_game(spec: GenSpec) -> TwoPersonGame | NPersonGame:
    """A random game; two players give a bimatrix ``TwoPersonGame``.

    Cells are drawn in row-major joint-action order; within one joint action
    the players are filled in index order.
    """
    rng = SplitMix64(spec.seed)
    universe = Universe.numbered(spec.universe_size)
    cut = threshold(spec.inclusion_prob)
    n = len(spec.dims)
    cells: list[list[Subset]] = [[] for _ in range(n)]
    for _ in itertools.product(*(range(d) for d in spec.dims)):
        if spec.constraint == "none":
            for k in range(n):
                cells[k].append(random_subset(rng, universe, spec.inclusion_prob))
        else:
            a, b = _cell_pair(rng, universe, spec.constraint, cut)
            cells[0].append(Subset(universe, a))
            cells[1].append(Subset(universe, b))
    tables = [PayoffTable(universe, spec.dims, c) for c in cells]
    prefixes = "xyz" if n <= 3 else None
    labels = []
    for k, d in enumerate(spec.dims):
        p = prefixes[k] if prefixes else f"s{k + 1}_"
        labels.append(tuple(f"{p}{i}" for i in range(1, d + 1)))
    if n == 2:
        return TwoPersonGame(universe, labels[0], labels[1], tables[0], tables[1])
    return NPersonGame(universe, tuple(labels), tuple(tables))


def draws_needed(spec: GenSpec) -> int:
    """Number of RNG draws ``random_game(spec)`` consumes."""
    cells = 1
    for d in spec.dims:
        cells *= d
    per_element = {"none": len(spec.dims), "disjoint_universal": 1}.get(spec.constraint, 2)
    return cells * spec.universe_size * per_element
