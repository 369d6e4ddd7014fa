"""Soft game containers, payoff access, classification predicates and preferences."""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass
from typing import Callable, Iterable, Iterator, Sequence

from .softset import IncompatibleOperands, Subset, Universe

JointAction = tuple[int, ...]


class GameError(ValueError):
    """An operation was asked of a game that cannot answer it."""


class ModeError(GameError):
    """The operation needs a payoff table the game does not carry."""


def _product(dims: Sequence[int]) -> Iterator[JointAction]:
    return itertools.product(*(range(d) for d in dims))


@dataclass(frozen=True)
class PayoffTable:
    """A total map from joint actions to subsets, stored row-major."""

    universe: Universe
    dims: tuple[int, ...]
    cells: tuple[Subset, ...]

    def __post_init__(self):
        object.__setattr__(self, "dims", tuple(self.dims))
        object.__setattr__(self, "cells", tuple(self.cells))
        if not self.dims or any(d < 1 for d in self.dims):
            raise ValueError(f"every player needs at least one strategy, got dims {self.dims}")
        size = 1
        for d in self.dims:
            size *= d
        if len(self.cells) != size:
            raise ValueError(f"table with dims {self.dims} needs {size} cells, got {len(self.cells)}")
        for c in self.cells:
            if c.universe != self.universe:
                raise IncompatibleOperands("all cells of a payoff table must share one universe")

    @classmethod
    def from_rows(cls, universe: Universe, rows: Sequence[Sequence[Iterable[str] | Subset]]) -> PayoffTable:
        """Two-player table from nested rows of element-name lists."""
        n_cols = len(rows[0])
        if any(len(r) != n_cols for r in rows):
            raise ValueError("ragged payoff rows")
        cells = [c if isinstance(c, Subset) else universe.subset(c) for r in rows for c in r]
        return cls(universe, (len(rows), n_cols), cells)

    @classmethod
    def from_function(cls, universe: Universe, dims: Sequence[int],
                      fn: Callable[[JointAction], Subset]) -> PayoffTable:
        return cls(universe, tuple(dims), [fn(a) for a in _product(dims)])

    @classmethod
    def constant(cls, universe: Universe, dims: Sequence[int], value: Subset) -> PayoffTable:
        return cls.from_function(universe, dims, lambda a: value)

    def _offset(self, action: Sequence[int]) -> int:
        if len(action) != len(self.dims):
            raise IndexError(f"joint action {tuple(action)} has wrong length for dims {self.dims}")
        off = 0
        for i, d in zip(action, self.dims):
            if not 0 <= i < d:
                raise IndexError(f"joint action {tuple(action)} out of bounds for dims {self.dims}")
            off = off * d + i
        return off

    def __getitem__(self, action: Sequence[int]) -> Subset:
        return self.cells[self._offset(action)]

    def actions(self) -> Iterator[JointAction]:
        return _product(self.dims)

    def items(self) -> Iterator[tuple[JointAction, Subset]]:
        return zip(self.actions(), self.cells)

    def map(self, fn: Callable[[Subset], Subset]) -> PayoffTable:
        return PayoffTable(self.universe, self.dims, [fn(c) for c in self.cells])

    def zip_with(self, other: PayoffTable, fn: Callable[[Subset, Subset], Subset]) -> PayoffTable:
        if self.dims != other.dims:
            raise IncompatibleOperands(f"tables have different dims {self.dims} and {other.dims}")
        return PayoffTable(self.universe, self.dims, [fn(a, b) for a, b in zip(self.cells, other.cells)])

    def complement(self) -> PayoffTable:
        return self.map(lambda c: ~c)

    def __or__(self, other: PayoffTable) -> PayoffTable:
        return self.zip_with(other, Subset.__or__)

    def __and__(self, other: PayoffTable) -> PayoffTable:
        return self.zip_with(other, Subset.__and__)

    def __sub__(self, other: PayoffTable) -> PayoffTable:
        return self.zip_with(other, Subset.__sub__)

    def is_all_empty(self) -> bool:
        return all(c.is_empty() for c in self.cells)

    def is_all_full(self) -> bool:
        return all(c.is_full() for c in self.cells)

    def restrict(self, keep: Sequence[Sequence[int]]) -> PayoffTable:
        """Sub-table keeping, per player, the listed strategy indices (in that order)."""
        dims = tuple(len(k) for k in keep)
        cells = [self[tuple(k[i] for k, i in zip(keep, a))] for a in _product(dims)]
        return PayoffTable(self.universe, dims, cells)


def _check_labels(labels: Sequence[str], who: str) -> tuple[str, ...]:
    labels = tuple(labels)
    if not labels:
        raise ValueError(f"{who} needs at least one strategy")
    if len(set(labels)) != len(labels):
        raise ValueError(f"strategy names of {who} must be unique")
    return labels


@dataclass(frozen=True)
class TwoPersonGame:
    """A two-person soft game.

    With ``table2`` left out the game is in single-matrix mode: only Player 1's
    payoffs are known and Player 2 is read as the adversary who prefers
    smaller Player 1 payoffs.
    """

    universe: Universe
    x_labels: tuple[str, ...]
    y_labels: tuple[str, ...]
    table1: PayoffTable
    table2: PayoffTable | None = None
    player_names: tuple[str, str] = ("Player 1", "Player 2")

    def __post_init__(self):
        object.__setattr__(self, "x_labels", _check_labels(self.x_labels, "Player 1"))
        object.__setattr__(self, "y_labels", _check_labels(self.y_labels, "Player 2"))
        object.__setattr__(self, "player_names", tuple(self.player_names))
        dims = (len(self.x_labels), len(self.y_labels))
        for t in (self.table1, self.table2):
            if t is None:
                continue
            if t.dims != dims:
                raise ValueError(f"payoff table dims {t.dims} do not match strategy counts {dims}")
            if t.universe != self.universe:
                raise IncompatibleOperands("payoff table uses a different universe")

    @classmethod
    def from_rows(cls, universe: Universe, x_labels: Sequence[str], y_labels: Sequence[str],
                  rows1, rows2=None) -> TwoPersonGame:
        t1 = PayoffTable.from_rows(universe, rows1)
        t2 = None if rows2 is None else PayoffTable.from_rows(universe, rows2)
        return cls(universe, tuple(x_labels), tuple(y_labels), t1, t2)

    @property
    def is_bimatrix(self) -> bool:
        return self.table2 is not None

    @property
    def n_players(self) -> int:
        return 2

    @property
    def dims(self) -> tuple[int, int]:
        return len(self.x_labels), len(self.y_labels)

    @property
    def labels(self) -> tuple[tuple[str, ...], tuple[str, ...]]:
        return self.x_labels, self.y_labels

    @property
    def tables(self) -> tuple[PayoffTable, ...]:
        return (self.table1,) if self.table2 is None else (self.table1, self.table2)

    def table(self, k: int) -> PayoffTable:
        if k == 1:
            return self.table1
        if k == 2:
            if self.table2 is None:
                raise ModeError("single-matrix game has no payoff table for Player 2")
            return self.table2
        raise IndexError(f"player index must be 1 or 2, got {k}")

    def single_matrix(self) -> TwoPersonGame:
        """The same game with Player 2's table dropped."""
        return TwoPersonGame(self.universe, self.x_labels, self.y_labels, self.table1, None, self.player_names)

    def restrict(self, rows: Sequence[int], cols: Sequence[int]) -> TwoPersonGame:
        keep = (tuple(rows), tuple(cols))
        return TwoPersonGame(
            self.universe,
            tuple(self.x_labels[i] for i in rows),
            tuple(self.y_labels[j] for j in cols),
            self.table1.restrict(keep),
            None if self.table2 is None else self.table2.restrict(keep),
            self.player_names,
        )

    def as_nperson(self) -> NPersonGame:
        """Embed a bimatrix game as a two-player n-person game."""
        if self.table2 is None:
            raise ModeError("only bimatrix games embed as n-person games")
        return NPersonGame(self.universe, (self.x_labels, self.y_labels),
                           (self.table1, self.table2), self.player_names)


@dataclass(frozen=True)
class NPersonGame:
    """An n-person soft game with one payoff table per player over all joint actions."""

    universe: Universe
    strategy_labels: tuple[tuple[str, ...], ...]
    payoff_tables: tuple[PayoffTable, ...]
    player_names: tuple[str, ...] | None = None

    def __post_init__(self):
        labels = tuple(_check_labels(ls, f"Player {k}") for k, ls in enumerate(self.strategy_labels, 1))
        object.__setattr__(self, "strategy_labels", labels)
        object.__setattr__(self, "payoff_tables", tuple(self.payoff_tables))
        if len(labels) < 2:
            raise ValueError("an n-person game needs at least two players")
        if len(self.payoff_tables) != len(labels):
            raise ValueError(f"{len(labels)} players need {len(labels)} payoff tables, got {len(self.payoff_tables)}")
        dims = tuple(len(ls) for ls in labels)
        for t in self.payoff_tables:
            if t.dims != dims:
                raise ValueError(f"payoff table dims {t.dims} do not match strategy counts {dims}")
            if t.universe != self.universe:
                raise IncompatibleOperands("payoff table uses a different universe")
        names = self.player_names
        if names is None:
            names = tuple(f"Player {k}" for k in range(1, len(labels) + 1))
        names = tuple(names)
        if len(names) != len(labels):
            raise ValueError("one name per player required")
        object.__setattr__(self, "player_names", names)

    @property
    def n_players(self) -> int:
        return len(self.strategy_labels)

    @property
    def dims(self) -> tuple[int, ...]:
        return tuple(len(ls) for ls in self.strategy_labels)

    @property
    def labels(self) -> tuple[tuple[str, ...], ...]:
        return self.strategy_labels

    @property
    def tables(self) -> tuple[PayoffTable, ...]:
        return self.payoff_tables

    def table(self, k: int) -> PayoffTable:
        if not 1 <= k <= self.n_players:
            raise IndexError(f"player index must be in 1..{self.n_players}, got {k}")
        return self.payoff_tables[k - 1]

    def as_two_person(self) -> TwoPersonGame:
        if self.n_players != 2:
            raise ModeError("only two-player games convert to the two-person form")
        return TwoPersonGame(self.universe, self.strategy_labels[0], self.strategy_labels[1],
                             self.payoff_tables[0], self.payoff_tables[1], self.player_names)


Game = TwoPersonGame | NPersonGame


def payoff(g: Game, k: int, action: Sequence[int]) -> Subset:
    """Soft payoff Player ``k`` (1-based) receives at ``action``."""
    return g.table(k)[tuple(action)]


def _bimatrix_tables(g: TwoPersonGame) -> tuple[PayoffTable, PayoffTable]:
    if not isinstance(g, TwoPersonGame) or g.table2 is None:
        raise ModeError("operation needs a bimatrix two-person game")
    return g.table1, g.table2


def is_disjoint_game(g: TwoPersonGame) -> bool:
    t1, t2 = _bimatrix_tables(g)
    return all(not (a & b) for a, b in zip(t1.cells, t2.cells))


def is_universal_game(g: TwoPersonGame) -> bool:
    t1, t2 = _bimatrix_tables(g)
    return all((a | b).is_full() for a, b in zip(t1.cells, t2.cells))


def is_empty_game(g: Game, k: int) -> bool:
    return g.table(k).is_all_empty()


def is_full_game(g: Game, k: int) -> bool:
    return g.table(k).is_all_full()


def is_rational(g: Game, k: int) -> bool:
    """True when every two payoff cells of Player ``k`` are comparable by inclusion."""
    cells = g.table(k).cells
    # a finite family is a chain iff it is one once sorted by size
    chain = sorted(set(c.bits for c in cells), key=int.bit_count)
    return all(a & ~b == 0 for a, b in zip(chain, chain[1:]))


class Preference(enum.Enum):
    """How Player k ranks one joint action against another."""

    STRICT = "strictly prefers"
    INDIFFERENT = "indifferent"
    # never produced by prefers(): its cases are split into STRICT and INDIFFERENT
    WEAK = "weakly prefers"
    # anything that is not a weak preference, including strictly smaller payoffs
    INCOMPARABLE = "incomparable"

    @property
    def is_weak_preference(self) -> bool:
        return self is not Preference.INCOMPARABLE


def prefers(g: Game, k: int, a: Sequence[int], b: Sequence[int]) -> Preference:
    pa, pb = payoff(g, k, a), payoff(g, k, b)
    if pa == pb:
        return Preference.INDIFFERENT
    if pa > pb:
        return Preference.STRICT
    return Preference.INCOMPARABLE


def optimal_actions(g: Game, k: int) -> list[JointAction]:
    """Joint actions whose payoff contains every other payoff of Player ``k``.

    Inclusion is only a partial order, so the list may be empty.
    """
    t = g.table(k)
    top = 0
    for c in t.cells:
        top |= c.bits
    return [a for a, c in t.items() if c.bits == top]


def complement_game(g: Game, k: int) -> PayoffTable:
    return g.table(k).complement()


def difference_game(g: TwoPersonGame) -> tuple[PayoffTable, PayoffTable]:
    """Cellwise ``S1 \\ S2`` and ``S2 \\ S1``."""
    t1, t2 = _bimatrix_tables(g)
    return t1 - t2, t2 - t1


def union_game(g: TwoPersonGame) -> PayoffTable:
    t1, t2 = _bimatrix_tables(g)
    return t1 | t2


def intersection_game(g: TwoPersonGame) -> PayoffTable:
    t1, t2 = _bimatrix_tables(g)
    return t1 & t2


def action_key(g: Game, action: Sequence[int]) -> str:
    """Joint-action key such as ``"x3|y2"``."""
    return "|".join(ls[i] for ls, i in zip(g.labels, action))
