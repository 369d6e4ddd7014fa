"""Solution methods for soft games.

Saddle points, lower/upper values, iterated elimination of soft-dominated
strategies, soft Nash equilibria (two-person and n-person), and the
elimination-then-saddle pipeline.

Player numbers are 1-based throughout; strategy indices are 0-based.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Sequence

from .game import (Game, JointAction, ModeError, NPersonGame, PayoffTable,
                   TwoPersonGame)
from .softset import Subset, intersect_all, union_all

ROWS = "rows"
COLUMNS = "columns"


def _two_person(g) -> TwoPersonGame:
    if not isinstance(g, TwoPersonGame):
        raise ModeError("operation is defined for two-person games only")
    return g


def _row(t: PayoffTable, i: int) -> list[Subset]:
    return [t[i, j] for j in range(t.dims[1])]


def _col(t: PayoffTable, j: int) -> list[Subset]:
    return [t[i, j] for i in range(t.dims[0])]


def column_union(g: TwoPersonGame, k: int, j: int) -> Subset:
    t = _two_person(g).table(k)
    if not 0 <= j < t.dims[1]:
        raise IndexError(f"column {j} out of range")
    return union_all(g.universe, _col(t, j))


def row_intersection(g: TwoPersonGame, k: int, i: int) -> Subset:
    t = _two_person(g).table(k)
    if not 0 <= i < t.dims[0]:
        raise IndexError(f"row {i} out of range")
    return intersect_all(g.universe, _row(t, i))


@dataclass(frozen=True)
class SaddlePoint:
    row: int
    col: int
    value: Subset


def saddle_points(g: TwoPersonGame, k: int = 1) -> list[SaddlePoint]:
    """All cells whose payoff equals both its column union and its row intersection."""
    g = _two_person(g)
    t = g.table(k)
    m, n = t.dims
    unions = [column_union(g, k, j) for j in range(n)]
    meets = [row_intersection(g, k, i) for i in range(m)]
    return [SaddlePoint(i, j, t[i, j])
            for i in range(m) for j in range(n)
            if t[i, j] == unions[j] == meets[i]]


def upper_value(g: TwoPersonGame, k: int = 1) -> Subset:
    """Intersection over columns of the column unions."""
    g = _two_person(g)
    n = g.dims[1]
    return intersect_all(g.universe, (column_union(g, k, j) for j in range(n)))


def lower_value(g: TwoPersonGame, k: int = 1) -> Subset:
    """Union over rows of the row intersections."""
    g = _two_person(g)
    m = g.dims[0]
    return union_all(g.universe, (row_intersection(g, k, i) for i in range(m)))


@dataclass(frozen=True)
class ValueReport:
    lower: Subset
    upper: Subset

    @property
    def value(self) -> Subset | None:
        return self.lower if self.lower == self.upper else None

    @property
    def has_value(self) -> bool:
        return self.lower == self.upper


def game_value(g: TwoPersonGame, k: int = 1) -> ValueReport:
    return ValueReport(lower_value(g, k), upper_value(g, k))


def _dominated_pairs(vectors: Sequence[tuple[int, ...]], better) -> list[tuple[int, int]]:
    pairs = []
    for r, vr in enumerate(vectors):
        for i, vi in enumerate(vectors):
            if i == r or not all(better(a, b) for a, b in zip(vi, vr)):
                continue
            # identical strategies: only the later copy counts as dominated
            if vi != vr or i < r:
                pairs.append((r, i))
    return pairs


def _contains(a: int, b: int) -> bool:
    return b & ~a == 0


def _contained(a: int, b: int) -> bool:
    return a & ~b == 0


def dominated_strategies(g: TwoPersonGame, k: int = 1, side: str = ROWS) -> list[tuple[int, int]]:
    """Pairs ``(dominated, dominating)`` of strategy indices for one side of the game.

    Rows are compared on Player 1's table with ``⊇`` (bigger is better for
    Player 1). Columns are compared on Player 1's table with ``⊆`` in
    single-matrix mode, where Player 2 wants Player 1 to get less, and on
    Player 2's own table with ``⊇`` in bimatrix mode.

    A pair is reported when the dominating strategy is at least as good
    everywhere and strictly better somewhere; of two identical strategies
    the higher index is the dominated one. Pairs are sorted by dominated
    index, then dominating index.
    """
    g = _two_person(g)
    g.table(k)  # validates k for the game's mode
    m, n = g.dims
    if side == ROWS:
        t = g.table1
        vectors = [tuple(c.bits for c in _row(t, i)) for i in range(m)]
        return _dominated_pairs(vectors, _contains)
    if side == COLUMNS:
        if g.table2 is None:
            vectors = [tuple(c.bits for c in _col(g.table1, j)) for j in range(n)]
            return _dominated_pairs(vectors, _contained)
        vectors = [tuple(c.bits for c in _col(g.table2, j)) for j in range(n)]
        return _dominated_pairs(vectors, _contains)
    raise ValueError(f"side must be {ROWS!r} or {COLUMNS!r}, got {side!r}")


@dataclass(frozen=True)
class EliminationStep:
    """One deletion. Indices refer to the original game."""

    player: int
    removed: int
    removed_label: str
    dominator: int
    dominator_label: str

    def __str__(self) -> str:
        return f"Player {self.player}: delete {self.removed_label} (dominated by {self.dominator_label})"


@dataclass(frozen=True)
class EliminationTrace:
    original: TwoPersonGame
    steps: tuple[EliminationStep, ...]
    rows: tuple[int, ...]
    cols: tuple[int, ...]
    reduced: TwoPersonGame = field(compare=False)

    def replay(self) -> TwoPersonGame:
        """Apply the recorded deletions to the original game."""
        rows = list(range(self.original.dims[0]))
        cols = list(range(self.original.dims[1]))
        for s in self.steps:
            (rows if s.player == 1 else cols).remove(s.removed)
        return self.original.restrict(rows, cols)


def eliminate(g: TwoPersonGame, k: int = 1) -> EliminationTrace:
    """Iteratively delete soft-dominated strategies until none is left.

    Each pass deletes a single strategy: the lowest-index dominated column if
    there is one, otherwise the lowest-index dominated row, in both cases
    against its lowest-index dominator.
    """
    g = _two_person(g)
    g.table(k)
    rows = list(range(g.dims[0]))
    cols = list(range(g.dims[1]))
    steps = []
    current = g
    while True:
        for player, side, kept, labels in ((2, COLUMNS, cols, g.y_labels), (1, ROWS, rows, g.x_labels)):
            pairs = dominated_strategies(current, k, side)
            if pairs:
                r, i = pairs[0]
                steps.append(EliminationStep(player, kept[r], labels[kept[r]], kept[i], labels[kept[i]]))
                del kept[r]
                current = g.restrict(rows, cols)
                break
        else:
            break
    return EliminationTrace(g, tuple(steps), tuple(rows), tuple(cols), current)


@dataclass(frozen=True)
class NashEquilibrium:
    action: JointAction
    payoffs: tuple[Subset, ...]


def nash_equilibria(g: TwoPersonGame) -> list[NashEquilibrium]:
    """Soft Nash equilibria of a bimatrix game, in row-major order.

    A cell passes Player 1's test when its payoff contains every payoff in
    its column, i.e. equals the column union; likewise Player 2 along the row.
    """
    g = _two_person(g)
    if g.table2 is None:
        raise ModeError("soft Nash equilibria need both players' payoff tables")
    t1, t2 = g.table1, g.table2
    m, n = g.dims
    best1 = [union_all(g.universe, _col(t1, j)) for j in range(n)]
    best2 = [union_all(g.universe, _row(t2, i)) for i in range(m)]
    return [NashEquilibrium((i, j), (t1[i, j], t2[i, j]))
            for i in range(m) for j in range(n)
            if t1[i, j] == best1[j] and t2[i, j] == best2[i]]


def _with(action: JointAction, k: int, x: int) -> JointAction:
    return action[:k] + (x,) + action[k + 1:]


def nps_dominated(g: NPersonGame, k: int, strat: int, other: int) -> bool:
    """Whether ``strat`` pays Player ``k`` at least what ``other`` pays, whatever the rest play."""
    t = g.table(k)
    pos = k - 1
    dims = g.dims
    for s in (strat, other):
        if not 0 <= s < dims[pos]:
            raise IndexError(f"strategy {s} out of range for Player {k}")
    rest = [range(d) for d in dims[:pos] + dims[pos + 1:]]
    for others in itertools.product(*rest):
        a = others[:pos] + (strat,) + others[pos:]
        b = others[:pos] + (other,) + others[pos:]
        if not t[a] >= t[b]:
            return False
    return True


def nps_nash_equilibria(g: NPersonGame) -> list[NashEquilibrium]:
    """Soft Nash equilibria of an n-person game, in lexicographic order."""
    dims = g.dims
    out = []
    for a in itertools.product(*(range(d) for d in dims)):
        for pos, t in enumerate(g.tables):
            mine = t[a].bits
            if any(t[_with(a, pos, x)].bits & ~mine for x in range(dims[pos]) if x != a[pos]):
                break
        else:
            out.append(NashEquilibrium(a, tuple(t[a] for t in g.tables)))
    return out


@dataclass(frozen=True)
class PipelineReport:
    trace: EliminationTrace
    saddle: list[SaddlePoint]
    values: ValueReport

    @property
    def reduced(self) -> TwoPersonGame:
        return self.trace.reduced


def solve_pipeline(g: TwoPersonGame, k: int = 1) -> PipelineReport:
    """Eliminate dominated strategies, then look for saddle points and values on what is left."""
    trace = eliminate(g, k)
    return PipelineReport(trace, saddle_points(trace.reduced, k), game_value(trace.reduced, k))


def solve_game(g: Game, method: str, k: int = 1):
    """Dispatch by method name, as used by the command line."""
    if method == "saddle":
        return saddle_points(g, k)
    if method == "values":
        return game_value(g, k)
    if method == "eliminate":
        return eliminate(g, k)
    if method == "nash":
        if isinstance(g, NPersonGame):
            return nps_nash_equilibria(g)
        return nash_equilibria(g)
    if method == "pipeline":
        return solve_pipeline(g, k)
    raise ValueError(f"unknown method {method!r}")


__all__ = [
    "COLUMNS", "ROWS", "EliminationStep", "EliminationTrace", "NashEquilibrium",
    "PipelineReport", "SaddlePoint", "ValueReport", "column_union", "dominated_strategies",
    "eliminate", "game_value", "lower_value", "nash_equilibria", "nps_dominated",
    "nps_nash_equilibria", "row_intersection", "saddle_points", "solve_game",
    "solve_pipeline", "upper_value",
]
