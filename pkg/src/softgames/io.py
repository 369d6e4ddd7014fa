"""JSON game documents: parsing with validation, and canonical serialization.

A document looks like::

    {
      "format_version": 1,
      "universe": ["u1", "u2", ...],
      "players": [{"name": "Player 1", "strategies": ["x1", "x2"]}, ...],
      "payoffs": [{"x1|y1": ["u2", "u4"], ...}, ...]
    }

``payoffs`` carries one table per player, or a single table for a
single-matrix two-person game. Joint-action keys join strategy labels with
``|`` in player order.
"""

from __future__ import annotations

import hashlib
import itertools
import json
from typing import Any

from .game import NPersonGame, PayoffTable, TwoPersonGame
from .softset import Universe

FORMAT_VERSION = 1
SEPARATOR = "|"


class GameFormatError(ValueError):
    """Base class for invalid game documents."""


class MalformedDocument(GameFormatError):
    pass


class UnknownElement(GameFormatError):
    pass


class MissingAction(GameFormatError):
    pass


class DuplicateAction(GameFormatError):
    pass


class UnknownAction(GameFormatError):
    pass


class DimensionMismatch(GameFormatError):
    pass


class _Object(dict):
    """JSON object that remembers keys seen more than once."""

    def __init__(self, pairs):
        super().__init__()
        self.duplicates = []
        for k, v in pairs:
            if k in self:
                self.duplicates.append(k)
            self[k] = v


def _expect(cond: bool, message: str, exc=MalformedDocument):
    if not cond:
        raise exc(message)


def _string_list(value: Any, what: str) -> list[str]:
    _expect(isinstance(value, list) and all(isinstance(s, str) for s in value),
            f"{what} must be a list of strings")
    return value


def parse_document(data: Any) -> TwoPersonGame | NPersonGame:
    """Validate an already-decoded JSON value and build the game."""
    _expect(isinstance(data, dict), "document must be a JSON object")
    if isinstance(data, _Object) and data.duplicates:
        raise MalformedDocument(f"duplicate field {data.duplicates[0]!r}")
    missing = [f for f in ("format_version", "universe", "players", "payoffs") if f not in data]
    _expect(not missing, f"missing field(s): {', '.join(missing)}")
    _expect(data["format_version"] == FORMAT_VERSION,
            f"unsupported format_version {data['format_version']!r} (expected {FORMAT_VERSION})")

    try:
        universe = Universe(_string_list(data["universe"], "universe"))
    except ValueError as e:
        if isinstance(e, GameFormatError):
            raise
        raise MalformedDocument(f"bad universe: {e}") from None

    players = data["players"]
    _expect(isinstance(players, list) and len(players) >= 2, "players must list at least two players")
    names, labels = [], []
    for n, p in enumerate(players, 1):
        _expect(isinstance(p, dict) and "strategies" in p, f"player {n} must be an object with 'strategies'")
        name = p.get("name", f"Player {n}")
        _expect(isinstance(name, str), f"player {n} name must be a string")
        strategies = _string_list(p["strategies"], f"strategies of player {n}")
        _expect(len(strategies) > 0, f"player {n} needs at least one strategy", DimensionMismatch)
        _expect(len(set(strategies)) == len(strategies), f"player {n} has duplicate strategy labels")
        for s in strategies:
            _expect(s and SEPARATOR not in s, f"strategy label {s!r} of player {n} is empty or contains {SEPARATOR!r}")
        names.append(name)
        labels.append(tuple(strategies))

    payoffs = data["payoffs"]
    _expect(isinstance(payoffs, list), "payoffs must be a list of tables")
    n_players = len(labels)
    allowed = {1, 2} if n_players == 2 else {n_players}
    _expect(len(payoffs) in allowed,
            f"{n_players} players need {' or '.join(map(str, sorted(allowed)))} payoff tables, got {len(payoffs)}",
            DimensionMismatch)

    dims = tuple(len(ls) for ls in labels)
    keys = [SEPARATOR.join(ls[i] for ls, i in zip(labels, a))
            for a in itertools.product(*(range(d) for d in dims))]
    known = set(keys)
    tables = []
    for t_no, table in enumerate(payoffs, 1):
        _expect(isinstance(table, dict), f"payoff table {t_no} must be an object")
        if isinstance(table, _Object) and table.duplicates:
            raise DuplicateAction(f"payoff table {t_no}: joint action {table.duplicates[0]!r} given more than once")
        for key in table:
            if key not in known:
                parts = key.split(SEPARATOR)
                exc = DimensionMismatch if len(parts) != n_players else UnknownAction
                raise exc(f"payoff table {t_no}: unknown joint action {key!r}")
        cells = []
        for key in keys:
            if key not in table:
                raise MissingAction(f"payoff table {t_no}: missing joint action {key!r}")
            members = _string_list(table[key], f"payoff {key!r} in table {t_no}")
            for e in members:
                if e not in universe.elements:
                    raise UnknownElement(f"payoff table {t_no}, joint action {key!r}: unknown element {e!r}")
            cells.append(universe.subset(members))
        tables.append(PayoffTable(universe, dims, cells))

    if n_players == 2:
        return TwoPersonGame(universe, labels[0], labels[1], tables[0],
                             tables[1] if len(tables) == 2 else None, tuple(names))
    return NPersonGame(universe, tuple(labels), tuple(tables), tuple(names))


def parse_game(text: str) -> TwoPersonGame | NPersonGame:
    try:
        data = json.loads(text, object_pairs_hook=_Object)
    except json.JSONDecodeError as e:
        raise MalformedDocument(f"invalid JSON: {e}") from None
    return parse_document(data)


def load_game(path) -> TwoPersonGame | NPersonGame:
    with open(path, encoding="utf-8") as f:
        return parse_game(f.read())


def to_document(g: TwoPersonGame | NPersonGame) -> dict:
    keys = [SEPARATOR.join(ls[i] for ls, i in zip(g.labels, a)) for a in g.tables[0].actions()]
    return {
        "format_version": FORMAT_VERSION,
        "universe": list(g.universe.elements),
        "players": [{"name": n, "strategies": list(ls)} for n, ls in zip(g.player_names, g.labels)],
        "payoffs": [{k: c.names() for k, c in zip(keys, t.cells)} for t in g.tables],
    }


def serialize_game(g: TwoPersonGame | NPersonGame) -> str:
    """Canonical text: row-major keys, elements in universe order, two-space indent."""
    return json.dumps(to_document(g), indent=2, ensure_ascii=False) + "\n"


def digest(g: TwoPersonGame | NPersonGame) -> str:
    """SHA-256 of the canonical serialization."""
    return hashlib.sha256(serialize_game(g).encode("utf-8")).hexdigest()
