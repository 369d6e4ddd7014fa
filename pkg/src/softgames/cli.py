"""Command line interface.

Exit codes: 0 success with a non-empty answer (or a true property),
1 success with an empty answer (or a false property), 2 usage error,
3 invalid input.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction

from . import game as gm
from . import solvers
from .generator import GenSpec, UnsupportedConstraint, random_game
from .io import GameFormatError, digest, load_game, serialize_game
from .softset import Subset

EXIT_OK, EXIT_EMPTY, EXIT_USAGE, EXIT_INPUT = 0, 1, 2, 3

METHODS = ("saddle", "values", "eliminate", "nash", "pipeline")
PROPERTIES = ("disjoint", "universal", "rational", "empty", "full")


class _Style:
    def __init__(self, enabled: bool):
        self.enabled = enabled

    def head(self, text: str) -> str:
        return f"\033[1m{text}\033[0m" if self.enabled else text


def _style() -> _Style:
    return _Style(os.environ.get("SOFTGAME_COLOR", "0") == "1")


def _names(s: Subset) -> list[str]:
    return s.names()


def _key(g, action) -> str:
    return "(" + ", ".join(ls[i] for ls, i in zip(g.labels, action)) + ")"


def _result_json(g, method: str, result) -> tuple[dict, bool]:
    """JSON-ready result plus whether it counts as non-empty."""
    if method == "saddle":
        points = [{"row": g.x_labels[p.row], "col": g.y_labels[p.col], "value": _names(p.value)}
                  for p in result]
        return {"saddle_points": points}, bool(points)
    if method == "values":
        v = result.value
        return {"lower": _names(result.lower), "upper": _names(result.upper),
                "value": None if v is None else _names(v)}, v is not None
    if method == "eliminate":
        return _trace_json(result), bool(result.steps)
    if method == "nash":
        eqs = [{"action": [ls[i] for ls, i in zip(g.labels, e.action)],
                "payoffs": [_names(p) for p in e.payoffs]} for e in result]
        return {"equilibria": eqs}, bool(eqs)
    if method == "pipeline":
        red = result.reduced
        body = _trace_json(result.trace)
        body["saddle_points"] = [{"row": red.x_labels[p.row], "col": red.y_labels[p.col],
                                  "value": _names(p.value)} for p in result.saddle]
        v = result.values.value
        body["lower"] = _names(result.values.lower)
        body["upper"] = _names(result.values.upper)
        body["value"] = None if v is None else _names(v)
        return body, bool(result.saddle)
    raise ValueError(method)


def _trace_json(trace) -> dict:
    return {
        "steps": [{"player": s.player, "removed": s.removed_label, "dominated_by": s.dominator_label}
                  for s in trace.steps],
        "reduced": {"rows": list(trace.reduced.x_labels), "cols": list(trace.reduced.y_labels)},
    }


def _render_table(g, k: int) -> list[str]:
    t = g.table(k)
    rows = [[""] + list(g.y_labels)]
    for i, x in enumerate(g.x_labels):
        rows.append([x] + [str(t[i, j]) for j in range(len(g.y_labels))])
    widths = [max(len(r[c]) for r in rows) for c in range(len(rows[0]))]
    return [("  " + "  ".join(cell.ljust(w) for cell, w in zip(r, widths))).rstrip() for r in rows]


def _human(g, method: str, result, k: int, style: _Style) -> list[str]:
    out = []
    if method == "saddle":
        out.append(style.head(f"Soft saddle points (Player {k}):"))
        out += [f"  {_key(g, (p.row, p.col))}: {p.value}" for p in result] or ["  none"]
    elif method == "values":
        out.append(style.head(f"Soft values (Player {k}):"))
        out.append(f"  lower: {result.lower}")
        out.append(f"  upper: {result.upper}")
        out.append(f"  value: {result.value if result.value is not None else 'none'}")
    elif method in ("eliminate", "pipeline"):
        trace = result if method == "eliminate" else result.trace
        out.append(style.head("Elimination steps:"))
        out += [f"  {n}. {s}" for n, s in enumerate(trace.steps, 1)] or ["  none"]
        out.append(style.head("Reduced game:"))
        out += _render_table(trace.reduced, k)
        if method == "pipeline":
            red = result.reduced
            out += _human(red, "saddle", result.saddle, k, style)
            out += _human(red, "values", result.values, k, style)
    elif method == "nash":
        out.append(style.head("Soft Nash equilibria:"))
        for e in result:
            pays = ", ".join(f"P{n}: {p}" for n, p in enumerate(e.payoffs, 1))
            out.append(f"  {_key(g, e.action)}  {pays}")
        if not result:
            out.append("  none")
    return out


def cmd_solve(args, out, style) -> int:
    g = load_game(args.file)
    result = solvers.solve_game(g, args.method, args.player)
    body, nonempty = _result_json(g, args.method, result)
    if args.format == "json":
        doc = {"method": args.method, "player": args.player, "input_digest": digest(g), "result": body}
        out.write(json.dumps(doc, indent=2) + "\n")
    else:
        out.write("\n".join(_human(g, args.method, result, args.player, style)) + "\n")
    return EXIT_OK if nonempty else EXIT_EMPTY


def cmd_check(args, out, style) -> int:
    g = load_game(args.file)
    prop = args.property
    if prop == "disjoint":
        ok = gm.is_disjoint_game(g)
    elif prop == "universal":
        ok = gm.is_universal_game(g)
    elif prop == "rational":
        ok = gm.is_rational(g, args.player)
    elif prop == "empty":
        ok = gm.is_empty_game(g, args.player)
    else:
        ok = gm.is_full_game(g, args.player)
    out.write(("true" if ok else "false") + "\n")
    return EXIT_OK if ok else EXIT_EMPTY


def _dims(text: str) -> tuple[int, ...]:
    try:
        dims = tuple(int(p) for p in text.lower().split("x"))
    except ValueError:
        raise argparse.ArgumentTypeError(f"dims must look like 3x4 or 2x2x2, got {text!r}") from None
    if len(dims) < 2 or any(d < 1 for d in dims):
        raise argparse.ArgumentTypeError(f"need at least two positive strategy counts, got {text!r}")
    return dims


def _fraction(text: str) -> Fraction:
    try:
        p = Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a probability: {text!r}") from None
    if not 0 <= p <= 1:
        raise argparse.ArgumentTypeError(f"probability must lie in [0, 1], got {text!r}")
    return p


def cmd_gen(args, out, style) -> int:
    spec = GenSpec(args.seed, args.universe, args.dims, args.constraint, args.p)
    text = serialize_game(random_game(spec))
    if args.output:
        with open(args.output, "w", encoding="utf-8") as f:
            f.write(text)
    else:
        out.write(text)
    return EXIT_OK


def cmd_info(args, out, style) -> int:
    g = load_game(args.file)
    if isinstance(g, gm.TwoPersonGame):
        mode = "bimatrix" if g.is_bimatrix else "single-matrix"
    else:
        mode = f"{g.n_players}-person"
    out.write(f"players: {g.n_players}\n")
    out.write(f"dims: {'x'.join(map(str, g.dims))}\n")
    out.write(f"mode: {mode}\n")
    out.write(f"universe ({len(g.universe)}): {', '.join(g.universe.elements)}\n")
    for name, ls in zip(g.player_names, g.labels):
        out.write(f"{name}: {', '.join(ls)}\n")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="softgame", description="Solve and inspect soft games.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("solve", help="run a solution method on a game file")
    p.add_argument("file")
    p.add_argument("--method", required=True, choices=METHODS)
    p.add_argument("--player", type=int, default=1, choices=(1, 2))
    p.add_argument("--format", default="human", choices=("human", "json"))
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("check", help="test a classification property")
    p.add_argument("file")
    p.add_argument("--property", required=True, choices=PROPERTIES)
    p.add_argument("--player", type=int, default=1)
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("gen", help="generate a random game")
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--universe", type=int, required=True, help="universe size")
    p.add_argument("--dims", type=_dims, required=True, help="strategy counts, e.g. 3x3")
    p.add_argument("--constraint", default="none",
                   choices=("none", "disjoint", "universal", "disjoint-universal"))
    p.add_argument("--p", type=_fraction, default=Fraction(1, 2), help="inclusion probability (default 1/2)")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("info", help="describe a game file")
    p.add_argument("file")
    p.set_defaults(func=cmd_info)
    return parser


def main(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_USAGE if e.code else EXIT_OK
    try:
        return args.func(args, out, _style())
    except (GameFormatError, gm.GameError, UnsupportedConstraint, IndexError, OSError) as e:
        err.write(f"softgame: {e}\n")
        return EXIT_INPUT
    except ValueError as e:
        err.write(f"softgame: {e}\n")
        # bad generator parameters are a usage problem, not bad input
        return EXIT_USAGE if args.command == "gen" else EXIT_INPUT


def main_entry() -> None:
    sys.exit(main())
