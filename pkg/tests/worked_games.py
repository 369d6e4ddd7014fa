"""The worked games, typed in cell by cell."""

from softgames import SoftSet, TwoPersonGame, Universe

U4 = Universe.numbered(4)
U8 = Universe.numbered(8)
U10 = Universe.numbered(10)


def u(*ns):
    return [f"u{n}" for n in ns]


def s(universe, *ns):
    return universe.subset(u(*ns))


# Two customers' views of four cars
E = ("x1", "x2", "x3", "x4")
SOFT_S = SoftSet(U4, E, {"x1": u(1, 2), "x2": u(1, 2, 4), "x3": [], "x4": u(1, 2, 3, 4)})
SOFT_T = SoftSet(U4, E, {"x1": u(1, 2), "x2": u(1, 2, 3), "x3": u(1, 2), "x4": u(1)})

TABLE2 = [
    [u(1, 2, 5, 8), u(1, 2, 3, 4, 5, 8), u(3, 8)],
    [u(1, 3, 7), u(1, 2, 3, 5, 6, 7), u(1, 2, 3)],
    [u(3, 4, 5, 8), u(1, 2, 3, 4, 5, 6, 8), u(1, 2, 3, 8)],
]
TABLE3 = [
    [u(3, 4, 6, 7), u(6, 7), u(1, 2, 4, 5, 6, 7)],
    [u(2, 4, 5, 6, 8), u(4, 8), u(4, 5, 6, 7, 8)],
    [u(1, 2, 6, 7), u(7), u(4, 5, 6, 7)],
]
TABLE4 = [
    [u(2, 4, 7), u(4), u(4)],
    [u(5), u(7), u(4, 7)],
    [u(2, 4, 5, 7, 8, 10), u(4, 8), u(7, 8)],
    [u(2, 4, 5, 7, 8), u(1, 4, 7, 8), u(4, 7, 8)],
]
TABLE5 = [
    [u(2, 4, 7), u(4), u(4)],
    [u(5), u(7), u(4, 7)],
    [u(2, 4, 5, 7, 8, 10), u(4, 7, 8), u(4, 7, 8)],
]
TABLE8 = [
    [u(1, 2, 4, 7, 8, 9), u(1, 2, 4, 7, 8), u(1, 2, 3, 4, 7, 8)],
    [u(1, 2, 3, 5), u(1, 4, 7, 8), u(1, 2, 3, 4, 5, 7)],
    [u(2, 5, 7, 8, 10), u(2, 4, 7, 8), u(4, 5, 7, 8, 10)],
]
TABLE9 = [
    [u(3, 5, 6, 10), u(3, 5, 6, 9, 10), u(5, 6, 9, 10)],
    [u(4, 6, 7, 8, 9, 10), u(2, 3, 5, 6, 9, 10), u(6, 8, 9, 10)],
    [u(1, 3, 4, 6, 9), u(1, 3, 5, 6, 9, 10), u(1, 2, 3, 6, 9)],
]
TABLE10 = [
    [u(1, 2, 3, 5, 8), u(1, 2, 3, 4, 5, 8), u(3)],
    [u(1, 3, 7), u(1, 2, 3, 5, 6, 7), u(2, 3)],
    [u(1, 2, 3, 4, 5), u(1, 2, 3, 4, 5, 6, 8), u(1, 2, 3)],
]

XY3 = (("x1", "x2", "x3"), ("y1", "y2", "y3"))


def table2_3() -> TwoPersonGame:
    return TwoPersonGame.from_rows(U10, ("x1", "x3", "x5"), ("x1", "x2", "x4"), TABLE2, TABLE3)


def table4() -> TwoPersonGame:
    return TwoPersonGame.from_rows(U10, ("x1", "x2", "x3", "x4"), XY3[1], TABLE4)


def table4_modified() -> TwoPersonGame:
    rows = [list(r) for r in TABLE4]
    rows[3][2] = u(4, 7, 8, 9)
    return TwoPersonGame.from_rows(U10, ("x1", "x2", "x3", "x4"), XY3[1], rows)


def table5() -> TwoPersonGame:
    return TwoPersonGame.from_rows(U10, *XY3, TABLE5)


def table8_9() -> TwoPersonGame:
    return TwoPersonGame.from_rows(U10, *XY3, TABLE8, TABLE9)


def table10() -> TwoPersonGame:
    return TwoPersonGame.from_rows(U8, *XY3, TABLE10)


FIXTURES = {
    "table2_3": table2_3,
    "table4": table4,
    "table4_modified": table4_modified,
    "table5": table5,
    "table8_9": table8_9,
    "table10": table10,
}
