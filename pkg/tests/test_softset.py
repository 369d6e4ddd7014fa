import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from softgames import (IncompatibleOperands, SoftSet, Subset, Universe, is_soft_subset, is_subset,
                       softset_complement, softset_intersect, softset_union, subset_complement,
                       subset_difference, subset_intersect, subset_union)
from softgames.softset import intersect_all, softset_difference, union_all

from worked_games import SOFT_S, SOFT_T, U4, E, s, u


class TestUniverse:
    def test_lookup_is_bijection(self):
        U = Universe(["oil", "salt", "honey"])
        assert [U.index(n) for n in U] == [0, 1, 2]

    @pytest.mark.parametrize("names", [[], ["a", "a"], ["a", ""]])
    def test_rejects_bad_names(self, names):
        with pytest.raises(ValueError):
            Universe(names)

    def test_unknown_name(self):
        with pytest.raises(KeyError):
            U4.subset(["u9"])


class TestSubsetOps:
    def test_union(self):
        assert subset_union(s(U4, 1, 2), s(U4, 1, 2, 3)) == s(U4, 1, 2, 3)
        a = s(U4, 2, 4)
        assert subset_union(a, U4.empty()) == a
        assert subset_union(a, subset_complement(a)) == U4.full()

    def test_intersect(self):
        assert subset_intersect(s(U4, 1, 2, 4), s(U4, 1, 2, 3)) == s(U4, 1, 2)
        a = s(U4, 3)
        assert subset_intersect(a, U4.full()) == a
        assert subset_intersect(a, U4.empty()) == U4.empty()

    def test_complement(self):
        assert subset_complement(U4.empty()) == U4.full()
        assert subset_complement(U4.full()) == U4.empty()
        assert subset_complement(s(U4, 1, 2)) == s(U4, 3, 4)

    def test_difference(self):
        a = s(U4, 1, 3)
        assert subset_difference(a, U4.empty()) == a
        assert subset_difference(a, a) == U4.empty()
        assert subset_difference(s(U4, 1, 2, 4), s(U4, 1, 2, 3)) == s(U4, 4)

    def test_is_subset(self):
        assert is_subset(U4.empty(), s(U4, 1))
        assert is_subset(s(U4, 1, 2), s(U4, 1, 2, 4))
        assert not is_subset(s(U4, 1, 2, 4), s(U4, 1, 2, 3))

    def test_universe_mismatch(self):
        other = Universe(["a", "b", "c", "d"])
        for op in (subset_union, subset_intersect, subset_difference, is_subset):
            with pytest.raises(IncompatibleOperands):
                op(U4.full(), other.full())

    def test_equal_universes_by_value_are_compatible(self):
        assert subset_union(U4.subset(["u1"]), Universe.numbered(4).subset(["u2"])) == s(U4, 1, 2)

    def test_enumeration_is_ascending(self):
        a = U4.subset(["u4", "u1", "u3"])
        assert list(a) == [0, 2, 3]
        assert a.names() == ["u1", "u3", "u4"]

    def test_empty_folds(self):
        assert union_all(U4, []) == U4.empty()
        assert intersect_all(U4, []) == U4.full()

    def test_bits_outside_universe(self):
        with pytest.raises(ValueError):
            Subset(U4, 1 << 4)


class TestSoftSetExample:
    def test_union(self):
        got = softset_union(SOFT_S, SOFT_T)
        assert got.to_dict() == {"x1": u(1, 2), "x2": u(1, 2, 3, 4), "x3": u(1, 2), "x4": u(1, 2, 3, 4)}
        assert softset_union(SOFT_S, SoftSet.empty(U4, E)) == SOFT_S
        assert softset_union(SOFT_S, SOFT_S) == SOFT_S

    def test_intersection_omits_empty_parameter(self):
        got = softset_intersect(SOFT_S, SOFT_T)
        assert got.to_dict() == {"x1": u(1, 2), "x2": u(1, 2), "x4": u(1)}
        assert got("x3").is_empty()
        empty = SoftSet.empty(U4, E)
        assert softset_intersect(SOFT_S, empty) == empty
        assert softset_intersect(SOFT_S, SOFT_S) == SOFT_S

    def test_complement(self):
        assert softset_complement(SoftSet.empty(U4, E)) == SoftSet.full(U4, E)
        assert softset_complement(softset_complement(SOFT_S)) == SOFT_S
        c = softset_complement(SOFT_S)
        assert c("x4").is_empty()
        assert "x4" not in c.to_dict()

    def test_soft_subset(self):
        assert is_soft_subset(SoftSet.empty(U4, E), SOFT_S)
        assert is_soft_subset(SOFT_S, SOFT_S)
        assert not is_soft_subset(SOFT_S, SOFT_T)

    def test_displayed_form_drops_empty(self):
        assert [p for p, _ in SOFT_S.pairs()] == ["x1", "x2", "x4"]
        assert str(SOFT_S) == "{(x1,{u1,u2}), (x2,{u1,u2,u4}), (x4,{u1,u2,u3,u4})}"

    def test_parameter_mismatch(self):
        other = SoftSet(U4, ("x1", "x2"))
        with pytest.raises(IncompatibleOperands):
            softset_union(SOFT_S, other)
        with pytest.raises(IncompatibleOperands):
            is_soft_subset(SOFT_S, other)


PARAMS = ("e1", "e2", "e3", "e4", "e5")
U6 = Universe.numbered(6)


@st.composite
def soft_sets(draw):
    masks = draw(st.lists(st.integers(0, U6.full_mask), min_size=len(PARAMS), max_size=len(PARAMS)))
    return SoftSet(U6, PARAMS, {p: Subset(U6, m) for p, m in zip(PARAMS, masks)})


LAWS = settings(max_examples=1000, deadline=None)


@LAWS
@given(soft_sets())
def test_involution(a):
    assert softset_complement(softset_complement(a)) == a


@LAWS
@given(soft_sets(), soft_sets())
def test_de_morgan(a, b):
    assert softset_complement(softset_union(a, b)) == softset_intersect(softset_complement(a), softset_complement(b))
    assert softset_complement(softset_intersect(a, b)) == softset_union(softset_complement(a), softset_complement(b))


@LAWS
@given(soft_sets(), soft_sets(), soft_sets())
def test_lattice_laws(a, b, c):
    for op in (softset_union, softset_intersect):
        assert op(a, b) == op(b, a)
        assert op(op(a, b), c) == op(a, op(b, c))
        assert op(a, a) == a
    # absorption
    assert softset_union(a, softset_intersect(a, b)) == a
    assert softset_intersect(a, softset_union(a, b)) == a


@LAWS
@given(soft_sets(), soft_sets())
def test_order_compatible_with_lattice(a, b):
    assert is_soft_subset(a, softset_union(a, b))
    assert is_soft_subset(softset_intersect(a, b), a)
    assert softset_difference(a, b) == softset_intersect(a, softset_complement(b))


@LAWS
@given(soft_sets())
def test_dict_round_trip(a):
    back = SoftSet.from_dict(U6, PARAMS, a.to_dict())
    assert back == a
