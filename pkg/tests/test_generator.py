import json
from fractions import Fraction
from pathlib import Path

import pytest

from softgames import Universe, is_disjoint_game, is_universal_game
from softgames.generator import (GenSpec, SplitMix64, UnsupportedConstraint, draws_needed,
                                 random_game, random_subset, threshold)
from softgames.io import serialize_game

GOLDEN = Path(__file__).parent / "fixtures" / "golden"


class TestSplitMix64:
    def test_reference_outputs(self):
        # published test vectors for the reference C implementation
        assert SplitMix64(0).next() == 0xE220A8397B1DCDAF
        rng = SplitMix64(1234567)
        assert [rng.next() for _ in range(5)] == [
            6457827717110365317, 3203168211198807973, 9817491932198370423,
            4593380528125082431, 16408922859458223821]

    def test_threshold(self):
        assert threshold(0) == 0
        assert threshold(1) == 1 << 64
        assert threshold(Fraction(1, 2)) == 1 << 63
        assert threshold("1/3") == (1 << 64) // 3
        with pytest.raises(ValueError):
            threshold(Fraction(3, 2))


class TestRandomSubset:
    @pytest.mark.parametrize("seed", [0, 1, 99, 2**64 - 1])
    def test_extremes(self, seed):
        U = Universe.numbered(9)
        assert random_subset(SplitMix64(seed), U, 0).is_empty()
        assert random_subset(SplitMix64(seed), U, 1).is_full()

    def test_golden(self):
        doc = json.loads((GOLDEN / "subset_seed42_u8.json").read_text())
        rng = SplitMix64(doc["seed"])
        assert [f"{rng.next():016x}" for _ in range(8)] == doc["draws"]
        rng = SplitMix64(doc["seed"])
        got = random_subset(rng, Universe.numbered(doc["universe_size"]), doc["inclusion_prob"])
        assert got.names() == doc["subset"] == ["u2", "u3", "u4", "u5", "u7"]
        assert rng.draws == 8


@pytest.mark.parametrize("name", sorted(p.name for p in GOLDEN.glob("game_*.json")))
def test_golden_games(name):
    _, seed, usize, dims, constraint = name[:-5].split("_", 4)
    spec = GenSpec(int(seed[4:]), int(usize[1:]), tuple(int(d) for d in dims.split("x")), constraint)
    assert serialize_game(random_game(spec)) == (GOLDEN / name).read_text()


@pytest.mark.parametrize("constraint", ["disjoint", "universal", "disjoint_universal"])
def test_constraints_hold(constraint):
    for seed in range(1000):
        g = random_game(GenSpec(seed, 1 + seed % 8, (1 + seed % 3, 1 + seed % 4), constraint))
        if "disjoint" in constraint:
            assert is_disjoint_game(g)
        if "universal" in constraint:
            assert is_universal_game(g)


@pytest.mark.parametrize("constraint", ["none", "disjoint", "universal", "disjoint_universal"])
def test_draw_count_is_a_function_of_spec(constraint, monkeypatch):
    counts = []
    orig = SplitMix64.__init__

    def spy(self, seed):
        orig(self, seed)
        counts.append(self)

    monkeypatch.setattr(SplitMix64, "__init__", spy)
    for seed in range(20):
        spec = GenSpec(seed, 5, (2, 3), constraint)
        random_game(spec)
        assert counts[-1].draws == draws_needed(spec) == 6 * 5 * {"none": 2, "disjoint_universal": 1}.get(constraint, 2)


def test_reproducible():
    spec = GenSpec(123, 6, (3, 2), "universal", Fraction(1, 3))
    assert serialize_game(random_game(spec)) == serialize_game(random_game(spec))


def test_nperson_output():
    g = random_game(GenSpec(5, 4, (2, 3, 2)))
    assert g.n_players == 3 and g.dims == (2, 3, 2)


def test_rejects_constraint_for_three_players():
    with pytest.raises(UnsupportedConstraint):
        GenSpec(1, 4, (2, 2, 2), "disjoint")


@pytest.mark.parametrize("kwargs", [dict(universe_size=0), dict(dims=(2,)), dict(dims=(0, 2)),
                                    dict(constraint="zero_sum"), dict(inclusion_prob=Fraction(-1, 2))])
def test_bad_spec(kwargs):
    base = dict(seed=1, universe_size=3, dims=(2, 2))
    base.update(kwargs)
    with pytest.raises(ValueError):
        GenSpec(**base)
