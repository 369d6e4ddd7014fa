"""Solvers for soft games: games whose payoffs are subsets of a finite universe."""

from .game import (GameError, ModeError, NPersonGame, PayoffTable, Preference,
                   TwoPersonGame, complement_game, difference_game, is_disjoint_game,
                   is_empty_game, is_full_game, is_rational, is_universal_game,
                   optimal_actions, payoff, prefers)
from .softset import (IncompatibleOperands, SoftSet, Subset, Universe, is_soft_subset,
                      is_subset, softset_complement, softset_intersect, softset_union,
                      subset_complement, subset_difference, subset_intersect, subset_union)
from .solvers import (column_union, dominated_strategies, eliminate, game_value,
                      lower_value, nash_equilibria, nps_dominated, nps_nash_equilibria,
                      row_intersection, saddle_points, solve_pipeline, upper_value)

__version__ = "0.1.0"
