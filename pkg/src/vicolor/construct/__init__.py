"""Constructive colorers: closed forms, degeneracy greedy, composition, end-face induction."""
from __future__ import annotations

from .basic import CyclicInput, color_complete, color_cycle, color_forest, color_path
from .common import ConstructionError, SpreadViolation, Trace
from .compose import PermutationNotFound, compose_cut_edge, compose_cut_vertex
from .degenerate import DegeneracyTooLarge, color_degenerate
from .dispatch import STRATEGIES, color, color_outerplanar, color_outerplanar_girth
from .fixtures import Fixture, FixtureTable, load_fixtures
from .girth import NoApplicableTheorem

__all__ = [
    "STRATEGIES",
    "ConstructionError",
    "CyclicInput",
    "DegeneracyTooLarge",
    "Fixture",
    "FixtureTable",
    "NoApplicableTheorem",
    "PermutationNotFound",
    "SpreadViolation",
    "Trace",
    "color",
    "color_complete",
    "color_cycle",
    "color_degenerate",
    "color_forest",
    "color_outerplanar",
    "color_outerplanar_girth",
    "color_path",
    "compose_cut_edge",
    "compose_cut_vertex",
    "load_fixtures",
]
