"""Perfect locating signed Roman domination: labelings, constructions, exact solving."""

from .bounds import (
    BoundsRecord,
    PackingSet,
    closed_form,
    cubic_lower_bound,
    max_two_packing,
    packing_upper_bound,
    tree_construction,
)
from .constructions import ConstructionResult, construct, formula_value
from .exceptions import *  # noqa: F401,F403
from .graph import FamilyKind, FamilySpec, Graph, generate, is_regular, min_degree, pairwise_distance_leq
from .labeling import LabelingStats, ValidationReport, Violation, ViolationKind, closed_neighborhood_sum, stats, validate
from .solver import SolveOptions, SolveResult, brute_force, enumerate_valid, solve

__version__ = "0.1.0"
