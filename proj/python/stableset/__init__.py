"""Stable sets and dominance solutions for finite decision problems."""

from ._core import (
    DecisionProblem,
    StablesetError,
    contraction,
    core,
    cross_verify,
    duggan_set,
    enumerate_solutions,
    parse_instance,
    random_problem,
    schwartz_set,
    serialize_instance,
    solutions,
    undominated_pairs,
)

__all__ = [
    "DecisionProblem",
    "StablesetError",
    "contraction",
    "core",
    "cross_verify",
    "duggan_set",
    "enumerate_solutions",
    "parse_instance",
    "random_problem",
    "schwartz_set",
    "serialize_instance",
    "solutions",
    "undominated_pairs",
]
