"""Exact combinatorics of weight-1 conical actions on holomorphic symplectic cores."""

from importlib import resources

from .graded import GradedVectorSpace, direct_sum, is_palindromic, poincare_string, shift

__all__ = [
    "GradedVectorSpace",
    "direct_sum",
    "fixture_path",
    "is_palindromic",
    "poincare_string",
    "shift",
]


def fixture_path(name: str):
    """Path of a model file shipped in ``shscore/fixtures``."""
    return resources.files(__package__).joinpath("fixtures", name)
