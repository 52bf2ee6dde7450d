"""Local antimagic 2-colorings of theta graphs."""
from .core import EdgeLabeling, ThetaGraph, make_theta, parse_lengths
from .constructor import NotTwo, construct
from .feasibility import classify_family, two_color_targets
from .search import brute_force_min_colors, exists_two_coloring
from .verifier import verify

__version__ = "0.1.0"

__all__ = [
    "EdgeLabeling", "ThetaGraph", "make_theta", "parse_lengths", "NotTwo", "construct",
    "classify_family", "two_color_targets", "brute_force_min_colors", "exists_two_coloring",
    "verify", "__version__",
]
