"""Exact isospectral graph reductions and cospectral vertex pairs."""

from .cospec import (
    CospectralReport,
    are_cospectral,
    are_strongly_cospectral,
    is_latently_automorphic,
    numeric_strong_check,
)
from .graphs import WGraph, WMatrix, adjacency, charpoly, delete_vertices, is_base_set, parse_graph, read_graph
from .latency import LatencyReport, has_swap_automorphism, measure_of_latency
from .ratfun import LAMBDA, Polynomial, RationalFunction, partial_fractions, series_at_infinity
from .reduce import ReducedMatrix, branch_reduce, reduced_charpoly, reduced_spectrum, schur_reduce, sequential_reduce, smash
from .unpack import unpack_2x2, verify_roundtrip
from .walks import closed_walk_counts, composition_identity_check, nonreturning_counts, verify_reduction_series

__version__ = "0.1.0"
