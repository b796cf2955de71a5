"""Cospectral and strongly cospectral vertex pairs.

Cospectrality is decided twice, from the characteristic polynomials of the
two vertex-deleted matrices and from the diagonal of the reduction over the
pair; the report carries both witnesses and a disagreement is a fault.
Strong cospectrality adds a squarefree test on the numerator of the pair
reduction's characteristic function. :func:`numeric_strong_check` is a
floating-point oracle working directly with eigenprojectors.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Union

import numpy as np

from .errors import DirectedInput, InternalFault, NotSymmetric, SamePair
from .graphs import WGraph, WMatrix, as_matrix, charpoly, delete_vertices
from .ratfun import Polynomial, is_squarefree
from .reduce import ReducedMatrix, reduced_charpoly, schur_reduce


@dataclass(frozen=True)
class CospectralReport:
    pair: tuple
    cospectral: bool
    via_charpoly: tuple  # (p(M\a), p(M\b))
    via_reduction: ReducedMatrix  # 2x2 reduction over {a, b}
    strongly: Optional[bool] = None
    squarefree_witness: Optional[Polynomial] = None


def are_cospectral(m: Union[WMatrix, WGraph], a: int, b: int) -> CospectralReport:
    if a == b:
        raise SamePair(f"vertices must differ, got {a} twice")
    mat = as_matrix(m)
    pa = charpoly(delete_vertices(mat, [a])) if mat.n > 1 else Polynomial((1,))
    pb = charpoly(delete_vertices(mat, [b])) if mat.n > 1 else Polynomial((1,))
    R = schur_reduce(mat, [a, b])
    by_poly = pa == pb
    by_reduction = R[0, 0] == R[1, 1]
    if by_poly != by_reduction:
        raise InternalFault(
            f"cospectrality tests disagree for ({a}, {b}): charpoly {by_poly}, reduction {by_reduction}"
        )
    return CospectralReport((a, b), by_poly, (pa, pb), R)


def is_latently_automorphic(g: Union[WGraph, WMatrix], a: int, b: int) -> bool:
    """Swap symmetry of the reduction over ``{a, b}`` (undirected inputs)."""
    if a == b:
        raise SamePair(f"vertices must differ, got {a} twice")
    if isinstance(g, WGraph) and g.directed:
        raise DirectedInput("latent automorphism test needs an undirected graph")
    mat = as_matrix(g)
    if not mat.is_symmetric():
        raise DirectedInput("latent automorphism test needs a symmetric matrix")
    R = schur_reduce(mat, [a, b])
    return R[0, 0] == R[1, 1] and R[0, 1] == R[1, 0]


def are_strongly_cospectral(m: Union[WMatrix, WGraph], a: int, b: int) -> CospectralReport:
    report = are_cospectral(m, a, b)
    witness = reduced_charpoly(report.via_reduction).num
    strongly = report.cospectral and is_squarefree(witness)
    return CospectralReport(
        report.pair, report.cospectral, report.via_charpoly, report.via_reduction, strongly, witness
    )


@dataclass(frozen=True)
class NumericSpectral:
    eigenvalues: np.ndarray  # one representative per eigenspace
    vectors: np.ndarray  # orthonormal eigenvectors, columns
    projectors: tuple  # E_theta, aligned with eigenvalues
    tol: float
    min_gap: float  # smallest distance between distinct eigenvalues

    @property
    def reliable(self) -> bool:
        # projector error scales like machine eps / gap
        return self.min_gap > np.sqrt(self.tol)


def numeric_spectral(m: Union[WMatrix, WGraph], tol: float = 1e-9) -> NumericSpectral:
    mat = as_matrix(m)
    if not mat.is_symmetric():
        raise NotSymmetric("spectral decomposition needs a symmetric matrix")
    A = np.array([[float(x) for x in row] for row in mat.to_fractions()])
    vals, vecs = np.linalg.eigh(A)
    scale = max(1.0, float(np.max(np.abs(vals)))) if len(vals) else 1.0
    groups: list[list[int]] = []
    for k, v in enumerate(vals):
        if groups and v - vals[groups[-1][-1]] <= 10 * tol * scale:
            groups[-1].append(k)
        else:
            groups.append([k])
    reps = np.array([vals[g].mean() for g in groups])
    projectors = tuple(vecs[:, g] @ vecs[:, g].T for g in groups)
    gaps = np.diff(reps)
    min_gap = float(gaps.min()) if len(gaps) else np.inf
    return NumericSpectral(reps, vecs, projectors, tol, min_gap)


def numeric_strong_check(m: Union[WMatrix, WGraph], a: int, b: int, tol: float = 1e-9) -> bool:
    """True iff ``E e_a == ±E e_b`` within ``tol`` for every eigenprojector ``E``."""
    spec = numeric_spectral(m, tol)
    for E in spec.projectors:
        ea, eb = E[:, a], E[:, b]
        if min(np.max(np.abs(ea - eb)), np.max(np.abs(ea + eb))) > tol:
            return False
    return True
