"""Swap automorphisms of weighted matrices and the measure of latency.

The measure of latency of a cospectral pair ``{a, b}`` in a graph on ``n``
vertices is ``(n - |T|) / (n - 2)`` where ``T`` is a largest vertex set
containing the pair whose reduction has an automorphism sending ``a`` to
``b``.  It is 0 for an ordinary automorphism and 1 when the symmetry only
shows up in the reduction over the pair itself.
"""

from __future__ import annotations

import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Optional, Union

from .cospec import are_cospectral
from .errors import InternalFault, NoLatentAutomorphism, NotCospectral, SamePair
from .graphs import WGraph, WMatrix, as_matrix
from .reduce import ReducedMatrix, schur_reduce

log = logging.getLogger(__name__)


def _color_matrix(mat: WMatrix) -> list[list[int]]:
    ids: dict = {}
    return [[ids.setdefault(x, len(ids)) for x in row] for row in mat.entries]


def has_swap_automorphism(r: Union[ReducedMatrix, WMatrix, WGraph], a: int, b: int) -> bool:
    """Is there a weight-preserving permutation of the vertices mapping ``a`` to ``b``?

    ``a`` and ``b`` index rows of ``r``.  Backtracking search; candidates for
    each vertex are restricted to vertices with the same loop weight and the
    same multisets of outgoing and incoming weights.
    """
    mat = r.base if isinstance(r, ReducedMatrix) else as_matrix(r)
    n = mat.n
    if a == b:
        raise SamePair(f"vertices must differ, got {a} twice")
    C = _color_matrix(mat)
    sig = [
        (
            C[v][v],
            tuple(sorted(C[v][u] for u in range(n) if u != v)),
            tuple(sorted(C[u][v] for u in range(n) if u != v)),
        )
        for v in range(n)
    ]
    if sig[a] != sig[b]:
        return False
    cands = {v: [u for u in range(n) if sig[u] == sig[v]] for v in range(n)}
    order = [a] + sorted((v for v in range(n) if v != a), key=lambda v: len(cands[v]))
    phi: dict[int, int] = {}
    used: set[int] = set()

    def fits(v: int, u: int) -> bool:
        for w, pw in phi.items():
            if C[v][w] != C[u][pw] or C[w][v] != C[pw][u]:
                return False
        return True

    def search(k: int) -> bool:
        if k == n:
            return True
        v = order[k]
        options = [b] if k == 0 else cands[v]
        for u in options:
            if u in used or not fits(v, u):
                continue
            phi[v] = u
            used.add(u)
            if search(k + 1):
                return True
            del phi[v]
            used.discard(u)
        return False

    return search(0)


@dataclass(frozen=True)
class LatencyReport:
    pair: tuple
    n: int
    witness_T: tuple
    measure: Fraction
    levels: list = field(default_factory=list)  # one dict per cardinality searched


def _swap_after_reduction(mat: WMatrix, T: tuple, a: int, b: int) -> bool:
    R = schur_reduce(mat, T) if len(T) < mat.n else mat
    return has_swap_automorphism(R, T.index(a), T.index(b))


def measure_of_latency(
    g: Union[WGraph, WMatrix], a: int, b: int, workers: Optional[int] = None
) -> LatencyReport:
    """Search supersets of ``{a, b}`` from largest to smallest for a swap.

    The first cardinality with any success fixes ``|T|``; ties go to the
    lexicographically smallest set.  ``workers > 1`` fans the sets of each
    cardinality out over a process pool; the result does not depend on it.
    """
    mat = as_matrix(g)
    n = mat.n
    if not are_cospectral(mat, a, b).cospectral:
        raise NotCospectral(f"vertices {a} and {b} are not cospectral")
    others = [v for v in range(n) if v not in (a, b)]
    levels = []
    witness = None
    pool = ProcessPoolExecutor(workers) if workers and workers > 1 else None
    try:
        for size in range(n, 1, -1):
            sets = [tuple(sorted((a, b) + extra)) for extra in combinations(others, size - 2)]
            if pool is not None:
                hits = list(pool.map(_swap_after_reduction, [mat] * len(sets), sets, [a] * len(sets), [b] * len(sets)))
            else:
                hits = [_swap_after_reduction(mat, T, a, b) for T in sets]
            found = [T for T, ok in zip(sets, hits) if ok]
            levels.append({"size": size, "examined": len(sets), "found": len(found)})
            log.debug("latency search |T|=%d: %d of %d sets symmetric", size, len(found), len(sets))
            if found:
                witness = min(found)
                break
    finally:
        if pool is not None:
            pool.shutdown()
    if witness is None:
        raise NoLatentAutomorphism(f"no reduction containing {a} and {b} swaps them")
    if mat.is_symmetric():
        # a symmetry seen over T persists in the reduction over the pair
        R2 = schur_reduce(mat, [a, b])
        if not has_swap_automorphism(R2, 0, 1):
            raise InternalFault(f"swap over {witness} did not persist to the pair reduction")
    measure = Fraction(0) if n == 2 else Fraction(n - len(witness), n - 2)
    return LatencyReport((a, b), n, witness, measure, levels)
