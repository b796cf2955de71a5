"""Closed-walk and non-returning-walk counts, and the generating-function
identities tying them to isospectral reductions."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Union

from .graphs import WGraph, WMatrix, as_matrix, charpoly, complement, delete_vertices, vertex_set
from .ratfun import LAMBDA, RationalFunction, series_at_infinity
from .reduce import schur_reduce


@dataclass(frozen=True)
class WalkTable:
    vertex: int
    K: int
    closed: tuple  # w_0..w_K
    nonreturning: tuple  # w*_1..w*_K


@dataclass(frozen=True)
class NonReturningMatrixSeries:
    S: tuple
    K: int
    mats: tuple  # mats[k-1] is the |S|x|S| matrix w*_k(S)


def closed_walk_counts(m: Union[WMatrix, WGraph], a: int, K: int) -> list[Fraction]:
    """Entry ``k`` is ``(M^k)[a, a]`` for ``k = 0..K``."""
    if K < 0:
        raise ValueError("K must be nonnegative")
    F = as_matrix(m).to_fractions()
    n = len(F)
    row = [Fraction(int(j == a)) for j in range(n)]
    out = [row[a]]
    for _ in range(K):
        row = [sum(row[i] * F[i][j] for i in range(n) if row[i]) for j in range(n)]
        out.append(row[a])
    return out


def nonreturning_counts(m: Union[WMatrix, WGraph], S, K: int) -> NonReturningMatrixSeries:
    """``w*_1 = M_SS`` and ``w*_k = M_ST M_TT^(k-2) M_TS`` for ``k >= 2``."""
    if K < 1:
        raise ValueError("K must be at least 1")
    F = as_matrix(m).to_fractions()
    S = vertex_set(S, len(F))
    T = complement(S, len(F))
    mats = [tuple(tuple(F[i][j] for j in S) for i in S)]
    Y = [[F[t][j] for j in S] for t in T]  # M_TT^(k-2) M_TS
    for _ in range(2, K + 1):
        mats.append(
            tuple(
                tuple(sum((F[i][t] * Y[r][c] for r, t in enumerate(T)), Fraction(0)) for c in range(len(S)))
                for i in S
            )
        )
        Y = [
            [sum((F[t][u] * Y[r][c] for r, u in enumerate(T)), Fraction(0)) for c in range(len(S))]
            for t in T
        ]
    return NonReturningMatrixSeries(S, K, tuple(mats))


def walk_table(m: Union[WMatrix, WGraph], a: int, K: int) -> WalkTable:
    closed = closed_walk_counts(m, a, K)
    star = nonreturning_counts(m, [a], K) if K >= 1 else None
    nonret = tuple(w[0][0] for w in star.mats) if star else ()
    return WalkTable(a, K, tuple(closed), nonret)


def verify_reduction_series(m: Union[WMatrix, WGraph], S, K: int) -> bool:
    """Check the reduction's expansion in 1/λ against non-returning walk counts."""
    mat = as_matrix(m)
    R = schur_reduce(mat, S)
    star = nonreturning_counts(mat, S, K)
    s = R.size
    for i in range(s):
        for j in range(s):
            series = series_at_infinity(R[i, j], K - 1)
            if any(series[k] != star.mats[k][i][j] for k in range(K)):
                return False
    return True


def compositions(total: int):
    """All tuples of positive integers summing to ``total``."""
    if total == 0:
        yield ()
        return
    for k in range(total):
        for cuts in combinations(range(1, total), k):
            bounds = (0,) + cuts + (total,)
            yield tuple(b - a for a, b in zip(bounds, bounds[1:]))


def composition_identity_check(m: Union[WMatrix, WGraph], a: int, L: int) -> bool:
    """Closed walks at ``a`` versus products of non-returning walk counts."""
    closed = closed_walk_counts(m, a, L)
    star = [Fraction(0)] + [w[0][0] for w in nonreturning_counts(m, [a], L).mats]
    for ell in range(L + 1):
        total = Fraction(0)
        for comp in compositions(ell):
            prod = Fraction(1)
            for part in comp:
                prod *= star[part]
                if not prod:
                    break
            total += prod
        if total != closed[ell]:
            return False
    return True


def walk_generating_function(m: Union[WMatrix, WGraph], a: int) -> RationalFunction:
    """``-λ p(M\\a) / p(M)``: the closed-walk generating function at ``a`` in 1/λ."""
    mat = as_matrix(m)
    if mat.n == 1:
        return -LAMBDA / RationalFunction(charpoly(mat))
    return -LAMBDA * RationalFunction(charpoly(delete_vertices(mat, [a])), charpoly(mat))
