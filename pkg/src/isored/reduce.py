"""Isospectral reductions.

Two independent routes compute the reduction of ``M`` over a vertex set ``S``:

* :func:`schur_reduce` forms the λ-dependent Schur complement
  ``M_SS - M_ST (M_TT - λI)^{-1} M_TS`` (``T`` the complement of ``S``).
* :func:`branch_reduce` sums branch products over all paths and cycles whose
  interior avoids ``S``; it needs ``S`` to be a base set.

They agree entrywise whenever both apply, which the test-suite relies on.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple, Sequence, Union

from .errors import ImproperSubset, NotABaseSet, NotNested, SingularComplement
from .graphs import (
    VertexSet,
    WGraph,
    WMatrix,
    as_matrix,
    charpoly_of,
    complement,
    faddeev_leverrier,
    is_base_set,
    vertex_set,
)
from .ratfun import LAMBDA, ONE, ZERO_RF, Polynomial, RationalFunction, poly_gcd


@dataclass(frozen=True)
class ReducedMatrix:
    base: WMatrix
    kept: VertexSet  # indices into the original, unreduced matrix
    n: int  # size of the original matrix

    def __getitem__(self, ij) -> RationalFunction:
        return self.base[ij]

    @property
    def size(self) -> int:
        return self.base.n

    @property
    def labels(self) -> tuple:
        return self.base.labels

    def same_entries(self, other) -> bool:
        other = other.base if isinstance(other, ReducedMatrix) else other
        return self.base.same_entries(other)


@dataclass(frozen=True)
class Branch:
    vertices: tuple
    product: RationalFunction


Reducible = Union[WMatrix, WGraph, ReducedMatrix]


def _unwrap(m: Reducible):
    """Return (matrix, original indices, original size)."""
    if isinstance(m, ReducedMatrix):
        return m.base, m.kept, m.n
    mat = as_matrix(m)
    return mat, tuple(range(mat.n)), mat.n


def _check_subset(S, n: int) -> VertexSet:
    S = vertex_set(S, n)
    if not S:
        raise ImproperSubset("reduction set must be nonempty")
    return S


def _degree_key(f: RationalFunction) -> int:
    return f.num.degree + f.den.degree


def _solve_shifted(A: list, B: list) -> list:
    """Solve (A - λI) X = B by Gauss-Jordan elimination over rational functions."""
    k = len(A)
    s = len(B[0]) if B else 0
    aug = [[A[i][j] - LAMBDA if i == j else A[i][j] for j in range(k)] + list(B[i]) for i in range(k)]
    width = k + s
    for col in range(k):
        candidates = [r for r in range(col, k) if not aug[r][col].is_zero()]
        if not candidates:
            raise SingularComplement("complement block minus λI is singular")
        piv = min(candidates, key=lambda r: _degree_key(aug[r][col]))
        aug[col], aug[piv] = aug[piv], aug[col]
        inv = aug[col][col].inverse()
        prow = aug[col]
        for j in range(col, width):
            if not prow[j].is_zero():
                prow[j] = prow[j] * inv
        for r in range(k):
            if r == col:
                continue
            f = aug[r][col]
            if f.is_zero():
                continue
            row = aug[r]
            for j in range(col, width):
                if not prow[j].is_zero():
                    row[j] = row[j] - f * prow[j]
    return [row[k:] for row in aug]


def _schur_elimination(mat: WMatrix, S: VertexSet, T: VertexSet) -> list:
    X = _solve_shifted(mat.submatrix(T, T), mat.submatrix(T, S))
    rows = []
    for i in S:
        row = []
        for c in range(len(S)):
            acc = mat[i, S[c]]
            for t, v in enumerate(T):
                a = mat[i, v]
                if not a.is_zero() and not X[t][c].is_zero():
                    acc = acc - a * X[t][c]
            row.append(acc)
        rows.append(row)
    return rows


def _schur_adjugate(mat: WMatrix, S: VertexSet, T: VertexSet) -> list:
    """Constant-matrix route: (M_TT - λI)^{-1} = -adj(λI - M_TT) / det(λI - M_TT)."""
    F = mat.to_fractions()
    A0 = [[F[i][j] for j in T] for i in T]
    U = [[F[i][j] for j in T] for i in S]
    V = [[F[i][j] for j in S] for i in T]
    c, B = faddeev_leverrier(A0)
    q = Polynomial(c)
    k, s = len(T), len(S)
    # coefficient of λ^(k-1-idx) in the numerator block U adj(λI - A0) V
    blocks = []
    for Bk in B:
        UB = [[sum(U[i][t] * Bk[t][u] for t in range(k) if U[i][t]) for u in range(k)] for i in range(s)]
        blocks.append([[sum(UB[i][u] * V[u][j] for u in range(k) if UB[i][u]) for j in range(s)] for i in range(s)])
    rows = []
    for a in range(s):
        row = []
        for b in range(s):
            coeffs = [blocks[k - 1 - d][a][b] for d in range(k)]
            num = q.scale(F[S[a]][S[b]]) + Polynomial(coeffs)
            row.append(RationalFunction(num, q))
        rows.append(row)
    return rows


def schur_reduce(m: Reducible, S, method: str = "auto") -> ReducedMatrix:
    """Isospectral reduction of ``m`` over ``S`` (indices into ``m``).

    ``method`` is ``"elimination"``, ``"adjugate"`` (constant entries only) or
    ``"auto"``, which uses the adjugate route whenever the entries are constant.
    """
    mat, orig, n = _unwrap(m)
    S = _check_subset(S, mat.n)
    T = complement(S, mat.n)
    kept = tuple(orig[i] for i in S)
    labels = [mat.labels[i] for i in S]
    if not T:
        return ReducedMatrix(mat, kept, n)
    if method == "auto":
        method = "adjugate" if mat.is_constant() else "elimination"
    if method == "adjugate":
        rows = _schur_adjugate(mat, S, T)
    elif method == "elimination":
        rows = _schur_elimination(mat, S, T)
    else:
        raise ValueError(f"unknown method {method!r}")
    return ReducedMatrix(WMatrix(rows, labels), kept, n)


def branches(g: Union[WGraph, WMatrix], S) -> list[Branch]:
    """All branches with respect to base set ``S``, in depth-first order."""
    mat = as_matrix(g)
    S = _check_subset(S, mat.n)
    if not is_base_set(mat, S):
        raise NotABaseSet(f"{list(S)} is not a base set: a non-loop cycle avoids it")
    in_S = set(S)
    succ = [[v for v in range(mat.n) if not mat[u, v].is_zero()] for u in range(mat.n)]
    # 1/(λ - ω(v,v)) for interior vertices; loops enter only through these factors
    damping = {v: (LAMBDA - mat[v, v]).inverse() for v in range(mat.n) if v not in in_S}
    out: list[Branch] = []

    def extend(path: list, product: RationalFunction, on_path: set):
        u = path[-1]
        for w in succ[u]:
            if w == u:
                continue
            step = product * mat[u, w] * damping[u]
            if w in in_S:
                out.append(Branch(tuple(path + [w]), step))
            elif w not in on_path:
                on_path.add(w)
                extend(path + [w], step, on_path)
                on_path.discard(w)

    for i in S:
        for v in succ[i]:
            w = mat[i, v]
            if v in in_S:
                out.append(Branch((i, v), w))
            else:
                extend([i, v], w, {v})
    return out


def branch_product(g: Union[WGraph, WMatrix], vertices: Sequence[int]) -> RationalFunction:
    """Branch product of an explicit vertex sequence, straight from edge weights."""
    mat = as_matrix(g)
    if len(vertices) <= 2:
        return mat[vertices[0], vertices[-1]]
    prod = mat[vertices[0], vertices[1]]
    for a, b in zip(vertices[1:-1], vertices[2:]):
        prod = prod * mat[a, b] / (LAMBDA - mat[a, a])
    return prod


def branch_reduce(g: Union[WGraph, WMatrix], S) -> ReducedMatrix:
    mat = as_matrix(g)
    S = _check_subset(S, mat.n)
    pos = {v: k for k, v in enumerate(S)}
    rows = [[ZERO_RF] * len(S) for _ in S]
    for br in branches(mat, S):
        i, j = pos[br.vertices[0]], pos[br.vertices[-1]]
        rows[i][j] = rows[i][j] + br.product
    return ReducedMatrix(WMatrix(rows, [mat.labels[v] for v in S]), S, mat.n)


def smash(m: Reducible, a: int) -> RationalFunction:
    """Reduction over the single vertex ``a``."""
    mat, _, _ = _unwrap(m)
    if mat.n == 1:
        return mat[0, 0]
    return schur_reduce(mat, [a])[0, 0]


def rf_det(rows: Sequence[Sequence[RationalFunction]]) -> RationalFunction:
    n = len(rows)
    if n == 0:
        return RationalFunction.constant(1)
    if n == 1:
        return rows[0][0]
    if n == 2:
        return rows[0][0] * rows[1][1] - rows[0][1] * rows[1][0]
    a = [list(r) for r in rows]
    det = RationalFunction.constant(1)
    for col in range(n):
        candidates = [r for r in range(col, n) if not a[r][col].is_zero()]
        if not candidates:
            return ZERO_RF
        piv = min(candidates, key=lambda r: _degree_key(a[r][col]))
        if piv != col:
            a[col], a[piv] = a[piv], a[col]
            det = -det
        p = a[col][col]
        det = det * p
        inv = p.inverse()
        for r in range(col + 1, n):
            f = a[r][col]
            if f.is_zero():
                continue
            f = f * inv
            for j in range(col + 1, n):
                if not a[col][j].is_zero():
                    a[r][j] = a[r][j] - f * a[col][j]
    return det


def reduced_charpoly(r: Union[ReducedMatrix, WMatrix]) -> RationalFunction:
    """det(R(λ) - λI) in lowest terms."""
    base = r.base if isinstance(r, ReducedMatrix) else r
    n = base.n
    rows = [[base[i, j] - LAMBDA if i == j else base[i, j] for j in range(n)] for i in range(n)]
    return rf_det(rows)


class ReducedSpectrum(NamedTuple):
    numerator: Polynomial  # roots are the eigenvalues of the reduction
    removed: Polynomial  # monic factor shared with the complement block


def reduced_spectrum(m: Union[WMatrix, WGraph], S) -> ReducedSpectrum:
    """Split p(M) into the reduction's eigenvalue polynomial and the cancelled part.

    ``numerator * removed == charpoly(M)`` exactly.
    """
    mat = as_matrix(m)
    S = _check_subset(S, mat.n)
    T = complement(S, mat.n)
    F = mat.to_fractions()
    full = charpoly_of(F)
    block = charpoly_of([[F[i][j] for j in T] for i in T]) if T else ONE
    g = poly_gcd(full, block)
    return ReducedSpectrum(full.exact_div(g), g)


def sequential_reduce(m: Union[WMatrix, WGraph], chain: Sequence) -> ReducedMatrix:
    """Reduce over each set of ``chain`` in turn (sets in original indices)."""
    mat = as_matrix(m)
    if not chain:
        raise NotNested("empty reduction chain")
    current: Union[WMatrix, ReducedMatrix] = mat
    prev = set(range(mat.n))
    for step in chain:
        S = set(vertex_set(step, mat.n))
        if not S or not S < prev:
            raise NotNested(f"{sorted(S)} is not a proper nonempty subset of {sorted(prev)}")
        kept = current.kept if isinstance(current, ReducedMatrix) else tuple(range(mat.n))
        local = [k for k, v in enumerate(kept) if v in S]
        current = schur_reduce(current, local)
        prev = S
    return current
