"""Weighted digraphs, their adjacency matrices, and the edge-list text format.

Text format::

    # comment
    undirected 3        # or: directed 3
    0 1                 # unit weight
    1 2 3/2             # rational weight
    2 2 -1              # loop

Undirected files list each edge once.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence, Union

from .errors import (
    DeletingAll,
    DuplicateEdge,
    EmptySet,
    IndexOutOfRange,
    NonConstantEntries,
    ParseError,
)
from .ratfun import ZERO_RF, Polynomial, RationalFunction

VertexSet = tuple  # sorted tuple of distinct vertex indices
Entry = Union[int, Fraction, RationalFunction]


def _rf(x: Entry) -> RationalFunction:
    if isinstance(x, RationalFunction):
        return x
    return RationalFunction.constant(x)


def vertex_set(vertices: Iterable[int], n: int) -> VertexSet:
    vs = tuple(sorted(set(int(v) for v in vertices)))
    for v in vs:
        if not 0 <= v < n:
            raise IndexOutOfRange(f"vertex {v} not in 0..{n - 1}")
    return vs


def complement(S: Iterable[int], n: int) -> VertexSet:
    s = set(S)
    return tuple(v for v in range(n) if v not in s)


class WMatrix:
    """Square matrix of rational functions with row/column labels."""

    __slots__ = ("entries", "labels")

    def __init__(self, rows: Sequence[Sequence[Entry]], labels: Sequence[str] | None = None):
        self.entries = tuple(tuple(_rf(x) for x in row) for row in rows)
        n = len(self.entries)
        if any(len(row) != n for row in self.entries):
            raise ValueError("matrix must be square")
        self.labels = tuple(labels) if labels is not None else tuple(str(i) for i in range(n))
        if len(self.labels) != n or len(set(self.labels)) != n:
            raise ValueError("labels must be distinct and one per row")

    @property
    def n(self) -> int:
        return len(self.entries)

    def __len__(self) -> int:
        return len(self.entries)

    def __getitem__(self, ij) -> RationalFunction:
        i, j = ij
        return self.entries[i][j]

    def __eq__(self, other) -> bool:
        if not isinstance(other, WMatrix):
            return NotImplemented
        return self.entries == other.entries and self.labels == other.labels

    def same_entries(self, other: "WMatrix") -> bool:
        return self.entries == other.entries

    def __hash__(self) -> int:
        return hash((self.entries, self.labels))

    def __repr__(self) -> str:
        return f"WMatrix({[[str(x) for x in row] for row in self.entries]}, labels={list(self.labels)})"

    def is_constant(self) -> bool:
        return all(x.is_constant() for row in self.entries for x in row)

    def is_symmetric(self) -> bool:
        n = self.n
        return all(self.entries[i][j] == self.entries[j][i] for i in range(n) for j in range(i))

    def to_fractions(self) -> list[list[Fraction]]:
        if not self.is_constant():
            raise NonConstantEntries("matrix has non-constant entries")
        return [[x.num.lc for x in row] for row in self.entries]

    def submatrix(self, rows: Sequence[int], cols: Sequence[int]) -> list[list[RationalFunction]]:
        return [[self.entries[i][j] for j in cols] for i in rows]

    def principal(self, keep: Sequence[int]) -> "WMatrix":
        return WMatrix(self.submatrix(keep, keep), [self.labels[i] for i in keep])

    def permuted(self, order: Sequence[int]) -> "WMatrix":
        return self.principal(order)


@dataclass(frozen=True)
class WGraph:
    n: int
    directed: bool
    edges: dict = field(default_factory=dict)  # (u, v) -> RationalFunction, never zero
    labels: tuple = ()

    def __post_init__(self):
        if not self.labels:
            object.__setattr__(self, "labels", tuple(str(i) for i in range(self.n)))

    @classmethod
    def from_edges(
        cls,
        n: int,
        edges: Iterable,
        directed: bool = False,
        labels: Sequence[str] | None = None,
    ) -> "WGraph":
        """Build from ``(u, v)`` or ``(u, v, w)`` tuples; undirected edges listed once."""
        table: dict = {}
        for e in edges:
            u, v = e[0], e[1]
            w = _rf(e[2] if len(e) > 2 else 1)
            if not (0 <= u < n and 0 <= v < n):
                raise IndexOutOfRange(f"edge ({u}, {v}) outside 0..{n - 1}")
            if (u, v) in table:
                raise DuplicateEdge(f"duplicate edge ({u}, {v})")
            if w.is_zero():
                continue
            table[(u, v)] = w
            if not directed:
                table[(v, u)] = w
        return cls(n, directed, table, tuple(labels) if labels else ())

    @classmethod
    def from_matrix(cls, m: WMatrix, directed: bool | None = None) -> "WGraph":
        if directed is None:
            directed = not m.is_symmetric()
        edges = {
            (i, j): m[i, j] for i in range(m.n) for j in range(m.n) if not m[i, j].is_zero()
        }
        return cls(m.n, directed, edges, m.labels)

    def weight(self, u: int, v: int) -> RationalFunction:
        return self.edges.get((u, v), ZERO_RF)

    def out_neighbors(self, u: int) -> list[int]:
        return sorted(v for (a, v) in self.edges if a == u)


def parse_graph(text: str) -> WGraph:
    header = None
    n = 0
    edges = []
    seen = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tokens = line.split()
        if header is None:
            if len(tokens) != 2 or tokens[0] not in ("directed", "undirected"):
                raise ParseError("expected 'directed n' or 'undirected n'", lineno)
            try:
                n = int(tokens[1])
            except ValueError:
                raise ParseError(f"bad vertex count {tokens[1]!r}", lineno) from None
            if n < 1:
                raise ParseError("vertex count must be positive", lineno)
            header = tokens[0]
            continue
        if len(tokens) not in (2, 3):
            raise ParseError("expected 'u v [w]'", lineno)
        try:
            u, v = int(tokens[0]), int(tokens[1])
            w = Fraction(tokens[2]) if len(tokens) == 3 else Fraction(1)
        except (ValueError, ZeroDivisionError):
            raise ParseError(f"malformed edge {line!r}", lineno) from None
        if not (0 <= u < n and 0 <= v < n):
            raise IndexOutOfRange(f"edge ({u}, {v}) outside 0..{n - 1}", lineno)
        key = (u, v) if header == "directed" else (min(u, v), max(u, v))
        if key in seen:
            raise DuplicateEdge(f"duplicate edge ({u}, {v})", lineno)
        seen.add(key)
        edges.append((u, v, w))
    if header is None:
        raise ParseError("missing 'directed n' or 'undirected n' header")
    return WGraph.from_edges(n, edges, directed=(header == "directed"))


def read_graph(path) -> WGraph:
    with open(path, encoding="utf-8") as fh:
        return parse_graph(fh.read())


def format_graph(g: WGraph) -> str:
    """Serialize a constant-weight graph to the edge-list text format."""
    lines = [f"{'directed' if g.directed else 'undirected'} {g.n}"]
    if any(lab != str(i) for i, lab in enumerate(g.labels)):
        lines.append("# labels: " + " ".join(g.labels))
    for (u, v), w in sorted(g.edges.items()):
        if not g.directed and u > v:
            continue
        if not w.is_constant():
            raise NonConstantEntries(f"edge ({u}, {v}) has non-constant weight {w}")
        c = w.constant_value()
        lines.append(f"{u} {v}" if c == 1 else f"{u} {v} {c}")
    return "\n".join(lines) + "\n"


def adjacency(g: WGraph) -> WMatrix:
    rows = [[g.weight(i, j) for j in range(g.n)] for i in range(g.n)]
    return WMatrix(rows, g.labels)


def as_matrix(x: Union[WGraph, WMatrix]) -> WMatrix:
    return adjacency(x) if isinstance(x, WGraph) else x


def delete_vertices(m: WMatrix, S: Iterable[int]) -> WMatrix:
    S = vertex_set(S, m.n)
    keep = complement(S, m.n)
    if not keep:
        raise DeletingAll("cannot delete every vertex")
    return m.principal(keep)


def faddeev_leverrier(A: Sequence[Sequence[Fraction]]):
    """Coefficients of det(λI - A) and the adjugate of (λI - A).

    Returns ``(c, B)`` with ``c`` ascending (``c[n] == 1``) and ``B[k]`` the
    constant matrix multiplying ``λ^(n-1-k)`` in adj(λI - A).
    """
    n = len(A)
    c = [Fraction(0)] * (n + 1)
    c[n] = Fraction(1)
    B = []
    Mk = [[Fraction(0)] * n for _ in range(n)]
    for k in range(1, n + 1):
        # M_k = A M_{k-1} + c_{n-k+1} I
        AM = _matmul(A, Mk) if k > 1 else [[Fraction(0)] * n for _ in range(n)]
        for i in range(n):
            AM[i][i] += c[n - k + 1]
        Mk = AM
        B.append(Mk)
        AMk = _matmul(A, Mk)
        c[n - k] = -sum(AMk[i][i] for i in range(n)) / k
    return c, B


def _matmul(A, B):
    n, m, p = len(A), len(B), len(B[0]) if B else 0
    out = [[Fraction(0)] * p for _ in range(n)]
    for i in range(n):
        Ai = A[i]
        row = out[i]
        for k in range(m):
            a = Ai[k]
            if a:
                Bk = B[k]
                for j in range(p):
                    if Bk[j]:
                        row[j] += a * Bk[j]
    return out


def charpoly_of(A: Sequence[Sequence[Fraction]]) -> Polynomial:
    """det(A - λI) for a rational matrix given as nested lists."""
    n = len(A)
    c, _ = faddeev_leverrier(A)
    p = Polynomial(c)
    return -p if n % 2 else p


def charpoly(m: WMatrix) -> Polynomial:
    """p(M, λ) = det(M - λI); leading coefficient (-1)^n."""
    return charpoly_of(m.to_fractions())


def is_base_set(g: Union[WGraph, WMatrix], S: Iterable[int]) -> bool:
    """True iff every non-loop cycle meets ``S``."""
    m = as_matrix(g)
    S = vertex_set(S, m.n)
    if not S:
        raise EmptySet("base set must be nonempty")
    rest = complement(S, m.n)
    # Kahn's algorithm on the subgraph induced by the complement, loops ignored
    indeg = {v: 0 for v in rest}
    succ = {v: [] for v in rest}
    for u in rest:
        for v in rest:
            if u != v and not m[u, v].is_zero():
                succ[u].append(v)
                indeg[v] += 1
    stack = [v for v in rest if indeg[v] == 0]
    removed = 0
    while stack:
        u = stack.pop()
        removed += 1
        for v in succ[u]:
            indeg[v] -= 1
            if indeg[v] == 0:
                stack.append(v)
    return removed == len(rest)
