"""Synthesize a weighted digraph from a 2x2 reduced matrix.

Each entry ``f_ij`` is split into partial fractions
``c + sum a_k / (λ - r_k)^l_k``.  The constant becomes an edge ``i -> j``
(a loop when ``i == j``); every term becomes a directed path from ``i`` to
``j`` through ``l_k`` new vertices, each carrying a loop of weight ``r_k``,
with ``a_k`` on the first edge and 1 on the rest.  Reducing the result over
vertices 0 and 1 gives back the input.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence, Union

from .errors import NotInW, PreconditionError
from .graphs import WGraph, WMatrix, as_matrix
from .ratfun import PartialFractionForm, partial_fractions
from .reduce import ReducedMatrix, schur_reduce


@dataclass(frozen=True)
class PathBlueprint:
    source: int
    target: int
    interior: int  # number of new vertices
    loop: object  # weight r_k of the loop on each new vertex
    weight: object  # a_k, placed on the first edge


@dataclass(frozen=True)
class UnpackPlan:
    forms: dict  # (i, j) -> PartialFractionForm
    paths: tuple  # PathBlueprint, in construction order

    @property
    def vertex_count(self) -> int:
        return 2 + sum(p.interior for p in self.paths)


def plan_unpack(r: Union[ReducedMatrix, WMatrix]) -> UnpackPlan:
    base = r.base if isinstance(r, ReducedMatrix) else r
    if base.n != 2:
        raise PreconditionError(f"unpacking needs a 2x2 matrix, got {base.n}x{base.n}")
    forms: dict = {}
    paths = []
    for i in range(2):
        for j in range(2):
            f = base[i, j]
            if not f.in_W():
                raise NotInW(f"entry ({i}, {j}) = {f} has numerator degree above denominator degree")
            form: PartialFractionForm = partial_fractions(f)
            forms[(i, j)] = form
            for root, power, coeff in form.terms:
                paths.append(PathBlueprint(i, j, power, root, coeff))
    return UnpackPlan(forms, tuple(paths))


def unpack_2x2(r: Union[ReducedMatrix, WMatrix]) -> WGraph:
    plan = plan_unpack(r)
    edges: dict = {}
    labels = ["0", "1"]
    for (i, j), form in plan.forms.items():
        if form.constant:
            edges[(i, j)] = form.constant
    nxt = 2
    for k, p in enumerate(plan.paths):
        chain = [p.source] + list(range(nxt, nxt + p.interior)) + [p.target]
        for step, v in enumerate(range(nxt, nxt + p.interior), start=1):
            labels.append(f"p{p.source}{p.target}.{k}.{step}")
            if p.loop:
                edges[(v, v)] = p.loop
        nxt += p.interior
        for e, (u, v) in enumerate(zip(chain, chain[1:])):
            edges[(u, v)] = p.weight if e == 0 else 1
    return WGraph.from_edges(nxt, [(u, v, w) for (u, v), w in edges.items()], directed=True, labels=labels)


def verify_roundtrip(
    g: Union[WGraph, WMatrix], r: Union[ReducedMatrix, WMatrix], keep: Sequence[int] | None = None
) -> bool:
    """Does reducing ``g`` over ``keep`` (default: its first k vertices) give ``r``?"""
    base = r.base if isinstance(r, ReducedMatrix) else r
    mat = as_matrix(g)
    keep = list(range(base.n)) if keep is None else list(keep)
    return schur_reduce(mat, keep).base.same_entries(base)
