"""JSON encodings shared by the CLI and the unpacking input.

Rationals are strings ``"p/q"`` (or ``"p"``); polynomials are ascending
coefficient arrays of such strings; rational functions are ``{"num", "den"}``.
"""

from __future__ import annotations

import json
from typing import Union

from .cospec import CospectralReport
from .errors import ParseError
from .graphs import WGraph, WMatrix
from .latency import LatencyReport
from .ratfun import poly_to_json, rf_from_json, rf_to_json
from .reduce import ReducedMatrix
from .walks import WalkTable


def matrix_to_json(m: Union[ReducedMatrix, WMatrix]) -> dict:
    base = m.base if isinstance(m, ReducedMatrix) else m
    return {
        "labels": list(base.labels),
        "entries": [[rf_to_json(x) for x in row] for row in base.entries],
    }


def matrix_from_json(data: dict) -> WMatrix:
    try:
        entries = [[rf_from_json(x) for x in row] for row in data["entries"]]
        return WMatrix(entries, data.get("labels"))
    except (KeyError, TypeError, ValueError, ZeroDivisionError) as exc:
        raise ParseError(f"malformed reduced-matrix JSON: {exc}") from None


def read_matrix(path) -> WMatrix:
    with open(path, encoding="utf-8") as fh:
        try:
            data = json.load(fh)
        except json.JSONDecodeError as exc:
            raise ParseError(f"invalid JSON: {exc.msg}", exc.lineno) from None
    return matrix_from_json(data)


def cospectral_to_json(report: CospectralReport, numeric: bool | None = None) -> dict:
    a, b = report.pair
    out = {
        "pair": [a, b],
        "cospectral": report.cospectral,
        "via_charpoly": {
            "deleted_a": poly_to_json(report.via_charpoly[0]),
            "deleted_b": poly_to_json(report.via_charpoly[1]),
        },
        "via_reduction": matrix_to_json(report.via_reduction),
        "strongly": report.strongly,
        "squarefree_witness": (
            poly_to_json(report.squarefree_witness) if report.squarefree_witness is not None else None
        ),
    }
    if numeric is not None:
        out["numeric_check"] = numeric
    return out


def latency_to_json(report: LatencyReport) -> dict:
    return {
        "pair": list(report.pair),
        "n": report.n,
        "measure": str(report.measure),
        "witness": list(report.witness_T),
        "levels_searched": report.levels,
    }


def walks_to_json(table: WalkTable) -> dict:
    return {
        "vertex": table.vertex,
        "K": table.K,
        "closed": [str(x) for x in table.closed],
        "nonreturning": [str(x) for x in table.nonreturning],
    }


def graph_to_json(g: WGraph) -> dict:
    return {
        "directed": g.directed,
        "n": g.n,
        "labels": list(g.labels),
        "edges": [[u, v, str(w.constant_value())] for (u, v), w in sorted(g.edges.items())],
    }


def dumps(data) -> str:
    return json.dumps(data, indent=2, ensure_ascii=False)
