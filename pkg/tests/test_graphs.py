import random
from fractions import Fraction as F

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import FIXTURES
from gen import random_int_matrix, random_matrix
from oracles import shifted_det, sympy_charpoly_coeffs
from isored.errors import DeletingAll, DuplicateEdge, IndexOutOfRange, NonConstantEntries, ParseError
from isored.graphs import (
    WGraph,
    WMatrix,
    adjacency,
    charpoly,
    delete_vertices,
    format_graph,
    is_base_set,
    parse_graph,
    read_graph,
)
from isored.ratfun import LAMBDA, Polynomial

EX4_ARCS = [(0, 1), (0, 2), (2, 0), (0, 3), (3, 1), (1, 1), (1, 4), (4, 4), (4, 0)]


def ex4():
    return read_graph(FIXTURES / "fig3_example4.g")


def test_parse_k2():
    g = parse_graph("undirected 2\n0 1")
    assert not g.directed and g.n == 2
    assert adjacency(g).to_fractions() == [[0, 1], [1, 0]]


def test_parse_weighted_and_loop():
    g = parse_graph("undirected 2\n0 1 3/2\n1 1 -1  # loop\n")
    assert adjacency(g).to_fractions() == [[0, F(3, 2)], [F(3, 2), -1]]
    assert adjacency(parse_graph("directed 1\n0 0 7")).to_fractions() == [[7]]


def test_example4_adjacency():
    text = "directed 5\n0 1\n0 2\n2 0\n0 3\n3 1\n1 1\n1 4\n4 4\n4 0"
    g = parse_graph(text)
    A = adjacency(g).to_fractions()
    assert A == [[int((i, j) in EX4_ARCS) for j in range(5)] for i in range(5)]
    assert adjacency(ex4()).same_entries(adjacency(g))


@pytest.mark.parametrize(
    "text, err, line",
    [
        ("", ParseError, None),
        ("graph 3\n", ParseError, 1),
        ("undirected x\n", ParseError, 1),
        ("undirected 2\n0 1\n1 0\n", DuplicateEdge, 3),
        ("directed 2\n0 1\n0 1 2\n", DuplicateEdge, 3),
        ("undirected 2\n# c\n0 2\n", IndexOutOfRange, 3),
        ("undirected 2\n0 1 1/0\n", ParseError, 2),
        ("undirected 2\n0 1 2 3\n", ParseError, 2),
    ],
)
def test_parse_errors(text, err, line):
    with pytest.raises(err) as exc:
        parse_graph(text)
    assert exc.value.line == line


def test_directed_reverse_arc_is_not_duplicate():
    g = parse_graph("directed 2\n0 1\n1 0 2\n")
    assert adjacency(g).to_fractions() == [[0, 1], [2, 0]]


def test_format_roundtrip():
    for name in ["fig1.g", "fig3_example4.g", "fig7b.g", "two_k2.g"]:
        g = read_graph(FIXTURES / name)
        assert adjacency(parse_graph(format_graph(g))).same_entries(adjacency(g))
    g = parse_graph("directed 3\n0 1 -1/2\n2 2 3\n")
    assert format_graph(g) == "directed 3\n0 1 -1/2\n2 2 3\n"


def test_format_rejects_functions():
    g = WGraph.from_edges(2, [(0, 1, 1 / LAMBDA)], directed=True)
    with pytest.raises(NonConstantEntries):
        format_graph(g)


def test_delete_vertices_examples():
    assert delete_vertices(WMatrix([[0, 1], [1, 0]]), [1]).to_fractions() == [[0]]
    p3 = adjacency(read_graph(FIXTURES / "p3.g"))
    assert delete_vertices(p3, [1]).to_fractions() == [[0, 0], [0, 0]]
    d = delete_vertices(adjacency(ex4()), [0, 1])
    assert d.to_fractions() == [[0, 0, 0], [0, 0, 0], [0, 0, 1]]
    assert d.labels == ("2", "3", "4")
    with pytest.raises(DeletingAll):
        delete_vertices(p3, [0, 1, 2])


def test_charpoly_examples():
    assert charpoly(WMatrix([[0]])) == Polynomial([0, -1])
    assert charpoly(adjacency(read_graph(FIXTURES / "p3.g"))) == Polynomial([0, 2, 0, -1])
    assert charpoly(adjacency(read_graph(FIXTURES / "k2.g"))) == Polynomial([-1, 0, 1])


def test_base_set_examples():
    g = ex4()
    assert is_base_set(g, [0, 1])
    assert not is_base_set(g, [1, 3, 4])
    rng = random.Random(3)
    for _ in range(30):
        A = random_matrix(rng, rng.randint(2, 7), directed=True, density=0.5)
        n = len(A)
        for v in range(n):
            assert is_base_set(WMatrix(A), [u for u in range(n) if u != v])


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 10**6), st.integers(1, 7), st.fractions(-3, 3, max_denominator=4))
def test_charpoly_evaluation_matches_determinant(seed, n, lam0):
    A = random_int_matrix(random.Random(seed), n)
    p = charpoly(WMatrix(A))
    assert p(lam0) == shifted_det(A, lam0)
    assert p.degree == n and p.lc == (-1) ** n


def test_charpoly_against_sympy():
    rng = random.Random(11)
    for _ in range(15):
        A = random_matrix(rng, rng.randint(1, 7), directed=True, weights=(-2, -1, F(1, 2), 1, 3))
        assert charpoly(WMatrix(A)).coeffs == tuple(sympy_charpoly_coeffs(A))


@settings(max_examples=30, deadline=None)
@given(st.integers(0, 10**6))
def test_undirected_adjacency_symmetric_and_delete_composes(seed):
    rng = random.Random(seed)
    n = rng.randint(3, 8)
    A = random_matrix(rng, n, directed=False)
    g = WGraph.from_matrix(WMatrix(A), directed=False)
    m = adjacency(g)
    assert m.is_symmetric()
    a, b = rng.sample(range(n), 2)
    once = delete_vertices(delete_vertices(m, [a]), [b - (b > a)])
    assert once == delete_vertices(m, [a, b])
