from __future__ import annotations

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from turan4.errors import EdgeArityNot4, IndexOutOfRange, ParseError
from turan4.hypergraph import (
    LabeledFourGraph,
    complete,
    disjoint_union,
    dumps_json,
    dumps_t4g,
    empty,
    from_edges,
    induced,
    loads_json,
    loads_t4g,
    read_graph,
    remove,
    write_graph,
)


@st.composite
def graphs(draw, max_n=9):
    n = draw(st.integers(0, max_n))
    if n < 4:
        return from_edges(n, [])
    quad = st.lists(st.integers(0, n - 1), min_size=4, max_size=4, unique=True)
    return from_edges(n, draw(st.lists(quad, max_size=20)))


def test_canonical_form_sorts_and_dedups():
    g = from_edges(6, [[3, 2, 1, 0], [0, 1, 2, 3], [5, 4, 3, 2]])
    assert g.e == 2
    assert g.edge_tuples() == [(0, 1, 2, 3), (2, 3, 4, 5)]
    assert g == from_edges(6, [[2, 3, 4, 5], [0, 1, 3, 2]])


def test_edges_are_read_only():
    g = complete(5)
    with pytest.raises(ValueError):
        g.edges[0, 0] = 4


@pytest.mark.parametrize("edges", [[[0, 1, 2]], [[0, 1, 2, 2]], [[0, 1, 2, 3, 4]]])
def test_bad_arity(edges):
    with pytest.raises(EdgeArityNot4):
        from_edges(6, edges)


@pytest.mark.parametrize("edges", [[[0, 1, 2, 6]], [[-1, 0, 1, 2]]])
def test_index_out_of_range(edges):
    with pytest.raises(IndexOutOfRange):
        from_edges(6, edges)


def test_complete_and_empty():
    assert complete(7).e == 35
    assert empty(5).e == 0
    assert complete(3).e == 0


def test_induced_relabels_densely():
    g = complete(6)
    sub, index = induced(g, [5, 1, 3, 4])
    assert sub.n == 4 and sub.e == 1
    assert index == {1: 0, 3: 1, 4: 2, 5: 3}
    with pytest.raises(IndexOutOfRange):
        induced(g, [7])


def test_remove_is_complement_of_induced():
    g = complete(6)
    r, _ = remove(g, [0])
    assert r == complete(5)


def test_disjoint_union_offsets():
    u = disjoint_union([complete(5), empty(2), complete(4)])
    assert u.n == 11 and u.e == 6
    assert (7, 8, 9, 10) in u.edge_tuples()
    assert disjoint_union([]).n == 0


def test_degrees():
    assert complete(5).degrees().tolist() == [4] * 5


def test_labeled_graph_validation():
    g = complete(4)
    with pytest.raises(ValueError):
        LabeledFourGraph(g, ((0,), (1,), (2,)))
    with pytest.raises(ValueError):
        LabeledFourGraph(g, ((0,), (0,), (1,), (2,)))
    with pytest.raises(ValueError):
        LabeledFourGraph(g, ((0,), (1,), (2,), (3, 4)))
    h = LabeledFourGraph(g, ((0, 9), (1, 9), (2, 9), (3, 9)), "x")
    assert h.index_of((2, 9)) == 2
    assert h.remove([0]).labels == ((1, 9), (2, 9), (3, 9))


@given(graphs())
def test_t4g_round_trip(g):
    assert loads_t4g(dumps_t4g(g)) == g


@given(graphs())
def test_json_round_trip(g):
    assert loads_json(dumps_json(g)) == g


def test_labeled_round_trip(tmp_path):
    h = LabeledFourGraph(complete(5), tuple((i, i * i) for i in range(5)), "k5")
    for fmt in ("t4g", "json"):
        path = tmp_path / f"g.{fmt}"
        write_graph(h, path, fmt)
        back = read_graph(path)
        assert back == h


@pytest.mark.parametrize(
    "text",
    ["e 0\n", "n 5\ne 2\n0 1 2 3\n", "n 5\ne 1\n0 1 2\n", "n x\ne 0\n", "n 4\ne 0\n# label 0 1\n"],
)
def test_t4g_parse_errors(text):
    with pytest.raises(ParseError):
        loads_t4g(text)


def test_json_parse_error():
    with pytest.raises(ParseError):
        loads_json('{"edges": []}')
