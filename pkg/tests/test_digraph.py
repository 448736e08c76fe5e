import pytest
from hypothesis import given

from conftest import digraphs
from maxline import (
    Digraph,
    degrees,
    disjoint_union,
    from_arcs,
    gen_o,
    is_connected,
    phi,
    remove,
    transpose,
    two_circuits,
)
from maxline.errors import ArcNotPresent, DuplicateArc, LoopArc, VertexOutOfRange


def test_from_arcs_two_circuit():
    G = from_arcs(2, [(1, 0), (0, 1)])
    assert G.m == 2
    assert G.arcs == ((0, 1), (1, 0))


def test_from_arcs_order_independent():
    assert from_arcs(3, [(1, 2), (0, 2), (0, 1)]) == from_arcs(3, [(0, 1), (1, 2), (0, 2)])


@pytest.mark.parametrize(
    "n, arcs, error",
    [
        (2, [(0, 0)], LoopArc),
        (2, [(0, 1), (0, 1)], DuplicateArc),
        (2, [(0, 2)], VertexOutOfRange),
        (2, [(-1, 0)], VertexOutOfRange),
    ],
)
def test_from_arcs_rejects(n, arcs, error):
    with pytest.raises(error):
        from_arcs(n, arcs)


def test_shortcut_instance():
    G = from_arcs(3, [(0, 1), (1, 2), (0, 2)])
    assert G.out_adj == ((1, 2), (2,), ())
    assert G.in_adj == ((), (0,), (0, 1))


def test_degrees():
    assert degrees(gen_o(12), 0) == (6, 6)
    assert degrees(gen_o(11), 0) == (6, 5)
    assert degrees(Digraph(3, [(0, 1)]), 2) == (0, 0)
    with pytest.raises(VertexOutOfRange):
        degrees(gen_o(4), 9)


def test_transpose_examples():
    assert transpose(from_arcs(2, [(0, 1)])).arcs == ((1, 0),)
    assert phi(transpose(gen_o(11))) == 35


def test_remove_arc_and_vertex():
    two = from_arcs(2, [(0, 1), (1, 0)])
    single = remove(two, (0, 1))
    assert single.arcs == ((1, 0),)
    assert phi(two) == 2 and phi(single) == 0
    with pytest.raises(ArcNotPresent):
        remove(two, (5, 3))
    for m in (2, 5, 12):
        hubless = remove(gen_o(m), 0)
        assert hubless.m == 0 and hubless.n == gen_o(m).n - 1


def test_remove_vertex_renumbers():
    G = from_arcs(4, [(0, 1), (2, 3), (3, 0)])
    assert remove(G, 1) == from_arcs(3, [(1, 2), (2, 0)])


def test_is_connected():
    assert is_connected(gen_o(12))
    circuit = from_arcs(2, [(0, 1), (1, 0)])
    assert not is_connected(disjoint_union(circuit, circuit))
    assert is_connected(Digraph(1))
    assert is_connected(Digraph(0))


def test_two_circuits():
    assert two_circuits(from_arcs(2, [(0, 1), (1, 0)])) == [(0, 1)]
    pairs = two_circuits(gen_o(12))
    assert len(pairs) == 6 and all(0 in p for p in pairs)
    assert two_circuits(from_arcs(4, [(0, 1), (1, 2), (0, 2), (2, 3)])) == []


@given(digraphs())
def test_degree_sums(G):
    assert sum(G.out_degree(v) for v in range(G.n)) == G.m
    assert sum(G.in_degree(v) for v in range(G.n)) == G.m
    for v in range(G.n):
        assert list(G.out_adj[v]) == sorted(set(G.out_adj[v]))
        assert list(G.in_adj[v]) == sorted(set(G.in_adj[v]))


@given(digraphs())
def test_transpose_involution_swaps_degrees(G):
    T = transpose(G)
    assert transpose(T) == G
    for v in range(G.n):
        assert degrees(T, v) == tuple(reversed(degrees(G, v)))
    assert two_circuits(T) == two_circuits(G)


@given(digraphs(max_n=6))
def test_remove_arc_counts(G):
    for arc in G.arcs:
        assert remove(G, arc).m == G.m - 1
    for v in range(G.n):
        assert remove(G, v).m == G.m - G.out_degree(v) - G.in_degree(v)
