import itertools

import pytest
from hypothesis import given

from families import IDENTITY, NILPOTENT, SHEAR, two_path, matrix_sets, quadratic
from matgrowth.digraph import (
    block_triangular_permutation,
    decode_path,
    dependency_graph,
    longest_path,
    pair_graph,
    reachable,
    scc,
    topological_order,
    triple_graph,
)
from matgrowth.exceptions import CycleDetected
from matgrowth.matrix import validate_set


class Adjacency:
    """Plain graph on hashable nodes for exercising the generic algorithms."""

    def __init__(self, nodes, edges):
        self._nodes = tuple(sorted(nodes))
        self._succ = {u: tuple(sorted(v for a, v in edges if a == u)) for u in self._nodes}

    def nodes(self):
        return self._nodes

    def successors(self, u):
        return self._succ[u]


def test_dependency_graph_examples():
    G = dependency_graph(validate_set([NILPOTENT]))
    assert G.edges() == [(0, 1, 1)]
    G = dependency_graph(two_path())
    assert {(u, v) for u, v, _ in G.edges()} == {(1, 0), (1, 2), (0, 1), (2, 1)}
    assert G.labels[1, 0] == (0,) and G.labels[0, 1] == (1,)
    G = dependency_graph(validate_set([SHEAR, [[3, 0], [0, 1]]]))
    assert G.edges() == [(0, 0, 3), (0, 1, 1), (1, 1, 1)]
    assert G.labels[0, 0] == (0, 1)


def test_pair_graph_examples():
    G2 = pair_graph(validate_set([IDENTITY]))
    assert [(u, v) for u, v, _ in G2.edges()] == [(x, x) for x in itertools.product(range(2), repeat=2)]
    G2 = pair_graph(two_path())
    assert G2.labels[(1, 1), (0, 2)] == frozenset({0})
    G2 = pair_graph(validate_set([NILPOTENT]))
    assert [(u, v) for u, v, _ in G2.edges()] == [((0, 0), (1, 1))]


def test_triple_graph_examples():
    G3 = triple_graph(validate_set([IDENTITY]))
    edges = G3.edges()
    assert len(edges) == 8 and all(u == v for u, v, _ in edges)
    G3 = triple_graph(validate_set([SHEAR]))
    assert (0, 1, 1) in G3.successors((0, 0, 1))
    assert G3.label_set((0, 0, 1), (0, 1, 1)) == frozenset({0})
    G3 = triple_graph(validate_set([NILPOTENT]))
    assert G3.successors((0, 0, 1)) == ()


def test_scc_examples():
    path = Adjacency(range(3), [(0, 1), (1, 2)])
    dec = scc(path)
    assert dec.components == ((0,), (1,), (2,))
    assert all(dec.trivial)
    dec = scc(dependency_graph(two_path()))
    assert dec.components == ((0, 1, 2),) and dec.trivial == (False,)
    loop = Adjacency([0], [(0, 0)])
    assert scc(loop).trivial == (False,)


def test_reachable_examples():
    path = Adjacency(range(3), [(0, 1), (1, 2)])
    assert reachable(path, 0, 2) == [0, 1, 2]
    assert reachable(path, 2, 0) is None
    assert reachable(path, 1, 1) is None
    assert reachable(path, 1, 1, allow_empty_path=True) == [1]
    G3 = triple_graph(validate_set([SHEAR]))
    assert reachable(G3, (0, 0, 1), (0, 1, 1)) == [(0, 0, 1), (0, 1, 1)]


def test_reachable_within_blocks_detours():
    G = Adjacency(range(4), [(0, 1), (1, 3), (0, 2), (2, 3)])
    assert reachable(G, 0, 3) == [0, 1, 3]
    assert reachable(G, 0, 3, within=lambda x: x != 1) == [0, 2, 3]
    assert reachable(G, 0, 3, within=lambda x: x not in (1, 2)) is None


def test_longest_path_examples():
    assert len(longest_path(Adjacency(range(3), []))) == 1
    assert longest_path(Adjacency("abc", [("a", "b"), ("b", "c")])) == ["a", "b", "c"]
    dag = Adjacency([(0, 1), (1, 2)], [((0, 1), (1, 2))])
    assert longest_path(dag) == [(0, 1), (1, 2)]
    with pytest.raises(CycleDetected):
        longest_path(Adjacency(range(2), [(0, 1), (1, 0)]))


def test_block_triangular_examples():
    perm = block_triangular_permutation(validate_set([[[1, 0], [1, 1]]]))
    assert perm == [1, 0]
    assert validate_set([[[1, 0], [1, 1]]]).permute(perm).tolist() == [SHEAR]
    assert block_triangular_permutation(quadratic()) == [0, 1, 2]
    assert block_triangular_permutation(validate_set([SHEAR])) == [0, 1]


def test_decode_path_takes_smallest_label():
    assert decode_path([0, 1, 2], lambda a, b: {(0, 1): {2, 1}, (1, 2): {0}}[a, b]) == (1, 0)
    assert decode_path([5], lambda a, b: None) == ()


@given(matrix_sets())
def test_condensation_is_acyclic_and_ordered(S):
    G = dependency_graph(S)
    dec = scc(G)
    assert sorted(v for c in dec.components for v in c) == list(range(S.n))
    for a, b in dec.condensation_edges(G):
        assert a < b


@given(matrix_sets())
def test_scc_matches_mutual_reachability(S):
    G = dependency_graph(S)
    dec = scc(G)
    for u in range(S.n):
        for v in range(S.n):
            mutual = (
                reachable(G, u, v, allow_empty_path=True) is not None
                and reachable(G, v, u, allow_empty_path=True) is not None
            )
            assert mutual == (dec.component_of[u] == dec.component_of[v])


@given(matrix_sets())
def test_diagonal_embeddings(S):
    G, G2, G3 = dependency_graph(S), pair_graph(S), triple_graph(S)
    for i in range(S.n):
        for j in range(S.n):
            e1 = (i, j) in G.weights
            e2 = ((i, i), (j, j)) in G2.labels
            e3 = (j, j, j) in G3.successors((i, i, i))
            assert e1 == e2 == e3


@given(matrix_sets())
def test_pair_graph_edges_need_one_matrix(S):
    G2 = pair_graph(S)
    for ((i, i2), (j, j2)), ks in G2.labels.items():
        for k in ks:
            assert S[k][i, j] > 0 and S[k][i2, j2] > 0
        others = set(range(len(S))) - ks
        assert all(not (S[k][i, j] > 0 and S[k][i2, j2] > 0) for k in others)


def _all_paths(G):
    """Exhaustive enumeration of every path of a DAG."""
    out = []

    def extend(path):
        out.append(list(path))
        for v in G.successors(path[-1]):
            extend(path + [v])

    for u in G.nodes():
        extend([u])
    return out


@given(matrix_sets(max_n=4, max_N=2, max_entry=1))
def test_longest_path_matches_enumeration(S):
    # only upper-triangular strictly-off-diagonal part, to get a DAG on <= 4 nodes
    strict = validate_set(
        [[[m[i, j] if i < j else 0 for j in range(S.n)] for i in range(S.n)] for m in S]
    )
    G = dependency_graph(strict)
    paths = _all_paths(G)
    best = max(len(p) for p in paths)
    got = longest_path(G)
    assert len(got) == best
    assert got == min(p for p in paths if len(p) == best)


@given(matrix_sets())
def test_topological_order_respects_edges(S):
    G = dependency_graph(S)
    try:
        order = topological_order(G)
    except CycleDetected:
        assert not all(scc(G).trivial)
        return
    pos = {u: k for k, u in enumerate(order)}
    assert all(pos[u] < pos[v] for u, v, _ in G.edges())


@given(matrix_sets())
def test_block_triangular_permutation_is_triangular(S):
    perm = block_triangular_permutation(S)
    dec = scc(dependency_graph(S))
    P = S.permute(perm)
    block = [dec.component_of[v] for v in perm]
    for m in P:
        for a in range(S.n):
            for b in range(S.n):
                if block[a] > block[b]:
                    assert m[a, b] == 0
