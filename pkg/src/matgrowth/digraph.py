"""Graphs induced by a matrix family and the graph algorithms run on them.

Every graph here exposes ``nodes()`` (sorted) and ``successors(u)``
(sorted), which is all the generic algorithms below rely on.
"""
from __future__ import annotations

import heapq
from collections import deque
from dataclasses import dataclass, field
from itertools import product
from typing import Callable, Hashable, Iterable

from .exceptions import CycleDetected
from .matrix import MatrixSet


@dataclass(frozen=True)
class WeightedDigraph:
    """G(S): edge i->j iff some member has a positive (i, j) entry.

    ``weights`` holds the entrywise maximum; ``labels`` the indices of the
    members realizing each edge.
    """

    node_count: int
    weights: dict
    labels: dict
    _succ: tuple = field(repr=False, compare=False, default=())

    def nodes(self):
        return range(self.node_count)

    def successors(self, u):
        return self._succ[u]

    def edges(self):
        return sorted((u, v, w) for (u, v), w in self.weights.items())

    def has_cycle_through(self, u, v) -> bool:
        return reachable(self, v, u, allow_empty_path=True) is not None


@dataclass(frozen=True)
class LabelledDigraph:
    """Product graph whose edges carry the set of matrices realizing them."""

    node_list: tuple
    labels: dict
    _succ: dict = field(repr=False, compare=False, default_factory=dict)

    def nodes(self):
        return self.node_list

    def successors(self, u):
        return self._succ.get(u, ())

    def edges(self):
        return sorted((u, v, self.labels[u, v]) for (u, v) in self.labels)


def _freeze_succ(pairs, keys):
    succ = {k: [] for k in keys}
    for u, v in pairs:
        succ[u].append(v)
    return {k: tuple(sorted(vs)) for k, vs in succ.items()}


def dependency_graph(S: MatrixSet) -> WeightedDigraph:
    n = S.n
    weights: dict = {}
    labels: dict = {}
    for k, m in enumerate(S):
        for i, row in enumerate(m.entries):
            for j, v in enumerate(row):
                if v > 0:
                    weights[i, j] = max(weights.get((i, j), 0), v)
                    labels.setdefault((i, j), []).append(k)
    labels = {e: tuple(ks) for e, ks in labels.items()}
    succ = _freeze_succ(weights, range(n))
    return WeightedDigraph(n, weights, labels, tuple(succ[u] for u in range(n)))


def _positive_successors(S: MatrixSet):
    """succ[k][i] = columns j with S[k][i, j] > 0."""
    return [
        [tuple(j for j, v in enumerate(row) if v > 0) for row in m.entries]
        for m in S
    ]


def pair_graph(S: MatrixSet) -> LabelledDigraph:
    """G^2 on ordered pairs; (i,i')->(j,j') needs one matrix with both entries positive."""
    n = S.n
    labels: dict = {}
    for k, rows in enumerate(_positive_successors(S)):
        for i, i2 in product(range(n), repeat=2):
            for j in rows[i]:
                for j2 in rows[i2]:
                    labels.setdefault(((i, i2), (j, j2)), set()).add(k)
    labels = {e: frozenset(ks) for e, ks in labels.items()}
    nodes = tuple(product(range(n), repeat=2))
    return LabelledDigraph(nodes, labels, _freeze_succ(labels, nodes))


class TripleGraph:
    """G^3 on ordered triples, expanded on demand.

    The full graph can hold up to N * n^6 edges, so successors are computed
    per query and never cached across calls.
    """

    def __init__(self, S: MatrixSet):
        self.S = S
        self.n = S.n
        self._rows = _positive_successors(S)

    def nodes(self):
        return tuple(product(range(self.n), repeat=3))

    def successors(self, u):
        a, b, c = u
        out = set()
        for rows in self._rows:
            if rows[a] and rows[b] and rows[c]:
                out.update(product(rows[a], rows[b], rows[c]))
        return tuple(sorted(out))

    def label_set(self, u, v) -> frozenset:
        return frozenset(
            k
            for k, m in enumerate(self.S)
            if all(m.entries[x][y] >= 1 for x, y in zip(u, v))
        )

    def edges(self):
        """Materialize every edge; meant for small instances and tests."""
        return sorted(
            (u, v, self.label_set(u, v)) for u in self.nodes() for v in self.successors(u)
        )


def triple_graph(S: MatrixSet) -> TripleGraph:
    return TripleGraph(S)


@dataclass(frozen=True)
class SccDecomposition:
    """Strongly connected components listed in a topological order.

    No node of ``components[k]`` reaches a node of ``components[l]`` for
    ``k > l``. Ties between independent components go to the one holding
    the smallest node.
    """

    components: tuple
    component_of: dict
    trivial: tuple

    def __len__(self):
        return len(self.components)

    @property
    def nontrivial(self):
        return tuple(c for c, t in zip(self.components, self.trivial) if not t)

    def condensation_edges(self, G) -> set:
        out = set()
        for u in G.nodes():
            cu = self.component_of[u]
            for v in G.successors(u):
                cv = self.component_of[v]
                if cu != cv:
                    out.add((cu, cv))
        return out


def scc(G) -> SccDecomposition:
    """Tarjan's algorithm (iterative) followed by a canonical topological sort."""
    index: dict = {}
    low: dict = {}
    on_stack: set = set()
    stack: list = []
    raw: list = []
    counter = 0
    for root in G.nodes():
        if root in index:
            continue
        index[root] = low[root] = counter
        counter += 1
        stack.append(root)
        on_stack.add(root)
        work = [(root, iter(G.successors(root)))]
        while work:
            v, it = work[-1]
            advanced = False
            for w in it:
                if w not in index:
                    index[w] = low[w] = counter
                    counter += 1
                    stack.append(w)
                    on_stack.add(w)
                    work.append((w, iter(G.successors(w))))
                    advanced = True
                    break
                if w in on_stack:
                    low[v] = min(low[v], index[w])
            if advanced:
                continue
            work.pop()
            if work:
                parent = work[-1][0]
                low[parent] = min(low[parent], low[v])
            if low[v] == index[v]:
                comp = []
                while True:
                    w = stack.pop()
                    on_stack.discard(w)
                    comp.append(w)
                    if w == v:
                        break
                raw.append(tuple(sorted(comp)))

    comp_id = {v: c for c, comp in enumerate(raw) for v in comp}
    succ_c: list[set] = [set() for _ in raw]
    indeg = [0] * len(raw)
    for u in G.nodes():
        for v in G.successors(u):
            a, b = comp_id[u], comp_id[v]
            if a != b and b not in succ_c[a]:
                succ_c[a].add(b)
                indeg[b] += 1
    heap = [(raw[c][0], c) for c in range(len(raw)) if indeg[c] == 0]
    heapq.heapify(heap)
    order = []
    while heap:
        _, c = heapq.heappop(heap)
        order.append(c)
        for d in succ_c[c]:
            indeg[d] -= 1
            if indeg[d] == 0:
                heapq.heappush(heap, (raw[d][0], d))

    components = tuple(raw[c] for c in order)
    component_of = {v: k for k, comp in enumerate(components) for v in comp}
    trivial = tuple(
        len(comp) == 1 and comp[0] not in G.successors(comp[0]) for comp in components
    )
    return SccDecomposition(components, component_of, trivial)


def reachable(
    G,
    u,
    v,
    allow_empty_path: bool = False,
    within: Callable[[Hashable], bool] | None = None,
):
    """Shortest path from ``u`` to ``v`` as a node list, or None.

    With ``allow_empty_path`` the call ``reachable(G, u, u)`` returns ``[u]``;
    otherwise a path from ``u`` to itself must be a genuine cycle. ``within``
    optionally restricts the intermediate and final nodes searched.
    """
    if allow_empty_path and u == v:
        return [u]
    parent = {}
    queue = deque()
    for w in G.successors(u):
        if w not in parent and (within is None or within(w)):
            parent[w] = u
            queue.append(w)
    found = v in parent
    while queue and not found:
        x = queue.popleft()
        for w in G.successors(x):
            if w in parent or (within is not None and not within(w)):
                continue
            parent[w] = x
            if w == v:
                found = True
                break
            queue.append(w)
    if not found:
        return None
    path = [v]
    x = parent[v]
    while x != u:
        path.append(x)
        x = parent[x]
    path.append(u)
    return path[::-1]


def bfs_distances(G, source, within=None) -> dict:
    dist = {source: 0}
    queue = deque([source])
    while queue:
        x = queue.popleft()
        for w in G.successors(x):
            if w not in dist and (within is None or within(w)):
                dist[w] = dist[x] + 1
                queue.append(w)
    return dist


def topological_order(G) -> list:
    nodes = list(G.nodes())
    indeg = {u: 0 for u in nodes}
    for u in nodes:
        for v in G.successors(u):
            indeg[v] += 1
    heap = [u for u in nodes if indeg[u] == 0]
    heapq.heapify(heap)
    order = []
    while heap:
        u = heapq.heappop(heap)
        order.append(u)
        for v in G.successors(u):
            indeg[v] -= 1
            if indeg[v] == 0:
                heapq.heappush(heap, v)
    if len(order) != len(nodes):
        raise CycleDetected("graph is not acyclic")
    return order


def longest_path(G) -> list:
    """Maximum node-count path of a DAG, lexicographically smallest on ties."""
    order = topological_order(G)
    if not order:
        return []
    best: dict = {}
    for u in reversed(order):
        tail: list = []
        for v in G.successors(u):
            cand = best[v]
            if len(cand) > len(tail) or (len(cand) == len(tail) and cand < tail):
                tail = cand
        best[u] = [u] + tail
    result = None
    for u in order:
        cand = best[u]
        if result is None or len(cand) > len(result) or (
            len(cand) == len(result) and cand < result
        ):
            result = cand
    return result


def decode_path(path: Iterable, label_set: Callable) -> tuple[int, ...]:
    """Turn a graph path into a matrix word, smallest label per edge."""
    path = list(path)
    return tuple(min(label_set(a, b)) for a, b in zip(path, path[1:]))


def block_triangular_permutation(S: MatrixSet) -> list[int]:
    """Node order making every member block upper triangular.

    Position ``p`` of the result holds the original node placed there; the
    blocks are the SCCs of G(S) in topological order.
    """
    dec = scc(dependency_graph(S))
    return [v for comp in dec.components for v in comp]
