"""Polynomial-time growth classification of nonnegative integer matrix families.

The pipeline decides, using only graph searches on G(S), G^2 and G^3:

* ``zero``: every product of length ``t0`` or more vanishes;
* ``bounded``: products stay bounded;
* ``polynomial``: max product norm grows like ``t**degree``;
* ``exponential``: some product has a diagonal entry >= 2.

Each verdict carries a witness that :func:`verify_witness` re-checks by
exact multiplication.
"""
from __future__ import annotations

import enum
from collections import deque
from dataclasses import dataclass, field

from .digraph import (
    LabelledDigraph,
    SccDecomposition,
    WeightedDigraph,
    bfs_distances,
    decode_path,
    dependency_graph,
    longest_path,
    pair_graph,
    reachable,
    scc,
    topological_order,
    triple_graph,
)
from .exceptions import CycleDetected, PreconditionViolated
from .matrix import MatrixSet, Word, row_of_product


class GrowthClass(str, enum.Enum):
    ZERO = "zero"
    BOUNDED = "bounded"
    POLYNOMIAL = "polynomial"
    EXPONENTIAL = "exponential"


@dataclass(frozen=True)
class ZeroWitness:
    kind = "zero"


@dataclass(frozen=True)
class BoundedWitness:
    kind = "bounded"


@dataclass(frozen=True)
class ExponentialWitness:
    """A word whose product has ``diagonal`` >= 2 at position ``index``."""

    word: Word
    index: int
    diagonal: int
    kind = "exponential"

    def spectral_lower_bound(self) -> float:
        # rho(S) >= rho(A)**(1/len) >= A[i, i]**(1/len)
        return float(self.diagonal) ** (1.0 / len(self.word))


@dataclass(frozen=True)
class GrowthPair:
    i: int
    j: int
    word: Word


@dataclass(frozen=True)
class PolynomialWitness:
    """Chain of growth pairs plus the connector words between neighbours."""

    chain: tuple[GrowthPair, ...]
    connectors: tuple[Word, ...]
    kind = "polynomial"


Witness = ZeroWitness | BoundedWitness | ExponentialWitness | PolynomialWitness


@dataclass(frozen=True)
class GrowthVerdict:
    growth_class: GrowthClass
    scc_count: int
    t0: int | None = None
    degree: int | None = None
    witness: Witness | None = None

    def rank(self) -> tuple[int, int]:
        """Sort key for Zero < Bounded < Polynomial(k) < Exponential."""
        order = list(GrowthClass).index(self.growth_class)
        return order, self.degree or 0

    def same_growth(self, other: "GrowthVerdict") -> bool:
        return (self.growth_class, self.t0, self.degree) == (
            other.growth_class,
            other.t0,
            other.degree,
        )


@dataclass(frozen=True)
class PairDag:
    pairs: dict
    edges: dict
    _succ: dict = field(repr=False, compare=False, default_factory=dict)

    def nodes(self):
        return tuple(sorted(self.pairs))

    def successors(self, u):
        return self._succ.get(u, ())


# -- rho > 0 -----------------------------------------------------------------


def check_positive_radius(S: MatrixSet, G: WeightedDigraph | None = None) -> bool:
    """True iff G(S) has a cycle, i.e. iff the joint spectral radius is >= 1."""
    G = G or dependency_graph(S)
    return not all(scc(G).trivial)


def zero_length(S: MatrixSet, G: WeightedDigraph | None = None) -> int | None:
    """Smallest t with every length-t product zero, or None if G(S) has a cycle."""
    G = G or dependency_graph(S)
    try:
        return len(longest_path(G))
    except CycleDetected:
        return None


# -- rho > 1 -----------------------------------------------------------------


def _heavy_edge_witness(S: MatrixSet, G: WeightedDigraph):
    best = None
    for (u, v), w in sorted(G.weights.items()):
        if w < 2:
            continue
        back = reachable(G, v, u, allow_empty_path=True)
        if back is None:
            continue
        heavy = min(k for k in G.labels[u, v] if S[k].entries[u][v] >= 2)
        word = (heavy,) + decode_path(back, lambda a, b: G.labels[a, b])
        if best is None or len(word) < len(best[0]):
            best = (word, u)
    return best


def _two_path_witness(S: MatrixSet, G2: LabelledDigraph):
    """Shortest closed walk in G^2 through a diagonal and an off-diagonal node.

    A minimal such walk is a simple cycle, so it has at most n^2 edges.
    """
    dec = scc(G2)
    best = None
    for comp in dec.components:
        diag = [x for x in comp if x[0] == x[1]]
        if not diag or len(diag) == len(comp):
            continue
        members = set(comp)
        for d in diag:
            path = _closed_walk_via_offdiag(G2, d, members)
            if path is not None and (best is None or len(path) < len(best)):
                best = path
    if best is None:
        return None
    word = decode_path(best, lambda a, b: G2.labels[a, b])
    return word, best[0][0]


def _closed_walk_via_offdiag(G2, d, members):
    # BFS over (node, seen_offdiag) states from (d, False) to (d, True)
    start, goal = (d, False), (d, True)
    parent = {start: None}
    queue = deque([start])
    while queue:
        state = queue.popleft()
        x, flag = state
        for y in G2.successors(x):
            if y not in members:
                continue
            nxt = (y, flag or y[0] != y[1])
            if nxt in parent:
                continue
            parent[nxt] = state
            if nxt == goal:
                path = []
                cur = nxt
                while cur is not None:
                    path.append(cur[0])
                    cur = parent[cur]
                return path[::-1]
            queue.append(nxt)
    return None


def check_exponential(S: MatrixSet, G: WeightedDigraph | None = None):
    """Return an :class:`ExponentialWitness` iff the joint spectral radius is > 1."""
    G = G or dependency_graph(S)
    found = _heavy_edge_witness(S, G)
    if found is None:
        found = _two_path_witness(S, pair_graph(S))
    if found is None:
        return None
    word, i = found
    diagonal = row_of_product(S, word, i)[i]
    return ExponentialWitness(word, i, diagonal)


# -- rho == 1: boundedness and degree ------------------------------------------


def _require_unit_radius(S: MatrixSet, G: WeightedDigraph):
    if not check_positive_radius(S, G):
        raise PreconditionViolated("joint spectral radius is 0, not 1")
    if check_exponential(S, G) is not None:
        raise PreconditionViolated("joint spectral radius exceeds 1")


def _growth_pairs(S: MatrixSet, G: WeightedDigraph, dec: SccDecomposition):
    n = S.n
    G3 = triple_graph(S)
    reach = [set(bfs_distances(G, i)) for i in range(n)]
    coreach = [{a for a in range(n) if j in reach[a]} for j in range(n)]
    cyclic = {v for comp in dec.nontrivial for v in comp}
    comp_of = dec.component_of
    pairs = []
    for i in range(n):
        if i not in cyclic:
            continue
        for j in range(n):
            if j == i or j not in cyclic or j not in reach[i]:
                continue
            ci, cj, mid = comp_of[i], comp_of[j], reach[i] & coreach[j]

            # the three coordinates walk i->i, i->j and j->j respectively
            def within(x, ci=ci, cj=cj, mid=mid):
                return comp_of[x[0]] == ci and x[1] in mid and comp_of[x[2]] == cj

            path = reachable(G3, (i, i, j), (i, j, j), within=within)
            if path is not None:
                pairs.append(GrowthPair(i, j, decode_path(path, G3.label_set)))
    return tuple(pairs)


def growth_pairs(S: MatrixSet) -> tuple[GrowthPair, ...]:
    """All (i, j), i != j, with a product having entries (i,i), (i,j), (j,j) >= 1.

    Only defined when the joint spectral radius is exactly 1.
    """
    G = dependency_graph(S)
    _require_unit_radius(S, G)
    return _growth_pairs(S, G, scc(G))


def pair_dag(S: MatrixSet, pairs, G: WeightedDigraph | None = None) -> PairDag:
    """Chain pairs s -> s' whenever j_s reaches i_s' in G(S) (or equals it)."""
    G = G or dependency_graph(S)
    by_key = {(p.i, p.j): p for p in pairs}
    keys = sorted(by_key)
    edges = {}
    for s in keys:
        for t in keys:
            if s == t:
                continue
            path = reachable(G, s[1], t[0], allow_empty_path=True)
            if path is not None:
                edges[s, t] = decode_path(path, lambda a, b: G.labels[a, b])
    succ = {k: tuple(t for t in keys if (k, t) in edges) for k in keys}
    dag = PairDag(by_key, edges, succ)
    try:
        topological_order(dag)
    except CycleDetected:
        raise CycleDetected(
            "growth pairs chain into a cycle; this implies a radius above 1"
        ) from None
    for i, j in keys:
        if reachable(G, j, i) is not None:
            raise CycleDetected(f"pair {(i, j)} closes on itself")
    return dag


def growth_degree(S: MatrixSet, pairs=None, G=None):
    """Exact polynomial degree k and a witness chain of k growth pairs."""
    G = G or dependency_graph(S)
    if pairs is None:
        _require_unit_radius(S, G)
        pairs = _growth_pairs(S, G, scc(G))
    if not pairs:
        raise PreconditionViolated("products are bounded; no growth pairs")
    dag = pair_dag(S, pairs, G)
    chain = longest_path(dag)
    witness = PolynomialWitness(
        tuple(dag.pairs[c] for c in chain),
        tuple(dag.edges[a, b] for a, b in zip(chain, chain[1:])),
    )
    return len(chain), witness


def classify(S: MatrixSet) -> GrowthVerdict:
    G = dependency_graph(S)
    dec = scc(G)
    count = len(dec)
    if all(dec.trivial):
        return GrowthVerdict(
            GrowthClass.ZERO, count, t0=len(longest_path(G)), witness=ZeroWitness()
        )
    exp = check_exponential(S, G)
    if exp is not None:
        return GrowthVerdict(GrowthClass.EXPONENTIAL, count, witness=exp)
    pairs = _growth_pairs(S, G, dec)
    if not pairs:
        return GrowthVerdict(GrowthClass.BOUNDED, count, witness=BoundedWitness())
    k, witness = growth_degree(S, pairs, G)
    return GrowthVerdict(GrowthClass.POLYNOMIAL, count, degree=k, witness=witness)


# -- witnesses -----------------------------------------------------------------


def _pair_holds(S: MatrixSet, pair: GrowthPair) -> bool:
    if pair.i == pair.j:
        return False
    row_i = row_of_product(S, pair.word, pair.i)
    row_j = row_of_product(S, pair.word, pair.j)
    return row_i[pair.i] >= 1 and row_i[pair.j] >= 1 and row_j[pair.j] >= 1


def verify_witness(S: MatrixSet, witness) -> bool:
    """Re-multiply every stored word and check the entry conditions it claims."""
    try:
        if isinstance(witness, ExponentialWitness):
            if not witness.word or len(witness.word) > S.n**2:
                return False
            value = row_of_product(S, witness.word, witness.index)[witness.index]
            return value >= 2 and value == witness.diagonal
        if isinstance(witness, PolynomialWitness):
            chain = witness.chain
            if not chain or len(witness.connectors) != len(chain) - 1:
                return False
            if len({(p.i, p.j) for p in chain}) != len(chain):
                return False
            if not all(_pair_holds(S, p) for p in chain):
                return False
            for a, b, word in zip(chain, chain[1:], witness.connectors):
                if row_of_product(S, word, a.j)[b.i] < 1:
                    return False
            return True
    except (IndexError, ValueError):
        return False
    return isinstance(witness, (ZeroWitness, BoundedWitness))


def expand_witness(witness: PolynomialWitness, p: int) -> Word:
    """Word A_1^p B_1 A_2^p ... A_k^p whose (i_1, j_k) entry is at least p**k."""
    word: list[int] = []
    for s, pair in enumerate(witness.chain):
        if s:
            word.extend(witness.connectors[s - 1])
        word.extend(pair.word * p)
    return tuple(word)


def chain_entry(S: MatrixSet, witness: PolynomialWitness, p: int) -> int:
    first, last = witness.chain[0], witness.chain[-1]
    return row_of_product(S, expand_witness(witness, p), first.i)[last.j]


__all__ = [
    "GrowthClass",
    "GrowthVerdict",
    "GrowthPair",
    "PairDag",
    "ZeroWitness",
    "BoundedWitness",
    "ExponentialWitness",
    "PolynomialWitness",
    "check_positive_radius",
    "zero_length",
    "check_exponential",
    "growth_pairs",
    "pair_dag",
    "growth_degree",
    "classify",
    "verify_witness",
    "expand_witness",
    "chain_entry",
]
