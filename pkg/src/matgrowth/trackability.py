"""Trackability of node-labelled directed graphs.

A path emits the label of every node it enters. One 0/1 matrix per label
then counts paths compatible with a label sequence: the sum of the entries
of the product along a label word is the number of such paths.
"""
from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass

from .classifier import GrowthClass, GrowthVerdict, classify
from .exceptions import IndexOutOfRange, InputError, NoEdges
from .matrix import Matrix, MatrixSet

CONVENTIONS = ("destination", "source")


@dataclass(frozen=True)
class LabelledGraph:
    """Nodes 0..n-1 with a label each, plus directed edges."""

    labels: tuple[str, ...]
    edges: frozenset

    def __post_init__(self):
        if not self.labels:
            raise InputError("graph needs at least one node")
        for k, lab in enumerate(self.labels):
            if not isinstance(lab, str) or not lab:
                raise InputError(f"node {k} has an empty or non-string label")
        n = len(self.labels)
        for u, v in self.edges:
            if not (0 <= u < n and 0 <= v < n):
                raise IndexOutOfRange(f"edge {(u, v)} has an endpoint outside 0..{n - 1}")

    @classmethod
    def build(cls, labels, edges) -> "LabelledGraph":
        return cls(tuple(labels), frozenset((int(u), int(v)) for u, v in edges))

    @property
    def n(self) -> int:
        return len(self.labels)

    @property
    def alphabet(self) -> tuple[str, ...]:
        return tuple(sorted(set(self.labels)))

    def relabel(self, mapping) -> "LabelledGraph":
        return LabelledGraph(tuple(mapping[x] for x in self.labels), self.edges)


@dataclass(frozen=True)
class TrackVerdict:
    trackable: bool
    verdict: GrowthVerdict
    alphabet: tuple[str, ...]

    @property
    def degree(self):
        return self.verdict.degree


def matrices_from_labels(G: LabelledGraph, convention: str = "destination") -> MatrixSet:
    """One binary matrix per label, in sorted label order.

    With the default destination convention, entry (i, j) of the matrix of
    label ``l`` is 1 iff i->j is an edge and node j carries ``l``.
    """
    if convention not in CONVENTIONS:
        raise ValueError(f"unknown label convention {convention!r}")
    if not G.edges:
        raise NoEdges("graph has no edges")
    n = G.n
    mats = []
    for lab in G.alphabet:
        rows = [[0] * n for _ in range(n)]
        for u, v in G.edges:
            owner = v if convention == "destination" else u
            if G.labels[owner] == lab:
                rows[u][v] = 1
        mats.append(Matrix(tuple(map(tuple, rows))))
    return MatrixSet(tuple(mats))


def decide_trackable(G: LabelledGraph, convention: str = "destination") -> TrackVerdict:
    S = matrices_from_labels(G, convention)
    verdict = classify(S)
    return TrackVerdict(verdict.growth_class is not GrowthClass.EXPONENTIAL, verdict, G.alphabet)


def paths_by_label_word(G: LabelledGraph, t: int) -> Counter:
    """Enumerate every t-edge path explicitly and tally the label words they emit.

    Independent of the matrix construction; used to cross-check it.
    """
    succ = {u: sorted(v for a, v in G.edges if a == u) for u in range(G.n)}
    tally: Counter = Counter()

    def walk(u, emitted):
        if len(emitted) == t:
            tally[tuple(emitted)] += 1
            return
        for v in succ[u]:
            emitted.append(G.labels[v])
            walk(v, emitted)
            emitted.pop()

    for u in range(G.n):
        walk(u, [])
    return tally


def label_words(G: LabelledGraph, t: int):
    return itertools.product(G.alphabet, repeat=t)
