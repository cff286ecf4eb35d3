"""Brute-force ground truth for small matrix families.

Nothing here looks at G(S) or its product graphs: everything is obtained by
multiplying matrices, so it can be used to cross-check the classifier.
"""
from __future__ import annotations

import itertools
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction

from .classifier import GrowthClass, GrowthVerdict
from .exceptions import BudgetExceeded
from .matrix import Entries, MatrixSet, _identity_entries, _matmul

DEFAULT_BUDGET = 10**6
DEFAULT_CAP = 20000


def _norm(e: Entries) -> int:
    return sum(map(sum, e))


def _expand(args):
    frontier, gens = args
    return {_matmul(p, g) for p in frontier for g in gens}


def _next_level(frontier, gens, workers):
    if workers <= 1 or len(frontier) < 256:
        return _expand((frontier, gens))
    items = sorted(frontier)
    chunk = -(-len(items) // workers)
    parts = [(items[k : k + chunk], gens) for k in range(0, len(items), chunk)]
    out = set()
    with ProcessPoolExecutor(max_workers=workers) as pool:
        for part in pool.map(_expand, parts):
            out |= part
    return out


def iter_levels(S: MatrixSet, tmax: int, budget: int = DEFAULT_BUDGET, workers: int = 1):
    """Yield the set of distinct products of length t for t = 1..tmax.

    Each level costs ``len(previous level) * N`` multiplications, charged
    against ``budget``.
    """
    gens = tuple(m.entries for m in S)
    level = set(gens)
    spent = len(gens)
    for t in range(1, tmax + 1):
        if t > 1:
            spent += len(level) * len(gens)
            if spent > budget:
                raise BudgetExceeded(budget)
            level = _next_level(level, gens, workers)
        yield level


def max_t_exact(S: MatrixSet, t: int, budget: int = DEFAULT_BUDGET, workers: int = 1) -> int:
    if t < 1:
        raise ValueError("t must be >= 1")
    for level in iter_levels(S, t, budget, workers):
        pass
    return max(map(_norm, level))


def max_t_table(S: MatrixSet, tmax: int, budget: int = DEFAULT_BUDGET, workers: int = 1) -> list[int]:
    return [max(map(_norm, level)) for level in iter_levels(S, tmax, budget, workers)]


def max_t_naive(S: MatrixSet, t: int) -> int:
    """Reference max over all N**t words, no deduplication."""
    best = 0
    n = S.n
    for word in itertools.product(range(len(S)), repeat=t):
        acc = _identity_entries(n)
        for k in word:
            acc = _matmul(acc, S[k].entries)
        best = max(best, _norm(acc))
    return best


@dataclass(frozen=True)
class ClosureResult:
    finite: bool
    size: int | None = None
    max_norm: int | None = None
    cap: int | None = None
    elements: frozenset = field(default=frozenset(), repr=False, compare=False)


def semigroup_closure(S: MatrixSet, cap: int = DEFAULT_CAP) -> ClosureResult:
    """Breadth-first closure of S under right multiplication by generators."""
    if cap < 1:
        raise ValueError("cap must be >= 1")
    gens = tuple(m.entries for m in S)
    seen = set(gens)
    if len(seen) > cap:
        return ClosureResult(False, cap=cap)
    frontier = list(dict.fromkeys(gens))
    while frontier:
        nxt = []
        for p in frontier:
            for g in gens:
                q = _matmul(p, g)
                if q not in seen:
                    seen.add(q)
                    if len(seen) > cap:
                        return ClosureResult(False, cap=cap)
                    nxt.append(q)
        frontier = nxt
    return ClosureResult(
        True, size=len(seen), max_norm=max(map(_norm, seen)), elements=frozenset(seen)
    )


def _sat_matmul(a: Entries, b: Entries) -> Entries:
    cols = tuple(zip(*b))
    return tuple(
        tuple(min(2, sum(x * y for x, y in zip(row, col))) for col in cols) for row in a
    )


def diagonal_search(S: MatrixSet, max_len: int, budget: int = DEFAULT_BUDGET):
    """Find a word of length <= max_len whose product has a diagonal entry >= 2.

    Entries are tracked through x -> min(x, 2), a semiring homomorphism, so the
    search is exact while the state space stays finite. Returns
    ``(word, index)`` or None.
    """
    gens = tuple(_sat_matmul(_identity_entries(S.n), m.entries) for m in S)
    seen: dict = {}
    frontier = []
    for k, g in enumerate(gens):
        if g not in seen:
            seen[g] = (k,)
            frontier.append(g)
    spent = len(gens)
    length = 1
    while frontier:
        for p in frontier:
            for i in range(S.n):
                if p[i][i] >= 2:
                    return seen[p], i
        if length == max_len:
            return None
        nxt = []
        for p in frontier:
            for k, g in enumerate(gens):
                spent += 1
                if spent > budget:
                    raise BudgetExceeded(budget)
                q = _sat_matmul(p, g)
                if q not in seen:
                    seen[q] = seen[p] + (k,)
                    nxt.append(q)
        frontier = nxt
        length += 1
    return None


@dataclass(frozen=True)
class DegreeBracket:
    k: int
    accepted: bool
    c1: Fraction
    c2: Fraction
    reason: str = ""


def degree_bracket(
    S: MatrixSet,
    k: int,
    t_lo: int,
    t_hi: int,
    budget: int = DEFAULT_BUDGET,
    table: list[int] | None = None,
) -> DegreeBracket:
    """Bracket max_t / t**k over [t_lo, t_hi] and test whether k is plausible.

    Only the last ceil((t_hi - t_lo) / 2) points of the window are used for
    the trend. ``k`` is rejected

    * as too low when max_t / t**k rises strictly and the k-th difference of
      max_t is larger at the end of the tail than at its start;
    * as too high when both max_t / t**k and max_t / t**(k-1) fall strictly.

    Anything else (including non-monotone ratios) keeps ``k`` as a candidate.
    """
    if not 1 <= t_lo < t_hi:
        raise ValueError("need 1 <= t_lo < t_hi")
    if table is None or len(table) < t_hi:
        table = max_t_table(S, t_hi, budget)
    ts = range(t_lo, t_hi + 1)
    ratios = [Fraction(table[t - 1], t**k) for t in ts]
    c1, c2 = min(ratios), max(ratios)
    h = math.ceil((t_hi - t_lo) / 2)
    tail = list(ts)[-h:]
    if h < 2 or tail[0] - k < 1:
        return DegreeBracket(k, True, c1, c2, "window too short for a trend")
    here = [Fraction(table[t - 1], t**k) for t in tail]
    below = [Fraction(table[t - 1], t ** (k - 1)) for t in tail]
    if _strictly(here, increasing=True):
        if _difference(table, k, tail[-1]) > _difference(table, k, tail[0]):
            return DegreeBracket(k, False, c1, c2, "ratio diverges: degree too low")
    if _strictly(here, increasing=False) and _strictly(below, increasing=False):
        return DegreeBracket(k, False, c1, c2, "ratio vanishes: degree too high")
    return DegreeBracket(k, True, c1, c2)


def _difference(table, order, t):
    """Backward finite difference of the given order of max_t at t."""
    return sum(
        (-1) ** r * math.comb(order, r) * table[t - r - 1] for r in range(order + 1)
    )


def _strictly(values, increasing: bool) -> bool:
    pairs = zip(values, values[1:])
    if increasing:
        return all(b > a for a, b in pairs)
    return all(b < a for a, b in pairs)


@dataclass(frozen=True)
class OracleVerdict:
    """Brute-force verdict. ``growth_class`` is None when inconclusive."""

    growth_class: GrowthClass | None
    max_t: tuple[int, ...]
    t0: int | None = None
    closure: ClosureResult | None = None
    exponential_word: tuple[int, ...] | None = None
    exponential_index: int | None = None
    degree_candidates: tuple[int, ...] = ()
    brackets: tuple[DegreeBracket, ...] = ()
    notes: tuple[str, ...] = ()

    @property
    def degree(self) -> int | None:
        """Degree estimate when exactly one candidate survives the trend test."""
        if len(self.degree_candidates) == 1:
            return self.degree_candidates[0]
        return None


def classify_bruteforce(
    S: MatrixSet,
    tmax: int = 10,
    cap: int = DEFAULT_CAP,
    budget: int = DEFAULT_BUDGET,
    workers: int = 1,
) -> OracleVerdict:
    n = S.n
    notes = []
    table: list[int] = []
    try:
        for level in iter_levels(S, max(tmax, n), budget, workers):
            table.append(max(map(_norm, level)))
    except BudgetExceeded:
        notes.append(f"max_t table truncated at t={len(table)} by budget")
    shown = tuple(table[:tmax])

    for t, m in enumerate(table[:n], start=1):
        if m == 0:
            return OracleVerdict(GrowthClass.ZERO, shown, t0=t, notes=tuple(notes))
    if len(table) < n:
        return OracleVerdict(None, shown, notes=tuple(notes))

    try:
        found = diagonal_search(S, n * n, budget)
    except BudgetExceeded:
        notes.append("diagonal search exceeded budget")
        return OracleVerdict(None, shown, notes=tuple(notes))
    if found is not None:
        return OracleVerdict(
            GrowthClass.EXPONENTIAL,
            shown,
            exponential_word=found[0],
            exponential_index=found[1],
            notes=tuple(notes),
        )

    closure = semigroup_closure(S, cap)
    if closure.finite:
        return OracleVerdict(GrowthClass.BOUNDED, shown, closure=closure, notes=tuple(notes))

    brackets = []
    if len(table) >= tmax and tmax >= 4:
        t_lo = max(1, tmax // 2)
        for k in range(1, n):
            brackets.append(degree_bracket(S, k, t_lo, tmax, table=table))
    else:
        notes.append("table too short for a degree estimate")
    return OracleVerdict(
        GrowthClass.POLYNOMIAL,
        shown,
        closure=closure,
        degree_candidates=tuple(b.k for b in brackets if b.accepted),
        brackets=tuple(brackets),
        notes=tuple(notes),
    )


def agrees(verdict: GrowthVerdict, oracle: OracleVerdict) -> bool | None:
    """Compare a classifier verdict with the oracle; None if the oracle is inconclusive."""
    if oracle.growth_class is None:
        return None
    if verdict.growth_class != oracle.growth_class:
        return False
    if verdict.growth_class is GrowthClass.ZERO:
        return verdict.t0 == oracle.t0
    if verdict.growth_class is GrowthClass.POLYNOMIAL and oracle.brackets:
        if not oracle.degree_candidates:
            return None
        return verdict.degree in oracle.degree_candidates
    return True
