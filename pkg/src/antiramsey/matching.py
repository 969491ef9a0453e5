"""Exact matching search and the disjointness-component decomposition."""

from __future__ import annotations

import time
from dataclasses import dataclass
from typing import Mapping, NamedTuple, Optional, Sequence

import numpy as np

from .core import Matching, SubHypergraph, host_tables


@dataclass(frozen=True)
class SearchBudget:
    node_cap: int = 10_000_000
    time_cap: Optional[float] = None  # milliseconds
    seed: int = 0

    def __post_init__(self):
        if self.node_cap < 1:
            raise ValueError("node_cap must be positive")
        if self.time_cap is not None and self.time_cap <= 0:
            raise ValueError("time_cap must be positive")


DEFAULT_BUDGET = SearchBudget()


class BudgetExhausted(Exception):
    pass


class Ticker:
    """Counts search nodes against a budget; raises ``BudgetExhausted``."""

    def __init__(self, budget: Optional[SearchBudget] = None):
        self.budget = budget or DEFAULT_BUDGET
        self.nodes = 0
        self.start = time.perf_counter()
        self.deadline = (
            None if self.budget.time_cap is None else self.start + self.budget.time_cap / 1000
        )

    def __call__(self) -> None:
        self.nodes += 1
        if self.nodes > self.budget.node_cap:
            raise BudgetExhausted
        if self.deadline is not None and self.nodes & 1023 == 0:
            if time.perf_counter() > self.deadline:
                raise BudgetExhausted

    @property
    def elapsed_ms(self) -> float:
        return (time.perf_counter() - self.start) * 1000


class MaxResult(NamedTuple):
    matching: Matching
    optimal: bool
    nodes: int


@dataclass
class SearchOutcome:
    """Result of a k-witness search: ``found``, ``absent`` or ``indeterminate``."""

    status: str
    witness: Optional[Matching]
    nodes: int
    elapsed_ms: float = 0.0

    @property
    def found(self) -> bool:
        return self.status == "found"


class _Found(Exception):
    pass


def branch_and_bound(
    ranks: Sequence[int],
    masks: Sequence[int],
    part_masks: Sequence[int],
    colors: Optional[Mapping[int, int]],
    target: Optional[int],
    ticker: Ticker,
    blocked: int = 0,
    used: frozenset = frozenset(),
) -> tuple[list[int], bool]:
    """Largest (or ``target``-sized) matching among ``ranks``.

    With ``colors`` the matching must also be rainbow.  ``blocked`` is a
    vertex bitmask and ``used`` a color set that candidates must avoid.
    Returns ``(best ranks, completed)``; ``completed`` is False only when the
    budget ran out.
    """
    cands = [
        x for x in sorted(ranks)
        if not masks[x] & blocked and (colors is None or colors[x] not in used)
    ]
    best: list[int] = []
    chosen: list[int] = []

    def rec(cands: list[int]) -> None:
        nonlocal best
        depth = len(chosen)
        goal = target if target is not None else len(best) + 1
        n = len(cands)
        # suffix bounds: uncovered vertices per part, distinct colors
        suffix_union = [0] * (n + 1)
        suffix_colors = [0] * (n + 1)
        seen: set = set()
        for i in range(n - 1, -1, -1):
            x = cands[i]
            suffix_union[i] = suffix_union[i + 1] | masks[x]
            if colors is not None:
                seen.add(colors[x])
                suffix_colors[i] = len(seen)
        for i in range(n):
            ticker()
            u = suffix_union[i]
            bound = min(n - i, min((u & pm).bit_count() for pm in part_masks))
            if colors is not None:
                bound = min(bound, suffix_colors[i])
            if depth + bound < goal:
                return
            e = cands[i]
            me = masks[e]
            if colors is None:
                nxt = [f for f in cands[i + 1:] if not masks[f] & me]
            else:
                ce = colors[e]
                nxt = [f for f in cands[i + 1:] if not masks[f] & me and colors[f] != ce]
            chosen.append(e)
            if len(chosen) > len(best):
                best = list(chosen)
                if target is not None and len(best) >= target:
                    raise _Found
            rec(nxt)
            chosen.pop()
            if target is None:
                goal = len(best) + 1

    try:
        rec(cands)
    except _Found:
        pass
    except BudgetExhausted:
        return best, False
    return best, True


def _to_matching(sub_profile, ranks: Sequence[int]) -> Matching:
    coords = host_tables(sub_profile).coords
    return Matching(tuple(coords[x] for x in sorted(ranks)))


def max_matching(sub: SubHypergraph, budget: Optional[SearchBudget] = None) -> MaxResult:
    """Maximum matching of ``sub`` by branch and bound.

    ``optimal`` is False when the budget ran out; ``matching`` is then the
    best incumbent.
    """
    tables = host_tables(sub.profile)
    ticker = Ticker(budget)
    best, done = branch_and_bound(
        sub.members, tables.masks, tables.part_masks, None, None, ticker
    )
    return MaxResult(_to_matching(sub.profile, best), done, ticker.nodes)


def has_k_matching(sub: SubHypergraph, k: int, budget: Optional[SearchBudget] = None) -> SearchOutcome:
    if k < 1:
        raise ValueError("k must be at least 1")
    tables = host_tables(sub.profile)
    ticker = Ticker(budget)
    best, done = branch_and_bound(
        sub.members, tables.masks, tables.part_masks, None, k, ticker
    )
    if len(best) >= k:
        return SearchOutcome("found", _to_matching(sub.profile, best[:k]), ticker.nodes, ticker.elapsed_ms)
    return SearchOutcome("absent" if done else "indeterminate", None, ticker.nodes, ticker.elapsed_ms)


@dataclass(frozen=True)
class ComponentPartition:
    classes: tuple[frozenset[int], ...]

    def __len__(self) -> int:
        return len(self.classes)

    def class_of(self) -> dict[int, int]:
        """Rank -> 0-based class index."""
        return {x: i for i, c in enumerate(self.classes) for x in c}


def disjointness_components(sub: SubHypergraph) -> ComponentPartition:
    """Connected components of the graph joining vertex-disjoint member edges."""
    ranks = sub.ranks()
    if not ranks:
        return ComponentPartition(())
    coords = np.array([host_tables(sub.profile).coords[x] for x in ranks])
    disjoint = np.all(coords[:, None, :] != coords[None, :, :], axis=2)
    parent = list(range(len(ranks)))

    def find(a: int) -> int:
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for a, b in zip(*np.nonzero(np.triu(disjoint, 1))):
        ra, rb = find(int(a)), find(int(b))
        if ra != rb:
            parent[max(ra, rb)] = min(ra, rb)
    groups: dict[int, set[int]] = {}
    for i, x in enumerate(ranks):
        groups.setdefault(find(i), set()).add(x)
    classes = sorted((frozenset(g) for g in groups.values()), key=min)
    return ComponentPartition(tuple(classes))
