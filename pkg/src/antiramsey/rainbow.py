"""Rainbow matching search and the cyclic slice decomposition.

A slice fixes two parts ``a`` and ``b`` of equal size ``m`` and a shift ``i``;
it holds the edges whose coordinates satisfy ``c_a - c_b = i - 1 (mod m)``.
Inside a slice ``c_b`` is determined by ``c_a``, so deleting coordinate ``b``
is a bijection onto the complete host with part ``b`` removed, and it
preserves vertex-disjointness in both directions.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Union

from .core import (
    EdgeColoring,
    Matching,
    PartProfile,
    SubHypergraph,
    edge_rank,
    format_edge,
    host_tables,
)
from .matching import (
    BudgetExhausted,
    MaxResult,
    SearchBudget,
    SearchOutcome,
    Ticker,
    branch_and_bound,
)

STRATEGIES = ("generic", "slice-guided")


@dataclass(frozen=True)
class SliceView:
    axis: tuple[int, int]
    shift: int
    profile: PartProfile  # host profile with part axis[1] deleted
    to_projected: dict[int, int]
    from_projected: dict[int, int]
    sub: SubHypergraph
    coloring: Optional[EdgeColoring] = None
    color_map: Optional[dict[int, int]] = None  # projected color -> host color

    @property
    def host_ranks(self) -> frozenset[int]:
        return frozenset(self.to_projected)

    @property
    def n_colors(self) -> int:
        return 0 if self.coloring is None else self.coloring.q

    def host_colors(self) -> set[int]:
        return set(self.color_map.values()) if self.color_map else set()

    def lift(self, matching: Matching, host_profile: PartProfile) -> Matching:
        """Map a matching of the projected host back into the slice."""
        coords = host_tables(host_profile).coords
        ranks = [self.from_projected[edge_rank(self.profile, e)] for e in matching]
        return Matching(tuple(coords[x] for x in ranks))

    def project(self, matching: Matching, host_profile: PartProfile) -> Matching:
        coords = host_tables(self.profile).coords
        ranks = [self.to_projected[edge_rank(host_profile, e)] for e in matching]
        return Matching(tuple(coords[x] for x in ranks))

    def to_json(self) -> dict:
        coords = host_tables(self.profile).coords
        return {
            "slice": self.shift,
            "colors": self.n_colors,
            "edges": [format_edge(coords[x]) for x in sorted(self.from_projected)],
        }


def cyclic_slices(
    host: Union[SubHypergraph, EdgeColoring], axis: tuple[int, int] = (1, 2)
) -> list[SliceView]:
    coloring = host if isinstance(host, EdgeColoring) else None
    sub = coloring.domain if coloring is not None else host
    profile = sub.profile
    a, b = axis
    if a == b or not (1 <= a <= profile.r and 1 <= b <= profile.r):
        raise ValueError(f"invalid axis {axis}")
    m = profile.sizes[a - 1]
    if profile.sizes[b - 1] != m:
        raise ValueError("axis parts must have equal size")
    projected = profile.drop_part(b)
    coords = host_tables(profile).coords
    buckets: list[dict[int, int]] = [{} for _ in range(m)]
    for x in sub.ranks():
        e = coords[x]
        shift = (e[a - 1] - e[b - 1]) % m
        buckets[shift][x] = edge_rank(projected, e[: b - 1] + e[b:])
    views = []
    for i, to_proj in enumerate(buckets, start=1):
        from_proj = {y: x for x, y in to_proj.items()}
        psub = SubHypergraph(projected, frozenset(from_proj))
        pcol = cmap = None
        if coloring is not None:
            pcol = EdgeColoring.relabeled(psub, {y: coloring.colors[x] for y, x in from_proj.items()})
            cmap = {pcol.colors[y]: coloring.colors[x] for y, x in from_proj.items()}
        views.append(SliceView(axis, i, projected, to_proj, from_proj, psub, pcol, cmap))
    return views


def _matching(profile: PartProfile, ranks) -> Matching:
    coords = host_tables(profile).coords
    return Matching(tuple(coords[x] for x in sorted(ranks)))


def max_rainbow_matching(coloring: EdgeColoring, budget: Optional[SearchBudget] = None) -> MaxResult:
    tables = host_tables(coloring.profile)
    ticker = Ticker(budget)
    best, done = branch_and_bound(
        coloring.domain.members, tables.masks, tables.part_masks, coloring.colors, None, ticker
    )
    return MaxResult(_matching(coloring.profile, best), done, ticker.nodes)


def _slice_guided(coloring: EdgeColoring, k: int, ticker: Ticker) -> Optional[list[int]]:
    """Look for a rainbow (k-1)-matching inside a color-rich slice and extend it.

    Returns witness ranks or None; never proves absence.
    """
    profile = coloring.profile
    if profile.sizes[0] != profile.sizes[1]:
        return None
    tables = host_tables(profile)
    views = sorted(cyclic_slices(coloring), key=lambda v: (-v.n_colors, v.shift))
    for view in views:
        ptables = host_tables(view.profile)
        inner, _ = branch_and_bound(
            view.sub.members, ptables.masks, ptables.part_masks,
            view.coloring.colors, k - 1, ticker,
        )
        if len(inner) < k - 1:
            continue
        lifted = [view.from_projected[y] for y in inner[: k - 1]]
        covered = 0
        for x in lifted:
            covered |= tables.masks[x]
        used = {coloring.colors[x] for x in lifted}
        for x in coloring.domain.ranks():
            ticker()
            if not tables.masks[x] & covered and coloring.colors[x] not in used:
                return lifted + [x]
    return None


def find_rainbow_k(
    coloring: EdgeColoring,
    k: int,
    strategy: str = "generic",
    budget: Optional[SearchBudget] = None,
) -> SearchOutcome:
    """Search for a rainbow k-matching.

    ``absent`` is a proof of nonexistence; ``indeterminate`` means the budget
    ran out first.  The slice-guided strategy only reorders the search: when
    its heuristic pass fails it falls back to the complete generic search.
    """
    if k < 1:
        raise ValueError("k must be at least 1")
    if strategy not in STRATEGIES:
        raise ValueError(f"unknown strategy {strategy!r}")
    profile = coloring.profile
    tables = host_tables(profile)
    ticker = Ticker(budget)
    try:
        if strategy == "slice-guided" and k >= 2:
            hit = _slice_guided(coloring, k, ticker)
            if hit is not None:
                return SearchOutcome("found", _matching(profile, hit), ticker.nodes, ticker.elapsed_ms)
    except BudgetExhausted:
        return SearchOutcome("indeterminate", None, ticker.nodes, ticker.elapsed_ms)
    best, done = branch_and_bound(
        coloring.domain.members, tables.masks, tables.part_masks, coloring.colors, k, ticker
    )
    if len(best) >= k:
        return SearchOutcome("found", _matching(profile, best[:k]), ticker.nodes, ticker.elapsed_ms)
    return SearchOutcome("absent" if done else "indeterminate", None, ticker.nodes, ticker.elapsed_ms)


def is_rainbow_matching(coloring: EdgeColoring, matching: Matching) -> bool:
    colors = [coloring.color(e) for e in matching]
    return len(set(colors)) == len(colors)
