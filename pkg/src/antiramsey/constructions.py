"""Extremal hypergraphs and colorings of complete r-partite hosts."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np

from .core import EdgeColoring, PartProfile, SubHypergraph, host_tables


class ConstructionUndefined(ValueError):
    pass


def _part1_set(profile: PartProfile, size: int, vertices: Optional[Sequence[int]]) -> frozenset[int]:
    if vertices is None:
        return frozenset(range(1, size + 1))
    vertices = frozenset(vertices)
    if len(vertices) != size or not vertices <= set(range(1, profile.sizes[0] + 1)):
        raise ConstructionUndefined(f"need {size} distinct vertices of part 1")
    return vertices


def build_turan_extremal(
    profile: PartProfile, k: int, vertices: Optional[Sequence[int]] = None
) -> SubHypergraph:
    """All edges through a fixed (k-1)-subset of part 1 (default: its first k-1 vertices).

    Has ``(k-1) * n_2 * ... * n_r`` edges and no k-matching.
    """
    if k < 1 or k - 1 > profile.sizes[0]:
        raise ConstructionUndefined("construction undefined: need 1 <= k-1 <= n_1")
    centre = _part1_set(profile, k - 1, vertices)
    coords = host_tables(profile).coords
    return SubHypergraph(profile, frozenset(x for x, e in enumerate(coords) if e[0] in centre))


def build_phi_r(
    profile: PartProfile, k: int, vertices: Optional[Sequence[int]] = None
) -> EdgeColoring:
    """Rainbow on the edges through k-2 vertices of part 1, one shared color elsewhere.

    Colors follow edge rank; the shared color is last.  When ``k - 2 == n_1``
    nothing is left for the shared color and the coloring is injective.
    """
    if k < 2 or k - 2 > profile.sizes[0]:
        raise ConstructionUndefined("construction undefined: need k >= 2 and k-2 <= n_1")
    centre = _part1_set(profile, k - 2, vertices)
    coords = host_tables(profile).coords
    colors: dict[int, int] = {}
    nxt = 1
    for x, e in enumerate(coords):
        if e[0] in centre:
            colors[x] = nxt
            nxt += 1
    for x in range(len(coords)):
        if x not in colors:
            colors[x] = nxt
    return EdgeColoring(SubHypergraph.complete(profile), colors)


@dataclass(frozen=True)
class QClassFamily:
    """Complementary prefix pairs over the leading size-2 parts.

    ``classes[j]`` is ``(alpha, alpha_bar)`` with ``alpha`` the
    lexicographically smaller t-prefix.
    """

    t: int
    classes: tuple[tuple[tuple[int, ...], tuple[int, ...]], ...]

    def class_index(self, edge: Sequence[int]) -> int:
        prefix = tuple(edge[: self.t])
        bar = tuple(3 - c for c in prefix)
        return self.prefix_index()[min(prefix, bar)]

    def prefix_index(self) -> dict[tuple[int, ...], int]:
        return {alpha: j for j, (alpha, _) in enumerate(self.classes)}


def qclass_family(profile: PartProfile) -> QClassFamily:
    if profile.sizes[0] != 2:
        raise ConstructionUndefined("construction undefined: requires n_1 = 2")
    t = sum(1 for n in profile.sizes if n == 2)
    seen = []
    for x in range(2 ** t):
        alpha = tuple(1 + ((x >> (t - 1 - s)) & 1) for s in range(t))
        bar = tuple(3 - c for c in alpha)
        if alpha < bar:
            seen.append((alpha, bar))
    return QClassFamily(t, tuple(seen))


def build_qclass_coloring(profile: PartProfile) -> EdgeColoring:
    """Two edges share a color iff their prefixes over the size-2 parts are equal or complementary."""
    family = qclass_family(profile)
    lookup = family.prefix_index()
    coords = host_tables(profile).coords
    keys = {}
    for x, e in enumerate(coords):
        prefix = e[: family.t]
        keys[x] = lookup[min(prefix, tuple(3 - c for c in prefix))]
    return EdgeColoring.relabeled(SubHypergraph.complete(profile), keys)


def representing_subhypergraph(
    coloring: EdgeColoring, selector: str = "min-rank", seed: int = 0
) -> SubHypergraph:
    """One edge of each color: the lowest ranked, or a seeded random choice."""
    classes = coloring.classes()
    if selector == "min-rank":
        picks = [c[0] for c in classes]
    elif selector == "seeded-random":
        rng = np.random.default_rng(seed)
        picks = [c[int(rng.integers(len(c)))] for c in classes]
    else:
        raise ValueError(f"unknown selector {selector!r}")
    return SubHypergraph(coloring.profile, frozenset(picks))


def random_surjective_coloring(
    profile: PartProfile, q: int, rng: np.random.Generator
) -> EdgeColoring:
    """Uniform colors per edge, then repaired to hit every color in ``1..q``.

    Each missing color (ascending) is written onto the lowest-ranked edge
    whose current color still occurs elsewhere.
    """
    m = profile.n_edges
    if not 1 <= q <= m:
        raise ValueError(f"need 1 <= q <= {m} colors")
    colors = [int(c) for c in rng.integers(1, q + 1, size=m)]
    counts = np.bincount(colors, minlength=q + 1)
    missing = [c for c in range(1, q + 1) if counts[c] == 0]
    x = 0
    for c in missing:
        while counts[colors[x]] < 2:
            x += 1
        counts[colors[x]] -= 1
        colors[x] = c
        counts[c] += 1
        x += 1
    return EdgeColoring(SubHypergraph.complete(profile), dict(enumerate(colors)))
