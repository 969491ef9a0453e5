"""Canonical labels under the automorphism group of a complete r-partite host.

The group is generated by permutations inside each part together with
permutations of parts of equal size.  Labels are lexicographically minimal
images, found by enumerating the whole group (vectorised over edge ranks).
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass
from itertools import permutations, product
from typing import Iterator, Union

import numpy as np

from .core import EdgeColoring, PartProfile, SubHypergraph, host_tables

DEFAULT_GROUP_CAP = 10_000_000
_BLOCK_ROWS = 200_000


class CanonicalizationBudgetExceeded(RuntimeError):
    pass


@dataclass(frozen=True)
class CanonicalLabel:
    kind: str  # "sub" or "coloring"
    profile: str
    data: bytes

    def hex(self) -> str:
        return self.data.hex()

    def __str__(self) -> str:
        return f"{self.kind}:{self.profile}:{self.hex()}"


def automorphism_order(profile: PartProfile) -> int:
    inner = math.prod(math.factorial(n) for n in profile.sizes)
    outer = math.prod(math.factorial(c) for c in Counter(profile.sizes).values())
    return inner * outer


def part_maps(profile: PartProfile) -> list[tuple[int, ...]]:
    """Size-preserving part permutations; ``sigma[s]`` is the image of part ``s`` (0-based)."""
    blocks: dict[int, list[int]] = {}
    for s, n in enumerate(profile.sizes):
        blocks.setdefault(n, []).append(s)
    maps = []
    for choice in product(*(permutations(b) for b in blocks.values())):
        sigma = [0] * profile.r
        for block, image in zip(blocks.values(), choice):
            for s, t in zip(block, image):
                sigma[s] = t
        maps.append(tuple(sigma))
    return maps


def _combine(contribs: list[np.ndarray], m: int) -> np.ndarray:
    acc = np.zeros((1, m), dtype=np.int64)
    for c in contribs:
        acc = (acc[:, None, :] + c[None, :, :]).reshape(-1, m)
    return acc


def edge_permutation_blocks(
    profile: PartProfile, cap: int = DEFAULT_GROUP_CAP
) -> Iterator[np.ndarray]:
    """Yield arrays whose rows are the edge-rank images of group elements.

    Row ``g`` satisfies ``g[x] = rank of the image of edge x``; together the
    blocks cover every group element exactly once.
    """
    if automorphism_order(profile) > cap:
        raise CanonicalizationBudgetExceeded("canonicalization budget exceeded")
    m = profile.n_edges
    coords = np.array(host_tables(profile).coords, dtype=np.int64).reshape(m, profile.r) - 1
    mult = [math.prod(profile.sizes[s + 1:]) for s in range(profile.r)]
    values = [
        np.array(list(permutations(range(n))), dtype=np.int64)[:, coords[:, s]]
        for s, n in enumerate(profile.sizes)
    ]
    for sigma in part_maps(profile):
        contribs = [values[s] * mult[sigma[s]] for s in range(profile.r)]
        if math.prod(len(c) for c in contribs) <= _BLOCK_ROWS or profile.r == 1:
            yield _combine(contribs, m)
        else:
            rest = _combine(contribs[1:], m)
            for row in contribs[0]:
                yield rest + row


def _lexmin(rows: np.ndarray) -> np.ndarray:
    return rows[np.lexsort(rows.T[::-1])[0]]


def _canonical_sub(sub: SubHypergraph, cap: int) -> bytes:
    members = np.array(sub.ranks(), dtype=np.int64)
    m = sub.profile.n_edges
    best = None
    for block in edge_permutation_blocks(sub.profile, cap):
        img = np.zeros(block.shape, dtype=np.uint8)
        if len(members):
            img[np.arange(len(block))[:, None], block[:, members]] = 1
        cand = _lexmin(img)
        if best is None or tuple(cand) < tuple(best):
            best = cand
    return np.packbits(best[:m]).tobytes()


def _normalise_rows(img: np.ndarray, n_ids: int) -> np.ndarray:
    """Relabel each row by first appearance; id ``n_ids - 1`` (uncolored) always maps to 0."""
    g, m = img.shape
    rows = np.arange(g)
    first = np.full((g, n_ids), m, dtype=np.int64)
    for j in range(m - 1, -1, -1):
        first[rows, img[:, j]] = j
    first[:, n_ids - 1] = -1
    order = np.argsort(first, axis=1, kind="stable")
    rank_of = np.empty_like(order)
    rank_of[rows[:, None], order] = np.arange(n_ids)
    return np.take_along_axis(rank_of, img, axis=1)


def _canonical_coloring(coloring: EdgeColoring, cap: int) -> bytes:
    profile = coloring.profile
    m = profile.n_edges
    q = coloring.q
    col = np.full(m, q, dtype=np.int64)
    for x, c in coloring.colors.items():
        col[x] = c - 1
    best = None
    for block in edge_permutation_blocks(profile, cap):
        img = np.empty(block.shape, dtype=np.int64)
        img[np.arange(len(block))[:, None], block] = col[None, :]
        cand = _lexmin(_normalise_rows(img, q + 1))
        if best is None or tuple(cand) < tuple(best):
            best = cand
    return best.astype(">u2").tobytes()


def canonical_form(
    obj: Union[SubHypergraph, EdgeColoring], cap: int = DEFAULT_GROUP_CAP
) -> CanonicalLabel:
    """Minimal image of a subhypergraph, or of a coloring up to color relabeling."""
    if isinstance(obj, EdgeColoring):
        return CanonicalLabel("coloring", str(obj.profile), _canonical_coloring(obj, cap))
    if isinstance(obj, SubHypergraph):
        return CanonicalLabel("sub", str(obj.profile), _canonical_sub(obj, cap))
    raise TypeError(f"cannot canonicalise {type(obj).__name__}")
