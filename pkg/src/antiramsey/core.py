"""Complete r-partite r-uniform hosts, their subhypergraphs and edge colorings.

Vertices and coordinates are 1-based everywhere in the public surface.  An
edge is a tuple ``(i1, ..., ir)`` choosing vertex ``i_s`` of part ``s``; its
rank is the mixed-radix number with part 1 as the most significant digit.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass, field
from functools import cached_property, lru_cache
from itertools import product
from typing import Iterable, Iterator, Mapping, NamedTuple, Sequence

Edge = tuple[int, ...]


class Vertex(NamedTuple):
    part: int
    index: int


@dataclass(frozen=True)
class PartProfile:
    """Part sizes ``n_1 <= ... <= n_r`` of a complete r-partite host.

    ``permutation[j]`` is the 1-based position, in the user's input, of the
    part that ended up at sorted position ``j + 1``.
    """

    sizes: tuple[int, ...]
    permutation: tuple[int, ...] = field(default=(), compare=False)

    def __post_init__(self):
        if len(self.sizes) < 1:
            raise ValueError("arity too small")
        if any(int(n) != n or n < 1 for n in self.sizes):
            raise ValueError("invalid part size")
        if list(self.sizes) != sorted(self.sizes):
            raise ValueError("sizes must be nondecreasing; use make_profile")
        if not self.permutation:
            object.__setattr__(self, "permutation", tuple(range(1, len(self.sizes) + 1)))

    @property
    def r(self) -> int:
        return len(self.sizes)

    @property
    def n_edges(self) -> int:
        return math.prod(self.sizes)

    @property
    def n_vertices(self) -> int:
        return sum(self.sizes)

    def tail_product(self) -> int:
        """``n_2 * ... * n_r``."""
        return math.prod(self.sizes[1:])

    def __str__(self) -> str:
        return "x".join(str(n) for n in self.sizes)

    def edges(self) -> Iterator[Edge]:
        """All edges in rank order."""
        return product(*(range(1, n + 1) for n in self.sizes))

    def vertices(self) -> Iterator[Vertex]:
        for s, n in enumerate(self.sizes, start=1):
            for i in range(1, n + 1):
                yield Vertex(s, i)

    def drop_part(self, part: int) -> "PartProfile":
        """Profile with 1-based ``part`` deleted (may have a single part)."""
        sizes = self.sizes[: part - 1] + self.sizes[part:]
        return PartProfile(sizes)


def make_profile(sizes: Sequence[int]) -> PartProfile:
    sizes = list(sizes)
    if len(sizes) < 2:
        raise ValueError("arity too small")
    if any(not isinstance(n, int) or isinstance(n, bool) or n < 1 for n in sizes):
        raise ValueError("invalid part size")
    order = sorted(range(len(sizes)), key=lambda j: (sizes[j], j))
    return PartProfile(tuple(sizes[j] for j in order), tuple(j + 1 for j in order))


def parse_profile(text: str) -> PartProfile:
    """Parse ``"2x2x3"`` into a profile."""
    text = text.strip()
    if not re.fullmatch(r"\d+(x\d+)*", text):
        raise ValueError(f"malformed profile {text!r}")
    return make_profile([int(t) for t in text.split("x")])


def format_edge(edge: Edge) -> str:
    return "(" + ",".join(str(c) for c in edge) + ")"


def parse_edge(text: str) -> Edge:
    m = re.fullmatch(r"\s*\(\s*(\d+(?:\s*,\s*\d+)*)\s*\)\s*", text)
    if not m:
        raise ValueError(f"malformed edge {text!r}")
    return tuple(int(t) for t in m.group(1).split(","))


def _check_edge(profile: PartProfile, edge: Sequence[int]) -> None:
    if len(edge) != profile.r or any(
        not 1 <= c <= n for c, n in zip(edge, profile.sizes)
    ):
        raise ValueError(f"invalid edge {tuple(edge)} for profile {profile}")


def edge_rank(profile: PartProfile, edge: Sequence[int]) -> int:
    _check_edge(profile, edge)
    rank = 0
    for c, n in zip(edge, profile.sizes):
        rank = rank * n + (c - 1)
    return rank


def edge_unrank(profile: PartProfile, rank: int) -> Edge:
    if not 0 <= rank < profile.n_edges:
        raise ValueError(f"invalid edge rank {rank} for profile {profile}")
    coords = []
    for n in reversed(profile.sizes):
        rank, c = divmod(rank, n)
        coords.append(c + 1)
    return tuple(reversed(coords))


def is_disjoint(e: Edge, f: Edge) -> bool:
    return all(a != b for a, b in zip(e, f))


class HostTables:
    """Per-profile lookup tables shared by the solvers.

    Vertex ``(s, i)`` gets global bit ``offsets[s-1] + i - 1``; ``masks[rank]``
    is the vertex bitmask of the edge with that rank.
    """

    def __init__(self, profile: PartProfile):
        self.profile = profile
        self.offsets = tuple(
            sum(profile.sizes[:s]) for s in range(profile.r)
        )
        self.part_masks = tuple(
            ((1 << n) - 1) << off for n, off in zip(profile.sizes, self.offsets)
        )
        self.coords = tuple(profile.edges())
        self.masks = tuple(
            sum(1 << (off + c - 1) for off, c in zip(self.offsets, e))
            for e in self.coords
        )

    def vertex_bit(self, v: Vertex) -> int:
        return 1 << (self.offsets[v.part - 1] + v.index - 1)


@lru_cache(maxsize=64)
def host_tables(profile: PartProfile) -> HostTables:
    return HostTables(profile)


def _check_vertex(profile: PartProfile, v: Vertex) -> Vertex:
    v = Vertex(*v)
    if not 1 <= v.part <= profile.r or not 1 <= v.index <= profile.sizes[v.part - 1]:
        raise ValueError(f"invalid vertex {tuple(v)} for profile {profile}")
    return v


@dataclass(frozen=True)
class SubHypergraph:
    """A set of edges of the complete host, stored by rank."""

    profile: PartProfile
    members: frozenset[int]

    def __post_init__(self):
        members = frozenset(self.members)
        m = self.profile.n_edges
        if any(not 0 <= x < m for x in members):
            raise ValueError("member rank out of range")
        object.__setattr__(self, "members", members)

    @classmethod
    def complete(cls, profile: PartProfile) -> "SubHypergraph":
        return cls(profile, frozenset(range(profile.n_edges)))

    @classmethod
    def from_edges(cls, profile: PartProfile, edges: Iterable[Edge]) -> "SubHypergraph":
        return cls(profile, frozenset(edge_rank(profile, e) for e in edges))

    def __len__(self) -> int:
        return len(self.members)

    def __contains__(self, edge) -> bool:
        return edge_rank(self.profile, edge) in self.members

    @property
    def n_edges(self) -> int:
        return len(self.members)

    def ranks(self) -> list[int]:
        return sorted(self.members)

    def edges(self) -> list[Edge]:
        return [edge_unrank(self.profile, x) for x in self.ranks()]

    @cached_property
    def mask(self) -> int:
        """Membership bitset over ranks."""
        return sum(1 << x for x in self.members)

    def isolated_vertices(self) -> list[Vertex]:
        tables = host_tables(self.profile)
        covered = 0
        for x in self.members:
            covered |= tables.masks[x]
        return [v for v in self.profile.vertices() if not covered & tables.vertex_bit(v)]

    def to_json(self) -> dict:
        return {
            "profile": str(self.profile),
            "members": self.ranks(),
            "edges": [format_edge(e) for e in self.edges()],
        }

    @classmethod
    def from_json(cls, obj: Mapping) -> "SubHypergraph":
        return cls(parse_profile(obj["profile"]), frozenset(int(x) for x in obj["members"]))


def degree(sub: SubHypergraph, v: Vertex) -> int:
    v = _check_vertex(sub.profile, v)
    bit = host_tables(sub.profile).vertex_bit(v)
    masks = host_tables(sub.profile).masks
    return sum(1 for x in sub.members if masks[x] & bit)


def codegree(sub: SubHypergraph, u: Vertex, v: Vertex) -> int:
    u = _check_vertex(sub.profile, u)
    v = _check_vertex(sub.profile, v)
    if u.part == v.part:
        return 0
    tables = host_tables(sub.profile)
    both = tables.vertex_bit(u) | tables.vertex_bit(v)
    return sum(1 for x in sub.members if tables.masks[x] & both == both)


def remove_vertex(sub: SubHypergraph, v: Vertex) -> SubHypergraph:
    """``H - v``: drop every member edge through ``v``."""
    v = _check_vertex(sub.profile, v)
    tables = host_tables(sub.profile)
    bit = tables.vertex_bit(v)
    return SubHypergraph(
        sub.profile, frozenset(x for x in sub.members if not tables.masks[x] & bit)
    )


@dataclass(frozen=True)
class EdgeColoring:
    """Surjective map from the edges of ``domain`` onto colors ``1..q``."""

    domain: SubHypergraph
    colors: Mapping[int, int]

    def __post_init__(self):
        colors = dict(self.colors)
        if set(colors) != set(self.domain.members):
            raise ValueError("coloring must be total on its domain")
        used = set(colors.values())
        if used != set(range(1, len(used) + 1)):
            raise ValueError("colors must be exactly 1..q")
        object.__setattr__(self, "colors", colors)

    @classmethod
    def from_ranks(cls, profile: PartProfile, colors: Mapping[int, int]) -> "EdgeColoring":
        return cls(SubHypergraph(profile, frozenset(colors)), colors)

    @classmethod
    def relabeled(cls, domain: SubHypergraph, colors: Mapping[int, object]) -> "EdgeColoring":
        """Build from arbitrary color ids, numbering them by first appearance in rank order."""
        ids: dict[object, int] = {}
        out = {}
        for x in sorted(colors):
            out[x] = ids.setdefault(colors[x], len(ids) + 1)
        return cls(domain, out)

    @property
    def profile(self) -> PartProfile:
        return self.domain.profile

    @property
    def q(self) -> int:
        return len(set(self.colors.values()))

    def color(self, edge: Edge) -> int:
        return self.colors[edge_rank(self.profile, edge)]

    def color_set(self, ranks: Iterable[int]) -> set[int]:
        """``c(E)`` for a set of edge ranks."""
        return {self.colors[x] for x in ranks}

    def classes(self) -> list[list[int]]:
        """Color classes as sorted rank lists, indexed by ``color - 1``."""
        out: list[list[int]] = [[] for _ in range(self.q)]
        for x in sorted(self.colors):
            out[self.colors[x] - 1].append(x)
        return out

    def to_json(self) -> dict:
        return {
            "profile": str(self.profile),
            "q": self.q,
            "assignments": [[x, self.colors[x]] for x in sorted(self.colors)],
        }

    @classmethod
    def from_json(cls, obj: Mapping) -> "EdgeColoring":
        profile = parse_profile(obj["profile"])
        colors = {int(x): int(c) for x, c in obj["assignments"]}
        coloring = cls.from_ranks(profile, colors)
        if "q" in obj and int(obj["q"]) != coloring.q:
            raise ValueError("declared q does not match assignments")
        return coloring


@dataclass(frozen=True)
class Matching:
    """Pairwise vertex-disjoint edges."""

    edges: tuple[Edge, ...]

    def __post_init__(self):
        edges = tuple(tuple(e) for e in self.edges)
        for i, e in enumerate(edges):
            for f in edges[i + 1:]:
                if not is_disjoint(e, f):
                    raise ValueError(f"edges {e} and {f} share a vertex")
        object.__setattr__(self, "edges", edges)

    def __len__(self) -> int:
        return len(self.edges)

    def __iter__(self):
        return iter(self.edges)

    def to_json(self) -> list[str]:
        return [format_edge(e) for e in self.edges]
