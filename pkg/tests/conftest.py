"""Brute-force reference implementations, deliberately independent of the package's search code."""

from itertools import combinations, permutations, product

import pytest

from antiramsey.core import is_disjoint

ACCEPTANCE_LINES = []


def brute_max_matching(edges):
    edges = list(edges)
    best = 0
    for size in range(1, len(edges) + 1):
        if not any(
            all(is_disjoint(e, f) for e, f in combinations(combo, 2))
            for combo in combinations(edges, size)
        ):
            break
        best = size
    return best


def brute_max_rainbow(edge_colors):
    """edge_colors: list of (edge, color)."""
    best = 0
    items = list(edge_colors)

    def rec(start, chosen, used):
        nonlocal best
        best = max(best, len(chosen))
        for i in range(start, len(items)):
            e, c = items[i]
            if c in used or any(not is_disjoint(e, f) for f in chosen):
                continue
            rec(i + 1, chosen + [e], used | {c})

    rec(0, [], frozenset())
    return best


def set_partitions(items):
    """All set partitions of a list, as lists of blocks."""
    if not items:
        yield []
        return
    first, rest = items[0], items[1:]
    for part in set_partitions(rest):
        for i in range(len(part)):
            yield part[:i] + [[first] + part[i]] + part[i + 1:]
        yield [[first]] + part


def host_automorphisms(sizes):
    """Every automorphism of the complete host, as a function on edge tuples."""
    r = len(sizes)
    maps = []
    for sigma in permutations(range(r)):
        if any(sizes[s] != sizes[sigma[s]] for s in range(r)):
            continue
        for pis in product(*(list(permutations(range(1, n + 1))) for n in sizes)):
            def g(e, sigma=sigma, pis=pis):
                out = [0] * r
                for s in range(r):
                    out[sigma[s]] = pis[s][e[s] - 1]
                return tuple(out)
            maps.append(g)
    return maps


def orbit_key_sub(edges, autos):
    return min(tuple(sorted(g(e) for e in edges)) for g in autos)


def orbit_key_coloring(classes, autos):
    """classes: iterable of edge lists; key ignores color names."""
    return min(
        tuple(sorted(tuple(sorted(g(e) for e in cls)) for cls in classes)) for g in autos
    )


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


@pytest.fixture
def acceptance_log():
    return ACCEPTANCE_LINES
