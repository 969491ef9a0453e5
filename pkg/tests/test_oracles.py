import csv
import io
import itertools
import json

import pytest

from antiramsey.canonical import canonical_form
from antiramsey.constructions import build_phi_r
from antiramsey.core import EdgeColoring, SubHypergraph, make_profile
from antiramsey.matching import SearchBudget
from antiramsey.oracles import (
    CSV_COLUMNS,
    ar_exact,
    ar_formula,
    ar_m2_closed,
    ar_theorems,
    bell_number,
    check_uniqueness_coloring,
    ex_exact,
    is_open_cell,
    m2_formula,
    reports_to_csv,
    turan_formula,
    verify_cell,
    verify_grid,
)

from conftest import (
    brute_max_matching,
    brute_max_rainbow,
    host_automorphisms,
    orbit_key_sub,
    set_partitions,
)


def brute_ex(profile, k):
    edges = list(profile.edges())
    best, winners = 0, []
    for size in range(len(edges), -1, -1):
        winners = [c for c in itertools.combinations(edges, size) if brute_max_matching(c) < k]
        if winners:
            return size, winners
    return best, winners


def brute_ar(profile, k):
    edges = list(profile.edges())
    best = 0
    for blocks in set_partitions(list(range(len(edges)))):
        if len(blocks) <= best:
            continue
        pairs = [(edges[x], i) for i, b in enumerate(blocks) for x in b]
        if brute_max_rainbow(pairs) < k:
            best = len(blocks)
    return best


EX_CELLS = [((2, 2), 2), ((2, 3), 2), ((3, 3), 2), ((3, 3), 3), ((2, 2, 2), 2), ((1, 3), 2), ((2, 4), 3)]


@pytest.mark.parametrize("sizes,k", EX_CELLS)
def test_ex_exact_against_brute_force(sizes, k):
    p = make_profile(list(sizes))
    res = ex_exact(p, k)
    value, winners = brute_ex(p, k)
    assert res.exact and res.value == value
    assert res.raw_count == len(winners)
    autos = host_automorphisms(p.sizes)
    orbits = {orbit_key_sub(w, autos) for w in winners}
    assert len(res.labels) == len(orbits)


def test_ex_exact_examples():
    assert ex_exact(make_profile([3, 3]), 3).value == 6
    res = ex_exact(make_profile([3, 3, 3]), 2)
    assert res.value == 9 and res.method == "max-clique" and len(res.labels) == 1
    assert ex_exact(make_profile([2, 2]), 1).value == 0
    with pytest.raises(ValueError):
        ex_exact(make_profile([2, 2]), 0)


def test_ex_2x2x2_has_three_extremal_orbits():
    # faces, claws and parity tetrahedra: all intersecting, all of size 4
    res = ex_exact(make_profile([2, 2, 2]), 2)
    assert res.value == 4 and res.raw_count == 16 and len(res.labels) == 3


def test_ex_budget_gives_bracket():
    res = ex_exact(make_profile([3, 3, 3]), 3, SearchBudget(node_cap=50))
    assert not res.exact and res.lower <= 18 <= res.upper


AR_CELLS = [((2, 2), 2), ((2, 3), 2), ((2, 2, 2), 2), ((1, 4), 2), ((2, 4), 2), ((2, 2), 3), ((2, 3), 3)]


@pytest.mark.parametrize("sizes,k", AR_CELLS)
def test_ar_exact_against_brute_force(sizes, k):
    p = make_profile(list(sizes))
    res = ar_exact(p, k)
    assert res.exact and res.value == brute_ar(p, k)
    for coloring in res.maximizers:
        assert coloring.q == res.value
        pairs = [(e, coloring.colors[x]) for x, e in enumerate(p.edges())]
        assert brute_max_rainbow(pairs) < k


def test_ar_exact_examples():
    assert ar_exact(make_profile([2, 2]), 2).value == 2
    assert ar_exact(make_profile([2, 3]), 2).value == 1
    assert ar_exact(make_profile([2, 2, 2]), 2).value == 4
    res = ar_exact(make_profile([3, 3]), 3)
    assert res.value == 4 and res.raw_count == 87
    skipped = ar_exact(make_profile([5, 5]), 3)
    assert not skipped.exact and skipped.lower >= 1
    with pytest.raises(ValueError):
        ar_exact(make_profile([2, 2]), 1)


def test_bell_numbers():
    assert [bell_number(m) for m in range(8)] == [1, 1, 2, 5, 15, 52, 203, 877]


def test_m2_closed_examples():
    assert ar_m2_closed(make_profile([3, 4, 5])) == 1
    assert ar_m2_closed(make_profile([2, 2, 3, 3])) == 2
    assert ar_m2_closed(make_profile([2, 2])) == 2
    assert ar_m2_closed(make_profile([1, 3])) == 3


SMALL = [
    make_profile(list(s))
    for r in (2, 3)
    for s in itertools.combinations_with_replacement(range(1, 4), r)
    if make_profile(list(s)).n_edges <= 9
]


@pytest.mark.parametrize("profile", SMALL, ids=str)
def test_m2_closed_matches_partition_search(profile):
    assert ar_m2_closed(profile) == m2_formula(profile) == ar_exact(profile, 2).value


def test_formulas():
    p = make_profile([3, 4, 5])
    assert turan_formula(p, 2) == 20
    assert ar_formula(p, 3) == 21
    assert ar_formula(make_profile([2, 2, 2, 3]), 2) == 4


def test_hypothesis_routing():
    assert ar_theorems(make_profile([4, 4, 4]), 3) == []
    assert is_open_cell(make_profile([4, 4, 4]), 3)
    assert ar_theorems(make_profile([5, 5, 5]), 3) == ["ar_main"]
    assert ar_theorems(make_profile([4, 4]), 3) == ["ar_bipartite"]
    assert ar_theorems(make_profile([2, 2]), 2) == ["ar_m2"]
    assert not is_open_cell(make_profile([4, 4]), 3)


def test_uniqueness_check_on_3x3():
    rep = check_uniqueness_coloring(make_profile([3, 3]), 3)
    # four isomorphism classes, one of them phi_2
    assert rep.raw_counts["extremal_colorings"] == 87
    assert rep.raw_counts["extremal_classes"] == 4
    assert rep.claims["coloring_uniqueness"] == "failed"
    bad = EdgeColoring.from_json(rep.counterexamples["coloring_uniqueness"]["coloring"])
    assert bad.q == 4
    pairs = [(e, bad.colors[x]) for x, e in enumerate(bad.profile.edges())]
    assert brute_max_rainbow(pairs) == 2
    assert canonical_form(bad) != canonical_form(build_phi_r(bad.profile, 3))


def test_uniqueness_check_on_4x4_holds():
    rep = check_uniqueness_coloring(make_profile([4, 4]), 3)
    assert rep.claims["coloring_uniqueness"] == "verified-exact"
    assert rep.raw_counts["extremal_classes"] == 1


def test_uniqueness_check_limits():
    assert check_uniqueness_coloring(make_profile([5, 5]), 3).claims["coloring_uniqueness"] == "budget-exhausted"
    assert check_uniqueness_coloring(make_profile([3, 3]), 2).claims["coloring_uniqueness"] == "not-applicable"


def test_verify_cell_routing():
    rep = verify_cell(make_profile([4, 4, 4]), 3, partition_budget=SearchBudget(node_cap=1000))
    assert rep.claims["ar_formula"] == "no-paper-claim"
    assert rep.claims["coloring_uniqueness"] == "out-of-hypothesis"

    rep = verify_cell(make_profile([4, 4]), 3)
    assert rep.ar_value == 5 and rep.ex_value == 8
    assert rep.claims["ar_formula"] == "verified-exact"
    assert rep.claims["sandwich"] == "verified-exact"
    assert rep.claims["corollary"] == "verified-exact"
    assert rep.status == "verified"


def test_verify_cell_m2_and_failure():
    rep = verify_cell(make_profile([2, 2]), 2)
    assert rep.claims["m2_components"] == "verified-exact"
    assert rep.status == "verified"
    rep = verify_cell(make_profile([2, 2, 2]), 2)
    assert rep.claims["turan_uniqueness"] == "failed"
    assert rep.status == "failed"
    cert = rep.counterexamples["turan_uniqueness"]["subhypergraph"]
    sub = SubHypergraph.from_json(cert)
    assert not sub.isolated_vertices()
    assert brute_max_matching(sub.edges()) == 1


def test_verify_cell_construction_only():
    rep = verify_cell(make_profile([5, 5, 5]), 3, subset_budget=SearchBudget(node_cap=100))
    assert rep.claims["turan_formula"] == "verified-construction-only"
    assert rep.claims["ar_formula"] == "verified-construction-only"
    assert rep.claims["corollary"] == "verified-construction-only"


def test_reports_serialise():
    reports = verify_grid([(make_profile([2, 2]), 2), (make_profile([2, 3]), 2)])
    rows = list(csv.reader(io.StringIO(reports_to_csv(reports))))
    assert tuple(rows[0]) == CSV_COLUMNS
    assert rows[1] == ["2x2", "2", "2", "2", "2", "2", "verified"]
    blob = json.loads(json.dumps([r.to_json() for r in reports]))
    assert blob[1]["ar_value"] == 1 and blob[1]["status"] == "verified"


def test_grid_is_schedule_independent():
    cells = [(make_profile([2, 2]), 2), (make_profile([2, 3]), 2), (make_profile([2, 2, 2]), 2)]
    a = [r.to_json() for r in verify_grid(cells, workers=1)]
    b = [r.to_json() for r in verify_grid(cells, workers=2)]
    assert a == b
