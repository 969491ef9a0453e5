import itertools

import numpy as np
import pytest

from antiramsey.constructions import (
    ConstructionUndefined,
    build_phi_r,
    build_qclass_coloring,
    build_turan_extremal,
    qclass_family,
    random_surjective_coloring,
    representing_subhypergraph,
)
from antiramsey.core import SubHypergraph, make_profile
from antiramsey.matching import disjointness_components, has_k_matching, max_matching
from antiramsey.rainbow import max_rainbow_matching

from conftest import brute_max_matching, brute_max_rainbow


def profiles_up_to(max_edges, max_part=7):
    out = []
    for r in (2, 3, 4):
        for sizes in itertools.combinations_with_replacement(range(1, max_part + 1), r):
            p = make_profile(list(sizes))
            if p.n_edges <= max_edges:
                out.append(p)
    return out


def test_turan_examples():
    assert build_turan_extremal(make_profile([3, 3]), 3).n_edges == 6
    assert build_turan_extremal(make_profile([2, 2, 2]), 2).n_edges == 4
    sub = build_turan_extremal(make_profile([5, 5]), 3)
    assert len(max_matching(sub).matching) == brute_max_matching(sub.edges()) == 2
    with pytest.raises(ConstructionUndefined):
        build_turan_extremal(make_profile([2, 2]), 4)


def test_phi_examples():
    assert build_phi_r(make_profile([5, 5]), 3).q == 6
    assert build_phi_r(make_profile([5, 5, 5]), 3).q == 26
    for sizes in ([2, 2], [3, 4, 5], [2, 2, 2, 2]):
        assert build_phi_r(make_profile(sizes), 2).q == 1
    with pytest.raises(ConstructionUndefined):
        build_phi_r(make_profile([3, 3]), 1)
    with pytest.raises(ConstructionUndefined):
        build_phi_r(make_profile([3, 3]), 6)


def test_phi_colors_follow_rank_with_shared_color_last():
    phi = build_phi_r(make_profile([3, 4]), 4)
    q = phi.q
    assert q == 2 * 4 + 1
    assert [phi.colors[x] for x in range(8)] == list(range(1, 9))
    assert all(phi.colors[x] == q for x in range(8, 12))


def test_qclass_examples():
    assert build_qclass_coloring(make_profile([2, 2, 2])).q == 4
    assert build_qclass_coloring(make_profile([2, 3, 3])).q == 1
    c = build_qclass_coloring(make_profile([2, 2]))
    assert c.color((1, 1)) == c.color((2, 2))
    with pytest.raises(ConstructionUndefined):
        build_qclass_coloring(make_profile([3, 3]))


def test_qclass_family_shape():
    fam = qclass_family(make_profile([2, 2, 2, 3]))
    assert fam.t == 3 and len(fam.classes) == 4
    prefixes = [p for pair in fam.classes for p in pair]
    assert sorted(prefixes) == sorted(itertools.product((1, 2), repeat=3))
    for alpha, bar in fam.classes:
        assert bar == tuple(3 - c for c in alpha)


def test_representing_examples():
    phi = build_phi_r(make_profile([5, 5]), 3)
    assert representing_subhypergraph(phi).n_edges == 6
    q = build_qclass_coloring(make_profile([2, 2, 2]))
    assert representing_subhypergraph(q).members == frozenset({0, 1, 2, 3})
    a = representing_subhypergraph(phi, "seeded-random", seed=4)
    b = representing_subhypergraph(phi, "seeded-random", seed=4)
    assert a == b and a.n_edges == phi.q
    assert phi.color_set(a.members) == set(range(1, phi.q + 1))
    with pytest.raises(ValueError):
        representing_subhypergraph(phi, "max-rank")


PHI_CELLS = [
    (p, k) for p in profiles_up_to(200) for k in range(2, p.sizes[0] + 2)
]


@pytest.mark.parametrize("profile,k", PHI_CELLS, ids=lambda v: str(v))
def test_phi_has_max_rainbow_k_minus_one(profile, k):
    phi = build_phi_r(profile, k)
    assert phi.q == (k - 2) * profile.tail_product() + 1
    res = max_rainbow_matching(phi)
    assert res.optimal and len(res.matching) == k - 1


@pytest.mark.parametrize("profile", profiles_up_to(27, 4), ids=str)
def test_phi_rainbow_against_brute_force(profile):
    for k in range(2, profile.sizes[0] + 2):
        phi = build_phi_r(profile, k)
        pairs = [(e, phi.colors[x]) for x, e in enumerate(profile.edges())]
        assert brute_max_rainbow(pairs) == k - 1


@pytest.mark.parametrize("profile", profiles_up_to(200), ids=str)
def test_turan_is_m_k_free_with_formula_size(profile):
    for k in range(1, profile.sizes[0] + 2):
        sub = build_turan_extremal(profile, k)
        assert sub.n_edges == (k - 1) * profile.tail_product()
        assert has_k_matching(sub, k).status == "absent"
        assert len(max_matching(sub).matching) == k - 1


@pytest.mark.parametrize("profile", [p for p in profiles_up_to(200) if p.sizes[0] == 2], ids=str)
def test_qclass_matches_components(profile):
    coloring = build_qclass_coloring(profile)
    parts = disjointness_components(SubHypergraph.complete(profile))
    assert sorted(map(sorted, parts.classes)) == sorted(coloring.classes())


@pytest.mark.parametrize("profile", profiles_up_to(100), ids=str)
def test_phi_rainbow_part_is_turan_for_k_minus_one(profile):
    for k in range(3, profile.sizes[0] + 2):
        phi = build_phi_r(profile, k)
        singletons = {c[0] for c in phi.classes() if len(c) == 1}
        if k - 2 == profile.sizes[0]:
            continue
        assert singletons == build_turan_extremal(profile, k - 1).members


def test_random_surjective_coloring():
    p = make_profile([3, 3])
    for seed in range(50):
        for q in (1, 5, 9):
            c = random_surjective_coloring(p, q, np.random.default_rng([seed, 1]))
            assert c.q == q
    a = random_surjective_coloring(p, 7, np.random.default_rng([3, 9]))
    b = random_surjective_coloring(p, 7, np.random.default_rng([3, 9]))
    assert a == b
    with pytest.raises(ValueError):
        random_surjective_coloring(p, 10, np.random.default_rng(0))
