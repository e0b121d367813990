import random

import pytest

from combclass.generators import (
    RANDOM_KINDS, random_comb, random_fan_cycle_system, random_fat, random_h_expansion, random_member,
    random_three_connected_fat, random_three_connected_h,
)
from combclass.graph import vertex_connectivity
from combclass.patterns import PatternSpec, contains, is_free
from combclass.structures import FatKind, build, build_H, build_fat, format_description


def test_seeded_runs_repeat():
    for kind in RANDOM_KINDS:
        draws = []
        for _ in range(2):
            rng = random.Random(7)
            draws.append([format_description(random_member(rng, kind)) for _ in range(5)])
        assert draws[0] == draws[1]

def test_unknown_kind(rng):
    with pytest.raises(ValueError):
        random_member(rng, 'tree')


def test_comb_bounds(rng):
    for _ in range(200):
        d = random_comb(rng, max_order=12, pointed=rng.random() < 0.5)
        assert d.order <= 12
        assert d.m >= 3

def test_pointed_combs(rng):
    for _ in range(50):
        d = random_comb(rng, max_order=10, pointed=True)
        assert d.pointed
        assert set(d.leaf_sizes) == {1}

def test_comb_too_small(rng):
    with pytest.raises(ValueError):
        random_comb(rng, max_order=5)
    with pytest.raises(ValueError):
        random_comb(rng, max_order=11, min_root=3)

def test_h_bounds(rng):
    indices = set()
    for _ in range(300):
        e = random_h_expansion(rng, max_order=12)
        assert build_H(e).n <= 12
        indices.add(e.index)
    assert indices == set(range(9))

def test_fat_bounds(rng):
    for _ in range(200):
        d = random_fat(rng, min_l=5, max_l=7, max_size=2, kind=FatKind.CYCLE)
        assert d.kind == FatKind.CYCLE
        assert 5 <= d.parameter <= 7
        assert max(d.clique_sizes) <= 2


@pytest.mark.parametrize('index', [0, 1, 4, 7, 8])
def test_three_connected_h(rng, index):
    for _ in range(20):
        g = build_H(random_three_connected_h(rng, index))
        assert vertex_connectivity(g) >= 3

@pytest.mark.parametrize('index', [2, 3, 5, 6])
def test_no_three_connected_h(rng, index):
    with pytest.raises(ValueError):
        random_three_connected_h(rng, index)

def test_three_connected_fat(rng):
    for _ in range(100):
        g = build_fat(random_three_connected_fat(rng, max_l=7))
        assert vertex_connectivity(g) >= 3
    with pytest.raises(ValueError):
        random_three_connected_fat(rng, max_size=2)

def test_fan_cycle_layout(rng):
    for _ in range(50):
        g, f = random_fan_cycle_system(rng, max_cycle=8)
        k = len(f.cycle)
        assert f.apex == k
        assert g.n == k + 1 + len(f.paths)
        assert all(g.has_edge(i, (i + 1) % k) for i in range(k))


def test_h_members_satisfy_the_threshold(rng):
    family = [PatternSpec.claw(), PatternSpec.z(2)]
    for _ in range(1000):
        g = build(random_h_expansion(rng, max_order=11))
        assert is_free(g, family)
        assert contains(g, PatternSpec.b(1, 1))

@pytest.mark.slow
def test_large_h_members_satisfy_the_threshold(rng):
    family = [PatternSpec.claw(), PatternSpec.z(2)]
    for _ in range(300):
        g = build(random_h_expansion(rng, max_order=14))
        assert g.n <= 14
        assert is_free(g, family)
        assert contains(g, PatternSpec.b(1, 1))

@pytest.mark.parametrize('m, t', [(1, 5), (2, 6)])
def test_fat_members_satisfy_the_threshold(rng, m, t):
    family = [PatternSpec.claw(), PatternSpec.b(1, m)]
    for _ in range(1000):
        g = build_fat(random_fat(rng, min_l=t, max_l=t + 2, max_size=2))
        assert is_free(g, family)
        assert contains(g, PatternSpec.path(t))
