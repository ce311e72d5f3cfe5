"""Lattice enumeration against the point-set oracles, plus lattice laws."""

import pytest
from helpers import point_set

from modcheck import oracles
from modcheck.errors import TooLarge
from modcheck.properties import lattice_of


def test_lattice_members_equal_brute_submodules_everywhere(base_fixtures):
    for fx in base_fixtures:
        lat = lattice_of(fx.module)
        brute = oracles.brute_submodules(fx.module)
        engine = {point_set(m, fx.module) for m in lat.members}
        assert engine == set(brute), fx.name
        assert len(lat.members) == fx.expected_value("submodule_count"), fx.name


def test_hasse_edges_are_covers(fixtures_by_name):
    for name in ("tri4_f2", "tri4_f3", "chain_f2_k4", "semisimple3_f2"):
        M = fixtures_by_name[name].module
        lat = lattice_of(M)
        for i, j in lat.hasse_edges:
            assert lat.leq(i, j) and i != j
            between = [
                k
                for k in range(len(lat.members))
                if k not in (i, j) and lat.leq(i, k) and lat.leq(k, j)
            ]
            assert not between, (name, i, j)


def test_join_is_the_smallest_containing_member(fixtures_by_name):
    for name in ("tri4_f3", "chain_f2_k4", "semisimple3_f2"):
        lat = lattice_of(fixtures_by_name[name].module)
        n = len(lat.members)
        for i in range(n):
            for j in range(n):
                k = lat.join(i, j)
                assert lat.leq(i, k) and lat.leq(j, k)
                smaller = [
                    t
                    for t in range(n)
                    if t != k and lat.leq(i, t) and lat.leq(j, t) and lat.leq(t, k)
                ]
                assert not smaller, (name, i, j)


def test_lattice_cap_is_enforced():
    from modcheck.corpus import fixture_by_name

    M = fixture_by_name("tri4_f2").module
    with pytest.raises(TooLarge):
        lattice_of(M, cap_dim=2)


def test_submodule_counts_for_squares_match_golden(fixtures_by_name):
    # frozen counts double as a regression net for the lattice walker
    known = {
        "chain_f2_k1_sq": 5,
        "chain_f3_k1_sq": 6,
        "mat2_simple_f2_sq": 5,
    }
    for name, count in known.items():
        lat = lattice_of(fixtures_by_name[name].module)
        assert len(lat.members) == count, name
