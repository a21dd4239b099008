"""Intersection lattice, Moebius values, and crossing classification."""

import pytest

from arrinv.arrangement import parse_arrangement
from arrinv.fixtures import fixture, fixture_names
from arrinv.lattice import (CrossingClass, build_lattice, classify_crossing,
                            mobius)
from oracles import mobius_by_subsets


def rank2_profile(lattice):
    """Multiset of s values over the rank-2 flats."""
    return sorted(f.s for f in lattice.flats_of_rank(2))


def test_boolean_n2_lattice():
    lat = build_lattice(fixture("boolean_n2"))
    assert len(lat.flats_of_rank(0)) == 1
    assert len(lat.flats_of_rank(1)) == 3
    assert rank2_profile(lat) == [2, 2, 2]
    assert all(lat.mobius_of(f) == -1 for f in lat.flats_of_rank(1))
    assert all(lat.mobius_of(f) == 1 for f in lat.flats_of_rank(2))


def test_a3_lattice_profile():
    lat = build_lattice(fixture("a3_braid"))
    assert rank2_profile(lat) == [2, 2, 2, 3, 3, 3, 3]
    triples = [f for f in lat.flats_of_rank(2) if f.s == 3]
    assert sorted(f.indices for f in triples) == [
        (1, 2, 4), (1, 5, 6), (2, 3, 5), (3, 4, 6)]
    assert all(lat.mobius_of(f) == 2 for f in triples)


def test_generic5_has_ten_double_points():
    lat = build_lattice(fixture("generic5"))
    assert rank2_profile(lat) == [2] * 10


def test_flat_index_sets_are_maximal():
    a = fixture("m6_four_concurrent")
    lat = build_lattice(a)
    quad = [f for f in lat.flats_of_rank(2) if f.s == 4]
    assert len(quad) == 1
    assert quad[0].indices == (1, 2, 3, 4)


def test_flats_sorted_within_rank():
    lat = build_lattice(fixture("a3_braid"))
    for r in range(3):
        idx = [f.indices for f in lat.flats_of_rank(r)]
        assert idx == sorted(idx)


@pytest.mark.parametrize("name", fixture_names())
def test_mobius_matches_subset_oracle(name):
    a = fixture(name)
    lat = build_lattice(a)
    for f in lat.flats:
        assert lat.mobius_of(f) == mobius_by_subsets(a, f), f.indices


def test_mobius_view():
    lat = build_lattice(fixture("boolean_n2"))
    mu = mobius(lat)
    assert sum(mu.values()) == 1 - 3 + 3


def test_crossing_generic():
    rep = classify_crossing(build_lattice(fixture("generic5")))
    assert rep.kind is CrossingClass.GENERIC
    assert rep.witness is None


def test_crossing_not_normal_codim2_with_witness():
    rep = classify_crossing(build_lattice(fixture("a3_braid")))
    assert rep.kind is CrossingClass.NOT_NORMAL_CROSSING_CODIM2
    assert rep.witness is not None and rep.witness.s == 3


def test_crossing_deeper_degeneracy_only():
    # every line lies on exactly two of the planes, but four planes pass
    # through the point (0:0:0:1)
    a = parse_arrangement(3, [[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0],
                              [1, 1, 1, 0], [0, 0, 0, 1]])
    rep = classify_crossing(build_lattice(a))
    assert rep.kind is CrossingClass.NORMAL_CROSSING_CODIM2_ONLY
    assert rep.witness is not None and rep.witness.rank == 3


def test_crossing_planes_sharing_a_line():
    a = parse_arrangement(3, [[1, 0, 0, 0], [0, 1, 0, 0], [1, 1, 0, 0],
                              [1, 2, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]])
    lat = build_lattice(a)
    rep = classify_crossing(lat)
    assert rep.kind is CrossingClass.NOT_NORMAL_CROSSING_CODIM2
    heavy = [f for f in lat.flats_of_rank(2) if f.s == 4]
    assert len(heavy) == 1 and heavy[0].indices == (1, 2, 3, 4)


def test_n3_lattice_moebius_against_oracle():
    a = parse_arrangement(3, [[1, 0, 0, 0], [0, 1, 0, 0], [1, 1, 0, 0],
                              [1, 2, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]])
    lat = build_lattice(a)
    for f in lat.flats:
        assert lat.mobius_of(f) == mobius_by_subsets(a, f)
