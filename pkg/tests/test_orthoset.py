"""Perp operators, closed families, Dacey and compatibility decisions."""

import random

import pytest

from orthoposet.catalog import path_orthoset
from orthoposet.census import random_orthoset
from orthoposet.errors import NotOrthoclosedError, SizeLimitError
from orthoposet.orthoset import (Orthoset, bases, dacey_subset_checks,
                                 double_perp, enumerate_orthoclosed,
                                 is_compatible, is_dacey, is_dacey_subset,
                                 is_orthoclosed, orthocomplement_pair_check,
                                 orthoset_from_pairs, perp, validate_orthoset)

from oracles import (brute_closed_sets, brute_maximal_cliques, brute_perp,
                     mutual_perp_condition)


def test_path_worked_example():
    # elements 1..4 at bits 0..3, orthogonal iff adjacent on the path
    o = path_orthoset(4)
    assert o.adj == (0b0010, 0b0101, 0b1010, 0b0100)
    assert perp(o, 0b0100) == 0b1010           # {3}ᗮ = {2,4}
    assert double_perp(o, 0b0101) == 0b0101    # {1,3} is orthoclosed
    assert is_orthoclosed(o, 0b0101)
    assert not is_orthoclosed(o, 0b0001)
    assert enumerate_orthoclosed(o) == [0b0000, 0b0010, 0b0100,
                                        0b0101, 0b1010, 0b1111]
    assert bases(o, o.full) == [0b0011, 0b0110, 0b1100]
    # the basis {3} of {1,3} has perp {2,4}, not inside {1,3}ᗮ = {2}
    assert bases(o, 0b0101) == [0b0001, 0b0100]
    assert dacey_subset_checks(o, 0b0101) == (False, False, False)
    assert not is_dacey_subset(o, 0b0101)
    assert is_dacey_subset(o, o.full)
    assert is_dacey(o) == (False, (0b0101, 0b0100))
    assert is_compatible(o) == (False, (0, 3))


def test_from_pairs_validation():
    with pytest.raises(IndexError):
        orthoset_from_pairs(3, [(0, 3)])
    with pytest.raises(ValueError):
        orthoset_from_pairs(3, [(1, 1)])
    o = orthoset_from_pairs(3, [(0, 1), (1, 0)])
    assert o.adj == (0b010, 0b001, 0)
    validate_orthoset(o)


def test_validate_catches_corruption():
    with pytest.raises(ValueError):
        validate_orthoset(Orthoset(2, (0b01, 0b01)))   # reflexive
    with pytest.raises(ValueError):
        validate_orthoset(Orthoset(2, (0b10, 0b00)))   # not symmetric
    with pytest.raises(ValueError):
        validate_orthoset(Orthoset(2, (0b100, 0b00)))  # out of range


def test_perp_edge_cases():
    o = orthoset_from_pairs(3, [])
    assert perp(o, 0) == 0b111
    assert perp(o, 0b111) == 0
    assert enumerate_orthoclosed(o) == [0, 0b111]
    empty = orthoset_from_pairs(0, [])
    assert perp(empty, 0) == 0
    assert enumerate_orthoclosed(empty) == [0]


def test_bases_of_empty_set():
    o = path_orthoset(4)
    assert bases(o, 0) == [0]
    # the empty set is orthoclosed only when no point perp is everything;
    # here dperp of {} is {} and its one basis recovers it
    assert dacey_subset_checks(o, 0) == (True, True, True)


def test_not_orthoclosed_raises():
    o = path_orthoset(4)
    with pytest.raises(NotOrthoclosedError):
        is_dacey_subset(o, 0b0001)
    with pytest.raises(NotOrthoclosedError):
        dacey_subset_checks(o, 0b0001)


def test_size_caps():
    big = orthoset_from_pairs(21, [])
    with pytest.raises(SizeLimitError):
        enumerate_orthoclosed(big)
    with pytest.raises(SizeLimitError):
        is_dacey(big)
    with pytest.raises(SizeLimitError):
        is_compatible(big)
    assert enumerate_orthoclosed(big, max_elements=21) == [0, big.full]
    with pytest.raises(SizeLimitError):
        enumerate_orthoclosed(random_orthoset(16, 1), max_family=8)


def test_closed_family_against_filter():
    for seed in range(60):
        n = seed % 9 + 1
        o = random_orthoset(n, seed)
        assert enumerate_orthoclosed(o) == brute_closed_sets(o.adj, o.n)


def test_perp_against_filter():
    for seed in range(30):
        o = random_orthoset(seed % 8 + 1, seed + 60)
        for x in range(1 << o.n):
            assert perp(o, x) == brute_perp(o.adj, o.n, x)


def test_perp_is_antitone_galois():
    for seed in range(40):
        o = random_orthoset(seed % 10 + 1, seed + 200)
        rng = random.Random(seed)
        for _ in range(12):
            x = rng.getrandbits(o.n)
            y = x | rng.getrandbits(o.n)
            assert not perp(o, y) & ~perp(o, x)       # antitone
            assert not x & ~double_perp(o, x)         # extensive
            assert double_perp(o, double_perp(o, x)) == double_perp(o, x)
            assert not double_perp(o, x) & ~double_perp(o, y)
            z = rng.getrandbits(o.n)
            # adjunction: x inside perp(z) iff z inside perp(x)
            assert (not x & ~perp(o, z)) == (not z & ~perp(o, x))


def test_bases_against_clique_filter():
    for seed in range(30):
        o = random_orthoset(seed % 8 + 1, seed + 300)
        for x in enumerate_orthoclosed(o):
            assert bases(o, x) == brute_maximal_cliques(o.adj, o.n, x)


def test_basis_criteria_always_agree():
    for seed in range(60):
        o = random_orthoset(seed % 9 + 1, seed + 400)
        for x in enumerate_orthoclosed(o):
            a, b, c = dacey_subset_checks(o, x)
            assert a == b == c


def test_dacey_scan_matches_subset_checks():
    for seed in range(60):
        o = random_orthoset(seed % 9 + 1, seed + 500)
        ok, witness = is_dacey(o)
        assert ok == all(is_dacey_subset(o, x)
                         for x in enumerate_orthoclosed(o))
        if not ok:
            x, b = witness
            assert b in bases(o, x)
            assert perp(o, b) & ~perp(o, x)


def test_compatible_witness_is_least():
    o = path_orthoset(4)
    ok, pair = is_compatible(o)
    assert not ok and pair == (0, 3)
    # every complete orthoset is compatible, vacuously
    comp = orthoset_from_pairs(4, [(i, j) for i in range(4)
                                   for j in range(i + 1, 4)])
    assert is_compatible(comp) == (True, None)


def test_mutual_perp_characterization():
    for seed in range(50):
        o = random_orthoset(seed % 8 + 1, seed + 600)
        rng = random.Random(seed)
        for x in enumerate_orthoclosed(o):
            assert orthocomplement_pair_check(o, x, perp(o, x))
            assert mutual_perp_condition(o.adj, o.n, x, perp(o, x))
        for _ in range(20):
            x = rng.getrandbits(o.n)
            y = rng.getrandbits(o.n)
            assert orthocomplement_pair_check(o, x, y) == \
                mutual_perp_condition(o.adj, o.n, x, y)
