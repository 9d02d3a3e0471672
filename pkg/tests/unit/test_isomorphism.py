"""Tests for isomorphism certificates and automorphism group orders"""
from itertools import combinations, permutations

import pytest

from src.embedding.preembedding import Z3_BLOCKS
from src.incidence.isomorphism import (
    IsoCertificate,
    automorphism_group,
    is_isomorphic,
    is_isomorphism,
    refine_colours,
)
from src.incidence.structure import IncidenceStructure, multinet_with_superline
from src.quasigroup.catalog import catalog_entry
from src.quasigroup.subsquares import all_proper_subsquares

pytestmark = pytest.mark.unit


def exhaustive_isomorphic(a, b):
    if a.num_points != b.num_points or len(a.blocks) != len(b.blocks):
        return False
    target = {frozenset(blk) for blk in b.blocks}
    for perm in permutations(range(a.num_points)):
        if all(frozenset(perm[p] for p in blk) in target for blk in a.blocks):
            return True
    return False


def random_structure(rng, points=9, blocks=5):
    triples = list(combinations(range(points), 3))
    return IncidenceStructure(points, tuple(rng.sample(triples, blocks)))


def shuffled(s, rng):
    perm = list(range(s.num_points))
    rng.shuffle(perm)
    return s.relabel(perm)


@pytest.fixture(scope="module")
def superline_structures():
    """One-superline multinets of the tables 6.6 and 6.1"""
    found = []
    for name in ("6.6", "6.1"):
        q = catalog_entry(name)
        found.extend(multinet_with_superline(q, s).structure for s in all_proper_subsquares(q))
    return found


class TestIsoCertificate:
    def test_inverse_and_then(self):
        c = IsoCertificate((1, 2, 0))
        assert c.then(c.inverse()).mapping == (0, 1, 2)
        assert c.then(c).mapping == (2, 0, 1)

    def test_falsy_without_mapping(self):
        assert not IsoCertificate()
        assert not IsoCertificate().then(IsoCertificate((0,)))


class TestIsIsomorphic:
    def test_relabelled_copy(self):
        a = IncidenceStructure(9, Z3_BLOCKS)
        mapping = (4, 7, 1, 0, 8, 3, 2, 6, 5)
        b = a.relabel(mapping)
        cert = is_isomorphic(a, b)
        assert cert
        assert is_isomorphism(a, b, cert.mapping)

    def test_different_block_sizes(self):
        a = IncidenceStructure(6, ((0, 1, 2), (3, 4, 5)))
        b = IncidenceStructure(6, ((0, 1, 2, 3), (3, 4, 5)))
        assert not is_isomorphic(a, b)

    def test_different_chains(self):
        a = IncidenceStructure(7, ((0, 1, 2), (2, 3, 4), (4, 5, 6)))
        b = IncidenceStructure(7, ((0, 1, 2), (2, 3, 4), (2, 5, 6)))
        assert not is_isomorphic(a, b)

    def test_is_isomorphism_rejects_non_permutation(self):
        a = IncidenceStructure(3, ((0, 1, 2),))
        assert not is_isomorphism(a, a, (0, 0, 1))

    @pytest.mark.slow
    def test_agrees_with_exhaustive_search(self, rng):
        for _ in range(8):
            a = random_structure(rng)
            if rng.random() < 0.5:
                perm = list(range(9))
                rng.shuffle(perm)
                b = a.relabel(perm)
            else:
                b = random_structure(rng)
            cert = is_isomorphic(a, b)
            assert bool(cert) == exhaustive_isomorphic(a, b)
            if cert:
                assert is_isomorphism(a, b, cert.mapping)


class TestAutomorphismGroup:
    def test_single_block(self):
        assert automorphism_group(IncidenceStructure(3, ((0, 1, 2),))).order == 6

    def test_isolated_point_is_fixed(self):
        assert automorphism_group(IncidenceStructure(4, ((0, 1, 2),))).order == 6

    def test_two_blocks_through_a_point(self):
        s = IncidenceStructure(5, ((0, 1, 2), (0, 3, 4)))
        assert automorphism_group(s).order == 8

    def test_generators_are_automorphisms(self):
        s = IncidenceStructure(9, Z3_BLOCKS)
        group = automorphism_group(s)
        for g in group.generators:
            assert is_isomorphism(s, s, g)

    def test_pappus_configuration(self):
        assert automorphism_group(IncidenceStructure(9, Z3_BLOCKS)).order == 108

    def test_relabelled_superline_multinet(self, superline_structures, rng):
        s = superline_structures[0]
        group = automorphism_group(s)
        assert automorphism_group(shuffled(s, rng)).order == group.order
        assert all(is_isomorphism(s, s, g) for g in group.generators)


class TestRefineColours:
    def test_regular_structure_stays_uniform(self):
        assert len(set(refine_colours(IncidenceStructure(9, Z3_BLOCKS)))) == 1

    def test_separates_chain_ends(self):
        s = IncidenceStructure(7, ((0, 1, 2), (2, 3, 4), (4, 5, 6)))
        colours = refine_colours(s)
        assert colours[0] == colours[6]
        assert colours[0] != colours[3]
        assert colours[2] == colours[4]

    def test_individualised_points_get_own_colour(self):
        colours = refine_colours(IncidenceStructure(9, Z3_BLOCKS), [4])
        assert list(colours).count(colours[4]) == 1

    def test_colours_follow_relabelling(self, rng):
        s = IncidenceStructure(7, ((0, 1, 2), (2, 3, 4), (4, 5, 6)))
        perm = list(range(7))
        rng.shuffle(perm)
        colours = refine_colours(s)
        moved = refine_colours(s.relabel(perm))
        assert all(moved[perm[p]] == colours[p] for p in range(7))


class TestEquivalenceOnMultinets:
    def test_reflexive(self, superline_structures):
        for s in superline_structures:
            cert = is_isomorphic(s, s)
            assert cert
            assert is_isomorphism(s, s, cert.mapping)

    def test_symmetric(self, superline_structures, rng):
        for s in superline_structures[:4]:
            t = shuffled(s, rng)
            forward = is_isomorphic(s, t)
            assert forward
            assert is_isomorphic(t, s)
            assert is_isomorphism(t, s, forward.inverse().mapping)

    def test_transitive(self, superline_structures, rng):
        for s in superline_structures[:4]:
            t = shuffled(s, rng)
            u = shuffled(t, rng)
            composed = is_isomorphic(s, t).then(is_isomorphic(t, u))
            assert is_isomorphism(s, u, composed.mapping)

    def test_agrees_across_pairs(self, superline_structures):
        for a, b in combinations(superline_structures, 2):
            assert bool(is_isomorphic(a, b)) == bool(is_isomorphic(b, a))

    def test_superline_length_separates(self, superline_structures):
        by_length = {}
        for s in superline_structures:
            by_length.setdefault(max(len(b) for b in s.blocks), []).append(s)
        assert len(by_length) > 1
        (short, *_), (long, *_) = (by_length[k] for k in sorted(by_length)[:2])
        assert not is_isomorphic(short, long)
