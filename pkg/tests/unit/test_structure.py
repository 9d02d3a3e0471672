"""Tests for incidence structures, multinet construction and well-indexing"""
import json

import numpy as np
import pytest

from src.embedding.preembedding import Z3_BLOCKS
from src.exceptions import IncidenceError, InvariantViolation, SubsquareError
from src.incidence.structure import (
    IncidenceStructure,
    Multinet,
    check_multinet,
    dual_3net,
    dumps_multinet,
    is_well_indexed,
    line_length,
    multinet_from_json,
    multinet_with_superline,
    superlines,
    traces,
    well_index,
)
from src.quasigroup.catalog import catalog_entry
from src.quasigroup.subsquares import SubsquareTriple, all_proper_subsquares

pytestmark = pytest.mark.unit


@pytest.fixture
def z6_multinet(table_6_1):
    return multinet_with_superline(table_6_1, SubsquareTriple((0, 3), (0, 3), (0, 3)))


class TestIncidenceStructure:
    def test_blocks_are_normalized(self):
        s = IncidenceStructure(6, ((5, 4, 3), (2, 0, 1)))
        assert s.blocks == ((0, 1, 2), (3, 4, 5))

    def test_short_block(self):
        with pytest.raises(IncidenceError):
            IncidenceStructure(4, ((0, 1),))

    def test_point_out_of_range(self):
        with pytest.raises(IncidenceError):
            IncidenceStructure(3, ((0, 1, 3),))

    def test_repeated_block(self):
        with pytest.raises(IncidenceError):
            IncidenceStructure(3, ((0, 1, 2), (2, 1, 0)))

    def test_collinear_triples(self):
        s = IncidenceStructure(5, ((0, 1, 2, 3),))
        assert len(s.collinear_triples()) == 4

    def test_collinearity_matrix(self):
        a = IncidenceStructure(9, Z3_BLOCKS).collinearity_matrix()
        assert np.array_equal(a, a.T)
        assert a.sum(axis=1).tolist() == [6] * 9

    def test_relabel(self):
        s = IncidenceStructure(4, ((0, 1, 2),))
        assert s.relabel((3, 2, 1, 0)).blocks == ((1, 2, 3),)


class TestDual3Net:
    def test_cyclic3(self, cyclic3):
        m = dual_3net(cyclic3)
        assert m.structure == IncidenceStructure(9, Z3_BLOCKS)
        check_multinet(m)

    def test_every_block_has_length_one(self, table_6_1):
        m = dual_3net(table_6_1)
        assert len(m.blocks) == 36
        assert all(line_length(m, b) == 1 for b in m.blocks)
        assert superlines(m) == []

    def test_multinet_point_count(self):
        with pytest.raises(IncidenceError):
            Multinet(2, IncidenceStructure(9, Z3_BLOCKS))


class TestSuperline:
    def test_block_counts(self, z6_multinet):
        assert len(z6_multinet.blocks) == 36 - 4 + 1
        assert superlines(z6_multinet) == [(0, 3, 6, 9, 12, 15)]
        assert line_length(z6_multinet, (0, 3, 6, 9, 12, 15)) == 2
        check_multinet(z6_multinet)

    def test_subsquare_of_order_three(self, table_6_1):
        m = multinet_with_superline(table_6_1, SubsquareTriple((0, 2, 4), (0, 2, 4), (0, 2, 4)))
        assert line_length(m, superlines(m)[0]) == 3
        assert len(m.blocks) == 36 - 9 + 1

    def test_not_a_subsquare(self, table_6_1):
        with pytest.raises(SubsquareError):
            multinet_with_superline(table_6_1, SubsquareTriple((0, 1), (0, 1), (0, 1)))

    def test_line_length_of_non_block(self, z6_multinet):
        with pytest.raises(IncidenceError):
            line_length(z6_multinet, (0, 1, 2))

    def test_unequal_traces(self):
        s = IncidenceStructure(6, ((0, 1, 2, 4), (0, 3, 5)))
        with pytest.raises(InvariantViolation):
            line_length(Multinet(2, s), (0, 1, 2, 4))

    def test_traces(self):
        assert traces(6, (0, 3, 6, 9, 12, 15)) == ((0, 3), (0, 3), (0, 3))

    def test_check_multinet_detects_shared_pair(self):
        s = IncidenceStructure(6, ((0, 2, 4), (0, 2, 5), (1, 3, 4)))
        with pytest.raises(InvariantViolation):
            check_multinet(Multinet(2, s))


class TestWellIndex:
    def test_well_indexed_output(self, z6_multinet):
        w = well_index(z6_multinet)
        assert is_well_indexed(w)
        assert (0, 1, 6, 7, 12, 13) in w.blocks
        check_multinet(w)

    def test_input_not_well_indexed(self, z6_multinet):
        assert not is_well_indexed(z6_multinet)

    def test_every_catalog_multinet(self, catalog):
        for q in catalog[:6]:
            for s in all_proper_subsquares(q):
                w = well_index(multinet_with_superline(q, s))
                assert is_well_indexed(w)
                check_multinet(w)

    def test_transported_labeling(self, z6_multinet):
        w = well_index(z6_multinet)
        assert w.labeling is not None
        assert w.labeling.subsquare == SubsquareTriple((0, 1), (0, 1), (0, 1))

    def test_needs_a_superline(self, table_6_1):
        with pytest.raises(IncidenceError):
            well_index(dual_3net(table_6_1))

    def test_idempotent(self):
        q = catalog_entry("6.11")
        w = well_index(multinet_with_superline(q, all_proper_subsquares(q)[0]))
        assert well_index(w).structure == w.structure


class TestJson:
    def test_load_dumped(self, z6_multinet):
        data = json.loads(dumps_multinet(z6_multinet))
        assert data["n"] == 6
        assert data["quasigroups"] == ["6.1"]
        assert multinet_from_json(data).structure == z6_multinet.structure
