"""Tests for coordinate tables and collinearity ideals"""
import pytest

from src.embedding.preembedding import (
    PreEmbedding,
    collinearity_ideal,
    cross_product,
    determinant,
    standard_preembedding,
    z3_example_preembedding,
)
from src.exceptions import IncidenceError, InvariantViolation
from src.incidence.structure import (
    Multinet,
    dual_3net,
    is_well_indexed,
    multinet_with_superline,
    well_index,
)
from src.quasigroup.subsquares import all_proper_subsquares

pytestmark = pytest.mark.unit


def with_subsquare_of_order(q, order):
    s = next(s for s in all_proper_subsquares(q) if s.order == order)
    return multinet_with_superline(q, s)


@pytest.fixture
def well_indexed(table_6_1):
    return well_index(with_subsquare_of_order(table_6_1, 2))


class TestStandardPreEmbedding:
    def test_shape(self, well_indexed):
        xi = standard_preembedding(well_indexed)
        assert len(xi) == 18
        assert xi.nvars == 17

    def test_fixed_points(self, well_indexed):
        xi = standard_preembedding(well_indexed)
        t = (None, *xi.ring.gens)
        assert xi.points[0] == (1, 0, 0)
        assert xi.points[1] == (1, t[1], 0)
        assert xi.points[6] == (0, 1, 0)
        assert xi.points[8] == (1, 0, 1)
        assert xi.points[12] == (1, 1, 0)
        assert xi.points[14] == (0, 0, 1)

    def test_superline_on_line_at_infinity(self, well_indexed):
        xi = standard_preembedding(well_indexed)
        assert all(xi.points[p][2] == 0 for p in (0, 1, 6, 7, 12, 13))

    def test_shared_coordinates(self, well_indexed):
        xi = standard_preembedding(well_indexed)
        for j in range(3, 6):
            assert xi.points[12 + j][0] == xi.points[j][0]
            assert xi.points[12 + j][1] == xi.points[6 + j][1]

    def test_requires_well_indexing(self, well_indexed):
        swap = list(range(18))
        swap[0], swap[2] = 2, 0
        moved = Multinet(6, well_indexed.structure.relabel(swap))
        assert not is_well_indexed(moved)
        with pytest.raises(IncidenceError):
            standard_preembedding(moved)

    def test_rejects_long_superline(self, table_6_1):
        with pytest.raises(IncidenceError):
            standard_preembedding(well_index(with_subsquare_of_order(table_6_1, 3)))

    def test_rejects_other_orders(self, cyclic3):
        with pytest.raises(IncidenceError):
            standard_preembedding(dual_3net(cyclic3))


class TestZ3Example:
    def test_structure_is_dual_3net(self, cyclic3):
        structure, xi = z3_example_preembedding()
        assert structure == dual_3net(cyclic3).structure
        assert xi.nvars == 13

    def test_determinant_of_first_part(self):
        _, xi = z3_example_preembedding()
        t = (None, *xi.ring.gens)
        d = determinant(xi.points[0], xi.points[1], xi.points[2])
        assert d == t[13] * (t[2] - t[4])

    def test_vanishing_determinant_is_dropped(self):
        structure, xi = z3_example_preembedding()
        ideal = collinearity_ideal(structure, xi)
        assert len(structure.collinear_triples()) == 9
        assert len(ideal.generators) == 8
        assert all(ideal.generators)


class TestCollinearityIdeal:
    def test_superline_triples_vanish(self, well_indexed):
        xi = standard_preembedding(well_indexed)
        ideal = collinearity_ideal(well_indexed, xi)
        assert all(ideal.generators)
        assert len(ideal.generators) < len(well_indexed.structure.collinear_triples())

    def test_point_count_must_match(self, well_indexed):
        _, xi = z3_example_preembedding()
        with pytest.raises(ValueError):
            collinearity_ideal(well_indexed, xi)


class TestPreEmbedding:
    def test_zero_vector(self, ring3):
        with pytest.raises(InvariantViolation):
            PreEmbedding(ring3, ((ring3.zero, ring3.zero, ring3.zero),))

    def test_common_factor(self, ring3):
        t1, t2, _ = ring3.gens
        with pytest.raises(InvariantViolation):
            PreEmbedding(ring3, ((t1, t1 * t2, t1),))

    def test_coordinate_count(self, ring3):
        t1, _, _ = ring3.gens
        with pytest.raises(ValueError):
            PreEmbedding(ring3, ((t1, ring3.one),))

    def test_cross_product_of_proportional_vectors(self, ring3):
        t1, t2, _ = ring3.gens
        u = (t1, t2, ring3.one)
        assert cross_product(u, tuple(2 * c for c in u)) == (0, 0, 0)
