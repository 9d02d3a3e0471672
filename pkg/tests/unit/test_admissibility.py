"""Tests for the admissibility of candidate components"""
import pytest

from src.embedding.admissibility import coinciding_pair, is_admissible, noncollinear_triple
from src.embedding.preembedding import PreEmbedding, z3_example_preembedding
from src.polyring.ideal import Ideal

pytestmark = pytest.mark.unit


@pytest.fixture
def frame(ring3):
    """Coordinate frame plus a point that moves with t1 and t2"""
    t1, t2, _ = ring3.gens
    one, zero = ring3.one, ring3.zero
    points = ((one, zero, zero), (zero, one, zero), (zero, zero, one), (one, t2, t1))
    return PreEmbedding(ring3, points)


class TestAdmissibility:
    def test_generic_component(self, ring3, frame):
        t1, _, _ = ring3.gens
        assert is_admissible(Ideal([t1]), frame)

    def test_coinciding_points(self, ring3, frame):
        t1, t2, _ = ring3.gens
        p = Ideal([t1, t2])
        assert coinciding_pair(p, frame) == (0, 3)
        assert not is_admissible(p, frame)

    def test_all_points_collinear(self, ring3):
        t1, t2, _ = ring3.gens
        one, zero = ring3.one, ring3.zero
        xi = PreEmbedding(ring3, ((one, zero, zero), (zero, one, zero), (one, t1, zero)))
        p = Ideal([t2])
        assert coinciding_pair(p, xi) is None
        assert noncollinear_triple(p, xi) is None
        assert not is_admissible(p, xi)

    def test_unit_ideal(self, ring3, frame):
        with pytest.raises(ValueError):
            is_admissible(Ideal([ring3.one]), frame)

    def test_z3_line_at_infinity(self):
        _, xi = z3_example_preembedding()
        t13 = xi.ring.gens[12]
        assert not is_admissible(Ideal([t13]), xi)
