"""Shared pytest fixtures and configuration"""
import random

import pytest

from src.incidence.classification import classify_order6
from src.polyring.groebner import Budget
from src.polyring.ring import polynomial_ring
from src.quasigroup.catalog import catalog_entry, load_catalog


@pytest.fixture(scope="session")
def catalog():
    """The twelve Latin squares of order 6 in catalog order"""
    return load_catalog()


@pytest.fixture
def cyclic3():
    """Cayley table of the cyclic group of order 3"""
    from src.quasigroup.latin_square import LatinSquare

    return LatinSquare([[0, 1, 2], [1, 2, 0], [2, 0, 1]], name="Z3")


@pytest.fixture
def table_6_1():
    return catalog_entry("6.1")


@pytest.fixture(scope="session")
def order6_classes():
    """Classification records of all sixteen classes (computed once)"""
    return {r.class_id: r for r in classify_order6()}


@pytest.fixture
def ring3():
    """QQ[t1, t2, t3] in degrevlex"""
    return polynomial_ring(3)


@pytest.fixture
def budget():
    return Budget(seconds=600)


@pytest.fixture
def rng():
    return random.Random(20240617)
