"""Shared fixtures: built-in presentations and the Poisson order."""

import pytest

from groebner.reduction import autoreduce
from orders.monomial_order import build_pathlex_order, build_poisson_order
from presentations.presentation import LAM, MU, builtin


@pytest.fixture(scope="session")
def pois():
    return builtin("pois")


@pytest.fixture(scope="session")
def com():
    return builtin("com")


@pytest.fixture(scope="session")
def lie():
    return builtin("lie")


@pytest.fixture(scope="session")
def generators():
    return {"mu": MU, "lam": LAM}


@pytest.fixture(scope="session")
def poisson_order():
    return build_poisson_order([MU, LAM])


@pytest.fixture(scope="session")
def pathlex_order():
    return build_pathlex_order([MU, LAM])


@pytest.fixture(scope="session")
def pois_basis(pois, poisson_order):
    return autoreduce(pois.shuffle_relations, poisson_order)
