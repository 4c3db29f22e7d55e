import pytest
from hypothesis import HealthCheck, settings

from psolv.catalog import alternating, catalog_get, cyclic, dihedral, direct_product, quaternion8, symmetric
from psolv.perm import Permutation, PermGroup
from psolv.subgroups import derived_subgroup, normal_closure
from psolv.sylow import sylow_subgroup

settings.register_profile("default", deadline=None, suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")


def perm(cycles, degree):
    """1-indexed cycle helper used throughout the tests."""
    return Permutation.from_cycles(cycles, degree)


@pytest.fixture(scope="session")
def S3():
    return symmetric(3)


@pytest.fixture(scope="session")
def S4():
    return symmetric(4)


@pytest.fixture(scope="session")
def A4(S4):
    return derived_subgroup(S4)


@pytest.fixture(scope="session")
def V4(S4):
    return normal_closure(S4, [perm([(1, 2), (3, 4)], 4)])


@pytest.fixture(scope="session")
def D8_in_S4(S4):
    return sylow_subgroup(S4, 2)


@pytest.fixture(scope="session")
def A5():
    return alternating(5)


@pytest.fixture(scope="session")
def D8():
    return dihedral(8)


@pytest.fixture(scope="session")
def Q8():
    return quaternion8()


@pytest.fixture(scope="session")
def C3():
    return cyclic(3)


@pytest.fixture(scope="session")
def schur_cover():
    return catalog_get("2.S5")


@pytest.fixture(scope="session")
def A5xC3():
    return direct_product(alternating(5), cyclic(3))


@pytest.fixture(scope="session")
def S3xC2():
    return direct_product(symmetric(3), cyclic(2))
