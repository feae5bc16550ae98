import pytest

from xnerve import fixtures
from xnerve.nerve import Nerve


@pytest.fixture(scope="session")
def xm_trivial():
    return fixtures.trivial_point()


@pytest.fixture(scope="session")
def xm_z2():
    return fixtures.group_z2()


@pytest.fixture(scope="session")
def xm_z3_fiber():
    return fixtures.z3_fiber_only()


@pytest.fixture(scope="session")
def xm_z2_z3():
    return fixtures.z2_with_z3_fiber()


@pytest.fixture(scope="session")
def xm_z2_z3_twisted():
    return fixtures.z2_with_z3_fiber_twisted()


@pytest.fixture(scope="session")
def xm_idempotent():
    return fixtures.idempotent_fiber()


@pytest.fixture(scope="session")
def xm_pair():
    return fixtures.pair_groupoid_z3()


# Nerves with output re-validation on: every face/degeneracy result is
# checked against the cell typing invariants while the suite runs.
@pytest.fixture(scope="session")
def nv_trivial(xm_trivial):
    return Nerve(xm_trivial, validate_outputs=True)


@pytest.fixture(scope="session")
def nv_z2(xm_z2):
    return Nerve(xm_z2, validate_outputs=True)


@pytest.fixture(scope="session")
def nv_z3_fiber(xm_z3_fiber):
    return Nerve(xm_z3_fiber, validate_outputs=True)


@pytest.fixture(scope="session")
def nv_z2_z3(xm_z2_z3):
    return Nerve(xm_z2_z3, validate_outputs=True)


@pytest.fixture(scope="session")
def nv_z2_z3_twisted(xm_z2_z3_twisted):
    return Nerve(xm_z2_z3_twisted, validate_outputs=True)


@pytest.fixture(scope="session")
def nv_idempotent(xm_idempotent):
    return Nerve(xm_idempotent, validate_outputs=True)


@pytest.fixture(scope="session")
def nv_pair(xm_pair):
    return Nerve(xm_pair, validate_outputs=True)
