import os
from logging import getLogger

import pytest

from twinlab.flags import build_flag_building
from twinlab.twin import twin_context

from twinlab_test_utils import systems

logger = getLogger(__name__)

FIXTURES_DIR = os.path.join(os.path.dirname(os.path.abspath(__file__)),
                            'fixtures')


def pytest_addoption(parser):
    """
    Pytest option to define which field orders the twin-model tests run
    with.

    """
    parser.addoption("--twin-q", action="append", type=int)


class TwinParameterizedTests:
    """
    Helper class for generating fixture params using pytest config opts.

    """
    DEFAULT_ORDERS = [2, 3]
    orders = None

    @classmethod
    def set_orders(cls, _orders):
        TwinParameterizedTests.orders = sorted(set(_orders))


def pytest_generate_tests(metafunc):

    if 'twin_q' in metafunc.fixturenames:
        if TwinParameterizedTests.orders is None:
            orders = metafunc.config.getoption(
                "--twin-q", default=None
            ) or TwinParameterizedTests.DEFAULT_ORDERS
            TwinParameterizedTests.set_orders(orders)

        metafunc.parametrize(
            'twin_q',
            TwinParameterizedTests.orders,
            ids=['q{0}'.format(q) for q in TwinParameterizedTests.orders],
            scope="session")


@pytest.fixture(scope='session')
def twin_ctx(twin_q):
    """
    The SL_2 twin model over F_q for every ``--twin-q`` order.
    """
    return twin_context(twin_q)


@pytest.fixture(scope='session')
def ctx2():
    return twin_context(2)


@pytest.fixture(scope='session')
def ctx3():
    return twin_context(3)


@pytest.fixture(scope='session')
def flag_building_2():
    return build_flag_building(3, 2)


@pytest.fixture(scope='session')
def flag_building_3():
    return build_flag_building(3, 3)


@pytest.fixture(scope='session')
def infinite_dihedral():
    return systems.shipped('infinite_dihedral')


@pytest.fixture(scope='session')
def rank3_one_infinity():
    return systems.shipped('rank3_one_infinity')


@pytest.fixture(scope='session')
def rank3_two_infinity():
    return systems.shipped('rank3_two_infinity')


@pytest.fixture(scope='session')
def rank3_all_infinity():
    return systems.shipped('rank3_all_infinity')


@pytest.fixture(scope='session')
def a3():
    return systems.shipped('a3')


@pytest.fixture(scope='session')
def star_condition_a():
    return systems.shipped('star_condition_a')


@pytest.fixture(scope='session')
def corrupted_path():
    return os.path.join(FIXTURES_DIR, 'corrupted.json')


@pytest.fixture
def no_cap_override(monkeypatch):
    monkeypatch.delenv('TWINLAB_CAP_OVERRIDE', raising=False)
