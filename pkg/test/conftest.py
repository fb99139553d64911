import logging
import os
import pathlib
import tempfile
from fractions import Fraction

import pytest

import nsr
from nsr.specialfn import ParamPoint

logger = nsr._logger.getLogger("nsr")

# Constants
TEST_DIR = pathlib.Path(os.path.abspath(__file__)).parent
TEST_DATA_DIR = TEST_DIR / "data"

disable_loggers = [
    "multiprocess",
]


def pytest_configure():
    for logger_name in disable_loggers:
        logger = logging.getLogger(logger_name)
        logger.disabled = True
        logger.propagate = False


@pytest.fixture
def report_dir():
    return pathlib.Path(tempfile.mkdtemp())


@pytest.fixture
def generic_point():
    # Away from every resonance up to the orders used in the tests
    return ParamPoint(
        n=2,
        q=Fraction(2, 7),
        t=Fraction(3, 11),
        kappa=Fraction(5, 13),
        s=(Fraction(17, 19), Fraction(4, 23)),
    )


@pytest.fixture
def generic_point3():
    return ParamPoint(
        n=3,
        q=Fraction(2, 7),
        t=Fraction(3, 11),
        kappa=Fraction(5, 13),
        s=(Fraction(17, 19), Fraction(4, 23), Fraction(9, 29)),
    )
