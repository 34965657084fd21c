import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from garside import braid_germ, build, free_abelian_germ, wreath_example_germ


@pytest.fixture(scope="session")
def wreath():
    return wreath_example_germ()


@pytest.fixture(scope="session")
def wreath_zs(wreath):
    return build(wreath, [wreath.simple("a"), wreath.simple("b")])


@pytest.fixture(scope="session")
def b3():
    return braid_germ(3)


@pytest.fixture(scope="session")
def b4():
    return braid_germ(4)


@pytest.fixture(scope="session")
def ab2():
    return free_abelian_germ(2)


@pytest.fixture(scope="session")
def ab3():
    return free_abelian_germ(3)
