import pytest

from hfl import abelian, hermlat
from hfl.curve import curve_make


@pytest.fixture(scope="session")
def curve2():
    return curve_make(2)


@pytest.fixture(scope="session")
def curve3():
    return curve_make(3)


@pytest.fixture(scope="session")
def hl2(curve2):
    return hermlat.HermitianLattice(curve2)


@pytest.fixture(scope="session")
def hl3(curve3):
    return hermlat.HermitianLattice(curve3)


@pytest.fixture(scope="session")
def z7():
    return abelian.AbelianGroup((7,))
