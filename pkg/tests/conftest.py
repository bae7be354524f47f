import pytest

import lattice_sugeno as ls


@pytest.fixture(scope="session")
def chain2():
    return ls.chain(2)


@pytest.fixture(scope="session")
def chain3():
    return ls.chain(3)


@pytest.fixture(scope="session")
def chain4():
    return ls.chain(4)


@pytest.fixture(scope="session")
def chain5():
    return ls.chain(5)


@pytest.fixture(scope="session")
def chain11():
    return ls.chain(11)


@pytest.fixture(scope="session")
def bool2():
    return ls.boolean_lattice(2)


@pytest.fixture(scope="session")
def bool3():
    return ls.boolean_lattice(3)


@pytest.fixture(scope="session")
def prod23():
    return ls.product([ls.chain(2), ls.chain(3)])


@pytest.fixture(scope="session")
def n5():
    return ls.n5()


@pytest.fixture(scope="session")
def m3():
    return ls.m3()
