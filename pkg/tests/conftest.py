import pytest

from zdgraph import PrimeFactors, SquarefreeModulus, build_ring
from zdgraph.corpus import canonical_corpus


@pytest.fixture(scope="session")
def corpus():
    return canonical_corpus()


@pytest.fixture(scope="session")
def z6():
    return build_ring(SquarefreeModulus(6))


@pytest.fixture(scope="session")
def z30():
    return build_ring(SquarefreeModulus(30))


@pytest.fixture(scope="session")
def z105():
    return build_ring(SquarefreeModulus(105))


@pytest.fixture(scope="session")
def z210():
    return build_ring(SquarefreeModulus(210))


@pytest.fixture(scope="session")
def f33():
    return build_ring(PrimeFactors((3, 3)))


@pytest.fixture(scope="session")
def f2_4():
    return build_ring(PrimeFactors((2, 2, 2, 2)))
