import sys
from pathlib import Path

import pytest

_backend = Path(__file__).resolve().parent.parent
if str(_backend) not in sys.path:
    sys.path.insert(0, str(_backend))

from app.services.constructors import (  # noqa: E402
    chain_semilattice,
    cyclic_group,
    direct_product,
    symmetric_group,
    symmetric_inverse_monoid,
)

CORPUS_DIR = _backend / "corpus"
FIXTURES_DIR = Path(__file__).resolve().parent / "fixtures"


@pytest.fixture
def corpus_dir() -> Path:
    return CORPUS_DIR


@pytest.fixture
def fixtures_dir() -> Path:
    return FIXTURES_DIR


@pytest.fixture(scope="session")
def chain2():
    return chain_semilattice(2)


@pytest.fixture(scope="session")
def chain3():
    return chain_semilattice(3)


@pytest.fixture(scope="session")
def z2():
    return cyclic_group(2)


@pytest.fixture(scope="session")
def z3():
    return cyclic_group(3)


@pytest.fixture(scope="session")
def z6():
    return cyclic_group(6)


@pytest.fixture(scope="session")
def s3():
    return symmetric_group(3)


@pytest.fixture(scope="session")
def i2():
    return symmetric_inverse_monoid(2)


@pytest.fixture(scope="session")
def i3():
    return symmetric_inverse_monoid(3)


@pytest.fixture(scope="session")
def z3xchain2():
    return direct_product(cyclic_group(3), chain_semilattice(2))
