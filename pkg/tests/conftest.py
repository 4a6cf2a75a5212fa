from __future__ import annotations

import pytest

from tdpairs.constructions import leonard_krawtchouk, onsager_tensor, parse_spec


@pytest.fixture(scope="session")
def k12():
    return leonard_krawtchouk(1, 2)


@pytest.fixture(scope="session")
def k13():
    return leonard_krawtchouk(1, 3)


@pytest.fixture(scope="session")
def k1_half():
    return leonard_krawtchouk(1, "1/2")


@pytest.fixture(scope="session")
def tensor_12_13():
    return onsager_tensor(parse_spec("1:2,1:3"))


@pytest.fixture(scope="session")
def trivial_pair():
    return leonard_krawtchouk(0, 2)
