import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from bentkit.gf import build_field  # noqa: E402


@pytest.fixture(scope="session")
def f26():
    return build_field(2, 6)


@pytest.fixture(scope="session")
def f34():
    return build_field(3, 4)


@pytest.fixture(scope="session")
def f52():
    return build_field(5, 2)
