import json
from pathlib import Path

import pytest

from chigen.verify import group

DATA = Path(__file__).parent / "data"


@pytest.fixture(scope="session")
def oracles() -> dict:
    return json.loads((DATA / "oracles.json").read_text())


@pytest.fixture
def G():
    return group
