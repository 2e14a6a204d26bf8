import sys
from pathlib import Path

import pytest

from teccover.discovery import Tec
from teccover.geometry import PointSet

sys.path.insert(0, str(Path(__file__).parent))


@pytest.fixture
def diagonal_tec() -> Tec:
    """The three-point diagonal pattern with a five-translator chain; its
    last two nonzero translators are redundant."""
    return Tec(PointSet([(1, 1), (2, 2), (3, 3)]), ((1, 1), (2, 2), (3, 3), (4, 4)))


@pytest.fixture
def seven_diagonal() -> PointSet:
    return PointSet([(i, i) for i in range(1, 8)])
