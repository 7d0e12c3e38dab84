import random

import pytest

from qlegendre.gaussint import UNITS
from qlegendre.sequences import QSeq


@pytest.fixture
def rng() -> random.Random:
    return random.Random(0xC0FFEE)


def random_qseq(rng: random.Random, l: int) -> QSeq:
    return QSeq(rng.choice(UNITS) for _ in range(l))
