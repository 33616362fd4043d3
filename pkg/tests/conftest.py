import pathlib

import pytest

from solvcohom import MODE_COMPLEX, LieAlgebraData
from solvcohom.scalars import MINUS_ONE, ONE

INSTANCE_DIR = pathlib.Path(__file__).resolve().parent.parent / "instances"
EXPECTED_DIR = INSTANCE_DIR / "expected"


def make_heisenberg():
    # [x, y] = z; already nilpotent, empty complement.
    return LieAlgebraData(
        dim=3,
        basis=("x", "y", "z"),
        brackets=[(0, 1, 2, ONE)],
        nilradical=[0, 1, 2],
        complement=[],
        conjugation={0: 0, 1: 1, 2: 2},
    )


def make_split_3d():
    # One complement direction acting on C^2 with ad(e1) = diag(0, 1, -1).
    return LieAlgebraData(
        dim=3,
        basis=("e1", "e2", "e3"),
        brackets=[(0, 1, 1, ONE), (0, 2, 2, MINUS_ONE)],
        nilradical=[1, 2],
        complement=[0],
        mode=MODE_COMPLEX,
    )


def make_split_6d():
    # R^2 acting on R^4 with weights (1,0), (0,1), (-1,0), (0,-1);
    # conjugation swaps the weight pairs and the complement directions.
    return LieAlgebraData(
        dim=6,
        basis=("v1", "v2", "v3", "v4", "v5", "v6"),
        brackets=[
            (4, 0, 0, ONE),
            (4, 2, 2, MINUS_ONE),
            (5, 1, 1, ONE),
            (5, 3, 3, MINUS_ONE),
        ],
        nilradical=[0, 1, 2, 3],
        complement=[4, 5],
        conjugation={0: 1, 1: 0, 2: 3, 3: 2, 4: 5, 5: 4},
    )


@pytest.fixture
def heisenberg():
    return make_heisenberg()


@pytest.fixture
def split_3d():
    return make_split_3d()


@pytest.fixture
def split_6d():
    return make_split_6d()


@pytest.fixture
def instance_dir():
    return INSTANCE_DIR


@pytest.fixture
def expected_dir():
    return EXPECTED_DIR
