import math

import pytest

from terrain_search import MotionModel

ALL_MODELS = [
    MotionModel.classic(),
    MotionModel.tailwind(2.5),
    MotionModel.beacon(2.0),
    MotionModel.history(3.0),
    MotionModel.flataccel(1.5),
    MotionModel.incline(2.0),
    MotionModel.hill(0.7),
    MotionModel.valley(2.0),
]


@pytest.fixture(params=ALL_MODELS, ids=str)
def model(request):
    return request.param


def rel_close(a, b, rel=1e-12):
    return math.isclose(a, b, rel_tol=rel, abs_tol=rel)
