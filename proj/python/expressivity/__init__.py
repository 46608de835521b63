"""Depth versus width expressivity of piecewise-linear networks."""

from ._core import *  # noqa: F401,F403
from ._core import __doc__  # noqa: F401

TABLE_SHAPES = {
    "network1": ([4, 4, 4, 4, 4], 1),
    "network2": ([20], 1),
}


def table_shape(name):
    hidden, n0 = TABLE_SHAPES[name]
    return NetworkShape(n0, hidden, 1)  # noqa: F405
