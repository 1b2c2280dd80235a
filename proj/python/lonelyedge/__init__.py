"""Lonely edges in cubic graphs."""

import json

from ._core import *  # noqa: F401,F403
from ._core import census_json, verify_json

__version__ = "0.1.0"


def census(max_n=12, mode="all_3connected", jobs=1, force=False):
    return json.loads(census_json(max_n, mode, jobs, force))


def verify(max_n=12, jobs=1, force=False):
    return json.loads(verify_json(max_n, jobs, force))
