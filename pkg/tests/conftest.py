import json
from pathlib import Path

import pytest

from condisc import Instance

# Canonical instances used across the suite.  Expected values for these were
# derived independently (big-integer discriminant products, residue
# refinement by hand, rule-by-rule graph evaluation) before being frozen.
FIXTURE_A = dict(p=3, roots=(0, 1, 2, 3, 4, 5), label="fixtureA")
FIXTURE_B = dict(p=5, roots=(0, 5, 10, 1, 2, 3), label="fixtureB")
FIXTURE_C = dict(p=5, roots=(0, 25, 1, 2, 3, 4), label="fixtureC")
GOOD_RED = dict(p=7, roots=(0, 1, 2, 3, 4, 5), label="good")
ODD_CHAIN = dict(p=5, roots=(0, 25, 5, 1, 2, 3), label="oddchain")    # odd-odd edge
WEIGHT2 = dict(p=5, roots=(0, 25, 5, 10, 1, 2), label="w2edge")       # weight-2 intersections
NON_MINIMAL = dict(p=5, roots=(0, 25, 50, 1, 2, 3), label="nonmin")   # contractible pattern
DEEP_PAIR = dict(p=5, roots=(0, 125, 1, 2, 3, 4), label="deep")       # length-3 chain


def make(fx) -> Instance:
    return Instance.from_values(fx["p"], fx["roots"], label=fx["label"])


@pytest.fixture
def fixture_a():
    return make(FIXTURE_A)


@pytest.fixture
def fixture_b():
    return make(FIXTURE_B)


@pytest.fixture
def fixture_c():
    return make(FIXTURE_C)


@pytest.fixture
def good_reduction():
    return make(GOOD_RED)


def write_instance(path: Path, fx) -> Path:
    payload = {"mode": "roots", "p": fx["p"], "roots": [str(r) for r in fx["roots"]]}
    if fx.get("label"):
        payload["label"] = fx["label"]
    path.write_text(json.dumps(payload))
    return path
