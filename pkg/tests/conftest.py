import os

import pytest

from posetkit import build_poset


def pytest_collection_modifyitems(config, items):
    if os.environ.get("POSETKIT_SLOW") or config.getoption("-m", default=""):
        return
    skip = pytest.mark.skip(reason="slow; enable with POSETKIT_SLOW=1 or -m slow")
    for item in items:
        if "slow" in item.keywords:
            item.add_marker(skip)


@pytest.fixture(scope="session")
def singleton():
    return build_poset(["a"], [])


@pytest.fixture(scope="session")
def diamond():
    return build_poset(
        ["0", "a", "b", "1"], [("0", "a"), ("0", "b"), ("a", "1"), ("b", "1")]
    )


@pytest.fixture(scope="session")
def pentagon():
    return build_poset(
        list("0abc1"), [("0", "a"), ("a", "b"), ("b", "1"), ("0", "c"), ("c", "1")]
    )


@pytest.fixture(scope="session")
def bowtie():
    # 0 < a,b < c,d < 1 with the full bipartite middle
    return build_poset(
        list("0abcd1"),
        [
            ("0", "a"),
            ("0", "b"),
            ("a", "c"),
            ("a", "d"),
            ("b", "c"),
            ("b", "d"),
            ("c", "1"),
            ("d", "1"),
        ],
    )


@pytest.fixture(scope="session")
def chain4():
    ids = ["c0", "c1", "c2", "c3"]
    return build_poset(ids, list(zip(ids, ids[1:])))
