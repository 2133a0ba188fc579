import os

import hypothesis
import pytest
from hypothesis import strategies as st

from topofilt import topology as tp

hypothesis.settings.register_profile("ci", max_examples=200, deadline=None)
hypothesis.settings.register_profile("fast", max_examples=20, deadline=None)
hypothesis.settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "ci"))


@pytest.fixture
def S():
    return tp.sierpinski()


@pytest.fixture
def S2():
    return tp.make_topology(2, [0, 0b10, 0b11])


@pytest.fixture
def D2():
    return tp.discrete(2)


@pytest.fixture
def I2():
    return tp.indiscrete(2)


@st.composite
def topologies(draw, min_n=0, max_n=6):
    """Random topology from a random relation closed reflexively and transitively."""
    n = draw(st.integers(min_n, max_n))
    rows = [draw(st.integers(0, (1 << n) - 1)) | 1 << x for x in range(n)]
    changed = True
    while changed:
        changed = False
        for x in range(n):
            grown = rows[x]
            for y in tp.points(rows[x]):
                grown |= rows[y]
            if grown != rows[x]:
                rows[x], changed = grown, True
    return tp.from_preorder(n, [[bool(rows[x] >> y & 1) for y in range(n)] for x in range(n)])


@st.composite
def topology_and_set(draw, **kw):
    T = draw(topologies(**kw))
    return T, draw(st.integers(0, (1 << T.n) - 1))
