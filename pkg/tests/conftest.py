import random

import pytest

from diagram import SliceDiagram, braid_closure, deserialize, disjoint_union, parse_braid

HOPF_TEXT = """\
source: -
slice 1 cup+
slice 3 cup-
slice 2 x+
slice 2 x+
slice 3 cap-
slice 1 cap+
target: -
"""


def closure(word: str, strands: int) -> SliceDiagram:
    return braid_closure(parse_braid(word, strands))


@pytest.fixture
def rng():
    return random.Random(20240229)


@pytest.fixture
def unknot():
    return SliceDiagram.build("-", [(1, "cup+"), (1, "cap+")], "-")


@pytest.fixture
def trefoil():
    return closure("1 1 1", 2)


@pytest.fixture
def hopf():
    return deserialize(HOPF_TEXT)


@pytest.fixture
def figure_eight():
    return closure("1 -2 1 -2", 3)


@pytest.fixture
def unlink(unknot):
    return disjoint_union(unknot, unknot)


@pytest.fixture
def test_links(unknot, trefoil, hopf, figure_eight, unlink):
    return {
        "unknot": unknot,
        "trefoil": trefoil,
        "hopf": hopf,
        "figure_eight": figure_eight,
        "unlink": unlink,
        "whitehead": closure("1 1 -2 1 -2", 3),
        "torus_2_4": closure("1 1 1 1", 2),
    }
