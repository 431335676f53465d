import random

import pytest

from cyclograph import catalog
from cyclograph.graph import HGraph
from cyclograph.ring import (EISENSTEIN, GAUSSIAN, RATIONAL,
                             elements_of_norm_at_most)

ALL_RINGS = (RATIONAL, GAUSSIAN, EISENSTEIN)


def random_hgraph(rng, ring=None, n=None, charged=True, max_norm=2,
                  p=0.45, connected=False):
    ring = ring or rng.choice(ALL_RINGS)
    n = n or rng.randint(1, 7)
    elems = elements_of_norm_at_most(ring, max_norm)
    while True:
        wt = {}
        for u in range(n):
            for v in range(u + 1, n):
                if rng.random() < p:
                    wt[(u, v)] = rng.choice(elems)
        charges = [rng.choice([-1, 0, 0, 0, 1]) if charged else 0
                   for _ in range(n)]
        g = HGraph(ring, charges, wt)
        if not connected or g.is_connected():
            return g


@pytest.fixture
def rng():
    return random.Random(20260810)


def catalog_sample():
    """A spread of catalog graphs used by cross-cutting oracle checks."""
    names = ["S_1", "S_2", "S_2t", "S_4", "S_4t", "S_4tt", "S_5", "S_7",
             "S_8t", "S_8d", "S_14", "XA_1", "YA_1", "YA_5", "XB_5",
             "YB_2", "XC_9", "YC_7", "YD_7", "XE_4", "YE_8"]
    out = [catalog.emit(n) for n in names]
    out += [catalog.make_T(3, "plain"), catalog.make_T(4, "i"),
            catalog.make_T(3, "omega"), catalog.make_C(3),
            catalog.make_C_charged(3, True), catalog.make_C_odd(2),
            catalog.make_P(1, 2), catalog.make_P_odd(3),
            catalog.make_P_charged(4)]
    return out
