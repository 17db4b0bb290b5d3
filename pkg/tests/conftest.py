import random

import pytest
from hypothesis import settings
from hypothesis import strategies as st

from arfinv.func_field import RatFunc, TowerElem, TowerField
from arfinv.gf2n import binary_field

settings.register_profile("default", max_examples=100, deadline=None)
settings.load_profile("default")

GF2, GF4, GF8 = binary_field(1), binary_field(2), binary_field(3)
F2T = TowerField(0)


@pytest.fixture
def rng():
    return random.Random(12345)


def polys(max_deg=8):
    return st.integers(min_value=0, max_value=(1 << (max_deg + 1)) - 1)


def nonzero_polys(max_deg=8):
    return st.integers(min_value=1, max_value=(1 << (max_deg + 1)) - 1)


@st.composite
def ratfuncs(draw, max_deg=8):
    return RatFunc(draw(polys(max_deg)), draw(nonzero_polys(max_deg)))


@st.composite
def tower_elems(draw, max_level=3, max_deg=8):
    return TowerElem(draw(st.integers(0, max_level)), draw(ratfuncs(max_deg)))


def field_elems(F):
    return st.integers(min_value=0, max_value=F.order - 1)
