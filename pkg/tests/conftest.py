from fractions import Fraction

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from entcat.vectors import canonicalize, normalize, vector

settings.register_profile("default", deadline=None, suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")


@st.composite
def prob_vectors(draw, min_dim=1, max_dim=6, zeros=True, high=12, normalized=True):
    n = draw(st.integers(min_dim, max_dim))
    weights = draw(st.lists(st.integers(0 if zeros else 1, high), min_size=n, max_size=n).filter(any))
    x = canonicalize(weights)
    return normalize(x) if normalized else x


@st.composite
def nonuniform_vectors(draw, min_dim=2, max_dim=6, zeros=True, high=12):
    return draw(prob_vectors(min_dim, max_dim, zeros, high).filter(lambda v: not v.is_uniform))


def positive_vectors(min_dim=2, max_dim=4, high=12):
    return prob_vectors(min_dim, max_dim, zeros=False, high=high)


fractions_01 = st.fractions(min_value=0, max_value=1, max_denominator=64).filter(lambda q: 0 < q < 1)


@pytest.fixture
def jp():
    return vector("0.4", "0.4", "0.1", "0.1"), vector("0.5", "0.25", "0.25", "0"), vector("0.6", "0.4")


@pytest.fixture
def four_level_y():
    return normalize(canonicalize([1, Fraction(1, 2), Fraction(1, 8), Fraction(1, 64)]))
