import random
from fractions import Fraction

import pytest
from hypothesis import strategies as st

from revlin import Quaternion

small_fractions = st.fractions(min_value=-4, max_value=4, max_denominator=6)

quaternions = st.builds(Quaternion, small_fractions, small_fractions,
                        small_fractions, small_fractions)

nonzero_quaternions = quaternions.filter(lambda q: not q.is_zero())

complex_scalars = st.builds(Quaternion, small_fractions, small_fractions)


@pytest.fixture
def rng():
    return random.Random(20260810)


def frac(p, q=1):
    return Fraction(p, q)
