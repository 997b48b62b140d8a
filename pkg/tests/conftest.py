import numpy as np
import pytest
from hypothesis import strategies as st

from taylorzeros import RecurrenceSpec, find_roots


def nonzero_floats(lo=-10.0, hi=10.0, min_mag=0.05):
    """Finite floats in [lo, hi] bounded away from zero."""
    return st.floats(min_value=min_mag, max_value=hi).flatmap(
        lambda x: st.sampled_from([x, -x])
    )


def spec_strategy(min_disc=1e-6):
    """Validated specs away from the confluent discriminant."""
    abc = st.tuples(nonzero_floats(), nonzero_floats(), nonzero_floats()).filter(
        lambda t: abs(t[1] * t[1] - 4.0 * t[0] * t[2]) >= min_disc
    )
    rest = st.tuples(st.floats(min_value=-10, max_value=10), nonzero_floats(min_mag=0.01))
    return st.tuples(abc, rest).map(
        lambda t: RecurrenceSpec(t[0][0], t[0][1], t[0][2], t[1][0], t[1][1])
    )


@pytest.fixture(scope="session", autouse=True)
def warm_root_finder():
    # first call pays the JIT compile; keep it out of timed tests
    find_roots([1.0, 0.0, -1.0])


@pytest.fixture()
def rng():
    return np.random.default_rng(20260809)
