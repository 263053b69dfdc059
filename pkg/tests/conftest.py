import sys
from pathlib import Path

import pytest
from hypothesis import HealthCheck, settings

sys.path.insert(0, str(Path(__file__).parent))

from incchains import ChainSpec, MonomialIdeal, variable

settings.register_profile(
    "ci",
    max_examples=100,
    deadline=None,
    derandomize=True,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("ci")


def make_mixed_chain():
    """Three-row chain with a fixed generator, a pure power, and a moving pair.

    Seeded at width 4 with the monoid fixing column 1.  Its quotient pd
    values are frozen in the acceptance suite.
    """
    gens = [
        variable(1, 2, 3),
        variable(1, 4, 2) * variable(2, 1),
        variable(2, 2) * variable(3, 3),
    ]
    return ChainSpec(rows=3, index=1, seed_index=4, seed=MonomialIdeal(3, 4, gens))


def make_product_chain(rows, index=1, seed_index=None):
    """Chain generated by x[1,i+1] * x[k,i+2] for every row k."""
    if seed_index is None:
        seed_index = index + 2
    gens = [
        variable(1, index + 1) * variable(k, index + 2) for k in range(1, rows + 1)
    ]
    return ChainSpec(
        rows=rows,
        index=index,
        seed_index=seed_index,
        seed=MonomialIdeal(rows, seed_index, gens),
    )


def make_worked_ideal():
    """Width-6 ideal with one low, two straddling and two high generators at index 2."""
    return MonomialIdeal(
        3,
        6,
        [
            variable(2, 1, 4),
            variable(1, 1, 3) * variable(2, 3, 2) * variable(1, 4),
            variable(3, 2) * variable(1, 3, 2) * variable(2, 4),
            variable(2, 3, 3) * variable(1, 4, 2),
            variable(2, 4, 2) * variable(3, 5, 4),
        ],
    )


@pytest.fixture
def mixed_chain():
    return make_mixed_chain()


@pytest.fixture
def worked_ideal():
    return make_worked_ideal()
