"""
Shared fixtures and hypothesis strategies for the test suite.
"""

import numpy as np
import pytest
from hypothesis import HealthCheck, settings as hypothesis_settings
from hypothesis import strategies as st

from src.abgrp.groups import FgAbGroup
from src.abgrp.matrix import IntMatrix
from src.ahdetect.detector import detect
from src.config import settings
from src.exring73.fixtures import to_homquiver
from src.torsion.pairs import PrimeSet

hypothesis_settings.register_profile(
    "engine",
    max_examples=40,
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
hypothesis_settings.load_profile("engine")


@st.composite
def int_matrices(draw, max_rows=4, max_cols=4, max_entry=12):
    rows = draw(st.integers(1, max_rows))
    cols = draw(st.integers(1, max_cols))
    entries = draw(
        st.lists(
            st.lists(st.integers(-max_entry, max_entry), min_size=cols, max_size=cols),
            min_size=rows,
            max_size=rows,
        )
    )
    return IntMatrix.from_rows(entries, cols=cols)


@st.composite
def groups(draw, max_rank=2, max_factor=36, max_factors=3):
    rank = draw(st.integers(0, max_rank))
    factors = draw(st.lists(st.integers(1, max_factor), max_size=max_factors))
    return FgAbGroup.from_orders([0] * rank + factors)


def finite_groups(max_factor=24, max_factors=2):
    return groups(max_rank=0, max_factor=max_factor, max_factors=max_factors)


prime_sets = st.sampled_from(
    [PrimeSet(), PrimeSet.of(2), PrimeSet.of(3), PrimeSet.of(2, 3), PrimeSet.of(2, 3, 5, 7)]
)


@pytest.fixture
def rng():
    """A numpy generator seeded with the default seed."""
    return np.random.default_rng(settings.DEFAULT_SEED)


@pytest.fixture(scope="session")
def example_quiver():
    """The example ring's Hom-quiver at the default truncation bound."""
    return to_homquiver(settings.TRUNCATION_BOUND, 2)


@pytest.fixture(scope="session")
def example_report(example_quiver):
    """Detection report for the example ring."""
    return detect(example_quiver)


@pytest.fixture
def fixture_dir(tmp_path):
    """A scratch directory for fixture files."""
    directory = tmp_path / "fixtures"
    directory.mkdir()
    return directory
