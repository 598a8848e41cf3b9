from __future__ import annotations

import math

import numpy as np
import pytest
from hypothesis import strategies as st

from ssw1d.model import ModelParams, PrimitiveState


@pytest.fixture
def params():
    return ModelParams()


@pytest.fixture
def rng():
    # fixed seed: bulk random sweeps must be reproducible run to run
    return np.random.default_rng(20230815)


@st.composite
def primitive_states(draw, h_min=1e-3, h_max=5.0, v_max=2.0,
                     p_min=1e-4, p_max=2.0, corr_max=0.9):
    """Admissible primitive states; P12 built from a correlation factor so
    det(P) > 0 holds by construction."""
    h = draw(st.floats(h_min, h_max))
    v1 = draw(st.floats(-v_max, v_max))
    v2 = draw(st.floats(-v_max, v_max))
    P11 = draw(st.floats(p_min, p_max))
    P22 = draw(st.floats(p_min, p_max))
    corr = draw(st.floats(-corr_max, corr_max))
    return PrimitiveState(h, v1, v2, P11, corr * math.sqrt(P11 * P22), P22)


def sample_state(rng, h_min=1e-3, h_max=5.0, v_max=2.0,
                 p_min=1e-4, p_max=2.0, corr_max=0.9) -> PrimitiveState:
    """numpy-RNG twin of the hypothesis strategy, for seeded bulk sweeps."""
    h = rng.uniform(h_min, h_max)
    v1, v2 = rng.uniform(-v_max, v_max, size=2)
    P11 = rng.uniform(p_min, p_max)
    P22 = rng.uniform(p_min, p_max)
    corr = rng.uniform(-corr_max, corr_max)
    return PrimitiveState(h, v1, v2, P11, corr * math.sqrt(P11 * P22), P22)
