"""Built-in Riemann problem configurations.

Each case is a left/right pair of primitive states separated by a
diaphragm at ``x0`` inside ``domain``, to be evolved until ``t_final``.
The registry covers the standard exercises for this system: a plain depth
jump and three stress variants of it, a five-wave configuration, a pure
shear problem, a single shock in a moving and a stationary frame, and a
single contact wave.

The module also collects the 17-significant-digit reference values tied
to these configurations (star roots, wave speeds, shock construction
values).  They are defined once here so the registry, the regression
suite and downstream consumers agree bit-for-bit.
"""

from __future__ import annotations

from dataclasses import dataclass, replace

from .model import GRAVITY, PrimitiveState

# --- reference values for the 2:1 depth-jump configuration ---
# depth ratios h_star/h across the left and right outer waves
DAM_BREAK_ROOT_LEFT = 0.731428410320821
DAM_BREAK_ROOT_RIGHT = 1.4177231168358784
# slowest signal (left rarefaction head) and fastest (right shock)
DAM_BREAK_SPEED_LEFT = -0.44328320518603004
DAM_BREAK_SPEED_RIGHT = 0.43554139386439333
# three-state min/max characteristic bound for the same data
DAM_BREAK_ESTIMATE_LEFT = -0.44328320518603004
DAM_BREAK_ESTIMATE_RIGHT = +0.44328320518603004
# right bound when the far state is left out of the composition
DAM_BREAK_TWO_STATE_ESTIMATE_RIGHT = 0.38399218742052554

# --- reference values for the single-shock configuration ---
# post-shock state generated from (h, u, v, P11, P12, P22) =
# (0.02, 0, 0, 1e-4, 0, 1e-4) with depth ratio z = 1.5, and the
# magnitude of the shock speed
SHOCK_CASE_DEPTH_RATIO = 1.5
SHOCK_CASE_U_RIGHT = -0.22169799277395363
SHOCK_CASE_P11_RIGHT = 0.016616666666666658
SHOCK_CASE_SPEED = 0.6650939783218609
# same shock boosted into the frame where it stands still
SHOCK_CASE_U_LEFT_STATIONARY = 0.6650939783218609
SHOCK_CASE_U_RIGHT_STATIONARY = 0.44339598554790727

# --- right-side stress for the single-contact configuration ---
CONTACT_CASE_P11_RIGHT = 0.014735


@dataclass(frozen=True)
class CaseSpec:
    """One Riemann problem: states, diaphragm, domain, final time."""

    name: str
    left: PrimitiveState
    right: PrimitiveState
    x0: float = 0.5
    domain: tuple = (0.0, 1.0)
    t_final: float = 0.5
    g: float = GRAVITY

    def __post_init__(self):
        if self.t_final <= 0.0:
            raise ValueError("t_final must be positive")
        lo, hi = self.domain
        if not lo < self.x0 < hi:
            raise ValueError("diaphragm must lie inside the domain")

    def with_gravity(self, g: float) -> "CaseSpec":
        return replace(self, g=g)


def _state(h, u, v, p11, p12, p22) -> PrimitiveState:
    return PrimitiveState(h, u, v, p11, p12, p22)


def builtin_cases() -> list:
    """All built-in cases, in presentation order."""
    return [
        CaseSpec(
            "dambreak",
            _state(0.02, 0.0, 0.0, 1e-4, 0.0, 1e-4),
            _state(0.01, 0.0, 0.0, 1e-4, 0.0, 1e-4),
        ),
        CaseSpec(
            "dambreak-modified",
            _state(0.02, 0.0, 0.0, 4e-2, 0.0, 4e-2),
            _state(0.01, 0.0, 0.0, 4e-2, 0.0, 4e-2),
        ),
        CaseSpec(
            "dambreak-p22",
            _state(0.02, 0.0, 0.0, 4e-2, 0.0, 1e-8),
            _state(0.01, 0.0, 0.0, 4e-2, 0.0, 1e-8),
        ),
        CaseSpec(
            "dambreak-p12",
            _state(0.02, 0.0, 0.0, 4e-2, 1e-8, 4e-2),
            _state(0.01, 0.0, 0.0, 4e-2, 1e-8, 4e-2),
        ),
        CaseSpec(
            "fivewave",
            _state(0.01, 0.1, 0.2, 4e-2, 1e-8, 4e-2),
            _state(0.02, 0.1, -0.2, 4e-2, 1e-8, 4e-2),
        ),
        CaseSpec(
            "shear",
            _state(0.01, 0.0, 0.2, 1e-4, 0.0, 1e-4),
            _state(0.01, 0.0, -0.2, 1e-4, 0.0, 1e-4),
            t_final=10.0,
        ),
        CaseSpec(
            "shock-moving",
            _state(0.02, 0.0, 0.0, 1e-4, 0.0, 1e-4),
            _state(0.03, SHOCK_CASE_U_RIGHT, 0.0,
                   SHOCK_CASE_P11_RIGHT, 0.0, 1e-4),
        ),
        CaseSpec(
            "shock-stationary",
            _state(0.02, SHOCK_CASE_U_LEFT_STATIONARY, 0.0, 1e-4, 0.0, 1e-4),
            _state(0.03, SHOCK_CASE_U_RIGHT_STATIONARY, 0.0,
                   SHOCK_CASE_P11_RIGHT, 0.0, 1e-4),
        ),
        CaseSpec(
            "contact",
            _state(0.02, 0.1, 0.0, 1e-4, 0.0, 1e-4),
            _state(0.01, 0.1, 0.0, CONTACT_CASE_P11_RIGHT, 0.0, 2e-4),
            t_final=2.5,
        ),
    ]


def case_names() -> list:
    return [c.name for c in builtin_cases()]


def get_case(name: str) -> CaseSpec:
    for case in builtin_cases():
        if case.name == name:
            return case
    raise KeyError(
        f"unknown case {name!r}; available: {', '.join(case_names())}")
