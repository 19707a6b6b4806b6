"""Superluminal scattering sources and the two-surface CTC assembly.

A plane wavefront sweeping a surface tilted at ``theta`` produces a
scattering spot whose apparent speed along the camera axis is
``c_v / (1 - cot theta)``. Angles are given in degrees at the public
surface and handled in radians internally.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field

import numpy as np

from .ctc import ctc_threshold_beta_general, symmetric_beta
from .errors import (
    CTCConditionError,
    DomainError,
    InconsistentAssemblyError,
    SingularityError,
)
from .metric import _check_cv, _check_F

__all__ = [
    "ANGLE_TOL",
    "JUNCTION",
    "DesignMode",
    "SurfaceAssembly",
    "TimelineEvent",
    "ScatterTimeline",
    "arccot_deg",
    "scatter_speed",
    "angle_for_speed",
    "angle_for_boosted_wire",
    "angle_for_rest_wire",
    "design_ctc_assembly",
    "wavefront_timeline",
    "simulate_wavefront",
]

#: Angular distance (degrees) from 45 deg treated as the singularity.
ANGLE_TOL = 1e-12
JUNCTION = 0.5


def arccot_deg(x: float) -> float:
    """Principal arccotangent in degrees, range (0, 180)."""
    return math.degrees(math.atan2(1.0, x))


def scatter_speed(theta: float, c_v: float = 1.0) -> float:
    """Apparent speed of the scattering spot for a surface at ``theta`` degrees."""
    _check_cv(c_v)
    if not 0 < theta <= 90:
        raise DomainError(f"angle must lie in (0, 90] degrees, got {theta}")
    if abs(theta - 45.0) <= ANGLE_TOL:
        raise SingularityError("scattering speed diverges at 45 degrees")
    rad = math.radians(theta)
    return c_v / (1.0 - math.cos(rad) / math.sin(rad))


def angle_for_speed(speed: float, c_v: float = 1.0) -> float:
    """Surface angle (degrees) whose spot moves at ``speed``; inverse of :func:`scatter_speed`."""
    _check_cv(c_v)
    if speed == 0 or math.isnan(speed):
        raise DomainError(f"no finite angle produces speed {speed}")
    x = 1.0 - c_v / speed
    theta = arccot_deg(x)
    if not 0 < theta <= 90:
        raise DomainError(f"speed {speed} is not reachable with 0 < theta <= 90")
    return theta


def angle_for_boosted_wire(F: float, beta: float) -> float:
    """Angle reproducing the backward light speed of a wire boosted by ``beta``.

    Evaluated without the pole of the backward speed, so the negative-time
    boundary maps smoothly onto 45 degrees.
    """
    _check_F(F)
    if not abs(beta) < 1:
        raise DomainError(f"boost must satisfy |beta| < 1, got {beta}")
    s = math.sqrt(F)
    if s == beta:
        raise DomainError("sqrt(F) = beta gives zero target speed")
    return arccot_deg(1.0 - (1.0 - s * beta) / (s - beta))


def angle_for_rest_wire(F1: float) -> float:
    _check_F(F1)
    return arccot_deg(1.0 - 1.0 / math.sqrt(F1))


class DesignMode(str, enum.Enum):
    SYMMETRIC = "symmetric"
    AS_GIVEN = "as-given"

    def __str__(self):
        return self.value


@dataclass(frozen=True)
class SurfaceAssembly:
    """Two joined scattering surfaces encoding one loop of a CTC.

    Surface 1 covers ``x in [0, 1/2]`` and stands for the wire at rest;
    surface 2 covers ``x in [1/2, 1]`` and stands for the boosted wire.
    """

    theta1: float
    theta2: float
    F1: float
    F2: float
    beta: float
    mode: DesignMode = DesignMode.AS_GIVEN
    extent1: tuple[float, float] = (0.0, JUNCTION)
    extent2: tuple[float, float] = (JUNCTION, 1.0)

    def __post_init__(self):
        if not 45 < self.theta1 <= 90:
            raise DomainError(f"theta1 must exceed 45 degrees, got {self.theta1}")
        if not 0 < self.theta2 < 45:
            raise DomainError(f"theta2 must be below 45 degrees, got {self.theta2}")
        threshold = ctc_threshold_beta_general(self.F1, self.F2)
        if self.beta < threshold * (1.0 - 1e-12):
            raise CTCConditionError(
                f"beta={self.beta} is below the CTC threshold {threshold:.12g}"
            )

    @property
    def v1(self) -> float:
        return scatter_speed(self.theta1)

    @property
    def v2(self) -> float:
        return scatter_speed(self.theta2)

    def as_dict(self) -> dict:
        return {
            "mode": self.mode.value,
            "F1": self.F1,
            "F2": self.F2,
            "beta": self.beta,
            "ctc_threshold_beta": ctc_threshold_beta_general(self.F1, self.F2),
            "theta1_deg": self.theta1,
            "theta2_deg": self.theta2,
            "v1": self.v1,
            "v2": self.v2,
            "extent1": list(self.extent1),
            "extent2": list(self.extent2),
        }


def design_ctc_assembly(F1: float, F2: float, beta: float | None = None,
                        mode: DesignMode | str = DesignMode.SYMMETRIC) -> SurfaceAssembly:
    """Surface angles that emulate the two-wire loop.

    In ``SYMMETRIC`` mode ``beta`` is ignored and chosen so that the two
    spot speeds are equal and opposite; this puts the loop exactly on the
    zero-total-time boundary. ``AS_GIVEN`` requires ``beta`` strictly above
    the CTC threshold.
    """
    mode = DesignMode(mode)
    _check_F(F1)
    _check_F(F2)
    if mode is DesignMode.SYMMETRIC:
        try:
            beta = symmetric_beta(F1, F2)
        except DomainError as exc:
            raise CTCConditionError(f"no CTC in this configuration: {exc}") from None
    else:
        if beta is None:
            raise DomainError("AS_GIVEN mode needs a boost")
        threshold = ctc_threshold_beta_general(F1, F2)
        if not abs(beta) < 1:
            raise DomainError(f"boost must satisfy |beta| < 1, got {beta}")
        if not beta > threshold:
            raise CTCConditionError(
                f"beta={beta} does not exceed the CTC threshold {threshold:.12g}"
            )
    theta1 = angle_for_rest_wire(F1)
    theta2 = angle_for_boosted_wire(F2, beta)
    return SurfaceAssembly(theta1=theta1, theta2=theta2, F1=F1, F2=F2, beta=beta, mode=mode)


class EventKind(str, enum.Enum):
    APPEAR = "appear"
    MOVE_SAMPLE = "move-sample"
    ANNIHILATE = "annihilate"

    def __str__(self):
        return self.value


_KIND_ORDER = {EventKind.APPEAR: 0, EventKind.MOVE_SAMPLE: 1, EventKind.ANNIHILATE: 2}


@dataclass(frozen=True)
class TimelineEvent:
    time: float
    x: float
    image_id: str  # "left", "right", or "both" for the annihilation
    kind: EventKind


@dataclass(frozen=True)
class ScatterTimeline:
    events: tuple[TimelineEvent, ...]
    v1: float
    v2: float
    left_arrival: float
    right_arrival: float
    meeting_time: float
    meeting_x: float
    meets_at_junction: bool = field(default=True)

    @property
    def duration(self) -> float:
        return self.meeting_time - min(e.time for e in self.events)

    def as_dict(self) -> dict:
        return {
            "speeds": {"v1": self.v1, "v2": self.v2},
            "left_arrival": self.left_arrival,
            "right_arrival": self.right_arrival,
            "meeting_time": self.meeting_time,
            "meeting_x": self.meeting_x,
            "meets_at_junction": self.meets_at_junction,
            "events": [
                {"time": e.time, "x": e.x, "image_id": e.image_id, "kind": e.kind.value}
                for e in self.events
            ],
        }


def wavefront_timeline(v1: float, v2: float, n_samples: int = 50,
                       t_left: float | None = None, t_right: float | None = None,
                       junction: float = JUNCTION) -> ScatterTimeline:
    """Analytic image trajectories for spot speeds ``v1 > 0`` and ``v2 < 0``.

    The left image starts at ``x = 0``, the right one at ``x = 1``. By
    default the appearance times follow from a single wavefront reaching
    the junction at one instant, shifted so that the first image appears
    at ``t = 0``.
    """
    if int(n_samples) != n_samples or n_samples < 2:
        raise DomainError("n_samples must be an integer >= 2")
    if not (v1 > 0 and v2 < 0 and math.isfinite(v1) and math.isfinite(v2)):
        raise InconsistentAssemblyError(
            f"images never meet: need v1 > 0 and v2 < 0, got v1={v1}, v2={v2}"
        )
    if t_left is None or t_right is None:
        dl = junction / v1
        dr = (1.0 - junction) / -v2
        start = max(dl, dr)
        t_left, t_right = start - dl, start - dr
    # x_left = v1 (t - t_left), x_right = 1 + v2 (t - t_right)
    t_meet = (1.0 - v2 * t_right + v1 * t_left) / (v1 - v2)
    if t_meet < max(t_left, t_right):
        raise InconsistentAssemblyError("images would meet before both have appeared")
    x_meet = v1 * (t_meet - t_left)
    left_arrival = t_left + junction / v1
    right_arrival = t_right + (1.0 - junction) / -v2

    events = [
        TimelineEvent(t_left, 0.0, "left", EventKind.APPEAR),
        TimelineEvent(t_right, 1.0, "right", EventKind.APPEAR),
    ]
    for t in np.linspace(t_left, t_meet, int(n_samples)):
        events.append(TimelineEvent(float(t), float(v1 * (t - t_left)), "left",
                                    EventKind.MOVE_SAMPLE))
    for t in np.linspace(t_right, t_meet, int(n_samples)):
        events.append(TimelineEvent(float(t), float(1.0 + v2 * (t - t_right)), "right",
                                    EventKind.MOVE_SAMPLE))
    events.append(TimelineEvent(t_meet, x_meet, "both", EventKind.ANNIHILATE))
    events.sort(key=lambda e: (e.time, _KIND_ORDER[e.kind], e.image_id))
    return ScatterTimeline(
        events=tuple(events), v1=v1, v2=v2,
        left_arrival=left_arrival, right_arrival=right_arrival,
        meeting_time=t_meet, meeting_x=x_meet,
        meets_at_junction=math.isclose(x_meet, junction, rel_tol=1e-9, abs_tol=1e-12),
    )


def simulate_wavefront(assembly: SurfaceAssembly, n_samples: int = 50,
                       c_v: float = 1.0) -> ScatterTimeline:
    """Timeline of the two scattering images of ``assembly``.

    In ``SYMMETRIC`` mode both images appear at ``t = 0``.
    """
    _check_cv(c_v)
    v1 = scatter_speed(assembly.theta1, c_v)
    v2 = scatter_speed(assembly.theta2, c_v)
    if assembly.mode is DesignMode.SYMMETRIC:
        return wavefront_timeline(v1, v2, n_samples, t_left=0.0, t_right=0.0)
    return wavefront_timeline(v1, v2, n_samples)
