"""CTC conditions, round-trip times and parameter-space scans.

The loop runs along the wire at rest (shape value ``F1``) with speed
``c_v sqrt(F1)`` and back along the boosted wire (shape value ``F2``) with
the signed backward speed of the moving-wire metric.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

import numpy as np

from .boost import (
    HORIZON_TOL,
    _check_beta,
    horizon_condition,
    null_speed_backward,
    pulse_frame_params,
)
from .errors import DomainError, SingularityError
from .metric import _check_cv, _check_F

__all__ = [
    "SINGULAR_TOL",
    "RegionLabel",
    "ScanGrid",
    "Figure2Row",
    "Figure3Row",
    "ctc_threshold_beta",
    "ctc_threshold_beta_general",
    "round_trip_time",
    "classify_parameters",
    "classify_point",
    "scan_figure2",
    "scan_figure3",
    "symmetric_beta",
]

#: ``|sqrt(F) beta - 1|`` below this is reported as singular.
SINGULAR_TOL = 1e-9


class RegionLabel(str, enum.Enum):
    POSITIVE_TIME = "POSITIVE_TIME"
    NEGATIVE_LEG = "NEGATIVE_LEG"
    CTC = "CTC"
    SINGULAR = "SINGULAR"
    INVALID = "INVALID"

    def __str__(self):
        return self.value


def ctc_threshold_beta(F: float) -> float:
    """Smallest boost for which the equal-wire round trip takes negative time."""
    _check_F(F)
    return 2.0 * math.sqrt(F) / (F + 1.0)


def ctc_threshold_beta_general(F1: float, F2: float) -> float:
    """Threshold boost for a loop on wires with different shape values.

    ``F1`` belongs to the wire at rest, ``F2`` to the boosted one.
    """
    _check_F(F1)
    _check_F(F2)
    s1, s2 = math.sqrt(F1), math.sqrt(F2)
    return (s1 + s2) / (1.0 + s1 * s2)


def round_trip_time(L: float, F1: float, F2: float, beta: float, c_v: float = 1.0) -> float:
    """Signed lab time of the out-and-back loop of axial length ``L``."""
    if not L > 0:
        raise DomainError(f"path length must be positive, got L={L}")
    _check_F(F1)
    _check_cv(c_v)
    outbound = L / (c_v * math.sqrt(F1))
    return outbound + L / null_speed_backward(F2, beta, c_v)


def symmetric_beta(F1: float, F2: float) -> float:
    """Boost making the return speed equal and opposite to the outbound speed."""
    _check_F(F1)
    _check_F(F2)
    s1, s2 = math.sqrt(F1), math.sqrt(F2)
    beta = (s1 + s2) / (1.0 + s1 * s2)
    if beta >= 1.0:
        raise DomainError(
            f"no subluminal boost gives opposite speeds for F1={F1}, F2={F2}"
        )
    return beta


def classify_parameters(F1: float, F2: float, beta: float,
                        tol: float = SINGULAR_TOL) -> RegionLabel:
    """Region of the loop with rest-wire ``F1``, boosted-wire ``F2`` and boost ``beta``.

    The CTC and negative-leg predicates are evaluated independently; the
    CTC label takes precedence.
    """
    if not (np.isfinite([F1, F2, beta]).all() and F1 >= 1 and F2 >= 1 and 0 < beta < 1):
        return RegionLabel.INVALID
    x = math.sqrt(F2) * beta
    if abs(x - 1.0) <= tol:
        return RegionLabel.SINGULAR
    if beta > ctc_threshold_beta_general(F1, F2):
        return RegionLabel.CTC
    if x > 1.0:
        return RegionLabel.NEGATIVE_LEG
    return RegionLabel.POSITIVE_TIME


def classify_point(c_z_rest: float, beta: float, tol: float = SINGULAR_TOL) -> RegionLabel:
    """Region label for identical wires whose rest light speed is ``c_z_rest`` (in ``c_v``)."""
    if not (math.isfinite(c_z_rest) and c_z_rest >= 1):
        return RegionLabel.INVALID
    F = c_z_rest * c_z_rest
    return classify_parameters(F, F, beta, tol)


@dataclass(frozen=True)
class ScanGrid:
    """Inclusive, evenly spaced grid over boost and rest-wire light speed.

    A degenerate axis (``min == max``) must have exactly one point.
    """

    beta_min: float = 0.01
    beta_max: float = 0.99
    n_beta: int = 200
    speed_min: float = 1.0
    speed_max: float = 2.5
    n_speed: int = 200

    def __post_init__(self):
        if not 0 < self.beta_min <= self.beta_max < 1:
            raise DomainError("beta range must satisfy 0 < min <= max < 1")
        if not 1 <= self.speed_min <= self.speed_max or not math.isfinite(self.speed_max):
            raise DomainError("speed range must satisfy 1 <= min <= max (units of c_v)")
        for lo, hi, n, name in ((self.beta_min, self.beta_max, self.n_beta, "beta"),
                                (self.speed_min, self.speed_max, self.n_speed, "speed")):
            if int(n) != n or n < 1:
                raise DomainError(f"{name} resolution must be a positive integer")
            if (lo == hi) != (n == 1):
                raise DomainError(
                    f"{name} axis needs one point for an empty range and >= 2 otherwise"
                )

    @property
    def betas(self) -> np.ndarray:
        return np.linspace(self.beta_min, self.beta_max, int(self.n_beta))

    @property
    def speeds(self) -> np.ndarray:
        return np.linspace(self.speed_min, self.speed_max, int(self.n_speed))

    @property
    def size(self) -> int:
        return int(self.n_beta) * int(self.n_speed)


@dataclass(frozen=True)
class Figure2Row:
    c_z_rest: float
    beta: float
    c_z_beta: float | None  # None at singular points
    region: RegionLabel


@dataclass(frozen=True)
class Figure3Row:
    F: float
    c_p: float | None  # None where the pulse form degenerates
    v_pulse: float | None
    abs_c_p: float | None
    horizon: bool


def scan_figure2(grid: ScanGrid, c_v: float = 1.0, upper_F: float | None = None,
                 tol: float = SINGULAR_TOL) -> list[Figure2Row]:
    """Backward light speed and region label over ``grid``.

    Rows are ordered beta-major, then by rest-wire speed. By default both
    wires share ``F = c_z_rest^2``; passing ``upper_F`` fixes the boosted
    wire instead.
    """
    _check_cv(c_v)
    if upper_F is not None:
        _check_F(upper_F)
    rows = []
    speeds = [float(s) for s in grid.speeds]
    for beta in grid.betas:
        beta = float(beta)
        for c in speeds:
            F1 = c * c
            F2 = F1 if upper_F is None else float(upper_F)
            label = classify_parameters(F1, F2, beta, tol)
            if label in (RegionLabel.SINGULAR, RegionLabel.INVALID):
                value = None
            else:
                value = null_speed_backward(F2, beta, c_v)
            rows.append(Figure2Row(c, beta, value, label))
    return rows


def scan_figure3(beta: float, F_values, c_v: float = 1.0,
                 tol: float = HORIZON_TOL) -> list[Figure3Row]:
    """Pulse-frame speeds against ``F`` at fixed ``beta``.

    ``horizon`` marks the row where the horizon locus ``c_p^2 = v^2`` is
    met or crossed: the row itself satisfies the condition (or is the
    degenerate point), or the sign of ``c_p^2 - v^2`` flipped since the
    previous row.
    """
    if not 0 <= beta < 1:
        raise DomainError(f"beta must satisfy 0 <= beta < 1, got {beta}")
    _check_cv(c_v)
    rows = []
    prev_side = None
    for F in F_values:
        F = float(F)
        _check_F(F)
        try:
            p = pulse_frame_params(F, beta, c_v)
        except SingularityError:
            rows.append(Figure3Row(F, None, None, None, True))
            prev_side = None
            continue
        side = np.sign(p.c_p * p.c_p - p.v_pulse * p.v_pulse)
        flag = horizon_condition(p, tol) or (prev_side is not None and side != prev_side)
        if flag and horizon_condition(p, tol):
            prev_side = None
        else:
            prev_side = side
        rows.append(Figure3Row(F, p.c_p, p.v_pulse, p.abs_c_p, bool(flag)))
    return rows
