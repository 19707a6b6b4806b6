"""Lorentz boosts, the moving-wire metric and its pulse-frame form.

``null_speed_backward`` returns the *signed* coordinate velocity of the
photon travelling against the boost. A negative value means the photon
advances towards negative lab time.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import DomainError, SingularityError
from .metric import REL_TOL, MetricCoefficients, _check_cv, _check_F

__all__ = [
    "HORIZON_TOL",
    "BoostParameter",
    "PulseFrameParams",
    "gamma",
    "lorentz_transform",
    "boosted_metric",
    "null_speed_forward",
    "null_speed_backward",
    "negative_time_condition",
    "pulse_frame_params",
    "pulse_metric",
    "horizon_condition",
]

HORIZON_TOL = 1e-9


@dataclass(frozen=True)
class BoostParameter:
    beta: float

    def __post_init__(self):
        _check_beta(self.beta)

    @property
    def gamma(self) -> float:
        return gamma(self.beta)


@dataclass(frozen=True)
class PulseFrameParams:
    """Background speed ``c_p`` and pulse speed ``v_pulse`` of the pulse-frame metric.

    ``c_p`` is kept with the sign it is computed with; it turns negative
    beyond the horizon. Only its square enters the metric, so
    :attr:`abs_c_p` is an equally valid background speed.
    """

    c_p: float
    v_pulse: float

    @property
    def abs_c_p(self) -> float:
        return abs(self.c_p)


def _check_beta(beta: float) -> None:
    if not abs(beta) < 1:
        raise DomainError(f"boost must satisfy |beta| < 1, got {beta}")


def _as_beta(beta) -> float:
    if isinstance(beta, BoostParameter):
        return beta.beta
    _check_beta(beta)
    return float(beta)


def gamma(beta: float) -> float:
    """Lorentz factor ``1 / sqrt(1 - beta^2)``."""
    _check_beta(beta)
    return 1.0 / math.sqrt(1.0 - beta * beta)


def lorentz_transform(t: float, z: float, beta, c_v: float = 1.0) -> tuple[float, float]:
    """Coordinates ``(t', z')`` in the frame moving with velocity ``beta * c_v`` along z."""
    beta = _as_beta(beta)
    _check_cv(c_v)
    g = gamma(beta)
    return g * (t - beta * z / c_v), g * (z - beta * c_v * t)


def boosted_metric(F: float, beta, c_v: float = 1.0) -> MetricCoefficients:
    """Axial metric of a wire moving at ``beta`` as seen from the lab.

    Expansion of ``-g^2 F (c_v dt - beta dz)^2 + g^2 (dz - beta c_v dt)^2``.
    """
    beta = _as_beta(beta)
    _check_F(F)
    _check_cv(c_v)
    g2 = 1.0 / (1.0 - beta * beta)
    return MetricCoefficients(
        g_tt=-g2 * c_v * c_v * (F - beta * beta),
        g_tz=g2 * c_v * beta * (F - 1.0),
        g_zz=g2 * (1.0 - F * beta * beta),
    )


def null_speed_forward(F: float, beta, c_v: float = 1.0) -> float:
    """Light speed along the direction of motion of the wire."""
    beta = _as_beta(beta)
    _check_F(F)
    _check_cv(c_v)
    s = math.sqrt(F)
    den = 1.0 + s * beta
    if den == 0:
        raise SingularityError("1 + sqrt(F) beta = 0")
    return c_v * (beta + s) / den


def null_speed_backward(F: float, beta, c_v: float = 1.0) -> float:
    """Signed light speed against the direction of motion of the wire.

    Equals ``c_v (sqrt(F) - beta) / (1 - sqrt(F) beta)``; changes sign
    through a pole at ``sqrt(F) beta = 1``.
    """
    beta = _as_beta(beta)
    _check_F(F)
    _check_cv(c_v)
    s = math.sqrt(F)
    den = 1.0 - s * beta
    if abs(den) <= REL_TOL:
        raise SingularityError("negative-time boundary sqrt(F) beta = 1")
    return c_v * (s - beta) / den


def negative_time_condition(F: float, beta) -> bool:
    """True when the backward leg runs in negative lab time (``sqrt(F) beta > 1``).

    The boundary itself, within a relative ``REL_TOL``, counts as false.
    """
    beta = _as_beta(beta)
    _check_F(F)
    return math.sqrt(F) * beta > 1.0 + REL_TOL


def pulse_frame_params(F: float, beta, c_v: float = 1.0) -> PulseFrameParams:
    beta = _as_beta(beta)
    _check_F(F)
    _check_cv(c_v)
    den = 1.0 - F * beta * beta
    if abs(den) <= REL_TOL:
        raise SingularityError("coordinate degeneration of the pulse form (F beta^2 = 1)")
    c_p = c_v * math.sqrt(F) * (1.0 - beta * beta) / den
    v = c_v * beta * (F - 1.0) / den
    return PulseFrameParams(c_p=c_p, v_pulse=v)


def pulse_metric(p: PulseFrameParams) -> MetricCoefficients:
    """``ds^2 = -(c_p^2 - v^2) dt^2 + 2 v dt dz + dz^2``."""
    c_p, v = p.c_p, p.v_pulse
    return MetricCoefficients(g_tt=-(c_p - v) * (c_p + v), g_tz=v, g_zz=1.0)


def horizon_condition(p: PulseFrameParams, tol: float = HORIZON_TOL) -> bool:
    """True when ``c_p^2`` and ``v^2`` agree to relative tolerance ``tol``."""
    a, b = p.c_p * p.c_p, p.v_pulse * p.v_pulse
    scale = max(a, b)
    if scale == 0:
        return True
    if math.isinf(scale):
        return True
    return abs(a - b) <= tol * scale
