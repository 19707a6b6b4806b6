"""SQUID-array transmission line: flux-tuned light speed and flux synthesis.

All fluxes are fractions of the flux quantum. The DC bias fixes the
simulated vacuum speed ``c_v = c0 sqrt(cos(pi dc))``; the AC part shapes
``F = sec(pi dc) cos(pi (dc + ac))`` on top of it. Because the line speed
obeys a cosine dispersion, ``c^2`` can never be negative, which is what
:func:`feasibility_report` turns into a ``CHRONOLOGY_PROTECTED`` verdict.

Two flux bounds are tracked separately. ``flux_ceiling`` (0.45 by default)
limits the DC bias, which is the setting that yields the ~2.5 ``c_v``
speed ceiling. ``total_flux_limit`` bounds the total flux and defaults to
the hard wall at one half, where the junction inductance diverges.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field
from typing import Sequence

from .boost import PulseFrameParams
from .errors import DomainError
from .metric import WireProfile, shape_function

__all__ = [
    "DEFAULT_FLUX_CEILING",
    "HARD_FLUX_WALL",
    "FluxOutOfRangeError",
    "SquidArrayParams",
    "FluxProfile",
    "Verdict",
    "FeasibilityReport",
    "squid_inductance",
    "line_speed",
    "speed_decomposition",
    "shape_from_flux",
    "synthesize_flux_for_F",
    "max_speed_ratio",
    "feasibility_for_F",
    "feasibility_report",
    "pulse_feasibility_report",
    "wire_flux_profile",
]

DEFAULT_FLUX_CEILING = 0.45
HARD_FLUX_WALL = 0.5

_ARCCOS_SLACK = 1e-12
ABS_C_P_ADVISORY = (
    "c_p enters the pulse metric squared, so |c_p| can replace a negative "
    "background speed; a pulse of negative velocity is still required"
)


class FluxOutOfRangeError(DomainError):
    """A requested or synthesized flux lies beyond the allowed bound."""


@dataclass(frozen=True)
class SquidArrayParams:
    """Transmission-line constants.

    ``I_c`` and ``C_s`` are only used to report inductances; speeds are
    computed from ``c0`` directly.
    """

    c0: float = 1.0
    I_c: float = 1.0
    C_s: float = 1.0
    flux_ceiling: float = DEFAULT_FLUX_CEILING
    total_flux_limit: float = HARD_FLUX_WALL

    def __post_init__(self):
        if not self.c0 > 0:
            raise DomainError("c0 must be positive")
        if not (self.I_c > 0 and self.C_s > 0):
            raise DomainError("I_c and C_s must be positive")
        if not 0 < self.flux_ceiling < HARD_FLUX_WALL:
            raise DomainError("flux_ceiling must lie in (0, 0.5)")
        if not 0 < self.total_flux_limit <= HARD_FLUX_WALL:
            raise DomainError("total_flux_limit must lie in (0, 0.5]")


def _check_total(total: float, limit: float) -> None:
    if abs(total) > limit or abs(total) >= HARD_FLUX_WALL:
        raise FluxOutOfRangeError(
            f"total flux {total:.12g} exceeds the bound {min(limit, HARD_FLUX_WALL):g}"
        )


def _check_dc(dc: float, ceiling: float) -> None:
    if not abs(dc) <= ceiling:
        raise FluxOutOfRangeError(f"DC bias {dc:.12g} exceeds the ceiling {ceiling:g}")


@dataclass(frozen=True)
class FluxProfile:
    """DC bias plus AC samples ``(r, t, ac)``, all as flux fractions."""

    dc: float
    ac_samples: Sequence[tuple[float, float, float]] | float = 0.0
    params: SquidArrayParams = field(default_factory=SquidArrayParams)

    def __post_init__(self):
        _check_dc(self.dc, self.params.flux_ceiling)
        if isinstance(self.ac_samples, (int, float)):
            _check_total(self.dc + self.ac_samples, self.params.total_flux_limit)
        else:
            object.__setattr__(self, "ac_samples", tuple(tuple(s) for s in self.ac_samples))
            for _, _, ac in self.ac_samples:
                _check_total(self.dc + ac, self.params.total_flux_limit)

    def total_samples(self) -> list[tuple[float, float, float]]:
        """Rows ``(r, t, total flux fraction)``."""
        if isinstance(self.ac_samples, (int, float)):
            return [(math.nan, math.nan, self.dc + self.ac_samples)]
        return [(r, t, self.dc + ac) for r, t, ac in self.ac_samples]


class Verdict(str, enum.Enum):
    FEASIBLE = "FEASIBLE"
    CHRONOLOGY_PROTECTED = "CHRONOLOGY_PROTECTED"
    OUT_OF_RANGE = "OUT_OF_RANGE"

    def __str__(self):
        return self.value


@dataclass(frozen=True)
class FeasibilityReport:
    verdict: Verdict
    reason: str
    limiting_quantity: tuple[str, float] | None = None
    ac: float | None = None
    total: float | None = None
    advisory: str | None = None

    @property
    def feasible(self) -> bool:
        return self.verdict is Verdict.FEASIBLE

    def as_dict(self) -> dict:
        lim = None
        if self.limiting_quantity is not None:
            lim = {"name": self.limiting_quantity[0], "value": self.limiting_quantity[1]}
        return {
            "verdict": self.verdict.value,
            "reason": self.reason,
            "limiting_quantity": lim,
            "ac": self.ac,
            "total": self.total,
            "advisory": self.advisory,
        }


def squid_inductance(phi_fraction: float, I_c: float = 1.0, phi0: float = 1.0) -> float:
    """Junction inductance ``phi0 / (4 pi I_c cos(pi phi))`` in the weak-signal limit."""
    if not abs(phi_fraction) < HARD_FLUX_WALL:
        raise FluxOutOfRangeError(f"junction inductance diverges at flux {phi_fraction}")
    return phi0 / (4.0 * math.pi * I_c * math.cos(math.pi * phi_fraction))


def line_speed(phi_fraction: float, c0: float = 1.0,
               ceiling: float = DEFAULT_FLUX_CEILING) -> float:
    """Propagation speed ``c0 sqrt(cos(pi phi))`` at flux ``phi``."""
    if not abs(phi_fraction) <= min(ceiling, HARD_FLUX_WALL):
        raise FluxOutOfRangeError(f"flux {phi_fraction} beyond the ceiling {ceiling}")
    return c0 * math.sqrt(max(math.cos(math.pi * phi_fraction), 0.0))


def speed_decomposition(dc: float, total: float, c0: float = 1.0) -> tuple[float, float]:
    """Split the line speed at ``total`` flux into the DC speed and the dimensionless factor."""
    if not abs(dc) < HARD_FLUX_WALL:
        raise FluxOutOfRangeError(f"DC phase outside (-pi/2, pi/2): dc={dc}")
    if not abs(total) <= HARD_FLUX_WALL:
        raise FluxOutOfRangeError(f"total phase outside [-pi/2, pi/2]: total={total}")
    cos_dc = math.cos(math.pi * dc)
    c_dc = c0 * math.sqrt(cos_dc)
    c_tilde = math.sqrt(max(math.cos(math.pi * total), 0.0) / cos_dc)
    return c_dc, c_tilde


def shape_from_flux(dc: float, total: float) -> float:
    """Simulated shape value ``sec(pi dc) cos(pi total)``."""
    return math.cos(math.pi * total) / math.cos(math.pi * dc)


def synthesize_flux_for_F(F_target: float, dc: float,
                          params: SquidArrayParams | None = None) -> float:
    """AC flux fraction that realises ``F_target`` on top of the DC bias ``dc``.

    Uses the principal arccos branch, so the total flux is in ``[0, 0.5]``.
    """
    params = params or SquidArrayParams()
    if not F_target > 0:
        raise DomainError(f"F_target must be positive, got {F_target}")
    _check_dc(dc, params.flux_ceiling)
    arg = F_target * math.cos(math.pi * dc)
    if arg > 1.0 + _ARCCOS_SLACK:
        raise FluxOutOfRangeError(
            f"F_target={F_target:.12g} above the maximum {1 / math.cos(math.pi * dc):.12g} "
            f"for dc={dc:g}"
        )
    total = math.acos(min(arg, 1.0)) / math.pi
    _check_total(total, params.total_flux_limit)
    return total - dc


def max_speed_ratio(dc: float, ceiling: float = DEFAULT_FLUX_CEILING) -> float:
    """Largest reachable ``c_z / c_v``, attained at zero total flux."""
    _check_dc(dc, ceiling)
    return math.sqrt(1.0 / math.cos(math.pi * dc))


def feasibility_for_F(F_target: float, dc: float,
                      params: SquidArrayParams | None = None) -> FeasibilityReport:
    """Whether the line can emulate a squared speed ratio ``F_target``."""
    params = params or SquidArrayParams()
    if not abs(dc) <= params.flux_ceiling:
        return FeasibilityReport(Verdict.OUT_OF_RANGE, "dc_bias_above_ceiling",
                                 ("dc", dc))
    if F_target < 0:
        return FeasibilityReport(
            Verdict.CHRONOLOGY_PROTECTED, "negative_squared_speed",
            ("F_target", F_target),
        )
    F_max = 1.0 / math.cos(math.pi * dc)
    if F_target > F_max * (1.0 + _ARCCOS_SLACK):
        return FeasibilityReport(Verdict.OUT_OF_RANGE, "above_max_speed",
                                 ("speed_ratio", math.sqrt(F_target)))
    if F_target == 0:
        return FeasibilityReport(Verdict.OUT_OF_RANGE, "total_flux_limit",
                                 ("total", HARD_FLUX_WALL))
    try:
        ac = synthesize_flux_for_F(F_target, dc, params)
    except FluxOutOfRangeError:
        total = math.acos(min(F_target * math.cos(math.pi * dc), 1.0)) / math.pi
        return FeasibilityReport(Verdict.OUT_OF_RANGE, "total_flux_limit",
                                 ("total", total))
    return FeasibilityReport(Verdict.FEASIBLE, "ok", None, ac=ac, total=dc + ac)


def feasibility_report(target_speed: float, dc: float,
                       params: SquidArrayParams | None = None) -> FeasibilityReport:
    """Whether the line can emulate a signed light speed (in units of ``c_v``).

    A negative target would need ``c^2 < 0`` from a cosine dispersion and
    is reported as ``CHRONOLOGY_PROTECTED``.
    """
    if target_speed < 0:
        return FeasibilityReport(
            Verdict.CHRONOLOGY_PROTECTED, "negative_effective_light_speed",
            ("target_speed", target_speed),
        )
    report = feasibility_for_F(target_speed * target_speed, dc, params)
    if report.verdict is Verdict.OUT_OF_RANGE and report.reason == "above_max_speed":
        return FeasibilityReport(Verdict.OUT_OF_RANGE, "above_max_speed",
                                 ("speed_ratio", target_speed))
    return report


def pulse_feasibility_report(p: PulseFrameParams, dc: float,
                             params: SquidArrayParams | None = None) -> FeasibilityReport:
    """Feasibility of a pulse-frame emulation (speeds in units of ``c_v``).

    The pulse travels on an unbiased line, so its speed is capped by
    ``c0``, which is ``max_speed_ratio(dc)`` in ``c_v`` units.
    """
    params = params or SquidArrayParams()
    advisory = ABS_C_P_ADVISORY if p.c_p < 0 else None
    if p.v_pulse < 0:
        return FeasibilityReport(
            Verdict.CHRONOLOGY_PROTECTED, "negative_pulse_velocity",
            ("v_pulse", p.v_pulse), advisory=advisory,
        )
    background = feasibility_report(p.abs_c_p, dc, params)
    if not background.feasible:
        return FeasibilityReport(background.verdict, background.reason,
                                 background.limiting_quantity, advisory=advisory)
    ceiling = max_speed_ratio(dc, params.flux_ceiling)
    if p.v_pulse > ceiling:
        return FeasibilityReport(Verdict.OUT_OF_RANGE, "pulse_faster_than_c0",
                                 ("v_pulse", p.v_pulse), advisory=advisory)
    return FeasibilityReport(Verdict.FEASIBLE, "ok", None, background.ac,
                             background.total, advisory)


def wire_flux_profile(profile: WireProfile, dc: float, r_values, t: float = 0.0,
                      params: SquidArrayParams | None = None) -> FluxProfile:
    """Static AC flux samples emulating the shape function of a wire at rest."""
    params = params or SquidArrayParams()
    samples = []
    for r in r_values:
        F = shape_function(profile, float(r))
        try:
            ac = synthesize_flux_for_F(F, dc, params)
        except FluxOutOfRangeError as exc:
            raise FluxOutOfRangeError(f"r={float(r):.12g}: {exc}") from None
        samples.append((float(r), float(t), ac))
    return FluxProfile(dc=dc, ac_samples=samples, params=params)
