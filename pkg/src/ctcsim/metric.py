"""Wire shape function and the reduced axial metric of a wire at rest.

Speeds are expressed in units of the vacuum light speed ``c_v`` unless a
different ``c_v`` is passed explicitly. The 1+1D line element is stored as
the symmetric metric components, so that

    ds^2 = g_tt dt^2 + 2 g_tz dt dz + g_zz dz^2.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import DomainError, SingularityError

__all__ = [
    "REL_TOL",
    "WireProfile",
    "MetricCoefficients",
    "TwoWireGeometry",
    "shape_function",
    "shape_function_derivative",
    "axial_light_speed",
    "axial_metric",
]

#: Relative tolerance for floating-point comparisons at region boundaries.
REL_TOL = 1e-12


@dataclass(frozen=True)
class WireProfile:
    """Radius ``R`` and integer exponent ``n`` of the wire shape function."""

    R: float
    n: int = 2

    def __post_init__(self):
        if not self.R > 0:
            raise DomainError(f"wire radius must be positive, got R={self.R}")
        if isinstance(self.n, bool) or int(self.n) != self.n or self.n < 2:
            raise DomainError(f"exponent must be an integer >= 2, got n={self.n}")
        object.__setattr__(self, "n", int(self.n))


@dataclass(frozen=True)
class MetricCoefficients:
    """Components of a 1+1D metric in (t, z) coordinates."""

    g_tt: float
    g_tz: float
    g_zz: float

    @property
    def determinant(self) -> float:
        return self.g_tt * self.g_zz - self.g_tz**2

    def is_lorentzian(self) -> bool:
        return self.determinant < 0

    def interval(self, dt: float, dz: float) -> float:
        """Line element ``ds^2`` for the displacement ``(dt, dz)``."""
        return self.g_tt * dt * dt + 2.0 * self.g_tz * dt * dz + self.g_zz * dz * dz

    def null_speeds(self) -> tuple[float, float]:
        """Both roots ``dz/dt`` of ``ds^2 = 0``, in ascending order.

        Uses the cancellation-free form of the quadratic formula. When
        ``g_zz`` vanishes one family is infinite and is returned as
        ``+inf``.
        """
        a, b, c = self.g_zz, 2.0 * self.g_tz, self.g_tt
        disc = b * b - 4.0 * a * c
        if disc < 0:
            raise DomainError("metric is not Lorentzian, no real null directions")
        if a == 0:
            if b == 0:
                raise SingularityError("degenerate metric")
            return tuple(sorted((-c / b, math.inf)))
        q = -0.5 * (b + math.copysign(math.sqrt(disc), b))
        if q == 0:
            return (0.0, 0.0)
        return tuple(sorted((q / a, c / q)))


@dataclass(frozen=True)
class TwoWireGeometry:
    """Separation ``d``, axial path length ``L`` and radius ``R`` of the two-wire setup.

    ``separation_ratio`` turns "d much smaller than L" into ``d <= L / separation_ratio``.
    """

    d: float
    L: float
    R: float
    separation_ratio: float = 100.0

    def __post_init__(self):
        if not (self.R > 0 and self.L > 0 and self.separation_ratio > 0):
            raise DomainError("R, L and separation_ratio must be positive")
        if not 2 * self.R < self.d:
            raise DomainError(f"wires overlap: need 2R < d, got R={self.R}, d={self.d}")
        if self.d > self.L / self.separation_ratio:
            raise DomainError(
                f"separation d={self.d} is not small against L={self.L} "
                f"(limit L/{self.separation_ratio:g})"
            )


def shape_function(profile: WireProfile, r: float) -> float:
    """Evaluate ``F(r) = 1 + (1/r - 1/R)^n`` inside the wire, 1 outside."""
    if not r > 0:
        raise DomainError(f"central singularity / unphysical radius r={r}")
    if r > profile.R:
        return 1.0
    return 1.0 + (1.0 / r - 1.0 / profile.R) ** profile.n


def shape_function_derivative(profile: WireProfile, r: float) -> float:
    """Analytic ``dF/dr``; zero outside the wire."""
    if not r > 0:
        raise DomainError(f"central singularity / unphysical radius r={r}")
    if r > profile.R:
        return 0.0
    n = profile.n
    return -n * (1.0 / r - 1.0 / profile.R) ** (n - 1) / (r * r)


def _check_F(F: float) -> None:
    if not F >= 1:
        raise DomainError(f"shape function value must be >= 1, got F={F}")


def _check_cv(c_v: float) -> None:
    if not c_v > 0:
        raise DomainError(f"c_v must be positive, got {c_v}")


def axial_light_speed(F: float, c_v: float = 1.0) -> float:
    """Coordinate light speed ``c_v * sqrt(F)`` along the wire axis."""
    _check_F(F)
    _check_cv(c_v)
    return c_v * math.sqrt(F)


def axial_metric(F: float, c_v: float = 1.0) -> MetricCoefficients:
    _check_F(F)
    _check_cv(c_v)
    return MetricCoefficients(g_tt=-c_v * c_v * F, g_tz=0.0, g_zz=1.0)
