"""Closed timelike curves in analogue simulators.

Closed-form tools for the two-wire CTC spacetime, its emulation on a
flux-tuned SQUID transmission line (where negative light speeds, and so
CTCs, are out of reach) and on superluminal optical scattering sources
(where they are not).
"""

from .boost import (
    BoostParameter,
    PulseFrameParams,
    boosted_metric,
    gamma,
    horizon_condition,
    lorentz_transform,
    negative_time_condition,
    null_speed_backward,
    null_speed_forward,
    pulse_frame_params,
    pulse_metric,
)
from .ctc import (
    RegionLabel,
    ScanGrid,
    classify_parameters,
    classify_point,
    ctc_threshold_beta,
    ctc_threshold_beta_general,
    round_trip_time,
    scan_figure2,
    scan_figure3,
    symmetric_beta,
)
from .errors import CTCConditionError, DomainError, InconsistentAssemblyError, SingularityError
from .metric import (
    MetricCoefficients,
    TwoWireGeometry,
    WireProfile,
    axial_light_speed,
    axial_metric,
    shape_function,
)
from .optics import (
    DesignMode,
    ScatterTimeline,
    SurfaceAssembly,
    angle_for_boosted_wire,
    angle_for_rest_wire,
    design_ctc_assembly,
    scatter_speed,
    simulate_wavefront,
)
from .squid import (
    FeasibilityReport,
    FluxProfile,
    SquidArrayParams,
    Verdict,
    feasibility_report,
    line_speed,
    max_speed_ratio,
    speed_decomposition,
    squid_inductance,
    synthesize_flux_for_F,
)

__version__ = "0.1.0"
