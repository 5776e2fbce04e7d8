"""Leader-wingman formation simulation with event-triggered model updates."""

from ._core import (
    AircraftState,
    AutopilotTimeConstants,
    CommandPair,
    CommsMode,
    ConfigError,
    DegenerateRangeError,
    ErrorState,
    EventRecord,
    FormationSpec,
    LinearizedSystem,
    NormScope,
    RelativeGeometry,
    RelativeRates,
    Scenario,
    ScheduleEntry,
    SimulationAbort,
    SimulationResult,
    StabilityCondition,
    StabilityVerdict,
    SummaryReport,
    TrajectoryLog,
    TrajectoryRow,
    TriggerConfig,
    XChannelGains,
    YChannelGains,
    build_linear_system,
    check_stability_x,
    check_stability_y,
    error_state,
    finite_difference_system,
    integrate_step,
    load_scenario,
    parse_scenario,
    relative_geometry,
    relative_rates,
    run_scenario,
    summarize,
)

__all__ = [
    "AircraftState",
    "AutopilotTimeConstants",
    "CommandPair",
    "CommsMode",
    "ConfigError",
    "DegenerateRangeError",
    "ErrorState",
    "EventRecord",
    "FormationSpec",
    "LinearizedSystem",
    "NormScope",
    "RelativeGeometry",
    "RelativeRates",
    "Scenario",
    "ScheduleEntry",
    "SimulationAbort",
    "SimulationResult",
    "StabilityCondition",
    "StabilityVerdict",
    "SummaryReport",
    "TrajectoryLog",
    "TrajectoryRow",
    "TriggerConfig",
    "XChannelGains",
    "YChannelGains",
    "build_linear_system",
    "check_stability_x",
    "check_stability_y",
    "error_state",
    "finite_difference_system",
    "integrate_step",
    "load_scenario",
    "parse_scenario",
    "relative_geometry",
    "relative_rates",
    "run_scenario",
    "summarize",
]
