from .exceptions import (
    SabreError,
    CircuitError,
    DeviceError,
    DisconnectedDeviceError,
    MappingError,
    RoutingError,
    QasmParseError,
    CouplingParseError,
    OracleLimitError,
    VerificationError,
)
from .schemas import (
    RouterParams,
    TraversalPlan,
    RunConfig,
    RoutingStats,
    Violation,
    VerificationReport,
    SweepRow,
)

__all__ = [
    "SabreError", "CircuitError", "DeviceError", "DisconnectedDeviceError",
    "MappingError", "RoutingError", "QasmParseError", "CouplingParseError",
    "OracleLimitError", "VerificationError",
    "RouterParams", "TraversalPlan", "RunConfig", "RoutingStats",
    "Violation", "VerificationReport", "SweepRow",
]
