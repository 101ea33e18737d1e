from typing import Iterable, Optional

from sabre_mapper.constants import ExitCode


class SabreError(Exception):
    """Base class for every error raised by the mapper."""
    exit_code = ExitCode.ROUTE


class CircuitError(SabreError):
    """Raised when a gate or circuit violates the circuit model."""
    exit_code = ExitCode.PARSE


class DeviceError(SabreError):
    """Raised for malformed coupling graphs or unknown builtin devices."""
    exit_code = ExitCode.PARSE


class DisconnectedDeviceError(DeviceError):
    """Raised when the coupling graph has more than one component."""
    exit_code = ExitCode.ROUTE


class MappingError(SabreError):
    """Raised for invalid logical/physical mappings."""
    pass


class RoutingError(SabreError):
    """Raised when routing cannot proceed. Carries the stuck front layer."""

    def __init__(self, message: str, front_layer: Optional[Iterable[int]] = None):
        super().__init__(message)
        self.front_layer = sorted(front_layer) if front_layer is not None else []


class QasmParseError(SabreError):
    """Raised for QASM syntax, range or unsupported-feature errors."""
    exit_code = ExitCode.PARSE

    def __init__(self, message: str, line: int = 0, column: int = 0):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column


class CouplingParseError(SabreError):
    """Raised for malformed coupling-graph files."""
    exit_code = ExitCode.PARSE

    def __init__(self, message: str, line: int = 0):
        super().__init__(f"line {line}: {message}")
        self.line = line


class OracleLimitError(SabreError):
    """Raised when an instance is too large for the exhaustive oracle."""
    pass


class VerificationError(SabreError):
    """Raised when a routed circuit fails compliance or equivalence checks."""
    exit_code = ExitCode.VERIFY

    def __init__(self, message: str, report=None):
        super().__init__(message)
        self.report = report
