# sabre_mapper/constants.py

from enum import Enum, IntEnum


class GateKind(Enum):
    CNOT = "CNOT"
    SWAP = "SWAP"
    SINGLE = "SINGLE"
    MEASURE = "MEASURE"


class EmitForm(Enum):
    SWAP = "swap"
    DECOMPOSED = "decomposed"


class HeuristicKind(Enum):
    BASIC = "basic"
    LOOKAHEAD = "lookahead"
    DECAY = "decay"


class ExitCode(IntEnum):
    OK = 0
    USAGE = 1
    PARSE = 2
    ROUTE = 3
    VERIFY = 4


TWO_QUBIT_KINDS = frozenset({GateKind.CNOT, GateKind.SWAP})

# Gate name -> number of literal parameters accepted by the QASM subset.
SINGLE_QUBIT_GATES = {
    "id": 0, "h": 0, "x": 0, "y": 0, "z": 0,
    "s": 0, "sdg": 0, "t": 0, "tdg": 0,
    "rx": 1, "ry": 1, "rz": 1,
    "u1": 1, "u2": 2, "u3": 3,
}

SWAP_CNOT_COST = 3
TIE_TOLERANCE = 1e-9
