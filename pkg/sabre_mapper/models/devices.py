import logging
import re
from functools import lru_cache
from pathlib import Path
from typing import Dict, List

from sabre_mapper.models.coupling_graph import CouplingGraph, build_graph
from sabre_mapper.validate.exceptions import DeviceError

logger = logging.getLogger(__name__)

DATA_DIR = Path(__file__).resolve().parent.parent / "data"
_LINE_PATTERN = re.compile(r"^line(\d+)$")

BUILTIN_DEVICES: Dict[str, str] = {
    "ibm-q20-tokyo": "IBM Q20 Tokyo, 20 qubits, 43 symmetric couplers",
    "ring4": "4-qubit ring (Q0-Q1-Q3-Q2-Q0)",
    "grid3x3": "3x3 nearest-neighbour grid, 12 couplers",
    "line<N>": "path on N qubits, e.g. line5",
}


def ring4() -> CouplingGraph:
    # 0-based relabeling of {Q1,Q2},{Q2,Q4},{Q4,Q3},{Q3,Q1}
    return build_graph(4, [(0, 1), (1, 3), (3, 2), (2, 0)], name="ring4")


def grid(rows: int, cols: int) -> CouplingGraph:
    edges = []
    for r in range(rows):
        for c in range(cols):
            q = r * cols + c
            if c + 1 < cols:
                edges.append((q, q + 1))
            if r + 1 < rows:
                edges.append((q, q + cols))
    return build_graph(rows * cols, edges, name=f"grid{rows}x{cols}")


def line(num_qubits: int) -> CouplingGraph:
    return build_graph(num_qubits, [(i, i + 1) for i in range(num_qubits - 1)], name=f"line{num_qubits}")


def fully_connected(num_qubits: int) -> CouplingGraph:
    edges = [(a, b) for a in range(num_qubits) for b in range(a + 1, num_qubits)]
    return build_graph(num_qubits, edges, name=f"full{num_qubits}")


@lru_cache(maxsize=None)
def ibm_q20_tokyo() -> CouplingGraph:
    from sabre_mapper.utils.coupling_io import parse_coupling

    text = (DATA_DIR / "ibm_q20_tokyo.coupling").read_text()
    return parse_coupling(text, name="ibm-q20-tokyo")


def builtin_device(name: str) -> CouplingGraph:
    """Returns a bundled topology by name."""
    key = name.strip().lower()
    if key == "ibm-q20-tokyo":
        return ibm_q20_tokyo()
    if key == "ring4":
        return ring4()
    if key == "grid3x3":
        return grid(3, 3)
    match = _LINE_PATTERN.match(key)
    if match and int(match.group(1)) >= 1:
        return line(int(match.group(1)))
    raise DeviceError(f"Unknown builtin device '{name}'. Known: {', '.join(BUILTIN_DEVICES)}.")


def list_devices() -> List[str]:
    return list(BUILTIN_DEVICES)
