import logging
from pathlib import Path
from typing import List, Optional, Tuple, Union

from sabre_mapper.models.coupling_graph import CouplingGraph, build_graph
from sabre_mapper.validate.exceptions import CouplingParseError, DeviceError

logger = logging.getLogger(__name__)


def parse_coupling(text: str, name: str = "custom") -> CouplingGraph:
    """
    Parses the coupling-graph text format: the first non-comment line holds
    N, then one `u v` pair per line. `#` starts a comment. Duplicates are
    ignored. Connectivity is checked later, when distances are computed.
    """
    num_qubits: Optional[int] = None
    edges: List[Tuple[int, int]] = []

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        fields = line.split()
        if num_qubits is None:
            if len(fields) != 1 or not fields[0].isdigit():
                raise CouplingParseError(f"expected the qubit count, got '{line}'", lineno)
            num_qubits = int(fields[0])
            continue
        if len(fields) != 2 or not all(f.isdigit() for f in fields):
            raise CouplingParseError(f"expected 'u v', got '{line}'", lineno)
        u, v = int(fields[0]), int(fields[1])
        if u >= num_qubits or v >= num_qubits:
            raise CouplingParseError(f"edge ({u}, {v}) out of range for {num_qubits} qubits", lineno)
        edges.append((u, v))

    if num_qubits is None:
        raise CouplingParseError("missing qubit count", 0)
    try:
        return build_graph(num_qubits, edges, name=name)
    except DeviceError as e:
        raise CouplingParseError(str(e), 0) from e


def load_coupling(path: Union[str, Path]) -> CouplingGraph:
    path = Path(path)
    graph = parse_coupling(path.read_text(), name=path.stem)
    logger.info(f"📡 Loaded coupling graph '{graph.name}' ({graph.num_physical_qubits} qubits, {len(graph.edges)} edges).")
    return graph


def write_coupling(graph: CouplingGraph) -> str:
    lines = [f"# {graph.name}", str(graph.num_physical_qubits)]
    lines.extend(f"{a} {b}" for a, b in graph.sorted_edges())
    return "\n".join(lines) + "\n"
