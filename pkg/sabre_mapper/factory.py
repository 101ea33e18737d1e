import logging
from pathlib import Path
from typing import Any, Optional

from sabre_mapper.config import Config
from sabre_mapper.models.coupling_graph import CouplingGraph
from sabre_mapper.models.devices import builtin_device
from sabre_mapper.utils.coupling_io import load_coupling
from sabre_mapper.validate.schemas import RouterParams

logger = logging.getLogger(__name__)


def configure_logging(level: Optional[str] = None) -> None:
    """Configures root logging once for an entry point."""
    logging.basicConfig(level=(level or Config.LOG_LEVEL), format=Config.LOG_FORMAT)


def create_router_params(**overrides: Any) -> RouterParams:
    """
    Builds validated search parameters from the environment defaults.
    Keyword arguments set to None are ignored so CLI options can be passed through.
    """
    values = {
        "extended_set_size": Config.SABRE_EXTENDED_SET_SIZE,
        "lookahead_weight": Config.SABRE_LOOKAHEAD_WEIGHT,
        "decay_delta": Config.SABRE_DECAY_DELTA,
        "decay_reset_interval": Config.SABRE_DECAY_RESET,
        "restarts": Config.SABRE_RESTARTS,
        "traversals": Config.SABRE_TRAVERSALS,
        "heuristic": Config.SABRE_HEURISTIC,
    }
    values.update({k: v for k, v in overrides.items() if v is not None})
    return RouterParams.model_validate(values)


def load_device(spec: str) -> CouplingGraph:
    """Resolves `--coupling`: an existing file path wins over a builtin name."""
    path = Path(spec)
    if path.is_file():
        graph = load_coupling(path)
    else:
        graph = builtin_device(spec)
        logger.info(f"📡 Using builtin device '{graph.name}' ({graph.num_physical_qubits} qubits).")
    # Disconnected devices fail here, before any routing starts.
    _ = graph.distances
    return graph
