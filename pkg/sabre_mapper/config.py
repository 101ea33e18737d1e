import logging
import os

from dotenv import find_dotenv, load_dotenv

logger = logging.getLogger(__name__)

# A .env in the working directory fills in whatever the shell did not set.
# This must run before Config reads the environment below.
load_dotenv(find_dotenv(usecwd=True))


def _env_int(name: str, default: int) -> int:
    raw = os.environ.get(name)
    if raw is None:
        return default
    try:
        return int(raw)
    except ValueError:
        logger.warning(f"⚠️ Ignoring {name}={raw!r}: not an integer; using {default}.")
        return default


class Config:
    """
    Unified configuration for the mapper.
    Reads settings from environment variables, falling back to the default
    search configuration. Search parameters stay raw strings here and are
    checked when RouterParams or the CLI options are built from them.
    """

    # --- Logging ---
    LOG_LEVEL = os.environ.get("LOG_LEVEL", "INFO").upper()
    LOG_FORMAT = "%(asctime)s [%(levelname)s] %(name)s: %(message)s"

    # --- Search parameters ---
    SABRE_SEED = os.environ.get("SABRE_SEED", "0")
    SABRE_RESTARTS = os.environ.get("SABRE_RESTARTS", "5")
    SABRE_TRAVERSALS = os.environ.get("SABRE_TRAVERSALS", "3")
    SABRE_EXTENDED_SET_SIZE = os.environ.get("SABRE_EXTENDED_SET_SIZE", "20")
    SABRE_LOOKAHEAD_WEIGHT = os.environ.get("SABRE_LOOKAHEAD_WEIGHT", "0.5")
    SABRE_DECAY_DELTA = os.environ.get("SABRE_DECAY_DELTA", "0.001")
    SABRE_DECAY_RESET = os.environ.get("SABRE_DECAY_RESET", "5")
    SABRE_HEURISTIC = os.environ.get("SABRE_HEURISTIC", "decay").lower()

    # --- Execution ---
    # Restarts are independent; >1 runs them on a thread pool.
    SABRE_WORKERS = os.environ.get("SABRE_WORKERS", "1")
    SABRE_EMIT = os.environ.get("SABRE_EMIT", "decomposed").lower()

    # --- Oracle guard ---
    ORACLE_MAX_LOGICAL = _env_int("ORACLE_MAX_LOGICAL", 6)
    ORACLE_MAX_PHYSICAL = _env_int("ORACLE_MAX_PHYSICAL", 6)
    ORACLE_MAX_TWO_QUBIT_GATES = _env_int("ORACLE_MAX_TWO_QUBIT_GATES", 10)
