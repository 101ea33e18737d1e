"""
Process resource usage for routing runs.
"""
import logging
from typing import Any, Dict

import psutil

logger = logging.getLogger(__name__)


def get_process_metrics() -> Dict[str, Any]:
    """
    Collect resource usage of the current process using psutil.

    Returns:
        dict: resident and peak memory in MB, CPU seconds, thread count
    """
    try:
        process = psutil.Process()
        memory = process.memory_info()
        cpu = process.cpu_times()
        # Peak RSS is only reported on some platforms.
        peak = getattr(memory, "peak_wset", None) or getattr(memory, "hwm", None)
        return {
            "rss_mb": memory.rss / (1024 * 1024),
            "peak_rss_mb": (peak / (1024 * 1024)) if peak else None,
            "cpu_seconds": cpu.user + cpu.system,
            "threads": process.num_threads(),
        }
    except Exception as e:
        logger.error(f"Error collecting process metrics: {e}", exc_info=True)
        return {"error": "Failed to collect process metrics"}


def rss_mb() -> float:
    """Current resident set size in MB."""
    return psutil.Process().memory_info().rss / (1024 * 1024)


def log_process_metrics(label: str) -> Dict[str, Any]:
    metrics = get_process_metrics()
    if "error" not in metrics:
        logger.info(
            f"📊 {label}: rss={metrics['rss_mb']:.1f} MB, cpu={metrics['cpu_seconds']:.2f} s, "
            f"threads={metrics['threads']}."
        )
    return metrics
