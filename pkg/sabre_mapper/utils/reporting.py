import csv
import io
import json
import logging
from pathlib import Path
from typing import Iterable, List, Optional, Sequence, Union

from sabre_mapper.models.routed_circuit import RoutedCircuit
from sabre_mapper.validate.schemas import SweepRow

logger = logging.getLogger(__name__)

SWEEP_COLUMNS = ["delta", "g_tot", "g_add", "depth", "g_tot_norm", "depth_norm"]

_TABLE_COLUMNS = [
    ("name", "{:<16}"),
    ("n", "{:>3}"),
    ("g_ori", "{:>7}"),
    ("d_ori", "{:>7}"),
    ("g_first", "{:>7}"),
    ("g_add", "{:>7}"),
    ("g_tot", "{:>7}"),
    ("d_out", "{:>7}"),
    ("t_first", "{:>9}"),
    ("t_total", "{:>9}"),
]


def stats_json(result: RoutedCircuit) -> str:
    return json.dumps(result.stats_payload(), indent=2) + "\n"


def write_stats(result: RoutedCircuit, path: Union[str, Path]) -> None:
    path = Path(path)
    path.write_text(stats_json(result))
    logger.info(f"💾 Wrote stats to '{path}'.")


def render_table(results: Sequence[RoutedCircuit], names: Optional[Sequence[str]] = None) -> str:
    """Benchmark table: one row per routed circuit, runtimes in seconds."""
    names = list(names) if names is not None else [f"circuit{i}" for i in range(len(results))]
    header = " ".join(fmt.format(col) for col, fmt in _TABLE_COLUMNS)
    lines = [header, "-" * len(header)]
    for name, result in zip(names, results):
        s = result.stats
        values = [
            name,
            s.n,
            s.g_ori,
            s.d_ori,
            "-" if s.g_first is None else s.g_first,
            s.g_add,
            s.g_tot,
            s.d_out,
            "-" if s.runtime_first_ms is None else f"{s.runtime_first_ms / 1000.0:.3f}",
            f"{s.runtime_ms / 1000.0:.3f}",
        ]
        lines.append(" ".join(fmt.format(v) for (_, fmt), v in zip(_TABLE_COLUMNS, values)))
    return "\n".join(lines) + "\n"


def sweep_row(delta: float, result: RoutedCircuit) -> SweepRow:
    s = result.stats
    return SweepRow(
        delta=delta,
        g_tot=s.g_tot,
        g_add=s.g_add,
        depth=s.d_out,
        g_tot_norm=s.g_tot / s.g_ori if s.g_ori else 1.0,
        depth_norm=s.d_out / s.d_ori if s.d_ori else 1.0,
    )


def sweep_csv(rows: Iterable[SweepRow]) -> str:
    buffer = io.StringIO()
    writer = csv.DictWriter(buffer, fieldnames=SWEEP_COLUMNS, lineterminator="\n")
    writer.writeheader()
    for row in rows:
        writer.writerow(row.model_dump())
    return buffer.getvalue()


def write_sweep_csv(rows: List[SweepRow], path: Union[str, Path]) -> None:
    path = Path(path)
    path.write_text(sweep_csv(rows))
    logger.info(f"💾 Wrote {len(rows)} sweep row(s) to '{path}'.")
