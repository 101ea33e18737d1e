#!/usr/bin/env python3
"""
Benchmark runs for the mapper.

Produces:
  <out>/scalability.csv - QFT-pattern circuits routed on IBM Q20 Tokyo
  <out>/sweep.csv       - decay-increment sweep over dense random circuits
"""
import csv
import logging
import time
from pathlib import Path

import click
import numpy as np

from sabre_mapper.factory import configure_logging, create_router_params
from sabre_mapper.models.devices import ibm_q20_tokyo
from sabre_mapper.services.layout_service import best_of_restarts
from sabre_mapper.services.pipeline_service import sweep_circuit
from sabre_mapper.utils.generators import dense_random_circuit, qft_pattern
from sabre_mapper.utils.metrics import rss_mb
from sabre_mapper.utils.reporting import render_table
from sabre_mapper.validate.schemas import RunConfig

logger = logging.getLogger(__name__)

QFT_SIZES = (10, 13, 16, 20)
SWEEP_DELTAS = (0.0, 0.0005, 0.001, 0.005, 0.01)


def run_scalability(out_dir: Path, seed: int) -> float:
    device = ibm_q20_tokyo()
    params = create_router_params()
    results, names, runtimes = [], [], []
    for size in QFT_SIZES:
        circuit = qft_pattern(size)
        start = time.perf_counter()
        result = best_of_restarts(circuit, device, params, base_seed=seed)
        runtimes.append(time.perf_counter() - start)
        results.append(result)
        names.append(f"qft_{size}")
        logger.info(f"⏱️ qft_{size}: {runtimes[-1]:.2f} s, g_add={result.stats.g_add}, rss={rss_mb():.0f} MB.")

    slope = float(np.polyfit(np.log(QFT_SIZES), np.log(runtimes), 1)[0])
    with open(out_dir / "scalability.csv", "w", newline="") as f:
        writer = csv.writer(f)
        writer.writerow(["name", "n", "g_ori", "g_add", "d_ori", "d_out", "runtime_s"])
        for name, result, runtime in zip(names, results, runtimes):
            s = result.stats
            writer.writerow([name, s.n, s.g_ori, s.g_add, s.d_ori, s.d_out, f"{runtime:.4f}"])
    click.echo(render_table(results, names), nl=False)
    click.echo(f"log-log runtime slope: {slope:.2f}")
    return slope


def run_sweep_suite(out_dir: Path, seed: int) -> None:
    device = ibm_q20_tokyo()
    with open(out_dir / "sweep.csv", "w", newline="") as f:
        writer = csv.writer(f)
        writer.writerow(["circuit", "delta", "g_tot", "g_add", "depth", "g_tot_norm", "depth_norm"])
        for index, n in enumerate((15, 16, 17, 18, 20)):
            circuit = dense_random_circuit(n, layers=20, seed=seed + index)
            config = RunConfig(input_path="-", coupling=device.name, params=create_router_params(), seed=seed)
            for row in sweep_circuit(circuit, device, config, SWEEP_DELTAS):
                writer.writerow([f"dense_{n}", row.delta, row.g_tot, row.g_add, row.depth,
                                 f"{row.g_tot_norm:.4f}", f"{row.depth_norm:.4f}"])


@click.command()
@click.option("--out", "out_dir", default="results", show_default=True, type=click.Path(file_okay=False))
@click.option("--seed", default=0, show_default=True, type=click.IntRange(min=0))
@click.option("--skip-sweep", is_flag=True)
def main(out_dir: str, seed: int, skip_sweep: bool):
    configure_logging()
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    logger.info("🚀 Running scalability benchmark...")
    run_scalability(out, seed)
    if not skip_sweep:
        logger.info("🚀 Running decay sweep suite...")
        run_sweep_suite(out, seed)
    logger.info(f"✅ Results written to '{out}'.")


if __name__ == "__main__":
    main()
