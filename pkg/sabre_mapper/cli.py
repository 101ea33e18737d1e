import json
import logging
from pathlib import Path
from typing import Dict, Optional

import click
from pydantic import ValidationError

from sabre_mapper import __version__
from sabre_mapper.config import Config
from sabre_mapper.constants import EmitForm, ExitCode, HeuristicKind
from sabre_mapper.factory import configure_logging, create_router_params
from sabre_mapper.models.devices import BUILTIN_DEVICES
from sabre_mapper.services.pipeline_service import run_oracle, run_route, run_sweep, run_verify
from sabre_mapper.utils.reporting import render_table, sweep_csv, write_sweep_csv
from sabre_mapper.validate.exceptions import SabreError
from sabre_mapper.validate.schemas import RunConfig

logger = logging.getLogger(__name__)

DEFAULT_DELTAS = "0,0.0005,0.001,0.005,0.01"


class SabreGroup(click.Group):
    """Command group that turns mapper errors into the documented exit codes."""

    def invoke(self, ctx: click.Context):
        try:
            return super().invoke(ctx)
        except click.UsageError as e:
            e.exit_code = ExitCode.USAGE
            raise
        except ValidationError as e:
            click.echo(f"Error: invalid configuration: {e}", err=True)
            ctx.exit(ExitCode.USAGE)
        except SabreError as e:
            logger.error(f"❌ {type(e).__name__}: {e}")
            click.echo(f"Error: {e}", err=True)
            ctx.exit(int(e.exit_code))


def parse_mapping_option(value: Optional[str]) -> Optional[Dict[int, int]]:
    """`--initial-mapping 3,2,0,1` places logical qubit i on the i-th listed physical qubit."""
    if not value:
        return None
    try:
        return {q: int(p) for q, p in enumerate(value.split(","))}
    except ValueError:
        raise click.BadParameter(f"expected comma-separated physical indices, got '{value}'")


def _mapping_from_stats(path: Optional[str]) -> Optional[Dict[int, int]]:
    if not path:
        return None
    payload = json.loads(Path(path).read_text())
    return {int(q): int(p) for q, p in payload["initial_mapping"].items()}


def routing_options(func):
    """Options shared by `route` and `sweep`."""
    options = [
        click.option("--input", "input_path", required=True, type=click.Path(exists=True, dir_okay=False),
                     help="OpenQASM 2.0 source circuit."),
        click.option("--coupling", required=True, help="Coupling file or builtin device name."),
        click.option("--seed", type=click.IntRange(min=0), envvar="SABRE_SEED", default=Config.SABRE_SEED,
                     show_default=True, help="Base seed of the restarts."),
        click.option("--restarts", type=int, default=None, help=f"Default {Config.SABRE_RESTARTS}."),
        click.option("--traversals", type=int, default=None, help=f"Odd; default {Config.SABRE_TRAVERSALS}."),
        click.option("--extended-set-size", type=int, default=None,
                     help=f"Default {Config.SABRE_EXTENDED_SET_SIZE}."),
        click.option("--weight", type=float, default=None, help=f"Default {Config.SABRE_LOOKAHEAD_WEIGHT}."),
        click.option("--decay-delta", type=float, default=None, help=f"Default {Config.SABRE_DECAY_DELTA}."),
        click.option("--decay-reset", type=int, default=None, help=f"Default {Config.SABRE_DECAY_RESET}."),
        click.option("--heuristic", type=click.Choice([h.value for h in HeuristicKind]), default=None),
        click.option("--workers", type=click.IntRange(min=1), default=Config.SABRE_WORKERS, show_default=True),
        click.option("--initial-mapping", default=None, help="Fixed start mapping, e.g. 3,2,0,1."),
        click.option("--no-verify", is_flag=True, help="Skip the post-route self-check."),
    ]
    for option in reversed(options):
        func = option(func)
    return func


def build_run_config(**kwargs) -> RunConfig:
    params = create_router_params(
        restarts=kwargs.pop("restarts"),
        traversals=kwargs.pop("traversals"),
        extended_set_size=kwargs.pop("extended_set_size"),
        lookahead_weight=kwargs.pop("weight"),
        decay_delta=kwargs.pop("decay_delta"),
        decay_reset_interval=kwargs.pop("decay_reset"),
        heuristic=kwargs.pop("heuristic"),
    )
    return RunConfig(
        params=params,
        verify=not kwargs.pop("no_verify"),
        initial_mapping=parse_mapping_option(kwargs.pop("initial_mapping")),
        **kwargs,
    )


@click.group(cls=SabreGroup)
@click.option("--log-level", default=None, help=f"Default {Config.LOG_LEVEL}.")
@click.version_option(version=__version__)
def cli(log_level: Optional[str]):
    """SWAP-based qubit mapping for coupling-constrained devices."""
    configure_logging(log_level.upper() if log_level else None)


@cli.command()
@routing_options
@click.option("--output", "output_path", default=None, help="Routed QASM path; stdout when omitted.")
@click.option("--stats", "stats_path", default=None, help="Stats JSON path.")
@click.option("--emit", type=click.Choice([f.value for f in EmitForm]), default=Config.SABRE_EMIT,
              show_default=True)
@click.option("--table", is_flag=True, help="Print a benchmark-style stats table.")
def route(**kwargs):
    """Route a circuit onto a device."""
    config = build_run_config(**kwargs)
    outcome = run_route(config)
    if not config.output_path:
        click.echo(outcome.qasm, nl=False)
    if config.table:
        click.echo(render_table([outcome.result], [Path(config.input_path).stem]), nl=False)
    logger.info(
        f"✅ Routed with {outcome.result.stats.swaps} SWAP(s): g_tot={outcome.result.stats.g_tot}, "
        f"depth {outcome.result.stats.d_ori} -> {outcome.result.stats.d_out}."
    )


@cli.command()
@routing_options
@click.option("--deltas", default=DEFAULT_DELTAS, show_default=True, help="Comma-separated decay increments.")
@click.option("--output", "output_path", default=None, help="CSV path; stdout when omitted.")
def sweep(deltas: str, **kwargs):
    """Route once per decay increment and report the gate/depth trade-off."""
    try:
        values = [float(d) for d in deltas.split(",") if d.strip()]
    except ValueError:
        raise click.BadParameter(f"expected comma-separated numbers, got '{deltas}'", param_hint="--deltas")
    if not values:
        raise click.BadParameter("at least one delta is required", param_hint="--deltas")
    config = build_run_config(**kwargs)
    rows = run_sweep(config, values)
    if config.output_path:
        write_sweep_csv(rows, config.output_path)
    else:
        click.echo(sweep_csv(rows), nl=False)


@cli.command()
@click.option("--input", "input_path", required=True, type=click.Path(exists=True, dir_okay=False))
@click.option("--routed", "routed_path", required=True, type=click.Path(exists=True, dir_okay=False))
@click.option("--coupling", required=True)
@click.option("--stats", "stats_path", default=None, type=click.Path(exists=True, dir_okay=False),
              help="Stats JSON whose initial_mapping the routed file starts from.")
@click.option("--initial-mapping", default=None)
def verify(input_path: str, routed_path: str, coupling: str, stats_path: Optional[str],
           initial_mapping: Optional[str]):
    """Check a routed file for hardware compliance and equivalence."""
    mapping = parse_mapping_option(initial_mapping) or _mapping_from_stats(stats_path)
    report = run_verify(input_path, routed_path, coupling, mapping)
    click.echo(report.model_dump_json(indent=2))
    if not report.ok:
        raise click.exceptions.Exit(ExitCode.VERIFY)


@cli.command()
@click.option("--input", "input_path", required=True, type=click.Path(exists=True, dir_okay=False))
@click.option("--coupling", required=True)
@click.option("--initial-mapping", default=None, help="Fixed start mapping; all placements when omitted.")
def oracle(input_path: str, coupling: str, initial_mapping: Optional[str]):
    """Exhaustive minimum SWAP count for tiny instances."""
    click.echo(run_oracle(input_path, coupling, parse_mapping_option(initial_mapping)))


@cli.command()
def devices():
    """List builtin devices."""
    for name, description in BUILTIN_DEVICES.items():
        click.echo(f"{name:<16} {description}")
