"""
Command line front-end for the Measurable Function Ring Auditor
Runs constructions and proposition audits on space descriptions and prints
deterministic text or structured reports.

Exit codes: 0 pass, 1 audit failure, 2 input error, 3 resource cap exceeded.
"""

import functools
import logging
import os
import sys
from typing import Callable, Optional

import click

from audit_config import configure_logging, get_settings
from measurable.audits import audit_report
from measurable.errors import InputError, MeasurabilityError, MeasurableError, ResourceCapError
from measurable.fn_ring import FunctionSample
from measurable.quotient_duality import (
    is_t_measurable, rings_isomorphic, spaces_homeomorphic, spectrum, t_quotient
)
from measurable.sweep import run_sweep
from utils.doc_utils import doc_functions, load_space_doc, space_from_doc
from utils.report_utils import (
    generate_payload, iso_payload, quotient_payload, render_payload_text, render_report_text,
    render_structured, spectrum_payload
)

logger = logging.getLogger(__name__)

EXIT_PASS = 0
EXIT_AUDIT_FAILURE = 1
EXIT_INPUT_ERROR = 2
EXIT_RESOURCE_CAP = 3

format_option = click.option('--format', 'fmt', type=click.Choice(['text', 'structured']),
                             default='text', show_default=True, help='Report format on stdout.')
seed_option = click.option('--seed', type=click.IntRange(min=0), default=None,
                           help='Seed for random function sampling (default from AUDIT_SEED).')
props_option = click.option('--props', default=None,
                            help='Comma-separated proposition ids to run (default: all).')
out_option = click.option('--out', type=click.Path(dir_okay=False), default=None,
                          help='Also write the text report and its structured twin next to this path.')
timings_option = click.option('--timings', is_flag=True, help='Include per-entry timings.')
doc_argument = click.argument('doc', type=click.Path(exists=True, dir_okay=False))


def handles_errors(command: Callable) -> Callable:
    """Map library errors onto exit codes."""

    @functools.wraps(command)
    def wrapper(*args, **kwargs):
        try:
            return command(*args, **kwargs)
        except (InputError, MeasurabilityError) as e:
            click.echo(f"error: {e}", err=True)
            sys.exit(EXIT_INPUT_ERROR)
        except ResourceCapError as e:
            click.echo(f"error: {e}", err=True)
            sys.exit(EXIT_RESOURCE_CAP)
        except MeasurableError as e:
            click.echo(f"error: {type(e).__name__}: {e}", err=True)
            sys.exit(EXIT_AUDIT_FAILURE)

    return wrapper


def _read_doc(path: str):
    with open(path, encoding='utf-8') as f:
        text = f.read()
    doc = load_space_doc(text)
    space = space_from_doc(doc)
    return doc, space, doc_functions(doc, space)


def _split_props(props: Optional[str]):
    if not props:
        return None
    return [p.strip() for p in props.split(',') if p.strip()]


def _emit(text: str, structured: str, fmt: str, out: Optional[str]):
    click.echo(structured if fmt == 'structured' else text, nl=False)
    if out:
        base = os.path.splitext(out)[0]
        directory = os.path.dirname(base)
        if directory:
            os.makedirs(directory, exist_ok=True)
        with open(base + '.txt', 'w', encoding='utf-8') as f:
            f.write(text)
        with open(base + '.json', 'w', encoding='utf-8') as f:
            f.write(structured)
        logger.info(f"Wrote {base}.txt and {base}.json")


def _emit_payload(payload: dict, fmt: str, out: Optional[str]):
    _emit(render_payload_text(payload), render_structured(payload), fmt, out)


@click.group()
@click.option('--log-level', default=None, help='Override AUDIT_LOG_LEVEL.')
@click.pass_context
def cli(ctx, log_level):
    """Audit rings of measurable functions on finite measurable spaces."""
    settings = get_settings()
    configure_logging((log_level or settings.log_level).upper())
    ctx.obj = settings


@cli.command()
@doc_argument
@format_option
@out_option
@click.pass_obj
@handles_errors
def generate(settings, doc, fmt, out):
    """Print the generated sigma-algebra, its atoms and prime elements."""
    space_doc, space, functions = _read_doc(doc)
    _emit_payload(generate_payload(space_doc.name, space, functions), fmt, out)


@cli.command()
@doc_argument
@seed_option
@props_option
@format_option
@timings_option
@out_option
@click.pass_obj
@handles_errors
def audit(settings, doc, seed, props, fmt, timings, out):
    """Run every (or the selected) proposition audit on one space."""
    seed = settings.seed if seed is None else seed
    space_doc, space, functions = _read_doc(doc)
    report = audit_report(space, space_doc.name, seed, space_doc.to_dict(), _split_props(props),
                          extra=list(functions.values()), **settings.caps())
    _emit(render_report_text(report, timings), render_structured(report.to_dict(timings)), fmt, out)
    sys.exit(EXIT_PASS if report.passed else EXIT_AUDIT_FAILURE)


@cli.command()
@click.option('--max-points', type=int, default=4, show_default=True,
              help='Largest ground set to sweep.')
@seed_option
@props_option
@format_option
@timings_option
@out_option
@click.pass_obj
@handles_errors
def sweep(settings, max_points, seed, props, fmt, timings, out):
    """Audit every sigma-algebra on ground sets of 1..max-points points."""
    seed = settings.seed if seed is None else seed
    report = run_sweep(max_points, seed, _split_props(props),
                       limit=settings.max_sweep_points, **settings.caps())
    _emit(render_report_text(report, timings), render_structured(report.to_dict(timings)), fmt, out)
    sys.exit(EXIT_PASS if report.passed else EXIT_AUDIT_FAILURE)


@cli.command()
@doc_argument
@seed_option
@format_option
@out_option
@click.pass_obj
@handles_errors
def quotient(settings, doc, seed, fmt, out):
    """Build X/∼ with its weak sigma-algebra and the quotient map θ."""
    seed = settings.seed if seed is None else seed
    space_doc, space, functions = _read_doc(doc)
    sample = FunctionSample(space, seed, settings.random_samples, list(functions.values()))
    result = t_quotient(space, sample, settings.cover_cap)
    _emit_payload(quotient_payload(space_doc.name, result), fmt, out)
    sys.exit(EXIT_PASS if result.passed else EXIT_AUDIT_FAILURE)


@cli.command('spectrum')
@doc_argument
@seed_option
@format_option
@out_option
@click.pass_obj
@handles_errors
def spectrum_command(settings, doc, seed, fmt, out):
    """Build max(M(X)) and, for T-measurable X, the map φ: x ↦ M_x."""
    seed = settings.seed if seed is None else seed
    space_doc, space, functions = _read_doc(doc)
    sample = FunctionSample(space, seed, settings.random_samples, list(functions.values()))
    result = spectrum(space, sample, settings.cover_cap)
    _emit_payload(spectrum_payload(space_doc.name, result), fmt, out)
    sys.exit(EXIT_PASS if result.passed else EXIT_AUDIT_FAILURE)


@cli.command()
@click.argument('first', type=click.Path(exists=True, dir_okay=False))
@click.argument('second', type=click.Path(exists=True, dir_okay=False))
@format_option
@out_option
@click.pass_obj
@handles_errors
def iso(settings, first, second, fmt, out):
    """Decide ring isomorphism and homeomorphism of two spaces."""
    first_doc, first_space, _ = _read_doc(first)
    second_doc, second_space, _ = _read_doc(second)
    rings = rings_isomorphic(first_space, second_space)
    spaces = spaces_homeomorphic(first_space, second_space)
    separated = {'first': is_t_measurable(first_space).verdict,
                 'second': is_t_measurable(second_space).verdict}
    _emit_payload(iso_payload(first_doc.name, second_doc.name, rings, spaces, separated), fmt, out)
    sys.exit(EXIT_AUDIT_FAILURE if rings.validated is False else EXIT_PASS)


if __name__ == '__main__':
    cli()
