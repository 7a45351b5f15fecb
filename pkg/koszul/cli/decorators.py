"""Shared options, option resolution and exit-code mapping for commands."""

import logging
from functools import wraps

import click

from koszul.services.complex_service import ComplexService
from koszul.utils.constants import EXIT_CODES
from koszul.utils.exceptions import KoszulError, VerificationError

logger = logging.getLogger(__name__)

WINDOW_KEYS = ('n', 'x_min', 'x_max', 's_max', 'weight_max', 'module', 'format', 'out')


def window_options(f):
    """Add the common --n/--x-min/--x-max/--s-max/--weight-max/--module/--format/--out flags."""
    options = [
        click.option('--n', type=click.IntRange(min=-1), default=None, help='Truncation level (-1 means no v_i).'),
        click.option('--x-min', type=int, default=None, help='Lowest total degree x.'),
        click.option('--x-max', type=int, default=None, help='Highest total degree x.'),
        click.option('--s-max', type=click.IntRange(min=0), default=None, help='Highest filtration s.'),
        click.option('--weight-max', type=click.IntRange(min=0), default=None, help='Drop monomials of higher weight.'),
        click.option('--module', default=None, help="'bp' or a module file."),
        click.option('--format', 'fmt', type=click.Choice(['json', 'text', 'svg']), default=None),
        click.option('--out', type=click.Path(dir_okay=False), default=None, help='Write output here.'),
    ]
    for option in reversed(options):
        f = option(f)
    return f


def resolve_options(ctx, **flags):
    """Merge flags over the config file over the context defaults."""
    context = ctx.obj['context']
    file_values = ctx.obj['file']
    defaults = {
        'n': context.get('KOSZUL_N'),
        'x_min': context.get('KOSZUL_X_MIN'),
        'x_max': context.get('KOSZUL_X_MAX'),
        's_max': context.get('KOSZUL_S_MAX'),
        'weight_max': context.get('KOSZUL_WEIGHT_MAX'),
        'module': context.get('KOSZUL_MODULE'),
        'format': 'text',
        'out': None,
    }
    if 'fmt' in flags:
        flags['format'] = flags.pop('fmt')
    resolved = {}
    for key in WINDOW_KEYS:
        value = flags.get(key)
        if value is None:
            value = file_values.get(key, defaults[key])
        resolved[key] = value
    return resolved


def window_and_module(ctx, options):
    """Window and presentation for resolved options, sized so every differential stays inside."""
    context = ctx.obj['context']
    window = context.window(options['n'], options['x_min'], options['x_max'], options['s_max'], options['weight_max'])
    module = context.module(options['module'], ComplexService.generator_floor(window.padded()))
    return window, module


def emit(text, out=None):
    """Write command output to ``out`` or stdout."""
    if out:
        with open(out, 'w', encoding='utf-8') as handle:
            handle.write(text)
        logger.info(f"Wrote {out}")
    else:
        click.echo(text, nl=not text.endswith('\n'))


def require_format(options, allowed):
    if options['format'] not in allowed:
        raise click.UsageError(f"--format {options['format']} is not available here; use one of {', '.join(allowed)}")


def handle_errors(f):
    """Map engine errors to exit codes: verification failures to 1, bad input to 2."""
    @wraps(f)
    def decorated_function(*args, **kwargs):
        try:
            return f(*args, **kwargs)
        except VerificationError as e:
            logger.error(f"Verification failed: {e.message}")
            click.echo(f"error: {e.message}", err=True)
            for detail in e.errors:
                click.echo(f"  {detail}", err=True)
            raise click.exceptions.Exit(EXIT_CODES['VERIFICATION_FAILED'])
        except KoszulError as e:
            logger.error(f"{e.__class__.__name__}: {e.message}")
            click.echo(f"error: {e.message}", err=True)
            for detail in e.errors:
                click.echo(f"  {detail}", err=True)
            raise click.exceptions.Exit(EXIT_CODES['USAGE'])
    return decorated_function
