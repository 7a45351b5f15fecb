"""Command-line interface.

Settings resolve as flags > ``--config`` file > configuration class defaults.
"""

import json
import logging

import click
from marshmallow import ValidationError

from koszul import create_context
from koszul.utils.schemas import CliConfigSchema

logger = logging.getLogger(__name__)


def load_config_file(path):
    """Read and validate a JSON config file with the same keys as the flags."""
    try:
        with open(path, encoding='utf-8') as handle:
            data = json.load(handle)
        return CliConfigSchema().load(data)
    except (OSError, json.JSONDecodeError) as e:
        raise click.UsageError(f"cannot read config file {path}: {e}")
    except ValidationError as e:
        raise click.UsageError(f"invalid config file {path}: {e.messages}")


@click.group(context_settings={'help_option_names': ['-h', '--help']})
@click.option('--config', 'config_path', type=click.Path(dir_okay=False), default=None,
              help='JSON file with defaults for n, x_min, x_max, s_max, weight_max, module, format, out, log_level.')
@click.option('--config-name', type=click.Choice(['default', 'development', 'testing']), default=None,
              help='Configuration class.')
@click.option('--log-level', default=None, type=click.Choice(['DEBUG', 'INFO', 'WARNING', 'ERROR']),
              help='Overrides LOG_LEVEL.')
@click.pass_context
def cli(ctx, config_path, config_name, log_level):
    """Koszul complexes and Dyer-Lashof calculations for BP<n> at p = 2.

    Flags take precedence over the --config file, which takes precedence
    over the configuration class (environment variables and .env).
    """
    context = create_context(config_name)
    overrides = load_config_file(config_path) if config_path else {}
    level = log_level or overrides.get('log_level')
    if level:
        logging.getLogger().setLevel(level)
    ctx.obj = {'context': context, 'file': overrides}


# Register command groups
from koszul.cli import complex_commands, algebra_commands, selftest_commands  # noqa: E402,F401


def main():
    cli(prog_name='koszul')


__all__ = ['cli', 'main']
