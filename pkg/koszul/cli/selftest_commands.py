"""The self-test command."""

import json

import click

from koszul.cli import cli
from koszul.cli.decorators import emit, handle_errors
from koszul.services.selftest_service import SelftestService
from koszul.utils.constants import EXIT_CODES
from koszul.utils.helpers import create_result


@cli.command()
@click.option('--quick', is_flag=True, help='Smaller d^2 window and confluence range.')
@click.option('--confluence-limit', type=click.IntRange(min=1), default=None)
@click.option('--format', 'fmt', type=click.Choice(['json', 'text']), default='text')
@click.option('--out', type=click.Path(dir_okay=False), default=None)
@click.pass_context
@handle_errors
def selftest(ctx, quick, confluence_limit, fmt, out):
    """Run the d^2 sweeps, confluence sweeps and golden checks."""
    report = SelftestService.run(quick=quick, confluence_limit=confluence_limit)
    if fmt == 'json':
        message = 'all checks passed' if report.ok else f"{len(report.failures)} checks failed"
        emit(json.dumps(create_result(report.ok, message, report.to_dict()), indent=2, sort_keys=True), out)
    else:
        lines = [str(check) for check in report.checks]
        lines.append(f"{len(report.checks) - len(report.failures)} passed, {len(report.failures)} failed")
        emit('\n'.join(lines) + '\n', out)
    if not report.ok:
        ctx.exit(EXIT_CODES['VERIFICATION_FAILED'])
