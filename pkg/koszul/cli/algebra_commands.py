"""Commands for the operator algebras: Adem rewriting, expression evaluation and the degree-30 relation."""

import json

import click

from koszul.cli import cli
from koszul.cli.decorators import emit, handle_errors
from koszul.services.dyer_lashof_service import DyerLashofService
from koszul.services.expression_service import ExpressionService
from koszul.services.operator_service import OperatorService
from koszul.utils.constants import EXIT_CODES
from koszul.utils.exceptions import ParseError
from koszul.utils.helpers import error_result, parse_int_list, success_result

FORMATS = click.Choice(['json', 'text'])


def _word(text):
    try:
        word = parse_int_list(text)
    except ValueError:
        raise ParseError(f"--word must be a comma-separated list of integers, got '{text}'")
    if not word or any(a < 0 for a in word):
        raise ParseError(f"--word needs non-negative entries, got '{text}'")
    return word


@cli.command()
@click.option('--side', type=click.Choice(['R', 'Q']), default='R', help='Which operator algebra.')
@click.option('--word', required=True, help="Indices from the outside in, e.g. '8,5'.")
@click.option('--degree', type=int, default=None, help='Degree of the generator; omit for no instability.')
@click.option('--format', 'fmt', type=FORMATS, default='text')
@click.option('--out', type=click.Path(dir_okay=False), default=None)
@handle_errors
def adem(side, word, degree, fmt, out):
    """Admissible normal form of a word of R^a (or Q^s) operators."""
    word = _word(word)
    if side == 'R':
        words = OperatorService.normal_form_word(word, degree)
        text = OperatorService.render_words(words)
        data = {'side': side, 'word': word, 'normal_form': [list(w) for w in sorted(words)], 'text': text}
    else:
        value = DyerLashofService.normal_form_word(word, degree)
        text = str(value)
        data = {'side': side, 'word': word, 'normal_form': value.to_dict(), 'text': text}
    if fmt == 'json':
        emit(json.dumps(success_result('normal form', data), indent=2, sort_keys=True), out)
    else:
        emit(text + '\n', out)


@cli.command()
@click.argument('expression')
@click.option('--degree', type=int, default=2, help='Degree of the generator x.')
@click.option('--format', 'fmt', type=FORMATS, default='text')
@click.option('--out', type=click.Path(dir_okay=False), default=None)
@handle_errors
def qeval(expression, degree, fmt, out):
    """Normal form of a Dyer-Lashof expression such as 'Q20(Q8(x) + x^2*Q4(x))'."""
    value = ExpressionService.parse(expression, degree=degree)
    if fmt == 'json':
        emit(json.dumps(success_result('normal form', value.to_dict()), indent=2, sort_keys=True), out)
    else:
        emit(f"{value}\n", out)


@cli.command('verify-bigrelation')
@click.option('--omit', type=click.IntRange(0, 9), default=None, help='Drop one summand by position.')
@click.option('--list-terms', is_flag=True, help='Print each summand with its degree and term count.')
@click.option('--format', 'fmt', type=FORMATS, default='text')
@click.option('--out', type=click.Path(dir_okay=False), default=None)
@click.pass_context
@handle_errors
def verify_bigrelation(ctx, omit, list_terms, fmt, out):
    """Check that the ten summands of the degree-30 relation on a degree-2 class add to zero."""
    residual = DyerLashofService.verify_big_relation(omit=omit)
    rows = DyerLashofService.relation_terms() if list_terms else []
    if fmt == 'json':
        data = {
            'residual': residual.to_dict(),
            'omit': omit,
            'terms': [{'term': r['term'], 'degree': r['degree'], 'size': len(r['value'])} for r in rows],
        }
        if residual.is_zero():
            result = success_result('residual is zero', data)
        else:
            result = error_result(f"residual has {len(residual)} terms", [data])
        emit(json.dumps(result, indent=2, sort_keys=True), out)
    else:
        lines = [f"{r['term']}  degree {r['degree']}, {len(r['value'])} terms" for r in rows]
        lines.append('OK residual=0' if residual.is_zero() else f"FAILED residual={residual}")
        emit('\n'.join(lines) + '\n', out)
    if not residual.is_zero():
        ctx.exit(EXIT_CODES['VERIFICATION_FAILED'])
