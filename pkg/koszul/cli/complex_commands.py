"""Commands over the Koszul complex: basis, cohomology, v-actions, critical group, d_1, stability, charts."""

import json

import click

from koszul.cli import cli
from koszul.cli.decorators import (
    emit,
    handle_errors,
    require_format,
    resolve_options,
    window_and_module,
    window_options,
)
from koszul.services.chart_service import ChartService
from koszul.services.cohomology_service import CohomologyService
from koszul.services.complex_service import ComplexService
from koszul.services.pattern_service import PatternService
from koszul.utils.constants import EXIT_CODES, PRESETS
from koszul.utils.helpers import cell_key, success_result


def _json(message, data):
    return json.dumps(success_result(message, data), indent=2, sort_keys=True)


def _module_or_preset(ctx, options):
    """The configured module file, or None so services size the BP preset per window."""
    return None if options['module'].lower() == PRESETS['BP'] else ctx.obj['context'].module(options['module'])


@cli.command()
@window_options
@click.pass_context
@handle_errors
def basis(ctx, **flags):
    """List admissible monomials of the complex per (x, s)."""
    options = resolve_options(ctx, **flags)
    require_format(options, ('json', 'text'))
    window, module = window_and_module(ctx, options)
    cells = ComplexService.enumerate_basis(window, module)
    total = sum(len(ms) for ms in cells.values())
    if options['format'] == 'json':
        data = {
            'window': window.to_dict(),
            'module': module.name,
            'basis': {cell_key(cell): [str(m) for m in ms] for cell, ms in sorted(cells.items()) if ms},
        }
        emit(_json(f"{total} monomials", data), options['out'])
        return
    lines = [f"({x},{s}) {len(ms)}: {', '.join(str(m) for m in ms)}" for (x, s), ms in sorted(cells.items()) if ms]
    lines.append(f"{total} monomials")
    emit('\n'.join(lines) + '\n', options['out'])


@cli.command()
@window_options
@click.option('--annotate', is_flag=True, help='Label v0-towers, v0-torsion and sawtooth relations.')
@click.pass_context
@handle_errors
def cohomology(ctx, annotate, **flags):
    """Cohomology of the level-n complex over the window."""
    options = resolve_options(ctx, **flags)
    require_format(options, ('json', 'text'))
    window, module = window_and_module(ctx, options)
    report = CohomologyService.compute(window, module, ctx.obj['context'].convention)
    notes = PatternService.annotate(report) if annotate else []
    corrections = PatternService.correction_notes(c.label for c in report.all_classes())
    if options['format'] == 'json':
        data = report.to_dict()
        data['annotations'] = notes
        data['notes'] = corrections
        emit(_json(f"{len(report.all_classes())} classes", data), options['out'])
        return
    lines = []
    for (x, s), cell in sorted(report.cells.items(), key=lambda item: (item[0][1], -item[0][0])):
        if cell.dimension:
            lines.append(f"({x},{s}) dim {cell.dimension}: {'; '.join(c.label for c in cell.classes)}")
    for note in notes:
        relations = f" ({'; '.join(note['relations'])})" if note['relations'] else ''
        lines.append(f"{note['id']} {note['label']}: {note['kind']}{relations}")
    lines.extend(f"note: {text}" for text in corrections)
    emit('\n'.join(lines or ['0']) + '\n', options['out'])


@cli.command()
@window_options
@click.option('--i', 'index', type=click.IntRange(min=0), required=True, help='Act by v_i.')
@click.pass_context
@handle_errors
def vaction(ctx, index, **flags):
    """Matrices of multiplication by v_i on cohomology."""
    options = resolve_options(ctx, **flags)
    require_format(options, ('json', 'text'))
    window, module = window_and_module(ctx, options)
    report = CohomologyService.compute(window, module, ctx.obj['context'].convention)
    action = CohomologyService.v_action(index, report)
    if options['format'] == 'json':
        data = {cell_key(cell): matrix.to_dict() for cell, matrix in sorted(action.items()) if not matrix.is_zero()}
        emit(_json(f"v{index} action", {'n': report.n, 'i': index, 'matrices': data}), options['out'])
        return
    lines = []
    for (x, s), matrix in sorted(action.items()):
        targets = report.classes_at(x + (1 << (index + 1)) - 2, s + 1)
        for j, record in enumerate(report.classes_at(x, s)):
            column = matrix.column_bits(j)
            image = ' + '.join(f'[{t.label}]' for t in targets if column >> t.index & 1) or '0'
            lines.append(f"v{index} [{record.label}] = {image}")
    emit('\n'.join(lines or ['0']) + '\n', options['out'])


@cli.command()
@window_options
@click.pass_context
@handle_errors
def critical(ctx, **flags):
    """Basis of the critical group at (x, s) = (-2, 3)."""
    options = resolve_options(ctx, **flags)
    require_format(options, ('json', 'text'))
    classes = CohomologyService.critical_group(
        options['n'], _module_or_preset(ctx, options), ctx.obj['context'].convention
    )
    if options['format'] == 'json':
        data = {'n': options['n'], 'classes': [c.to_dict() for c in classes]}
        emit(_json(f"{len(classes)} classes", data), options['out'])
        return
    emit(''.join(f"{c.label}\n" for c in classes) or '0\n', options['out'])


@cli.command('bockstein-d1')
@window_options
@click.pass_context
@handle_errors
def bockstein_d1(ctx, **flags):
    """Non-zero d_1 out of level n-1 classes, landing in v_n times a level n-1 class."""
    options = resolve_options(ctx, **flags)
    require_format(options, ('json', 'text'))
    context = ctx.obj['context']
    window = context.window(options['n'], options['x_min'], options['x_max'], options['s_max'], options['weight_max'])
    records, _ = CohomologyService.bockstein_d1(
        options['n'], window, _module_or_preset(ctx, options), context.convention
    )
    if options['format'] == 'json':
        emit(_json(f"{len(records)} differentials", {'n': options['n'], 'd1': [r.to_dict() for r in records]}),
             options['out'])
        return
    lines = []
    for r in records:
        (x, s), (tx, ts) = r.source.cell, r.target_cell
        lines.append(f"d1({r.source.label}) = v{r.v_index} ({r.target})  ({x},{s}) -> ({tx},{ts})")
    emit('\n'.join(lines or ['0']) + '\n', options['out'])


@cli.command()
@window_options
@click.option('--n-lo', type=click.IntRange(min=-1), required=True, help='Lower level.')
@click.option('--n-hi', type=click.IntRange(min=0), default=None, help='Upper level (defaults to --n).')
@click.option('--no-tensor', is_flag=True, help='Compare the same cell instead of tensoring with v_{n_lo+1..n_hi}.')
@click.option('--check', is_flag=True, help='Exit 1 on any mismatch.')
@click.pass_context
@handle_errors
def stability(ctx, n_lo, n_hi, no_tensor, check, **flags):
    """Weight-truncated comparison of cohomology at two levels."""
    options = resolve_options(ctx, **flags)
    require_format(options, ('json', 'text'))
    n_hi = options['n'] if n_hi is None else n_hi
    weight_max = 2 if options['weight_max'] is None else options['weight_max']
    window = ctx.obj['context'].window(n_hi, options['x_min'], options['x_max'], options['s_max'])
    report = CohomologyService.stability_check(
        n_lo,
        n_hi,
        window,
        weight_max,
        _module_or_preset(ctx, options),
        tensor=not no_tensor,
        convention=ctx.obj['context'].convention,
    )
    if options['format'] == 'json':
        emit(_json('equal' if report.ok else f"{len(report.mismatches)} mismatches", report.to_dict()), options['out'])
    else:
        lines = [f"n={n_lo} -> n={n_hi}, weight <= {weight_max}: {len(report.rows)} cells, "
                 f"{len(report.mismatches)} mismatches"]
        lines.extend(f"({r.cell[0]},{r.cell[1]}) observed {r.observed} predicted {r.predicted}"
                     for r in report.mismatches)
        emit('\n'.join(lines) + '\n', options['out'])
    if check and not report.ok:
        ctx.exit(EXIT_CODES['VERIFICATION_FAILED'])


@cli.command()
@window_options
@click.option('--mode', type=click.Choice(['cohomology', 'basis', 'bockstein']), default='cohomology')
@click.pass_context
@handle_errors
def chart(ctx, mode, **flags):
    """Chart of classes with v-lines (JSON, SVG or a text grid)."""
    options = resolve_options(ctx, **flags)
    window, module = window_and_module(ctx, options)
    context = ctx.obj['context']
    if mode == 'basis':
        slice_ = ComplexService.assemble(window, module, context.convention)
        document = ChartService.emit_chart(None, slice_, mode)
    elif mode == 'bockstein':
        records, low = CohomologyService.bockstein_d1(
            options['n'], window, _module_or_preset(ctx, options), context.convention
        )
        document = ChartService.emit_chart(low, mode=mode, d1_records=records)
    else:
        report = CohomologyService.compute(window, module, context.convention)
        document = ChartService.emit_chart(report, mode=mode)
    if options['format'] == 'svg':
        emit(ChartService.render_svg(document, context.get('CHART_CELL_SIZE')), options['out'])
    elif options['format'] == 'json':
        emit(ChartService.render_json(document) + '\n', options['out'])
    else:
        emit(ChartService.render_text(document), options['out'])
