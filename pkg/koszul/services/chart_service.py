"""Chart emission for cohomology reports and complex slices, with JSON, SVG and text renderers."""

import json
import logging

from marshmallow import ValidationError

from koszul.models.chart import ChartClass, ChartDifferential, ChartDocument, ChartLine
from koszul.models.monomial import v_degree
from koszul.services.cohomology_service import CohomologyService
from koszul.services.pattern_service import PatternService
from koszul.utils.constants import CHART_STYLE, ENGINE_VERSION, LINE_COLOURS
from koszul.utils.exceptions import ParseError, PreconditionError
from koszul.utils.schemas import ChartDocumentSchema

logger = logging.getLogger(__name__)

CHART_MODES = ('cohomology', 'basis', 'bockstein')
DIFFERENTIAL_COLOUR = '#ff7f0e'


def _bits(value):
    j = 0
    while value:
        if value & 1:
            yield j
        value >>= 1
        j += 1


def _pack(coordinates):
    bits = 0
    for j, value in enumerate(coordinates):
        if value:
            bits |= 1 << j
    return bits


def _class_id(cell, index):
    return f'{cell[0]}:{cell[1]}:{index}'


class ChartService:
    """Service for building and rendering chart documents."""

    @staticmethod
    def emit_chart(report, slice_=None, mode='cohomology', d1_records=()):
        """Chart of ``report``; ``basis`` mode draws every monomial of ``slice_`` with its d-arrows."""
        if mode not in CHART_MODES:
            raise PreconditionError(f"unknown chart mode '{mode}'", [f"choose one of {', '.join(CHART_MODES)}"])
        if mode == 'basis':
            document = ChartService._basis_chart(slice_ or report.slice)
        else:
            document = ChartService._cohomology_chart(report)
            for record in d1_records:
                for row in _bits(_pack(record.coordinates)):
                    document.differentials.append(
                        ChartDifferential(1, record.source.id, _class_id(record.target_cell, row))
                    )
        window = (slice_ or report.slice).window
        document.metadata = {
            'n': window.n,
            'module': (slice_ or report.slice).presentation.name,
            'window': window.to_dict(),
            'engine_version': ENGINE_VERSION,
            'mode': mode,
            'notes': PatternService.correction_notes(c.label for c in document.classes),
        }
        logger.info(f"Emitted {document!r} in {mode} mode")
        return document

    @staticmethod
    def _cohomology_chart(report):
        document = ChartDocument()
        for record in report.all_classes():
            document.classes.append(ChartClass(record.id, record.cell[0], record.cell[1], record.weight, record.label))
        for i in range(report.n + 1):
            if i not in report.v_actions:
                CohomologyService.v_action(i, report)
        for i, action in sorted(report.v_actions.items()):
            shift = v_degree(i)
            for (x, s), matrix in sorted(action.items()):
                target = (x + shift, s + 1)
                for j in range(matrix.cols):
                    for row in _bits(matrix.column_bits(j)):
                        document.lines.append(ChartLine(f'v{i}', _class_id((x, s), j), _class_id(target, row)))
        return document

    @staticmethod
    def _basis_chart(slice_):
        document = ChartDocument()
        window = slice_.window
        for cell in sorted(window.cells(), key=lambda c: (c[1], c[0])):
            for j, m in enumerate(slice_.basis_at(*cell)):
                document.classes.append(ChartClass(_class_id(cell, j), cell[0], cell[1], m.weight, str(m)))
        for cell in sorted(window.cells(), key=lambda c: (c[1], c[0])):
            x, s = cell
            for j, m in enumerate(slice_.basis_at(*cell)):
                for i in range(window.n + 1):
                    target = m.times_v(i)
                    position = slice_.position(target)
                    if position is not None and window.contains(*target.bidegree.cell):
                        document.lines.append(
                            ChartLine(f'v{i}', _class_id(cell, j), _class_id(target.bidegree.cell, position))
                        )
                matrix = slice_.d_matrices.get(cell)
                if matrix is None or not window.contains(x - 1, s + 1):
                    continue
                for row in _bits(matrix.column_bits(j)):
                    arrow = ChartDifferential(1, _class_id(cell, j), _class_id((x - 1, s + 1), row))
                    document.differentials.append(arrow)
        return document

    @staticmethod
    def parse_chart(data):
        """Validate a chart document (dict or JSON text) and return it as a ChartDocument."""
        if isinstance(data, str):
            try:
                data = json.loads(data)
            except json.JSONDecodeError as e:
                raise ParseError(f"chart is not valid JSON: {e}")
        try:
            loaded = ChartDocumentSchema().load(data)
        except ValidationError as e:
            raise ParseError("chart document failed validation", [str(e.messages)])
        document = ChartDocument(
            classes=[ChartClass(**c) for c in loaded['classes']],
            lines=[ChartLine(**line) for line in loaded['lines']],
            differentials=[ChartDifferential(**d) for d in loaded['differentials']],
            metadata=loaded['metadata'],
        )
        dangling = document.dangling()
        if dangling:
            raise ParseError("chart edges name unknown classes", dangling)
        return document

    @staticmethod
    def render_json(document):
        return json.dumps(document.to_dict(), indent=2, sort_keys=True)

    @staticmethod
    def render_svg(document, cell_size=None):
        """Fixed-grid SVG: x grows to the right, s grows upward."""
        cell_size = cell_size or CHART_STYLE['CELL_SIZE']
        margin = CHART_STYLE['MARGIN']
        spacing = CHART_STYLE['DOT_SPACING']
        window = document.metadata['window']
        x_min, x_max = window['x_min'], window['x_max']
        s_min, s_max = window.get('s_min', 0), window['s_max']
        width = 2 * margin + (x_max - x_min) * cell_size
        height = 2 * margin + (s_max - s_min) * cell_size

        positions = {}
        by_cell = {}
        for c in document.classes:
            by_cell.setdefault((c.x, c.s), []).append(c)
        for (x, s), members in by_cell.items():
            for k, c in enumerate(members):
                offset = (k - (len(members) - 1) / 2) * spacing
                positions[c.id] = (margin + (x - x_min) * cell_size + offset, margin + (s_max - s) * cell_size)

        out = [
            f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
            f'viewBox="0 0 {width} {height}" font-family="sans-serif" font-size="{CHART_STYLE["FONT_SIZE"]}">',
            f'<rect width="{width}" height="{height}" fill="#ffffff"/>',
        ]
        for x in range(x_min, x_max + 1):
            px = margin + (x - x_min) * cell_size
            out.append(f'<line x1="{px}" y1="{margin}" x2="{px}" y2="{height - margin}" stroke="#eeeeee"/>')
            out.append(f'<text x="{px}" y="{height - margin / 3:.1f}" text-anchor="middle">{x}</text>')
        for s in range(s_min, s_max + 1):
            py = margin + (s_max - s) * cell_size
            out.append(f'<line x1="{margin}" y1="{py}" x2="{width - margin}" y2="{py}" stroke="#eeeeee"/>')
            out.append(f'<text x="{margin / 3:.1f}" y="{py}">{s}</text>')
        for line in document.lines:
            (x1, y1), (x2, y2) = positions[line.from_id], positions[line.to_id]
            colour = LINE_COLOURS[line.index % len(LINE_COLOURS)]
            out.append(f'<line x1="{x1:.1f}" y1="{y1:.1f}" x2="{x2:.1f}" y2="{y2:.1f}" stroke="{colour}"/>')
        for arrow in document.differentials:
            (x1, y1), (x2, y2) = positions[arrow.from_id], positions[arrow.to_id]
            out.append(
                f'<line x1="{x1:.1f}" y1="{y1:.1f}" x2="{x2:.1f}" y2="{y2:.1f}" '
                f'stroke="{DIFFERENTIAL_COLOUR}" stroke-dasharray="3,2"/>'
            )
        for c in document.classes:
            px, py = positions[c.id]
            out.append(
                f'<circle cx="{px:.1f}" cy="{py:.1f}" r="{CHART_STYLE["DOT_RADIUS"]}" fill="#000000">'
                f'<title>{c.label}</title></circle>'
            )
        out.append('</svg>')
        return '\n'.join(out) + '\n'

    @staticmethod
    def render_text(document):
        """Grid of class counts per cell followed by the class list."""
        window = document.metadata['window']
        x_min, x_max = window['x_min'], window['x_max']
        s_min, s_max = window.get('s_min', 0), window['s_max']
        counts = {}
        for c in document.classes:
            counts[(c.x, c.s)] = counts.get((c.x, c.s), 0) + 1
        width = max(len(str(x_min)), len(str(x_max))) + 1
        lines = []
        for s in range(s_max, s_min - 1, -1):
            row = ''.join(str(counts.get((x, s), '.')).rjust(width) for x in range(x_min, x_max + 1))
            lines.append(f'{s:>3} |{row}')
        lines.append('    +' + '-' * (width * (x_max - x_min + 1)))
        lines.append('     ' + ''.join(str(x).rjust(width) for x in range(x_min, x_max + 1)))
        for c in sorted(document.classes, key=lambda c: (c.s, -c.x, c.id)):
            lines.append(f'({c.x},{c.s}) {c.label}  [weight {c.weight}]')
        for note in document.metadata.get('notes', []):
            lines.append(f'note: {note}')
        return '\n'.join(lines) + '\n'


emit_chart = ChartService.emit_chart
render_svg = ChartService.render_svg
render_text = ChartService.render_text
