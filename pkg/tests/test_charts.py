"""Tests for chart emission, validation and rendering."""

import json

import pytest

from koszul.models.complex import Window
from koszul.services.chart_service import ChartService
from koszul.services.cohomology_service import CohomologyService
from koszul.services.complex_service import ComplexService
from koszul.utils.exceptions import ParseError, PreconditionError

METADATA = {'n': -1, 'module': 'bp', 'window': {'x_min': -2, 'x_max': -2, 's_max': 0}, 'engine_version': '1.0.0'}


@pytest.fixture(scope='module')
def basis_chart(bp):
    slice_ = ComplexService.assemble(Window(-16, -6, 2, -1), bp)
    return ChartService.emit_chart(None, slice_, 'basis')


class TestBasisChart:
    """Every monomial with its Koszul d-arrows."""

    def test_arrows(self, basis_chart):
        arrows = {(d.from_id, d.to_id) for d in basis_chart.differentials}
        assert ('-6:0:0', '-7:1:0') in arrows
        assert ('-14:0:0', '-15:1:0') in arrows
        assert ('-14:0:0', '-15:1:1') in arrows
        assert ('-14:1:0', '-15:2:0') in arrows
        assert all(d.page == 1 for d in basis_chart.differentials)

    def test_classes(self, basis_chart):
        assert [c.label for c in basis_chart.classes_at(-14, 1)] == ['R8 y2', 'R12 y1']
        assert basis_chart.metadata['mode'] == 'basis'
        assert basis_chart.lines == []

    def test_v_lines_at_level_zero(self, bp):
        slice_ = ComplexService.assemble(Window(-4, -2, 2, 0), bp)
        document = ChartService.emit_chart(None, slice_, 'basis')
        assert ('v0', '-2:0:0', '-2:1:0') in {(line.kind, line.from_id, line.to_id) for line in document.lines}


class TestCohomologyChart:
    def test_classes_match_dimensions(self, report_minus_one):
        document = ChartService.emit_chart(report_minus_one)
        for (x, s), cell in report_minus_one.cells.items():
            assert len(document.classes_at(x, s)) == cell.dimension
        assert document.metadata['n'] == -1
        assert not document.dangling()

    def test_v_lines(self, report_one):
        document = ChartService.emit_chart(report_one)
        kinds = {line.kind for line in document.lines}
        assert kinds == {'v0', 'v1'}
        assert not document.dangling()

    def test_deterministic(self, report_one):
        first = ChartService.render_json(ChartService.emit_chart(report_one))
        second = ChartService.render_json(ChartService.emit_chart(report_one))
        assert first == second
        assert json.loads(first)['chart-format'] == 1

    def test_correction_note(self):
        report = CohomologyService.compute(Window(-36, -36, 2, -1))
        document = ChartService.emit_chart(report)
        assert document.metadata['notes'] == ['R23 R11 y1 is printed as R24 R11 y1 in published charts']
        assert 'note: R23 R11 y1 is printed as R24 R11 y1' in ChartService.render_text(document)

    def test_bockstein_mode(self):
        records, low = CohomologyService.bockstein_d1(0, Window(-8, -8, 1, 0))
        document = ChartService.emit_chart(low, mode='bockstein', d1_records=records)
        assert [(d.from_id, d.to_id) for d in document.differentials] == [('-8:1:0', '-9:1:0')]

    def test_unknown_mode(self, report_one):
        with pytest.raises(PreconditionError):
            ChartService.emit_chart(report_one, mode='adams')


class TestParse:
    """Validating chart documents."""

    def test_empty_document(self):
        document = ChartService.parse_chart({'chart-format': 1, 'classes': [], 'metadata': METADATA})
        assert document.classes == []
        assert document.metadata['notes'] == []

    def test_reads_back_emitted_chart(self, basis_chart):
        again = ChartService.parse_chart(ChartService.render_json(basis_chart))
        assert again.to_dict() == basis_chart.to_dict()

    def test_dangling_edge(self):
        data = {
            'chart-format': 1,
            'classes': [{'id': 'a', 'x': -2, 's': 0, 'weight': 0, 'label': 'y1'}],
            'lines': [{'kind': 'v0', 'from': 'a', 'to': 'b'}],
            'metadata': METADATA,
        }
        with pytest.raises(ParseError) as excinfo:
            ChartService.parse_chart(data)
        assert excinfo.value.errors == ['b']

    @pytest.mark.parametrize('data', [
        {'chart-format': 2, 'classes': [], 'metadata': METADATA},
        {'classes': [], 'metadata': METADATA},
        {'chart-format': 1, 'classes': [{'id': 'a'}], 'metadata': METADATA},
        '[1, 2',
    ])
    def test_invalid(self, data):
        with pytest.raises(ParseError):
            ChartService.parse_chart(data)


class TestRender:
    def test_svg(self, basis_chart):
        svg = ChartService.render_svg(basis_chart)
        assert svg.startswith('<svg xmlns="http://www.w3.org/2000/svg"')
        assert svg.rstrip().endswith('</svg>')
        assert svg.count('<circle') == len(basis_chart.classes)
        assert '<title>R9 R4 y1</title>' in svg
        assert ChartService.render_svg(basis_chart) == svg

    def test_text_grid(self, report_minus_one):
        text = ChartService.render_text(ChartService.emit_chart(report_minus_one))
        assert '(-15,1) R13 y1  [weight 1]' in text
        assert text.splitlines()[0].startswith('  5 |')
