"""Tests for module presentations and the module file format."""

import json

import pytest

from koszul.models.presentation import TermKind
from koszul.services.presentation_service import PresentationService, bp_generator_degree
from koszul.utils.exceptions import PresentationError


def module_document(**overrides):
    document = {
        'format': 1,
        'name': 'two-cell',
        'generators': [{'id': 'a', 'degree': -2}, {'id': 'b', 'degree': -6}],
        'differential': {'b': [{'R': 5, 'gen': 'a'}]},
    }
    document.update(overrides)
    return document


class TestBpPreset:
    """The built-in BP presentation."""

    def test_generator_degrees(self):
        presentation = PresentationService.bp_preset(4)
        assert [(g.id, g.degree) for g in presentation.generators] == [
            ('y1', -2), ('y2', -6), ('y3', -14), ('y4', -30),
        ]

    def test_differential(self):
        presentation = PresentationService.bp_preset(3)
        assert presentation.terms_for('y1') == ()
        assert [str(t) for t in presentation.terms_for('y2')] == ['R5 y1']
        assert [str(t) for t in presentation.terms_for('y3')] == ['R13 y1', 'R9 y2']
        assert all(t.kind is TermKind.R for t in presentation.terms_for('y3'))

    def test_differential_lowers_degree_by_one(self):
        presentation = PresentationService.bp_preset(6)
        for generator in presentation.generators:
            for term in presentation.terms_for(generator.id):
                assert presentation.generator(term.target).degree - term.index == generator.degree - 1

    @pytest.mark.parametrize('min_degree,expected', [(0, 1), (-6, 2), (-13, 2), (-14, 3), (-100, 5)])
    def test_k_max_for(self, min_degree, expected):
        assert PresentationService.bp_k_max_for(min_degree) == expected
        assert bp_generator_degree(expected) >= min(min_degree, -2)

    def test_rejects_empty(self):
        with pytest.raises(PresentationError):
            PresentationService.bp_preset(0)

    def test_load_preset_by_name(self):
        assert len(PresentationService.load('BP', -30).generators) == 4


class TestModuleFile:
    """Parsing, rendering and validating module documents."""

    def test_parse(self):
        presentation = PresentationService.parse_module(json.dumps(module_document()))
        assert presentation.name == 'two-cell'
        assert [g.index for g in presentation.generators] == [1, 2]
        assert [str(t) for t in presentation.terms_for('b')] == ['R5 a']

    def test_render_then_parse(self):
        presentation = PresentationService.bp_preset(3)
        again = PresentationService.parse_module(PresentationService.render_module(presentation))
        assert again.generators == presentation.generators
        assert again.terms_for('y3') == presentation.terms_for('y3')

    def test_v_terms(self):
        document = module_document(
            generators=[{'id': 'a', 'degree': -3}, {'id': 'b', 'degree': -2}],
            differential={'b': [{'v': 0, 'gen': 'a'}]},
        )
        presentation = PresentationService.parse_module(document)
        (term,) = presentation.terms_for('b')
        assert term.kind is TermKind.V
        assert term.index == 0

    @pytest.mark.parametrize('overrides,fragment', [
        ({'format': 2}, 'format'),
        ({'generators': [{'id': 'a', 'degree': 3}]}, 'degree'),
        ({'generators': [{'id': 'a', 'degree': -2}, {'id': 'a', 'degree': -4}]}, 'duplicate'),
        ({'differential': {'b': [{'R': 5, 'gen': 'z'}]}}, "unknown generator 'z'"),
        ({'differential': {'b': [{'R': 4, 'gen': 'a'}]}}, 'expected -7'),
        ({'differential': {'c': [{'R': 5, 'gen': 'a'}]}}, "unknown generator 'c'"),
        ({'differential': {'b': [{'R': 5, 'v': 0, 'gen': 'a'}]}}, 'exactly one'),
    ])
    def test_invalid_documents(self, overrides, fragment):
        with pytest.raises(PresentationError) as excinfo:
            PresentationService.parse_module(module_document(**overrides))
        assert any(fragment in error for error in excinfo.value.errors)

    def test_not_json(self):
        with pytest.raises(PresentationError):
            PresentationService.parse_module('{not json')

    def test_load_file_and_restrict(self, tmp_path):
        path = tmp_path / 'module.json'
        path.write_text(json.dumps(module_document()), encoding='utf-8')
        presentation = PresentationService.load(str(path), min_degree=-4)
        assert [g.id for g in presentation.generators] == ['a']
        assert presentation.terms_for('b') == ()

    def test_load_missing_file(self, tmp_path):
        with pytest.raises(PresentationError) as excinfo:
            PresentationService.load(str(tmp_path / 'missing.json'))
        assert 'cannot read' in excinfo.value.message
