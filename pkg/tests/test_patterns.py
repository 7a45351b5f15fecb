"""Tests for the closed-form predictions and the structure annotator."""

from koszul.services.pattern_service import PatternService, killed_suffixes, tower_word


class TestPredictions:
    def test_killed_suffixes(self):
        assert killed_suffixes(3) == [(5,), (9, 4), (17, 8, 4)]

    def test_tower_words(self):
        assert [tower_word(j) for j in range(4)] == [(), (4,), (8, 4), (16, 8, 4)]

    def test_level_minus_one_basis(self):
        basis = PatternService.n_minus_one_basis(-16, -2, 2)
        assert basis[(-9, 1)] == {'R7 y1'}
        assert basis[(-14, 2)] == {'R8 R4 y1'}
        assert (-7, 1) not in basis
        assert (-15, 2) not in basis

    def test_level_zero_towers(self):
        assert PatternService.n_zero_towers(-14, 3) == [
            ((-2, 0), 'y1'), ((-6, 1), 'R4 y1'), ((-14, 2), 'R8 R4 y1'),
        ]
        assert PatternService.n_zero_dimension(-2, 3, -14, 3) == 1
        assert PatternService.n_zero_dimension(-9, 1, -14, 3) == 1

    def test_critical_classes(self):
        assert PatternService.critical_classes(3) == ['v0^3 y1']
        assert PatternService.critical_classes(4) == ['v0^3 y1', 'v4 R23 R7 y1', 'v4 R21 R9 y1']
        assert len(PatternService.critical_classes(5)) == 10

    def test_weight_two_generators(self):
        assert PatternService.weight_two_generators(-32, -32) == [(23, 7), (21, 9)]

    def test_predicted_differential(self):
        assert PatternService.predicted_n_zero_differential((6,)) == (1, (7,))
        assert PatternService.predicted_n_zero_differential((8, 4), 2) == (3, (9, 4))
        assert PatternService.predicted_n_zero_differential((7,)) is None
        assert PatternService.predicted_n_zero_differential(()) is None


class TestCorrections:
    def test_corrected_label(self):
        assert PatternService.corrected_label('R24 R11 y1') == 'R23 R11 y1'
        assert PatternService.corrected_label('R7 y1') == 'R7 y1'

    def test_notes(self):
        notes = PatternService.correction_notes(['R7 y1', 'R23 R11 y1 + ...'])
        assert notes == ['R23 R11 y1 is printed as R24 R11 y1 in published charts']
        assert PatternService.correction_notes([]) == []


class TestAnnotate:
    def test_level_minus_one_is_raw(self, report_minus_one):
        assert PatternService.annotate(report_minus_one) == []

    def test_level_zero(self, report_zero):
        notes = {note['label']: note['kind'] for note in PatternService.annotate(report_zero)}
        assert notes['y1'] == 'v0-tower'
        assert notes['R7 y1'] == 'v0-torsion'

    def test_sawtooth(self, report_one):
        notes = {note['label']: note for note in PatternService.annotate(report_one)}
        assert notes['R7 y1']['kind'] == '(v0,v1)-sawtooth'
        assert 'v0 [R7 y1] = v1 [R9 y1]' in notes['R7 y1']['relations']
