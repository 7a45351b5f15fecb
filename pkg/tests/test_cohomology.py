"""Tests for cohomology, v-actions, the critical group, Bockstein d_1 and stability."""

import pytest

from koszul.models.complex import Window
from koszul.services.cohomology_service import CohomologyService
from koszul.services.gf2_service import SpanReducer
from koszul.services.pattern_service import PatternService
from koszul.utils.exceptions import PreconditionError, TruncationError, VerificationError


def in_class(report, element, cell):
    return CohomologyService.class_at(report, element, cell)


def _leads_odd_odd(element):
    m = element.leading_term()
    return not any(m.v) and len(m.word) >= 2 and m.word[0] % 2 == 1 and m.word[1] % 2 == 1


class TestLevelMinusOne:
    """H at n = -1 is spanned by y1-words that avoid the killed suffixes."""

    def test_dimensions_match_prediction(self, report_minus_one):
        predicted = PatternService.n_minus_one_basis(-40, -2, 5)
        for cell in report_minus_one.cells:
            assert report_minus_one.dimension(*cell) == len(predicted.get(cell, ())), cell

    def test_predicted_words_form_bases(self, report_minus_one, element):
        predicted = PatternService.n_minus_one_basis(-40, -2, 5)
        for cell, labels in predicted.items():
            if cell not in report_minus_one.cells:
                continue
            elements = [element(label) for label in sorted(labels)]
            assert CohomologyService.classes_form_basis(report_minus_one, elements, cell), cell

    @pytest.mark.parametrize('cell,dimension', [((-7, 1), 0), ((-9, 1), 1), ((-14, 2), 1), ((-15, 2), 0)])
    def test_spot_dimensions(self, report_minus_one, cell, dimension):
        assert report_minus_one.dimension(*cell) == dimension

    def test_representatives(self, report_minus_one):
        assert [c.label for c in report_minus_one.classes_at(-15, 1)] == ['R13 y1']
        assert 'R23 R11 y1' in [c.label for c in report_minus_one.classes_at(-36, 2)]

    def test_weighted_dimension(self, report_minus_one):
        # d(R8 y2) = R9 R4 y1 has weight 2, so R8 y2 is a cycle of the weight <= 1 quotient
        assert CohomologyService.weighted_dimension(report_minus_one, (-14, 1), 2) == 1
        assert CohomologyService.weighted_dimension(report_minus_one, (-14, 1), 1) == 2
        assert CohomologyService.weighted_dimension(report_minus_one, (-14, 1), 0) == 0
        assert report_minus_one.dimension(-14, 1) == 1

    def test_weight_quotient_makes_new_cycles(self, report_minus_one):
        # d y2 = R5 y1 leaves the weight-0 quotient
        assert report_minus_one.dimension(-6, 0) == 0
        assert CohomologyService.weighted_dimension(report_minus_one, (-6, 0), 0) == 1
        assert CohomologyService.weighted_dimension(report_minus_one, (-6, 0), 1) == 0

    def test_euler_characteristic(self, report_minus_one):
        # d preserves x + s, and these diagonals lie inside the window
        for t in range(-20, -1):
            cells = [(t - s, s) for s in range(6)]
            homology = sum((-1) ** s * report_minus_one.dimension(x, s) for x, s in cells)
            chains = sum((-1) ** s * len(report_minus_one.slice.basis_at(x, s)) for x, s in cells)
            assert homology == chains, t

    def test_is_cycle(self, report_zero, element):
        assert CohomologyService.is_cycle(report_zero, element('R7 y1'))
        assert not CohomologyService.is_cycle(report_zero, element('R6 y1'))

    def test_class_of_non_cycle(self, report_zero, element):
        with pytest.raises(VerificationError):
            CohomologyService.class_of(report_zero, element('R6 y1'))

    def test_class_of_zero(self, report_zero, element):
        with pytest.raises(PreconditionError):
            CohomologyService.class_of(report_zero, element('0'))


class TestLevelZero:
    """v_0-towers on y1, R4 y1, R8 R4 y1, ... and v_0-torsion elsewhere."""

    def test_dimensions_match_prediction(self, report_zero):
        for x, s in report_zero.cells:
            assert report_zero.dimension(x, s) == PatternService.n_zero_dimension(x, s, -24, 4), (x, s)

    def test_tower_on_y1(self, report_zero, element):
        for k in range(5):
            assert not in_class(report_zero, element(f'v0^{k} y1' if k else 'y1'), (-2, k)).is_zero()

    def test_torsion(self, report_zero, element):
        assert not in_class(report_zero, element('R7 y1'), (-9, 1)).is_zero()
        assert in_class(report_zero, element('v0 R7 y1'), (-9, 2)).is_zero()

    def test_v_action(self, report_zero):
        action = CohomologyService.v_action(0, report_zero)
        assert action[(-2, 0)].column_bits(0) == 1
        assert action[(-9, 1)].is_zero()
        with pytest.raises(TruncationError):
            CohomologyService.v_action(1, report_zero)


class TestLevelOne:
    """Sawtooth relations and the first Bockstein."""

    def test_sawtooth(self, report_one, element):
        left = in_class(report_one, element('v0 R7 y1'), (-9, 2))
        right = in_class(report_one, element('v1 R9 y1'), (-9, 2))
        assert left == right
        assert not left.is_zero()
        assert in_class(report_one, element('v1 R7 y1'), (-7, 2)).is_zero()

    @pytest.mark.parametrize('k', [1, 2, 3, 4])
    def test_sawtooth_powers(self, report_one, element, k):
        left = in_class(report_one, element(f'v0^{k} R7 y1'), (-9, 1 + k))
        right = in_class(report_one, element(f'v1^{k} R{7 + 2 * k} y1'), (-9, 1 + k))
        assert left == right
        assert not left.is_zero()

    def test_single_classes(self, report_one):
        assert [c.label for c in report_one.classes_at(-9, 1)] == ['R7 y1']
        assert [c.label for c in report_one.classes_at(-11, 1)] == ['R9 y1']

    def test_d1_from_level_minus_one(self, element):
        low = CohomologyService.compute(Window(-10, -7, 2, -1))
        cell, image = CohomologyService.d1_image(element('R6 y1'), 0, low)
        assert cell == (-9, 1)
        assert image == element('R7 y1')

    def test_bockstein_records(self):
        records, low = CohomologyService.bockstein_d1(0, Window(-8, -8, 1, 0))
        assert len(records) == 1
        (record,) = records
        assert record.source.label == 'R6 y1'
        assert record.target_cell == (-9, 1)
        assert str(record.target) == 'R7 y1'
        assert record.to_dict()['v'] == 'v0'
        assert low.n == -1

    def test_d1_into_level_one(self, element):
        low = CohomologyService.compute(Window(-26, -18, 3, 0))
        cell, image = CohomologyService.d1_image(element('R13 R6 y1'), 1, low)
        assert cell == (-24, 2)
        found = in_class(low, image, cell)
        assert found == in_class(low, element('R15 R7 y1'), cell)
        assert not found.is_zero()

    def test_d1_vanishes_on_odd_odd_words(self):
        window = Window(-28, -14, 3, 1)
        records, low = CohomologyService.bockstein_d1(1, window)
        assert any(r.source.cell == (-21, 2) and r.target_cell == (-24, 2) for r in records)
        odd_odd = [
            c for c in low.all_classes()
            if window.contains(*c.cell) and len(c.representative) == 1 and _leads_odd_odd(c.representative)
        ]
        assert odd_odd
        sources = {(r.source.cell, r.source.index) for r in records}
        assert not any((c.cell, c.index) in sources for c in odd_odd)

    def test_bockstein_needs_level(self):
        with pytest.raises(PreconditionError):
            CohomologyService.bockstein_d1(-1, Window(-8, -8, 1, -1))


class TestLevelTwo:
    def test_hidden_extension(self, report_two, element):
        left = in_class(report_two, element('v0 R15 R7 y1'), (-24, 3))
        right = in_class(report_two, element('v2 R19 R9 y1'), (-24, 3))
        assert left == right
        assert not left.is_zero()

    def test_weight_two_generators(self, element):
        report = CohomologyService.compute(Window(-44, -2, 2, 2, 2, 2))
        pairs = PatternService.weight_two_generators(-44, -2)
        assert len(pairs) == 26
        for x in range(-44, -1):
            here = [element(f'R{a} R{b} y1') for a, b in pairs if -a - b - 2 == x]
            assert CohomologyService.filtered_dimension(report, (x, 2), 2) == len(here), x
            reducer = SpanReducer(report.dimension(x, 2))
            assert all(reducer.add(in_class(report, e, (x, 2)).bits) for e in here), x

    def test_filtered_dimension(self, report_minus_one):
        assert CohomologyService.filtered_dimension(report_minus_one, (-14, 1), 1) == 1
        assert CohomologyService.filtered_dimension(report_minus_one, (-14, 1), 2) == 0
        assert CohomologyService.filtered_dimension(report_minus_one, (-14, 2), 2) == 1


class TestCriticalGroup:
    """H at (x, s) = (-2, 3)."""

    def test_level_three(self):
        classes = CohomologyService.critical_group(3)
        assert [c.label for c in classes] == ['v0^3 y1']

    def test_level_four(self):
        classes = CohomologyService.critical_group(4)
        assert {c.label for c in classes} == {'v0^3 y1', 'v4 R23 R7 y1', 'v4 R21 R9 y1'}
        assert {c.weight for c in classes} == {0, 2}

    def test_predicted_classes_form_a_basis(self, element):
        report = CohomologyService.compute(Window(-2, -2, 3, 4, None, 3))
        elements = [element(label) for label in PatternService.critical_classes(4)]
        assert CohomologyService.classes_form_basis(report, elements, (-2, 3))

    @pytest.mark.slow
    def test_level_five(self, element):
        report = CohomologyService.compute(Window(-2, -2, 3, 5, None, 3))
        labels = PatternService.critical_classes(5)
        assert len(labels) == 10
        assert report.dimension(-2, 3) == 10
        assert CohomologyService.classes_form_basis(report, [element(label) for label in labels], (-2, 3))

    def test_negative_level(self):
        with pytest.raises(PreconditionError):
            CohomologyService.critical_group(-1)


class TestStability:
    """Weight-truncated comparison between levels."""

    def test_tensored_comparison(self):
        report = CohomologyService.stability_check(-1, 0, Window(-9, -2, 1, 0), 2)
        cells = {row.cell for row in report.mismatches}
        assert (-8, 1) in cells
        assert (-2, 1) not in cells
        assert not report.ok

    def test_untensored_comparison(self):
        report = CohomologyService.stability_check(-1, 0, Window(-9, -2, 1, 0), 2, tensor=False)
        assert (-2, 1) in {row.cell for row in report.mismatches}
        assert report.to_dict()['tensor'] is False

    def test_levels_ordered(self):
        with pytest.raises(PreconditionError):
            CohomologyService.stability_check(1, 1, Window(-9, -2, 1, 1), 2)

    def test_weight_two_degenerates(self):
        report = CohomologyService.stability_check(2, 3, Window(-40, -2, 3, 3), 2)
        assert report.ok, [row.to_dict() for row in report.mismatches]
        assert (-40, 3) in {row.cell for row in report.rows}

    @pytest.mark.slow
    @pytest.mark.parametrize('n', [3, 4])
    def test_weight_two_degenerates_to_filtration_six(self, n):
        report = CohomologyService.stability_check(2, n, Window(-40, -2, 6, n), 2)
        assert report.ok, [row.to_dict() for row in report.mismatches]
