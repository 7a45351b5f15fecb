"""Tests for basis enumeration, the Koszul differential and d^2 checks."""

import time

import pytest

from koszul.models.complex import Window
from koszul.models.monomial import Element, Monomial
from koszul.services.complex_service import ComplexService, admissible_words, v_parts
from koszul.services.operator_service import Convention
from koszul.services.pattern_service import PatternService
from koszul.services.presentation_service import PresentationService
from koszul.services.selftest_service import SelftestService
from koszul.utils.exceptions import PreconditionError


class TestEnumeration:
    """Admissible words and per-cell bases."""

    def test_admissible_words(self):
        assert admissible_words(2, 13, 4) == ((9, 4),)
        assert admissible_words(1, 3, 4) == ()
        assert admissible_words(0, 0, 4) == ((),)
        assert (16, 8, 4) in admissible_words(3, 28, 4)

    def test_v_parts(self):
        assert v_parts(0, -1) == (((), 0),)
        assert v_parts(1, -1) == ()
        assert sorted(v_parts(1, 1)) == [((0, 1), 2), ((1, 0), 0)]

    def test_basis_at_level_minus_one(self, bp):
        basis = ComplexService.enumerate_basis(Window(-16, -6, 2, -1), bp)
        labels = {cell: [str(m) for m in ms] for cell, ms in basis.items()}
        assert labels[(-6, 0)] == ['y2']
        assert labels[(-7, 1)] == ['R5 y1']
        assert labels[(-14, 0)] == ['y3']
        assert labels[(-14, 1)] == ['R8 y2', 'R12 y1']
        assert labels[(-15, 1)] == ['R9 y2', 'R13 y1']
        assert labels[(-14, 2)] == ['R8 R4 y1']
        assert labels[(-15, 2)] == ['R9 R4 y1']

    def test_basis_is_admissible_and_in_cell(self, bp):
        basis = ComplexService.enumerate_basis(Window(-30, -2, 4, 1), bp)
        for cell, monomials in basis.items():
            assert len(set(monomials)) == len(monomials)
            for m in monomials:
                assert m.is_admissible()
                assert m.bidegree.cell == cell
                assert m.v_level <= 1

    def test_weight_filter(self, bp):
        basis = ComplexService.enumerate_basis(Window(-40, -2, 4, 0, weight_max=1), bp)
        assert all(m.weight <= 1 for ms in basis.values() for m in ms)
        assert any(m.weight == 1 for ms in basis.values() for m in ms)

    def test_invalid_window(self, bp):
        with pytest.raises(PreconditionError):
            ComplexService.enumerate_basis(Window(-2, -10, 3, 0), bp)


class TestDifferential:
    """The differential on monomials."""

    def test_generators(self, bp, element, monomial):
        w = Window(-16, -2, 2, -1)
        assert ComplexService.differential(monomial('y1'), w, bp).is_zero()
        assert ComplexService.differential(monomial('y2'), w, bp) == element('R5 y1')
        assert ComplexService.differential(monomial('y3'), w, bp) == element('R13 y1 + R9 y2')
        assert ComplexService.differential(monomial('R8 y2'), w, bp) == element('R9 R4 y1')

    def test_even_index_emits_v_terms(self, bp, element, monomial):
        w = Window(-16, -2, 2, 1)
        assert ComplexService.differential(monomial('R6 y1'), w, bp) == element('v0 R7 y1 + v1 R9 y1')
        assert ComplexService.differential(monomial('R6 y1'), w.at_level(0), bp) == element('v0 R7 y1')
        assert ComplexService.differential(monomial('R6 y1'), w.at_level(-1), bp).is_zero()

    def test_level_zero_closed_form(self):
        mod = PresentationService.bp_preset(1)
        w = Window(-40, -2, 4, 0)
        for monomials in ComplexService.enumerate_basis(w, mod).values():
            for m in monomials:
                predicted = PatternService.predicted_n_zero_differential(m.word, m.v_exponent(0))
                expected = Element.zero()
                if predicted is not None:
                    exponent, word = predicted
                    expected = Element.of(Monomial((exponent,), word, m.generator))
                assert ComplexService.differential(m, w, mod) == expected, str(m)

    def test_odd_words_are_cycles(self):
        mod = PresentationService.bp_preset(1)
        w = Window(-60, -2, 3, 2)
        for monomials in ComplexService.enumerate_basis(w, mod).values():
            for m in monomials:
                if all(a % 2 for a in m.word):
                    assert ComplexService.differential(m, w, mod).is_zero(), str(m)

    def test_v_multiplication_is_a_chain_map(self, bp):
        w = Window(-30, -2, 3, 2)
        for monomials in ComplexService.enumerate_basis(w, bp).values():
            for m in monomials:
                image = ComplexService.differential(m, w, bp)
                for i in range(3):
                    assert ComplexService.differential(m.times_v(i), w, bp) == image.times_v(i), (str(m), i)

    def test_weight_never_drops(self, bp):
        w = Window(-40, -2, 3, 2)
        for monomials in ComplexService.enumerate_basis(w, bp).values():
            for m in monomials:
                assert all(t.weight >= m.weight for t in ComplexService.differential(m, w, bp).terms), str(m)

    def test_truncation_compatible(self, bp):
        w = Window(-30, -2, 3, 1)
        for monomials in ComplexService.enumerate_basis(w.at_level(0), bp).values():
            for m in monomials:
                high = ComplexService.differential(m, w, bp)
                low = ComplexService.differential(m, w.at_level(0), bp)
                assert high.truncate(0) == low, str(m)


class TestDSquared:
    """d^2 = 0 under the adopted convention only."""

    def test_matrices_compose_to_zero(self, bp):
        slice_ = ComplexService.assemble(Window(-30, -2, 3, 1), bp)
        report = ComplexService.check_d_squared(slice_)
        assert report.ok
        assert report.checked > 0

    @pytest.mark.parametrize('n', [-1, 0, 1, 2])
    def test_sweep_degree_convention(self, n):
        w = Window(-32, 0, 4, n)
        mod = PresentationService.bp_preset(PresentationService.bp_k_max_for(ComplexService.generator_floor(w)))
        report = ComplexService.sweep_d_squared(w, mod, Convention.DEGREE)
        assert report.ok, report.failures[:5]

    def test_sweep_literal_convention_fails(self):
        w = Window(-32, 0, 4, 0)
        mod = PresentationService.bp_preset(PresentationService.bp_k_max_for(ComplexService.generator_floor(w)))
        report = ComplexService.sweep_d_squared(w, mod, Convention.LITERAL)
        assert not report.ok

    def test_slice_vectors(self, bp, element):
        slice_ = ComplexService.assemble(Window(-16, -6, 2, -1), bp)
        cell = (-15, 1)
        bits = slice_.vector_of(element('R13 y1 + R9 y2'), cell)
        assert bits == 0b11
        assert slice_.element_of(bits, cell) == element('R9 y2 + R13 y1')
        assert slice_.vector_of(element('R5 y1'), cell) is None
        assert slice_.d_matrices[(-14, 0)].column_bits(0) == 0b11

    @pytest.mark.slow
    @pytest.mark.parametrize('n', [3, 4])
    def test_sweep_high_levels(self, n):
        w = Window(-64, 0, 6, n)
        mod = PresentationService.bp_preset(PresentationService.bp_k_max_for(ComplexService.generator_floor(w)))
        assert ComplexService.sweep_d_squared(w, mod).ok

    @pytest.mark.parametrize('w', [Window(-30, 0, 4, 2), Window(-40, -2, 5, 1, 2, 2)])
    def test_v_free_parts_count_the_basis(self, bp, w):
        counts = ComplexService.v_free_parts(w, bp)
        basis = ComplexService.enumerate_basis(w, bp)
        assert sum(counts.values()) == sum(len(ms) for ms in basis.values())
        assert all(not m.v for m in counts)

    def test_shared_squares_match_direct_sweeps(self):
        w = Window(-24, 0, 4, 2)
        mod = PresentationService.bp_preset(PresentationService.bp_k_max_for(ComplexService.generator_floor(w)))
        squares = {}
        for n in (0, 1, 2):
            shared = ComplexService.sweep_d_squared(w.at_level(n), mod, Convention.LITERAL, 2, squares)
            direct = ComplexService.sweep_d_squared(w.at_level(n), mod, Convention.LITERAL)
            assert shared.failures == direct.failures
            assert shared.checked == direct.checked

    @pytest.mark.slow
    def test_full_sweep_within_a_minute(self):
        started = time.perf_counter()
        checks = SelftestService.d_squared_sweeps()
        elapsed = time.perf_counter() - started
        assert all(check.ok for check in checks), [check.name for check in checks if not check.ok]
        assert len(checks) == 11
        assert elapsed < 60
