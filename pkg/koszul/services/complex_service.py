"""Koszul cochain basis enumeration, the differential, matrix assembly and d^2 checks."""

import logging
from bisect import bisect_left, bisect_right
from functools import lru_cache

from koszul.models.complex import ComplexSlice, DSquaredReport
from koszul.models.matrix import Gf2Matrix
from koszul.models.monomial import Element, Monomial, v_degree
from koszul.models.presentation import TermKind
from koszul.services.operator_service import Convention, OperatorService
from koszul.utils.exceptions import CompletenessFault, PreconditionError
from koszul.utils.helpers import log_timing
from koszul.utils.validators import validate_window_bounds

logger = logging.getLogger(__name__)


@lru_cache(maxsize=None)
def admissible_words(length, total, lower):
    """Words a_1..a_length with a_j >= 2 a_{j+1}, last entry >= lower, summing to total."""
    if length == 0:
        return ((),) if total == 0 else ()
    lower = max(lower, 1)
    out = []
    c = lower
    # the smallest word ending in c is c (2^length - 1)
    while c * ((1 << length) - 1) <= total:
        for prefix in admissible_words(length - 1, total - c, 2 * c):
            out.append(prefix + (c,))
        c += 1
    return tuple(out)


@lru_cache(maxsize=None)
def v_parts(count, n):
    """Exponent tuples over v_0..v_n with the given total exponent, with their degrees."""
    if n < 0:
        return (((), 0),) if count == 0 else ()
    out = []

    def build(index, remaining, exponents):
        if index == n:
            full = exponents + [remaining]
            out.append((tuple(full), sum(k * v_degree(i) for i, k in enumerate(full))))
            return
        for k in range(remaining, -1, -1):
            build(index + 1, remaining - k, exponents + [k])

    build(0, count, [])
    return tuple(out)


class KoszulDifferential:
    """The differential of the level-n complex on a fixed presentation."""

    def __init__(self, presentation, n, convention=Convention.DEGREE):
        self.presentation = presentation
        self.n = n
        self.convention = convention
        self._words = {}

    def _on_generator(self, generator):
        out = frozenset()
        for term in self.presentation.terms_for(generator.id):
            target = Monomial.of(self.presentation.generator(term.target))
            if term.kind is TermKind.R:
                out = out ^ OperatorService.apply_R(term.index, target, self.n, self.convention).terms
            elif term.index <= self.n:
                out = out ^ {target.times_v(term.index)}
        return out

    def of_word(self, word, generator):
        """d(R^{a_1}...R^{a_m} y) as a set of monomials."""
        key = (word, generator)
        cached = self._words.get(key)
        if cached is not None:
            return cached
        if not word:
            out = self._on_generator(generator)
        else:
            a, tail = word[0], word[1:]
            inner = Monomial((), tail, generator)
            out = frozenset()
            if a % 2 == 0:
                for k in range(self.n + 1):
                    shifted = a + self.convention.differential_shift(k)
                    image = OperatorService.apply_R(shifted, inner, self.n, self.convention)
                    out = out ^ frozenset(t.times_v(k) for t in image.terms)
            d_tail = self.of_word(tail, generator)
            if d_tail:
                out = out ^ OperatorService.apply_R(a, Element(d_tail), self.n, self.convention).terms
        self._words[key] = out
        return out

    def of_monomial(self, m):
        image = self.of_word(m.word, m.generator)
        if not m.v:
            return Element(image)
        return Element(frozenset(t.times_v_monomial(m.v) for t in image))

    def __call__(self, e):
        if isinstance(e, Monomial):
            return self.of_monomial(e)
        out = frozenset()
        for m in e.terms:
            out = out ^ self.of_monomial(m).terms
        return Element(out)


@lru_cache(maxsize=64)
def differential_for(presentation, n, convention=Convention.DEGREE):
    """Shared differential engine per (presentation, level, convention)."""
    return KoszulDifferential(presentation, n, convention)


class ComplexService:
    """Service for building slices of the Koszul complex."""

    @staticmethod
    def generator_floor(window):
        """Lowest generator degree that can contribute a monomial to ``window``."""
        top_v = v_degree(window.n) if window.n >= 0 else 0
        return window.x_min - window.s_max * top_v

    @staticmethod
    def enumerate_basis(w, mod):
        """Admissible monomials per (x, s) cell of ``w``, in canonical order."""
        valid, errors = validate_window_bounds(w.x_min, w.x_max, w.s_max, w.n, w.weight_max, w.s_min)
        if not valid:
            raise PreconditionError("invalid window", errors)
        floor = ComplexService.generator_floor(w)
        generators = [g for g in mod.generators if g.degree >= floor]
        basis = {}
        for x, s in w.cells():
            cell = []
            for generator in generators:
                lower = 2 - generator.degree
                for e in range(s + 1):
                    m = s - e
                    if w.weight_max is not None and m > w.weight_max:
                        continue
                    for exponents, degree in v_parts(e, w.n):
                        total = generator.degree + degree - x
                        if total < 0 or (m == 0 and total != 0):
                            continue
                        for word in admissible_words(m, total, lower):
                            cell.append(Monomial(exponents, word, generator))
            cell.sort(key=Monomial.sort_key)
            basis[(x, s)] = tuple(cell)
        logger.debug(f"Enumerated {sum(len(b) for b in basis.values())} monomials over {len(basis)} cells")
        return basis

    @staticmethod
    def differential(m, w, mod, convention=Convention.DEGREE):
        """d(m) at level w.n, as a normal-form element."""
        return differential_for(mod, w.n, convention)(m)

    @staticmethod
    @log_timing
    def assemble(w, mod, convention=Convention.DEGREE):
        """Bases over the padded window and the differential matrices between them."""
        region = w.padded()
        basis = ComplexService.enumerate_basis(region, mod)
        index = {cell: {m: j for j, m in enumerate(ms)} for cell, ms in basis.items()}
        d = differential_for(mod, w.n, convention)
        matrices = {}
        for (x, s), sources in basis.items():
            target_cell = (x - 1, s + 1)
            if target_cell not in basis:
                continue
            positions = index[target_cell]
            columns = []
            for m in sources:
                bits = 0
                for term in d.of_monomial(m).terms:
                    if w.weight_max is not None and term.weight > w.weight_max:
                        continue
                    row = positions.get(term)
                    if row is None:
                        logger.error(f"d({m}) has term {term} outside the basis at {target_cell}")
                        raise CompletenessFault(
                            f"d({m}) leaves the enumerated region at {target_cell}: {term}; widen the window",
                            monomial=term,
                            cell=target_cell,
                        )
                    bits ^= 1 << row
                columns.append(bits)
            matrices[(x, s)] = Gf2Matrix.from_columns(columns, len(positions))
        slice_ = ComplexSlice(w, region, mod, convention, basis, index, matrices)
        logger.info(f"Assembled {slice_!r}")
        return slice_

    @staticmethod
    def check_d_squared(slice_):
        """Compose successive matrices and list every monomial with d^2 != 0."""
        report = DSquaredReport(slice_.n, slice_.convention.value)
        for (x, s), first in sorted(slice_.d_matrices.items()):
            second = slice_.d_matrices.get((x - 1, s + 1))
            if second is None:
                continue
            product = second.matmul(first)
            report.checked += first.cols
            for j in range(product.cols):
                if product.column_bits(j):
                    report.failures.append(str(slice_.basis[(x, s)][j]))
        return report

    @staticmethod
    def v_free_parts(w, mod):
        """v-free monomials m with some v^K m in ``w``, each with the number of such K."""
        valid, errors = validate_window_bounds(w.x_min, w.x_max, w.s_max, w.n, w.weight_max, w.s_min)
        if not valid:
            raise PreconditionError("invalid window", errors)
        floor = ComplexService.generator_floor(w)
        top_v = v_degree(w.n) if w.n >= 0 else 0
        degrees = {e: sorted(degree for _, degree in v_parts(e, w.n)) for e in range(w.s_max + 1)}
        parts = {}
        for generator in (g for g in mod.generators if g.degree >= floor):
            lower = 2 - generator.degree
            for length in range(w.s_max + 1):
                if w.weight_max is not None and length > w.weight_max:
                    continue
                counts = range(max(0, w.s_min - length), w.s_max - length + 1)
                highest = generator.degree - w.x_min + (w.s_max - length) * top_v
                for total in range(max(0, generator.degree - w.x_max), highest + 1):
                    words = admissible_words(length, total, lower)
                    if not words:
                        continue
                    x = generator.degree - total
                    count = sum(
                        bisect_right(degrees[e], w.x_max - x) - bisect_left(degrees[e], w.x_min - x) for e in counts
                    )
                    if count:
                        for word in words:
                            parts[Monomial((), word, generator)] = count
        return parts

    @staticmethod
    @log_timing
    def sweep_d_squared(w, mod, convention=Convention.DEGREE, top_level=None, squares=None):
        """Element-level d(d(m)) = 0 over every basis monomial of ``w``.

        d commutes with the v_i, so each v-free part is checked once and counted
        with its multiples. With ``top_level`` the square is taken there and
        truncated to w.n; ``squares`` keeps those squares between calls.
        """
        top = w.n if top_level is None else max(top_level, w.n)
        d = differential_for(mod, top, convention)
        squares = {} if squares is None else squares
        report = DSquaredReport(w.n, convention.value)
        for m, count in sorted(ComplexService.v_free_parts(w, mod).items(), key=lambda item: item[0].sort_key()):
            key = (top, convention, m.word, m.generator)
            if key not in squares:
                squares[key] = d(d(m))
            report.checked += count
            if not squares[key].truncate(w.n).is_zero():
                report.failures.append(str(m))
        logger.info(
            f"d^2 sweep at n={w.n} ({convention.value}): {report.checked} checked, {len(report.failures)} failures"
        )
        return report


enumerate_basis = ComplexService.enumerate_basis
differential = ComplexService.differential
assemble = ComplexService.assemble
check_d_squared = ComplexService.check_d_squared
