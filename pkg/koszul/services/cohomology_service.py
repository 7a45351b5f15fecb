"""Cohomology of assembled slices, v_i-actions, the critical group, Bockstein d_1 and stability."""

import logging

from koszul.models.complex import Window
from koszul.models.matrix import Gf2Matrix, Gf2Vector
from koszul.models.monomial import Element, v_degree
from koszul.models.report import (
    BocksteinRecord,
    CellCohomology,
    ClassRecord,
    CohomologyReport,
    StabilityReport,
    StabilityRow,
)
from koszul.services.complex_service import ComplexService, differential_for, v_parts
from koszul.services.gf2_service import Gf2Service, SpanReducer
from koszul.services.presentation_service import PresentationService
from koszul.utils.constants import CRITICAL_BIDEGREE
from koszul.utils.exceptions import (
    CompletenessFault,
    PreconditionError,
    TruncationError,
    VerificationError,
)
from koszul.utils.helpers import log_timing

logger = logging.getLogger(__name__)


def _preference(monomial):
    # single-monomial representatives are tried generator first, so labels read y1-classes
    return (monomial.generator.index, monomial.v, monomial.word)


def _weight_mask(basis, weight_max):
    mask = 0
    for j, m in enumerate(basis):
        if m.weight <= weight_max:
            mask |= 1 << j
    return mask


class CohomologyService:
    """Service for cohomology computations on Koszul slices."""

    @staticmethod
    def _cell(slice_, cell):
        basis = slice_.basis_at(*cell)
        d_out = slice_.d_matrices.get(cell)
        if d_out is None:
            raise CompletenessFault(f"no outgoing differential at {cell}", cell=cell)
        x, s = cell
        d_in = slice_.d_matrices.get((x + 1, s - 1))

        reducer = SpanReducer(len(basis))
        boundaries = 0
        if d_in is not None:
            for j in range(d_in.cols):
                if reducer.add(d_in.column_bits(j)):
                    boundaries += 1

        kernel = Gf2Service.kernel_basis(d_out)
        reps = []
        # single-monomial cycles first
        for j in sorted(range(len(basis)), key=lambda k: _preference(basis[k])):
            if d_out.column_bits(j) == 0 and reducer.add(1 << j, 1 << len(reps)):
                reps.append(1 << j)
        for z in kernel:
            remainder, _ = reducer.reduce(z.bits)
            if remainder:
                reducer.add(remainder, 1 << len(reps))
                reps.append(remainder)

        if boundaries + len(reps) != len(kernel):
            raise VerificationError(
                f"cohomology bookkeeping failed at {cell}: {len(kernel)} cycles, "
                f"{boundaries} boundaries, {len(reps)} classes (is d^2 = 0?)"
            )

        classes = []
        for index, bits in enumerate(reps):
            element = slice_.element_of(bits, cell)
            weight = min(m.weight for m in element.terms)
            classes.append(ClassRecord(cell, index, element, weight))
        return CellCohomology(cell, len(kernel), boundaries, classes, reducer)

    @staticmethod
    @log_timing
    def cohomology(slice_):
        """Per-cell cohomology over the valid window of ``slice_``."""
        report = CohomologyReport(slice_.window, slice_.n, slice_.presentation.name, slice=slice_)
        for cell in slice_.window.cells():
            report.cells[cell] = CohomologyService._cell(slice_, cell)
            if report.cells[cell].dimension:
                logger.debug(f"H{cell} has dimension {report.cells[cell].dimension}")
        logger.info(f"Computed {report!r}")
        return report

    @staticmethod
    def compute(w, mod=None, convention=None):
        """Assemble and take cohomology; ``mod`` defaults to the BP preset sized for ``w``."""
        if mod is None:
            mod = PresentationService.bp_preset(
                PresentationService.bp_k_max_for(ComplexService.generator_floor(w.padded()))
            )
        kwargs = {} if convention is None else {'convention': convention}
        return CohomologyService.cohomology(ComplexService.assemble(w, mod, **kwargs))

    @staticmethod
    def class_of(report, element):
        """Coordinates of the class of a cycle in the report's basis at its cell."""
        if element.is_zero():
            raise PreconditionError("the zero element has no cell; use class_at")
        if not element.is_homogeneous():
            raise PreconditionError(f"element {element} is not homogeneous")
        cell = element.leading_term().bidegree.cell
        return CohomologyService.class_at(report, element, cell)

    @staticmethod
    def class_at(report, element, cell):
        data = report.cells.get(cell)
        if data is None:
            raise CompletenessFault(f"{cell} lies outside the report window", cell=cell)
        bits = report.slice.vector_of(element, cell)
        if bits is None:
            raise CompletenessFault(f"{element} has terms outside the basis at {cell}", cell=cell)
        remainder, combo = data.reducer.reduce(bits)
        if remainder:
            raise VerificationError(f"{element} is not a cycle")
        return Gf2Vector(data.dimension, combo)

    @staticmethod
    def is_cycle(report, element):
        d = differential_for(report.slice.presentation, report.n, report.slice.convention)
        image = d(element)
        if report.window.weight_max is not None:
            image = Element(frozenset(m for m in image.terms if m.weight <= report.window.weight_max))
        return image.is_zero()

    @staticmethod
    def classes_form_basis(report, elements, cell):
        """True when ``elements`` are cycles whose classes form a basis of H at ``cell``."""
        data = report.cells.get(cell)
        if data is None or len(elements) != data.dimension:
            return False
        reducer = SpanReducer(data.dimension)
        for element in elements:
            try:
                coordinates = CohomologyService.class_at(report, element, cell)
            except VerificationError:
                return False
            if not reducer.add(coordinates.bits):
                return False
        return True

    @staticmethod
    def v_action(i, report, slice_=None):
        """Matrices of [z] -> [v_i z] between cells of the valid window."""
        slice_ = slice_ or report.slice
        if i > report.n or i < 0:
            raise TruncationError(f"v{i} does not act at level n={report.n}")
        shift = v_degree(i)
        action = {}
        for (x, s), data in sorted(report.cells.items()):
            target = (x + shift, s + 1)
            if target not in report.cells:
                continue
            columns = []
            for record in data.classes:
                image = record.representative.times_v(i)
                columns.append(CohomologyService.class_at(report, image, target).bits)
            action[(x, s)] = Gf2Matrix.from_columns(columns, report.cells[target].dimension)
        report.v_actions[i] = action
        return action

    @staticmethod
    def weighted_dimension(report, cell, weight_max):
        """Dimension of H at ``cell`` of the quotient complex of weight <= weight_max.

        Weight never drops under d, so the monomials above weight_max span a
        subcomplex; both matrices are restricted to the remaining coordinates.
        """
        slice_ = report.slice
        x, s = cell
        basis = slice_.basis_at(*cell)
        mask = _weight_mask(basis, weight_max)
        kept = [j for j in range(len(basis)) if (mask >> j) & 1]
        target = slice_.basis_at(x - 1, s + 1)
        outgoing = SpanReducer(len(target))
        target_mask = _weight_mask(target, weight_max)
        d_out = slice_.d_matrices[cell]
        for j in kept:
            outgoing.add(d_out.column_bits(j) & target_mask)
        incoming = SpanReducer(len(basis))
        d_in = slice_.d_matrices.get((x + 1, s - 1))
        if d_in is not None:
            source = slice_.basis_at(x + 1, s - 1)
            for j in range(d_in.cols):
                if source[j].weight <= weight_max:
                    incoming.add(d_in.column_bits(j) & mask)
        return len(kept) - outgoing.size - incoming.size

    @staticmethod
    def filtered_dimension(report, cell, weight_min):
        """Dimension of the part of H at ``cell`` carried by cycles of weight >= weight_min."""
        slice_ = report.slice
        x, s = cell
        basis = slice_.basis_at(*cell)
        high = [j for j, m in enumerate(basis) if m.weight >= weight_min]
        d_out = slice_.d_matrices[cell]
        restricted = Gf2Matrix.from_columns([d_out.column_bits(j) for j in high], d_out.rows)
        reducer = SpanReducer(len(basis))
        d_in = slice_.d_matrices.get((x + 1, s - 1))
        if d_in is not None:
            for j in range(d_in.cols):
                reducer.add(d_in.column_bits(j))
        boundaries = reducer.size
        for z in Gf2Service.kernel_basis(restricted):
            reducer.add(sum(1 << high[k] for k in z.support()))
        return reducer.size - boundaries

    @staticmethod
    @log_timing
    def critical_group(n, mod=None, convention=None):
        """Basis of H at (x, s) = (-2, 3) at level n, with weight tags."""
        if n < 0:
            raise PreconditionError("the critical group needs n >= 0")
        x, s = CRITICAL_BIDEGREE['X'], CRITICAL_BIDEGREE['S']
        window = Window(x, x, s, n, None, s)
        report = CohomologyService.compute(window, mod, convention)
        classes = report.classes_at(x, s)
        logger.info(f"Critical group at n={n} has {len(classes)} classes")
        return classes

    @staticmethod
    def d1_image(element, n, low_report):
        """Bockstein d_1 of a level-(n-1) cycle: (target cell, v_n-quotient element at level n-1)."""
        d = differential_for(low_report.slice.presentation, n, low_report.slice.convention)
        image = d(element)
        quotient = []
        for m in image.terms:
            divided = m.divide_v(n)
            if divided is None:
                raise VerificationError(f"{element} is not a cycle at level {n - 1}: term {m}")
            quotient.append(divided)
        reduced = Element.of(*quotient).truncate(n - 1)
        x, s = element.leading_term().bidegree.cell
        return (x - 1 - v_degree(n), s), reduced

    @staticmethod
    @log_timing
    def bockstein_d1(n, w, mod=None, convention=None):
        """Non-zero d_1 differentials out of level n-1 classes in ``w``."""
        if n < 0:
            raise PreconditionError("Bockstein d_1 needs n >= 0")
        extended = Window(w.x_min - 1 - v_degree(n), w.x_max, w.s_max, n - 1, w.weight_max, w.s_min)
        low = CohomologyService.compute(extended, mod, convention)
        records = []
        for record in low.all_classes():
            if not w.contains(*record.cell):
                continue
            target_cell, reduced = CohomologyService.d1_image(record.representative, n, low)
            if reduced.is_zero():
                continue
            coordinates = CohomologyService.class_at(low, reduced, target_cell)
            if coordinates.is_zero():
                continue
            records.append(BocksteinRecord(record, target_cell, reduced, coordinates.to_list(), n))
        logger.info(f"Found {len(records)} non-zero d_1 differentials into level {n}")
        return records, low

    @staticmethod
    def _low_cells(w, n_lo, n_hi, tensor):
        """(x, s) cells of level n_lo feeding each cell of ``w``, with the feeding map."""
        feeds = {}
        for x, s in w.cells():
            sources = []
            if not tensor:
                sources.append((x, s))
            else:
                for e in range(s + 1):
                    for exponents, degree in v_parts(e, n_hi):
                        if any(exponents[: n_lo + 1]):
                            continue
                        sources.append((x - degree, s - e))
            feeds[(x, s)] = sources
        return feeds

    @staticmethod
    @log_timing
    def stability_check(n_lo, n_hi, w, weight_max, mod=None, tensor=True, convention=None):
        """Compare weight-truncated H at level n_hi with level n_lo tensored with v_{n_lo+1..n_hi}.

        Both levels are computed on the quotient complex of weight <= weight_max.
        """
        if n_lo >= n_hi:
            raise PreconditionError(f"need n_lo < n_hi, got {n_lo} and {n_hi}")
        high = CohomologyService.compute(w.at_level(n_hi).with_weight(weight_max), mod, convention)
        feeds = CohomologyService._low_cells(w, n_lo, n_hi, tensor)

        bands = {}
        for sources in feeds.values():
            for x, s in sources:
                lo, hi = bands.get(s, (x, x))
                bands[s] = (min(lo, x), max(hi, x))
        low_dims = {}
        for s, (x_lo, x_hi) in sorted(bands.items()):
            low = CohomologyService.compute(Window(x_lo, x_hi, s, n_lo, weight_max, s), mod, convention)
            for x in range(x_lo, x_hi + 1):
                low_dims[(x, s)] = low.dimension(x, s)

        report = StabilityReport(n_lo, n_hi, weight_max, tensor)
        for cell, sources in sorted(feeds.items()):
            predicted = sum(low_dims.get(source, 0) for source in sources)
            report.rows.append(StabilityRow(cell, high.dimension(*cell), predicted))
        logger.info(f"Stability {n_lo}->{n_hi} in weight <= {weight_max}: {len(report.mismatches)} mismatches")
        return report


cohomology = CohomologyService.cohomology
v_action = CohomologyService.v_action
critical_group = CohomologyService.critical_group
bockstein_d1 = CohomologyService.bockstein_d1
stability_check = CohomologyService.stability_check
