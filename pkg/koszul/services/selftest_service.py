"""Bundled self-test: d^2 sweeps under both exponent conventions, rewriting confluence and golden values."""

import logging

from koszul.models.complex import Window
from koszul.models.qpolynomial import QPolynomial
from koszul.models.report import CheckResult, SelftestReport
from koszul.services.cohomology_service import CohomologyService
from koszul.services.complex_service import ComplexService
from koszul.services.dyer_lashof_service import DyerLashofService
from koszul.services.expression_service import ExpressionService
from koszul.services.gf2_service import SpanReducer
from koszul.services.operator_service import Convention, OperatorService
from koszul.services.pattern_service import PatternService
from koszul.services.presentation_service import PresentationService
from koszul.utils.exceptions import KoszulError
from koszul.utils.helpers import log_timing

logger = logging.getLogger(__name__)

SWEEP_LEVELS = (-1, 0, 1, 2, 3, 4)
SWEEP_WINDOW = {'X_MIN': -64, 'X_MAX': 0, 'S_MAX': 8}
QUICK_SWEEP_WINDOW = {'X_MIN': -32, 'X_MAX': 0, 'S_MAX': 4}


def _bp_for(window):
    return PresentationService.bp_preset(PresentationService.bp_k_max_for(ComplexService.generator_floor(window)))


def _y1_element(text, mod):
    return OperatorService.parse_element(text, mod.generator_map)


class SelftestService:
    """Service running the engine's consistency checks."""

    @staticmethod
    def d_squared_sweeps(levels=SWEEP_LEVELS, bounds=None):
        """d^2 = 0 must hold under the degree convention and fail under the literal one for n >= 0.

        Squares are taken once at the highest level and truncated to each lower one.
        """
        bounds = bounds or SWEEP_WINDOW
        top = max(levels)
        mod = _bp_for(Window(bounds['X_MIN'], bounds['X_MAX'], bounds['S_MAX'], top))
        squares = {}
        checks = []
        for n in levels:
            window = Window(bounds['X_MIN'], bounds['X_MAX'], bounds['S_MAX'], n)
            adopted = ComplexService.sweep_d_squared(window, mod, Convention.DEGREE, top, squares)
            detail = f"{adopted.checked} monomials, {len(adopted.failures)} failures"
            if adopted.failures:
                detail += f" (first: {adopted.failures[0]})"
            checks.append(CheckResult(f'd^2 = 0 at n={n}', adopted.ok, detail))
            if n < 0:
                continue
            rejected = ComplexService.sweep_d_squared(window, mod, Convention.LITERAL, top, squares)
            checks.append(
                CheckResult(
                    f'literal convention breaks d^2 at n={n}',
                    not rejected.ok,
                    f"{len(rejected.failures)} failures out of {rejected.checked}",
                )
            )
        return checks

    @staticmethod
    def r_confluence(limit, degree=-2):
        """Triples 4 <= c < b < a <= limit where rewriting R^a R^b first disagrees with right-to-left on R^c y."""
        counterexamples = []
        for a in range(6, limit + 1):
            for b in range(a // 2 + 1, a):
                for c in range(4, b):
                    direct = OperatorService.normal_form_word((a, b, c), degree)
                    rewritten = frozenset()
                    for p, q in OperatorService.adem_reduce_R(a, b):
                        rewritten = rewritten ^ OperatorService.normal_form_word((p, q, c), degree)
                    if direct != rewritten:
                        counterexamples.append((a, b, c))
        return counterexamples

    @staticmethod
    def q_confluence(limit, degree=2):
        """Triples Q^r Q^s Q^t (r, s, t <= limit) where rewriting (r, s) first disagrees with right-to-left."""
        x = DyerLashofService.generator('x', degree)
        counterexamples = []
        for t in range(limit + 1):
            inner = DyerLashofService.q_apply(t, x)
            if inner.is_zero():
                continue
            for s in range(limit + 1):
                middle = DyerLashofService.q_apply(s, inner)
                for r in range(2 * s + 1, limit + 1):
                    direct = DyerLashofService.q_apply(r, middle)
                    rewritten = QPolynomial.zero()
                    for p, q in DyerLashofService.adem_reduce_Q(r, s):
                        rewritten = rewritten + DyerLashofService.q_apply(p, DyerLashofService.q_apply(q, inner))
                    if direct != rewritten:
                        counterexamples.append((r, s, t))
        return counterexamples

    @staticmethod
    def golden_checks():
        """Fixed values from the BP calculations and the Dyer-Lashof relations."""
        checks = []
        for name, check in GOLDEN_CHECKS:
            try:
                ok, detail = check()
            except KoszulError as e:
                logger.error(f"Golden check '{name}' raised {e.__class__.__name__}: {e.message}")
                ok, detail = False, f"{e.__class__.__name__}: {e.message}"
            checks.append(CheckResult(name, ok, detail))
        return checks

    @staticmethod
    @log_timing
    def run(quick=False, confluence_limit=None):
        report = SelftestReport()
        bounds = QUICK_SWEEP_WINDOW if quick else SWEEP_WINDOW
        report.checks.extend(SelftestService.d_squared_sweeps(bounds=bounds))
        limit = confluence_limit or (16 if quick else 64)
        for side, sweep in (('R', SelftestService.r_confluence), ('Q', SelftestService.q_confluence)):
            bad = sweep(limit)
            name = f'{side}-side confluence up to {limit}'
            report.checks.append(CheckResult(name, not bad, f"{len(bad)} counterexamples"))
        report.checks.extend(SelftestService.golden_checks())
        logger.info(f"Self-test: {len(report.checks) - len(report.failures)} passed, {len(report.failures)} failed")
        return report


def _adem_r_identities():
    y1 = PresentationService.bp_preset(1)
    inner = OperatorService.apply_R(8, _y1_element('R5 y1', y1), -1)
    found = {
        'R9 R5': OperatorService.adem_reduce_R(9, 5),
        'R8 R5': OperatorService.adem_reduce_R(8, 5),
        'R16 R8 R5 y1': str(OperatorService.apply_R(16, inner, -1)),
    }
    ok = (
        found['R9 R5'] == frozenset()
        and found['R8 R5'] == frozenset([(9, 4)])
        and found['R16 R8 R5 y1'] == 'R17 R8 R4 y1'
    )
    return ok, f"R16 R8 R5 y1 = {found['R16 R8 R5 y1']}"


def _adem_q_identities():
    x = DyerLashofService.generator('x', 2)
    value = DyerLashofService.q_apply(22, DyerLashofService.q_apply(6, x))
    expected = ExpressionService.parse('Q17(Q11(x)) + Q15(Q13(x))')
    ok = DyerLashofService.adem_reduce_Q(9, 4) == frozenset() and value == expected
    return ok, f"Q22 Q6 x = {value}"


def _n_minus_one_spots():
    report = CohomologyService.compute(Window(-15, -7, 2, -1))
    expected = {(-7, 1): 0, (-9, 1): 1, (-14, 2): 1, (-15, 2): 0}
    found = {cell: report.dimension(*cell) for cell in expected}
    return found == expected, str(found)


def _n_zero_tower():
    tower = CohomologyService.compute(Window(-2, -2, 5, 0))
    dims = [tower.dimension(-2, s) for s in range(6)]
    torsion = CohomologyService.compute(Window(-9, -9, 2, 0))
    mod = torsion.slice.presentation
    killed = CohomologyService.class_at(torsion, _y1_element('v0 R7 y1', mod), (-9, 2)).is_zero()
    return dims == [1] * 6 and killed, f"dims at x=-2: {dims}; v0 [R7 y1] = 0: {killed}"


def _n_one_sawtooth():
    report = CohomologyService.compute(Window(-11, -7, 2, 1))
    mod = report.slice.presentation
    left = CohomologyService.class_at(report, _y1_element('v0 R7 y1', mod), (-9, 2))
    right = CohomologyService.class_at(report, _y1_element('v1 R9 y1', mod), (-9, 2))
    v1_kills = CohomologyService.class_at(report, _y1_element('v1 R7 y1', mod), (-7, 2)).is_zero()
    return left == right and not left.is_zero() and v1_kills, f"v0 [R7 y1] = {left.to_list()}"


def _n_one_bockstein():
    low = CohomologyService.compute(Window(-26, -18, 3, 0))
    mod = low.slice.presentation
    cell, image = CohomologyService.d1_image(_y1_element('R13 R6 y1', mod), 1, low)
    found = CohomologyService.class_at(low, image, cell)
    expected = CohomologyService.class_at(low, _y1_element('R15 R7 y1', mod), (-24, 2))
    return cell == (-24, 2) and found == expected and not found.is_zero(), f"d1(R13 R6 y1) = v1 ({image})"


def _n_two_extension():
    report = CohomologyService.compute(Window(-30, -22, 3, 2))
    mod = report.slice.presentation
    left = CohomologyService.class_at(report, _y1_element('v0 R15 R7 y1', mod), (-24, 3))
    right = CohomologyService.class_at(report, _y1_element('v2 R19 R9 y1', mod), (-24, 3))
    return left == right and not left.is_zero(), f"v0 [R15 R7 y1] = {left.to_list()}"


def _n_two_weight_two():
    x_min, x_max = -44, -2
    report = CohomologyService.compute(Window(x_min, x_max, 2, 2, 2, 2))
    mod = report.slice.presentation
    pairs = PatternService.weight_two_generators(x_min, x_max)
    bad = []
    for x in range(x_min, x_max + 1):
        here = [_y1_element(f'R{a} R{b} y1', mod) for a, b in pairs if -a - b - 2 == x]
        reducer = SpanReducer(report.dimension(x, 2))
        independent = all(reducer.add(CohomologyService.class_at(report, e, (x, 2)).bits) for e in here)
        if not independent or CohomologyService.filtered_dimension(report, (x, 2), 2) != len(here):
            bad.append(x)
    return not bad, f"{len(pairs)} generators R^a R^b y1; mismatches at x = {bad}"


def _critical(n):
    def check():
        window = Window(-2, -2, 3, n, None, 3)
        report = CohomologyService.compute(window)
        mod = report.slice.presentation
        labels = PatternService.critical_classes(n)
        elements = [_y1_element(label, mod) for label in labels]
        ok = CohomologyService.classes_form_basis(report, elements, (-2, 3))
        return ok, f"dim {report.dimension(-2, 3)}, expected {', '.join(labels)}"
    return check


def _big_relation():
    residual = DyerLashofService.verify_big_relation()
    deletions = [DyerLashofService.verify_big_relation(omit=k).is_zero() for k in range(10)]
    ok = residual.is_zero() and not any(deletions)
    return ok, f"residual {residual}; zero after deleting a summand: {sum(deletions)}"


GOLDEN_CHECKS = [
    ('Adem identities, R side', _adem_r_identities),
    ('Adem identities, Q side', _adem_q_identities),
    ('n=-1 dimensions', _n_minus_one_spots),
    ('n=0 tower and torsion', _n_zero_tower),
    ('n=1 sawtooth', _n_one_sawtooth),
    ('n=1 Bockstein d1', _n_one_bockstein),
    ('n=2 hidden extension', _n_two_extension),
    ('n=2 weight-2 generators', _n_two_weight_two),
    ('critical group n=3', _critical(3)),
    ('critical group n=4', _critical(4)),
    ('degree-30 relation', _big_relation),
]


run_selftest = SelftestService.run
