"""Engine data models."""

from koszul.models.base import BaseModel
from koszul.models.chart import ChartClass, ChartDifferential, ChartDocument, ChartLine
from koszul.models.complex import ComplexSlice, DSquaredReport, Window
from koszul.models.matrix import Gf2Matrix, Gf2Vector
from koszul.models.monomial import Bidegree, Element, Generator, Monomial
from koszul.models.presentation import DifferentialTerm, ModulePresentation, TermKind
from koszul.models.qpolynomial import QMonomial, QPolynomial, QTerm
from koszul.models.report import (
    BocksteinRecord,
    CellCohomology,
    CheckResult,
    ClassRecord,
    CohomologyReport,
    SelftestReport,
    StabilityReport,
    StabilityRow,
)

# Make models available for import
__all__ = [
    'BaseModel',
    'Bidegree',
    'Generator',
    'Monomial',
    'Element',
    'Gf2Vector',
    'Gf2Matrix',
    'TermKind',
    'DifferentialTerm',
    'ModulePresentation',
    'Window',
    'ComplexSlice',
    'DSquaredReport',
    'ClassRecord',
    'CellCohomology',
    'CohomologyReport',
    'BocksteinRecord',
    'StabilityRow',
    'StabilityReport',
    'CheckResult',
    'SelftestReport',
    'QMonomial',
    'QTerm',
    'QPolynomial',
    'ChartClass',
    'ChartLine',
    'ChartDifferential',
    'ChartDocument',
]
