"""Cohomology, Bockstein and stability reports."""

from dataclasses import dataclass, field

from koszul.models.base import BaseModel
from koszul.utils.helpers import cell_key


@dataclass
class ClassRecord(BaseModel):
    """One basis class of cohomology at a cell."""

    cell: tuple
    index: int
    representative: object
    weight: int

    @property
    def label(self):
        """Leading monomial, with a marker when correction terms exist."""
        lead = self.representative.leading_term()
        if lead is None:
            return '0'
        return f'{lead} + ...' if len(self.representative) > 1 else str(lead)

    @property
    def id(self):
        return f'{self.cell[0]}:{self.cell[1]}:{self.index}'

    def to_dict(self):
        return {
            'id': self.id,
            'x': self.cell[0],
            's': self.cell[1],
            'weight': self.weight,
            'label': self.label,
            'representative': str(self.representative),
        }


@dataclass
class CellCohomology(BaseModel):
    """Kernel, image and chosen classes at one cell."""

    cell: tuple
    cycles: int
    boundaries: int
    classes: list = field(default_factory=list)
    reducer: object = None

    @property
    def dimension(self):
        return len(self.classes)

    def to_dict(self):
        return {
            'x': self.cell[0],
            's': self.cell[1],
            'dimension': self.dimension,
            'cycles': self.cycles,
            'boundaries': self.boundaries,
            'classes': [c.to_dict() for c in self.classes],
        }


@dataclass
class CohomologyReport(BaseModel):
    """Cohomology of a slice over its valid window."""

    window: object
    n: int
    module: str
    cells: dict = field(default_factory=dict)
    v_actions: dict = field(default_factory=dict)
    slice: object = None

    def dimension(self, x, s):
        cell = self.cells.get((x, s))
        return cell.dimension if cell else 0

    def classes_at(self, x, s):
        cell = self.cells.get((x, s))
        return list(cell.classes) if cell else []

    def all_classes(self):
        return [c for _, cell in sorted(self.cells.items()) for c in cell.classes]

    def dimensions(self):
        return {cell: data.dimension for cell, data in self.cells.items()}

    def to_dict(self):
        return {
            'n': self.n,
            'module': self.module,
            'window': self.window.to_dict(),
            'cells': [c.to_dict() for _, c in sorted(self.cells.items()) if c.dimension],
            'v_actions': {
                f'v{i}': {cell_key(cell): m.to_dict() for cell, m in sorted(action.items()) if not m.is_zero()}
                for i, action in sorted(self.v_actions.items())
            },
        }

    def __repr__(self):
        total = sum(c.dimension for c in self.cells.values())
        return f'<CohomologyReport(n={self.n}, {len(self.cells)} cells, {total} classes)>'


@dataclass
class BocksteinRecord(BaseModel):
    """A non-zero d_1: source class at level n-1 maps to v_n times a target class."""

    source: object
    target_cell: tuple
    target: object
    coordinates: list
    v_index: int
    v_power: int = 1

    def to_dict(self):
        return {
            'source': self.source.to_dict(),
            'target_cell': list(self.target_cell),
            'target': str(self.target),
            'coordinates': self.coordinates,
            'v': f'v{self.v_index}' + (f'^{self.v_power}' if self.v_power > 1 else ''),
        }


@dataclass
class StabilityRow(BaseModel):
    cell: tuple
    observed: int
    predicted: int

    @property
    def equal(self):
        return self.observed == self.predicted


@dataclass
class StabilityReport(BaseModel):
    """Weight-truncated comparison of level n_hi against level n_lo tensored up."""

    n_lo: int
    n_hi: int
    weight_max: int
    tensor: bool
    rows: list = field(default_factory=list)

    @property
    def mismatches(self):
        return [r for r in self.rows if not r.equal]

    @property
    def ok(self):
        return not self.mismatches

    def to_dict(self):
        return {
            'n_lo': self.n_lo,
            'n_hi': self.n_hi,
            'weight_max': self.weight_max,
            'tensor': self.tensor,
            'ok': self.ok,
            'mismatches': [
                {'x': r.cell[0], 's': r.cell[1], 'observed': r.observed, 'predicted': r.predicted}
                for r in self.mismatches
            ],
            'cells_compared': len(self.rows),
        }


@dataclass
class CheckResult(BaseModel):
    """Outcome of one named self-test check."""

    name: str
    ok: bool
    detail: str = ''

    def __str__(self):
        status = 'PASS' if self.ok else 'FAIL'
        return f'{status} {self.name}' + (f': {self.detail}' if self.detail else '')


@dataclass
class SelftestReport(BaseModel):
    checks: list = field(default_factory=list)

    @property
    def failures(self):
        return [c for c in self.checks if not c.ok]

    @property
    def ok(self):
        return not self.failures

    def to_dict(self):
        return {
            'ok': self.ok,
            'passed': len(self.checks) - len(self.failures),
            'failed': len(self.failures),
            'checks': [c.to_dict() for c in self.checks],
        }
