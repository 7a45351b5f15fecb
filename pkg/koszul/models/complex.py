"""Bidegree windows and assembled slices of the Koszul complex."""

from dataclasses import dataclass, field

from koszul.models.base import BaseModel
from koszul.models.monomial import Element


@dataclass(frozen=True)
class Window(BaseModel):
    """Rectangle of bidegrees x_min..x_max, s_min..s_max at truncation level n."""

    x_min: int
    x_max: int
    s_max: int
    n: int = -1
    weight_max: int = None
    s_min: int = 0

    def contains(self, x, s):
        return self.x_min <= x <= self.x_max and self.s_min <= s <= self.s_max

    def cells(self):
        """All (x, s) in the window, filtration-major then descending x."""
        return [(x, s) for s in range(self.s_min, self.s_max + 1) for x in range(self.x_max, self.x_min - 1, -1)]

    def padded(self):
        """Window enlarged by one in x on both sides and in s, for boundary matrices."""
        return Window(
            self.x_min - 1,
            self.x_max + 1,
            self.s_max + 1,
            self.n,
            self.weight_max,
            max(0, self.s_min - 1),
        )

    def at_level(self, n):
        return Window(self.x_min, self.x_max, self.s_max, n, self.weight_max, self.s_min)

    def with_weight(self, weight_max):
        return Window(self.x_min, self.x_max, self.s_max, self.n, weight_max, self.s_min)


@dataclass
class ComplexSlice(BaseModel):
    """Bases per cell of the enumerated region and the differential matrices.

    ``d_matrices[(x, s)]`` has one column per basis monomial at (x, s) and one
    row per basis monomial at (x - 1, s + 1).
    """

    window: Window
    region: Window
    presentation: object
    convention: object
    basis: dict = field(default_factory=dict)
    index: dict = field(default_factory=dict)
    d_matrices: dict = field(default_factory=dict)

    @property
    def n(self):
        return self.window.n

    def basis_at(self, x, s):
        return self.basis.get((x, s), ())

    def position(self, monomial):
        cell = monomial.bidegree.cell
        return self.index.get(cell, {}).get(monomial)

    def vector_of(self, element, cell):
        """Coordinate bits of ``element`` in the basis at ``cell``; None if a term is missing."""
        positions = self.index.get(cell, {})
        bits = 0
        for m in element.terms:
            j = positions.get(m)
            if j is None:
                return None
            bits ^= 1 << j
        return bits

    def element_of(self, bits, cell):
        basis = self.basis.get(cell, ())
        terms = []
        j = 0
        while bits:
            if bits & 1:
                terms.append(basis[j])
            bits >>= 1
            j += 1
        return Element(frozenset(terms))

    def size(self):
        return sum(len(b) for b in self.basis.values())

    def to_dict(self):
        return {
            'window': self.window.to_dict(),
            'n': self.n,
            'module': self.presentation.name,
            'basis': {f'{x},{s}': [str(m) for m in ms] for (x, s), ms in sorted(self.basis.items()) if ms},
        }

    def __repr__(self):
        return f'<ComplexSlice(n={self.n}, {len(self.basis)} cells, {self.size()} monomials)>'

@dataclass
class DSquaredReport(BaseModel):
    """Outcome of a d^2 = 0 check."""

    n: int
    convention: str
    checked: int = 0
    failures: list = field(default_factory=list)

    @property
    def ok(self):
        return not self.failures
