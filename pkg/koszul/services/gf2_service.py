"""Exact linear algebra over F_2 on bit-packed rows."""

import logging

from koszul.models.matrix import Gf2Matrix, Gf2Vector, low_bit
from koszul.utils.exceptions import DimensionError

logger = logging.getLogger(__name__)


class SpanReducer:
    """Incremental echelon basis with combination tracking.

    Each stored row is keyed by its lowest set bit. ``combo`` records which
    inserted vectors (by insertion tag) sum to the stored row.
    """

    def __init__(self, length):
        self.length = length
        self._rows = {}
        self.size = 0

    def reduce(self, bits, combo=0):
        """Reduce ``bits`` by the stored rows; returns (remainder, combo)."""
        while bits:
            pivot = low_bit(bits)
            entry = self._rows.get(pivot)
            if entry is None:
                break
            bits ^= entry[0]
            combo ^= entry[1]
        return bits, combo

    def add(self, bits, combo=0):
        """Insert a vector; returns True when it was independent."""
        bits, combo = self.reduce(bits, combo)
        if not bits:
            return False
        self._rows[low_bit(bits)] = (bits, combo)
        self.size += 1
        return True

    def contains(self, bits):
        return self.reduce(bits)[0] == 0

    @property
    def pivots(self):
        return sorted(self._rows)


class Gf2Service:
    """Service for F_2 row reduction, kernels and span membership."""

    @staticmethod
    def rref_and_rank(m):
        """Reduced row-echelon form, rank and pivot columns.

        Pivots are taken in the leftmost remaining column from the lowest
        remaining row index, so the result is reproducible.
        """
        rows = list(m.data)
        pivot_cols = []
        top = 0
        for col in range(m.cols):
            mask = 1 << col
            found = next((r for r in range(top, len(rows)) if rows[r] & mask), None)
            if found is None:
                continue
            rows[top], rows[found] = rows[found], rows[top]
            pivot_row = rows[top]
            for r in range(len(rows)):
                if r != top and rows[r] & mask:
                    rows[r] ^= pivot_row
            pivot_cols.append(col)
            top += 1
            if top == len(rows):
                break
        reduced = Gf2Matrix(m.rows, m.cols, tuple(rows))
        return reduced, len(pivot_cols), pivot_cols

    @staticmethod
    def rank(m):
        reducer = SpanReducer(m.cols)
        for row in m.data:
            reducer.add(row)
        return reducer.size

    @staticmethod
    def kernel_basis(m):
        """Basis of {v : m v = 0}, one vector per free column."""
        reduced, rank, pivot_cols = Gf2Service.rref_and_rank(m)
        pivots = set(pivot_cols)
        basis = []
        for free in range(m.cols):
            if free in pivots:
                continue
            bits = 1 << free
            for r, pivot in enumerate(pivot_cols):
                if (reduced.data[r] >> free) & 1:
                    bits |= 1 << pivot
            basis.append(Gf2Vector(m.cols, bits))
        return basis

    @staticmethod
    def solve_in_span(basis, target):
        """Coefficients expressing ``target`` in ``basis``, or None."""
        for vector in basis:
            if vector.length != target.length:
                raise DimensionError(
                    f"vector length {vector.length} does not match target length {target.length}"
                )
        reducer = SpanReducer(target.length)
        for index, vector in enumerate(basis):
            reducer.add(vector.bits, 1 << index)
        remainder, combo = reducer.reduce(target.bits)
        if remainder:
            return None
        return Gf2Vector(len(basis), combo)

    @staticmethod
    def combine(basis, coefficients):
        """Sum of the basis vectors selected by ``coefficients``."""
        length = basis[0].length if basis else 0
        bits = 0
        for index in coefficients.support():
            bits ^= basis[index].bits
        return Gf2Vector(length, bits)


rref_and_rank = Gf2Service.rref_and_rank
kernel_basis = Gf2Service.kernel_basis
solve_in_span = Gf2Service.solve_in_span
