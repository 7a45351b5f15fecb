"""Bit-packed matrices and vectors over the two-element field."""

from dataclasses import dataclass

import numpy as np

from koszul.models.base import BaseModel


def low_bit(value):
    """Index of the lowest set bit of a non-zero integer."""
    return (value & -value).bit_length() - 1


@dataclass(frozen=True)
class Gf2Vector(BaseModel):
    """A vector of fixed length; bit j of ``bits`` is coordinate j."""

    length: int
    bits: int = 0

    @classmethod
    def from_list(cls, entries):
        bits = 0
        for index, entry in enumerate(entries):
            if int(entry) & 1:
                bits |= 1 << index
        return cls(len(entries), bits)

    def to_list(self):
        return [(self.bits >> j) & 1 for j in range(self.length)]

    def support(self):
        """Indices of the non-zero coordinates, ascending."""
        bits, out = self.bits, []
        while bits:
            j = low_bit(bits)
            out.append(j)
            bits &= bits - 1
        return out

    def is_zero(self):
        return self.bits == 0

    def __add__(self, other):
        return Gf2Vector(self.length, self.bits ^ other.bits)

    def to_dict(self):
        return {'length': self.length, 'entries': self.to_list()}


@dataclass(frozen=True)
class Gf2Matrix(BaseModel):
    """Row-major matrix; each row is an int whose bit j is column j."""

    rows: int
    cols: int
    data: tuple = ()

    def __post_init__(self):
        if len(self.data) != self.rows:
            object.__setattr__(self, 'data', tuple(self.data) + (0,) * (self.rows - len(self.data)))
        mask = (1 << self.cols) - 1
        if any(row & ~mask for row in self.data):
            raise ValueError(f"row bits exceed {self.cols} columns")

    @classmethod
    def zeros(cls, rows, cols):
        return cls(rows, cols, (0,) * rows)

    @classmethod
    def identity(cls, size):
        return cls(size, size, tuple(1 << i for i in range(size)))

    @classmethod
    def from_rows(cls, rows, cols=None):
        """Build from a list of 0/1 lists."""
        rows = [list(r) for r in rows]
        width = cols if cols is not None else (len(rows[0]) if rows else 0)
        return cls(len(rows), width, tuple(Gf2Vector.from_list(r).bits for r in rows))

    @classmethod
    def from_columns(cls, columns, rows):
        """Build from column bitmasks (bit i of a column is row i)."""
        data = [0] * rows
        for j, column in enumerate(columns):
            while column:
                i = low_bit(column)
                data[i] |= 1 << j
                column &= column - 1
        return cls(rows, len(columns), tuple(data))

    @classmethod
    def from_dense(cls, array):
        array = np.asarray(array, dtype=np.uint8) & 1
        if array.ndim != 2:
            raise ValueError("expected a 2-d array")
        return cls.from_rows(array.tolist(), array.shape[1])

    def to_dense(self):
        out = np.zeros((self.rows, self.cols), dtype=np.uint8)
        for i, row in enumerate(self.data):
            for j in Gf2Vector(self.cols, row).support():
                out[i, j] = 1
        return out

    def entry(self, row, col):
        if not (0 <= row < self.rows and 0 <= col < self.cols):
            raise IndexError(f"({row}, {col}) outside {self.rows}x{self.cols}")
        return (self.data[row] >> col) & 1

    def column_bits(self, col):
        bits = 0
        for i, row in enumerate(self.data):
            if (row >> col) & 1:
                bits |= 1 << i
        return bits

    def transpose(self):
        return Gf2Matrix(self.cols, self.rows, tuple(self.column_bits(j) for j in range(self.cols)))

    def apply(self, vector):
        """Matrix times column vector."""
        if vector.length != self.cols:
            raise ValueError(f"vector length {vector.length} != {self.cols} columns")
        bits = 0
        for i, row in enumerate(self.data):
            if bin(row & vector.bits).count('1') & 1:
                bits |= 1 << i
        return Gf2Vector(self.rows, bits)

    def matmul(self, other):
        """Product self @ other."""
        if self.cols != other.rows:
            raise ValueError(f"cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}")
        data = []
        for row in self.data:
            acc = 0
            while row:
                j = low_bit(row)
                acc ^= other.data[j]
                row &= row - 1
            data.append(acc)
        return Gf2Matrix(self.rows, other.cols, tuple(data))

    def is_zero(self):
        return not any(self.data)

    def to_dict(self):
        return {'rows': self.rows, 'cols': self.cols, 'entries': self.to_dense().tolist()}

    def __repr__(self):
        return f'<Gf2Matrix({self.rows}x{self.cols})>'
