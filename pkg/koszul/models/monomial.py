"""Koszul cochain monomials and their F_2-linear combinations."""

from dataclasses import dataclass
from functools import cached_property

from koszul.models.base import BaseModel


def v_degree(index):
    """Total degree of v_index."""
    return (1 << (index + 1)) - 2


@dataclass(frozen=True, order=True)
class Bidegree(BaseModel):
    """Adams total degree x, filtration s and weight w."""

    x: int
    s: int
    w: int = 0

    @property
    def cell(self):
        return (self.x, self.s)

    def shifted(self, dx, ds, dw=0):
        return Bidegree(self.x + dx, self.s + ds, self.w + dw)


@dataclass(frozen=True)
class Generator(BaseModel):
    """A module generator y with its Adams degree and position."""

    id: str
    degree: int
    index: int = 0

    def __repr__(self):
        return f'<Generator({self.id}, {self.degree})>'


def _strip(exponents):
    exponents = list(exponents)
    while exponents and exponents[-1] == 0:
        exponents.pop()
    return tuple(exponents)


@dataclass(frozen=True)
class Monomial(BaseModel):
    """v_0^{k_0}...v_n^{k_n} R^{a_1}...R^{a_m} y.

    ``v`` holds the exponents k_i with trailing zeros removed, ``word`` the
    R-indices from the outside in.
    """

    v: tuple
    word: tuple
    generator: Generator

    def __post_init__(self):
        object.__setattr__(self, 'v', _strip(self.v))
        object.__setattr__(self, 'word', tuple(self.word))

    @classmethod
    def of(cls, generator, word=(), v=()):
        return cls(tuple(v), tuple(word), generator)

    @cached_property
    def bidegree(self):
        x = self.generator.degree - sum(self.word)
        x += sum(k * v_degree(i) for i, k in enumerate(self.v))
        return Bidegree(x, len(self.word) + sum(self.v), len(self.word))

    @property
    def weight(self):
        return len(self.word)

    @property
    def v_level(self):
        """Highest v index present, or -1."""
        return len(self.v) - 1

    def v_exponent(self, index):
        return self.v[index] if index < len(self.v) else 0

    def without_v(self):
        return Monomial((), self.word, self.generator)

    def times_v(self, index, power=1):
        exponents = list(self.v) + [0] * max(0, index + 1 - len(self.v))
        exponents[index] += power
        return Monomial(tuple(exponents), self.word, self.generator)

    def times_v_monomial(self, exponents):
        if not exponents:
            return self
        length = max(len(exponents), len(self.v))
        merged = [self.v_exponent(i) + (exponents[i] if i < len(exponents) else 0) for i in range(length)]
        return Monomial(tuple(merged), self.word, self.generator)

    def divide_v(self, index):
        """Remove one factor v_index; None when absent."""
        if self.v_exponent(index) == 0:
            return None
        exponents = list(self.v)
        exponents[index] -= 1
        return Monomial(tuple(exponents), self.word, self.generator)

    def is_admissible(self):
        word = self.word
        if any(word[j] < 2 * word[j + 1] for j in range(len(word) - 1)):
            return False
        return not word or word[-1] >= -self.generator.degree + 2

    def sort_key(self):
        return (self.v, self.word, self.generator.index)

    def __lt__(self, other):
        return self.sort_key() < other.sort_key()

    def __str__(self):
        parts = []
        for i, k in enumerate(self.v):
            if k == 1:
                parts.append(f'v{i}')
            elif k > 1:
                parts.append(f'v{i}^{k}')
        parts.extend(f'R{a}' for a in self.word)
        parts.append(self.generator.id)
        return ' '.join(parts)

    def __repr__(self):
        return f'<Monomial({self})>'

    def to_dict(self):
        return {
            'v': list(self.v),
            'word': list(self.word),
            'generator': self.generator.id,
            'label': str(self),
            'bidegree': self.bidegree.to_dict(),
        }


@dataclass(frozen=True)
class Element(BaseModel):
    """A finite sum of monomials with F_2 coefficients."""

    terms: frozenset = frozenset()

    @classmethod
    def of(cls, *monomials):
        out = frozenset()
        for m in monomials:
            out = out ^ {m}
        return cls(out)

    @classmethod
    def zero(cls):
        return cls(frozenset())

    def __add__(self, other):
        return Element(self.terms ^ other.terms)

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def __iter__(self):
        return iter(self.sorted_terms())

    def __contains__(self, monomial):
        return monomial in self.terms

    def is_zero(self):
        return not self.terms

    def sorted_terms(self):
        return sorted(self.terms, key=Monomial.sort_key)

    def leading_term(self):
        terms = self.sorted_terms()
        return terms[0] if terms else None

    def bidegrees(self):
        return {m.bidegree for m in self.terms}

    def is_homogeneous(self):
        return len({m.bidegree.cell for m in self.terms}) <= 1

    def times_v(self, index, power=1):
        return Element(frozenset(m.times_v(index, power) for m in self.terms))

    def truncate(self, level):
        """Drop terms that involve v_i for i above ``level``."""
        return Element(frozenset(m for m in self.terms if m.v_level <= level))

    def __str__(self):
        if not self.terms:
            return '0'
        return ' + '.join(str(m) for m in self.sorted_terms())

    def __repr__(self):
        return f'<Element({self})>'

    def to_dict(self):
        return {'terms': [str(m) for m in self.sorted_terms()]}
