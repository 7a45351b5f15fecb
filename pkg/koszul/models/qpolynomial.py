"""Polynomials in admissible Dyer-Lashof monomials over F_2."""

from dataclasses import dataclass

from koszul.models.base import BaseModel


@dataclass(frozen=True)
class QMonomial(BaseModel):
    """Q^{s_1}...Q^{s_m} applied to a generator; squares are never stored here."""

    word: tuple
    generator: str
    generator_degree: int

    @property
    def degree(self):
        return self.generator_degree + sum(self.word)

    def sort_key(self):
        return (self.generator, len(self.word), self.word)

    def __str__(self):
        if not self.word:
            return self.generator
        return ' '.join(f'Q{s}' for s in self.word) + f' {self.generator}'

    def __repr__(self):
        return f'<QMonomial({self})>'


@dataclass(frozen=True)
class QTerm(BaseModel):
    """A product of QMonomials with exponents, stored as sorted (monomial, exponent) pairs."""

    factors: tuple = ()

    @classmethod
    def of(cls, pairs):
        merged = {}
        for monomial, exponent in pairs:
            merged[monomial] = merged.get(monomial, 0) + exponent
        items = sorted(((m, e) for m, e in merged.items() if e), key=lambda p: p[0].sort_key())
        return cls(tuple(items))

    @property
    def degree(self):
        return sum(m.degree * e for m, e in self.factors)

    def __mul__(self, other):
        return QTerm.of(self.factors + other.factors)

    def power(self, k):
        return QTerm(tuple((m, e * k) for m, e in self.factors))

    def sort_key(self):
        return (self.degree, tuple((m.sort_key(), e) for m, e in self.factors))

    def __str__(self):
        if not self.factors:
            return '1'
        parts = []
        for m, e in self.factors:
            bracket = m.word and (e > 1 or len(self.factors) > 1)
            text = f'({m})' if bracket else str(m)
            parts.append(text if e == 1 else f'{text}^{e}')
        return '*'.join(parts)


@dataclass(frozen=True)
class QPolynomial(BaseModel):
    """Sum of QTerms with F_2 coefficients; the empty sum is zero."""

    terms: frozenset = frozenset()

    @classmethod
    def zero(cls):
        return cls(frozenset())

    @classmethod
    def one(cls):
        return cls(frozenset([QTerm()]))

    @classmethod
    def of_monomial(cls, monomial, exponent=1):
        return cls(frozenset([QTerm.of([(monomial, exponent)])]))

    def __add__(self, other):
        return QPolynomial(self.terms ^ other.terms)

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def is_zero(self):
        return not self.terms

    def degrees(self):
        return {t.degree for t in self.terms}

    def is_homogeneous(self):
        return len(self.degrees()) <= 1

    def sorted_terms(self):
        return sorted(self.terms, key=QTerm.sort_key)

    def __str__(self):
        if not self.terms:
            return '0'
        return ' + '.join(str(t) for t in self.sorted_terms())

    def __repr__(self):
        return f'<QPolynomial({self})>'

    def to_dict(self):
        return {'terms': [str(t) for t in self.sorted_terms()], 'degrees': sorted(self.degrees())}
