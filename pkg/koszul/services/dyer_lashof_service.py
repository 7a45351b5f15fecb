"""The free allowable R-algebra at p = 2: Adem relations, Cartan formula, instability."""

import logging
from functools import lru_cache

from koszul.models.qpolynomial import QMonomial, QPolynomial, QTerm
from koszul.services.operator_service import FREE_DEGREE, OperatorService
from koszul.utils.constants import BIG_RELATION_DEGREE, BIG_RELATION_TERMS, NAMED_CLASSES
from koszul.utils.exceptions import PreconditionError, UnknownClassError, VerificationError
from koszul.utils.helpers import log_timing

logger = logging.getLogger(__name__)


def _square(p):
    # Frobenius: cross terms cancel over F_2
    return QPolynomial(frozenset(t.power(2) for t in p.terms))


class DyerLashofService:
    """Service for normal forms of Dyer-Lashof expressions."""

    @staticmethod
    @lru_cache(maxsize=None)
    def adem_reduce_Q(r, s):
        """Pairs in Q^r Q^s = sum binom(i-s-1, 2i-r) Q^{r+s-i} Q^i for r > 2s."""
        if r <= 2 * s:
            raise PreconditionError(f"Q{r} Q{s} is already admissible")
        pairs = []
        for i in range((r + 1) // 2, r - s):
            if OperatorService.mod2_binomial(i - s - 1, 2 * i - r):
                pairs.append((r + s - i, i))
        return frozenset(pairs)

    @staticmethod
    def generator(name='x', degree=2):
        return QPolynomial.of_monomial(QMonomial((), name, degree))

    @staticmethod
    @lru_cache(maxsize=None)
    def q_apply_monomial(s, u):
        """Q^s applied to a single admissible monomial, in normal form."""
        degree = u.degree
        if s < degree:
            return QPolynomial.zero()
        if s == degree:
            return QPolynomial.of_monomial(u, 2)
        if not u.word or s <= 2 * u.word[0]:
            return QPolynomial.of_monomial(QMonomial((s,) + u.word, u.generator, u.generator_degree))
        tail = QMonomial(u.word[1:], u.generator, u.generator_degree)
        out = QPolynomial.zero()
        for outer, inner in DyerLashofService.adem_reduce_Q(s, u.word[0]):
            inner_value = DyerLashofService.q_apply_monomial(inner, tail)
            out = out + DyerLashofService.q_apply(outer, inner_value)
        return out

    @staticmethod
    @lru_cache(maxsize=None)
    def q_apply_term(s, term):
        """Q^s of a product via the Cartan formula."""
        if not term.factors:
            return QPolynomial.one() if s == 0 else QPolynomial.zero()
        (u, exponent), rest = term.factors[0], QTerm(term.factors[1:])
        if not rest.factors:
            if exponent == 1:
                return DyerLashofService.q_apply_monomial(s, u)
            if exponent % 2 == 0:
                if s % 2:
                    return QPolynomial.zero()
                half = DyerLashofService.q_apply_term(s // 2, term_power(u, exponent // 2))
                return _square(half)
            head, rest = QTerm(((u, 1),)), term_power(u, exponent - 1)
        else:
            head = QTerm(((u, exponent),))
        out = QPolynomial.zero()
        for i in range(head.degree, s - rest.degree + 1):
            left = DyerLashofService.q_apply_term(i, head)
            if left.is_zero():
                continue
            right = DyerLashofService.q_apply_term(s - i, rest)
            out = out + DyerLashofService.multiply(left, right)
        return out

    @staticmethod
    def q_apply(s, p):
        """Q^s p in normal form."""
        out = QPolynomial.zero()
        for term in p.terms:
            out = out + DyerLashofService.q_apply_term(s, term)
        return out

    @staticmethod
    def normal_form_word(word, degree=None, name='x'):
        """Q^{s_1}...Q^{s_m} applied to a generator; with no degree, one so low that nothing is unstable."""
        value = DyerLashofService.generator(name, -FREE_DEGREE if degree is None else degree)
        for s in reversed(tuple(word)):
            value = DyerLashofService.q_apply(s, value)
        return value

    @staticmethod
    def multiply(p, q):
        """Graded-commutative product."""
        out = frozenset()
        for left in p.terms:
            for right in q.terms:
                out = out ^ {left * right}
        return QPolynomial(out)

    @staticmethod
    def power(p, k):
        out = QPolynomial.one()
        for _ in range(k):
            out = DyerLashofService.multiply(out, p)
        return out

    @staticmethod
    def expand_named_class(name, degree=2):
        """The classes y5, y7, y8, y9, y10, y12, y13 over a generator x of the given degree."""
        from koszul.services.expression_service import ExpressionService

        if name not in NAMED_CLASSES:
            raise UnknownClassError(f"unknown named class '{name}'; expected one of {sorted(NAMED_CLASSES)}")
        return ExpressionService.parse(NAMED_CLASSES[name], degree=degree, named=False)

    @staticmethod
    def relation_terms(degree=2):
        """The summands of the degree-30 relation with their evaluated normal forms."""
        from koszul.services.expression_service import ExpressionService

        rows = []
        for text in BIG_RELATION_TERMS:
            value = ExpressionService.parse(text, degree=degree)
            degrees = value.degrees()
            rows.append({'term': text, 'value': value, 'degree': degrees.pop() if len(degrees) == 1 else None})
        return rows

    @staticmethod
    @log_timing
    def verify_big_relation(omit=None, degree=2):
        """Residual of the ten-term relation; ``omit`` drops one summand by position."""
        residual = QPolynomial.zero()
        for position, row in enumerate(DyerLashofService.relation_terms(degree)):
            if row['degree'] != BIG_RELATION_DEGREE:
                raise VerificationError(
                    f"summand {row['term']} is not homogeneous of degree {BIG_RELATION_DEGREE}: "
                    f"degrees {sorted(row['value'].degrees())}"
                )
            if position == omit:
                continue
            residual = residual + row['value']
        logger.info(f"Relation residual has {len(residual)} terms (omitted: {omit})")
        return residual


def term_power(u, exponent):
    return QTerm(((u, exponent),))


adem_reduce_Q = DyerLashofService.adem_reduce_Q
q_apply = DyerLashofService.q_apply
multiply = DyerLashofService.multiply
expand_named_class = DyerLashofService.expand_named_class
verify_big_relation = DyerLashofService.verify_big_relation
