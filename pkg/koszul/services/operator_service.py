"""Operator calculus on Koszul monomials: Adem rewriting, v-commutation, instability."""

import logging
import re
from enum import Enum
from functools import lru_cache

from koszul.models.monomial import Element, Monomial
from koszul.utils.exceptions import ParseError, PreconditionError, TruncationError, UnknownClassError

logger = logging.getLogger(__name__)

# generator degree high enough that no R^a is ever unstable
FREE_DEGREE = 1 << 30


class Convention(Enum):
    """Exponent convention for v-commutation and the differential."""

    DEGREE = 'degree'
    LITERAL = 'literal'

    def commute_shift(self, i, k):
        """Change in R-index when R^a moves past v_i and emerges beside v_k."""
        if self is Convention.DEGREE:
            return (1 << (k + 1)) - (1 << (i + 1))
        return (1 << k) - (1 << i)

    def differential_shift(self, k):
        """R-index increase in the v_k term of d R^a."""
        if self is Convention.DEGREE:
            return (1 << (k + 1)) - 1
        return (1 << k) - 1


class OperatorService:
    """Service for the R^a / v_i operator calculus."""

    @staticmethod
    def mod2_binomial(top, bottom):
        """binom(top, bottom) mod 2 by digit domination; 0 off the usual range."""
        if bottom < 0 or top < 0 or bottom > top:
            return 0
        return 1 if bottom & top == bottom else 0

    @staticmethod
    @lru_cache(maxsize=None)
    def adem_reduce_R(a, b):
        """Admissible pairs in R^a R^b = sum binom(b-1-c, a-2c) R^{a+b-c} R^c."""
        if a >= 2 * b:
            raise PreconditionError(f"R{a} R{b} is already admissible")
        pairs = []
        for c in range(max(0, a - b + 1), a // 2 + 1):
            if OperatorService.mod2_binomial(b - 1 - c, a - 2 * c):
                pairs.append((a + b - c, c))
        return frozenset(pairs)

    @staticmethod
    @lru_cache(maxsize=None)
    def reduce_word(a, word, degree):
        """Normal form of R^a applied to the v-free monomial ``word`` on a generator of ``degree``.

        Returns the set of admissible words; unstable terms are zero.
        """
        if not word:
            return frozenset([(a,)]) if a >= 2 - degree else frozenset()
        if a >= 2 * word[0]:
            # instability on an admissible word: R^a z vanishes when -|z| >= a + 1
            if sum(word) - degree >= a + 1:
                return frozenset()
            return frozenset([(a,) + word])
        out = frozenset()
        for outer, inner in OperatorService.adem_reduce_R(a, word[0]):
            for tail in OperatorService.reduce_word(inner, word[1:], degree):
                out = out ^ OperatorService.reduce_word(outer, tail, degree)
        return out

    @staticmethod
    def normal_form_word(word, degree=None):
        """Admissible words equal to R^{a_1}...R^{a_m} on a generator of ``degree``; no instability when None."""
        degree = FREE_DEGREE if degree is None else degree
        current = frozenset([()])
        for a in reversed(tuple(word)):
            following = frozenset()
            for tail in current:
                following = following ^ OperatorService.reduce_word(a, tail, degree)
            current = following
        return current

    @staticmethod
    def render_words(words, prefix='R'):
        if not words:
            return '0'
        return ' + '.join(' '.join(f'{prefix}{a}' for a in w) for w in sorted(words))

    @staticmethod
    def _apply_monomial(a, m, n, convention):
        if not m.v:
            words = OperatorService.reduce_word(a, m.word, m.generator.degree)
            return frozenset(Monomial((), w, m.generator) for w in words)
        i = next(index for index, k in enumerate(m.v) if k)
        rest = m.divide_v(i)
        out = frozenset()
        for k in range(i + 1, n + 1):
            shifted = a + convention.commute_shift(i, k)
            for term in OperatorService._apply_monomial(shifted, rest, n, convention):
                out = out ^ {term.times_v(k)}
        return out

    @staticmethod
    def apply_R(a, e, n, convention=Convention.DEGREE):
        """Normal form of R^a e at truncation level n."""
        if isinstance(e, Monomial):
            e = Element.of(e)
        out = frozenset()
        for m in e.terms:
            out = out ^ OperatorService._apply_monomial(a, m, n, convention)
        return Element(out)

    @staticmethod
    def apply_v(i, m, n=None):
        """Multiply a monomial by v_i."""
        if i < 0 or (n is not None and i > n):
            raise TruncationError(f"v{i} does not exist at level n={n}")
        return m.times_v(i)

    @staticmethod
    def bidegree(m):
        return m.bidegree

    @staticmethod
    def render_monomial(m):
        return str(m)

    @staticmethod
    def render_element(e):
        return str(e)

    @staticmethod
    def parse_monomial(text, generators):
        """Parse text like ``v0^2 R9 R4 y1``; ``generators`` maps id to Generator."""
        tokens = text.replace('*', ' ').split()
        if not tokens:
            raise ParseError("empty monomial")
        exponents, word, generator = [], [], None
        for token in tokens:
            if generator is not None:
                raise ParseError(f"unexpected '{token}' after generator in '{text}'")
            match = re.fullmatch(r'v(\d+)(?:\^(\d+))?', token)
            if match:
                if word:
                    raise ParseError(f"v-factors must precede R-factors in '{text}'")
                index, power = int(match.group(1)), int(match.group(2) or 1)
                exponents.extend([0] * max(0, index + 1 - len(exponents)))
                exponents[index] += power
                continue
            match = re.fullmatch(r'R(\d+)', token)
            if match:
                word.append(int(match.group(1)))
                continue
            if token not in generators:
                raise UnknownClassError(f"unknown generator '{token}' in '{text}'")
            generator = generators[token]
        if generator is None:
            raise ParseError(f"missing generator in '{text}'")
        return Monomial(tuple(exponents), tuple(word), generator)

    @staticmethod
    def parse_element(text, generators):
        text = text.strip()
        if text in ('', '0'):
            return Element.zero()
        return Element.of(*(OperatorService.parse_monomial(part, generators) for part in text.split('+')))

    @staticmethod
    def resize_caches(maxsize):
        """Rebuild the rewriting caches with a new bound."""
        for name in ('adem_reduce_R', 'reduce_word'):
            plain = getattr(OperatorService, name).__wrapped__
            setattr(OperatorService, name, staticmethod(lru_cache(maxsize=maxsize)(plain)))
        # keep the module-level alias on the live cache
        globals()['adem_reduce_R'] = OperatorService.adem_reduce_R
        logger.info(f"Rewriting caches bounded at {maxsize}")

    @staticmethod
    def cache_info():
        return {
            'adem_reduce_R': OperatorService.adem_reduce_R.cache_info()._asdict(),
            'reduce_word': OperatorService.reduce_word.cache_info()._asdict(),
        }


mod2_binomial = OperatorService.mod2_binomial
adem_reduce_R = OperatorService.adem_reduce_R
apply_R = OperatorService.apply_R
apply_v = OperatorService.apply_v
bidegree = OperatorService.bidegree
