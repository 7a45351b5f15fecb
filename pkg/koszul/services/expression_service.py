"""Parser for Dyer-Lashof expressions such as ``Q20(Q8(x) + x^2*Q4(x))``.

Grammar::

    expr   := term ('+' term)*
    term   := factor ('*' factor)*
    factor := atom ('^' INT)?
    atom   := 'Q' INT '(' expr ')' | NAME | INT | '(' expr ')'

NAME is a generator (``x`` by default) or one of the named classes y5, y7,
y8, y9, y10, y12, y13. The integers 0 and 1 are the constants.
"""

import re

from koszul.models.qpolynomial import QPolynomial
from koszul.services.dyer_lashof_service import DyerLashofService
from koszul.utils.constants import NAMED_CLASSES
from koszul.utils.exceptions import ParseError, UnknownClassError

TOKEN = re.compile(r'\s*(?:Q(\d+)|(\d+)|([A-Za-z_][A-Za-z0-9_]*)|(\S))')


def tokenize(text):
    tokens = []
    position = 0
    text = text.rstrip()
    while position < len(text):
        match = TOKEN.match(text, position)
        if not match:
            raise ParseError(f"cannot read '{text[position:]}'")
        q, number, name, symbol = match.groups()
        if q is not None:
            tokens.append(('Q', int(q)))
        elif number is not None:
            tokens.append(('INT', int(number)))
        elif name is not None:
            tokens.append(('NAME', name))
        else:
            tokens.append(('SYM', symbol))
        position = match.end()
    return tokens


class _Parser:
    def __init__(self, text, generators, named):
        self.text = text
        self.tokens = tokenize(text)
        self.position = 0
        self.generators = generators
        self.named = named

    def peek(self):
        return self.tokens[self.position] if self.position < len(self.tokens) else (None, None)

    def take(self, kind, value=None):
        token = self.peek()
        if token[0] != kind or (value is not None and token[1] != value):
            expected = value if value is not None else kind
            raise ParseError(f"expected {expected} at token {self.position} in '{self.text}'")
        self.position += 1
        return token[1]

    def parse(self):
        value = self.expr()
        if self.position != len(self.tokens):
            raise ParseError(f"unexpected {self.peek()[1]!r} in '{self.text}'")
        return value

    def expr(self):
        value = self.term()
        while self.peek() == ('SYM', '+'):
            self.position += 1
            value = value + self.term()
        return value

    def term(self):
        value = self.factor()
        while self.peek() == ('SYM', '*'):
            self.position += 1
            value = DyerLashofService.multiply(value, self.factor())
        return value

    def factor(self):
        value = self.atom()
        if self.peek() == ('SYM', '^'):
            self.position += 1
            value = DyerLashofService.power(value, self.take('INT'))
        return value

    def atom(self):
        kind, value = self.peek()
        if kind == 'Q':
            self.position += 1
            self.take('SYM', '(')
            inner = self.expr()
            self.take('SYM', ')')
            return DyerLashofService.q_apply(value, inner)
        if kind == 'INT':
            self.position += 1
            if value not in (0, 1):
                raise ParseError(f"only the constants 0 and 1 are allowed, got {value}")
            return QPolynomial.one() if value else QPolynomial.zero()
        if kind == 'NAME':
            self.position += 1
            if value in self.generators:
                return DyerLashofService.generator(value, self.generators[value])
            if self.named and value in NAMED_CLASSES:
                return _Parser(NAMED_CLASSES[value], self.generators, False).parse()
            raise UnknownClassError(f"unknown name '{value}' in '{self.text}'")
        if (kind, value) == ('SYM', '('):
            self.position += 1
            inner = self.expr()
            self.take('SYM', ')')
            return inner
        raise ParseError(f"unexpected {value!r} in '{self.text}'")


class ExpressionService:
    """Service for parsing expressions into normal-form polynomials."""

    @staticmethod
    def parse(text, degree=2, named=True, generators=None):
        """Evaluate ``text`` over a generator ``x`` of the given degree (plus any extra generators)."""
        table = {'x': degree}
        table.update(generators or {})
        return _Parser(text, table, named).parse()
