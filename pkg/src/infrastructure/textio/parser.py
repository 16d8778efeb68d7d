"""
Expression parser.

Grammar::

    expr     := term (('+' | '-') term)*
    term     := factor ('*' factor)*
    factor   := base ('^' uint)?
    base     := rational | 'i' | var | 'exp' '(' expr ')' | '(' expr ')' | '-' factor
    var      := 'x' | 'y' | 't' | 'z' | 'zc'
    rational := int ('/' uint)?

Whitespace is insignificant and multiplication is always explicit.
"""

import re
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Any, Dict, List, Mapping, Optional, Tuple

from src.domain.algebra.expression import (
    DEFAULT_TERM_CAP, Expression, Variable, add, mul
)
from src.domain.algebra.gaussian import GaussianRational, I, ZERO
from src.domain.exceptions import ParseError, ParseErrorKind, SourceSpan, ValidationError
from src.domain.geometry.operators import GeometryId
from src.domain.models.entities import FamilyRequest

MAX_EXPONENT = 1000
MAX_LITERAL_DIGITS = 1000


class ParseContext(Enum):
    """Which variable names an input may use."""
    REAL = "real"        # x, y, t
    COMPLEX = "complex"  # z, zc, t; x and y are rewritten through z and zc
    ANY = "any"          # x/z read as u, y/zc read as v

    @classmethod
    def for_geometry(cls, geometry: Optional[GeometryId]) -> 'ParseContext':
        if geometry is None:
            return cls.ANY
        return cls.COMPLEX if geometry.is_complex else cls.REAL


_HALF = GaussianRational(Fraction(1, 2))
_U = Expression.variable(Variable.U)
_V = Expression.variable(Variable.V)
_T = Expression.variable(Variable.T)

VARIABLES: Dict[ParseContext, Dict[str, Expression]] = {
    ParseContext.REAL: {'x': _U, 'y': _V, 't': _T},
    ParseContext.COMPLEX: {
        'z': _U, 'zc': _V, 't': _T,
        'x': (_U + _V) * _HALF,
        'y': (_U - _V) * (-I * _HALF),
    },
    ParseContext.ANY: {'x': _U, 'y': _V, 'z': _U, 'zc': _V, 't': _T},
}

_TOKEN_SPEC = [
    ('WS', r'\s+'),
    ('INT', r'\d+'),
    ('NAME', r'[A-Za-z_][A-Za-z0-9_]*'),
    ('OP', r'[-+*/^()]'),
]
_TOKEN_RE = re.compile('|'.join(f'(?P<{name}>{pattern})' for name, pattern in _TOKEN_SPEC), re.ASCII)


@dataclass(frozen=True)
class Token:
    kind: str
    text: str
    start: int
    end: int

    @property
    def span(self) -> SourceSpan:
        return SourceSpan(self.start, self.end)


def _byte_span(src: str, index: int) -> SourceSpan:
    start = len(src[:index].encode('utf-8'))
    return SourceSpan(start, start + len(src[index].encode('utf-8')))


def tokenize(src: str) -> List[Token]:
    """Split ``src`` into tokens; offsets are byte offsets."""
    tokens = []
    pos = 0
    while pos < len(src):
        match = _TOKEN_RE.match(src, pos)
        if match is None:
            raise ParseError(ParseErrorKind.UNEXPECTED_TOKEN, _byte_span(src, pos),
                             f"unexpected character {src[pos]!r}")
        kind = match.lastgroup
        if kind != 'WS':
            # only ASCII has been accepted so far, so character and byte offsets agree
            tokens.append(Token(kind, match.group(), match.start(), match.end()))
        pos = match.end()
    return tokens


class _Parser:
    def __init__(self, src: str, context: ParseContext, term_cap: int):
        self.src = src
        self.tokens = tokenize(src)
        self.pos = 0
        self.variables = VARIABLES[context]
        self.context = context
        self.term_cap = term_cap

    # Token access

    def _peek(self) -> Optional[Token]:
        return self.tokens[self.pos] if self.pos < len(self.tokens) else None

    def _at(self, text: str) -> bool:
        token = self._peek()
        return token is not None and token.kind == 'OP' and token.text == text

    def _advance(self) -> Token:
        token = self.tokens[self.pos]
        self.pos += 1
        return token

    def _end_span(self) -> SourceSpan:
        end = len(self.src.encode('utf-8'))
        return SourceSpan(end, end)

    def _unexpected(self, expected: str) -> ParseError:
        token = self._peek()
        if token is None:
            return ParseError(ParseErrorKind.UNEXPECTED_TOKEN, self._end_span(),
                              f"unexpected end of input, expected {expected}")
        return ParseError(ParseErrorKind.UNEXPECTED_TOKEN, token.span,
                          f"unexpected {token.text!r}, expected {expected}")

    def _expect(self, text: str) -> Token:
        if not self._at(text):
            raise self._unexpected(repr(text))
        return self._advance()

    # Grammar

    def parse(self) -> Expression:
        if not self.tokens:
            raise ParseError(ParseErrorKind.UNEXPECTED_TOKEN, self._end_span(), "empty expression")
        result = self._expr()
        if self._peek() is not None:
            raise self._unexpected("operator or end of input")
        return result

    def _expr(self) -> Expression:
        result = self._term()
        while self._at('+') or self._at('-'):
            op = self._advance().text
            rhs = self._term()
            result = add(result, rhs if op == '+' else -rhs, self.term_cap)
        return result

    def _term(self) -> Expression:
        result = self._factor()
        while self._at('*'):
            self._advance()
            result = mul(result, self._factor(), self.term_cap)
        return result

    def _factor(self) -> Expression:
        value = self._base()
        if not self._at('^'):
            return value
        self._advance()
        token = self._peek()
        if token is not None and token.kind == 'OP' and token.text == '-':
            raise ParseError(ParseErrorKind.NEGATIVE_POWER, token.span, "negative powers are not supported")
        if token is None or token.kind != 'INT':
            raise self._unexpected("a natural exponent")
        if len(token.text) > MAX_LITERAL_DIGITS or int(token.text) > MAX_EXPONENT:
            raise ParseError(ParseErrorKind.OVERFLOW, token.span,
                             f"exponent exceeds {MAX_EXPONENT}")
        self._advance()
        if self._at('/'):
            raise ParseError(ParseErrorKind.UNEXPECTED_TOKEN, self._peek().span,
                             "rational powers are not supported")
        return self._power(value, int(token.text))

    def _power(self, base: Expression, exponent: int) -> Expression:
        result = Expression.one()
        while exponent:
            if exponent & 1:
                result = mul(result, base, self.term_cap)
            exponent >>= 1
            if exponent:
                base = mul(base, base, self.term_cap)
        return result

    def _integer(self, token: Token) -> int:
        if len(token.text) > MAX_LITERAL_DIGITS:
            raise ParseError(ParseErrorKind.OVERFLOW, token.span,
                             f"integer literal longer than {MAX_LITERAL_DIGITS} digits")
        return int(token.text)

    def _base(self) -> Expression:
        token = self._peek()
        if token is None:
            raise self._unexpected("an operand")
        if token.kind == 'INT':
            self._advance()
            numerator = self._integer(token)
            if not self._at('/'):
                return Expression.constant(numerator)
            self._advance()
            denominator_token = self._peek()
            if denominator_token is None or denominator_token.kind != 'INT':
                raise self._unexpected("a denominator")
            self._advance()
            denominator = self._integer(denominator_token)
            if denominator == 0:
                raise ParseError(ParseErrorKind.UNEXPECTED_TOKEN, denominator_token.span,
                                 "zero denominator")
            return Expression.constant(Fraction(numerator, denominator))
        if token.kind == 'NAME':
            self._advance()
            if token.text == 'i':
                return Expression.constant(I)
            if token.text == 'exp':
                return self._exponential()
            variable = self.variables.get(token.text)
            if variable is None:
                allowed = ", ".join(sorted(self.variables))
                raise ParseError(ParseErrorKind.UNKNOWN_VARIABLE, token.span,
                                 f"unknown variable {token.text!r} (allowed: {allowed})")
            return variable
        if self._at('('):
            self._advance()
            inner = self._expr()
            self._expect(')')
            return inner
        if self._at('-'):
            self._advance()
            return -self._factor()
        raise self._unexpected("an operand")

    def _exponential(self) -> Expression:
        self._expect('(')
        start = self._peek()
        argument = self._expr()
        close = self._expect(')')
        span = SourceSpan(start.start if start is not None else close.start, close.end)
        weights = {Variable.U: ZERO, Variable.V: ZERO, Variable.T: ZERO}
        for key, coeff in argument.items():
            if key.has_exponential() or key.a + key.b + key.d != 1:
                raise ParseError(ParseErrorKind.NON_LINEAR_EXPONENT, span,
                                 "exp argument must be linear without constant part")
            var = Variable.U if key.a else Variable.V if key.b else Variable.T
            weights[var] = coeff
        return Expression.exponential(weights[Variable.U], weights[Variable.V], weights[Variable.T])


def parse(src: str, context: ParseContext = ParseContext.ANY,
          term_cap: int = DEFAULT_TERM_CAP) -> Expression:
    """Parse expression text; raises ParseError with the offending byte span."""
    return _Parser(src, context, term_cap).parse()


def parse_for(src: str, geometry: Optional[GeometryId],
              term_cap: int = DEFAULT_TERM_CAP) -> Expression:
    return parse(src, ParseContext.for_geometry(geometry), term_cap)


def parse_scalar(src: str) -> GaussianRational:
    value = parse(src).constant_value()
    if value is None:
        raise ValidationError(f"expected a constant, got {src!r}", field='scalar', value=src)
    return value


_INT_FIELDS = ('m', 'n', 'r', 'd', 'alpha')
_BOOL_FIELDS = ('linear_factor', 'strict')
_COEFFICIENT_FIELDS = ('a', 'b', 'p', 'f', 'g')
_EXPRESSION_FIELDS: Dict[str, ParseContext] = {
    'h1': ParseContext.REAL,
    'poly': ParseContext.REAL,
    'f_expr': ParseContext.COMPLEX,
    'g_expr': ParseContext.COMPLEX,
}


class ExpressionReader:
    """Decodes catalog and command-line text into Expressions and FamilyRequests."""

    def __init__(self, term_cap: int = DEFAULT_TERM_CAP):
        self.term_cap = term_cap

    def parse(self, text: str, geometry: Optional[GeometryId] = None) -> Expression:
        return parse_for(text, geometry, self.term_cap)

    def scalar(self, value: Any, field: str = 'scalar') -> GaussianRational:
        if isinstance(value, bool) or isinstance(value, float):
            raise ValidationError("coefficients must be exact", field=field, value=value)
        if isinstance(value, int):
            return GaussianRational(value)
        if isinstance(value, str):
            return parse_scalar(value)
        if isinstance(value, Mapping):
            try:
                return GaussianRational.from_json(dict(value))
            except (TypeError, ValueError, ZeroDivisionError):
                pass
        raise ValidationError(f"cannot read {value!r} as a coefficient", field=field, value=value)

    def coefficients(self, values: Any, field: str) -> Tuple[GaussianRational, ...]:
        if isinstance(values, str):
            values = [part for part in values.split(',') if part.strip()]
        if not isinstance(values, (list, tuple)):
            raise ValidationError("expected a list of coefficients", field=field, value=values)
        return tuple(self.scalar(v, field) for v in values)

    def family_request(self, family_id: str, params: Mapping[str, Any],
                       geometry: Optional[GeometryId] = None) -> FamilyRequest:
        """Build a typed request; unknown keys and ill-typed values raise ValidationError."""
        known = set(_INT_FIELDS) | set(_BOOL_FIELDS) | set(_COEFFICIENT_FIELDS) \
            | set(_EXPRESSION_FIELDS) | {'axis', 'geometry'}
        unknown = sorted(set(params) - known)
        if unknown:
            raise ValidationError(f"unknown family parameters: {', '.join(unknown)}",
                                  field='params', value=unknown)

        values: Dict[str, Any] = {'family_id': family_id}
        for name in _INT_FIELDS:
            if params.get(name) is not None:
                value = params[name]
                if isinstance(value, bool) or not isinstance(value, int):
                    raise ValidationError(f"{name} must be an integer", field=name, value=value)
                values[name] = value
        for name in _BOOL_FIELDS:
            if params.get(name) is not None:
                if not isinstance(params[name], bool):
                    raise ValidationError(f"{name} must be a boolean", field=name, value=params[name])
                values[name] = params[name]
        for name in _COEFFICIENT_FIELDS:
            if params.get(name) is not None:
                values[name] = self.coefficients(params[name], name)
        for name, context in _EXPRESSION_FIELDS.items():
            if params.get(name) is not None:
                values[name] = parse(str(params[name]), context, self.term_cap)
        if params.get('axis') is not None:
            values['axis'] = str(params['axis'])
        if params.get('geometry') is not None:
            values['geometry'] = GeometryId.from_string(str(params['geometry']))
        elif geometry is not None:
            values['geometry'] = geometry
        return FamilyRequest(**values)
