"""
Deterministic renderers for Expressions.

``canonical`` re-parses to the same Expression in the context it was
rendered for; ``human`` is for reading only; ``json`` is the structured
term list used by the command-line json output.
"""

import json
from enum import Enum
from fractions import Fraction
from typing import Any, Dict, List, Optional

from src.domain.algebra.expression import Expression, Term, TermKey, Variable
from src.domain.algebra.gaussian import GaussianRational
from src.domain.geometry.operators import GeometryId
from src.infrastructure.textio.parser import ParseContext

SCHEMA_VERSION = 1


class RenderFormat(Enum):
    HUMAN = "human"
    CANONICAL = "canonical"
    JSON = "json"


_NAMES = {
    ParseContext.REAL: ('x', 'y', 't'),
    ParseContext.ANY: ('x', 'y', 't'),
    ParseContext.COMPLEX: ('z', 'zc', 't'),
}
_HUMAN_NAMES = {
    ParseContext.REAL: ('x', 'y', 't'),
    ParseContext.ANY: ('x', 'y', 't'),
    ParseContext.COMPLEX: ('z', 'zbar', 't'),
}


def _rational(value: Fraction) -> str:
    return str(value.numerator) if value.denominator == 1 else f"{value.numerator}/{value.denominator}"


def _coefficient(c: GaussianRational, has_factors: bool) -> str:
    """Coefficient text; '' or '-' stand for a unit coefficient in front of factors."""
    re_part, im_part = c.real, c.imag
    if not im_part:
        if has_factors and abs(re_part) == 1:
            return "" if re_part > 0 else "-"
        return _rational(re_part)
    if not re_part:
        if abs(im_part) == 1:
            return "i" if im_part > 0 else "-i"
        return f"{_rational(im_part)}*i"
    imaginary = "i" if abs(im_part) == 1 else f"{_rational(abs(im_part))}*i"
    sign = "+" if im_part > 0 else "-"
    return f"({_rational(re_part)} {sign} {imaginary})"


def _linear_part(key: TermKey) -> Expression:
    return (Expression.variable(Variable.U) * key.p + Expression.variable(Variable.V) * key.q
            + Expression.variable(Variable.T) * key.s)


def _power(name: str, exponent: int) -> str:
    return name if exponent == 1 else f"{name}^{exponent}"


def _canonical_term(key: TermKey, coeff: GaussianRational, names) -> str:
    factors = [_power(name, e) for name, e in zip(names, (key.a, key.b, key.d)) if e]
    if key.has_exponential():
        factors.append(f"exp({_canonical(_linear_part(key), names)})")
    prefix = _coefficient(coeff, bool(factors))
    body = "*".join(factors)
    if not body:
        return prefix
    if prefix in ("", "-"):
        return prefix + body
    return f"{prefix}*{body}"


def _join(parts: List[str]) -> str:
    if not parts:
        return "0"
    text = parts[0]
    for part in parts[1:]:
        text += f" - {part[1:]}" if part.startswith("-") else f" + {part}"
    return text


def _canonical(f: Expression, names) -> str:
    return _join([_canonical_term(key, coeff, names) for key, coeff in f.items()])


def _human_term(key: TermKey, coeff: GaussianRational, names) -> str:
    factors = [_power(name, e) for name, e in zip(names, (key.a, key.b, key.d)) if e]
    if key.has_exponential():
        factors.append(f"e^({_human(_linear_part(key), names)})")
    prefix = _coefficient(coeff, bool(factors)).replace("*i", " i")
    body = " ".join(factors)
    if not body:
        return prefix
    if prefix in ("", "-"):
        return prefix + body
    return f"{prefix} {body}"


def _human(f: Expression, names) -> str:
    return _join([_human_term(key, coeff, names) for key, coeff in f.items()])


def to_json_dict(f: Expression) -> Dict[str, Any]:
    return {
        "schema_version": SCHEMA_VERSION,
        "terms": [
            {
                "coeff": coeff.to_json(),
                "pow": [key.a, key.b, key.d],
                "exp": [key.p.to_json(), key.q.to_json(), key.s.to_json()],
            }
            for key, coeff in f.items()
        ],
    }


def from_json_dict(data: Dict[str, Any]) -> Expression:
    """Inverse of ``to_json_dict``."""
    terms = []
    for record in data.get("terms", []):
        a, b, d = record["pow"]
        p, q, s = (GaussianRational.from_json(w) for w in record["exp"])
        terms.append(Term(GaussianRational.from_json(record["coeff"]), a, b, d, p, q, s))
    return Expression(terms)


def render(f: Expression, fmt: RenderFormat = RenderFormat.CANONICAL,
           context: ParseContext = ParseContext.REAL) -> str:
    if fmt is RenderFormat.CANONICAL:
        return _canonical(f, _NAMES[context])
    if fmt is RenderFormat.HUMAN:
        return _human(f, _HUMAN_NAMES[context])
    return json.dumps(to_json_dict(f), sort_keys=True, separators=(",", ":"))


def render_for(f: Expression, fmt: RenderFormat, geometry: Optional[GeometryId]) -> str:
    return render(f, fmt, ParseContext.for_geometry(geometry))
