import logging
import math
import re
from fractions import Fraction
from tokenize import TokenError

import sympy
from sympy.parsing.sympy_parser import convert_xor, parse_expr, standard_transformations

from schwarz.algebra.ratfunc import RatFunc, Y
from schwarz.core.errors import ParseError

logger = logging.getLogger()

INF = math.inf

_FRACTION_RE = re.compile(r"^[+-]?\d+(/\d+)?$")
_EXPRESSION_CHARS_RE = re.compile(r"[^0-9y+\-*/^()\s]")
_EXPRESSION_TRANSFORMS = standard_transformations + (convert_xor,)


def split_input(text: str) -> list[tuple[str, int]]:
    """Split a comma separated flag value into stripped items with their offsets."""
    items = []
    offset = 0
    for raw in text.split(","):
        stripped = raw.strip()
        items.append((stripped, offset + (len(raw) - len(raw.lstrip()))))
        offset += len(raw) + 1
    return items


def parse_fraction(value: str, source: str | None = None, position: int = 0) -> Fraction:
    """Parse an integer or ``p/q`` token exactly. Decimals are refused."""
    if not _FRACTION_RE.match(value):
        raise ParseError("expected an exact fraction, got {!r}".format(value), source or value, position)
    try:
        return Fraction(value)
    except ZeroDivisionError:
        raise ParseError("zero denominator in {!r}".format(value), source or value, position)


def parse_fraction_list(text: str, count: int) -> list[Fraction]:
    items = split_input(text)
    if len(items) != count:
        raise ParseError("expected {} comma separated values, got {}".format(count, len(items)), text, 0)
    return [parse_fraction(item, text, position) for item, position in items]


def parse_signature_entries(text: str) -> list[int | float]:
    """Parse ``k,l,m`` with ``inf`` for ∞; every finite entry must be at least 2."""
    items = split_input(text)
    if len(items) != 3:
        raise ParseError("a signature has three entries, got {}".format(len(items)), text, 0)

    entries = []
    for item, position in items:
        if item.lower() in ("inf", "∞"):
            entries.append(INF)
            continue
        if not item.isdigit():
            raise ParseError("signature entry must be an integer or 'inf', got {!r}".format(item), text, position)
        value = int(item)
        if value < 2:
            raise ParseError("signature entries must be at least 2, got {}".format(value), text, position)
        entries.append(value)
    return entries


def parse_rational_expression(text: str) -> RatFunc:
    """
    Parse a rational expression in ``y``: integers, ``+ - * / ^`` with integer
    exponents and parentheses.
    """
    bad = _EXPRESSION_CHARS_RE.search(text)
    if bad:
        raise ParseError("unexpected character {!r}".format(bad.group()), text, bad.start())
    if not text.strip():
        raise ParseError("empty expression", text, 0)

    try:
        expr = parse_expr(text, local_dict={"y": Y}, transformations=_EXPRESSION_TRANSFORMS)
    except (SyntaxError, TypeError, TokenError, sympy.SympifyError) as e:
        raise ParseError("malformed expression: {}".format(e), text, getattr(e, "offset", None) or 0)

    if not isinstance(expr, sympy.Expr):
        raise ParseError("not a rational expression: {}".format(expr), text, 0)
    for power in expr.atoms(sympy.Pow):
        if not power.exp.is_Integer:
            raise ParseError("exponents must be integers, got {}".format(power.exp), text, text.find("^"))
    return RatFunc.from_expr(expr)


def fraction_to_str(value: Fraction) -> str:
    """Serialize as ``p/q`` (or ``p`` when integral) to keep the value exact."""
    if value.denominator == 1:
        return str(value.numerator)
    return "{}/{}".format(value.numerator, value.denominator)


def signature_entry_to_str(value: int | float) -> str:
    return "inf" if value == INF else str(value)
