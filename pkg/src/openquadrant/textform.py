"""Text renderings of polynomials and polynomial maps.

Three formats, all deterministic:

* **canonical** -- one term per line, ``<num>/<den> <e1> <e2> ... <en>``,
  terms in graded-lex order, components separated by a line containing
  ``--``.  Strict and lossless: ``parse(serialize(m)) == m`` and a
  re-serialization is byte-identical.
* **table style** -- arity-2 components grouped by descending powers of y,
  one parenthesised block of x-terms per y power (the layout used for
  published expanded forms of these maps).  Also lossless.
* **jsonable** -- nested dict/list structure for report output; coefficients
  are ``num/den`` strings so arbitrarily large values survive JSON.
"""

from __future__ import annotations

import re
from fractions import Fraction

from .polynomials import Poly, PolyMap, grlex_key

SEPARATOR = "--"


class MapParseError(ValueError):
    """Raised on malformed map text; carries a 1-based line number."""

    def __init__(self, line_number: int, message: str):
        super().__init__(f"line {line_number}: {message}")
        self.line_number = line_number


# -- canonical text format ------------------------------------------------------


def serialize(m) -> str:
    """Canonical text of a PolyMap (or a single Poly as a one-component map)."""
    if isinstance(m, Poly):
        m = PolyMap([m])
    blocks = []
    for comp in m.components:
        lines = [
            f"{c.numerator}/{c.denominator} " + " ".join(str(e) for e in exps)
            for exps, c in comp.terms.items()
        ]
        blocks.append("\n".join(lines))
    text = ("\n" + SEPARATOR + "\n").join(blocks)
    return text + "\n" if text else ""


_COEFF_RE = re.compile(r"^(-?\d+)/(\d+)$")


def parse(text: str) -> PolyMap:
    """Parse canonical text; rejects malformed lines, zero coefficients and
    out-of-order terms, reporting the offending line number."""
    sections: list[list[tuple[int, str]]] = [[]]
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        if line == SEPARATOR:
            sections.append([])
        else:
            sections[-1].append((lineno, line))

    arity = None
    components = []
    pending_zero = []  # (section index, first line after it) for arity check
    for section in sections:
        if not section:
            pending_zero.append(len(components))
            components.append(None)
            continue
        terms = {}
        prev_key = None
        for lineno, line in section:
            fields = line.split()
            m = _COEFF_RE.match(fields[0])
            if m is None:
                raise MapParseError(lineno, f"malformed coefficient {fields[0]!r}")
            num, den = int(m.group(1)), int(m.group(2))
            if den == 0:
                raise MapParseError(lineno, "zero denominator")
            coeff = Fraction(num, den)
            if coeff == 0:
                raise MapParseError(lineno, "zero coefficient is not canonical")
            if coeff.numerator != num or coeff.denominator != den:
                raise MapParseError(
                    lineno, f"coefficient {num}/{den} is not in lowest terms"
                )
            try:
                exps = tuple(int(f) for f in fields[1:])
            except ValueError:
                raise MapParseError(lineno, f"malformed exponents in {line!r}") from None
            if not exps or any(e < 0 for e in exps):
                raise MapParseError(lineno, f"bad exponent vector in {line!r}")
            if arity is None:
                arity = len(exps)
            elif len(exps) != arity:
                raise MapParseError(
                    lineno, f"expected {arity} exponents, got {len(exps)}"
                )
            key = grlex_key(exps)
            if prev_key is not None and key >= prev_key:
                raise MapParseError(lineno, "terms are not in canonical order")
            prev_key = key
            terms[exps] = coeff
        components.append(Poly(arity, terms))

    if arity is None:
        raise MapParseError(1, "empty input: cannot infer arity")
    for i in pending_zero:
        components[i] = Poly.zero(arity)
    return PolyMap(components)


# -- table-style format ----------------------------------------------------------


def _format_x_block(row: dict[int, Fraction]) -> str:
    """Render a sum of c*x^e terms, exponents descending."""
    pieces = []
    for e in sorted(row, reverse=True):
        c = row[e]
        if e == 0:
            body = str(abs(c))
        elif abs(c) == 1:
            body = "x" if e == 1 else f"x^{e}"
        else:
            body = f"{abs(c)}*x" if e == 1 else f"{abs(c)}*x^{e}"
        pieces.append(("-" if c < 0 else "+", body))
    sign, body = pieces[0]
    out = ("-" if sign == "-" else "") + body
    for sign, body in pieces[1:]:
        out += f" {sign} {body}"
    return out


def render_table_style(m: PolyMap, name: str) -> str:
    """Group each arity-2 component by descending powers of y, one block per
    line, mirroring the published table layout of these maps."""
    if m.input_arity != 2:
        raise ValueError("table-style rendering is defined for arity-2 maps")
    sections = []
    for idx, comp in enumerate(m.components, start=1):
        lines = [f"{name}{idx}(x,y) ="]
        if comp.is_zero():
            lines.append("    0")
        else:
            by_y: dict[int, dict[int, Fraction]] = {}
            for (ex, ey), c in comp.terms.items():
                by_y.setdefault(ey, {})[ex] = c
            first = True
            for ey in sorted(by_y, reverse=True):
                block = f"({_format_x_block(by_y[ey])})"
                if ey == 1:
                    block += "*y"
                elif ey > 1:
                    block += f"*y^{ey}"
                lines.append(("    " if first else "  + ") + block)
                first = False
        sections.append("\n".join(lines))
    return "\n\n".join(sections) + "\n"


_X_TERM_RE = re.compile(
    r"\s*(?P<sign>[+-])?\s*(?:(?P<num>\d+)(?:/(?P<den>\d+))?\s*\*?\s*)?(?P<var>x(?:\^(?P<exp>\d+))?)?"
)
_Y_TAIL_RE = re.compile(r"\*\s*y(?:\^(\d+))?")


def _parse_x_block(text: str, lineno: int) -> dict[int, Fraction]:
    row: dict[int, Fraction] = {}
    pos = 0
    text = text.strip()
    while pos < len(text):
        m = _X_TERM_RE.match(text, pos)
        if m is None or m.end() == pos or (m.group("num") is None and m.group("var") is None):
            raise MapParseError(lineno, f"cannot parse x-terms at {text[pos:pos + 20]!r}")
        coeff = Fraction(int(m.group("num") or 1), int(m.group("den") or 1))
        if m.group("sign") == "-":
            coeff = -coeff
        if m.group("var") is None:
            e = 0
        else:
            e = int(m.group("exp") or 1)
        if e in row:
            raise MapParseError(lineno, f"duplicate x^{e} inside one block")
        if coeff == 0:
            raise MapParseError(lineno, "zero coefficient")
        row[e] = coeff
        pos = m.end()
    if not row:
        raise MapParseError(lineno, "empty block")
    return row


def parse_table_style(text: str) -> PolyMap:
    """Inverse of render_table_style."""
    components = []
    current: dict[tuple[int, int], Fraction] | None = None
    sign = 1
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        if line.endswith("="):
            if current is not None:
                components.append(Poly(2, current))
            current = {}
            continue
        if current is None:
            raise MapParseError(lineno, "block before any component header")
        if line.startswith("+"):
            sign, line = 1, line[1:].strip()
        elif line.startswith("-"):
            sign, line = -1, line[1:].strip()
        else:
            sign = 1
        if line == "0":
            continue
        if not line.startswith("("):
            raise MapParseError(lineno, f"expected a parenthesised block: {line!r}")
        close = line.rfind(")")
        if close < 0:
            raise MapParseError(lineno, "unbalanced parenthesis")
        row = _parse_x_block(line[1:close], lineno)
        tail = line[close + 1:].strip()
        if not tail:
            ey = 0
        else:
            m = _Y_TAIL_RE.fullmatch(tail)
            if m is None:
                raise MapParseError(lineno, f"cannot parse y power {tail!r}")
            ey = int(m.group(1) or 1)
        for ex, c in row.items():
            key = (ex, ey)
            if key in current:
                raise MapParseError(lineno, f"duplicate monomial x^{ex}*y^{ey}")
            current[key] = sign * c
    if current is None:
        raise MapParseError(1, "no component header found")
    components.append(Poly(2, current))
    return PolyMap(components)


# -- JSON-friendly structure ------------------------------------------------------


def map_to_jsonable(m: PolyMap) -> dict:
    comps = []
    for p in m.components:
        comps.append(
            {
                "degree": p.total_degree(),
                "monomials": p.monomial_count(),
                "terms": [
                    [f"{c.numerator}/{c.denominator}", list(e)]
                    for e, c in p.terms.items()
                ],
            }
        )
    return {"input_arity": m.input_arity, "components": comps}
