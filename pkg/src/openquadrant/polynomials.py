"""Exact sparse polynomial arithmetic over the rationals.

A polynomial is a finite map from exponent vectors to nonzero rational
coefficients.  Terms are kept in graded-lexicographic order (total degree
descending, ties broken lexicographically on the exponent vector, first
variable weighing most), so the stored form is canonical: structural
equality is mathematical equality and every rendering of the same
polynomial is byte-identical.

All arithmetic is exact.  Floating point only appears in the ``*_float``
evaluation helpers used by the numeric root finders; nothing symbolic is
ever rounded.  Values are immutable after construction, so they can be
shared freely across threads.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Sequence, Union

Rational = Fraction
Exponents = tuple[int, ...]
CoeffLike = Union[Fraction, int, str]


def as_rational(value) -> Fraction:
    """Coerce to an exact Fraction.

    Floats convert to their exact binary value (not the decimal literal they
    were written as); pass a string like ``"1/10"`` or ``"0.1"`` for decimal
    semantics.
    """
    if isinstance(value, Fraction):
        return value
    return Fraction(value)


def grlex_key(exponents: Exponents):
    """Sort key for graded-lex order; sort descending for canonical order."""
    return (sum(exponents), exponents)


class Poly:
    """Sparse multivariate polynomial with exact rational coefficients.

    ``terms`` maps exponent tuples (length ``arity``) to nonzero Fractions
    and iterates in canonical graded-lex order.  The zero polynomial is the
    empty map.
    """

    __slots__ = ("arity", "terms")

    def __init__(self, arity: int, terms=()):
        if not isinstance(arity, int) or arity < 1:
            raise ValueError(f"arity must be a positive integer, got {arity!r}")
        items = terms.items() if isinstance(terms, Mapping) else terms
        merged: dict[Exponents, Fraction] = {}
        for exponents, coeff in items:
            exponents = tuple(exponents)
            if len(exponents) != arity:
                raise ValueError(
                    f"exponent vector {exponents} has length {len(exponents)}, expected {arity}"
                )
            if any((not isinstance(e, int)) or e < 0 for e in exponents):
                raise ValueError(f"exponents must be non-negative integers: {exponents}")
            coeff = as_rational(coeff)
            acc = merged.get(exponents, _ZERO) + coeff
            if acc:
                merged[exponents] = acc
            else:
                merged.pop(exponents, None)
        object.__setattr__(self, "arity", arity)
        object.__setattr__(
            self,
            "terms",
            {e: merged[e] for e in sorted(merged, key=grlex_key, reverse=True)},
        )

    def __setattr__(self, name, value):  # immutable by convention
        raise AttributeError("Poly is immutable")

    # -- constructors -----------------------------------------------------

    @classmethod
    def zero(cls, arity: int) -> "Poly":
        return cls(arity)

    @classmethod
    def constant(cls, arity: int, value: CoeffLike) -> "Poly":
        return cls(arity, {(0,) * arity: as_rational(value)} if as_rational(value) else {})

    @classmethod
    def variable(cls, arity: int, index: int) -> "Poly":
        """The monomial x_index."""
        if not 0 <= index < arity:
            raise ValueError(f"variable index {index} out of range for arity {arity}")
        exps = [0] * arity
        exps[index] = 1
        return cls(arity, {tuple(exps): Fraction(1)})

    # -- predicates and metrics -------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def total_degree(self) -> int:
        """Largest total degree of a stored term; 0 for the zero polynomial."""
        if not self.terms:
            return 0
        return max(sum(e) for e in self.terms)

    def monomial_count(self) -> int:
        return len(self.terms)

    def coefficient(self, exponents: Iterable[int]) -> Fraction:
        return self.terms.get(tuple(exponents), _ZERO)

    # -- arithmetic --------------------------------------------------------

    def _check_arity(self, other: "Poly"):
        if self.arity != other.arity:
            raise ValueError(f"arity mismatch: {self.arity} vs {other.arity}")

    def __add__(self, other):
        other = self._coerce(other)
        self._check_arity(other)
        terms = dict(self.terms)
        for e, c in other.terms.items():
            acc = terms.get(e, _ZERO) + c
            if acc:
                terms[e] = acc
            else:
                terms.pop(e, None)
        return Poly(self.arity, terms)

    __radd__ = __add__

    def __neg__(self):
        return Poly(self.arity, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            c = as_rational(other)
            if not c:
                return Poly.zero(self.arity)
            return Poly(self.arity, {e: c * v for e, v in self.terms.items()})
        other = self._coerce(other)
        self._check_arity(other)
        terms: dict[Exponents, Fraction] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                acc = terms.get(e, _ZERO) + c1 * c2
                if acc:
                    terms[e] = acc
                else:
                    terms.pop(e, None)
        return Poly(self.arity, terms)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            raise ValueError("exponent must be a non-negative integer")
        result = Poly.constant(self.arity, 1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base if n > 1 else base
            n >>= 1
        return result

    def _coerce(self, other) -> "Poly":
        if isinstance(other, Poly):
            return other
        if isinstance(other, (int, Fraction)):
            return Poly.constant(self.arity, other)
        raise TypeError(f"cannot combine Poly with {type(other).__name__}")

    # -- evaluation ---------------------------------------------------------

    def evaluate(self, point: Sequence) -> Fraction:
        """Exact value at a point of rationals (floats are converted exactly)."""
        if len(point) != self.arity:
            raise ValueError(f"point has length {len(point)}, expected {self.arity}")
        vals = [as_rational(v) for v in point]
        pows = [_power_table(v, m) for v, m in zip(vals, self._max_exponents())]
        total = _ZERO
        for exps, coeff in self.terms.items():
            term = coeff
            for i, e in enumerate(exps):
                if e:
                    term *= pows[i][e]
            total += term
        return total

    def evaluate_float(self, point: Sequence[float]) -> float:
        """Round-to-nearest double evaluation; for numeric solvers only."""
        if len(point) != self.arity:
            raise ValueError(f"point has length {len(point)}, expected {self.arity}")
        total = 0.0
        for exps, coeff in self.terms.items():
            term = float(coeff)
            for v, e in zip(point, exps):
                if e:
                    term *= v ** e
            total += term
        return total

    def _max_exponents(self) -> list[int]:
        maxes = [0] * self.arity
        for exps in self.terms:
            for i, e in enumerate(exps):
                if e > maxes[i]:
                    maxes[i] = e
        return maxes

    # -- composition ---------------------------------------------------------

    def compose(self, inners: Sequence["Poly"]) -> "Poly":
        """Substitute ``inners[i]`` for variable i and expand fully."""
        inners = list(inners)
        if len(inners) != self.arity:
            raise ValueError(
                f"need {self.arity} inner polynomials, got {len(inners)}"
            )
        n = inners[0].arity
        for p in inners:
            if p.arity != n:
                raise ValueError("inner polynomials must share one arity")
        maxes = self._max_exponents()
        pows: list[list[Poly]] = []
        for inner, m in zip(inners, maxes):
            table = [Poly.constant(n, 1)]
            for _ in range(m):
                table.append(table[-1] * inner)
            pows.append(table)
        terms: dict[Exponents, Fraction] = {}
        for exps, coeff in self.terms.items():
            prod = None
            for i, e in enumerate(exps):
                if e:
                    prod = pows[i][e] if prod is None else prod * pows[i][e]
            if prod is None:
                e0 = (0,) * n
                acc = terms.get(e0, _ZERO) + coeff
                if acc:
                    terms[e0] = acc
                else:
                    terms.pop(e0, None)
            else:
                for m_, c in prod.terms.items():
                    acc = terms.get(m_, _ZERO) + coeff * c
                    if acc:
                        terms[m_] = acc
                    else:
                        terms.pop(m_, None)
        return Poly(n, terms)

    # -- comparison / rendering ----------------------------------------------

    def __eq__(self, other):
        if not isinstance(other, Poly):
            return NotImplemented
        return self.arity == other.arity and self.terms == other.terms

    def __hash__(self):
        return hash((self.arity, tuple(self.terms.items())))

    def __repr__(self):
        return f"Poly({self.arity}, {dict(self.terms)!r})"

    def __str__(self):
        return format_terms(self.terms, variable_names(self.arity))


_ZERO = Fraction(0)


def variable_names(arity: int) -> tuple[str, ...]:
    if arity <= 3:
        return ("x", "y", "z")[:arity]
    return tuple(f"x{i + 1}" for i in range(arity))


def format_terms(terms: Mapping[Exponents, Fraction], names: Sequence[str]) -> str:
    """Human-readable rendering: ``x^2*y^3 - 4*x*y^2 + 4*y``."""
    if not terms:
        return "0"
    pieces = []
    for exps, coeff in terms.items():
        factors = []
        for name, e in zip(names, exps):
            if e == 1:
                factors.append(name)
            elif e > 1:
                factors.append(f"{name}^{e}")
        if not factors:
            body = str(abs(coeff))
        elif abs(coeff) == 1:
            body = "*".join(factors)
        else:
            body = "*".join([str(abs(coeff))] + factors)
        pieces.append(("-" if coeff < 0 else "+", body))
    sign, body = pieces[0]
    out = ("-" if sign == "-" else "") + body
    for sign, body in pieces[1:]:
        out += f" {sign} {body}"
    return out


def _power_table(value: Fraction, max_exp: int) -> list[Fraction]:
    table = [Fraction(1)]
    for _ in range(max_exp):
        table.append(table[-1] * value)
    return table


class PolyMap:
    """A tuple of polynomials sharing one input arity: a map R^n -> R^m."""

    __slots__ = ("input_arity", "components")

    def __init__(self, components: Sequence[Poly]):
        components = tuple(components)
        if not components:
            raise ValueError("a PolyMap needs at least one component")
        arity = components[0].arity
        for p in components:
            if p.arity != arity:
                raise ValueError("all components must share the input arity")
        object.__setattr__(self, "input_arity", arity)
        object.__setattr__(self, "components", components)

    def __setattr__(self, name, value):
        raise AttributeError("PolyMap is immutable")

    def evaluate(self, point: Sequence) -> tuple[Fraction, ...]:
        return tuple(p.evaluate(point) for p in self.components)

    def evaluate_float(self, point: Sequence[float]) -> tuple[float, ...]:
        return tuple(p.evaluate_float(point) for p in self.components)

    def __eq__(self, other):
        if not isinstance(other, PolyMap):
            return NotImplemented
        return self.components == other.components

    def __hash__(self):
        return hash(self.components)

    def __len__(self):
        return len(self.components)

    def __repr__(self):
        return f"PolyMap({list(self.components)!r})"


# -- operation-style interface -------------------------------------------------


def poly_add(p: Poly, q: Poly) -> Poly:
    return p + q


def poly_mul(p: Poly, q: Poly) -> Poly:
    return p * q


def poly_eval(p: Poly, point: Sequence) -> Fraction:
    return p.evaluate(point)


def poly_eval_float(p: Poly, point: Sequence[float]) -> float:
    return p.evaluate_float(point)


def poly_compose(outer: Poly, inners: Sequence[Poly]) -> Poly:
    return outer.compose(inners)


def map_compose(g: PolyMap, f: PolyMap) -> PolyMap:
    """The composition g∘f, fully expanded componentwise."""
    if g.input_arity != len(f.components):
        raise ValueError(
            f"arity mismatch: outer map takes {g.input_arity} inputs, "
            f"inner map produces {len(f.components)}"
        )
    return PolyMap([c.compose(f.components) for c in g.components])


def total_degree(p: Poly) -> int:
    return p.total_degree()


def monomial_count(p: Poly) -> int:
    return p.monomial_count()


@dataclass(frozen=True)
class MapMetrics:
    """Degree and sparsity accounting for a polynomial map."""

    component_degrees: tuple[int, ...]
    component_monomials: tuple[int, ...]
    total_degree: int
    total_monomials: int

    def as_jsonable(self) -> dict:
        return {
            "total_degree": self.total_degree,
            "monomials": self.total_monomials,
            "component_degrees": list(self.component_degrees),
            "component_monomials": list(self.component_monomials),
        }


def map_metrics(m: PolyMap) -> MapMetrics:
    degs = tuple(p.total_degree() for p in m.components)
    mons = tuple(p.monomial_count() for p in m.components)
    return MapMetrics(degs, mons, sum(degs), sum(mons))


# -- helpers for the numeric and sampling layers --------------------------------


def dense_coeffs(p: Poly) -> list[Fraction]:
    """Ascending coefficient list of a univariate polynomial."""
    if p.arity != 1:
        raise ValueError("dense_coeffs needs a univariate polynomial")
    out = [_ZERO] * (p.total_degree() + 1)
    for (e,), c in p.terms.items():
        out[e] = c
    return out


def integer_form(p: Poly) -> tuple[int, list[tuple[int, Exponents]]]:
    """Scale away denominators: returns (L, terms) with L*p having the
    integer coefficients listed in terms."""
    scale = 1
    for c in p.terms.values():
        scale = scale * c.denominator // math.gcd(scale, c.denominator)
    return scale, [(int(c * scale), e) for e, c in p.terms.items()]
