"""Exact rational polynomial, rational-function, and truncated-series arithmetic.

Everything here is exact: coefficients are ``fractions.Fraction``, polynomials
are sparse dicts keyed by exponent tuples, and rational functions are reduced
only by integer content (no multivariate gcd).  Serialized output is
deterministic: terms are ordered graded-lexicographically and rationals print
as ``p/q``.

All values are immutable after construction; every operation returns a new
value.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Iterable, Mapping, Optional, Union

from .errors import ArityMismatchError, RewriteFuelError

Exponents = tuple  # tuple[int, ...], one entry per variable
Scalar = Union[Fraction, int, str]

DEFAULT_REWRITE_FUEL = 10_000


def to_fraction(value: Scalar) -> Fraction:
    """Coerce an int, Fraction, or ``"p/q"`` string to an exact Fraction."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int) and not isinstance(value, bool):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value.strip())
    raise TypeError(f"cannot interpret {value!r} as an exact rational")


def to_int(value) -> int:
    """Strict integer coercion: ints and integer strings only (floats and
    booleans are rejected rather than silently truncated)."""
    if isinstance(value, int) and not isinstance(value, bool):
        return value
    if isinstance(value, str):
        return int(value.strip())
    raise TypeError(f"cannot interpret {value!r} as an exact integer")


def format_fraction(value: Fraction) -> str:
    """Render a Fraction as ``p`` or ``p/q`` (the CLI wire format)."""
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def _grlex_key(exponents: Exponents) -> tuple:
    return (sum(exponents), exponents)


class MultiPoly:
    """Sparse exact polynomial over named variables.

    The variable tuple is always kept sorted, so that polynomials built in any
    order align and serialize identically.  No zero coefficients are stored.
    """

    __slots__ = ("variables", "terms")

    def __init__(self, variables: Iterable[str], terms: Mapping[Exponents, Scalar]):
        ordered = tuple(variables)
        if ordered != tuple(sorted(ordered)):
            order = sorted(range(len(ordered)), key=lambda i: ordered[i])
            remap = tuple(sorted(ordered))
            terms = {
                tuple(exps[i] for i in order): coeff for exps, coeff in terms.items()
            }
            ordered = remap
        if len(set(ordered)) != len(ordered):
            raise ValueError(f"duplicate variable names in {ordered}")
        clean: dict = {}
        width = len(ordered)
        for exps, coeff in terms.items():
            if len(exps) != width:
                raise ValueError(
                    f"exponent vector {exps} does not match variables {ordered}"
                )
            if any(e < 0 for e in exps):
                raise ValueError(f"negative exponent in {exps}")
            # integer-valued coefficients are stored as plain ints: they mix
            # exactly with Fractions and keep the hot convolution loops on
            # native integer arithmetic
            if type(coeff) is not int:
                coeff = to_fraction(coeff)
                if coeff.denominator == 1:
                    coeff = coeff.numerator
            if coeff != 0:
                clean[tuple(exps)] = coeff
        object.__setattr__(self, "variables", ordered)
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, name, value):  # pragma: no cover - immutability guard
        raise AttributeError("MultiPoly is immutable")

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, variables: Iterable[str] = ()) -> "MultiPoly":
        return cls(variables, {})

    @classmethod
    def constant(cls, value: Scalar, variables: Iterable[str] = ()) -> "MultiPoly":
        variables = tuple(variables)
        return cls(variables, {(0,) * len(variables): to_fraction(value)})

    @classmethod
    def variable(cls, name: str) -> "MultiPoly":
        return cls((name,), {(1,): Fraction(1)})

    @classmethod
    def monomial(
        cls, coeff: Scalar, variables: Iterable[str], exponents: Exponents
    ) -> "MultiPoly":
        return cls(variables, {tuple(exponents): to_fraction(coeff)})

    # -- basic queries -----------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return all(sum(e) == 0 for e in self.terms)

    def constant_value(self) -> Fraction:
        if self.is_zero():
            return Fraction(0)
        if not self.is_constant():
            raise ValueError(f"{self} is not constant")
        return to_fraction(next(iter(self.terms.values())))

    def total_degree(self) -> int:
        if self.is_zero():
            return 0
        return max(sum(e) for e in self.terms)

    def sorted_terms(self) -> list:
        """Terms ascending in graded-lexicographic order."""
        return sorted(self.terms.items(), key=lambda kv: _grlex_key(kv[0]))

    def leading_coefficient(self) -> Fraction:
        """Coefficient of the graded-lex greatest term (0 for the zero poly)."""
        if self.is_zero():
            return Fraction(0)
        return self.sorted_terms()[-1][1]

    def trailing_coefficient(self) -> Fraction:
        """Coefficient of the graded-lex least term (0 for the zero poly)."""
        if self.is_zero():
            return Fraction(0)
        return self.sorted_terms()[0][1]

    def content(self) -> Fraction:
        """Positive rational content: gcd of numerators over lcm of denominators."""
        if self.is_zero():
            return Fraction(1)
        num = 0
        den = 1
        for coeff in self.terms.values():
            num = gcd(num, abs(coeff.numerator))
            den = den * coeff.denominator // gcd(den, coeff.denominator)
        return Fraction(num, den)

    # -- alignment and arithmetic ------------------------------------------

    def _aligned(self, other: "MultiPoly"):
        if self.variables == other.variables:
            return self, other
        union = tuple(sorted(set(self.variables) | set(other.variables)))
        return self._embed(union), other._embed(union)

    def _embed(self, variables: tuple) -> "MultiPoly":
        if variables == self.variables:
            return self
        positions = [variables.index(v) for v in self.variables]
        width = len(variables)
        terms = {}
        for exps, coeff in self.terms.items():
            new = [0] * width
            for pos, e in zip(positions, exps):
                new[pos] = e
            terms[tuple(new)] = coeff
        return MultiPoly(variables, terms)

    def __add__(self, other) -> "MultiPoly":
        other = _coerce_poly(other)
        a, b = self._aligned(other)
        terms = dict(a.terms)
        for exps, coeff in b.terms.items():
            acc = terms.get(exps)
            terms[exps] = coeff if acc is None else acc + coeff
        return MultiPoly(a.variables, terms)

    def __radd__(self, other) -> "MultiPoly":
        return self.__add__(other)

    def __neg__(self) -> "MultiPoly":
        return MultiPoly(self.variables, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other) -> "MultiPoly":
        return self.__add__(-_coerce_poly(other))

    def __rsub__(self, other) -> "MultiPoly":
        return _coerce_poly(other).__sub__(self)

    def __mul__(self, other) -> "MultiPoly":
        other = _coerce_poly(other)
        a, b = self._aligned(other)
        terms: dict = {}
        for ea, ca in a.terms.items():
            for eb, cb in b.terms.items():
                key = tuple(x + y for x, y in zip(ea, eb))
                acc = terms.get(key)
                terms[key] = ca * cb if acc is None else acc + ca * cb
        return MultiPoly(a.variables, terms)

    def __rmul__(self, other) -> "MultiPoly":
        return self.__mul__(other)

    def __pow__(self, exponent: int) -> "MultiPoly":
        if exponent < 0:
            raise ValueError("negative powers are not polynomials")
        result = MultiPoly.constant(1, self.variables)
        base = self
        n = exponent
        while n:
            if n & 1:
                result = result * base
            base = base * base if n > 1 else base
            n >>= 1
        return result

    def scale(self, value: Scalar) -> "MultiPoly":
        value = to_fraction(value)
        if value.denominator == 1:
            value = value.numerator
        return MultiPoly(self.variables, {e: c * value for e, c in self.terms.items()})

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = MultiPoly.constant(other)
        if not isinstance(other, MultiPoly):
            return NotImplemented
        a, b = self._aligned(other)
        return a.terms == b.terms

    def __hash__(self):
        return hash((self.variables, tuple(sorted(self.terms.items()))))

    # -- evaluation and substitution ----------------------------------------

    def evaluate(self, values: Mapping[str, Scalar]) -> Fraction:
        missing = [v for v in self.variables if v not in values]
        if missing:
            raise ValueError(f"no value supplied for {missing}")
        point = [to_fraction(values[v]) for v in self.variables]
        # cache powers per variable; dense high-degree polynomials hit the
        # same exponents constantly
        powers = [{0: Fraction(1), 1: base} for base in point]
        total = Fraction(0)
        for exps, coeff in self.terms.items():
            term = coeff
            for i, e in enumerate(exps):
                if e:
                    cache = powers[i]
                    value = cache.get(e)
                    if value is None:
                        value = cache[1] ** e
                        cache[e] = value
                    term *= value
            total += term
        return total

    def substitute(self, name: str, replacement: "MultiPoly") -> "MultiPoly":
        """Substitute a polynomial for one variable (exact expansion)."""
        if name not in self.variables:
            return self
        idx = self.variables.index(name)
        rest = tuple(v for v in self.variables if v != name)
        result = MultiPoly.zero(rest)
        for exps, coeff in self.terms.items():
            reduced = tuple(e for i, e in enumerate(exps) if i != idx)
            base = MultiPoly.monomial(coeff, rest, reduced)
            result = result + base * (replacement ** exps[idx])
        return result

    # -- serialization -------------------------------------------------------

    def to_text(self) -> str:
        """Canonical text form, terms ascending graded-lex, e.g. ``1 - 1/2*q + 3*q^2``."""
        if self.is_zero():
            return "0"
        pieces = []
        for exps, coeff in self.sorted_terms():
            mono = "*".join(
                v if e == 1 else f"{v}^{e}"
                for v, e in zip(self.variables, exps)
                if e
            )
            if not mono:
                piece = format_fraction(coeff)
            elif coeff == 1:
                piece = mono
            elif coeff == -1:
                piece = f"-{mono}"
            else:
                piece = f"{format_fraction(coeff)}*{mono}"
            pieces.append(piece)
        out = pieces[0]
        for piece in pieces[1:]:
            if piece.startswith("-"):
                out += f" - {piece[1:]}"
            else:
                out += f" + {piece}"
        return out

    def __repr__(self) -> str:
        return f"MultiPoly({self.to_text()})"


def _coerce_poly(value) -> MultiPoly:
    if isinstance(value, MultiPoly):
        return value
    if isinstance(value, (int, Fraction, str)):
        return MultiPoly.constant(to_fraction(value))
    raise TypeError(f"cannot use {value!r} as a polynomial")


def poly_arith(a: MultiPoly, b: MultiPoly, op: str) -> MultiPoly:
    """Named add/mul entry point over the auto-extended variable union."""
    if op == "add":
        return a + b
    if op == "mul":
        return a * b
    raise ValueError(f"unknown polynomial operation {op!r}")


class RationalFunction:
    """Quotient of two MultiPolys, reduced by integer content only.

    Equality is decided by cross-multiplication; no multivariate gcd is ever
    computed.  The denominator is normalized to content 1 with positive
    trailing (graded-lex least) coefficient, which makes the representation
    deterministic.
    """

    __slots__ = ("numerator", "denominator")

    def __init__(self, numerator: MultiPoly, denominator: Optional[MultiPoly] = None):
        numerator = _coerce_poly(numerator)
        denominator = (
            MultiPoly.constant(1) if denominator is None else _coerce_poly(denominator)
        )
        if denominator.is_zero():
            raise ZeroDivisionError("zero denominator in rational function")
        if numerator.is_zero():
            numerator = MultiPoly.zero()
            denominator = MultiPoly.constant(1)
        else:
            scale = denominator.content()
            if denominator.trailing_coefficient() < 0:
                scale = -scale
            numerator = numerator.scale(1 / scale)
            denominator = denominator.scale(1 / scale)
        numerator, denominator = numerator._aligned(denominator)
        object.__setattr__(self, "numerator", numerator)
        object.__setattr__(self, "denominator", denominator)

    def __setattr__(self, name, value):  # pragma: no cover - immutability guard
        raise AttributeError("RationalFunction is immutable")

    @classmethod
    def constant(cls, value: Scalar) -> "RationalFunction":
        return cls(MultiPoly.constant(to_fraction(value)))

    def is_zero(self) -> bool:
        return self.numerator.is_zero()

    def is_one(self) -> bool:
        return self.numerator == self.denominator

    def __add__(self, other) -> "RationalFunction":
        other = _coerce_ratfunc(other)
        if self.denominator == other.denominator:
            return RationalFunction(
                self.numerator + other.numerator, self.denominator
            )
        return RationalFunction(
            self.numerator * other.denominator + other.numerator * self.denominator,
            self.denominator * other.denominator,
        )

    def __radd__(self, other) -> "RationalFunction":
        return self.__add__(other)

    def __neg__(self) -> "RationalFunction":
        return RationalFunction(-self.numerator, self.denominator)

    def __sub__(self, other) -> "RationalFunction":
        return self.__add__(-_coerce_ratfunc(other))

    def __rsub__(self, other) -> "RationalFunction":
        return _coerce_ratfunc(other).__sub__(self)

    def __mul__(self, other) -> "RationalFunction":
        other = _coerce_ratfunc(other)
        return RationalFunction(
            self.numerator * other.numerator, self.denominator * other.denominator
        )

    def __rmul__(self, other) -> "RationalFunction":
        return self.__mul__(other)

    def inverse(self) -> "RationalFunction":
        if self.is_zero():
            raise ZeroDivisionError("inverse of the zero rational function")
        return RationalFunction(self.denominator, self.numerator)

    def __truediv__(self, other) -> "RationalFunction":
        return self * _coerce_ratfunc(other).inverse()

    def __rtruediv__(self, other) -> "RationalFunction":
        return _coerce_ratfunc(other) * self.inverse()

    def __pow__(self, exponent: int) -> "RationalFunction":
        if exponent < 0:
            return self.inverse() ** (-exponent)
        return RationalFunction(self.numerator**exponent, self.denominator**exponent)

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction, MultiPoly)):
            other = _coerce_ratfunc(other)
        if not isinstance(other, RationalFunction):
            return NotImplemented
        return self.numerator * other.denominator == other.numerator * self.denominator

    def __hash__(self):
        raise TypeError("RationalFunction is not hashable (equality is extensional)")

    def evaluate(self, values: Mapping[str, Scalar]) -> Fraction:
        den = self.denominator.evaluate(values)
        if den == 0:
            raise ZeroDivisionError(
                f"denominator {self.denominator.to_text()} vanishes at the given point"
            )
        return self.numerator.evaluate(values) / den

    def to_text(self) -> str:
        if self.denominator == MultiPoly.constant(1):
            return self.numerator.to_text()
        return f"({self.numerator.to_text()})/({self.denominator.to_text()})"

    def to_factor_text(self) -> str:
        """Text safe to prefix a ``*q^d`` factor with (parenthesized if compound)."""
        text = self.to_text()
        if self.denominator == MultiPoly.constant(1) and len(self.numerator.terms) <= 1:
            return text
        if text.startswith("(") and text.endswith(")") and "/" not in text:
            return text
        if "/" in text and text.startswith("("):
            return text
        return f"({text})"

    def __repr__(self) -> str:
        return f"RationalFunction({self.to_text()})"


def _coerce_ratfunc(value) -> RationalFunction:
    if isinstance(value, RationalFunction):
        return value
    if isinstance(value, MultiPoly):
        return RationalFunction(value)
    if isinstance(value, (int, Fraction, str)):
        return RationalFunction.constant(to_fraction(value))
    raise TypeError(f"cannot use {value!r} as a rational function")


class TruncatedSeries:
    """Power series in Novikov variables truncated at a total degree bound.

    ``degree_variables`` is a tuple of symbol names (usually just ``("q",)``),
    coefficients are RationalFunctions keyed by degree vectors of matching
    arity.  Arithmetic between two series truncates at the minimum of the two
    bounds.
    """

    __slots__ = ("degree_variables", "truncation", "coefficients")

    def __init__(
        self,
        degree_variables: Iterable[str],
        truncation: int,
        coefficients: Mapping[Exponents, object],
    ):
        degree_variables = tuple(degree_variables)
        if not degree_variables:
            raise ValueError("a series needs at least one degree variable")
        if truncation < 0:
            raise ValueError("truncation bound must be non-negative")
        clean = {}
        for degs, coeff in coefficients.items():
            degs = tuple(degs)
            if len(degs) != len(degree_variables):
                raise ArityMismatchError(
                    f"degree vector {degs} has arity {len(degs)}, "
                    f"expected {len(degree_variables)}"
                )
            if any(d < 0 for d in degs):
                raise ValueError(f"negative degree in {degs}")
            if sum(degs) > truncation:
                continue
            value = _coerce_ratfunc(coeff)
            if not value.is_zero():
                clean[degs] = value
        object.__setattr__(self, "degree_variables", degree_variables)
        object.__setattr__(self, "truncation", truncation)
        object.__setattr__(self, "coefficients", clean)

    def __setattr__(self, name, value):  # pragma: no cover - immutability guard
        raise AttributeError("TruncatedSeries is immutable")

    @classmethod
    def zero(cls, degree_variables=("q",), truncation: int = 0) -> "TruncatedSeries":
        return cls(degree_variables, truncation, {})

    @classmethod
    def one(cls, degree_variables=("q",), truncation: int = 0) -> "TruncatedSeries":
        arity = len(tuple(degree_variables))
        return cls(degree_variables, truncation, {(0,) * arity: Fraction(1)})

    def coefficient(self, degrees: Exponents) -> RationalFunction:
        return self.coefficients.get(tuple(degrees), RationalFunction.constant(0))

    def is_zero(self) -> bool:
        return not self.coefficients

    def _check_arity(self, other: "TruncatedSeries"):
        if self.degree_variables != other.degree_variables:
            raise ArityMismatchError(
                f"series in {self.degree_variables} cannot combine with "
                f"series in {other.degree_variables}"
            )

    def __add__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        self._check_arity(other)
        bound = min(self.truncation, other.truncation)
        coeffs: dict = {}
        for degs, value in self.coefficients.items():
            if sum(degs) <= bound:
                coeffs[degs] = value
        for degs, value in other.coefficients.items():
            if sum(degs) <= bound:
                acc = coeffs.get(degs)
                coeffs[degs] = value if acc is None else acc + value
        return TruncatedSeries(self.degree_variables, bound, coeffs)

    def __neg__(self) -> "TruncatedSeries":
        return TruncatedSeries(
            self.degree_variables,
            self.truncation,
            {d: -c for d, c in self.coefficients.items()},
        )

    def __sub__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        return self.__add__(-other)

    def __mul__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        self._check_arity(other)
        bound = min(self.truncation, other.truncation)
        coeffs: dict = {}
        for da, ca in self.coefficients.items():
            if sum(da) > bound:
                continue
            for db, cb in other.coefficients.items():
                key = tuple(x + y for x, y in zip(da, db))
                if sum(key) > bound:
                    continue
                product = ca * cb
                acc = coeffs.get(key)
                coeffs[key] = product if acc is None else acc + product
        return TruncatedSeries(self.degree_variables, bound, coeffs)

    def scalar_mul(self, value) -> "TruncatedSeries":
        value = _coerce_ratfunc(value)
        return TruncatedSeries(
            self.degree_variables,
            self.truncation,
            {d: c * value for d, c in self.coefficients.items()},
        )

    def __eq__(self, other) -> bool:
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        if (
            self.degree_variables != other.degree_variables
            or self.truncation != other.truncation
        ):
            return False
        keys = set(self.coefficients) | set(other.coefficients)
        return all(self.coefficient(k) == other.coefficient(k) for k in keys)

    def __hash__(self):
        raise TypeError("TruncatedSeries is not hashable")

    def to_text(self) -> str:
        if self.is_zero():
            return "0"
        pieces = []
        for degs in sorted(self.coefficients, key=_grlex_key):
            coeff = self.coefficients[degs]
            qmono = "*".join(
                v if d == 1 else f"{v}^{d}"
                for v, d in zip(self.degree_variables, degs)
                if d
            )
            if not qmono:
                piece = coeff.to_text()
            elif coeff == RationalFunction.constant(1):
                piece = qmono
            elif coeff == RationalFunction.constant(-1):
                piece = f"-{qmono}"
            else:
                piece = f"{coeff.to_factor_text()}*{qmono}"
            pieces.append(piece)
        out = pieces[0]
        for piece in pieces[1:]:
            if piece.startswith("-"):
                out += f" - {piece[1:]}"
            else:
                out += f" + {piece}"
        return out

    def __repr__(self) -> str:
        return f"TruncatedSeries({self.to_text()}; trunc={self.truncation})"


def series_arith(a: TruncatedSeries, b: TruncatedSeries, op: str) -> TruncatedSeries:
    """Named add/mul/scalar_mul entry point for series."""
    if op == "add":
        return a + b
    if op == "mul":
        return a * b
    if op == "scalar_mul":
        raise ValueError("scalar_mul takes a scalar; use TruncatedSeries.scalar_mul")
    raise ValueError(f"unknown series operation {op!r}")


@dataclass(frozen=True)
class BinomialRelation:
    """One oriented rewriting rule lhs -> rhs between scaled monomials."""

    lhs_coeff: Fraction
    lhs_exponents: Exponents
    rhs_coeff: Fraction
    rhs_exponents: Exponents

    def __post_init__(self):
        if self.lhs_coeff == 0 or self.rhs_coeff == 0:
            raise ValueError("binomial relation sides must be non-zero monomials")

    def to_text(self, generators) -> str:
        lhs = MultiPoly.monomial(self.lhs_coeff, generators, self.lhs_exponents)
        rhs = MultiPoly.monomial(self.rhs_coeff, generators, self.rhs_exponents)
        return f"{lhs.to_text()} = {rhs.to_text()}"


@dataclass(frozen=True)
class BinomialPresentation:
    """Generators plus binomial relations, oriented lhs -> rhs for rewriting.

    Termination on arbitrary user input is not assumed; `normal_form` guards
    with a fuel bound.  Confluence of the shipped presentations is asserted by
    the test suite, not by construction.
    """

    generators: tuple
    relations: tuple

    def __post_init__(self):
        object.__setattr__(self, "generators", tuple(self.generators))
        object.__setattr__(self, "relations", tuple(self.relations))
        width = len(self.generators)
        for rel in self.relations:
            if len(rel.lhs_exponents) != width or len(rel.rhs_exponents) != width:
                raise ValueError("relation exponent arity does not match generators")

    def relation_texts(self) -> list:
        return [rel.to_text(self.generators) for rel in self.relations]


def normal_form_monomial(
    coeff: Scalar,
    exponents: Exponents,
    presentation: BinomialPresentation,
    fuel: int = DEFAULT_REWRITE_FUEL,
) -> MultiPoly:
    """Rewrite one scaled monomial to a form no relation lhs divides.

    Relations are tried in listed order and the first applicable one fires, so
    the reduction path is deterministic.  Exceeding the fuel bound raises
    RewriteFuelError (a non-terminating user presentation), it never silently
    truncates.
    """
    coeff = to_fraction(coeff)
    exps = tuple(exponents)
    steps = 0
    while True:
        if coeff == 0:
            return MultiPoly.zero(presentation.generators)
        fired = False
        for rel in presentation.relations:
            if all(m >= l for m, l in zip(exps, rel.lhs_exponents)):
                exps = tuple(
                    m - l + r
                    for m, l, r in zip(exps, rel.lhs_exponents, rel.rhs_exponents)
                )
                coeff = coeff * rel.rhs_coeff / rel.lhs_coeff
                fired = True
                break
        if not fired:
            return MultiPoly.monomial(coeff, presentation.generators, exps)
        steps += 1
        if steps > fuel:
            raise RewriteFuelError(
                f"rewriting exceeded {fuel} steps; presentation looks non-terminating"
            )


def normal_form(
    poly: MultiPoly,
    presentation: BinomialPresentation,
    fuel: int = DEFAULT_REWRITE_FUEL,
) -> MultiPoly:
    """Linear extension of `normal_form_monomial` to whole polynomials."""
    foreign = set(poly.variables) - set(presentation.generators)
    if foreign:
        raise ValueError(f"polynomial uses symbols {sorted(foreign)} not in generators")
    embedded = poly._embed(tuple(sorted(presentation.generators)))
    # Re-map exponents into generator order (generators need not be sorted).
    order = [sorted(presentation.generators).index(g) for g in presentation.generators]
    result = MultiPoly.zero(presentation.generators)
    for exps, coeff in embedded.terms.items():
        arranged = tuple(exps[i] for i in order)
        result = result + normal_form_monomial(coeff, arranged, presentation, fuel)
    return result
