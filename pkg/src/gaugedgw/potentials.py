"""Truncated formal-series invariants: Delta-factors, localized potentials for
linear torus actions, quantum differential/difference residual checks, quantum
cohomology and K-theory presentations of projective space, Batyrev-type toric
presentations, framed-sheaf fundamental-solution truncations, age gradings,
and the crepancy test.

Semi-infinite products are always reduced to their finite ratios before
anything is evaluated; no infinite product is ever represented.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from .algebra import (
    BinomialPresentation,
    BinomialRelation,
    MultiPoly,
    RationalFunction,
    TruncatedSeries,
    normal_form,
    to_fraction,
    to_int,
)
from .errors import DomainError, InputError, SpecializationError

ZETA = "zeta"

SYMBOLIC_FRAMED_K_CAP = 3
SYMBOLIC_FRAMED_TRUNC_CAP = 3


def _as_poly(value) -> MultiPoly:
    if isinstance(value, MultiPoly):
        return value
    if isinstance(value, str):
        return MultiPoly.variable(value)
    return MultiPoly.constant(to_fraction(value))


def delta_factor(pairing: int, theta="theta", w="w", zeta=ZETA) -> RationalFunction:
    """Finite ratio of the two semi-infinite products indexed by theta . dbar.

    For pairing m >= 0 the tails cancel to prod_{l=1..m} (theta + w + l zeta);
    for m < 0 they cancel to 1 / prod_{l=m+1..0} (theta + w + l zeta).
    """
    theta = _as_poly(theta)
    w = _as_poly(w)
    zeta_poly = MultiPoly.variable(zeta)
    product = MultiPoly.constant(1)
    if pairing >= 0:
        for l in range(1, pairing + 1):
            product = product * (theta + w + zeta_poly.scale(l))
        return RationalFunction(product)
    for l in range(pairing + 1, 1):
        product = product * (theta + w + zeta_poly.scale(l))
    return RationalFunction(MultiPoly.constant(1), product)


# -- localized gauged potentials ------------------------------------------------


@dataclass(frozen=True)
class LinearActionSpec:
    """A rank-r torus on a vector space: k integer weights, a basis of
    effective classes identifying degrees with non-negative multi-indices,
    and a truncation bound for the Novikov direction."""

    rank: int
    weights: Tuple[Tuple[int, ...], ...]
    degree_basis: Tuple[Tuple[int, ...], ...]
    truncation: int

    @classmethod
    def create(cls, rank, weights, degree_basis=None, truncation=4):
        try:
            rank = to_int(rank)
        except (TypeError, ValueError) as exc:
            raise InputError(f"bad rank: {exc}") from exc
        if rank < 1:
            raise InputError("rank must be positive")
        try:
            weights = tuple(tuple(to_int(x) for x in w) for w in weights)
        except (TypeError, ValueError) as exc:
            raise InputError(f"bad weight entry: {exc}") from exc
        if not weights or any(len(w) != rank for w in weights):
            raise InputError("need at least one weight of length rank")
        if degree_basis is None:
            degree_basis = tuple(
                tuple(int(i == j) for j in range(rank)) for i in range(rank)
            )
        try:
            degree_basis = tuple(tuple(to_int(x) for x in e) for e in degree_basis)
        except (TypeError, ValueError) as exc:
            raise InputError(f"bad degree basis entry: {exc}") from exc
        if not degree_basis or any(len(e) != rank for e in degree_basis):
            raise InputError("degree basis entries must be coweights of the rank")
        if truncation < 0:
            raise InputError("truncation must be non-negative")
        return cls(rank, weights, degree_basis, int(truncation))

    @property
    def count(self) -> int:
        return len(self.weights)

    def pairing(self, j: int, multi_index: Sequence[int]) -> int:
        """mu_j evaluated on the effective class sum_a n_a e_a (1-based j)."""
        weight = self.weights[j - 1]
        return sum(
            n * sum(w * e for w, e in zip(weight, basis))
            for n, basis in zip(multi_index, self.degree_basis)
        )

    def degree_variables(self) -> Tuple[str, ...]:
        m = len(self.degree_basis)
        if m == 1:
            return ("q",)
        return tuple(f"q{a}" for a in range(1, m + 1))


def _x_inverse_symbol(j: int, count: int) -> str:
    return "Xinv" if count == 1 else f"Xinv{j}"


def _one_minus_xinv_zeta(xinv: str, exponent: int) -> RationalFunction:
    """(1 - Xinv * zeta^exponent) with negative exponents cleared into the
    denominator (the inverse class is a fresh symbol, never a negative
    power)."""
    x = MultiPoly.variable(xinv)
    zeta = MultiPoly.variable(ZETA)
    if exponent >= 0:
        return RationalFunction(MultiPoly.constant(1) - x * zeta**exponent)
    power = zeta ** (-exponent)
    return RationalFunction(power - x, power)


def _multi_indices(arity: int, bound: int):
    if arity == 0:
        yield ()
        return
    for head in range(bound + 1):
        for tail in _multi_indices(arity - 1, bound - head):
            yield (head,) + tail


def localized_potential(spec: LinearActionSpec, branch: str = "default") -> TruncatedSeries:
    """Localized gauged potential at alpha = 0 for a linear torus action.

    The q^d coefficient multiplies, over weight spaces j, the finite ratio of
    the two semi-infinite products with upper index mu_j(d): a reciprocal
    product of (1 - X_j^{-1} zeta^m) for m = 1..mu_j(d) when the pairing is
    non-negative, and the complementary finite product when negative.  The
    ``conjugate`` branch negates the zeta exponents inside each factor (the
    other localization branch, by analogy; not asserted against a worked
    instance).
    """
    if branch not in ("default", "conjugate"):
        raise InputError(f"unknown branch {branch!r}")
    sign = 1 if branch == "default" else -1
    qvars = spec.degree_variables()
    coeffs: Dict[tuple, RationalFunction] = {}
    for index in _multi_indices(len(spec.degree_basis), spec.truncation):
        coeff = RationalFunction.constant(1)
        for j in range(1, spec.count + 1):
            pairing = spec.pairing(j, index)
            xinv = _x_inverse_symbol(j, spec.count)
            if pairing >= 0:
                for m in range(1, pairing + 1):
                    coeff = coeff / _one_minus_xinv_zeta(xinv, sign * m)
            else:
                for m in range(pairing + 1, 1):
                    coeff = coeff * _one_minus_xinv_zeta(xinv, sign * m)
        coeffs[index] = coeff
    return TruncatedSeries(qvars, spec.truncation, coeffs)


# -- quantum differential and difference residuals -------------------------------


def cohomological_i_function(k: int, truncation: int) -> TruncatedSeries:
    """I(q) = sum_d q^d / prod_{m=1..d} (beta + m zeta)^k, exact coefficients."""
    if k < 1 or truncation < 0:
        raise InputError("need k >= 1 and a non-negative truncation")
    beta = MultiPoly.variable("beta")
    zeta = MultiPoly.variable(ZETA)
    coeffs: Dict[tuple, RationalFunction] = {(0,): RationalFunction.constant(1)}
    den = MultiPoly.constant(1)
    for d in range(1, truncation + 1):
        den = den * (beta + zeta.scale(d)) ** k
        coeffs[(d,)] = RationalFunction(MultiPoly.constant(1), den)
    return TruncatedSeries(("q",), truncation, coeffs)


def qde_residual_cohomological(k: int, truncation: int) -> TruncatedSeries:
    """Residual of the quantum differential operator on the I-function.

    Applying (beta + zeta q d/dq)^k to the q^d coefficient multiplies it by
    (beta + d zeta)^k; subtracting q . I and dividing by q leaves the degree-d
    coefficient (beta + (d+1) zeta)^k c_{d+1} - c_d for d = 0..D-1, which
    telescopes to zero.  The degree-0 defect of the undivided operator output
    is the classical relation generator beta^k and is not part of the
    residual.
    """
    if k < 1 or truncation < 1:
        raise InputError("need k >= 1 and truncation >= 1")
    series = cohomological_i_function(k, truncation)
    beta = MultiPoly.variable("beta")
    zeta = MultiPoly.variable(ZETA)
    coeffs: Dict[tuple, RationalFunction] = {}
    for d in range(truncation):
        shift = RationalFunction((beta + zeta.scale(d + 1)) ** k)
        coeffs[(d,)] = shift * series.coefficient((d + 1,)) - series.coefficient((d,))
    return TruncatedSeries(("q",), truncation - 1, coeffs)


def ktheoretic_j_function(k: int, truncation: int) -> TruncatedSeries:
    """J^K(q) = sum_d q^d / prod_{m=1..d} (1 - Linv zeta^m)^k."""
    if k < 1 or truncation < 0:
        raise InputError("need k >= 1 and a non-negative truncation")
    linv = MultiPoly.variable("Linv")
    zeta = MultiPoly.variable(ZETA)
    coeffs: Dict[tuple, RationalFunction] = {(0,): RationalFunction.constant(1)}
    den = MultiPoly.constant(1)
    for d in range(1, truncation + 1):
        den = den * (MultiPoly.constant(1) - linv * zeta**d) ** k
        coeffs[(d,)] = RationalFunction(MultiPoly.constant(1), den)
    return TruncatedSeries(("q",), truncation, coeffs)


def qde_residual_ktheoretic(k: int, truncation: int) -> TruncatedSeries:
    """Residual of the degree-weighted difference operator on J^K.

    One application of the operator multiplies the q^d coefficient by
    (1 - Linv zeta^d); k applications then subtracting q . J^K and dividing by
    q leaves (1 - Linv zeta^{d+1})^k c_{d+1} - c_d, identically zero.  The
    degree-0 defect of the undivided output is the relation generator
    (1 - Linv)^k, checked separately in the tests.
    """
    if k < 1 or truncation < 1:
        raise InputError("need k >= 1 and truncation >= 1")
    series = ktheoretic_j_function(k, truncation)
    linv = MultiPoly.variable("Linv")
    zeta = MultiPoly.variable(ZETA)
    coeffs: Dict[tuple, RationalFunction] = {}
    for d in range(truncation):
        weight = RationalFunction(
            (MultiPoly.constant(1) - linv * zeta ** (d + 1)) ** k
        )
        coeffs[(d,)] = weight * series.coefficient((d + 1,)) - series.coefficient((d,))
    return TruncatedSeries(("q",), truncation - 1, coeffs)


# -- presentations ----------------------------------------------------------------


@dataclass(frozen=True)
class PresentationResult:
    """A binomial presentation plus the dictionary identifying generators with
    geometric classes.  Degenerate relations (both pairing sides empty) are
    reported but never installed as rewrite rules."""

    presentation: BinomialPresentation
    dictionary: Tuple[Tuple[str, str], ...]
    degenerate_relations: Tuple[str, ...] = ()

    @property
    def dictionary_map(self) -> Dict[str, str]:
        return dict(self.dictionary)

    def relation_texts(self) -> List[str]:
        return self.presentation.relation_texts()


def qh_presentation(k: int) -> PresentationResult:
    """Quantum cohomology of the projectivization of C^k: one generator beta
    with beta^k = q."""
    if k < 2:
        raise DomainError("the projective-space presentation needs k >= 2")
    pres = BinomialPresentation(
        generators=("beta", "q"),
        relations=(
            BinomialRelation(Fraction(1), (k, 0), Fraction(1), (0, 1)),
        ),
    )
    result = PresentationResult(
        pres,
        (
            ("beta", "hyperplane Euler class"),
            ("q", "Novikov variable"),
        ),
    )
    _verify_projective(result, k)
    return result


def qk_presentation(k: int) -> PresentationResult:
    """Quantum K-theory of the same quotient: the K-theoretic Euler class
    beta = 1 - L^{-1} satisfies beta^k = q.  The presentation stays binomial
    in beta; the dictionary records the identification with L."""
    if k < 2:
        raise DomainError("the projective-space presentation needs k >= 2")
    pres = BinomialPresentation(
        generators=("beta", "q"),
        relations=(
            BinomialRelation(Fraction(1), (k, 0), Fraction(1), (0, 1)),
        ),
    )
    result = PresentationResult(
        pres,
        (
            ("beta", "1 - L^(-1), the K-theoretic hyperplane Euler class"),
            ("L", "hyperplane line bundle class"),
            ("q", "Novikov variable"),
        ),
    )
    _verify_projective(result, k)
    return result


def _verify_projective(result: PresentationResult, k: int) -> None:
    beta_k = MultiPoly.monomial(1, ("beta", "q"), (k, 0))
    q = MultiPoly.monomial(1, ("beta", "q"), (0, 1))
    if normal_form(beta_k, result.presentation) != q:
        raise AssertionError("presentation failed its defining reduction")


def k_euler_class_expansion(k: int) -> MultiPoly:
    """(1 - Linv)^k expanded as a polynomial in the inverse hyperplane class."""
    linv = MultiPoly.variable("Linv")
    return (MultiPoly.constant(1) - linv) ** k


def reduce_k_theory_class(poly: MultiPoly, result: PresentationResult) -> MultiPoly:
    """Rewrite a polynomial in Linv through the K-theoretic presentation by
    substituting Linv = 1 - beta exactly, then reducing."""
    if set(poly.variables) - {"Linv"}:
        raise InputError("polynomial must involve only the inverse class Linv")
    beta = MultiPoly.variable("beta")
    substituted = poly.substitute("Linv", MultiPoly.constant(1) - beta)
    return normal_form(substituted, result.presentation)


def batyrev_presentation(
    spec: LinearActionSpec, degree_generators: Iterable[Sequence[int]]
) -> PresentationResult:
    """Batyrev-style relations, one per generating effective class d:
    prod_{mu_j(d) > 0} beta_j^{mu_j(d)} = q^d prod_{mu_j(d) < 0} beta_j^{-mu_j(d)}.

    Classes pairing to zero against every weight give the degenerate relation
    1 = q^d; those are reported, not installed (the rewrite would not
    terminate)."""
    try:
        degree_generators = [tuple(to_int(x) for x in d) for d in degree_generators]
    except (TypeError, ValueError) as exc:
        raise InputError(f"bad degree generator: {exc}") from exc
    arity = len(spec.degree_basis)
    for d in degree_generators:
        if len(d) != arity:
            raise InputError(
                "degree generators are multi-indices over the degree basis"
            )
        if any(x < 0 for x in d):
            raise InputError("degree generators must be effective (non-negative)")
    beta_names = tuple(f"beta{j}" for j in range(1, spec.count + 1))
    qvars = spec.degree_variables()
    generators = beta_names + qvars
    width = len(generators)
    relations = []
    degenerate = []
    for d in degree_generators:
        pairings = [spec.pairing(j, d) for j in range(1, spec.count + 1)]
        lhs = [0] * width
        rhs = [0] * width
        for j, p in enumerate(pairings):
            if p > 0:
                lhs[j] = p
            elif p < 0:
                rhs[j] = -p
        for a, n in enumerate(d):
            rhs[spec.count + a] = n
        if all(p == 0 for p in pairings):
            q_mono = MultiPoly.monomial(1, generators, tuple(rhs))
            degenerate.append(f"1 = {q_mono.to_text()}")
            continue
        relations.append(
            BinomialRelation(Fraction(1), tuple(lhs), Fraction(1), tuple(rhs))
        )
    pres = BinomialPresentation(generators=generators, relations=tuple(relations))
    dictionary = tuple(
        (name, f"Euler class of weight space {j}")
        for j, name in enumerate(beta_names, start=1)
    ) + tuple((q, "Novikov variable") for q in qvars)
    return PresentationResult(pres, dictionary, tuple(degenerate))


# -- framed-sheaf fundamental solution --------------------------------------------


@dataclass(frozen=True)
class FramedSheafSpec:
    """Chern-root count k, framing rank, truncation, and an optional
    specialization point for the equivariant parameters.  Symbolic mode is
    capped (coefficient blow-up); specialized mode has no cap."""

    k: int
    framing_rank: int
    truncation: int
    specialization: Optional[Tuple[Tuple[str, Fraction], ...]]

    @classmethod
    def create(cls, k, framing_rank, truncation, specialization=None):
        try:
            k, framing_rank, truncation = to_int(k), to_int(framing_rank), to_int(truncation)
        except (TypeError, ValueError) as exc:
            raise InputError(f"bad framed-sheaf parameter: {exc}") from exc
        if k < 1 or framing_rank < 1:
            raise InputError("need k >= 1 and framing rank >= 1")
        if truncation < 1:
            raise InputError("truncation must be at least 1")
        if specialization is None:
            if k > SYMBOLIC_FRAMED_K_CAP or truncation > SYMBOLIC_FRAMED_TRUNC_CAP:
                raise DomainError(
                    f"symbolic mode is capped at k <= {SYMBOLIC_FRAMED_K_CAP}, "
                    f"truncation <= {SYMBOLIC_FRAMED_TRUNC_CAP}; "
                    "supply a specialization point beyond that"
                )
            return cls(k, framing_rank, truncation, None)
        values = dict(specialization)
        needed = [f"theta{i}" for i in range(1, k + 1)] + ["xi1", "xi2", ZETA]
        missing = [name for name in needed if name not in values]
        if missing:
            raise InputError(f"specialization misses {missing}")
        try:
            table = tuple((name, to_fraction(values[name])) for name in needed)
        except (TypeError, ValueError) as exc:
            raise InputError(f"bad specialization value: {exc}") from exc
        return cls(k, framing_rank, truncation, table)

    @property
    def symbolic(self) -> bool:
        return self.specialization is None

    @property
    def point(self) -> Dict[str, Fraction]:
        if self.specialization is None:
            raise DomainError("symbolic spec has no specialization point")
        return dict(self.specialization)


def default_specialization(k: int) -> Dict[str, Fraction]:
    """Small distinct prime reciprocals; keeps every Delta denominator away
    from zero for these formulas."""
    point = {f"theta{i}": Fraction(i, 7) for i in range(1, k + 1)}
    point["xi1"] = Fraction(1, 3)
    point["xi2"] = Fraction(1, 5)
    point[ZETA] = Fraction(1)
    return point


def _compositions(total: int, parts: int):
    if parts == 1:
        yield (total,)
        return
    for head in range(total + 1):
        for tail in _compositions(total - head, parts - 1):
            yield (head,) + tail


def _delta_linear_factors(pairing: int, theta: MultiPoly, w: MultiPoly):
    """The finite-ratio content of a Delta factor as (numerator factor list,
    denominator factor list) of linear polynomials."""
    zeta_poly = MultiPoly.variable(ZETA)
    if pairing >= 0:
        return [theta + w + zeta_poly.scale(l) for l in range(1, pairing + 1)], []
    return [], [theta + w + zeta_poly.scale(l) for l in range(pairing + 1, 1)]


def _balanced_product(polys) -> MultiPoly:
    """Multiply many polynomials smallest-first to keep intermediates small."""
    if not polys:
        return MultiPoly.constant(1)
    work = sorted(polys, key=lambda p: len(p.terms))
    while len(work) > 1:
        a = work.pop(0)
        b = work.pop(0)
        product = a * b
        # insertion keeps the queue roughly sorted by size
        index = 0
        while index < len(work) and len(work[index].terms) < len(product.terms):
            index += 1
        work.insert(index, product)
    return work[0]


def _delta_value(
    pairing: int, theta: Fraction, w: Fraction, zeta: Fraction, label: str
) -> Fraction:
    if pairing >= 0:
        value = Fraction(1)
        for l in range(1, pairing + 1):
            value *= theta + w + l * zeta
        return value
    value = Fraction(1)
    for l in range(pairing + 1, 1):
        factor = theta + w + l * zeta
        if factor == 0:
            raise SpecializationError(
                f"factor (theta + w + {l} zeta) of {label} vanishes at the "
                "specialization point"
            )
        value *= factor
    return 1 / value


def framed_sheaf_fundamental_solution(spec: FramedSheafSpec) -> TruncatedSeries:
    """Fundamental-solution truncation for framed sheaves on the plane.

    The q^d coefficient sums over compositions dbar of d into k non-negative
    parts the product over ordered pairs i != j of
    Delta(theta_i - theta_j, xi1+xi2) Delta(theta_i - theta_j, 0) /
    (Delta(theta_i - theta_j, xi1) Delta(theta_i - theta_j, xi2)) times
    prod_i Delta(theta_i, 0)^{-r} Delta(-theta_i, xi1+xi2)^{-r}, with
    theta . dbar pairings d_i - d_j, d_i, and -d_i.  The sum starts at d = 1.

    Caveat: for framing rank one the fundamental solution is known to need a
    mirror-type coordinate correction in q; no correction is applied here, the
    series is the raw display.
    """
    k, r, trunc = spec.k, spec.framing_rank, spec.truncation
    if spec.symbolic:
        thetas = [MultiPoly.variable(f"theta{i}") for i in range(1, k + 1)]
        xi1 = MultiPoly.variable("xi1")
        xi2 = MultiPoly.variable("xi2")
        zero = MultiPoly.constant(0)
        coeffs: Dict[tuple, object] = {}
        for d in range(1, trunc + 1):
            total = RationalFunction.constant(0)
            for dbar in _compositions(d, k):
                # collect every linear Delta factor up or down, then expand
                # once from small factors (intermediate normalizations of the
                # fully expanded products are what blow up otherwise)
                ups: list = []
                downs: list = []
                for i in range(k):
                    for j in range(k):
                        if i == j:
                            continue
                        diff = thetas[i] - thetas[j]
                        m = dbar[i] - dbar[j]
                        for w, invert in (
                            (xi1 + xi2, False),
                            (zero, False),
                            (xi1, True),
                            (xi2, True),
                        ):
                            num, den = _delta_linear_factors(m, diff, w)
                            if invert:
                                num, den = den, num
                            ups.extend(num)
                            downs.extend(den)
                for i in range(k):
                    for m, theta, w in (
                        (dbar[i], thetas[i], zero),
                        (-dbar[i], -thetas[i], xi1 + xi2),
                    ):
                        num, den = _delta_linear_factors(m, theta, w)
                        ups.extend(den * r)
                        downs.extend(num * r)
                term = RationalFunction(_balanced_product(ups), _balanced_product(downs))
                total = total + term
            coeffs[(d,)] = total
        return TruncatedSeries(("q",), trunc, coeffs)

    point = spec.point
    theta_vals = [point[f"theta{i}"] for i in range(1, k + 1)]
    xi1_v, xi2_v, zeta_v = point["xi1"], point["xi2"], point[ZETA]
    coeffs = {}
    for d in range(1, trunc + 1):
        total = Fraction(0)
        for dbar in _compositions(d, k):
            term = Fraction(1)
            for i in range(k):
                for j in range(k):
                    if i == j:
                        continue
                    diff = theta_vals[i] - theta_vals[j]
                    m = dbar[i] - dbar[j]
                    pair_label = f"Delta_(theta{i+1}-theta{j+1})"
                    term *= _delta_value(m, diff, xi1_v + xi2_v, zeta_v, pair_label)
                    term *= _delta_value(m, diff, Fraction(0), zeta_v, pair_label)
                    for w_v, w_name in ((xi1_v, "xi1"), (xi2_v, "xi2")):
                        value = _delta_value(
                            m, diff, w_v, zeta_v, f"{pair_label}({w_name})"
                        )
                        if value == 0:
                            raise SpecializationError(
                                f"{pair_label}({w_name}) vanishes at the "
                                "specialization point"
                            )
                        term /= value
            for i in range(k):
                for m, theta_v, w_v, label in (
                    (dbar[i], theta_vals[i], Fraction(0), f"Delta_(theta{i+1}, 0)"),
                    (
                        -dbar[i],
                        -theta_vals[i],
                        xi1_v + xi2_v,
                        f"Delta_(-theta{i+1}, xi1+xi2)",
                    ),
                ):
                    value = _delta_value(m, theta_v, w_v, zeta_v, label)
                    if value == 0:
                        raise SpecializationError(
                            f"{label} vanishes at the specialization point; "
                            "its inverse power is undefined"
                        )
                    term *= value ** (-r)
            total += term
        coeffs[(d,)] = RationalFunction.constant(total)
    return TruncatedSeries(("q",), trunc, coeffs)


# -- age and crepancy ---------------------------------------------------------------


def age(order: int, exponents: Iterable[int]) -> Fraction:
    """Rational grading shift (1/r) sum s_j of a twisted sector with
    stabilizer order r and eigenvalue exponents s_j in {0..r-1}."""
    if order < 1:
        raise InputError("the stabilizer order must be positive")
    try:
        exponents = [to_int(s) for s in exponents]
    except (TypeError, ValueError) as exc:
        raise InputError(f"bad exponent: {exc}") from exc
    for s in exponents:
        if s < 0 or s >= order:
            raise DomainError(f"exponent {s} outside 0..{order - 1}")
    return Fraction(sum(exponents), order)


@dataclass(frozen=True)
class CrepancyResult:
    crepant: bool
    weight_sum: int

    def to_json(self) -> dict:
        return {"crepant": self.crepant, "weight_sum": self.weight_sum}


def crepancy_check(weights: Iterable[int]) -> CrepancyResult:
    """A scalar-torus wall-crossing is crepant iff the fixed-point weights sum
    to zero (the variation is then a combination of flops)."""
    try:
        total = sum(to_int(w) for w in weights)
    except (TypeError, ValueError) as exc:
        raise InputError(f"bad weight: {exc}") from exc
    return CrepancyResult(crepant=(total == 0), weight_sum=total)
