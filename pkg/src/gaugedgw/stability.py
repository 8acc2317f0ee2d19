"""Hilbert-Mumford classification and Kirwan-Ness strata for linearized torus
actions on a projective space.

A point of P(V) enters only through its support (the set of weight-space
indices where a coordinate is non-zero): the classification depends on nothing
else.  Stability is decided by exact convex geometry on the weight points
mu_i - theta; unstable verdicts carry an integral destabilizing one-parameter
subgroup chosen deterministically.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from itertools import combinations
from math import gcd
from typing import Iterable, List, Optional, Sequence, Tuple

from . import convex
from .algebra import format_fraction, to_fraction, to_int
from .errors import InputError, ZeroOneParameterSubgroupError


class Stability(Enum):
    UNSTABLE = "unstable"
    SEMISTABLE_NOT_POLYSTABLE = "semistable_not_polystable"
    POLYSTABLE_NOT_STABLE = "polystable_not_stable"
    STABLE = "stable"


@dataclass(frozen=True)
class WeightSystem:
    """A rank-r torus acting on P(V): k integer weights, a rational shift
    theta of the linearization, and a positive-definite metric on coweights."""

    rank: int
    weights: Tuple[Tuple[int, ...], ...]
    theta: Tuple[Fraction, ...]
    inner_product: Tuple[Tuple[Fraction, ...], ...]

    @classmethod
    def create(cls, rank, weights, theta=None, inner_product=None) -> "WeightSystem":
        if rank < 1:
            raise InputError("torus rank must be positive")
        try:
            weights = tuple(tuple(to_int(x) for x in w) for w in weights)
        except (TypeError, ValueError) as exc:
            raise InputError(f"bad weight entry: {exc}") from exc
        if not weights:
            raise InputError("a weight system needs at least one weight")
        if any(len(w) != rank for w in weights):
            raise InputError("every weight must have one entry per torus factor")
        if theta is None:
            theta = (Fraction(0),) * rank
        try:
            theta = tuple(to_fraction(x) for x in theta)
        except (TypeError, ValueError) as exc:
            raise InputError(f"bad theta entry: {exc}") from exc
        if len(theta) != rank:
            raise InputError("theta must have one entry per torus factor")
        if inner_product is None:
            # The default identity metric is symmetric positive-definite by
            # construction; skip the minor checks (they dominate otherwise in
            # exhaustive test families).
            inner_product = tuple(
                tuple(Fraction(int(i == j)) for j in range(rank)) for i in range(rank)
            )
            return cls(rank, weights, theta, inner_product)
        try:
            inner_product = tuple(
                tuple(to_fraction(x) for x in row) for row in inner_product
            )
        except (TypeError, ValueError) as exc:
            raise InputError(f"bad metric entry: {exc}") from exc
        if len(inner_product) != rank or any(len(r) != rank for r in inner_product):
            raise InputError("metric must be a rank x rank matrix")
        for i in range(rank):
            for j in range(i):
                if inner_product[i][j] != inner_product[j][i]:
                    raise InputError("metric must be symmetric")
        for size in range(1, rank + 1):
            minor = [row[:size] for row in inner_product[:size]]
            if _determinant(minor) <= 0:
                raise InputError("metric must be positive-definite")
        return cls(rank, weights, theta, inner_product)

    @property
    def count(self) -> int:
        return len(self.weights)

    def pair(self, weight: Sequence, coweight: Sequence) -> Fraction:
        """Natural pairing of a weight against a coweight (plain dot product)."""
        return sum(Fraction(a) * Fraction(b) for a, b in zip(weight, coweight))

    def metric_dot(self, a: Sequence, b: Sequence) -> Fraction:
        return sum(
            Fraction(a[i]) * self.inner_product[i][j] * Fraction(b[j])
            for i in range(self.rank)
            for j in range(self.rank)
        )

    def coweight_dual(self, coweight: Sequence) -> Tuple[Fraction, ...]:
        """Metric image of a coweight (a weight), g -> g^dual."""
        return tuple(
            sum(self.inner_product[i][j] * Fraction(coweight[j]) for j in range(self.rank))
            for i in range(self.rank)
        )

    def weight_dual(self, weight: Sequence) -> Tuple[Fraction, ...]:
        """Inverse metric image of a weight (a coweight)."""
        inverse = convex.invert_matrix(self.inner_product)
        return tuple(
            sum(inverse[i][j] * Fraction(weight[j]) for j in range(self.rank))
            for i in range(self.rank)
        )


def _determinant(rows) -> Fraction:
    n = len(rows)
    work = [[Fraction(x) for x in row] for row in rows]
    det = Fraction(1)
    for col in range(n):
        pivot = None
        for i in range(col, n):
            if work[i][col] != 0:
                pivot = i
                break
        if pivot is None:
            return Fraction(0)
        if pivot != col:
            work[col], work[pivot] = work[pivot], work[col]
            det = -det
        det *= work[col][col]
        inv = Fraction(1) / work[col][col]
        for i in range(col + 1, n):
            if work[i][col] != 0:
                factor = work[i][col] * inv
                work[i] = [x - factor * y for x, y in zip(work[i], work[col])]
    return det


@dataclass(frozen=True)
class SupportSet:
    """Non-empty set of weight-space indices (1-based) with x_i != 0."""

    indices: frozenset

    @classmethod
    def of(cls, indices: Iterable[int], count: Optional[int] = None) -> "SupportSet":
        try:
            idx = frozenset(to_int(i) for i in indices)
        except (TypeError, ValueError) as exc:
            raise InputError(f"bad support index: {exc}") from exc
        if not idx:
            raise InputError("a support set must be non-empty")
        if any(i < 1 for i in idx):
            raise InputError("support indices are 1-based")
        if count is not None and any(i > count for i in idx):
            raise InputError(f"support index out of range 1..{count}")
        return cls(idx)


def _support_indices(ws: WeightSystem, support) -> List[int]:
    if isinstance(support, SupportSet):
        idx = support.indices
    else:
        idx = SupportSet.of(support).indices
    if any(i > ws.count for i in idx):
        raise InputError(f"support index out of range 1..{ws.count}")
    return sorted(idx)


@dataclass(frozen=True)
class StabilityVerdict:
    status: Stability
    witness: Optional[Tuple[int, ...]] = None

    def to_json(self) -> dict:
        return {
            "status": self.status.value,
            "witness": list(self.witness) if self.witness is not None else None,
        }


def hm_weight(ws: WeightSystem, support, lam: Sequence) -> Fraction:
    """Hilbert-Mumford weight min_i { -mu_i(lambda) : i in support } + theta(lambda)."""
    lam = tuple(to_fraction(x) for x in lam)
    if len(lam) != ws.rank:
        raise InputError("coweight has wrong length")
    if all(x == 0 for x in lam):
        raise ZeroOneParameterSubgroupError("lambda must be a non-zero coweight")
    indices = _support_indices(ws, support)
    nu = min(-ws.pair(ws.weights[i - 1], lam) for i in indices)
    return nu + ws.pair(ws.theta, lam)


def _scaled_points(ws: WeightSystem, indices: List[int]) -> List[tuple]:
    """Integer representatives of mu_i - theta (common positive rescaling)."""
    den = 1
    for x in ws.theta:
        den = den * x.denominator // gcd(den, x.denominator)
    theta_scaled = [int(x * den) for x in ws.theta]
    return [
        tuple(w * den - t for w, t in zip(ws.weights[i - 1], theta_scaled))
        for i in indices
    ]


def _basis_candidates(rank: int) -> List[tuple]:
    out = []
    for i in range(rank):
        e = [0] * rank
        e[i] = 1
        out.append(tuple(e))
        out.append(tuple(-x for x in e))
    return out


def classify(ws: WeightSystem, support) -> StabilityVerdict:
    """Classify a support set: hull membership of theta decides semistability,
    relative interior decides polystability, and a full-dimensional affine
    span of the support weights upgrades polystable to stable."""
    indices = _support_indices(ws, support)
    points = _scaled_points(ws, indices)
    origin = (0,) * ws.rank
    desc = convex.hull_description(points)
    if not desc.contains(origin):
        witness = _select_witness(points, desc, ws.rank)
        return StabilityVerdict(Stability.UNSTABLE, witness)
    if not desc.contains_relative_interior(origin):
        return StabilityVerdict(Stability.SEMISTABLE_NOT_POLYSTABLE)
    if desc.affine_dim < ws.rank:
        return StabilityVerdict(Stability.POLYSTABLE_NOT_STABLE)
    return StabilityVerdict(Stability.STABLE)


def _select_witness(points, desc, rank) -> Tuple[int, ...]:
    """Lexicographically smallest primitive integral separating direction,
    drawn from facet normals, affine-hull normals, and the basis coweights."""
    candidates = set(desc.candidate_normals())
    candidates.update(_basis_candidates(rank))
    best = None
    for lam in candidates:
        margin = min(-convex.dot(p, lam) for p in points)
        if margin > 0 and (best is None or lam < best):
            best = lam
    if best is None:  # pragma: no cover - separation is guaranteed when unstable
        raise AssertionError("no separating direction found for an unstable support")
    return best


@dataclass(frozen=True)
class KNStratum:
    """One Kirwan-Ness stratum: the destabilizing direction lambda, the index
    set cutting its fixed component Z_lambda, and the rule describing which
    supports flow into the stratum."""

    lam: Tuple[Fraction, ...]
    fixed_support: frozenset
    support_pattern: str

    def contains(self, ws: WeightSystem, support) -> bool:
        return optimal_destabilizer(ws, support) == self.lam

    def to_json(self) -> dict:
        return {
            "lambda": [format_fraction(x) for x in self.lam],
            "fixed_support": sorted(self.fixed_support),
            "support_pattern": self.support_pattern,
        }


_PATTERN = (
    "supports whose metric-closest point of hull{(theta - mu_i)^dual : i in s} "
    "equals lambda"
)


def optimal_destabilizer(ws: WeightSystem, support) -> Optional[Tuple[Fraction, ...]]:
    """Metric-closest point of hull{(theta - mu_i)^dual : i in support} to 0,
    or None when the support is semistable (closest point is the origin)."""
    indices = _support_indices(ws, support)
    points = [
        ws.weight_dual(tuple(t - w for t, w in zip(ws.theta, ws.weights[i - 1])))
        for i in indices
    ]
    lam = convex.closest_point_to_origin(points, ws.inner_product)
    if all(x == 0 for x in lam):
        return None
    return tuple(lam)


def kn_strata(ws: WeightSystem) -> List[KNStratum]:
    """Enumerate the Kirwan-Ness strata of the unstable locus.

    Candidates come from the optimal destabilizer of every non-empty support;
    each satisfies the fixed-component condition mu(lambda) = (lambda, lambda)
    on its fixed support by construction of the closest point.  Deduplicated
    by lambda and sorted for determinism.

    Conventions: for a torus the positive Weyl chamber is the whole Cartan
    algebra, so no chamber restriction is applied to lambda.  The sign of the
    fixed-component weight is fixed as (theta - mu_i)(lambda), the unique
    choice under which every unstable support lands in exactly one stratum
    (the coverage invariant in the test suite pins it down).
    """
    seen_point_sets = {}
    lambdas = set()
    all_indices = range(1, ws.count + 1)
    for size in range(1, ws.count + 1):
        for subset in combinations(all_indices, size):
            key = frozenset(ws.weights[i - 1] for i in subset)
            if key in seen_point_sets:
                continue
            lam = optimal_destabilizer(ws, subset)
            seen_point_sets[key] = lam
            if lam is not None:
                lambdas.add(lam)
    strata = []
    for lam in sorted(lambdas):
        norm = ws.metric_dot(lam, lam)
        fixed = frozenset(
            i
            for i in all_indices
            if ws.pair(
                tuple(t - w for t, w in zip(ws.theta, ws.weights[i - 1])), lam
            )
            == norm
        )
        strata.append(KNStratum(lam, fixed, _PATTERN))
    return strata


# -- JSON wire format ---------------------------------------------------------


def weight_system_from_json(doc: dict) -> WeightSystem:
    if not isinstance(doc, dict):
        raise InputError("weight system must be a JSON object")
    try:
        rank = int(doc["rank"])
        weights = doc["weights"]
        theta = doc.get("theta")
        metric = doc.get("metric")
    except (KeyError, TypeError, ValueError) as exc:
        raise InputError(f"bad weight system document: {exc}") from exc
    try:
        theta_vals = None if theta is None else [to_fraction(x) for x in theta]
        metric_vals = (
            None
            if metric is None
            else [[to_fraction(x) for x in row] for row in metric]
        )
        return WeightSystem.create(rank, weights, theta_vals, metric_vals)
    except (TypeError, ValueError) as exc:
        raise InputError(f"bad weight system document: {exc}") from exc


def weight_system_to_json(ws: WeightSystem) -> dict:
    return {
        "rank": ws.rank,
        "weights": [list(w) for w in ws.weights],
        "theta": [format_fraction(x) for x in ws.theta],
        "metric": [[format_fraction(x) for x in row] for row in ws.inner_product],
    }
