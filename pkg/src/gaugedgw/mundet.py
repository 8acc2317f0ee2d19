"""Ramanathan weights for filtration data, Mundet stability of toric gauged
maps, and quot-compactification dimension counts.

For a torus the Mundet semistable locus of a gauged map (P, u) is cut by the
shifted hull condition hull{mu_i - d(P)^dual : u_i != 0} containing theta, so
classification reduces to the point classification with the linearization
shift absorbed into theta.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Iterable, Optional, Sequence, Tuple, Union

from .algebra import to_fraction, to_int
from .errors import (
    EmptyModuliError,
    InputError,
    NonDominantError,
    ZeroOneParameterSubgroupError,
)
from .stability import (
    Stability,
    SupportSet,
    WeightSystem,
    classify,
    weight_system_from_json,
)


@dataclass(frozen=True)
class FiltrationData:
    """Associated-graded data of a flag of sub-bundles: per-block rank and
    degree, ordered sub-bundle first."""

    total_rank: int
    total_degree: int
    blocks: Tuple[Tuple[int, int], ...]

    @classmethod
    def create(cls, blocks: Iterable[Tuple[int, int]]) -> "FiltrationData":
        try:
            blocks = tuple((to_int(r), to_int(d)) for r, d in blocks)
        except (TypeError, ValueError) as exc:
            raise InputError(f"bad filtration block: {exc}") from exc
        if not blocks:
            raise InputError("a filtration needs at least one block")
        if any(r < 1 for r, _ in blocks):
            raise InputError("block ranks must be positive")
        return cls(
            total_rank=sum(r for r, _ in blocks),
            total_degree=sum(d for _, d in blocks),
            blocks=blocks,
        )


def ramanathan_weight(filtration: FiltrationData, lam: Sequence) -> Fraction:
    """Weight of a dominant direction against a filtration: sum of lambda_i
    times block degree, sub-first ordering.

    The sign is pinned by the rank-2 degree-0 criterion: a positive-degree
    sub-bundle with lambda=(1,-1) must give a positive (destabilizing) weight.
    Constant lambda is rejected: it is central and carries no information.
    """
    lam = tuple(to_fraction(x) for x in lam)
    if len(lam) != len(filtration.blocks):
        raise InputError("lambda needs one entry per block")
    if any(a < b for a, b in zip(lam, lam[1:])):
        raise NonDominantError("lambda must be non-increasing across blocks")
    if len(set(lam)) == 1:
        raise NonDominantError("constant lambda is central and carries no weight")
    return sum(l * d for l, (_, d) in zip(lam, filtration.blocks))


def mundet_total_weight(bundle_weight, target_weight) -> Fraction:
    """Additive combination of user-supplied bundle and target weights."""
    return to_fraction(bundle_weight) + to_fraction(target_weight)


class InfiniteWeight:
    """Marker for the +infinity Mundet weight of an empty section support."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "MUNDET_WEIGHT_INFINITE"


MUNDET_WEIGHT_INFINITE = InfiniteWeight()

MundetWeight = Union[Fraction, InfiniteWeight]


@dataclass(frozen=True)
class GaugedMapData:
    """Discrete invariants of a toric gauged map: weight system, bundle degree
    d(P) in the coweight lattice, indices of non-vanishing sections, and the
    section degree d(u).

    An empty support models a base-point degeneration with globally vanishing
    sections (a generalized map); such data is treated as unstable for every
    one-parameter subgroup.  Whether an extended semistability notion admits
    some base-point configurations is left open here: base points of strictly
    positive local rank are not modelled at all."""

    ws: WeightSystem
    bundle_degree: Tuple[int, ...]
    section_support: frozenset
    section_degree: int

    @classmethod
    def create(cls, ws, bundle_degree, section_support, section_degree=0):
        try:
            bundle_degree = tuple(to_int(x) for x in bundle_degree)
            support = frozenset(to_int(i) for i in section_support)
            section_degree = to_int(section_degree)
        except (TypeError, ValueError) as exc:
            raise InputError(f"bad gauged map datum: {exc}") from exc
        if len(bundle_degree) != ws.rank:
            raise InputError("bundle degree must be a coweight of the torus rank")
        if any(i < 1 or i > ws.count for i in support):
            raise InputError(f"support index out of range 1..{ws.count}")
        return cls(ws, bundle_degree, support, section_degree)


class MundetStatus(Enum):
    UNSTABLE = "unstable"
    SEMISTABLE = "semistable"
    POLYSTABLE = "polystable"
    STABLE = "stable"


_STATUS_FROM_POINT = {
    Stability.UNSTABLE: MundetStatus.UNSTABLE,
    Stability.SEMISTABLE_NOT_POLYSTABLE: MundetStatus.SEMISTABLE,
    Stability.POLYSTABLE_NOT_STABLE: MundetStatus.POLYSTABLE,
    Stability.STABLE: MundetStatus.STABLE,
}


@dataclass(frozen=True)
class MundetVerdict:
    status: MundetStatus
    witness: Optional[Tuple[int, ...]] = None

    def to_json(self) -> dict:
        return {
            "status": self.status.value,
            "witness": list(self.witness) if self.witness is not None else None,
        }


def mundet_weight_toric(g: GaugedMapData, lam: Sequence) -> MundetWeight:
    """min_i { (d(P), lambda) - mu_i(lambda) + theta(lambda) : u_i != 0 }.

    The bundle pairing uses the metric; an empty support returns the infinite
    marker (every lambda destabilizes a generalized map)."""
    lam = tuple(to_fraction(x) for x in lam)
    if len(lam) != g.ws.rank:
        raise InputError("coweight has wrong length")
    if all(x == 0 for x in lam):
        raise ZeroOneParameterSubgroupError("lambda must be a non-zero coweight")
    if not g.section_support:
        return MUNDET_WEIGHT_INFINITE
    bundle_term = g.ws.metric_dot(g.bundle_degree, lam)
    theta_term = g.ws.pair(g.ws.theta, lam)
    return min(
        bundle_term - g.ws.pair(g.ws.weights[i - 1], lam) + theta_term
        for i in sorted(g.section_support)
    )


def _empty_support_witness(rank: int) -> Tuple[int, ...]:
    e = [0] * rank
    e[0] = 1
    return tuple(e)


def mundet_classify(g: GaugedMapData) -> MundetVerdict:
    """Classify a toric gauged map by the shifted hull criterion.

    Equivalent formulation used here: classify the support against the weight
    system with theta replaced by theta + d(P)^dual, which shifts the hull of
    the support weights by exactly -d(P)^dual.  The polystable -> stable
    refinement (relative interior plus full-dimensional span) is carried over
    from the point classification by convention; for a torus the associated
    graded of any destabilizing direction keeps the same bundle."""
    if not g.section_support:
        return MundetVerdict(
            MundetStatus.UNSTABLE, _empty_support_witness(g.ws.rank)
        )
    shifted_theta = tuple(
        t + d for t, d in zip(g.ws.theta, g.ws.coweight_dual(g.bundle_degree))
    )
    shifted = WeightSystem.create(
        g.ws.rank, g.ws.weights, shifted_theta, g.ws.inner_product
    )
    verdict = classify(shifted, SupportSet.of(g.section_support))
    return MundetVerdict(_STATUS_FROM_POINT[verdict.status], verdict.witness)


def quot_moduli_dimension(k: int, bundle_degree: int, section_degree: int) -> int:
    """Projective dimension k(d(P) + d(u) + 1) - 1 of the quot
    compactification for the scalar torus on C^k over a genus-0 base."""
    if k < 1:
        raise InputError("k must be a positive integer")
    total = bundle_degree + section_degree
    if total < 0:
        raise EmptyModuliError(
            f"no sections in degree d(P)+d(u) = {total} < 0: empty moduli"
        )
    return k * (total + 1) - 1


def section_space_dimension(
    ws: WeightSystem, bundle_degree: Sequence[int], section_degree: int
) -> int:
    """Projective dimension of the full section space W = sum_i H^0 for a
    general torus, extrapolated from the genus-0 count h^0 = e + 1 applied to
    each weight-space factor.  Requires every factor degree to be >= 0; this
    helper extrapolates beyond the scalar case and is exposed for exploration,
    not backed by a worked instance."""
    bundle_degree = tuple(int(x) for x in bundle_degree)
    if len(bundle_degree) != ws.rank:
        raise InputError("bundle degree must be a coweight of the torus rank")
    total = 0
    for i, weight in enumerate(ws.weights, start=1):
        e = int(ws.pair(weight, bundle_degree)) + section_degree
        if e < 0:
            raise EmptyModuliError(f"weight space {i} has negative degree {e}")
        total += e + 1
    return total - 1


# -- JSON wire format ---------------------------------------------------------


def gauged_map_from_json(doc: dict) -> GaugedMapData:
    if not isinstance(doc, dict):
        raise InputError("gauged map must be a JSON object")
    try:
        ws = weight_system_from_json(doc["weight_system"])
        bundle_degree = doc["bundle_degree"]
        support = doc.get("support", [])
        section_degree = doc.get("section_degree", 0)
    except KeyError as exc:
        raise InputError(f"gauged map document missing {exc}") from exc
    try:
        return GaugedMapData.create(ws, bundle_degree, support, section_degree)
    except (TypeError, ValueError) as exc:
        raise InputError(f"bad gauged map document: {exc}") from exc
