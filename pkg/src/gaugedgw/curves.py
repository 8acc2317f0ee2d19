"""Combinatorial types of stable scaled marked curves.

A type is a rooted tree with a scaling label per vertex and labeled markings.
Bubble labels track where the scaling sits: infinite above the transition
level, zero below it, with at most one transition component on any root-to-
leaf path.  The scaling value on a component must match across every node, so
a zero vertex can never hang directly under an infinite one; bubble trees
attached to an infinite root are exactly the affine types (the scaling blows
up at the attachment point).

Types serialize to the bracketed term language (tau for the root, kappa for
transition vertices, bare parentheses for infinite and zero groups).
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from functools import lru_cache
from itertools import product
from typing import Dict, List, Mapping, Optional, Tuple

from .algebra import format_fraction, to_fraction, to_int
from .errors import DomainError, EnumerationBoundError, InputError, InvalidTypeError

PROJECTIVE = "projective"
AFFINE = "affine"

FINITE_ROOT = "finite_root"
INFINITE_ROOT = "infinite_root"
INFINITE = "infinite"
TRANSITION = "transition"
ZERO = "zero"

_BUBBLE_LABELS = (INFINITE, TRANSITION, ZERO)

DEFAULT_ENUMERATION_BOUND = 6

# Scaling continuity across a node: which labels may appear directly below.
_ALLOWED_CHILDREN = {
    FINITE_ROOT: (ZERO,),
    INFINITE_ROOT: (INFINITE, TRANSITION),
    INFINITE: (INFINITE, TRANSITION),
    TRANSITION: (ZERO,),
    ZERO: (ZERO,),
}


@dataclass(frozen=True)
class ScaledType:
    """Combinatorial type: vertex labels, parent links (vertex 0 is the
    root), and marking attachments.  In affine mode marking 0 is the point
    where the scaling blows up and sits on the root."""

    mode: str
    labels: Tuple[str, ...]
    parents: Tuple[Optional[int], ...]
    markings: Tuple[Tuple[int, int], ...]

    @classmethod
    def create(cls, mode, labels, parents, markings) -> "ScaledType":
        try:
            markings = tuple(
                sorted((to_int(m), to_int(v)) for m, v in dict(markings).items())
            )
            parents = tuple(None if p is None else to_int(p) for p in parents)
        except (TypeError, ValueError) as exc:
            raise InputError(f"bad scaled type datum: {exc}") from exc
        return cls(mode, tuple(labels), parents, markings)

    @property
    def marking_map(self) -> Dict[int, int]:
        return dict(self.markings)

    @property
    def n_markings(self) -> int:
        return sum(1 for m, _ in self.markings if m >= 1)

    def children(self, vertex: int) -> List[int]:
        return [i for i, p in enumerate(self.parents) if p == vertex]

    def vertex_markings(self, vertex: int) -> List[int]:
        return sorted(m for m, v in self.markings if v == vertex)

    def special_point_count(self, vertex: int) -> int:
        edges = len(self.children(vertex)) + (0 if self.parents[vertex] is None else 1)
        return edges + len(self.vertex_markings(vertex))

    def transition_vertices(self) -> List[int]:
        return [i for i, lab in enumerate(self.labels) if lab == TRANSITION]


@dataclass(frozen=True)
class Violation:
    """First failed validation clause, as data rather than an exception."""

    clause: str
    vertex: Optional[int]
    detail: str

    def to_json(self) -> dict:
        return {"clause": self.clause, "vertex": self.vertex, "detail": self.detail}


def validate(t: ScaledType) -> Optional[Violation]:
    """Check every defining invariant; None means the type is a valid stable
    scaled curve type.  Clauses are checked in a fixed order and the first
    failure is reported with the offending vertex."""
    if t.mode not in (PROJECTIVE, AFFINE):
        return Violation("structure", None, f"unknown mode {t.mode!r}")
    n_vertices = len(t.labels)
    if len(t.parents) != n_vertices or n_vertices == 0:
        return Violation("structure", None, "labels and parents must align")
    if t.parents[0] is not None:
        return Violation("structure", 0, "vertex 0 must be the parentless root")
    for v in range(1, n_vertices):
        p = t.parents[v]
        if p is None or not (0 <= p < n_vertices) or p == v:
            return Violation("structure", v, "bad parent link")
    for v in range(1, n_vertices):
        seen = {v}
        walk = v
        while t.parents[walk] is not None:
            walk = t.parents[walk]
            if walk in seen:
                return Violation("structure", v, "parent links form a cycle")
            seen.add(walk)
        if walk != 0:
            return Violation("structure", v, "vertex not connected to the root")
    marking_map = {}
    for m, v in t.markings:
        if m in marking_map:
            return Violation("structure", v, f"marking {m} attached twice")
        if not (0 <= v < n_vertices):
            return Violation("structure", None, f"marking {m} on missing vertex {v}")
        marking_map[m] = v
    labels_pos = sorted(m for m in marking_map if m >= 1)
    if labels_pos != list(range(1, len(labels_pos) + 1)):
        return Violation("structure", None, "markings must be labelled 1..n")
    if t.mode == AFFINE:
        if 0 not in marking_map:
            return Violation("structure", None, "affine mode requires marking 0")
    elif 0 in marking_map:
        return Violation("structure", None, "marking 0 is affine-only")

    if t.mode == PROJECTIVE:
        if t.labels[0] not in (FINITE_ROOT, INFINITE_ROOT):
            return Violation("labels", 0, f"bad projective root label {t.labels[0]!r}")
    else:
        if t.labels[0] not in (INFINITE, TRANSITION):
            return Violation(
                "labels",
                0,
                "the scaling must blow up at marking 0, so the affine root is "
                "infinite or a transition component",
            )
    for v in range(1, n_vertices):
        if t.labels[v] not in _BUBBLE_LABELS:
            return Violation("labels", v, f"bad bubble label {t.labels[v]!r}")

    for v in range(1, n_vertices):
        parent_label = t.labels[t.parents[v]]
        if t.labels[v] not in _ALLOWED_CHILDREN[parent_label]:
            return Violation(
                "monotonicity",
                v,
                f"label {t.labels[v]} cannot sit directly below {parent_label}",
            )

    for m, v in t.markings:
        if m == 0:
            if v != 0:
                return Violation("marking", v, "marking 0 must sit on the root")
            continue
        if t.labels[v] not in (TRANSITION, ZERO, FINITE_ROOT):
            return Violation(
                "marking",
                v,
                f"marking {m} sits on a {t.labels[v]} vertex where the scaling "
                "is infinite",
            )

    for v in range(n_vertices):
        label = t.labels[v]
        if t.mode == PROJECTIVE and v == 0:
            continue  # the projective root maps isomorphically to C
        special = t.special_point_count(v)
        if label in (ZERO, INFINITE) and special < 3:
            return Violation(
                "stability", v, f"{label} vertex has {special} special points (< 3)"
            )
        if label == TRANSITION and special < 2:
            return Violation(
                "stability", v, f"transition vertex has {special} special points (< 2)"
            )
    return None


def _require_valid(t: ScaledType) -> None:
    violation = validate(t)
    if violation is not None:
        raise InvalidTypeError(
            f"invalid scaled type: {violation.clause} at vertex {violation.vertex}: "
            f"{violation.detail}"
        )


# -- enumeration ---------------------------------------------------------------

# Internal tree representation during enumeration: (label, markings, children),
# children sorted by canonical key.  Distinct sibling subtrees always carry
# disjoint non-empty marking sets, so the key order is strict.


def _node(label: str, markings: frozenset, children: tuple) -> tuple:
    return (label, markings, tuple(sorted(children, key=_node_key)))


def _node_key(node) -> tuple:
    label, markings, children = node
    return (label, tuple(sorted(markings)), tuple(_node_key(c) for c in children))


def _subsets(items: frozenset):
    items = sorted(items)
    for mask in range(1 << len(items)):
        yield frozenset(items[i] for i in range(len(items)) if mask >> i & 1)


def _partitions(items: frozenset):
    """Unordered partitions into non-empty blocks (one empty partition for
    the empty set)."""
    items = sorted(items)

    def rec(remaining):
        if not remaining:
            yield ()
            return
        first = remaining[0]
        rest = remaining[1:]
        for mask in range(1 << len(rest)):
            block = frozenset(
                [first] + [rest[i] for i in range(len(rest)) if mask >> i & 1]
            )
            others = [rest[i] for i in range(len(rest)) if not (mask >> i & 1)]
            for more in rec(others):
                yield (block,) + more

    yield from rec(items)


@lru_cache(maxsize=None)
def _zero_trees(markings: frozenset) -> tuple:
    """All stable all-zero bubble trees consuming exactly the given markings;
    the top vertex hangs from a node (one upward special point)."""
    out = []
    for own in _subsets(markings):
        rest = markings - own
        for blocks in _partitions(rest):
            if 1 + len(own) + len(blocks) < 3:
                continue
            for choice in product(*[_zero_trees(b) for b in blocks]):
                out.append(_node(ZERO, own, choice))
    return tuple(out)


@lru_cache(maxsize=None)
def _affine_trees(markings: frozenset) -> tuple:
    """All stable affine bubble trees: the top vertex is where the scaling
    blows up (the attachment node / marking 0), so it is infinite or a
    transition component."""
    out = []
    for own in _subsets(markings):
        rest = markings - own
        for blocks in _partitions(rest):
            if 1 + len(own) + len(blocks) < 2:
                continue
            for choice in product(*[_zero_trees(b) for b in blocks]):
                out.append(_node(TRANSITION, own, choice))
    for blocks in _partitions(markings):
        if len(blocks) < 2:
            continue
        for choice in product(*[_affine_trees(b) for b in blocks]):
            out.append(_node(INFINITE, frozenset(), choice))
    return tuple(out)


def _to_scaled_type(mode: str, root_label: str, root_markings, children) -> ScaledType:
    labels: List[str] = []
    parents: List[Optional[int]] = []
    markings: Dict[int, int] = {}

    def visit(node, parent: Optional[int]) -> int:
        label, own, kids = node
        index = len(labels)
        labels.append(label)
        parents.append(parent)
        for m in own:
            markings[m] = index
        for kid in kids:
            visit(kid, index)
        return index

    visit(_node(root_label, frozenset(root_markings), tuple(children)), None)
    if mode == AFFINE:
        markings[0] = 0
    return ScaledType.create(mode, labels, parents, markings)


def enumerate_types(
    n: int, mode: str, bound: int = DEFAULT_ENUMERATION_BOUND
) -> List[ScaledType]:
    """All isomorphism classes of stable scaled types with n markings, in a
    deterministic order (descending stratum dimension, then term text)."""
    if mode not in (PROJECTIVE, AFFINE):
        raise InputError(f"unknown mode {mode!r}")
    if n < 0:
        raise InputError("marking count must be non-negative")
    if n > bound:
        raise EnumerationBoundError(
            f"marking count {n} exceeds the enumeration bound {bound}"
        )
    markings = frozenset(range(1, n + 1))
    types: List[ScaledType] = []
    if mode == PROJECTIVE:
        for own in _subsets(markings):
            rest = markings - own
            for blocks in _partitions(rest):
                for choice in product(*[_zero_trees(b) for b in blocks]):
                    types.append(_to_scaled_type(mode, FINITE_ROOT, own, choice))
        for blocks in _partitions(markings):
            for choice in product(*[_affine_trees(b) for b in blocks]):
                types.append(_to_scaled_type(mode, INFINITE_ROOT, (), choice))
    else:
        if n == 0:
            raise DomainError(
                "no stable affine scaled curve exists without markings "
                "(the component of marking 0 cannot reach its stability bound)"
            )
        for tree in _affine_trees(markings):
            label, own, kids = tree
            types.append(_to_scaled_type(mode, label, own, kids))
    types.sort(key=lambda t: (-stratum_dimension(t), term(t)))
    return types


# -- numerical invariants -------------------------------------------------------


def stratum_dimension(t: ScaledType) -> int:
    """Moduli dimension of the stratum: markings and nodes on the root move
    along C (plus one scaling parameter when the root scaling is finite),
    bubble moduli contribute special points minus the automorphism dimension
    of the bubble."""
    _require_valid(t)
    total = 0
    for v, label in enumerate(t.labels):
        n_v = t.special_point_count(v)
        if label == FINITE_ROOT:
            total += n_v + 1
        elif label == INFINITE_ROOT:
            total += n_v
        elif label == TRANSITION:
            total += n_v - 2
        else:
            total += n_v - 3
    return total


class RhoImage(Enum):
    """Image of a stratum under the forgetful map to the scaling line P^1.

    ZERO is used for delta = 0 slice descriptors (see divisor_pairs); no
    enumerated combinatorial type pins the scaling, so types themselves only
    ever map to INFINITY or DOMINANT.  GENERIC_FINITE is reserved for
    completeness of the interface.
    """

    ZERO = "zero"
    GENERIC_FINITE = "generic_finite"
    INFINITY = "infinity"
    DOMINANT = "dominant"


def rho_image(t: ScaledType) -> RhoImage:
    _require_valid(t)
    if t.mode != PROJECTIVE:
        raise DomainError("the forgetful scaling map applies to projective types")
    if t.labels[0] == INFINITE_ROOT:
        return RhoImage.INFINITY
    return RhoImage.DOMINANT


# -- balanced deformation parameters --------------------------------------------


@dataclass(frozen=True)
class EdgeParams:
    """Non-zero deformation parameter per finite edge, keyed by child vertex."""

    values: Tuple[Tuple[int, Fraction], ...]

    @classmethod
    def create(cls, values: Mapping[int, object]) -> "EdgeParams":
        table = []
        for child, gamma in sorted(values.items()):
            try:
                gamma = to_fraction(gamma)
            except (TypeError, ValueError) as exc:
                raise InputError(f"bad deformation parameter: {exc}") from exc
            if gamma == 0:
                raise InputError(f"deformation parameter at vertex {child} is zero")
            table.append((int(child), gamma))
        return cls(tuple(table))

    @property
    def table(self) -> Dict[int, Fraction]:
        return dict(self.values)


def check_balanced(t: ScaledType, params: EdgeParams) -> bool:
    """True iff the signed product of deformation parameters along every path
    between transition vertices is 1 (signs by orientation toward the root).

    Equivalent formulation used here: the product along the root path is the
    same for every transition vertex; trivially true with fewer than two.
    """
    _require_valid(t)
    table = params.table
    for v in range(1, len(t.labels)):
        if v not in table:
            raise InputError(f"missing deformation parameter for vertex {v}")
    transitions = t.transition_vertices()
    if len(transitions) < 2:
        return True
    root_products = []
    for v in transitions:
        prod = Fraction(1)
        walk = v
        while t.parents[walk] is not None:
            prod *= table[walk]
            walk = t.parents[walk]
        root_products.append(prod)
    return all(p == root_products[0] for p in root_products)


def affine_two_marking_coordinate(z1, z2, delta) -> Fraction:
    """Coordinate delta * (z2 - z1) identifying the two-marking affine moduli
    with the projective line."""
    z1, z2, delta = to_fraction(z1), to_fraction(z2), to_fraction(delta)
    if z1 == z2 and delta != 0:
        raise DomainError(
            "coincident markings with finite non-zero scaling do not define an "
            "open-stratum point"
        )
    return delta * (z2 - z1)


# -- divisor pairings -------------------------------------------------------------


@dataclass(frozen=True)
class DivisorPairing:
    """The two linearly equivalent groups of codimension-one boundary data."""

    side_a: Tuple[ScaledType, ...]
    side_b: Tuple[ScaledType, ...]
    side_a_note: str
    side_b_note: str

    def to_json(self) -> dict:
        return {
            "side_a": {"note": self.side_a_note, "types": [term(t) for t in self.side_a]},
            "side_b": {"note": self.side_b_note, "types": [term(t) for t in self.side_b]},
        }


def divisor_pairs(
    n: int, mode: str, bound: int = DEFAULT_ENUMERATION_BOUND
) -> DivisorPairing:
    """Split the codimension-one boundary into its two linearly equivalent
    groups.

    Projective: the scaling-zero slice of the open family against the
    codimension-one infinite-scaling types.  Affine: the single-transition
    types (all markings absorbed into zero bubbles under one transition
    component) against the multi-transition types.
    """
    types = enumerate_types(n, mode, bound)
    if mode == PROJECTIVE:
        open_dim = n + 1
        side_a = tuple(
            t
            for t in types
            if t.labels[0] == FINITE_ROOT and stratum_dimension(t) == open_dim
        )
        side_b = tuple(
            t
            for t in types
            if t.labels[0] == INFINITE_ROOT and stratum_dimension(t) == open_dim - 1
        )
        return DivisorPairing(
            side_a,
            side_b,
            "scaling -> 0 slice of each full-dimensional finite-scaling family",
            "codimension-one infinite-scaling types",
        )
    open_dim = n - 1
    boundary = [t for t in types if stratum_dimension(t) == open_dim - 1]
    side_a = tuple(t for t in boundary if len(t.transition_vertices()) == 1)
    side_b = tuple(t for t in boundary if len(t.transition_vertices()) >= 2)
    return DivisorPairing(
        side_a,
        side_b,
        "one transition component (markings merged into zero bubbles)",
        "several transition components (markings split)",
    )


# -- serialization ------------------------------------------------------------------


def term(t: ScaledType) -> str:
    """Bracketed term form mirroring parenthesized expressions: tau(...) for
    the root, kappa(...) for transition vertices, bare parentheses for
    infinite and zero groups.  The markingless infinite root renders as
    tau(inf-sign) to stay distinguishable from the bare finite root."""
    _require_valid(t)

    def items(v: int) -> List[str]:
        parts = [f"z{m}" for m in t.vertex_markings(v) if m >= 1]
        parts.extend(sorted(render(c) for c in t.children(v)))
        return parts

    def render(v: int) -> str:
        body = " ".join(items(v))
        label = t.labels[v]
        if label == TRANSITION:
            return f"κ({body})"
        return f"({body})"

    if t.mode == AFFINE:
        if t.labels[0] == TRANSITION:
            return f"κ({' '.join(items(0))})"
        return " ".join(items(0))
    body = " ".join(items(0))
    if t.labels[0] == INFINITE_ROOT and not t.children(0):
        return "τ(∞)"
    return f"τ({body})"


def canonical_encoding(t: ScaledType):
    """Nested-tuple encoding invariant under marking-preserving isomorphism."""

    def encode(v: int):
        return (
            t.labels[v],
            tuple(t.vertex_markings(v)),
            tuple(sorted(encode(c) for c in t.children(v))),
        )

    return (t.mode, encode(0))


def isomorphic(a: ScaledType, b: ScaledType) -> bool:
    return canonical_encoding(a) == canonical_encoding(b)


def scaled_type_to_json(t: ScaledType) -> dict:
    return {
        "mode": t.mode,
        "labels": list(t.labels),
        "parents": list(t.parents),
        "markings": {str(m): v for m, v in t.markings},
    }


def scaled_type_from_json(doc: dict) -> ScaledType:
    if not isinstance(doc, dict):
        raise InputError("scaled type must be a JSON object")
    try:
        mode = doc["mode"]
        labels = list(doc["labels"])
        parents = [None if p is None else to_int(p) for p in doc["parents"]]
        markings = {to_int(m): to_int(v) for m, v in dict(doc["markings"]).items()}
    except (KeyError, TypeError, ValueError) as exc:
        raise InputError(f"bad scaled type document: {exc}") from exc
    return ScaledType.create(mode, labels, parents, markings)


def edge_params_from_json(doc) -> EdgeParams:
    if not isinstance(doc, dict):
        raise InputError("edge parameters must be a JSON object")
    try:
        return EdgeParams.create({to_int(k): to_fraction(v) for k, v in doc.items()})
    except (TypeError, ValueError) as exc:
        raise InputError(f"bad edge parameters: {exc}") from exc


def format_edge_params(params: EdgeParams) -> dict:
    return {str(k): format_fraction(v) for k, v in params.values}
