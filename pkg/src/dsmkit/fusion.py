"""Evidence combination over the composition lattice and the powerset.

Two families live here:

* generalized mass assignments (focal elements are lattice masks) combined
  with the DSm rule, the unnormalized conjunctive rule in which conflicting
  mass lands on intersections instead of the empty set;
* classical mass assignments (focal elements are atom subsets, packed as
  n-bit integers) combined by conjunctive consensus followed by either
  Dempster normalization or a weighted redistribution of the conflict, of
  which the Yager and Smets rules are the two extreme weight choices.

All rules iterate over focal cross-products only; cores are small in
practice even when the lattice is astronomically large.  Per-focal pooling
uses exactly rounded summation, so combination is commutative bit-for-bit.
"""

import math
from dataclasses import dataclass
from typing import Iterable, NamedTuple

from .errors import (
    FrameMismatchError,
    FullContradictionError,
    MassValidationError,
    WeightValidationError,
)
from .venn import Frame, VennMask, is_isotone, require_isotone, to_bitstring

MASS_TOLERANCE = 1e-9
_CONTRADICTION_EPS = 1e-12


def _check_sum(total: float, what: str, exc=MassValidationError) -> None:
    if abs(total - 1.0) > MASS_TOLERANCE:
        gap = 1.0 - total
        kind = "deficit" if gap > 0 else "excess"
        raise exc(f"{what} sum to {total!r} ({kind} {abs(gap):.6g}); must be 1")


def _drop_zeros(masses: dict, what: str) -> dict:
    cleaned = {}
    for key, mass in masses.items():
        if not isinstance(mass, (int, float)) or isinstance(mass, bool):
            raise MassValidationError(f"{what} {key!r} has non-numeric mass {mass!r}")
        mass = float(mass)
        if math.isnan(mass) or mass < 0.0:
            raise MassValidationError(f"{what} {key!r} has invalid mass {mass!r}")
        if mass > 0.0:
            cleaned[key] = mass
    return cleaned


@dataclass(frozen=True)
class GeneralizedBBA:
    """Masses over lattice elements: m(empty)=0, sum 1, focal keys only."""

    frame: Frame
    masses: dict[VennMask, float]

    def __post_init__(self):
        cleaned = _drop_zeros(self.masses, "focal element")
        for mask in cleaned:
            if not isinstance(mask, VennMask) or mask.frame != self.frame:
                raise FrameMismatchError(f"focal element {mask!r} not on this frame")
            if mask.bits == 0:
                raise MassValidationError("the empty set cannot carry mass")
            if not is_isotone(mask):
                raise MassValidationError(
                    f"focal element {to_bitstring(mask)} is not a lattice element"
                )
        _check_sum(math.fsum(cleaned.values()), "masses")
        object.__setattr__(self, "masses", cleaned)

    def focal(self) -> list[VennMask]:
        """Focal elements in canonical order."""
        return sorted(self.masses, key=lambda m: m.bits)


@dataclass(frozen=True)
class ClassicalBBA:
    """Masses over atom subsets (n-bit keys); closed world forbids the empty set."""

    frame: Frame
    masses: dict[int, float]
    open_world: bool = False

    def __post_init__(self):
        cleaned = _drop_zeros(self.masses, "subset")
        limit = 1 << self.frame.n
        for subset in cleaned:
            if not isinstance(subset, int) or not 0 <= subset < limit:
                raise MassValidationError(
                    f"subset key {subset!r} out of range for n={self.frame.n}"
                )
        if not self.open_world and 0 in cleaned:
            raise MassValidationError(
                "closed-world assignment: the empty set cannot carry mass"
            )
        _check_sum(math.fsum(cleaned.values()), "masses")
        object.__setattr__(self, "masses", cleaned)

    def focal(self) -> list[int]:
        return sorted(self.masses)


@dataclass(frozen=True)
class RedistributionWeights:
    """Conflict-redistribution coefficients per atom subset, empty set included."""

    frame: Frame
    weights: dict[int, float]

    def __post_init__(self):
        limit = 1 << self.frame.n
        cleaned = {}
        for subset, w in self.weights.items():
            if not isinstance(subset, int) or not 0 <= subset < limit:
                raise WeightValidationError(
                    f"weight key {subset!r} out of range for n={self.frame.n}"
                )
            if w < 0.0 or w > 1.0 + MASS_TOLERANCE:
                raise WeightValidationError(f"weight {w!r} outside [0, 1]")
            if w > 0.0:
                cleaned[subset] = float(w)
        _check_sum(math.fsum(cleaned.values()), "weights", WeightValidationError)
        object.__setattr__(self, "weights", cleaned)


class FusionOutcome(NamedTuple):
    result: "ClassicalBBA"
    conflict: float


class BelPl(NamedTuple):
    bel: float
    pl: float


def _same_frame(a, b) -> Frame:
    if a.frame != b.frame:
        raise FrameMismatchError(
            f"cannot combine assignments on different frames"
            f" (n={a.frame.n} vs n={b.frame.n})"
        )
    return a.frame


def dsm_combine(m1: GeneralizedBBA, m2: GeneralizedBBA) -> GeneralizedBBA:
    """Unnormalized conjunctive combination over the lattice.

    m(C) = sum of m1(A) m2(B) over focal pairs with A & B = C, pooled by
    mask equality.  No mass can reach the empty set: nonempty upward-closed
    masks always share the all-atoms region.  Commutative and associative.
    """
    frame = _same_frame(m1, m2)
    pooled: dict[VennMask, list[float]] = {}
    for a, wa in m1.masses.items():
        for b, wb in m2.masses.items():
            c = VennMask(frame, a.bits & b.bits)
            pooled.setdefault(c, []).append(wa * wb)
    return GeneralizedBBA(frame, {c: math.fsum(v) for c, v in pooled.items()})


def dsm_fuse_many(sources: Iterable[GeneralizedBBA]) -> GeneralizedBBA:
    """Fold the DSm rule over one or more sources; order-independent."""
    sources = list(sources)
    if not sources:
        raise ValueError("need at least one mass assignment to fuse")
    acc = sources[0]
    for m in sources[1:]:
        acc = dsm_combine(acc, m)
    return acc


def dsm_bel_pl(m: GeneralizedBBA, a: VennMask) -> BelPl:
    """Belief (mass of focal subsets) and plausibility (mass of intersectors)."""
    if a.frame != m.frame:
        raise FrameMismatchError("target mask is not on the assignment's frame")
    require_isotone(a)
    bel = math.fsum(v for b, v in m.masses.items() if b.bits & a.bits == b.bits)
    pl = math.fsum(v for b, v in m.masses.items() if b.bits & a.bits != 0)
    return BelPl(bel, pl)


def conjunctive_consensus(m1: ClassicalBBA, m2: ClassicalBBA) -> FusionOutcome:
    """Unnormalized cross-product over subset intersections.

    The returned assignment is open-world: whatever mass falls on the empty
    set is kept there and also reported as the degree of conflict.
    """
    frame = _same_frame(m1, m2)
    if m1.open_world or m2.open_world:
        raise MassValidationError("consensus inputs must be closed-world")
    pooled: dict[int, list[float]] = {}
    for a, wa in m1.masses.items():
        for b, wb in m2.masses.items():
            pooled.setdefault(a & b, []).append(wa * wb)
    masses = {s: math.fsum(v) for s, v in pooled.items()}
    conflict = masses.get(0, 0.0)
    return FusionOutcome(ClassicalBBA(frame, masses, open_world=True), conflict)


def dempster_combine(m1: ClassicalBBA, m2: ClassicalBBA) -> FusionOutcome:
    """Consensus normalized by 1 - conflict; undefined under total conflict."""
    consensus, conflict = conjunctive_consensus(m1, m2)
    denom = 1.0 - conflict
    if denom <= _CONTRADICTION_EPS:
        raise FullContradictionError(
            "degree of conflict is 1: the orthogonal sum does not exist"
        )
    masses = {s: v / denom for s, v in consensus.masses.items() if s != 0}
    return FusionOutcome(ClassicalBBA(consensus.frame, masses), conflict)


def weighted_redistribution(
    m1: ClassicalBBA, m2: ClassicalBBA, w: RedistributionWeights
) -> FusionOutcome:
    """Reallocate the conflict mass according to per-subset weights.

    result(empty) = w(empty) * conflict; every other subset receives its
    consensus mass plus w(subset) * conflict.  Sums to 1 with no
    normalization; the outcome is open-world exactly when w(empty) > 0.
    """
    consensus, conflict = conjunctive_consensus(m1, m2)
    if w.frame != consensus.frame:
        raise FrameMismatchError("weights are not on the assignments' frame")
    masses = {s: v for s, v in consensus.masses.items() if s != 0}
    for subset, weight in w.weights.items():
        masses[subset] = masses.get(subset, 0.0) + weight * conflict
    open_world = w.weights.get(0, 0.0) > 0.0
    if not open_world:
        masses.pop(0, None)
    return FusionOutcome(
        ClassicalBBA(consensus.frame, masses, open_world=open_world), conflict
    )


def dempster_weights(consensus: FusionOutcome) -> RedistributionWeights:
    """The weight choice that turns redistribution into Dempster's rule."""
    denom = 1.0 - consensus.conflict
    if denom <= _CONTRADICTION_EPS:
        raise FullContradictionError(
            "degree of conflict is 1: Dempster weights are undefined"
        )
    weights = {
        s: v / denom for s, v in consensus.result.masses.items() if s != 0
    }
    return RedistributionWeights(consensus.result.frame, weights)


def yager_weights(frame: Frame) -> RedistributionWeights:
    """All conflict goes to total ignorance (the full set)."""
    return RedistributionWeights(frame, {(1 << frame.n) - 1: 1.0})


def smets_weights(frame: Frame) -> RedistributionWeights:
    """All conflict stays on the empty set (open-world output)."""
    return RedistributionWeights(frame, {0: 1.0})


def dst_bel_pl(m: ClassicalBBA, a: int) -> BelPl:
    """Classical belief/plausibility of an atom subset."""
    limit = 1 << m.frame.n
    if not isinstance(a, int) or not 0 <= a < limit:
        raise ValueError(f"subset {a!r} out of range for n={m.frame.n}")
    bel = math.fsum(v for b, v in m.masses.items() if b & a == b)
    pl = math.fsum(v for b, v in m.masses.items() if b & a != 0)
    return BelPl(bel, pl)
