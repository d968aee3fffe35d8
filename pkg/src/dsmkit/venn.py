"""Frames, Venn-region codes, the region basis order, and mask algebra.

A frame of n atoms t1..tn splits the Venn diagram into 2^n - 1 disjoint
regions.  A region is coded by the set of atoms covering it, packed into an
integer: bit (i-1) of the code is set iff atom i covers the region.  Region
<23> (covered by t2 and t3 only) therefore has code 0b110 = 6.

Every union/intersection composition of the atoms is a union of whole
regions, hence a bit-mask over the 2^n - 1 regions.  Masks arising from such
compositions are exactly the upward-closed (isotone) region sets: if a mask
contains a region, it contains every region covered by more atoms.

Bit layout: a mask stores region r at bit position (2^n - 1) - r, so the
leftmost character of the rendered bit-string is region <1> and the plain
integer value of ``bits`` is the canonical ordering key used throughout.
"""

from dataclasses import dataclass
from typing import Iterator, Literal, NamedTuple

from .errors import (
    FrameMismatchError,
    LabelRenderingError,
    NotIsotoneError,
    RegionRangeError,
)

MAX_FRAME_ATOMS = 16


@dataclass(frozen=True, slots=True)
class Frame:
    """A frame of discernment with ``n`` atoms t1..tn."""

    n: int

    def __post_init__(self):
        if not isinstance(self.n, int) or not 0 <= self.n <= MAX_FRAME_ATOMS:
            raise RegionRangeError(
                f"frame size must be an integer in 0..{MAX_FRAME_ATOMS}, got {self.n!r}"
            )

    @property
    def num_regions(self) -> int:
        """Number of disjoint Venn regions, 2^n - 1 (0 for the empty frame)."""
        return (1 << self.n) - 1

    @property
    def atoms(self) -> range:
        return range(1, self.n + 1)


class VennMask(NamedTuple):
    """An element of the composition lattice as a bit-mask over Venn regions."""

    frame: Frame
    bits: int

    def __and__(self, other):  # type: ignore[override]
        return combine_masks(self, other, "intersect")

    def __or__(self, other):  # type: ignore[override]
        return combine_masks(self, other, "union")

    def contains_region(self, r: int) -> bool:
        _check_region(r, self.frame)
        return bool(self.bits >> (self.frame.num_regions - r) & 1)

    def regions(self) -> Iterator[int]:
        """Region codes present in this mask, ascending."""
        R = self.frame.num_regions
        for r in range(1, R + 1):
            if self.bits >> (R - r) & 1:
                yield r


class MaskRelations(NamedTuple):
    is_subset: bool
    intersects: bool


def _check_region(r: int, frame: Frame) -> None:
    if not 1 <= r <= frame.num_regions:
        raise RegionRangeError(
            f"region {r} out of range 1..{frame.num_regions} for n={frame.n}"
        )


def _check_same_frame(a: VennMask, b: VennMask) -> None:
    if a.frame != b.frame:
        raise FrameMismatchError(
            f"masks belong to different frames (n={a.frame.n} vs n={b.frame.n})"
        )


def region_label(r: int, frame: Frame) -> str:
    """Render a region code as its digit label, e.g. 6 -> "<23>" for n=3.

    Single-digit rendering only: frames with n >= 10 would need multi-symbol
    atom names inside the label and are refused.
    """
    _check_region(r, frame)
    if frame.n >= 10:
        raise LabelRenderingError(
            "region labels use one digit per atom; not renderable for n >= 10"
        )
    digits = "".join(str(i) for i in frame.atoms if r >> (i - 1) & 1)
    return f"<{digits}>"


def basis_order(frame: Frame) -> list[int]:
    """The canonical region order, built recursively.

    Start from [<1>]; at each step append <n> and then every earlier label
    with <n> adjoined.  The result provably coincides with region codes in
    plain ascending order 1..2^n-1, which is asserted here.
    """
    order: list[int] = []
    for k in range(1, frame.n + 1):
        atom_bit = 1 << (k - 1)
        order = order + [atom_bit] + [r | atom_bit for r in order]
    assert order == list(range(1, frame.num_regions + 1))
    return order


def empty_mask(frame: Frame) -> VennMask:
    return VennMask(frame, 0)


def full_mask(frame: Frame) -> VennMask:
    """The union of all atoms: every region set."""
    return VennMask(frame, (1 << frame.num_regions) - 1)


def atom_mask(i: int, frame: Frame) -> VennMask:
    """The mask of atom i: all regions whose code includes atom i."""
    if not 1 <= i <= frame.n:
        raise RegionRangeError(f"atom {i} out of range 1..{frame.n}")
    R = frame.num_regions
    bits = 0
    for r in range(1, R + 1):
        if r >> (i - 1) & 1:
            bits |= 1 << (R - r)
    return VennMask(frame, bits)


def combine_masks(
    a: VennMask, b: VennMask, op: Literal["intersect", "union"]
) -> VennMask:
    """Set intersection/union of two elements, as region-set AND/OR."""
    _check_same_frame(a, b)
    if op == "intersect":
        return VennMask(a.frame, a.bits & b.bits)
    if op == "union":
        return VennMask(a.frame, a.bits | b.bits)
    raise ValueError(f"op must be 'intersect' or 'union', got {op!r}")


def is_isotone(a: VennMask) -> bool:
    """True iff the region set is upward-closed.

    Checked on single-atom extensions only: region r present and r+atom
    absent is the only way closure can fail, by transitivity of inclusion.
    """
    R = a.frame.num_regions
    for r in range(1, R + 1):
        if not a.bits >> (R - r) & 1:
            continue
        for i in a.frame.atoms:
            s = r | 1 << (i - 1)
            if s != r and not a.bits >> (R - s) & 1:
                return False
    return True


def mask_relations(a: VennMask, b: VennMask) -> MaskRelations:
    """Subset and overlap tests: a <= b and a, b sharing at least one region."""
    _check_same_frame(a, b)
    return MaskRelations(
        is_subset=a.bits & b.bits == a.bits,
        intersects=a.bits & b.bits != 0,
    )


def require_isotone(a: VennMask) -> VennMask:
    if not is_isotone(a):
        raise NotIsotoneError(
            f"mask {to_bitstring(a)} is not upward-closed over its regions"
        )
    return a


def to_bitstring(a: VennMask) -> str:
    """'0'/'1' text, leftmost character = region <1>. Empty for n=0."""
    R = a.frame.num_regions
    return format(a.bits, f"0{R}b") if R else ""


def to_hex(a: VennMask) -> str:
    """Big-endian hex over the same bit order, ceil((2^n-1)/4) digits."""
    R = a.frame.num_regions
    return format(a.bits, f"0{(R + 3) // 4}x") if R else ""


def from_bitstring(s: str, frame: Frame) -> VennMask:
    R = frame.num_regions
    if len(s) != R:
        raise ValueError(f"bit-string must have length {R} for n={frame.n}, got {len(s)}")
    if s.strip("01") != "":
        raise ValueError(f"bit-string may contain only '0'/'1': {s!r}")
    return VennMask(frame, int(s, 2) if s else 0)
